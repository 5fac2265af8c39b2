import json

import pytest

from core.error_handler import ErrorCategory, OrbitComputationError
from core.permutations import parse_permutation
from core.polynomial import parse_polynomial
from fixtures.fixture_manager import FixtureManager, get_fixture_manager


def test_shipped_tables(golden):
    assert golden.table_names() == ["o3_reference_k", "o4_cohomology", "o4_reference_k",
                                    "sp6_cohomology", "sp6_ktheory"]
    assert len(golden.table_polynomials("sp6_cohomology")) == 15
    assert get_fixture_manager() is golden


def test_expansions_and_specialization(golden):
    assert golden.expansion("o3_closed_double").basis == "double-schubert"
    assert golden.specialization("sp4_closed_specialized") == {3: parse_polynomial("-y2"),
                                                               4: parse_polynomial("-y1")}
    assert golden.specialization("sp4_closed_double") == {}


def test_demazure_failures(golden):
    failures = golden.demazure_failures("o4_reference_k")
    assert (parse_permutation("(1,2)", 4), parse_permutation("id", 4), 1) in failures
    assert golden.demazure_failures("o3_reference_k") == []


def test_compare_table_reports_differences(golden):
    computed = golden.table_polynomials("o4_cohomology")
    assert golden.compare_table("o4_cohomology", computed) == []
    computed[parse_permutation("(1,2)", 4)] = parse_polynomial("x1")
    del computed[parse_permutation("id", 4)]
    problems = golden.compare_table("o4_cohomology", computed)
    assert len(problems) == 2
    assert any("missing" in problem for problem in problems)


@pytest.mark.parametrize("method,name", [("table", "o9_cohomology"), ("expansion", "nothing")])
def test_unknown_names(golden, method, name):
    with pytest.raises(OrbitComputationError) as info:
        getattr(golden, method)(name)
    assert info.value.category == ErrorCategory.INPUT


def test_missing_file(tmp_path):
    with pytest.raises(OrbitComputationError) as info:
        FixtureManager(tmp_path / "absent.json").load()
    assert info.value.category == ErrorCategory.CONFIGURATION


def test_malformed_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"tables": {"x": {"pair": "o"}}}), encoding="utf-8")
    with pytest.raises(OrbitComputationError) as info:
        FixtureManager(path).load()
    assert info.value.category == ErrorCategory.CONFIGURATION
