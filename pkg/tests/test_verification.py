import pytest

from config.settings import AppConfig
from core.error_handler import ErrorCategory, OrbitComputationError, create_verification_error
from orbits.pairs import PairKind, SymmetricPair
from orbits.verification import (
    SuiteOptions,
    SuiteResult,
    VerifyTarget,
    random_polynomial,
    random_span_polynomial,
    run_suite,
)


def quick(**kwargs) -> SuiteOptions:
    kwargs.setdefault("trials", 5)
    return SuiteOptions(**kwargs)


class TestSuiteResult:
    def test_guard_records_verification_failures(self):
        result = SuiteResult(VerifyTarget.KIRILLOV)

        def fail():
            raise create_verification_error("identity broke", {"w": "213"})

        assert result.guard("label", fail) is None
        assert not result.passed
        assert result.checks == 1
        report = result.to_report(0.0)
        assert report.failures == ["label: identity broke"]
        assert report.details["counterexample"] == {"w": "213"}

    def test_guard_reraises_other_errors(self):
        result = SuiteResult(VerifyTarget.KIRILLOV)
        with pytest.raises(OrbitComputationError):
            result.guard("label", lambda: SymmetricPair.symplectic(3))

    def test_add_check(self):
        result = SuiteResult(VerifyTarget.POSITIVITY)
        assert result.add_check(True)
        assert not result.add_check(False, "bad")
        assert result.checks == 2
        assert result.failures == ["bad"]


class TestSuiteOptions:
    def test_defaults(self):
        options = SuiteOptions()
        assert options.trials == AppConfig.RANDOM_TRIALS
        assert options.seed == AppConfig.RANDOM_SEED

    def test_size_limit(self):
        with pytest.raises(OrbitComputationError) as info:
            SuiteOptions(sizes=[AppConfig.MAX_AMBIENT_SIZE + 1])
        assert info.value.category == ErrorCategory.INPUT

    def test_pairs_follow_kind(self):
        options = SuiteOptions(kind=PairKind.SYMPLECTIC, sizes=[4])
        assert [pair.label for pair in options.pairs([3], [6])] == [SymmetricPair.symplectic(4).label]
        both = SuiteOptions().pairs([3], [6])
        assert [pair.kind for pair in both] == [PairKind.ORTHOGONAL, PairKind.SYMPLECTIC]

    def test_rng_is_seeded(self):
        options = SuiteOptions(seed=7)
        assert random_polynomial(options.rng(), 3, 3) == random_polynomial(options.rng(), 3, 3)


class TestSuites:
    @pytest.mark.parametrize("target", [
        VerifyTarget.KIRILLOV,
        VerifyTarget.K_TO_C,
        VerifyTarget.DEMAZURE_FAILURE,
        VerifyTarget.OPERATOR_IDENTITIES,
        VerifyTarget.QUOTIENT_SANITY,
    ], ids=lambda target: target.value)
    def test_passes(self, target):
        report = run_suite(target, quick())
        assert report.passed, report.failures
        assert report.checks > 0
        assert report.target == target.value

    def test_path_independence_small(self):
        report = run_suite(VerifyTarget.PATH_INDEPENDENCE, quick(kind=PairKind.ORTHOGONAL, sizes=[3, 4]))
        assert report.passed, report.failures
        assert report.details["paths_to_(3,4)"] >= 2

    def test_positivity_small(self):
        report = run_suite(VerifyTarget.POSITIVITY, quick(kind=PairKind.SYMPLECTIC, sizes=[4, 6]))
        assert report.passed, report.failures
        assert report.details["sp6_orbits"] == 15

    def test_stability_small(self):
        report = run_suite(VerifyTarget.STABILITY, quick(kind=PairKind.SYMPLECTIC, sizes=[4, 6]))
        assert report.passed, report.failures

    def test_localization_small(self):
        report = run_suite(VerifyTarget.LOCALIZATION, quick(kind=PairKind.SYMPLECTIC, sizes=[4]))
        assert report.passed, report.failures
        assert report.details["separated_orbits"] == 15

    def test_demazure_failure_lists_edges(self):
        report = run_suite(VerifyTarget.DEMAZURE_FAILURE, quick())
        assert report.details["o4_reference_k_failing_edges"]

    def test_deterministic(self):
        first = run_suite(VerifyTarget.OPERATOR_IDENTITIES, quick(seed=11))
        second = run_suite(VerifyTarget.OPERATOR_IDENTITIES, quick(seed=11))
        assert first.checks == second.checks
        assert first.details == second.details


def test_random_span_polynomial_stays_in_span(rng):
    for _ in range(10):
        f = random_span_polynomial(rng, 4)
        for monomial, _ in f.items():
            assert all(e <= 4 - i for i, e in enumerate(monomial.x, start=1))
