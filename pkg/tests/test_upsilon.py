import pytest

from core.error_handler import ErrorCategory, OrbitComputationError
from core.permutations import EdgeStyle, Permutation, parse_permutation
from core.polynomial import Polynomial, parse_polynomial
from orbits.pairs import PairKind, SymmetricPair, Theory
from orbits.upsilon import (
    check_stability,
    closed_orbit_factors,
    closed_orbit_upsilon,
    closed_orbit_upsilon_k,
    compute_all,
    edge_operator,
    embed_fpf,
    embed_orthogonal,
    evaluate_path,
    k_to_cohomology,
    orbit_values,
    strip_closed_orbit_factors,
)
from orbits.weak_order import weak_order_of


class TestClosedOrbit:
    def test_orthogonal_products(self):
        assert closed_orbit_upsilon(SymmetricPair.orthogonal(2)) == 2 * Polynomial.x(1)
        assert closed_orbit_upsilon(SymmetricPair.orthogonal(3)) == parse_polynomial("2*x1*(x1+x2)")
        assert closed_orbit_upsilon(SymmetricPair.orthogonal(4)) == parse_polynomial("4*x1*x2*(x1+x2)*(x1+x3)")

    def test_symplectic_products(self):
        assert closed_orbit_upsilon(SymmetricPair.symplectic(2)) == Polynomial.one()
        assert closed_orbit_upsilon(SymmetricPair.symplectic(4)) == parse_polynomial("(x1+x2)*(x1+x3)")
        assert len(closed_orbit_factors(SymmetricPair.symplectic(6))) == 6

    def test_k_product(self):
        assert closed_orbit_upsilon_k(SymmetricPair.symplectic(4)) == parse_polynomial("(1-x1*x2)*(1-x1*x3)")
        assert closed_orbit_upsilon_k(SymmetricPair.orthogonal(3)) == parse_polynomial("(1-x1^2)*(1-x1*x2)")


class TestGoldenTables:
    @pytest.mark.parametrize("name", ["o4_cohomology", "sp6_cohomology", "sp6_ktheory"])
    def test_matches_golden(self, golden, name):
        table = golden.table(name)
        pair = SymmetricPair.parse(table.pair, table.size)
        assert golden.compare_table(name, orbit_values(pair, Theory(table.theory))) == []

    def test_orthogonal_k_theory_is_rejected(self):
        with pytest.raises(OrbitComputationError) as info:
            orbit_values(SymmetricPair.orthogonal(4), Theory.KTHEORY)
        assert info.value.category == ErrorCategory.UNSUPPORTED
        assert "D_1(1-x1^2)" in str(info.value)

    def test_closed_rows_of_reference_k_tables(self, golden):
        for name in ("o3_reference_k", "o4_reference_k"):
            size = golden.table(name).size
            rows = golden.table_polynomials(name)
            assert rows[Permutation.longest(size)] == closed_orbit_upsilon_k(SymmetricPair.orthogonal(size))


class TestProperties:
    @pytest.mark.parametrize("pair", [SymmetricPair.orthogonal(n) for n in (2, 3, 4, 5)]
                             + [SymmetricPair.symplectic(n) for n in (4, 6)], ids=lambda p: p.label)
    def test_degree_and_positivity(self, pair):
        graph = weak_order_of(pair)
        values = orbit_values(pair, Theory.COHOMOLOGY)
        assert values[graph.dense_orbit] == Polynomial.one()
        for pi, value in values.items():
            assert value.is_homogeneous()
            assert value.degree() == graph.orbit_rank(pi)
            assert value.is_nonnegative_integral()

    def test_dashed_edge_halves(self):
        operator = edge_operator(Theory.COHOMOLOGY, EdgeStyle.DASHED)
        assert operator(1, 2 * Polynomial.x(1)) == Polynomial.one()

    def test_every_path_agrees(self):
        pair = SymmetricPair.orthogonal(4)
        graph = weak_order_of(pair)
        values = orbit_values(pair, Theory.COHOMOLOGY)
        top = values[graph.closed_orbit]
        for pi in graph.nodes:
            for path in graph.saturated_edge_paths(graph.closed_orbit, pi):
                assert evaluate_path(path, top, Theory.COHOMOLOGY) == values[pi]

    def test_k_theory_bridges_to_cohomology(self):
        pair = SymmetricPair.symplectic(6)
        k_values = orbit_values(pair, Theory.KTHEORY)
        c_values = orbit_values(pair, Theory.COHOMOLOGY)
        for pi, value in k_values.items():
            assert k_to_cohomology(value) == c_values[pi]

    def test_k_to_cohomology(self):
        assert k_to_cohomology(parse_polynomial("(1-x1^2)*(1-x1*x2)")) == parse_polynomial("2*x1*(x1+x2)")
        with pytest.raises(OrbitComputationError):
            k_to_cohomology(Polynomial.zero())


class TestComputeAll:
    def test_table_order(self, o4_table):
        assert len(o4_table) == 10
        labels = [record.label for record in o4_table]
        assert labels[0] == "(1,4)(2,3)"
        assert labels[-1] == "id"
        lengths = [record.length for record in o4_table]
        assert lengths == sorted(lengths, reverse=True)

    def test_schubert_expansions_are_positive(self, o4_table, sp6_table):
        for table in (o4_table, sp6_table):
            for record in table:
                assert record.schubert_expansion.is_nonnegative_integral()
                assert record.schubert_expansion.reconstruct() == record.upsilon

    def test_closed_orbit_row(self, o4_table):
        row = o4_table[Permutation.longest(4)].to_row()
        assert row.involution == "(1,4)(2,3)"
        assert row.one_line == "4321"
        assert row.orbit_rank == 4
        assert row.upsilon_k is None
        assert row.grothendieck_expansion is None

    def test_k_table_rows(self, sp6_k_table):
        assert len(sp6_k_table) == 15
        record = sp6_k_table[parse_permutation("(1,3)(2,4)(5,6)", 6)]
        assert record.upsilon_k == parse_polynomial("1 - x1*x2")
        assert record.upsilon == parse_polynomial("x1 + x2")
        assert record.grothendieck_expansion.reconstruct() == record.upsilon_k

    def test_report(self, sp6_k_table):
        report = sp6_k_table.to_report()
        assert report.pair == "sp"
        assert report.size == 6
        assert report.theory == "k"
        assert report.rows[-1].upsilon_k == "1"

    def test_unknown_orbit(self, o4_table):
        with pytest.raises(OrbitComputationError):
            o4_table[Permutation.longest(3)]

    def test_without_expansions(self):
        table = compute_all(SymmetricPair.orthogonal(3), expand=False)
        assert all(record.schubert_expansion is None for record in table)


class TestStability:
    @pytest.mark.parametrize("kind,n,N,theory", [
        (PairKind.ORTHOGONAL, 3, 4, Theory.COHOMOLOGY),
        (PairKind.ORTHOGONAL, 3, 5, Theory.COHOMOLOGY),
        (PairKind.SYMPLECTIC, 4, 6, Theory.COHOMOLOGY),
        (PairKind.SYMPLECTIC, 4, 6, Theory.KTHEORY),
    ])
    def test_embeddings_preserve_representatives(self, kind, n, N, theory):
        summary = check_stability(kind, n, N, theory)
        assert summary["checked"] == len(orbit_values(SymmetricPair(kind, n), theory))

    def test_orthogonal_k_stability_is_rejected(self):
        with pytest.raises(OrbitComputationError):
            check_stability(PairKind.ORTHOGONAL, 3, 4, Theory.KTHEORY)

    def test_bad_order(self):
        with pytest.raises(OrbitComputationError):
            check_stability(PairKind.SYMPLECTIC, 6, 4)

    def test_embeddings(self):
        assert embed_orthogonal(parse_permutation("(1,2)", 3), 5) == parse_permutation("(1,2)", 5)
        assert embed_fpf(parse_permutation("(1,2)", 2), 6) == parse_permutation("(1,2)(3,4)(5,6)", 6)
        with pytest.raises(OrbitComputationError):
            embed_orthogonal(parse_permutation("231"), 4)
        with pytest.raises(OrbitComputationError):
            embed_fpf(parse_permutation("(1,2)", 3), 4)

    @pytest.mark.parametrize("kind,size,steps", [
        (PairKind.SYMPLECTIC, 4, 2),
        (PairKind.SYMPLECTIC, 6, 4),
        (PairKind.ORTHOGONAL, 4, 2),
        (PairKind.ORTHOGONAL, 5, 2),
    ])
    def test_factor_stripping(self, kind, size, steps):
        result = strip_closed_orbit_factors(kind, size)
        assert len(result) == steps
        assert all(step["removed"].startswith("x") for step in result)

    def test_factor_stripping_order(self):
        removed = [step["removed"] for step in strip_closed_orbit_factors(PairKind.SYMPLECTIC, 4)]
        assert removed == ["x1 + x3", "x1 + x2"]
