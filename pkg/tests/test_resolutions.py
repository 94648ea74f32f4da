"""Koszul quotient and Taylor complex computations, and their agreement."""

import pytest

from moment_angle import (
    Abelian,
    SimplicialComplex,
    boundary_simplex,
    cross_check,
    koszul_basis_size,
    koszul_bigraded,
    mask_of,
    polygon,
    taylor_bigraded,
    taylor_monomial,
    taylor_product,
    two_points,
    vertices_of,
)
from moment_angle.errors import CapExceeded

Z = Abelian(1, ())


class TestKoszul:
    def test_two_points_basis_and_groups(self):
        pair = two_points()
        assert koszul_basis_size(pair) == 8
        table = koszul_bigraded(pair)
        assert table.entries == {(0, 0): Z, (1, 2): Z}
        assert {p: g.rank for p, g in table.total().items()} == {0: 1, 3: 1}

    def test_quadrilateral(self):
        table = koszul_bigraded(polygon(4))
        assert table.entries == {(0, 0): Z, (1, 2): Abelian(2, ()), (2, 4): Z}

    def test_p28_basis_count_matches_formula(self, p28):
        # sum over faces of 2^(m - |face|), empty face included
        f = p28.f_vector()
        expected = 2**8 + sum(
            count * 2 ** (8 - size) for size, count in enumerate(f, start=1)
        )
        assert expected == 4384
        assert koszul_basis_size(p28) == 4384

    def test_p28_aggregates_to_the_betti_table(self, p28):
        totals = {p: g.rank for p, g in koszul_bigraded(p28).total().items()}
        assert totals == {0: 1, 3: 2, 5: 8, 6: 18, 7: 8, 9: 2, 12: 1}


class TestTaylor:
    def test_quadrilateral_strata(self):
        table = taylor_bigraded(polygon(4))
        strata = {(r, vertices_of(s)): g.rank for (r, s), g in table.strata.items()}
        assert strata == {
            (0, ()): 1,
            (1, (1, 3)): 1,
            (1, (2, 4)): 1,
            (2, (1, 2, 3, 4)): 1,
        }

    def test_boundary_simplex_single_generator(self):
        for k in (2, 3, 4):
            table = taylor_bigraded(boundary_simplex(k))
            full = (1 << (k + 1)) - 1
            assert set(table.strata) == {(0, 0), (1, full)}

    def test_p28_aggregates_to_the_betti_table(self, p28):
        totals = {p: g.rank for p, g in taylor_bigraded(p28).bidegrees().total().items()}
        assert totals == {0: 1, 3: 2, 5: 8, 6: 18, 7: 8, 9: 2, 12: 1}

    def test_generator_cap(self):
        # the complete graph's flag complex has one missing face per triple
        skeleton = SimplicialComplex(
            8, [(a, b) for a in range(1, 9) for b in range(a + 1, 9)]
        )
        assert len(skeleton.missing_faces()) == 56
        with pytest.raises(CapExceeded):
            taylor_bigraded(skeleton)


class TestTaylorProduct:
    def test_quadrilateral_disjoint_supports(self):
        quad = polygon(4)
        missing = quad.missing_faces()
        u = taylor_monomial((0,), missing)
        v = taylor_monomial((1,), missing)
        sign, product = taylor_product(u, v, missing)
        assert sign in (1, -1)
        assert product.indices == (0, 1)
        assert product.support == mask_of((1, 2, 3, 4))

    def test_square_is_zero(self):
        missing = polygon(4).missing_faces()
        u = taylor_monomial((0,), missing)
        assert taylor_product(u, u, missing) == (0, None)

    def test_reordering_sign(self):
        missing = polygon(4).missing_faces()
        u = taylor_monomial((0,), missing)
        v = taylor_monomial((1,), missing)
        s1, p1 = taylor_product(u, v, missing)
        s2, p2 = taylor_product(v, u, missing)
        assert p1 == p2 and s1 == -s2

    def test_p28_detects_the_pair_product(self, p28):
        missing = p28.missing_faces()
        i56 = missing.index(mask_of((5, 6)))
        i78 = missing.index(mask_of((7, 8)))
        sign, product = taylor_product(
            taylor_monomial((i56,), missing), taylor_monomial((i78,), missing), missing
        )
        assert sign != 0
        assert product.support == mask_of((5, 6, 7, 8))

    def test_overlapping_supports_vanish(self, p28):
        missing = p28.missing_faces()
        a = taylor_monomial((2,), missing)  # (1, 2, 3)
        b = taylor_monomial((4,), missing)  # (1, 3, 4)
        assert taylor_product(a, b, missing) == (0, None)


class TestCrossCheck:
    def test_single_vertex(self):
        report = cross_check(SimplicialComplex(1, [(1,)]))
        assert report.ok
        assert report.bidegrees == {(0, 0): Z}

    def test_quadrilateral(self):
        assert cross_check(polygon(4)).ok

    def test_p28(self, p28):
        report = cross_check(p28)
        assert report.ok
        assert report.strata_checked == 40

    def test_corpus_sample(self, small_corpus):
        for complex_ in small_corpus:
            assert cross_check(complex_).ok

    def test_disagreement_names_the_first_bad_bidegree(self):
        # feed a table with one corrupted rank through the public parameter
        from moment_angle import bigraded_betti
        from moment_angle.errors import MethodDisagreement

        quad = polygon(4)
        table = bigraded_betti(quad)
        key = (mask_of((1, 3)), 0)
        table.entries[key] = Abelian(2, ())
        with pytest.raises(MethodDisagreement) as info:
            cross_check(quad, table=table)
        assert info.value.bidegree == (1, 2)  # |J| - d - 1 = 1, |J| = 2
