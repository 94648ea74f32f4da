"""Cup products: the golden relations of the 8-vertex sphere and ring APIs."""

import pytest

from moment_angle import (
    HochsterClass,
    cross_polytope,
    functoriality_check,
    mask_of,
    poincare_pairing_report,
    polygon,
    product_span_rank,
    ring_presentation,
    star_product,
    triple_product_rank,
    vertices_of,
)
from moment_angle.errors import DegreeMismatch


@pytest.fixture(scope="module")
def p28_ring(p28):
    return ring_presentation(p28)


def single_term(presentation, g, h):
    terms = dict(presentation.product(g.gid, h.gid))
    assert len(terms) <= 1
    return terms


class TestStarProduct:
    def test_quadrilateral_diagonals_generate_the_top(self):
        quad = polygon(4)
        presentation = ring_presentation(quad)
        c1 = presentation.find((1, 3), 0).cls
        c2 = presentation.find((2, 4), 0).cls
        product = star_product(c1, c2, quad)
        assert not product.is_zero
        assert product.subset == mask_of((1, 2, 3, 4))
        assert product.degree == 1
        coeffs = presentation.express_class(product)
        assert [abs(c) for _, c in coeffs] == [1]

    def test_overlap_gives_zero(self, p28, p28_ring):
        a1 = p28_ring.find((5, 6), 0).cls
        overlapping = p28_ring.find((5, 6, 7, 8), 1).cls
        assert star_product(a1, overlapping, p28).is_zero

    def test_unit_class_acts_as_identity(self, p28, p28_ring):
        unit = HochsterClass(0, -1, {0: 1})
        for g in p28_ring.generators[:5]:
            assert star_product(unit, g.cls, p28) == g.cls
            assert star_product(g.cls, unit, p28) == g.cls

    def test_degree_mismatch_rejected(self):
        with pytest.raises(DegreeMismatch):
            HochsterClass(mask_of((1, 2, 3)), 0, {mask_of((1, 2)): 1})
        with pytest.raises(DegreeMismatch):
            HochsterClass(mask_of((1, 2)), 0, {mask_of((3,)): 1})


class TestP28Relations:
    """The product structure pinning the three-sphere-product summand."""

    def test_pair_product_hits_the_four_cycle_class(self, p28, p28_ring):
        a1 = p28_ring.find((5, 6), 0)
        a2 = p28_ring.find((7, 8), 0)
        target = p28_ring.find((5, 6, 7, 8), 1)
        terms = single_term(p28_ring, a1, a2)
        assert terms in ({target.gid: 1}, {target.gid: -1})

    def test_complementary_pairings_are_unimodular_units(self, p28_ring):
        fid = p28_ring.fundamental_id
        full = (1 << 8) - 1
        for g in p28_ring.generators:
            p = g.total_degree
            if p in (0, 12):
                continue
            partner = p28_ring.find(full & ~g.subset, 3 - g.degree - 1)
            terms = single_term(p28_ring, g, partner)
            assert terms in ({fid: 1}, {fid: -1}), vertices_of(g.subset)

    def test_degree_nine_products(self, p28_ring):
        a1 = p28_ring.find((5, 6), 0)
        a2 = p28_ring.find((7, 8), 0)
        alpha0 = p28_ring.find((1, 2, 3, 4), 1)
        lam1 = p28_ring.find((1, 2, 3, 4, 7, 8), 2)
        lam2 = p28_ring.find((1, 2, 3, 4, 5, 6), 2)
        assert single_term(p28_ring, a2, alpha0) in ({lam1.gid: 1}, {lam1.gid: -1})
        assert single_term(p28_ring, a1, alpha0) in ({lam2.gid: 1}, {lam2.gid: -1})

    def test_triple_product_is_the_fundamental_class(self, p28, p28_ring):
        gids = [
            p28_ring.find((5, 6), 0).gid,
            p28_ring.find((7, 8), 0).gid,
            p28_ring.find((1, 2, 3, 4), 1).gid,
        ]
        product = p28_ring.product_class(gids)
        coeff = p28_ring.coefficient_on(product, p28_ring.fundamental_id)
        assert abs(coeff) == 1

    def test_two_vertex_classes_kill_other_middle_classes(self, p28_ring):
        # products of a degree-3 class with any non-complementary middle
        # class vanish; the whole interesting column is the two above
        a_gens = [p28_ring.find((5, 6), 0), p28_ring.find((7, 8), 0)]
        for a in a_gens:
            for g in p28_ring.degree_generators(6):
                expected_nonzero = (
                    g.subset == mask_of((1, 2, 3, 4)) and not (a.subset & g.subset)
                )
                terms = dict(p28_ring.product(a.gid, g.gid))
                assert bool(terms) == expected_nonzero

    def test_fundamental_class_identified(self, p28_ring):
        top = p28_ring.generators[p28_ring.fundamental_id]
        assert top.subset == (1 << 8) - 1
        assert top.degree == 3


class TestRanks:
    def test_triple_rank_p28(self, p28_ring):
        assert triple_product_rank(p28_ring, 12) == 1

    def test_triple_rank_quadrilateral(self):
        presentation = ring_presentation(polygon(4))
        assert triple_product_rank(presentation, 6) == 0

    def test_triple_rank_octahedron(self):
        presentation = ring_presentation(cross_polytope(2))
        assert triple_product_rank(presentation, 9) == 1

    def test_pair_rank_interior_degrees(self, p28_ring):
        assert product_span_rank(p28_ring, 2, 6) == 1
        assert product_span_rank(p28_ring, 2, 9) == 2
        assert product_span_rank(p28_ring, 2, 7) == 0
        assert product_span_rank(p28_ring, 2, 12) == 1
        assert product_span_rank(p28_ring, 4, 12) == 0


class TestPairing:
    def test_p28_unimodular_everywhere(self, p28_ring):
        report = poincare_pairing_report(p28_ring)
        assert report.ok and report.top == 12

    def test_quadrilateral(self):
        assert poincare_pairing_report(ring_presentation(polygon(4))).ok

    def test_pentagon_and_hexagon(self):
        for m in (5, 6):
            assert poincare_pairing_report(ring_presentation(polygon(m))).ok


class TestFunctoriality:
    def test_four_cycle_inside_p28(self, p28):
        report = functoriality_check(p28, (5, 6, 7, 8))
        assert report.ok and report.pairs_checked == 9

    def test_identity_inclusion(self, p28):
        assert functoriality_check(p28, tuple(range(1, 9))).ok

    def test_single_facet_has_no_classes(self, p28):
        report = functoriality_check(p28, (1, 2, 4, 5))
        assert report.ok and report.pairs_checked == 0

    def test_subset_out_of_range_rejected(self, p28):
        from moment_angle.errors import NotASubcomplex

        with pytest.raises(NotASubcomplex):
            functoriality_check(p28, (7, 8, 9))
