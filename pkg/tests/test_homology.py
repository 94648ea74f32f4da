"""Reduced (co)homology, cocycle bases, and the sphere candidate checks."""

import pytest

from moment_angle import (
    EMPTY,
    Abelian,
    SimplicialComplex,
    boundary_simplex,
    mask_of,
    polygon,
    pseudo_sphere_check,
    reduced_cohomology,
    reduced_cohomology_basis,
    reduced_homology,
    truncated_simplex,
    two_points,
)
from moment_angle.errors import NotACocycle, NotPure
from moment_angle.homology import merge_torsion

Z = Abelian(1, ())

# the three shapes a noncontractible 4-vertex full subcomplex can take:
# two missing edges, two overlapping missing triangles, or one of each
FIGURE_COMPLEXES = {
    "two-missing-edges": SimplicialComplex(4, [(1, 2), (2, 3), (3, 4), (1, 4)]),
    "two-missing-triangles": SimplicialComplex(4, [(1, 2, 4), (1, 3, 4), (2, 3)]),
    "mixed": SimplicialComplex(4, [(2, 3, 4), (1, 3), (1, 4)]),
}

RP2 = SimplicialComplex(
    6,
    [(1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
     (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6)],
)


def nonzero(groups):
    return {d: g for d, g in groups.items() if not g.is_zero}


class TestReducedHomology:
    def test_empty_complex(self):
        assert nonzero(reduced_homology(EMPTY)) == {-1: Z}

    def test_circle_shapes(self):
        for name, complex_ in FIGURE_COMPLEXES.items():
            assert nonzero(reduced_homology(complex_)) == {1: Z}, name

    def test_p28_is_a_homology_three_sphere(self, p28):
        assert nonzero(reduced_homology(p28)) == {3: Z}

    def test_spheres(self):
        for k in range(1, 6):
            assert nonzero(reduced_homology(boundary_simplex(k))) == {k - 1: Z}

    def test_cone_is_acyclic(self):
        cone = polygon(5).cone(6)
        assert nonzero(reduced_homology(cone)) == {}

    def test_projective_plane_torsion(self):
        assert nonzero(reduced_homology(RP2)) == {1: Abelian(0, (2,))}
        assert nonzero(reduced_cohomology(RP2)) == {2: Abelian(0, (2,))}

    def test_universal_coefficients_shift(self):
        hom = reduced_homology(RP2)
        coh = reduced_cohomology(RP2)
        for d in hom:
            assert coh[d].rank == hom[d].rank
            assert coh[d].torsion == hom.get(d - 1, Abelian(0, ())).torsion


class TestMergeTorsion:
    def test_coprime_merge(self):
        assert merge_torsion([(2,), (3,)]) == (6,)

    def test_same_prime_stays_split(self):
        assert merge_torsion([(2,), (2,)]) == (2, 2)

    def test_chain_order(self):
        assert merge_torsion([(2,), (4,), (3,)]) == (2, 12)

    def test_empty(self):
        assert merge_torsion([]) == ()


class TestCohomologyBasis:
    def test_two_points_degree_zero(self):
        basis = reduced_cohomology_basis(two_points())
        assert basis.group(0) == Z
        reps = basis.representatives(0)
        assert len(reps) == 1
        # a generator evaluates to +-1 against the difference of the points
        pairing = reps[0][0] - reps[0][1]
        assert abs(pairing) == 1
        # normalization: first nonzero coordinate positive
        first = next(x for x in reps[0] if x)
        assert first > 0

    def test_quadrilateral_degree_one(self):
        quad = polygon(4)
        basis = reduced_cohomology_basis(quad)
        assert basis.group(1) == Z
        rep = basis.representatives(1)[0]
        assert sum(1 for x in rep if x) == 1 and abs(next(x for x in rep if x)) == 1

    def test_sphere_top_degree(self):
        for n in range(1, 5):
            basis = reduced_cohomology_basis(boundary_simplex(n + 1))
            assert basis.group(n) == Z
            assert len(basis.representatives(n)) == 1

    def test_express_basis_vector_is_unit(self):
        basis = reduced_cohomology_basis(polygon(4))
        rep = basis.representatives(1)[0]
        assert basis.express(rep, 1).free == (1,)

    def test_express_coboundary_is_zero(self):
        quad = polygon(4)
        basis = reduced_cohomology_basis(quad)
        delta = basis.cc.coboundary_matrix(0)
        for col in range(4):
            cob = [row[col] for row in delta]
            expr = basis.express(cob, 1)
            assert expr.is_zero

    def test_adjacent_edge_sum_is_twice_a_generator(self):
        # pairing against the fundamental cycle forces the coefficient 2
        quad = polygon(4)
        basis = reduced_cohomology_basis(quad)
        faces = basis.faces(1)
        vec = [0] * len(faces)
        vec[faces.index(mask_of((1, 2)))] = 1
        vec[faces.index(mask_of((2, 3)))] = 1
        assert basis.express(vec, 1).free in ((2,), (-2,))

    def test_single_edge_duals_are_cohomologous(self):
        quad = polygon(4)
        basis = reduced_cohomology_basis(quad)
        faces = basis.faces(1)
        coords = set()
        for edge in [(1, 2), (2, 3), (3, 4)]:
            vec = [0] * len(faces)
            vec[faces.index(mask_of(edge))] = 1
            coords.add(abs(basis.express(vec, 1).free[0]))
        assert coords == {1}

    def test_not_a_cocycle(self):
        basis = reduced_cohomology_basis(polygon(4))
        with pytest.raises(NotACocycle):
            basis.express([1, 0, 0, 0], 0)

    def test_torsion_expression(self):
        # any single top face dual generates H^2 = Z/2: it evaluates to 1
        # against the mod-2 fundamental cycle
        basis = reduced_cohomology_basis(RP2)
        assert basis.group(2) == Abelian(0, (2,))
        faces = basis.faces(2)
        for index in range(len(faces)):
            vec = [0] * len(faces)
            vec[index] = 1
            expr = basis.express(vec, 2)
            assert expr.free == ()
            assert expr.torsion == (1,)

    def test_mixed_free_and_torsion_in_one_degree(self):
        # disjoint union of the projective plane and a 2-sphere:
        # reduced H^2 = Z + Z/2 inside a single degree
        union = SimplicialComplex(
            10,
            [(1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
             (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
             (7, 8, 9), (7, 8, 10), (7, 9, 10), (8, 9, 10)],
        )
        basis = reduced_cohomology_basis(union)
        assert basis.group(2) == Abelian(1, (2,))
        faces = basis.faces(2)
        projective = [0] * len(faces)
        projective[faces.index(mask_of((1, 2, 5)))] = 1
        sphere = [0] * len(faces)
        sphere[faces.index(mask_of((7, 8, 9)))] = 1
        expr_p = basis.express(projective, 2)
        expr_s = basis.express(sphere, 2)
        assert expr_p.free == (0,) and expr_p.torsion == (1,)
        assert abs(expr_s.free[0]) == 1 and expr_s.torsion == (0,)
        # linearity, and torsion arithmetic modulo 2
        combined = [a + b for a, b in zip(projective, sphere)]
        expr_c = basis.express(combined, 2)
        assert expr_c.free == expr_s.free and expr_c.torsion == (1,)
        doubled = [2 * a for a in projective]
        assert basis.express(doubled, 2).is_zero


class TestSphereCheck:
    def test_p28_passes(self, p28):
        check = pseudo_sphere_check(p28)
        assert check.passed
        assert check.euler_characteristic == 0
        assert check.dim == 3

    def test_boundary_simplices_pass(self):
        for k in range(1, 8):
            assert pseudo_sphere_check(boundary_simplex(k)).passed

    def test_solid_simplex_fails(self):
        solid = SimplicialComplex(4, [(1, 2, 3, 4)])
        check = pseudo_sphere_check(solid)
        assert not check.passed
        assert not check.ridge_degrees_ok

    def test_mixed_dimensions_not_pure(self):
        with pytest.raises(NotPure):
            pseudo_sphere_check(SimplicialComplex(4, [(1, 2, 3), (3, 4)]))

    def test_projective_plane_fails_on_homology(self):
        check = pseudo_sphere_check(RP2)
        assert check.ridge_degrees_ok
        assert not check.homology_ok
        assert not check.passed

    def test_stellar_subdivision_preserves_verdict(self):
        for k, l in [(2, 2), (3, 1), (3, 2), (4, 1)]:
            assert pseudo_sphere_check(truncated_simplex(k, l)).passed
        # and a failing verdict stays failing: subdividing the projective
        # plane keeps its homotopy type
        subdivided = RP2.stellar_subdivide_facet((1, 2, 5), 7)
        assert not pseudo_sphere_check(subdivided).passed
        assert not pseudo_sphere_check(subdivided).homology_ok
