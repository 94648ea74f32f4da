"""Build simplicial complexes and inspect their combinatorics.

Every complex is a vertex count plus an antichain of facets; faces,
missing faces (minimal non-faces) and full subcomplexes are derived views.
"""

from moment_angle import (
    boundary_simplex,
    construct_p28_8,
    cross_polytope,
    polygon,
    pseudo_sphere_check,
    truncated_simplex,
    two_points,
    vertices_of,
    write_cplx,
)

# the square: four vertices, four edges, two missing diagonals
quad = polygon(4)
print("quadrilateral f-vector:", quad.f_vector())
print("missing faces:", [vertices_of(f) for f in quad.missing_faces()])

# joins multiply facets: three two-point complexes give the octahedron
octa = two_points().join(two_points()).join(two_points())
print("\noctahedron f-vector:", octa.f_vector())
print("same as the builder:", octa.f_vector() == cross_polytope(2).f_vector())

# stellar subdivisions of a simplex boundary: the dual of cutting vertices
# off a simple polytope; each step adds one vertex
for l in range(4):
    member = truncated_simplex(2, l)
    print(f"truncated simplex (k=2, l={l}): m={member.m}, facets={len(member.facets)}")

# the main character: an 8-vertex triangulated 3-sphere built in stages,
# self-checked against its hard-coded facet list
sphere = construct_p28_8()
print("\n8-vertex 3-sphere:")
print("  f-vector:", sphere.f_vector())
print("  missing faces:")
for f in sphere.missing_faces():
    print("   ", vertices_of(f))

# necessary sphere conditions: closed pseudomanifold, connected, Euler
# characteristic, and the homology of a sphere
check = pseudo_sphere_check(sphere)
print("  sphere checks pass:", check.passed, "(chi =", check.euler_characteristic, ")")

# full subcomplexes restrict faces to a vertex subset and relabel
sub = sphere.full_subcomplex((5, 6, 7, 8))
print("\nfull subcomplex on (5,6,7,8): a 4-cycle with missing faces",
      [vertices_of(f) for f in sub.missing_faces()])

# the text format round-trips byte for byte
print("\n.cplx serialization of the boundary of the 3-simplex:")
print(write_cplx(boundary_simplex(3)))
