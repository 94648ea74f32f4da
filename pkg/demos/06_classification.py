"""Connected-sum-of-sphere-products models and the obstruction battery.

A model string like "3,3,6;5,7*8;6,6*8" describes a connected sum; the
verifier checks every ring invariant such an isomorphism would impose.
The obstruction battery goes the other way: combinatorial features of the
complex that rule the sphere-product shape out.
"""

from moment_angle import (
    construct_p28_8,
    cross_polytope,
    csp_obstructions,
    induced_cycles,
    model_betti,
    parse_model,
    polygon,
    truncated_simplex,
    two_points,
    verify_csp_model,
)
from moment_angle.reproduction import mcgavran_model

# models know their own Betti tables
model = parse_model("3,3,6;5,7*8;6,6*8")
print("target model:", model.describe())
print("model Betti table:", model_betti(model))

# the 8-vertex sphere is consistent with it, and the degree-6 count splits
# into 16 (from the S^6 x S^6 summands) + 1 (the lone S^6) + 1 (S^3 . S^3)
sphere = construct_p28_8()
verification = verify_csp_model(sphere, model)
print("consistent:", verification.consistent)
for dims, sub, count in verification.degree_contributions[6]:
    print(f"  degree-6 contribution {count} from {sub} inside {dims}")

# cross-polytopes are joins of point pairs: the battery recognizes them
for n in (2, 3):
    report = csp_obstructions(cross_polytope(n))
    print(f"\ncross-polytope({n}):", report.checks["join-of-pairs"][1])

# a suspension of the pentagon is a 2-sphere with an induced 5-cycle, and
# a proper induced cycle of length five or more is an obstruction
suspension = polygon(5).join(two_points())
report = csp_obstructions(suspension)
print("\npentagon suspension obstructed:", report.obstructed,
      "witness cycle:", report.checks["long-induced-cycle"][1])

# the 8-vertex sphere is clean: its only induced cycle is the quadrangle
print("\n8-vertex sphere induced cycles (length 4):", induced_cycles(sphere, 4, 4))
print("8-vertex sphere induced cycles (length >= 5):", induced_cycles(sphere, 5, 8))

# the truncated-simplex family has a closed-form model for every (k, l)
for k, l in [(2, 2), (2, 3), (3, 2)]:
    member = truncated_simplex(k, l)
    text = mcgavran_model(k, l)
    result = verify_csp_model(member, text)
    print(f"truncated simplex (k={k}, l={l}) ~ {parse_model(text).describe()}:",
          result.consistent)
