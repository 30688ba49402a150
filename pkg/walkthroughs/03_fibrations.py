"""
Fibrations and the two reductions
=================================

Dropping crosses from Phi to a subset Psi gives a G-equivariant map between
minimal orbits.  The fiber is again a minimal orbit, read off a subdiagram.
Two canonical choices of Psi split a general orbit into simpler pieces.
"""

from crsatake import fiber_over, fundamental_reduction, parse_spec, reduction_diagram, weak_reduction
from crsatake.parabolic import analyze
from crsatake.render import render_diagram

total = parse_spec("su(1,3) cross {1,2}")

# Forgetting cross 2 leaves one black node with a cross as fiber.
rep = fiber_over(total, {1})
print(render_diagram(rep.effective_fiber))
print("CR fibration:", rep.is_cr_fibration)

# Forgetting cross 1 instead: the fiber is a point, yet the map is not CR.
rep = fiber_over(total, {2})
print(render_diagram(rep.effective_fiber), "CR fibration:", rep.is_cr_fibration)

# su(2,2) with crosses 2 and 3 is not fundamental.  The fundamental
# reduction puts it over a totally real base.
cd = parse_spec("su(2,2) cross {2,3}")
psi, base, fiber = fundamental_reduction(cd)
print("psi =", sorted(psi), " base n =", analyze(base).cr_dim)
print(render_diagram(fiber))

# The fiber is fundamental; its weak reduction has a totally complex fiber.
removed, wbase, wfiber = weak_reduction(fiber)
print("removed", sorted(removed), " fiber k =", analyze(wfiber).cr_codim)

# Everything at once.
report = reduction_diagram(cd)
for corner, diagram in report.composite.items():
    print(f"{corner}: crosses {sorted(diagram.crosses)}")
