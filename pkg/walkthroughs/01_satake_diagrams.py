"""
Satake diagrams and the conjugation they encode
===============================================

A real form of a complex semisimple Lie algebra is recorded by a Dynkin
diagram with some nodes painted black and some white nodes joined by arrows.
From that picture we rebuild the action of the conjugation on roots.
"""

import numpy as np

from crsatake import catalog_lookup, classify_root, make_diagram, build_conjugation
from crsatake.render import render_diagram
from crsatake.parabolic import CrossedDiagram

# su(1,3): type A3, the middle node black, the end nodes exchanged
d = catalog_lookup("su", (1, 3))
print(render_diagram(CrossedDiagram(d, ())))

# sigma acts on simple-root coordinates as a 3x3 integer matrix (row vectors)
c = d.conjugation
print(c.sigma)
print("sigma squared is the identity:", np.array_equal(c.sigma @ c.sigma, np.eye(3, dtype=int)))

# every root is real, imaginary or complex
for beta in sorted(d.rootsys.positive):
    print(beta, "->", c(beta), classify_root(c, beta))

# sigma(alpha_1) = alpha_3 + alpha_2: the arrow plus a black correction
print("coefficients on black nodes:", c.coefficients)

# Not every painting is a Satake diagram.  A2 with one black node fails:
try:
    build_conjugation(make_diagram("A2", black=[1]))
except ValueError as exc:
    print("rejected:", exc)

# The exceptional forms come from a small data table.
for label in ("EII", "EIII", "FII"):
    e = catalog_lookup("ex", (label,))
    print(label, render_diagram(CrossedDiagram(e, ())).splitlines()[0])
