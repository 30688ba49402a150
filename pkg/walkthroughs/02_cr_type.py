"""
CR type of a minimal orbit
==========================

Crossing some nodes of a Satake diagram picks a parabolic subalgebra q and
so a complex flag manifold.  The real group has a unique closed orbit there;
its CR dimension n and codimension k come from counting roots of q and of
its conjugate.
"""

from crsatake import analyze, parse_spec
from crsatake.parabolic import parabolic_roots
from crsatake.render import render_diagram

cd = parse_spec("su(1,3) cross {1,2}")
print(render_diagram(cd))

pd = parabolic_roots(cd.rootsys, cd.crosses)
Q = pd.Q
sQ = cd.conjugation.image(Q)
print("|R| =", len(cd.rootsys.all_roots), " |Q| =", len(Q), " |Q & sQ| =", len(Q & sQ))

a = analyze(cd)
print("n =", a.cr_dim, " k =", a.cr_codim)
# 2n + k recovers the real dimension of the orbit
assert 2 * a.cr_dim + a.cr_codim == len(cd.rootsys.all_roots) - len(Q & sQ)
for name, value in a.flags().items():
    print(f"  {name:16s} {value}")

# The hyperquadric: SU(p,q) acting on null lines of C^{p+q}.
for p, q in [(1, 2), (2, 2), (2, 3)]:
    a = analyze(parse_spec(f"su({p},{q}) cross {{1}}"))
    print(f"su({p},{q}) cross {{1}}: n={a.cr_dim} k={a.cr_codim} strict={a.strictly_nondeg}")

# Compact forms give the whole flag manifold: k = 0.
a = analyze(parse_spec("compact(B3) cross {1,3}"))
print("compact B3:", a.cr_dim, a.cr_codim, a.totally_complex)
