"""Parabolic CR algebras given by cross-marked Satake diagrams.

Everything is decided on root sets: ``Q`` is the root set of the parabolic
``q_Phi`` and ``sigma(Q)`` that of its conjugate, so ``q + conj(q)`` and
``q & conj(q)`` correspond to ``Q | sigma(Q)`` and ``Q & sigma(Q)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .rootcore import RootSystem, root_closure, support
from .satake import OutOfRange, SatakeDiagram, build_conjugation, sigma_components

__all__ = [
    "CrossedDiagram",
    "ParabolicRootData",
    "OrbitAnalysis",
    "parabolic_roots",
    "cr_type",
    "is_effective",
    "is_totally_real",
    "is_totally_complex",
    "is_fundamental",
    "is_weakly_nondegenerate",
    "is_strictly_nondegenerate",
    "is_ideal_nondegenerate",
    "analyze",
    "component_diagrams",
]


@dataclass(frozen=True)
class CrossedDiagram:
    """A Satake diagram together with the cross-marked node set ``crosses``."""

    satake: SatakeDiagram
    crosses: frozenset

    def __post_init__(self):
        crosses = frozenset(self.crosses)
        object.__setattr__(self, "crosses", crosses)
        bad = sorted(crosses - set(self.satake.labels))
        if bad:
            raise OutOfRange(f"node {bad[0]} out of range (nodes are {list(self.satake.labels)})")
        build_conjugation(self.satake)

    @property
    def rootsys(self) -> RootSystem:
        return self.satake.rootsys

    @property
    def conjugation(self):
        return build_conjugation(self.satake)

    def __repr__(self):
        return f"CrossedDiagram({self.satake!r}, crosses={sorted(self.crosses)})"

    def with_crosses(self, crosses: Iterable[int]) -> "CrossedDiagram":
        return CrossedDiagram(self.satake, frozenset(crosses))

    def bitmask(self) -> int:
        labels = self.satake.labels
        return sum(1 << labels.index(c) for c in self.crosses)


@dataclass(frozen=True)
class ParabolicRootData:
    Q: frozenset
    Qr: frozenset
    Qn: frozenset
    phi_check: frozenset


def parabolic_roots(rs: RootSystem, crosses: Iterable[int]) -> ParabolicRootData:
    """Root data of ``q_Phi``: positive roots plus negative roots avoiding ``Phi``."""
    crosses = frozenset(crosses)
    key = ("parabolic", crosses)
    hit = rs._cache.get(key)
    if hit is not None:
        return hit
    phi_check = frozenset(b for b in rs.negative if not (support(rs, b) & crosses))
    Q = rs.positive | phi_check
    Qr = frozenset(b for b in Q if tuple(-x for x in b) in Q)
    data = ParabolicRootData(Q, Qr, Q - Qr, phi_check)
    rs._cache[key] = data
    return data


def _sets(cd: CrossedDiagram):
    """``(Q, sigma Q, union, intersection)`` for ``cd``."""
    Q = parabolic_roots(cd.rootsys, cd.crosses).Q
    sQ = cd.conjugation.image(Q)
    return Q, sQ, Q | sQ, Q & sQ


def cr_type(pd: ParabolicRootData, c) -> tuple[int, int, int, int]:
    """``(n, k, dim_g, dim_isotropy)`` from the root data and the conjugation."""
    R = frozenset(c.table)
    rank = len(next(iter(R))) if R else 0
    Q = pd.Q
    sQ = c.image(Q)
    n = len(Q - sQ)
    k = len(R - (Q | sQ))
    return n, k, rank + len(R), rank + len(Q & sQ)


def _cr_type_cd(cd: CrossedDiagram) -> tuple[int, int, int, int]:
    rs = cd.rootsys
    Q, sQ, union, inter = _sets(cd)
    return len(Q - sQ), len(rs.all_roots - union), rs.rank + len(rs.all_roots), rs.rank + len(inter)


def is_totally_real(cd: CrossedDiagram) -> bool:
    return _cr_type_cd(cd)[0] == 0


def is_totally_complex(cd: CrossedDiagram) -> bool:
    return _cr_type_cd(cd)[1] == 0


def is_effective(cd: CrossedDiagram) -> bool:
    """No simple ideal of the complexification lies in ``q & conj(q)``."""
    rs = cd.rootsys
    inter = _sets(cd)[3]
    for comp in rs.graph.components():
        if rs.roots_in(comp) <= inter:
            return False
    return True


def is_fundamental(cd: CrossedDiagram) -> bool:
    """No non-imaginary cross is paired by epsilon with a cross."""
    eps = cd.conjugation.epsilon
    return not any(eps[a] in cd.crosses for a in cd.crosses - cd.satake.black)


def is_weakly_nondegenerate(cd: CrossedDiagram) -> bool:
    """No parabolic strictly between ``q`` and ``q + conj(q)``.

    Any parabolic above ``q_Phi`` is some ``q_Psi`` with ``Psi`` inside ``Phi``
    and contains ``q_{Phi - {a}}`` for each dropped ``a``; containment in
    ``q + conj(q)`` is monotone, so single removals decide it.
    """
    rs = cd.rootsys
    union = _sets(cd)[2]
    for a in cd.crosses:
        if parabolic_roots(rs, cd.crosses - {a}).Q <= union:
            return False
    return True


def is_strictly_nondegenerate(cd: CrossedDiagram) -> bool:
    """The normalizer of ``q + conj(q)`` inside itself is ``q & conj(q)``.

    The normalizer is stable under the Cartan subalgebra, so it is spanned by
    root vectors; a root of ``(Q | sQ) - (Q & sQ)`` is excluded exactly when
    some bracket with ``Q | sQ`` escapes.
    """
    R = cd.rootsys.all_roots
    _, _, union, inter = _sets(cd)
    for a in union - inter:
        if not any(
            (s := tuple(x + y for x, y in zip(a, b))) in R and s not in union
            for b in union
        ):
            return False
    return True


def is_ideal_nondegenerate(cd: CrossedDiagram) -> bool:
    """No simple ideal of ``g`` is totally complex while properly crossed."""
    rs = cd.rootsys
    union = _sets(cd)[2]
    for comp in sigma_components(cd.satake):
        if not (cd.crosses & comp):
            continue
        if rs.roots_in(comp) <= union:
            return False
    return True


@dataclass(frozen=True)
class OrbitAnalysis:
    cr_dim: int
    cr_codim: int
    dim_g: int
    dim_isotropy: int
    effective: bool
    totally_real: bool
    totally_complex: bool
    fundamental: bool
    weakly_nondeg: bool
    strictly_nondeg: bool
    ideal_nondeg: bool

    def flags(self) -> dict[str, bool]:
        return {
            "effective": self.effective,
            "totally_real": self.totally_real,
            "totally_complex": self.totally_complex,
            "fundamental": self.fundamental,
            "weakly_nondeg": self.weakly_nondeg,
            "strictly_nondeg": self.strictly_nondeg,
            "ideal_nondeg": self.ideal_nondeg,
        }


def analyze(cd: CrossedDiagram) -> OrbitAnalysis:
    """All invariants of the minimal orbit encoded by ``cd``."""
    n, k, dim_g, dim_iso = _cr_type_cd(cd)
    return OrbitAnalysis(
        cr_dim=n,
        cr_codim=k,
        dim_g=dim_g,
        dim_isotropy=dim_iso,
        effective=is_effective(cd),
        totally_real=n == 0,
        totally_complex=k == 0,
        fundamental=is_fundamental(cd),
        weakly_nondeg=is_weakly_nondegenerate(cd),
        strictly_nondeg=is_strictly_nondegenerate(cd),
        ideal_nondeg=is_ideal_nondegenerate(cd),
    )


def component_diagrams(cd: CrossedDiagram) -> list[CrossedDiagram]:
    """One crossed diagram per sigma-connected component (simple ideal of ``g``)."""
    out = []
    for comp in sigma_components(cd.satake):
        sub = cd.satake.restrict(comp)
        out.append(CrossedDiagram(sub, cd.crosses & comp))
    return out
