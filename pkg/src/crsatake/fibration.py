"""Equivariant fibrations ``(g, q_Phi) -> (g, q_Psi)`` and the canonical reductions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .parabolic import (
    CrossedDiagram,
    is_fundamental,
    parabolic_roots,
)
from .rootcore import root_closure, support
from .satake import SatakeDiagram, sigma_components

__all__ = [
    "PsiNotSubset",
    "NotFundamental",
    "FibrationReport",
    "ReductionReport",
    "fiber_over",
    "fiber_nodes",
    "fundamental_reduction",
    "weak_reduction",
    "reduction_diagram",
]


class PsiNotSubset(ValueError):
    pass


class NotFundamental(ValueError):
    pass


@dataclass(frozen=True)
class FibrationReport:
    psi: frozenset
    Rprime: frozenset
    Qprime: frozenset
    Rsecond: frozenset
    Qsecond: frozenset
    Bsecond: frozenset
    fiber_diagram: CrossedDiagram
    effective_fiber: CrossedDiagram
    is_cr_fibration: bool


def fiber_nodes(cd: CrossedDiagram, psi) -> frozenset:
    """Simple roots kept in the fiber, read directly off the diagram.

    A black node survives unless it is in ``psi``; a white node survives when
    neither it nor the support of its conjugate meets ``psi``.
    """
    psi = frozenset(psi)
    rs = cd.rootsys
    c = cd.conjugation
    keep = set()
    for a in rs.labels:
        if a in cd.satake.black:
            if a not in psi:
                keep.add(a)
        elif not (({a} | support(rs, c(rs.simple(a)))) & psi):
            keep.add(a)
    return frozenset(keep)


def _effective_part(cd: CrossedDiagram) -> CrossedDiagram:
    """Union of the sigma-connected components that carry a cross."""
    keep = set()
    for comp in sigma_components(cd.satake):
        if comp & cd.crosses:
            keep |= comp
    return CrossedDiagram(cd.satake.restrict(keep), cd.crosses & keep)


def fiber_over(cd: CrossedDiagram, psi) -> FibrationReport:
    """Fiber data of the fibration ``(g, q_Phi) -> (g, q_Psi)``."""
    psi = frozenset(psi)
    if not psi <= cd.crosses:
        raise PsiNotSubset(f"Psi = {sorted(psi)} is not contained in Phi = {sorted(cd.crosses)}")
    rs = cd.rootsys
    c = cd.conjugation
    Q_phi = parabolic_roots(rs, cd.crosses).Q
    Q_psi = parabolic_roots(rs, psi).Q
    sQ_psi = c.image(Q_psi)
    Rp = Q_psi & sQ_psi
    Qp = Q_phi & sQ_psi
    Rs = frozenset(b for b in Rp if tuple(-x for x in b) in Rp)
    Qs = Qp & Rs
    Bs = frozenset(l for l in rs.labels if rs.simple(l) in Rs)
    fiber = CrossedDiagram(cd.satake.restrict(Bs), cd.crosses & Bs)
    cr_fib = Q_psi <= (Q_phi | Rp)
    return FibrationReport(psi, Rp, Qp, Rs, Qs, Bs, fiber, _effective_part(fiber), cr_fib)


def fundamental_reduction(cd: CrossedDiagram):
    """``(Psi, base, effective_fiber)`` of the reduction onto a totally real base.

    ``Psi`` collects the non-imaginary crosses whose epsilon-partner is also
    crossed.
    """
    eps = cd.conjugation.epsilon
    psi = frozenset(a for a in cd.crosses - cd.satake.black if eps[a] in cd.crosses)
    base = cd.with_crosses(psi)
    return psi, base, fiber_over(cd, psi).effective_fiber


def _largest_removal(cd: CrossedDiagram):
    """Removal set ``S`` with ``q_{Phi - S}`` the largest parabolic inside ``q + conj(q)``.

    Returns ``(S, used_fallback)``.
    """
    rs = cd.rootsys
    Q = parabolic_roots(rs, cd.crosses).Q
    union = Q | cd.conjugation.image(Q)
    single = frozenset(a for a in cd.crosses if parabolic_roots(rs, cd.crosses - {a}).Q <= union)
    if parabolic_roots(rs, cd.crosses - single).Q <= union:
        return single, False
    # single removals do not combine; search every removal set, largest first
    crosses = sorted(cd.crosses)
    for size in range(len(crosses), 0, -1):
        for S in combinations(crosses, size):
            if parabolic_roots(rs, cd.crosses - set(S)).Q <= union:
                return frozenset(S), True
    return frozenset(), True


def weak_reduction(cd: CrossedDiagram):
    """``(removed, base, fiber)`` of the reduction onto a weakly nondegenerate base.

    Defined for fundamental inputs only.
    """
    if not is_fundamental(cd):
        raise NotFundamental("the weakly nondegenerate reduction needs a fundamental CR algebra")
    removed, _ = _largest_removal(cd)
    psi = cd.crosses - removed
    return removed, cd.with_crosses(psi), fiber_over(cd, psi).effective_fiber


@dataclass(frozen=True)
class ReductionReport:
    fundamental_psi: frozenset
    fundamental_base: CrossedDiagram
    fundamental_fiber: CrossedDiagram
    weak_removed: frozenset
    weak_base: CrossedDiagram
    weak_fiber: CrossedDiagram
    composite: dict = field(default_factory=dict)
    diagnostics: tuple = ()


def reduction_diagram(cd: CrossedDiagram) -> ReductionReport:
    """Both reductions chained: first onto the totally real base, then the
    weakly nondegenerate reduction of the (fundamental) fiber.

    ``composite`` names the four corners: the total space, the totally real
    base ``(g, f^)``, the fundamental algebra ``(f, q)`` and its weakly
    nondegenerate base ``(f, q')``.
    """
    psi, base, ffiber = fundamental_reduction(cd)
    diagnostics = []
    if not is_fundamental(ffiber):
        diagnostics.append("fundamental fiber failed the fundamental test")
        removed, wbase, wfiber = frozenset(), ffiber, ffiber.with_crosses(())
    else:
        removed, used_fallback = _largest_removal(ffiber)
        if used_fallback:
            diagnostics.append("single-cross removals did not combine; used exhaustive search")
        wbase = ffiber.with_crosses(ffiber.crosses - removed)
        wfiber = fiber_over(ffiber, wbase.crosses).effective_fiber
    composite = {
        "total": cd,
        "totally_real_base": base,
        "fundamental": ffiber,
        "weakly_nondegenerate_base": wbase,
    }
    return ReductionReport(psi, base, ffiber, removed, wbase, wfiber, composite, tuple(diagnostics))


def generated_roots(cd: CrossedDiagram) -> frozenset:
    """Root set of the subalgebra generated by ``q + conj(q)``."""
    Q = parabolic_roots(cd.rootsys, cd.crosses).Q
    return root_closure(cd.rootsys, Q | cd.conjugation.image(Q))
