"""Brute-force checks of the diagram criteria.

The oracles here never call the criterion they check: fundamentality is
decided by closing ``Q | sigma(Q)`` under root addition, weak nondegeneracy by
enumerating every proper subset of the crosses.  :func:`sweep_consistency`
runs them, together with the structural invariants of the fibration code,
over every catalog form up to a rank bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .fibration import (
    _largest_removal,
    fiber_nodes,
    fiber_over,
    fundamental_reduction,
    weak_reduction,
)
from .parabolic import (
    CrossedDiagram,
    analyze,
    component_diagrams,
    is_fundamental,
    is_weakly_nondegenerate,
)
from .rootcore import MAX_COMPONENT_RANK, root_closure, support
from .satake import ValidationError, catalog_forms, direct_sum, sigma_components

__all__ = [
    "AmbiguousLargest",
    "SweepReport",
    "oracle_fundamental",
    "oracle_weak_largest",
    "sweep_instances",
    "sweep_consistency",
]


class AmbiguousLargest(RuntimeError):
    """Two incomparable minimal cross sets give parabolics inside ``q + conj(q)``."""

    def __init__(self, first, second):
        super().__init__(f"incomparable minimal satisfiers {sorted(first)} and {sorted(second)}")
        self.witness = (frozenset(first), frozenset(second))


def _q_roots(cd: CrossedDiagram, crosses) -> frozenset:
    # root set of q_crosses, straight from the definition
    rs = cd.rootsys
    crosses = set(crosses)
    return frozenset(
        b for b in rs.all_roots
        if all(x >= 0 for x in b) or not (support(rs, b) & crosses)
    )


def _union(cd: CrossedDiagram) -> frozenset:
    Q = _q_roots(cd, cd.crosses)
    return Q | frozenset(cd.conjugation(b) for b in Q)


def oracle_fundamental(cd: CrossedDiagram) -> bool:
    """True iff ``Q | sigma(Q)`` generates every root."""
    return root_closure(cd.rootsys, _union(cd)) == cd.rootsys.all_roots


def oracle_weak_largest(cd: CrossedDiagram):
    """``(weakly_nondegenerate, smallest_psi)`` by enumerating proper subsets of the crosses.

    ``smallest_psi`` is the inclusion-minimal ``Psi`` with ``Q_Psi`` inside
    ``Q | sigma(Q)`` (the largest intermediate parabolic), or ``None`` when no
    proper subset qualifies.
    """
    union = _union(cd)
    crosses = sorted(cd.crosses)
    satisfiers = []
    for size in range(len(crosses)):
        for psi in combinations(crosses, size):
            if _q_roots(cd, psi) <= union:
                satisfiers.append(frozenset(psi))
    if not satisfiers:
        return True, None
    minimal = [s for s in satisfiers if not any(t < s for t in satisfiers)]
    if len(minimal) > 1:
        raise AmbiguousLargest(minimal[0], minimal[1])
    return False, minimal[0]


@dataclass
class SweepReport:
    instances_checked: int = 0
    mismatches: list = field(default_factory=list)
    forms_checked: int = 0
    fibrations_checked: int = 0

    def to_dict(self) -> dict:
        return {
            "instances_checked": self.instances_checked,
            "forms_checked": self.forms_checked,
            "fibrations_checked": self.fibrations_checked,
            "mismatches": [
                {"form": f, "cross": sorted(phi), "property": p, "expected": e, "got": g}
                for f, phi, p, e, g in self.mismatches
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def sweep_instances(rank_bound: int) -> list:
    """Catalog forms of rank at most ``rank_bound`` plus their two-term direct sums."""
    if rank_bound > MAX_COMPONENT_RANK:
        raise ValueError(f"rank bound {rank_bound} exceeds the supported {MAX_COMPONENT_RANK}")
    if rank_bound < 1:
        return []
    forms = catalog_forms(rank_bound)
    sums = []
    for i, a in enumerate(forms):
        for b in forms[i:]:
            if a.rootsys.rank + b.rootsys.rank <= rank_bound:
                sums.append(direct_sum(a, b))
    return sorted(forms + sums, key=lambda d: d.name)


def _check_instance(cd: CrossedDiagram, record) -> int:
    """Run every check on one crossed diagram; returns the number of fibrations visited."""
    rs = cd.rootsys
    c = cd.conjugation
    R = rs.all_roots
    a = analyze(cd)

    # criteria against oracles
    fund_oracle = oracle_fundamental(cd)
    if a.fundamental != fund_oracle:
        record("fundamental", fund_oracle, a.fundamental)
    try:
        weak_oracle, smallest = oracle_weak_largest(cd)
    except AmbiguousLargest as exc:
        record("weak_largest_unique", "unique", str(exc))
        weak_oracle, smallest = is_weakly_nondegenerate(cd), None
    if a.weakly_nondeg != weak_oracle:
        record("weakly_nondeg", weak_oracle, a.weakly_nondeg)
    removed, _ = _largest_removal(cd)
    expected_psi = cd.crosses if smallest is None else smallest
    if cd.crosses - removed != expected_psi:
        record("largest_intermediate", sorted(expected_psi), sorted(cd.crosses - removed))

    # dimensions
    Q = _q_roots(cd, cd.crosses)
    sQ = c.image(Q)
    if 2 * a.cr_dim + a.cr_codim != len(R) - len(Q & sQ):
        record("dimension_identity", len(R) - len(Q & sQ), 2 * a.cr_dim + a.cr_codim)
    if len(Q - sQ) != len(sQ - Q):
        record("conjugate_balance", len(Q - sQ), len(sQ - Q))
    if a.dim_g != rs.rank + len(R) or a.dim_isotropy != rs.rank + len(Q & sQ):
        record("dimensions", (rs.rank + len(R), rs.rank + len(Q & sQ)), (a.dim_g, a.dim_isotropy))
    if a.totally_real and a.totally_complex and cd.crosses:
        record("real_and_complex_only_for_empty_cross", True, False)

    # implication chain
    if a.strictly_nondeg and not a.weakly_nondeg:
        record("strict_implies_weak", True, False)
    if a.weakly_nondeg and not a.ideal_nondeg:
        record("weak_implies_ideal", True, False)

    # conjunction over simple ideals
    parts = component_diagrams(cd)
    if len(parts) > 1:
        sub = [analyze(p) for p in parts]
        for name, value in a.flags().items():
            want = all(s.flags()[name] for s in sub)
            if value != want:
                record(f"conjunction_{name}", want, value)

    # fundamental reduction
    psi, base, ffiber = fundamental_reduction(cd)
    if analyze(base).cr_dim != 0:
        record("fundamental_base_totally_real", 0, analyze(base).cr_dim)
    if not is_fundamental(ffiber) or not oracle_fundamental(ffiber):
        record("fundamental_fiber_is_fundamental", True, False)
    closure = root_closure(rs, Q | sQ)
    if closure != _q_roots(cd, psi):
        record("closure_equals_reduction_base", sorted(psi), "closure differs")
    if (not psi) != a.fundamental:
        record("psi_empty_iff_fundamental", a.fundamental, not psi)
    # the fiber read from the erased diagram
    erased = cd.satake.restrict(set(rs.labels) - psi)
    keep = set()
    for comp in sigma_components(erased):
        if comp & (cd.crosses - psi):
            keep |= comp
    if frozenset(keep) != frozenset(ffiber.satake.labels) or ffiber.crosses != (cd.crosses - psi) & keep:
        record("fundamental_fiber_erasure", sorted(keep), list(ffiber.satake.labels))

    # weak reduction
    if a.fundamental:
        removed, wbase, wfiber = weak_reduction(cd)
        if not is_weakly_nondegenerate(wbase):
            record("weak_base_weakly_nondeg", True, False)
        if analyze(wfiber).cr_codim != 0:
            record("weak_fiber_totally_complex", 0, analyze(wfiber).cr_codim)

    # every fibration below cd
    visited = 0
    crosses = sorted(cd.crosses)
    for size in range(len(crosses) + 1):
        for psi in combinations(crosses, size):
            visited += 1
            _check_fiber(cd, frozenset(psi), record)
    return visited


def _check_fiber(cd: CrossedDiagram, psi: frozenset, record) -> None:
    rs = cd.rootsys
    c = cd.conjugation
    try:
        rep = fiber_over(cd, psi)
    except ValidationError as exc:
        record(f"fiber_valid[{sorted(psi)}]", True, str(exc))
        return
    tag = f"[psi={sorted(psi)}]"
    if rep.Bsecond != fiber_nodes(cd, psi):
        record("fiber_nodes" + tag, sorted(fiber_nodes(cd, psi)), sorted(rep.Bsecond))
    if c.image(rep.Rsecond) != rep.Rsecond:
        record("fiber_sigma_stable" + tag, True, False)
    if rs.roots_in(rep.Bsecond) != rep.Rsecond:
        record("fiber_basis" + tag, True, False)
    # the restricted diagram's own conjugation agrees with the ambient one
    sub = rep.fiber_diagram
    pos = [rs.graph.index(l) for l in sub.satake.labels]
    sub_c = sub.conjugation
    for beta in sub.rootsys.all_roots:
        full = [0] * rs.rank
        for i, x in zip(pos, beta):
            full[i] = x
        img = c(tuple(full))
        if tuple(img[i] for i in pos) != sub_c(beta) or any(img[i] for i in range(rs.rank) if i not in pos):
            record("fiber_conjugation" + tag, "restriction", "differs")
            break
    base_n = len(_q_roots(cd, psi) - c.image(_q_roots(cd, psi)))
    if base_n == 0 and not rep.is_cr_fibration:
        record("totally_real_base_is_cr_fibration" + tag, True, False)
    for comp in sigma_components(rep.effective_fiber.satake):
        if not (comp & rep.effective_fiber.crosses):
            record("effective_fiber_crossed" + tag, True, False)


def sweep_consistency(rank_bound: int) -> SweepReport:
    """Check every criterion, oracle and reduction over all instances up to ``rank_bound``.

    Instances are all cross sets of every form from :func:`sweep_instances`,
    visited in order of form name and cross bitmask.
    """
    report = SweepReport()
    for d in sweep_instances(rank_bound):
        report.forms_checked += 1
        n = d.rootsys.rank
        for mask in range(1 << n):
            crosses = frozenset(d.labels[i] for i in range(n) if mask >> i & 1)
            cd = CrossedDiagram(d, crosses)

            def record(prop, expected, got, _name=d.name, _phi=crosses):
                report.mismatches.append((_name, _phi, prop, expected, got))

            report.fibrations_checked += _check_instance(cd, record)
            report.instances_checked += 1
    return report
