"""Real forms as Satake diagrams and the conjugation they induce on roots.

The conjugation is realized as ``sigma = w0(black) o epsilon`` and every
diagram is validated against the defining properties of the conjugation of
a real form before it is handed out.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping

import numpy as np

from .rootcore import (
    MAX_COMPONENT_RANK,
    DynkinGraph,
    MalformedGraph,
    Root,
    RootSystem,
    build_root_system,
    longest_involution,
    support,
)

__all__ = [
    "ValidationError",
    "InvalidArrows",
    "NotASatakeDiagram",
    "UnknownForm",
    "OutOfRange",
    "SatakeDiagram",
    "Conjugation",
    "make_diagram",
    "epsilon_of",
    "build_conjugation",
    "classify_root",
    "sigma_components",
    "catalog_lookup",
    "direct_sum",
    "catalog_forms",
    "family_members",
    "FAMILIES",
]


class ValidationError(ValueError):
    """The decorated diagram does not describe a real form."""


class InvalidArrows(ValidationError):
    pass


class NotASatakeDiagram(ValidationError):
    pass


class UnknownForm(LookupError):
    pass


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SatakeDiagram:
    """Dynkin diagram with black nodes and arrows joining white nodes.

    ``black`` and ``arrows`` use node labels; arrow pairs are stored as
    ``(smaller, larger)``.  ``name`` is cosmetic (catalog entries set it).
    """

    rootsys: RootSystem
    black: frozenset
    arrows: frozenset
    name: str | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def graph(self) -> DynkinGraph:
        return self.rootsys.graph

    @property
    def labels(self) -> tuple[int, ...]:
        return self.rootsys.labels

    @property
    def white(self) -> frozenset:
        return frozenset(self.labels) - self.black

    def key(self) -> tuple:
        """Canonical comparison key (ignores ``name``)."""
        return (self.graph.cartan, self.labels, tuple(sorted(self.black)), tuple(sorted(self.arrows)))

    def __eq__(self, other):
        return isinstance(other, SatakeDiagram) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        tag = self.name or self.graph.type_string() or "empty"
        return f"SatakeDiagram({tag}, black={sorted(self.black)}, arrows={sorted(self.arrows)})"

    @property
    def conjugation(self) -> "Conjugation":
        return build_conjugation(self)

    def restrict(self, nodes: Iterable[int]) -> "SatakeDiagram":
        """Subdiagram on ``nodes``; arrows losing an endpoint are dropped."""
        nodes = frozenset(nodes)
        arrows = [a for a in self.arrows if a[0] in nodes and a[1] in nodes]
        return make_diagram(self.graph.restrict(nodes), self.black & nodes, arrows)


def make_diagram(graph: DynkinGraph | str, black: Iterable[int] = (), arrows: Iterable = (),
                 name: str | None = None) -> SatakeDiagram:
    """Assemble a diagram and check the shape of its arrows.

    ``graph`` may be a type string such as ``"A3"``.  Raises
    :class:`InvalidArrows` for arrows that are not an involutive matching of
    distinct white nodes.  Full validation happens in :func:`build_conjugation`.
    """
    if isinstance(graph, str):
        graph = DynkinGraph.from_type(graph)
    rs = build_root_system(graph)
    labels = set(rs.labels)
    black = frozenset(black)
    if not black <= labels:
        raise OutOfRange(f"black nodes {sorted(black - labels)} not in diagram")
    pairs = set()
    used: set[int] = set()
    for a in arrows:
        i, j = a
        if i not in labels or j not in labels:
            raise OutOfRange(f"arrow {tuple(a)} leaves the diagram")
        if i == j:
            raise InvalidArrows(f"arrow {tuple(a)} joins a node to itself")
        if i in black or j in black:
            raise InvalidArrows(f"arrow {tuple(a)} touches a black node")
        p = (min(i, j), max(i, j))
        if p in pairs:
            continue
        if i in used or j in used:
            raise InvalidArrows(f"node of arrow {tuple(a)} already carries an arrow")
        used |= {i, j}
        pairs.add(p)
    return SatakeDiagram(rs, black, frozenset(pairs), name)


@dataclass(frozen=True, eq=False)
class Conjugation:
    """Involution induced on the root lattice by a real form.

    ``sigma`` acts on row vectors of simple-root coordinates.  ``table`` is the
    precomputed action on roots.
    """

    sigma: np.ndarray
    epsilon: Mapping[int, int]
    imaginary: frozenset
    table: Mapping[Root, Root]
    coefficients: Mapping[int, Mapping[int, int]]

    def __call__(self, beta: Root) -> Root:
        return self.table[beta]

    def image(self, roots: Iterable[Root]) -> frozenset:
        t = self.table
        return frozenset(t[b] for b in roots)


def _black_permutation(rs: RootSystem, black: frozenset) -> dict[int, int]:
    """Permutation ``-w0(black)`` on black simple roots."""
    W = longest_involution(rs, black)
    perm = {}
    for b in black:
        img = tuple(-int(x) for x in W[rs.graph.index(b)])
        nz = [rs.labels[i] for i, x in enumerate(img) if x]
        assert len(nz) == 1 and img[rs.graph.index(nz[0])] == 1, "w0 must permute black simple roots up to sign"
        perm[b] = nz[0]
    return perm


def epsilon_of(d: SatakeDiagram) -> dict[int, int]:
    """Node involution: arrows on white nodes, ``-w0(black)`` on black ones."""
    if "epsilon" in d._cache:
        return d._cache["epsilon"]
    eps = {l: l for l in d.labels}
    for i, j in d.arrows:
        eps[i], eps[j] = j, i
    eps.update(_black_permutation(d.rootsys, d.black))
    A = d.graph.cartan
    idx = d.graph.index
    for a in d.labels:
        for b in d.labels:
            if A[idx(eps[a])][idx(eps[b])] != A[idx(a)][idx(b)]:
                raise InvalidArrows(
                    f"node map {sorted(eps.items())} is not an automorphism of the Dynkin diagram"
                )
    d._cache["epsilon"] = eps
    return eps


def build_conjugation(d: SatakeDiagram) -> Conjugation:
    """Conjugation of the real form encoded by ``d``, fully validated.

    Raises :class:`NotASatakeDiagram` when the induced map fails any of the
    properties of the conjugation of a real form.
    """
    if "conj" in d._cache:
        return d._cache["conj"]
    rs = d.rootsys
    n = rs.rank
    eps = epsilon_of(d)
    E = np.zeros((n, n), dtype=np.int64)
    for l, m in eps.items():
        E[rs.graph.index(l), rs.graph.index(m)] = 1
    S = E @ longest_involution(rs, d.black)
    S.setflags(write=False)

    if not np.array_equal(S @ S, np.eye(n, dtype=np.int64)):
        raise NotASatakeDiagram("sigma is not an involution")
    table = {}
    for b in rs.all_roots:
        img = rs.apply(S, b)
        if img not in rs.all_roots:
            raise NotASatakeDiagram(f"sigma maps root {b} outside the root system")
        table[b] = img
    imaginary = frozenset(b for b, img in table.items() if img == tuple(-x for x in b))
    black_supported = frozenset(b for b in rs.all_roots if support(rs, b) <= d.black)
    if imaginary != black_supported:
        raise NotASatakeDiagram("imaginary roots are not exactly the black-supported roots")
    for b in rs.positive - imaginary:
        if table[b] not in rs.positive:
            raise NotASatakeDiagram(f"sigma sends positive non-imaginary root {b} to a negative root")

    coefficients = {}
    for a in d.white:
        diff = np.array(table[rs.simple(a)]) - np.array(rs.simple(eps[a]))
        coeff = {}
        for i, x in enumerate(diff):
            lab = rs.labels[i]
            if x and (lab not in d.black or x < 0):
                raise NotASatakeDiagram(
                    f"sigma(alpha_{a}) - alpha_{eps[a]} is not a nonnegative combination of black roots"
                )
            if x:
                coeff[lab] = int(x)
        coefficients[a] = coeff
    _check_integrality(d, eps, imaginary)

    conj = Conjugation(S, dict(eps), imaginary, table, coefficients)
    d._cache["conj"] = conj
    return conj


def _check_integrality(d: SatakeDiagram, eps: Mapping[int, int], imaginary: frozenset) -> None:
    # white nodes fixed by epsilon pair evenly with the coroots of positive imaginary roots
    rs = d.rootsys
    if not imaginary:
        return
    G = rs.gram()
    pos_imag = [np.array(b) for b in imaginary if b in rs.positive]
    for a in d.white:
        if eps[a] != a:
            continue
        v = np.array(rs.simple(a))
        total = sum(2 * (v @ G @ b) / (b @ G @ b) for b in pos_imag)
        if abs(total - round(total)) > 1e-9 or round(total) % 2:
            raise NotASatakeDiagram(
                f"white node {a} fixed by epsilon fails the parity condition with the black nodes"
            )


def classify_root(c: Conjugation, beta: Root) -> str:
    """``"real"``, ``"imaginary"`` or ``"complex"``."""
    img = c.table[beta]
    if img == beta:
        return "real"
    if img == tuple(-x for x in beta):
        return "imaginary"
    return "complex"


def sigma_components(d: SatakeDiagram) -> list[frozenset]:
    """Graph components merged along arrows, ordered by smallest label."""
    comps = [set(c) for c in d.graph.components()]
    where = {l: k for k, c in enumerate(comps) for l in c}
    parent = list(range(len(comps)))

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for i, j in d.arrows:
        a, b = find(where[i]), find(where[j])
        if a != b:
            parent[max(a, b)] = min(a, b)
    merged: dict[int, set] = {}
    for k, c in enumerate(comps):
        merged.setdefault(find(k), set()).update(c)
    return sorted((frozenset(c) for c in merged.values()), key=min)


def direct_sum(*diagrams: SatakeDiagram) -> SatakeDiagram:
    """Disjoint union, relabelling each summand after the previous ones."""
    blocks, black, arrows, names = [], set(), set(), []
    offset = 0
    for d in diagrams:
        shift = {l: offset + k + 1 for k, l in enumerate(d.labels)}
        blocks.append(d.graph.matrix)
        black |= {shift[b] for b in d.black}
        arrows |= {(shift[i], shift[j]) for i, j in d.arrows}
        names.append(d.name or d.graph.type_string())
        offset += d.rootsys.rank
    A = np.zeros((offset, offset), dtype=np.int64)
    pos = 0
    for b in blocks:
        k = b.shape[0]
        A[pos:pos + k, pos:pos + k] = b
        pos += k
    graph = DynkinGraph(tuple(tuple(int(x) for x in row) for row in A), tuple(range(1, offset + 1)))
    out = make_diagram(graph, black, arrows, name=" + ".join(names))
    build_conjugation(out)
    return out


# ---------------------------------------------------------------------------
# catalog

FAMILIES = ("su", "sl_r", "sl_h", "so", "so_star", "sp_r", "sp", "compact", "complex", "ex")

_SIMPLE_TYPES = [("A", l) for l in range(1, 9)] + [("B", l) for l in range(2, 9)] \
    + [("C", l) for l in range(3, 9)] + [("D", l) for l in range(4, 9)] \
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


@lru_cache(maxsize=None)
def _exceptional_table() -> dict[str, tuple]:
    text = resources.files("crsatake").joinpath("data/exceptional.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        label, letter, rank, black, arrows, alias = line.split()
        blk = () if black == "-" else tuple(int(x) for x in black.split(","))
        arr = () if arrows == "-" else tuple(tuple(int(y) for y in p.split("-")) for p in arrows.split(","))
        table[label] = (letter, int(rank), blk, arr, alias)
    return table


def _check_rank(rank: int, what: str) -> None:
    if rank > MAX_COMPONENT_RANK:
        raise OutOfRange(f"{what} has rank {rank}; the supported bound is {MAX_COMPONENT_RANK}")


def _type_arg(params) -> tuple[str, int]:
    if len(params) == 1 and isinstance(params[0], str):
        m = re.fullmatch(r"([A-Ga-g])(\d+)", params[0].strip())
        if not m:
            raise OutOfRange(f"cannot read Cartan type {params[0]!r}")
        letter, rank = m.group(1).upper(), int(m.group(2))
    elif len(params) == 2:
        letter, rank = str(params[0]).upper(), int(params[1])
    else:
        raise OutOfRange("expected a Cartan type such as A3")
    if (letter, rank) not in _SIMPLE_TYPES and not (letter == "C" and rank == 2):
        raise OutOfRange(f"no simple Dynkin type {letter}{rank}")
    return letter, rank


def _ints(params, count: int, name: str) -> tuple[int, ...]:
    if len(params) != count:
        raise OutOfRange(f"{name} takes {count} integer argument(s)")
    try:
        return tuple(int(p) for p in params)
    except (TypeError, ValueError):
        raise OutOfRange(f"{name} takes integer arguments") from None


def _build_form(name: str, params: tuple) -> tuple[str, str, list[int], list[tuple[int, int]]]:
    """Return ``(canonical name, type string, black, arrows)``."""
    if name == "su":
        p, q = sorted(_ints(params, 2, "su"))
        if p < 1:
            raise OutOfRange("su(p,q) needs p, q >= 1 (use compact(A..) for su(n))")
        l = p + q - 1
        _check_rank(l, f"su({p},{q})")
        black = list(range(p + 1, q))
        arrows = [(i, l + 1 - i) for i in range(1, l + 1) if i < l + 1 - i and (i <= p)]
        return f"su({p},{q})", f"A{l}", black, arrows
    if name == "sl_r":
        (n,) = _ints(params, 1, "sl_r")
        if n < 2:
            raise OutOfRange("sl_r(n) needs n >= 2")
        _check_rank(n - 1, f"sl_r({n})")
        return f"sl_r({n})", f"A{n - 1}", [], []
    if name == "sl_h":
        (m,) = _ints(params, 1, "sl_h")
        if m < 1:
            raise OutOfRange("sl_h(m) needs m >= 1")
        l = 2 * m - 1
        _check_rank(l, f"sl_h({m})")
        return f"sl_h({m})", f"A{l}", list(range(1, l + 1, 2)), []
    if name == "so":
        p, q = sorted(_ints(params, 2, "so"))
        n = p + q
        if p < 1:
            raise OutOfRange("so(p,q) needs p, q >= 1 (use compact(..) for so(n))")
        if n % 2:
            l = (n - 1) // 2
            if l < 2:
                raise OutOfRange("so(p,q) with p+q odd needs p+q >= 5")
            _check_rank(l, f"so({p},{q})")
            return f"so({p},{q})", f"B{l}", list(range(p + 1, l + 1)), []
        l = n // 2
        if l < 4:
            raise OutOfRange("so(p,q) with p+q even needs p+q >= 8")
        _check_rank(l, f"so({p},{q})")
        if p <= l - 2:
            return f"so({p},{q})", f"D{l}", list(range(p + 1, l + 1)), []
        if p == l - 1:
            return f"so({p},{q})", f"D{l}", [], [(l - 1, l)]
        return f"so({p},{q})", f"D{l}", [], []
    if name == "so_star":
        (m,) = _ints(params, 1, "so_star")
        if m % 2 or m < 8:
            raise OutOfRange("so_star(2n) needs an even argument 2n >= 8")
        l = m // 2
        _check_rank(l, f"so_star({m})")
        if l % 2 == 0:
            return f"so_star({m})", f"D{l}", list(range(1, l, 2)), []
        return f"so_star({m})", f"D{l}", list(range(1, l - 1, 2)), [(l - 1, l)]
    if name == "sp_r":
        (n,) = _ints(params, 1, "sp_r")
        if n < 2:
            raise OutOfRange("sp_r(n) needs n >= 2")
        _check_rank(n, f"sp_r({n})")
        return f"sp_r({n})", f"C{n}", [], []
    if name == "sp":
        p, q = sorted(_ints(params, 2, "sp"))
        if p < 1:
            raise OutOfRange("sp(p,q) needs p, q >= 1 (use compact(C..) for sp(n))")
        n = p + q
        _check_rank(n, f"sp({p},{q})")
        black = list(range(1, 2 * p, 2)) + list(range(2 * p + 1, n + 1))
        return f"sp({p},{q})", f"C{n}", black, []
    if name == "compact":
        letter, rank = _type_arg(params)
        return f"compact({letter}{rank})", f"{letter}{rank}", list(range(1, rank + 1)), []
    if name == "complex":
        letter, rank = _type_arg(params)
        arrows = [(i, i + rank) for i in range(1, rank + 1)]
        return f"complex({letter}{rank})", f"{letter}{rank}+{letter}{rank}", [], arrows
    if name == "ex":
        if len(params) != 1:
            raise OutOfRange("ex takes one label such as EII")
        label = str(params[0]).strip().upper()
        table = _exceptional_table()
        by_alias = {v[4]: k for k, v in table.items()}
        label = by_alias.get(str(params[0]).strip().lower(), label)
        if label not in table:
            raise UnknownForm(f"unknown exceptional label {params[0]!r}; known: {', '.join(table)}")
        letter, rank, black, arrows, _ = table[label]
        return f"ex({label})", f"{letter}{rank}", list(black), list(arrows)
    raise UnknownForm(f"unknown real form {name!r}; known families: {', '.join(FAMILIES)}")


@lru_cache(maxsize=None)
def _lookup_cached(name: str, params: tuple) -> SatakeDiagram:
    canon, type_string, black, arrows = _build_form(name, params)
    try:
        d = make_diagram(type_string, black, arrows, name=canon)
        build_conjugation(d)
    except (ValidationError, MalformedGraph) as exc:  # pragma: no cover - data integrity
        raise RuntimeError(f"catalog entry {canon} failed validation: {exc}") from exc
    return d


def catalog_lookup(name: str, params: Iterable = ()) -> SatakeDiagram:
    """Validated Satake diagram of a named real form.

    >>> d = catalog_lookup("su", (1, 3))
    >>> sorted(d.black), sorted(d.arrows)
    ([2], [(1, 3)])
    """
    params = tuple(params)
    if isinstance(params, tuple) and len(params) == 2 and name in ("su", "so", "sp"):
        params = tuple(sorted(_ints(params, 2, name)))
    return _lookup_cached(name, params)


def family_members(family: str, rank_max: int) -> list[tuple[tuple, SatakeDiagram]]:
    """All admissible parameter choices of ``family`` with rank at most ``rank_max``.

    Rank means the rank of the complexification.  Ordered by rank, then
    parameters.
    """
    out: list[tuple[tuple, SatakeDiagram]] = []
    top = min(rank_max, 2 * MAX_COMPONENT_RANK)
    if family == "su":
        for l in range(1, min(top, MAX_COMPONENT_RANK) + 1):
            for p in range(1, (l + 1) // 2 + 1):
                out.append(((p, l + 1 - p), catalog_lookup("su", (p, l + 1 - p))))
    elif family == "sl_r":
        out = [((n,), catalog_lookup("sl_r", (n,))) for n in range(2, min(top, MAX_COMPONENT_RANK) + 2)]
    elif family == "sl_h":
        out = [((m,), catalog_lookup("sl_h", (m,))) for m in range(1, 5) if 2 * m - 1 <= top]
    elif family == "so":
        for n in range(5, 2 * MAX_COMPONENT_RANK + 2):
            l = n // 2
            if l > top or (n % 2 == 0 and l < 4):
                continue
            for p in range(1, n // 2 + 1):
                out.append(((p, n - p), catalog_lookup("so", (p, n - p))))
        out.sort(key=lambda t: (t[1].rootsys.rank, t[0]))
    elif family == "so_star":
        out = [((2 * l,), catalog_lookup("so_star", (2 * l,))) for l in range(4, MAX_COMPONENT_RANK + 1) if l <= top]
    elif family == "sp_r":
        out = [((n,), catalog_lookup("sp_r", (n,))) for n in range(2, MAX_COMPONENT_RANK + 1) if n <= top]
    elif family == "sp":
        for n in range(2, MAX_COMPONENT_RANK + 1):
            if n > top:
                break
            for p in range(1, n // 2 + 1):
                out.append(((p, n - p), catalog_lookup("sp", (p, n - p))))
    elif family == "compact":
        out = [((f"{t}{r}",), catalog_lookup("compact", (f"{t}{r}",))) for t, r in _SIMPLE_TYPES if r <= top]
        out.sort(key=lambda t: (t[1].rootsys.rank, t[0]))
    elif family == "complex":
        out = [((f"{t}{r}",), catalog_lookup("complex", (f"{t}{r}",))) for t, r in _SIMPLE_TYPES if 2 * r <= top]
        out.sort(key=lambda t: (t[1].rootsys.rank, t[0]))
    elif family == "ex":
        table = _exceptional_table()
        out = [((k,), catalog_lookup("ex", (k,))) for k, v in table.items() if v[1] <= top]
        out.sort(key=lambda t: (t[1].rootsys.rank, t[0]))
    else:
        raise UnknownForm(f"unknown family {family!r}; known families: {', '.join(FAMILIES)}")
    return out


def catalog_forms(rank_max: int) -> list[SatakeDiagram]:
    """Every catalog diagram of rank at most ``rank_max``, sorted by name."""
    forms = [d for fam in FAMILIES for _, d in family_members(fam, rank_max)]
    return sorted(forms, key=lambda d: d.name)
