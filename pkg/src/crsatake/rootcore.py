"""Abstract reduced root systems in simple-root coordinates.

Roots are plain integer tuples over the simple basis.  A :class:`DynkinGraph`
carries the Cartan matrix together with the user-facing node labels, so that
subdiagrams cut out of a larger diagram keep the numbering of their parent.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "MalformedGraph",
    "Root",
    "DynkinGraph",
    "RootSystem",
    "build_root_system",
    "support",
    "reflect",
    "longest_involution",
    "root_closure",
    "MAX_COMPONENT_RANK",
]

Root = tuple  # tuple[int, ...] of simple-root coordinates

MAX_COMPONENT_RANK = 8

# number of roots of each simple type, used to name components
_ROOT_COUNT = {
    "A": lambda l: l * (l + 1),
    "B": lambda l: 2 * l * l,
    "C": lambda l: 2 * l * l,
    "D": lambda l: 2 * l * (l - 1),
}
_EXCEPTIONAL_COUNT = {"G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240}


class MalformedGraph(ValueError):
    """The graph is not a disjoint union of finite-type Dynkin diagrams."""


def _simple_cartan(letter: str, rank: int) -> np.ndarray:
    """Cartan matrix ``A[i, j] = <alpha_i, alpha_j^vee>`` in Bourbaki numbering."""
    letter = letter.upper()
    A = 2 * np.eye(rank, dtype=np.int64)

    def link(i, j, mult=1, shorter=None):
        # i, j are 1-based; for mult > 1 ``shorter`` names the short end
        i, j = i - 1, j - 1
        if mult == 1:
            A[i, j] = A[j, i] = -1
            return
        s = shorter - 1
        l = j if s == i else i
        A[l, s] = -mult
        A[s, l] = -1

    if letter == "A" and rank >= 1:
        for i in range(1, rank):
            link(i, i + 1)
    elif letter == "B" and rank >= 2:
        for i in range(1, rank - 1):
            link(i, i + 1)
        link(rank - 1, rank, 2, shorter=rank)
    elif letter == "C" and rank >= 2:
        for i in range(1, rank - 1):
            link(i, i + 1)
        link(rank - 1, rank, 2, shorter=rank - 1)
    elif letter == "D" and rank >= 4:
        for i in range(1, rank - 1):
            link(i, i + 1)
        link(rank - 2, rank)
    elif letter == "E" and rank in (6, 7, 8):
        link(1, 3)
        link(2, 4)
        for i in range(3, rank):
            link(i, i + 1)
    elif letter == "F" and rank == 4:
        link(1, 2)
        link(2, 3, 2, shorter=3)
        link(3, 4)
    elif letter == "G" and rank == 2:
        link(1, 2, 3, shorter=1)
    else:
        raise MalformedGraph(f"no simple Dynkin type {letter}{rank}")
    return A


_TYPE_TOKEN = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_type(type_string: str) -> list[tuple[str, int]]:
    """Split ``"A3+B2"`` (or ``"A3xB2"``) into ``[("A", 3), ("B", 2)]``."""
    parts = [p.strip() for p in re.split(r"[+x×]", type_string) if p.strip()]
    if not parts:
        raise MalformedGraph(f"empty type string {type_string!r}")
    out = []
    for p in parts:
        m = _TYPE_TOKEN.match(p)
        if not m:
            raise MalformedGraph(f"cannot read Cartan type {p!r}")
        out.append((m.group(1).upper(), int(m.group(2))))
    return out


@dataclass(frozen=True)
class DynkinGraph:
    """Cartan matrix plus node labels.

    ``cartan[i][j] = <alpha_i, alpha_j^vee>``; row/column ``i`` belongs to the
    node labelled ``labels[i]``.  Labels are positive integers in increasing
    order.
    """

    cartan: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        _check_cartan(self.cartan, self.labels)

    @classmethod
    def from_type(cls, type_string: str, rank: int | None = None) -> "DynkinGraph":
        """Build from ``"A3"``, ``"E6+A1"`` or ``("A", 3)``-style input.

        Components are numbered consecutively, each in Bourbaki order.
        """
        if rank is not None and len(type_string) == 1 and type_string.isalpha():
            pieces = [(type_string.upper(), int(rank))]
        else:
            pieces = parse_type(type_string)
            if rank is not None and sum(r for _, r in pieces) != rank:
                raise MalformedGraph(f"type {type_string} does not have rank {rank}")
        blocks = [_simple_cartan(t, r) for t, r in pieces]
        n = sum(b.shape[0] for b in blocks)
        A = np.zeros((n, n), dtype=np.int64)
        pos = 0
        for b in blocks:
            k = b.shape[0]
            A[pos:pos + k, pos:pos + k] = b
            pos += k
        return cls(_as_tuple(A), tuple(range(1, n + 1)))

    @classmethod
    def from_edges(cls, rank: int, edges: Iterable[tuple]) -> "DynkinGraph":
        """Build from ``(i, j, multiplicity, shorter)`` edges on nodes ``1..rank``.

        ``shorter`` is the endpoint carrying the shorter root and is ignored
        for simple edges.
        """
        A = 2 * np.eye(rank, dtype=np.int64)
        for e in edges:
            i, j, mult = e[0], e[1], (e[2] if len(e) > 2 else 1)
            if not (1 <= i <= rank and 1 <= j <= rank) or i == j:
                raise MalformedGraph(f"bad edge {e}")
            if mult == 1:
                A[i - 1, j - 1] = A[j - 1, i - 1] = -1
                continue
            if len(e) < 4 or e[3] not in (i, j):
                raise MalformedGraph(f"edge {e} needs the short endpoint")
            s = e[3]
            l = j if s == i else i
            A[l - 1, s - 1] = -mult
            A[s - 1, l - 1] = -1
        return cls(_as_tuple(A), tuple(range(1, rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.cartan, dtype=np.int64).reshape(self.rank, self.rank)

    def index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"node {label} not in diagram") from None

    @property
    def edges(self) -> list[tuple[int, int, int, int | None]]:
        """``(i, j, multiplicity, shorter)`` over labels, with ``i < j``."""
        out = []
        for a in range(self.rank):
            for b in range(a + 1, self.rank):
                x, y = self.cartan[a][b], self.cartan[b][a]
                if x == 0:
                    continue
                mult = x * y
                shorter = None
                if mult > 1:
                    # |<long, short^vee>| > 1
                    shorter = self.labels[b] if abs(x) > 1 else self.labels[a]
                out.append((self.labels[a], self.labels[b], mult, shorter))
        return out

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted label tuples, ordered by first label."""
        seen: set[int] = set()
        comps = []
        for start in range(self.rank):
            if start in seen:
                continue
            comp, queue = [], deque([start])
            seen.add(start)
            while queue:
                a = queue.popleft()
                comp.append(a)
                for b in range(self.rank):
                    if b not in seen and self.cartan[a][b] != 0:
                        seen.add(b)
                        queue.append(b)
            comps.append(tuple(sorted(self.labels[a] for a in comp)))
        return sorted(comps)

    def restrict(self, nodes: Iterable[int]) -> "DynkinGraph":
        """Induced subgraph on ``nodes`` (labels are kept)."""
        keep = sorted(set(nodes))
        idx = [self.index(l) for l in keep]
        sub = tuple(tuple(self.cartan[a][b] for b in idx) for a in idx)
        return DynkinGraph(sub, tuple(keep))

    def type_string(self) -> str:
        """Cartan type such as ``"A3"`` or ``"A1+A1"``; ``""`` for rank 0."""
        names = []
        for comp in self.components():
            names.append(_classify_component(self.restrict(comp)))
        return "+".join(names)

    def is_standard(self) -> bool:
        """True when the graph equals ``from_type(self.type_string())``."""
        if self.rank == 0:
            return True
        try:
            ref = DynkinGraph.from_type(self.type_string())
        except MalformedGraph:
            return False
        return ref == self


def _as_tuple(A: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in A)


def _symmetrizer(A: np.ndarray) -> np.ndarray:
    """Half squared lengths ``d`` with ``A[i, j] * d[j]`` symmetric."""
    n = A.shape[0]
    d = np.zeros(n)
    for start in range(n):
        if d[start]:
            continue
        d[start] = 1.0
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if A[i, j] != 0 and j != i:
                    # A[i,j] d[j] = A[j,i] d[i]
                    val = A[j, i] * d[i] / A[i, j]
                    if d[j] == 0:
                        d[j] = val
                        queue.append(j)
                    elif not np.isclose(d[j], val):
                        raise MalformedGraph("Cartan matrix is not symmetrizable")
    return d


def _check_cartan(cartan, labels) -> None:
    n = len(labels)
    if len(cartan) != n or any(len(r) != n for r in cartan):
        raise MalformedGraph("Cartan matrix shape does not match labels")
    if list(labels) != sorted(set(labels)) or any(l < 1 for l in labels):
        raise MalformedGraph("labels must be increasing positive integers")
    if n == 0:
        return
    A = np.array(cartan, dtype=np.int64)
    if not np.all(np.diag(A) == 2):
        raise MalformedGraph("Cartan matrix needs 2 on the diagonal")
    for i in range(n):
        for j in range(i + 1, n):
            x, y = A[i, j], A[j, i]
            if (x == 0) != (y == 0) or x > 0 or y > 0:
                raise MalformedGraph(f"bad off-diagonal pair at nodes {labels[i]}, {labels[j]}")
            if x * y not in (0, 1, 2, 3) or min(x, y) < -3:
                raise MalformedGraph(f"bad bond between nodes {labels[i]}, {labels[j]}")
    d = _symmetrizer(A)
    G = A * d[None, :]
    if np.min(np.linalg.eigvalsh((G + G.T) / 2)) <= 1e-9:
        raise MalformedGraph("Cartan matrix is not of finite type")


def _classify_component(g: DynkinGraph) -> str:
    l = g.rank
    if l > MAX_COMPONENT_RANK:
        raise MalformedGraph(f"component rank {l} exceeds the supported bound {MAX_COMPONENT_RANK}")
    A = g.matrix
    mults = [e[2] for e in g.edges]
    top = max(mults, default=1)
    count = len(_generate_roots(A)) if l else 0
    if top == 3:
        return "G2"
    if top == 2:
        if count == 48 and l == 4:
            return "F4"
        # B: a single short simple root; C: a single long one (B2 = C2)
        d = _symmetrizer(A)
        if l == 2:
            return "B2" if d[1] < d[0] else "C2"
        n_short = int(np.sum(np.isclose(d, d.min())))
        return f"B{l}" if n_short == 1 else f"C{l}"
    for name, cnt in _EXCEPTIONAL_COUNT.items():
        if name[0] == "E" and cnt == count and int(name[1]) == l:
            return name
    if count == _ROOT_COUNT["A"](l):
        return f"A{l}"
    if count == _ROOT_COUNT["D"](l):
        return f"D{l}"
    raise MalformedGraph(f"component with {count} roots matches no simple type")


def _generate_roots(A: np.ndarray) -> list[tuple[int, ...]]:
    """Close the simple roots under all simple reflections (breadth first)."""
    n = A.shape[0]
    start = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    seen = set(start)
    queue = deque(start)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            c = sum(beta[j] * int(A[j, i]) for j in range(n))
            if c == 0:
                continue
            img = list(beta)
            img[i] -= c
            img = tuple(img)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return sorted(seen)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A reduced root system with the positive system fixed by the simple basis.

    Instances are immutable; ``_cache`` only memoizes pure derived data.
    """

    graph: DynkinGraph
    all_roots: frozenset
    positive: frozenset
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.graph.rank

    @property
    def labels(self) -> tuple[int, ...]:
        return self.graph.labels

    @property
    def cartan(self) -> np.ndarray:
        return self.graph.matrix

    @property
    def negative(self) -> frozenset:
        return self.all_roots - self.positive

    def simple(self, label: int) -> Root:
        i = self.graph.index(label)
        return tuple(int(k == i) for k in range(self.rank))

    def simple_roots(self) -> list[Root]:
        return [self.simple(l) for l in self.labels]

    def pairing(self, beta: Sequence[int], label: int) -> int:
        """Cartan integer ``<beta, alpha_label^vee>``."""
        i = self.graph.index(label)
        A = self.graph.cartan
        return sum(b * A[j][i] for j, b in enumerate(beta))

    def apply(self, M: np.ndarray, beta: Sequence[int]) -> Root:
        """Image of ``beta`` under a lattice map stored row-wise (``beta @ M``)."""
        return tuple(int(x) for x in np.asarray(beta, dtype=np.int64) @ M)

    def roots_in(self, nodes: Iterable[int]) -> frozenset:
        """Roots whose support lies inside ``nodes``."""
        nodes = set(nodes)
        return frozenset(b for b in self.all_roots if support(self, b) <= nodes)

    def gram(self) -> np.ndarray:
        """Invariant form on simple roots, normalized per component."""
        A = self.cartan
        if self.rank == 0:
            return np.zeros((0, 0))
        d = _symmetrizer(A)
        return A * d[None, :]

    def __repr__(self):
        return f"RootSystem({self.graph.type_string() or 'empty'}, labels={list(self.labels)})"

    def highest_root(self) -> Root:
        return max(self.positive, key=sum)


def build_root_system(graph: DynkinGraph) -> RootSystem:
    """Generate every root of ``graph`` by reflection closure of the simple roots."""
    if graph.rank:
        for comp in graph.components():
            # also rejects oversized components
            _classify_component(graph.restrict(comp))
    roots = frozenset(_generate_roots(graph.matrix)) if graph.rank else frozenset()
    positive = frozenset(b for b in roots if all(x >= 0 for x in b))
    return RootSystem(graph, roots, positive)


def support(rs: RootSystem, beta: Sequence[int]) -> frozenset:
    """Labels of the simple roots with a nonzero coefficient in ``beta``."""
    return frozenset(rs.labels[i] for i, x in enumerate(beta) if x)


def reflect(rs: RootSystem, beta: Sequence[int], label: int) -> Root:
    """Simple reflection ``s_i(beta) = beta - <beta, alpha_i^vee> alpha_i``."""
    i = rs.graph.index(label)
    out = list(beta)
    out[i] -= rs.pairing(beta, label)
    return tuple(out)


def _reflection_matrix(rs: RootSystem, i: int) -> np.ndarray:
    S = np.eye(rs.rank, dtype=np.int64)
    S[:, i] -= rs.cartan[:, i]
    return S


def longest_involution(rs: RootSystem, black: Iterable[int]) -> np.ndarray:
    """Matrix of the longest element of the Weyl group generated by ``black``.

    Acts on row vectors: ``w0(beta) = beta @ M``.  Built by appending simple
    reflections while some black simple root still maps to a positive root;
    each step raises the length by one, so the word is reduced and the loop
    ends at the longest element.
    """
    key = ("w0", frozenset(black))
    cached = rs._cache.get(key)
    if cached is not None:
        return cached
    idx = sorted(rs.graph.index(l) for l in key[1])
    W = np.eye(rs.rank, dtype=np.int64)
    word = []
    while True:
        for i in idx:
            if np.all(W[i] >= 0):
                W = _reflection_matrix(rs, i) @ W
                word.append(rs.labels[i])
                break
        else:
            break
    W.setflags(write=False)
    rs._cache[key] = W
    rs._cache[("w0word", key[1])] = tuple(word)
    return W


def longest_word(rs: RootSystem, black: Iterable[int]) -> tuple[int, ...]:
    """Reduced word (labels, applied right to left) found by :func:`longest_involution`."""
    black = frozenset(black)
    longest_involution(rs, black)
    return rs._cache[("w0word", black)]


def root_closure(rs: RootSystem, roots: Iterable[Root]) -> frozenset:
    """Smallest superset of ``roots`` closed under sums that are roots."""
    closed = set(roots)
    frontier = set(closed)
    R = rs.all_roots
    while frontier:
        new = set()
        for a in frontier:
            for b in closed:
                s = tuple(x + y for x, y in zip(a, b))
                if s in R and s not in closed:
                    new.add(s)
        closed |= new
        frontier = new
    return frozenset(closed)
