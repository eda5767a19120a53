"""Signed trees, signed degrees and degree sets.

A :class:`SignedTree` is an immutable tree on vertices ``0..n-1`` whose
edges each carry a :class:`Sign`.  Everything in this module is a pure
function of its arguments; builders that grow a tree append new vertex ids
at the end so that constructions are reproducible.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence


class TreeError(ValueError):
    """Raised when an edge list does not describe a tree."""


class InvalidDegreeSet(ValueError):
    """Raised when an operation receives a degree set it cannot realize."""


class Sign(enum.IntEnum):
    POS = 1
    NEG = -1

    def flip(self) -> "Sign":
        return Sign.NEG if self is Sign.POS else Sign.POS

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.POS else "-"

    @classmethod
    def parse(cls, text: str) -> "Sign":
        if text == "+":
            return cls.POS
        if text == "-":
            return cls.NEG
        raise ValueError(f"unknown sign {text!r}")


POS = Sign.POS
NEG = Sign.NEG


class DegreeSet:
    """A finite set of integers, kept sorted.

    ``positives`` are the members greater than 1, ``negatives`` the members
    less than -1 and ``others`` every member except 1 and -1.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int] = ()):
        object.__setattr__(self, "values", tuple(sorted({int(v) for v in values})))

    def __setattr__(self, name, value):
        raise AttributeError("DegreeSet is immutable")

    @classmethod
    def parse(cls, text: str) -> "DegreeSet":
        """Parse ``"1,-2,0"``; whitespace is ignored, duplicates are an error."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or any(p == "" for p in parts):
            raise ValueError(f"malformed degree set {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"malformed degree set {text!r}") from None
        if len(set(values)) != len(values):
            raise ValueError(f"duplicate values in degree set {text!r}")
        return cls(values)

    @property
    def positives(self) -> tuple[int, ...]:
        return tuple(v for v in self.values if v > 1)

    @property
    def negatives(self) -> tuple[int, ...]:
        return tuple(v for v in self.values if v < -1)

    @property
    def others(self) -> tuple[int, ...]:
        return tuple(v for v in self.values if v not in (1, -1))

    def __neg__(self) -> "DegreeSet":
        return DegreeSet(-v for v in self.values)

    def __or__(self, other: Iterable[int]) -> "DegreeSet":
        return DegreeSet((*self.values, *other))

    def __contains__(self, value: object) -> bool:
        return value in self.values

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegreeSet):
            return self.values == other.values
        if isinstance(other, (set, frozenset)):
            return set(self.values) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __lt__(self, other: "DegreeSet") -> bool:
        return (len(self), self.values) < (len(other), other.values)

    def issubset(self, other: "DegreeSet") -> bool:
        return set(self.values) <= set(other.values)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return "DegreeSet({" + ", ".join(str(v) for v in self.values) + "})"


@dataclass(frozen=True)
class CaterpillarSpec:
    """Internal degrees ``(n_1, ..., n_m)`` of a caterpillar's longest path."""

    spine_degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "spine_degrees", tuple(int(d) for d in self.spine_degrees))
        if not self.spine_degrees:
            raise ValueError("caterpillar needs at least one spine vertex")
        if any(d < 2 for d in self.spine_degrees):
            raise ValueError(f"spine degrees must be >= 2, got {self.spine_degrees}")


Edge = tuple[int, int, Sign]


@dataclass(frozen=True)
class SignedTree:
    """An immutable signed tree.

    Edges are stored with ``u < v`` in construction order.  Construction
    validates that the edges form a spanning tree on ``0..order-1``.
    """

    order: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        n = int(self.order)
        if n < 1:
            raise TreeError(f"order must be >= 1, got {n}")
        norm = []
        for edge in self.edges:
            u, v, s = edge
            u, v = int(u), int(v)
            s = Sign(s)
            if u == v:
                raise TreeError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            norm.append((min(u, v), max(u, v), s))
        if len({(u, v) for u, v, _ in norm}) != len(norm):
            raise TreeError("duplicate edge")
        if len(norm) != n - 1:
            raise TreeError(f"a tree on {n} vertices needs {n - 1} edges, got {len(norm)}")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "edges", tuple(norm))
        if not _connected(n, norm):
            raise TreeError("edge set is not connected (contains a cycle)")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int, Sign | int]], order: int | None = None) -> "SignedTree":
        edges = tuple(edges)
        if order is None:
            order = 1 + max((max(u, v) for u, v, _ in edges), default=0)
        return cls(order, edges)

    @classmethod
    def single_vertex(cls) -> "SignedTree":
        return cls(1, ())

    def adjacency(self) -> list[list[tuple[int, Sign]]]:
        adj: list[list[tuple[int, Sign]]] = [[] for _ in range(self.order)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def signed_degrees(self) -> list[int]:
        sdeg = [0] * self.order
        for u, v, s in self.edges:
            sdeg[u] += s
            sdeg[v] += s
        return sdeg

    def sign_of(self, u: int, v: int) -> Sign:
        key = (min(u, v), max(u, v))
        for a, b, s in self.edges:
            if (a, b) == key:
                return s
        raise KeyError(f"no edge between {u} and {v}")

    def has_edge(self, u: int, v: int) -> bool:
        key = (min(u, v), max(u, v))
        return any((a, b) == key for a, b, _ in self.edges)

    @property
    def negative_edges(self) -> list[Edge]:
        return [e for e in self.edges if e[2] is Sign.NEG]

    def __len__(self) -> int:
        return self.order


def _connected(n: int, edges: Sequence[tuple[int, int, Sign]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


# -- queries -----------------------------------------------------------------


def _check_vertex(T: SignedTree, v: int) -> None:
    if not 0 <= v < T.order:
        raise IndexError(f"vertex {v} out of range for a tree of order {T.order}")


def signed_degree(T: SignedTree, v: int) -> int:
    """Positive incident edges minus negative incident edges at ``v``."""
    _check_vertex(T, v)
    return sum(s for a, b, s in T.edges if v in (a, b))


def degree_set(T: SignedTree) -> DegreeSet:
    return DegreeSet(T.signed_degrees())


def _bfs(adj: list[list[tuple[int, Sign]]], start: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y, _ in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def eccentricities(T: SignedTree) -> list[int]:
    adj = T.adjacency()
    return [max(_bfs(adj, v)) for v in range(T.order)]


def diameter(T: SignedTree) -> int:
    """Longest path length, by a sweep from vertex 0 then from the farthest vertex."""
    if T.order == 1:
        return 0
    adj = T.adjacency()
    first = _bfs(adj, 0)
    far = first.index(max(first))
    return max(_bfs(adj, far))


def limiting_pendants(T: SignedTree) -> set[int]:
    """Leaves at the end of some longest path."""
    if T.order < 2:
        raise TreeError("limiting pendants need a tree of order >= 2")
    d = diameter(T)
    deg = T.degrees()
    ecc = eccentricities(T)
    return {v for v in range(T.order) if deg[v] == 1 and ecc[v] == d}


def path_between(T: SignedTree, u: int, w: int) -> list[int]:
    adj = T.adjacency()
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            break
        for y, _ in adj[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [w]
    while path[-1] != u:
        path.append(prev[path[-1]])
    return path[::-1]


# -- surgery -----------------------------------------------------------------


def transfer(T: SignedTree, u: int, v: int, w: int, sign: Sign | None = None) -> SignedTree:
    """Replace the edge ``uv`` by ``uw``.

    Requires the path from ``u`` to ``w`` to run through ``v``.  The moved
    edge keeps its sign unless ``sign`` is given.
    """
    for x in (u, v, w):
        _check_vertex(T, x)
    if len({u, v, w}) != 3:
        raise TreeError(f"transfer needs three distinct vertices, got {(u, v, w)}")
    if not T.has_edge(u, v):
        raise TreeError(f"transfer: {u}{v} is not an edge")
    path = path_between(T, u, w)
    if path[1] != v:
        raise TreeError(f"transfer: the path from {u} to {w} does not pass through {v}")
    old = T.sign_of(u, v)
    new_sign = old if sign is None else Sign(sign)
    key = (min(u, v), max(u, v))
    edges = [e for e in T.edges if (e[0], e[1]) != key]
    edges.append((u, w, new_sign))
    return SignedTree(T.order, tuple(edges))


def attach_leaves(T: SignedTree, v: int, count: int, sign: Sign) -> SignedTree:
    _check_vertex(T, v)
    if count < 0:
        raise ValueError("count must be non-negative")
    n = T.order
    new = tuple((v, n + i, Sign(sign)) for i in range(count))
    return SignedTree(n + count, T.edges + new)


def attach_signed_leaves(T: SignedTree, v: int, signs: Iterable[Sign]) -> SignedTree:
    """Attach one new leaf per entry of ``signs``."""
    _check_vertex(T, v)
    n = T.order
    new = tuple((v, n + i, Sign(s)) for i, s in enumerate(signs))
    return SignedTree(n + len(new), T.edges + new)


def negate_signs(T: SignedTree) -> SignedTree:
    return SignedTree(T.order, tuple((u, v, s.flip()) for u, v, s in T.edges))


def relabel(T: SignedTree, perm: Sequence[int]) -> SignedTree:
    """Rename vertex ``i`` to ``perm[i]``."""
    if sorted(perm) != list(range(T.order)):
        raise ValueError("perm must be a permutation of the vertex ids")
    return SignedTree(T.order, tuple((perm[u], perm[v], s) for u, v, s in T.edges))


# -- canonical form ----------------------------------------------------------


def centers(T: SignedTree) -> list[int]:
    """The one or two central vertices, found by peeling leaves."""
    n = T.order
    if n <= 2:
        return list(range(n))
    deg = T.degrees()
    adj = T.adjacency()
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for y, _ in adj[leaf]:
                deg[y] -= 1
                if deg[y] == 1:
                    nxt.append(y)
        layer = nxt
    return sorted(layer)


def _rooted_code(adj: list[list[tuple[int, Sign]]], root: int) -> str:
    order = [root]
    parent = {root: -1}
    for x in order:
        for y, _ in adj[x]:
            if y != parent[x]:
                parent[y] = x
                order.append(y)
    code: dict[int, str] = {}
    for x in reversed(order):
        kids = sorted(
            ("+" if s is Sign.POS else "-") + code[y] for y, s in adj[x] if y != parent[x]
        )
        code[x] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_key(T: SignedTree) -> bytes:
    """A key equal for two trees iff they are isomorphic with signs preserved.

    Roots at the center (or the smaller encoding of the two centers) and
    sorts child encodings, each prefixed by the sign of its parent edge.
    """
    adj = T.adjacency()
    code = min(_rooted_code(adj, c) for c in centers(T))
    return code.encode("ascii")


# -- builders ----------------------------------------------------------------


def build_star(leaf_count: int, sign: Sign = POS) -> SignedTree:
    """Center 0 joined to ``leaf_count`` leaves, all with the same sign."""
    if leaf_count < 1:
        raise ValueError("a star needs at least one leaf")
    return attach_leaves(SignedTree.single_vertex(), 0, leaf_count, sign)


SignRule = Callable[[tuple], Sign]


def build_caterpillar(spec: CaterpillarSpec | Sequence[int], sign_rule: SignRule | Sign = POS) -> SignedTree:
    """Caterpillar whose longest path ``v0 .. v(m+1)`` has the given internal degrees.

    Spine vertex ``i`` (1-based) gets id ``i``; the path ends are ``0`` and
    ``m + 1``.  ``sign_rule`` is either a fixed sign or a callable receiving
    ``("spine", j)`` for the spine edge ``v_j v_(j+1)`` or ``("leaf", i, k)``
    for the ``k``-th extra leaf at spine vertex ``i``.
    """
    if not isinstance(spec, CaterpillarSpec):
        spec = CaterpillarSpec(tuple(spec))
    rule = sign_rule if callable(sign_rule) else (lambda _slot, _s=Sign(sign_rule): _s)
    m = len(spec.spine_degrees)
    edges = [(j, j + 1, Sign(rule(("spine", j)))) for j in range(m + 1)]
    nxt = m + 2
    for i, d in enumerate(spec.spine_degrees, start=1):
        for k in range(d - 2):
            edges.append((i, nxt, Sign(rule(("leaf", i, k)))))
            nxt += 1
    return SignedTree(nxt, tuple(edges))


def pendants(T: SignedTree) -> list[int]:
    return [v for v, d in enumerate(T.degrees()) if d == 1]
