"""Unlabeled free trees, one per isomorphism class.

Two independent generators:

* ``wrom_free_trees`` walks canonical level sequences of center-rooted trees
  (Wright, Richmond, Odlyzko & McKay, 1986), constant amortized time per tree.
* ``prufer_free_trees`` decodes Prüfer sequences into labeled trees and keeps
  one representative per canonical key.  Slow; used as a cross-check.

A skeleton is a tuple of ``(u, v)`` pairs with ``u < v`` on vertices
``0..n-1``.
"""
from __future__ import annotations

import heapq
import itertools
from typing import Iterator

from .core import POS, SignedTree, canonical_key

Skeleton = tuple[tuple[int, int], ...]

MAX_WROM_ORDER = 20
MAX_PRUFER_ORDER = 10


def _levels_to_skeleton(levels: list[int]) -> Skeleton:
    edges = []
    last_at_depth: dict[int, int] = {}
    for i, depth in enumerate(levels):
        if depth > 0:
            parent = last_at_depth[depth - 1]
            edges.append((parent, i))
        last_at_depth[depth] = i
    return tuple(edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    # Beyer-Hedetniemi successor, optionally restarting at position p.
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    # First principal subtree (re-based to depth 0) and the remainder.
    ones = [i for i, d in enumerate(levels) if d == 1]
    m = ones[1] if len(ones) > 1 else len(levels)
    left = [d - 1 for d in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _fix_center(levels: list[int]) -> list[int]:
    # Skip ahead when the first principal subtree is taller than (or, at equal
    # height, larger than) the rest, so the root stays a center.
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def wrom_free_trees(n: int) -> Iterator[Skeleton]:
    if not 1 <= n <= MAX_WROM_ORDER:
        raise ValueError(f"order {n} outside supported range 1..{MAX_WROM_ORDER}")
    if n <= 2:
        yield ((0, 1),) if n == 2 else ()
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _fix_center(levels)
        yield _levels_to_skeleton(levels)
        levels = _next_rooted(levels)


def prufer_decode(seq: tuple[int, ...] | list[int], n: int) -> Skeleton:
    """Labeled tree on ``0..n-1`` with the given Prüfer sequence."""
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return tuple(edges)


def prufer_labeled_trees(n: int) -> Iterator[Skeleton]:
    """All ``n ** (n - 2)`` labeled trees on ``n`` vertices."""
    if n == 1:
        yield ()
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def _multiset_permutations(counts: list[int]) -> Iterator[tuple[int, ...]]:
    total = sum(counts)
    buf = [0] * total

    def rec(pos):
        if pos == total:
            yield tuple(buf)
            return
        for label, c in enumerate(counts):
            if c:
                counts[label] -= 1
                buf[pos] = label
                yield from rec(pos + 1)
                counts[label] += 1

    yield from rec(0)


def _partitions(total: int, max_part: int, max_len: int) -> Iterator[list[int]]:
    if total == 0:
        yield []
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            yield [first, *rest]


def _degree_sorted_sequences(n: int) -> Iterator[tuple[int, ...]]:
    # Sequences whose label multiplicities are non-increasing in the label.
    # Relabeling by decreasing degree puts every tree in this family.
    for part in _partitions(n - 2, n - 2, n):
        yield from _multiset_permutations(part + [0] * (n - len(part)))


def prufer_free_trees(n: int, reduced: bool = True) -> list[Skeleton]:
    """One labeled representative per unlabeled class, via canonical dedup."""
    if not 1 <= n <= MAX_PRUFER_ORDER:
        raise ValueError(f"order {n} outside supported range 1..{MAX_PRUFER_ORDER}")
    if n <= 2:
        return [((0, 1),)] if n == 2 else [()]
    seqs = _degree_sorted_sequences(n) if reduced else itertools.product(range(n), repeat=n - 2)
    seen: dict[bytes, Skeleton] = {}
    for seq in seqs:
        skel = prufer_decode(seq, n)
        key = skeleton_key(skel, n)
        seen.setdefault(key, skel)
    return list(seen.values())


def skeleton_tree(skel: Skeleton, n: int, mask: int = 0) -> SignedTree:
    """Signed tree on ``skel``; bit ``j`` of ``mask`` makes edge ``j`` negative."""
    return SignedTree(n, tuple((u, v, -1 if (mask >> j) & 1 else 1) for j, (u, v) in enumerate(skel)))


def skeleton_key(skel: Skeleton, n: int) -> bytes:
    return canonical_key(SignedTree(n, tuple((u, v, POS) for u, v in skel)))


def free_trees(n: int, backend: str = "wrom") -> list[Skeleton]:
    if backend == "wrom":
        return list(wrom_free_trees(n))
    if backend == "prufer":
        return prufer_free_trees(n)
    raise ValueError(f"unknown backend {backend!r}")
