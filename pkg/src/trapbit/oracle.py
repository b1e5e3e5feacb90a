"""Exhaustive ground truth on explicit graphs.

Everything here is deliberately naive: subset enumeration over all 2^n
vertex sets and a branch-and-bound matcher.  Graphs are adjacency dicts
``{v: set(neighbours)}`` as produced by :func:`trapbit.diagram.to_graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

MAX_ENUMERATE_N = 22
MAX_MATCHING_N = 20

Graph = Mapping[int, set]


class SizeLimitError(ValueError):
    """The instance is larger than an exhaustive oracle will accept."""


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    per_size_counts: tuple[int, ...]  # independent sets by cardinality
    alpha: int
    max_is_count: int
    vc_count: int
    min_vc_size: int
    min_vc_count: int

    @property
    def is_count(self) -> int:
        """Nonempty independent sets."""
        return sum(self.per_size_counts) - 1


def _edges(g: Graph) -> tuple[list, list[tuple[int, int]]]:
    verts = sorted(g)
    pos = {v: k for k, v in enumerate(verts)}
    edges = sorted({(min(pos[u], pos[v]), max(pos[u], pos[v])) for u in g for v in g[u]})
    return verts, edges


def brute_enumerate(g: Graph, limit: int = MAX_ENUMERATE_N) -> EnumerationResult:
    """Classify every vertex subset as independent and/or covering."""
    verts, edges = _edges(g)
    n = len(verts)
    if n > limit:
        raise SizeLimitError(f"exhaustive enumeration limited to n <= {limit}, got {n}")
    masks = np.arange(1 << n, dtype=np.int64)
    independent = np.ones(1 << n, dtype=bool)
    covering = np.ones(1 << n, dtype=bool)
    for u, v in edges:
        in_u = (masks >> u) & 1 == 1
        in_v = (masks >> v) & 1 == 1
        independent &= ~(in_u & in_v)
        covering &= in_u | in_v
    sizes = np.zeros(1 << n, dtype=np.int64)
    for k in range(n):
        sizes += (masks >> k) & 1
    per_size = np.bincount(sizes[independent], minlength=n + 1)
    per_size_counts = tuple(int(x) for x in per_size)
    alpha = max(k for k, x in enumerate(per_size_counts) if x > 0)
    cover_sizes = sizes[covering]
    min_vc_size = int(cover_sizes.min())
    return EnumerationResult(
        n=n,
        per_size_counts=per_size_counts,
        alpha=alpha,
        max_is_count=per_size_counts[alpha],
        vc_count=int(covering.sum()),
        min_vc_size=min_vc_size,
        min_vc_count=int((cover_sizes == min_vc_size).sum()),
    )


def is_matching(g: Graph, edges) -> bool:
    seen = set()
    for u, v in edges:
        if v not in g[u] or u in seen or v in seen or u == v:
            return False
        seen.update((u, v))
    return True


def brute_max_matching(g: Graph, limit: int = MAX_MATCHING_N) -> list[tuple[int, int]]:
    """Maximum-cardinality matching by branch and bound.

    Branch on the smallest free vertex: leave it unmatched, or match it to
    each free neighbour.  A branch is cut when the current size plus half
    the free vertices cannot beat the best found.
    """
    verts = sorted(g)
    n = len(verts)
    if n > limit:
        raise SizeLimitError(f"exact matching limited to n <= {limit}, got {n}")
    best: list[tuple[int, int]] = []
    current: list[tuple[int, int]] = []
    free = set(verts)
    ceiling = n // 2

    def search(undecided: list[int]) -> bool:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
            if len(best) == ceiling:
                return True
        open_ = [v for v in undecided if v in free]
        if not open_ or len(current) + len(open_) // 2 <= len(best):
            return False
        v, rest = open_[0], open_[1:]
        free.discard(v)
        for u in sorted(g[v]):
            if u in free:
                free.discard(u)
                current.append((v, u))
                done = search(rest)
                current.pop()
                free.add(u)
                if done:
                    free.add(v)
                    return True
        # v stays unmatched
        done = search(rest)
        free.add(v)
        return done

    search(verts)
    return best


def has_augmenting_path(g: Graph, matching) -> bool:
    """Exhaustive search for an alternating path between two free vertices."""
    mate: dict[int, int] = {}
    for u, v in matching:
        mate[u] = v
        mate[v] = u
    free = [v for v in g if v not in mate]

    def extend(v: int, visited: set) -> bool:
        # v was reached by a non-matching edge
        for u in g[v]:
            if u in visited:
                continue
            if u not in mate:
                return True
            w = mate[u]
            if w in visited:
                continue
            visited |= {u, w}
            if extend(w, visited):
                return True
            visited -= {u, w}
        return False

    for s in free:
        if extend(s, {s}):
            return True
    return False


def brute_lemma_split(g: Graph, v: int) -> tuple[dict, dict]:
    """The graphs G - v and G - v - N(v) used by the vertex-cover recursion."""
    drop_one = {u: set(nb) - {v} for u, nb in g.items() if u != v}
    gone = set(g[v]) | {v}
    drop_all = {u: set(nb) - gone for u, nb in g.items() if u not in gone}
    return drop_one, drop_all


def vc_count(g: Graph, limit: Optional[int] = None) -> int:
    return brute_enumerate(g, limit or MAX_ENUMERATE_N).vc_count
