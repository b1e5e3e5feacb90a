"""The Ghosh-Pal greedy matching, a counterexample family, and an audit.

The greedy sorts trapezoids by right spread f(i) = max(b(i), d(i)), takes
the remaining trapezoid with smallest f and pairs it with the first
remaining trapezoid after it (in f order) that it intersects, or discards
it when there is none.  It always returns a maximal matching, but not
always a maximum one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Trapezoid, TrapezoidDiagram, adjacent, to_graph
from .oracle import MAX_MATCHING_N, SizeLimitError, brute_max_matching

# Smallest failing configuration on rank labels, indexed in f order.
# Edges: 1-2, 1-3, 2-3, 2-4, 3-5, 4-5, 5-6.  The greedy takes (1, 2) and
# (3, 5), stranding 4 and 6; (1, 3), (2, 4), (5, 6) is perfect.
GADGET: tuple[Trapezoid, ...] = (
    Trapezoid(2, 5, 3, 4),
    Trapezoid(1, 7, 1, 2),
    Trapezoid(3, 4, 7, 8),
    Trapezoid(6, 8, 9, 10),
    Trapezoid(10, 11, 5, 6),
    Trapezoid(9, 12, 11, 12),
)
GADGET_SPAN = 2 * len(GADGET)


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    @property
    def cardinality(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}


@dataclass(frozen=True)
class AuditReport:
    greedy: Matching
    exact: Matching

    @property
    def gap(self) -> int:
        return self.exact.cardinality - self.greedy.cardinality


def right_spread(t: Trapezoid) -> int:
    return max(t.b, t.d)


def ghosh_pal_matching(d: TrapezoidDiagram) -> Matching:
    # Ties in f go to the smaller index.
    order = sorted(range(1, d.n + 1), key=lambda i: (right_spread(d[i]), i))
    alive = order
    edges = []
    while len(alive) > 1:
        i, rest = alive[0], alive[1:]
        for pos, j in enumerate(rest):
            if adjacent(d, i, j):
                edges.append((i, j))
                del rest[pos]
                break
        alive = rest
    return Matching(tuple(edges))


def is_maximal(d: TrapezoidDiagram, m: Matching) -> bool:
    """No two unmatched trapezoids intersect."""
    used = m.vertices()
    free = [i for i in range(1, d.n + 1) if i not in used]
    return not any(
        adjacent(d, u, v) for k, u in enumerate(free) for v in free[k + 1 :]
    )


def _components(graph: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(graph):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in graph[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def exact_matching(d: TrapezoidDiagram, limit: int = MAX_MATCHING_N) -> Matching:
    """Maximum matching, solved exhaustively per connected component.

    ``limit`` bounds the component size, so diagrams made of many small
    separated pieces stay tractable.
    """
    graph = to_graph(d)
    edges: list[tuple[int, int]] = []
    for comp in _components(graph):
        if len(comp) < 2:
            continue
        if len(comp) > limit:
            raise SizeLimitError(
                f"exact matching limited to components of <= {limit} trapezoids, "
                f"found one with {len(comp)}"
            )
        sub = {v: graph[v] for v in comp}
        edges.extend(brute_max_matching(sub, limit))
    return Matching(tuple(sorted(tuple(sorted(e)) for e in edges)))


def audit(d: TrapezoidDiagram, limit: int = MAX_MATCHING_N) -> AuditReport:
    return AuditReport(ghosh_pal_matching(d), exact_matching(d, limit))


def counterexample(k: int) -> TrapezoidDiagram:
    """The failing gadget with k separated copies on each side.

    Copies are shifted by 12 labels on both lines, so every trapezoid of
    one copy lies left of every trapezoid of the next.  The result has
    6 * (2k + 1) trapezoids and the greedy loses one edge per copy.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    rows = []
    for copy in range(2 * k + 1):
        shift = copy * GADGET_SPAN
        rows.extend((t.a + shift, t.b + shift, t.c + shift, t.d + shift) for t in GADGET)
    return TrapezoidDiagram(rows)
