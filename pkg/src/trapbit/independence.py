"""Independent sets of trapezoid graphs via left-to-right sweeps.

Independent sets of a trapezoid graph are exactly the chains of the
"lies left of" order, so every quantity here is a chain count.  The sweep
walks the upper coordinates 1..2n.  A trapezoid is *queried* when the sweep
reaches its upper-left corner a(i) (everything already inserted has
b(k) < a(i); a prefix query at c(i) keeps those with d(k) < c(i)) and
*inserted* at its lower-right coordinate d(i) when the sweep reaches b(i).

Trapezoid 0 and n+1 are the usual sentinels.  They never occupy a tree
slot: trapezoid 0 is folded into every query as the implicit predecessor,
trapezoid n+1 is resolved after the sweep from the whole tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .diagram import AugmentedDiagram, TrapezoidDiagram, as_augmented
from .fenwick import MaxFenwick, SumFenwick


@dataclass
class SweepState:
    """Result of the max-independent-set sweep.

    ``max_ind[i]`` is the largest independent set among trapezoids left of
    or equal to T(i) that contains T(i); ``pred[i]`` is the predecessor that
    attains it (smallest index on ties, 0 for the sentinel).
    ``levels[k]`` (k = 1..alpha) lists the trapezoids with max_ind k in
    order of a(i); ``levels_by_b[k]`` is the same set in order of b(i).
    """

    n: int
    max_ind: list[int]
    pred: list[int]
    levels: list[list[int]] = field(repr=False)
    levels_by_b: list[list[int]] = field(repr=False)

    @property
    def alpha(self) -> int:
        return self.max_ind[self.n + 1] - 1


@dataclass
class ReuseStats:
    """Per-trapezoid insert/remove counters for the level-by-level count."""

    inserted: list[int]
    removed: list[int]
    resets: int = 0


def sweep(d: TrapezoidDiagram | AugmentedDiagram, _fault: bool = False) -> SweepState:
    """O(n log n) sweep filling ``max_ind`` and predecessor links.

    The max tree stores packed keys ``value * m + (m - 1 - index)`` with
    m = n + 2, so one integer comparison prefers the larger value and then
    the smaller trapezoid index.  ``_fault`` is a test-only hook that
    queries at d(i) instead of c(i).
    """
    aug = as_augmented(d)
    n = aug.n
    max_ind = [0] * (n + 2)
    pred = [0] * (n + 2)
    if n == 0:
        max_ind[1] = 1
        return SweepState(0, max_ind, pred, [[]], [[]])
    a, c, dd, ui = aug.a, aug.c, aug.d, aug.upper_index
    query_at = dd if _fault else c
    m = n + 2
    tree = MaxFenwick(2 * n, sentinel=-1)
    for j in range(1, 2 * n + 1):
        i = ui[j]
        if a[i] == j:
            key = tree.prefix_max(query_at[i])
            if key < 0:
                max_ind[i] = 1
            else:
                max_ind[i] = key // m + 1
                pred[i] = m - 1 - key % m
        else:
            tree.raise_to(dd[i], max_ind[i] * m + (m - 1 - i))
    key = tree.prefix_max(2 * n)
    max_ind[n + 1] = key // m + 1
    pred[n + 1] = m - 1 - key % m

    alpha = max_ind[n + 1] - 1
    levels: list[list[int]] = [[] for _ in range(alpha + 1)]
    levels_by_b: list[list[int]] = [[] for _ in range(alpha + 1)]
    for j in range(1, 2 * n + 1):
        i = ui[j]
        if a[i] == j:
            levels[max_ind[i]].append(i)
        else:
            levels_by_b[max_ind[i]].append(i)
    return SweepState(n, max_ind, pred, levels, levels_by_b)


def max_is_size(d: TrapezoidDiagram | AugmentedDiagram) -> int:
    """Independence number alpha(G)."""
    return sweep(d).alpha


def max_is_witness(
    d: TrapezoidDiagram | AugmentedDiagram, state: Optional[SweepState] = None
) -> list[int]:
    """A maximum independent set, listed left to right."""
    if state is None:
        state = sweep(d)
    out = []
    i = state.pred[state.n + 1]
    while i != 0:
        out.append(i)
        i = state.pred[i]
    out.reverse()
    return out


def count_independent_sets(
    d: TrapezoidDiagram | AugmentedDiagram, include_empty: bool = False
) -> int:
    """Number of nonempty independent sets (plus one with ``include_empty``).

    num_ind(i) counts chains ending at T(i); it is one (the sentinel alone
    before T(i)) plus the sum over inserted trapezoids left of T(i).  The
    answer num_ind(n+1) - 1 is the sum over every real trapezoid.
    """
    aug = as_augmented(d)
    n = aug.n
    if n == 0:
        return 1 if include_empty else 0
    a, c, dd, ui = aug.a, aug.c, aug.d, aug.upper_index
    num = [0] * (n + 2)
    tree = SumFenwick(2 * n)
    for j in range(1, 2 * n + 1):
        i = ui[j]
        if a[i] == j:
            num[i] = 1 + tree.prefix_sum(c[i])
        else:
            tree.update(dd[i], num[i])
    total = tree.total()
    return total + 1 if include_empty else total


def count_max_independent_sets(
    d: TrapezoidDiagram | AugmentedDiagram,
    state: Optional[SweepState] = None,
    reuse: bool = True,
    stats: Optional[ReuseStats] = None,
) -> int:
    """Number of independent sets of size alpha, in O(n log n).

    Level k+1 trapezoids draw their counts only from level k trapezoids that
    lie left of them.  For each k the sweep merges the level-k insertions
    (at b) with the level-(k+1) queries (at a) on one sum tree.  With
    ``reuse`` the same tree is cleaned after each level by subtracting the
    inserted values again; otherwise a fresh tree is allocated per level.
    ``stats`` (reuse mode) records how often each trapezoid was inserted
    and removed.
    """
    aug = as_augmented(d)
    if state is None:
        state = sweep(aug)
    n = aug.n
    alpha = state.alpha
    if alpha == 0:
        return 1
    a, b, c, dd = aug.a, aug.b, aug.c, aug.d
    num = [0] * (n + 2)
    for i in state.levels[1]:
        num[i] = 1
    tree = SumFenwick(2 * n) if reuse else None
    result = 0
    # Level alpha feeds the right sentinel, which sees the whole tree.
    for k in range(1, alpha + 1):
        if not reuse:
            tree = SumFenwick(2 * n)
        inserts = state.levels_by_b[k]
        queries = state.levels[k + 1] if k < alpha else []
        touched = []
        p = 0
        for i in queries:
            ai = a[i]
            while p < len(inserts) and b[inserts[p]] < ai:
                j = inserts[p]
                tree.update(dd[j], num[j])
                touched.append((dd[j], num[j]))
                p += 1
            num[i] = tree.prefix_sum(c[i])
        for j in inserts[p:]:
            tree.update(dd[j], num[j])
            touched.append((dd[j], num[j]))
        if k == alpha:
            result = tree.total()
        if stats is not None:
            for j in inserts:
                stats.inserted[j] += 1
        if reuse:
            tree.reset(touched)
            if stats is not None:
                stats.resets += 1
                for j in inserts:
                    stats.removed[j] += 1
    return result


def new_reuse_stats(n: int) -> ReuseStats:
    return ReuseStats([0] * (n + 2), [0] * (n + 2))


def _a_order(aug: AugmentedDiagram) -> list[int]:
    a, ui = aug.a, aug.upper_index
    return [ui[j] for j in range(1, 2 * aug.n + 1) if a[ui[j]] == j]


def _quadratic_max_ind(aug: AugmentedDiagram) -> list[int]:
    n = aug.n
    a, b, c, dd = aug.a, aug.b, aug.c, aug.d
    order = _a_order(aug)
    m = [0] * (n + 2)
    for pos, i in enumerate(order):
        ai, ci = a[i], c[i]
        best = 0
        for j in order[:pos]:
            if b[j] < ai and dd[j] < ci and m[j] > best:
                best = m[j]
        m[i] = best + 1
    m[n + 1] = max(m[1 : n + 1], default=0) + 1
    return m


def max_is_quadratic(d: TrapezoidDiagram | AugmentedDiagram) -> int:
    """alpha(G) by the plain O(n^2) recurrence over trapezoids sorted by a."""
    aug = as_augmented(d)
    return _quadratic_max_ind(aug)[aug.n + 1] - 1


def count_max_is_quadratic(
    d: TrapezoidDiagram | AugmentedDiagram, max_ind: Optional[list[int]] = None
) -> int:
    """O(n^2) count of maximum independent sets.

    num(i) sums num(j) over j left of T(i) with max_ind(j) + 1 = max_ind(i),
    the sentinel 0 included; the answer is num(n+1).
    """
    aug = as_augmented(d)
    n = aug.n
    if max_ind is None:
        max_ind = _quadratic_max_ind(aug)
    a, b, c, dd = aug.a, aug.b, aug.c, aug.d
    order = [0] + _a_order(aug) + [n + 1]
    num = [0] * (n + 2)
    num[0] = 1
    for pos in range(1, len(order)):
        i = order[pos]
        target = max_ind[i] - 1
        total = 0
        for j in order[:pos]:
            if max_ind[j] == target and b[j] < a[i] and dd[j] < c[i]:
                total += num[j]
        num[i] = total
    return num[n + 1]


def independence_polynomial(
    d: TrapezoidDiagram | AugmentedDiagram, state: Optional[SweepState] = None
) -> list[int]:
    """Coefficients s_0..s_alpha, s_k being the number of size-k independent sets.

    Pass k counts chains of length k ending at each trapezoid by inserting
    the pass k-1 counts into one reusable sum tree.  Only trapezoids with
    max_ind >= k-1 can carry a nonzero count in pass k, so each pass visits
    just those.
    """
    aug = as_augmented(d)
    if state is None:
        state = sweep(aug)
    n = aug.n
    alpha = state.alpha
    coeffs = [1]
    if alpha == 0:
        return coeffs
    coeffs.append(n)
    a, c, dd, ui = aug.a, aug.c, aug.d, aug.upper_index
    max_ind = state.max_ind
    events = [(ui[j], a[ui[j]] == j) for j in range(1, 2 * n + 1)]
    prev = [0] + [1] * n + [0]
    tree = SumFenwick(2 * n)
    for k in range(2, alpha + 1):
        cur = [0] * (n + 2)
        events = [(i, is_a) for i, is_a in events if max_ind[i] >= k - 1]
        touched = []
        for i, is_a in events:
            if is_a:
                if max_ind[i] >= k:
                    cur[i] = tree.prefix_sum(c[i])
            elif prev[i]:
                tree.update(dd[i], prev[i])
                touched.append((dd[i], prev[i]))
        tree.reset(touched)
        coeffs.append(sum(cur))
        prev = cur
    return coeffs
