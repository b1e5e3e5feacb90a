"""Machine-integer kernels for timing the sweep against the quadratic DP.

Both compute only alpha(G), compiled with numba so the comparison measures
the algorithms rather than interpreter overhead.  They share one
preprocessed input (:func:`prepare`): the upper-line events in sweep order
and the trapezoids in order of their upper-left corner.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
from numba import njit

from .diagram import AugmentedDiagram


class KernelInput(NamedTuple):
    n: int
    is_query: np.ndarray  # per upper coordinate 1..2n: True at a(i), False at b(i)
    lower: np.ndarray  # c(i) at a query, d(i) at an insert
    rank: np.ndarray  # position of the owning trapezoid in a-order
    a: np.ndarray  # corners in a-order
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray


def prepare(aug: AugmentedDiagram) -> KernelInput:
    n = aug.n
    ui = np.asarray(aug.upper_index[1 : 2 * n + 1], dtype=np.int64)
    a = np.asarray(aug.a, dtype=np.int32)
    b = np.asarray(aug.b, dtype=np.int32)
    c = np.asarray(aug.c, dtype=np.int32)
    d = np.asarray(aug.d, dtype=np.int32)
    coords = np.arange(1, 2 * n + 1, dtype=np.int32)
    is_query = a[ui] == coords
    lower = np.where(is_query, c[ui], d[ui]).astype(np.int32)
    order = ui[is_query]
    rank_of = np.zeros(n + 2, dtype=np.int32)
    rank_of[order] = np.arange(n, dtype=np.int32)
    return KernelInput(
        n, is_query, lower, rank_of[ui], a[order], b[order], c[order], d[order]
    )


@njit(cache=True)
def _sweep_alpha(is_query, lower, rank, n):
    size = 2 * n
    tree = np.full(size + 1, -1, dtype=np.int32)
    max_ind = np.zeros(n, dtype=np.int32)
    for e in range(size):
        k = lower[e]
        if is_query[e]:
            best = -1
            while k > 0:
                if tree[k] > best:
                    best = tree[k]
                k -= k & -k
            max_ind[rank[e]] = max(best, 0) + 1
        else:
            v = max_ind[rank[e]]
            while k <= size:
                if tree[k] < v:
                    tree[k] = v
                k += k & -k
    best = 0
    k = size
    while k > 0:
        if tree[k] > best:
            best = tree[k]
        k -= k & -k
    return best


@njit(cache=True)
def _quadratic_alpha(a, b, c, d, n):
    m = np.zeros(n, dtype=np.int32)
    alpha = 0
    for p in range(n):
        ai = a[p]
        ci = c[p]
        best = 0
        for q in range(p):
            if b[q] < ai and d[q] < ci and m[q] > best:
                best = m[q]
        m[p] = best + 1
        if best + 1 > alpha:
            alpha = best + 1
    return alpha


def sweep_alpha(k: KernelInput) -> int:
    if k.n == 0:
        return 0
    return int(_sweep_alpha(k.is_query, k.lower, k.rank, k.n))


def quadratic_alpha(k: KernelInput) -> int:
    return int(_quadratic_alpha(k.a, k.b, k.c, k.d, k.n))
