"""Vertex covers by complementation: C is a (minimum) vertex cover iff V - C
is a (maximum) independent set.

No sweeps live here; every number comes from :mod:`trapbit.independence`.
Vertex-cover counts include the empty cover, which is a cover exactly when
the graph has no edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import independence
from .diagram import TrapezoidDiagram, as_augmented


@dataclass(frozen=True)
class CoverReport:
    min_vc_size: int
    num_min_vc: int
    num_vc: int
    witness: tuple[int, ...]


def min_vertex_cover_size(d) -> int:
    return as_augmented(d).n - independence.max_is_size(d)


def count_minimum_vertex_covers(d) -> int:
    return independence.count_max_independent_sets(d)


def count_vertex_covers(d) -> int:
    return independence.count_independent_sets(d, include_empty=True)


def min_vertex_cover_witness(d) -> list[int]:
    aug = as_augmented(d)
    chosen = set(independence.max_is_witness(aug))
    return [i for i in range(1, aug.n + 1) if i not in chosen]


def cover_report(d: TrapezoidDiagram) -> CoverReport:
    aug = as_augmented(d)
    state = independence.sweep(aug)
    chosen = set(independence.max_is_witness(aug, state))
    return CoverReport(
        min_vc_size=aug.n - state.alpha,
        num_min_vc=independence.count_max_independent_sets(aug, state),
        num_vc=independence.count_independent_sets(aug, include_empty=True),
        witness=tuple(i for i in range(1, aug.n + 1) if i not in chosen),
    )
