"""Analysis reports: every count the sweeps produce, cross-checked by duality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import independence
from .diagram import TrapezoidDiagram, augment

FIELDS = (
    "n",
    "alpha",
    "num_max_is",
    "num_is",
    "min_vc_size",
    "num_min_vc",
    "num_vc",
)


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    alpha: int
    num_max_is: int
    num_is: int  # nonempty independent sets
    min_vc_size: int
    num_min_vc: int
    num_vc: int  # includes the empty cover when there are no edges
    polynomial: Optional[tuple[int, ...]] = None
    max_is_witness: Optional[tuple[int, ...]] = None
    min_vc_witness: Optional[tuple[int, ...]] = None

    def check(self) -> None:
        """Assert the vertex-cover / independent-set duality identities."""
        assert self.min_vc_size + self.alpha == self.n, "min_vc_size + alpha != n"
        assert self.num_min_vc == self.num_max_is, "num_min_vc != num_max_is"
        assert self.num_vc == self.num_is + 1, "num_vc != num_is + 1"
        if self.polynomial is not None:
            assert len(self.polynomial) == self.alpha + 1
            assert sum(self.polynomial) - 1 == self.num_is
            assert self.polynomial[-1] == self.num_max_is
        if self.max_is_witness is not None:
            assert len(self.max_is_witness) == self.alpha
            assert len(self.min_vc_witness) == self.min_vc_size

    def lines(self) -> list[str]:
        out = [f"{name}: {getattr(self, name)}" for name in FIELDS]
        if self.polynomial is not None:
            out.append("polynomial: " + " ".join(map(str, self.polynomial)))
        if self.max_is_witness is not None:
            out.append("max_is_witness: " + " ".join(map(str, self.max_is_witness)))
            out.append("min_vc_witness: " + " ".join(map(str, self.min_vc_witness)))
        return out

    def format(self) -> str:
        return "\n".join(self.lines()) + "\n"


def analyze(
    d: TrapezoidDiagram, polynomial: bool = False, witness: bool = False
) -> AnalysisReport:
    aug = augment(d)
    state = independence.sweep(aug)
    num_is = independence.count_independent_sets(aug)
    num_max = independence.count_max_independent_sets(aug, state)
    poly = mis = mvc = None
    if polynomial:
        poly = tuple(independence.independence_polynomial(aug, state))
    if witness:
        mis = tuple(independence.max_is_witness(aug, state))
        chosen = set(mis)
        mvc = tuple(i for i in range(1, d.n + 1) if i not in chosen)
    report = AnalysisReport(
        n=d.n,
        alpha=state.alpha,
        num_max_is=num_max,
        num_is=num_is,
        min_vc_size=d.n - state.alpha,
        num_min_vc=num_max,
        num_vc=num_is + 1,
        polynomial=poly,
        max_is_witness=mis,
        min_vc_witness=mvc,
    )
    report.check()
    return report
