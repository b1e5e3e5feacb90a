"""Randomized verification against the oracle, and scaling benchmarks."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field
from typing import Iterable

from . import _kernels, independence, oracle
from .diagram import TrapezoidDiagram, augment, random_diagram, to_graph


@dataclass
class Mismatch:
    n: int
    seed: int
    diagram: TrapezoidDiagram
    problems: list[str]


@dataclass
class VerifySummary:
    trials: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def trial_schedule(trials: int, max_n: int, seed: int) -> Iterable[tuple[int, int]]:
    """(n, diagram seed) for each trial: n cycles through 1..max_n."""
    for t in range(trials):
        yield 1 + t % max_n, seed + t


def check_diagram(d: TrapezoidDiagram, _fault: bool = False) -> list[str]:
    """Compare every fast quantity with exhaustive enumeration."""
    aug = augment(d)
    state = independence.sweep(aug, _fault=_fault)
    truth = oracle.brute_enumerate(to_graph(d))
    fast = {
        "alpha": state.alpha,
        "num_is": independence.count_independent_sets(aug),
        "num_max_is": independence.count_max_independent_sets(aug, state),
        "min_vc_size": d.n - state.alpha,
        "num_vc": independence.count_independent_sets(aug, include_empty=True),
        "polynomial": tuple(independence.independence_polynomial(aug, state)),
    }
    fast["num_min_vc"] = fast["num_max_is"]
    expected = {
        "alpha": truth.alpha,
        "num_is": truth.is_count,
        "num_max_is": truth.max_is_count,
        "min_vc_size": truth.min_vc_size,
        "num_min_vc": truth.min_vc_count,
        "num_vc": truth.vc_count,
        "polynomial": truth.per_size_counts[: truth.alpha + 1],
    }
    problems = [
        f"{key}: fast={fast[key]} oracle={expected[key]}"
        for key in expected
        if fast[key] != expected[key]
    ]
    witness = independence.max_is_witness(aug, state)
    if len(witness) != truth.alpha:
        problems.append(f"witness size {len(witness)} != alpha {truth.alpha}")
    return problems


def verify(trials: int, max_n: int, seed: int = 0, _fault: bool = False) -> VerifySummary:
    summary = VerifySummary()
    if max_n < 1:
        return summary
    if max_n > oracle.MAX_ENUMERATE_N:
        raise oracle.SizeLimitError(
            f"--max-n {max_n} exceeds the enumeration bound {oracle.MAX_ENUMERATE_N}"
        )
    for n, s in trial_schedule(trials, max_n, seed):
        d = random_diagram(n, s)
        problems = check_diagram(d, _fault=_fault)
        summary.trials += 1
        if problems:
            summary.mismatches.append(Mismatch(n, s, d, problems))
    return summary


@dataclass(frozen=True)
class BenchRow:
    size: int
    algo: str
    median_seconds: float
    alpha: int


def _median_time(fn, repeats: int) -> tuple[float, int]:
    times, value = [], None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), value


def bench(
    sizes: Iterable[int],
    algo: str = "both",
    repeats: int = 5,
    engine: str = "compiled",
    seed: int = 0,
) -> list[BenchRow]:
    """Median wall-clock time of the alpha computation per size.

    ``engine="compiled"`` times the numba kernels (compiled up front on a
    tiny input); ``engine="python"`` times the library functions.
    """
    algos = ("sweep", "quadratic") if algo == "both" else (algo,)
    if engine == "compiled":
        tiny = _kernels.prepare(augment(random_diagram(4, seed)))
        _kernels.sweep_alpha(tiny)
        _kernels.quadratic_alpha(tiny)
    rows = []
    for size in sorted(sizes):
        aug = augment(random_diagram(size, seed + size))
        if engine == "compiled":
            prepared = _kernels.prepare(aug)
            runners = {
                "sweep": lambda: _kernels.sweep_alpha(prepared),
                "quadratic": lambda: _kernels.quadratic_alpha(prepared),
            }
        else:
            runners = {
                "sweep": lambda: independence.max_is_size(aug),
                "quadratic": lambda: independence.max_is_quadratic(aug),
            }
        for name in algos:
            median, alpha = _median_time(runners[name], repeats)
            rows.append(BenchRow(size, name, median, alpha))
    return rows
