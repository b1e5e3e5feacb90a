"""Trapezoid diagrams: data model, validation, I/O and random generation.

Corner labels are ranks.  Each of the two lines carries the labels 1..2n
exactly once, so every algorithm downstream is purely ordinal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class DiagramError(ValueError):
    """Raised for malformed or invalid trapezoid diagrams."""


class Trapezoid(NamedTuple):
    a: int  # upper left
    b: int  # upper right
    c: int  # lower left
    d: int  # lower right


@dataclass(frozen=True)
class TrapezoidDiagram:
    """n trapezoids, addressed 1..n (``trapezoids[i - 1]`` is T(i))."""

    trapezoids: tuple[Trapezoid, ...]

    def __init__(self, trapezoids: Iterable[Sequence[int]], check: bool = True):
        object.__setattr__(
            self, "trapezoids", tuple(Trapezoid(*map(int, t)) for t in trapezoids)
        )
        if check:
            validate(self)

    @property
    def n(self) -> int:
        return len(self.trapezoids)

    def __len__(self) -> int:
        return len(self.trapezoids)

    def __getitem__(self, i: int) -> Trapezoid:
        if not 1 <= i <= self.n:
            raise IndexError(f"trapezoid index {i} outside 1..{self.n}")
        return self.trapezoids[i - 1]


def validate(d: TrapezoidDiagram) -> None:
    """Raise :class:`DiagramError` unless ``d`` is a valid labelled diagram."""
    n = len(d.trapezoids)
    top = 2 * n
    upper: dict[int, int] = {}
    lower: dict[int, int] = {}
    for i, (a, b, c, dd) in enumerate(d.trapezoids, start=1):
        for name, v in (("a", a), ("b", b), ("c", c), ("d", dd)):
            if not 1 <= v <= top:
                raise DiagramError(
                    f"trapezoid {i}: label {name}={v} out of range 1..{top}"
                )
        if a >= b:
            raise DiagramError(f"trapezoid {i}: a >= b ({a} >= {b})")
        if c >= dd:
            raise DiagramError(f"trapezoid {i}: c >= d ({c} >= {dd})")
        for v in (a, b):
            if v in upper:
                raise DiagramError(
                    f"trapezoid {i}: duplicate upper label {v} (also used by trapezoid {upper[v]})"
                )
            upper[v] = i
        for v in (c, dd):
            if v in lower:
                raise DiagramError(
                    f"trapezoid {i}: duplicate lower label {v} (also used by trapezoid {lower[v]})"
                )
            lower[v] = i


@dataclass(frozen=True)
class AugmentedDiagram:
    """A diagram with sentinel trapezoids 0 (all corners 0) and n+1 (all 2n+1).

    ``a``, ``b``, ``c``, ``d`` are corner arrays indexed 0..n+1 and
    ``upper_index[j]`` is the trapezoid owning upper coordinate j.
    """

    diagram: TrapezoidDiagram
    a: list[int] = field(repr=False)
    b: list[int] = field(repr=False)
    c: list[int] = field(repr=False)
    d: list[int] = field(repr=False)
    upper_index: list[int] = field(repr=False)

    @property
    def n(self) -> int:
        return self.diagram.n


def augment(d: TrapezoidDiagram) -> AugmentedDiagram:
    n = d.n
    end = 2 * n + 1
    a, b, c, dd = [0], [0], [0], [0]
    upper_index = [0] * (end + 1)
    for i, t in enumerate(d.trapezoids, start=1):
        a.append(t.a)
        b.append(t.b)
        c.append(t.c)
        dd.append(t.d)
        upper_index[t.a] = i
        upper_index[t.b] = i
    for arr in (a, b, c, dd):
        arr.append(end)
    upper_index[end] = n + 1
    return AugmentedDiagram(d, a, b, c, dd, upper_index)


def as_augmented(d: TrapezoidDiagram | AugmentedDiagram) -> AugmentedDiagram:
    return d if isinstance(d, AugmentedDiagram) else augment(d)


def left_of(d: TrapezoidDiagram | AugmentedDiagram, i: int, j: int) -> bool:
    """True iff T(i) lies entirely left of T(j): b(i) < a(j) and d(i) < c(j)."""
    if isinstance(d, AugmentedDiagram):
        return d.b[i] < d.a[j] and d.d[i] < d.c[j]
    ti, tj = d[i], d[j]
    return ti.b < tj.a and ti.d < tj.c


def adjacent(d: TrapezoidDiagram | AugmentedDiagram, i: int, j: int) -> bool:
    """Two distinct trapezoids intersect iff neither lies left of the other."""
    return not left_of(d, i, j) and not left_of(d, j, i)


def to_graph(d: TrapezoidDiagram) -> dict[int, set[int]]:
    """Adjacency sets of the intersection graph on vertices 1..n."""
    n = d.n
    graph: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    ts = d.trapezoids
    for i in range(n):
        ai, bi, ci, di = ts[i]
        for j in range(i + 1, n):
            aj, bj, cj, dj = ts[j]
            if not (bi < aj and di < cj) and not (bj < ai and dj < ci):
                graph[i + 1].add(j + 1)
                graph[j + 1].add(i + 1)
    return graph


def random_diagram(n: int, seed: int = 0) -> TrapezoidDiagram:
    """Random valid diagram on n trapezoids, reproducible from ``seed``.

    Uses numpy's PCG64 generator (``numpy.random.default_rng``).  For each
    line independently, a uniform permutation of 1..2n is cut into
    consecutive pairs; pair i gives trapezoid i its two corners on that line
    (smaller label on the left).  This is a uniform random perfect matching
    of the labels assigned uniformly to trapezoids.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)
    up = rng.permutation(2 * n).reshape(n, 2) + 1
    lo = rng.permutation(2 * n).reshape(n, 2) + 1
    up.sort(axis=1)
    lo.sort(axis=1)
    rows = np.concatenate([up, lo], axis=1).tolist()
    return TrapezoidDiagram(rows, check=False)


def serialize(d: TrapezoidDiagram) -> str:
    lines = [str(d.n)]
    lines.extend(f"{t.a} {t.b} {t.c} {t.d}" for t in d.trapezoids)
    return "\n".join(lines) + "\n"


def parse(text: str) -> TrapezoidDiagram:
    """Parse the ``.trap`` format: ``n`` then n lines ``a b c d``."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise DiagramError("empty input: expected trapezoid count on line 1")
    try:
        n = int(lines[0])
    except ValueError:
        raise DiagramError(f"line 1: expected an integer count, got {lines[0]!r}") from None
    if n < 0:
        raise DiagramError(f"line 1: negative trapezoid count {n}")
    if len(lines) - 1 != n:
        raise DiagramError(f"expected {n} trapezoid lines, found {len(lines) - 1}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 4:
            raise DiagramError(f"line {lineno}: expected 4 integers, got {line!r}")
        try:
            rows.append([int(p) for p in parts])
        except ValueError:
            raise DiagramError(f"line {lineno}: non-integer field in {line!r}") from None
    return TrapezoidDiagram(rows)


def read_diagram(path: str | Path) -> TrapezoidDiagram:
    return parse(Path(path).read_text())


def write_diagram(d: TrapezoidDiagram, path: str | Path) -> None:
    Path(path).write_text(serialize(d))
