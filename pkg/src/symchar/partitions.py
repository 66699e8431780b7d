"""Young diagrams stored as weakly decreasing row lengths.

Boxes use the French convention: box ``(col, row)`` with ``1 <= col <= rows[row - 1]``,
row 1 at the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class YoungDiagram:
    """An integer partition; the empty diagram is allowed."""

    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(x) for x in self.rows)
        if any(x <= 0 for x in rows):
            raise ValueError(f"row lengths must be positive, got {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing, got {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        """Parse ``"4,2,1"``; an empty string gives the empty diagram."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            rows = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc
        return cls(rows)

    def __str__(self) -> str:
        return ",".join(map(str, self.rows))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    @property
    def size(self) -> int:
        """Number of boxes n."""
        return sum(self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return self.rows[0] if self.rows else 0

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-based); 0 beyond the last row."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def conjugate(self) -> "YoungDiagram":
        return conjugate(self)

    def boxes(self) -> list[tuple[int, int]]:
        """All boxes as ``(col, row)`` pairs, row by row."""
        return [(c, r) for r, length in enumerate(self.rows, 1) for c in range(1, length + 1)]

    def corners(self) -> tuple[list[int], list[int]]:
        """Contents ``col - row`` of the addable and removable boxes.

        Returned as ``(addable, removable)``, each sorted increasingly. They
        interlace: ``x_1 < y_1 < x_2 < ... < y_{d-1} < x_d``.
        """
        rows = self.rows
        k = len(rows)
        addable = []
        removable = []
        for i in range(1, k + 2):
            length = self.row(i)
            if i == 1 or self.row(i - 1) > length:
                addable.append(length + 1 - i)
            if length > 0 and self.row(i + 1) < length:
                removable.append(length - i)
        return sorted(addable), sorted(removable)


def conjugate(lam: YoungDiagram) -> YoungDiagram:
    """Column lengths ``#{i : lam_i >= j}``."""
    rows = lam.rows
    return YoungDiagram(tuple(sum(1 for x in rows if x >= j) for j in range(1, lam.num_cols + 1)))


def contains_box(lam: YoungDiagram, col: int, row: int) -> bool:
    if col < 1 or row < 1:
        raise ValueError("box coordinates are 1-based")
    return row <= lam.num_rows and col <= lam.rows[row - 1]


def realize_multirectangular(p: Sequence[int], q: Sequence[int]) -> YoungDiagram:
    """The diagram with ``p[i]`` rows of length ``q[i]``."""
    if len(p) != len(q):
        raise ValueError("p and q must have the same length")
    if any(int(x) != x or x < 1 for x in p):
        raise ValueError(f"multiplicities must be positive integers, got {list(p)}")
    if any(int(x) != x or x < 0 for x in q):
        raise ValueError(f"row lengths must be nonnegative integers, got {list(q)}")
    if any(a < b for a, b in zip(q, q[1:])):
        raise ValueError(f"q must be weakly decreasing, got {list(q)}")
    rows: list[int] = []
    for mult, length in zip(p, q):
        if length > 0:
            rows.extend([int(length)] * int(mult))
    return YoungDiagram(tuple(rows))


def multirectangular_coordinates(lam: YoungDiagram) -> tuple[list[int], list[int]]:
    """Inverse of :func:`realize_multirectangular` with distinct ``q``.

    Returns ``(p, q)`` where ``q`` lists the distinct row lengths in
    decreasing order and ``p`` their multiplicities.
    """
    p: list[int] = []
    q: list[int] = []
    for x in lam.rows:
        if q and q[-1] == x:
            p[-1] += 1
        else:
            q.append(x)
            p.append(1)
    return p, q


def dilate(lam: YoungDiagram, c: int) -> YoungDiagram:
    """Scale by an integer factor: every row times ``c``, repeated ``c`` times."""
    if int(c) != c or c < 1:
        raise ValueError(f"scale must be a positive integer, got {c}")
    return YoungDiagram(tuple(x * c for x in lam.rows for _ in range(c)))


def partitions(n: int, max_part: int | None = None) -> Iterator[YoungDiagram]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def rec(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for rows in rec(n, max_part):
        yield YoungDiagram(rows)


def corpus(n_max: int, n_min: int = 0) -> Iterator[YoungDiagram]:
    """Every diagram with ``n_min <= n <= n_max`` boxes, ordered by size."""
    for n in range(n_min, n_max + 1):
        yield from partitions(n)


def falling_factorial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def support_types(max_support: int, min_support: int = 0) -> Iterator[tuple[int, ...]]:
    """Cycle types without fixed points (all parts >= 2), by support size."""
    for l in range(min_support, max_support + 1):
        for lam in partitions(l):
            if not lam.rows or lam.rows[-1] >= 2:
                yield lam.rows
