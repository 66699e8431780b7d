"""Permutations of {1..l}, cycle structure and factorization enumeration.

Products compose right to left: ``(s * t)(i) == s(t(i))``.  A factorization
of ``pi`` is a pair ``(s1, s2)`` with ``s1 * s2 == pi``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Permutation:
    """``images[i - 1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from cycle notation, e.g. ``from_cycles([(1, 2, 3)], 4)``."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= degree or a in seen:
                    raise ValueError(f"bad cycle {tuple(cyc)} for degree {degree}")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def _from0(cls, images0: Sequence[int]) -> "Permutation":
        return cls(tuple(x + 1 for x in images0))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def zero_based(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            out[j - 1] = i
        return Permutation(tuple(out))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def cycle_type(self) -> tuple[int, ...]:
        """All cycle lengths, fixed points included, decreasing."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def __len__(self) -> int:
        return cayley_length(self)

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True)
class Factorization:
    sigma1: Permutation
    sigma2: Permutation
    pi: Permutation

    def sign(self) -> int:
        return -1 if cayley_length(self.sigma1) % 2 else 1


# ---------------------------------------------------------------------------
# 0-based tuple kernels; the enumeration hot paths stay on plain tuples.


def _cycle_index(images0: Sequence[int]) -> tuple[list[int], int]:
    """Map each point to the index of its cycle (cycles numbered by minimum)."""
    n = len(images0)
    label = [-1] * n
    count = 0
    for start in range(n):
        if label[start] < 0:
            j = start
            while label[j] < 0:
                label[j] = count
                j = images0[j]
            count += 1
    return label, count


def _num_cycles(images0: Sequence[int]) -> int:
    return _cycle_index(images0)[1]


def _compose0(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(a[j] for j in b)


def _inverse0(a: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def cycles(sigma: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its minimum, sorted by minimum."""
    out = []
    seen = set()
    for start in range(1, sigma.degree + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = sigma(start)
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = sigma(j)
        out.append(tuple(cyc))
    return out


def cayley_length(sigma: Permutation) -> int:
    """Minimal number of transpositions: degree minus number of cycles."""
    return sigma.degree - _num_cycles(sigma.zero_based)


def permutation_of_type(parts: Sequence[int], degree: int | None = None) -> Permutation:
    """Canonical permutation with the given cycle lengths.

    Cycles occupy consecutive integers, largest first; points beyond
    ``sum(parts)`` up to ``degree`` are fixed.
    """
    parts = sorted((int(k) for k in parts), reverse=True)
    if any(k < 1 for k in parts):
        raise ValueError(f"cycle lengths must be positive, got {parts}")
    total = sum(parts)
    degree = total if degree is None else degree
    if degree < total:
        raise ValueError(f"cycle type {parts} does not fit in degree {degree}")
    cyc = []
    start = 1
    for k in parts:
        cyc.append(tuple(range(start, start + k)))
        start += k
    return Permutation.from_cycles(cyc, degree)


def parse_cycle_type(text: str) -> tuple[int, ...]:
    """Parse ``"3,2"`` into ``(3, 2)``; parts sorted decreasingly."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse cycle type {text!r}") from exc
    if any(k < 1 for k in parts):
        raise ValueError(f"cycle lengths must be positive, got {parts}")
    return tuple(sorted(parts, reverse=True))


def enumerate_factorizations(
    pi: Permutation, start: int = 0, stop: int | None = None
) -> Iterator[Factorization]:
    """All ``l!`` factorizations, ``s2`` running over S_l in lexicographic order.

    ``start``/``stop`` select a slice of the stream so disjoint ranges can be
    consumed independently.
    """
    p0 = pi.zero_based
    for s2 in itertools.islice(itertools.permutations(range(pi.degree)), start, stop):
        s1 = _compose0(p0, _inverse0(s2))
        yield Factorization(Permutation._from0(s1), Permutation._from0(s2), pi)


def raw_factorizations(pi0: Sequence[int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """0-based ``(s1, s2)`` pairs in the same order as :func:`enumerate_factorizations`."""
    for s2 in itertools.permutations(range(len(pi0))):
        yield _compose0(pi0, _inverse0(s2)), s2


def _noncrossing_partitions(points: Sequence[int]) -> Iterator[list[tuple[int, ...]]]:
    """Non-crossing set partitions of ``points`` (in their given cyclic order)."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    m = len(rest)
    # choose the block of `first`; elements between consecutive members are
    # partitioned independently
    for size in range(0, m + 1):
        for idx in itertools.combinations(range(m), size):
            block = (first,) + tuple(rest[i] for i in idx)
            gaps = []
            prev = -1
            for i in idx + (m,):
                gaps.append(rest[prev + 1:i])
                prev = i
            for parts in itertools.product(*(list(_noncrossing_partitions(g)) for g in gaps)):
                yield [block] + [b for part in parts for b in part]


MINIMAL_FILTER_THRESHOLD = 7


def enumerate_minimal_factorizations(pi: Permutation) -> Iterator[Factorization]:
    """Factorizations with ``|s1| + |s2| == |pi|``.

    Up to ``MINIMAL_FILTER_THRESHOLD`` points this filters the full stream.
    Above it, each cycle of ``pi`` is factorized through non-crossing
    partitions of that cycle: ``s2`` has the blocks as cycles (in the cyclic
    order of ``pi``) and ``s1 = pi * s2^{-1}``.
    """
    if pi.degree <= MINIMAL_FILTER_THRESHOLD:
        target = cayley_length(pi)
        for f in enumerate_factorizations(pi):
            if cayley_length(f.sigma1) + cayley_length(f.sigma2) == target:
                yield f
        return
    yield from _minimal_via_noncrossing(pi)


def _minimal_via_noncrossing(pi: Permutation) -> Iterator[Factorization]:
    pi_cycles = cycles(pi)
    per_cycle = [list(_noncrossing_partitions(c)) for c in pi_cycles]
    for choice in itertools.product(*per_cycle):
        blocks = [b for part in choice for b in part]
        s2 = Permutation.from_cycles(blocks, pi.degree)
        yield Factorization(pi * s2.inverse(), s2, pi)


def orbit_count(sigma1: Permutation, sigma2: Permutation) -> int:
    """Orbits of the group generated by both permutations."""
    if sigma1.degree != sigma2.degree:
        raise ValueError("degree mismatch")
    return _orbit_count0(sigma1.zero_based, sigma2.zero_based)


def _orbit_count0(a: Sequence[int], b: Sequence[int]) -> int:
    parent = list(range(len(a)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(a)
    for perm in (a, b):
        for i, j in enumerate(perm):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                count -= 1
    return count


def defect(sigma1: Permutation, sigma2: Permutation) -> int:
    """``l - |C(s1)| - |C(s2)| + orbits(s1, s2)``."""
    l = sigma1.degree
    return (
        l
        - _num_cycles(sigma1.zero_based)
        - _num_cycles(sigma2.zero_based)
        + orbit_count(sigma1, sigma2)
    )


def transposition(a: int, b: int, degree: int) -> Permutation:
    return Permutation.from_cycles([(a, b)], degree)


def normal_form(sigma1: Permutation, sigma2: Permutation) -> tuple[Permutation, Permutation]:
    """Move transpositions from ``s1`` to ``s2`` until every cycle of ``s1``
    lies inside a cycle of ``s2``.

    Each step takes the lexicographically smallest ``a < b`` sharing a cycle
    of ``s1`` but not of ``s2`` and replaces ``(s1, s2)`` by
    ``(s1 * (a b), (a b) * s2)``.  The product is unchanged.
    """
    if sigma1.degree != sigma2.degree:
        raise ValueError("degree mismatch")
    l = sigma1.degree
    while True:
        c1, _ = _cycle_index(sigma1.zero_based)
        c2, _ = _cycle_index(sigma2.zero_based)
        pair = next(
            (
                (a, b)
                for a in range(l)
                for b in range(a + 1, l)
                if c1[a] == c1[b] and c2[a] != c2[b]
            ),
            None,
        )
        if pair is None:
            return sigma1, sigma2
        t = transposition(pair[0] + 1, pair[1] + 1, l)
        sigma1, sigma2 = sigma1 * t, t * sigma2


def count_by_length(l: int) -> list[int]:
    """``#{s in S_l : |s| = i}`` for ``i = 0..l-1``.

    Coefficients of ``(1 + x)(1 + 2x)...(1 + (l-1)x)``.
    """
    if l < 1:
        raise ValueError("l must be positive")
    coeffs = [1]
    for m in range(1, l):
        nxt = coeffs + [0]
        for i, c in enumerate(coeffs):
            nxt[i + 1] += m * c
        coeffs = nxt
    return coeffs


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def block_product(pis: Sequence[Permutation]) -> tuple[Permutation, list[range]]:
    """``pi_1 x ... x pi_r`` on consecutive blocks, plus the blocks (1-based)."""
    images: list[int] = []
    blocks = []
    offset = 0
    for p in pis:
        images.extend(x + offset for x in p.images)
        blocks.append(range(offset + 1, offset + p.degree + 1))
        offset += p.degree
    return Permutation(tuple(images)), blocks


def _transitive0(s1: Sequence[int], s2: Sequence[int], block_of: Sequence[int], nblocks: int) -> bool:
    parent = list(range(nblocks))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = nblocks
    for perm in (s1, s2):
        for i, j in enumerate(perm):
            ri, rj = find(block_of[i]), find(block_of[j])
            if ri != rj:
                parent[ri] = rj
                count -= 1
                if count == 1:
                    return True
    return count == 1


def enumerate_transitive_factorizations(pis: Sequence[Permutation]) -> Iterator[Factorization]:
    """Factorizations of ``pi_1 x ... x pi_r`` whose factors, together with
    the Young subgroup of the blocks, act transitively."""
    pi, blocks = block_product(pis)
    block_of = [0] * pi.degree
    for b, rng in enumerate(blocks):
        for x in rng:
            block_of[x - 1] = b
    for f in enumerate_factorizations(pi):
        if _transitive0(f.sigma1.zero_based, f.sigma2.zero_based, block_of, len(blocks)):
            yield f


def brute_force_count_by_length(l: int) -> list[int]:
    """Length histogram of S_l by direct enumeration."""
    counts = [0] * l
    for s in itertools.permutations(range(l)):
        counts[l - _num_cycles(s)] += 1
    return counts
