"""Normalized characters of symmetric groups.

The main route is the signed sum over all factorizations ``s1 * s2 = pi``
of the coloring counts ``N^lam(s1, s2)``.  Independent routes: the
Murnaghan-Nakayama rule, the colored-permutation polynomial for
multirectangular diagrams, and averages of the column-inversion sign.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .colorings import FactorizationProfile, build_profile
from .partitions import YoungDiagram, falling_factorial
from .permutations import (
    Permutation,
    _compose0,
    _cycle_index,
    _transitive0,
    block_product,
    permutation_of_type,
    raw_factorizations,
)


@dataclass(frozen=True)
class NormalizedCharacterResult:
    sigma_value: int
    ratio: Fraction
    degree_l: int
    falling_factorial: int


def support_parts(ct: Sequence[int]) -> tuple[int, ...]:
    """Nontrivial cycle lengths, decreasing."""
    return tuple(sorted((int(k) for k in ct if k > 1), reverse=True))


def reduced_length(ct: Sequence[int]) -> int:
    """``|pi|``: sum of (length - 1) over the cycles."""
    return sum(k - 1 for k in ct)


# ---------------------------------------------------------------------------
# factorization sums


@lru_cache(maxsize=None)
def _profile(images: tuple[int, ...]) -> FactorizationProfile:
    pi0 = tuple(x - 1 for x in images)
    return build_profile(raw_factorizations(pi0), len(pi0))


def factorization_profile(pi: Permutation) -> FactorizationProfile:
    """All ``l!`` factorizations of ``pi`` grouped by graph (cached)."""
    return _profile(pi.images)


def sigma_on(lam: YoungDiagram, pi: Permutation) -> int:
    """Signed factorization sum for a concrete ``pi`` in S_l, ``l <= n``.

    Fixed points of ``pi`` are kept, so this is ``(n)_l * chi(pi)`` with
    ``l`` the full degree.
    """
    if pi.degree > lam.size:
        raise ValueError(f"permutation degree {pi.degree} exceeds diagram size {lam.size}")
    if pi.degree == 0:
        return 1
    return factorization_profile(pi).signed_sum(lam)


def sigma_sf(lam: YoungDiagram, ct: Sequence[int]) -> int:
    """``Sigma^lam`` on the class ``ct`` via the coloring sum.

    Fixed points are dropped first; ``l`` is the support size.
    """
    parts = support_parts(ct)
    l = sum(parts)
    if l > lam.size:
        raise ValueError(f"support {l} exceeds diagram size {lam.size}")
    if l == 0:
        return 1
    return sigma_on(lam, permutation_of_type(parts))


def character_ratio(lam: YoungDiagram, ct: Sequence[int]) -> Fraction:
    l = sum(support_parts(ct))
    return Fraction(sigma_sf(lam, ct), falling_factorial(lam.size, l))


def normalized_character(lam: YoungDiagram, ct: Sequence[int]) -> NormalizedCharacterResult:
    l = sum(support_parts(ct))
    sigma = sigma_sf(lam, ct)
    ff = falling_factorial(lam.size, l)
    return NormalizedCharacterResult(sigma, Fraction(sigma, ff), l, ff)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama


def _beta(rows: tuple[int, ...]) -> list[int]:
    k = len(rows)
    return [x + k - 1 - i for i, x in enumerate(rows)]


def _from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return tuple(x for x in (b - (k - 1 - i) for i, b in enumerate(beta)) if x > 0)


@lru_cache(maxsize=None)
def _mn(rows: tuple[int, ...], parts: tuple[int, ...]) -> int:
    if not parts:
        return 1 if not rows else 0
    k, rest = parts[0], parts[1:]
    beta = _beta(rows)
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in occupied:
            continue
        height = sum(1 for x in beta if t < x < b)
        new = [t if x == b else x for x in beta]
        total += (-1) ** height * _mn(_from_beta(new), rest)
    return total


def mn_character(lam: YoungDiagram, class_ct: Sequence[int]) -> tuple[int, int]:
    """Unnormalized character value and dimension by border-strip removal."""
    parts = tuple(sorted((int(k) for k in class_ct), reverse=True))
    if any(k < 1 for k in parts) or sum(parts) != lam.size:
        raise ValueError(f"class {parts} is not a cycle type of S_{lam.size}")
    return _mn(lam.rows, parts), _mn(lam.rows, (1,) * lam.size)


def mn_ratio(lam: YoungDiagram, ct: Sequence[int]) -> Fraction:
    """``chi^lam`` on ``ct`` padded with fixed points, by Murnaghan-Nakayama."""
    parts = support_parts(ct)
    pad = lam.size - sum(parts)
    if pad < 0:
        raise ValueError(f"support {sum(parts)} exceeds diagram size {lam.size}")
    value, dim = mn_character(lam, parts + (1,) * pad)
    return Fraction(value, dim)


# ---------------------------------------------------------------------------
# multirectangular / formal diagrams


@lru_cache(maxsize=None)
def colored_permutation_polynomial(r: int, ct: tuple[int, ...], signed: bool = True) -> dict:
    """Sum over colored permutations ``(s, phi)`` as a polynomial in ``p, q``.

    Returns ``{exponents: coefficient}`` with exponent tuples
    ``(e_p1..e_pr, e_q1..e_qr)``.  Each term is
    ``prod_{b in C(s)} p_phi(b) * prod_{c in C(s pi)} q_psi(c)`` where
    ``psi(c)`` is the largest color met on ``c``.  With ``signed`` every
    ``q`` factor is negated and the whole sum multiplied by ``(-1)^l``.
    """
    pi = permutation_of_type(ct).zero_based if ct else ()
    l = len(pi)
    poly: Counter = Counter()
    for s in itertools.permutations(range(l)):
        cs, ncs = _cycle_index(s)
        sp = _compose0(s, pi)
        cc, ncc = _cycle_index(sp)
        members = [[] for _ in range(ncc)]
        for point, c in enumerate(cc):
            members[c].append(point)
        for phi in itertools.product(range(r), repeat=ncs):
            exps = [0] * (2 * r)
            for color in phi:
                exps[color] += 1
            for pts in members:
                exps[r + max(phi[cs[a]] for a in pts)] += 1
            sign = (-1) ** (l + ncc) if signed else 1
            poly[tuple(exps)] += sign
    return {k: v for k, v in poly.items() if v}


def evaluate_polynomial(poly: Mapping[tuple, int], p: Sequence, q: Sequence) -> Fraction:
    values = [Fraction(x) for x in p] + [Fraction(x) for x in q]
    total = Fraction(0)
    for exps, coeff in poly.items():
        term = Fraction(coeff)
        for v, e in zip(values, exps):
            if e:
                term *= v ** e
        total += term
    return total


def sigma_multirect(p: Sequence, q: Sequence, ct: Sequence[int]) -> Fraction:
    """``Sigma^{p x q}`` from the colored-permutation formula; ``p, q`` arbitrary rationals."""
    if len(p) != len(q) or not p:
        raise ValueError("p and q must be nonempty and of equal length")
    poly = colored_permutation_polynomial(len(p), support_parts(ct))
    return evaluate_polynomial(poly, p, q)


# ---------------------------------------------------------------------------
# column inversions


Box = tuple[int, int]


def inv_sign(lam: YoungDiagram, mapping: Mapping[Box, Box]) -> int:
    """``(-1)^inv`` of a permutation of the boxes, or 0.

    Zero when two boxes of one row are sent into one column.  Otherwise the
    parity of pairs sent into one column with their row order reversed.
    """
    boxes = lam.boxes()
    if sorted(mapping) != sorted(boxes) or sorted(mapping.values()) != sorted(boxes):
        raise ValueError("mapping is not a permutation of the boxes")
    inversions = 0
    for b1, b2 in itertools.combinations(boxes, 2):
        i1, i2 = mapping[b1], mapping[b2]
        if i1[0] != i2[0]:
            continue
        if b1[1] == b2[1]:
            return 0
        lo, hi = (b1, b2) if b1[1] < b2[1] else (b2, b1)
        if mapping[lo][1] > mapping[hi][1]:
            inversions += 1
    return -1 if inversions % 2 else 1


MAX_INV_SIZE = 8


@lru_cache(maxsize=None)
def _inv_class_sums(rows: tuple[int, ...]) -> dict:
    lam = YoungDiagram(rows)
    boxes = lam.boxes()
    sums: dict = {}
    for images in itertools.permutations(range(len(boxes))):
        label, _ = _cycle_index(images)
        lengths = Counter(label)
        ct = tuple(sorted(lengths.values(), reverse=True))
        mapping = {boxes[i]: boxes[j] for i, j in enumerate(images)}
        total, count = sums.get(ct, (0, 0))
        sums[ct] = (total + inv_sign(lam, mapping), count + 1)
    return sums


def character_via_inv(lam: YoungDiagram, ct: Sequence[int]) -> Fraction:
    """Average of ``inv_sign`` over the whole conjugacy class of box permutations."""
    if lam.size > MAX_INV_SIZE:
        raise ValueError(f"exhaustive averaging limited to n <= {MAX_INV_SIZE}")
    parts = support_parts(ct)
    pad = lam.size - sum(parts)
    if pad < 0:
        raise ValueError(f"support {sum(parts)} exceeds diagram size {lam.size}")
    total, count = _inv_class_sums(lam.rows)[parts + (1,) * pad]
    return Fraction(total, count)


# ---------------------------------------------------------------------------
# disjoint cumulants


@lru_cache(maxsize=None)
def _transitive_profile(block_types: tuple[tuple[int, ...], ...]) -> FactorizationProfile:
    pis = [permutation_of_type(ct) for ct in block_types]
    pi, blocks = block_product(pis)
    block_of = [0] * pi.degree
    for b, rng in enumerate(blocks):
        for x in rng:
            block_of[x - 1] = b
    nblocks = len(blocks)
    pairs = (
        (s1, s2)
        for s1, s2 in raw_factorizations(pi.zero_based)
        if _transitive0(s1, s2, block_of, nblocks)
    )
    return build_profile(pairs, pi.degree)


def disjoint_cumulant(lam: YoungDiagram, blocks: Sequence[Sequence[int]]) -> int:
    """Signed coloring sum over transitive factorizations of ``pi_1 x ... x pi_r``.

    Each block is a full cycle type (fixed points included), so ``(1,)`` is
    the identity of S_1.
    """
    block_types = tuple(tuple(sorted((int(k) for k in b), reverse=True)) for b in blocks)
    if any(not b or min(b) < 1 for b in block_types):
        raise ValueError("every block needs at least one cycle of positive length")
    l = sum(sum(b) for b in block_types)
    if l > lam.size:
        raise ValueError(f"total degree {l} exceeds diagram size {lam.size}")
    return _transitive_profile(block_types).signed_sum(lam)
