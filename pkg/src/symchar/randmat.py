"""Trace moments of complex Gaussian matrices supported on a Young diagram.

``T`` has independent standard complex Gaussian entries on the boxes of the
diagram and zeros elsewhere.  The exact side is the unsigned coloring sum
over all factorizations; the Monte Carlo side samples ``T`` directly.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .characters import (
    colored_permutation_polynomial,
    evaluate_polynomial,
    factorization_profile,
    sigma_multirect,
    support_parts,
)
from .partitions import YoungDiagram
from .permutations import _cycle_index, permutation_of_type, raw_factorizations

RNG_ALGORITHM = "numpy.PCG64/SeedSequence"
CHUNK = 10_000
MIN_SAMPLES = 100


@dataclass(frozen=True)
class MomentEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int
    algorithm: str = RNG_ALGORITHM

    def z_score(self, exact) -> float:
        if self.std_error == 0:
            return 0.0 if self.mean == float(exact) else math.inf
        return (self.mean - float(exact)) / self.std_error


def _full_type(ct: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(sorted((int(k) for k in ct), reverse=True))
    if not parts or min(parts) < 1:
        raise ValueError(f"need a nonempty cycle type with positive parts, got {ct}")
    return parts


def exact_moment(lam: YoungDiagram, ct: Sequence[int]) -> int:
    """``E prod_i Tr (T T*)^{k_i}`` as the unsigned coloring sum over factorizations.

    Parts equal to 1 are genuine factors ``Tr(T T*)`` here.
    """
    parts = _full_type(ct)
    return factorization_profile(permutation_of_type(parts)).unsigned_sum(lam)


def _chunk_stats(lam: YoungDiagram, parts: tuple[int, ...], size: int, seed_seq) -> tuple[float, float]:
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    dim = max(lam.num_rows, lam.num_cols)
    mask = np.zeros((dim, dim))
    for r, length in enumerate(lam.rows):
        mask[r, :length] = 1.0
    scale = math.sqrt(0.5)
    t = (rng.standard_normal((size, dim, dim)) + 1j * rng.standard_normal((size, dim, dim))) * scale
    t *= mask
    w = t @ np.conj(np.swapaxes(t, 1, 2))
    eig = np.linalg.eigvalsh(w)
    values = np.ones(size)
    for k in parts:
        values *= np.sum(eig ** k, axis=1)
    mean = float(np.mean(values))
    m2 = float(np.sum((values - mean) ** 2))
    return mean, m2


def mc_moment(
    lam: YoungDiagram, ct: Sequence[int], samples: int, seed: int, workers: int = 1
) -> MomentEstimate:
    """Monte Carlo estimate of the trace moment.

    Samples are drawn in fixed chunks of ``CHUNK`` with one spawned stream per
    chunk, so the result depends on ``(seed, samples)`` and not on ``workers``.  Chunk means and
    sums of squares are merged pairwise (Chan et al.).
    """
    parts = _full_type(ct)
    if samples < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples")
    if lam.size == 0:
        return MomentEstimate(0.0, 0.0, samples, seed)
    nchunks = -(-samples // CHUNK)
    children = np.random.SeedSequence(seed).spawn(nchunks)
    sizes = [min(CHUNK, samples - i * CHUNK) for i in range(nchunks)]
    args = ([lam] * nchunks, [parts] * nchunks, sizes, children)
    if workers > 1 and nchunks > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk_stats, *args))
    else:
        results = list(map(_chunk_stats, *args))
    stats = [(size, mean, m2) for size, (mean, m2) in zip(sizes, results)]
    while len(stats) > 1:
        merged = []
        for j in range(0, len(stats) - 1, 2):
            (na, ma, sa), (nb, mb, sb) = stats[j], stats[j + 1]
            n = na + nb
            delta = mb - ma
            merged.append((n, ma + delta * nb / n, sa + sb + delta * delta * na * nb / n))
        if len(stats) % 2:
            merged.append(stats[-1])
        stats = merged
    n, mean, m2 = stats[0]
    std = math.sqrt(m2 / (n - 1))
    return MomentEstimate(mean, std / math.sqrt(n), samples, seed)


def matrix_moment_polynomial(r: int, ct: Sequence[int]) -> dict:
    """Unsigned factorization sum for ``p x q`` as a polynomial in ``p, q``.

    For each factorization ``s1 * s2 = pi`` the cycles of ``s2`` take colors
    ``phi`` (weight ``p_phi``) and each cycle of ``s1`` contributes
    ``q`` of the largest color it meets.  Same exponent layout as
    :func:`colored_permutation_polynomial`.
    """
    parts = support_parts(ct)
    pi0 = permutation_of_type(parts).zero_based if parts else ()
    poly: Counter = Counter()
    for s1, s2 in raw_factorizations(pi0):
        c2, n2 = _cycle_index(s2)
        c1, n1 = _cycle_index(s1)
        members = [[] for _ in range(n1)]
        for point, c in enumerate(c1):
            members[c].append(point)
        for phi in itertools.product(range(r), repeat=n2):
            exps = [0] * (2 * r)
            for color in phi:
                exps[color] += 1
            for pts in members:
                exps[r + max(phi[c2[a]] for a in pts)] += 1
            poly[tuple(exps)] += 1
    return {k: v for k, v in poly.items() if v}


def formal_identity_sides(p: Sequence, q: Sequence, ct: Sequence[int]) -> tuple[Fraction, Fraction]:
    """``(Sigma^{p x q}(pi), (-1)^l * M(p, -q))`` with ``M`` the matrix-moment polynomial."""
    if len(p) != len(q) or not p:
        raise ValueError("p and q must be nonempty and of equal length")
    parts = support_parts(ct)
    l = sum(parts)
    poly = _matrix_poly_cached(len(p), parts)
    rhs = (-1) ** l * evaluate_polynomial(poly, p, [-Fraction(x) for x in q])
    return sigma_multirect(p, q, parts), rhs


_MATRIX_POLYS: dict = {}


def _matrix_poly_cached(r: int, parts: tuple[int, ...]) -> dict:
    key = (r, parts)
    if key not in _MATRIX_POLYS:
        _MATRIX_POLYS[key] = matrix_moment_polynomial(r, parts)
    return _MATRIX_POLYS[key]


def formal_identity_check(p: Sequence, q: Sequence, ct: Sequence[int]) -> bool:
    lhs, rhs = formal_identity_sides(p, q, ct)
    return lhs == rhs


def matrix_moment_unsigned(r: int, ct: Sequence[int]) -> dict:
    """Colored-permutation polynomial without signs, for cross-checking."""
    return colored_permutation_polynomial(r, support_parts(ct), signed=False)
