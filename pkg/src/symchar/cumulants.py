"""Free cumulants of the transition measure of a Young diagram.

Two routes: a signed coloring sum over minimal factorizations of a cycle,
and the classical one through the transition measure, its moments and the
non-crossing moment-cumulant recursion.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .colorings import FactorizationProfile, build_profile
from .partitions import YoungDiagram
from .permutations import enumerate_minimal_factorizations, permutation_of_type


@dataclass(frozen=True)
class TransitionMeasure:
    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        locs = [x for x, _ in self.atoms]
        if any(a >= b for a, b in zip(locs, locs[1:])):
            raise ValueError("atom locations must be strictly increasing")
        if any(w <= 0 for _, w in self.atoms):
            raise ValueError("atom weights must be positive")
        if sum(w for _, w in self.atoms) != 1:
            raise ValueError("atom weights must sum to 1")


@dataclass(frozen=True)
class FreeCumulantSequence:
    """``values[k - 1]`` is ``R_k``."""

    values: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        if k < 1:
            raise IndexError("free cumulants are indexed from 1")
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)


class OutsideRegimeWarning(UserWarning):
    """The cycle is longer than the diagram has boxes."""


@lru_cache(maxsize=None)
def minimal_profile(l: int) -> FactorizationProfile:
    """Minimal factorizations of the long cycle ``(1 2 ... l)``, grouped by graph."""
    pairs = (
        (f.sigma1.zero_based, f.sigma2.zero_based)
        for f in enumerate_minimal_factorizations(permutation_of_type((l,)))
    )
    return build_profile(pairs, l)


def free_cumulant_sf(lam: YoungDiagram, l: int) -> int:
    """``R_{l+1}`` as the signed coloring sum over minimal factorizations of an ``l``-cycle."""
    if l < 1:
        raise ValueError("l must be positive")
    if l > lam.size:
        warnings.warn(
            f"cycle length {l} exceeds diagram size {lam.size}",
            OutsideRegimeWarning,
            stacklevel=2,
        )
    return minimal_profile(l).signed_sum(lam)


def transition_measure(lam: YoungDiagram) -> TransitionMeasure:
    """Atoms at the addable-corner contents.

    The weight at ``x_i`` is ``prod_j (x_i - y_j) / prod_{i' != i} (x_i - x_i')``
    with ``y_j`` the removable-corner contents: the partial-fraction
    coefficients of ``prod (z - y_j) / prod (z - x_i)``.
    """
    xs, ys = lam.corners()
    atoms = []
    for i, x in enumerate(xs):
        num = 1
        for y in ys:
            num *= x - y
        den = 1
        for j, x2 in enumerate(xs):
            if j != i:
                den *= x - x2
        atoms.append((Fraction(x), Fraction(num, den)))
    return TransitionMeasure(tuple(atoms))


def moments(mu: TransitionMeasure, up_to: int) -> list[Fraction]:
    """``[m_0, ..., m_up_to]``."""
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    return [sum((w * x ** k for x, w in mu.atoms), Fraction(0)) for k in range(up_to + 1)]


def free_cumulants_from_moments(m: Sequence) -> FreeCumulantSequence:
    """Invert ``m_n = sum_k R_k sum_{i_1+..+i_k = n-k} m_{i_1} ... m_{i_k}``."""
    m = [Fraction(x) for x in m]
    if not m or m[0] != 1:
        raise ValueError("m_0 must equal 1")
    top = len(m) - 1
    # conv[k][j] = coefficient sum_{i_1+..+i_k = j} m_{i_1}...m_{i_k}
    conv = [[Fraction(1)] + [Fraction(0)] * top]
    for _ in range(top):
        prev = conv[-1]
        conv.append([sum((prev[a] * m[j - a] for a in range(j + 1)), Fraction(0)) for j in range(top + 1)])
    R = [Fraction(0)] * (top + 1)
    for n in range(1, top + 1):
        acc = sum((R[k] * conv[k][n - k] for k in range(1, n)), Fraction(0))
        R[n] = m[n] - acc
    return FreeCumulantSequence(tuple(R[1:]))


def free_cumulant_oracle(lam: YoungDiagram, l: int) -> Fraction:
    """``R_{l+1}`` of the transition measure."""
    if l < 1:
        raise ValueError("l must be positive")
    m = moments(transition_measure(lam), l + 1)
    return free_cumulants_from_moments(m)[l + 1]
