"""Exact checks of character and coloring inequalities over finite corpora.

Every inequality here has the shape ``lhs <= base * a**k`` for some
existential constant ``a``.  Reports carry the exact ``lhs`` and ``base``
and the least feasible ``a`` as a rational bracket; pass/fail decisions are
made with exact rational arithmetic only.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .characters import character_ratio, reduced_length, support_parts
from .colorings import BipartiteGraph, count_colorings, graph_of, prune
from .cumulants import free_cumulant_sf
from .partitions import YoungDiagram, conjugate, corpus, falling_factorial, support_types
from .permutations import (
    Permutation,
    _num_cycles,
    count_by_length,
    defect,
    enumerate_minimal_factorizations,
    orbit_count,
    permutation_of_type,
)

ROOT_RESOLUTION = 10 ** 6

DEFAULT_CANDIDATES = tuple(Fraction(a) for a in (1, 2, 4, 16, 30, 2000))


def _iroot(n: int, k: int) -> int:
    """Largest integer ``x`` with ``x**k <= n``, by bisection."""
    if n < 0:
        raise ValueError("negative radicand")
    lo, hi = 0, 1
    while hi ** k <= n:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def root_bracket(x: Fraction, k: int, resolution: int = ROOT_RESOLUTION) -> tuple[Fraction, Fraction]:
    """Rationals ``lo <= x**(1/k) <= hi``; ``lo == hi`` when the root is rational,
    otherwise ``hi - lo == 1/resolution``."""
    x = Fraction(x)
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    rn, rd = _iroot(x.numerator, k), _iroot(x.denominator, k)
    if rn ** k == x.numerator and rd ** k == x.denominator:
        exact = Fraction(rn, rd)
        return exact, exact
    scaled = x.numerator * resolution ** k // x.denominator
    base = _iroot(scaled, k)
    return Fraction(base, resolution), Fraction(base + 1, resolution)


@dataclass
class BoundReport:
    """``lhs <= rhs_base * a**exponent``.

    ``min_feasible_a`` is the upper end of the root bracket (the bound holds
    there), ``0`` when ``lhs == 0`` and ``math.inf`` when no ``a`` works.
    """

    lhs: Fraction
    rhs_base: Fraction
    exponent: int
    min_feasible_a: Fraction | float
    bracket: tuple[Fraction, Fraction]
    holds_at: dict = field(default_factory=dict)

    def holds(self, a) -> bool:
        return self.lhs <= self.rhs_base * Fraction(a) ** self.exponent


def make_report(lhs: Fraction, rhs_base: Fraction, exponent: int, candidates: Iterable = DEFAULT_CANDIDATES) -> BoundReport:
    lhs, rhs_base = Fraction(lhs), Fraction(rhs_base)
    if lhs < 0 or rhs_base < 0:
        raise ValueError("both sides must be nonnegative")
    if lhs == 0:
        min_a, bracket = Fraction(0), (Fraction(0), Fraction(0))
    elif rhs_base == 0 or exponent == 0:
        feasible = exponent == 0 and lhs <= rhs_base
        min_a = Fraction(0) if feasible else math.inf
        bracket = (min_a, min_a)
    else:
        bracket = root_bracket(lhs / rhs_base, exponent)
        min_a = bracket[1]
    report = BoundReport(lhs, rhs_base, exponent, min_a, bracket)
    report.holds_at = {Fraction(a): report.holds(a) for a in candidates}
    return report


# ---------------------------------------------------------------------------
# main character bound


def rough_bound(lam: YoungDiagram, ct: Sequence[int], candidates: Iterable = DEFAULT_CANDIDATES) -> BoundReport:
    """``|chi(pi)| <= [a * max(r/n, c/n, |pi|/n)] ** |pi|``."""
    parts = support_parts(ct)
    k = reduced_length(parts)
    if k == 0:
        raise ValueError("the bound is vacuous for the identity")
    n = lam.size
    if sum(parts) > n:
        raise ValueError(f"support {sum(parts)} exceeds diagram size {n}")
    m = Fraction(max(lam.num_rows, lam.num_cols, k), n)
    return make_report(abs(character_ratio(lam, parts)), m ** k, k, candidates)


@dataclass
class ScanRow:
    n: int
    lam: YoungDiagram
    cycle_type: tuple[int, ...]
    report: BoundReport


@dataclass
class ScanResult:
    max_min_a: Fraction
    witness: ScanRow | None
    rows: list[ScanRow]

    def holds_everywhere(self, a) -> bool:
        return all(row.report.holds(a) for row in self.rows)


def scan_min_a(n_max: int, n_min: int = 1, candidates: Iterable = DEFAULT_CANDIDATES) -> ScanResult:
    """Worst per-instance least ``a`` over every diagram and every non-identity class."""
    candidates = tuple(candidates)
    rows = []
    best: Fraction = Fraction(0)
    witness = None
    for lam in corpus(n_max, max(n_min, 1)):
        for ct in support_types(lam.size, 2):
            row = ScanRow(lam.size, lam, ct, rough_bound(lam, ct, candidates))
            rows.append(row)
            if row.report.min_feasible_a > best or witness is None:
                best, witness = row.report.min_feasible_a, row
    return ScanResult(best, witness, rows)


def scan_rows_for(instances: Iterable[tuple[YoungDiagram, Sequence[int]]]) -> ScanResult:
    rows = [ScanRow(lam.size, lam, tuple(ct), rough_bound(lam, ct)) for lam, ct in instances]
    if not rows:
        return ScanResult(Fraction(0), None, rows)
    witness = max(rows, key=lambda r: r.report.min_feasible_a)
    return ScanResult(witness.report.min_feasible_a, witness, rows)


# ---------------------------------------------------------------------------
# coloring estimates


def pruned_star_bound(lam: YoungDiagram, graph: BipartiteGraph, A: int) -> tuple[int, Fraction]:
    """``(N^lam(G), A**V * (n / A**2) ** components(prune(G)))``."""
    if A < max(lam.num_rows, lam.num_cols):
        raise ValueError("A must dominate the number of rows and columns")
    comps = prune(graph).num_components()
    rhs = Fraction(A) ** graph.num_vertices * Fraction(lam.size, A * A) ** comps
    return count_colorings(lam, graph), rhs


def coloring_estimate_terms(lam: YoungDiagram, sigma1: Permutation, sigma2: Permutation, A: int) -> tuple[int, Fraction, Fraction]:
    """The three members of the two-step coloring estimate, left to right."""
    n = lam.size
    if not max(lam.num_rows, lam.num_cols) <= A <= n:
        raise ValueError(f"A={A} outside [max(r, c), n] = [{max(lam.num_rows, lam.num_cols)}, {n}]")
    l = sigma1.degree
    pi = sigma1 * sigma2
    c1 = _num_cycles(sigma1.zero_based)
    c2 = _num_cycles(sigma2.zero_based)
    cpi = _num_cycles(pi.zero_based)
    orbits = orbit_count(sigma1, sigma2)
    o = defect(sigma1, sigma2)
    N = count_colorings(lam, graph_of(sigma1, sigma2))
    middle = Fraction(A) ** (c1 + c2) * Fraction(n, A * A) ** orbits
    right = Fraction(A) ** (l - cpi) * Fraction(n) ** cpi / Fraction(A) ** o
    return N, middle, right


def coloring_estimate_check(lam: YoungDiagram, sigma1: Permutation, sigma2: Permutation, A: int) -> bool:
    N, middle, right = coloring_estimate_terms(lam, sigma1, sigma2, A)
    return N <= middle <= right


def factorization_count_bound(l: int) -> list[bool]:
    """``i! * #{s in S_l : |s| = i} <= l**(2i)`` for each ``i``."""
    return [factorial(i) * c <= l ** (2 * i) for i, c in enumerate(count_by_length(l))]


def is_forest(graph: BipartiteGraph) -> bool:
    return len(graph.edges) == graph.num_vertices - graph.num_components()


@dataclass
class HistogramReport:
    l: int
    histogram: dict
    min_c0: dict


def component_histogram(l: int) -> HistogramReport:
    """Minimal factorizations of an ``l``-cycle by the number of components of
    their pruned graph, with the least ``C0`` making
    ``count <= (C0 l)**(2s-2) / (2s-2)!`` hold for each ``s >= 2``."""
    if not 2 <= l <= 8:
        raise ValueError("l must lie in [2, 8]")
    hist: dict = {}
    for f in enumerate_minimal_factorizations(permutation_of_type((l,))):
        s = prune(graph_of(f.sigma1, f.sigma2)).num_components()
        hist[s] = hist.get(s, 0) + 1
    c0 = {}
    for s, count in sorted(hist.items()):
        if s >= 2:
            e = 2 * s - 2
            _, hi = root_bracket(Fraction(count * factorial(e)), e)
            c0[s] = hi / l
    return HistogramReport(l, dict(sorted(hist.items())), c0)


# ---------------------------------------------------------------------------
# error terms of the asymptotic formulas


def _cumulant(lam: YoungDiagram, k: int) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return free_cumulant_sf(lam, k)


def biane_error_check(
    lam: YoungDiagram, ct: Sequence[int], A: int, eps, candidates: Iterable = DEFAULT_CANDIDATES
) -> BoundReport:
    """``|chi - prod R_{k_i+1} / (n)_l| <= (eps**2 + (A/n) eps) (a A / n) ** |pi|``."""
    eps = Fraction(eps)
    parts = support_parts(ct)
    l = sum(parts)
    n = lam.size
    k = reduced_length(parts)
    if k == 0:
        raise ValueError("the bound is vacuous for the identity")
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if not max(lam.num_rows, lam.num_cols) <= A <= n:
        raise ValueError(f"A={A} outside [max(r, c), n]")
    if l * l > eps * A:
        raise ValueError(f"support^2 = {l * l} exceeds eps * A = {eps * A}")
    prod_r = Fraction(1)
    for p in parts:
        prod_r *= _cumulant(lam, p)
    lhs = abs(character_ratio(lam, parts) - prod_r / falling_factorial(n, l))
    base = (eps * eps + Fraction(A, n) * eps) * Fraction(A, n) ** k
    return make_report(lhs, base, k, candidates)


def vershik_kerov_check(lam: YoungDiagram, ct: Sequence[int], candidates: Iterable = DEFAULT_CANDIDATES) -> BoundReport:
    """``|prod R_{k_i+1} / n**l - prod [sum a_j**k - sum (-b_j)**k]| <= eps (A/n)**(l-r) a**r``

    with ``A = max(r(lam), c(lam))``, ``eps = sum k_i**2 * n / A**2``,
    ``a_j = lam_j / n`` and ``b_j = lam'_j / n``.  Parts equal to 1 are kept.
    """
    parts = tuple(int(k) for k in ct)
    if not parts or min(parts) < 1:
        raise ValueError("need at least one part, all >= 1")
    if lam.size == 0:
        raise ValueError("diagram must be nonempty")
    n = lam.size
    l, r = sum(parts), len(parts)
    A = max(lam.num_rows, lam.num_cols)
    eps = Fraction(sum(k * k for k in parts) * n, A * A)
    alpha = [Fraction(x, n) for x in lam.rows]
    beta = [Fraction(x, n) for x in conjugate(lam).rows]
    prod_r = Fraction(1)
    prod_thoma = Fraction(1)
    for k in parts:
        prod_r *= _cumulant(lam, k)
        prod_thoma *= sum(a ** k for a in alpha) - sum((-b) ** k for b in beta)
    lhs = abs(prod_r / Fraction(n) ** l - prod_thoma)
    base = eps * Fraction(A, n) ** (l - r)
    return make_report(lhs, base, r, candidates)


def comparison_curves(lam: YoungDiagram, ct: Sequence[int], q: float, b: float, C: float, D: float) -> dict:
    """Older bounds evaluated with caller-chosen constants, for side-by-side reports.

    No pass/fail meaning: the constants in these bounds are not known.
    """
    parts = support_parts(ct)
    n = lam.size
    k = reduced_length(parts)
    r, c = lam.num_rows, lam.num_cols
    chi = abs(float(character_ratio(lam, parts)))
    row_column_power = max(r / n, c / n, q) ** (b * sum(parts))
    if r < C * math.sqrt(n) and c < C * math.sqrt(n):
        sqrt_regime = (D * max(1.0, k * k / n) / math.sqrt(n)) ** k
    else:
        sqrt_regime = math.nan
    return {"abs_chi": chi, "row_column_power": row_column_power, "sqrt_regime": sqrt_regime}
