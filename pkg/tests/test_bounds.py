import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from symchar.bounds import (
    biane_error_check,
    coloring_estimate_check,
    coloring_estimate_terms,
    comparison_curves,
    component_histogram,
    factorization_count_bound,
    is_forest,
    pruned_star_bound,
    make_report,
    root_bracket,
    rough_bound,
    scan_min_a,
    scan_rows_for,
    vershik_kerov_check,
)
from symchar.colorings import complete, graph_of, star
from symchar.cumulants import free_cumulant_oracle
from symchar.partitions import YoungDiagram, corpus, support_types
from symchar.permutations import Permutation, catalan, enumerate_minimal_factorizations, permutation_of_type

Y = YoungDiagram
P = Permutation.from_cycles


def test_root_bracket():
    assert root_bracket(F(16, 81), 4) == (F(2, 3), F(2, 3))
    lo, hi = root_bracket(F(2), 2)
    assert lo * lo < 2 < hi * hi
    assert hi - lo == F(1, 10 ** 6)
    assert root_bracket(F(0), 3) == (0, 0)
    with pytest.raises(ValueError):
        root_bracket(F(-1), 2)


@given(st.fractions(min_value=F(1, 1000), max_value=1000), st.integers(1, 6))
def test_root_bracket_encloses(x, k):
    lo, hi = root_bracket(x, k)
    assert lo ** k <= x <= hi ** k


def test_make_report_edge_cases():
    assert make_report(F(0), F(1), 3).min_feasible_a == 0
    assert make_report(F(1), F(0), 2).min_feasible_a == math.inf
    r = make_report(F(1), F(1, 4), 2)
    assert r.min_feasible_a == 2 and r.holds(2) and not r.holds(F(199, 100))


def test_rough_bound_examples():
    r = rough_bound(Y((1, 1)), (2,))
    assert (r.lhs, r.rhs_base, r.min_feasible_a) == (1, 1, 1)
    assert r.holds(1)
    for n in range(2, 8):
        for ct in support_types(n, 2):
            r = rough_bound(Y((n,)), ct)
            assert r.lhs == 1 and r.rhs_base == 1 and r.holds(1)
    r = rough_bound(Y((2, 2)), (2,))
    assert r.lhs == 0 and r.min_feasible_a == 0
    with pytest.raises(ValueError):
        rough_bound(Y((2,)), ())


def test_scan_examples():
    small = scan_min_a(3)
    assert small.max_min_a >= 1
    assert scan_rows_for([(Y((1, 1)), (2,))]).max_min_a == 1
    mid = scan_min_a(6)
    # regression constant from the exhaustive scan
    assert mid.max_min_a == 2
    assert (str(mid.witness.lam), mid.witness.cycle_type) == ("2,2", (2, 2))
    assert mid.holds_everywhere(2000)


def test_feasibility_is_monotone_in_a():
    candidates = [F(1), F(3, 2), F(2), F(4), F(2000)]
    for row in scan_min_a(5).rows:
        flags = [row.report.holds(a) for a in candidates]
        assert flags == sorted(flags)
        if row.report.min_feasible_a != math.inf:
            assert row.report.holds(row.report.min_feasible_a)


def test_coloring_estimate_example():
    lam = Y((2, 1))
    N, middle, right = coloring_estimate_terms(lam, Permutation.identity(2), P([(1, 2)], 2), 2)
    assert (N, middle) == (5, F(6))
    assert N <= middle <= right
    with pytest.raises(ValueError):
        coloring_estimate_terms(lam, Permutation.identity(2), P([(1, 2)], 2), 1)
    with pytest.raises(ValueError):
        coloring_estimate_terms(lam, Permutation.identity(2), P([(1, 2)], 2), 4)


def test_coloring_estimate_minimal_factorizations():
    for lam in corpus(6, 1):
        for l in range(1, 5):
            pi = permutation_of_type((l,))
            for f in enumerate_minimal_factorizations(pi):
                for A in range(max(lam.num_rows, lam.num_cols), lam.size + 1):
                    assert coloring_estimate_check(lam, f.sigma1, f.sigma2, A)


def test_coloring_estimate_inverse_pair():
    s = P([(1, 2, 3)], 3)
    lam = Y((3, 2))
    for A in range(3, 6):
        assert coloring_estimate_check(lam, s, s.inverse(), A)


def test_pruned_star_bound_small_graphs():
    lam = Y((3, 2, 1))
    for g in [star(3), star(2, "left"), complete(2, 2), complete(2, 3)]:
        N, rhs = pruned_star_bound(lam, g, 3)
        assert N <= rhs
    with pytest.raises(ValueError):
        pruned_star_bound(lam, star(2), 2)


def test_factorization_count_bound():
    for l in range(1, 10):
        assert all(factorization_count_bound(l))


def test_histogram_examples():
    assert component_histogram(2).histogram == {1: 2}
    h3 = component_histogram(3)
    assert sum(h3.histogram.values()) == 5
    assert h3.histogram == {1: 2, 2: 3}
    for l in range(2, 8):
        h = component_histogram(l)
        assert sum(h.histogram.values()) == catalan(l)
        for s, c0 in h.min_c0.items():
            e = 2 * s - 2
            assert h.histogram[s] * math.factorial(e) <= (c0 * l) ** e
    with pytest.raises(ValueError):
        component_histogram(9)


def test_minimal_factorization_graphs_are_trees():
    for l in range(1, 8):
        for f in enumerate_minimal_factorizations(permutation_of_type((l,))):
            g = graph_of(f.sigma1, f.sigma2)
            assert is_forest(g) and g.num_components() == 1


def test_biane_examples():
    # one row: R_3 = Sigma_2, so the error vanishes
    r = biane_error_check(Y((6,)), (2,), 6, F(2, 3) + F(1, 100))
    assert r.lhs == 0 and r.min_feasible_a == 0
    r = biane_error_check(Y((4, 3, 2)), (2,), 8, F(99, 100))
    assert r.lhs >= 0 and r.rhs_base > 0
    with pytest.raises(ValueError):
        biane_error_check(Y((6,)), (2,), 6, F(1, 2))
    with pytest.raises(ValueError):
        biane_error_check(Y((6,)), (2,), 6, F(3, 2))
    with pytest.raises(ValueError):
        biane_error_check(Y((3, 3)), (2,), 2, F(1, 2))


def test_vershik_kerov_examples():
    assert vershik_kerov_check(Y((2, 1)), (2,)).lhs == 0
    # k = 1 compares R_2 / n = 1 with sum(alpha) + sum(beta) = 2
    for lam in corpus(6, 1):
        assert vershik_kerov_check(lam, (1,)).lhs == 1
    for n in range(2, 7):
        for k in range(2, n + 1):
            assert vershik_kerov_check(Y((n,)), (k,)).lhs == _one_row_gap(n, k)
    with pytest.raises(ValueError):
        vershik_kerov_check(Y(), (2,))


def _one_row_gap(n, k):
    # alpha = (1,), beta = (1/n,) * n
    r = free_cumulant_oracle(Y((n,)), k)
    return abs(r / F(n) ** k - (1 - n * F(-1, n) ** k))


def test_comparison_curves_report_only():
    out = comparison_curves(Y((3, 2, 1)), (2,), 0.5, 1.0, 2.0, 1.0)
    assert set(out) == {"abs_chi", "row_column_power", "sqrt_regime"}
    assert out["abs_chi"] == 0.0
