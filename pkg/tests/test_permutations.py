import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from symchar.permutations import (
    Permutation,
    brute_force_count_by_length,
    catalan,
    cayley_length,
    count_by_length,
    cycles,
    defect,
    enumerate_factorizations,
    enumerate_minimal_factorizations,
    enumerate_transitive_factorizations,
    normal_form,
    orbit_count,
    parse_cycle_type,
    permutation_of_type,
)

P = Permutation.from_cycles


def all_perms(l):
    return [Permutation(tuple(x + 1 for x in p)) for p in itertools.permutations(range(l))]


def perms_of_degree(max_l):
    return st.integers(1, max_l).flatmap(
        lambda l: st.permutations(range(1, l + 1)).map(lambda xs: Permutation(tuple(xs)))
    )


def test_composition_is_right_to_left():
    s = P([(1, 2)], 3)
    t = P([(2, 3)], 3)
    assert (s * t)(2) == s(t(2)) == 3
    assert s * t == P([(1, 2, 3)], 3)


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ValueError):
        P([(1, 4)], 3)


@pytest.mark.parametrize(
    "sigma, expected",
    [
        (Permutation.identity(3), [(1,), (2,), (3,)]),
        (P([(1, 2, 3)], 3), [(1, 2, 3)]),
        (P([(1, 3)], 3), [(1, 3), (2,)]),
    ],
)
def test_cycles(sigma, expected):
    assert cycles(sigma) == expected


def test_cayley_length_examples():
    assert cayley_length(Permutation.identity(4)) == 0
    assert cayley_length(P([(2, 4)], 4)) == 1
    assert cayley_length(P([(1, 2, 3), (4, 5)], 5)) == 3


def test_str_and_cycle_type():
    sigma = P([(1, 3), (2, 4, 5)], 6)
    assert str(sigma) == "(1 3)(2 4 5)"
    assert sigma.cycle_type() == (3, 2, 1)
    assert str(Permutation.identity(2)) == "e"


def test_permutation_of_type_and_parse():
    assert permutation_of_type((2, 3)) == P([(1, 2, 3), (4, 5)], 5)
    assert permutation_of_type((2,), degree=4).cycle_type() == (2, 1, 1)
    assert parse_cycle_type("2,3") == (3, 2)
    with pytest.raises(ValueError):
        parse_cycle_type("3,0")
    with pytest.raises(ValueError):
        permutation_of_type((3,), degree=2)


def test_length_invariants_exhaustive():
    for l in range(1, 6):
        group = all_perms(l)
        for s in group:
            for t in group:
                assert cayley_length(s * t) <= cayley_length(s) + cayley_length(t)
                assert cayley_length(t * s * t.inverse()) == cayley_length(s)


def test_factorizations_multiply_back():
    pi = P([(1, 3, 2), (4, 5)], 5)
    fs = list(enumerate_factorizations(pi))
    assert len(fs) == 120
    assert all(f.sigma1 * f.sigma2 == pi for f in fs)
    assert len({f.sigma2 for f in fs}) == 120


def test_factorization_small_cases():
    assert [(f.sigma1, f.sigma2) for f in enumerate_factorizations(Permutation.identity(1))] == [
        (Permutation.identity(1), Permutation.identity(1))
    ]
    pi = P([(1, 2, 3)], 3)
    lengths = Counter((cayley_length(f.sigma1), cayley_length(f.sigma2)) for f in enumerate_factorizations(pi))
    assert lengths == Counter({(0, 2): 1, (2, 0): 1, (2, 2): 1, (1, 1): 3})


def test_factorization_slices_partition_the_stream():
    pi = permutation_of_type((4,))
    whole = list(enumerate_factorizations(pi))
    pieces = list(enumerate_factorizations(pi, 0, 10)) + list(enumerate_factorizations(pi, 10))
    assert pieces == whole


def test_minimal_factorizations_small():
    t = P([(1, 2)], 2)
    got = {(f.sigma1, f.sigma2) for f in enumerate_minimal_factorizations(t)}
    assert got == {(Permutation.identity(2), t), (t, Permutation.identity(2))}
    assert sum(1 for _ in enumerate_minimal_factorizations(P([(1, 2, 3)], 3))) == 5
    assert sum(1 for _ in enumerate_minimal_factorizations(P([(1, 2, 3, 4)], 4))) == 14


@pytest.mark.parametrize("l", range(1, 10))
def test_minimal_factorizations_of_cycle_are_catalan(l):
    fs = list(enumerate_minimal_factorizations(permutation_of_type((l,))))
    assert len(fs) == catalan(l)
    assert len({(f.sigma1, f.sigma2) for f in fs}) == len(fs)
    assert all(cayley_length(f.sigma1) + cayley_length(f.sigma2) == l - 1 for f in fs)


def test_noncrossing_route_matches_filter_on_two_cycles():
    # 8 points is above the filter threshold, so this runs the non-crossing route
    pi = permutation_of_type((5, 3))
    fs = list(enumerate_minimal_factorizations(pi))
    assert len(fs) == catalan(5) * catalan(3)
    assert all(f.sigma1 * f.sigma2 == pi for f in fs)
    assert all(cayley_length(f.sigma1) + cayley_length(f.sigma2) == 6 for f in fs)


def test_orbit_count_examples():
    e3 = Permutation.identity(3)
    assert orbit_count(e3, e3) == 3
    assert orbit_count(P([(1, 2, 3)], 3), e3) == 1
    assert orbit_count(P([(1, 2)], 4), P([(3, 4)], 4)) == 2


def test_defect_examples():
    pi = P([(1, 4), (2, 3)], 4)
    assert defect(Permutation.identity(4), pi) == 0
    assert defect(P([(1, 2, 3)], 3), P([(1, 3, 2)], 3)) == 2
    for l in range(2, 7):
        for f in enumerate_minimal_factorizations(permutation_of_type((l,))):
            assert defect(f.sigma1, f.sigma2) == 0


def test_normal_form_examples():
    s1, s2 = P([(1, 2)], 2), P([(1, 2)], 2)
    assert normal_form(s1, s2) == (s1, s2)
    assert cayley_length(s1) == defect(s1, s2) == 1

    s1, s2 = P([(1, 2, 3)], 3), P([(1, 2)], 3)
    n1, n2 = normal_form(s1, s2)
    assert (n1, n2) == (P([(2, 3)], 3), P([(1, 2, 3)], 3))
    assert cayley_length(n1) == 1


def _check_normal_form(s1, s2):
    n1, n2 = normal_form(s1, s2)
    assert n1 * n2 == s1 * s2
    assert cayley_length(n1) + cayley_length(n2) == cayley_length(s1) + cayley_length(s2)
    assert cayley_length(n2) == cayley_length(n2 * s2.inverse()) + cayley_length(s2)
    owner = {a: i for i, c in enumerate(cycles(n2)) for a in c}
    assert all(len({owner[a] for a in c}) == 1 for c in cycles(n1))
    assert cayley_length(n1) == defect(s1, s2)


def test_normal_form_postconditions_exhaustive():
    for l in range(1, 6):
        group = all_perms(l)
        for s1 in group:
            for s2 in group:
                _check_normal_form(s1, s2)


@given(perms_of_degree(7), st.data())
def test_normal_form_postconditions_random(s1, data):
    s2 = data.draw(st.permutations(range(1, s1.degree + 1)).map(lambda xs: Permutation(tuple(xs))))
    _check_normal_form(s1, s2)


def test_count_by_length_examples():
    assert count_by_length(1) == [1]
    assert count_by_length(3) == [1, 3, 2]
    assert count_by_length(4) == [1, 6, 11, 6]


def test_count_by_length_matches_brute_force():
    for l in range(1, 8):
        assert count_by_length(l) == brute_force_count_by_length(l)


def _joined_by(s1, s2, blocks):
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for block in blocks:
        for a in block[1:]:
            union(block[0], a)
    for s in (s1, s2):
        for i in range(1, s.degree + 1):
            union(i, s(i))
    return len({find(i) for i in range(1, s1.degree + 1)}) == 1


def test_transitive_factorizations():
    t = P([(1, 2)], 2)
    assert sum(1 for _ in enumerate_transitive_factorizations([t])) == 2
    singles = list(enumerate_transitive_factorizations([Permutation.identity(1)] * 2))
    swap = P([(1, 2)], 2)
    assert [(f.sigma1, f.sigma2) for f in singles] == [(swap, swap)]

    got = list(enumerate_transitive_factorizations([t, t]))
    pi = P([(1, 2), (3, 4)], 4)
    brute = [f for f in enumerate_factorizations(pi) if _joined_by(f.sigma1, f.sigma2, [(1, 2), (3, 4)])]
    assert got == brute
    assert len(got) == 20
