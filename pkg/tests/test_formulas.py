"""Closed-form counts: published values, identities, and exactness."""

import pytest

from cube_orbits import formulas
from cube_orbits.formulas import (
    GAMMA,
    LAMBDA,
    binomial,
    divisors,
    euler_phi,
    fib,
    fib_palindrome_fix,
    gamma_edge_orbits,
    gamma_vertex_orbits,
    graph_counts,
    lambda_edge_orbits,
    lambda_vertex_orbit_count,
    lambda_vertex_orbit_histogram,
    lambda_vertex_orbit_size_set,
    lambda_vertex_orbit_total,
    lucas,
    lucas_string_classes,
    mobius,
    necklace_count,
)


def test_fib_values():
    assert [fib(n) for n in range(-1, 11)] == [1, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(ValueError):
        fib(-2)


def test_lucas_values():
    assert [lucas(n) for n in range(0, 10)] == [2, 1, 3, 4, 7, 11, 18, 29, 47, 76]
    with pytest.raises(ValueError):
        lucas(-1)


def test_number_theory_helpers():
    assert mobius(1) == 1
    assert mobius(3) == -1
    assert mobius(9) == 0
    assert mobius(30) == -1
    assert euler_phi(12) == 4
    assert euler_phi(1) == 1
    assert divisors(18) == [1, 2, 3, 6, 9, 18]
    assert divisors(1) == [1]
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    for bad in (mobius, euler_phi, divisors):
        with pytest.raises(ValueError):
            bad(0)
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(2, -1)


def test_graph_counts():
    assert graph_counts(5, GAMMA) == (13, 20)
    assert graph_counts(9, LAMBDA) == (76, 189)
    assert graph_counts(0, LAMBDA) == (1, 0)
    assert graph_counts(0, GAMMA) == (1, 0)
    with pytest.raises(ValueError):
        graph_counts(-1, GAMMA)
    with pytest.raises(ValueError):
        graph_counts(3, "qube")


def test_fib_palindrome_fix_examples():
    assert fib_palindrome_fix(4, "all") == 2
    assert fib_palindrome_fix(5, "all") == 5
    assert fib_palindrome_fix(5, "starts1") == 2
    with pytest.raises(ValueError):
        fib_palindrome_fix(0)
    with pytest.raises(ValueError):
        fib_palindrome_fix(4, "starts2")


def test_fib_palindrome_fix_splits():
    for n in range(1, 30):
        assert fib_palindrome_fix(n, "all") == fib_palindrome_fix(
            n, "starts0"
        ) + fib_palindrome_fix(n, "starts1")


def test_gamma_vertex_orbits_examples():
    assert gamma_vertex_orbits(5) == (9, {1: 5, 2: 4})
    assert gamma_vertex_orbits(15) == (826, {1: 55, 2: 771})
    assert gamma_vertex_orbits(2) == (2, {1: 1, 2: 1})
    with pytest.raises(ValueError):
        gamma_vertex_orbits(1)


def test_gamma_edge_orbits_examples():
    assert gamma_edge_orbits(5) == (11, {1: 2, 2: 9})
    assert gamma_edge_orbits(14) == (1985, {1: 0, 2: 1985})
    assert gamma_edge_orbits(0).total == 0
    with pytest.raises(ValueError):
        gamma_edge_orbits(-1)


def test_gamma_histogram_sums():
    for n in range(2, 65):
        total, hist = gamma_vertex_orbits(n)
        assert sorted(hist) == [1, 2]
        assert hist[1] + 2 * hist[2] == fib(n + 2)
        assert hist[1] + hist[2] == total
    for n in range(0, 65):
        total, hist = gamma_edge_orbits(n)
        assert hist[1] + 2 * hist[2] == graph_counts(n, GAMMA).edges
        assert hist[1] + hist[2] == total


def test_lambda_vertex_orbit_total_examples():
    assert lambda_vertex_orbit_total(5) == 3
    assert lambda_vertex_orbit_total(12) == 26
    assert lambda_vertex_orbit_total(18) == 209
    with pytest.raises(ValueError):
        lambda_vertex_orbit_total(0)


def test_necklace_count_examples():
    assert necklace_count(1) == 1
    assert necklace_count(2) == 2
    assert necklace_count(5) == 3
    with pytest.raises(ValueError):
        necklace_count(0)


def test_lucas_string_classes_examples():
    assert lucas_string_classes(9) == (72, 54, 18)
    assert lucas_string_classes(12) == (300, 180, 120)
    assert lucas_string_classes(8) == (40, 40, 0)
    with pytest.raises(ValueError):
        lucas_string_classes(0)


def test_lucas_string_classes_identities():
    for n in range(1, 65):
        classes = lucas_string_classes(n)
        assert classes.primitive == classes.primitive_symmetric + classes.asymmetric
        assert (classes.asymmetric == 0) == (n <= 8)
        total = sum(lucas_string_classes(d).primitive for d in divisors(n))
        assert total == lucas(n)


def test_lambda_vertex_orbit_size_set_examples():
    assert lambda_vertex_orbit_size_set(9) == {1, 3, 9, 18}
    assert lambda_vertex_orbit_size_set(6) == {1, 2, 3, 6}
    assert lambda_vertex_orbit_size_set(12) == {1, 2, 3, 4, 6, 12, 24}


def test_lambda_vertex_orbit_count_examples():
    assert lambda_vertex_orbit_count(9, 9) == 6
    assert lambda_vertex_orbit_count(9, 18) == 1
    assert lambda_vertex_orbit_count(9, 6) == 0
    assert lambda_vertex_orbit_count(9, 7) == 0  # 7 does not divide 18
    with pytest.raises(ValueError):
        lambda_vertex_orbit_count(0, 1)
    with pytest.raises(ValueError):
        lambda_vertex_orbit_count(9, 0)


def test_lambda_vertex_histograms():
    for n in range(1, 65):
        hist = lambda_vertex_orbit_histogram(n)
        assert {k for k, c in hist.items() if c > 0} == lambda_vertex_orbit_size_set(n)
        assert sum(k * c for k, c in hist.items()) == lucas(n)
        assert sum(hist.values()) == lambda_vertex_orbit_total(n)


def test_lambda_edge_orbits_examples():
    assert lambda_edge_orbits(9) == (12, {9: 3, 18: 9})
    assert lambda_edge_orbits(4) == (2, {4: 2, 8: 0})
    assert lambda_edge_orbits(16) == (322, {16: 34, 32: 288})
    with pytest.raises(ValueError):
        lambda_edge_orbits(0)


def test_lambda_edge_orbit_identities():
    for n in range(1, 65):
        total, hist = lambda_edge_orbits(n)
        assert sum(k * c for k, c in hist.items()) == n * fib(n - 1)
        assert sum(hist.values()) == total
        assert (hist[2 * n] == 0) == (n <= 4)
    for n in range(5, 65):
        assert lambda_edge_orbits(n).total == gamma_vertex_orbits(n - 3).total


def test_binomial_sum_identities():
    # the three Fibonacci/Lucas summation identities, exact over a wide range
    for n in range(-1, 101):
        assert fib(n + 1) == sum(binomial(n - k, k) for k in range(0, n // 2 + 1))
    for n in range(1, 101):
        total = 0
        for k in range(0, n // 2 + 1):
            term = n * binomial(n - k, k)
            assert term % (n - k) == 0
            total += term // (n - k)
        assert total == lucas(n)
    for n in range(0, 101):
        assert sum(fib(i) * lucas(n - i) for i in range(n + 1)) == (n + 1) * fib(n)
    for n in range(1, 101):
        assert lucas(n) == fib(n - 1) + fib(n + 1)


def test_counts_exceed_machine_words():
    # 64-bit overflow territory stays exact
    assert fib(93) == 12200160415121876738
    assert graph_counts(93, GAMMA).vertices == fib(95)
    total, hist = gamma_vertex_orbits(120)
    assert hist[1] + 2 * hist[2] == fib(122)
