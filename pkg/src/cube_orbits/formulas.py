"""Exact closed-form counting for Fibonacci and Lucas cubes.

Everything here is integer arithmetic on Python ints (arbitrary precision),
so all counts stay exact at any index.  Divisions that occur inside the
closed forms are mathematically exact; they are checked at runtime and never
truncated.
"""

from __future__ import annotations

import math
from typing import NamedTuple

GAMMA = "gamma"
LAMBDA = "lambda"


class GraphCounts(NamedTuple):
    vertices: int
    edges: int


class OrbitSummary(NamedTuple):
    total: int
    by_size: dict[int, int]


class StringClassCounts(NamedTuple):
    primitive: int
    primitive_symmetric: int
    asymmetric: int


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r != 0:
        raise ArithmeticError(f"division {a}/{b} is not exact")
    return q


def fib(n: int) -> int:
    """n-th Fibonacci number; F(0)=0, F(1)=1, and F(-1)=1 by the recurrence."""
    if n < -1:
        raise ValueError(f"fib requires n >= -1, got {n}")
    if n == -1:
        return 1
    a, b = 1, 0
    for _ in range(n):
        a, b = b, a + b
    return b


def lucas(n: int) -> int:
    """n-th Lucas number; L(0)=2, L(1)=1."""
    if n < 0:
        raise ValueError(f"lucas requires n >= 0, got {n}")
    if n == 0:
        return 2
    a, b = 2, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of prime factors)."""
    if n < 1:
        raise ValueError(f"mobius requires n >= 1, got {n}")
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def euler_phi(n: int) -> int:
    """Euler totient."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial requires n, k >= 0, got ({n}, {k})")
    return math.comb(n, k)


def graph_counts(n: int, kind: str) -> GraphCounts:
    """Vertex and edge counts of the n-th Fibonacci cube (gamma) or Lucas cube (lambda)."""
    if n < 0:
        raise ValueError(f"graph_counts requires n >= 0, got {n}")
    if kind == GAMMA:
        return GraphCounts(fib(n + 2), _exact_div(n * fib(n + 1) + 2 * (n + 1) * fib(n), 5))
    if kind == LAMBDA:
        if n == 0:
            return GraphCounts(1, 0)
        return GraphCounts(lucas(n), n * fib(n - 1))
    raise ValueError(f"unknown cube kind {kind!r}")


def fib_palindrome_fix(n: int, variant: str = "all") -> int:
    """Number of palindromic Fibonacci strings of length n.

    variant selects all strings, only those starting with 0, or only those
    starting with 1.
    """
    if n < 1:
        raise ValueError(f"fib_palindrome_fix requires n >= 1, got {n}")
    k, odd = divmod(n, 2)
    if variant == "all":
        return fib(k + 3) if odd else fib(k + 1)
    if variant == "starts0":
        return fib(k + 2) if odd else fib(k)
    if variant == "starts1":
        return fib(k + 1) if odd else fib(k - 1)
    raise ValueError(f"unknown variant {variant!r}")


def gamma_vertex_orbits(n: int) -> OrbitSummary:
    """Vertex orbits of the Fibonacci cube under its automorphism group, n >= 2.

    Orbits have size 1 (palindromes) or 2; for n <= 1 the nontrivial
    automorphism is not the string reversal, so those cases belong to the
    exhaustive oracle rather than this closed form.
    """
    if n < 2:
        raise ValueError(f"gamma_vertex_orbits requires n >= 2, got {n}")
    fixed = fib((n - (-1) ** n) // 2 + 2)
    paired = _exact_div(fib(n + 2) - fixed, 2)
    return OrbitSummary(fixed + paired, {1: fixed, 2: paired})


def gamma_edge_orbits(n: int) -> OrbitSummary:
    """Edge orbits of the Fibonacci cube under its automorphism group, n >= 0."""
    if n < 0:
        raise ValueError(f"gamma_edge_orbits requires n >= 0, got {n}")
    edges = graph_counts(n, GAMMA).edges
    fixed = fib((n + 1) // 2) if n % 2 == 1 else 0
    paired = _exact_div(edges - fixed, 2)
    return OrbitSummary(fixed + paired, {1: fixed, 2: paired})


def necklace_count(n: int) -> int:
    """Binary necklaces of length n with no two cyclically adjacent 1s."""
    if n < 1:
        raise ValueError(f"necklace_count requires n >= 1, got {n}")
    return _exact_div(sum(euler_phi(n // d) * lucas(d) for d in divisors(n)), n)


def lambda_vertex_orbit_total(n: int) -> int:
    """Number of vertex orbits of the Lucas cube under its automorphism group.

    Half of (necklace count + number of reversal-invariant configurations);
    the second summand comes from the cycle-index evaluation.
    """
    if n < 1:
        raise ValueError(f"lambda_vertex_orbit_total requires n >= 1, got {n}")
    half = n // 2
    reflective = sum(binomial(half - (a + 1) // 2, a // 2) for a in range(half + 1))
    return _exact_div(necklace_count(n) + reflective, 2)


def lucas_string_classes(n: int) -> StringClassCounts:
    """Counts of primitive, primitive symmetric, and asymmetric Lucas strings of length n."""
    if n < 1:
        raise ValueError(f"lucas_string_classes requires n >= 1, got {n}")
    primitive = sum(mobius(n // d) * lucas(d) for d in divisors(n))
    symmetric = n * sum(mobius(n // d) * fib(d // 2 + 2) for d in divisors(n))
    return StringClassCounts(primitive, symmetric, primitive - symmetric)


def lambda_vertex_orbit_size_set(n: int) -> set[int]:
    """The exact set of orbit sizes occurring among Lucas-cube vertices.

    Every divisor of n occurs; the only other sizes are divisors of 2n that
    are at least 18 (they require an asymmetric root, which needs length >= 9).
    """
    if n < 1:
        raise ValueError(f"lambda_vertex_orbit_size_set requires n >= 1, got {n}")
    sizes = set(divisors(n))
    sizes.update(k for k in divisors(2 * n) if k >= 18)
    return sizes


def lambda_vertex_orbit_count(n: int, k: int) -> int:
    """Number of size-k vertex orbits of the Lucas cube of dimension n.

    Orbits of size k are generated by primitive symmetric strings of length k
    (when k divides n) and asymmetric strings of length k/2 (when k divides 2n);
    sizes not dividing 2n cannot occur, so the count there is 0.
    """
    if n < 1 or k < 1:
        raise ValueError(f"lambda_vertex_orbit_count requires n, k >= 1, got ({n}, {k})")
    if (2 * n) % k != 0:
        return 0
    if n % k == 0:
        s_k = lucas_string_classes(k).primitive_symmetric
        if k % 2 == 1:
            return _exact_div(s_k, k)
        return _exact_div(s_k + lucas_string_classes(k // 2).asymmetric, k)
    # k | 2n but k does not divide n forces k even
    return _exact_div(lucas_string_classes(k // 2).asymmetric, k)


def lambda_vertex_orbit_histogram(n: int) -> dict[int, int]:
    """Orbit-size histogram for Lucas-cube vertices, keyed by ascending size."""
    return {k: lambda_vertex_orbit_count(n, k) for k in sorted(lambda_vertex_orbit_size_set(n))}


def lambda_edge_orbits(n: int) -> OrbitSummary:
    """Edge orbits of the Lucas cube; sizes are n and 2n only (2n empty iff n <= 4)."""
    if n < 1:
        raise ValueError(f"lambda_edge_orbits requires n >= 1, got {n}")
    size_n = fib((n + 1 + (-1) ** n) // 2)
    size_2n = _exact_div(fib(n - 1) - size_n, 2)
    return OrbitSummary(size_n + size_2n, {n: size_n, 2 * n: size_2n})
