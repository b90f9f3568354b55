"""Verification suites: closed forms against identities and brute force.

Each suite returns a list of CheckResult records; the CLI renders them and
turns them into an exit status.  Suites that need graph enumeration refuse
ranges beyond their hard bounds instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bijections, formulas, oracle, strings
from .formulas import GAMMA, LAMBDA
from .oracle import VERTICES
from .strings import Dihedral, apply

PASS = "PASS"
FAIL = "FAIL"
REFUSED = "REFUSED"

SUITE_DEFAULT_MAX = {
    "formulas": 200,
    "oracle-vs-formula": 14,
    "bijections": 16,
    "automorphisms": 8,
}

SUITE_HARD_BOUND = {
    "oracle-vs-formula": oracle.BUILD_LIMIT,
    "bijections": 18,
    "automorphisms": 8,
}


@dataclass
class CheckResult:
    name: str
    scope: str
    status: str
    detail: str = ""


def _check(name: str, scope: str, failure: str | None) -> CheckResult:
    if failure is None:
        return CheckResult(name, scope, PASS)
    return CheckResult(name, scope, FAIL, failure)


def _nonzero(hist: dict[int, int]) -> dict[int, int]:
    return {k: v for k, v in hist.items() if v}


# ---------------------------------------------------------------------------
# formulas suite: identities that need no graph enumeration


def _fib_binomial_identity(max_n: int) -> str | None:
    for n in range(-1, max_n + 1):
        total = sum(formulas.binomial(n - k, k) for k in range(0, n // 2 + 1))
        if total != formulas.fib(n + 1):
            return f"n={n}: sum {total} != fib({n + 1})"
    return None


def _lucas_binomial_identity(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        total = 0
        for k in range(0, n // 2 + 1):
            term = n * formulas.binomial(n - k, k)
            if term % (n - k) != 0:
                return f"n={n}, k={k}: non-integral term"
            total += term // (n - k)
        if total != formulas.lucas(n):
            return f"n={n}: sum {total} != lucas({n})"
    return None


def _convolution_identity(max_n: int) -> str | None:
    for n in range(0, max_n + 1):
        total = sum(formulas.fib(i) * formulas.lucas(n - i) for i in range(n + 1))
        if total != (n + 1) * formulas.fib(n):
            return f"n={n}: convolution {total} != {(n + 1) * formulas.fib(n)}"
    return None


def _lucas_from_fib(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        if formulas.lucas(n) != formulas.fib(n - 1) + formulas.fib(n + 1):
            return f"n={n}"
    return None


def _primitive_divisor_sum(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        total = sum(formulas.lucas_string_classes(d).primitive for d in formulas.divisors(n))
        if total != formulas.lucas(n):
            return f"n={n}: divisor sum {total} != lucas({n})"
    return None


def _gamma_vertex_sums(max_n: int) -> str | None:
    for n in range(2, max_n + 1):
        total, hist = formulas.gamma_vertex_orbits(n)
        if sorted(hist) != [1, 2]:
            return f"n={n}: histogram keys {sorted(hist)}"
        if sum(k * c for k, c in hist.items()) != formulas.fib(n + 2):
            return f"n={n}: weighted sum mismatch"
        if sum(hist.values()) != total:
            return f"n={n}: orbit total mismatch"
    return None


def _gamma_edge_sums(max_n: int) -> str | None:
    for n in range(0, max_n + 1):
        total, hist = formulas.gamma_edge_orbits(n)
        edges = formulas.graph_counts(n, GAMMA).edges
        if sum(k * c for k, c in hist.items()) != edges:
            return f"n={n}: weighted sum mismatch"
        if sum(hist.values()) != total:
            return f"n={n}: orbit total mismatch"
    return None


def _lambda_vertex_sums(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        hist = formulas.lambda_vertex_orbit_histogram(n)
        if sum(k * c for k, c in hist.items()) != formulas.lucas(n):
            return f"n={n}: weighted sum != lucas({n})"
        if sum(hist.values()) != formulas.lambda_vertex_orbit_total(n):
            return f"n={n}: orbit total mismatch"
    return None


def _lambda_edge_sums(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        total, hist = formulas.lambda_edge_orbits(n)
        if sum(k * c for k, c in hist.items()) != n * formulas.fib(n - 1):
            return f"n={n}: weighted sum mismatch"
        if sum(hist.values()) != total:
            return f"n={n}: orbit total mismatch"
    return None


def _lambda_edge_total_shift(max_n: int) -> str | None:
    for n in range(5, max_n + 1):
        if formulas.lambda_edge_orbits(n).total != formulas.gamma_vertex_orbits(n - 3).total:
            return f"n={n}"
    return None


def _histogram_support(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        support = {k for k, c in formulas.lambda_vertex_orbit_histogram(n).items() if c > 0}
        if support != formulas.lambda_vertex_orbit_size_set(n):
            return f"n={n}: support {sorted(support)}"
    return None


def _asymmetric_boundary(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        a = formulas.lucas_string_classes(n).asymmetric
        if (n <= 8 and a != 0) or (n >= 9 and a <= 0):
            return f"n={n}: asymmetric count {a}"
    return None


def suite_formulas(max_n: int) -> list[CheckResult]:
    return [
        _check("fibonacci binomial-sum identity", f"n in [-1, {max_n}]", _fib_binomial_identity(max_n)),
        _check("lucas binomial-sum identity", f"n in [1, {max_n}]", _lucas_binomial_identity(max_n)),
        _check("fibonacci-lucas convolution identity", f"n in [0, {max_n}]", _convolution_identity(max_n)),
        _check("lucas from fibonacci neighbors", f"n in [1, {max_n}]", _lucas_from_fib(max_n)),
        _check("primitive counts sum to lucas over divisors", f"n in [1, {max_n}]", _primitive_divisor_sum(max_n)),
        _check("gamma vertex histogram sums", f"n in [2, {max_n}]", _gamma_vertex_sums(max_n)),
        _check("gamma edge histogram sums", f"n in [0, {max_n}]", _gamma_edge_sums(max_n)),
        _check("lambda vertex histogram sums", f"n in [1, {max_n}]", _lambda_vertex_sums(max_n)),
        _check("lambda edge histogram sums", f"n in [1, {max_n}]", _lambda_edge_sums(max_n)),
        _check("lambda edge total equals gamma vertex total shifted", f"n in [5, {max_n}]", _lambda_edge_total_shift(max_n)),
        _check("lambda vertex histogram support equals size set", f"n in [1, {max_n}]", _histogram_support(max_n)),
        _check("asymmetric strings appear exactly from length 9", f"n in [1, {max_n}]", _asymmetric_boundary(max_n)),
    ]


# ---------------------------------------------------------------------------
# oracle-vs-formula suite: closed forms against explicit enumeration


def _gamma_vertex_vs_oracle(max_n: int) -> str | None:
    for n in range(2, max_n + 1):
        observed = oracle.histogram(oracle.vertex_orbits(oracle.build(n, GAMMA)))
        expected = _nonzero(formulas.gamma_vertex_orbits(n).by_size)
        if observed != expected:
            return f"n={n}: oracle {observed} != formula {expected}"
    return None


def _gamma_edge_vs_oracle(max_n: int) -> str | None:
    for n in range(0, max_n + 1):
        observed = oracle.histogram(oracle.edge_orbits(oracle.build(n, GAMMA)))
        expected = _nonzero(formulas.gamma_edge_orbits(n).by_size)
        if observed != expected:
            return f"n={n}: oracle {observed} != formula {expected}"
    return None


def _lambda_vertex_vs_oracle(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        partition = oracle.vertex_orbits(oracle.build(n, LAMBDA))
        observed = oracle.histogram(partition)
        expected = _nonzero(formulas.lambda_vertex_orbit_histogram(n))
        if observed != expected:
            return f"n={n}: oracle {observed} != formula {expected}"
        if len(partition.orbits) != formulas.lambda_vertex_orbit_total(n):
            return f"n={n}: totals differ"
    return None


def _lambda_edge_vs_oracle(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        observed = oracle.histogram(oracle.edge_orbits(oracle.build(n, LAMBDA)))
        expected = _nonzero(formulas.lambda_edge_orbits(n).by_size)
        if observed != expected:
            return f"n={n}: oracle {observed} != formula {expected}"
    return None


def _lambda_vertex_size_set(max_n: int) -> str | None:
    for n in range(3, max_n + 1):
        partition = oracle.vertex_orbits(oracle.build(n, LAMBDA))
        observed = {len(orbit) for orbit in partition.orbits}
        expected = formulas.lambda_vertex_orbit_size_set(n)
        if observed != expected:
            return f"n={n}: oracle {sorted(observed)} != {sorted(expected)}"
    return None


def _lambda_edge_size_set(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        partition = oracle.edge_orbits(oracle.build(n, LAMBDA))
        observed = {len(orbit) for orbit in partition.orbits}
        if not observed <= {n, 2 * n}:
            return f"n={n}: sizes {sorted(observed)} escape {{n, 2n}}"
        if (observed == {n, 2 * n}) != (n >= 5):
            return f"n={n}: equality with {{n, 2n}} fails the n >= 5 boundary"
    return None


def _necklaces_vs_oracle(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        lucas_strings = strings.enumerate_strings(n, strings.LUCAS)
        rotation_classes = {
            min(u[i:] + u[:i] for i in range(n)) for u in lucas_strings
        }
        if len(rotation_classes) != formulas.necklace_count(n):
            return f"n={n}: {len(rotation_classes)} rotation classes"
    return None


def _string_classes_vs_oracle(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        primitive = symmetric = asymmetric = 0
        for u in strings.enumerate_strings(n, strings.LUCAS):
            d = strings.decompose(u)
            if d.exponent == 1:
                primitive += 1
                if d.symmetric:
                    symmetric += 1
            if strings.orbit_size(u) == 2 * n:
                asymmetric += 1
        expected = formulas.lucas_string_classes(n)
        if (primitive, symmetric, asymmetric) != tuple(expected):
            return (
                f"n={n}: classified {(primitive, symmetric, asymmetric)}"
                f" != formula {tuple(expected)}"
            )
    return None


def _reflection_fix_sum(max_n: int) -> str | None:
    for d in range(1, max_n + 1):
        graph = oracle.build(d, LAMBDA)
        total = sum(
            len(oracle.fixed_points(Dihedral(j, True), graph, VERTICES)) for j in range(d)
        )
        if total != d * formulas.fib(d // 2 + 2):
            return f"d={d}: fixed-point sum {total}"
    return None


def _fib_palindromes_vs_oracle(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        all_strings = strings.enumerate_strings(n, strings.FIBONACCI)
        palindromes = [u for u in all_strings if u == u[::-1]]
        got = (
            len(palindromes),
            sum(1 for u in palindromes if u[0] == "0"),
            sum(1 for u in palindromes if u[0] == "1"),
        )
        want = tuple(
            formulas.fib_palindrome_fix(n, variant) for variant in ("all", "starts0", "starts1")
        )
        if got != want:
            return f"n={n}: enumeration {got} != formula {want}"
    return None


def _edges_have_primitive_endpoint(max_n: int) -> str | None:
    for n in range(5, max_n + 1):
        graph = oracle.build(n, LAMBDA)
        for u, v in graph.edge_strings():
            if strings.decompose(u).exponent != 1 and strings.decompose(v).exponent != 1:
                return f"n={n}: edge ({u}, {v}) has no primitive endpoint"
    return None


def suite_oracle_vs_formula(max_n: int) -> list[CheckResult]:
    return [
        _check("gamma vertex orbits: formula equals enumeration", f"n in [2, {max_n}]", _gamma_vertex_vs_oracle(max_n)),
        _check("gamma edge orbits: formula equals enumeration", f"n in [0, {max_n}]", _gamma_edge_vs_oracle(max_n)),
        _check("lambda vertex orbits: formula equals enumeration", f"n in [1, {max_n}]", _lambda_vertex_vs_oracle(max_n)),
        _check("lambda edge orbits: formula equals enumeration", f"n in [1, {max_n}]", _lambda_edge_vs_oracle(max_n)),
        _check("lambda vertex orbit sizes match the size set", f"n in [3, {max_n}]", _lambda_vertex_size_set(max_n)),
        _check("lambda edge orbit sizes within {n, 2n}, equal iff n >= 5", f"n in [1, {max_n}]", _lambda_edge_size_set(max_n)),
        _check("necklace count equals rotation classes", f"n in [1, {max_n}]", _necklaces_vs_oracle(max_n)),
        _check("string class counts equal exhaustive classification", f"n in [1, {max_n}]", _string_classes_vs_oracle(max_n)),
        _check("reflection fixed-point sum identity", f"n in [1, {max_n}]", _reflection_fix_sum(max_n)),
        _check("palindrome counts equal enumeration", f"n in [1, {max_n}]", _fib_palindromes_vs_oracle(max_n)),
        _check("every lucas edge has a primitive endpoint", f"n in [5, {max_n}]", _edges_have_primitive_endpoint(max_n)),
    ]


# ---------------------------------------------------------------------------
# bijections suite


def _tiling_round_trip(max_len: int) -> str | None:
    for n in range(0, max_len + 1):
        for u in strings.enumerate_strings(n, strings.FIBONACCI):
            if bijections.tiling_to_string(bijections.string_to_tiling(u)) != u:
                return f"string {u}"
    for m in range(1, max_len + 2):
        for t in bijections.enumerate_tilings(m):
            if bijections.string_to_tiling(bijections.tiling_to_string(t)) != t:
                return f"tiling {t}"
    return None


def _palindrome_reflection(max_len: int) -> str | None:
    for n in range(0, max_len + 1):
        for u in strings.enumerate_strings(n, strings.FIBONACCI):
            t = bijections.string_to_tiling(u)
            if (u == u[::-1]) != (t == t[::-1]):
                return f"string {u}, tiling {t}"
    return None


def _tiling_counts(max_m: int) -> str | None:
    if bijections.distinct_tilings(2) != 1:
        return "m=2: expected exactly 1 distinct tiling"
    for m in range(3, max_m + 1):
        tilings = bijections.distinct_tilings(m)
        partitions = bijections.distinct_partitions(m)
        expected = formulas.gamma_vertex_orbits(m - 1).total
        if not tilings == partitions == expected:
            return f"m={m}: tilings {tilings}, partitions {partitions}, formula {expected}"
    return None


def _edge_map_well_defined(max_n: int) -> str | None:
    for n in range(5, max_n + 1):
        graph = oracle.build(n, LAMBDA)
        for u, v in graph.edge_strings():
            base = bijections.lambda_edge_to_gamma_vertex((u, v))
            base_rep = min(base, base[::-1])
            for g in Dihedral.full_group(n):
                image = bijections.lambda_edge_to_gamma_vertex((apply(g, u), apply(g, v)))
                if min(image, image[::-1]) != base_rep:
                    return f"n={n}: edge ({u}, {v}) under {g}"
    return None


def _edge_map_surjective(max_n: int) -> str | None:
    for n in range(5, max_n + 1):
        for w in strings.enumerate_strings(n - 3, strings.FIBONACCI):
            edge = ("010" + w, "000" + w)
            if not (strings.is_lucas(edge[0]) and strings.is_lucas(edge[1])):
                return f"n={n}: constructed pair for {w} is not an edge"
            if bijections.lambda_edge_to_gamma_vertex(edge) != w:
                return f"n={n}: preimage construction fails for {w}"
    return None


def _edge_orbit_bijection(max_n: int) -> str | None:
    for n in range(5, max_n + 1):
        if not bijections.verify_edge_orbit_bijection(n):
            return f"n={n}"
    return None


def suite_bijections(max_n: int) -> list[CheckResult]:
    rt_len = min(max_n, 16)
    pal_len = min(max_n, 14)
    wd_max = min(max_n, 12)
    sur_max = min(max_n, 14)
    return [
        _check("tiling round trips both directions", f"lengths <= {rt_len}", _tiling_round_trip(rt_len)),
        _check("palindromes match reflection-invariant tilings", f"lengths <= {pal_len}", _palindrome_reflection(pal_len)),
        _check("distinct tilings and partitions match orbit totals", f"m in [2, {max_n}]", _tiling_counts(max_n)),
        _check("edge map constant on orbits", f"n in [5, {wd_max}]", _edge_map_well_defined(wd_max)),
        _check("edge map surjective", f"n in [5, {sur_max}]", _edge_map_surjective(sur_max)),
        _check("edge orbit bijection holds", f"n in [5, {max_n}]", _edge_orbit_bijection(max_n)),
    ]


# ---------------------------------------------------------------------------
# automorphisms suite


def _gamma_automorphisms(max_n: int) -> str | None:
    for n in range(1, max_n + 1):
        graph = oracle.build(n, GAMMA)
        autos = oracle.automorphism_group(graph)
        if len(autos) != 2:
            return f"n={n}: found {len(autos)} automorphisms"
        if n >= 2:
            identity = tuple(range(len(graph.vertices)))
            reversal = oracle.dihedral_vertex_permutation(graph, Dihedral.reflection())
            if set(autos) != {identity, reversal}:
                return f"n={n}: automorphisms are not id and reversal"
    return None


def _lambda_automorphisms(max_n: int) -> str | None:
    for n in range(3, max_n + 1):
        graph = oracle.build(n, LAMBDA)
        autos = set(oracle.automorphism_group(graph))
        if len(autos) != 2 * n:
            return f"n={n}: found {len(autos)} automorphisms, expected {2 * n}"
        dihedral = {
            oracle.dihedral_vertex_permutation(graph, g) for g in Dihedral.full_group(n)
        }
        if autos != dihedral:
            return f"n={n}: automorphisms differ from dihedral string maps"
    return None


def _tiny_graph_automorphisms() -> str | None:
    expected = {(GAMMA, 0): 1, (LAMBDA, 0): 1, (LAMBDA, 1): 1, (LAMBDA, 2): 2}
    for (kind, n), size in expected.items():
        count = len(oracle.automorphism_group(oracle.build(n, kind)))
        if count != size:
            return f"{kind} n={n}: found {count} automorphisms, expected {size}"
    return None


def _automorphisms_preserve_weight(max_n: int) -> str | None:
    # gamma starts at 2: the exceptional automorphism of the 1-cube swaps
    # the two vertices, which differ in weight
    for kind, start in ((GAMMA, 2), (LAMBDA, 1)):
        for n in range(start, max_n + 1):
            graph = oracle.build(n, kind)
            for perm in oracle.automorphism_group(graph):
                for i, j in enumerate(perm):
                    if strings.weight(graph.vertices[i]) != strings.weight(graph.vertices[j]):
                        return f"{kind} n={n}: weight not preserved"
    return None


def suite_automorphisms(max_n: int) -> list[CheckResult]:
    return [
        _check("fibonacci cubes have exactly 2 automorphisms", f"n in [1, {max_n}]", _gamma_automorphisms(max_n)),
        _check("lucas cubes have exactly 2n automorphisms, all dihedral", f"n in [3, {max_n}]", _lambda_automorphisms(max_n)),
        _check("tiny cubes have the expected groups", "gamma n=0; lambda n in [0, 2]", _tiny_graph_automorphisms()),
        _check("automorphisms preserve weight", f"gamma n in [2, {max_n}], lambda n in [1, {max_n}]", _automorphisms_preserve_weight(max_n)),
    ]


SUITES = {
    "formulas": suite_formulas,
    "oracle-vs-formula": suite_oracle_vs_formula,
    "bijections": suite_bijections,
    "automorphisms": suite_automorphisms,
}


def run_suite(name: str, max_n: int | None) -> tuple[str, int | None, list[CheckResult]]:
    """Resolve the effective range, refusing ranges beyond hard bounds."""
    effective = SUITE_DEFAULT_MAX[name] if max_n is None else max_n
    bound = SUITE_HARD_BOUND.get(name)
    if bound is not None and effective > bound:
        refusal = CheckResult(
            name="suite refused",
            scope=f"max {effective}",
            status=REFUSED,
            detail=f"max {effective} exceeds the enumeration bound {bound} for this suite",
        )
        return name, effective, [refusal]
    return name, effective, SUITES[name](effective)
