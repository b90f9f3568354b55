"""Command-line front end.

Subcommands: ``table`` reproduces the published count tables, ``verify`` runs
the cross-validation suites, ``orbits`` lists orbits computed by enumeration,
``witness`` constructs strings with prescribed orbit behavior.  Output is
deterministic; counts are rendered as full decimal strings (also inside
JSON).  Exit codes: 0 pass/success, 1 verification failure, 2 usage error or
refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas, oracle, verify
from .formulas import GAMMA, LAMBDA
from .strings import dihedral_orbit, asymmetric_witness, vertex_orbit_witness

PLAIN = "plain"
CSV = "csv"
JSON = "json"

TABLE_DEFAULT_MAX = {
    "gamma-v": 15,
    "gamma-e": 14,
    "lucas-classes": 16,
    "lambda-v": 18,
    "lambda-e": 16,
}

TABLE_LABELS = {
    "gamma-v": ["|V(Gamma_n)|", "o_V(Gamma_n)", "o_V(Gamma_n,1)", "o_V(Gamma_n,2)"],
    "gamma-e": ["|E(Gamma_n)|", "o_E(Gamma_n)", "o_E(Gamma_n,1)", "o_E(Gamma_n,2)"],
    "lucas-classes": ["L_n", "p_n", "s_n", "a_n"],
    "lambda-v": ["o_V(Lambda_n)", "o_V(Lambda_n,n)", "o_V(Lambda_n,2n)"],
    "lambda-e": ["o_E(Lambda_n)", "o_E(Lambda_n,n)", "o_E(Lambda_n,2n)"],
}


def _gamma_v_column(n: int) -> list[int]:
    if n >= 2:
        total, hist = formulas.gamma_vertex_orbits(n)
        return [formulas.fib(n + 2), total, hist[1], hist[2]]
    # n = 1: the single nontrivial automorphism is not the string reversal
    hist = oracle.histogram(oracle.vertex_orbits(oracle.build(n, GAMMA)))
    return [formulas.fib(n + 2), sum(hist.values()), hist.get(1, 0), hist.get(2, 0)]


def _gamma_e_column(n: int) -> list[int]:
    total, hist = formulas.gamma_edge_orbits(n)
    return [formulas.graph_counts(n, GAMMA).edges, total, hist[1], hist[2]]


def _lucas_classes_column(n: int) -> list[int]:
    classes = formulas.lucas_string_classes(n)
    return [formulas.lucas(n), classes.primitive, classes.primitive_symmetric, classes.asymmetric]


def _lambda_v_column(n: int) -> list[int]:
    return [
        formulas.lambda_vertex_orbit_total(n),
        formulas.lambda_vertex_orbit_count(n, n),
        formulas.lambda_vertex_orbit_count(n, 2 * n),
    ]


def _lambda_e_column(n: int) -> list[int]:
    total, hist = formulas.lambda_edge_orbits(n)
    return [total, hist[n], hist[2 * n]]


TABLE_COLUMNS = {
    "gamma-v": _gamma_v_column,
    "gamma-e": _gamma_e_column,
    "lucas-classes": _lucas_classes_column,
    "lambda-v": _lambda_v_column,
    "lambda-e": _lambda_e_column,
}


def table_rows(which: str, max_n: int) -> tuple[list[str], list[list[int]]]:
    """Row labels and row values (one row per label, columns n = 1..max_n)."""
    if which not in TABLE_LABELS:
        raise ValueError(f"unknown table {which!r}")
    if max_n < 1:
        raise ValueError(f"table range must start at n = 1, got max {max_n}")
    labels = TABLE_LABELS[which]
    columns = [TABLE_COLUMNS[which](n) for n in range(1, max_n + 1)]
    rows = [[col[r] for col in columns] for r in range(len(labels))]
    return labels, rows


def _human(value: str) -> str:
    # empty string renders as epsilon in human-facing output
    return value if value else "ε"


def _render_table_plain(which: str, max_n: int, out: list[str]) -> None:
    labels, rows = table_rows(which, max_n)
    header = ["n"] + labels
    matrix = [list(range(1, max_n + 1))] + rows
    label_width = max(len(name) for name in header)
    col_widths = [max(len(str(matrix[r][c])) for r in range(len(matrix))) for c in range(max_n)]
    for name, row in zip(header, matrix):
        cells = "  ".join(str(v).rjust(w) for v, w in zip(row, col_widths))
        out.append(f"{name.ljust(label_width)}  {cells}")


def _render_table_csv(which: str, max_n: int, out: list[str]) -> None:
    labels, rows = table_rows(which, max_n)
    out.append(",".join(["n"] + labels))
    for idx, n in enumerate(range(1, max_n + 1)):
        out.append(",".join([str(n)] + [str(row[idx]) for row in rows]))


def _render_table_json(which: str, max_n: int, out: list[str]) -> None:
    labels, rows = table_rows(which, max_n)
    records = []
    for idx, n in enumerate(range(1, max_n + 1)):
        record: dict[str, str] = {"n": str(n)}
        for label, row in zip(labels, rows):
            record[label] = str(row[idx])
        records.append(record)
    payload = {
        "command": "table",
        "parameters": {"table": which, "max": max_n},
        "result": {"rows": records},
    }
    out.append(json.dumps(payload, indent=2))


def cmd_table(args: argparse.Namespace) -> int:
    max_n = args.max if args.max is not None else TABLE_DEFAULT_MAX[args.which]
    out: list[str] = []
    if args.format == PLAIN:
        _render_table_plain(args.which, max_n, out)
    elif args.format == CSV:
        _render_table_csv(args.which, max_n, out)
    else:
        _render_table_json(args.which, max_n, out)
    print("\n".join(out))
    return 0


def cmd_orbits(args: argparse.Namespace) -> int:
    graph = oracle.build(args.n, args.cube)
    if args.ground == oracle.VERTICES:
        partition = oracle.vertex_orbits(graph)
    else:
        partition = oracle.edge_orbits(graph)

    def rep_plain(element) -> str:
        if args.ground == oracle.VERTICES:
            return _human(element)
        return f"{_human(element[0])}-{_human(element[1])}"

    def rep_machine(element):
        if args.ground == oracle.VERTICES:
            return element
        return list(element)

    if args.format == JSON:
        payload = {
            "command": "orbits",
            "parameters": {"cube": args.cube, "n": args.n, "ground": args.ground},
            "result": {
                "orbit_count": str(len(partition.orbits)),
                "orbits": [
                    {"representative": rep_machine(orbit[0]), "size": str(len(orbit))}
                    for orbit in partition.orbits
                ],
            },
        }
        print(json.dumps(payload, indent=2))
        return 0
    if args.format == CSV:
        lines = ["representative,size"]
        for orbit in partition.orbits:
            rep = orbit[0] if args.ground == oracle.VERTICES else f"{orbit[0][0]}-{orbit[0][1]}"
            lines.append(f"{rep},{len(orbit)}")
        print("\n".join(lines))
        return 0
    lines = [f"{args.cube} n={args.n} {args.ground}: {len(partition.orbits)} orbits"]
    for orbit in partition.orbits:
        lines.append(f"{rep_plain(orbit[0])}  {len(orbit)}")
    print("\n".join(lines))
    return 0


def cmd_witness(args: argparse.Namespace) -> int:
    if args.kind == "asymmetric":
        witness = asymmetric_witness(args.n)
    else:
        if args.k is None:
            raise ValueError("witness vertex-orbit-size requires a target size k")
        witness = vertex_orbit_witness(args.n, args.k)
    size = len(dihedral_orbit(witness))
    if args.format == JSON:
        payload = {
            "command": "witness",
            "parameters": {"kind": args.kind, "n": args.n, "k": args.k},
            "result": {"witness": witness, "orbit_size": str(size)},
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"witness: {witness}")
    print(f"orbit size: {size} (recomputed by orbit enumeration)")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suite_names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    lines: list[str] = []
    any_fail = False
    any_refused = False
    checks_run = 0
    for name in suite_names:
        suite, effective, results = verify.run_suite(name, args.max)
        lines.append(f"suite {suite} (max n = {effective})")
        for result in results:
            if result.status == verify.REFUSED:
                any_refused = True
                lines.append(f"  REFUSED  {result.detail}")
                continue
            checks_run += 1
            lines.append(f"  {result.status}  {result.name}  [{result.scope}]")
            if result.status == verify.FAIL:
                any_fail = True
                lines.append(f"         counterexample: {result.detail}")
    if any_fail:
        lines.append(f"result: FAIL ({checks_run} checks run)")
        code = 1
    elif any_refused:
        lines.append(f"result: REFUSED ({checks_run} checks run, some suites skipped)")
        code = 2
    else:
        lines.append(f"result: PASS ({checks_run} checks)")
        code = 0
    print("\n".join(lines))
    return code


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cube-orbits",
        description="Exact orbit counts for Fibonacci and Lucas cubes, with brute-force cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="reproduce a published count table")
    p_table.add_argument("which", choices=sorted(TABLE_DEFAULT_MAX))
    p_table.add_argument("--max", type=_positive, default=None, help="largest n column")
    p_table.add_argument("--format", choices=(PLAIN, CSV, JSON), default=PLAIN)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p_verify.add_argument("--max", type=_positive, default=None, help="largest n to check")
    p_verify.set_defaults(func=cmd_verify)

    p_orbits = sub.add_parser("orbits", help="list orbits computed by enumeration")
    p_orbits.add_argument("cube", choices=(GAMMA, LAMBDA))
    p_orbits.add_argument("n", type=_nonnegative)
    p_orbits.add_argument("ground", choices=(oracle.VERTICES, oracle.EDGES))
    p_orbits.add_argument("--format", choices=(PLAIN, CSV, JSON), default=PLAIN)
    p_orbits.set_defaults(func=cmd_orbits)

    p_witness = sub.add_parser("witness", help="construct a string with prescribed orbit size")
    p_witness.add_argument("kind", choices=("asymmetric", "vertex-orbit-size"))
    p_witness.add_argument("n", type=_positive)
    p_witness.add_argument("k", type=_positive, nargs="?", default=None)
    p_witness.add_argument("--format", choices=(PLAIN, JSON), default=PLAIN)
    p_witness.set_defaults(func=cmd_witness)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
