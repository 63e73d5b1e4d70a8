"""Command-line front end.

Subcommands:

* ``verify``    -- run both verifiers on a coloring JSON document.
* ``construct`` -- emit a coloring (general tripartite, uniform, or three-split).
* ``decide``    -- exact feasibility for one (parts, t, max_deg) query.
* ``va``        -- smallest / strong color count for a spec.
* ``table``     -- prediction-vs-engine reproduction table (CSV or JSON).

Exit codes: 0 success/feasible/verified, 1 verification failure, 2 infeasible,
3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import construct_theorem22, construct_three_split, construct_uniform
from .engine import compute_va_eq, compute_va_equiv, decide
from .families import TableConfig, reproduce_table, table_to_csv, table_to_json
from .model import (
    UNBOUNDED,
    Coloring,
    MultipartiteSpec,
    TreeParams,
    check_equitable,
    check_tree_coloring,
    make_spec,
)
from .oracle import assignment_to_coloring, brute_force_decide, materialize

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INFEASIBLE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; keep 3 for usage errors
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_max_deg(text: str):
    if text.lower() in ("inf", "unbounded"):
        return UNBOUNDED
    return int(text)


def _parse_parts(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def coloring_to_json(spec: MultipartiteSpec, coloring: Coloring, max_deg) -> dict:
    return {
        "format": 1,
        "parts": list(spec.part_sizes),
        "t": coloring.t,
        "max_deg": "inf" if max_deg == UNBOUNDED else max_deg,
        "assignment": [list(row) for row in coloring.assignment],
    }


def coloring_from_json(doc: dict) -> tuple[MultipartiteSpec, Coloring, float | int]:
    spec = make_spec(doc["parts"])
    coloring = Coloring(t=int(doc["t"]), assignment=tuple(tuple(row) for row in doc["assignment"]))
    coloring.validate(spec)
    max_deg = doc.get("max_deg", 3)
    if max_deg == "inf":
        max_deg = UNBOUNDED
    return spec, coloring, max_deg


def _cmd_verify(args) -> int:
    with open(args.coloring) as fh:
        doc = json.load(fh)
    spec, coloring, max_deg = coloring_from_json(doc)
    if args.max_deg is not None:
        max_deg = args.max_deg
    eq = check_equitable(coloring)
    tree = check_tree_coloring(spec, coloring, TreeParams(max_deg))
    report = {
        "format": 1,
        "ok": eq.ok and tree.ok,
        "violations": eq.to_json()["violations"] + tree.to_json()["violations"],
    }
    print(json.dumps(report, indent=2))
    return EXIT_OK if report["ok"] else EXIT_VERIFY_FAIL


def _cmd_construct(args) -> int:
    if args.q is not None:
        if args.n is None:
            print("--q requires --n", file=sys.stderr)
            return EXIT_USAGE
        n = args.n
        spec = make_spec([n, n, n])
        coloring = construct_uniform(spec, args.q // 3) if args.q % 3 == 0 else construct_theorem22(n, args.q)
    elif args.uniform is not None:
        if args.parts is None:
            print("--uniform requires --parts", file=sys.stderr)
            return EXIT_USAGE
        spec = make_spec(args.parts)
        coloring = construct_uniform(spec, args.uniform)
    elif args.three_split is not None:
        if args.parts is None:
            print("--three-split requires --parts", file=sys.stderr)
            return EXIT_USAGE
        spec = make_spec(args.parts)
        splits = tuple(int(x) for x in args.three_split.split(","))
        if len(splits) != 3:
            print("--three-split takes A,B,C", file=sys.stderr)
            return EXIT_USAGE
        coloring = construct_three_split(spec, splits)
    else:
        print("choose one of --q, --uniform, --three-split", file=sys.stderr)
        return EXIT_USAGE
    doc = coloring_to_json(spec, coloring, 3)
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_decide(args) -> int:
    spec = make_spec(args.parts)
    params = TreeParams(args.max_deg)
    if args.oracle:
        result = brute_force_decide(materialize(spec), args.colors, params)
        feasible = result.feasible
        witness = (
            assignment_to_coloring(spec, args.colors, result.assignment)
            if feasible
            else None
        )
        certificate = {"verdict": "infeasible", "method": "brute-force"} if not feasible else None
    else:
        outcome = decide(spec, args.colors, params)
        feasible = outcome.feasible
        witness = outcome.witness
        certificate = outcome.certificate.to_json() if outcome.certificate else None
    if feasible:
        if args.witness and witness is not None:
            with open(args.witness, "w") as fh:
                json.dump(coloring_to_json(spec, witness, args.max_deg), fh, indent=2)
                fh.write("\n")
        print(json.dumps({"format": 1, "verdict": "feasible"}))
        return EXIT_OK
    cert = {"format": 1, **(certificate or {})}
    print(json.dumps(cert))
    return EXIT_INFEASIBLE


def _cmd_va(args) -> int:
    spec = make_spec(args.parts)
    params = TreeParams(args.max_deg)
    if args.oracle:
        from .oracle import brute_force_va_equiv

        if args.mode == "equiv":
            value = brute_force_va_equiv(spec, params)
        else:
            g = materialize(spec)
            value = next(
                t for t in range(1, spec.n_vertices + 1)
                if brute_force_decide(g, t, params).feasible
            )
    else:
        value = compute_va_equiv(spec, params) if args.mode == "equiv" else compute_va_eq(spec, params)
    print(value)
    return EXIT_OK


def _cmd_table(args) -> int:
    residues = tuple(int(x) for x in args.family.split(","))
    cfg = TableConfig(
        residues=residues,
        kappa_min=args.kappa_min,
        kappa_max=args.kappa_max,
        max_deg=args.max_deg,
        use_oracle=args.oracle,
    )
    points = reproduce_table(cfg)
    text = table_to_csv(points) if args.format == "csv" else table_to_json(points)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equitree", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a coloring JSON document")
    p.add_argument("--coloring", required=True)
    p.add_argument("--max-deg", type=_parse_max_deg, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="emit a coloring JSON document")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--uniform", type=int, metavar="H")
    p.add_argument("--three-split", dest="three_split", metavar="A,B,C")
    p.add_argument("--parts", type=_parse_parts)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("decide", help="exact feasibility for one color count")
    p.add_argument("--parts", type=_parse_parts, required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--max-deg", type=_parse_max_deg, default=3)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--witness", metavar="OUT_JSON")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("va", help="smallest (eq) or strong (equiv) color count")
    p.add_argument("--parts", type=_parse_parts, required=True)
    p.add_argument("--max-deg", type=_parse_max_deg, default=3)
    p.add_argument("--mode", choices=("eq", "equiv"), default="equiv")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=_cmd_va)

    p = sub.add_parser("table", help="prediction-vs-engine reproduction table")
    p.add_argument("--family", default="0,1,2,3")
    p.add_argument("--kappa-min", type=int, default=1)
    p.add_argument("--kappa-max", type=int, required=True)
    p.add_argument("--max-deg", type=_parse_max_deg, default=3)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
