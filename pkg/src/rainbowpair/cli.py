"""Command-line front end.

Exit codes: 0 success, 1 input graph is not strongly edge-colored,
2 engine failure (a length ended in ``failed`` or a check was violated),
3 I/O, parse or usage error. Errors go to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from . import audit, engine, generators, oracle
from .cycles import ColoredCycle
from .graph import ColoredGraph, GraphError, format_secg, read_secg, validate_coloring, write_secg

SCHEMA = "rpc-1"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ENGINE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise CliError(EXIT_IO, "usage", message)


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps({"schema": SCHEMA, **obj}, indent=2) + "\n")


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise CliError(EXIT_IO, "usage", f"--pair expects 'a,b', got {text!r}") from None
    return a, b


def _load(path: str) -> ColoredGraph:
    try:
        return read_secg(path)
    except OSError as exc:
        raise CliError(EXIT_IO, "io", str(exc)) from None
    except GraphError as exc:
        raise CliError(EXIT_IO, "parse", f"{path}: {exc}") from None


def _load_strong(path: str) -> ColoredGraph:
    g = _load(path)
    report = validate_coloring(g)
    if not report.is_strong:
        raise CliError(EXIT_INVALID, "validation", f"{path}: coloring is {report.level.value}, not strong")
    return g


def _check_pair(g: ColoredGraph, a: int, b: int) -> None:
    if a == b or not (0 <= a < g.n and 0 <= b < g.n):
        raise CliError(EXIT_IO, "usage", f"bad pair ({a}, {b}) for n={g.n}")


def _reverify(g: ColoredGraph, cert: engine.PancyclicCertificate) -> None:
    a, b = cert.pair
    for L, cyc in cert.cycles.items():
        if not oracle.verify_rainbow_cycle(g, cyc.vertices, a, b, L):
            raise CliError(EXIT_ENGINE, "verification", f"cycle of length {L} failed re-verification")


def to_dot(g: ColoredGraph, cyc: ColoredCycle | None = None) -> str:
    on_cycle = set()
    if cyc is not None:
        vs = cyc.vertices
        on_cycle = {frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))}
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in g.vertices())
    for u, v, c in g.colored_edges():
        style = ', color=red, penwidth=2.5' if frozenset((u, v)) in on_cycle else ""
        lines.append(f'  {u} -- {v} [label="{c}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- subcommands --------------------------------------------------------------


def cmd_validate(args) -> int:
    g = _load(args.file)
    report = validate_coloring(g)
    _emit({"file": args.file, "n": g.n, "edges": g.num_edges, **report.to_json()})
    return EXIT_OK if report.is_strong else EXIT_INVALID


def cmd_find(args) -> int:
    g = _load_strong(args.file)
    a, b = _pair(args.pair)
    _check_pair(g, a, b)
    L = args.length
    if not 3 <= L <= g.n:
        raise CliError(EXIT_IO, "usage", f"--length must be in [3, {g.n}]")
    cert = engine.pair_pancyclicity(g, a, b, budget=args.node_budget, max_length=L)
    _reverify(g, cert)
    status = cert.status[L]
    cyc = cert.cycles.get(L)
    out: dict[str, Any] = {"pair": [a, b], "length": L, "status": status.value, "mechanism": cert.mechanisms[L]}
    if cyc is not None:
        out["cycle"] = cyc.to_json()
    if args.dot:
        Path(args.dot).write_text(to_dot(g, cyc))
    _emit(out)
    return EXIT_ENGINE if status is engine.Status.FAILED else EXIT_OK


def cmd_pancyclic(args) -> int:
    g = _load_strong(args.file)
    if args.all_pairs:
        certs = engine.all_pairs(g, budget=args.node_budget, workers=args.workers)
    else:
        if not args.pair:
            raise CliError(EXIT_IO, "usage", "pancyclic needs --pair or --all-pairs")
        a, b = _pair(args.pair)
        _check_pair(g, a, b)
        certs = [engine.pair_pancyclicity(g, a, b, budget=args.node_budget)]
    for cert in certs:
        _reverify(g, cert)
    failed = any(cert.failed for cert in certs)
    if args.all_pairs:
        _emit({"n": g.n, "certificates": [c.to_json() for c in certs]})
    else:
        _emit(certs[0].to_json())
    return EXIT_ENGINE if failed else EXIT_OK


def cmd_audit(args) -> int:
    g = _load_strong(args.file)
    a, b = _pair(args.pair)
    _check_pair(g, a, b)
    cert = engine.pair_pancyclicity(g, a, b, budget=args.node_budget)
    _reverify(g, cert)
    steps = [audit.audit_step(g, a, b, cyc) for L, cyc in sorted(cert.cycles.items()) if L < g.n]
    failures = [
        audit.audit_failure(g, a, b, cert.cycles[L - 1])
        for L, status in sorted(cert.status.items())
        if status is engine.Status.IMPOSSIBLE and (L - 1) in cert.cycles
    ]
    ok = all(s.consistent for s in steps) and all(f.consistent for f in failures) and not cert.failed
    _emit(
        {
            "pair": [a, b],
            "certificate": cert.to_json(),
            "steps": [s.to_json() for s in steps],
            "failures": [f.to_json() for f in failures],
            "ok": ok,
        }
    )
    return EXIT_OK if ok else EXIT_ENGINE


def cmd_gen(args) -> int:
    if args.kind == "rainbow-complete":
        g = generators.rainbow_complete(args.n)
        params = {"n": args.n}
    elif args.kind == "random":
        target = generators.threshold_degree(args.n) if args.min_degree is None else args.min_degree
        try:
            g = generators.random_strong(args.n, target, args.seed)
        except ValueError as exc:
            raise CliError(EXIT_IO, "usage", str(exc)) from None
        params = {"n": args.n, "min_degree": target, "seed": args.seed}
    else:
        g = generators.cycle_instance(args.l)
        params = {"l": args.l}
    manifest = {
        "generator": args.kind,
        "params": params,
        "file": args.out,
        "n": g.n,
        "edges": g.num_edges,
        "min_degree": g.min_degree() if g.n else 0,
        "validation": validate_coloring(g).level.value,
    }
    if args.out:
        try:
            write_secg(g, args.out)
            Path(args.out + ".manifest.json").write_text(json.dumps({"schema": SCHEMA, **manifest}, indent=2) + "\n")
        except OSError as exc:
            raise CliError(EXIT_IO, "io", str(exc)) from None
        _emit(manifest)
    else:
        sys.stdout.write(format_secg(g))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_strong(args.file)
    a, b = _pair(args.pair)
    _check_pair(g, a, b)
    try:
        table = oracle.pancyclicity_table(g, a, b, cap=args.cap)
    except oracle.OracleCapExceeded as exc:
        raise CliError(EXIT_IO, "cap", str(exc)) from None
    _emit({"pair": [a, b], "table": oracle.table_to_json(table)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rainbowpair", description="Rainbow pair-pancyclicity in strongly edge-colored graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log engine mechanism choices")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check that a .secg coloring is strong")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    def budget(sp):
        sp.add_argument("--node-budget", type=int, default=engine.DEFAULT_NODE_BUDGET,
                        help="expansion limit for the exhaustive fallback search")

    s = sub.add_parser("find", help="one rainbow cycle of a given length through a pair")
    s.add_argument("file")
    s.add_argument("--pair", required=True)
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--dot", help="write the graph with the cycle highlighted as DOT")
    budget(s)
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("pancyclic", help="certificates for every length through a pair")
    s.add_argument("file")
    s.add_argument("--pair")
    s.add_argument("--all-pairs", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    budget(s)
    s.set_defaults(func=cmd_pancyclic)

    s = sub.add_parser("audit", help="counting checks along the engine trajectory")
    s.add_argument("file")
    s.add_argument("--pair", required=True)
    budget(s)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("gen", help="generate a strongly edge-colored instance")
    s.add_argument("kind", choices=["rainbow-complete", "random", "cycle"])
    s.add_argument("--n", type=int, default=9)
    s.add_argument("--min-degree", type=int, help="default: smallest degree meeting 2n/3 + 1")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--l", type=int, default=6, help="cycle length for 'cycle'")
    s.add_argument("--out", help="output .secg path; a .manifest.json sidecar is written next to it")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("oracle", help="brute-force presence table for a pair (small n)")
    s.add_argument("file")
    s.add_argument("--pair", required=True)
    s.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(json.dumps({"schema": SCHEMA, "error": exc.kind, "message": str(exc)}) + "\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
