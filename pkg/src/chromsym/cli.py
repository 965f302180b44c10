"""Command-line entry point: ``chromsym expand|classify|verify|analogs``.

Exit codes: 0 pass, 1 a checked statement failed, 2 a size cap was hit,
64 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import nsym, suites, sym
from .analogs import (
    ab_commutative,
    ab_tilde,
    d_commutative,
    de_tilde,
    e_commutative,
    xtilde_path,
)
from .graphs import (
    DEFAULT_MAX_EDGES,
    CapExceeded,
    SimpleGraph,
    csf_colorings,
    csf_powersum,
    parse_graph_spec,
    path,
    spider,
)
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_CAP, EXIT_USAGE = 0, 1, 2, 64
DEFAULT_MAX_N = 20
CONFIG_KEYS = {"max_edges", "max_n", "threads"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit a JSON report")
    fmt.add_argument("--csv", action="store_true", help="emit the report records as CSV")
    common.add_argument("--threads", type=_positive_int, help="worker processes (default 1)")
    common.add_argument("--config", type=Path, help="JSON file with max_edges, max_n, threads")
    common.add_argument("--max-edges", type=_positive_int, help=f"edge cap (default {DEFAULT_MAX_EDGES})")
    common.add_argument("--max-n", type=_positive_int, help="vertex cap, or the range bound for thm31/lemma33/cor36")
    common.add_argument("--fixture", type=Path, help="table transcription used by `verify prop10`")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the output")

    parser = _Parser(prog="chromsym", description="Chromatic symmetric functions of paths and spiders.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", parents=[common], help="expand X_G in a basis")
    p.add_argument("--graph", required=True, help="path:N, spider:a,b,c, claw, net or file:PATH")
    p.add_argument("--basis", default="s", help="m, e, h, p or s (default s)")
    p.add_argument("--method", choices=("powersum", "colorings"), default="powersum")

    p = sub.add_parser("classify", parents=[common], help="positivity class of graphs")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help='spider legs with one "a", e.g. "a,2,1"; or "path"')
    group.add_argument("--graph", help="a single graph spec")
    p.add_argument("--range", dest="arange", help="A:B, inclusive range for a")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=suites.SUITES + ("all",))
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--k", type=_positive_int)
    p.add_argument("--a", type=_positive_int)
    p.add_argument("--b", type=_positive_int)
    p.add_argument("--z", type=_positive_int, help="largest z for the second lemma45 map (default n - 2)")

    p = sub.add_parser("analogs", parents=[common], help="noncommutative path analogs")
    p.add_argument("kind", choices=("path", "ab", "de"))
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int)
    p.add_argument("--basis", default="R", help="Psi, Lambda or R (path only)")
    return parser


def load_config(path: Path | None) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"config is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    unknown = set(data) - CONFIG_KEYS
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key, value in data.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise UsageError(f"config {key} must be a positive integer")
    return data


class Settings:
    def __init__(self, args, config: dict):
        self.threads = args.threads or config.get("threads", 1)
        self.max_edges = args.max_edges or config.get("max_edges", DEFAULT_MAX_EDGES)
        self.max_n = args.max_n or config.get("max_n", DEFAULT_MAX_N)


def _check_vertices(graph: SimpleGraph, settings: Settings):
    if graph.vertex_count > settings.max_n:
        raise CapExceeded(
            f"{graph.vertex_count} vertices exceed the cap of {settings.max_n}", 2 ** len(graph.edges)
        )


def _graph(spec: str) -> SimpleGraph:
    try:
        return parse_graph_spec(spec)
    except OSError as exc:
        raise UsageError(f"cannot read graph: {exc}") from None


def _basis(name: str) -> str:
    try:
        return sym.basis_name(name)
    except (KeyError, ValueError):
        raise UsageError(f"unknown basis {name!r}") from None


def _index(idx) -> str:
    return "".join(map(str, idx)) if max(idx, default=0) < 10 else ",".join(map(str, idx))


def _terms(f) -> list:
    return [{"basis": f.basis, "index": _index(idx), "coeff": c} for idx, c in f.items()]


def cmd_expand(args, settings: Settings) -> Report:
    basis = _basis(args.basis)
    graph = _graph(args.graph)
    _check_vertices(graph, settings)
    if args.method == "colorings":
        x = csf_colorings(graph)
    else:
        x = csf_powersum(graph, max_edges=settings.max_edges, workers=settings.threads)
    f = sym.to_basis(x, basis)
    rep = Report({"command": "expand", "graph": args.graph, "basis": basis, "method": args.method})
    rep.records = _terms(f)
    rep.summary["expansion"] = f
    rep.lines.append(str(f))
    if basis == "e" and _is_path(graph) and graph.vertex_count >= 2:
        a, b = ab_commutative(graph.vertex_count)
        rep.summary["e1_cofactor"] = a
        rep.summary["remainder"] = b
        rep.lines.append(f"= e_1 ({a}) + ({b})")
    return rep


def _is_path(graph: SimpleGraph) -> bool:
    return graph == path(graph.vertex_count)


def _family_members(args) -> list[tuple[str, SimpleGraph]]:
    if args.graph:
        return [(args.graph, _graph(args.graph))]
    if not args.arange:
        raise UsageError("--family needs --range A:B")
    try:
        lo, hi = (int(x) for x in args.arange.split(":"))
    except ValueError:
        raise UsageError(f"bad range {args.arange!r}; expected A:B") from None
    if lo > hi:
        raise UsageError("empty range")
    template = args.family.replace(" ", "")
    if template == "path":
        return [(f"P{n}", path(n)) for n in range(lo, hi + 1)]
    fields = template.split(",")
    if fields.count("a") != 1:
        raise UsageError('family must contain exactly one "a"')
    out = []
    for a in range(lo, hi + 1):
        try:
            legs = tuple(a if x == "a" else int(x) for x in fields)
        except ValueError:
            raise UsageError(f"bad family {args.family!r}") from None
        legs = tuple(sorted(legs, reverse=True))
        out.append((f"S({','.join(map(str, legs))})", spider(legs)))
    return out


def cmd_classify(args, settings: Settings) -> Report:
    members = _family_members(args)
    rep = Report({"command": "classify", "family": args.family, "graph": args.graph, "range": args.arange})
    for name, graph in members:
        _check_vertices(graph, settings)
        x = csf_powersum(graph, max_edges=settings.max_edges, workers=settings.threads)
        r = sym.positivity_report(x)
        rec = {"graph": name, "n": graph.vertex_count, "class": r.klass}
        line = f"{name}: {r.klass}"
        if r.witness_basis:
            idx = _index(r.witness_index)
            rec["witness"] = {"basis": r.witness_basis, "index": idx, "value": r.witness_value}
            line += f" (witness [{r.witness_basis}_{idx}] = {r.witness_value})"
        rep.records.append(rec)
        rep.lines.append(line)
    return rep


def cmd_verify(args, settings: Settings) -> Report:
    s = args.suite
    workers = settings.threads
    if s == "thm31":
        return suites.thm31(args.max_n or args.n or 10, max_edges=settings.max_edges, workers=workers)
    if s == "lemma33":
        return suites.lemma33(args.max_n or args.n or 20)
    if s == "cor36":
        return suites.cor36(args.max_n or args.n or 10, k=args.k)
    if s == "lemma41":
        if (args.n is None) != (args.k is None):
            raise UsageError("lemma41 takes both --n and --k or neither")
        pairs = ((args.n, args.k),) if args.n else suites.LEMMA41_PAIRS
        return suites.lemma41(pairs, workers)
    if s == "lemma42":
        return suites.lemma42(args.n or 9, workers)
    if s == "lemma45":
        return suites.lemma45(args.n or 9, args.z, workers)
    if s == "prop10":
        return suites.prop10(args.fixture, workers)
    if s == "spider":
        if args.a is not None and args.b is None:
            raise UsageError("spider --a needs --b")
        if args.b is None:
            members = None
        elif args.a is None:
            rng = suites.SPIDER_RANGES.get(args.b, range(args.b, args.b + 1))
            members = [(a, args.b) for a in rng]
        else:
            members = [(args.a, args.b)]
        return suites.spider(members, settings.max_n, settings.max_edges, workers)
    return suites.run_all(settings.max_n, settings.max_edges, args.fixture, workers)


def cmd_analogs(args, settings: Settings) -> Report:
    n, k = args.n, args.k
    rep = Report({"command": "analogs", "kind": args.kind, "n": n, "k": k})
    if args.kind == "path":
        try:
            f = xtilde_path(n, args.basis)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        proj = sym.to_basis(nsym.project_rho(f), "e")
        rep.summary = {"noncommutative": f, "projection": proj}
        rep.records = _terms(f)
        rep.lines += [str(f), f"ρ = {proj}"]
        return rep
    if args.kind == "ab":
        if n < 2:
            raise UsageError("ab needs --n >= 2")
        a, b = ab_tilde(n)
        ra = sym.to_basis(nsym.project_rho(a), "e")
        rb = sym.to_basis(nsym.project_rho(b), "e")
        # the commutative split of X_{P_n} gives A_{n-1} and B_n
        ok = ra == ab_commutative(n + 1)[0] and rb == ab_commutative(n)[1]
        rep.summary = {"A": a, "B": b, "rho_A": ra, "rho_B": rb}
        rep.records = [{"name": "A", "projection": ra}, {"name": "B", "projection": rb}]
        rep.lines += [f"A_{n} = {ra}", f"B_{n} = {rb}", f"matches the path split: {ok}"]
        if not ok:
            rep.fail()
        return rep
    if k is None:
        raise UsageError("de needs --k")
    if not 2 <= k <= n - 1:
        raise UsageError("de needs 2 <= k <= n - 1")
    d, e = de_tilde(n, k)
    rd = sym.to_basis(nsym.project_rho(d), "e")
    re_ = sym.to_basis(nsym.project_rho(e), "e")
    ok = rd == d_commutative(n, k) and re_ == e_commutative(n, k)
    rep.summary = {"D": d, "E": e, "rho_D": rd, "rho_E": re_}
    rep.records = [{"name": "D", "projection": rd}, {"name": "E", "projection": re_}]
    rep.lines += [f"D_{n},{k} = {rd}", f"E_{n},{k} = {re_}", f"matches the commutative differences: {ok}"]
    if not ok:
        rep.fail()
    return rep


COMMANDS = {"expand": cmd_expand, "classify": cmd_classify, "verify": cmd_verify, "analogs": cmd_analogs}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        settings = Settings(args, load_config(args.config))
        start = time.perf_counter()
        report = COMMANDS[args.command](args, settings)
        report.timing = time.perf_counter() - start
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        sys.stdout.write(report.render_json(args.timing))
    elif args.csv:
        sys.stdout.write(report.render_csv())
    else:
        sys.stdout.write(report.render_text(args.timing))
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
