"""Command line entry point.

Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors
(including inputs that exceed the configured limits).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .betti import ENGINES, betti_table
from .cochordal import CochordalCover, cochord_cover_number
from .colon import associated_graph, colon_by_theorem, direct_colon
from .graph import Graph, GraphError, graph_to_dict, parse_graph
from .homology import check_char
from .invariants import class_flags, induced_matching_number, matching_number, min_maximal_matching
from .lab import (
    LabOptions,
    RandomPairSpec,
    check_product_bounds,
    fuzz_campaign,
    golden_table,
    parse_checks,
    reproduce_paper,
)
from .limits import LimitExceeded, Limits
from .monomial import IdealError, Monomial, colon, ideal_from_json, ideal_to_dict, polarize, product
from .transfer import TransferError, run_transfer

FORCED = 10 ** 6


@dataclass(frozen=True)
class RunConfig:
    engine: str = "auto"
    char: int = 0
    limits: Limits = Limits()
    jobs: int = 1
    seed: int = 0
    fmt: str = "json"

    def __post_init__(self) -> None:
        check_char(self.char)
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")

    def lab(self, default_engine: str = "both") -> LabOptions:
        engine = default_engine if self.engine == "auto" else self.engine
        return LabOptions(engine=engine, char=self.char, limits=self.limits)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _edge(text: str) -> tuple[str, str]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise UsageError(f"--edge expects two vertex names separated by a comma, got {text!r}")
    return parts[0], parts[1]


def _emit(obj: object) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _config(ns: argparse.Namespace) -> RunConfig:
    limits = Limits(hochster_vars=ns.limit_vars, lcm_gens=ns.limit_gens)
    if ns.force:
        print("warning: --force lifts all size limits; runtimes may be very long", file=sys.stderr)
        limits = Limits(*(FORCED for _ in range(len(Limits.__dataclass_fields__))))
    return RunConfig(ns.engine, ns.char, limits, ns.jobs, ns.seed, ns.format)


# -- subcommands ----------------------------------------------------------------------

def cmd_invariants(ns: argparse.Namespace, cfg: RunConfig) -> int:
    g = _graph(ns.graph)
    k, cover = cochord_cover_number(g, cfg.limits)
    out = {
        "nu": induced_matching_number(g),
        "mat": matching_number(g),
        "MM": min_maximal_matching(g),
        "cochord": k,
        "classes": class_flags(g, cfg.limits),
    }
    if ns.cover_out:
        Path(ns.cover_out).write_text(cover.to_json() + "\n")
        out["certificate"] = ns.cover_out
    else:
        out["certificate"] = cover.to_dict()
    _emit(out)
    return 0


def _monomial(text: str) -> Monomial:
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad --by monomial: {exc.msg}") from exc
        if not isinstance(obj, dict):
            raise UsageError("--by JSON must be an object of exponents")
        return Monomial.of(obj)
    return Monomial.from_vars(*[t.strip() for t in text.split(",") if t.strip()])


def cmd_ideal(ns: argparse.Namespace, cfg: RunConfig) -> int:
    a = ideal_from_json(_read(ns.ideal))
    if ns.op == "product":
        if not ns.other:
            raise UsageError("ideal product needs two ideal files")
        _emit(ideal_to_dict(product(a, ideal_from_json(_read(ns.other)))))
    elif ns.op == "colon":
        if not ns.by:
            raise UsageError("ideal colon needs --by (e.g. --by x4,x5 or --by '{\"x4\":1}')")
        _emit(ideal_to_dict(colon(a, _monomial(ns.by))))
    else:
        pol = polarize(a)
        _emit({
            "target": ideal_to_dict(pol.target),
            "copies": [[var, k, name] for (var, k), name in pol.copies],
        })
    return 0


def cmd_colon(ns: argparse.Namespace, cfg: RunConfig) -> int:
    h, g, ab = _graph(ns.h), _graph(ns.g), _edge(ns.edge)
    dec = colon_by_theorem(h, g, ab)
    p = associated_graph(h, g, ab)
    same = dec.ideal == direct_colon(h, g, ab)
    _emit({
        "edge": list(ab),
        "base": ideal_to_dict(dec.base),
        "K1": sorted(str(m) for m in dec.k1),
        "K2": sorted(str(m) for m in dec.k2),
        "colon": ideal_to_dict(dec.ideal),
        "new_generators": [str(m) for m in dec.new_generators],
        "equals_direct_colon": same,
        "associated_graph": graph_to_dict(p.graph),
        "fresh_vertex_map": p.fresh_vertex_map,
        "new_edges": [list(e) for e in p.new_edges(g)],
    })
    return 0 if same else 1


def cmd_transfer(ns: argparse.Namespace, cfg: RunConfig) -> int:
    h, g, ab = _graph(ns.h), _graph(ns.g), _edge(ns.edge)
    cover = CochordalCover.from_json(_read(ns.cover)) if ns.cover else None
    res = run_transfer(h, g, ab, cover, cfg.limits)
    _emit({
        "g_cover": res.g_cover.to_dict(),
        "associated_graph": graph_to_dict(res.p.graph),
        "p_cover": res.p_cover.to_dict(),
        "verified": res.check.ok,
        "message": res.check.describe(),
        "classes": res.p_cover.size,
    })
    if not res.check.ok:
        print(f"transferred cover failed: {res.check.describe()}", file=sys.stderr)
        return 1
    return 0


def cmd_regularity(ns: argparse.Namespace, cfg: RunConfig) -> int:
    if ns.graph:
        from .monomial import edge_ideal

        ideal = edge_ideal(_graph(ns.graph))
    elif ns.ideal:
        ideal = ideal_from_json(_read(ns.ideal))
    else:
        raise UsageError("regularity needs an ideal file or --graph")
    res = betti_table(ideal, cfg.engine, cfg.char, cfg.limits, cfg.jobs)
    if cfg.fmt == "json":
        _emit({"regularity": res.regularity, "engines": list(res.engines_run), "char": cfg.char,
               "betti": res.table.to_dict()})
    elif cfg.fmt == "table":
        print(res.table.pretty())
        print(f"regularity: {res.regularity}")
    else:
        sys.stdout.write(res.table.to_csv())
        print(f"# regularity={res.regularity}")
    return 0


def cmd_check_bounds(ns: argparse.Namespace, cfg: RunConfig) -> int:
    h, g = _graph(ns.h), _graph(ns.g)
    rep = check_product_bounds(h, g, cfg.lab())
    if cfg.fmt == "json":
        _emit(rep.to_dict())
    else:
        print(rep.table())
        for note in rep.notes:
            print(f"note: {note}")
    if not rep.ok:
        path = Path(ns.dump_dir) / "check-bounds-failure.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(rep.to_dict(), indent=2))
        print(f"bound check failed; reproducer written to {path}", file=sys.stderr)
        return 1
    return 0


def cmd_fuzz(ns: argparse.Namespace, cfg: RunConfig) -> int:
    spec = RandomPairSpec(ns.n, ns.p, ns.mode, cfg.seed)
    summary = fuzz_campaign(spec, ns.count, parse_checks(ns.checks), cfg.lab(), cfg.jobs, ns.dump_dir)
    if cfg.fmt == "json":
        _emit(summary.to_dict())
    else:
        for name, t in summary.tallies.items():
            print(f"{name}: pass={t['pass']} fail={t['fail']} inapplicable={t['inapplicable']}")
    for path in summary.dumps:
        print(f"counterexample written to {path}", file=sys.stderr)
    return 0 if summary.ok else 1


def cmd_reproduce(ns: argparse.Namespace, cfg: RunConfig) -> int:
    rows = reproduce_paper(cfg.lab())
    if cfg.fmt == "json":
        _emit([r.to_dict() for r in rows])
    else:
        print(golden_table(rows))
    return 0 if all(r.match for r in rows) else 1


# -- parser -----------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--char", type=int, default=argparse.SUPPRESS, help="field characteristic: 0 or a prime (default 0)")
    g.add_argument("--engine", choices=ENGINES, default=argparse.SUPPRESS, help="Betti engine (default auto)")
    g.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes (default 1)")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    g.add_argument("--format", choices=("json", "table", "csv"), default=argparse.SUPPRESS)
    g.add_argument("--limit-vars", type=int, default=argparse.SUPPRESS, help="Hochster variable limit (default 16)")
    g.add_argument("--limit-gens", type=int, default=argparse.SUPPRESS, help="lcm generator limit (default 24)")
    g.add_argument("--force", action="store_true", default=argparse.SUPPRESS, help="lift all size limits")
    return p


GLOBAL_DEFAULTS = {
    "char": 0, "engine": "auto", "jobs": 1, "seed": 0, "format": None,
    "limit_vars": 16, "limit_gens": 24, "force": False,
}


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="edgereg", parents=[common],
        description="Regularity of products of edge ideals: invariants, colon ideals, Betti numbers, bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="nu, mat, MM, cochord and class flags of a graph")
    p.add_argument("graph")
    p.add_argument("--cover-out", help="write the co-chordal cover certificate to this path")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("ideal", parents=[common], help="monomial ideal arithmetic")
    p.add_argument("op", choices=("product", "colon", "polarize"))
    p.add_argument("ideal")
    p.add_argument("other", nargs="?")
    p.add_argument("--by", help="monomial for colon: x4,x5 or a JSON exponent object")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("colon", parents=[common], help="(IJ : ab) by the structure theorem, and its graph")
    p.add_argument("h")
    p.add_argument("g")
    p.add_argument("--edge", required=True)
    p.set_defaults(func=cmd_colon)

    p = sub.add_parser("transfer-cover", parents=[common], help="transfer a co-chordal cover of G to the colon graph")
    p.add_argument("h")
    p.add_argument("g")
    p.add_argument("--edge", required=True)
    p.add_argument("--cover", help="cover JSON for G (default: a minimum cover)")
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("regularity", parents=[common], help="Betti table and regularity")
    p.add_argument("ideal", nargs="?")
    p.add_argument("--graph", help="use the edge ideal of this graph")
    p.set_defaults(func=cmd_regularity, default_format="csv")

    p = sub.add_parser("check-bounds", parents=[common], help="evaluate every product bound for H inside G")
    p.add_argument("h")
    p.add_argument("g")
    p.add_argument("--dump-dir", default="counterexamples")
    p.set_defaults(func=cmd_check_bounds)

    p = sub.add_parser("fuzz", parents=[common], help="random theorem-check campaign")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.add_argument("--mode", choices=("subgraph", "induced"), default="subgraph")
    p.add_argument("--checks", default="bounds", help="comma list of checks, or all")
    p.add_argument("--dump-dir", default="counterexamples")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("reproduce-paper", parents=[common], help="recompute the worked examples")
    p.set_defaults(func=cmd_reproduce, default_format="table")
    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(ns, key):
            setattr(ns, key, value)
    if ns.format is None:
        ns.format = getattr(ns, "default_format", "json")
    try:
        cfg = _config(ns)
        return ns.func(ns, cfg)
    except LimitExceeded as exc:
        print(f"error: {exc} (raise the limit or pass --force)", file=sys.stderr)
        return 2
    except (UsageError, GraphError, IdealError, TransferError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
