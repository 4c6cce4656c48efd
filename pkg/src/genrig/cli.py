"""Command-line front end.

Exit codes: 0 = positive result (rigid / decomposable / no discrepancy),
1 = negative result, 2 = input or usage error, 3 = discrepancy found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .graph import GraphFormatError, Multigraph, enumerate_paths, graph_from_dict, parse_graph, path_from_vertices
from .pinning import PIVOT_RULES, build_pinned_system, extract_tree_partition, pinned_invertible
from .rigidity import DEFAULT_TRIALS, Verdict, random_generic_placement, rigidity_verdict
from .search import double_banana, rigid_count_corpus, scan_corpus
from .theorem import MAX_DIM, Claim, compare_with_rank, path_augmentation_test
from .treedecomp import decompose_into_spanning_trees

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR, EXIT_DISCREPANCY = 0, 1, 2, 3


@dataclass(frozen=True)
class CliConfig:
    d: int
    seed: int
    trials: int
    input_format: str
    output: str
    fast: bool
    pivot_rule: str
    jobs: int
    max_dim: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("--dim must be >= 2")
        if self.trials < 1:
            raise ValueError("--trials must be >= 1")


def _default_seed() -> int:
    raw = os.environ.get("RIGIDITY_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"RIGIDITY_SEED must be an integer, got {raw!r}") from None


def _read(source: str | None) -> str:
    if source in (None, "-"):
        return sys.stdin.read()
    with open(source) as fh:
        return fh.read()


def _load_graph(source, cfg: CliConfig) -> Multigraph:
    return parse_graph(_read(source).strip(), cfg.input_format)


def _load_corpus(source, cfg: CliConfig) -> list[Multigraph]:
    text = _read(source).strip()
    if not text:
        return []
    if text.startswith("["):
        return [graph_from_dict(doc) for doc in json.loads(text)]
    return [parse_graph(line, cfg.input_format) for line in text.splitlines() if line.strip()]


def _emit(cfg: CliConfig, payload: dict, text: str) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_rank(args, cfg: CliConfig) -> int:
    g = _load_graph(args.input, cfg)
    v = rigidity_verdict(g, cfg.d, cfg.trials, cfg.seed)
    _emit(
        cfg,
        v.to_dict(),
        f"n={g.n} m={g.m} d={cfg.d} rank={v.rank} target={v.target} "
        f"flex_dim={v.flex_dim} verdict={v.verdict.value}",
    )
    return EXIT_OK if v.verdict is Verdict.MINIMALLY_RIGID else EXIT_NEGATIVE


def cmd_theorem(args, cfg: CliConfig) -> int:
    g = _load_graph(args.input, cfg)
    r = path_augmentation_test(g, cfg.d, fast=cfg.fast, max_dim=cfg.max_dim)
    lines = [
        f"n={g.n} m={g.m} d={cfg.d} claim={r.claim.value} paths_checked={r.paths_checked} "
        f"failing={len(r.failing_paths())}"
    ]
    if r.diagnostic:
        lines.append(f"note: {r.diagnostic}")
    for res in r.failing_paths():
        lines.append(f"  path {res.path.vertices}: {res.outcome.to_dict()}")
    _emit(cfg, r.to_dict(), "\n".join(lines))
    return EXIT_OK if r.claim is Claim.MINIMALLY_RIGID else EXIT_NEGATIVE


def cmd_compare(args, cfg: CliConfig) -> int:
    g = _load_graph(args.input, cfg)
    if g.n < cfg.d + 1:
        raise ValueError(f"compare needs n >= d+1 (n={g.n}, d={cfg.d})")
    c = compare_with_rank(g, cfg.d, cfg.trials, cfg.seed, fast=cfg.fast)
    text = (
        f"{c.kind}: theorem={c.theorem.claim.value} rank={c.rigidity.verdict.value} "
        f"(rank {c.rigidity.rank} / target {c.rigidity.target}, m={g.m})"
    )
    if c.stress_circuit is not None:
        text += f"\nstress circuit edges: {sorted(c.stress_circuit)}"
    _emit(cfg, c.to_dict(), text)
    if c.discrepancy:
        return EXIT_DISCREPANCY
    return EXIT_OK if c.rank_says_rigid else EXIT_NEGATIVE


def cmd_decompose(args, cfg: CliConfig) -> int:
    g = _load_graph(args.input, cfg)
    k = args.k if args.k is not None else cfg.d
    res = decompose_into_spanning_trees(g, k)
    if res.feasible:
        text = "\n".join(f"tree {i}: {list(t)}" for i, t in enumerate(res.trees))
    else:
        text = f"refused ({res.reason})"
        if res.witness is not None:
            text += f": partition {[list(p) for p in res.witness]} has {res.cross_edges} crossing edges"
    _emit(cfg, res.to_dict(), text)
    return EXIT_OK if res.feasible else EXIT_NEGATIVE


def cmd_pin(args, cfg: CliConfig) -> int:
    g = _load_graph(args.input, cfg)
    if args.path:
        paths = [path_from_vertices(g, args.path.split(","))]
    else:
        paths = enumerate_paths(g, cfg.d)
    framework = random_generic_placement(g, cfg.d, cfg.seed, domain="q")
    records, lines, ok = [], [], bool(paths)
    for path in paths:
        ps = build_pinned_system(framework, path)
        inv = pinned_invertible(ps)
        rec = {"path": list(path.vertices), "invertible": inv}
        line = f"path {path.vertices}: invertible={inv}"
        if inv:
            part = extract_tree_partition(ps, cfg.pivot_rule)
            rec["partition"] = part.to_dict()
            line += f" trees={[list(t) for t in part.trees]}" if part.trees else f" finding: {part.failure}"
            ok = ok and part.trees is not None
        else:
            ok = False
        records.append(rec)
        lines.append(line)
    _emit(cfg, {"d": cfg.d, "seed": cfg.seed, "paths": records}, "\n".join(lines))
    return EXIT_OK if ok else EXIT_NEGATIVE


def _parse_range(text: str) -> range:
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def cmd_scan(args, cfg: CliConfig) -> int:
    if args.generate:
        ns = _parse_range(args.generate)
        graphs = rigid_count_corpus(cfg.d, ns)
        label = f"connected simple graphs, n={ns.start}..{ns.stop - 1}, m=dn-C(d+1,2)"
    else:
        graphs = _load_corpus(args.input, cfg)
        label = args.input or "stdin"
    report = scan_corpus(graphs, cfg.d, cfg.trials, cfg.seed, corpus=label, jobs=cfg.jobs)
    lines = [
        f"corpus: {label} ({report.size} graphs, d={cfg.d})",
        f"agreements={report.agreements} discrepancies={len(report.discrepancies)} "
        f"not_applicable={report.not_applicable} elapsed={report.elapsed:.2f}s",
    ]
    for i, c in report.discrepancies:
        lines.append(f"  #{i} {c.kind}: {json.dumps(c.theorem.graph.to_dict())}")
    _emit(cfg, report.to_dict(), "\n".join(lines))
    return EXIT_DISCREPANCY if report.discrepancies else EXIT_OK


def cmd_banana(args, cfg: CliConfig) -> int:
    print(json.dumps(double_banana().to_dict()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", "-d", type=int, default=2, help="ambient dimension (default 2)")
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default: $RIGIDITY_SEED or 0)")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--input-format", choices=("auto", "graph6", "json"), default="auto")
    common.add_argument("--format", dest="output", choices=("text", "json"), default="text")
    common.add_argument("--fast", action="store_true", help="stop at the first failing path")
    common.add_argument("--pivot-rule", choices=PIVOT_RULES, default=PIVOT_RULES[0])
    common.add_argument("--jobs", type=int, default=1, help="worker processes for scan")
    common.add_argument("--max-dim", type=int, default=MAX_DIM)

    parser = argparse.ArgumentParser(prog="genrig", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph_input=True):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if graph_input:
            sp.add_argument("input", nargs="?", help="graph file (graph6 or JSON edge list); stdin if omitted")
        sp.set_defaults(func=func)
        return sp

    add("rank", cmd_rank, "rigidity-matrix rank verdict")
    add("theorem", cmd_theorem, "path-augmentation tree-decomposition test")
    add("compare", cmd_compare, "run both and report discrepancies (exit 3)")
    add("decompose", cmd_decompose, "split edges into k spanning trees").add_argument("-k", type=int)
    add("pin", cmd_pin, "pinned-system elimination along a path").add_argument(
        "--path", help="comma-separated vertex sequence; all paths if omitted"
    )
    add("scan", cmd_scan, "compare both methods over a corpus").add_argument(
        "--generate", metavar="N1-N2", help="enumerate connected graphs with m = dn - C(d+1,2)"
    )
    add("banana", cmd_banana, "print the double banana as a JSON edge list", graph_input=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CliConfig(
            d=args.dim,
            seed=args.seed if args.seed is not None else _default_seed(),
            trials=args.trials,
            input_format=args.input_format,
            output=args.output,
            fast=args.fast,
            pivot_rule=args.pivot_rule,
            jobs=args.jobs,
            max_dim=args.max_dim,
        )
        return args.func(args, cfg)
    except (GraphFormatError, ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
