"""Command-line front end: decompose, verify, bench, gen.

Result files are line oriented (`label: (k0,l0) (k1,l1) ...`, sorted by
label) and depend only on the input and the algorithm family, never on the
execution mode, block count, partitioner or worker count.  Exit status 0
means success, 1 a failed verification, 2 a usage, I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .anchored import anchored_decompose
from .engine import EngineMetrics
from .graph import (
    DirectedGraph,
    EdgeListError,
    generate_random_digraph,
    make_partition,
    parse_edge_list_report,
    write_edge_list,
)
from .peel import anchored_to_skyline, peel_decompose
from .skyline import skyline_decompose

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

ALGOS = ("peel", "anchored", "skyline")
MODES = ("vertex", "block")
PARTITIONERS = ("hash", "seg")


class CliError(Exception):
    """Usage-level failure reported on stderr with exit status 2."""


@dataclass
class RunReport:
    """What one decomposition run did: configuration, metrics, timing."""

    algorithm: str
    mode: str | None
    blocks: int | None
    partitioner: str | None
    phases: list[EngineMetrics]
    wall_time_s: float
    output_path: str | None

    def as_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "mode": self.mode,
            "blocks": self.blocks,
            "partitioner": self.partitioner,
            "wall_time_s": self.wall_time_s,
            "output": self.output_path,
            "phases": [
                {
                    "phase": m.phase,
                    "supersteps": m.supersteps,
                    "messages": m.messages_total,
                    "messages_per_step": m.messages_per_step,
                    "intra_messages": m.intra_messages,
                }
                for m in self.phases
            ],
            "supersteps_total": sum(m.supersteps for m in self.phases),
            "messages_total": sum(m.messages_total for m in self.phases),
        }


def _load_graph(path: str) -> DirectedGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            g, report = parse_edge_list_report(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    if report.self_loops_dropped or report.duplicates_dropped:
        print(
            f"# cleaned input: dropped {report.self_loops_dropped} self-loops, "
            f"{report.duplicates_dropped} duplicate arcs",
            file=sys.stderr,
        )
    return g


def _format_line(label: int, pairs) -> str:
    return f"{label}: " + " ".join(f"({k},{l})" for k, l in pairs)


def _write_results(path: str, g: DirectedGraph, per_vertex_pairs) -> None:
    order = sorted(range(g.n), key=lambda v: g.labels[v])
    with open(path, "w", encoding="utf-8") as fh:
        for v in order:
            fh.write(_format_line(g.labels[v], per_vertex_pairs[v]) + "\n")


def _run_algo(g, algo, mode, blocks, partitioner, workers):
    start = time.perf_counter()
    if algo == "peel":
        table = peel_decompose(g)
        pairs = [table.pairs(v) for v in range(g.n)]
        result, phases = table, []
    else:
        parts = make_partition(partitioner, g, blocks)
        if algo == "anchored":
            table, phases = anchored_decompose(g, parts, mode, workers=workers)
            pairs = [table.pairs(v) for v in range(g.n)]
            result = table
        else:
            skys, phases = skyline_decompose(g, parts, mode, workers=workers)
            pairs = skys
            result = skys
    wall = time.perf_counter() - start
    return result, pairs, phases, wall


def _check_distributed_flags(args) -> tuple[str, int, str]:
    if args.algo == "peel":
        if args.mode or args.blocks or args.partitioner:
            raise CliError("--mode/--blocks/--partitioner do not apply to --algo peel")
        return "vertex", 1, "hash"
    return (
        args.mode or "vertex",
        args.blocks or 1,
        args.partitioner or "hash",
    )


def cmd_decompose(args) -> int:
    g = _load_graph(args.input)
    mode, blocks, partitioner = _check_distributed_flags(args)
    _, pairs, phases, wall = _run_algo(
        g, args.algo, mode, blocks, partitioner, args.workers
    )
    _write_results(args.out, g, pairs)
    report = RunReport(
        algorithm=args.algo,
        mode=None if args.algo == "peel" else mode,
        blocks=None if args.algo == "peel" else blocks,
        partitioner=None if args.algo == "peel" else partitioner,
        phases=phases,
        wall_time_s=wall,
        output_path=args.out,
    )
    report_path = args.out + ".report"
    with open(report_path, "w", encoding="utf-8") as fh:
        json.dump(report.as_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {args.out} and {report_path}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.algo == "peel":
        raise CliError("verify compares a distributed algorithm against peel")
    g = _load_graph(args.input)
    mode = args.mode or "vertex"
    blocks = args.blocks or 1
    partitioner = args.partitioner or "hash"
    parts = make_partition(partitioner, g, blocks)
    oracle = peel_decompose(g)
    if args.algo == "anchored":
        table, _ = anchored_decompose(g, parts, mode, workers=args.workers)
        got = table.rows
        want = oracle.rows
    else:
        got, _ = skyline_decompose(g, parts, mode, workers=args.workers)
        want = anchored_to_skyline(oracle)
    if args.corrupt_label is not None:
        v = g.id_map.get(args.corrupt_label)
        if v is None:
            raise CliError(f"no vertex labeled {args.corrupt_label}")
        got = list(got)
        got[v] = list(got[v]) + [got[v][-1]]
    for v in range(g.n):
        if got[v] != want[v]:
            print(
                f"divergence at vertex {g.labels[v]}: "
                f"{args.algo}={got[v]} oracle={want[v]}"
            )
            return EXIT_VERIFY_FAILED
    print(f"{args.algo}/{mode} matches the peeling oracle on {g.n} vertices")
    return EXIT_OK


def cmd_bench(args) -> int:
    g = _load_graph(args.input)
    algos = _parse_list(args.algos, ALGOS, "algo")
    modes = _parse_list(args.modes, MODES, "mode")
    blocks_list = [_positive_int(b) for b in args.blocks.split(",")]
    rows = []
    for algo in algos:
        if algo == "peel":
            configs = [(None, None)]
        else:
            configs = [(mode, b) for mode in modes for b in blocks_list]
        for mode, blocks in configs:
            metrics_runs = []
            walls = []
            for _ in range(args.repeat):
                _, _, phases, wall = _run_algo(
                    g, algo, mode or "vertex", blocks or 1, args.partitioner, args.workers
                )
                metrics_runs.append(phases)
                walls.append(wall)
            for other in metrics_runs[1:]:
                if [
                    (m.supersteps, m.messages_total) for m in other
                ] != [(m.supersteps, m.messages_total) for m in metrics_runs[0]]:
                    raise CliError("nondeterministic metrics across repeats")
            phases = metrics_runs[0]
            steps = "+".join(str(m.supersteps) for m in phases) or "-"
            total = sum(m.supersteps for m in phases)
            msgs = sum(m.messages_total for m in phases)
            rows.append(
                (
                    algo,
                    mode or "-",
                    str(blocks) if blocks else "-",
                    args.partitioner,
                    steps,
                    str(total) if phases else "-",
                    str(msgs) if phases else "-",
                    f"{min(walls):.3f}",
                )
            )
    header = ("algo", "mode", "blocks", "part", "steps/phase", "steps", "messages", "wall_s")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    for row in [header, *rows]:
        print("  ".join(col.ljust(w) for col, w in zip(row, widths)).rstrip())
    return EXIT_OK


def cmd_gen(args) -> int:
    if not 0.0 <= args.p <= 1.0:
        raise CliError("--p must lie in [0, 1]")
    g = generate_random_digraph(args.n, args.p, args.seed)
    try:
        write_edge_list(g, args.out)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {args.out}: n={g.n} arcs={g.num_arcs}")
    return EXIT_OK


def _parse_list(raw: str, allowed, kind: str) -> list[str]:
    items = [s.strip() for s in raw.split(",") if s.strip()]
    for item in items:
        if item not in allowed:
            raise CliError(f"unknown {kind} {item!r}")
    if not items:
        raise CliError(f"empty {kind} list")
    return items


def _positive_int(s: str) -> int:
    value = int(s)
    if value < 1:
        raise CliError("block counts must be >= 1")
    return value


def _add_distributed_flags(p: argparse.ArgumentParser, with_out: bool) -> None:
    p.add_argument("input", help="edge-list file")
    p.add_argument("--algo", required=True, choices=ALGOS)
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--blocks", type=int, default=None)
    p.add_argument("--partitioner", choices=PARTITIONERS, default=None)
    p.add_argument("--workers", type=int, default=1)
    if with_out:
        p.add_argument("--out", required=True, help="result file path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcore",
        description="D-core ((k,l)-core) decomposition of directed graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="run one algorithm and write results")
    _add_distributed_flags(p, with_out=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a distributed run against the peel oracle")
    _add_distributed_flags(p, with_out=False)
    p.add_argument("--corrupt-label", type=int, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="superstep/message/time table for configurations")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--algos", default="anchored,skyline")
    p.add_argument("--modes", default="vertex")
    p.add_argument("--blocks", default="1")
    p.add_argument("--partitioner", choices=PARTITIONERS, default="hash")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="write a seeded random digraph as an edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "blocks", None) is not None and isinstance(args.blocks, int):
        if args.blocks < 1:
            parser.error("--blocks must be >= 1")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
