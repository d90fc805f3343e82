"""Command-line front end.

Exit codes: 0 ok, 1 verification mismatch, 2 zero-cost refusal,
64 usage error, 65 malformed input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from tempo.counting import count_simple_paths_dfs, count_static_st_paths, parse_static_digraph
from tempo.errors import GraphFormatError, PathError, TempoError, UnknownVertexError, ZeroCostEdgeError
from tempo.generators import FIXTURES, fixture, hansen_family, random_temporal
from tempo.graph import Objective, PathRecord, TemporalGraph, format_cost, parse_edge_stream
from tempo.mcea import iter_mcea
from tempo.mcf import check_positive_costs, iter_mcf
from tempo.pareto import exists_within, is_efficient, pareto_front

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_REFUSED = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def format_path_text(g: TemporalGraph, rec: PathRecord) -> str:
    parts = [str(rec.vertices[0])]
    for eid in rec.edge_ids:
        e = g.edges[eid]
        parts.append(f"-[{e.t},{e.lam},{format_cost(e.cost)}]-> {e.dst}")
    return (
        f"cost={format_cost(rec.cost)} duration={rec.duration} arrival={rec.arrival} "
        f"path={' '.join(parts)}"
    )


def format_path_json(rec: PathRecord) -> str:
    return json.dumps(
        {
            "edges": list(rec.edge_ids),
            "vertices": [str(v) for v in rec.vertices],
            "start": rec.start,
            "arrival": rec.arrival,
            "duration": rec.duration,
            "cost": format_cost(rec.cost),
        }
    )


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_graph(args) -> TemporalGraph:
    g = parse_edge_stream(_read(args.input))
    g.require(args.source, args.target)
    return g


def cmd_enumerate(args) -> int:
    g = _load_graph(args)
    check_positive_costs(g)
    box: list = []
    it = iter_mcf if args.objective == "fastest" else iter_mcea
    out = sys.stdout
    count = 0
    for rec in it(g, args.source, args.target, box):
        out.write((format_path_json(rec) if args.format == "jsonl" else format_path_text(g, rec)) + "\n")
        out.flush()
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    if args.stats and box:
        st = box[0].stats
        print(
            f"paths={count} labels_created={st.labels_created} label_bound={box[0].label_bound()} "
            f"first_delay={st.first_delay} max_delay={st.max_delay}",
            file=sys.stderr,
        )
    return EXIT_OK


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"edge ids must be comma-separated integers, got {text!r}") from None


def cmd_pareto(args) -> int:
    g = _load_graph(args)
    objective = Objective(args.objective)
    if args.decide is not None:
        try:
            cost_text, time_text = args.decide.split(",")
            time_bound = int(time_text)
        except ValueError:
            raise UsageError(f"--decide expects 'cost,time', got {args.decide!r}") from None
        ok = exists_within(g, args.source, args.target, objective, cost_text, time_bound)
        print("yes" if ok else "no")
        return EXIT_OK
    if args.check_path is not None:
        ok = is_efficient(g, args.source, args.target, objective, _parse_ids(args.check_path))
        print("yes" if ok else "no")
        return EXIT_OK
    front = pareto_front(g, args.source, args.target, objective)
    if args.format == "json":
        print(front.to_json())
    else:
        sys.stdout.write(front.to_text())
    return EXIT_OK


def cmd_count(args) -> int:
    g = parse_static_digraph(_read(args.input))
    g.require(args.source, args.target)
    if args.source == args.target:
        raise UsageError("source and target must differ")
    total = count_static_st_paths(g, args.source, args.target)
    if args.witness == "dfs":
        print(f"{total} {count_simple_paths_dfs(g, args.source, args.target)}")
    else:
        print(total)
    return EXIT_OK


def cmd_verify(args) -> int:
    from tempo.verify import run_suite

    if args.seeds < 1:
        raise UsageError("--seeds must be at least 1")
    found = run_suite(args.seeds, args.start_seed, fault=args.inject_fault, stop_at_first=True)
    if found:
        print(found[0].report(), end="")
        return EXIT_MISMATCH
    print(f"ok: {args.seeds} instances agree with the oracle")
    return EXIT_OK


def cmd_generate(args) -> int:
    fam = args.family
    if fam in FIXTURES:
        text = fixture(fam).to_text()
    elif fam == "hansen":
        text = hansen_family(args.k)[0].to_text()
    else:
        text = random_temporal(
            args.seed,
            args.n,
            args.m,
            t_max=args.t_max,
            lambda_max=args.lambda_max,
            cost_max=args.cost_max,
            allow_zero_cost=args.allow_zero_cost,
        ).to_text()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tempo", description="Efficient paths in weighted temporal graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def query(sp):
        sp.add_argument("--input", "-i", required=True, help="edge-stream file, '-' for stdin")
        sp.add_argument("--source", "-s", required=True)
        sp.add_argument("--target", "-t", required=True)
        sp.add_argument("--objective", choices=["fastest", "earliest"], default="fastest")

    sp = sub.add_parser("enumerate", help="stream all efficient paths")
    query(sp)
    sp.add_argument("--format", choices=["text", "jsonl"], default="text")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--stats", action="store_true", help="print label and delay counters to stderr")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("pareto", help="print the Pareto front or answer a decision query")
    query(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--decide", metavar="COST,TIME")
    sp.add_argument("--check-path", metavar="ID,ID,...")
    sp.set_defaults(func=cmd_pareto)

    sp = sub.add_parser("count", help="count simple s-t paths of a static digraph")
    sp.add_argument("--input", "-i", required=True, help="file of 'u v' lines")
    sp.add_argument("--source", "-s", required=True)
    sp.add_argument("--target", "-t", required=True)
    sp.add_argument("--witness", choices=["dfs"])
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("verify", help="differential check against the brute-force oracle")
    sp.add_argument("--seeds", type=int, default=200)
    sp.add_argument("--start-seed", type=int, default=0)
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="emit an instance in the edge-stream format")
    sp.add_argument("--family", required=True, choices=[*FIXTURES, "hansen", "random"])
    sp.add_argument("--k", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--m", type=int, default=12)
    sp.add_argument("--t-max", type=int, default=10)
    sp.add_argument("--lambda-max", type=int, default=3)
    sp.add_argument("--cost-max", type=int, default=5)
    sp.add_argument("--allow-zero-cost", action="store_true")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tempo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZeroCostEdgeError as exc:
        print(f"tempo: {exc}\nhint: `tempo pareto` accepts zero-cost edges", file=sys.stderr)
        return EXIT_REFUSED
    except (GraphFormatError, UnknownVertexError, PathError) as exc:
        print(f"tempo: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except (OSError, ValueError, TempoError) as exc:
        print(f"tempo: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
