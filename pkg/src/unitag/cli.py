"""Command-line interface.

    unitag tags generate --c 8 --length 20 --constraints c2c3 -o tags.txt
    unitag tags verify tags.txt --c 8 --length 20
    unitag tags bound --c 10 --length 20
    unitag tokens count --c 8
    unitag tokens extract --c 4 ATACGA
    unitag pools random --pools 1000 --pool-size 2 --seed 17 -o pools.tsv
    unitag assign pools.tsv tags.txt --c 7 --algorithm primer-del-plus -o plan.tsv
    unitag experiment --tags tags.txt --tag-counts 500 --pools 1000 --pool-size 1,5 --report r.csv

Exit status: 0 success/feasible, 1 infeasible or failed validation, 2 usage or parse error.
"""

import argparse
import logging
import sys

from . import io
from .experiment import ExperimentSpec, random_pools, run_experiment
from .hybrid import build_graph, validate_assignment
from .multiplex import VARIANTS, schedule_graph
from .seq import DnaSeq, SequenceError
from .tagset import TagSetConfig, greedy_search, verify_feasible
from .tokens import enumerate_tokens, extract_tokens, theorem1_tag_bound

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _add_tag_constraints(p, require_c=True):
    p.add_argument("--c", type=int, required=require_c, help="token weight threshold")
    p.add_argument("--length", type=int, help="tag length l")
    p.add_argument("--min-weight", type=int, help="minimum tag weight h")
    p.add_argument("--max-weight", type=int, help="maximum tag weight")
    p.add_argument("--constraints", choices=("c2", "c2c3"), default="c2c3")


def _tag_config(args, **extra) -> TagSetConfig:
    return TagSetConfig(args.c, length=args.length, min_weight=args.min_weight,
                        max_weight=args.max_weight, enforce_c3=args.constraints == "c2c3",
                        **extra)


def _bound_lines(c, length, min_weight):
    rep = theorem1_tag_bound(c, length, min_weight)
    return rep, [
        f"tags ≤ {rep.tag_bound}; tokens ≤ {rep.token_bound}",
        f"tag_bound={rep.tag_bound}",
        f"tag_bound_by_length={'' if rep.tag_bound_by_length is None else rep.tag_bound_by_length}",
        f"tag_bound_by_weight={'' if rep.tag_bound_by_weight is None else rep.tag_bound_by_weight}",
        f"token_bound={rep.token_bound}",
        f"tail_weight_bound={rep.tail_weight_bound}",
    ]


def cmd_tags_generate(args):
    cfg = _tag_config(args, max_tags=args.limit, node_budget=args.node_budget)
    res = greedy_search(cfg)
    if args.output:
        io.write_tags(args.output, res.tags)
    else:
        io.write_tags(sys.stdout, res.tags)
    out = sys.stderr if not args.output else sys.stdout
    print(f"count {len(res.tags)}", file=out)
    if res.budget_hit:
        print(f"note: node budget reached after {res.nodes} nodes", file=out)
    rep = theorem1_tag_bound(args.c, args.length, args.min_weight)
    if cfg.enforce_c3:
        print(f"bound {rep.tag_bound}", file=out)
    else:
        print(f"bound n/a (C1+C2 only; C1+C2+C3 bound is {rep.tag_bound})", file=out)
    return EXIT_OK


def cmd_tags_verify(args):
    tags = io.read_tags(args.file)
    report = verify_feasible(tags, _tag_config(args))
    for v in report.violations:
        where = ", ".join(f"tag {i + 1} pos {p}" for i, p in zip(v.tags, v.positions))
        print(f"{v.constraint}\t{v.string}\t{where}")
    print(f"{'feasible' if report.ok else 'infeasible'}: {len(tags)} tags, "
          f"{len(report.violations)} violation(s)")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_tags_bound(args):
    _, lines = _bound_lines(args.c, args.length, args.min_weight)
    print("\n".join(lines))
    return EXIT_OK


def cmd_tokens_count(args):
    print(len(enumerate_tokens(args.c)))
    return EXIT_OK


def cmd_tokens_extract(args):
    for seq in args.sequences:
        for end, tok in extract_tokens(DnaSeq(seq), args.c):
            print(f"{end} {tok}")
    return EXIT_OK


def cmd_pools_random(args):
    pools = random_pools(args.pools, args.pool_size, args.primer_length, seed=args.seed)
    text = io.format_pools(pools)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_assign(args):
    pools = io.read_pools(args.pool_file)
    tags = io.read_tags(args.tag_file)
    if not tags:
        raise UsageError("tag file is empty")
    if not pools:
        raise UsageError("pool file is empty")
    graph = build_graph(pools, tags, args.c)
    res = schedule_graph(graph, args.algorithm)
    text = io.format_assignment(res.plan, graph)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
        plan = io.read_assignment(args.output, graph)
    else:
        sys.stdout.write(text)
        plan = res.plan
    ok = all(validate_assignment(sel, graph) for sel in plan)
    print(f"arrays={res.arrays_used} util={res.avg_utilization:.1f}%",
          file=sys.stdout if args.output else sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_experiment(args):
    if args.tags:
        tags = io.read_tags(args.tags)
    else:
        cfg = TagSetConfig(args.tag_c, length=args.length, min_weight=args.min_weight,
                           max_weight=args.max_weight,
                           enforce_c3=args.constraints == "c2c3",
                           max_tags=max(args.tag_counts))
        tags = greedy_search(cfg).tags
    algorithms = VARIANTS if args.algorithm == "all" else tuple(args.algorithm.split(","))
    spec = ExperimentSpec(args.pools, args.pool_size, tags, args.tag_counts, c=args.c,
                          algorithms=algorithms, replicates=args.replicates, seed=args.seed,
                          primer_length=args.primer_length)
    rows, records = run_experiment(spec, jobs=args.jobs)
    io.write_report(args.report if args.report else sys.stdout, [r.as_tuple() for r in rows])
    if args.runs:
        with open(args.runs, "w") as f:
            f.write("pools,pool_size,tags,algorithm,replicate,instance,arrays,utilization\n")
            for r in records:
                f.write(f"{r.pools},{r.pool_size},{r.tags},{r.algorithm},{r.replicate},"
                        f"{r.instance},{r.arrays},{r.utilization:.1f}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unitag", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    tags = sub.add_parser("tags", help="tag set design").add_subparsers(dest="action", required=True)
    p = tags.add_parser("generate", help="greedy tag set")
    _add_tag_constraints(p)
    p.add_argument("--limit", type=int, help="stop after this many tags")
    p.add_argument("--node-budget", type=int, default=50_000_000)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tags_generate)

    p = tags.add_parser("verify", help="check a tag file for C1/C2/C3 violations")
    p.add_argument("file")
    _add_tag_constraints(p)
    p.set_defaults(func=cmd_tags_verify)

    p = tags.add_parser("bound", help="upper bound on feasible tag set size")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--length", type=int)
    p.add_argument("--min-weight", type=int)
    p.set_defaults(func=cmd_tags_bound)

    tok = sub.add_parser("tokens", help="c-token utilities").add_subparsers(dest="action", required=True)
    p = tok.add_parser("count", help="size of the c-token universe")
    p.add_argument("--c", type=int, required=True)
    p.set_defaults(func=cmd_tokens_count)
    p = tok.add_parser("extract", help="token occurrence at each position")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("sequences", nargs="+")
    p.set_defaults(func=cmd_tokens_extract)

    pools = sub.add_parser("pools", help="primer pools").add_subparsers(dest="action", required=True)
    p = pools.add_parser("random", help="uniform random primer pools")
    p.add_argument("--pools", type=int, required=True)
    p.add_argument("--pool-size", type=int, default=1)
    p.add_argument("--primer-length", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_pools_random)

    p = sub.add_parser("assign", help="schedule pools onto arrays")
    p.add_argument("pool_file")
    p.add_argument("tag_file")
    p.add_argument("--c", type=int, default=7, help="hybridization token weight")
    p.add_argument("--algorithm", choices=VARIANTS, default="primer-del-plus")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_assign)

    p = sub.add_parser("experiment", help="multiplexing experiment over random instances")
    p.add_argument("--pools", type=_int_list, default=[1000])
    p.add_argument("--pool-size", type=_int_list, default=[1, 2, 5])
    p.add_argument("--tag-counts", type=_int_list, default=[500])
    p.add_argument("--tags", help="tag file (default: generate greedily)")
    p.add_argument("--tag-c", type=int, default=8, help="token weight for generated tags")
    p.add_argument("--length", type=int, default=11)
    p.add_argument("--min-weight", type=int)
    p.add_argument("--max-weight", type=int)
    p.add_argument("--constraints", choices=("c2", "c2c3"), default="c2")
    p.add_argument("--c", type=int, default=7, help="hybridization token weight")
    p.add_argument("--algorithm", default="all",
                   help=f"comma-separated subset of {','.join(VARIANTS)} or 'all'")
    p.add_argument("--replicates", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--primer-length", type=int, default=20)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="CSV output (default stdout)")
    p.add_argument("--runs", help="optional per-replicate CSV with instance hashes")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (io.ParseError, SequenceError, UsageError, ValueError, OSError) as e:
        print(f"unitag: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
