"""Plain-text formats: tag lists, pool TSV, assignment TSV, report CSV."""

import csv
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, TextIO, Tuple, Union

from .hybrid import HybGraph, Pool, Selection
from .seq import DnaSeq, SequenceError

PathLike = Union[str, Path]

ASSIGNMENT_COLUMNS = ("array", "pool_id", "primer_seq", "tag_index", "tag_seq")
REPORT_COLUMNS = ("pools", "pool_size", "tags", "c", "algorithm", "arrays_mean", "utilization_mean")


class ParseError(ValueError):
    def __init__(self, path, lineno, msg):
        super().__init__(f"{path}:{lineno}: {msg}")
        self.path = path
        self.lineno = lineno


def _content_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_tags(lines: Iterable[str], source: str = "<tags>") -> List[DnaSeq]:
    out = []
    for lineno, line in _content_lines(lines):
        try:
            out.append(DnaSeq(line))
        except SequenceError as e:
            raise ParseError(source, lineno, str(e)) from None
    return out


def read_tags(path: PathLike) -> List[DnaSeq]:
    with open(path) as f:
        return parse_tags(f, str(path))


def write_tags(path_or_file: Union[PathLike, TextIO], tags: Sequence[str]) -> None:
    text = "".join(f"{t}\n" for t in tags)
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        Path(path_or_file).write_text(text)


def parse_pools(lines: Iterable[str], source: str = "<pools>") -> List[Pool]:
    pools = []
    seen = set()
    for lineno, line in _content_lines(lines):
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(source, lineno, "expected 'pool_id<TAB>primer1,primer2,...'")
        pid, primers = parts[0].strip(), [p.strip() for p in parts[1].split(",") if p.strip()]
        if pid in seen:
            raise ParseError(source, lineno, f"duplicate pool id {pid!r}")
        if not primers:
            raise ParseError(source, lineno, f"pool {pid!r} has no primers")
        try:
            pools.append(Pool(pid, tuple(DnaSeq(p) for p in primers)))
        except SequenceError as e:
            raise ParseError(source, lineno, str(e)) from None
        seen.add(pid)
    return pools


def read_pools(path: PathLike) -> List[Pool]:
    with open(path) as f:
        return parse_pools(f, str(path))


def format_pools(pools: Sequence[Pool]) -> str:
    return "".join(f"{p.id}\t{','.join(p.primers)}\n" for p in pools)


def write_pools(path: PathLike, pools: Sequence[Pool]) -> None:
    Path(path).write_text(format_pools(pools))


def format_assignment(plan: Sequence[Sequence[Selection]], graph: HybGraph) -> str:
    """Assignment TSV; arrays and tag indices are 1-based."""
    rows = ["\t".join(ASSIGNMENT_COLUMNS)]
    for k, sel in enumerate(plan, start=1):
        for s in sel:
            rows.append(f"{k}\t{graph.pools[s.pool].id}\t{graph.primer_seq[s.primer]}"
                        f"\t{s.tag + 1}\t{graph.tags[s.tag]}")
    return "\n".join(rows) + "\n"


def write_assignment(path: PathLike, plan, graph: HybGraph) -> None:
    Path(path).write_text(format_assignment(plan, graph))


def parse_assignment(lines: Iterable[str], graph: HybGraph,
                     source: str = "<assignment>") -> List[List[Selection]]:
    """Read an assignment TSV back into per-array selections over ``graph``."""
    pool_index = {p.id: i for i, p in enumerate(graph.pools)}
    arrays: Dict[int, List[Selection]] = {}
    for lineno, line in _content_lines(lines):
        parts = line.split("\t")
        if parts[0] == "array":
            continue
        if len(parts) != 5:
            raise ParseError(source, lineno, "expected 5 tab-separated columns")
        try:
            k, tag_no = int(parts[0]), int(parts[3])
        except ValueError:
            raise ParseError(source, lineno, "array and tag_index must be integers") from None
        pid = pool_index.get(parts[1])
        if pid is None:
            raise ParseError(source, lineno, f"unknown pool {parts[1]!r}")
        g = next((g for g in graph.members[pid] if graph.primer_seq[g] == parts[2]), None)
        if g is None:
            raise ParseError(source, lineno, f"primer {parts[2]!r} not in pool {parts[1]!r}")
        if not 1 <= tag_no <= graph.n_tags or graph.tags[tag_no - 1] != parts[4]:
            raise ParseError(source, lineno, f"tag {tag_no} does not match {parts[4]!r}")
        arrays.setdefault(k, []).append(Selection(pid, g, tag_no - 1))
    return [arrays[k] for k in sorted(arrays)]


def read_assignment(path: PathLike, graph: HybGraph) -> List[List[Selection]]:
    with open(path) as f:
        return parse_assignment(f, graph, str(path))


def write_report(path_or_file, rows: Iterable[Tuple]) -> None:
    """Report CSV; utilization with one decimal, arrays with two."""
    def emit(f):
        w = csv.writer(f, lineterminator="\n")
        w.writerow(REPORT_COLUMNS)
        for pools, size, tags, c, alg, arrays, util in rows:
            w.writerow([pools, size, tags, c, alg, f"{arrays:.2f}",
                        f"{util:.1f}"])
    if hasattr(path_or_file, "write"):
        emit(path_or_file)
    else:
        with open(path_or_file, "w", newline="") as f:
            emit(f)
