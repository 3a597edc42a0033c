"""Seeded random pool instances and the multiplexing experiment harness."""

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .hybrid import Pool, build_graph
from .multiplex import VARIANTS, schedule_graph

_LETTERS = np.array(list("ACGT"))


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """PCG64 generator for ``seed`` and an optional stream path (e.g. replicate)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *stream])))


def random_primers(rng: np.random.Generator, n: int, length: int) -> List[str]:
    """``n`` primers drawn uniformly from {A,C,G,T}^length."""
    draws = rng.integers(0, 4, size=(n, length))
    return ["".join(row) for row in _LETTERS[draws]]


def random_pools(m: int, pool_size: int, primer_length: int = 20,
                 seed: int = 0, rng: Optional[np.random.Generator] = None) -> List[Pool]:
    if min(m, pool_size, primer_length) < 1:
        raise ValueError("m, pool_size and primer_length must all be >= 1")
    rng = rng if rng is not None else make_rng(seed)
    primers = random_primers(rng, m * pool_size, primer_length)
    return [Pool(f"P{i + 1}", tuple(primers[i * pool_size:(i + 1) * pool_size]))
            for i in range(m)]


def truncate_pools(pools: Sequence[Pool], size: int) -> List[Pool]:
    return [Pool(p.id, p.primers[:size]) for p in pools]


def instance_hash(pools: Sequence[Pool], tags: Sequence[str]) -> str:
    h = hashlib.sha256()
    for p in pools:
        h.update(p.id.encode())
        for s in p.primers:
            h.update(b"\t" + s.encode())
        h.update(b"\n")
    h.update(b"|")
    for t in tags:
        h.update(t.encode() + b"\n")
    return h.hexdigest()[:16]


@dataclass
class ExperimentSpec:
    pool_counts: Sequence[int]
    pool_sizes: Sequence[int]
    tags: Sequence[str]            # tag universe; the first n are used for each tag count
    tag_counts: Sequence[int]
    c: int = 7
    algorithms: Sequence[str] = VARIANTS
    replicates: int = 10
    seed: int = 0
    primer_length: int = 20

    def __post_init__(self):
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        for name in ("pool_counts", "pool_sizes", "tag_counts"):
            vals = getattr(self, name)
            if not vals or min(vals) < 1:
                raise ValueError(f"{name} must be non-empty and positive")
        if max(self.tag_counts) > len(self.tags):
            raise ValueError(f"need {max(self.tag_counts)} tags, only {len(self.tags)} available")
        bad = set(self.algorithms) - set(VARIANTS)
        if bad:
            raise ValueError(f"unknown algorithm(s) {sorted(bad)}")


@dataclass
class RunRecord:
    pools: int
    pool_size: int
    tags: int
    algorithm: str
    replicate: int
    instance: str
    arrays: int
    utilization: float


@dataclass
class ReportRow:
    pools: int
    pool_size: int
    tags: int
    c: int
    algorithm: str
    arrays_mean: float
    utilization_mean: float

    def as_tuple(self) -> Tuple:
        return (self.pools, self.pool_size, self.tags, self.c, self.algorithm,
                self.arrays_mean, self.utilization_mean)


def _run_replicate(args) -> List[RunRecord]:
    spec, m, rep = args
    # one stream per (pool count, replicate); smaller pool sizes are prefixes
    # of the largest, so every size sees the same primer universe
    base = random_pools(m, max(spec.pool_sizes), spec.primer_length,
                        rng=make_rng(spec.seed, m, rep))
    out = []
    for size in spec.pool_sizes:
        pools = truncate_pools(base, size)
        for n in spec.tag_counts:
            tags = list(spec.tags[:n])
            graph = build_graph(pools, tags, spec.c)
            ih = instance_hash(pools, tags)
            for alg in spec.algorithms:
                res = schedule_graph(graph, alg)
                out.append(RunRecord(m, size, n, alg, rep, ih, res.arrays_used,
                                     res.avg_utilization))
    return out


def run_experiment(spec: ExperimentSpec, jobs: int = 1) -> Tuple[List[ReportRow], List[RunRecord]]:
    """Run every (pools, replicate) instance; return aggregated rows and raw runs."""
    tasks = [(spec, m, rep) for m in spec.pool_counts for rep in range(spec.replicates)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_run_replicate, tasks))
    else:
        chunks = [_run_replicate(t) for t in tasks]
    records = [r for chunk in chunks for r in chunk]

    alg_rank = {a: i for i, a in enumerate(VARIANTS)}
    groups = {}
    for r in records:
        groups.setdefault((r.pools, r.pool_size, r.algorithm, r.tags), []).append(r)
    rows = []
    for key in sorted(groups, key=lambda k: (k[0], k[1], alg_rank[k[2]], k[3])):
        runs = groups[key]
        rows.append(ReportRow(key[0], key[1], key[3], spec.c, key[2],
                              sum(r.arrays for r in runs) / len(runs),
                              sum(r.utilization for r in runs) / len(runs)))
    return rows, records
