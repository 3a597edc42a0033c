"""Primer-tag hybridization graph and the X/Y assignability condition.

A primer hybridizes to a tag when the reverse complement of one of the
primer's c-tokens occurs in the tag.  For a set of pools P', ``X(P')`` is
the set of pools owning a hybridizing tag that no primer outside the pool
hybridizes to, and ``Y(P')`` the set of tags that no active primer
hybridizes to.  ``|X| + |Y| >= |P'|`` guarantees an assignment exists.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, NamedTuple, Sequence, Set, Tuple

from .seq import DnaSeq, revcomp
from .tokens import extract_tokens, window_suffixes


class AssignmentError(ValueError):
    pass


@dataclass(frozen=True)
class Pool:
    id: str
    primers: Tuple[DnaSeq, ...]

    def __post_init__(self):
        if not self.primers:
            raise ValueError(f"pool {self.id!r} has no primers")
        object.__setattr__(self, "primers", tuple(DnaSeq(p) for p in self.primers))

    def __len__(self):
        return len(self.primers)


class Selection(NamedTuple):
    pool: int    # pool index
    primer: int  # global primer id in the graph
    tag: int     # tag index


def hybridizes(p: str, t: str, c: int) -> bool:
    """True iff some c-token of ``p`` has its reverse complement inside ``t``."""
    if c < 2:
        raise ValueError(f"c must be >= 2, got {c}")
    return any(revcomp(x) in t for _, x in extract_tokens(p, c))


class HybGraph:
    """Bipartite primer/tag hybridization adjacency.

    Primers are numbered globally in pool order; ``pool_of[g]`` and
    ``pos_of[g]`` locate primer ``g`` inside its pool.
    """

    def __init__(self, pools: Sequence[Pool], tags: Sequence[str], c: int,
                 tags_of: List[Tuple[int, ...]]):
        self.pools = list(pools)
        self.tags = list(tags)
        self.c = c
        self.pool_of: List[int] = []
        self.pos_of: List[int] = []
        self.primer_seq: List[str] = []
        self.members: List[List[int]] = []
        for i, pool in enumerate(self.pools):
            ids = []
            for k, p in enumerate(pool.primers):
                ids.append(len(self.primer_seq))
                self.pool_of.append(i)
                self.pos_of.append(k)
                self.primer_seq.append(p)
            self.members.append(ids)
        self.tags_of = tags_of
        primers_of = [[] for _ in self.tags]
        for g, ts in enumerate(tags_of):
            for t in ts:
                primers_of[t].append(g)
        self.primers_of: List[Tuple[int, ...]] = [tuple(ps) for ps in primers_of]

    @property
    def n_tags(self) -> int:
        return len(self.tags)

    @property
    def n_primers(self) -> int:
        return len(self.primer_seq)

    def degree(self, g: int) -> int:
        return len(self.tags_of[g])

    def n_edges(self) -> int:
        return sum(len(ts) for ts in self.tags_of)


def window_index(tags: Sequence[str], c: int) -> Dict[str, Set[int]]:
    """Map every weight-c/c+1 substring of the tags to the tags holding it."""
    index = defaultdict(set)
    for i, t in enumerate(tags):
        for _, w in window_suffixes(t, c):
            index[w].add(i)
    return index


def primer_tags(p: str, index: Mapping[str, Set[int]], c: int) -> Tuple[int, ...]:
    hits = set()
    for _, x in extract_tokens(p, c):
        hits.update(index.get(revcomp(x), ()))
    return tuple(sorted(hits))


def build_graph(pools: Sequence[Pool], tags: Sequence[str], c: int) -> HybGraph:
    """Hybridization graph between all primers of ``pools`` and ``tags``."""
    if not tags:
        raise ValueError("no tags")
    index = window_index(tags, c)
    tags_of = [primer_tags(p, index, c) for pool in pools for p in pool.primers]
    return HybGraph(pools, tags, c, tags_of)


def build_graph_naive(pools: Sequence[Pool], tags: Sequence[str], c: int) -> HybGraph:
    """All-pairs :func:`hybridizes` construction; reference for tests."""
    if not tags:
        raise ValueError("no tags")
    tags_of = [tuple(i for i, t in enumerate(tags) if hybridizes(p, t, c))
               for pool in pools for p in pool.primers]
    return HybGraph(pools, tags, c, tags_of)


def _active_primers_of(active: Mapping[int, Sequence[int]], graph: HybGraph):
    """P'(t) restricted to active primers, as tag -> list of primer ids."""
    out = defaultdict(list)
    for pid in active:
        for g in active[pid]:
            for t in graph.tags_of[g]:
                out[t].append(g)
    return out


def compute_XY(active: Mapping[int, Sequence[int]], graph: HybGraph) -> Tuple[Set[int], Set[int]]:
    """X and Y for the active pools.

    ``active`` maps pool index to the primer ids still present in that pool.
    """
    pof = _active_primers_of(active, graph)
    X = set()
    for pid, prims in active.items():
        for g in prims:
            if any(all(graph.pool_of[q] == pid for q in pof[t]) for t in graph.tags_of[g]):
                X.add(pid)
                break
    Y = {t for t in range(graph.n_tags) if not pof.get(t)}
    return X, Y


def condition_holds(active: Mapping[int, Sequence[int]], graph: HybGraph) -> bool:
    X, Y = compute_XY(active, graph)
    return len(X) + len(Y) >= len(active)


def construct_assignment(active: Mapping[int, Sequence[int]], graph: HybGraph) -> List[Selection]:
    """Pick one primer per active pool and a tag for it.

    Pools in X get their first witness pair (primer order, then tag order);
    the others get their first primer and the next unused tag of Y.
    """
    pof = _active_primers_of(active, graph)
    witness = {}
    for pid in sorted(active):
        for g in active[pid]:
            t = next((t for t in graph.tags_of[g]
                      if all(graph.pool_of[q] == pid for q in pof[t])), None)
            if t is not None:
                witness[pid] = Selection(pid, g, t)
                break
    free = iter(t for t in range(graph.n_tags) if not pof.get(t))
    out = []
    for pid in sorted(active):
        if pid in witness:
            out.append(witness[pid])
            continue
        t = next(free, None)
        if t is None:
            raise AssignmentError("condition not satisfied")
        out.append(Selection(pid, active[pid][0], t))
    return out


def validate_assignment(selection: Iterable[Selection], graph: HybGraph) -> bool:
    """One-to-one, and no selected primer hybridizes to another primer's tag."""
    selection = list(selection)
    assigned = {}
    for s in selection:
        if s.tag in assigned:
            return False
        assigned[s.tag] = s.primer
    pools = [s.pool for s in selection]
    if len(set(pools)) != len(pools):
        return False
    for s in selection:
        if graph.pool_of[s.primer] != s.pool:
            return False
        for t in graph.tags_of[s.primer]:
            if t in assigned and assigned[t] != s.primer:
                return False
    return True
