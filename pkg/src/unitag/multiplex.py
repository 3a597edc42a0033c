"""Iterative primer deletion: scheduling primer pools onto tag arrays.

Each array starts from every pool not yet placed, with full primer lists.
While the X/Y condition fails, the primer of maximum potential is deleted
(an emptied pool leaves the array); the surviving pools are assigned and
the rest wait for the next array.

Variants:

* ``primer-del``      -- plain deletion;
* ``primer-del-plus`` -- primers of single-primer pools are spared unless
  every pool is down to one primer;
* ``min-pot`` / ``min-deg`` -- each pool is first reduced to its primer of
  minimum potential / degree (computed once on the full instance), then
  ``primer-del`` runs on the single-primer pools.
"""

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .hybrid import HybGraph, Pool, Selection, build_graph, construct_assignment

VARIANTS = ("primer-del", "primer-del-plus", "min-pot", "min-deg")

# potentials are kept as integers scaled by 2**POT_BITS; exact and clamped
POT_BITS = 64
POT_ONE = 1 << POT_BITS


def _scaled_tag_potential(k: int) -> int:
    return POT_ONE >> k if k <= POT_BITS else 0


def tag_potential(n_hyb: int) -> float:
    """``2 ** -n_hyb`` for a tag hybridizing ``n_hyb`` active primers; 0 past 2**-64."""
    return _scaled_tag_potential(n_hyb) / POT_ONE


def primer_potential(g: int, graph: HybGraph, counts: Sequence[int]) -> float:
    """Sum of tag potentials over the tags primer ``g`` hybridizes to.

    ``counts[t]`` is the number of active primers hybridizing tag ``t``.
    """
    return _primer_potential_scaled(g, graph, counts) / POT_ONE


def _primer_potential_scaled(g, graph, counts) -> int:
    return sum(_scaled_tag_potential(counts[t]) for t in graph.tags_of[g])


def active_counts(active: Dict[int, Sequence[int]], graph: HybGraph) -> List[int]:
    counts = [0] * graph.n_tags
    for prims in active.values():
        for g in prims:
            for t in graph.tags_of[g]:
                counts[t] += 1
    return counts


def select_min(pool: int, metric: str, graph: HybGraph,
               counts: Optional[Sequence[int]] = None) -> int:
    """Primer of pool ``pool`` minimising ``metric`` ("potential" or "degree").

    Ties go to the earlier primer.  Potentials use ``counts`` (defaults to
    every primer of every pool being active).
    """
    members = graph.members[pool]
    if metric == "degree":
        return min(members, key=graph.degree)
    if metric == "potential":
        if counts is None:
            counts = active_counts(dict(enumerate(graph.members)), graph)
        return min(members, key=lambda g: _primer_potential_scaled(g, graph, counts))
    raise ValueError(f"unknown metric {metric!r}")


class _ArrayState:
    """Incremental X/Y bookkeeping for one array's deletion loop."""

    def __init__(self, graph: HybGraph, active: Dict[int, List[int]], spare_singletons: bool):
        self.graph = graph
        self.active = {pid: list(prims) for pid, prims in active.items()}
        self.spare = spare_singletons
        n = graph.n_tags
        self.hyb = [set() for _ in range(n)]      # active primers per tag
        self.tag_pools = [dict() for _ in range(n)]  # pool -> active primer count
        for pid, prims in self.active.items():
            for g in prims:
                for t in graph.tags_of[g]:
                    self.hyb[t].add(g)
                    tp = self.tag_pools[t]
                    tp[pid] = tp.get(pid, 0) + 1
        self.n_free = sum(1 for t in range(n) if not self.hyb[t])
        self.private = {pid: 0 for pid in self.active}
        for t in range(n):
            if len(self.tag_pools[t]) == 1:
                self.private[next(iter(self.tag_pools[t]))] += 1
        self.n_x = sum(1 for v in self.private.values() if v)
        self.n_multi = sum(1 for prims in self.active.values() if len(prims) > 1)
        self.pot = {}
        self.version = {}
        for prims in self.active.values():
            for g in prims:
                self.pot[g] = sum(_scaled_tag_potential(len(self.hyb[t])) for t in graph.tags_of[g])
                self.version[g] = 0
        self._rebuild_heap()

    def condition(self) -> bool:
        return self.n_x + self.n_free >= len(self.active)

    def _entry(self, g):
        return (-self.pot[g], self.graph.pool_of[g], self.graph.pos_of[g], g, self.version[g])

    def _candidate(self, g) -> bool:
        return not (self.spare and self.n_multi and len(self.active[self.graph.pool_of[g]]) == 1)

    def _rebuild_heap(self):
        self.heap = [self._entry(g) for prims in self.active.values() for g in prims
                     if self._candidate(g)]
        heapq.heapify(self.heap)

    def pop_max(self) -> int:
        while self.heap:
            entry = heapq.heappop(self.heap)
            g = entry[3]
            if g not in self.version or self.version[g] != entry[4]:
                continue
            if not self._candidate(g):
                continue
            return g
        raise RuntimeError("no deletable primer left")

    def _set_private(self, pid, delta):
        before = self.private[pid]
        self.private[pid] = before + delta
        if before == 0 and delta > 0:
            self.n_x += 1
        elif before > 0 and before + delta == 0:
            self.n_x -= 1

    def delete(self, g: int) -> None:
        graph = self.graph
        pid = graph.pool_of[g]
        for t in graph.tags_of[g]:
            tp = self.tag_pools[t]
            owner_before = next(iter(tp)) if len(tp) == 1 else None
            tp[pid] -= 1
            if not tp[pid]:
                del tp[pid]
            owner_after = next(iter(tp)) if len(tp) == 1 else None
            if owner_before != owner_after:
                if owner_before is not None:
                    self._set_private(owner_before, -1)
                if owner_after is not None:
                    self._set_private(owner_after, +1)
            hyb = self.hyb[t]
            k = len(hyb)
            hyb.discard(g)
            if k == 1:
                self.n_free += 1
            delta = _scaled_tag_potential(k - 1) - _scaled_tag_potential(k)
            if delta:
                for q in hyb:
                    self.pot[q] += delta
                    self.version[q] += 1
                    if self._candidate(q):
                        heapq.heappush(self.heap, self._entry(q))
        del self.pot[g]
        del self.version[g]
        prims = self.active[pid]
        prims.remove(g)
        if len(prims) == 1:
            self.n_multi -= 1
            if self.spare and self.n_multi == 0:
                # every pool is down to one primer: all become deletable
                self._rebuild_heap()
        elif not prims:
            del self.active[pid]
            del self.private[pid]


@dataclass
class ScheduleResult:
    plan: List[List[Selection]]  # per array, in array order
    arrays_used: int
    per_array_assigned: List[int]
    avg_utilization: float
    n_tags: int
    deletions: int = 0

    def entries(self):
        """Flat ``(array, selection)`` pairs with arrays numbered from 1."""
        for k, sel in enumerate(self.plan, start=1):
            for s in sel:
                yield k, s


def utilization_stats(per_array_assigned: Sequence[int], n_tags: int):
    """Per-array utilization (%) and the average that leaves out the last array."""
    if not per_array_assigned:
        raise ValueError("empty plan")
    util = [100.0 * a / n_tags for a in per_array_assigned]
    counted = util[:-1] if len(util) > 1 else util
    return util, sum(counted) / len(counted)


def reduce_pools(graph: HybGraph, metric: str) -> Dict[int, List[int]]:
    """Single-primer pools chosen by :func:`select_min` against the full instance."""
    counts = active_counts(dict(enumerate(graph.members)), graph)
    return {pid: [select_min(pid, metric, graph, counts)] for pid in range(len(graph.pools))}


def schedule_graph(graph: HybGraph, variant: str = "primer-del") -> ScheduleResult:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    if not graph.n_tags:
        raise ValueError("no tags")
    if variant == "min-pot":
        base = reduce_pools(graph, "potential")
    elif variant == "min-deg":
        base = reduce_pools(graph, "degree")
    else:
        base = {pid: list(m) for pid, m in enumerate(graph.members)}
    spare = variant == "primer-del-plus"

    remaining = sorted(base)
    plan = []
    deletions = 0
    while remaining:
        state = _ArrayState(graph, {pid: base[pid] for pid in remaining}, spare)
        while not state.condition():
            state.delete(state.pop_max())
            deletions += 1
        selection = construct_assignment(state.active, graph)
        plan.append(selection)
        placed = set(state.active)
        remaining = [pid for pid in remaining if pid not in placed]

    assigned = [len(sel) for sel in plan]
    _, avg = utilization_stats(assigned, graph.n_tags)
    return ScheduleResult(plan, len(plan), assigned, avg, graph.n_tags, deletions)


def schedule(pools: Sequence[Pool], tags: Sequence[str], c: int,
             variant: str = "primer-del") -> ScheduleResult:
    """Place every pool on some array; see the module docstring for variants."""
    if not tags:
        raise ValueError("no tags")
    if not pools:
        raise ValueError("no pools")
    return schedule_graph(build_graph(pools, tags, c), variant)
