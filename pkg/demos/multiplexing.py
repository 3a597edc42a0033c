"""
Pool-aware multiplexing
=======================

Assign primers from random pools to tags, array by array, and see how
larger pools cut the number of arrays.
"""

import numpy as np

from unitag import VARIANTS, TagSetConfig, build_graph, greedy_generate, schedule_graph
from unitag.experiment import random_pools, truncate_pools

# short tags give a big set quickly
tags = greedy_generate(TagSetConfig(8, length=11, enforce_c3=False))
print(len(tags), "tags")

# one primer universe, truncated to each pool size
pools = random_pools(400, 5, 20, seed=7)
for size in (1, 2, 5):
    graph = build_graph(truncate_pools(pools, size), tags, c=7)
    print(f"size {size}: {graph.n_edges()} primer-tag hybridizations")
    for variant in VARIANTS:
        res = schedule_graph(graph, variant)
        util = np.array(res.per_array_assigned) / len(tags)
        print(f"  {variant:>15}: {res.arrays_used} arrays, "
              f"fill {np.round(util, 2)}")

# a single array's selection as (pool, primer, tag)
graph = build_graph(truncate_pools(pools, 5), tags, c=7)
res = schedule_graph(graph, "primer-del-plus")
for sel in res.plan[0][:5]:
    print(graph.pools[sel.pool].id, graph.primer_seq[sel.primer], tags[sel.tag])
