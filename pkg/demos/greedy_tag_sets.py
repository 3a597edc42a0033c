"""
Greedy tag sets
===============

Generate tag sets with the depth-first greedy search and compare
constraint regimes against the bounds.
"""

import numpy as np

from unitag import TagSetConfig, greedy_generate, theorem1_tag_bound, verify_feasible, weight
from unitag.tagset import token_occurrences

# length-20 tags, no repeated token, no complementary token pair
conf = TagSetConfig(8, length=20)
tags = greedy_generate(conf)
print(len(tags), "tags, bound", theorem1_tag_bound(8, l=20).tag_bound)
print(tags[:3])
print("feasible:", verify_feasible(tags, conf).ok)

# each length-20 tag carries at least 20 - 8 + 1 token occurrences
occ = np.array([token_occurrences([t], 8) for t in tags])
print("token occurrences min/max", occ.min(), occ.max())

# dropping the complement constraint roughly doubles the set
for c in (8, 9):
    both = len(greedy_generate(TagSetConfig(c, length=20)))
    c2 = len(greedy_generate(TagSetConfig(c, length=20, enforce_c3=False)))
    print(f"c={c}: {both} / {c2} = {both / c2:.2f}")

# fixing length, weight, or both
regimes = {
    "length": dict(length=20),
    "weight": dict(min_weight=28, max_weight=32),
    "both": dict(length=20, min_weight=28, max_weight=32),
}
for name, kw in regimes.items():
    conf = TagSetConfig(8, **kw)
    tags = greedy_generate(conf)
    w = np.array([weight(t) for t in tags])
    print(f"{name:>6}: {len(tags):4d} tags, weights {w.min()}..{w.max()}")
