"""
Weights, c-tokens and upper bounds
==================================

Walk through the 2-4 weight, token extraction and the counting bounds
on how many tags any feasible set can hold.
"""

import numpy as np

from unitag import extract_tokens, g, h, lemma1_bounds, theorem1_tag_bound, weight
from unitag.tokens import TokenClass, class_size, classify, enumerate_tokens

# A and T weigh 1, C and G weigh 2
print(weight("ATACGA"), weight("GGCC"))

# c-tokens are the minimal suffixes of weight >= c; one per position once
# the prefix is heavy enough
for end, tok in extract_tokens("ATACGA", 4):
    print(end, tok)

# g(n) counts strings of weight n, h(n) the self-complementary ones
ns = np.arange(13)
print(np.array([g(n) for n in ns]))
print(np.array([h(n) for n in ns]))

# the token universe splits into seven classes with closed-form sizes
c = 6
universe = enumerate_tokens(c)
counts = {k: 0 for k in TokenClass}
for t in universe:
    counts[classify(t, c)] += 1
for k in TokenClass:
    print(f"{k.value:>8} {counts[k]:5d} {class_size(k, c):5d}")

# bounds for the usual design window: length-20 tags, weight 28..32
print(" c  tokens  by_len  by_wt")
for c in (8, 9, 10):
    tokens, _ = lemma1_bounds(c)
    r_len = theorem1_tag_bound(c, l=20)
    r_wt = theorem1_tag_bound(c, h=28)
    print(f"{c:2d} {tokens:7d} {r_len.tag_bound:7d} {r_wt.tag_bound:6d}")
