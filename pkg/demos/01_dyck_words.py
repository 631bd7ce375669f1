"""
Dyck words and the samplers
===========================

A Dyck word over {u, d} never dips below height zero and ends at zero.
The samplers draw positives uniformly over all Dyck words under a length
bound, and negatives uniformly over the words with equal u/d counts that
are not Dyck.
"""
from collections import Counter

import numpy as np

import ntm_dyck as nd

for k in range(1, 7):
    print(f"k={k}  Catalan={nd.catalan(k):4d}  balanced non-Dyck={len(nd.enumerate_balanced(k)) - nd.catalan(k):4d}")

word = "uuduuddduduudd"
print("\n", word)
print(" heights      ", nd.height_profile(word))
print(" prefix labels", nd.prefix_labels(word))

# every Dyck word shorter than 8 should show up about equally often
rng = np.random.default_rng(0)
counts = Counter(nd.sample_dyck_uniform(8, rng) for _ in range(40_000))
for w, c in sorted(counts.items(), key=lambda kv: (len(kv[0]), kv[0])):
    print(f"{w:>7}  {c}")

print("\nnegatives:", [nd.sample_negative(12, rng) for _ in range(6)])
