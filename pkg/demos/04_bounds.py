"""
Bounds from every available calculator
======================================

``aggregate_bounds`` runs all calculators that apply to an instance and
reports each one with its provenance. Two printed path formulas disagree
with known values; they are listed separately and never used.
"""

import json

from setramsey import aggregate_bounds, ex_upper_bound, parse_targets
from setramsey.bounds import LLLConstants, lll_lower, monotone_propagate, random_lower

for targets in ["P3,P6,P6", "S3,S3,S3", "C4,C4,C4", "K4,K4,K4"]:
    rep = aggregate_bounds(3, 2, parse_targets(targets))
    print(f"{targets:12s} interval {rep.interval}")
    for e in rep.entries:
        if e.as_stated:
            continue
        print(f"    {e.side:5s} {e.name:16s} {e.value!s:10s} {e.provenance}")
    for e in rep.as_stated:
        print(f"    as-stated {e.name}: {e.raw}")

# The counting bound: class i holds at most ex(N, G_i) edges, yet the classes
# together hold s * C(N, 2) edge slots.
print([ex_upper_bound(3, 2, parse_targets(f"P3,P{n},P{n}")) for n in range(4, 11)])

# Probabilistic bounds are honest about being tiny at this scale.
print(lll_lower(3, 2, 200, 19701, LLLConstants(1 / 3, 1801, 0.1)).value)
print(random_lower(3, 2, [(4, 4)] * 3))

# Monotonicity carries a single known value to neighbouring (r, s).
prop = monotone_propagate({(3, 2, "C4"): (5, 5)}, [(4, 2, "C4"), (2, 1, "C4")])
print(prop.bounds[(4, 2, "C4")], prop.chain((2, 1, "C4"), "lo"))

print(json.dumps(aggregate_bounds(3, 2, parse_targets("S3,S3,S3")).to_json()["interval"]))
