"""
Exact values by exhaustive search
=================================

The solver colors the edges of K_n one at a time, rejecting any partial
coloring in which the newest edge completes a monochromatic target.
"""

from setramsey import decide, parse_targets, ramsey_number, verify_certificate

res = ramsey_number(3, 2, parse_targets("C4,C4,C4"), n_cap=6)
print(res.status, res.value)
for d in res.decisions:
    print(f"  K_{d.n}: {d.outcome} after {d.stats.nodes} nodes")
print("certificate on K_4:", verify_certificate(res.certificate).status)

# A small family where the value grows with the path length.
for n in range(3, 7):
    for first in ("P3", "K3"):
        r = ramsey_number(3, 2, parse_targets(f"{first},P{n},P{n}"), n_cap=8)
        print(f"({first}, P{n}, P{n}) -> {r.value}")

# Symmetry reduction prunes a lot without changing any answer.
ts = parse_targets("P4,P4,P4,P4")
fast = decide(5, 4, 2, ts)
slow = decide(5, 4, 2, ts, symmetry=False)
print(fast.outcome, fast.stats.nodes, "nodes vs", slow.outcome, slow.stats.nodes, "nodes")
