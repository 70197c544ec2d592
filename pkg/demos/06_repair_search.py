"""
Random colorings with local repair
==================================
"""

from setramsey import parse_targets, repair_search, verify_certificate

targets = parse_targets("C4,C4,C4")

# Start from a random coloring and recolor one edge of a monochromatic copy
# at a time. On K_4 a free coloring turns up quickly.
cert = repair_search(4, 3, 2, targets, budget=10**5, seed=1)
print(verify_certificate(cert).status)
for e in cert.to_json()["edges"]:
    print(e)

# On K_5 every coloring is forced, so the budget simply runs out.
print(repair_search(5, 3, 2, targets, budget=2000, seed=1))
