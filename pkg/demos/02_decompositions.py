"""
Splitting K_n into matchings and cycles
=======================================
"""

from setramsey import check_decomposition, hamilton_decomposition, maximal_matching_decomposition, one_factorization

# Round-robin scheduling: n-1 perfect matchings of K_n for even n.
for round_no, matching in enumerate(one_factorization(6).matchings, start=1):
    print(f"round {round_no}:", matching)

# For odd n no perfect matching exists. Instead K_n splits into n matchings
# of size (n-1)/2, and each vertex sits out exactly one of them.
d = maximal_matching_decomposition(7)
for m, idle in zip(d.matchings, d.uncovered):
    print(f"vertex {idle} idle:", m)
print(check_decomposition(d).checks)

# The Hamilton cycles the matchings are cut from.
for cyc in hamilton_decomposition(7).cycles:
    print(" -> ".join(map(str, cyc)))

# Large hosts are instant; the checker recomputes everything from scratch.
assert all(check_decomposition(maximal_matching_decomposition(n)).ok for n in range(3, 64, 2))
