"""
Explicit lower-bound colorings
==============================

Two constructions that certify R_{r,s} is large for paths and stars.
"""

from setramsey import path_lower_certificate, star_lower_certificate, verify_certificate
from setramsey.construct import PathConstructionParams, StarConstructionParams, star_color_multiset

# Paths. Blow up a matching decomposition of K_{r//s}: vertices come in blocks
# of (n1-1)//2, and every color class is a union of complete bipartite graphs
# and small cliques, far too short to hold P_{n1}.
for r, s, n1 in [(4, 2, 8), (6, 2, 10), (6, 3, 9)]:
    p = PathConstructionParams(r, s, n1)
    cert = path_lower_certificate(r, s, n1)
    print(f"r={r} s={s} P{n1}: K_{p.N} is {verify_certificate(cert).status}, so R >= {p.N + 1}")

# Stars. Each element may appear on at most n1-1 edges at a vertex; the
# color multiset is read column-wise from a table and laid on a matching
# decomposition of K_M.
p = StarConstructionParams(4, 2, 5)
print("multiset:", [c.elements for c in star_color_multiset(p)])
cert = star_lower_certificate(4, 2, 5)
print(f"K_{cert.n}:", verify_certificate(cert).status)
