"""
Colorings, color classes and certificates
=========================================

Every edge of K_n carries a set of s elements from {1..r}. Element i
"owns" the edges whose set contains it, and that subgraph must avoid G_i.
"""

from setramsey import Certificate, ColorSet, SetColoring, parse_targets, verify_certificate

# Give every edge of K_5 the set {2, 3}. Element 1 owns nothing, elements 2
# and 3 each own all of K_5, which has no path on 6 vertices.
coloring = SetColoring.uniform(5, ColorSet.of([2, 3], r=3, s=2))
cert = Certificate(coloring, tuple(parse_targets("P3,P6,P6")))
report = verify_certificate(cert)
print(report.status, "unused elements:", report.unused_elements)

# One more vertex and the same coloring fails; the report names the element
# and the copy it found.
bigger = Certificate(SetColoring.uniform(6, ColorSet.of([2, 3], 3, 2)), cert.targets)
report = verify_certificate(bigger)
print(report.status, report.reason)
print("witness path:", report.witness.vertices)

# Certificates serialise to a small JSON document with edges in canonical order.
text = cert.dumps()
print(text[:120], "...")
assert Certificate.loads(text) == cert
