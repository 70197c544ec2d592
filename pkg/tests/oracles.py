"""Independent reference implementations used by the tests.

None of these share code with the package: they enumerate graphs with
networkx or evaluate formulas straight through with mpmath.
"""

from itertools import permutations

import mpmath
import networkx as nx

mpmath.mp.dps = 50


def has_path(h, k):
    """Does the networkx graph ``h`` contain a path on ``k`` vertices?"""
    if k <= 1:
        return h.number_of_nodes() >= k
    return any(all(h.has_edge(p[i], p[i + 1]) for i in range(k - 1)) for p in permutations(h.nodes, k))


def brute_turan_path(N, k):
    """ex(N, P_k) by scanning every graph on N <= 7 vertices in the atlas."""
    return max(g.number_of_edges() for g in nx.graph_atlas_g() if g.number_of_nodes() == N and not has_path(g, k))


def lll_oracle(r, s, m, c2):
    m1 = mpmath.mpf(m - 1)
    return (m1 / (mpmath.mpf(c2) * s * r * mpmath.log(m1 / c2))) ** (s * r)


def random_oracle(r, s, graphs):
    n = min(g[0] for g in graphs)
    n_prime = max(g[0] for g in graphs)
    m = min(g[1] for g in graphs)
    denom = mpmath.fsum((mpmath.e * ni**2) ** mi for ni, mi in graphs)
    inner = (mpmath.mpf(r) / s) ** m * mpmath.mpf(2 * m) ** m / denom
    return mpmath.mpf(n) ** (mpmath.mpf(n) / n_prime) / mpmath.e * inner ** (mpmath.mpf(1) / n_prime)


def agree(a, b, digits=10):
    """Relative agreement of ``a`` with the reference ``b`` to ``digits`` significant digits."""
    return abs(mpmath.mpf(a) - b) <= abs(b) * mpmath.mpf(10) ** (-digits)
