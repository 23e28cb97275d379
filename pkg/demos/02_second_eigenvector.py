"""Why the second eigenvector can point at a clique.

Two disjoint cliques of different sizes, plus sparse noise edges. The top
eigenvector spreads over the bigger block; the second one concentrates on
the smaller block, and ranking by |x2| lists those vertices first.

    python3 demos/02_second_eigenvector.py
"""

import numpy as np

from rigclique import Graph, adjacency_matrix, rank_by_x2, second_eigenpair

rng = np.random.default_rng(5)
n = 40
a = np.triu(rng.random((n, n)) < 0.05, 1)
a[:12, :12] = True   # K12 on 0..11
a[12:20, 12:20] = True  # K8 on 12..19
a = np.triu(a, 1)
g = Graph(a | a.T)

res = second_eigenpair(adjacency_matrix(g))
order = rank_by_x2(res)
print(f"lambda1={res.lambda1:.3f} lambda2={res.lambda2:.3f} residual={res.residual:.1e}")
print("top 8 by |x2|:", sorted(order[:8].tolist()))
print("|x2| on K8 block  :", np.round(np.abs(res.x2[12:20]), 3))
print("|x2| on K12 block :", np.round(np.abs(res.x2[:12]), 3))

# the picture flips when one block dominates: here the top eigenvector takes it
# and x2 has to look elsewhere
b = np.triu(rng.random((n, n)) < 0.05, 1)
b[:20, :20] = True
b = np.triu(b, 1)
res = second_eigenpair(adjacency_matrix(Graph(b | b.T)))
share = float((res.x2[:20] ** 2).sum())
print(f"single K20 block: share of x2 mass on the block = {share:.2f}")
