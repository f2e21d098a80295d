"""Positive-degree faces and the extra marked points.

For a face of degree d > 0 the reduction appends d_0 copies of l mu_P^* to
the reduced data, where mu_P is a coweight in the Levi's alcove with
omega_P(mu_P) = -1 and d_0 solves d + d_0 omega_P(mu_P) = 0 modulo k_L.
This script computes those invariants for sl4, reduces a datum on a degree-1
face to sl3, and shows that moving the level off the face breaks the
equality of ranks.
"""

from confblocks.levi import compute_kL, degree_shift
from confblocks.lie import build_root_system
from confblocks.polytope import WeightData, face_from_subsets, tw_slack
from confblocks.qschubert import quantum_multi_product
from confblocks.reduction import verify_factorization

a3 = build_root_system("A3")
for node in (1, 2, 3):
    k, n_p = compute_kL(a3, node)
    print(f"node {node}: k_L = {k}, N_P = {n_p}")

cells = [(2,)] + [(3,)] * 5
print("Gr(1,4) product:", quantum_multi_product(1, 4, [(2,)] + [(1,)] * 5))
face = face_from_subsets(1, 4, cells)
shift = degree_shift(a3, 1, face.degree)
print("degree", face.degree, "shift data:", shift.to_json())

data = WeightData(a3, [(0, 0, 2)] * 4 + [(1, 0, 1)] * 2, 2)
rep = verify_factorization(data, face)
(rf,) = rep.reduced.factors
print(f"reduced to {rf.type_name} at level {rf.level}: {rf.weights}")
print(f"ranks: {rep.lhs_rank} and {rep.product}")

# at level 3 the normalized points move off the face
off = data.with_level(3)
print("slack at level 3:", tw_slack(off, face))
forced = verify_factorization(off, face, force=True)
print(f"forced comparison at level 3: {forced.lhs_rank} vs {forced.product}")
