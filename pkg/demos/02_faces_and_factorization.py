"""Faces of the eigenvalue polytope and the factorization of ranks.

A product of Schubert classes equal to q^d [pt] in the quantum cohomology of
a Grassmannian gives a face of the multiplicative eigenvalue polytope.  When
weight data lies on such a face, the rank of conformal blocks equals the
product of ranks computed for the simple factors of the Levi subgroup.  This
script walks through one degree-zero face and then runs a small sweep.
"""

from confblocks.lie import build_root_system
from confblocks.polytope import (
    WeightData,
    enumerate_faces_typeA,
    enumerate_on_face,
    face_from_subsets,
    on_face,
)
from confblocks.qschubert import is_pt_product, subset_to_partition
from confblocks.reduction import OffFaceError, reduce, verify_factorization

a3 = build_root_system("A3")
data = WeightData(a3, [(4, 1, 0)] * 2 + [(1, 0, 1)] * 4, 5)

# Schubert classes of Gr(2,4) are indexed by 2-subsets of {1,2,3,4}
cells = [(1, 4)] * 2 + [(3, 4)] * 4
print("partitions:", [subset_to_partition(2, 4, s) for s in cells])
print("product is q^d [pt] with d =", is_pt_product(2, 4, cells))

face = face_from_subsets(2, 4, cells)
print("on the face:", on_face(data, face))

red = reduce(data, face)
for entry in red.audit:
    print(f"  u^-1 lam: {entry.weight} -> {entry.moved}")
for rf in red.factors:
    print(f"  {rf.type_name} on node {rf.factor.nodes} at level {rf.level}: {rf.weights}")

rep = verify_factorization(data, face, oracle=True)
print(f"rank {rep.lhs_rank} = product of {rep.factor_ranks} = {rep.product}")

# the same data is strictly inside the inequality of another face, which reduce refuses
other = face_from_subsets(2, 4, [(2, 3)] * 2 + [(3, 4)] * 4)
try:
    reduce(data, other)
except OffFaceError as exc:
    print("other face:", exc)

# every on-face datum at small level factorizes
checked = 0
for pts in range(2, 5):
    for f in enumerate_faces_typeA(2, 4, pts, 0, ordered=False):
        for level in (1, 2):
            for wd in enumerate_on_face(a3, f, level):
                assert verify_factorization(wd, f).equal
                checked += 1
print(f"sweep over Gr(2,4) faces with at most 4 points: {checked} data, all factorize")
