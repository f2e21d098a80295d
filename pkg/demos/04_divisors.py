"""First Chern classes of conformal-block bundles on M_{0,n}.

The class is written in the boundary basis and then summed over all
orderings of the points, leaving a combination of D_2, ..., D_{n/2}.  On a
degree-zero face the rank factorization lifts to the classes: the class of
the original bundle is the sum of each factor's class weighted by the ranks
of the other factors.  The check is repeated on a degree-one face, where it
fails.
"""

from confblocks.divisor import check_divisor_relation, divisor_class_symmetrized, fcurve_degree
from confblocks.fusion import fusion_context
from confblocks.lie import build_root_system
from confblocks.polytope import WeightData, face_from_subsets

a1 = build_root_system("A1")
a3 = build_root_system("A3")

print("sl2 level 1, F-curve degree of four w1:", fcurve_degree(fusion_context(a1, 1), *[(1,)] * 4))

data = WeightData(a3, [(4, 1, 0)] * 2 + [(1, 0, 1)] * 4, 5)
print("symmetrized class:", divisor_class_symmetrized(fusion_context(a3, 5), data.weights))
face = face_from_subsets(2, 4, [(1, 4)] * 2 + [(3, 4)] * 4)
rel = check_divisor_relation(data, face)
for cls, rk in zip(rel.factor_classes, rel.factor_ranks):
    print(f"  factor of rank {rk}: {cls}")
print(f"lhs {rel.lhs} | rhs {rel.rhs} | equal: {rel.equal}")

data2 = WeightData(a3, [(0, 0, 2)] * 4 + [(1, 0, 1)] * 2, 2)
face2 = face_from_subsets(1, 4, [(2,)] + [(3,)] * 5)
rel2 = check_divisor_relation(data2, face2)
print(f"degree one face: lhs {rel2.lhs} | rhs {rel2.rhs} | equal: {rel2.equal}")
