"""Ranks of genus-zero conformal blocks, two ways.

The rank of the bundle of conformal blocks on M_{0,n} is the multiplicity of
the trivial weight in the level-l fusion product of the inserted weights.
This script computes a few ranks by folding tensor products into the level-l
alcove, confirms them with the Verlinde formula, and shows how ranks grow
with the level until they reach the classical invariant count.
"""

from confblocks.fusion import fusion_context, invariant_dimension, rank_genus0, verlinde_rank_oracle
from confblocks.lie import build_root_system

a1 = build_root_system("A1")
a3 = build_root_system("A3")

# sl2 at level 1: four copies of the standard representation give a line bundle
ctx = fusion_context(a1, 1)
print("sl2, level 1, four points:", rank_genus0(ctx, [(1,)] * 4).rank)

# the fusion table at level 2 truncates the classical product V_1 x V_1 = V_0 + V_2
ctx2 = fusion_context(a1, 2)
print("sl2 level 2, w1 * w1 =", ctx2.fusion_product((1,), (1,)))
print("sl2 level 1, w1 * w1 =", ctx.fusion_product((1,), (1,)))

# a six-point sl4 datum at level 5
weights = [(4, 1, 0)] * 2 + [(1, 0, 1)] * 4
ctx5 = fusion_context(a3, 5)
fold = rank_genus0(ctx5, weights).rank
verlinde = verlinde_rank_oracle(ctx5, weights)
print(f"sl4 level 5: fusion fold gives {fold}, Verlinde formula gives {verlinde}")

# ranks increase with the level and stop at the number of invariants
data = [(0, 0, 2)] * 4 + [(1, 0, 1)] * 2
print("sl4 data", data)
for level in range(2, 9):
    print(f"  level {level}: rank {rank_genus0(fusion_context(a3, level), data).rank}")
print("  invariants of the tensor product:", invariant_dimension(a3, data))
