"""First Chern classes of genus-zero conformal-block bundles.

The class of V(g, l, lam) on M_{0,n} is

    rk * sum_i c(lam_i) psi_i / (2(l + h)) - sum_A b_A delta_A,
    b_A = sum_mu c(mu) / (2(l + h)) * rk(lam_A, mu) * rk(lam_{A^c}, mu^*),

with c(lam) = <lam, lam + 2 rho> and <theta, theta> = 2.  The psi classes are
written in the boundary basis by averaging Kapranov's expressions, so every
class here is a rational combination of boundary divisors delta_A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .fusion import FusionContext, fusion_context
from .lie import form
from .polytope import FaceSpec, WeightData
from .reduction import factor_rank, reduce


def casimir(rs, lam: Sequence[int]) -> Fraction:
    """c(lam) = <lam, lam + 2 rho>."""
    shifted = tuple(a + 2 * r for a, r in zip(lam, rs.weyl_vector))
    return form(rs, lam, shifted)


def _rank(ctx: FusionContext, weights) -> int:
    return ctx.product(weights).get(tuple([0] * ctx.rs.rank), 0)


def _split_term(ctx: FusionContext, left, right) -> Fraction:
    """sum_mu c(mu) rk(left, mu) rk(right, mu^*) (without the 1/2(l+h) factor)."""
    rs = ctx.rs
    # rk(left, mu) is the multiplicity of mu^* in the fusion of ``left``
    left_dist = ctx.product(left)
    right_dist = ctx.product(right)
    total = Fraction(0)
    for nu, a in left_dist.items():
        mu = ctx.dual(nu)
        b = right_dist.get(mu, 0)
        if b:
            total += casimir(rs, mu) * a * b
    return total


def fcurve_degree(ctx: FusionContext, a, b, c, d) -> int:
    """Degree of the rank bundle on M_{0,4} with four marked weights."""
    weights = [ctx.check(w) for w in (a, b, c, d)]
    k = ctx.level + ctx.rs.dual_coxeter_number
    rk = _rank(ctx, weights)
    total = rk * sum((casimir(ctx.rs, w) for w in weights), Fraction(0))
    for pair in ((0, 1), (0, 2), (0, 3)):
        rest = [i for i in range(4) if i not in pair]
        total -= _split_term(ctx, [weights[i] for i in pair], [weights[i] for i in rest])
    deg = total / (2 * k)
    if deg.denominator != 1 or deg < 0:
        raise ArithmeticError(f"F-curve degree {deg} is not a nonnegative integer")
    return int(deg)


def fcurve_intersection(ctx: FusionContext, weights, parts: Sequence[Sequence[int]]) -> int:
    """Intersection of the conformal-blocks divisor with the F-curve of a 4-part partition.

    ``parts`` is a partition of range(n) into four nonempty blocks.  The
    bundle restricted to the F-curve splits over intermediate weights.
    """
    weights = [ctx.check(w) for w in weights]
    blocks = [sorted(p) for p in parts]
    if len(blocks) != 4 or any(not p for p in blocks) or \
            sorted(i for p in blocks for i in p) != list(range(len(weights))):
        raise ValueError("F-curve needs a partition of the points into four blocks")
    dists = []
    for p in blocks:
        if len(p) == 1:
            dists.append({weights[p[0]]: 1})
        else:
            # the spine sees nu at the node with multiplicity rk(lam_p, nu^*)
            dists.append(ctx.product([weights[i] for i in p]))
    total = 0
    for choice in itertools.product(*(sorted(d.items()) for d in dists)):
        mult = 1
        for _, m in choice:
            mult *= m
        total += mult * fcurve_degree(ctx, *(nu for nu, _ in choice))
    return total


def _splits(n: int):
    """Boundary divisors as sets A: the smaller side, containing 0 when |A| = n/2."""
    out = []
    for size in range(2, n // 2 + 1):
        for a in itertools.combinations(range(n), size):
            if 2 * size == n and 0 not in a:
                continue
            out.append(frozenset(a))
    return out


def boundary_class(ctx: FusionContext, weights) -> dict:
    """Coefficients {A: rational} of the divisor class on the delta_A basis."""
    weights = [ctx.check(w) for w in weights]
    n = len(weights)
    if n < 4:
        raise ValueError("divisor classes need at least four points")
    k = ctx.level + ctx.rs.dual_coxeter_number
    rk = _rank(ctx, weights)
    psi_weight = [rk * casimir(ctx.rs, w) / (2 * k) for w in weights]
    norm = comb(n - 1, 2)
    out = {}
    for A in _splits(n):
        Ac = [i for i in range(n) if i not in A]
        # averaged Kapranov: psi_i = sum_{A containing i} C(|A^c|, 2) / C(n-1, 2) delta_A
        coeff = sum((psi_weight[i] * Fraction(comb(len(Ac), 2), norm) for i in A), Fraction(0))
        coeff += sum((psi_weight[i] * Fraction(comb(len(A), 2), norm) for i in Ac), Fraction(0))
        b = _split_term(ctx, [weights[i] for i in sorted(A)], [weights[i] for i in Ac]) / (2 * k)
        out[A] = coeff - b
    return out


@dataclass(frozen=True)
class DivisorClass:
    """A symmetric class on M_{0,n} in the basis D_2, ..., D_{floor(n/2)}."""

    n: int
    coeffs: tuple  # coefficient of D_j at index j - 2

    def __post_init__(self):
        if len(self.coeffs) != self.n // 2 - 1:
            raise ValueError("symmetric basis has floor(n/2) - 1 elements")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if self.n != other.n:
            raise ValueError("classes live on different moduli spaces")
        return DivisorClass(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "DivisorClass":
        return DivisorClass(self.n, tuple(Fraction(c) * a for a in self.coeffs))

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": {f"D{j + 2}": str(c) for j, c in enumerate(self.coeffs)}}

    def __str__(self) -> str:
        terms = [f"{c}*D{j + 2}" for j, c in enumerate(self.coeffs)]
        return " + ".join(terms) if terms else "0"


def divisor_class_symmetrized(ctx: FusionContext, weights) -> DivisorClass:
    """Sum of the classes over all orderings of the weights, in the D_j basis.

    D_j is the sum of delta_A over splits whose smaller side has j points.
    """
    n = len(weights)
    cls = boundary_class(ctx, weights)
    totals = [Fraction(0)] * (n // 2 - 1)
    counts = [0] * (n // 2 - 1)
    for A, c in cls.items():
        totals[len(A) - 2] += c
        counts[len(A) - 2] += 1
    # each delta_A of type j receives n! / N_j of the total over that type
    coeffs = tuple(factorial(n) * t / m for t, m in zip(totals, counts))
    return DivisorClass(n, coeffs)


@dataclass(frozen=True)
class RelationReport:
    lhs: DivisorClass
    rhs: DivisorClass
    factor_classes: tuple
    factor_ranks: tuple
    equal: bool
    padded: int  # zero weights appended to the left side

    def to_json(self) -> dict:
        return {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "factors": [
                {"class": c.to_json() if c else None, "rank": r}
                for c, r in zip(self.factor_classes, self.factor_ranks)
            ],
            "equal": self.equal,
            "padded_zero_weights": self.padded,
        }


def check_divisor_relation(wd: WeightData, face: FaceSpec, force: bool = False) -> RelationReport:
    """Compare the symmetrized class of w with sum_j (prod_{k != j} rk_k) SD_j.

    For d > 0 the original data is padded with d_0 zero weights so both sides
    live on the same moduli space.
    """
    red = reduce(wd, face, force=force)
    pad = red.shift.d_0 if red.shift else 0
    rs = wd.rs
    ctx = fusion_context(rs, wd.level)
    lhs = divisor_class_symmetrized(ctx, list(wd.weights) + [tuple([0] * rs.rank)] * pad)
    ranks = tuple(factor_rank(rf) for rf in red.factors)
    classes = []
    for rf in red.factors:
        if rf.factor is None:
            classes.append(None)
        else:
            fctx = fusion_context(rf.factor.root_system, rf.level)
            classes.append(divisor_class_symmetrized(fctx, rf.weights))
    n = lhs.n
    rhs = DivisorClass(n, tuple([Fraction(0)] * (n // 2 - 1)))
    for j, c in enumerate(classes):
        if c is None:
            continue
        others = 1
        for i, r in enumerate(ranks):
            if i != j:
                others *= r
        rhs = rhs + c.scale(others)
    return RelationReport(lhs, rhs, tuple(classes), ranks, lhs == rhs, pad)
