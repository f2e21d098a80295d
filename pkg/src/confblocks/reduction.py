"""Reduction of weight data on a TW-face to the simple factors of the Levi.

For a face (P, u_1..u_n, d) the reduced data on a simple factor L_j of L'
consists of the restrictions of u_i^{-1} lam_i, at level m_j l where m_j is
the Dynkin index of L_j.  When d > 0, d_0 further copies of l mu_P^* are
appended, mu_P^* being the weight dual to mu_P under the normalized form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .fusion import fusion_context, rank_genus0, verlinde_rank_oracle
from .lie import form, pair_theta, weyl_apply_inverse
from .levi import DegreeShift, LeviFactor, degree_shift, levi_factors, restrict_weight
from .polytope import FaceSpec, WeightData, _check_face, tw_slack


class OffFaceError(ValueError):
    """The weight data does not lie on the requested face."""


@dataclass(frozen=True)
class AuditEntry:
    weight: tuple
    word: tuple
    moved: tuple  # u^{-1} lam in omega coordinates
    central: Fraction  # <omega_P, u^{-1} lam>


@dataclass(frozen=True)
class ReducedFactor:
    factor: Optional[LeviFactor]  # None for a trivial group
    level: int
    weights: tuple

    @property
    def type_name(self) -> str:
        return self.factor.name if self.factor is not None else "trivial"


@dataclass(frozen=True)
class ReducedData:
    source: WeightData
    face: FaceSpec
    factors: tuple
    audit: tuple
    shift: Optional[DegreeShift]
    twist_level: Optional[int]  # the l used in l mu_P^*, None when d = 0
    forced: bool

    @property
    def n_points(self) -> int:
        return len(self.audit) + (self.shift.d_0 if self.shift else 0)


def _face_level(wd: WeightData, face: FaceSpec, audit) -> int:
    """The level at which the data sits on the face: sum <omega_P, u^-1 lam> / d."""
    total = sum((a.central for a in audit), Fraction(0))
    level = total / face.degree
    if level.denominator != 1 or level < 1:
        raise OffFaceError(
            f"no positive integral level puts this data on the face "
            f"(sum of omega_P pairings {total}, degree {face.degree})"
        )
    return int(level)


def reduce(wd: WeightData, face: FaceSpec, force: bool = False) -> ReducedData:
    """Reduced weight data on every simple factor of L'.

    Off-face input is rejected unless ``force`` is set.  In a forced run with
    d > 0 the appended weights use the level at which the original weights
    would lie on the face, so that the reduced data is the same as on the face.
    """
    _check_face(wd, face)
    slack = tw_slack(wd, face)
    if slack != 0 and not force:
        raise OffFaceError(f"weight data is off the face (slack {slack})")
    rs = wd.rs
    levi = levi_factors(rs, face.node)
    omega = tuple(int(i == face.node - 1) for i in range(rs.rank))

    audit = []
    restricted = []
    for u, lam in zip(face.words, wd.weights):
        moved = weyl_apply_inverse(rs, u, lam)
        parts, central = restrict_weight(levi, moved)
        audit.append(AuditEntry(lam, tuple(u), tuple(moved), central))
        restricted.append(parts)

    shift = None
    twist_level = None
    if face.degree > 0:
        shift = degree_shift(rs, face.node, face.degree)
        twist_level = wd.level if slack == 0 else _face_level(wd, face, audit)
        if shift.d_0:
            twist = tuple(twist_level * c for c in shift.mu_P_star)
            try:
                parts, _ = restrict_weight(levi, twist)
            except ValueError as exc:
                raise ArithmeticError(
                    f"l mu_P^* = {tuple(str(c) for c in twist)} does not restrict to "
                    f"integral dominant weights: {exc}"
                ) from exc
            restricted.extend([parts] * shift.d_0)

    factors = []
    for j, f in enumerate(levi.factors):
        level = f.dynkin_index * wd.level
        weights = tuple(parts[j] for parts in restricted)
        sub = f.root_system
        for w in weights:
            if pair_theta(sub, w) > level:
                raise ArithmeticError(
                    f"reduced weight {w} on {f.name} is not admissible at level {level}"
                )
        factors.append(ReducedFactor(f, level, weights))
    if not factors:
        factors.append(ReducedFactor(None, wd.level, tuple(() for _ in restricted)))
    assert form(rs, omega, omega) > 0
    return ReducedData(wd, face, tuple(factors), tuple(audit), shift, twist_level, force)


def factor_rank(rf: ReducedFactor, oracle: bool = False) -> int:
    if rf.factor is None:
        return 1
    ctx = fusion_context(rf.factor.root_system, rf.level)
    rank = rank_genus0(ctx, rf.weights).rank
    if oracle and verlinde_rank_oracle(ctx, rf.weights) != rank:
        raise ArithmeticError(f"fusion and Verlinde ranks disagree on {rf.type_name}")
    return rank


@dataclass(frozen=True)
class FactorizationReport:
    lhs_rank: int
    factor_ranks: tuple
    product: int
    equal: bool
    reduced: ReducedData
    slack: Fraction

    @property
    def on_face(self) -> bool:
        return self.slack == 0

    def to_json(self) -> dict:
        red = self.reduced
        return {
            "lhs_rank": self.lhs_rank,
            "factors": [
                {
                    "type": rf.type_name,
                    "level": rf.level,
                    "weights": [list(w) for w in rf.weights],
                    "rank": r,
                }
                for rf, r in zip(red.factors, self.factor_ranks)
            ],
            "product": self.product,
            "equal": self.equal,
            "on_face": self.on_face,
            "slack": str(self.slack),
            "forced": red.forced,
            "face": red.face.to_json(),
            "degree_shift": red.shift.to_json() if red.shift else None,
        }


def verify_factorization(wd: WeightData, face: FaceSpec, force: bool = False,
                         oracle: bool = False) -> FactorizationReport:
    """Compare rank(g, w) with the product of the reduced ranks."""
    red = reduce(wd, face, force=force)
    ctx = fusion_context(wd.rs, wd.level)
    lhs = rank_genus0(ctx, wd.weights).rank
    if oracle and verlinde_rank_oracle(ctx, wd.weights) != lhs:
        raise ArithmeticError("fusion and Verlinde ranks disagree on the input data")
    ranks = tuple(factor_rank(rf, oracle) for rf in red.factors)
    product = 1
    for r in ranks:
        product *= r
    return FactorizationReport(lhs, ranks, product, lhs == product, red, tw_slack(wd, face))
