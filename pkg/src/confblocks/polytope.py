"""Alcove points, TW-face inequalities and type-A membership tests.

A face of the multiplicative eigenvalue polytope is given by a maximal
parabolic P, minimal coset representatives u_1..u_n and a degree d; the
inequality is sum_i omega_P(u_i^{-1} mu_i) <= d with mu_i = kappa(lam_i)/l.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .lie import (
    RootSystem,
    enumerate_level_weights,
    form,
    kappa,
    pair_theta,
    weyl_apply_inverse,
)
from .levi import is_minimal_rep
from .qschubert import is_pt_product, subset_to_partition, subset_to_weyl


@dataclass(frozen=True)
class WeightData:
    """Weights lam_1..lam_n (omega coordinates) together with a level."""

    rs: RootSystem
    weights: tuple
    level: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(tuple(int(c) for c in w) for w in self.weights))
        if self.level < 1:
            raise ValueError("level must be a positive integer")
        for i, w in enumerate(self.weights):
            if len(w) != self.rs.rank or any(c < 0 for c in w):
                raise ValueError(f"weight {i + 1} {w} is not dominant for {self.rs.name}")
            if pair_theta(self.rs, w) > self.level:
                raise ValueError(
                    f"weight {i + 1} {w} is not admissible: <lam, theta> = "
                    f"{pair_theta(self.rs, w)} > level {self.level}"
                )

    @property
    def n(self) -> int:
        return len(self.weights)

    def scaled(self, factor: int) -> "WeightData":
        return WeightData(self.rs, tuple(tuple(factor * c for c in w) for w in self.weights),
                          factor * self.level)

    def with_level(self, level: int) -> "WeightData":
        return WeightData(self.rs, self.weights, level)


@dataclass(frozen=True)
class FaceSpec:
    """A TW-face candidate.

    ``words`` are reduced words of minimal coset representatives; in type A
    the Schubert subsets they came from are kept in ``subsets``.
    """

    node: int
    words: tuple
    degree: int
    certified: bool = False
    subsets: Optional[tuple] = None
    grassmannian: Optional[tuple] = None  # (k, N)

    @property
    def n(self) -> int:
        return len(self.words)

    def to_json(self) -> dict:
        out = {"parabolic_node": self.node, "degree": self.degree, "certified": self.certified}
        if self.subsets is not None:
            out["subsets"] = [list(s) for s in self.subsets]
            out["grassmannian"] = list(self.grassmannian)
        else:
            out["words"] = [list(w) for w in self.words]
        return out

    @classmethod
    def from_json(cls, data: dict, rs: Optional[RootSystem] = None) -> "FaceSpec":
        if "subsets" in data:
            k, n = data["grassmannian"]
            return face_from_subsets(k, n, [tuple(s) for s in data["subsets"]], data["degree"])
        return cls(
            node=data["parabolic_node"],
            words=tuple(tuple(w) for w in data["words"]),
            degree=data["degree"],
            certified=False,
        )


def face_from_subsets(k: int, n: int, subsets: Sequence[Sequence[int]],
                      degree: Optional[int] = None) -> FaceSpec:
    """Build a type-A face from Schubert subsets of Gr(k, n), certifying it.

    If ``degree`` is omitted the certified degree is used; a face whose
    product is not q^d [pt] is returned uncertified.
    """
    subsets = tuple(tuple(s) for s in subsets)
    d_cert = is_pt_product(k, n, subsets)
    if degree is None:
        if d_cert is None:
            raise ValueError(f"{subsets} is not a q^d [pt] product in Gr({k},{n})")
        degree = d_cert
    words = tuple(subset_to_weyl(k, n, s) for s in subsets)
    return FaceSpec(k, words, degree, d_cert == degree, subsets, (k, n))


def _check_face(wd: WeightData, face: FaceSpec) -> None:
    if face.n != wd.n:
        raise ValueError(f"face has {face.n} points but weight data has {wd.n}")
    if not 1 <= face.node <= wd.rs.rank:
        raise ValueError(f"parabolic node {face.node} out of range")
    for i, w in enumerate(face.words):
        if not is_minimal_rep(wd.rs, face.node, w):
            raise ValueError(f"word {w} at point {i + 1} is not a minimal coset representative")
    if face.degree < 0:
        raise ValueError("face degree must be nonnegative")


def to_alcove(wd: WeightData) -> tuple:
    """mu_i = kappa(lam_i) / l in x coordinates; checked to lie in the alcove."""
    rs = wd.rs
    out = []
    for i, w in enumerate(wd.weights):
        mu = tuple(Fraction(c) / wd.level for c in kappa(rs, w))
        theta_mu = Fraction(pair_theta(rs, w), wd.level)
        if any(c < 0 for c in mu) or theta_mu > 1:
            raise ValueError(f"point {i + 1} lies outside the fundamental alcove")
        out.append(mu)
    return tuple(out)


def _omega_pairings(wd: WeightData, face: FaceSpec) -> list[Fraction]:
    """<omega_P, u_i^{-1} lam_i> for each point."""
    rs = wd.rs
    omega = tuple(int(i == face.node - 1) for i in range(rs.rank))
    return [form(rs, omega, weyl_apply_inverse(rs, u, lam))
            for u, lam in zip(face.words, wd.weights)]


def tw_slack(wd: WeightData, face: FaceSpec) -> Fraction:
    """d - sum_i omega_P(u_i^{-1} mu_i); nonnegative iff the inequality holds."""
    _check_face(wd, face)
    return face.degree - sum(_omega_pairings(wd, face), Fraction(0)) / wd.level


def parabolic_degree(wd: WeightData, face: FaceSpec) -> Fraction:
    """sum_i <omega_P, u_i^{-1} lam_i> - l d."""
    _check_face(wd, face)
    return sum(_omega_pairings(wd, face), Fraction(0)) - wd.level * face.degree


@dataclass(frozen=True)
class FaceReport:
    on_face: bool
    slack: Fraction
    certified: bool
    degree: int

    def to_json(self) -> dict:
        return {"on_face": self.on_face, "slack": str(self.slack),
                "certified": self.certified, "degree": self.degree}


def on_face(wd: WeightData, face: FaceSpec) -> FaceReport:
    slack = tw_slack(wd, face)
    certified = face.certified
    if face.subsets is not None and not certified:
        k, n = face.grassmannian
        certified = is_pt_product(k, n, face.subsets) == face.degree
    return FaceReport(slack == 0, slack, certified, face.degree)


# --- type A enumeration ------------------------------------------------------


def _subsets(k: int, n: int) -> list[tuple]:
    return [tuple(c) for c in itertools.combinations(range(1, n + 1), k)]


@lru_cache(maxsize=None)
def _pt_multisets(k: int, n: int, n_points: int, d_max: int) -> tuple:
    """Sorted class multisets whose product is q^d [pt] with d <= d_max."""
    out = []
    for combo in itertools.combinations_with_replacement(_subsets(k, n), n_points):
        total = sum(sum(subset_to_partition(k, n, s)) for s in combo)
        dim = k * (n - k)
        if total < dim or (total - dim) % n or (total - dim) // n > d_max:
            continue
        d = is_pt_product(k, n, combo)
        if d is not None:
            out.append((combo, d))
    return tuple(out)


def enumerate_faces_typeA(k: int, n: int, n_points: int, d_max: int,
                          ordered: bool = True) -> list[FaceSpec]:
    """All certified TW-faces of Gr(k, n) with ``n_points`` classes and d <= d_max.

    ``ordered=False`` returns one representative per permutation orbit.
    """
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    faces = []
    for combo, d in _pt_multisets(k, n, n_points, d_max):
        tuples = sorted(set(itertools.permutations(combo))) if ordered else [combo]
        for t in tuples:
            faces.append(face_from_subsets(k, n, t, d))
    faces.sort(key=lambda f: (f.degree, f.subsets))
    return faces


def max_face_degree(k: int, n: int, n_points: int) -> int:
    """Grading bound: sum codim = k(n-k) + d n with every codim <= k(n-k)."""
    return max(0, (n_points - 1) * k * (n - k) // n)


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    witness: Optional[FaceSpec] = None
    slack: Optional[Fraction] = None
    faces_checked: int = 0


def in_polytope_typeA(wd: WeightData) -> MembershipReport:
    """Check every certified TW inequality for SL_{r+1}.

    Faces are generated per class multiset; all orderings are evaluated.
    """
    rs = wd.rs
    if rs.type_label != "A":
        raise NotImplementedError("membership testing is only available in type A")
    N = rs.rank + 1
    checked = 0
    if wd.n == 0:
        return MembershipReport(True)
    for k in range(1, N):
        for combo, d in _pt_multisets(k, N, wd.n, max_face_degree(k, N, wd.n)):
            for t in sorted(set(itertools.permutations(combo))):
                face = face_from_subsets(k, N, t, d)
                slack = tw_slack(wd, face)
                checked += 1
                if slack < 0:
                    return MembershipReport(False, face, slack, checked)
    return MembershipReport(True, None, None, checked)


def enumerate_on_face(rs: RootSystem, face: FaceSpec, level: int, canonical: bool = True):
    """All weight data at ``level`` lying on ``face``.

    With ``canonical`` set, positions carrying the same word receive weights
    in nondecreasing order, which skips reorderings that cannot change ranks.
    """
    weights = enumerate_level_weights(rs, level)
    omega = tuple(int(i == face.node - 1) for i in range(rs.rank))
    options = []
    for u in face.words:
        if not is_minimal_rep(rs, face.node, u):
            raise ValueError(f"word {u} is not a minimal coset representative")
        options.append([(form(rs, omega, weyl_apply_inverse(rs, u, lam)), j)
                        for j, lam in enumerate(weights)])
    target = Fraction(level * face.degree)
    n = len(options)
    lo = [min(p for p, _ in opt) for opt in options]
    hi = [max(p for p, _ in opt) for opt in options]
    rest_lo = [sum(lo[i:], Fraction(0)) for i in range(n + 1)]
    rest_hi = [sum(hi[i:], Fraction(0)) for i in range(n + 1)]
    chosen: list[int] = []

    def rec(i: int, total: Fraction):
        if i == n:
            if total == target:
                yield WeightData(rs, tuple(weights[j] for j in chosen), level)
            return
        need = target - total
        for p, j in options[i]:
            if not rest_lo[i + 1] <= need - p <= rest_hi[i + 1]:
                continue
            if canonical:
                prev = next((chosen[m] for m in range(i - 1, -1, -1)
                             if face.words[m] == face.words[i]), None)
                if prev is not None and j < prev:
                    continue
            chosen.append(j)
            yield from rec(i + 1, total + p)
            chosen.pop()

    yield from rec(0, Fraction(0))
