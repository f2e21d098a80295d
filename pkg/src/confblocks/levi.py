"""Maximal parabolics: coset representatives, Levi factors and degree shifts.

A maximal parabolic is named by the 1-based index of the simple root it
omits.  The Levi's derived group is the product of the simple groups whose
Dynkin diagrams are the connected components left after deleting that node.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .lie import (
    RootSystem,
    _valid_type,
    build_root_system,
    connected_components,
    dynkin_index,
    evaluate,
    form,
    kappa_inverse,
    reflect,
)


def _check_node(rs: RootSystem, node: int) -> None:
    if not 1 <= node <= rs.rank:
        raise ValueError(f"parabolic node {node} out of range for {rs.name}")


@lru_cache(maxsize=None)
def _coset_data(rs: RootSystem, node: int):
    """BFS over the orbit of omega_P; returns {u omega_P: lex-min reduced word}."""
    omega = tuple(int(i == node - 1) for i in range(rs.rank))
    words = {omega: ()}
    layer = [omega]
    while layer:
        cand: dict = {}
        for v in layer:
            for i in range(rs.rank):
                if v[i] > 0:
                    u = reflect(rs, i, v)
                    word = (i + 1,) + words[v]
                    if u not in cand or word < cand[u]:
                        cand[u] = word
        words.update(cand)
        layer = sorted(cand)
    return words


def minimal_coset_reps(rs: RootSystem, node: int) -> list[tuple]:
    """Minimal length representatives of W/W_P as reduced words.

    Ordered by (length, lexicographic word).
    """
    _check_node(rs, node)
    return sorted(_coset_data(rs, node).values(), key=lambda w: (len(w), w))


def is_minimal_rep(rs: RootSystem, node: int, word: Sequence[int]) -> bool:
    """True iff ``word`` is a reduced word of an element of W^P."""
    v = tuple(int(i == node - 1) for i in range(rs.rank))
    for a in reversed(word):
        if not 1 <= a <= rs.rank or v[a - 1] <= 0:
            return False
        v = reflect(rs, a - 1, v)
    return True


def _standard_cartan(label: str, r: int):
    return build_root_system(label, r).cartan_matrix


def identify_type(rs: RootSystem, nodes: Sequence[int]) -> tuple[str, int, tuple]:
    """Identify a connected subdiagram with a standard simple type.

    Returns ``(type_label, rank, local_to_global)`` where ``local_to_global[a]``
    is the node of ``rs`` playing the role of Bourbaki node ``a + 1``.
    """
    nodes = tuple(sorted(nodes))
    r = len(nodes)
    sub = [[rs.cartan_matrix[a - 1][b - 1] for b in nodes] for a in nodes]
    for label in "ABCDEFG":
        if not _valid_type(label, r):
            continue
        std = _standard_cartan(label, r)
        # backtracking search for a permutation matching the Cartan matrices
        perm: list[int] = []
        used = [False] * r

        def extend() -> bool:
            k = len(perm)
            if k == r:
                return True
            for p in range(r):
                if used[p] or sub[p][p] != std[k][k]:
                    continue
                if all(sub[perm[j]][p] == std[j][k] and sub[p][perm[j]] == std[k][j]
                       for j in range(k)):
                    used[p] = True
                    perm.append(p)
                    if extend():
                        return True
                    perm.pop()
                    used[p] = False
            return False

        if extend():
            return label, r, tuple(nodes[p] for p in perm)
    raise ValueError(f"could not identify subdiagram {nodes} of {rs.name}")


@dataclass(frozen=True)
class LeviFactor:
    """One simple factor of the Levi's derived group."""

    nodes: tuple  # global 1-based nodes, in local Bourbaki order
    type_label: str
    rank: int
    dynkin_index: int

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.type_label, self.rank)

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"


@dataclass(frozen=True)
class LeviData:
    rs: RootSystem
    omitted_node: int
    factors: tuple  # of LeviFactor


@lru_cache(maxsize=None)
def levi_factors(rs: RootSystem, node: int) -> LeviData:
    """Simple factors of L' for the maximal parabolic omitting ``node``."""
    _check_node(rs, node)
    rest = [i for i in range(1, rs.rank + 1) if i != node]
    factors = []
    for comp in connected_components(rs, rest):
        label, r, local = identify_type(rs, comp)
        factors.append(LeviFactor(local, label, r, dynkin_index(rs, comp)))
    return LeviData(rs, node, tuple(factors))


def restrict_weight(levi: LeviData, v: Sequence) -> tuple[list[tuple], Fraction]:
    """Restrict a weight-space vector to each Levi factor.

    Returns the per-factor weights (local coordinates) and the central part
    <omega_P, v>.  Raises ``ValueError`` unless ``v`` is dominant integral on
    every factor.
    """
    rs = levi.rs
    out = []
    for f in levi.factors:
        coords = []
        for g in f.nodes:
            c = Fraction(v[g - 1])
            if c.denominator != 1 or c < 0:
                raise ValueError(
                    f"vector {tuple(str(x) for x in v)} is not L-dominant integral "
                    f"at node {g} (label {c})"
                )
            coords.append(int(c))
        out.append(tuple(coords))
    omega = tuple(int(i == levi.omitted_node - 1) for i in range(rs.rank))
    return out, form(rs, omega, v)


def _omega_of_x(rs: RootSystem, j: int, i: int) -> Fraction:
    """omega_j(x_i) for 1-based j, i."""
    return 2 * rs.gram[j - 1][i - 1] / rs.root_lengths[i - 1]


def coroot_coordinates(rs: RootSystem, mu: Sequence) -> tuple:
    """Coefficients of mu (x coordinates) on the simple coroots: omega_j(mu)."""
    return tuple(
        sum((Fraction(mu[i - 1]) * _omega_of_x(rs, j, i)
             for i in range(1, rs.rank + 1)), Fraction(0))
        for j in range(1, rs.rank + 1)
    )


def in_coroot_lattice(rs: RootSystem, mu: Sequence) -> bool:
    return all(c.denominator == 1 for c in coroot_coordinates(rs, mu))


def compute_kL(rs: RootSystem, node: int) -> tuple[int, int]:
    """Return ``(k_L, N_P)``.

    N_P is the least positive integer with N_P x_P in the coroot lattice and
    k_L = omega_P(N_P x_P) = 2 N_P <omega_P, omega_P> / <alpha_P, alpha_P>.
    """
    _check_node(rs, node)
    x = tuple(int(i == node - 1) for i in range(rs.rank))
    n_p = lcm(*(c.denominator for c in coroot_coordinates(rs, x)))
    k = n_p * 2 * rs.gram[node - 1][node - 1] / rs.root_lengths[node - 1]
    assert k.denominator == 1 and k > 0
    return int(k), n_p


@dataclass(frozen=True)
class DegreeShift:
    """Data needed to reduce a positive-degree face to the derived Levi."""

    k_L: int
    N_P: int
    mu_P: tuple  # x coordinates
    omega_P_of_mu_P: int
    d_0: int
    mu_P_star: tuple  # kappa^{-1}(mu_P), omega coordinates

    def to_json(self) -> dict:
        return {
            "k_L": self.k_L,
            "N_P": self.N_P,
            "mu_P": [str(c) for c in self.mu_P],
            "omega_P_of_mu_P": self.omega_P_of_mu_P,
            "d_0": self.d_0,
            "mu_P_star": [str(c) for c in self.mu_P_star],
        }


def _factor_alcove_vertices(rs: RootSystem, factor: LeviFactor) -> list[dict]:
    """Integral points of the factor's fundamental alcove: 0 and the x_i of mark 1."""
    sub = factor.root_system
    out = [{}]
    for a, g in enumerate(factor.nodes):
        # theta_f = sum marks * alpha; a point c x_a is in the alcove iff c * mark <= 1
        mark = _marks(sub)[a]
        if mark == 1:
            out.append({g: 1})
    return out


def _marks(rs: RootSystem) -> tuple:
    """Coefficients of theta on the simple roots."""
    return rs.positive_roots[-1]


@lru_cache(maxsize=None)
def find_muP(rs: RootSystem, node: int) -> tuple[tuple, int]:
    """A coroot-lattice point in the Levi's fundamental alcove with |omega_P| = 1.

    Candidates are enumerated from the integral alcove points of each factor;
    the P-coordinate is then solved for.  Preference order: omega_P(mu) = -1,
    then smallest sum of |coordinates|, then lexicographic.
    """
    _check_node(rs, node)
    levi = levi_factors(rs, node)
    p = node - 1
    candidates = []
    for choice in itertools.product(*(_factor_alcove_vertices(rs, f) for f in levi.factors)):
        base = [Fraction(0)] * rs.rank
        for part in choice:
            for g, c in part.items():
                base[g - 1] = Fraction(c)
        # omega_P(mu) = c_P * omega_P(x_P) + sum_{i != P} c_i omega_P(x_i)
        rest = sum((base[i - 1] * _omega_of_x(rs, node, i)
                    for i in range(1, rs.rank + 1) if i != node), Fraction(0))
        for sign in (-1, 1):
            c_p = (sign - rest) / _omega_of_x(rs, node, node)
            if c_p.denominator != 1:
                continue
            mu = list(base)
            mu[p] = c_p
            mu = tuple(int(c) for c in mu)
            if in_coroot_lattice(rs, mu):
                candidates.append((sign, sum(abs(c) for c in mu), mu))
    if not candidates:
        raise RuntimeError(
            f"no mu_P found for {rs.name}, node {node}; factors "
            f"{[f.name for f in levi.factors]}"
        )
    sign, _, mu = min(candidates)
    return mu, sign


def compute_d0(k_L: int, omega_P_of_mu_P: int, d: int) -> int:
    """Smallest d_0 >= 0 with d + d_0 * omega_P(mu_P) = 0 mod k_L."""
    if k_L < 1 or abs(omega_P_of_mu_P) != 1 or d < 0:
        raise ValueError("need k_L >= 1, |omega_P(mu_P)| = 1 and d >= 0")
    return (-d * omega_P_of_mu_P) % k_L


def degree_shift(rs: RootSystem, node: int, d: int) -> DegreeShift:
    k, n_p = compute_kL(rs, node)
    mu, sign = find_muP(rs, node)
    return DegreeShift(
        k_L=k,
        N_P=n_p,
        mu_P=mu,
        omega_P_of_mu_P=sign,
        d_0=compute_d0(k, sign, d),
        mu_P_star=kappa_inverse(rs, mu),
    )


def omega_P_value(rs: RootSystem, node: int, mu: Sequence) -> Fraction:
    omega = tuple(int(i == node - 1) for i in range(rs.rank))
    return evaluate(rs, omega, mu)
