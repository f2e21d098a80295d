"""Root systems, Weyl group actions and the normalized invariant form.

Conventions
-----------
* Weights live in fundamental-weight coordinates: ``lam[i]`` is the Dynkin
  label <lam, alpha_i^vee>.
* Elements of the Cartan subalgebra (alcove points, coweights) live in the
  basis ``x_i`` dual to the simple roots, so ``mu[i] = alpha_i(mu)``.
* The invariant form is normalized so that the highest root has length 2.
* Node indices exposed to users are 1-based (Bourbaki numbering); tuples are
  0-indexed internally.

Everything is exact: integers and :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Vector = tuple  # tuple of int or Fraction

# Dynkin diagrams in Bourbaki numbering: (edges, 0-based short nodes, short length)
# Long roots have squared length 2.


def _diagram(label: str, r: int):
    chain = [(i, i + 1) for i in range(r - 1)]
    if label == "A":
        return chain, (), None
    if label == "B":
        return chain, (r - 1,), Fraction(1)
    if label == "C":
        return chain, tuple(range(r - 1)), Fraction(1)
    if label == "D":
        return [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)], (), None
    if label == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, r - 1)]
        return edges, (), None
    if label == "F":
        return chain, (2, 3), Fraction(1)
    if label == "G":
        return chain, (0,), Fraction(2, 3)
    raise ValueError(f"unknown type {label!r}")


def _valid_type(label: str, r: int) -> bool:
    return (
        (label == "A" and r >= 1)
        or (label in "BC" and r >= 2)
        or (label == "D" and r >= 4)
        or (label == "E" and r in (6, 7, 8))
        or (label == "F" and r == 4)
        or (label == "G" and r == 2)
    )


def mat_inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse of a square rational matrix."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Cartan data of a simple Lie algebra.

    Built with :func:`build_root_system`; instances are cached so that two
    requests for the same type return the same object.
    """

    type_label: str
    rank: int
    cartan_matrix: tuple  # cartan[i][j] = <alpha_i^vee, alpha_j>
    root_lengths: tuple  # <alpha_i, alpha_i>
    gram: tuple  # <omega_i, omega_j>
    simple_roots: tuple  # alpha_j in omega coordinates
    positive_roots: tuple  # in simple-root coordinates, sorted by height
    highest_root: tuple  # theta in omega coordinates
    weyl_vector: tuple
    dual_coxeter_number: int
    comarks: tuple = field(repr=False)  # <omega_i, theta>

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    def root_to_weight(self, coeffs: Sequence[int]) -> tuple:
        """Convert simple-root coordinates to omega coordinates."""
        r = self.rank
        return tuple(
            sum(coeffs[j] * self.cartan_matrix[i][j] for j in range(r))
            for i in range(r)
        )

    @property
    def fundamental_coweights(self) -> tuple:
        """x_i in the x-basis (identity); kept for symmetry with the weights."""
        r = self.rank
        return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))

    def coroot(self, i: int) -> tuple:
        """alpha_i^vee as an element of h, in x coordinates (0-based ``i``)."""
        return tuple(self.cartan_matrix[i][j] for j in range(self.rank))


_NAME_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def parse_algebra(name: str) -> tuple[str, int]:
    """Parse ``"A3"``-style names into ``("A", 3)``."""
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"cannot parse algebra name {name!r}")
    label, r = m.group(1).upper(), int(m.group(2))
    if not _valid_type(label, r):
        raise ValueError(f"{label}{r} is not a simple Lie type")
    return label, r


def build_root_system(type_label: str, rank: int | None = None) -> RootSystem:
    """Construct the root system of type ``type_label`` and rank ``rank``.

    ``build_root_system("A3")`` is accepted as shorthand.
    """
    if rank is None:
        type_label, rank = parse_algebra(type_label)
    type_label = type_label.upper()
    if not _valid_type(type_label, rank):
        raise ValueError(f"{type_label}{rank} is not a simple Lie type")
    return _build(type_label, rank)


@lru_cache(maxsize=None)
def _build(type_label: str, r: int) -> RootSystem:
    edges, short, short_len = _diagram(type_label, r)
    lengths = [Fraction(2)] * r
    for i in short:
        lengths[i] = short_len
    bilinear = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        bilinear[i][i] = lengths[i]
    for i, j in edges:
        # equal lengths: simple bond; otherwise the long root has length 2
        bond = -lengths[i] / 2 if lengths[i] == lengths[j] else Fraction(-1)
        bilinear[i][j] = bilinear[j][i] = bond
    cartan = tuple(
        tuple(int(2 * bilinear[i][j] / bilinear[i][i]) for j in range(r))
        for i in range(r)
    )
    # <omega_i, alpha_j> = delta_ij |alpha_j|^2 / 2 and alpha_j = sum_i cartan[i][j] omega_i
    inv = mat_inverse(cartan)
    gram = tuple(
        tuple(lengths[i] / 2 * inv[i][j] for j in range(r)) for i in range(r)
    )
    simple = tuple(tuple(cartan[i][j] for i in range(r)) for j in range(r))

    # closure of the simple roots under simple reflections (simple-root coords)
    def reflect(beta, i):
        label = sum(beta[j] * cartan[i][j] for j in range(r))
        out = list(beta)
        out[i] -= label
        return tuple(out)

    start = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                gamma = reflect(beta, i)
                if gamma not in roots:
                    roots.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    positive = sorted((b for b in roots if all(c >= 0 for c in b)),
                      key=lambda b: (sum(b), b))
    theta_coeffs = positive[-1]
    theta = tuple(
        sum(theta_coeffs[j] * cartan[i][j] for j in range(r)) for i in range(r)
    )
    rho = tuple([1] * r)
    comarks = tuple(
        sum(gram[i][j] * theta[j] for j in range(r)) for i in range(r)
    )
    comarks = tuple(int(c) for c in comarks)
    h_dual = sum(comarks) + 1
    rs = RootSystem(
        type_label=type_label,
        rank=r,
        cartan_matrix=cartan,
        root_lengths=tuple(lengths),
        gram=gram,
        simple_roots=simple,
        positive_roots=tuple(positive),
        highest_root=theta,
        weyl_vector=rho,
        dual_coxeter_number=h_dual,
        comarks=comarks,
    )
    assert form(rs, theta, theta) == 2
    return rs


def _check_len(rs: RootSystem, *vs: Sequence) -> None:
    for v in vs:
        if len(v) != rs.rank:
            raise ValueError(
                f"expected a vector of length {rs.rank} for {rs.name}, got {len(v)}"
            )


def form(rs: RootSystem, a: Sequence, b: Sequence) -> Fraction:
    """Normalized invariant form of two weight-space vectors."""
    _check_len(rs, a, b)
    g = rs.gram
    r = rs.rank
    return sum(
        (Fraction(a[i]) * g[i][j] * b[j] for i in range(r) for j in range(r)
         if a[i] and b[j]),
        Fraction(0),
    )


def pair_theta(rs: RootSystem, lam: Sequence) -> int | Fraction:
    """<lam, theta>; an integer for integral weights."""
    return sum(c * lam[i] for i, c in enumerate(rs.comarks))


def kappa(rs: RootSystem, lam: Sequence) -> tuple:
    """The form-induced isomorphism h* -> h, returned in x coordinates."""
    _check_len(rs, lam)
    return tuple(rs.root_lengths[i] / 2 * lam[i] for i in range(rs.rank))


def kappa_inverse(rs: RootSystem, mu: Sequence) -> tuple:
    """Inverse of :func:`kappa`."""
    _check_len(rs, mu)
    return tuple(Fraction(mu[i]) * 2 / rs.root_lengths[i] for i in range(rs.rank))


def evaluate(rs: RootSystem, lam: Sequence, mu: Sequence) -> Fraction:
    """The pairing lam(mu) of a weight with an element of h."""
    return form(rs, lam, kappa_inverse(rs, mu))


def reflect(rs: RootSystem, i: int, v: Sequence) -> tuple:
    """Simple reflection s_i (0-based ``i``) on a weight-space vector."""
    c = v[i]
    if not c:
        return tuple(v)
    col = rs.simple_roots[i]
    return tuple(x - c * a for x, a in zip(v, col))


def weyl_apply(rs: RootSystem, word: Sequence[int], v: Sequence) -> tuple:
    """Apply w = s_{a_1} ... s_{a_m} (1-based letters) to ``v``."""
    _check_len(rs, v)
    out = tuple(v)
    for a in reversed(word):
        if not 1 <= a <= rs.rank:
            raise ValueError(f"invalid reflection index {a} for {rs.name}")
        out = reflect(rs, a - 1, out)
    return out


def weyl_apply_inverse(rs: RootSystem, word: Sequence[int], v: Sequence) -> tuple:
    """Apply w^{-1} for the word of w."""
    return weyl_apply(rs, tuple(reversed(word)), v)


def inverse_word(word: Sequence[int]) -> tuple:
    return tuple(reversed(word))


def to_dominant(rs: RootSystem, v: Sequence) -> tuple[tuple, int]:
    """Reflect ``v`` into the closed dominant chamber.

    Returns the dominant vector and the parity (+1/-1) of the number of
    reflections used.
    """
    v = tuple(v)
    sign = 1
    while True:
        i = next((j for j, c in enumerate(v) if c < 0), None)
        if i is None:
            return v, sign
        v = reflect(rs, i, v)
        sign = -sign


def same_element(rs: RootSystem, w1: Sequence[int], w2: Sequence[int]) -> bool:
    """Two words give the same Weyl element iff they agree on rho."""
    rho = rs.weyl_vector
    return weyl_apply(rs, w1, rho) == weyl_apply(rs, w2, rho)


def longest_element(rs: RootSystem) -> tuple:
    """A reduced word for w_0, obtained by sorting -rho back to rho."""
    v = tuple(-c for c in rs.weyl_vector)
    word = []
    while True:
        i = next((j for j, c in enumerate(v) if c < 0), None)
        if i is None:
            break
        v = reflect(rs, i, v)
        word.append(i + 1)
    # s_{a_k}...s_{a_1}(-rho) = rho, so w_0 = s_{a_1}...s_{a_k} up to inversion;
    # w_0 is an involution.
    return tuple(word)


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> tuple:
    """lam* = -w_0 lam."""
    return to_dominant(rs, tuple(-c for c in lam))[0]


def weyl_group(rs: RootSystem) -> list[tuple[tuple, int]]:
    """All Weyl group elements as (w rho, sign); only sensible at small rank."""
    rho = rs.weyl_vector
    seen = {rho: 1}
    frontier = [rho]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                u = reflect(rs, i, v)
                if u not in seen:
                    seen[u] = -seen[v]
                    nxt.append(u)
        frontier = nxt
    return list(seen.items())


def weyl_group_order(rs: RootSystem) -> int:
    return len(weyl_group(rs))


def is_connected(rs: RootSystem, nodes: Iterable[int]) -> bool:
    """Connectivity of a set of 1-based nodes in the Dynkin diagram."""
    nodes = set(nodes)
    if not nodes:
        return False
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for b in nodes:
            if b not in seen and rs.cartan_matrix[a - 1][b - 1] != 0:
                seen.add(b)
                stack.append(b)
    return seen == nodes


def connected_components(rs: RootSystem, nodes: Iterable[int]) -> list[tuple]:
    """Connected components of a node subset, each sorted, ordered by min node."""
    remaining = set(nodes)
    comps = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in list(remaining):
                if b not in comp and rs.cartan_matrix[a - 1][b - 1] != 0:
                    comp.add(b)
                    stack.append(b)
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def sub_highest_root(rs: RootSystem, nodes: Sequence[int]) -> tuple:
    """Highest root of the root subsystem spanned by ``nodes`` (omega coords)."""
    idx = {n - 1 for n in nodes}
    support = [b for b in rs.positive_roots
               if all(c == 0 or j in idx for j, c in enumerate(b))]
    return rs.root_to_weight(support[-1])


def dynkin_index(rs: RootSystem, nodes: Sequence[int]) -> int:
    """Dynkin index of the simple subalgebra spanned by a connected node set.

    Equals 2 / <theta_f, theta_f> where theta_f is the highest root of the
    factor measured in the form of ``rs``.
    """
    if not is_connected(rs, nodes):
        raise ValueError(f"nodes {sorted(nodes)} do not form a connected subdiagram")
    theta_f = sub_highest_root(rs, nodes)
    m = 2 / form(rs, theta_f, theta_f)
    assert m.denominator == 1
    return int(m)


def enumerate_level_weights(rs: RootSystem, level: int) -> list[tuple]:
    """Dominant integral weights with <lam, theta> <= level, lexicographic."""
    if level < 0:
        return []
    marks = rs.comarks
    out = []

    def rec(i, budget, prefix):
        if i == rs.rank:
            out.append(tuple(prefix))
            return
        for c in range(budget // marks[i] + 1):
            prefix.append(c)
            rec(i + 1, budget - c * marks[i], prefix)
            prefix.pop()

    rec(0, level, [])
    return sorted(out)


def parse_weight(text: str, rank: int | None = None) -> tuple:
    """Parse ``"4,1,0"`` into a weight tuple."""
    try:
        w = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed weight {text!r}") from None
    if rank is not None and len(w) != rank:
        raise ValueError(f"weight {text!r} has {len(w)} coordinates, expected {rank}")
    return w


def format_weight(w: Sequence) -> str:
    return ",".join(str(c) for c in w)
