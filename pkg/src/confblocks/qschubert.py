"""Classical and small quantum cohomology of Grassmannians Gr(k, n).

Schubert classes are indexed by k-subsets I of {1..n} with partition
lam_j = n - k + j - i_j, so I = {n-k+1..n} is the fundamental class and
I = {1..k} the point class.  Quantum products are computed by classical
Littlewood-Richardson expansion in k variables followed by n-rim-hook
stripping (Bertram, Ciocan-Fontanine, Fulton).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Partition = tuple


def _trim(p: Iterable[int]) -> Partition:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def subset_to_partition(k: int, n: int, subset: Sequence[int]) -> Partition:
    """Partition of the Schubert class indexed by ``subset`` (padded to k parts)."""
    s = tuple(subset)
    if len(s) != k or len(set(s)) != k or any(not 1 <= i <= n for i in s):
        raise ValueError(f"{s} is not a {k}-subset of 1..{n}")
    if list(s) != sorted(s):
        raise ValueError(f"subset {s} must be strictly increasing")
    return tuple(n - k + j - i for j, i in enumerate(s, start=1))


def partition_to_subset(k: int, n: int, part: Sequence[int]) -> tuple:
    part = tuple(part) + (0,) * (k - len(part))
    if len(part) != k or any(a < b for a, b in zip(part, part[1:])) \
            or (part and (part[0] > n - k or part[-1] < 0)):
        raise ValueError(f"{part} does not fit in the {k}x{n - k} box")
    return tuple(n - k + j - p for j, p in enumerate(part, start=1))


@dataclass(frozen=True)
class SchubertClass:
    k: int
    n: int
    subset: tuple

    def __post_init__(self):
        subset_to_partition(self.k, self.n, self.subset)

    @classmethod
    def from_partition(cls, k: int, n: int, part: Sequence[int]) -> "SchubertClass":
        return cls(k, n, partition_to_subset(k, n, part))

    @property
    def partition(self) -> Partition:
        return subset_to_partition(self.k, self.n, self.subset)

    @property
    def codim(self) -> int:
        return sum(self.partition)


# --- Littlewood-Richardson coefficients -------------------------------------


def _lr_count(outer: Partition, inner: Partition, content: Partition) -> int:
    """Number of LR tableaux of shape outer/inner and given content."""
    rows = len(outer)
    inner = tuple(inner) + (0,) * (rows - len(inner))
    if any(i > o for i, o in zip(inner, outer)):
        return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    cells = [(r, c) for r in range(rows) for c in range(outer[r] - 1, inner[r] - 1, -1)]
    # reading order: rows top to bottom, each row right to left
    filling: dict = {}
    counts = [0] * (len(content) + 1)
    m = len(content)

    def rec(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        total = 0
        hi = m
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)  # rows weakly increase left to right
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1  # columns strictly increase
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word condition
            filling[(r, c)] = v
            counts[v] += 1
            total += rec(pos + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return rec(0)


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c_{lam, mu}^{nu}."""
    lam, mu, nu = _trim(lam), _trim(mu), _trim(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if len(lam) > len(nu) or len(mu) > len(nu):
        return 0
    return _lr_count(nu, lam, mu)


def _partitions_between(inner: Partition, size: int, max_rows: int, max_first: int):
    """Partitions nu containing ``inner`` with |nu| = size, <= max_rows rows."""
    inner = tuple(inner) + (0,) * (max_rows - len(inner))
    out = []

    def rec(i, remaining, prev, acc):
        if i == max_rows:
            if remaining == 0:
                out.append(_trim(acc))
            return
        lo = inner[i]
        for v in range(min(prev, lo + remaining), lo - 1, -1):
            acc.append(v)
            rec(i + 1, remaining - (v - lo), v, acc)
            acc.pop()

    if len(inner) > max_rows:
        return out
    rec(0, size - sum(inner), max_first, [])
    return out


@lru_cache(maxsize=None)
def lr_product(lam: Partition, mu: Partition, max_rows: int) -> dict:
    """s_lam * s_mu restricted to partitions with at most ``max_rows`` rows."""
    lam, mu = _trim(lam), _trim(mu)
    if len(lam) > max_rows or len(mu) > max_rows:
        return {}
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    size = sum(lam) + sum(mu)
    first = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    out = {}
    for nu in _partitions_between(lam, size, max_rows, first):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def classical_multi_product(parts: Sequence[Partition], max_rows: int) -> dict:
    """Product of Schur functions in ``max_rows`` variables."""
    dist = {(): 1}
    for p in parts:
        out: dict = defaultdict(int)
        for nu, c in dist.items():
            for sigma, m in lr_product(nu, _trim(p), max_rows).items():
                out[sigma] += c * m
        dist = {a: b for a, b in out.items() if b}
    return dist


# --- rim hooks ---------------------------------------------------------------


def rim_hook_reduce(k: int, n: int, part: Sequence[int]):
    """Reduce a partition with <= k rows into the k x (n-k) box.

    Strips n-rim hooks starting in the first row.  Returns
    ``(sign, degree, partition)`` or ``None`` when the class vanishes.
    """
    part = _trim(part)
    if len(part) > k:
        return None
    part = part + (0,) * (k - len(part))
    beta = [p + k - 1 - j for j, p in enumerate(part)]  # strictly decreasing
    sign, degree = 1, 0
    while beta[0] - (k - 1) > n - k:
        top = beta[0] - n
        if top < 0 or top in beta:
            return None
        jumped = sum(1 for b in beta[1:] if b > top)
        height = jumped + 1
        sign *= (-1) ** (k - height)
        degree += 1
        beta = sorted(beta[1:] + [top], reverse=True)
    return sign, degree, _trim(b - (k - 1 - j) for j, b in enumerate(beta))


def quantum_multi_product(k: int, n: int, parts: Sequence[Partition],
                          stepwise: bool = False) -> dict:
    """Small quantum product in QH*(Gr(k, n)) as {(partition, d): coeff}.

    The default expands classically and strips rim hooks once at the end;
    ``stepwise=True`` reduces after every factor (used as a cross-check).
    """
    if not stepwise:
        out: dict = defaultdict(int)
        for nu, c in classical_multi_product(parts, k).items():
            red = rim_hook_reduce(k, n, nu)
            if red is None:
                continue
            sign, d, p = red
            out[(p, d)] += sign * c
        return {key: v for key, v in sorted(out.items()) if v}
    dist = {((), 0): 1}
    for p in parts:
        out = defaultdict(int)
        for (nu, d), c in dist.items():
            for sigma, m in lr_product(nu, _trim(p), k).items():
                red = rim_hook_reduce(k, n, sigma)
                if red is None:
                    continue
                sign, d2, q = red
                out[(q, d + d2)] += sign * m * c
        dist = {a: b for a, b in out.items() if b}
    return dict(sorted(dist.items()))


@dataclass(frozen=True)
class QuantumProductResult:
    """Coefficient of q^d [pt] in a multi-fold quantum product."""

    k: int
    n: int
    degree: Optional[int]  # grading-forced d, None if no integral d exists
    pt_coefficient: int
    exact: bool  # the product has no other terms at all
    terms: tuple  # ((partition, d), coeff) pairs


def _as_classes(k: int, n: int, classes) -> list[SchubertClass]:
    out = []
    for c in classes:
        if not isinstance(c, SchubertClass):
            c = SchubertClass(k, n, tuple(c))
        if (c.k, c.n) != (k, n):
            raise ValueError(f"class {c} does not live in Gr({k},{n})")
        out.append(c)
    return out


@lru_cache(maxsize=None)
def _product_sorted(k: int, n: int, parts: tuple) -> dict:
    return quantum_multi_product(k, n, parts)


def quantum_multi_product_pt(k: int, n: int, classes) -> QuantumProductResult:
    """Evaluate sigma_1 * ... * sigma_m and extract its q^d [pt] coefficient."""
    cls = _as_classes(k, n, classes)
    total = sum(c.codim for c in cls)
    dim = k * (n - k)
    d = None
    if total >= dim and (total - dim) % n == 0:
        d = (total - dim) // n
    # the product is commutative; sort to share work
    parts = tuple(sorted(c.partition for c in cls))
    terms = _product_sorted(k, n, parts)
    pt = _trim([n - k] * k)
    coeff = terms.get((pt, d), 0) if d is not None else 0
    exact = coeff != 0 and len(terms) == 1
    return QuantumProductResult(k, n, d, coeff, exact, tuple(terms.items()))


def is_pt_product(k: int, n: int, classes) -> Optional[int]:
    """The degree d if the Gromov-Witten number <sigma_1, ..., sigma_m>_d is 1."""
    res = quantum_multi_product_pt(k, n, classes)
    return res.degree if res.pt_coefficient == 1 else None


# --- Weyl group representatives ---------------------------------------------


def subset_permutation(k: int, n: int, subset: Sequence[int]) -> tuple:
    """Grassmannian permutation (one-line, 1-based) attached to ``subset``.

    Positions 1..k go to the subset in increasing order and the remaining
    positions to the complement.  This is the u with B u P / P the cell of
    k-planes whose pivot rows are ``subset``; its closure has dimension
    sum(i_j - j), so the point {1..k} gets the identity and the big cell
    {n-k+1..n} the longest representative.
    """
    subset_to_partition(k, n, subset)
    image = sorted(subset)
    rest = [j for j in range(1, n + 1) if j not in image]
    return tuple(image + rest)


def permutation_word(perm: Sequence[int]) -> tuple:
    """A reduced word (1-based letters) for a permutation in one-line notation.

    The word (a_1, ..., a_m) means s_{a_1} ... s_{a_m}, where s_i swaps i, i+1.
    """
    perm = list(perm)
    word: list[int] = []
    while True:
        i = next((j for j in range(len(perm) - 1) if perm[j] > perm[j + 1]), None)
        if i is None:
            break
        perm[i], perm[i + 1] = perm[i + 1], perm[i]  # perm = perm' s_{i+1}
        word.insert(0, i + 1)
    # perm' ... s_{a}: letters found later sit further left
    return tuple(word)


def subset_to_weyl(k: int, n: int, subset: Sequence[int]) -> tuple:
    """Minimal coset representative (type A_{n-1}, P = node k) for ``subset``.

    sigma_u is the class of the Schubert variety of u, so the word length is
    k(n-k) minus the codimension.  Validated against the orbit enumeration of W^P.
    """
    from .lie import build_root_system, weyl_apply
    from .levi import is_minimal_rep, minimal_coset_reps

    word = permutation_word(subset_permutation(k, n, subset))
    if len(word) != k * (n - k) - sum(subset_to_partition(k, n, subset)):
        raise AssertionError(f"length of {word} does not match the cell dimension")
    rs = build_root_system("A", n - 1)
    if not is_minimal_rep(rs, k, word):
        raise AssertionError(f"{word} is not a minimal coset representative")
    omega = tuple(int(i == k - 1) for i in range(n - 1))
    target = weyl_apply(rs, word, omega)
    reps = [w for w in minimal_coset_reps(rs, k) if len(w) == len(word)]
    if not any(weyl_apply(rs, w, omega) == target for w in reps):
        raise AssertionError(f"{word} not found among minimal coset representatives")
    return word
