"""Index bookkeeping for the four bases of unitary area measures.

Measures come in two primal bases, B/Gamma and Delta/N, indexed by pairs
(k, q) with per-family validity ranges depending on the ambient complex
dimension n (always n >= 2):

    Delta: 0 <= k <= 2n-1,  max(0, k-n)   <= q <= floor(k/2)
    N:                      max(0, k-n+1) <= q <  k/2
    B:                      max(0, k-n)   <= q <  k/2
    Gamma:                  max(0, k-n+1) <= q <= floor(k/2)

The degree of an index is k.  This module also carries the exact 2x2
change-of-basis maps between the two bases and their duals; whenever a
conversion formula emits an index outside its validity range, that term
denotes zero and is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class InvalidIndexError(ValueError):
    """An index outside its family's validity range for the given n."""


class Family(str, Enum):
    DELTA = "Delta"
    N = "N"
    B = "B"
    GAMMA = "Gamma"

    def __str__(self) -> str:
        return self.value


_FAMILY_RANK = {Family.DELTA: 0, Family.N: 1, Family.B: 2, Family.GAMMA: 3}

_LATEX_NAME = {Family.DELTA: "\\Delta", Family.N: "N", Family.B: "B", Family.GAMMA: "\\Gamma"}


@dataclass(frozen=True)
class AreaIndex:
    family: Family
    k: int
    q: int

    @property
    def degree(self) -> int:
        return self.k

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.k, _FAMILY_RANK[self.family], self.q)

    def text(self) -> str:
        """CLI syntax, e.g. 'Delta:2,1'."""
        return f"{self.family.value}:{self.k},{self.q}"

    def latex(self) -> str:
        return f"{_LATEX_NAME[self.family]}_{{{self.k},{self.q}}}"

    def to_json_dict(self) -> dict:
        return {"family": self.family.value, "k": self.k, "q": self.q}

    def __str__(self) -> str:
        return f"{self.family.value}_{{{self.k},{self.q}}}"


def parse_index(text: str) -> AreaIndex:
    """Parse the CLI index syntax 'Family:k,q'."""
    try:
        name, coords = text.split(":")
        k_str, q_str = coords.split(",")
        return AreaIndex(Family(name), int(k_str), int(q_str))
    except (ValueError, KeyError) as exc:
        raise InvalidIndexError(
            f"malformed index {text!r}; expected e.g. 'Delta:2,1' with family "
            "one of Delta, N, B, Gamma"
        ) from exc


def _require_dimension(n: int) -> None:
    if n < 2:
        raise InvalidIndexError(f"ambient dimension must satisfy n >= 2, got {n}")


def is_valid(n: int, index: AreaIndex) -> bool:
    _require_dimension(n)
    k, q = index.k, index.q
    if not 0 <= k <= 2 * n - 1:
        return False
    if index.family is Family.DELTA:
        return max(0, k - n) <= q <= k // 2
    if index.family is Family.N:
        return max(0, k - n + 1) <= q and 2 * q < k
    if index.family is Family.B:
        return max(0, k - n) <= q and 2 * q < k
    return max(0, k - n + 1) <= q and 2 * q <= k  # Gamma


def require_valid(n: int, index: AreaIndex) -> AreaIndex:
    if not is_valid(n, index):
        raise InvalidIndexError(f"invalid index {index.text()} for n={n}")
    return index


def valid_indices(n: int, family: Family) -> list[AreaIndex]:
    """All valid indices of one family, ordered by (k, q) ascending."""
    _require_dimension(n)
    out = []
    for k in range(2 * n):
        for q in range(0, k // 2 + 1):
            idx = AreaIndex(family, k, q)
            if is_valid(n, idx):
                out.append(idx)
    return out


def dual_basis_indices(n: int) -> list[AreaIndex]:
    """The Delta and N indices, merged and ordered by (k, family, q)."""
    merged = valid_indices(n, Family.DELTA) + valid_indices(n, Family.N)
    return sorted(merged, key=lambda idx: idx.sort_key)


def indices_of_degree(n: int, degree: int, families: tuple[Family, Family] = (Family.DELTA, Family.N)) -> list[AreaIndex]:
    merged = [idx for family in families for idx in valid_indices(n, family) if idx.k == degree]
    return sorted(merged, key=lambda idx: idx.sort_key)


@dataclass(frozen=True)
class Census:
    n: int
    per_degree: tuple[int, ...]        # Delta + N counts, degrees 0 .. 2n-1
    per_degree_delta: tuple[int, ...]
    per_degree_n: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.per_degree)


def census(n: int) -> Census:
    """Per-degree dimension count of the Delta/N (equivalently B/Gamma) basis."""
    _require_dimension(n)
    deltas = [0] * (2 * n)
    ns = [0] * (2 * n)
    for idx in valid_indices(n, Family.DELTA):
        deltas[idx.k] += 1
    for idx in valid_indices(n, Family.N):
        ns[idx.k] += 1
    both = tuple(d + m for d, m in zip(deltas, ns))
    return Census(n, both, tuple(deltas), tuple(ns))


# ---------------------------------------------------------------------------
# Basis conversions.  All coordinates are exact rationals; terms landing on
# invalid indices denote zero and are omitted from the result.
# ---------------------------------------------------------------------------

Coordinates = dict[AreaIndex, Fraction]


def dual_bg_to_dn(n: int, index: AreaIndex) -> Coordinates:
    """Dual B*/Gamma* basis element in Delta*/N* coordinates.

    B*_{k,q}     = (k-2q)/(2n-k) Delta*_{k,q} - 2(n-k+q)/(2n-k) N*_{k,q}
    Gamma*_{k,q} = 2(n-k+q)/(2n-k) (Delta*_{k,q} + N*_{k,q}),  2q < k
    Gamma*_{k,k/2} = Delta*_{k,k/2}

    At the range edge q = k-n the N index does not exist and its structural
    coefficient vanishes, leaving the identification B*_{k,k-n} = Delta*_{k,k-n}.
    """
    require_valid(n, index)
    k, q = index.k, index.q
    delta = AreaIndex(Family.DELTA, k, q)
    if index.family is Family.B:
        if q == k - n:
            return {delta: Fraction(1)}
        return {
            delta: Fraction(k - 2 * q, 2 * n - k),
            AreaIndex(Family.N, k, q): Fraction(-2 * (n - k + q), 2 * n - k),
        }
    if index.family is Family.GAMMA:
        if 2 * q == k:
            return {delta: Fraction(1)}
        coeff = Fraction(2 * (n - k + q), 2 * n - k)
        return {delta: coeff, AreaIndex(Family.N, k, q): coeff}
    raise InvalidIndexError(f"expected a B or Gamma index, got {index.text()}")


def dual_dn_to_bg(n: int, index: AreaIndex) -> Coordinates:
    """Dual Delta*/N* basis element in B*/Gamma* coordinates (inverse 2x2 solve).

    In a generic (k, q) block:  Delta* = B* + Gamma*  and
    N* = -B* + (k-2q)/(2(n-k+q)) Gamma*.  Degenerate blocks reduce to the
    identifications Delta*_{k,k/2} = Gamma*_{k,k/2} and Delta*_{k,k-n} = B*_{k,k-n}.
    """
    require_valid(n, index)
    k, q = index.k, index.q
    b = AreaIndex(Family.B, k, q)
    gamma = AreaIndex(Family.GAMMA, k, q)
    if index.family is Family.DELTA:
        if 2 * q == k:
            return {gamma: Fraction(1)}
        if q == k - n:
            return {b: Fraction(1)}
        return {b: Fraction(1), gamma: Fraction(1)}
    if index.family is Family.N:
        return {b: Fraction(-1), gamma: Fraction(k - 2 * q, 2 * (n - k + q))}
    raise InvalidIndexError(f"expected a Delta or N index, got {index.text()}")


def primal_bg_from_dn(n: int, index: AreaIndex) -> Coordinates:
    """Primal Delta/N basis measure in B/Gamma coordinates.

    Delta_{k,q} = (k-2q)/(2n-k) B_{k,q} + 2(n-k+q)/(2n-k) Gamma_{k,q}
    N_{k,q}     = 2(n-k+q)/(2n-k) (Gamma_{k,q} - B_{k,q})
    """
    require_valid(n, index)
    k, q = index.k, index.q
    b = AreaIndex(Family.B, k, q)
    gamma = AreaIndex(Family.GAMMA, k, q)
    if index.family is Family.DELTA:
        if 2 * q == k:
            return {gamma: Fraction(1)}
        if q == k - n:
            return {b: Fraction(1)}
        return {
            b: Fraction(k - 2 * q, 2 * n - k),
            gamma: Fraction(2 * (n - k + q), 2 * n - k),
        }
    if index.family is Family.N:
        coeff = Fraction(2 * (n - k + q), 2 * n - k)
        return {gamma: coeff, b: -coeff}
    raise InvalidIndexError(f"expected a Delta or N index, got {index.text()}")


def primal_dn_from_bg(n: int, index: AreaIndex) -> Coordinates:
    """Primal B/Gamma basis measure in Delta/N coordinates.

    Inverting the block above gives B_{k,q} = Delta_{k,q} - N_{k,q} and
    Gamma_{k,q} = Delta_{k,q} + (k-2q)/(2(n-k+q)) N_{k,q}.
    """
    require_valid(n, index)
    k, q = index.k, index.q
    delta = AreaIndex(Family.DELTA, k, q)
    n_idx = AreaIndex(Family.N, k, q)
    if index.family is Family.B:
        if q == k - n:
            return {delta: Fraction(1)}
        return {delta: Fraction(1), n_idx: Fraction(-1)}
    if index.family is Family.GAMMA:
        if 2 * q == k:
            return {delta: Fraction(1)}
        return {delta: Fraction(1), n_idx: Fraction(k - 2 * q, 2 * (n - k + q))}
    raise InvalidIndexError(f"expected a B or Gamma index, got {index.text()}")
