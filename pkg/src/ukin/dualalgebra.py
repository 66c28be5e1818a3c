"""The dual algebra of unitary area measures.

Elements are finite linear combinations of the dual Delta*/N* basis with
PiScalar coefficients.  The algebra is generated by three distinguished
elements

    tbar = 2 omega_{2n-2}/omega_{2n-1} * Delta*_{1,0}   (degree 1),
    sbar = n/pi * Delta*_{2,1}                          (degree 2),
    vbar = 2 omega_{2n-2}/omega_{2n-1} * B*_{1,0}       (degree 1),

subject to vbar^2 = 0 and the relations f_{n+1} = f_{n+2} = 0,
p_n - q_{n-1} vbar = 0, p_n vbar = 0 in sbar, tbar.  Multiplication by tbar
and sbar acts on basis elements through one-step raising rules; every other
product is reduced to those through the canonical form

    x = phi(sbar, tbar) + psi(sbar, tbar) * vbar,

obtained by an exact linear solve per degree.  Emitted indices outside their
validity range denote zero and are silently dropped; in particular products
of total degree above 2n-1 vanish.

Elements are immutable and all public operations are pure given n; the
memoized image matrices and product tables recompute idempotently, so
concurrent use needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .areabasis import (
    AreaIndex,
    Family,
    InvalidIndexError,
    dual_bg_to_dn,
    indices_of_degree,
    is_valid,
    require_valid,
    valid_indices,
)
from .exactnum import PI, PiScalar, ball_volume
from .stpoly import STPoly, fu_poly, p_poly, q_poly, tsu_ball_value, mustar_pairing

ScalarLike = PiScalar | int | Fraction


class InconsistentSystemError(RuntimeError):
    """The canonical-form linear system had no exact solution.

    Every dual element is expressible as phi + psi*vbar, so this always
    indicates a bug rather than a legitimate input.
    """


class AlgebraConsistencyError(RuntimeError):
    """An internal cross-check against a closed form failed."""


def _as_piscalar(value: ScalarLike) -> PiScalar:
    return value if isinstance(value, PiScalar) else PiScalar(value)


class AreaDualElement:
    """Element of the dual algebra in Delta*/N* coordinates.

    Immutable; coordinates map valid Delta/N indices to nonzero PiScalar
    coefficients.  Equality is coefficient-wise.
    """

    __slots__ = ("n", "_coords")

    def __init__(self, n: int, coords: Mapping[AreaIndex, ScalarLike] | Iterable[tuple[AreaIndex, ScalarLike]] = ()):
        if isinstance(coords, Mapping):
            coords = coords.items()
        data: dict[AreaIndex, PiScalar] = {}
        for idx, coeff in coords:
            if idx.family not in (Family.DELTA, Family.N):
                raise InvalidIndexError(f"dual elements use Delta*/N* coordinates only, got {idx.text()}")
            require_valid(n, idx)
            coeff = _as_piscalar(coeff)
            acc = data.get(idx, _PS_ZERO) + coeff
            if acc:
                data[idx] = acc
            else:
                data.pop(idx, None)
        self.n = n
        self._coords = data

    # -- inspection -----------------------------------------------------------

    def items(self) -> tuple[tuple[AreaIndex, PiScalar], ...]:
        return tuple(sorted(self._coords.items(), key=lambda kv: kv[0].sort_key))

    def coefficient(self, index: AreaIndex) -> PiScalar:
        return self._coords.get(index, _PS_ZERO)

    def degrees(self) -> list[int]:
        return sorted({idx.k for idx in self._coords})

    def homogeneous_part(self, degree: int) -> "AreaDualElement":
        out = AreaDualElement.__new__(AreaDualElement)
        out.n = self.n
        out._coords = {idx: c for idx, c in self._coords.items() if idx.k == degree}
        return out

    def is_zero(self) -> bool:
        return not self._coords

    def __bool__(self) -> bool:
        return bool(self._coords)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AreaDualElement):
            return self.n == other.n and self._coords == other._coords
        return NotImplemented

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "AreaDualElement") -> "AreaDualElement":
        if not isinstance(other, AreaDualElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mixed ambient dimensions: {self.n} vs {other.n}")
        data = dict(self._coords)
        for idx, coeff in other._coords.items():
            acc = data.get(idx, _PS_ZERO) + coeff
            if acc:
                data[idx] = acc
            else:
                data.pop(idx, None)
        out = AreaDualElement.__new__(AreaDualElement)
        out.n = self.n
        out._coords = data
        return out

    def __neg__(self) -> "AreaDualElement":
        out = AreaDualElement.__new__(AreaDualElement)
        out.n = self.n
        out._coords = {idx: -c for idx, c in self._coords.items()}
        return out

    def __sub__(self, other: "AreaDualElement") -> "AreaDualElement":
        if not isinstance(other, AreaDualElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: ScalarLike) -> "AreaDualElement":
        coeff = _as_piscalar(scalar)
        out = AreaDualElement.__new__(AreaDualElement)
        out.n = self.n
        out._coords = {idx: c * coeff for idx, c in self._coords.items()} if coeff else {}
        return out

    __rmul__ = __mul__

    # -- rendering ------------------------------------------------------------

    def text(self) -> str:
        if not self._coords:
            return "0"
        parts = []
        for idx, coeff in self.items():
            _, lead = coeff.terms()[0]
            sign, magnitude = (1, coeff) if lead > 0 else (-1, -coeff)
            mag_text = magnitude.text()
            if " " in mag_text:
                mag_text = f"({mag_text})"
            body = f"{idx}" if mag_text == "1" else f"{mag_text} * {idx}"
            if not parts:
                parts.append(body if sign > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if sign > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"AreaDualElement(n={self.n}, {self.text()!r})"


_PS_ZERO = PiScalar()


def zero(n: int) -> AreaDualElement:
    return AreaDualElement(n)


def basis_element(n: int, index: AreaIndex) -> AreaDualElement:
    """The dual basis element of a single Delta or N index."""
    return AreaDualElement(n, {require_valid(n, index): PiScalar(1)})


def dual_element(n: int, index: AreaIndex) -> AreaDualElement:
    """Dual basis element of any family, in Delta*/N* coordinates."""
    require_valid(n, index)
    if index.family in (Family.DELTA, Family.N):
        return basis_element(n, index)
    return AreaDualElement(n, {idx: PiScalar(c) for idx, c in dual_bg_to_dn(n, index).items()})


@lru_cache(maxsize=None)
def unit(n: int) -> AreaDualElement:
    """Multiplicative identity Delta*_{0,0}."""
    return basis_element(n, AreaIndex(Family.DELTA, 0, 0))


@lru_cache(maxsize=None)
def _edge_ratio(n: int) -> PiScalar:
    # 2 omega_{2n-2} / omega_{2n-1}; always rational since the pi-powers cancel.
    return (2 * ball_volume(2 * n - 2)).div_by_monomial(ball_volume(2 * n - 1))


@lru_cache(maxsize=None)
def tbar(n: int) -> AreaDualElement:
    """The degree-1 generator 2 omega_{2n-2}/omega_{2n-1} * Delta*_{1,0}."""
    return _edge_ratio(n) * basis_element(n, AreaIndex(Family.DELTA, 1, 0))


@lru_cache(maxsize=None)
def sbar(n: int) -> AreaDualElement:
    """The degree-2 generator n/pi * Delta*_{2,1}."""
    return PiScalar(n, -1) * basis_element(n, AreaIndex(Family.DELTA, 2, 1))


@lru_cache(maxsize=None)
def vbar(n: int) -> AreaDualElement:
    """The square-zero generator 2 omega_{2n-2}/omega_{2n-1} * B*_{1,0}."""
    return _edge_ratio(n) * dual_element(n, AreaIndex(Family.B, 1, 0))


# ---------------------------------------------------------------------------
# Multiplication by the generators: one-step raising rules on basis elements.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _tbar_step(n: int, k: int) -> PiScalar:
    # omega_{2n-k} / (pi * omega_{2n-k-1})
    return ball_volume(2 * n - k).div_by_monomial(PI * ball_volume(2 * n - k - 1))


def _accumulate(acc: dict[AreaIndex, PiScalar], n: int, family: Family, k: int, q: int, coeff: PiScalar) -> None:
    # Out-of-range targets denote zero by convention and are dropped.
    if not coeff:
        return
    idx = AreaIndex(family, k, q)
    if not is_valid(n, idx):
        return
    total = acc.get(idx, _PS_ZERO) + coeff
    if total:
        acc[idx] = total
    else:
        acc.pop(idx, None)


def mul_tbar(x: AreaDualElement) -> AreaDualElement:
    """Multiply by tbar: linear extension of the degree-raising rules

    tbar * Delta*_{k,q} = w_k ((k-2q) Delta*_{k+1,q+1} + 2(n-k+q) Delta*_{k+1,q})
    tbar * N*_{k,q}     = w_k (k-2q)/(2n-k-1) (Delta*_{k+1,q+1} - Delta*_{k+1,q}
                          + (2n-k) (N*_{k+1,q+1} + 2(n-k+q-1)/(k-2q+1) N*_{k+1,q}))

    with w_k = omega_{2n-k}/(pi omega_{2n-k-1}).
    """
    n = x.n
    acc: dict[AreaIndex, PiScalar] = {}
    for idx, c in x.items():
        k, q = idx.k, idx.q
        if k + 1 > 2 * n - 1:
            continue
        lead = c * _tbar_step(n, k)
        if idx.family is Family.DELTA:
            _accumulate(acc, n, Family.DELTA, k + 1, q + 1, lead * (k - 2 * q))
            _accumulate(acc, n, Family.DELTA, k + 1, q, lead * (2 * (n - k + q)))
        else:
            lead = lead * Fraction(k - 2 * q, 2 * n - k - 1)
            _accumulate(acc, n, Family.DELTA, k + 1, q + 1, lead)
            _accumulate(acc, n, Family.DELTA, k + 1, q, -lead)
            _accumulate(acc, n, Family.N, k + 1, q + 1, lead * (2 * n - k))
            _accumulate(acc, n, Family.N, k + 1, q,
                        lead * Fraction(2 * (2 * n - k) * (n - k + q - 1), k - 2 * q + 1))
    return AreaDualElement(n, acc)


def mul_sbar(x: AreaDualElement) -> AreaDualElement:
    """Multiply by sbar: linear extension of the degree-raising rules

    sbar * Delta*_{k,q} = (k-2q)(k-2q-1)/(2 pi (2n-k)) Delta*_{k+2,q+2}
                          + 2(n-k+q)(n-q)/(pi (2n-k)) Delta*_{k+2,q+1}
    sbar * N*_{k,q}     = (k-2q)(k-2q-1)/(2 pi (2n-k-2)) (N*_{k+2,q+2} + 2/(2n-k) Delta*_{k+2,q+2})
                          + 2(n-q)/(pi (2n-k-2)) ((n-k+q-1) N*_{k+2,q+1}
                                                  - (k-2q)/(2n-k) Delta*_{k+2,q+1})
    """
    n = x.n
    acc: dict[AreaIndex, PiScalar] = {}
    for idx, c in x.items():
        k, q = idx.k, idx.q
        if k + 2 > 2 * n - 1:
            continue
        if idx.family is Family.DELTA:
            _accumulate(acc, n, Family.DELTA, k + 2, q + 2,
                        c * PiScalar(Fraction((k - 2 * q) * (k - 2 * q - 1), 2 * (2 * n - k)), -1))
            _accumulate(acc, n, Family.DELTA, k + 2, q + 1,
                        c * PiScalar(Fraction(2 * (n - k + q) * (n - q), 2 * n - k), -1))
        else:
            top = c * PiScalar(Fraction((k - 2 * q) * (k - 2 * q - 1), 2 * (2 * n - k - 2)), -1)
            _accumulate(acc, n, Family.N, k + 2, q + 2, top)
            _accumulate(acc, n, Family.DELTA, k + 2, q + 2, top * Fraction(2, 2 * n - k))
            low = c * PiScalar(Fraction(2 * (n - q), 2 * n - k - 2), -1)
            _accumulate(acc, n, Family.N, k + 2, q + 1, low * (n - k + q - 1))
            _accumulate(acc, n, Family.DELTA, k + 2, q + 1, -(low * Fraction(k - 2 * q, 2 * n - k)))
    return AreaDualElement(n, acc)


# ---------------------------------------------------------------------------
# Polynomial evaluation and canonical forms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _generator_image(n: int, t_exp: int, s_exp: int, on_v: bool) -> AreaDualElement:
    # tbar^a sbar^b applied to the unit (or to vbar when on_v).
    if t_exp == 0 and s_exp == 0:
        return vbar(n) if on_v else unit(n)
    if s_exp > 0:
        return mul_sbar(_generator_image(n, t_exp, s_exp - 1, on_v))
    return mul_tbar(_generator_image(n, t_exp - 1, s_exp, on_v))


def eval_poly(p: STPoly, x: AreaDualElement, with_v: bool = False) -> AreaDualElement:
    """Apply the operator polynomial p(sbar, tbar) to x.

    With with_v set, the result is additionally multiplied by vbar; for the
    common case x = unit this just starts the operator recursion at vbar.
    """
    n = x.n
    if with_v:
        x = vbar(n) if x == unit(n) else product(x, vbar(n))
    if x == unit(n) or x == vbar(n):
        on_v = x == vbar(n)
        total = zero(n)
        for (a, b), coeff in p.terms():
            total = total + coeff * _generator_image(n, a, b, on_v)
        return total
    memo: dict[tuple[int, int], AreaDualElement] = {(0, 0): x}

    def image(a: int, b: int) -> AreaDualElement:
        cached = memo.get((a, b))
        if cached is None:
            cached = mul_sbar(image(a, b - 1)) if b > 0 else mul_tbar(image(a - 1, b))
            memo[(a, b)] = cached
        return cached

    total = zero(n)
    for (a, b), coeff in p.terms():
        total = total + coeff * image(a, b)
    return total


@dataclass(frozen=True)
class CanonicalForm:
    """Representation x = phi(sbar, tbar) + psi(sbar, tbar) * vbar.

    Representatives are unique only modulo the relation ideal; this engine
    returns the echelon-selected one.  Two representatives of the same element
    always evaluate back to identical elements.
    """

    n: int
    phi: STPoly
    psi: STPoly

    def evaluate(self) -> AreaDualElement:
        return eval_poly(self.phi, unit(self.n)) + eval_poly(self.psi, vbar(self.n))


@lru_cache(maxsize=None)
def _degree_columns(n: int, degree: int) -> tuple[tuple[int, bool], ...]:
    # Column keys (s_exp, on_v), in ascending (s-exponent, v-flag) order; this
    # is also the deterministic pivot-search order.
    cols: list[tuple[int, bool]] = []
    for b in range(degree // 2 + 1):
        if degree - 2 * b >= 0:
            cols.append((b, False))
        if degree - 1 - 2 * b >= 0:
            cols.append((b, True))
    return tuple(cols)


@lru_cache(maxsize=None)
def _degree_system(n: int, degree: int):
    """Rows (basis indices of the degree), column keys, and the image matrix."""
    rows = tuple(indices_of_degree(n, degree))
    cols = _degree_columns(n, degree)
    images = []
    for b, on_v in cols:
        a = (degree - (1 if on_v else 0)) - 2 * b
        images.append(_generator_image(n, a, b, on_v))
    matrix = tuple(tuple(img.coefficient(idx) for img in images) for idx in rows)
    return rows, cols, matrix


def _gauss_solve(matrix, rhs):
    """Exact Gauss-Jordan elimination over PiScalar.

    Processes columns left to right, picking the first unused row with a
    nonzero entry as pivot; pivots stay monomials so exact division applies.
    Returns (solution, rank) with free variables set to zero, or (None, rank)
    when rhs is None.  Raises InconsistentSystemError if no solution exists.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    rows = [list(r) for r in matrix]
    vec = list(rhs) if rhs is not None else [_PS_ZERO] * nrows
    used = [False] * nrows
    pivots: list[tuple[int, int]] = []
    for col in range(ncols):
        pivot_row = next((r for r in range(nrows) if not used[r] and rows[r][col]), None)
        if pivot_row is None:
            continue
        used[pivot_row] = True
        pivots.append((pivot_row, col))
        pivot = rows[pivot_row][col]
        for r in range(nrows):
            if r == pivot_row or not rows[r][col]:
                continue
            ratio = rows[r][col].div_by_monomial(pivot)
            for c in range(col, ncols):
                if rows[pivot_row][c]:
                    rows[r][c] = rows[r][c] - ratio * rows[pivot_row][c]
            vec[r] = vec[r] - ratio * vec[pivot_row]
    if rhs is None:
        return None, len(pivots)
    for r in range(nrows):
        if not used[r] and vec[r]:
            raise InconsistentSystemError("inconsistent system: element is outside the generator span")
    solution = [_PS_ZERO] * ncols
    for pivot_row, col in pivots:
        solution[col] = vec[pivot_row].div_by_monomial(rows[pivot_row][col])
    return solution, len(pivots)


def monomial_rank(n: int, degree: int) -> int:
    """Rank of the generator-monomial image matrix in one degree."""
    _, _, matrix = _degree_system(n, degree)
    if not matrix:
        return 0
    _, rank = _gauss_solve(matrix, None)
    return rank


def canonicalize(x: AreaDualElement) -> CanonicalForm:
    """Express x as phi(sbar, tbar) + psi(sbar, tbar) vbar, degree by degree."""
    n = x.n
    phi = STPoly()
    psi = STPoly()
    for degree in x.degrees():
        rows, cols, matrix = _degree_system(n, degree)
        rhs = [x.coefficient(idx) for idx in rows]
        solution, _ = _gauss_solve(matrix, rhs)
        for (b, on_v), coeff in zip(cols, solution):
            if not coeff:
                continue
            a = (degree - (1 if on_v else 0)) - 2 * b
            term = STPoly.monomial(a, b, coeff)
            if on_v:
                psi = psi + term
            else:
                phi = phi + term
    return CanonicalForm(n, phi, psi)


def product(x: AreaDualElement, y: AreaDualElement) -> AreaDualElement:
    """Kinematic product, computed through canonical forms and vbar^2 = 0."""
    if x.n != y.n:
        raise ValueError(f"mixed ambient dimensions: {x.n} vs {y.n}")
    n = x.n
    cx, cy = canonicalize(x), canonicalize(y)
    plain = cx.phi * cy.phi
    with_v = cx.phi * cy.psi + cy.phi * cx.psi
    return eval_poly(plain, unit(n)) + eval_poly(with_v, vbar(n))


@lru_cache(maxsize=None)
def basis_product(n: int, left: AreaIndex, right: AreaIndex) -> AreaDualElement:
    """Cached product of two dual basis elements (any families)."""
    return product(dual_element(n, left), dual_element(n, right))


def product_nn(n: int, left: AreaIndex, right: AreaIndex) -> AreaDualElement:
    """Product of two N* basis elements via the reduction

    N*_{k,q} N*_{k',q'} = (k-2q)(k'-2q')/(4(n-k+q)(n-k'+q')) *
        ( 2(n-k'+q')/(k'-2q') Delta*_{k,q} N*_{k',q'}
        + 2(n-k+q)/(k-2q)   Delta*_{k',q'} N*_{k,q}
        - Delta*_{k,q} Delta*_{k',q'} )

    The three constituent products run through the closed-form polynomial for
    Delta* applied directly to basis elements, making this an independent
    route for cross-checking `product`.
    """
    for idx in (left, right):
        if idx.family is not Family.N:
            raise InvalidIndexError(f"product_nn expects N indices, got {idx.text()}")
        require_valid(n, idx)
    k, q = left.k, left.q
    kp, qp = right.k, right.q
    poly_left = delta_star_closed_form(n, k, q)
    poly_right = delta_star_closed_form(n, kp, qp)
    dn_right = eval_poly(poly_left, basis_element(n, right))
    dn_left = eval_poly(poly_right, basis_element(n, left))
    dd = eval_poly(poly_left * poly_right, unit(n))
    inner = (Fraction(2 * (n - kp + qp), kp - 2 * qp) * dn_right
             + Fraction(2 * (n - k + q), k - 2 * q) * dn_left
             - dd)
    return Fraction((k - 2 * q) * (kp - 2 * qp), 4 * (n - k + q) * (n - kp + qp)) * inner


def delta_star_closed_form(n: int, k: int, q: int) -> STPoly:
    """Polynomial phi with phi(sbar, tbar) = Delta*_{k,q}:

    omega_{2n-k} (k-2q)! (n-k+q)! / (pi^(n-k) 2^(k-2q) n!) *
        sum_{i=q}^{floor(k/2)} (-1)^(i+q)/(i-q)! * (n-i)!/(k-2i)! * t^(k-2i) s^i
    """
    require_valid(n, AreaIndex(Family.DELTA, k, q))
    prefactor = (ball_volume(2 * n - k)
                 * PiScalar(Fraction(factorial(k - 2 * q) * factorial(n - k + q),
                                     2 ** (k - 2 * q) * factorial(n)), k - n))
    terms = {}
    for i in range(q, k // 2 + 1):
        sign = -1 if (i + q) % 2 else 1
        coeff = Fraction(sign * factorial(n - i), factorial(i - q) * factorial(k - 2 * i))
        terms[(k - 2 * i, i)] = prefactor * coeff
    return STPoly(terms)


# ---------------------------------------------------------------------------
# Verification of the presentation data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _zero_check(name: str, element: AreaDualElement) -> CheckResult:
    if element.is_zero():
        return CheckResult(name, True)
    return CheckResult(name, False, f"nonzero remainder: {element.text()}")


def verify_relations(n: int) -> list[CheckResult]:
    """Exact verification of every presentation relation at dimension n.

    Checks f_{n+1} = f_{n+2} = 0, p_n - q_{n-1} vbar = 0, p_n vbar = 0, the
    vanishing of all B* pair products, and that p_n(sbar, tbar) equals
    (-1)^n 2^n / omega_n times Delta*_{n,0}.
    """
    checks = [
        _zero_check(f"f_{n + 1}(sbar, tbar) = 0", eval_poly(fu_poly(n + 1), unit(n))),
        _zero_check(f"f_{n + 2}(sbar, tbar) = 0", eval_poly(fu_poly(n + 2), unit(n))),
        _zero_check(
            f"p_{n} - q_{n - 1}*v = 0",
            eval_poly(p_poly(n), unit(n)) - eval_poly(q_poly(n - 1), unit(n), with_v=True),
        ),
        _zero_check(f"p_{n}*v = 0", eval_poly(p_poly(n), unit(n), with_v=True)),
    ]

    b_indices = valid_indices(n, Family.B)
    offenders = []
    for i, left in enumerate(b_indices):
        for right in b_indices[i:]:
            result = basis_product(n, left, right)
            if not result.is_zero():
                offenders.append(f"{left.text()} * {right.text()} = {result.text()}")
    checks.append(CheckResult(
        "B* * B* = 0 (all pairs)", not offenders, "; ".join(offenders)))

    sign = -1 if n % 2 else 1
    expected = (PiScalar(sign * 2 ** n).div_by_monomial(ball_volume(n))
                * basis_element(n, AreaIndex(Family.DELTA, n, 0)))
    actual = eval_poly(p_poly(n), unit(n))
    checks.append(CheckResult(
        f"p_{n}(sbar, tbar) = (-1)^{n} 2^{n}/omega_{n} * Delta*_{{{n},0}}",
        actual == expected,
        "" if actual == expected else f"got {actual.text()}",
    ))
    return checks


def module_recurrence(n: int) -> tuple[list[PiScalar], list[PiScalar]]:
    """Iterate the 2x2 coefficient recurrence for repeated degree lowering.

    Starting from (c_0, d_0) = (1, 0),

        (c_{i+1}, d_{i+1}) = 2(i+1) omega_{n+i+1} / ((n-i) pi omega_{n+i})
                             * [[n-i-1, 0], [1, n-i]] (c_i, d_i),

    and the results must match the closed forms: (c_{n-1}, d_{n-1})
    proportional to (1, n-1) with c_{n-1} = 2^(n-1)/n *
    omega_{2n-1}/(omega_{2n-2} omega_n), and (c_n, d_n) = (0, 2^n/omega_n).
    Also checks the underlying integer matrix identity with value (n-1)!(1, n-1).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    cs = [PiScalar(1)]
    ds = [PiScalar(0)]
    for i in range(n):
        step = (2 * (i + 1) * ball_volume(n + i + 1)).div_by_monomial(
            PiScalar(n - i, 1) * ball_volume(n + i))
        cs.append(step * ((n - i - 1) * cs[i]))
        ds.append(step * (cs[i] + (n - i) * ds[i]))

    c_closed = (PiScalar(Fraction(2 ** (n - 1), n)) * ball_volume(2 * n - 1)).div_by_monomial(
        ball_volume(2 * n - 2) * ball_volume(n))
    if cs[n - 1] != c_closed or ds[n - 1] != (n - 1) * c_closed:
        raise AlgebraConsistencyError(
            f"step {n - 1} of the module recurrence disagrees with its closed form at n={n}")
    d_final = PiScalar(2 ** n).div_by_monomial(ball_volume(n))
    if cs[n] != PiScalar(0) or ds[n] != d_final:
        raise AlgebraConsistencyError(
            f"step {n} of the module recurrence disagrees with its closed form at n={n}")

    vec = (1, 0)
    for i in range(n - 1, 0, -1):
        vec = (i * vec[0], vec[0] + (i + 1) * vec[1])
    if vec != (factorial(n - 1), factorial(n - 1) * (n - 1)):
        raise AlgebraConsistencyError(f"integer matrix identity fails at n={n}")
    return cs, ds


def verify_delta_pairing(n: int, k: int, q: int) -> bool:
    """Two-route check of the closed form behind delta_star_closed_form.

    For every j with 0 <= 2j <= 2n-k, the direct pairing value
    omega_{2n-k} (2n-k-2j)! (2j)! C(n-k+q, j) / pi^(2n-k) must equal the
    expansion through unit-ball values of t^(2n-2i-2j) s^i u^j monomials.
    """
    require_valid(n, AreaIndex(Family.DELTA, k, q))
    prefactor = (ball_volume(2 * n - k)
                 * PiScalar(Fraction(factorial(k - 2 * q) * factorial(n - k + q),
                                     2 ** (k - 2 * q) * factorial(n)), k - n))
    for j in range(0, (2 * n - k) // 2 + 1):
        total = Fraction(0)
        for i in range(q, k // 2 + 1):
            sign = -1 if (i + q) % 2 else 1
            total += (Fraction(sign * factorial(n - i), factorial(i - q) * factorial(k - 2 * i))
                      * tsu_ball_value(n, i, j))
        rhs = prefactor * PiScalar(total * factorial(n), -n)
        if mustar_pairing(n, k, q, j) != rhs:
            return False
    return True
