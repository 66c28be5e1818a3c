"""Polynomials in the commuting symbols s and t, plus the classical families.

The symbol t has degree 1 and s has degree 2, so the monomial t^a s^b is
homogeneous of degree a + 2b.  Coefficients are PiScalar so that pi-weighted
polynomials (as produced by the dual-basis closed form) live in the same type
as the purely rational families below.

The three families carried here are the Taylor coefficients of

    log(1 + t x + s x^2)      -> f_k,
    1 / (1 + t x + s x^2)     -> p_k,
    -1 / (1 + t x + s x^2)^2  -> q_k,

together with the exact combinatorial identities used to validate the dual
basis closed form (unit-ball evaluations of t,s,u monomials with u = 4s - t^2,
and a binomial identity checked through its telescoping certificate).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

from .exactnum import PiScalar, Rational, ball_volume, binomial

# Monomial key: (t-exponent, s-exponent).
Monomial = tuple[int, int]

ScalarLike = Union[PiScalar, int, Fraction]


def _as_piscalar(value: ScalarLike) -> PiScalar:
    return value if isinstance(value, PiScalar) else PiScalar(value)


class STPoly:
    """Sparse polynomial in s and t with PiScalar coefficients.

    Immutable; zero coefficients are never stored.  Terms print in ascending
    total degree, ties broken by ascending s-exponent, which fixes a canonical
    text form.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, ScalarLike] | Iterable[tuple[Monomial, ScalarLike]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        data: dict[Monomial, PiScalar] = {}
        for mono, coeff in terms:
            coeff = _as_piscalar(coeff)
            acc = data.get(mono, _PS_ZERO) + coeff
            if acc:
                data[mono] = acc
            else:
                data.pop(mono, None)
        self._terms = data

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, value: ScalarLike) -> "STPoly":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, t_exp: int, s_exp: int, coeff: ScalarLike = 1) -> "STPoly":
        if t_exp < 0 or s_exp < 0:
            raise ValueError("negative exponent")
        return cls({(t_exp, s_exp): coeff})

    @classmethod
    def var_t(cls) -> "STPoly":
        return cls({(1, 0): 1})

    @classmethod
    def var_s(cls) -> "STPoly":
        return cls({(0, 1): 1})

    # -- inspection -----------------------------------------------------------

    def terms(self) -> tuple[tuple[Monomial, PiScalar], ...]:
        return tuple(sorted(self._terms.items(), key=lambda kv: (kv[0][0] + 2 * kv[0][1], kv[0][1])))

    def coefficient(self, t_exp: int, s_exp: int) -> PiScalar:
        return self._terms.get((t_exp, s_exp), _PS_ZERO)

    def degrees(self) -> set[int]:
        """Set of total degrees a + 2b present in the support."""
        return {a + 2 * b for a, b in self._terms}

    def homogeneous_component(self, degree: int) -> "STPoly":
        return STPoly({m: c for m, c in self._terms.items() if m[0] + 2 * m[1] == degree})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, STPoly):
            return self._terms == other._terms
        return NotImplemented

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "STPoly") -> "STPoly":
        if not isinstance(other, STPoly):
            return NotImplemented
        data = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = data.get(mono, _PS_ZERO) + coeff
            if acc:
                data[mono] = acc
            else:
                data.pop(mono, None)
        out = STPoly.__new__(STPoly)
        out._terms = data
        return out

    def __neg__(self) -> "STPoly":
        out = STPoly.__new__(STPoly)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other: "STPoly") -> "STPoly":
        if not isinstance(other, STPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "STPoly | ScalarLike") -> "STPoly":
        if isinstance(other, (int, Fraction, PiScalar)):
            coeff = _as_piscalar(other)
            if not coeff:
                return STPoly()
            out = STPoly.__new__(STPoly)
            out._terms = {m: c * coeff for m, c in self._terms.items()}
            return out
        if not isinstance(other, STPoly):
            return NotImplemented
        data: dict[Monomial, PiScalar] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                mono = (a1 + a2, b1 + b2)
                acc = data.get(mono, _PS_ZERO) + c1 * c2
                if acc:
                    data[mono] = acc
                else:
                    data.pop(mono, None)
        out = STPoly.__new__(STPoly)
        out._terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "STPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = STPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- rendering ------------------------------------------------------------

    def text(self) -> str:
        """E.g. 't^3 - 2*s*t'; pi-carrying coefficients are parenthesized."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (a, b), coeff in self.terms():
            sign, body = _term_text(a, b, coeff)
            if not parts:
                parts.append(body if sign > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if sign > 0 else f"- {body}")
        return " ".join(parts)

    def latex(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (a, b), coeff in self.terms():
            sign, body = _term_latex(a, b, coeff)
            if not parts:
                parts.append(body if sign > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if sign > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"STPoly({self.text()!r})"


_PS_ZERO = PiScalar()


def _vars_text(a: int, b: int) -> list[str]:
    out = []
    if b:
        out.append("s" if b == 1 else f"s^{b}")
    if a:
        out.append("t" if a == 1 else f"t^{a}")
    return out


def _split_sign(coeff: PiScalar) -> tuple[int, PiScalar]:
    # Sign convention for printing: sign of the leading (lowest pi-exponent) term.
    exp, lead = coeff.terms()[0]
    return (1, coeff) if lead > 0 else (-1, -coeff)


def _term_text(a: int, b: int, coeff: PiScalar) -> tuple[int, str]:
    sign, mag = _split_sign(coeff)
    variables = _vars_text(a, b)
    if not variables:
        return sign, mag.text() if mag.is_monomial() else f"({mag.text()})"
    if mag == PiScalar(1):
        return sign, "*".join(variables)
    exp, frac = mag.monomial() if mag.is_monomial() else (None, None)
    if exp == 0:
        return sign, "*".join([str(frac), *variables])
    return sign, "*".join([f"({mag.text()})", *variables])


def _term_latex(a: int, b: int, coeff: PiScalar) -> tuple[int, str]:
    sign, mag = _split_sign(coeff)
    variables = ""
    if b:
        variables += "s" if b == 1 else f"s^{{{b}}}"
    if a:
        variables += "t" if a == 1 else f"t^{{{a}}}"
    if not variables:
        return sign, mag.latex() if mag.is_monomial() else f"\\left({mag.latex()}\\right)"
    if mag == PiScalar(1):
        return sign, variables
    body = mag.latex() if mag.is_monomial() else f"\\left({mag.latex()}\\right)"
    return sign, f"{body}{variables}"


# ---------------------------------------------------------------------------
# Polynomial families
# ---------------------------------------------------------------------------

def p_poly(k: int) -> STPoly:
    """Coefficient of x^k in 1 / (1 + t x + s x^2).

    Closed form: p_k = (-1)^k * sum_i (-1)^i C(k-i, i) s^i t^(k-2i).  The
    geometric-series recurrence p_k = -t p_{k-1} - s p_{k-2} produces the
    same polynomial and is kept as a test oracle.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    sign = -1 if k % 2 else 1
    return STPoly({
        (k - 2 * i, i): Fraction(sign * (-1 if i % 2 else 1) * binomial(k - i, i))
        for i in range(k // 2 + 1)
    })


def q_poly(k: int) -> STPoly:
    """Coefficient of x^k in -1 / (1 + t x + s x^2)^2.

    Closed form: q_k = (-1)^(k+1) * sum_i (-1)^i (i+1) C(k+1-i, i+1) s^i t^(k-2i);
    equals minus the Cauchy square of the p-series.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    sign = 1 if k % 2 else -1
    return STPoly({
        (k - 2 * i, i): Fraction(sign * (-1 if i % 2 else 1) * (i + 1) * binomial(k + 1 - i, i + 1))
        for i in range(k // 2 + 1)
    })


def fu_poly(k: int) -> STPoly:
    """Coefficient of x^k in log(1 + t x + s x^2).

    Computed through (k+1) f_{k+1} = t p_k + 2 s p_{k-1} (differentiate the
    log series); the division by k+1 is exact.  f_0 = 0.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return STPoly()
    t, s = STPoly.var_t(), STPoly.var_s()
    acc = t * p_poly(k - 1)
    if k >= 2:
        acc = acc + 2 * (s * p_poly(k - 2))
    return acc * Fraction(1, k)


def check_fpq_relation(k: int) -> bool:
    """Exact check of -(4s - t^2) q_{k-1} + t p_k == (k+1)^2 f_{k+1}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    t, s = STPoly.var_t(), STPoly.var_s()
    u = 4 * s - t * t
    lhs = -(u * q_poly(k - 1)) + t * p_poly(k)
    rhs = (k + 1) ** 2 * fu_poly(k + 1)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Unit-ball evaluations and combinatorial identities
# ---------------------------------------------------------------------------

def tsu_ball_value(n: int, i: int, j: int) -> Rational:
    """Value of the monomial t^(2n-2i-2j) s^i u^j on the unit ball of C^n.

    Here u = 4s - t^2.  Closed form C(2j,j) C(2n-2i-2j, n-i-j) / C(n-i, j);
    agrees with expanding u^j and evaluating t^(2n-2m) s^m at C(2n-2m, n-m).
    """
    if n < 1 or i < 0 or j < 0:
        raise ValueError("need n >= 1 and i, j >= 0")
    if i + j > n:
        raise ValueError(f"i + j must not exceed n (got i={i}, j={j}, n={n})")
    return Fraction(binomial(2 * j, j) * binomial(2 * n - 2 * i - 2 * j, n - i - j), binomial(n - i, j))


def tsu_ball_value_oracle(n: int, i: int, j: int) -> Rational:
    """Same value via binomial expansion of u^j; independent of the closed form."""
    if i + j > n:
        raise ValueError("i + j must not exceed n")
    total = Fraction(0)
    for l in range(j + 1):
        m = i + l
        sign = -1 if (j - l) % 2 else 1
        total += sign * binomial(j, l) * 4 ** l * binomial(2 * n - 2 * m, n - m)
    return total


def mustar_pairing(n: int, k: int, q: int, j: int) -> PiScalar:
    """Pairing of the (k,q) dual basis functional with t^(2n-k-2j) u^j.

    Equals omega_{2n-k} (2n-k-2j)! (2j)! C(n-k+q, j) / pi^(2n-k).
    """
    if not (0 <= k <= 2 * n - 1 and max(0, k - n) <= q <= k // 2):
        raise ValueError(f"invalid index (k={k}, q={q}) for n={n}")
    if not (0 <= 2 * j <= 2 * n - k):
        raise ValueError(f"j out of range: need 0 <= 2j <= {2 * n - k}, got j={j}")
    value = Fraction(factorial(2 * n - k - 2 * j) * factorial(2 * j) * binomial(n - k + q, j))
    return ball_volume(2 * n - k) * PiScalar(value, -(2 * n - k))


def _combinat_term(r: int, m: int, i: int) -> int:
    return (-1 if i % 2 else 1) * binomial(2 * m + 2 * r - 2 * i, r - 2 * i) * binomial(m + r, i)


def combinat_identity(r: int, m: int) -> bool:
    """Exact check of 2^r C(m+r, r) == sum_i (-1)^i C(2m+2r-2i, r-2i) C(m+r, i).

    Stated for integers r >= 0 and m with 2m + r >= 0.
    """
    if r < 0 or 2 * m + r < 0:
        raise ValueError("need r >= 0 and 2m + r >= 0")
    rhs = sum(_combinat_term(r, m, i) for i in range(r // 2 + 1))
    return 2 ** r * binomial(m + r, r) == rhs


def wz_certificate_check(r: int, m: int, i: int) -> bool:
    """Termwise telescoping certificate behind combinat_identity.

    With F(m,i) the summand and
    G(m,i) = F(m,i) * 2i (2m+2r-2i+1)(m+r+1) / ((2m+r+1)(2m+r+2)),
    verifies -(m+r+1) F(m,i) + (m+1) F(m+1,i) == G(m,i+1) - G(m,i).
    """
    if r < 0 or 2 * m + r < 0 or i < 0:
        raise ValueError("indices outside the certificate domain")

    def g(mm: int, ii: int) -> Fraction:
        return Fraction(
            _combinat_term(r, mm, ii) * 2 * ii * (2 * mm + 2 * r - 2 * ii + 1) * (mm + r + 1),
            (2 * mm + r + 1) * (2 * mm + r + 2),
        )

    lhs = Fraction(-(m + r + 1) * _combinat_term(r, m, i) + (m + 1) * _combinat_term(r, m + 1, i))
    return lhs == g(m, i + 1) - g(m, i)
