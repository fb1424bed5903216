"""Exact Pade approximants of the Cantor power series and interval
certificates for how well their values approximate the Cantor numbers.

Everything rational is a fractions.Fraction; the only floating point in
the module is the final log-quotient enclosure, which goes through
mpmath's interval context so rounding is outward and the reported
exponent windows are genuine enclosures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from mpmath import iv

from .hankel import det_exact, hankel_matrix
from .sequences import cantor_term, diff_term

# Fallback ceiling for the adaptive tail-depth search.
MAX_TAIL_DEPTH = 1 << 20


def cantor_coefficients(count: int) -> list[int]:
    """The first count coefficients of f(x) = sum of c_n x^n."""
    return [cantor_term(k) for k in range(count)]


@dataclass(frozen=True)
class PadeApproximant:
    """The [order-1 / order] approximant of the Cantor series.

    numerator and denominator are integer polynomials (ascending
    coefficients, trailing zeros trimmed) with content 1 and a positive
    leading denominator coefficient.  The denominator never vanishes at
    0.  Its degree can fall below order when the tail of the solved
    coefficient vector is zero; order records the requested contact.
    """

    order: int
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.denominator[0] == 0:
            raise ValueError("denominator vanishes at 0")

    def value_at(self, x: Fraction) -> Fraction:
        return _poly_eval(self.numerator, x) / _poly_eval(self.denominator, x)


def _poly_eval(coeffs: tuple[int, ...], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over the rationals; raises on a singular system."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            raise ArithmeticError("singular linear system")
        a[k], a[pivot_row] = a[pivot_row], a[k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor:
                for j in range(k, n + 1):
                    a[i][j] -= factor * a[k][j]
    out = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        acc = a[k][n] - sum((a[k][j] * out[j] for j in range(k + 1, n)), Fraction(0))
        out[k] = acc / a[k][k]
    return out


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def pade(order: int) -> PadeApproximant:
    """Solve for the [order-1 / order] approximant exactly.

    The denominator is normalized to Q(0) = 1 while solving; the linear
    system forces coefficients order..2*order-1 of f*Q to vanish, and
    the numerator is the truncation of f*Q below degree order.  The
    system being solvable at every order is equivalent to the mod-3
    table having no zero in its first column, so a singular system here
    would falsify the arithmetic elsewhere in the package; it raises.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    c = cantor_coefficients(2 * order)
    matrix = [[Fraction(c[order + i - j - 1]) for j in range(order)]
              for i in range(order)]
    rhs = [Fraction(-c[order + i]) for i in range(order)]
    tail = _solve_linear(matrix, rhs)
    q = [Fraction(1)] + tail
    p = [sum((q[j] * c[k - j] for j in range(min(k, order) + 1)), Fraction(0))
         for k in range(order)]
    scale = lcm(*(x.denominator for x in p + q)) if p + q else 1
    p_int = [int(x * scale) for x in p]
    q_int = [int(x * scale) for x in q]
    content = gcd(*(abs(x) for x in p_int + q_int))
    p_int = [x // content for x in p_int]
    q_int = [x // content for x in q_int]
    q_trimmed = _trim(q_int)
    if q_trimmed[-1] < 0:
        p_int = [-x for x in p_int]
        q_trimmed = tuple(-x for x in q_trimmed)
    return PadeApproximant(order, _trim(p_int), q_trimmed)


@dataclass(frozen=True)
class PadeErrorReport:
    """Contact verification for one approximant.

    ok means: every error coefficient below degree 2*order vanished and
    the coefficient at exactly 2*order equals expected_leading, which is
    the ratio of the exact order+1 and order Hankel determinants of c
    in column 0."""

    order: int
    ok: bool
    first_mismatch: int | None
    leading: Fraction
    expected_leading: Fraction


def verify_pade_error(order: int) -> PadeErrorReport:
    """Expand f - P/Q as an exact rational series through degree 2*order."""
    approx = pade(order)
    depth = 2 * order + 1
    c = cantor_coefficients(depth)
    q = approx.denominator
    p = approx.numerator
    fq_minus_p = []
    for k in range(depth):
        acc = sum((Fraction(q[j] * c[k - j]) for j in range(min(k, len(q) - 1) + 1)),
                  Fraction(0))
        if k < len(p):
            acc -= p[k]
        fq_minus_p.append(acc)
    # divide by Q as a power series; Q(0) != 0 by construction
    error = []
    q0 = Fraction(q[0])
    for k in range(depth):
        acc = fq_minus_p[k]
        for j in range(1, min(k, len(q) - 1) + 1):
            acc -= q[j] * error[k - j]
        error.append(acc / q0)
    first_mismatch = next((k for k in range(2 * order) if error[k] != 0), None)
    expected = Fraction(det_exact(hankel_matrix("gamma", 0, order + 1)),
                        det_exact(hankel_matrix("gamma", 0, order)))
    ok = first_mismatch is None and error[2 * order] == expected
    return PadeErrorReport(order, ok, first_mismatch, error[2 * order], expected)


@dataclass(frozen=True)
class FunctionalEquationReport:
    degree: int
    ok: bool
    first_mismatch: int | None


def verify_functional_equation(degree: int) -> FunctionalEquationReport:
    """Check f(x) = (1 + x^2) f(x^3) coefficientwise through degree."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    c = cantor_coefficients(degree + 1)
    cube = [c[k // 3] if k % 3 == 0 else 0 for k in range(degree + 1)]
    rhs = [cube[k] + (cube[k - 2] if k >= 2 else 0) for k in range(degree + 1)]
    first = next((k for k in range(degree + 1) if c[k] != rhs[k]), None)
    return FunctionalEquationReport(degree, first is None, first)


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "RationalInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi


def _geometric_tail(b: int, start: int) -> Fraction:
    # sum over k >= start of b**-k
    return Fraction(b, b - 1) / Fraction(b) ** start


def cantor_number(b: int, terms: int) -> RationalInterval:
    """Enclosure of xi = sum of c_k b^-k from the first terms terms.

    The lower end is the exact partial sum; the upper end adds the full
    geometric tail bound, so enclosures at growing depth are nested.
    """
    if b < 2:
        raise ValueError("base must be at least 2")
    if terms < 1:
        raise ValueError("need at least one term")
    numerator = 0
    for k in range(terms):
        numerator = numerator * b + cantor_term(k)
    partial = Fraction(numerator, b ** (terms - 1))
    return RationalInterval(partial, partial + _geometric_tail(b, terms))


def _log_fraction(x: Fraction):
    return iv.log(iv.mpf(x.numerator) / iv.mpf(x.denominator))


def _exponent_interval(d_lo: Fraction, d_hi: Fraction, q: int) -> tuple[float, float]:
    """Enclosure of -log(distance)/log(q) over the distance interval.

    Outward-rounded interval logs at doubling precision until the
    window is narrower than 0.01."""
    prec = 64
    while True:
        old = iv.prec
        try:
            iv.prec = prec
            log_q = _log_fraction(Fraction(q))
            lo_iv = -_log_fraction(d_hi) / log_q
            hi_iv = -_log_fraction(d_lo) / log_q
            lo = float(iv.mpf(lo_iv.a).a)
            hi = float(iv.mpf(hi_iv.b).b)
        finally:
            iv.prec = old
        if hi - lo < 0.01:
            return lo, hi
        if prec > 1 << 16:
            raise RuntimeError("exponent interval failed to narrow")
        prec *= 2


@dataclass(frozen=True)
class ApproximationExponent:
    """How strongly the order-n approximant value p/q approaches xi.

    exponent_lo/hi enclose -log|xi - p/q| / log q.  degenerate entries
    (q = 1, or a value repeating an earlier row) carry no exponent."""

    order: int
    p: int
    q: int
    exponent_lo: float | None
    exponent_hi: float | None
    degenerate: bool
    note: str


def irrationality_estimates(b: int, max_order: int) -> list[ApproximationExponent]:
    """Evaluate each approximant at 1/b against the Cantor number.

    The distance |xi - p/q| is enclosed with exact rational arithmetic
    at a tail depth that adapts until the enclosure is positive and
    narrower than a thousandth of itself; only the final log quotient
    leaves exact arithmetic, through outward-rounded interval logs.
    """
    if b < 2:
        raise ValueError("base must be at least 2")
    out: list[ApproximationExponent] = []
    seen: dict[Fraction, int] = {}
    x = Fraction(1, b)
    for order in range(1, max_order + 1):
        value = pade(order).value_at(x)
        previous = seen.get(value)
        seen.setdefault(value, order)
        q = value.denominator
        p = value.numerator
        if previous is not None:
            out.append(ApproximationExponent(
                order, p, q, None, None, True,
                f"value repeats order {previous}"))
            continue
        if q == 1:
            out.append(ApproximationExponent(
                order, p, q, None, None, True, "integer value"))
            continue
        depth = 2 * order + 8
        while True:
            xi = cantor_number(b, depth)
            if value < xi.lo:
                d_lo, d_hi = xi.lo - value, xi.hi - value
            elif value > xi.hi:
                d_lo, d_hi = value - xi.hi, value - xi.lo
            else:
                d_lo = Fraction(0)
                d_hi = max(xi.hi - value, value - xi.lo)
            if d_lo > 0 and (d_hi - d_lo) * 1000 < d_lo:
                break
            depth *= 2
            if depth > MAX_TAIL_DEPTH:
                raise RuntimeError(
                    f"distance enclosure failed to separate at order {order}")
        lo, hi = _exponent_interval(d_lo, d_hi, q)
        out.append(ApproximationExponent(order, p, q, lo, hi, False, ""))
    return out


@dataclass(frozen=True)
class EtaReport:
    """Interval check of the linear relation between the two numbers.

    Splitting the sum over residues of n mod 3 and using the splitting
    of d into copies of c gives

        eta = 2 xi + (1/b) * b**3 * (xi - 1) + (1/b**2) * xi
            = (2 + b**2 + 1/b**2) xi - b**2,    xi = xi_{c, b**3},

    the b**3 factor coming from reindexing sum c_{n+1} (b**3)**-n.
    lhs encloses eta from its truncated sum, rhs the right-hand side
    from a truncated xi.  ok requires the enclosures to overlap and
    their combined width to stay below b**(2 - depth)."""

    b: int
    depth: int
    lhs: RationalInterval
    rhs: RationalInterval
    ok: bool


def eta_identity_check(b: int, depth: int) -> EtaReport:
    if b < 2:
        raise ValueError("base must be at least 2")
    if depth < 3:
        raise ValueError("depth must be at least 3")
    # A few terms beyond depth keep the combined width strictly below
    # the b**(2 - depth) budget; at exactly depth terms the d-side tail
    # bound alone already equals the budget when b = 2.
    cut = depth + 3
    numerator = 0
    for k in range(cut):
        numerator = numerator * b + diff_term(k)
    partial = Fraction(numerator, b ** (cut - 1))
    lhs = RationalInterval(partial, partial + 2 * _geometric_tail(b, cut))
    xi = cantor_number(b ** 3, depth // 3 + 3)
    factor = 2 + Fraction(b) ** 2 + Fraction(1, b) ** 2
    shift = Fraction(b) ** 2
    rhs = RationalInterval(factor * xi.lo - shift, factor * xi.hi - shift)
    tolerance = Fraction(1, b) ** (depth - 2)
    ok = lhs.overlaps(rhs) and lhs.width + rhs.width < tolerance
    return EtaReport(b, depth, lhs, rhs, ok)
