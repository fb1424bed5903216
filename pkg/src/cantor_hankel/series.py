"""Purely periodic power series over GF(3).

A PeriodicSeries holds one minimal period of a coefficient stream
(a_n) with a_n in {0, 1, 2} and a_{n+t} = a_n for every n >= 0; as a
power series it is P(x) / (1 - x^t) with P the first-period polynomial.
The columns of the mod-3 Hankel determinant tables are streams of this
shape, and the operations here are exactly the ones needed to rebuild
a column of the table from columns with smaller offset: coefficientwise
(Hadamard) product, the two reindexing shifts, coefficient transport
x -> x^3 (which is cubing in characteristic 3), and base-3 interleaving.

The type never represents a preperiodic stream.  Any operation that
would create one (prepending a value that disagrees with the periodic
extension) fails loudly instead of widening the representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import engine


def _minimal_period(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    for t in range(1, n + 1):
        if n % t == 0 and coeffs == coeffs[:t] * (n // t):
            return coeffs[:t]
    raise AssertionError("unreachable: the full tuple is its own period")


@dataclass(frozen=True)
class PeriodicSeries:
    """One minimal period of a purely periodic GF(3) coefficient stream."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a periodic stream needs at least one coefficient")
        if any(c not in (0, 1, 2) for c in self.coeffs):
            raise ValueError("coefficients must be mod-3 residues")
        object.__setattr__(self, "coeffs", _minimal_period(tuple(self.coeffs)))

    @classmethod
    def constant(cls, value: int) -> "PeriodicSeries":
        return cls((value,))

    @property
    def period(self) -> int:
        return len(self.coeffs)

    def at(self, n: int) -> int:
        """Coefficient a_n; negative n reads the periodic extension."""
        return self.coeffs[n % self.period]

    def prefix(self, count: int) -> list[int]:
        return [self.at(i) for i in range(count)]

    def __add__(self, other: "PeriodicSeries") -> "PeriodicSeries":
        t = lcm(self.period, other.period)
        return PeriodicSeries(tuple((self.at(i) + other.at(i)) % 3 for i in range(t)))

    def hadamard(self, other: "PeriodicSeries") -> "PeriodicSeries":
        """Coefficientwise product; the bilinear glue of the column algebra."""
        t = lcm(self.period, other.period)
        return PeriodicSeries(tuple(self.at(i) * other.at(i) % 3 for i in range(t)))

    def shift_hat(self, k: int = 1) -> "PeriodicSeries":
        """Drop the first k coefficients (left shift by k)."""
        if k < 0:
            raise ValueError("shift distance must be nonnegative")
        k %= self.period
        return PeriodicSeries(self.coeffs[k:] + self.coeffs[:k])

    def shift_bar(self, prepend: int) -> "PeriodicSeries":
        """Prepend a coefficient (right shift), keeping pure periodicity.

        The prepended value must match what the periodic extension
        already has at index -1; anything else would create a
        preperiodic stream, which this type refuses to represent.
        """
        if prepend != self.coeffs[-1]:
            raise ValueError(
                f"prepending {prepend} to a stream whose extension has "
                f"{self.coeffs[-1]} at index -1 would break pure periodicity")
        return PeriodicSeries((prepend,) + self.coeffs[:-1])

    def frobenius_cube(self) -> "PeriodicSeries":
        """The series cubed: in characteristic 3, a(x)**3 = a(x**3).

        Coefficients move from index n to 3n and zeros fill the gaps,
        so the period triples before minimization.
        """
        out = [0] * (3 * self.period)
        for i, c in enumerate(self.coeffs):
            out[3 * i] = c
        return PeriodicSeries(tuple(out))

    def to_rational(self) -> "RationalForm":
        return RationalForm(self.coeffs, self.period)


@dataclass(frozen=True)
class RationalForm:
    """A periodic stream written as numerator / (1 - x^period)."""

    numerator: tuple[int, ...]
    period: int

    def __str__(self) -> str:
        return f"({_poly_str(self.numerator)})/(1 - x^{self.period})"


def _poly_str(coeffs: tuple[int, ...]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            x = "x" if i == 1 else f"x^{i}"
            parts.append(x if c == 1 else f"{c}{x}")
    return " + ".join(parts) if parts else "0"


def interleave3(a: PeriodicSeries, b: PeriodicSeries, c: PeriodicSeries) -> PeriodicSeries:
    """The series a(x^3) + x b(x^3) + x^2 c(x^3).

    Residue class r mod 3 of the output index reads operand r, so the
    output at 3n + r is operand r at n.
    """
    t = lcm(a.period, b.period, c.period)
    out = [0] * (3 * t)
    for i in range(t):
        out[3 * i] = a.at(i)
        out[3 * i + 1] = b.at(i)
        out[3 * i + 2] = c.at(i)
    return PeriodicSeries(tuple(out))


# Alternating sign streams: (-1)^n and (-1)^(n+1) as mod-3 residues.
SIGNS_EVEN = PeriodicSeries((1, 2))
SIGNS_ODD = PeriodicSeries((2, 1))
ALL_ONES = PeriodicSeries((1,))
ZERO = PeriodicSeries((0,))


def _column(value_fn, p: int) -> PeriodicSeries:
    k = 0
    while p > 3 ** (k + 1):
        k += 1
    candidate = 12 * 3 ** k
    window = [value_fn(n, p) for n in range(3 * candidate)]
    if any(window[i] != window[i + candidate] for i in range(2 * candidate)):
        raise RuntimeError(
            f"column {p} is not {candidate}-periodic on the scanned window")
    return PeriodicSeries(tuple(window[:candidate]))


def series_gamma(p: int) -> PeriodicSeries:
    """The stream n -> gamma_mod3(n, p), n >= 0, as a periodic series.

    The period bound 12 * 3**k is confirmed on a window of three full
    candidate periods before trusting it; the constructor then reduces
    to the minimal period.
    """
    return _column(engine.gamma_mod3, p)


def series_delta(p: int) -> PeriodicSeries:
    """The stream n -> delta_mod3(n, p), n >= 0, as a periodic series."""
    return _column(engine.delta_mod3, p)


def _product(*factors: PeriodicSeries) -> PeriodicSeries:
    out = factors[0]
    for f in factors[1:]:
        out = out.hadamard(f)
    return out


def assemble_gamma2() -> PeriodicSeries:
    """Rebuild the gamma column at p = 2 from columns at p = 0 and 1.

    The three residue classes of n feed three branch streams (products
    of lower columns against sign streams, via the splitting
    identities), each branch is cubed by transporting x -> x^3, and the
    results are interleaved.  Equality with series_gamma(2) is what the
    verification suite checks.
    """
    f0, f1 = series_gamma(0), series_gamma(1)
    g0, g1 = series_delta(0), series_delta(1)
    f0_next = f0.shift_hat(1)
    f1_next = f1.shift_hat(1)
    g1_prev = g1.shift_bar(engine.delta_mod3(-1, 1))
    branch0 = _product(SIGNS_EVEN, f1, f1, g0)
    branch1 = (_product(SIGNS_EVEN, f1, f0_next, g1)
               + _product(SIGNS_ODD, f0_next, f1_next, g1_prev))
    branch2 = _product(SIGNS_ODD, f1_next, f1_next, g0)
    return interleave3(branch0, branch1, branch2)


def assemble_delta2() -> PeriodicSeries:
    """Rebuild the delta column at p = 2 from columns at p = 0 and 1."""
    f0, f1 = series_gamma(0), series_gamma(1)
    g0, g1 = series_delta(0), series_delta(1)
    f0_next = f0.shift_hat(1)
    f0_next2 = f0.shift_hat(2)
    f1_next = f1.shift_hat(1)
    g1_prev = g1.shift_bar(engine.delta_mod3(-1, 1))
    branch0 = (_product(SIGNS_EVEN, f1, g0, g1)
               + _product(SIGNS_ODD, f1_next, g0, g1_prev))
    branch1 = _product(SIGNS_EVEN, f0_next, g1, g1)
    branch2 = _product(SIGNS_EVEN, f0_next2, g1, g1)
    return interleave3(branch0, branch1, branch2)
