"""Mod-3 Hankel determinant tables by index-splitting recurrences.

gamma_mod3(n, p) and delta_mod3(n, p) return the determinants of the
order-n, offset-p Hankel matrices of c and d reduced mod 3, computed
without any elimination: both n and p are split into base-3 quotient
and remainder and the eighteen splitting identities rewrite the cell in
terms of cells with quotient indices.  Rows n in {-1, 0, 1} anchor the
recursion:

* gamma at n = 0 is 2 for p = 0 and 1 otherwise (the n = 0 value is a
  convention chosen to make the identities hold at the boundary, not
  the determinant of the empty matrix);
* delta at n = -1 is 1 for p = 0 and 0 otherwise, and delta at n = 0
  is 1 for every p;
* row n = 1 is the sequence itself: c_p, respectively d_p.

Each recursive call reduces n except for finitely many small cells, so
evaluation costs O(log n + log p) new cells on top of the memo.
"""

from __future__ import annotations

from functools import lru_cache

from .sequences import cantor_term, diff_term

# Cells per call to grid(); guards against accidentally huge tables.
DEFAULT_GRID_CELL_CAP = 4_000_000


def _sign(m: int) -> int:
    """(-1)**m as a mod-3 residue."""
    return 1 if m % 2 == 0 else 2


# lru_cache makes the memo; its locking is enough for concurrent use and
# the values are pure, so racing duplicate computations are harmless.
@lru_cache(maxsize=None)
def gamma_mod3(n: int, p: int) -> int:
    """Determinant mod 3 of the order-n Hankel matrix of c at offset p."""
    if n < 0 or p < 0:
        raise ValueError("need n >= 0 and p >= 0")
    if n == 0:
        return 2 if p == 0 else 1
    if n == 1:
        return cantor_term(p)
    m, r = divmod(n, 3)
    q, s = divmod(p, 3)
    pos, neg = _sign(m), _sign(m + 1)
    G, D = gamma_mod3, delta_mod3
    if r == 0:
        if s == 0:
            return (pos * G(m, q) ** 2 * D(m, q)
                    + neg * G(m, q) * G(m + 1, q) * D(m - 1, q)) % 3
        if s == 1:
            return (pos * G(m, q) * G(m, q + 1) * D(m, q)
                    + neg * G(m, q + 1) * G(m + 1, q) * D(m - 1, q)) % 3
        return pos * G(m, q + 1) ** 2 * D(m, q) % 3
    if r == 1:
        if s == 0:
            return (pos * G(m, q) * G(m + 1, q) * D(m, q)
                    + neg * G(m + 1, q) ** 2 * D(m - 1, q)) % 3
        if s == 1:
            return neg * G(m + 1, q) ** 2 * D(m - 1, q + 1) % 3
        return (pos * G(m, q + 1) * G(m + 1, q) * D(m, q + 1)
                + neg * G(m + 1, q) * G(m + 1, q + 1) * D(m - 1, q + 1)) % 3
    if s == 0:
        return pos * G(m + 1, q) ** 2 * D(m, q) % 3
    if s == 1:
        return neg * G(m + 1, q) ** 2 * D(m, q + 1) % 3
    return neg * G(m + 1, q + 1) ** 2 * D(m, q) % 3


@lru_cache(maxsize=None)
def delta_mod3(n: int, p: int) -> int:
    """Determinant mod 3 of the order-n Hankel matrix of d at offset p.

    Accepts n = -1, the boundary row the splitting identities evaluate.
    """
    if n < -1 or p < 0:
        raise ValueError("need n >= -1 and p >= 0")
    if n == -1:
        return 1 if p == 0 else 0
    if n == 0:
        return 1
    if n == 1:
        return diff_term(p) % 3
    m, r = divmod(n, 3)
    q, s = divmod(p, 3)
    pos, neg = _sign(m), _sign(m + 1)
    G, D = gamma_mod3, delta_mod3
    if r == 0:
        if s == 0:
            return (pos * G(m, q) * D(m, q) ** 2
                    + neg * G(m + 1, q) * D(m - 1, q) * D(m, q)) % 3
        if s == 1:
            return pos * G(m, q + 1) * D(m, q) ** 2 % 3
        return (pos * G(m, q + 1) * D(m, q) * D(m, q + 1)
                + neg * G(m + 1, q + 1) * D(m, q) * D(m - 1, q + 1)) % 3
    if r == 1:
        if s == 0:
            return neg * G(m + 1, q) * D(m, q) ** 2 % 3
        if s == 1:
            return pos * G(m + 1, q + 1) * D(m, q) ** 2 % 3
        return pos * G(m + 1, q) * D(m, q + 1) ** 2 % 3
    if s == 0:
        return (pos * G(m + 2, q) * D(m, q) ** 2
                + neg * G(m + 1, q) * D(m, q) * D(m + 1, q)) % 3
    if s == 1:
        return (pos * G(m + 2, q) * D(m, q) * D(m, q + 1)
                + neg * G(m + 1, q) * D(m, q + 1) * D(m + 1, q)) % 3
    return pos * G(m + 2, q) * D(m, q + 1) ** 2 % 3


def closed_form_p0(n: int) -> tuple[int, int]:
    """(gamma, delta) mod 3 in column p = 0, by residue of n mod 4.

    Residues 1 and 2 give (1, 2); residues 3 and 0 give (2, 1).
    """
    if n < 1:
        raise ValueError("closed forms cover n >= 1")
    return (1, 2) if n % 4 in (1, 2) else (2, 1)


def closed_form_p1(n: int) -> int:
    """The common value of gamma and delta mod 3 in column p = 1.

    Zero for odd n, 2 for n = 2 mod 4, and 1 for n = 0 mod 4.
    """
    if n < 1:
        raise ValueError("closed forms cover n >= 1")
    return (1, 0, 2, 0)[n % 4]


def grid(n_lo: int, n_hi: int, p_lo: int, p_hi: int,
         kind: str = "gamma", max_cells: int = DEFAULT_GRID_CELL_CAP) -> list[list[int]]:
    """Rectangular table of mod-3 values, rows n_lo..n_hi, columns p_lo..p_hi."""
    if n_hi < n_lo or p_hi < p_lo:
        raise ValueError("empty grid range")
    cells = (n_hi - n_lo + 1) * (p_hi - p_lo + 1)
    if cells > max_cells:
        raise ValueError(f"grid of {cells} cells exceeds the cap {max_cells}")
    value = gamma_mod3 if kind == "gamma" else delta_mod3
    if kind not in ("gamma", "delta"):
        raise ValueError(f"unknown matrix kind {kind!r}")
    return [[value(n, p) for p in range(p_lo, p_hi + 1)]
            for n in range(n_lo, n_hi + 1)]


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def column_period(p: int, k_hint: int = 0, kind: str = "gamma") -> int:
    """Minimal period of the column sequence n -> value(n, p), n >= 1.

    The candidate period 12 * 3**k (k the least exponent with
    p <= 3**(k+1), raised to k_hint if the caller asks for a wider
    window) is first confirmed on a window of three full candidate
    periods; failure there would falsify the periodicity bound and
    raises.  The returned minimal period always divides the candidate.
    """
    if p < 0 or k_hint < 0:
        raise ValueError("need p >= 0 and k_hint >= 0")
    value = gamma_mod3 if kind == "gamma" else delta_mod3
    if kind not in ("gamma", "delta"):
        raise ValueError(f"unknown matrix kind {kind!r}")
    k = k_hint
    while p > 3 ** (k + 1):
        k += 1
    candidate = 12 * 3 ** k
    window = [value(n, p) for n in range(1, 3 * candidate + 1)]
    if any(window[i] != window[i + candidate] for i in range(2 * candidate)):
        raise RuntimeError(
            f"column {p} is not {candidate}-periodic on the scanned window")
    for t in _divisors(candidate):
        if all(window[i] == window[i + t] for i in range(len(window) - t)):
            return t
    raise AssertionError("unreachable: candidate itself is a period")


def clear_caches() -> None:
    """Drop both memo tables (mainly for benchmarks and leak hunting)."""
    gamma_mod3.cache_clear()
    delta_mod3.cache_clear()
