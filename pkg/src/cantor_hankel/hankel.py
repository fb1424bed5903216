"""Exact Hankel matrices of c and d, and brute-force determinant oracles.

Everything here is computed directly from matrix entries: fraction-free
elimination over the integers for exact determinants and Gaussian
elimination over GF(3) for the fast residue path.  No recurrence from
the rest of the package is used, which is what makes these functions
usable as oracles against those recurrences.

Matrix families, with u one of c, d and all indices starting at 1:

* hankel_matrix(kind, p, n): the n x n matrix (u_{p+i+j-2}), kind
  "gamma" for u = c and "delta" for u = d.
* stride3_matrix(kind, q, n): the n x n matrix (u_{q+3(i+j-2)}), the
  blocks that appear after conjugating a Hankel matrix by the mod-3
  row/column sorting permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sequences import cantor_term, diff_term


def _term(kind: str, i: int) -> int:
    if kind == "gamma":
        return cantor_term(i)
    if kind == "delta":
        return diff_term(i)
    raise ValueError(f"unknown matrix kind {kind!r}")


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; entries are row-major tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged rows")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def from_fn(cls, rows: int, cols: int, fn) -> "IntMatrix":
        return cls(tuple(tuple(fn(i, j) for j in range(cols)) for i in range(rows)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def delete_row(self, i: int) -> "IntMatrix":
        """Drop 1-based row i."""
        if not 1 <= i <= self.rows:
            raise IndexError("row out of range")
        return IntMatrix(self.entries[: i - 1] + self.entries[i:])

    def delete_col(self, j: int) -> "IntMatrix":
        """Drop 1-based column j."""
        if not 1 <= j <= self.cols:
            raise IndexError("column out of range")
        return IntMatrix(tuple(row[: j - 1] + row[j:] for row in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return IntMatrix(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        ))

    def scaled(self, factor: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(factor * a for a in row) for row in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.transpose().entries
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries
        ))


def block_matrix(grid: list[list[IntMatrix]]) -> IntMatrix:
    """Assemble a matrix from a rectangular grid of blocks."""
    rows: list[tuple[int, ...]] = []
    for band in grid:
        height = band[0].rows
        if any(b.rows != height for b in band):
            raise ValueError("block heights differ within a band")
        for i in range(height):
            rows.append(tuple(x for block in band for x in block.entries[i]))
    return IntMatrix(tuple(rows))


def hankel_matrix(kind: str, p: int, n: int) -> IntMatrix:
    """Order-n Hankel matrix of c (kind "gamma") or d ("delta") at offset p.

    n = 0 yields the empty matrix, whose determinant is 1.
    """
    if p < 0 or n < 0:
        raise ValueError("offset and order must be nonnegative")
    return IntMatrix.from_fn(n, n, lambda i, j: _term(kind, p + i + j))


def stride3_matrix(kind: str, q: int, n: int) -> IntMatrix:
    """Order-n matrix (u_{q+3(i+j-2)}): a Hankel matrix sampled in steps of 3."""
    if q < 0 or n < 0:
        raise ValueError("offset and order must be nonnegative")
    return IntMatrix.from_fn(n, n, lambda i, j: _term(kind, q + 3 * (i + j)))


def det_exact(m: IntMatrix) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination.

    Intermediate entries are minors of the input, so all divisions are
    exact and sizes stay polynomially bounded.
    """
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_mod3(m: IntMatrix) -> int:
    """Determinant mod 3 by Gaussian elimination over GF(3).

    Uses numpy row operations; every nonzero residue is its own inverse
    in GF(3), so no inverse table is needed.
    """
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = np.array(m.entries, dtype=np.int64) % 3
    det = 1
    for k in range(n):
        nonzero = np.nonzero(a[k:, k])[0]
        if nonzero.size == 0:
            return 0
        i = k + int(nonzero[0])
        if i != k:
            a[[k, i]] = a[[i, k]]
            det = -det % 3
        pivot = int(a[k, k])
        det = det * pivot % 3
        a[k] = a[k] * pivot % 3  # pivot row now starts with 1
        if k + 1 < n:
            a[k + 1:] = (a[k + 1:] - np.outer(a[k + 1:, k], a[k])) % 3
    return det % 3


def permutation_p(n: int) -> list[int]:
    """Column targets (1-based) of the mod-3 row/column sorting permutation.

    Position j of the result names which standard basis vector forms
    column j of the permutation matrix: first the indices congruent to 1
    mod 3, then 2 mod 3, then 0 mod 3, each in increasing order.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    n1, n2, n3 = (n + 2) // 3, (n + 1) // 3, n // 3
    return ([3 * i + 1 for i in range(n1)]
            + [3 * i + 2 for i in range(n2)]
            + [3 * i + 3 for i in range(n3)])


def permutation_matrix(n: int) -> IntMatrix:
    """The permutation of permutation_p(n) as an n x n 0/1 matrix."""
    targets = permutation_p(n)
    return IntMatrix.from_fn(n, n, lambda i, j: 1 if targets[j] == i + 1 else 0)


def conjugate_by_permutation(m: IntMatrix) -> IntMatrix:
    """P^t M P for the sorting permutation P of matching order."""
    p = permutation_matrix(m.rows)
    return p.transpose() @ m @ p


@dataclass(frozen=True)
class StructureReport:
    """Outcome of verify_structure: which identities held at (p, n)."""

    p: int
    n: int
    ok: bool
    checked: tuple[str, ...]
    failed: str | None = None


def _expected_stride3(kind: str, q: int, n: int) -> IntMatrix:
    """What the stride-3 block must equal, given how c and d split mod 3."""
    base, residue = divmod(q, 3)
    if kind == "gamma":
        if residue == 0:
            return hankel_matrix("gamma", base, n)
        if residue == 1:
            return IntMatrix.from_fn(n, n, lambda i, j: 0)
        return hankel_matrix("gamma", base, n)
    if residue == 0:
        return hankel_matrix("gamma", base, n).scaled(2)
    if residue == 1:
        return hankel_matrix("gamma", base + 1, n)
    return hankel_matrix("gamma", base, n)


def _block_layout(kind: str, p: int, n: int, r: int) -> IntMatrix:
    """The predicted block form of P^t H_{3n+r}^p P built from stride-3 blocks."""
    def K(q: int, order: int) -> IntMatrix:
        return stride3_matrix(kind, q, order)

    if r == 0:
        return block_matrix([
            [K(p, n), K(p + 1, n), K(p + 2, n)],
            [K(p + 1, n), K(p + 2, n), K(p + 3, n)],
            [K(p + 2, n), K(p + 3, n), K(p + 4, n)],
        ])
    if r == 1:
        w = n + 1
        return block_matrix([
            [K(p, w), K(p + 1, w).delete_col(w), K(p + 2, w).delete_col(w)],
            [K(p + 1, w).delete_row(w), K(p + 2, n), K(p + 3, n)],
            [K(p + 2, w).delete_row(w), K(p + 3, n), K(p + 4, n)],
        ])
    w = n + 1
    return block_matrix([
        [K(p, w), K(p + 1, w), K(p + 2, w).delete_col(w)],
        [K(p + 1, w), K(p + 2, w), K(p + 3, w).delete_col(w)],
        [K(p + 2, w).delete_row(w), K(p + 3, w).delete_row(w), K(p + 4, n)],
    ])


def verify_structure(p: int, n: int) -> StructureReport:
    """Check the structural identities behind the index-splitting step.

    At the given (p, n) this verifies, exactly over the integers:

    * the entrywise split d-Hankel = c-Hankel at p plus c-Hankel at p+2;
    * that conjugating H_{3n+r}^p (r = 0, 1, 2, both families) by the
      sorting permutation yields the predicted stride-3 block layout;
    * that each stride-3 block collapses to a plain Hankel matrix (or a
      scalar multiple, or zero) as dictated by the splitting of c and d;
    * for n >= 2, the two-by-two block determinant identity
      det [[G, G'], [G', -G]] = (-1)^n |G_n||D_n| - (-1)^n |G_{n+1}||D_{n-1}|
      with G = c-Hankel at p, G' = c-Hankel at p+1, D = d-Hankel at p.

    Checks run in a fixed order; the first failure is named and stops
    the run.
    """
    if p < 0 or n < 1:
        raise ValueError("need p >= 0 and n >= 1")
    checked: list[str] = []

    def fail(name: str) -> StructureReport:
        return StructureReport(p, n, False, tuple(checked), name)

    name = "difference-split"
    g0 = hankel_matrix("gamma", p, n)
    g2 = hankel_matrix("gamma", p + 2, n)
    if hankel_matrix("delta", p, n) != g0 + g2:
        return fail(name)
    checked.append(name)

    for kind in ("gamma", "delta"):
        for r in range(3):
            name = f"block-form-{kind}-r{r}"
            h = hankel_matrix(kind, p, 3 * n + r)
            if conjugate_by_permutation(h) != _block_layout(kind, p, n, r):
                return fail(name)
            checked.append(name)
        for q in range(p, p + 5):
            for order in (n, n + 1):
                name = f"stride3-collapse-{kind}-q{q}-n{order}"
                if stride3_matrix(kind, q, order) != _expected_stride3(kind, q, order):
                    return fail(name)
                checked.append(name)

    if n >= 2:
        name = "paired-determinant-split"
        g1 = hankel_matrix("gamma", p + 1, n)
        paired = block_matrix([[g0, g1], [g1, g0.scaled(-1)]])
        sign = (-1) ** n
        rhs = (sign * det_exact(g0) * det_exact(hankel_matrix("delta", p, n))
               - sign * det_exact(hankel_matrix("gamma", p, n + 1))
               * det_exact(hankel_matrix("delta", p, n - 1)))
        if det_exact(paired) != rhs:
            return fail(name)
        checked.append(name)

    return StructureReport(p, n, True, tuple(checked))
