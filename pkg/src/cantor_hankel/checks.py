"""Verification sweeps shared by the command-line verify report and the
acceptance tests.

Each function runs one family of identities over an explicit window and
returns a CheckResult whose detail string is deterministic, so the
assembled report is byte-stable run over run.  The sweeps deliberately
avoid the recurrence engine wherever the engine itself is on trial:
exact and mod-3 determinants always come from the elimination oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import engine, kernel, series
from .hankel import det_exact, det_mod3, hankel_matrix, verify_structure
from .pade import verify_functional_equation as _feq_report
from .pade import verify_pade_error


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        return f"{status} {self.name}: {self.detail}"


class _DetCache:
    """Memo for oracle determinants keyed by (kind, p, n, exact flag)."""

    def __init__(self) -> None:
        self._store: dict[tuple[str, int, int, bool], int] = {}

    def get(self, kind: str, p: int, n: int, exact: bool) -> int:
        key = (kind, p, n, exact)
        value = self._store.get(key)
        if value is None:
            m = hankel_matrix(kind, p, n)
            value = det_exact(m) if exact else det_mod3(m)
            self._store[key] = value
        return value


def oracle_equivalence(n_max: int = 40, p_max: int = 81) -> CheckResult:
    """Engine values against eliminated determinants, both families."""
    name = "oracle-equivalence"
    for n in range(1, n_max + 1):
        for p in range(p_max + 1):
            for kind, value in (("gamma", engine.gamma_mod3),
                                ("delta", engine.delta_mod3)):
                expected = det_mod3(hankel_matrix(kind, p, n))
                if value(n, p) != expected:
                    return CheckResult(
                        name, False,
                        f"first mismatch {kind} at n={n} p={p}: engine "
                        f"{value(n, p)}, determinant {expected}")
    return CheckResult(name, True, f"1 <= n <= {n_max}, 0 <= p <= {p_max}, both families")


def structure_identities(n_max: int = 5, p_max: int = 5) -> CheckResult:
    name = "structure-identities"
    for n in range(1, n_max + 1):
        for p in range(p_max + 1):
            report = verify_structure(p, n)
            if not report.ok:
                return CheckResult(
                    name, False, f"{report.failed} fails at n={n} p={p}")
    return CheckResult(name, True, f"1 <= n <= {n_max}, 0 <= p <= {p_max}")


def _rule_value(expr: kernel.KernelExpr, n: int, p: int,
                cache: _DetCache, exact: bool) -> int:
    """Evaluate a splitting identity's right side with oracle determinants.

    With exact=True the F generators contribute literal signs and the
    result is an integer; otherwise everything is reduced mod 3.
    """
    total = 0
    for mono, coeff in expr.terms:
        if exact and coeff != 1:
            raise AssertionError("splitting identities carry unit coefficients")
        value = coeff
        for (sym, a, b), e in mono:
            if sym == "F":
                base = 1 if (n + a) % 2 == 0 else (-1 if exact else 2)
            else:
                kind = "gamma" if sym == "G" else "delta"
                base = cache.get(kind, p + b, n + a, exact)
            value *= base ** e
        total += value
    return total if exact else total % 3


def splitting_exact(n_lo: int = 2, n_hi: int = 8, p_max: int = 27) -> CheckResult:
    """The nine c-family splitting identities as integer equalities."""
    name = "splitting-identities-exact"
    cache = _DetCache()
    for n in range(n_lo, n_hi + 1):
        for p in range(p_max + 1):
            for (i, j, sym), rule in sorted(kernel.SPLIT_RULES.items()):
                if sym != "G":
                    continue
                lhs = cache.get("gamma", 3 * p + j, 3 * n + i, True)
                rhs = _rule_value(rule, n, p, cache, exact=True)
                if lhs != rhs:
                    return CheckResult(
                        name, False,
                        f"rule ({i},{j}) fails at n={n} p={p}: {lhs} != {rhs}")
    return CheckResult(
        name, True, f"9 identities, {n_lo} <= n <= {n_hi}, 0 <= p <= {p_max}")


def splitting_mod3(n_lo: int = 2, n_hi: int = 8, p_max: int = 27) -> CheckResult:
    """The nine d-family splitting identities mod 3."""
    name = "splitting-identities-mod3"
    cache = _DetCache()
    for n in range(n_lo, n_hi + 1):
        for p in range(p_max + 1):
            for (i, j, sym), rule in sorted(kernel.SPLIT_RULES.items()):
                if sym != "D":
                    continue
                lhs = cache.get("delta", 3 * p + j, 3 * n + i, False)
                rhs = _rule_value(rule, n, p, cache, exact=False)
                if lhs != rhs:
                    return CheckResult(
                        name, False,
                        f"rule ({i},{j}) fails at n={n} p={p}: {lhs} != {rhs}")
    return CheckResult(
        name, True, f"9 identities, {n_lo} <= n <= {n_hi}, 0 <= p <= {p_max}")


def closed_forms(n_max: int = 2000) -> CheckResult:
    name = "closed-forms"
    for n in range(1, n_max + 1):
        expected = engine.closed_form_p0(n)
        got = (engine.gamma_mod3(n, 0), engine.delta_mod3(n, 0))
        if got != expected:
            return CheckResult(
                name, False, f"column 0 pattern breaks at n={n}: {got}")
        common = engine.closed_form_p1(n)
        got1 = (engine.gamma_mod3(n, 1), engine.delta_mod3(n, 1))
        if got1 != (common, common):
            return CheckResult(
                name, False, f"column 1 pattern breaks at n={n}: {got1}")
    return CheckResult(name, True, f"columns 0 and 1, n <= {n_max}")


# The four printed column fractions: numerator coefficients and period.
PRINTED_COLUMNS = {
    ("gamma", 0): ((2, 1, 1, 2), 4),
    ("gamma", 1): ((1, 0, 2, 0), 4),
    ("delta", 0): ((1, 2, 2, 1), 4),
    ("delta", 1): ((1, 0, 2, 0), 4),
}


def series_identities() -> CheckResult:
    """Printed fractions at p = 0, 1 and the column-2 reconstruction."""
    name = "series-identities"
    for (kind, p), (coeffs, period) in sorted(PRINTED_COLUMNS.items()):
        built = series.series_gamma(p) if kind == "gamma" else series.series_delta(p)
        if built.coeffs != coeffs or built.period != period:
            return CheckResult(
                name, False, f"{kind} column {p} is {built.coeffs}, not {coeffs}")
    if series.assemble_gamma2() != series.series_gamma(2):
        return CheckResult(name, False, "gamma column 2 reconstruction mismatch")
    if series.assemble_delta2() != series.series_delta(2):
        return CheckResult(name, False, "delta column 2 reconstruction mismatch")
    return CheckResult(name, True,
                       "columns 0, 1 match the fractions; column 2 reassembles")


def period_bounds(k_values: tuple[int, ...] = (0, 1, 2)) -> CheckResult:
    """Minimal periods divide 12 * 3**k on each covered offset band."""
    name = "period-bounds"
    for k in k_values:
        for p in range(3 ** k + 1, 3 ** (k + 1) + 1):
            bound = 12 * 3 ** k
            t = engine.column_period(p)
            if bound % t:
                return CheckResult(
                    name, False, f"column {p}: minimal period {t} does not divide {bound}")
    bands = ", ".join(f"k={k}" for k in k_values)
    return CheckResult(name, True, f"offset bands {bands}")


def kernel_soundness(window: int = 8, cap: int | None = None) -> CheckResult:
    """Closure elements against the engine subsequences they stand for."""
    name = "kernel-soundness"
    sizes = {}
    for start, base in (("gamma", engine.gamma_mod3), ("delta", engine.delta_mod3)):
        closure = kernel.kernel_closure(start, cap)
        sizes[start] = len(closure.states)
        for state, (m, r, s) in zip(closure.states, closure.witnesses):
            step = 3 ** m
            for n in range(window + 1):
                for p in range(window + 1):
                    if (kernel.evaluate_expr(state, n, p)
                            != base(step * n + r, step * p + s)):
                        return CheckResult(
                            name, False,
                            f"{start} state with witness ({m},{r},{s}) "
                            f"disagrees at n={n} p={p}")
    return CheckResult(
        name, True,
        f"closures gamma={sizes['gamma']} delta={sizes['delta']} states, "
        f"pointwise n,p <= {window}")


def dfao_grid(n_max: int = 96, p_max: int = 127) -> CheckResult:
    """The emitted automaton against the engine over the display window."""
    name = "dfao-grid"
    dfao = kernel.build_dfao("gamma")
    for n in range(1, n_max + 1):
        for p in range(p_max + 1):
            if dfao.evaluate(n, p) != engine.gamma_mod3(n, p):
                return CheckResult(name, False, f"mismatch at n={n} p={p}")
    return CheckResult(name, True, f"1 <= n <= {n_max}, 0 <= p <= {p_max}")


def pade_error_law(max_order: int = 12) -> CheckResult:
    name = "pade-error-law"
    for order in range(1, max_order + 1):
        report = verify_pade_error(order)
        if not report.ok:
            return CheckResult(
                name, False,
                f"order {order}: first mismatch degree {report.first_mismatch}, "
                f"leading {report.leading} vs {report.expected_leading}")
    return CheckResult(name, True, f"orders 1..{max_order}")


def functional_equation(degree: int = 3000) -> CheckResult:
    name = "functional-equation"
    report = _feq_report(degree)
    if not report.ok:
        return CheckResult(
            name, False, f"first mismatch at degree {report.first_mismatch}")
    return CheckResult(name, True, f"through degree {degree}")


def default_suite() -> list[CheckResult]:
    """The identity suite behind the verify subcommand, fixed windows."""
    return [
        oracle_equivalence(20, 27),
        structure_identities(4, 4),
        splitting_exact(2, 5, 8),
        splitting_mod3(2, 5, 8),
        closed_forms(2000),
        series_identities(),
        period_bounds((0, 1, 2)),
        kernel_soundness(8),
        dfao_grid(96, 127),
        pade_error_law(8),
        functional_equation(600),
    ]
