"""Closure of the mod-3 determinant table under base-3 index splitting.

The object manipulated here is a symbolic polynomial over GF(3) whose
variables are shifted copies of three two-parameter streams:

* G: (n, p) -> gamma_mod3(n, p),
* D: (n, p) -> delta_mod3(n, p),
* F: (n, p) -> (-1)**n as a mod-3 residue.

A generator is S[a,b]J, the stream J read at (n + a, p + b); a stays in
{-1, 0, 1, 2} and b in {0, 1, 2}, which is closed under everything the
splitting produces.  F only depends on the parity of a, so its shifts
normalize to a in {0, 1}.

apply_t(i, j, e) rewrites "evaluate e at (3n + i, 3p + j)" as another
polynomial in shifted streams, using the eighteen splitting identities
for G and D plus a composition table that commutes a pending shift
through the index splitting.  Monomial exponents are capped with
x**3 = x, which every GF(3)-valued stream satisfies pointwise.

Iterating apply_t from a single stream and collecting distinct normal
forms gives a finite closure: the states of a deterministic automaton
with output that reads the base-3 digits of n and p in parallel, least
significant first, and lands on a state whose value at (0, 0) is the
table entry.  build_dfao packages that automaton; export/parse give it
a stable on-disk form.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

from . import engine

Generator = tuple[str, int, int]
Monomial = tuple[tuple[Generator, int], ...]
Terms = tuple[tuple[Monomial, int], ...]

# Largest closure the breadth-first search will accept before giving up.
DEFAULT_STATE_CAP = 1_000_000
STATE_CAP_ENV = "CANTOR_HANKEL_KERNEL_CAP"


def state_cap_from_env(default: int = DEFAULT_STATE_CAP) -> int:
    raw = os.environ.get(STATE_CAP_ENV)
    if raw is None:
        return default
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{STATE_CAP_ENV} must be a positive integer")
    return cap


def _norm_generator(sym: str, a: int, b: int) -> Generator:
    if sym == "F":
        return ("F", a % 2, 0)
    if sym not in ("G", "D"):
        raise ValueError(f"unknown stream symbol {sym!r}")
    if not (-1 <= a <= 2 and 0 <= b <= 2):
        raise ValueError(f"shift ({a}, {b}) leaves the closed generator family")
    return (sym, a, b)


def _cap_exponent(e: int) -> int:
    # x**3 = x pointwise for GF(3) values, so exponents live in {1, 2}.
    return e if e <= 2 else 2 - (e % 2)


@dataclass(frozen=True)
class KernelExpr:
    """Canonical polynomial over shifted streams; hashable, so usable as
    an automaton state."""

    terms: Terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def gen_str(g: Generator, e: int) -> str:
            sym, a, b = g
            core = sym if (a, b) == (0, 0) else f"S[{a},{b}]{sym}"
            return core if e == 1 else f"{core}^{e}"

        parts = []
        for mono, coeff in self.terms:
            body = "*".join(gen_str(g, e) for g, e in mono) or "1"
            parts.append(body if coeff == 1 else f"{coeff}*{body}")
        return " + ".join(parts)


def _make_expr(counter: dict[Monomial, int]) -> KernelExpr:
    return KernelExpr(tuple(sorted(
        (mono, c % 3) for mono, c in counter.items() if c % 3)))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    powers: dict[Generator, int] = {}
    for g, e in m1 + m2:
        powers[g] = powers.get(g, 0) + e
    return tuple(sorted((g, _cap_exponent(e)) for g, e in powers.items()))


def expr_add(e1: KernelExpr, e2: KernelExpr) -> KernelExpr:
    counter: dict[Monomial, int] = dict(e1.terms)
    for mono, c in e2.terms:
        counter[mono] = counter.get(mono, 0) + c
    return _make_expr(counter)


def expr_mul(e1: KernelExpr, e2: KernelExpr) -> KernelExpr:
    counter: dict[Monomial, int] = {}
    for m1, c1 in e1.terms:
        for m2, c2 in e2.terms:
            mono = _mono_mul(m1, m2)
            counter[mono] = counter.get(mono, 0) + c1 * c2
    return _make_expr(counter)


def generator_expr(sym: str, a: int = 0, b: int = 0) -> KernelExpr:
    mono: Monomial = ((_norm_generator(sym, a, b), 1),)
    return KernelExpr(((mono, 1),))


EXPR_ZERO = KernelExpr(())
EXPR_ONE = KernelExpr((((), 1),))
GAMMA = generator_expr("G")
DELTA = generator_expr("D")


def _mono(*gens: Generator) -> Monomial:
    powers: dict[Generator, int] = {}
    for g in gens:
        powers[g] = powers.get(g, 0) + 1
    return tuple(sorted((g, _cap_exponent(e)) for g, e in powers.items()))


def _poly(*monos: Monomial) -> KernelExpr:
    counter: dict[Monomial, int] = {}
    for m in monos:
        counter[m] = counter.get(m, 0) + 1
    return _make_expr(counter)


def _g(a: int = 0, b: int = 0) -> Generator:
    return ("G", a, b)


def _d(a: int = 0, b: int = 0) -> Generator:
    return ("D", a, b)


# (-1)**n and (-1)**(n+1) as generators.
_F0 = ("F", 0, 0)
_F1 = ("F", 1, 0)

# The eighteen splitting identities, keyed by (i, j, stream): the stream
# at (3n + i, 3p + j) equals the polynomial evaluated at (n, p).  Signs
# ride along as F factors so every monomial has coefficient 1.
SPLIT_RULES: dict[tuple[int, int, str], KernelExpr] = {
    (0, 0, "G"): _poly(_mono(_F0, _g(), _g(), _d()),
                       _mono(_F1, _g(), _g(1), _d(-1))),
    (1, 0, "G"): _poly(_mono(_F0, _g(), _g(1), _d()),
                       _mono(_F1, _g(1), _g(1), _d(-1))),
    (2, 0, "G"): _poly(_mono(_F0, _g(1), _g(1), _d())),
    (0, 1, "G"): _poly(_mono(_F0, _g(), _g(0, 1), _d()),
                       _mono(_F1, _g(0, 1), _g(1), _d(-1))),
    (1, 1, "G"): _poly(_mono(_F1, _g(1), _g(1), _d(-1, 1))),
    (2, 1, "G"): _poly(_mono(_F1, _g(1), _g(1), _d(0, 1))),
    (0, 2, "G"): _poly(_mono(_F0, _g(0, 1), _g(0, 1), _d())),
    (1, 2, "G"): _poly(_mono(_F0, _g(0, 1), _g(1), _d(0, 1)),
                       _mono(_F1, _g(1), _g(1, 1), _d(-1, 1))),
    (2, 2, "G"): _poly(_mono(_F1, _g(1, 1), _g(1, 1), _d())),
    (0, 0, "D"): _poly(_mono(_F0, _g(), _d(), _d()),
                       _mono(_F1, _g(1), _d(-1), _d())),
    (1, 0, "D"): _poly(_mono(_F1, _g(1), _d(), _d())),
    (2, 0, "D"): _poly(_mono(_F0, _g(2), _d(), _d()),
                       _mono(_F1, _g(1), _d(), _d(1))),
    (0, 1, "D"): _poly(_mono(_F0, _g(0, 1), _d(), _d())),
    (1, 1, "D"): _poly(_mono(_F0, _g(1, 1), _d(), _d())),
    (2, 1, "D"): _poly(_mono(_F0, _g(2), _d(), _d(0, 1)),
                       _mono(_F1, _g(1), _d(0, 1), _d(1))),
    (0, 2, "D"): _poly(_mono(_F0, _g(0, 1), _d(), _d(0, 1)),
                       _mono(_F1, _g(1, 1), _d(), _d(-1, 1))),
    (1, 2, "D"): _poly(_mono(_F0, _g(1), _d(0, 1), _d(0, 1))),
    (2, 2, "D"): _poly(_mono(_F0, _g(2), _d(0, 1), _d(0, 1))),
}


def apply_s(a: int, b: int, expr: KernelExpr) -> KernelExpr:
    """Shift every generator by (a, b): reading the expression at
    (n + a, p + b) instead of (n, p)."""
    counter: dict[Monomial, int] = {}
    for mono, coeff in expr.terms:
        powers: dict[Generator, int] = {}
        for (sym, ga, gb), e in mono:
            g = _norm_generator(sym, ga + a, gb + b)
            powers[g] = powers.get(g, 0) + e
        shifted = tuple(sorted((g, _cap_exponent(e)) for g, e in powers.items()))
        counter[shifted] = counter.get(shifted, 0) + coeff
    return _make_expr(counter)


def _split_generator(i: int, j: int, gen: Generator) -> KernelExpr:
    """Rewrite one generator read at (3n + i, 3p + j) over (n, p).

    Composing the split with the generator's own shift (a, b) first
    normalizes to an outer shift and an inner split with digits in
    range, then expands the inner split through SPLIT_RULES.
    """
    sym, a, b = gen
    row = i + a
    col = j + b
    inner_col = col if col <= 2 else col - 3
    outer_b = 0 if col <= 2 else 1
    if row == -1:
        outer_a, inner_row = -1, 2
    elif row <= 2:
        outer_a, inner_row = 0, row
    else:
        outer_a, inner_row = 1, row - 3
    if sym == "F":
        # Splitting n -> 3n + digit keeps parity for digits 0 and 2 and
        # flips it for 1; the outer shift then adds its own parity.
        parity = (inner_row % 2 + outer_a) % 2
        return generator_expr("F", parity, 0)
    base = SPLIT_RULES[inner_row, inner_col, sym]
    if (outer_a, outer_b) == (0, 0):
        return base
    return apply_s(outer_a, outer_b, base)


def apply_t(i: int, j: int, expr: KernelExpr) -> KernelExpr:
    """The digit step: rewrite expr read at (3n + i, 3p + j) over (n, p)."""
    if not (0 <= i <= 2 and 0 <= j <= 2):
        raise ValueError("digits must lie in {0, 1, 2}")
    out = EXPR_ZERO
    for mono, coeff in expr.terms:
        prod = EXPR_ONE
        for gen, e in mono:
            factor = _split_generator(i, j, gen)
            if e == 2:
                factor = expr_mul(factor, factor)
            prod = expr_mul(prod, factor)
        scaled = _make_expr({m: c * coeff for m, c in prod.terms})
        out = expr_add(out, scaled)
    return out


def evaluate_expr(expr: KernelExpr, n: int, p: int) -> int:
    """Value of the polynomial at (n, p), mod 3."""

    def gen_value(gen: Generator) -> int:
        sym, a, b = gen
        if sym == "F":
            return 1 if (n + a) % 2 == 0 else 2
        if sym == "G":
            return engine.gamma_mod3(n + a, p + b)
        return engine.delta_mod3(n + a, p + b)

    total = 0
    for mono, coeff in expr.terms:
        value = coeff
        for gen, e in mono:
            value = value * gen_value(gen) ** e % 3
        total += value
    return total % 3


_DIGIT_PAIRS = [(i, j) for i in range(3) for j in range(3)]


@dataclass(frozen=True)
class Closure:
    """All normal forms reachable from a start stream under digit steps.

    states are in discovery order (breadth first, digit pairs in
    lexicographic order), so the layout is deterministic.  witnesses[k]
    is a triple (m, r, s) certifying how state k was first reached:
    digits of r and s (least significant first, m of them) applied to
    the start stream, so state k evaluated at (n, p) equals the start
    stream at (3**m * n + r, 3**m * p + s).
    """

    start: KernelExpr
    states: tuple[KernelExpr, ...]
    witnesses: tuple[tuple[int, int, int], ...]
    transitions: tuple[tuple[int, ...], ...]


def kernel_closure(start: str = "gamma", cap: int | None = None) -> Closure:
    """Breadth-first closure from "gamma" or "delta" under all nine digit
    steps; raises if more than cap states appear."""
    if cap is None:
        cap = state_cap_from_env()
    return _closure_cached(start, cap)


# Closures are immutable and take seconds to build, so cache per process.
@lru_cache(maxsize=8)
def _closure_cached(start: str, cap: int) -> Closure:
    root = {"gamma": GAMMA, "delta": DELTA}.get(start)
    if root is None:
        raise ValueError(f"unknown start stream {start!r}")
    index: dict[KernelExpr, int] = {root: 0}
    states = [root]
    witnesses = [(0, 0, 0)]
    rows: list[tuple[int, ...]] = []
    frontier = 0
    while frontier < len(states):
        state = states[frontier]
        m, r, s = witnesses[frontier]
        row = []
        for i, j in _DIGIT_PAIRS:
            nxt = apply_t(i, j, state)
            k = index.get(nxt)
            if k is None:
                k = len(states)
                if k >= cap:
                    raise RuntimeError(f"closure exceeded the cap of {cap} states")
                index[nxt] = k
                states.append(nxt)
                witnesses.append((m + 1, r + 3 ** m * i, s + 3 ** m * j))
            row.append(k)
        rows.append(tuple(row))
        frontier += 1
    return Closure(root, tuple(states), tuple(witnesses), tuple(rows))


@dataclass(frozen=True)
class Dfao2D:
    """Deterministic automaton with output over paired base-3 digits.

    evaluate(n, p) feeds the digits of n and p least significant first
    (the shorter number padded with zeros) and returns the output of
    the final state.  Equality ignores the optional symbolic state
    annotations, so a parsed export compares equal to its source.
    """

    start: int
    outputs: tuple[int, ...]
    transitions: tuple[tuple[int, ...], ...]
    exprs: tuple[KernelExpr, ...] | None = field(default=None, compare=False)

    @property
    def n_states(self) -> int:
        return len(self.outputs)

    def step(self, state: int, digit_n: int, digit_p: int) -> int:
        return self.transitions[state][3 * digit_n + digit_p]

    def evaluate(self, n: int, p: int) -> int:
        if n < 0 or p < 0:
            raise ValueError("need n >= 0 and p >= 0")
        state = self.start
        while n or p:
            n, dn = divmod(n, 3)
            p, dp = divmod(p, 3)
            state = self.step(state, dn, dp)
        return self.outputs[state]


def build_dfao(start: str = "gamma", cap: int | None = None) -> Dfao2D:
    """Automaton whose state set is the digit-step closure and whose
    outputs are the state polynomials evaluated at (0, 0)."""
    closure = kernel_closure(start, cap)
    outputs = tuple(evaluate_expr(e, 0, 0) for e in closure.states)
    return Dfao2D(0, outputs, closure.transitions, closure.states)


def export_dfao(dfao: Dfao2D, fmt: str = "table") -> str:
    if fmt == "table":
        lines = ["dfao2d base3 lsd-first",
                 f"states {dfao.n_states}",
                 f"start {dfao.start}",
                 "outputs " + " ".join(str(o) for o in dfao.outputs)]
        for state, row in enumerate(dfao.transitions):
            for (i, j), target in zip(_DIGIT_PAIRS, row):
                lines.append(f"trans {state} {i} {j} {target}")
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        lines = ["digraph dfao2d {", "  rankdir=LR;"]
        for state, out in enumerate(dfao.outputs):
            shape = "doublecircle" if state == dfao.start else "circle"
            lines.append(f'  s{state} [label="s{state}/{out}", shape={shape}];')
        for state, row in enumerate(dfao.transitions):
            by_target: dict[int, list[str]] = {}
            for (i, j), target in zip(_DIGIT_PAIRS, row):
                by_target.setdefault(target, []).append(f"{i}{j}")
            for target in sorted(by_target):
                label = ",".join(by_target[target])
                lines.append(f'  s{state} -> s{target} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def parse_dfao_table(text: str) -> Dfao2D:
    """Inverse of export_dfao(..., "table"); symbolic annotations are not
    serialized, so the result carries none."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split() != ["dfao2d", "base3", "lsd-first"]:
        raise ValueError("not a dfao2d table export")
    header: dict[str, str] = {}
    body = []
    for ln in lines[1:]:
        key, _, rest = ln.partition(" ")
        if key in ("states", "start", "outputs"):
            header[key] = rest
        elif key == "trans":
            body.append(rest)
        else:
            raise ValueError(f"unexpected line {ln!r}")
    n_states = int(header["states"])
    start = int(header["start"])
    outputs = tuple(int(tok) for tok in header["outputs"].split())
    if len(outputs) != n_states:
        raise ValueError("output count disagrees with the state count")
    grid = [[-1] * 9 for _ in range(n_states)]
    for rest in body:
        state, i, j, target = (int(tok) for tok in rest.split())
        grid[state][3 * i + j] = target
    if any(t < 0 or t >= n_states for row in grid for t in row):
        raise ValueError("transition table is incomplete or out of range")
    return Dfao2D(start, outputs, tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class Dfao1D:
    """One-dimensional projection: digits of p only, n frozen."""

    start: int
    outputs: tuple[int, ...]
    transitions: tuple[tuple[int, int, int], ...]

    def evaluate(self, p: int) -> int:
        if p < 0:
            raise ValueError("need p >= 0")
        state = self.start
        while p:
            p, d = divmod(p, 3)
            state = self.transitions[state][d]
        return self.outputs[state]


def project_row(dfao: Dfao2D, n: int) -> Dfao1D:
    """Specialize the paired automaton to a fixed n.

    States are pairs (2-D state, digits of n consumed so far); once the
    digits of n are exhausted the n-track pads with zeros, so the
    second component saturates.  The output of a pair must be the value
    with the unconsumed part of n still applied, which needs the
    symbolic states, hence build_dfao input (not a parsed export).
    """
    if dfao.exprs is None:
        raise ValueError("projection needs the symbolic state annotations")
    if n < 0:
        raise ValueError("need n >= 0")
    digits = []
    rest = n
    while rest:
        rest, d = divmod(rest, 3)
        digits.append(d)
    depth = len(digits)

    index: dict[tuple[int, int], int] = {}
    pairs: list[tuple[int, int]] = []

    def intern(pair: tuple[int, int]) -> int:
        k = index.get(pair)
        if k is None:
            k = len(pairs)
            index[pair] = k
            pairs.append(pair)
        return k

    intern((dfao.start, 0))
    rows: list[tuple[int, int, int]] = []
    frontier = 0
    while frontier < len(pairs):
        state, consumed = pairs[frontier]
        dn = digits[consumed] if consumed < depth else 0
        nxt_consumed = min(consumed + 1, depth)
        rows.append(tuple(
            intern((dfao.step(state, dn, dp), nxt_consumed)) for dp in range(3)))
        frontier += 1
    outputs = tuple(
        evaluate_expr(dfao.exprs[state], n // 3 ** consumed, 0)
        for state, consumed in pairs)
    return Dfao1D(0, outputs, tuple(rows))
