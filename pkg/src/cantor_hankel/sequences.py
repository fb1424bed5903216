"""The Cantor sequence and its difference sequence.

The Cantor sequence c marks which indices survive in the ternary Cantor
construction: c_n = 1 exactly when the base-3 expansion of n avoids the
digit 1.  Three independent generators are provided (index recurrence,
base-3 automaton read most significant digit first, substitution fixed
point) so that each can be cross-checked against the others.

The difference sequence d is d_n = c_n + c_{n+2}; its Hankel matrices
show up as companions of those of c throughout the package.
"""

from __future__ import annotations

# sigma: a -> aba, b -> bbb.  The fixed point starting from "a" spells c
# with a = 1 and b = 0.
_SUBSTITUTION = {"a": "aba", "b": "bbb"}

# Two-state output automaton over base-3 digits, most significant digit
# first.  State "a" outputs 1, state "b" outputs 0; digit 1 is an
# absorbing jump to "b".
_STEP = {
    ("a", 0): "a", ("a", 1): "b", ("a", 2): "a",
    ("b", 0): "b", ("b", 1): "b", ("b", 2): "b",
}

# Resource guard for substitution_word; 3**16 letters is ~43 MB.
DEFAULT_WORD_CAP = 3 ** 16


def cantor_term(n: int) -> int:
    """c_n via the index recurrence c_3n = c_n, c_3n+1 = 0, c_3n+2 = c_n.

    Peeling base-3 digits from the low end unrolls the recurrence; any
    digit equal to 1 forces the value 0, and c_0 = 1 closes it.
    """
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    while n:
        n, digit = divmod(n, 3)
        if digit == 1:
            return 0
    return 1


def cantor_via_automaton(n: int) -> int:
    """c_n by running the two-state automaton over the digits of n."""
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    state = "a"
    for digit in _digits_msd_first(n):
        state = _STEP[state, digit]
    return 1 if state == "a" else 0


def substitution_word(k: int, max_len: int = DEFAULT_WORD_CAP) -> str:
    """The k-th iterate of the substitution on "a", a word of 3**k letters.

    Rejects k whose word would exceed max_len; the iterates are prefixes
    of each other, so a capped call never loses information that a
    smaller k would have produced.
    """
    if k < 0:
        raise ValueError("iteration count must be nonnegative")
    if 3 ** k > max_len:
        raise ValueError(f"word of length 3**{k} exceeds the cap {max_len}")
    word = "a"
    for _ in range(k):
        word = "".join(_SUBSTITUTION[letter] for letter in word)
    return word


def diff_term(n: int) -> int:
    """d_n = c_n + c_{n+2}, taking values in {0, 1, 2}."""
    return cantor_term(n) + cantor_term(n + 2)


def sequence_slice(kind: str, start: int, count: int) -> list[int]:
    """count consecutive terms of c or d beginning at index start."""
    if kind == "c":
        term = cantor_term
    elif kind == "d":
        term = diff_term
    else:
        raise ValueError(f"unknown sequence kind {kind!r}")
    if start < 0 or count < 0:
        raise ValueError("start and count must be nonnegative")
    return [term(start + i) for i in range(count)]


def _digits_msd_first(n: int) -> list[int]:
    if n == 0:
        return []
    digits = []
    while n:
        n, d = divmod(n, 3)
        digits.append(d)
    digits.reverse()
    return digits
