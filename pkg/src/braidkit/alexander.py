"""
Alexander polynomial of a braid closure, two independent ways, and the
exponent-sequence normal form used for L-space knots.

Burau route: with B the reduced Burau matrix of a braid on n strands,
    det(I - B) = (1 + t + ... + t^(n-1)) * Delta(t)   up to units +-t^k.
Negative letters have matrices with t^-1 entries; each is replaced by t times
its inverse so every entry stays a polynomial, and the determinant is taken of
t^m I - C where m counts negative letters.

HOMFLY route: Delta(s^2) = P(v = 1, z = s - 1/s).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, closure_summary
from .errors import NotAKnot, NotLSpaceForm, OddSExponent
from .polynomial import Laurent, OneVarLaurent, dense_divexact, dense_mul, dense_trim

__all__ = [
    "LSpaceAlexanderForm",
    "alexander_burau",
    "alexander_from_homfly",
    "to_lspace_form",
    "from_lspace_form",
    "normalize_alexander",
    "parse_exponents",
    "format_exponents",
]


def _dsub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return dense_trim(out)


def _dadd(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] += c
    return dense_trim(out)


# Blocks of the (polynomialised) reduced Burau generators.  Each entry is a
# dense polynomial in t.  Keys: "first", "middle", "last" for sigma_1,
# sigma_i (1 < i < n-1) and sigma_(n-1); the "neg_" versions are t * inverse.
_T = [0, 1]
_NT = [0, -1]
_ONE = [1]
_NONE = [-1]
_BLOCKS = {
    "first": [[_NT, _ONE], [[], _ONE]],
    "middle": [[_ONE, [], []], [_T, _NT, _ONE], [[], [], _ONE]],
    "last": [[_ONE, []], [_T, _NT]],
    "neg_first": [[_NONE, _ONE], [[], _T]],
    "neg_middle": [[_T, [], []], [_T, _NONE, _ONE], [[], [], _T]],
    "neg_last": [[_T, []], [_T, _NONE]],
}


def _right_multiply(mat: list[list[list[int]]], letter: int, n: int) -> None:
    """mat <- mat * (generator matrix), in place; only a few columns change."""
    i = abs(letter)
    size = n - 1
    neg = letter < 0
    if size == 1:
        # n = 2: sigma_1 -> (-t), inverse times t -> (-1)
        scale = _NONE if neg else _NT
        for row in mat:
            row[0] = dense_mul(row[0], scale)
        return
    if i == 1:
        kind, cols = "first", [0, 1]
    elif i == n - 1:
        kind, cols = "last", [size - 2, size - 1]
    else:
        kind, cols = "middle", [i - 2, i - 1, i]
    block = _BLOCKS[("neg_" if neg else "") + kind]
    ident = _T if neg else _ONE
    for row in mat:
        old = [row[c] for c in cols]
        for jj, c in enumerate(cols):
            acc: list[int] = []
            for kk in range(len(cols)):
                entry = block[kk][jj]
                if entry and old[kk]:
                    acc = _dadd(acc, dense_mul(old[kk], entry))
            row[c] = acc
        if neg:
            # columns outside the block are scaled by t
            for c in range(size):
                if c not in cols and row[c]:
                    row[c] = dense_mul(row[c], ident)


def _bareiss_det(mat: list[list[list[int]]]) -> list[int]:
    """Fraction-free determinant over Z[t]."""
    m = [list(map(list, row)) for row in mat]
    size = len(m)
    if size == 0:
        return [1]
    sign = 1
    prev = [1]
    for k in range(size - 1):
        pivot_row = next((r for r in range(k, size) if m[r][k]), None)
        if pivot_row is None:
            return []
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = _dsub(dense_mul(m[k][k], m[i][j]), dense_mul(m[i][k], m[k][j]))
                m[i][j] = dense_divexact(num, prev) if num else []
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return [sign * c for c in det]


def normalize_alexander(d: OneVarLaurent) -> OneVarLaurent:
    """Shift to a symmetric exponent range and fix the sign so that Delta(1) = 1."""
    if d.is_zero():
        raise ArithmeticError("Alexander polynomial came out zero")
    lo, hi = d.degrees()
    if (lo + hi) % 2:
        raise ArithmeticError(f"exponent range [{lo}, {hi}] cannot be centred")
    d = d.shift(-(lo + hi) // 2)
    value = d(1)
    if value not in (1, -1):
        raise ArithmeticError(f"Delta(1) = {value}, expected +-1")
    if value == -1:
        d = OneVarLaurent({e: -c for e, c in d.coefficients.items()}, d.var)
    if not d.is_symmetric():
        raise ArithmeticError(f"normalised Alexander polynomial is not symmetric")
    return d


def alexander_burau(word: BraidWord) -> OneVarLaurent:
    """Delta(t) of the closure of ``word`` from the reduced Burau representation."""
    if not closure_summary(word).is_knot:
        raise NotAKnot(f"closure of {word} is not a knot")
    n = word.strands
    if n == 1:
        return OneVarLaurent({0: 1})
    size = n - 1
    mat = [[_ONE if r == c else [] for c in range(size)] for r in range(size)]
    negatives = 0
    for g in word.letters:
        _right_multiply(mat, g, n)
        negatives += g < 0
    tm = [0] * negatives + [1]
    diff = [[_dsub(tm if r == c else [], mat[r][c]) for c in range(size)] for r in range(size)]
    det = _bareiss_det(diff)
    quotient = dense_divexact(det, [1] * n)
    return normalize_alexander(OneVarLaurent.from_dense(quotient))


def alexander_from_homfly(p: Laurent | int) -> OneVarLaurent:
    """Delta(t) from a knot's HOMFLY-PT polynomial P(v, z)."""
    if isinstance(p, int):
        return OneVarLaurent({0: p}) if p else OneVarLaurent()
    vi = p.variables.index("v") if "v" in p.variables else None
    zi = p.variables.index("z")
    s_terms: dict[int, int] = {}
    for exps, c in p.items():
        if vi is not None and len(exps) > 2:
            raise ValueError("expected a polynomial in v and z only")
        k = exps[zi]
        if k < 0:
            raise OddSExponent("negative z power: input is not a knot polynomial")
        # (s - 1/s)^k = sum_j binom(k, j) (-1)^j s^(k - 2j)
        binom = 1
        for j in range(k + 1):
            e = k - 2 * j
            s_terms[e] = s_terms.get(e, 0) + c * binom * (-1) ** j
            binom = binom * (k - j) // (j + 1)
    t_terms = {}
    for e, c in s_terms.items():
        if not c:
            continue
        if e % 2:
            raise OddSExponent(f"s^{e} survives the substitution; input is not a knot polynomial")
        t_terms[e // 2] = c
    return normalize_alexander(OneVarLaurent(t_terms))


@dataclass(frozen=True)
class LSpaceAlexanderForm:
    """Strictly decreasing exponents n_g > ... > n_0 = 0."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if not exps or exps[-1] != 0:
            raise NotLSpaceForm(f"sequence {exps} must end in 0")
        if any(a <= b for a, b in zip(exps, exps[1:])):
            raise NotLSpaceForm(f"sequence {exps} is not strictly decreasing")

    @property
    def genus(self) -> int:
        return len(self.exponents) - 1

    @property
    def degree(self) -> int:
        return self.exponents[0]

    def __str__(self):
        return format_exponents(self.exponents)


def from_lspace_form(form: LSpaceAlexanderForm) -> OneVarLaurent:
    g = form.genus
    terms = {0: (-1) ** g}
    # exponents are listed n_g, ..., n_0; n_i sits at index g - i
    for i in range(1, g + 1):
        n_i = form.exponents[g - i]
        sign = (-1) ** (g + i)
        terms[n_i] = terms.get(n_i, 0) + sign
        terms[-n_i] = terms.get(-n_i, 0) + sign
    return OneVarLaurent(terms)


def to_lspace_form(d: OneVarLaurent) -> LSpaceAlexanderForm:
    """Read off the exponent sequence, rejecting anything not of L-space shape."""
    if d.is_zero():
        raise NotLSpaceForm("zero polynomial")
    if not d.is_symmetric():
        raise NotLSpaceForm("polynomial is not symmetric")
    coeffs = d.coefficients
    nonneg = sorted((e for e in coeffs if e >= 0), reverse=True)
    if not nonneg or nonneg[-1] != 0:
        raise NotLSpaceForm("constant term is zero")
    expected = 1
    for e in nonneg:
        c = coeffs[e]
        if c != expected:
            raise NotLSpaceForm(f"coefficient {c} of t^{e}; expected {expected}")
        expected = -expected
    form = LSpaceAlexanderForm(tuple(nonneg))
    if from_lspace_form(form) != d:
        raise NotLSpaceForm("polynomial does not decode from its exponent sequence")
    return form


def parse_exponents(text: str) -> LSpaceAlexanderForm:
    """Parse the table format ``"12,11,8,7,5,4,3,2,0"``."""
    try:
        exps = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise NotLSpaceForm(f"not a comma-separated integer list: {text!r}") from None
    return LSpaceAlexanderForm(exps)


def format_exponents(exps) -> str:
    return ",".join(str(e) for e in exps)
