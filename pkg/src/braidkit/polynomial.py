"""
Exact Laurent polynomials with integer coefficients.

Polynomials are sparse maps from exponent tuples to nonzero Python ints, so
coefficients never overflow.  :class:`OneVarLaurent` and :class:`TwoVarLaurent`
are the two shapes used by the rest of the package; both are immutable and
hashable.

The module also carries a few dense helpers (lists of ints indexed by exponent)
that go through Kronecker substitution: a polynomial with small coefficients is
packed into one big integer by evaluating it at ``2**bits``, so products and
exact quotients run at the speed of CPython's big-int arithmetic.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

from .errors import InexactDivision, NotInvertible, PolynomialParseError, ZeroPolynomial

__all__ = [
    "Laurent",
    "OneVarLaurent",
    "TwoVarLaurent",
    "poly_arith",
    "v_degrees",
    "substitute",
    "parse_laurent",
    "kron_pack",
    "kron_unpack",
    "dense_mul",
    "dense_divexact",
    "dense_trim",
]


class Laurent:
    """Integer Laurent polynomial in the variables ``variables``."""

    __slots__ = ("_terms", "_vars", "_hash")
    nvars: int | None = None

    def __init__(self, terms: Mapping | None = None, variables: Iterable[str] = ("x",)):
        variables = tuple(variables)
        if self.nvars is not None and len(variables) != self.nvars:
            raise ValueError(f"{type(self).__name__} needs {self.nvars} variable names")
        clean = {}
        for exps, c in (terms or {}).items():
            if isinstance(exps, int):
                exps = (exps,)
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent {exps} does not match variables {variables}")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        self._vars = variables
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, terms: dict, variables: tuple):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._vars = variables
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int, variables: Iterable[str] | None = None):
        variables = tuple(variables) if variables is not None else cls._default_vars()
        zero = (0,) * len(variables)
        return cls._raw({zero: int(c)} if c else {}, variables)

    @classmethod
    def monomial(cls, exps, coeff: int = 1, variables: Iterable[str] | None = None):
        variables = tuple(variables) if variables is not None else cls._default_vars()
        if isinstance(exps, int):
            exps = (exps,)
        return cls({tuple(exps): coeff}, variables)

    @classmethod
    def _default_vars(cls):
        return ("x",)

    # basic protocol

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({(0,) * len(self._vars): other} if other else {})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r}, variables={self._vars})"

    def __str__(self):
        return format_laurent(self)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Laurent):
            if other._vars != self._vars:
                raise ValueError(f"variable mismatch: {self._vars} vs {other._vars}")
            return other
        if isinstance(other, int):
            return type(self).constant(other, self._vars)
        return None

    def __neg__(self):
        return type(self)._raw({e: -c for e, c in self._terms.items()}, self._vars)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return type(self)._raw(out, self._vars)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)._raw({e: c for e, c in out.items() if c}, self._vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            inv = self.inverse()
            return inv ** (-k)
        result = type(self).constant(1, self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Inverse of a unit, i.e. of a monomial with coefficient +-1."""
        if len(self._terms) != 1:
            raise NotInvertible(f"{self} is not a monomial")
        (e, c), = self._terms.items()
        if c not in (1, -1):
            raise NotInvertible(f"{self} has non-unit coefficient")
        return type(self)._raw({tuple(-x for x in e): c}, self._vars)

    # queries

    def _index(self, var: str | int) -> int:
        if isinstance(var, int):
            return var
        try:
            return self._vars.index(var)
        except ValueError:
            raise ValueError(f"{var!r} is not a variable of {self._vars}") from None

    def degrees(self, var: str | int = 0) -> tuple[int, int]:
        """(min, max) exponent of ``var`` over all terms."""
        if not self._terms:
            raise ZeroPolynomial("degrees of the zero polynomial are undefined")
        k = self._index(var)
        exps = [e[k] for e in self._terms]
        return min(exps), max(exps)

    def degree(self, var: str | int = 0) -> int:
        return self.degrees(var)[1]

    def min_degree(self, var: str | int = 0) -> int:
        return self.degrees(var)[0]

    def coefficient(self, exps) -> int:
        if isinstance(exps, int):
            exps = (exps,)
        return self._terms.get(tuple(exps), 0)

    def rename(self, *variables: str):
        return type(self)._raw(dict(self._terms), tuple(variables))

    def evaluate(self, values: Mapping[str, int]):
        """Evaluate at integer values; every variable must be given."""
        return substitute(self, values)


class OneVarLaurent(Laurent):
    __slots__ = ()
    nvars = 1

    def __init__(self, terms: Mapping | None = None, var: str = "t"):
        super().__init__(terms, (var,))

    @classmethod
    def _default_vars(cls):
        return ("t",)

    @property
    def var(self) -> str:
        return self._vars[0]

    @property
    def coefficients(self) -> dict[int, int]:
        return {e[0]: c for e, c in self._terms.items()}

    def shift(self, k: int) -> "OneVarLaurent":
        return type(self)._raw({(e[0] + k,): c for e, c in self._terms.items()}, self._vars)

    def is_symmetric(self) -> bool:
        return all(self._terms.get((-e[0],)) == c for e, c in self._terms.items())

    def to_dense(self) -> tuple[int, list[int]]:
        """(lowest exponent, coefficient list from that exponent upward)."""
        if not self._terms:
            return 0, []
        lo, hi = self.degrees()
        out = [0] * (hi - lo + 1)
        for (e,), c in self._terms.items():
            out[e - lo] = c
        return lo, out

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], low: int = 0, var: str = "t") -> "OneVarLaurent":
        return cls._raw({(low + i,): c for i, c in enumerate(coeffs) if c}, (var,))

    def __call__(self, value: int):
        return substitute(self, {self.var: value})


class TwoVarLaurent(Laurent):
    __slots__ = ()
    nvars = 2

    def __init__(self, terms: Mapping | None = None, variables: Iterable[str] = ("v", "z")):
        super().__init__(terms, variables)

    @classmethod
    def _default_vars(cls):
        return ("v", "z")


Number = Union[int, Laurent]


def _class_for(nvars: int):
    return {1: OneVarLaurent, 2: TwoVarLaurent}.get(nvars, Laurent)


def poly_arith(p: Number, q: Number, op: str):
    """Ring operation ``op`` in {'add', 'sub', 'mul'}."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def v_degrees(p: Laurent, var: str | int = 0) -> tuple[int, int]:
    """``(d_minus, d_plus)``: the min and max degree of the first variable (``v``)."""
    return p.degrees(var)


def _embed(value: Laurent, target: tuple[str, ...]) -> Laurent:
    idx = [target.index(v) for v in value.variables]
    terms = {}
    for e, c in value.items():
        full = [0] * len(target)
        for i, x in zip(idx, e):
            full[i] = x
        terms[tuple(full)] = c
    return _class_for(len(target))._raw(terms, target)


def substitute(p: Laurent, assignment: Mapping[str, Number]):
    """Substitute variables of ``p`` by ints or Laurent polynomials.

    Unassigned variables are kept.  The result lives in the variables of the
    images plus the kept ones, in first-seen order; if no variable survives an
    ``int`` is returned.  Negative powers require the image to be a unit
    (``+-1`` or ``+-x^k``), otherwise :class:`NotInvertible` is raised.
    """
    target: list[str] = []
    for v in p.variables:
        img = assignment.get(v, None)
        names = (v,) if img is None else (img.variables if isinstance(img, Laurent) else ())
        for name in names:
            if name not in target:
                target.append(name)
    target_t = tuple(target)
    if not target_t:
        total = 0
        for e, c in p.items():
            term = c
            for v, k in zip(p.variables, e):
                x = int(assignment[v])
                if k < 0:
                    if x not in (1, -1):
                        raise NotInvertible(f"{v} -> {x} cannot be raised to {k}")
                    k = -k
                term *= x**k
            total += term
        return total

    cls = _class_for(len(target_t))
    images = []
    for v in p.variables:
        img = assignment.get(v, None)
        if img is None:
            images.append(_embed(OneVarLaurent({1: 1}, v), target_t))
        elif isinstance(img, Laurent):
            images.append(_embed(img, target_t))
        else:
            images.append(cls.constant(int(img), target_t))

    cache: dict = {}

    def power(i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = images[i] ** k
        return cache[key]

    result = cls.constant(0, target_t)
    for e, c in p.items():
        term = cls.constant(c, target_t)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        result = result + term
    return result


# text format

_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^([A-Za-z_]\w*)(?:\^\(?(-?\d+)\)?)?$")


def format_laurent(p: Laurent) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p._terms, reverse=True):
        c = p._terms[e]
        factors = []
        for v, k in zip(p.variables, e):
            if k == 1:
                factors.append(v)
            elif k:
                factors.append(f"{v}^{k}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def parse_laurent(text: str, variables: Iterable[str] = ("v", "z")) -> Laurent:
    """Parse the output grammar of :func:`format_laurent` (e.g. ``"-v^4 + v^2*z^2 + 2*v^2"``)."""
    variables = tuple(variables)
    # protect the minus sign of negative exponents before splitting on +/-
    s = re.sub(r"\^\s*(\(?)\s*-", r"^\1~", text.strip())
    if not s:
        raise PolynomialParseError("empty polynomial")
    pieces = _TERM_SPLIT.split(s)
    if pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    terms: dict = {}
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        if not body:
            raise PolynomialParseError(f"dangling operator in {text!r}")
        coeff = -1 if sign == "-" else 1
        exps = [0] * len(variables)
        for factor in body.replace("~", "-").split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise PolynomialParseError(f"bad factor {factor!r} in {text!r}")
            name = m.group(1)
            if name not in variables:
                raise PolynomialParseError(f"unknown variable {name!r}; expected one of {variables}")
            exps[variables.index(name)] += int(m.group(2)) if m.group(2) is not None else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    if len(pieces) % 2:
        raise PolynomialParseError(f"dangling operator in {text!r}")
    cls = _class_for(len(variables))
    if cls is OneVarLaurent:
        return OneVarLaurent({e[0]: c for e, c in terms.items()}, variables[0])
    if cls is TwoVarLaurent:
        return TwoVarLaurent(terms, variables)
    return Laurent(terms, variables)


# dense helpers (Kronecker substitution)

def dense_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def kron_pack(coeffs: Iterable[int], bits: int) -> int:
    """Evaluate the polynomial with coefficient list ``coeffs`` at ``2**bits``."""
    n = 0
    for c in reversed(list(coeffs)):
        n = (n << bits) + c
    return n


def kron_unpack(n: int, bits: int) -> list[int]:
    """Inverse of :func:`kron_pack` for coefficients of absolute value below ``2**(bits-1)``."""
    base = 1 << bits
    half = base >> 1
    mask = base - 1
    out = []
    while n:
        d = n & mask
        if d >= half:
            d -= base
        out.append(d)
        n = (n - d) >> bits
    return out


def _maxabs(a: list[int]) -> int:
    return max((abs(c) for c in a), default=0)


def dense_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) == 1:
        return [a[0] * c for c in b]
    if len(b) == 1:
        return [b[0] * c for c in a]
    bits = _maxabs(a).bit_length() + _maxabs(b).bit_length() + min(len(a), len(b)).bit_length() + 2
    out = kron_unpack(kron_pack(a, bits) * kron_pack(b, bits), bits)
    out.extend([0] * (len(a) + len(b) - 1 - len(out)))
    return dense_trim(out)


def dense_divexact(a: list[int], b: list[int]) -> list[int]:
    """Quotient ``a / b`` of dense integer polynomials; raises if ``b`` does not divide ``a``."""
    a = dense_trim(list(a))
    b = dense_trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    if len(b) > len(a):
        raise InexactDivision("divisor has larger degree than dividend")
    if len(b) == 1:
        q = []
        for c in a:
            qq, r = divmod(c, b[0])
            if r:
                raise InexactDivision("coefficient not divisible by constant divisor")
            q.append(qq)
        return q
    deg_q = len(a) - len(b)
    # Mignotte: any factor q of a has |q|_inf <= 2^deg(q) * |a|_2
    bits = _maxabs(a).bit_length() + len(a).bit_length() + deg_q + 3
    big_a = kron_pack(a, bits)
    big_b = kron_pack(b, bits)
    qv, r = divmod(big_a, big_b)
    q = kron_unpack(qv, bits) if not r else None
    if q is not None:
        q.extend([0] * (deg_q + 1 - len(q)))
        if len(q) == deg_q + 1 and dense_mul(b, q) == a:
            return q
    raise InexactDivision("polynomial division leaves a remainder")
