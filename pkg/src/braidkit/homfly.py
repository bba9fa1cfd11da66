"""
HOMFLY-PT polynomial of a braid closure via the Hecke algebra and its Markov trace.

The braid group B_n maps to the Hecke algebra H_n, with basis {T_w : w in S_n},
by sigma_i -> T_i, where T_i^2 = z T_i + 1 (so T_i^-1 = T_i - z).  Right
multiplication acts on each pair {p, q = p s_i} with l(q) = l(p) + 1 as

    T_p T_i = T_q,        T_q T_i = z T_q + T_p,
    T_p T_i^-1 = T_q - z T_p,    T_q T_i^-1 = T_p.

The closure is evaluated with the normalised Markov trace N_m on H_m:

    N_1(1) = 1,   N_m(x) = delta N_{m-1}(x),   N_m(x T_{m-1} y) = v^-1 N_{m-1}(x y)

for x, y in H_{m-1}, delta = (v^-1 - v)/z.  Then P = v^writhe N_n(beta) satisfies
v^-1 P(L+) - v P(L-) = z P(L0) with P(unknot) = 1.  The trace is computed by
peeling one strand at a time: every T_w factors uniquely as
T_u T_{m-1} T_{m-2} ... T_k with u in S_{m-1}, so a level-m element becomes a
level-(m-1) element after multiplying by T_{m-2} ... T_k.  Each peeled strand
contributes exactly one factor, delta or v^-1, so the bookkeeping only records
how many deltas were taken.

Storage.  Keys are permutations packed into ints (``_FIELD`` bits per entry)
with the parity of their length in bit 0.  Coefficients are polynomials in z
packed as one int (Kronecker substitution).  A coefficient of T_w after ``k``
multiplications only has z-exponents congruent to ``k - l(w)`` mod 2, so only
every other power is stored: slot j holds the coefficient of z^(2j + e).
Slot width: every generator multiplication (including the ones applied while
tracing) at most doubles the total absolute coefficient mass, which bounds
signed words; for positive words all coefficients are nonnegative and the
one-dimensional representation T_i -> golden ratio at z = 1 bounds them by
phi^k, a much tighter bound.
"""

from __future__ import annotations

import itertools
import math
import os
import sys
import time
from dataclasses import dataclass

from .braid import BraidWord, closure_summary, is_positive
from .errors import OddSpread, ResourceLimit, ZeroPolynomial
from .polynomial import OneVarLaurent, TwoVarLaurent, kron_unpack, substitute

__all__ = [
    "Budget",
    "HeckeElement",
    "hecke_product",
    "homfly_vz",
    "homfly_az",
    "mfw_bound",
    "markov_trace",
    "DEFAULT_MAX_BASIS",
]

DEFAULT_MAX_BASIS = 5_000_000
DEFAULT_MAX_BYTES = int(os.environ.get("BRAIDKIT_MAX_BYTES", 3 * 2**30))

_FIELD = 4  # bits per permutation entry; n <= 15
_MASK = (1 << _FIELD) - 1
_LOG2_PHI = math.log2((1 + math.sqrt(5)) / 2)


@dataclass(frozen=True)
class Budget:
    """Caps for one HOMFLY evaluation.  ``seconds=None`` means no wall-clock cap."""

    max_basis: int = DEFAULT_MAX_BASIS
    seconds: float | None = None
    max_bytes: int = DEFAULT_MAX_BYTES


def encode_perm(perm) -> int:
    """Pack a permutation of 1..n (one-line notation) with its length parity in bit 0."""
    code = 0
    for pos, x in enumerate(perm):
        code |= x << (_FIELD * pos)
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return (code << 1) | (inversions & 1)


def decode_perm(key: int, n: int) -> tuple:
    code = key >> 1
    return tuple((code >> (_FIELD * pos)) & _MASK for pos in range(n))


def _slot_bits(word: BraidWord) -> int:
    if is_positive(word):
        # nonnegative coefficients; peeling strands in the trace never increases
        # the mass sum_w c_w(1) phi^l(w), which starts at most phi^k
        return math.ceil(word.word_length * _LOG2_PHI) + 3
    # total absolute mass at most doubles per generator, including the ones
    # multiplied in while tracing
    extra = (word.strands - 1) * (word.strands - 2) // 2
    return word.word_length + extra + 3


class HeckeElement:
    """Element of H_n in the permutation basis (see module docstring for the packing).

    ``steps`` is the number of generators multiplied in so far; it fixes the
    parity convention of every stored coefficient.
    """

    __slots__ = ("n", "bits", "coeffs", "steps")

    def __init__(self, n: int, bits: int, coeffs: dict | None = None, steps: int = 0):
        self.n = n
        self.bits = bits
        self.coeffs = coeffs if coeffs is not None else {encode_perm(range(1, n + 1)): 1}
        self.steps = steps

    def __len__(self):
        return len(self.coeffs)

    def coefficient(self, perm) -> OneVarLaurent:
        """Coefficient of T_perm as a polynomial in z."""
        key = encode_perm(perm)
        packed = self.coeffs.get(key, 0)
        parity = (self.steps ^ key) & 1
        return OneVarLaurent({2 * j + parity: c for j, c in enumerate(kron_unpack(packed, self.bits))}, "z")

    def mul_generator(self, letter: int) -> None:
        """Right-multiply in place by T_i (letter i > 0) or T_i^-1 (letter -i)."""
        _mul_generator(self.coeffs, letter, self.steps, self.bits)
        self.steps += 1


def _mul_generator(coeffs: dict, letter: int, steps: int, bits: int) -> None:
    i = abs(letter) - 1
    sh_a = 1 + _FIELD * i
    sh_b = sh_a + _FIELD
    positive = letter > 0
    zeros = []
    for key in list(coeffs):
        a = (key >> sh_a) & _MASK
        b = (key >> sh_b) & _MASK
        flip = ((a ^ b) << sh_a) | ((a ^ b) << sh_b) | 1
        partner = key ^ flip
        if a < b:
            p, q = key, partner
            A = coeffs[p]
            D = coeffs.get(q, 0)
        else:
            if partner in coeffs:
                continue  # handled from the ascent side of the pair
            p, q = partner, key
            A = 0
            D = coeffs[q]
        e_p = (steps ^ p) & 1
        if positive:
            new_q = A + ((D << bits) if e_p == 0 else D)
            new_p = D
        else:
            new_q = A
            new_p = D - ((A << bits) if e_p else A)
        coeffs[q] = new_q
        coeffs[p] = new_p
        if not new_q:
            zeros.append(q)
        if not new_p:
            zeros.append(p)
    for key in zeros:
        if coeffs.get(key, 1) == 0:
            del coeffs[key]


class _Clock:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.start = time.monotonic()

    def check(self, coeffs: dict, bits: int, steps: int, where: str) -> None:
        budget = self.budget
        size = len(coeffs)
        if size > budget.max_basis:
            raise ResourceLimit(f"basis size {size} exceeds cap {budget.max_basis} ({where})",
                                letters_done=steps, basis_size=size)
        # dict slot and key object, plus the mean size of a sample of coefficients
        sample = list(itertools.islice(coeffs.values(), 64))
        per_entry = 100 + sum(map(sys.getsizeof, sample)) // max(1, len(sample))
        if size * per_entry > budget.max_bytes:
            raise ResourceLimit(
                f"estimated coefficient storage {size * per_entry} B exceeds {budget.max_bytes} B ({where})",
                letters_done=steps, basis_size=size,
            )
        if budget.seconds is not None and time.monotonic() - self.start > budget.seconds:
            raise ResourceLimit(f"wall-clock cap of {budget.seconds} s exceeded ({where})",
                                letters_done=steps, basis_size=size)


def hecke_product(word: BraidWord, budget: Budget | None = None, _clock: _Clock | None = None) -> HeckeElement:
    """Image of ``word`` in H_n, honouring the caps in ``budget``."""
    if word.strands > _MASK:
        raise ResourceLimit(f"{word.strands} strands exceeds the supported maximum of {_MASK}")
    clock = _clock or _Clock(budget or Budget())
    elem = HeckeElement(word.strands, _slot_bits(word))
    for k, g in enumerate(word.letters):
        elem.mul_generator(g)
        clock.check(elem.coeffs, elem.bits, elem.steps, f"after letter {k + 1}")
    return elem


def _peel(coeffs: dict, m: int, steps: int, bits: int, clock: _Clock):
    """Split a level-m element into (delta part, v^-1 part), both at level m-1.

    Consumes ``coeffs``.  Returns ``(delta_part, delta_steps, vinv_part, vinv_steps)``.
    """
    by_k: dict = {}
    while coeffs:
        key, c = coeffs.popitem()
        code = key >> 1
        k = 1
        while (code >> (_FIELD * (k - 1))) & _MASK != m:
            k += 1
        low = code & ((1 << (_FIELD * (k - 1))) - 1)
        high = code >> (_FIELD * k)
        u = low | (high << (_FIELD * (k - 1)))
        parity = (key ^ (m - k)) & 1
        bucket = by_k.get(k)
        if bucket is None:
            bucket = by_k[k] = {}
        bucket[(u << 1) | parity] = c
    delta_part = by_k.pop(m, {})
    vinv_part: dict = {}
    for k, bucket in sorted(by_k.items()):
        # c_w T_w = c_w T_u (T_{m-1}) T_{m-2} ... T_k; parity constant of the bucket is steps - (m - k)
        s = steps - (m - k)
        for i in range(m - 2, k - 1, -1):
            _mul_generator(bucket, i, s, bits)
            s += 1
        clock.check(bucket, bits, s, f"tracing level {m}")
        if not vinv_part:
            vinv_part = bucket
            continue
        for key, c in bucket.items():
            total = vinv_part.get(key, 0) + c
            if total:
                vinv_part[key] = total
            else:
                vinv_part.pop(key, None)
    return delta_part, steps, vinv_part, steps - 1


def _graded_trace(elem: HeckeElement, clock: _Clock) -> dict:
    """Return {d: (packed z-polynomial, steps)} with N_n(elem) = sum_d c_d delta^d v^-(n-1-d)."""
    n = elem.n
    levels = {0: (elem.coeffs, elem.steps)}
    elem.coeffs = {}
    for m in range(n, 1, -1):
        nxt: dict = {}
        for d, (coeffs, steps) in sorted(levels.items()):
            delta_part, ds, vinv_part, vs = _peel(coeffs, m, steps, elem.bits, clock)
            for grade, part, st in ((d + 1, delta_part, ds), (d, vinv_part, vs)):
                if not part:
                    continue
                if grade in nxt:
                    have, have_steps = nxt[grade]
                    assert have_steps == st
                    for key, c in part.items():
                        total = have.get(key, 0) + c
                        if total:
                            have[key] = total
                        else:
                            have.pop(key, None)
                else:
                    nxt[grade] = (part, st)
        levels = nxt
    identity = encode_perm((1,))
    return {d: (coeffs.get(identity, 0), steps) for d, (coeffs, steps) in levels.items()}


def _delta_power(d: int) -> dict:
    out = {(0, 0): 1}
    for _ in range(d):
        nxt: dict = {}
        for (a, b), c in out.items():
            for (da, db), dc in (((-1, -1), 1), ((1, -1), -1)):
                key = (a + da, b + db)
                nxt[key] = nxt.get(key, 0) + c * dc
        out = {k: c for k, c in nxt.items() if c}
    return out


def _trace_to_poly(graded: dict, n: int, bits: int) -> dict:
    total: dict = {}
    for d, (packed, steps) in graded.items():
        if not packed:
            continue
        parity = steps & 1  # identity has even length
        zpoly = {2 * j + parity: c for j, c in enumerate(kron_unpack(packed, bits)) if c}
        weight = _delta_power(d)
        shift_v = -(n - 1 - d)
        for ez, c in zpoly.items():
            for (a, b), w in weight.items():
                key = (a + shift_v, b + ez)
                total[key] = total.get(key, 0) + c * w
    return {k: c for k, c in total.items() if c}


def markov_trace(elem: HeckeElement, budget: Budget | None = None) -> TwoVarLaurent:
    """Normalised trace N_n(elem) in (v, z), so N_n(1) = delta^(n-1).  Consumes ``elem``."""
    clock = _Clock(budget or Budget())
    graded = _graded_trace(elem, clock)
    return TwoVarLaurent(_trace_to_poly(graded, elem.n, elem.bits))


def homfly_vz(word: BraidWord, budget: Budget | None = None) -> TwoVarLaurent:
    """HOMFLY-PT polynomial P(v, z) of the closure of ``word``.

    Normalised by P(unknot) = 1 and v^-1 P(L+) - v P(L-) = z P(L0).  Raises
    :class:`ResourceLimit` instead of returning anything partial.
    """
    clock = _Clock(budget or Budget())
    elem = hecke_product(word, _clock=clock)
    graded = _graded_trace(elem, clock)
    trace = _trace_to_poly(graded, word.strands, elem.bits)
    writhe = closure_summary(word).writhe
    return TwoVarLaurent({(a + writhe, b): c for (a, b), c in trace.items()})


def homfly_az(word: BraidWord, budget: Budget | None = None) -> TwoVarLaurent:
    """P(a, z) = P(v, z) with v = a^-1."""
    p = homfly_vz(word, budget)
    out = substitute(p, {"v": OneVarLaurent({-1: 1}, "a")})
    return TwoVarLaurent(out.terms, ("a", "z"))


def mfw_bound(p: TwoVarLaurent) -> int:
    """Morton-Franks-Williams lower bound (d_plus - d_minus)/2 + 1 on braid index."""
    if p.is_zero():
        raise ZeroPolynomial("MFW bound of the zero polynomial")
    d_minus, d_plus = p.degrees(0)
    spread = d_plus - d_minus
    if spread % 2:
        raise OddSpread(f"v-degree spread {spread} is odd; not a HOMFLY-PT polynomial")
    return spread // 2 + 1
