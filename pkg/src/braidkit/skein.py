"""
Brute-force HOMFLY-PT of a braid closure by resolving crossings.

This evaluator shares nothing with the Hecke-algebra route in
:mod:`braidkit.homfly` and serves as its oracle.  It uses the classical
descending-diagram recursion: traverse the components of the closed braid in a
fixed order from fixed base points; the first crossing met from below is
switched with the skein relation

    P(L+) = v^2 P(L-) + v z P(L0)
    P(L-) = v^-2 P(L+) - v^-1 z P(L0)

until every crossing is first met from above.  Such a diagram is an unlink of
``c`` components and evaluates to ``delta^(c-1)`` with ``delta = (v^-1 - v)/z``.
Results are memoised on the cyclically normalised word, since rotating a braid
word conjugates it and leaves the closure unchanged.
"""

from __future__ import annotations

from .braid import BraidWord
from .polynomial import TwoVarLaurent

__all__ = ["SkeinOracle", "homfly_skein"]

_DELTA = {(-1, -1): 1, (1, -1): -1}


def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _scaled_add(out: dict, p: dict, coeff: int, dv: int, dz: int) -> None:
    for (a, b), c in p.items():
        k = (a + dv, b + dz)
        s = out.get(k, 0) + coeff * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)


def _canonical_rotation(letters: tuple) -> tuple:
    if len(letters) < 2:
        return letters
    return min(letters[i:] + letters[:i] for i in range(len(letters)))


class SkeinOracle:
    """Memoising skein-tree evaluator.  One instance may be reused across many words."""

    def __init__(self):
        self._memo: dict = {}
        self._unlinks: dict = {1: {(0, 0): 1}}

    def __call__(self, word: BraidWord) -> TwoVarLaurent:
        raw = self._eval(word.letters, word.strands)
        return TwoVarLaurent(raw)

    def _unlink(self, c: int) -> dict:
        if c not in self._unlinks:
            self._unlinks[c] = _mul(self._unlink(c - 1), _DELTA)
        return self._unlinks[c]

    def _eval(self, letters: tuple, strands: int) -> dict:
        key = (_canonical_rotation(letters), strands)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        k, components = _first_ascending_crossing(letters, strands)
        if k is None:
            result = self._unlink(components)
        else:
            g = letters[k]
            switched = letters[:k] + (-g,) + letters[k + 1:]
            smoothed = letters[:k] + letters[k + 1:]
            p_switch = self._eval(switched, strands)
            p_smooth = self._eval(smoothed, strands)
            result: dict = {}
            if g > 0:
                _scaled_add(result, p_switch, 1, 2, 0)
                _scaled_add(result, p_smooth, 1, 1, 1)
            else:
                _scaled_add(result, p_switch, 1, -2, 0)
                _scaled_add(result, p_smooth, -1, -1, 1)
        self._memo[key] = result
        return result


def _first_ascending_crossing(letters: tuple, strands: int):
    """Traverse the closure; return (index of first crossing met from below, #components).

    Convention: in sigma_i (positive) the strand moving from position i to i+1
    passes over; in sigma_i^-1 it passes under.
    """
    seen = set()
    visited = [False] * strands
    components = 0
    for start in range(1, strands + 1):
        if visited[start - 1]:
            continue
        components += 1
        p = start
        while True:
            visited[p - 1] = True
            for k, g in enumerate(letters):
                i = g if g > 0 else -g
                if p == i:
                    over = g > 0
                    p = i + 1
                elif p == i + 1:
                    over = g < 0
                    p = i
                else:
                    continue
                if k not in seen:
                    seen.add(k)
                    if not over:
                        return k, None
            if p == start:
                break
    return None, components


def homfly_skein(word: BraidWord) -> TwoVarLaurent:
    """One-shot convenience wrapper around :class:`SkeinOracle`."""
    return SkeinOracle()(word)
