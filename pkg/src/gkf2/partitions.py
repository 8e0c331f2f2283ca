"""Multiplicity-sequence bookkeeping for the cochain spaces.

A degree-m, weight-w cochain space splits into direct summands indexed by
sequences (k_3, k_4, ...) with sum(k_l) = m and sum((l - 2) k_l) = w; each
summand is the tensor product over l of the k_l-th exterior power of the
dual symmetric power of degree l.  After shifting the generator degrees down
by 2 these sequences are exactly the partitions of w with m parts, which is
what drives both the enumeration and the counting here.
"""

from __future__ import annotations

import re
from functools import total_ordering
from typing import Iterator, Optional


@total_ordering
class TypeSignature:
    """A multiplicity sequence (k_3, k_4, ...); absent degrees mean zero."""

    __slots__ = ("_mults",)

    def __init__(self, multiplicities):
        if isinstance(multiplicities, TypeSignature):
            self._mults = multiplicities._mults
            return
        if isinstance(multiplicities, dict):
            items = multiplicities.items()
        else:
            items = multiplicities
        mults = []
        for ell, k in sorted(items):
            if ell < 3:
                raise ValueError(f"generator degree {ell} < 3")
            if k < 0:
                raise ValueError("negative multiplicity")
            if k:
                mults.append((int(ell), int(k)))
        self._mults = tuple(mults)

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(self._mults)

    def multiplicity(self, ell: int) -> int:
        for l, k in self._mults:
            if l == ell:
                return k
        return 0

    @property
    def degree(self) -> int:
        return sum(k for _, k in self._mults)

    @property
    def weight(self) -> int:
        return sum((ell - 2) * k for ell, k in self._mults)

    def nonvanishing(self) -> bool:
        """True unless some exterior power exceeds its space: k_l <= l + 1."""
        return all(k <= ell + 1 for ell, k in self._mults)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._mults

    def generator_degrees(self) -> tuple[int, ...]:
        """Degrees with repetition, e.g. (3, 3, 6) for 3^2 6."""
        out = []
        for ell, k in self._mults:
            out.extend([ell] * k)
        return tuple(out)

    def compact(self) -> str:
        """Compact text form: powers for repeats, e.g. ``3^2 6``."""
        parts = []
        for ell, k in self._mults:
            parts.append(str(ell) if k == 1 else f"{ell}^{k}")
        return " ".join(parts) if parts else "()"

    @classmethod
    def parse(cls, text: str) -> "TypeSignature":
        text = text.strip().strip("()")
        mults: dict[int, int] = {}
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad type token {tok!r}")
            ell = int(m.group(1))
            mults[ell] = mults.get(ell, 0) + int(m.group(2) or 1)
        return cls(mults)

    def _lex_key(self) -> tuple[int, ...]:
        top = self._mults[-1][0] if self._mults else 2
        return tuple(self.multiplicity(ell) for ell in range(3, top + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TypeSignature):
            return NotImplemented
        return self._mults == other._mults

    def __lt__(self, other) -> bool:
        a, b = self._lex_key(), other._lex_key()
        n = max(len(a), len(b))
        a += (0,) * (n - len(a))
        b += (0,) * (n - len(b))
        return a < b

    def __hash__(self) -> int:
        return hash(self._mults)

    def __repr__(self) -> str:
        return f"TypeSignature({self.compact()!r})"


def _shifted_sequences(m: int, w: int) -> Iterator[tuple[int, ...]]:
    """Sequences (K_1, K_2, ...) with sum K_j = m and sum j*K_j = w.

    Recursion on the first slot: fixing K_1 and discounting every remaining
    part by one turns the tail into the same problem for (m - K_1, w - m).
    Emitted with K_1 descending, which makes the caller's output
    lexicographically descending in (k_3, k_4, ...).
    """
    if m == 0:
        if w == 0:
            yield ()
        return
    if w < m:
        return
    for k1 in range(m, max(0, 2 * m - w) - 1, -1):
        for tail in _shifted_sequences(m - k1, w - m):
            yield (k1,) + tail


def enumerate_types(m: int, w: int, nonvanishing_only: bool = False) -> list[TypeSignature]:
    """All type signatures of degree m and weight w, lexicographically
    descending on (k_3, k_4, ...); optionally filtered to summands whose
    exterior powers are all nonzero.

    The descending order reproduces the reference numbering used in the
    per-degree tables (types with more degree-3 generators come first).
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    out = []
    for seq in _shifted_sequences(m, w):
        sig = TypeSignature({pos + 3: k for pos, k in enumerate(seq) if k})
        if nonvanishing_only and not sig.nonvanishing():
            continue
        out.append(sig)
    return out


def count_partitions(m: int, w: int) -> int:
    """Number of partitions of w into exactly m parts (each >= 1).

    Computed through partitions of w - m into at most m parts, whose
    generating function is the product of 1/(1 - x^k) for k = 1..m; always
    equals the length of the raw enumeration.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if w < m:
        return 0
    return partition_series(m, w - m)[w - m]


def partition_series(m: int, max_c: int) -> list[int]:
    """Coefficients 0..max_c of prod_{k=1}^m 1/(1 - x^k): partitions into
    at most m parts."""
    coeffs = [1] + [0] * max_c
    for k in range(1, m + 1):
        for c in range(k, max_c + 1):
            coeffs[c] += coeffs[c - k]
    return coeffs
