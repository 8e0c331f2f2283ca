"""Concrete cochain spaces: wedge monomials of dual generators, the sl(2)
action on them, and explicit bases of the invariant (relative) subspaces.

A dual generator zbar(r, R) pairs with x^r y^(R-r) / (r! (R-r)!); its
H-weight is 2r - R and its grading weight is R - 2.  The action on cochains
is the derivation extension of

    H . zbar(r, R) = (2r - R) zbar(r, R)
    X . zbar(r, R) = (R - r)  zbar(r + 1, R)
    Y . zbar(r, R) = r        zbar(r - 1, R)

which satisfies [H, X] = 2X, [H, Y] = -2Y, [X, Y] = H.  An H-weight-zero
cochain killed by X is a highest weight vector of weight zero, hence spans a
trivial summand and is automatically killed by Y; so the invariants of a
type summand are exactly the kernel of X restricted to the H-weight-zero
monomial span, which is a far smaller linear system than imposing all three
conditions on the whole space.

Internally a generator is encoded as the integer (R << 8) | r so that the
natural integer order is the canonical factor order (R ascending, then r),
and a monomial is a strictly increasing tuple of encodings.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, NamedTuple, Optional, Sequence

from gmpy2 import mpq

from . import sl2rep
from .exactlin import SparseMatrix, SparseVector, kernel_basis_with_pivots
from .partitions import TypeSignature, enumerate_types


def _enc(r: int, big_r: int) -> int:
    return (big_r << 8) | r


def _dec(g: int) -> tuple[int, int]:
    return g & 0xFF, g >> 8


class DualGenerator(NamedTuple):
    """zbar(r, R): the dual basis element with lower index r, degree R."""

    r: int
    R: int

    @property
    def weight(self) -> int:
        return self.R - 2

    @property
    def h_weight(self) -> int:
        return 2 * self.r - self.R

    def __str__(self) -> str:
        return f"z({self.r},{self.R})"


class WedgeMonomial:
    """Canonical wedge of dual generators: strictly increasing factors."""

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[DualGenerator]):
        fs = tuple(DualGenerator(*f) for f in factors)
        for g in fs:
            if not (0 <= g.r <= g.R):
                raise ValueError(f"bad generator {g}")
            if g.R < 3:
                raise ValueError("relative complex has generators of degree >= 3")
        enc = tuple(_enc(g.r, g.R) for g in fs)
        if any(enc[i] >= enc[i + 1] for i in range(len(enc) - 1)):
            raise ValueError("factors must be strictly increasing; use canonical()")
        self.factors = fs

    @classmethod
    def canonical(cls, factors: Iterable[DualGenerator],
                  ) -> tuple[int, Optional["WedgeMonomial"]]:
        """Sort factors into canonical order: (sign, monomial), or (0, None)
        when a factor repeats."""
        fs = [DualGenerator(*f) for f in factors]
        sign, enc = _sort_encoded(tuple(_enc(g.r, g.R) for g in fs))
        if sign == 0:
            return 0, None
        return sign, cls._from_encoded(enc)

    @classmethod
    def _from_encoded(cls, enc: Sequence[int]) -> "WedgeMonomial":
        obj = object.__new__(cls)
        obj.factors = tuple(DualGenerator(*_dec(g)) for g in enc)
        return obj

    def encoded(self) -> tuple[int, ...]:
        return tuple(_enc(g.r, g.R) for g in self.factors)

    @property
    def degree(self) -> int:
        return len(self.factors)

    @property
    def weight(self) -> int:
        return sum(g.R - 2 for g in self.factors)

    @property
    def h_weight(self) -> int:
        return sum(2 * g.r - g.R for g in self.factors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WedgeMonomial):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __lt__(self, other: "WedgeMonomial") -> bool:
        return self.encoded() < other.encoded()

    def __str__(self) -> str:
        return "^".join(str(g) for g in self.factors) if self.factors else "1"

    def __repr__(self) -> str:
        return f"WedgeMonomial({self})"


def _sort_encoded(enc: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Insertion sort with sign; (0, ()) when two factors coincide."""
    work = list(enc)
    sign = 1
    for i in range(1, len(work)):
        g = work[i]
        j = i - 1
        while j >= 0 and work[j] > g:
            work[j + 1] = work[j]
            j -= 1
            sign = -sign
        if j >= 0 and work[j] == g:
            return 0, ()
        work[j + 1] = g
    return sign, tuple(work)


class CochainVector:
    """Sparse rational combination of wedge monomials of one degree and one
    grading weight."""

    __slots__ = ("degree", "weight", "terms")

    def __init__(self, degree: int, weight: int, terms=None):
        self.degree = degree
        self.weight = weight
        clean: dict[WedgeMonomial, mpq] = {}
        if terms:
            for mono, c in terms.items():
                q = c if isinstance(c, mpq) else mpq(c)
                if not q:
                    continue
                if mono.degree != degree or mono.weight != weight:
                    raise ValueError(f"term {mono} has degree {mono.degree}, "
                                     f"weight {mono.weight}; vector is "
                                     f"({degree}, {weight})")
                clean[mono] = q
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: WedgeMonomial) -> mpq:
        return self.terms.get(mono, mpq(0))

    def scaled(self, c) -> "CochainVector":
        q = c if isinstance(c, mpq) else mpq(c)
        return CochainVector(self.degree, self.weight,
                             {m: q * v for m, v in self.terms.items()})

    def __add__(self, other: "CochainVector") -> "CochainVector":
        if (self.degree, self.weight) != (other.degree, other.weight):
            raise ValueError("cannot add cochains of different bidegree")
        out = dict(self.terms)
        for m, v in other.terms.items():
            s = out.get(m, mpq(0)) + v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return CochainVector(self.degree, self.weight, out)

    def __sub__(self, other: "CochainVector") -> "CochainVector":
        return self + other.scaled(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CochainVector):
            return NotImplemented
        return (self.degree, self.weight, self.terms) == \
            (other.degree, other.weight, other.terms)

    def proportional_to(self, other: "CochainVector") -> Optional[mpq]:
        """The scalar c with self == c * other, if one exists."""
        if self.is_zero():
            return mpq(0) if not other.is_zero() else mpq(0)
        if set(self.terms) != set(other.terms):
            return None
        mono = next(iter(self.terms))
        c = self.terms[mono] / other.terms[mono]
        for m, v in self.terms.items():
            if v != c * other.terms[m]:
                return None
        return c

    def sorted_terms(self) -> list[tuple[WedgeMonomial, mpq]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].encoded())

    def __repr__(self) -> str:
        parts = [f"{v}*{m}" for m, v in self.sorted_terms()]
        return "CochainVector(" + " + ".join(parts or ["0"]) + ")"


# --------------------------------------------------------------------------
# encoded engine

def _encoded_block(ell: int, k: int) -> list[tuple[tuple[int, ...], int]]:
    """Strictly increasing k-tuples from the degree-ell generators, with
    their total H-weight."""
    out = []
    for combo in combinations(range(ell + 1), k):
        enc = tuple(_enc(r, ell) for r in combo)
        h = sum(2 * r - ell for r in combo)
        out.append((enc, h))
    return out


def _encoded_monomials(t: TypeSignature, h_weight: Optional[int] = None,
                       ) -> list[tuple[int, ...]]:
    """All canonical monomials of a type, lexicographic on the encoded
    tuple; optionally restricted to one H-weight."""
    blocks = [_encoded_block(ell, k) for ell, k in t.items()]
    out = []
    for picks in product(*blocks):
        if h_weight is not None and sum(h for _, h in picks) != h_weight:
            continue
        mono: tuple[int, ...] = ()
        for enc, _ in picks:
            mono = mono + enc
        out.append(mono)
    return out


_XI = ("H", "X", "Y")


def _act_encoded(xi: str, mono: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
    """Derivation action on one canonical monomial; integer coefficients.

    The replaced factor moves by at most one step in the canonical order, so
    the result needs no resorting: a collision with the neighbouring factor
    kills the term outright.
    """
    if xi == "H":
        h = sum((g & 0xFF) * 2 - (g >> 8) for g in mono)
        return [(h, mono)] if h else []
    out = []
    n = len(mono)
    if xi == "X":
        for i, g in enumerate(mono):
            r, big_r = g & 0xFF, g >> 8
            if r == big_r:
                continue
            if i + 1 < n and mono[i + 1] == g + 1:
                continue
            out.append((big_r - r, mono[:i] + (g + 1,) + mono[i + 1:]))
        return out
    if xi == "Y":
        for i, g in enumerate(mono):
            r = g & 0xFF
            if r == 0:
                continue
            if i > 0 and mono[i - 1] == g - 1:
                continue
            out.append((r, mono[:i] + (g - 1,) + mono[i + 1:]))
        return out
    raise ValueError(f"xi must be one of {_XI}")


def act(xi: str, v: CochainVector) -> CochainVector:
    """Action of H, X or Y on a cochain, extended as a degree-0 derivation."""
    acc: dict[tuple[int, ...], mpq] = {}
    for mono, c in v.terms.items():
        for coef, new in _act_encoded(xi, mono.encoded()):
            s = acc.get(new, mpq(0)) + c * coef
            if s:
                acc[new] = s
            else:
                acc.pop(new, None)
    return CochainVector(v.degree, v.weight,
                         {WedgeMonomial._from_encoded(m): c for m, c in acc.items()})


def monomial_basis(t: TypeSignature, h_weight: Optional[int] = None,
                   ) -> list[WedgeMonomial]:
    """Canonical monomials spanning a type summand, in lexicographic order,
    optionally restricted to a single H-weight."""
    if not t.nonvanishing():
        return []
    return [WedgeMonomial._from_encoded(m) for m in _encoded_monomials(t, h_weight)]


def _x_matrix(w0: Sequence[tuple[int, ...]], w2: Sequence[tuple[int, ...]],
              ) -> SparseMatrix:
    """Matrix of X from the H-weight-0 monomial span to the H-weight-2 one."""
    index = {m: i for i, m in enumerate(w2)}
    entries: dict[tuple[int, int], int] = {}
    for col, mono in enumerate(w0):
        for coef, new in _act_encoded("X", mono):
            row = index[new]
            entries[(row, col)] = entries.get((row, col), 0) + coef
    return SparseMatrix(len(w2), len(w0), entries)


class TypeBlock:
    """One type summand of an invariant basis: its H-weight-0 monomials and
    the invariant vectors in local coordinates over them."""

    __slots__ = ("signature", "monomials", "vectors", "free_cols")

    def __init__(self, signature: TypeSignature,
                 monomials: list[tuple[int, ...]],
                 vectors: list[dict[int, mpq]],
                 free_cols: list[int]):
        self.signature = signature
        self.monomials = monomials
        self.vectors = vectors
        self.free_cols = free_cols

    def cochain_vectors(self, degree: int, weight: int) -> list[CochainVector]:
        monos = [WedgeMonomial._from_encoded(mn) for mn in self.monomials]
        return [CochainVector(degree, weight,
                              {monos[i]: c for i, c in vec.items()})
                for vec in self.vectors]


def compute_type_block(t: TypeSignature) -> TypeBlock:
    """Invariant vectors of one type summand: the kernel of X restricted to
    the H-weight-0 monomial span, in canonical reduced normal form.

    The count always equals the trivial multiplicity of the type character;
    a mismatch would mean an action sign bug, so it is asserted.
    """
    w0 = _encoded_monomials(t, h_weight=0)
    if not w0:
        block = TypeBlock(t, [], [], [])
    else:
        w2 = _encoded_monomials(t, h_weight=2)
        vectors, free_cols = kernel_basis_with_pivots(_x_matrix(w0, w2))
        block = TypeBlock(t, w0, [v.entries for v in vectors], free_cols)
    expected = sl2rep.trivial_multiplicity(sl2rep.type_character(t))
    assert len(block.vectors) == expected, \
        f"type {t.compact()}: kernel gives {len(block.vectors)}, " \
        f"character gives {expected}"
    return block


def invariant_basis(m: int, w: int) -> list[tuple[TypeSignature, list[CochainVector]]]:
    """Explicit bases of the invariant cochains of degree m, weight w, split
    by type summand in enumeration order.

    The total count across types always equals the character-theoretic
    cochain dimension.
    """
    if w % 2:
        return []
    out = []
    total = 0
    for t in enumerate_types(m, w, nonvanishing_only=True):
        block = compute_type_block(t)
        cochains = block.cochain_vectors(m, w)
        total += len(cochains)
        out.append((t, cochains))
    assert total == sl2rep.cochain_dimension(m, w)
    return out
