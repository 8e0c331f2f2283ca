"""sl(2) character calculus for the relative cochain spaces.

Everything here works with formal characters: symmetric Laurent polynomials
in one variable whose coefficient at q^j is the dimension of the H-weight-j
subspace.  The dimension of a relative (invariant) cochain space is the
multiplicity of the trivial representation in the character of the full
space, which is m_0 - m_2; no bases are ever constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import TypeSignature, enumerate_types


class NotACharacter(ValueError):
    """The weight multiplicities do not come from an sl(2) representation."""


class Character:
    """Sparse map H-weight -> multiplicity; symmetric about zero."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=None):
        clean = {}
        if coefficients:
            for j, mult in coefficients.items():
                if mult < 0:
                    raise ValueError("negative weight multiplicity")
                if mult:
                    clean[int(j)] = int(mult)
        self.coefficients = clean

    def m(self, j: int) -> int:
        return self.coefficients.get(j, 0)

    @property
    def total_dim(self) -> int:
        return sum(self.coefficients.values())

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_symmetric(self) -> bool:
        return all(self.m(-j) == mult for j, mult in self.coefficients.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self.coefficients.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{j}: {m}" for j, m in sorted(self.coefficients.items()))
        return f"Character({{{inner}}})"


@dataclass(frozen=True)
class Decomposition:
    """Multiset of irreducible summands: highest weight -> multiplicity."""

    multiplicities: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiplicities)

    def total_dim(self) -> int:
        return sum(alpha * (k + 1) for k, alpha in self.multiplicities)

    def character(self) -> Character:
        acc: dict[int, int] = {}
        for k, alpha in self.multiplicities:
            for j in range(-k, k + 1, 2):
                acc[j] = acc.get(j, 0) + alpha
        return Character(acc)


def sym_character(ell: int) -> Character:
    """Character of the irreducible of dimension ell + 1 (weights -ell..ell
    in steps of 2); also the character of the degree-ell dual symmetric
    power of the plane."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    return Character({j: 1 for j in range(-ell, ell + 1, 2)})


def tensor(a: Character, b: Character) -> Character:
    """Product of characters (Laurent polynomial multiplication)."""
    out: dict[int, int] = {}
    for j, mj in a.coefficients.items():
        for k, mk in b.coefficients.items():
            out[j + k] = out.get(j + k, 0) + mj * mk
    return Character(out)


@lru_cache(maxsize=None)
def exterior_power_character(ell: int, k: int) -> Character:
    """Character of the k-th exterior power of the (ell+1)-dimensional
    irreducible: coefficient of t^k in prod_{r=0}^{ell} (1 + t q^{2r-ell}).

    Zero character outside 0 <= k <= ell + 1.
    """
    if k < 0 or k > ell + 1:
        return Character()
    # layers[i] = character coefficient of t^i, built distinct weight by
    # distinct weight so only squarefree selections survive
    layers: list[dict[int, int]] = [{0: 1}] + [dict() for _ in range(k)]
    for r in range(ell + 1):
        wt = 2 * r - ell
        for i in range(min(r + 1, k), 0, -1):
            dst = layers[i]
            for j, m in layers[i - 1].items():
                dst[j + wt] = dst.get(j + wt, 0) + m
    return Character(layers[k])


def decompose(c: Character) -> Decomposition:
    """Split a character into irreducibles: alpha_k = m_k - m_{k+2}.

    Raises NotACharacter when the multiplicities are not realizable (some
    alpha negative, or the weights not symmetric about zero).
    """
    if not c.is_symmetric():
        raise NotACharacter("weight multiplicities are not symmetric")
    if len({j & 1 for j in c.coefficients}) > 1:
        raise NotACharacter("mixed parity weights")
    mults = []
    for k in sorted((j for j in c.coefficients if j >= 0), reverse=True):
        alpha = c.m(k) - c.m(k + 2)
        if alpha < 0:
            raise NotACharacter(f"negative multiplicity at highest weight {k}")
        if alpha:
            mults.append((k, alpha))
    mults.sort()
    dec = Decomposition(tuple(mults))
    assert dec.total_dim() == c.total_dim
    return dec


def trivial_multiplicity(c: Character) -> int:
    """Number of copies of the trivial representation: m_0 - m_2."""
    return c.m(0) - c.m(2)


def type_character(t: TypeSignature) -> Character:
    """Character of the summand indexed by a type signature: the product of
    the exterior-power characters of its factors."""
    acc = Character({0: 1})
    for ell, k in t.items():
        factor = exterior_power_character(ell, k)
        if factor.is_zero():
            return Character()
        acc = tensor(acc, factor)
    return acc


def cochain_dimension(m: int, w: int) -> int:
    """Dimension of the relative (invariant) cochain space of degree m and
    weight w; zero for odd weight and for m > w."""
    if m < 1:
        raise ValueError("degree must be >= 1")
    if w % 2 or m > w:
        return 0
    return sum(trivial_multiplicity(type_character(t))
               for t in enumerate_types(m, w))


def max_listed_degree(w: int) -> int:
    """Largest degree with a nonvanishing type summand; rows of the
    dimension table run from degree 1 to here."""
    best = 0
    for m in range(1, w + 1):
        if enumerate_types(m, w, nonvanishing_only=True):
            best = m
    return best


@dataclass(frozen=True)
class DimensionRow:
    """Per-weight dimension record: dims[i] is the degree-(i+1) dimension."""

    w: int
    dims: tuple[int, ...]
    euler: int

    def dim(self, m: int) -> int:
        if m == 0:
            return 1
        return self.dims[m - 1] if m - 1 < len(self.dims) else 0


def dims_row(w: int) -> DimensionRow:
    """Invariant dimensions for all listed degrees at an even weight, plus
    the Euler characteristic (the constant +1 counts the degree-0 cochain
    line)."""
    if w < 2 or w % 2:
        raise ValueError("weight must be even and >= 2")
    top = max_listed_degree(w)
    dims = tuple(cochain_dimension(m, w) for m in range(1, top + 1))
    euler = 1 + sum(d if m % 2 == 0 else -d
                    for m, d in enumerate(dims, start=1))
    return DimensionRow(w, dims, euler)
