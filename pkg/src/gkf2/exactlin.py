"""Exact rational sparse linear algebra: ranks, kernels, span membership.

All arithmetic is exact; scalars are GMP rationals (``gmpy2.mpq``) and
matrices/vectors are sparse maps that never store a zero.  Results are
certified, never probabilistic.  Small problems run sparse fraction-free
(Bareiss) elimination with Markowitz pivot selection directly.  Large
problems use a two-sided certificate instead of one monolithic elimination:

* ``rank >= r`` because elimination of the integer-scaled matrix mod a prime
  exhibits a nonzero ``r x r`` minor mod p, hence a nonzero minor over Z;
* ``rank <= r`` because ``n_cols - r`` explicit kernel vectors are checked by
  exact integer arithmetic (``M v = 0``), and they are independent by
  construction (each carries a unit coordinate the others vanish on).

The kernel vectors are proposed by CRT-lifting reduced row echelon forms
computed mod several primes and rationally reconstructing the entries; the
exact verification step is what makes the output certified, the modular
phase only ever affects speed.  An unlucky prime can at worst make
verification fail, which triggers a retry with more primes.
"""

from __future__ import annotations

import math
from typing import Mapping, Optional, Sequence

import numpy as np
from gmpy2 import mpq, mpz

Rational = mpq

_ZERO = mpq(0)
_ONE = mpq(1)

# Direct elimination is used below these sizes; above them the modular
# certificate route is both faster and immune to coefficient blow-up.
_BAREISS_MAX_DIM = 64
_BAREISS_MAX_NNZ = 6000
_RREF_EXACT_MAX_COLS = 1200
_RREF_EXACT_WORK_CAP = 60_000_000

# 30-bit primes so that (p-1)^2 fits comfortably in int64 numpy arithmetic.
def _make_primes(count: int = 96) -> tuple[int, ...]:
    import gmpy2

    primes = []
    p = mpz(2**29)
    for _ in range(count):
        p = gmpy2.next_prime(p)
        primes.append(int(p))
    return tuple(primes)


_PRIMES = _make_primes()


class DimensionMismatch(ValueError):
    """Operand shapes are incompatible."""


class NotInSpan(Exception):
    """The target vector is not a rational combination of the basis."""


def _as_rational(x) -> mpq:
    return x if isinstance(x, mpq) else mpq(x)


class SparseVector:
    """Sparse rational vector: ``dim`` and a map index -> nonzero entry."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: Optional[Mapping[int, object]] = None):
        if dim < 0:
            raise ValueError("negative dimension")
        self.dim = int(dim)
        clean: dict[int, mpq] = {}
        if entries:
            for i, v in entries.items():
                if not (0 <= i < dim):
                    raise IndexError(f"index {i} out of range for dim {dim}")
                q = _as_rational(v)
                if q:
                    clean[int(i)] = q
        self.entries = clean

    @classmethod
    def from_dense(cls, values: Sequence) -> "SparseVector":
        return cls(len(values), {i: v for i, v in enumerate(values) if _as_rational(v)})

    def to_dense(self) -> list[mpq]:
        out = [_ZERO] * self.dim
        for i, v in self.entries.items():
            out[i] = v
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, i: int) -> mpq:
        return self.entries.get(i, _ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SparseVector({self.dim}, {dict(sorted(self.entries.items()))!r})"


class SparseMatrix:
    """Sparse rational matrix: shape and a map (row, col) -> nonzero entry."""

    __slots__ = ("n_rows", "n_cols", "entries")

    def __init__(self, n_rows: int, n_cols: int,
                 entries: Optional[Mapping[tuple[int, int], object]] = None):
        if n_rows < 0 or n_cols < 0:
            raise ValueError("negative shape")
        self.n_rows = int(n_rows)
        self.n_cols = int(n_cols)
        clean: dict[tuple[int, int], mpq] = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < n_rows and 0 <= c < n_cols):
                    raise IndexError(f"entry ({r},{c}) out of range for shape "
                                     f"{n_rows}x{n_cols}")
                q = _as_rational(v)
                if q:
                    clean[(int(r), int(c))] = q
        self.entries = clean

    @classmethod
    def from_rows(cls, n_cols: int, rows: Sequence[Mapping[int, object]]) -> "SparseMatrix":
        ent = {(r, c): v for r, row in enumerate(rows) for c, v in row.items()}
        return cls(len(rows), n_cols, ent)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        ent = {}
        for r, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatch("ragged dense input")
            for c, v in enumerate(row):
                if _as_rational(v):
                    ent[(r, c)] = v
        return cls(n_rows, n_cols, ent)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def rows(self) -> list[dict[int, mpq]]:
        out: list[dict[int, mpq]] = [dict() for _ in range(self.n_rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.n_cols, self.n_rows,
                            {(c, r): v for (r, c), v in self.entries.items()})

    def mul_vector(self, v: SparseVector) -> SparseVector:
        if v.dim != self.n_cols:
            raise DimensionMismatch(f"{self.n_rows}x{self.n_cols} times dim {v.dim}")
        acc: dict[int, mpq] = {}
        ve = v.entries
        for (r, c), a in self.entries.items():
            x = ve.get(c)
            if x is not None:
                acc[r] = acc.get(r, _ZERO) + a * x
        return SparseVector(self.n_rows, {r: s for r, s in acc.items() if s})

    def to_dense(self) -> list[list[mpq]]:
        out = [[_ZERO] * self.n_cols for _ in range(self.n_rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.n_rows == other.n_rows and self.n_cols == other.n_cols
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz})"


def matmul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Exact sparse product; raises DimensionMismatch on shape conflict."""
    if a.n_cols != b.n_rows:
        raise DimensionMismatch(f"{a.n_rows}x{a.n_cols} times {b.n_rows}x{b.n_cols}")
    b_rows = b.rows()
    acc: dict[tuple[int, int], mpq] = {}
    for (r, j), av in a.entries.items():
        for c, bv in b_rows[j].items():
            key = (r, c)
            acc[key] = acc.get(key, _ZERO) + av * bv
    return SparseMatrix(a.n_rows, b.n_cols, {k: v for k, v in acc.items() if v})


# --------------------------------------------------------------------------
# integer scaling

def _integer_rows(m: SparseMatrix) -> list[dict[int, int]]:
    """Rows scaled by positive rationals to primitive integer rows.

    Row scaling changes neither the rank nor the right kernel nor the RREF.
    """
    rows: list[dict[int, int]] = [dict() for _ in range(m.n_rows)]
    for (r, c), v in m.entries.items():
        rows[r][c] = v
    out: list[dict[int, int]] = []
    for row in rows:
        if not row:
            out.append({})
            continue
        den = 1
        for v in row.values():
            den = den * v.denominator // math.gcd(den, int(v.denominator))
        ints = {c: int(v.numerator) * (den // int(v.denominator)) for c, v in row.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        out.append(ints)
    return out


# --------------------------------------------------------------------------
# sparse fraction-free elimination (small problems)

def _bareiss_rank(rows: list[dict[int, int]]) -> int:
    """Fraction-free elimination with Markowitz pivoting, exact over Z.

    Every active row is updated at every step (rows missing the pivot column
    are rescaled), which is what keeps the divisions by the previous pivot
    exact: each entry stays a minor of the original matrix.
    """
    work = [{c: mpz(v) for c, v in row.items()} for row in rows if row]
    prev = mpz(1)
    rank = 0
    while work:
        colcount: dict[int, int] = {}
        for row in work:
            for c in row:
                colcount[c] = colcount.get(c, 0) + 1
        if not colcount:
            break
        # Markowitz: cheapest column, then shortest row holding it.
        pc = min(colcount, key=lambda c: (colcount[c], c))
        pi = min((i for i, row in enumerate(work) if pc in row),
                 key=lambda i: (len(work[i]), i))
        prow = work.pop(pi)
        pval = prow[pc]
        nxt: list[dict[int, mpz]] = []
        for row in work:
            rv = row.pop(pc, None)
            if rv is None:
                new = {c: (pval * v) // prev for c, v in row.items()}
            else:
                new = {c: pval * v for c, v in row.items()}
                for c, v in prow.items():
                    if c == pc:
                        continue
                    new[c] = new.get(c, mpz(0)) - rv * v
                new = {c: v // prev for c, v in new.items() if v}
            if new:
                nxt.append(new)
        work = nxt
        prev = pval
        rank += 1
    return rank


def _sparse_rref_exact(rows_int: list[dict[int, int]], n_cols: int,
                       work_cap: Optional[int] = None,
                       ) -> Optional[tuple[list[int], list[dict[int, mpq]]]]:
    """Canonical RREF via integer forward elimination and exact back-pass.

    Columns are processed left to right, so the pivot columns are the
    lexicographically first independent set (that is what makes the RREF,
    and hence the kernel basis built from it, canonical).  Returns None if
    the fill-in work counter blows past ``work_cap``.
    """
    work: dict[int, dict[int, mpz]] = {
        i: {c: mpz(v) for c, v in row.items()} for i, row in enumerate(rows_int) if row
    }
    colrows: dict[int, set[int]] = {}
    for i, row in work.items():
        for c in row:
            colrows.setdefault(c, set()).add(i)
    pivots: list[int] = []
    pivot_rows: list[dict[int, mpz]] = []
    ops = 0
    for col in range(n_cols):
        holders = colrows.get(col)
        if not holders:
            continue
        pi = min(holders, key=lambda i: (len(work[i]), i))
        prow = work.pop(pi)
        for c in prow:
            colrows[c].discard(pi)
        pval = prow[col]
        for i in list(colrows.get(col, ())):
            row = work[i]
            rv = row.pop(col)
            colrows[col].discard(i)
            ops += len(row) + len(prow)
            if work_cap is not None and ops > work_cap:
                return None
            for c, v in row.items():
                row[c] = pval * v
            for c, v in prow.items():
                if c == col:
                    continue
                cur = row.get(c)
                if cur is None:
                    row[c] = -rv * v
                    colrows.setdefault(c, set()).add(i)
                else:
                    cur -= rv * v
                    if cur:
                        row[c] = cur
                    else:
                        del row[c]
                        colrows[c].discard(i)
            if not row:
                del work[i]
            else:
                g = 0
                for v in row.values():
                    g = math.gcd(g, int(v))
                if g > 1:
                    gz = mpz(g)
                    for c in row:
                        row[c] //= gz
        pivots.append(col)
        pivot_rows.append(prow)
    # Back substitution over mpq: normalize each pivot row and clear the
    # entries it has above later pivots, processing from the bottom up.
    reduced: list[dict[int, mpq]] = [None] * len(pivots)  # type: ignore[list-item]
    pivot_index = {c: k for k, c in enumerate(pivots)}
    for k in range(len(pivots) - 1, -1, -1):
        prow = pivot_rows[k]
        pval = prow[pivots[k]]
        row_q = {c: mpq(v, pval) for c, v in prow.items() if c != pivots[k]}
        for c in [c for c in row_q if c in pivot_index]:
            coef = row_q.pop(c)
            for c2, v2 in reduced[pivot_index[c]].items():
                cur = row_q.get(c2, _ZERO) - coef * v2
                if cur:
                    row_q[c2] = cur
                else:
                    row_q.pop(c2, None)
        reduced[k] = row_q
    return pivots, reduced


# --------------------------------------------------------------------------
# modular elimination (numpy, dense) and rational reconstruction

def _dense_mod_rref(rows_int: list[dict[int, int]], n_cols: int, p: int,
                    ) -> tuple[list[int], np.ndarray]:
    """Reduced row echelon form mod p; returns (pivot columns, RREF rows)."""
    m = len(rows_int)
    a = np.zeros((m, n_cols), dtype=np.int64)
    for i, row in enumerate(rows_int):
        for c, v in row.items():
            a[i, c] = v % p
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == m:
            break
        sub = a[r:, col]
        nz = np.flatnonzero(sub)
        if nz.size == 0:
            continue
        i0 = r + int(nz[0])
        if i0 != r:
            a[[r, i0]] = a[[i0, r]]
        inv = pow(int(a[r, col]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1:, col]
        nzb = np.flatnonzero(below)
        if nzb.size:
            idx = r + 1 + nzb
            a[idx] = (a[idx] - np.outer(a[idx, col], a[r])) % p
        pivots.append(col)
        r += 1
    for k in range(len(pivots) - 1, -1, -1):
        col = pivots[k]
        above = a[:k, col]
        nza = np.flatnonzero(above)
        if nza.size:
            a[nza] = (a[nza] - np.outer(a[nza, col], a[k])) % p
    return pivots, a[:len(pivots)]


def _rational_reconstruct(x: int, modulus: int, bound: int) -> Optional[tuple[int, int]]:
    """Wang reconstruction: num/den with |num|, den <= bound, num = den*x mod m."""
    r0, r1 = modulus, x % modulus
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    num, den = (r1, t1) if t1 > 0 else (-r1, -t1)
    if math.gcd(math.gcd(abs(num), den), modulus) != 1:
        return None
    return num, den


class _ModularFailure(Exception):
    """Reconstruction or verification failed; retry with more primes."""


def _certified_kernel(rows_int: list[dict[int, int]], n_cols: int,
                      ) -> tuple[list[int], list[dict[int, mpq]]]:
    """Canonical kernel basis with exact certification.

    Returns (pivot columns, kernel vectors in RREF normal form ordered by
    free column).  The modular images only propose; correctness rests on the
    exact checks spelled out in the module docstring.
    """
    # Higher modular rank always wins (it is a lower bound for the exact
    # rank); among equal ranks the lexicographically smaller pivot set is
    # the better candidate, since unlucky primes can only push pivots right.
    def score(pivots: list[int]) -> tuple[int, tuple[int, ...]]:
        return (len(pivots), tuple(-c for c in pivots))

    images: list[tuple[int, list[int], np.ndarray]] = []
    best_score: Optional[tuple[int, tuple[int, ...]]] = None
    want = 2
    prime_iter = iter(_PRIMES)
    while True:
        while len(images) < want:
            try:
                p = next(prime_iter)
            except StopIteration:
                raise RuntimeError("modular kernel: prime pool exhausted") from None
            pivots, rref_rows = _dense_mod_rref(rows_int, n_cols, p)
            s = score(pivots)
            if best_score is None or s > best_score:
                best_score = s
                images = []
            if s == best_score:
                images.append((p, pivots, rref_rows))
        try:
            return _lift_and_verify(rows_int, n_cols, images)
        except _ModularFailure:
            want = 2 * len(images)


def _lift_and_verify(rows_int: list[dict[int, int]], n_cols: int,
                     images: list[tuple[int, list[int], np.ndarray]],
                     ) -> tuple[list[int], list[dict[int, mpq]]]:
    pivots = images[0][1]
    rank = len(pivots)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    modulus = 1
    for p, _, _ in images:
        modulus *= p
    bound = math.isqrt(modulus // 2)
    crt_coef = []
    for p, _, _ in images:
        q = modulus // p
        crt_coef.append(mpz(q) * pow(q, p - 2, p))
    mod_z = mpz(modulus)

    # Kernel vector for free column f: unit at f, -RREF[i][f] at pivot i.
    kernel: list[dict[int, mpq]] = []
    for f in free_cols:
        vec: dict[int, mpq] = {f: _ONE}
        for i in range(rank):
            if pivots[i] > f:
                break
            residues = [int(rref[i, f]) for _, _, rref in images]
            if not any(residues):
                continue
            x = 0
            for rcoef, res in zip(crt_coef, residues):
                x += rcoef * res
            x = int(x % mod_z)
            rec = _rational_reconstruct(x, modulus, bound)
            if rec is None:
                raise _ModularFailure
            num, den = rec
            vec[pivots[i]] = -mpq(num, den)
        kernel.append(vec)

    # Exact verification: every proposed vector must satisfy M v = 0.
    for vec in kernel:
        den = 1
        for v in vec.values():
            den = den * v.denominator // math.gcd(den, int(v.denominator))
        ivec = {c: int(v.numerator) * (den // int(v.denominator)) for c, v in vec.items()}
        for row in rows_int:
            small, big = (ivec, row) if len(ivec) <= len(row) else (row, ivec)
            s = 0
            for c, v in small.items():
                o = big.get(c)
                if o is not None:
                    s += v * o
            if s:
                raise _ModularFailure
    # rank >= rank(mod p) certifies nullity <= len(free_cols); the verified
    # independent vectors certify nullity >= len(free_cols).  Equality pins
    # both the rank and (see module docstring) the canonical pivot set.
    return pivots, kernel


# --------------------------------------------------------------------------
# public operations

def rank(m: SparseMatrix) -> int:
    """Exact rank over the rationals (empty matrices allowed)."""
    if m.n_rows == 0 or m.n_cols == 0 or not m.entries:
        return 0
    rows_int = _integer_rows(m)
    if min(m.n_rows, m.n_cols) <= _BAREISS_MAX_DIM and m.nnz <= _BAREISS_MAX_NNZ:
        r = _bareiss_rank(rows_int)
        # single-prime sanity: a modular rank can never exceed the exact one
        pivots, _ = _dense_mod_rref(rows_int, m.n_cols, _PRIMES[0])
        if len(pivots) > r:
            raise AssertionError("modular rank exceeds exact rank")
        return r
    pivots, _ = _certified_kernel(rows_int, m.n_cols)
    return len(pivots)


def rref(m: SparseMatrix) -> tuple[list[int], list[SparseVector]]:
    """Canonical reduced row echelon form: (pivot columns, nonzero rows)."""
    pivots, reduced = _rref_internal(m)
    rows = []
    for k, col in enumerate(pivots):
        entries = {col: _ONE}
        entries.update(reduced[k])
        rows.append(SparseVector(m.n_cols, entries))
    return pivots, rows


def _rref_internal(m: SparseMatrix) -> tuple[list[int], list[dict[int, mpq]]]:
    if m.n_rows == 0 or m.n_cols == 0 or not m.entries:
        return [], []
    rows_int = _integer_rows(m)
    if m.n_cols <= _RREF_EXACT_MAX_COLS:
        got = _sparse_rref_exact(rows_int, m.n_cols, _RREF_EXACT_WORK_CAP)
        if got is not None:
            return got
    pivots, kernel = _certified_kernel(rows_int, m.n_cols)
    # Recover the reduced rows from the kernel normal form: RREF[i][f] is
    # minus the pivot-i coordinate of the kernel vector keyed by free col f.
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.n_cols) if c not in pivot_set]
    reduced: list[dict[int, mpq]] = [dict() for _ in pivots]
    col_of = {c: k for k, c in enumerate(pivots)}
    for f, vec in zip(free_cols, kernel):
        for c, v in vec.items():
            if c == f:
                continue
            reduced[col_of[c]][f] = -v
    return pivots, reduced


def kernel_basis(m: SparseMatrix) -> list[SparseVector]:
    """Basis of the right null space in reduced echelon normal form.

    Each basis vector carries coordinate 1 at its own free column and 0 at
    every other free column; the free columns are the complement of the
    lexicographically first independent set of columns.  The result is a
    canonical invariant of the matrix.
    """
    return kernel_basis_with_pivots(m)[0]


def kernel_basis_with_pivots(m: SparseMatrix) -> tuple[list[SparseVector], list[int]]:
    """Kernel basis plus, per vector, the free column it is keyed by (its
    unit coordinate, zero in every other basis vector)."""
    if m.n_cols == 0:
        return [], []
    if m.n_rows == 0 or not m.entries:
        return ([SparseVector(m.n_cols, {i: 1}) for i in range(m.n_cols)],
                list(range(m.n_cols)))
    rows_int = _integer_rows(m)
    pivots: Optional[list[int]] = None
    if m.n_cols <= _RREF_EXACT_MAX_COLS:
        got = _sparse_rref_exact(rows_int, m.n_cols, _RREF_EXACT_WORK_CAP)
        if got is not None:
            pivots, reduced = got
            pivot_set = set(pivots)
            out = []
            free = []
            for f in range(m.n_cols):
                if f in pivot_set:
                    continue
                entries = {f: _ONE}
                for k, col in enumerate(pivots):
                    if col > f:
                        break
                    v = reduced[k].get(f)
                    if v:
                        entries[col] = -v
                out.append(SparseVector(m.n_cols, entries))
                free.append(f)
            return out, free
    pivots, kernel = _certified_kernel(rows_int, m.n_cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.n_cols) if c not in pivot_set]
    return [SparseVector(m.n_cols, vec) for vec in kernel], free


def solve_in_span(basis: Sequence[SparseVector], target: SparseVector,
                  pivots: Optional[Sequence[int]] = None) -> list[mpq]:
    """Coefficients c with sum(c_i * basis_i) == target, exactly.

    Raises NotInSpan when no exact combination exists and ValueError when the
    claimed basis is dependent.  When ``pivots`` gives, per basis vector, a
    coordinate where it is 1 and all other basis vectors are 0 (the kernel
    normal form guarantees one), the coefficients are read off and verified
    without any elimination.
    """
    dim = target.dim
    for b in basis:
        if b.dim != dim:
            raise DimensionMismatch("basis/target dimensions differ")
    if pivots is not None:
        if len(pivots) != len(basis):
            raise ValueError("one pivot per basis vector required")
        coeffs = [target[p] for p in pivots]
        residual = dict(target.entries)
        for c, b in zip(coeffs, basis):
            if not c:
                continue
            for i, v in b.entries.items():
                cur = residual.get(i, _ZERO) - c * v
                if cur:
                    residual[i] = cur
                else:
                    residual.pop(i, None)
        if residual:
            raise NotInSpan("target has a component outside the span")
        return coeffs
    if not basis:
        if target.is_zero():
            return []
        raise NotInSpan("empty basis spans only zero")
    # Columns = basis vectors then target; independent basis columns are all
    # pivots, so membership means exactly one kernel vector, keyed by the
    # target column, whose pivot coordinates are minus the coefficients.
    k = len(basis)
    ent: dict[tuple[int, int], mpq] = {}
    for j, b in enumerate(basis):
        for i, v in b.entries.items():
            ent[(i, j)] = v
    for i, v in target.entries.items():
        ent[(i, k)] = v
    kernel = kernel_basis(SparseMatrix(dim, k + 1, ent))
    if not kernel:
        raise NotInSpan("target independent from basis")
    if len(kernel) > 1 or kernel[0][k] != 1:
        raise ValueError("basis vectors are not linearly independent")
    vec = kernel[0]
    return [-vec[j] for j in range(k)]


# --------------------------------------------------------------------------
# line-oriented serialization (header `rows cols nnz`, lines `row col num/den`)

def matrix_to_text(m: SparseMatrix) -> str:
    lines = [f"{m.n_rows} {m.n_cols} {m.nnz}"]
    for (r, c) in sorted(m.entries):
        v = m.entries[(r, c)]
        lines.append(f"{r} {c} {v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> SparseMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    n_rows, n_cols, nnz = (int(t) for t in lines[0].split())
    if len(lines) - 1 != nnz:
        raise ValueError(f"expected {nnz} entries, found {len(lines) - 1}")
    entries = {}
    for ln in lines[1:]:
        r, c, val = ln.split()
        num, den = val.split("/")
        entries[(int(r), int(c))] = mpq(int(num), int(den))
    return SparseMatrix(n_rows, n_cols, entries)


def vector_to_text(v: SparseVector) -> str:
    lines = [f"{v.dim} {len(v.entries)}"]
    for i in sorted(v.entries):
        q = v.entries[i]
        lines.append(f"{i} {q.numerator}/{q.denominator}")
    return "\n".join(lines) + "\n"


def vector_from_text(text: str) -> SparseVector:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    dim, nnz = (int(t) for t in lines[0].split())
    if len(lines) - 1 != nnz:
        raise ValueError(f"expected {nnz} entries, found {len(lines) - 1}")
    entries = {}
    for ln in lines[1:]:
        i, val = ln.split()
        num, den = val.split("/")
        entries[int(i)] = mpq(int(num), int(den))
    return SparseVector(dim, entries)
