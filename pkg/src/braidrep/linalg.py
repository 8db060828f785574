"""Exact rational dense linear algebra.

Scalars are arbitrary-precision rationals (``fractions.Fraction``), so every
operation here is exact: zero tests are decidable and all equality checks are
bit-exact on reduced fractions.  Matrices are immutable and safe to share.

Subspaces are stored in a canonical form (reduced column echelon basis with
pivot entries normalized to 1), which makes subspace equality a syntactic
check on the stored entries.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cached_property

from .errors import ShapeError, SingularMatrixError

Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


def rational(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ValueError("refusing to coerce a float; pass 'p/q' or an int")
    return Fraction(value)


def format_rational(value) -> str:
    """Serialize as 'p/q', or plain 'p' when the denominator is 1."""
    return str(Fraction(value))


class Matrix:
    """Immutable dense matrix over the rationals.

    ``*`` multiplies by a Matrix, by a vector (any sequence, giving a tuple)
    or by a scalar.  Multiplication skips zero entries of the left factor,
    so products with the sparse generator images stay cheap.
    """

    __slots__ = ("rows", "nrows", "ncols", "__dict__")

    def __init__(self, rows):
        rows = tuple(
            tuple(e if isinstance(e, Fraction) else Fraction(e) for e in row)
            for row in rows
        )
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise ShapeError("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(_F1 if i == j else _F0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(tuple((_F0,) * ncols for _ in range(nrows)))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return tuple(zip(*self.rows)) if self.nrows else ()

    def transpose(self):
        return Matrix(tuple(zip(*self.rows))) if self.nrows else Matrix(((),))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __neg__(self):
        return Matrix(tuple(tuple(-e for e in row) for row in self.rows))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            out = [[_F0] * other.ncols for _ in range(self.nrows)]
            brows = other.rows
            for i, arow in enumerate(self.rows):
                orow = out[i]
                for k, a in enumerate(arow):
                    if a:
                        for j, b in enumerate(brows[k]):
                            if b:
                                orow[j] += a * b
            return Matrix(out)
        if isinstance(other, (tuple, list)):
            if self.ncols != len(other):
                raise ShapeError(f"cannot apply {self.shape} to a vector of length {len(other)}")
            out = [_F0] * self.nrows
            for i, arow in enumerate(self.rows):
                acc = _F0
                for k, a in enumerate(arow):
                    if a:
                        acc += a * other[k]
                out[i] = acc
            return tuple(out)
        if isinstance(other, (int, Fraction)):
            return Matrix(tuple(tuple(e * other for e in row) for row in self.rows))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    @cached_property
    def trace(self):
        if not self.is_square:
            raise ShapeError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), _F0)

    def is_zero(self):
        return all(not e for row in self.rows for e in row)

    def to_strings(self):
        """Rows of 'p/q' strings; the JSON wire format for matrices."""
        return [[format_rational(e) for e in row] for row in self.rows]

    @classmethod
    def from_strings(cls, rows):
        return cls(tuple(tuple(rational(e) for e in row) for row in rows))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(e) for e in row) for row in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}: {body}]"


def rank(m: Matrix) -> int:
    """Dimension of the column space, by exact fraction-free elimination."""
    span = EchelonSpan(m.ncols)
    for row in m.rows:
        span.add(row)
    return span.dim


class Subspace:
    """A linear subspace of Q^n held in canonical form.

    Internally the basis vectors are the rows of a reduced row echelon
    matrix, ordered by pivot.  Two Subspace values describe the same set of
    vectors exactly when their stored bases are entry-wise equal.
    """

    __slots__ = ("ambient_dim", "_vectors", "_pivots", "__dict__")

    def __init__(self, ambient_dim, vectors):
        """Canonicalize an arbitrary spanning set (vectors of length ambient_dim)."""
        span = EchelonSpan(ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise ShapeError("spanning vector has wrong length")
            span.add(v)
        self.ambient_dim = ambient_dim
        self._vectors, self._pivots = span.canonical_rows()

    @classmethod
    def _from_canonical(cls, ambient_dim, vectors, pivots):
        """Trusted constructor for vectors already in canonical form."""
        self = cls.__new__(cls)
        self.ambient_dim = ambient_dim
        self._vectors = tuple(tuple(v) for v in vectors)
        self._pivots = tuple(pivots)
        return self

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim):
        return cls._from_canonical(
            ambient_dim,
            tuple(tuple(_F1 if i == j else _F0 for j in range(ambient_dim)) for i in range(ambient_dim)),
            tuple(range(ambient_dim)),
        )

    @property
    def dim(self):
        return len(self._vectors)

    def is_zero(self):
        return not self._vectors

    def is_full(self):
        return self.dim == self.ambient_dim

    @cached_property
    def basis(self) -> Matrix:
        """Basis as a matrix whose columns are the canonical basis vectors."""
        if not self._vectors:
            return Matrix(((),) * self.ambient_dim) if self.ambient_dim else Matrix(((),))
        return Matrix(tuple(zip(*self._vectors)))

    def basis_vectors(self):
        return self._vectors

    def vector(self, j):
        """The j-th canonical basis vector."""
        return self._vectors[j]

    def _residual(self, v):
        w = [e if isinstance(e, Fraction) else Fraction(e) for e in v]
        for p, row in zip(self._pivots, self._vectors):
            c = w[p]
            if c:
                w = [a - c * b for a, b in zip(w, row)]
        return w

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise ShapeError("vector length does not match ambient dimension")
        return not any(self._residual(v))

    def coordinates(self, v):
        """Coefficients of v in the canonical basis, or None if v is outside."""
        if len(v) != self.ambient_dim:
            raise ShapeError("vector length does not match ambient dimension")
        coords = [v[p] if isinstance(v[p], Fraction) else Fraction(v[p]) for p in self._pivots]
        if any(self._residual(v)):
            return None
        return tuple(coords)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection, computed by the block echelon (Zassenhaus) construction."""
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError("subspaces live in different ambient spaces")
        d = self.ambient_dim
        if self.is_zero() or other.is_zero():
            return Subspace.zero(d)
        zeros = [_F0] * d
        span = EchelonSpan(2 * d)
        for v in self._vectors:
            span.add(list(v) + list(v))
        for v in other._vectors:
            span.add(list(v) + zeros)
        inter = [row[d:] for row, p in zip(span.rows, span.pivots) if p >= d]
        return Subspace(d, inter)

    def __add__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError("subspaces live in different ambient spaces")
        return Subspace(self.ambient_dim, self._vectors + other._vectors)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._vectors == other._vectors

    def __hash__(self):
        return hash((self.ambient_dim, self._vectors))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def image_basis(m: Matrix) -> Subspace:
    """Canonical basis of the column space of m."""
    return Subspace(m.nrows, m.columns())


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of the null space of m."""
    span = EchelonSpan(m.ncols)
    for row in m.rows:
        span.add(row)
    rows, pivots = span.canonical_rows()
    pivot_set = set(pivots)
    vectors = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = [_F0] * m.ncols
        v[f] = _F1
        for row, p in zip(rows, pivots):
            if row[f]:
                v[p] = -row[f]
        vectors.append(v)
    return Subspace(m.ncols, vectors)


def intersect_stacked_kernel(u: Subspace, v: Subspace) -> Subspace:
    """Independent route to the intersection, for cross-checking.

    Solves the stacked system U a = V b by taking the kernel of [U | -V]
    and mapping the a-part back through U.
    """
    if u.ambient_dim != v.ambient_dim:
        raise ShapeError("subspaces live in different ambient spaces")
    if u.is_zero() or v.is_zero():
        return Subspace.zero(u.ambient_dim)
    ucols = u.basis_vectors()
    vcols = v.basis_vectors()
    stacked = Matrix(
        tuple(
            tuple(c[i] for c in ucols) + tuple(-c[i] for c in vcols)
            for i in range(u.ambient_dim)
        )
    )
    ker = kernel_basis(stacked)
    vectors = []
    for coeffs in ker.basis_vectors():
        a = coeffs[: u.dim]
        vec = [_F0] * u.ambient_dim
        for c, col in zip(a, ucols):
            if c:
                vec = [x + c * y for x, y in zip(vec, col)]
        vectors.append(vec)
    return Subspace(u.ambient_dim, vectors)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrixError when none exists."""
    if not m.is_square:
        raise ShapeError("only square matrices can be inverted")
    n = m.nrows
    span = EchelonSpan(2 * n)
    for i, row in enumerate(m.rows):
        span.add(list(row) + [_F1 if j == i else _F0 for j in range(n)])
    if span.pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    rows, _ = span.canonical_rows()
    return Matrix(tuple(tuple(row[n:]) for row in rows))


def conjugate(m: Matrix, c: Matrix) -> Matrix:
    """Return c^-1 * m * c."""
    if not (m.is_square and c.is_square and m.nrows == c.nrows):
        raise ShapeError("conjugation needs square matrices of equal size")
    return inverse(c) * m * c


def charpoly(m: Matrix):
    """Coefficients [1, c1, ..., cn] of det(xI - m), by the trace recursion."""
    if not m.is_square:
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    coeffs = [_F1]
    mk = m
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        ck = -mk.trace / k
        coeffs.append(ck)
        if k < n:
            mk = m * (mk + ident * ck)
    return coeffs


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def rational_eigenvalues(m: Matrix):
    """All rational roots of the characteristic polynomial, sorted, distinct.

    The matrix is scaled to integer entries, so any rational eigenvalue
    becomes an integer root of a monic integer polynomial; candidates are
    the divisors of the constant term and each one is verified exactly.
    Non-rational eigenvalues are silently omitted.
    """
    if not m.is_square:
        raise ShapeError("eigenvalues of a non-square matrix")
    if m.nrows == 0:
        return []
    den = math.lcm(*(e.denominator for row in m.rows for e in row))
    coeffs = charpoly(m * den)
    ints = []
    for c in coeffs:
        assert c.denominator == 1
        ints.append(c.numerator)
    roots = set()
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
        roots.add(_F0)
    if len(ints) > 1:
        for d in _divisors(abs(ints[-1])):
            for cand in (d, -d):
                acc = 0
                for c in ints:
                    acc = acc * cand + c
                if acc == 0:
                    roots.add(Fraction(cand, den))
    return sorted(roots)


def block_diagonal(blocks) -> Matrix:
    """Assemble square blocks along the diagonal."""
    blocks = list(blocks)
    size = sum(b.nrows for b in blocks)
    rows = [[_F0] * size for _ in range(size)]
    at = 0
    for b in blocks:
        if not b.is_square:
            raise ShapeError("diagonal blocks must be square")
        for i, row in enumerate(b.rows):
            rows[at + i][at : at + b.ncols] = list(row)
        at += b.nrows
    return Matrix(rows)


def _primitive(v):
    """Divide out the gcd of an integer vector, in place semantics."""
    g = 0
    for e in v:
        g = math.gcd(g, e)
        if g == 1:
            return v
    if g > 1:
        return [e // g for e in v]
    return v


class EchelonSpan:
    """Incrementally grown echelon basis of a subspace of Q^length.

    Rows are primitive integer vectors kept in forward echelon form only:
    each row's first nonzero entry sits at its pivot and rows are ordered by
    pivot, but entries above later pivots are not cleared.  Incoming vectors
    are reduced fraction-free (cross-multiplication with gcd stripping), and
    stored rows never change, which keeps the integers small even on dense
    input.  The back-substitution that produces the unique reduced basis
    happens once, in ``canonical_rows``.
    """

    __slots__ = ("length", "rows", "pivots")

    def __init__(self, length):
        self.length = length
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    @staticmethod
    def _to_int_vec(vec):
        den = 1
        for e in vec:
            if isinstance(e, Fraction):
                d = e.denominator
                den = den * d // math.gcd(den, d)
        if den == 1:
            return [int(e) for e in vec]
        return [int(e * den) for e in vec]

    def add(self, vec):
        """Insert a vector; returns its primitive reduced form if new, else None."""
        v = self._to_int_vec(vec)
        for p, row in zip(self.pivots, self.rows):
            c = v[p]
            if c:
                rp = row[p]
                v = _primitive([a * rp - c * b for a, b in zip(v, row)])
        p = next((k for k, e in enumerate(v) if e), None)
        if p is None:
            return None
        if v[p] < 0:
            v = [-e for e in v]
        at = next((k for k, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.pivots.insert(at, p)
        self.rows.insert(at, v)
        return tuple(v)

    def canonical_rows(self):
        """Pivot-normalized, fully reduced rational rows and their pivots
        (the unique reduced echelon basis of the current span)."""
        rows = [list(row) for row in self.rows]
        for i in range(len(rows) - 1, -1, -1):
            p = self.pivots[i]
            lead = rows[i][p]
            for j in range(i):
                c = rows[j][p]
                if c:
                    rows[j] = _primitive([a * lead - c * b for a, b in zip(rows[j], rows[i])])
        canonical = []
        for p, row in zip(self.pivots, rows):
            lead = row[p]
            canonical.append(tuple(Fraction(e, lead) for e in row))
        return tuple(canonical), tuple(self.pivots)

    def to_subspace(self):
        rows, pivots = self.canonical_rows()
        return Subspace._from_canonical(self.length, rows, pivots)


def flatten_matrix(m: Matrix):
    return tuple(itertools.chain.from_iterable(m.rows))


def unflatten_matrix(vec, nrows, ncols) -> Matrix:
    return Matrix(tuple(tuple(vec[i * ncols : (i + 1) * ncols]) for i in range(nrows)))
