"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`~fractions.Fraction`.  Subspaces are stored
in reduced row echelon form, so two subspaces are equal iff their stored
bases are equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .kernels import rref_rows

ZERO = Fraction(0)


class LinAlgError(ValueError):
    pass


def _vec(v) -> tuple:
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in v)


class SparseMatrix:
    """A rows x cols rational matrix stored as ``{(row, col): value}``."""

    def __init__(self, nrows: int, ncols: int, entries: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise LinAlgError(f"index {(i, j)} out of range for {nrows}x{ncols}")
            v = Fraction(v)
            if v:
                self.entries[i, j] = v

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Sequence]) -> "SparseMatrix":
        return cls(nrows, len(columns), {(i, j): v for j, c in enumerate(columns) for i, v in enumerate(c) if v})

    def dense(self) -> list[list[Fraction]]:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()})

    def matvec(self, v) -> tuple:
        if len(v) != self.ncols:
            raise LinAlgError("dimension mismatch")
        out = [ZERO] * self.nrows
        for (i, j), a in self.entries.items():
            if v[j]:
                out[i] += a * v[j]
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.nrows == other.nrows
                and self.ncols == other.ncols and self.entries == other.entries)

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"


def rref(m: SparseMatrix):
    """Return ``(reduced, rank, pivot_columns)``; zero rows are kept at the bottom."""
    rows, pivots = rref_rows(m.dense(), m.ncols)
    reduced = rows + [[ZERO] * m.ncols for _ in range(m.nrows - len(rows))]
    return SparseMatrix.from_dense(reduced) if m.nrows else SparseMatrix(0, m.ncols), len(pivots), pivots


class Subspace:
    """Subspace of Q^n with a canonical (fully reduced echelon) basis."""

    __slots__ = ("dim", "basis", "pivots")

    def __init__(self, dim: int, vectors: Iterable = ()):
        vectors = [_vec(v) for v in vectors]
        for v in vectors:
            if len(v) != dim:
                raise LinAlgError(f"vector of length {len(v)} in ambient dimension {dim}")
        rows, pivots = rref_rows(vectors, dim) if vectors else ([], [])
        self.dim = dim
        self.basis = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, dim: int) -> "Subspace":
        return cls(dim)

    @classmethod
    def full(cls, dim: int) -> "Subspace":
        return cls(dim, [unit_vector(dim, i) for i in range(dim)])

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, rank={len(self.basis)})"

    def reduce(self, v) -> tuple:
        """Canonical representative of ``v`` modulo this subspace."""
        v = list(_vec(v))
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] -= c * x
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def echelon_coordinates(self, v) -> tuple:
        """Coefficients of ``v`` against the stored basis (``v`` must lie in the span)."""
        v = _vec(v)
        if not self.contains(v):
            raise LinAlgError("vector not in subspace")
        return tuple(v[p] for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.dim != self.dim:
            raise LinAlgError("ambient dimensions differ")
        return Subspace(self.dim, self.basis + other.basis)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)


def unit_vector(n: int, i: int) -> tuple:
    return tuple(Fraction(1) if j == i else ZERO for j in range(n))


def kernel_basis(m: SparseMatrix) -> Subspace:
    reduced, rank, pivots = rref(m)
    rows = reduced.dense()
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    vectors = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        vectors.append(v)
    return Subspace(m.ncols, vectors)


def image_basis(m: SparseMatrix) -> Subspace:
    return Subspace(m.nrows, m.transpose().dense())


def rank(m: SparseMatrix) -> int:
    return rref(m)[1]


def solve_in_image(m: SparseMatrix, target):
    """Canonical solution ``r`` of ``m r = target``, or None if there is none.

    Free variables (non-pivot columns of the reduced matrix) are set to zero.
    """
    target = _vec(target)
    if len(target) != m.nrows:
        raise LinAlgError("target has wrong length")
    if not any(target):
        return tuple([ZERO] * m.ncols)
    dense = m.dense()
    aug = [row + [t] for row, t in zip(dense, target)]
    rows, pivots = rref_rows(aug, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    out = [ZERO] * m.ncols
    for row, p in zip(rows, pivots):
        out[p] = row[m.ncols]
    return tuple(out)


@dataclass(frozen=True)
class QuotientSpace:
    """``numerator / divisor`` with a chosen basis of coset representatives.

    The representatives are numerator basis vectors, taken greedily in the
    numerator's echelon order.
    """

    numerator: Subspace
    divisor: Subspace
    representatives: tuple = field(default=())
    _coords: object = field(default=None, repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.representatives)

    def contains(self, v) -> bool:
        return self.numerator.contains(v)

    def is_zero(self, v) -> bool:
        """True iff ``v`` lies in the divisor."""
        return self.divisor.contains(v)

    def coordinates(self, v) -> tuple:
        """Coordinates of the coset ``v + divisor`` in the representative basis."""
        if not self.numerator.contains(v):
            raise LinAlgError("vector is not in the numerator")
        r = self.divisor.reduce(v)
        return self._coords.echelon_coordinates_in(r)

    def lift(self, coords) -> tuple:
        n = self.numerator.dim
        out = [ZERO] * n
        for c, rep in zip(coords, self.representatives):
            if c:
                for j, x in enumerate(rep):
                    out[j] += c * x
        return tuple(out)


class _Coordinatizer:
    """Coordinates against a fixed list of independent vectors."""

    def __init__(self, dim: int, vectors: Sequence[tuple]):
        k = len(vectors)
        aug = [list(v) + [Fraction(int(i == j)) for j in range(k)] for i, v in enumerate(vectors)]
        rows, pivots = rref_rows(aug, dim + k) if aug else ([], [])
        if any(p >= dim for p in pivots):
            raise LinAlgError("vectors are linearly dependent")
        self.dim = dim
        self.echelon = [r[:dim] for r in rows]
        self.transform = [r[dim:] for r in rows]
        self.pivots = pivots
        self.k = k

    def echelon_coordinates_in(self, v) -> tuple:
        v = _vec(v)
        resid = list(v)
        coeffs = [ZERO] * self.k
        for row, t, p in zip(self.echelon, self.transform, self.pivots):
            c = resid[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        resid[j] -= c * x
                for j, x in enumerate(t):
                    if x:
                        coeffs[j] += c * x
        if any(resid):
            raise LinAlgError("vector not in the span")
        return tuple(coeffs)


def quotient(numerator: Subspace, divisor: Subspace) -> QuotientSpace:
    if numerator.dim != divisor.dim:
        raise LinAlgError("ambient dimensions differ")
    if not divisor.issubspace(numerator):
        raise LinAlgError("divisor is not contained in the numerator")
    reps = []
    reduced = []
    span = divisor
    for v in numerator.basis:
        if not span.contains(v):
            reps.append(v)
            reduced.append(divisor.reduce(v))
            span = span + Subspace(numerator.dim, [v])
    coords = _Coordinatizer(numerator.dim, reduced)
    return QuotientSpace(numerator, divisor, tuple(reps), coords)
