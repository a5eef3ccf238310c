"""Cohomology of a CDGA, degree by degree.

``H^k = ker(d_k) / im(d_{k-1})`` is computed exactly.  Representatives are
cocycle basis vectors (echelon order over the canonical monomial basis), so
they are deterministic but need not match any hand-picked basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cdga import Cdga
from .exterior import AlgebraError, Element
from .linalg import (QuotientSpace, SparseMatrix, Subspace, image_basis, kernel_basis, quotient,
                     rank as matrix_rank, solve_in_image)


class NotClosedError(ValueError):
    """An element that should be a cocycle has nonzero differential."""


class CohomologySpace:
    def __init__(self, cdga: Cdga, k: int):
        self.cdga = cdga
        self.degree = k
        alg = cdga.algebra
        self.basis = alg.basis(k)
        n = len(self.basis)
        self.cocycles = kernel_basis(cdga.matrix(k)) if n else Subspace(0)
        if k >= 1 and alg.basis(k - 1):
            self.coboundaries = image_basis(cdga.matrix(k - 1))
        else:
            self.coboundaries = Subspace(n)
        self.quotient: QuotientSpace = quotient(self.cocycles, self.coboundaries)
        self.representatives = [Element.from_vector(alg, self.basis, v)
                                for v in self.quotient.representatives]

    @property
    def dimension(self) -> int:
        return self.quotient.dimension

    def __len__(self):
        return self.dimension

    def __repr__(self):
        return f"CohomologySpace({self.cdga.name}, H^{self.degree}, dim={self.dimension})"

    def _vector(self, a: Element) -> tuple:
        if a.algebra != self.cdga.algebra:
            raise AlgebraError("element belongs to a different algebra")
        if a and a.degrees() != {self.degree}:
            raise AlgebraError(f"element {a} is not homogeneous of degree {self.degree}")
        return tuple(a.vector(self.basis))

    def coordinates(self, a: Element) -> tuple:
        """Coordinates of ``[a]`` in the representative basis."""
        v = self._vector(a)
        if not self.cocycles.contains(v):
            raise NotClosedError(f"{a} is not closed: d = {self.cdga.d(a)}")
        return self.quotient.coordinates(v)

    def class_of(self, a: Element) -> "CohomologyClass":
        return CohomologyClass(self, self.coordinates(a), a)

    def from_coordinates(self, coords: Sequence) -> "CohomologyClass":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.dimension:
            raise ValueError("wrong number of coordinates")
        rep = self.cdga.algebra.zero()
        for c, r in zip(coords, self.representatives):
            if c:
                rep = rep + r * c
        return CohomologyClass(self, coords, rep)

    def classes(self) -> list["CohomologyClass"]:
        return [CohomologyClass(self, tuple(Fraction(int(i == j)) for j in range(self.dimension)), r)
                for i, r in enumerate(self.representatives)]

    def zero(self) -> "CohomologyClass":
        return CohomologyClass(self, (Fraction(0),) * self.dimension, self.cdga.algebra.zero())

    def span(self, classes) -> Subspace:
        """Subspace of coordinate space spanned by ``classes``."""
        return Subspace(self.dimension, [c.coords for c in classes])

    def is_exact(self, a: Element) -> bool:
        return not any(self.coordinates(a))


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    space: CohomologySpace
    coords: tuple
    representative: Element

    @property
    def degree(self) -> int:
        return self.space.degree

    @property
    def cdga(self) -> Cdga:
        return self.space.cdga

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        return (isinstance(other, CohomologyClass) and self.space.cdga == other.space.cdga
                and self.degree == other.degree and self.coords == other.coords)

    def __hash__(self):
        return hash((self.degree, self.coords))

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if other.space is not self.space and (other.degree != self.degree or other.cdga != self.cdga):
            raise ValueError("classes live in different cohomology spaces")
        return CohomologyClass(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)),
                               self.representative + other.representative)

    def __mul__(self, c) -> "CohomologyClass":
        if isinstance(c, CohomologyClass):
            return cup(self, c)
        c = Fraction(c)
        return CohomologyClass(self.space, tuple(x * c for x in self.coords), self.representative * c)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return f"[{self.representative}] in H^{self.degree}"


def cohomology(cdga: Cdga, k: int, cap: int | None = None) -> CohomologySpace:
    if cap is not None and k > cap:
        raise ValueError(f"degree {k} exceeds cap {cap}")
    if k not in cdga._cohomology:
        cdga._cohomology[k] = CohomologySpace(cdga, k)
    return cdga._cohomology[k]


def resolve_cap(cdga: Cdga, cap: int | None) -> int:
    if cap is not None:
        return cap
    if cdga.top_degree is None:
        raise ValueError(f"{cdga.name} has even-degree generators; an explicit max degree is required")
    return cdga.top_degree


def betti_numbers(cdga: Cdga, cap: int | None = None) -> list[int]:
    cap = resolve_cap(cdga, cap)
    return [cohomology(cdga, k).dimension for k in range(cap + 1)]


def euler_characteristic(values: Sequence[int]) -> int:
    return sum((-1) ** k * v for k, v in enumerate(values))


def cochain_dimensions(cdga: Cdga, cap: int | None = None) -> list[int]:
    cap = resolve_cap(cdga, cap)
    return [len(cdga.algebra.basis(k)) for k in range(cap + 1)]


def class_of(cdga: Cdga, a: Element, degree: int | None = None) -> CohomologyClass:
    k = a.degree if degree is None else degree
    if k is None:
        raise ValueError("degree of the zero element must be given explicitly")
    return cohomology(cdga, k).class_of(a)


def is_exact(cdga: Cdga, a: Element):
    """``(True, primitive)`` if ``a = d(primitive)``, else ``(False, None)``.

    ``a`` must be closed and homogeneous.
    """
    if cdga.d(a):
        raise NotClosedError(f"{a} is not closed")
    if not a:
        return True, cdga.algebra.zero()
    k = a.degree
    alg = cdga.algebra
    src = alg.basis(k - 1)
    if not src:
        return False, None
    sol = solve_in_image(cdga.matrix(k - 1), a.vector(alg.basis(k)))
    if sol is None:
        return False, None
    return True, Element.from_vector(alg, src, sol)


def primitive(cdga: Cdga, a: Element, degree: int):
    """Canonical ``xi`` of degree ``degree - 1`` with ``d xi = a``, or None."""
    alg = cdga.algebra
    if not a:
        return alg.zero()
    src = alg.basis(degree - 1)
    if not src:
        return None
    sol = solve_in_image(cdga.matrix(degree - 1), a.vector(alg.basis(degree)))
    if sol is None:
        return None
    return Element.from_vector(alg, src, sol)


def cup(a: CohomologyClass, b: CohomologyClass, cap: int | None = None) -> CohomologyClass:
    if a.cdga != b.cdga:
        raise ValueError("classes from different algebras")
    k = a.degree + b.degree
    if cap is not None and k > cap:
        raise ValueError(f"cup product degree {k} exceeds cap {cap}")
    return cohomology(a.cdga, k).class_of(a.representative * b.representative)


def cup_matrix(c: CohomologyClass, p: int, side: str = "right") -> SparseMatrix:
    """Matrix of ``x -> x * c`` (``side="right"``) or ``x -> c * x`` on ``H^p``."""
    cdga = c.cdga
    src = cohomology(cdga, p)
    dst = cohomology(cdga, p + c.degree)
    cols = []
    for x in src.classes():
        y = cup(x, c) if side == "right" else cup(c, x)
        cols.append(y.coords)
    return SparseMatrix.from_columns(dst.dimension, cols)


def cup_map_rank(cdga: Cdga, c: CohomologyClass, p: int) -> int:
    m = cup_matrix(c, p, side="left")
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return matrix_rank(m)


def cup_kernel(c: CohomologyClass, p: int, side: str = "right") -> list[CohomologyClass]:
    """Basis of the classes ``x`` in ``H^p`` with ``x*c = 0`` (or ``c*x = 0``)."""
    src = cohomology(c.cdga, p)
    m = cup_matrix(c, p, side)
    if src.dimension == 0:
        return []
    if m.nrows == 0:
        return src.classes()
    return [src.from_coordinates(v) for v in kernel_basis(m).basis]
