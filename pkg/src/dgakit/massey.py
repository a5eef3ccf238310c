"""Triple Massey products and a-Massey products.

A product is reported as a canonical representative class together with
the subspace of the target cohomology it is defined modulo.  It vanishes
iff the representative lies in that subspace.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .cdga import Cdga
from .cohomology import CohomologyClass, NotClosedError, class_of, cohomology, cup, cup_kernel, primitive
from .exterior import Element
from .linalg import Subspace


class MasseyPreconditionError(ValueError):
    """The cup products required to define the product do not vanish."""


@dataclass(frozen=True, eq=False)
class MasseyResult:
    classes: tuple
    degree: int
    representative: CohomologyClass
    cocycle: Element
    indeterminacy: Subspace
    vanishes: bool
    primitives: tuple

    @property
    def reduced(self) -> tuple:
        """Representative coordinates reduced modulo the indeterminacy."""
        return self.indeterminacy.reduce(self.representative.coords)

    def indeterminacy_classes(self) -> list[CohomologyClass]:
        space = self.representative.space
        return [space.from_coordinates(v) for v in self.indeterminacy.basis]


@dataclass(frozen=True, eq=False)
class AMasseyResult:
    classes: tuple
    representative: CohomologyClass
    cocycle: Element
    denominator: Subspace
    vanishes: bool
    primitives: tuple

    @property
    def degree(self) -> int:
        return 8

    @property
    def reduced(self) -> tuple:
        return self.denominator.reduce(self.representative.coords)

    def denominator_classes(self) -> list[CohomologyClass]:
        space = self.representative.space
        return [space.from_coordinates(v) for v in self.denominator.basis]


def _as_class(cdga: Cdga, a) -> CohomologyClass:
    if isinstance(a, CohomologyClass):
        if a.cdga != cdga:
            raise ValueError("class belongs to a different algebra")
        return a
    return class_of(cdga, a)


def _check_primitive(cdga: Cdga, xi: Element, target: Element, label: str):
    if cdga.d(xi) != target:
        raise ValueError(f"supplied primitive {label} = {xi} does not satisfy d{label} = {target}")


def _find_primitive(cdga: Cdga, target: Element, degree: int, label: str) -> Element:
    xi = primitive(cdga, target, degree)
    if xi is None:
        raise MasseyPreconditionError(f"{target} is not exact, so {label} does not exist")
    return xi


def triple_massey(cdga: Cdga, a1, a2, a3, *, primitives: tuple | None = None,
                  cap: int | None = None) -> MasseyResult:
    """``<a1, a2, a3>`` for classes (or cocycles) with ``a1 a2 = a2 a3 = 0``.

    With ``alpha_i`` the representatives and ``d xi12 = alpha1 alpha2``,
    ``d xi23 = alpha2 alpha3`` the value is
    ``[alpha1 xi23 + (-1)^(p1+1) xi12 alpha3]`` modulo
    ``a1 H^(p2+p3-1) + H^(p1+p2-1) a3``.  ``primitives`` overrides the
    canonical choice of ``(xi12, xi23)``.
    """
    a1, a2, a3 = (_as_class(cdga, a) for a in (a1, a2, a3))
    p1, p2, p3 = a1.degree, a2.degree, a3.degree
    n = p1 + p2 + p3 - 1
    if cap is not None and n > cap:
        raise ValueError(f"Massey product degree {n} exceeds cap {cap}")
    if not cup(a1, a2).is_zero():
        raise MasseyPreconditionError(f"a1*a2 = {cup(a1, a2)} is nonzero")
    if not cup(a2, a3).is_zero():
        raise MasseyPreconditionError(f"a2*a3 = {cup(a2, a3)} is nonzero")
    al1, al2, al3 = a1.representative, a2.representative, a3.representative
    t12 = al1 * al2
    t23 = al2 * al3
    if primitives is None:
        xi12 = _find_primitive(cdga, t12, p1 + p2, "xi12")
        xi23 = _find_primitive(cdga, t23, p2 + p3, "xi23")
    else:
        xi12, xi23 = primitives
        _check_primitive(cdga, xi12, t12, "xi12")
        _check_primitive(cdga, xi23, t23, "xi23")
    rho = al1 * xi23 + (xi12 * al3) * (-1) ** (p1 + 1)
    target = cohomology(cdga, n)
    rep = target.class_of(rho)
    gens = [cup(a1, h) for h in cohomology(cdga, p2 + p3 - 1).classes()]
    gens += [cup(h, a3) for h in cohomology(cdga, p1 + p2 - 1).classes()]
    indet = target.span(gens)
    return MasseyResult((a1, a2, a3), n, rep, rho, indet, indet.contains(rep.coords), (xi12, xi23))


def a_massey(cdga: Cdga, a, b1, b2, b3, *, primitives: tuple | None = None,
             cap: int | None = None) -> AMasseyResult:
    """The a-Massey product ``<a; b1, b2, b3>`` of degree-2 classes.

    Value ``[xi1 xi2 beta3 + xi2 xi3 beta1 + xi3 xi1 beta2]`` in ``H^8``
    with ``d xi_i = alpha beta_i``.  The denominator is spanned by
    ``v * h`` for ``h`` in a basis of ``H^3`` and ``v`` running over the
    representative and the indeterminacy basis of each ``<b_i, a, b_j>``.
    """
    if cap is not None and cap < 8:
        raise ValueError(f"a-Massey products live in degree 8, above the cap {cap}")
    a, b1, b2, b3 = (_as_class(cdga, x) for x in (a, b1, b2, b3))
    bs = (b1, b2, b3)
    for c in (a,) + bs:
        if c.degree != 2:
            raise ValueError(f"a-Massey arguments must have degree 2, got {c!r}")
    for i, b in enumerate(bs, 1):
        if not cup(a, b).is_zero():
            raise MasseyPreconditionError(f"a*b{i} is nonzero")
    alpha = a.representative
    betas = [b.representative for b in bs]
    targets = [alpha * beta for beta in betas]
    if primitives is None:
        xis = [_find_primitive(cdga, t, 4, f"xi{i}") for i, t in enumerate(targets, 1)]
    else:
        xis = list(primitives)
        for i, (xi, t) in enumerate(zip(xis, targets), 1):
            _check_primitive(cdga, xi, t, f"xi{i}")
    x1, x2, x3 = xis
    be1, be2, be3 = betas
    rho = x1 * x2 * be3 + x2 * x3 * be1 + x3 * x1 * be2
    if cdga.d(rho):
        raise NotClosedError(f"a-Massey representative is not closed: d = {cdga.d(rho)}")
    h8 = cohomology(cdga, 8)
    rep = h8.class_of(rho)
    h3 = cohomology(cdga, 3).classes()
    gens = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        inner = triple_massey(cdga, bs[i], a, bs[j])
        values = [inner.representative] + inner.indeterminacy_classes()
        for v in values:
            for h in h3:
                gens.append(cup(v, h))
    denom = h8.span(gens)
    return AMasseyResult((a, b1, b2, b3), rep, rho, denom, denom.contains(rep.coords), tuple(xis))


def massey_scan(cdga: Cdga, degrees, cap: int | None = None, *, full: bool = False) -> list[MasseyResult]:
    """Non-vanishing triple products among cohomology basis classes.

    ``degrees`` is one ``(p, q, r)`` triple or a list of them.  The middle
    class runs over a basis of ``H^q``; the outer classes run over bases of
    the kernels of cupping with it, so every defined triple of that shape is
    tried.  Unless ``full`` is set, a triple whose mirror image
    ``(a3, a2, a1)`` was already tried is skipped.
    """
    if degrees and isinstance(degrees[0], int):
        degrees = [tuple(degrees)]
    found = []
    seen = set()
    for p, q, r in degrees:
        if cap is not None and p + q + r - 1 > cap:
            raise ValueError(f"triple {(p, q, r)} lands above the cap {cap}")
        for mid in cohomology(cdga, q).classes():
            lefts = cup_kernel(mid, p, side="right")
            rights = cup_kernel(mid, r, side="left")
            for x, z in iproduct(lefts, rights):
                key = ((p, q, r), x.coords, mid.coords, z.coords)
                mirror = ((r, q, p), z.coords, mid.coords, x.coords)
                if key in seen or (not full and mirror in seen):
                    continue
                seen.add(key)
                res = triple_massey(cdga, x, mid, z)
                if not res.vanishes:
                    found.append(res)
    return found


def perturbed_primitives(result, closed_perturbations):
    """Primitives shifted by closed elements, for choice-independence checks."""
    return tuple(xi + z for xi, z in zip(result.primitives, closed_perturbations))


def closed_elements(cdga: Cdga, k: int) -> list[Element]:
    """A basis of the degree-``k`` cocycles."""
    space = cohomology(cdga, k)
    return [Element.from_vector(cdga.algebra, space.basis, v) for v in space.cocycles.basis]


def random_closed(cdga: Cdga, k: int, rng) -> Element:
    out = cdga.algebra.zero()
    for z in closed_elements(cdga, k):
        out = out + z * Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    return out
