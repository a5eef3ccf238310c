"""New CDGAs from old: tensor products and circle extensions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cdga import Cdga, validate
from .cohomology import cohomology, cup_map_rank, resolve_cap
from .exterior import AlgebraError, Element, GradedAlgebra, as_scalar
from .linalg import SparseMatrix, kernel_basis


def transport(a: Element, target: GradedAlgebra, renaming: dict | None = None) -> Element:
    """Send ``a`` to ``target`` by matching generator names (after ``renaming``)."""
    renaming = renaming or {}
    src = a.algebra
    pos = []
    for n in src.names:
        tn = renaming.get(n, n)
        if tn not in target.index:
            raise AlgebraError(f"generator {n!r} has no counterpart in the target algebra")
        pos.append(target.index[tn])
    # generators may be reordered, so signs come from a re-sort
    out = target.zero()
    for m, c in a.terms.items():
        term = target.scalar(c)
        for i, e in enumerate(m):
            if e:
                g = target.monomial(tuple(e if j == pos[i] else 0 for j in range(target.ngens)))
                term = term * g
        out = out + term
    return out


def _fresh(name: str, taken: set) -> str:
    if name not in taken:
        return name
    k = 2
    while f"{name}_{k}" in taken:
        k += 1
    return f"{name}_{k}"


def tensor_with_maps(A: Cdga, B: Cdga, name: str | None = None):
    """``A ⊗ B`` plus the two inclusions (as callables on elements).

    Generators of ``B`` whose names collide with ``A`` get a ``_2`` style
    suffix.
    """
    taken = set(A.algebra.names)
    renaming = {}
    gens = list(A.algebra.generators)
    for n, d in B.algebra.generators:
        nn = _fresh(n, taken)
        taken.add(nn)
        renaming[n] = nn
        gens.append((nn, d))
    alg = GradedAlgebra(gens)
    spec = {n: transport(A.differential[n], alg) for n in A.algebra.names}
    for n in B.algebra.names:
        spec[renaming[n]] = transport(B.differential[n], alg, renaming)
    C = validate(alg, spec, name or f"{A.name}*{B.name}")
    return C, (lambda a: transport(a, alg)), (lambda b: transport(b, alg, renaming))


def tensor(A: Cdga, B: Cdga, name: str | None = None) -> Cdga:
    return tensor_with_maps(A, B, name)[0]


def tensor_power(A: Cdga, B: Cdga, times: int) -> Cdga:
    """``A ⊗ B ⊗ ... ⊗ B`` with ``times`` copies of ``B``."""
    out = A
    for _ in range(times):
        out = tensor(out, B)
    return out


def convolve(a: list[int], b: list[int], upto: int) -> list[int]:
    return [sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b))
            for k in range(upto + 1)]


def _check_two_form(A: Cdga, omega: Element):
    if omega.algebra != A.algebra:
        raise AlgebraError("omega belongs to a different algebra")
    if omega and omega.degrees() != {2}:
        raise ValueError(f"omega must be homogeneous of degree 2, got {omega}")
    if A.d(omega):
        raise ValueError(f"omega is not closed: d omega = {A.d(omega)}")


def circle_extension(A: Cdga, omega: Element, generator: str = "t", name: str | None = None) -> Cdga:
    """Adjoin a degree-1 generator ``t`` (appended last) with ``dt = omega``."""
    _check_two_form(A, omega)
    t = _fresh(generator, set(A.algebra.names))
    alg = GradedAlgebra(list(A.algebra.generators) + [(t, 1)])
    spec = {n: transport(A.differential[n], alg) for n in A.algebra.names}
    spec[t] = transport(omega, alg)
    return validate(alg, spec, name or f"{A.name}+S1")


def pullback(a: Element, E: Cdga) -> Element:
    return transport(a, E.algebra)


@dataclass(frozen=True)
class SymplecticClassChoice:
    """``lam*first + mu*second`` with ``lam, mu != 0`` and ``lam != -mu``."""

    lam: Fraction = Fraction(1)
    mu: Fraction = Fraction(1)

    def __post_init__(self):
        lam, mu = as_scalar(self.lam), as_scalar(self.mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        if not lam or not mu:
            raise ValueError("lam and mu must be nonzero")
        if lam + mu == 0:
            raise ValueError("lam must differ from -mu")

    def element(self, first: Element, second: Element) -> Element:
        return first * self.lam + second * self.mu


def g6_symplectic_form(A: Cdga, choice: SymplecticClassChoice | None = None) -> Element:
    """``lam (x1 x6 + x2 x5) + mu (x1 x6 - x3 x4)`` on the g6_15_m1 model."""
    choice = choice or SymplecticClassChoice()
    g = A.gen
    return choice.element(g("x1") * g("x6") + g("x2") * g("x5"), g("x1") * g("x6") - g("x3") * g("x4"))


def symplectic_check(A: Cdga, omega: Element, n: int) -> bool:
    if omega and omega.degrees() != {2}:
        raise ValueError("omega must have degree 2")
    return not A.d(omega) and bool(omega ** n)


@dataclass
class GysinReport:
    base_betti: list
    extension_betti: list
    predicted_betti: list
    cup_ranks: list
    pullback_kernels: dict = field(default_factory=dict)
    cup_images: dict = field(default_factory=dict)
    consistent: bool = True
    problems: list = field(default_factory=list)


class GysinInconsistency(RuntimeError):
    pass


def pullback_matrix(A: Cdga, E: Cdga, k: int) -> SparseMatrix:
    src = cohomology(A, k)
    dst = cohomology(E, k)
    cols = [dst.class_of(pullback(r, E)).coords for r in src.representatives]
    return SparseMatrix.from_columns(dst.dimension, cols)


def pullback_kernel(A: Cdga, E: Cdga, k: int):
    """Basis (as classes of ``A``) of ``ker(H^k(A) -> H^k(E))``."""
    src = cohomology(A, k)
    if src.dimension == 0:
        return []
    m = pullback_matrix(A, E, k)
    if m.nrows == 0:
        return src.classes()
    return [src.from_coordinates(v) for v in kernel_basis(m).basis]


def gysin_report(A: Cdga, omega: Element, max_degree: int | None = None, *, strict: bool = False) -> GysinReport:
    """Compare the extension's cohomology with the Gysin-sequence prediction.

    ``b_k(E) = (b_k - r_{k-2}) + (b_{k-1} - r_{k-1})`` where ``r_p`` is the
    rank of cupping with ``[omega]`` on ``H^p(A)``.  The kernel of pullback
    on ``H^k`` must also equal the image of cupping with ``[omega]``.
    """
    E = circle_extension(A, omega)
    top = resolve_cap(E, max_degree)
    base = [cohomology(A, k).dimension for k in range(top + 2)]
    ext = [cohomology(E, k).dimension for k in range(top + 1)]
    w = cohomology(A, 2).class_of(omega)
    ranks = [cup_map_rank(A, w, p) for p in range(top + 1)]
    r = lambda p: ranks[p] if p >= 0 else 0
    b = lambda p: base[p] if p >= 0 else 0
    predicted = [(b(k) - r(k - 2)) + (b(k - 1) - r(k - 1)) for k in range(top + 1)]
    report = GysinReport(base[: top + 1], ext, predicted, ranks)
    if ext != predicted:
        report.problems.append(f"extension Betti {ext} != predicted {predicted}")
    for k in range(top + 1):
        kern = pullback_kernel(A, E, k)
        report.pullback_kernels[k] = kern
        space = cohomology(A, k)
        image = [] if k < 2 else [w * h for h in cohomology(A, k - 2).classes()]
        report.cup_images[k] = image
        if space.span(kern) != space.span(image):
            report.problems.append(f"pullback kernel on H^{k} differs from the image of cup with omega")
    report.consistent = not report.problems
    if strict and not report.consistent:
        raise GysinInconsistency("; ".join(report.problems))
    return report
