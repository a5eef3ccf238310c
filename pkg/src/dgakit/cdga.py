"""Commutative differential graded algebras.

A :class:`Cdga` is a free graded-commutative algebra together with the
values of ``d`` on its generators; ``d`` is extended to everything by the
graded Leibniz rule.  Construction goes through :func:`validate`, which
rejects differentials of the wrong degree and those with ``d∘d != 0``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .exterior import AlgebraError, Element, GradedAlgebra, as_scalar
from .linalg import SparseMatrix


@dataclass(frozen=True)
class Diagnostic:
    generator: str
    message: str
    residue: str | None = None

    def __str__(self):
        if self.residue is None:
            return f"{self.generator}: {self.message}"
        return f"{self.generator}: {self.message} (residue {self.residue})"


class ValidationError(ValueError):
    """A differential failed validation; ``diagnostics`` lists every problem."""

    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class Cdga:
    """A validated CDGA.  Build instances with :func:`validate`."""

    def __init__(self, algebra: GradedAlgebra, differential: Mapping[str, Element], name: str = "cdga",
                 *, _checked: bool = False):
        self.algebra = algebra
        self.name = name
        self.differential = {n: differential.get(n, algebra.zero()) for n in algebra.names}
        self._gen_d = [self.differential[n] for n in algebra.names]
        self._mono_d: dict = {}
        self._matrices: dict = {}
        self._cohomology: dict = {}
        self.validated = _checked

    # -- basic structure --
    @property
    def generators(self):
        return self.algebra.generators

    @property
    def top_degree(self):
        return self.algebra.top_degree

    def gen(self, name: str) -> Element:
        return self.algebra.gen(name)

    def __eq__(self, other):
        return (isinstance(other, Cdga) and self.algebra == other.algebra
                and self.differential == other.differential)

    def __hash__(self):
        return hash((self.algebra, tuple(self._gen_d)))

    def __repr__(self):
        return f"Cdga({self.name!r}, {len(self.algebra.names)} generators)"

    def d(self, a: Element) -> Element:
        return extend_differential(self, a)

    def _d_monomial(self, m) -> dict:
        cached = self._mono_d.get(m)
        if cached is not None:
            return cached
        alg = self.algebra
        out = alg.zero()
        prefix = [0] * alg.ngens
        prefix_deg = 0
        for i, e in enumerate(m):
            if not e:
                continue
            dg = self._gen_d[i]
            if dg:
                # d(g^e) = e g^(e-1) dg, since an even g is central
                left_el = alg.monomial(tuple(prefix), e)
                low = [0] * alg.ngens
                low[i] = e - 1
                suffix = [0] * alg.ngens
                for j in range(i + 1, alg.ngens):
                    suffix[j] = m[j]
                term = left_el * alg.monomial(tuple(low)) * dg * alg.monomial(tuple(suffix))
                if prefix_deg % 2:
                    term = -term
                out = out + term
            prefix[i] = e
            prefix_deg += e * alg.degrees[i]
        self._mono_d[m] = out.terms
        return out.terms

    def matrix(self, k: int) -> SparseMatrix:
        """Matrix of ``d`` from degree ``k`` to ``k+1`` in the canonical bases."""
        if k not in self._matrices:
            src = self.algebra.basis(k)
            dst = self.algebra.basis(k + 1)
            index = {m: i for i, m in enumerate(dst)}
            entries = {}
            for j, m in enumerate(src):
                for mm, c in self._d_monomial(m).items():
                    entries[index[mm], j] = c
            self._matrices[k] = SparseMatrix(len(dst), len(src), entries)
        return self._matrices[k]


def extend_differential(cdga: Cdga, a: Element) -> Element:
    if a.algebra != cdga.algebra:
        raise AlgebraError("element belongs to a different algebra")
    out: dict = {}
    for m, c in a.terms.items():
        for mm, v in cdga._d_monomial(m).items():
            out[mm] = out.get(mm, 0) + c * v
    return Element(cdga.algebra, out)


def validate(generators, spec: Mapping[str, Element] | None = None, name: str = "cdga") -> Cdga:
    """Check a differential and return a validated :class:`Cdga`.

    ``generators`` is a :class:`GradedAlgebra` or a sequence of
    ``(name, degree)`` pairs; ``spec`` maps generator names to ``d`` of that
    generator (missing names mean ``d = 0``).
    """
    algebra = generators if isinstance(generators, GradedAlgebra) else GradedAlgebra(generators)
    spec = dict(spec or {})
    problems = []
    for gname in spec:
        if gname not in algebra.index:
            problems.append(Diagnostic(gname, "differential given for an undeclared generator"))
    for gname, deg in algebra.generators:
        dg = spec.get(gname)
        if dg is None:
            continue
        if dg.algebra != algebra:
            problems.append(Diagnostic(gname, "differential lives in a different algebra"))
            continue
        bad = sorted(dg.degrees() - {deg + 1})
        if bad:
            problems.append(Diagnostic(gname, f"d{gname} must have degree {deg + 1}, found degree(s) {bad}"))
    if problems:
        raise ValidationError(problems)
    raw = Cdga(algebra, spec, name)
    for gname in algebra.names:
        dd = raw.d(raw.differential[gname])
        if dd:
            problems.append(Diagnostic(gname, "d(d(%s)) is nonzero" % gname, str(dd)))
    if problems:
        raise ValidationError(problems)
    raw.validated = True
    return raw


def zero_differential(generators, name: str = "cdga") -> Cdga:
    return validate(generators, {}, name)


class StructureConstants:
    """Brackets ``[e_i, e_j] = sum_k c[i, j, k] e_k`` of a Lie algebra.

    ``brackets`` maps ``(i, j)`` with ``i < j`` (0-based) to ``{k: coeff}``;
    antisymmetry fills in the rest.
    """

    def __init__(self, n: int, brackets: Mapping[tuple[int, int], Mapping[int, object]],
                 names: Sequence[str] | None = None):
        self.n = n
        self.names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(n))
        c: dict = {}
        for (i, j), vals in brackets.items():
            if i == j:
                if any(as_scalar(v) for v in vals.values()):
                    raise ValueError(f"[e{i + 1}, e{i + 1}] must vanish")
                continue
            for k, v in vals.items():
                v = as_scalar(v)
                if not v:
                    continue
                if (i, j, k) in c and c[i, j, k] != v:
                    raise ValueError(f"conflicting constants for [e{i + 1}, e{j + 1}]")
                c[i, j, k] = v
                c[j, i, k] = -v
        self.c = c

    def get(self, i, j, k) -> Fraction:
        return self.c.get((i, j, k), Fraction(0))

    def jacobi_violations(self):
        """Triples ``(i, j, l)`` for which the Jacobi identity fails."""
        n = self.n
        bad = []
        for i, j, l in combinations(range(n), 3):
            for m in range(n):
                s = Fraction(0)
                for k in range(n):
                    s += (self.get(i, j, k) * self.get(k, l, m)
                          + self.get(j, l, k) * self.get(k, i, m)
                          + self.get(l, i, k) * self.get(k, j, m))
                if s:
                    bad.append((i, j, l))
                    break
        return bad


class JacobiError(ValueError):
    def __init__(self, triples):
        self.triples = triples
        pretty = ", ".join(f"({i + 1},{j + 1},{k + 1})" for i, j, k in triples)
        super().__init__(f"Jacobi identity fails for triples {pretty}")


def chevalley_eilenberg(sc: StructureConstants, name: str = "lie") -> Cdga:
    """Chevalley-Eilenberg complex: ``d x^k = -sum_{i<j} c_ij^k x^i x^j``."""
    bad = sc.jacobi_violations()
    if bad:
        raise JacobiError(bad)
    alg = GradedAlgebra((nm, 1) for nm in sc.names)
    gens = alg.gens()
    spec = {}
    for k in range(sc.n):
        dk = alg.zero()
        for i, j in combinations(range(sc.n), 2):
            c = sc.get(i, j, k)
            if c:
                dk = dk - c * gens[i] * gens[j]
        spec[sc.names[k]] = dk
    return validate(alg, spec, name)


def structure_constants_of(cdga: Cdga) -> StructureConstants:
    """Inverse of :func:`chevalley_eilenberg` for an algebra of degree-1 generators."""
    alg = cdga.algebra
    if any(d != 1 for d in alg.degrees):
        raise ValueError("structure constants need degree-1 generators only")
    brackets: dict = {}
    for k, nm in enumerate(alg.names):
        for m, c in cdga.differential[nm].terms.items():
            i, j = [p for p, e in enumerate(m) if e]
            brackets.setdefault((i, j), {})[k] = -c
    return StructureConstants(alg.ngens, brackets, alg.names)


# -- built-in algebras --

def _g6_15_m1() -> Cdga:
    alg = GradedAlgebra((f"x{i}", 1) for i in range(1, 7))
    x = {i: alg.gen(f"x{i}") for i in range(1, 7)}
    spec = {
        "x1": -x[2] * x[3],
        "x2": -x[2] * x[6],
        "x3": x[3] * x[6],
        "x4": -x[2] * x[6] - x[4] * x[6],
        "x5": -x[3] * x[6] + x[5] * x[6],
        "x6": alg.zero(),
    }
    return validate(alg, spec, "g6_15_m1")


def _abelian(n: int) -> Cdga:
    return zero_differential([(f"x{i}", 1) for i in range(1, n + 1)], f"abelian{n}")


def _heisenberg3() -> Cdga:
    sc = StructureConstants(3, {(0, 1): {2: 1}})
    return chevalley_eilenberg(sc, "heisenberg3")


def _s2_model() -> Cdga:
    alg = GradedAlgebra([("u", 2), ("v", 3)])
    u = alg.gen("u")
    return validate(alg, {"v": u * u}, "s2_model")


def _circle() -> Cdga:
    return zero_differential([("t", 1)], "circle")


def _point() -> Cdga:
    return zero_differential([], "point")


CATALOG_NAMES = ("g6_15_m1", "abelian(n)", "heisenberg3", "s2_model", "circle", "point")

_ABELIAN = re.compile(r"^abelian\(?(\d+)\)?$")


def catalog(name: str) -> Cdga:
    fixed = {
        "g6_15_m1": _g6_15_m1,
        "heisenberg3": _heisenberg3,
        "s2_model": _s2_model,
        "circle": _circle,
        "point": _point,
    }
    if name in fixed:
        return fixed[name]()
    m = _ABELIAN.match(name)
    if m:
        return _abelian(int(m.group(1)))
    raise KeyError(f"unknown catalog algebra {name!r}; known: {', '.join(CATALOG_NAMES)}")
