"""Free graded-commutative algebras with exact rational coefficients.

A monomial is an exponent tuple aligned with the generator list; odd-degree
generators carry exponent 0 or 1.  Elements are immutable maps from
monomials to nonzero :class:`fractions.Fraction` coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels

Monomial = tuple


class AlgebraError(ValueError):
    """Raised for mismatched algebras or unknown generators."""


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


class GradedAlgebra:
    """The free graded-commutative algebra on named generators.

    Two algebras with the same generator names and degrees (in the same
    order) compare equal and are interchangeable.
    """

    def __init__(self, generators: Iterable[tuple[str, int]]):
        gens = tuple((str(n), int(d)) for n, d in generators)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate generator names in {names}")
        for n, d in gens:
            if d < 1:
                raise AlgebraError(f"generator {n} has degree {d} < 1")
        self.generators = gens
        self.names = tuple(names)
        self.degrees = tuple(d for _, d in gens)
        self.odd = tuple(bool(d % 2) for d in self.degrees)
        self.index = {n: i for i, n in enumerate(self.names)}
        self._basis_cache: dict[int, list[Monomial]] = {}

    @property
    def ngens(self) -> int:
        return len(self.names)

    @property
    def top_degree(self):
        """Highest nonzero degree, or None if some generator is even."""
        if not all(self.odd):
            return None
        return sum(self.degrees)

    def __eq__(self, other):
        return isinstance(other, GradedAlgebra) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        gens = ", ".join(f"{n}:{d}" for n, d in self.generators)
        return f"GradedAlgebra({gens})"

    def unit_monomial(self) -> Monomial:
        return (0,) * self.ngens

    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def gen(self, name: str) -> "Element":
        try:
            i = self.index[name]
        except KeyError:
            raise AlgebraError(f"unknown generator {name!r}") from None
        m = [0] * self.ngens
        m[i] = 1
        return Element(self, {tuple(m): Fraction(1)})

    def gens(self) -> list["Element"]:
        return [self.gen(n) for n in self.names]

    def one(self) -> "Element":
        return Element(self, {self.unit_monomial(): Fraction(1)})

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return self.one() * c

    def monomial(self, m: Monomial, coeff=1) -> "Element":
        return Element(self, {tuple(m): as_scalar(coeff)})

    def basis(self, k: int) -> list[Monomial]:
        """Monomials of total degree ``k`` in canonical order (cached)."""
        if k not in self._basis_cache:
            self._basis_cache[k] = _enumerate_basis(self, k)
        return self._basis_cache[k]

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def monomial_key(algebra: GradedAlgebra, m: Monomial):
    """Sort key: total degree, then lexicographic with x1 before x2."""
    return (algebra.monomial_degree(m), tuple(-e for e in m))


def _enumerate_basis(algebra: GradedAlgebra, k: int) -> list[Monomial]:
    if k < 0:
        return []
    n = algebra.ngens
    out = []
    exps = [0] * n

    def rec(i, remaining):
        if remaining == 0:
            out.append(tuple(exps))
            return
        if i == n:
            return
        d = algebra.degrees[i]
        top = 1 if algebra.odd[i] else remaining // d
        # larger exponents on earlier generators come first
        for e in range(min(top, remaining // d), -1, -1):
            exps[i] = e
            rec(i + 1, remaining - e * d)
        exps[i] = 0

    rec(0, k)
    return out


def basis_of_degree(algebra: GradedAlgebra, k: int, cap: int | None = None) -> list[Monomial]:
    if cap is not None and k > cap:
        raise ValueError(f"degree {k} exceeds cap {cap}")
    return list(algebra.basis(k))


class Element:
    """An immutable element of a :class:`GradedAlgebra`."""

    __slots__ = ("algebra", "terms", "_hash")

    def __init__(self, algebra: GradedAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    # -- inspection --
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {self.algebra.monomial_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """Degree of a homogeneous element; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise AlgebraError(f"element {self} is not homogeneous")
        return degs.pop()

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def sorted_terms(self):
        key = lambda item: monomial_key(self.algebra, item[0])
        return sorted(self.terms.items(), key=key)

    def vector(self, basis: Sequence[Monomial]) -> list[Fraction]:
        """Coordinates against ``basis``; every monomial must be in it."""
        index = {m: i for i, m in enumerate(basis)}
        v = [Fraction(0)] * len(basis)
        for m, c in self.terms.items():
            try:
                v[index[m]] = c
            except KeyError:
                raise AlgebraError(f"monomial {self.algebra.format_monomial(m)} not in basis") from None
        return v

    @classmethod
    def from_vector(cls, algebra, basis, vector) -> "Element":
        return cls(algebra, {m: as_scalar(c) for m, c in zip(basis, vector) if c})

    # -- arithmetic --
    def _check(self, other):
        if not isinstance(other, Element):
            return self.algebra.scalar(other)
        if other.algebra != self.algebra:
            raise AlgebraError("elements belong to different algebras")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        c = as_scalar(other)
        return Element(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, Element):
            return multiply(other, self)
        return self * other

    def __truediv__(self, other):
        return self * (1 / as_scalar(other))

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra == other.algebra and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.algebra, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = self.algebra.format_monomial(m)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Element({self})"


def normalize_word(algebra: GradedAlgebra, word: Sequence[str]):
    """Sort a word of generator names into a monomial.

    Returns ``(sign, monomial)``, or ``None`` when an odd generator repeats.
    The sign is the parity of inversions among odd-degree letters.
    """
    idx = []
    for name in word:
        if name not in algebra.index:
            raise AlgebraError(f"unknown generator {name!r}")
        idx.append(algebra.index[name])
    odd_positions = [i for i in idx if algebra.odd[i]]
    if len(set(odd_positions)) != len(odd_positions):
        return None
    inversions = sum(1 for a, b in combinations(odd_positions, 2) if a > b)
    m = [0] * algebra.ngens
    for i in idx:
        m[i] += 1
    return (-1 if inversions % 2 else 1), tuple(m)


def multiply(a: Element, b: Element) -> Element:
    if a.algebra != b.algebra:
        raise AlgebraError("elements belong to different algebras")
    return Element(a.algebra, kernels.mul_terms(a.terms, b.terms, a.algebra.odd))


def linear_combine(terms: Iterable[tuple[object, Element]], algebra: GradedAlgebra | None = None) -> Element:
    terms = list(terms)
    if not terms:
        if algebra is None:
            raise AlgebraError("empty combination needs an explicit algebra")
        return algebra.zero()
    alg = algebra or terms[0][1].algebra
    out: dict = {}
    for c, e in terms:
        if e.algebra != alg:
            raise AlgebraError("elements belong to different algebras")
        c = as_scalar(c)
        for m, v in e.terms.items():
            out[m] = out.get(m, 0) + c * v
    return Element(alg, out)
