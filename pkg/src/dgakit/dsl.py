"""A small text format for algebras and elements.

::

    algebra g6_15_m1 {
      generators: x1:1, x2:1, x3:1, x4:1, x5:1, x6:1
      d x1 = -x2*x3          # comments run to the end of the line
      ...
    }

Instead of ``d`` lines a Lie algebra may be given by brackets of
degree-1 generators, ``[x2, x3] = x1``; its Chevalley-Eilenberg complex
is used.  The ``algebra NAME { ... }`` wrapper is optional.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .cdga import Cdga, StructureConstants, chevalley_eilenberg, validate
from .exterior import Element, GradedAlgebra


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    message: str
    line: int
    column: int
    excerpt: str

    def __str__(self):
        caret = " " * (self.column - 1) + "^"
        return f"{self.severity}: {self.line}:{self.column}: {self.message}\n  {self.excerpt}\n  {caret}"


class DslError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int
    line: int
    col: int


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>\d+)
  | (?P<sym>[{}:,=+\-*/()^\[\]])
""", re.VERBOSE)

RESERVED = {"d", "algebra", "generators"}


class _Source:
    def __init__(self, text: str):
        self.text = text
        self.lines = text.split("\n")
        self.diagnostics: list[Diagnostic] = []

    def error(self, message: str, line: int, col: int):
        excerpt = self.lines[line - 1] if 0 < line <= len(self.lines) else ""
        self.diagnostics.append(Diagnostic("error", message, line, col, excerpt))

    def error_at(self, tok: Token, message: str):
        self.error(message, tok.line, tok.col)

    def tokenize(self) -> list[Token]:
        out = []
        i, line, line_start = 0, 1, 0
        text = self.text
        while i < len(text):
            m = _TOKEN.match(text, i)
            if m is None:
                self.error(f"unexpected character {text[i]!r}", line, i - line_start + 1)
                i += 1
                continue
            kind = m.lastgroup
            if kind != "ws":
                out.append(Token(kind, m.group(), i, line, i - line_start + 1))
            chunk = m.group()
            nl = chunk.count("\n")
            if nl:
                line += nl
                line_start = i + chunk.rindex("\n") + 1
            i = m.end()
        last_line = len(self.lines)
        out.append(Token("eof", "", len(text), last_line, len(self.lines[-1]) + 1))
        return out


class _Syntax(Exception):
    pass


class _Parser:
    """Recursive descent over tokens, producing expression trees."""

    def __init__(self, src: _Source, tokens: list[Token]):
        self.src = src
        self.toks = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, text) -> bool:
        return self.tok.kind in ("sym", "ident") and self.tok.text == text

    def expect(self, text) -> Token:
        if not self.at(text):
            raise self.fail(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def fail(self, message, tok=None):
        self.src.error_at(tok or self.tok, message)
        return _Syntax()

    def ident(self) -> Token:
        if self.tok.kind != "ident":
            raise self.fail(f"expected a name, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    # expr := term (('+'|'-') term)*
    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()
            node = ("add" if op.text == "+" else "sub", op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at("*"):
            op = self.advance()
            node = ("mul", op, node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            op = self.advance()
            return ("neg", op, self.unary())
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.at("^"):
            op = self.advance()
            if self.tok.kind != "int":
                raise self.fail("exponent must be a non-negative integer")
            node = ("pow", op, node, int(self.advance().text))
        return node

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            value = Fraction(int(t.text))
            if self.at("/") and self.peek().kind == "int":
                self.advance()
                den = self.advance()
                if int(den.text) == 0:
                    raise self.fail("division by zero", den)
                value /= int(den.text)
            return ("num", t, value)
        if t.kind == "ident" and t.text not in RESERVED:
            self.advance()
            return ("gen", t, t.text)
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise self.fail(f"expected an expression, found {t.text or 'end of input'!r}")

    # -- statements --
    def starts_statement(self) -> bool:
        t = self.tok
        if t.kind == "eof" or self.at("}") or self.at("[") or self.at("generators"):
            return True
        return t.text == "d" and t.kind == "ident" and self.peek().kind == "ident"

    def recover(self, start: int):
        if self.i == start:
            self.advance()
        while not self.starts_statement():
            self.advance()


@dataclass
class AlgebraDocument:
    name: str
    generators: list = field(default_factory=list)
    differentials: list = field(default_factory=list)
    brackets: list = field(default_factory=list)
    algebra: GradedAlgebra | None = None
    differential: dict = field(default_factory=dict)
    bracket_constants: dict = field(default_factory=dict)

    def to_cdga(self) -> Cdga:
        if self.brackets:
            sc = StructureConstants(self.algebra.ngens, self.bracket_constants, self.algebra.names)
            return chevalley_eilenberg(sc, self.name)
        return validate(self.algebra, self.differential, self.name)


class _Evaluator:
    def __init__(self, src: _Source, algebra: GradedAlgebra):
        self.src = src
        self.algebra = algebra
        self.ok = True

    def eval(self, node):
        kind = node[0]
        alg = self.algebra
        if kind == "num":
            return alg.scalar(node[2])
        if kind == "gen":
            name = node[2]
            if name not in alg.index:
                self.src.error_at(node[1], f"unknown generator {name!r}")
                self.ok = False
                return alg.zero()
            return alg.gen(name)
        if kind == "neg":
            return -self.eval(node[2])
        if kind == "pow":
            return self.eval(node[2]) ** node[3]
        left, right = self.eval(node[2]), self.eval(node[3])
        if kind == "mul":
            return left * right
        if left and right and left.is_homogeneous() and right.is_homogeneous() and left.degree != right.degree:
            self.src.error_at(node[1], f"degree mismatch: adding degree {left.degree} and degree {right.degree}")
            self.ok = False
        return left + right if kind == "add" else left - right


def _parse_document(src: _Source) -> AlgebraDocument:
    p = _Parser(src, src.tokenize())
    doc = AlgebraDocument("anonymous")
    braced = False
    try:
        if p.at("algebra"):
            p.advance()
            doc.name = p.ident().text
            p.expect("{")
            braced = True
    except _Syntax:
        pass
    while True:
        if p.tok.kind == "eof":
            if braced:
                p.fail("missing closing '}'")
            break
        if p.at("}"):
            if not braced:
                p.fail("unexpected '}'")
            p.advance()
            if p.tok.kind != "eof":
                p.fail("unexpected text after the closing '}'")
            break
        start = p.i
        try:
            if p.at("generators"):
                p.advance()
                p.expect(":")
                while True:
                    name = p.ident()
                    p.expect(":")
                    if p.tok.kind != "int":
                        raise p.fail("generator degree must be a positive integer")
                    deg = p.advance()
                    doc.generators.append((name, deg))
                    if not p.at(","):
                        break
                    p.advance()
            elif p.at("d") and p.peek().kind == "ident":
                p.advance()
                gen = p.ident()
                p.expect("=")
                doc.differentials.append((gen, p.expr()))
            elif p.at("["):
                open_tok = p.advance()
                a = p.ident()
                p.expect(",")
                b = p.ident()
                p.expect("]")
                p.expect("=")
                doc.brackets.append((open_tok, a, b, p.expr()))
            else:
                raise p.fail(f"expected 'generators', 'd <name> = ...' or a bracket, found {p.tok.text!r}")
            if not p.starts_statement():
                raise p.fail(f"unexpected {p.tok.text!r}")
        except _Syntax:
            p.recover(start)
    return doc


def _build(src: _Source, doc: AlgebraDocument) -> AlgebraDocument:
    seen = {}
    gens = []
    for name, deg in doc.generators:
        if name.text in RESERVED:
            src.error_at(name, f"{name.text!r} is reserved and cannot name a generator")
        elif name.text in seen:
            src.error_at(name, f"duplicate generator {name.text!r}")
        elif int(deg.text) < 1:
            src.error_at(deg, "generator degree must be at least 1")
        else:
            seen[name.text] = int(deg.text)
            gens.append((name.text, int(deg.text)))
    alg = GradedAlgebra(gens)
    doc.algebra = alg
    ev = _Evaluator(src, alg)
    if doc.differentials and doc.brackets:
        src.error_at(doc.brackets[0][0], "use either differential lines or brackets, not both")
    for gen, node in doc.differentials:
        value = ev.eval(node)
        if gen.text not in alg.index:
            src.error_at(gen, f"unknown generator {gen.text!r}")
            continue
        if gen.text in doc.differential:
            src.error_at(gen, f"second differential for {gen.text!r}")
            continue
        want = alg.degrees[alg.index[gen.text]] + 1
        if value and value.is_homogeneous() and value.degree != want:
            src.error_at(_first_token(node), f"degree mismatch: d {gen.text} must have degree {want}, "
                                             f"expression has degree {value.degree}")
        elif value and not value.is_homogeneous():
            src.error_at(_first_token(node), f"d {gen.text} is not homogeneous")
        doc.differential[gen.text] = value
    for open_tok, a, b, node in doc.brackets:
        value = ev.eval(node)
        bad = [t for t in (a, b) if t.text not in alg.index]
        for t in bad:
            src.error_at(t, f"unknown generator {t.text!r}")
        if bad:
            continue
        if any(d != 1 for d in alg.degrees):
            src.error_at(open_tok, "brackets need every generator to have degree 1")
            continue
        if value and value.degrees() != {1}:
            src.error_at(_first_token(node), "a bracket must be a linear combination of generators")
            continue
        i, j = alg.index[a.text], alg.index[b.text]
        if i == j:
            src.error_at(open_tok, "a generator's bracket with itself is zero")
            continue
        if i > j:
            i, j, value = j, i, -value
        vals = {m.index(1): c for m, c in value.terms.items()}
        if (i, j) in doc.bracket_constants:
            src.error_at(open_tok, "bracket given twice")
            continue
        doc.bracket_constants[i, j] = vals
    return doc


def _first_token(node) -> Token:
    while node[0] in ("add", "sub", "mul", "pow"):
        node = node[2]
    return node[1]


def parse_algebra(text: str) -> AlgebraDocument:
    """Parse a document; raises :class:`DslError` with every problem found."""
    src = _Source(text)
    doc = _parse_document(src)
    _build(src, doc)
    if src.diagnostics:
        raise DslError(sorted(src.diagnostics, key=lambda d: (d.line, d.column)))
    return doc


def load_algebra(text: str) -> Cdga:
    return parse_algebra(text).to_cdga()


def parse_element(text: str, cdga_or_algebra) -> Element:
    alg = cdga_or_algebra.algebra if isinstance(cdga_or_algebra, Cdga) else cdga_or_algebra
    src = _Source(text)
    p = _Parser(src, src.tokenize())
    try:
        node = p.expr()
        if p.tok.kind != "eof":
            raise p.fail(f"unexpected {p.tok.text!r}")
    except _Syntax:
        raise DslError(src.diagnostics) from None
    ev = _Evaluator(src, alg)
    value = ev.eval(node)
    if src.diagnostics:
        raise DslError(src.diagnostics)
    return value


_IDENT = re.compile(r"[^A-Za-z0-9_]")


def to_source(cdga: Cdga) -> str:
    name = _IDENT.sub("_", cdga.name) or "anonymous"
    if name[0].isdigit():
        name = "a_" + name
    gens = ", ".join(f"{n}:{d}" for n, d in cdga.algebra.generators)
    lines = [f"algebra {name} {{"]
    if gens:
        lines.append(f"  generators: {gens}")
    for n in cdga.algebra.names:
        lines.append(f"  d {n} = {cdga.differential[n]}")
    lines.append("}")
    return "\n".join(lines) + "\n"

