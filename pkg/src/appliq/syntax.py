"""Object language: terms, constants, parsing and printing, plus the
variable toolkit (free variables, capture-avoiding substitution,
alpha-equivalence, deterministic fresh names).

Concrete grammar::

    term  := lam | app
    lam   := '\\' ident+ '.' term
    app   := atom+                      -- left-associative
    atom  := ident | int | '+' | 'add' | 'sub' | 'fix'
           | '[' term ',' term ']' | '(' term ')'

Comments run from ``--`` to end of line.  Identifiers are ASCII letters,
digits and underscores, starting with a letter.  Identifiers starting
with ``$`` name supercombinator definitions and are only produced by the
lifter / program parser.
"""

from __future__ import annotations

from dataclasses import dataclass


INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


# ---------------------------------------------------------------------------
# Abstract syntax

class ConstVal:
    """Base class for constants."""


@dataclass(frozen=True)
class IntLit(ConstVal):
    value: int


@dataclass(frozen=True)
class AddPair(ConstVal):
    """Addition taking a single pair argument; written ``+``."""


@dataclass(frozen=True)
class AddCurried(ConstVal):
    """Curried addition; written ``add``."""


@dataclass(frozen=True)
class SubCurried(ConstVal):
    """Curried subtraction; written ``sub``."""


@dataclass(frozen=True)
class FixConst(ConstVal):
    """Fixpoint constant with rule ``fix f -> f (fix f)``; an extension,
    never produced by the compilers themselves."""


@dataclass(frozen=True)
class Opaque(ConstVal):
    """A constant with no reduction rule; an inert head."""
    name: str


class Term:
    """Base class for object-language terms."""


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Const(Term):
    value: ConstVal


@dataclass(frozen=True)
class App(Term):
    fun: Term
    arg: Term


@dataclass(frozen=True)
class Lam(Term):
    binder: str
    body: Term


@dataclass(frozen=True)
class PairLit(Term):
    """First-class pair ``[l, r]``, definitionally ``\\r. r l r'`` for a
    fresh ``r``.  Kept as a node because the categorical backend compiles
    it specially; the other backends desugar it first."""
    left: Term
    right: Term


def intlit(n: int) -> Term:
    return Const(IntLit(n))


def apps(fun: Term, *args: Term) -> Term:
    """Left-associated application chain."""
    t = fun
    for a in args:
        t = App(t, a)
    return t


def lams(binders: list[str] | tuple[str, ...], body: Term) -> Term:
    t = body
    for b in reversed(binders):
        t = Lam(b, t)
    return t


class FreeVariableError(Exception):
    """An operation requiring a closed term met a free variable."""

    def __init__(self, name: str):
        super().__init__(f"free variable: {name}")
        self.name = name


# ---------------------------------------------------------------------------
# Variables

def free_vars(t: Term) -> frozenset[str]:
    """Variables with at least one free occurrence in ``t``."""
    match t:
        case Var(name):
            return frozenset({name})
        case Const():
            return frozenset()
        case App(fun, arg):
            return free_vars(fun) | free_vars(arg)
        case Lam(binder, body):
            return free_vars(body) - {binder}
        case PairLit(left, right):
            return free_vars(left) | free_vars(right)
    raise TypeError(f"not a term: {t!r}")


def all_vars(t: Term) -> frozenset[str]:
    """Every variable occurring in ``t``, free or bound, binders included."""
    match t:
        case Var(name):
            return frozenset({name})
        case Const():
            return frozenset()
        case App(fun, arg):
            return all_vars(fun) | all_vars(arg)
        case Lam(binder, body):
            return all_vars(body) | {binder}
        case PairLit(left, right):
            return all_vars(left) | all_vars(right)
    raise TypeError(f"not a term: {t!r}")


def fresh_var(avoid: frozenset[str] | set[str], hint: str) -> str:
    """Deterministic fresh name: ``hint``, then ``hint1``, ``hint2``, ..."""
    if hint not in avoid:
        return hint
    k = 1
    while f"{hint}{k}" in avoid:
        k += 1
    return f"{hint}{k}"


def subst(g: Term, x: str, f: Term) -> Term:
    """Capture-avoiding substitution ``[g/x]f``.

    Renames a binder only when it would capture a free variable of ``g``
    and ``x`` actually occurs free in the body; the replacement binder is
    fresh for every variable of both ``g`` and the body.
    """
    match f:
        case Var(name):
            return g if name == x else f
        case Const():
            return f
        case App(fun, arg):
            return App(subst(g, x, fun), subst(g, x, arg))
        case PairLit(left, right):
            return PairLit(subst(g, x, left), subst(g, x, right))
        case Lam(binder, body):
            if binder == x:
                return f
            if binder not in free_vars(g) or x not in free_vars(body):
                return Lam(binder, subst(g, x, body))
            z = fresh_var(all_vars(g) | all_vars(body), binder)
            return Lam(z, subst(g, x, subst(Var(z), binder, body)))
    raise TypeError(f"not a term: {f!r}")


def alpha_eq(a: Term, b: Term) -> bool:
    """Equality up to consistent renaming of bound variables."""

    def go(a: Term, b: Term, env_a: dict[str, int], env_b: dict[str, int],
           depth: int) -> bool:
        match a, b:
            case Var(na), Var(nb):
                da, db = env_a.get(na), env_b.get(nb)
                if da is None and db is None:
                    return na == nb
                return da == db
            case Const(ca), Const(cb):
                return ca == cb
            case App(fa, aa), App(fb, ab):
                return go(fa, fb, env_a, env_b, depth) and \
                    go(aa, ab, env_a, env_b, depth)
            case PairLit(la, ra), PairLit(lb, rb):
                return go(la, lb, env_a, env_b, depth) and \
                    go(ra, rb, env_a, env_b, depth)
            case Lam(xa, ba), Lam(xb, bb):
                return go(ba, bb, env_a | {xa: depth}, env_b | {xb: depth},
                          depth + 1)
        return False

    return go(a, b, {}, {}, 0)


def desugar_pairs(t: Term) -> Term:
    """Replace every pair literal by ``\\r. r l r'`` with ``r`` fresh."""
    match t:
        case Var() | Const():
            return t
        case App(fun, arg):
            return App(desugar_pairs(fun), desugar_pairs(arg))
        case Lam(binder, body):
            return Lam(binder, desugar_pairs(body))
        case PairLit(left, right):
            left, right = desugar_pairs(left), desugar_pairs(right)
            r = fresh_var(free_vars(left) | free_vars(right), "r")
            return Lam(r, App(App(Var(r), left), right))
    raise TypeError(f"not a term: {t!r}")


def resugar_pairs(t: Term) -> Term:
    """Inverse of :func:`desugar_pairs` where the pair shape is visible;
    used only for display (traces, results)."""
    match t:
        case Var() | Const():
            return t
        case App(fun, arg):
            return App(resugar_pairs(fun), resugar_pairs(arg))
        case PairLit(left, right):
            return PairLit(resugar_pairs(left), resugar_pairs(right))
        case Lam(binder, App(App(Var(r), left), right)) if r == binder \
                and binder not in free_vars(left) | free_vars(right):
            return PairLit(resugar_pairs(left), resugar_pairs(right))
        case Lam(binder, body):
            return Lam(binder, resugar_pairs(body))
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Lexer

class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


_KEYWORD_CONSTS: dict[str, ConstVal] = {
    "add": AddCurried(),
    "sub": SubCurried(),
    "fix": FixConst(),
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def bump(k: int = 1) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        if c in " \t\r\n":
            bump()
            continue
        if c == "-" and i + 1 < n and text[i + 1] == "-":
            while i < n and text[i] != "\n":
                bump()
            continue
        start_line, start_col = line, col
        if c in "\\.()[],":
            kind = {"\\": "lambda", ".": "dot", "(": "lparen", ")": "rparen",
                    "[": "lbrack", "]": "rbrack", ",": "comma"}[c]
            toks.append(_Token(kind, c, start_line, start_col))
            bump()
            continue
        if c == "+":
            toks.append(_Token("plus", c, start_line, start_col))
            bump()
            continue
        if c.isdigit() or (c == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            lit = text[i:j]
            if not (INT64_MIN <= int(lit) <= INT64_MAX):
                raise ParseError(f"integer literal out of 64-bit range: {lit}",
                                 start_line, start_col)
            toks.append(_Token("int", lit, start_line, start_col))
            bump(j - i)
            continue
        if c.isalpha() or c == "$":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if c == "$" and len(word) == 1:
                raise ParseError("'$' must start a definition name",
                                 start_line, start_col)
            kind = "scname" if c == "$" else \
                ("keyword" if word in _KEYWORD_CONSTS else "ident")
            toks.append(_Token(kind, word, start_line, start_col))
            bump(j - i)
            continue
        raise ParseError(f"unexpected character {c!r}", start_line, start_col)
    toks.append(_Token("eof", "", line, col))
    return toks


# ---------------------------------------------------------------------------
# Parser

_ATOM_STARTS = {"ident", "scname", "keyword", "int", "plus", "lbrack",
                "lparen"}


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        return self.next()

    def term(self) -> Term:
        if self.peek().kind == "lambda":
            return self.lam()
        return self.app()

    def lam(self) -> Term:
        self.expect("lambda", "'\\'")
        binders = [self.expect("ident", "binder").text]
        while self.peek().kind == "ident":
            binders.append(self.next().text)
        self.expect("dot", "'.'")
        return lams(binders, self.term())

    def app(self) -> Term:
        tok = self.peek()
        if tok.kind not in _ATOM_STARTS:
            raise ParseError(f"expected a term, found {tok.text or 'end of input'!r}",
                             tok.line, tok.col)
        t = self.atom()
        while self.peek().kind in _ATOM_STARTS:
            t = App(t, self.atom())
        return t

    def atom(self) -> Term:
        tok = self.next()
        match tok.kind:
            case "ident" | "scname":
                return Var(tok.text)
            case "keyword":
                return Const(_KEYWORD_CONSTS[tok.text])
            case "int":
                return Const(IntLit(int(tok.text)))
            case "plus":
                return Const(AddPair())
            case "lbrack":
                left = self.term()
                self.expect("comma", "','")
                right = self.term()
                self.expect("rbrack", "']'")
                return PairLit(left, right)
            case "lparen":
                t = self.term()
                self.expect("rparen", "')'")
                return t
        raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)


def parse(text: str) -> Term:
    """Parse a source string into a term.

    Application is left-associative and a lambda body extends as far
    right as possible.  Raises :class:`ParseError` with line/column on
    malformed input.
    """
    parser = _Parser(_tokenize(text))
    t = parser.term()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"trailing input starting at {tok.text!r}",
                         tok.line, tok.col)
    return t


# ---------------------------------------------------------------------------
# Printer

def const_name(c: ConstVal) -> str:
    match c:
        case IntLit(v):
            return str(v)
        case AddPair():
            return "+"
        case AddCurried():
            return "add"
        case SubCurried():
            return "sub"
        case FixConst():
            return "fix"
        case Opaque(name):
            return name
    raise TypeError(f"not a constant: {c!r}")


def print_term(t: Term) -> str:
    """Render a term; ``parse(print_term(t))`` is structurally ``t`` for
    terms over the concrete grammar (opaque constants print as bare
    names and are not re-readable)."""

    def fun_pos(t: Term) -> str:
        # a lambda in function position needs parentheses
        if isinstance(t, Lam):
            return f"({go(t)})"
        return go(t)

    def arg_pos(t: Term) -> str:
        if isinstance(t, (Lam, App)):
            return f"({go(t)})"
        return go(t)

    def go(t: Term) -> str:
        match t:
            case Var(name):
                return name
            case Const(c):
                return const_name(c)
            case App(fun, arg):
                return f"{fun_pos(fun)} {arg_pos(arg)}"
            case Lam():
                binders = []
                body = t
                while isinstance(body, Lam):
                    binders.append(body.binder)
                    body = body.body
                return f"\\{' '.join(binders)}. {go(body)}"
            case PairLit(left, right):
                return f"[{go(left)}, {go(right)}]"
        raise TypeError(f"not a term: {t!r}")

    return go(t)
