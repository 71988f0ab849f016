"""Categorical-combinator compilation of de Bruijn terms and evaluation
by closure.

Compilation maps index n to n!, application to $[.,.], abstraction to
L(.), pairs to <.,.> and constants to quotes.  Evaluation applies the
compiled code to the empty environment () and rewrites with the
leftmost-innermost strategy using

    (app)    $[x,y] z        ->  eps [x z, y z]
    (bang)   0! [x,y]        ->  y        (n+1)! [x,y] -> n! x
    (lam)    L(x) y z        ->  x [y,z]
    (quote)  ('x) y          ->  x
    (ass)    (x o y) z       ->  x (y z)
    (fst)    Fst [x,y]       ->  x
    (snd)    Snd [x,y]       ->  y
    (dpair)  <x,y> z         ->  [x z, y z]
    (ac)     eps [L(x) y, z] ->  x [y,z]
    (pair)   [x,y] z         ->  z x y    (pairing combinator applied)
    (eps)    eps [f, z]      ->  f z      (f not a L(.)-closure)
    (id)     Id x            ->  x
    (delta)  arithmetic on integer values

Environments are pair-value spines terminating in (); quoted
non-integer constants are unfolded to L(c o Snd) before evaluation so
they survive being stored in an environment and applied later.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .debruijn import DApp, DConst, DLam, DPair, DTerm, Index
from .reduction import Status
from .syntax import (
    INT64_MAX,
    INT64_MIN,
    AddCurried,
    AddPair,
    ConstVal,
    IntLit,
    SubCurried,
    const_name,
)


class CatCode:
    """Base class for categorical code and values."""


@dataclass(frozen=True)
class Ap(CatCode):
    """Application by juxtaposition; appears during evaluation only."""
    fun: CatCode
    arg: CatCode


@dataclass(frozen=True)
class AppC(CatCode):
    left: CatCode
    right: CatCode


@dataclass(frozen=True)
class LamC(CatCode):
    body: CatCode


@dataclass(frozen=True)
class QuoteC(CatCode):
    val: CatCode


@dataclass(frozen=True)
class Bang(CatCode):
    n: int


@dataclass(frozen=True)
class Couple(CatCode):
    left: CatCode
    right: CatCode


@dataclass(frozen=True)
class PairV(CatCode):
    left: CatCode
    right: CatCode


@dataclass(frozen=True)
class FstC(CatCode):
    pass


@dataclass(frozen=True)
class SndC(CatCode):
    pass


@dataclass(frozen=True)
class Comp(CatCode):
    left: CatCode
    right: CatCode


@dataclass(frozen=True)
class Eps(CatCode):
    pass


@dataclass(frozen=True)
class UnitV(CatCode):
    pass


@dataclass(frozen=True)
class IdC(CatCode):
    """Identity; representable but never emitted by the compiler."""


@dataclass(frozen=True)
class KConst(CatCode):
    value: ConstVal


@dataclass(frozen=True)
class IntV(CatCode):
    n: int


UNIT = UnitV()
EPS = Eps()
FST = FstC()
SND = SndC()


@dataclass(frozen=True)
class CamOutcome:
    result: CatCode
    steps_used: int
    status: Status
    trace: tuple[tuple[str | None, CatCode], ...] | None = \
        field(default=None, compare=False)


def cam_compile(d: DTerm) -> CatCode:
    """Translate a closed de Bruijn term to categorical code."""
    match d:
        case Index(n):
            return Bang(n)
        case DConst(IntLit(n)):
            return QuoteC(IntV(n))
        case DConst(c):
            return QuoteC(KConst(c))
        case DApp(fun, arg):
            return AppC(cam_compile(fun), cam_compile(arg))
        case DLam(body):
            return LamC(cam_compile(body))
        case DPair(left, right):
            return Couple(cam_compile(left), cam_compile(right))
    raise TypeError(f"not a de Bruijn term: {d!r}")


def _map_children(c: CatCode, f) -> CatCode:
    match c:
        case Ap(x, y):
            return Ap(f(x), f(y))
        case AppC(x, y):
            return AppC(f(x), f(y))
        case LamC(x):
            return LamC(f(x))
        case QuoteC(x):
            return QuoteC(f(x))
        case Couple(x, y):
            return Couple(f(x), f(y))
        case PairV(x, y):
            return PairV(f(x), f(y))
        case Comp(x, y):
            return Comp(f(x), f(y))
    return c


def unfold_constant_quotes(c: CatCode) -> CatCode:
    """Rewrite 'c into L(c o Snd) for non-integer constants.  Quoted
    integers are data and keep the quote rule."""
    match c:
        case QuoteC(KConst() as k):
            return LamC(Comp(k, SND))
    return _map_children(c, unfold_constant_quotes)


def expand_abbreviations(c: CatCode) -> CatCode:
    """Unfold $[x,y] to eps o <x,y>, n! to Snd o Fst^n and 'm to
    L(m o Snd), leaving only the primitive combinator set."""
    match c:
        case AppC(x, y):
            return Comp(EPS, Couple(expand_abbreviations(x),
                                    expand_abbreviations(y)))
        case Bang(n):
            if n == 0:
                return SND
            fst_n: CatCode = FST
            for _ in range(n - 1):
                fst_n = Comp(FST, fst_n)
            return Comp(SND, fst_n)
        case QuoteC(x):
            return LamC(Comp(expand_abbreviations(x), SND))
    return _map_children(c, expand_abbreviations)


def _checked(n: int, what: str) -> CatCode:
    if not (INT64_MIN <= n <= INT64_MAX):
        raise OverflowError(f"integer overflow in {what}: {n}")
    return IntV(n)


def _rule(c: CatCode, primitive_only: bool) -> tuple[CatCode, str] | None:
    """Try every rewrite rule at this node."""
    if not primitive_only:
        match c:
            case Ap(AppC(x, y), z):
                return Ap(EPS, PairV(Ap(x, z), Ap(y, z))), "app"
            case Ap(Bang(0), PairV(_, y)):
                return y, "bang"
            case Ap(Bang(n), PairV(x, _)) if n > 0:
                return Ap(Bang(n - 1), x), "bang"
            case Ap(Ap(LamC(x), y), z):
                return Ap(x, PairV(y, z)), "lam"
            case Ap(QuoteC(x), _):
                return x, "quote"
    else:
        # the quote rule read through 'M = L(M o Snd)
        match c:
            case Ap(LamC(Comp(m, SndC())), _):
                return m, "quote"
    match c:
        case Ap(Comp(x, y), z):
            return Ap(x, Ap(y, z)), "ass"
        case Ap(FstC(), PairV(x, _)):
            return x, "fst"
        case Ap(SndC(), PairV(_, y)):
            return y, "snd"
        case Ap(Couple(x, y), z):
            return PairV(Ap(x, z), Ap(y, z)), "dpair"
        case Ap(PairV(x, y), z):
            # defining equation of the pairing combinator: [x,y] z = z x y
            return Ap(Ap(z, x), y), "pair"
        case Ap(Eps(), PairV(Ap(LamC(x), y), z)):
            return Ap(x, PairV(y, z)), "ac"
        case Ap(IdC(), x):
            return x, "id"
        case Ap(KConst(AddPair()), PairV(IntV(m), IntV(n))):
            return _checked(m + n, "+"), "delta"
        case Ap(Ap(KConst(AddCurried()), IntV(m)), IntV(n)):
            return _checked(m + n, "add"), "delta"
        case Ap(Ap(KConst(SubCurried()), IntV(m)), IntV(n)):
            return _checked(m - n, "sub"), "delta"
        case Ap(Eps(), PairV(f, z)):
            return Ap(f, z), "eps"
    return None


def _step(c: CatCode, primitive_only: bool) -> tuple[CatCode, str] | None:
    """Leftmost-innermost: children left to right, then the node."""
    match c:
        case Ap(x, y) | AppC(x, y) | Couple(x, y) | PairV(x, y) | Comp(x, y):
            hit = _step(x, primitive_only)
            if hit is not None:
                return type(c)(hit[0], y), hit[1]
            hit = _step(y, primitive_only)
            if hit is not None:
                return type(c)(x, hit[0]), hit[1]
        case LamC(x) | QuoteC(x):
            hit = _step(x, primitive_only)
            if hit is not None:
                return type(c)(hit[0]), hit[1]
    return _rule(c, primitive_only)


def cam_step(c: CatCode) -> CatCode | None:
    """One leftmost-innermost rewrite, or ``None`` at normal form."""
    hit = _step(c, primitive_only=False)
    return hit[0] if hit is not None else None


def cam_eval_closure(compiled: CatCode, max_steps: int = 10000,
                     collect_trace: bool = False,
                     primitive_only: bool = False) -> CamOutcome:
    """Apply compiled code to the empty environment and rewrite to a
    value.  With ``primitive_only`` the abbreviation rules (app, bang,
    lam, quote-on-nodes) are disabled; the caller is expected to pass
    code through :func:`expand_abbreviations` first."""
    if not primitive_only:
        compiled = unfold_constant_quotes(compiled)
    term: CatCode = Ap(compiled, UNIT)
    trace: list[tuple[str | None, CatCode]] | None = \
        [(None, term)] if collect_trace else None
    steps = 0
    while steps < max_steps:
        hit = _step(term, primitive_only)
        if hit is None:
            return CamOutcome(term, steps, Status.NORMAL_FORM,
                              tuple(trace) if trace is not None else None)
        term, rule = hit
        steps += 1
        if trace is not None:
            trace.append((rule, term))
    return CamOutcome(term, steps, Status.BUDGET_EXHAUSTED,
                      tuple(trace) if trace is not None else None)


def print_cat(c: CatCode, expand_quotes: bool = False) -> str:
    """ASCII rendering: ``$[x,y]``, ``L(x)``, ``'x``, ``n!``, ``<x,y>``,
    ``[x,y]``, ``x o y``, ``eps``, ``()``.  With ``expand_quotes``,
    quoted non-integer constants print as ``L(c o Snd)``."""

    def atom(c: CatCode) -> str:
        # operands of juxtaposition and composition that need wrapping
        if isinstance(c, (Comp, Ap)):
            return f"({go(c)})"
        return go(c)

    def go(c: CatCode) -> str:
        match c:
            case Ap(fun, arg):
                f = f"({go(fun)})" if isinstance(fun, Comp) else go(fun)
                return f"{f} {atom(arg)}"
            case AppC(left, right):
                return f"$[{go(left)}, {go(right)}]"
            case LamC(body):
                return f"L({go(body)})"
            case QuoteC(KConst() as k) if expand_quotes:
                return f"L({go(k)} o Snd)"
            case QuoteC(val):
                return f"'{atom(val)}"
            case Bang(n):
                return f"{n}!"
            case Couple(left, right):
                return f"<{go(left)}, {go(right)}>"
            case PairV(left, right):
                return f"[{go(left)}, {go(right)}]"
            case FstC():
                return "Fst"
            case SndC():
                return "Snd"
            case Comp(left, right):
                return f"{atom(left)} o {atom(right)}"
            case Eps():
                return "eps"
            case UnitV():
                return "()"
            case IdC():
                return "Id"
            case KConst(v):
                return const_name(v)
            case IntV(n):
                return str(n)
        raise TypeError(f"not categorical code: {c!r}")

    return go(c)


def cam_trace_lines(trace: tuple[tuple[str | None, CatCode], ...]) -> list[str]:
    return [f"step {i}: {print_cat(code)}" for i, (_, code) in enumerate(trace)]
