"""Directed reduction for the applicative theory: beta steps, delta rules
for arithmetic, optional eta contraction, normal- or applicative-order
strategies under a step budget."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .syntax import (
    INT64_MAX,
    INT64_MIN,
    AddCurried,
    AddPair,
    App,
    Const,
    FixConst,
    IntLit,
    Lam,
    PairLit,
    SubCurried,
    Term,
    Var,
    desugar_pairs,
    free_vars,
    print_term,
    resugar_pairs,
    subst,
)


class Strategy(enum.Enum):
    NORMAL_ORDER = "normal"
    APPLICATIVE_ORDER = "applicative"


class Status(enum.Enum):
    NORMAL_FORM = "normal_form"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class EvalConfig:
    max_steps: int = 10000
    use_eta: bool = False
    strategy: Strategy = Strategy.NORMAL_ORDER

    def __post_init__(self) -> None:
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")


@dataclass(frozen=True)
class ReduceOutcome:
    result: Term
    steps_used: int
    status: Status
    trace: tuple[Term, ...] | None = field(default=None, compare=False)


def _checked(n: int, what: str) -> Term:
    if not (INT64_MIN <= n <= INT64_MAX):
        raise OverflowError(f"integer overflow in {what}: {n}")
    return Const(IntLit(n))


def _as_literal_pair(t: Term) -> tuple[int, int] | None:
    """Match a pair of integer literals, either as a ``PairLit`` or in the
    desugared shape ``\\r. r m n``."""
    match t:
        case PairLit(Const(IntLit(m)), Const(IntLit(n))):
            return m, n
        case Lam(r, App(App(Var(r2), Const(IntLit(m))), Const(IntLit(n)))) \
                if r == r2:
            return m, n
    return None


def delta_step(t: Term) -> Term | None:
    """Contract a delta redex at the root, if any.

    Pair addition fires only once its argument is literally a pair of
    integer literals; curried addition and subtraction need two literal
    arguments.  Overflow outside 64-bit range raises ``OverflowError``.
    """
    match t:
        case App(Const(AddPair()), p):
            pair = _as_literal_pair(p)
            if pair is not None:
                return _checked(pair[0] + pair[1], "+")
        case App(App(Const(AddCurried()), Const(IntLit(m))), Const(IntLit(n))):
            return _checked(m + n, "add")
        case App(App(Const(SubCurried()), Const(IntLit(m))), Const(IntLit(n))):
            return _checked(m - n, "sub")
        case App(Const(FixConst()), f):
            return App(f, t)
    return None


def eta_step(t: Term) -> Term | None:
    """Contract the leftmost-outermost eta redex ``\\x. f x`` with ``x``
    not free in ``f``, if any."""
    match t:
        case Lam(x, App(f, Var(x2))) if x == x2 and x not in free_vars(f):
            return f
        case Lam(x, body):
            b = eta_step(body)
            return Lam(x, b) if b is not None else None
        case App(fun, arg):
            f = eta_step(fun)
            if f is not None:
                return App(f, arg)
            a = eta_step(arg)
            return App(fun, a) if a is not None else None
        case PairLit(left, right):
            l = eta_step(left)
            if l is not None:
                return PairLit(l, right)
            r = eta_step(right)
            return PairLit(left, r) if r is not None else None
    return None


def beta_step(t: Term, use_eta: bool = False) -> Term | None:
    """Contract the leftmost-outermost beta/delta redex, if any; with
    ``use_eta``, an eta redex counts at positions where no beta/delta
    redex applies."""
    d = delta_step(t)
    if d is not None:
        return d
    match t:
        case App(Lam(x, body), arg):
            return subst(arg, x, body)
    if use_eta:
        match t:
            case Lam(x, App(f, Var(x2))) if x == x2 and x not in free_vars(f):
                return f
    match t:
        case App(fun, arg):
            f = beta_step(fun, use_eta)
            if f is not None:
                return App(f, arg)
            a = beta_step(arg, use_eta)
            return App(fun, a) if a is not None else None
        case Lam(x, body):
            b = beta_step(body, use_eta)
            return Lam(x, b) if b is not None else None
        case PairLit(left, right):
            l = beta_step(left, use_eta)
            if l is not None:
                return PairLit(l, right)
            r = beta_step(right, use_eta)
            return PairLit(left, r) if r is not None else None
    return None


def applicative_step(t: Term, use_eta: bool = False) -> Term | None:
    """Contract the leftmost-innermost beta/delta redex, if any."""
    match t:
        case App(fun, arg):
            f = applicative_step(fun, use_eta)
            if f is not None:
                return App(f, arg)
            a = applicative_step(arg, use_eta)
            if a is not None:
                return App(fun, a)
        case Lam(x, body):
            b = applicative_step(body, use_eta)
            if b is not None:
                return Lam(x, b)
        case PairLit(left, right):
            l = applicative_step(left, use_eta)
            if l is not None:
                return PairLit(l, right)
            r = applicative_step(right, use_eta)
            if r is not None:
                return PairLit(left, r)
    d = delta_step(t)
    if d is not None:
        return d
    match t:
        case App(Lam(x, body), arg):
            return subst(arg, x, body)
    if use_eta:
        match t:
            case Lam(x, App(f, Var(x2))) if x == x2 and x not in free_vars(f):
                return f
    return None


def reduce(t: Term, cfg: EvalConfig | None = None,
           collect_trace: bool = False) -> ReduceOutcome:
    """Iterate single steps under the configured strategy until no redex
    remains or the budget runs out.  Pair literals are desugared up
    front."""
    cfg = cfg or EvalConfig()
    step = beta_step if cfg.strategy is Strategy.NORMAL_ORDER \
        else applicative_step
    t = desugar_pairs(t)
    trace = [t] if collect_trace else None
    steps = 0
    while steps < cfg.max_steps:
        nxt = step(t, cfg.use_eta)
        if nxt is None:
            return ReduceOutcome(t, steps, Status.NORMAL_FORM,
                                 tuple(trace) if trace is not None else None)
        t = nxt
        steps += 1
        if trace is not None:
            trace.append(t)
    return ReduceOutcome(t, steps, Status.BUDGET_EXHAUSTED,
                         tuple(trace) if trace is not None else None)


def trace_lines(terms: tuple[Term, ...]) -> list[str]:
    """Fixed golden-trace format: one ``step N: <term>`` line per state,
    with pair literals resugared for display."""
    return [f"step {i}: {print_term(resugar_pairs(t))}"
            for i, t in enumerate(terms)]
