"""Lambda lifting into supercombinator programs, classification of terms
against the supercombinator conditions, and program reduction.

Lifting repeatedly extracts the leftmost innermost abstraction group
(consecutive binders collapse into one definition).  Free variables of
the extracted group become leading extra parameters, ordered by first
occurrence, and the occurrence is replaced by the new definition name
applied to them.  Definition names draw letters from the stream
X, Y, Z, X1, Y1, Z1, ... — one letter per binder of the group, so a
two-binder group lifted first is named ``$XY``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from .reduction import Status, delta_step
from .syntax import (
    App,
    Const,
    FreeVariableError,
    Lam,
    PairLit,
    ParseError,
    Term,
    Var,
    apps,
    free_vars,
    parse,
    print_term,
)


@dataclass(frozen=True)
class ScDef:
    name: str
    params: tuple[str, ...]
    body: Term


@dataclass(frozen=True)
class ScProgram:
    defs: tuple[ScDef, ...]
    main: Term


class Classification(enum.Enum):
    SUPERCOMBINATOR = "supercombinator"
    COMBINATOR_ONLY = "combinator_only"
    NEITHER = "neither"


def _strip_binders(t: Term) -> tuple[list[str], Term]:
    binders: list[str] = []
    while isinstance(t, Lam):
        binders.append(t.binder)
        t = t.body
    return binders, t


def _inner_lams(t: Term) -> Iterator[Term]:
    match t:
        case Lam():
            yield t
        case App(fun, arg):
            yield from _inner_lams(fun)
            yield from _inner_lams(arg)
        case PairLit(left, right):
            yield from _inner_lams(left)
            yield from _inner_lams(right)


def classify(t: Term) -> Classification:
    """Judge a term against the supercombinator conditions: no free
    variables, and every abstraction inside the binder-stripped body is
    itself a supercombinator.  Closed terms failing the second condition
    are combinators only; open terms are neither."""
    if free_vars(t):
        return Classification.NEITHER
    _, body = _strip_binders(t)
    for inner in _inner_lams(body):
        if classify(inner) is not Classification.SUPERCOMBINATOR:
            return Classification.COMBINATOR_ONLY
    return Classification.SUPERCOMBINATOR


def _letters() -> Iterator[str]:
    k = 0
    while True:
        suffix = "" if k == 0 else str(k)
        for base in ("X", "Y", "Z"):
            yield base + suffix
        k += 1


def _find_innermost_group(t: Term) -> tuple[list[str], Term] | None:
    """Leftmost innermost maximal binder group, or None if lambda-free."""
    match t:
        case Lam():
            binders, core = _strip_binders(t)
            inner = _find_innermost_group(core)
            return inner if inner is not None else (binders, core)
        case App(fun, arg):
            return _find_innermost_group(fun) or _find_innermost_group(arg)
        case PairLit(left, right):
            return _find_innermost_group(left) or _find_innermost_group(right)
    return None


def _first_occurrences(t: Term, bound: set[str], seen: list[str]) -> None:
    match t:
        case Var(name):
            if name not in bound and not name.startswith("$") \
                    and name not in seen:
                seen.append(name)
        case App(fun, arg):
            _first_occurrences(fun, bound, seen)
            _first_occurrences(arg, bound, seen)
        case Lam(binder, body):
            _first_occurrences(body, bound | {binder}, seen)
        case PairLit(left, right):
            _first_occurrences(left, bound, seen)
            _first_occurrences(right, bound, seen)


def _replace_group(t: Term, binders: list[str], core: Term,
                   replacement: Term) -> Term:
    """Replace the leftmost occurrence of the lambda group with the
    replacement term."""
    group: Term = core
    for b in reversed(binders):
        group = Lam(b, group)

    done = False

    def go(t: Term) -> Term:
        nonlocal done
        if done:
            return t
        if t == group:
            done = True
            return replacement
        match t:
            case App(fun, arg):
                fun2 = go(fun)
                return App(fun2, go(arg))
            case Lam(binder, body):
                return Lam(binder, go(body))
            case PairLit(left, right):
                left2 = go(left)
                return PairLit(left2, go(right))
        return t

    return go(t)


def lift(t: Term) -> ScProgram:
    """Lift a closed term into supercombinator definitions plus a
    lambda-free main expression.  Names starting with ``$`` refer to
    definitions and do not count as free variables."""
    fvs = {v for v in free_vars(t) if not v.startswith("$")}
    if fvs:
        raise FreeVariableError(sorted(fvs)[0])

    defs: list[ScDef] = []
    letters = _letters()
    while True:
        group = _find_innermost_group(t)
        if group is None:
            break
        binders, core = group
        extras: list[str] = []
        _first_occurrences(core, set(binders), extras)
        name = "$" + "".join(next(letters) for _ in binders)
        defs.append(ScDef(name, tuple(extras) + tuple(binders), core))
        replacement = apps(Var(name), *(Var(v) for v in extras))
        t = _replace_group(t, binders, core, replacement)
    return ScProgram(tuple(defs), t)


@dataclass(frozen=True)
class ScOutcome:
    result: Term
    steps_used: int
    status: Status
    trace: tuple[Term, ...] | None = field(default=None, compare=False)


def _substitute_params(body: Term, bindings: dict[str, Term]) -> Term:
    # bodies are lambda-free, so plain simultaneous replacement is safe
    match body:
        case Var(name):
            return bindings.get(name, body)
        case Const():
            return body
        case App(fun, arg):
            return App(_substitute_params(fun, bindings),
                       _substitute_params(arg, bindings))
        case PairLit(left, right):
            return PairLit(_substitute_params(left, bindings),
                           _substitute_params(right, bindings))
        case Lam():
            raise ValueError("supercombinator body contains an abstraction")
    raise TypeError(f"not a term: {body!r}")


def _spine(t: Term) -> tuple[Term, list[Term]]:
    args: list[Term] = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    args.reverse()
    return t, args


def _sc_step(t: Term, defs: dict[str, ScDef]) -> Term | None:
    """Leftmost-outermost unfold/delta/pair-application step."""
    d = delta_step(t)
    if d is not None:
        return d
    head, args = _spine(t)
    match head:
        case Var(name) if name in defs:
            sc = defs[name]
            arity = len(sc.params)
            if len(args) >= arity:
                unfolded = _substitute_params(
                    sc.body, dict(zip(sc.params, args[:arity])))
                return apps(unfolded, *args[arity:])
        case PairLit(left, right) if args:
            # [l, r] f  ->  f l r
            return apps(args[0], left, right, *args[1:])
    match t:
        case App(fun, arg):
            f = _sc_step(fun, defs)
            if f is not None:
                return App(f, arg)
            a = _sc_step(arg, defs)
            return App(fun, a) if a is not None else None
        case PairLit(left, right):
            l = _sc_step(left, defs)
            if l is not None:
                return PairLit(l, right)
            r = _sc_step(right, defs)
            return PairLit(left, r) if r is not None else None
    return None


def sc_reduce(p: ScProgram, max_steps: int = 10000,
              collect_trace: bool = False) -> ScOutcome:
    """Normal-order reduction of the main expression, unfolding a
    definition whenever it is applied to at least its arity."""
    defs = {d.name: d for d in p.defs}
    t = p.main
    trace = [t] if collect_trace else None
    steps = 0
    while steps < max_steps:
        nxt = _sc_step(t, defs)
        if nxt is None:
            return ScOutcome(t, steps, Status.NORMAL_FORM,
                             tuple(trace) if trace is not None else None)
        t = nxt
        steps += 1
        if trace is not None:
            trace.append(t)
    return ScOutcome(t, steps, Status.BUDGET_EXHAUSTED,
                     tuple(trace) if trace is not None else None)


def print_program(p: ScProgram) -> str:
    """Definitions one per line, a rule line, then the main expression."""
    lines = [f"{d.name} {' '.join(d.params)} = {print_term(d.body)}"
             if d.params else f"{d.name} = {print_term(d.body)}"
             for d in p.defs]
    lines.append("----")
    lines.append(print_term(p.main))
    return "\n".join(lines)


def parse_program(text: str) -> ScProgram:
    """Parse the :func:`print_program` format back."""
    lines = text.splitlines()
    rule = next((i for i, line in enumerate(lines)
                 if line.strip() == "----"), None)
    if rule is None:
        raise ParseError("missing '----' separator line", len(lines) + 1, 1)
    defs: list[ScDef] = []
    for i, line in enumerate(lines[:rule]):
        if not line.strip() or line.lstrip().startswith("--"):
            continue
        if "=" not in line:
            raise ParseError("definition line without '='", i + 1, 1)
        head, body_src = line.split("=", 1)
        words = head.split()
        if not words or not words[0].startswith("$"):
            raise ParseError("definition name must start with '$'", i + 1, 1)
        defs.append(ScDef(words[0], tuple(words[1:]), parse(body_src)))
    main_src = "\n".join(lines[rule + 1:])
    return ScProgram(tuple(defs), parse(main_src))


def sc_trace_lines(terms: tuple[Term, ...]) -> list[str]:
    return [f"step {i}: {print_term(t)}" for i, t in enumerate(terms)]
