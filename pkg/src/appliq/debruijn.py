"""Conversion between named terms and de Bruijn-indexed terms.

An index counts the lambdas strictly between a variable occurrence and
its binder, so ``\\y. (\\x y. x) y`` becomes ``\\.((\\.\\.#1) #0)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    App,
    Const,
    ConstVal,
    FreeVariableError,
    Lam,
    PairLit,
    Term,
    Var,
    const_name,
)


class DTerm:
    """Base class for de Bruijn terms."""


@dataclass(frozen=True)
class Index(DTerm):
    n: int


@dataclass(frozen=True)
class DConst(DTerm):
    value: ConstVal


@dataclass(frozen=True)
class DApp(DTerm):
    fun: DTerm
    arg: DTerm


@dataclass(frozen=True)
class DLam(DTerm):
    body: DTerm


@dataclass(frozen=True)
class DPair(DTerm):
    left: DTerm
    right: DTerm


class DanglingIndexError(Exception):
    def __init__(self, n: int):
        super().__init__(f"dangling de Bruijn index: #{n}")
        self.n = n


def encode(t: Term) -> DTerm:
    """Encode a closed named term; raises :class:`FreeVariableError`
    naming the first offending identifier."""

    def go(t: Term, binders: list[str]) -> DTerm:
        match t:
            case Var(name):
                for depth, b in enumerate(reversed(binders)):
                    if b == name:
                        return Index(depth)
                raise FreeVariableError(name)
            case Const(c):
                return DConst(c)
            case App(fun, arg):
                return DApp(go(fun, binders), go(arg, binders))
            case Lam(binder, body):
                return DLam(go(body, binders + [binder]))
            case PairLit(left, right):
                return DPair(go(left, binders), go(right, binders))
        raise TypeError(f"not a term: {t!r}")

    return go(t, [])


def decode(d: DTerm) -> Term:
    """Decode with binder names assigned by depth (v0, v1, ...)."""

    def go(d: DTerm, depth: int) -> Term:
        match d:
            case Index(n):
                if n >= depth:
                    raise DanglingIndexError(n)
                return Var(f"v{depth - 1 - n}")
            case DConst(c):
                return Const(c)
            case DApp(fun, arg):
                return App(go(fun, depth), go(arg, depth))
            case DLam(body):
                return Lam(f"v{depth}", go(body, depth + 1))
            case DPair(left, right):
                return PairLit(go(left, depth), go(right, depth))
        raise TypeError(f"not a de Bruijn term: {d!r}")

    return go(d, 0)


def print_dterm(d: DTerm) -> str:
    def go(d: DTerm) -> str:
        match d:
            case Index(n):
                return f"#{n}"
            case DConst(c):
                return const_name(c)
            case DApp(fun, arg):
                f = f"({go(fun)})" if isinstance(fun, DLam) else go(fun)
                return f"({f} {go(arg)})"
            case DLam(body):
                return f"\\.{go(body)}"
            case DPair(left, right):
                return f"[{go(left)}, {go(right)}]"
        raise TypeError(f"not a de Bruijn term: {d!r}")

    return go(d)
