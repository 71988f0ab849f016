import random

import pytest

from appliq.reduction import (
    EvalConfig,
    Status,
    Strategy,
    applicative_step,
    beta_step,
    delta_step,
    eta_step,
    reduce,
    trace_lines,
)
from appliq.syntax import (
    AddPair,
    App,
    Const,
    Lam,
    Var,
    alpha_eq,
    desugar_pairs,
    free_vars,
    intlit,
    parse,
)
from genterms import gen_closed_lambda, gen_int_term

F_SOURCE = r"(\x. x [4, (\x. x) 3]) +"
OMEGA = r"(\x. x x) (\x. x x)"


# ---------------------------------------------------------------------------
# single steps

def test_beta_identity_redex():
    assert beta_step(App(Lam("x", Var("x")), intlit(3))) == intlit(3)


def test_beta_worked_example_first_step():
    t = desugar_pairs(parse(F_SOURCE))
    assert beta_step(t) == desugar_pairs(parse(r"+ [4, (\x. x) 3]"))


def test_beta_stuck_delta():
    assert beta_step(App(Const(AddPair()), intlit(5))) is None


def test_delta_pair_addition():
    assert delta_step(desugar_pairs(parse("+ [4, 3]"))) == intlit(7)
    assert delta_step(parse("+ [4, 3]")) == intlit(7)


def test_delta_curried():
    assert delta_step(parse("add 4 3")) == intlit(7)
    assert delta_step(parse("sub 4 3")) == intlit(1)


def test_delta_requires_literals():
    assert delta_step(parse(r"+ [4, (\x. x) 3]")) is None
    assert delta_step(parse("add 4")) is None


def test_delta_overflow():
    big = intlit(2**63 - 1)
    with pytest.raises(OverflowError):
        delta_step(App(App(Const(parse("add").value), big), intlit(1)))


def test_eta_step():
    assert eta_step(Lam("x", App(Var("f"), Var("x")))) == Var("f")
    assert eta_step(Lam("x", App(Var("x"), Var("x")))) is None
    assert eta_step(Lam("x", App(App(Var("f"), Var("x")), Var("x")))) is None


def test_eta_through_beta_step():
    t = parse(r"\x. add 1 x")
    assert beta_step(t) is None
    assert beta_step(t, use_eta=True) == parse("add 1")


# ---------------------------------------------------------------------------
# reduce

def test_reduce_worked_example():
    out = reduce(parse(F_SOURCE))
    assert out.result == intlit(7)
    assert out.status is Status.NORMAL_FORM
    assert out.steps_used == 3


def test_reduce_worked_example_trace():
    out = reduce(parse(F_SOURCE), collect_trace=True)
    assert trace_lines(out.trace) == [
        r"step 0: (\x. x [4, (\x. x) 3]) +",
        r"step 1: + [4, (\x. x) 3]",
        r"step 2: + [4, 3]",
        "step 3: 7",
    ]


def test_reduce_budget_exhaustion():
    out = reduce(parse(OMEGA), EvalConfig(max_steps=100))
    assert out.status is Status.BUDGET_EXHAUSTED
    assert out.steps_used == 100


def test_reduce_flip_sub():
    assert reduce(parse(r"(\x y. sub y x) 3 4")).result == intlit(1)


def test_reduce_deterministic():
    t = parse(F_SOURCE)
    assert reduce(t) == reduce(t)


def test_reduce_applicative_order():
    out = reduce(parse(F_SOURCE),
                 EvalConfig(strategy=Strategy.APPLICATIVE_ORDER))
    assert out.result == intlit(7)


def test_applicative_picks_innermost():
    t = desugar_pairs(parse(r"(\x. x) ((\y. y) 3)"))
    assert applicative_step(t) == parse(r"(\x. x) 3")


def test_normal_finds_nf_where_applicative_diverges():
    t = parse(r"(\x. 7) ((\x. x x) (\x. x x))")
    assert reduce(t, EvalConfig(max_steps=100)).result == intlit(7)
    out = reduce(t, EvalConfig(max_steps=100,
                               strategy=Strategy.APPLICATIVE_ORDER))
    assert out.status is Status.BUDGET_EXHAUSTED


def test_eta_config():
    t = parse(r"(\g x. g x) add")
    assert reduce(t).result == parse(r"\x. add x")
    assert reduce(t, EvalConfig(use_eta=True)).result == parse("add")


def test_max_steps_validated():
    with pytest.raises(ValueError):
        EvalConfig(max_steps=0)


def test_fix_unfolds_productively():
    assert delta_step(parse(r"fix (\g. 7)")) == \
        App(parse(r"\g. 7"), parse(r"fix (\g. 7)"))
    assert reduce(parse(r"fix (\g. 7)")).result == intlit(7)
    out = reduce(parse(r"fix (\g. g)"), EvalConfig(max_steps=64))
    assert out.status is Status.BUDGET_EXHAUSTED


# ---------------------------------------------------------------------------
# properties

def test_beta_preserves_free_vars():
    rng = random.Random(31)
    for _ in range(300):
        t = gen_closed_lambda(rng, rng.randint(1, 6))
        nxt = beta_step(t)
        if nxt is not None:
            assert free_vars(nxt) <= free_vars(t)


def test_church_rosser_spot_check():
    rng = random.Random(32)
    checked = 0
    while checked < 50:
        t = gen_int_term(rng, rng.randint(1, 4))
        no = reduce(t, EvalConfig(max_steps=500))
        ao = reduce(t, EvalConfig(max_steps=500,
                                  strategy=Strategy.APPLICATIVE_ORDER))
        if no.status is Status.NORMAL_FORM and ao.status is Status.NORMAL_FORM:
            assert alpha_eq(no.result, ao.result)
            checked += 1
