"""Acceptance suite: every criterion at its stated tolerance, one
pass/fail line per criterion (run pytest with ``-s`` to see them all)."""

import random
import time
from pathlib import Path

from appliq.cam import IntV, cam_compile, cam_eval_closure, cam_trace_lines, print_cat
from appliq.debruijn import decode, encode, print_dterm
from appliq.reduction import (
    EvalConfig,
    Status,
    Strategy,
    beta_step,
    reduce,
    trace_lines,
)
from appliq.ski import CConst, Mode, print_comb, ski_compile, ski_reduce, ski_trace_lines
from appliq.superc import Classification, classify, lift, print_program, sc_reduce, sc_trace_lines
from appliq.syntax import (
    Const,
    IntLit,
    alpha_eq,
    desugar_pairs,
    free_vars,
    intlit,
    parse,
    subst,
)
from appliq.types import (
    Arrow,
    TVar,
    TypeInferenceError,
    infer,
    types_equal,
    unify,
)
from genterms import gen_closed_lambda, gen_int_term, gen_small_term

F_SOURCE = r"(\x. x [4, (\x. x) 3]) +"
CURRIED_F = r"(\x. x 4 ((\x. x) 3)) add"
CORPUS = sorted((Path(__file__).parent.parent / "corpus").glob("*.lam"))


def _report(num: int, label: str, ok: bool) -> None:
    print(f"criterion {num:2d} [{label}]: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({label}) failed"


def test_criterion_01_beta_pipeline():
    start = time.monotonic()
    out = reduce(parse(F_SOURCE), collect_trace=True)
    elapsed = time.monotonic() - start
    ok = (out.result == intlit(7)
          and out.status is Status.NORMAL_FORM
          and trace_lines(out.trace) == [
              r"step 0: (\x. x [4, (\x. x) 3]) +",
              r"step 1: + [4, (\x. x) 3]",
              r"step 2: + [4, 3]",
              "step 3: 7",
          ]
          and elapsed < 1.0)
    _report(1, "beta golden trace", ok)


def test_criterion_02_ski_compile_golden():
    start = time.monotonic()
    printed = print_comb(ski_compile(parse(CURRIED_F), Mode.NAIVE))
    elapsed = time.monotonic() - start
    ok = printed == "S (S I (K 4)) (S (K I) (K 3)) add" and elapsed < 1.0
    _report(2, "ski compile golden", ok)


def test_criterion_03_ski_evaluation_golden():
    # the golden chain displays eight lines; the jump to "add 4 3" covers
    # an I and a K contraction, so nine atomic steps
    start = time.monotonic()
    out = ski_reduce(ski_compile(parse(CURRIED_F), Mode.NAIVE), 1000,
                     collect_trace=True)
    elapsed = time.monotonic() - start
    chain = [line.split(": ", 1)[1] for line in ski_trace_lines(out.trace)]
    displayed = [
        "S I (K 4) add (S (K I) (K 3) add)",
        "I add (K 4 add) (S (K I) (K 3) add)",
        "add (K 4 add) (S (K I) (K 3) add)",
        "add 4 (S (K I) (K 3) add)",
        "add 4 (K I add (K 3 add))",
        "add 4 (I (K 3 add))",
        "add 4 3",
        "7",
    ]
    it = iter(chain)
    in_order = all(any(line == want for line in it) for want in displayed)
    ok = (out.result == CConst(IntLit(7))
          and out.steps_used == 9
          and in_order
          and elapsed < 1.0)
    _report(3, "ski eight-line chain", ok)


def test_criterion_04_debruijn_golden():
    printed = print_dterm(encode(parse(r"\y. (\x y. x) y")))
    _report(4, "de Bruijn encoding", printed == r"\.((\.\.#1) #0)")


def test_criterion_05_cam_compile_golden():
    printed = print_cat(cam_compile(encode(parse(F_SOURCE))),
                        expand_quotes=True)
    ok = printed == "$[L($[0!, <'4, $[L(0!), '3]>]), L(+ o Snd)]"
    _report(5, "cam compile golden", ok)


def test_criterion_06_cam_closure_golden():
    start = time.monotonic()
    out = cam_eval_closure(cam_compile(encode(parse(F_SOURCE))),
                           collect_trace=True)
    elapsed = time.monotonic() - start
    rules = [rule for rule, _ in out.trace[1:]]
    # the golden thirteen-line chain shows bang and dpair on one line; as
    # atomic rewrites the rule order is
    expected_rules = ["app", "ac", "app", "bang", "dpair", "quote", "app",
                      "quote", "ac", "bang", "ac", "ass", "snd", "delta"]
    lines = cam_trace_lines(out.trace)
    rho = "[(), L(+ o Snd) ()]"
    displayed = [
        "eps [L($[0!, <'4, $[L(0!), '3]>]) (), L(+ o Snd) ()]",
        f"$[0!, <'4, $[L(0!), '3]>] {rho}",
        f"eps [0! {rho}, <'4, $[L(0!), '3]> {rho}]",
        f"eps [L(+ o Snd) (), ['4 {rho}, $[L(0!), '3] {rho}]]",
        f"eps [L(+ o Snd) (), [4, $[L(0!), '3] {rho}]]",
        f"eps [L(+ o Snd) (), [4, eps [L(0!) {rho}, '3 {rho}]]]",
        f"eps [L(+ o Snd) (), [4, eps [L(0!) {rho}, 3]]]",
        f"eps [L(+ o Snd) (), [4, 0! [{rho}, 3]]]",
        "eps [L(+ o Snd) (), [4, 3]]",
        "(+ o Snd) [(), [4, 3]]",
        "+ (Snd [(), [4, 3]])",
        "+ [4, 3]",
        "7",
    ]
    chain = [line.split(": ", 1)[1] for line in lines]
    it = iter(chain)
    in_order = all(any(line == want for line in it) for want in displayed)
    ok = (out.result == IntV(7)
          and rules == expected_rules
          and in_order
          and elapsed < 1.0)
    _report(6, "cam closure chain", ok)


def test_criterion_07_supercombinator_golden():
    p = lift(parse(F_SOURCE))
    out = sc_reduce(p, collect_trace=True)
    ok = (print_program(p) == "$X x = x\n$Y x = x [4, $X 3]\n----\n$Y +"
          and out.result == intlit(7)
          and out.steps_used == 3
          and sc_trace_lines(out.trace) == [
              "step 0: $Y +",
              "step 1: + [4, $X 3]",
              "step 2: + [4, 3]",
              "step 3: 7",
          ])
    _report(7, "supercombinator golden", ok)


def test_criterion_08_type_inference_golden():
    got = infer(parse(r"\x y z. x (y z)"))
    b, c, a = TVar(0), TVar(1), TVar(2)
    want = Arrow(Arrow(b, c), Arrow(Arrow(a, b), Arrow(a, c)))
    _report(8, "composition type", types_equal(got, want))


def test_criterion_09_classification_table():
    table = {
        "3": Classification.SUPERCOMBINATOR,
        "4": Classification.SUPERCOMBINATOR,
        r"\x. x": Classification.SUPERCOMBINATOR,
        r"\x. y": Classification.NEITHER,
        r"\y. add y x": Classification.NEITHER,
        r"\f. f (\x. f x 2)": Classification.COMBINATOR_ONLY,
        r"\x. x": Classification.SUPERCOMBINATOR,             # I
        r"\x y. x": Classification.SUPERCOMBINATOR,           # K
        r"\x y z. x z (y z)": Classification.SUPERCOMBINATOR,  # S
    }
    ok = all(classify(parse(src)) is want for src, want in table.items())
    _report(9, "classification table", ok)


def test_criterion_10a_debruijn_roundtrip():
    start = time.monotonic()
    rng = random.Random(101)
    ok = True
    for _ in range(1000):
        t = gen_closed_lambda(rng, rng.randint(0, 7)) if rng.random() < 0.6 \
            else gen_int_term(rng, rng.randint(0, 4))
        ok = ok and alpha_eq(decode(encode(t)), t)
    _report(10, f"(a) 1000 de Bruijn round-trips "
                f"{time.monotonic() - start:.1f}s", ok)


def test_criterion_10b_ski_oracle():
    start = time.monotonic()
    rng = random.Random(102)
    ok = True
    for _ in range(500):
        t = gen_int_term(rng, rng.randint(1, 4))
        expected = reduce(t, EvalConfig(max_steps=10000)).result
        ok = ok and isinstance(expected, Const)
        out = ski_reduce(ski_compile(t, Mode.OPTIMIZED), 10000)
        ok = ok and out.result == CConst(expected.value)
    _report(10, f"(b) 500 ski-vs-beta {time.monotonic() - start:.1f}s", ok)


def test_criterion_10c_cam_and_sc_oracle():
    start = time.monotonic()
    rng = random.Random(103)
    ok = True
    for _ in range(300):
        t = gen_int_term(rng, rng.randint(1, 4))
        expected = reduce(t, EvalConfig(max_steps=10000)).result
        ok = ok and isinstance(expected, Const)
        cam_out = cam_eval_closure(cam_compile(encode(t)), 10000)
        ok = ok and cam_out.result == IntV(expected.value.value)
        sc_out = sc_reduce(lift(t), 10000)
        ok = ok and sc_out.result == expected
    _report(10, f"(c) 300 cam-vs-beta and sc-vs-beta "
                f"{time.monotonic() - start:.1f}s", ok)


def test_criterion_10d_capture_freedom():
    start = time.monotonic()
    rng = random.Random(104)
    ok = True
    for _ in range(1000):
        f = gen_small_term(rng, rng.randint(1, 5))
        g = gen_small_term(rng, rng.randint(0, 3))
        x = rng.choice(["x", "y", "z"])
        r = subst(g, x, f)
        expected = (free_vars(f) - {x}) | \
            (free_vars(g) if x in free_vars(f) else frozenset())
        ok = ok and free_vars(r) == expected
    _report(10, f"(d) 1000 capture-freedom cases "
                f"{time.monotonic() - start:.1f}s", ok)


def test_criterion_10e_subject_reduction():
    start = time.monotonic()
    rng = random.Random(105)
    ok = True
    checked = 0
    while checked < 200:
        t = desugar_pairs(gen_int_term(rng, rng.randint(1, 4)))
        try:
            ty = infer(t)
        except TypeInferenceError:
            continue
        nxt = beta_step(t)
        if nxt is None:
            continue
        try:
            unify(ty, infer(nxt))
        except TypeInferenceError:
            ok = False
        checked += 1
    _report(10, f"(e) 200 subject-reduction steps "
                f"{time.monotonic() - start:.1f}s", ok)


def test_criterion_10f_confluence_spot_check():
    start = time.monotonic()
    rng = random.Random(106)
    ok = True
    checked = 0
    attempts = 0
    while checked < 200 and attempts < 10000:
        attempts += 1
        t = gen_closed_lambda(rng, rng.randint(1, 6)) if attempts % 2 \
            else gen_int_term(rng, rng.randint(1, 4))
        no = reduce(t, EvalConfig(max_steps=500))
        ao = reduce(t, EvalConfig(max_steps=500,
                                  strategy=Strategy.APPLICATIVE_ORDER))
        if no.status is Status.NORMAL_FORM and ao.status is Status.NORMAL_FORM:
            ok = ok and alpha_eq(no.result, ao.result)
            checked += 1
    ok = ok and checked == 200
    _report(10, f"(f) 200 confluence spot-checks "
                f"{time.monotonic() - start:.1f}s", ok)


def test_criterion_10_corpus_agreement():
    # every bundled program yields the same integer on all four backends
    start = time.monotonic()
    ok = len(CORPUS) >= 20
    for path in CORPUS:
        t = parse(path.read_text())
        beta = reduce(t, EvalConfig(max_steps=20000)).result
        ok = ok and isinstance(beta, Const)
        n = beta.value.value
        ok = ok and ski_reduce(ski_compile(t, Mode.OPTIMIZED), 20000).result \
            == CConst(IntLit(n))
        ok = ok and cam_eval_closure(cam_compile(encode(t)), 20000).result \
            == IntV(n)
        ok = ok and sc_reduce(lift(t), 20000).result == intlit(n)
    _report(10, f"corpus agreement ({len(CORPUS)} programs) "
                f"{time.monotonic() - start:.1f}s", ok)
