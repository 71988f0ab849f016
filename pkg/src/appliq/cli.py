"""Command-line driver: evaluate a source term on one backend or all
four, emit compiled forms, print traces or inferred types.

Exit codes: 0 ok, 1 usage, 2 parse error, 3 type error, 4 evaluation
error, 5 cross-backend disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cam, debruijn, ski, superc, types
from .reduction import EvalConfig, Status, reduce, trace_lines
from .syntax import (
    Const,
    FreeVariableError,
    IntLit,
    ParseError,
    Term,
    parse,
    print_term,
    resugar_pairs,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_TYPE = 3
EXIT_EVAL = 4
EXIT_DISAGREEMENT = 5

BACKENDS = ("beta", "ski", "cam", "sc")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(
        prog="appliq",
        description="Compile and evaluate an applicative-language term "
                    "on the beta, ski, cam or sc backend, or cross-check "
                    "all of them.")
    p.add_argument("file", nargs="?",
                   help="source file (reads stdin when omitted)")
    p.add_argument("--backend", choices=BACKENDS + ("all",), default="beta")
    p.add_argument("--trace", action="store_true",
                   help="print one line per reduction step")
    p.add_argument("--emit", nargs="?", const="", metavar="BACKEND",
                   help="print the compiled form only (optionally for the "
                        "given backend)")
    p.add_argument("--ski-mode", choices=("naive", "optimized"),
                   default="optimized")
    p.add_argument("--max-steps", type=int, default=10000)
    p.add_argument("--type", action="store_true", dest="show_type",
                   help="print the inferred type and exit")
    p.add_argument("--json", action="store_true", dest="as_json",
                   help="emit the run report as JSON")
    return p


def _result_int(backend: str, result) -> int | None:
    match backend, result:
        case ("beta" | "sc"), Const(IntLit(n)):
            return n
        case "ski", ski.CConst(IntLit(n)):
            return n
        case "cam", cam.IntV(n):
            return n
    return None


def _run_backend(name: str, term: Term, ski_mode: ski.Mode, max_steps: int,
                 want_trace: bool) -> tuple[dict, int | None, list[str]]:
    lines: list[str] = []
    if name == "beta":
        out = reduce(term, EvalConfig(max_steps=max_steps),
                     collect_trace=want_trace)
        compiled = print_term(term)
        result = print_term(resugar_pairs(out.result))
        if want_trace:
            lines = trace_lines(out.trace)
        value = _result_int(name, out.result)
    elif name == "ski":
        code = ski.ski_compile(term, ski_mode)
        out = ski.ski_reduce(code, max_steps, collect_trace=want_trace)
        compiled = ski.print_comb(code)
        result = ski.print_comb(out.result)
        if want_trace:
            lines = ski.ski_trace_lines(out.trace)
        value = _result_int(name, out.result)
    elif name == "cam":
        code = cam.cam_compile(debruijn.encode(term))
        out = cam.cam_eval_closure(code, max_steps, collect_trace=want_trace)
        compiled = cam.print_cat(code, expand_quotes=True)
        result = cam.print_cat(out.result)
        if want_trace:
            lines = cam.cam_trace_lines(out.trace)
        value = _result_int(name, out.result)
    elif name == "sc":
        prog = superc.lift(term)
        out = superc.sc_reduce(prog, max_steps, collect_trace=want_trace)
        compiled = superc.print_program(prog)
        result = print_term(resugar_pairs(out.result))
        if want_trace:
            lines = superc.sc_trace_lines(out.trace)
        value = _result_int(name, out.result)
    else:
        raise ValueError(f"unknown backend: {name}")
    report = {
        "name": name,
        "compiled": compiled,
        "result": result,
        "steps": out.steps_used,
        "status": out.status.value,
    }
    return report, value, lines


def compiled_form(name: str, term: Term, ski_mode: ski.Mode) -> str:
    if name == "beta":
        return print_term(term)
    if name == "ski":
        return ski.print_comb(ski.ski_compile(term, ski_mode))
    if name == "cam":
        return cam.print_cat(cam.cam_compile(debruijn.encode(term)),
                             expand_quotes=True)
    if name == "sc":
        return superc.print_program(superc.lift(term))
    raise ValueError(f"unknown backend: {name}")


def render_text(report: dict) -> str:
    """Text rendering of a run report; a pure function of the report so
    the JSON form round-trips."""
    lines = [f"{b['name']}: {b['result']} ({b['steps']} steps, {b['status']})"
             for b in report["backends"]]
    if report["agreement"] is not None:
        lines.append(f"agreement: {'yes' if report['agreement'] else 'no'}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    # pathological terms reduce to deeply nested trees
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 100000))
    args = _build_parser().parse_args(argv)

    if args.max_steps < 1:
        print("appliq: error: --max-steps must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    emit_backend = None
    if args.emit is not None:
        emit_backend = args.emit or args.backend
        if emit_backend == "all":
            print("appliq: error: --emit is not valid with --backend all",
                  file=sys.stderr)
            return EXIT_USAGE
        if emit_backend not in BACKENDS:
            print(f"appliq: error: unknown backend for --emit: {emit_backend}",
                  file=sys.stderr)
            return EXIT_USAGE

    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                source = fh.read()
        except OSError as exc:
            print(f"appliq: error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        source = sys.stdin.read()

    try:
        term = parse(source)
    except ParseError as exc:
        print(f"appliq: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.show_type:
        try:
            print(types.type_to_str(types.infer(term)))
        except types.TypeInferenceError as exc:
            print(f"appliq: type error: {exc}", file=sys.stderr)
            return EXIT_TYPE
        return EXIT_OK

    ski_mode = ski.Mode(args.ski_mode)

    try:
        if emit_backend is not None:
            print(compiled_form(emit_backend, term, ski_mode))
            return EXIT_OK

        names = BACKENDS if args.backend == "all" else (args.backend,)
        backends = []
        values: list[int | None] = []
        for name in names:
            rep, value, lines = _run_backend(name, term, ski_mode,
                                             args.max_steps, args.trace)
            backends.append(rep)
            values.append(value)
            if args.trace and not args.as_json:
                if len(names) > 1:
                    print(f"-- {name} --")
                for line in lines:
                    print(line)
    except (FreeVariableError, OverflowError) as exc:
        print(f"appliq: evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL

    ints = [v for v in values if v is not None]
    agreement = None
    if len(ints) >= 2:
        agreement = all(v == ints[0] for v in ints)
    report = {"source": print_term(term), "backends": backends,
              "agreement": agreement}

    if args.as_json:
        print(json.dumps(report, indent=2))
    else:
        sys.stdout.write(render_text(report))

    if agreement is False:
        return EXIT_DISAGREEMENT
    if any(b["status"] == Status.BUDGET_EXHAUSTED.value for b in backends):
        return EXIT_EVAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
