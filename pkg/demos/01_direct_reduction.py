"""Direct reduction: beta steps, arithmetic delta rules, and strategies.

Run with:  python3 demos/01_direct_reduction.py
"""

from appliq import EvalConfig, Strategy, parse, print_term, reduce
from appliq.reduction import trace_lines

SOURCE = r"(\x. x [4, (\x. x) 3]) +"

print(f"source term: {SOURCE}")
print()
print("normal-order trace (pairs shown re-sugared):")
out = reduce(parse(SOURCE), collect_trace=True)
for line in trace_lines(out.trace):
    print(" ", line)
print(f"result {print_term(out.result)} after {out.steps_used} steps")
print()

# Normal order finds a normal form whenever one exists; applicative order
# can spin on an argument the function never uses.
discard = parse(r"(\x. 7) ((\x. x x) (\x. x x))")
normal = reduce(discard, EvalConfig(max_steps=100))
eager = reduce(discard, EvalConfig(max_steps=100,
                                   strategy=Strategy.APPLICATIVE_ORDER))
print(f"(\\x. 7) applied to a divergent argument:")
print(f"  normal order:      {print_term(normal.result)}"
      f" ({normal.status.value})")
print(f"  applicative order: {eager.status.value}"
      f" after {eager.steps_used} steps")
print()

# Eta contraction is off by default; switch it on per run.
eta_demo = parse(r"(\g x. g x) add")
print(f"eta demo on {print_term(eta_demo)}:")
print(f"  use_eta=False: {print_term(reduce(eta_demo).result)}")
print(f"  use_eta=True:  "
      f"{print_term(reduce(eta_demo, EvalConfig(use_eta=True)).result)}")
