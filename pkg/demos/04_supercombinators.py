"""Supercombinator classification, lambda lifting, and program reduction.

Run with:  python3 demos/04_supercombinators.py
"""

from appliq import classify, lift, parse, print_program, sc_reduce
from appliq.superc import sc_trace_lines

EXAMPLES = ["3", "[3, 4] +", r"\x. x", r"\x. y", r"\f. f (\x. f x 2)"]

print("classification:")
for src in EXAMPLES:
    print(f"  {src:24} {classify(parse(src)).value}")
print()

SOURCE = r"(\x. x [4, (\x. x) 3]) +"
program = lift(parse(SOURCE))
print(f"lifting {SOURCE}:")
print(print_program(program))
print()

print("reduction of the lifted program:")
out = sc_reduce(program, collect_trace=True)
for line in sc_trace_lines(out.trace):
    print(" ", line)
print()

# An inner abstraction with a free variable picks it up as a leading
# extra parameter.
inner_free = r"\f. f (\x. f x 2)"
print(f"lifting {inner_free} (extra parameter f):")
print(print_program(lift(parse(inner_free))))
