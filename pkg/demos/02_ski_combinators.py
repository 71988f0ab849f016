"""Bracket abstraction into {I, K, S} and combinator reduction.

Run with:  python3 demos/02_ski_combinators.py
"""

from appliq import Mode, parse, print_comb, ski_compile, ski_reduce
from appliq.ski import ski_trace_lines

SOURCE = r"(\x. x 4 ((\x. x) 3)) add"

print(f"source term: {SOURCE}")
print()
naive = ski_compile(parse(SOURCE), Mode.NAIVE)
optimized = ski_compile(parse(SOURCE), Mode.OPTIMIZED)
print(f"naive compilation:     {print_comb(naive)}")
print(f"optimized compilation: {print_comb(optimized)}")
print()

print("reduction of the naive form:")
out = ski_reduce(naive, collect_trace=True)
for line in ski_trace_lines(out.trace):
    print(" ", line)
print()

# The two modes differ on bodies the variable never touches: naive keeps
# splitting applications through S, optimized cuts straight to K.
constant_body = r"\x. add 1 2"
body = parse(constant_body)
print(f"compiling {constant_body}:")
print(f"  naive:     {print_comb(ski_compile(body, Mode.NAIVE))}")
print(f"  optimized: {print_comb(ski_compile(body, Mode.OPTIMIZED))}")
