"""Simply-typed inference and checking.

Run with:  python3 demos/05_type_inference.py
"""

from appliq import infer, parse, type_to_str
from appliq.types import NAT, Arrow, TypeInferenceError, check_typed_term

for src in [r"\x. x", r"\x y z. x (y z)", r"\x y z. x z (y z)",
            "add 4", r"(\x. x [4, (\x. x) 3]) +"]:
    print(f"  {src:28} : {type_to_str(infer(parse(src)))}")
print()

print("untypable terms fail with the conflicting constraint:")
for src in [r"\x. x x", "add add"]:
    try:
        infer(parse(src))
    except TypeInferenceError as exc:
        print(f"  {src:12} {type(exc).__name__}: {exc}")
print()

print("checking fully annotated terms needs no unification:")
ann = {"f": Arrow(NAT, NAT), "n": NAT}
print(f"  f : N -> N, n : N  |-  f n : "
      f"{type_to_str(check_typed_term(parse('f n'), ann))}")
try:
    check_typed_term(parse("f n"), {"f": NAT, "n": NAT})
except TypeInferenceError as exc:
    print(f"  f : N, n : N       |-  f n  rejected: {exc}")
