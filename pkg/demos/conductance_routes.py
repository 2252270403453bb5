"""Four routes to the same conductance, and where each one gives out.

C(T) = i * (f+h)/(g+h) evaluated at the eighth root of unity.  The state
sum is the oracle; the recursion, the continued fraction, and the closed
forms must reproduce it.  Run: python3 demos/conductance_routes.py
"""

from vtangle import (
    TangleError,
    bracket,
    build_basic,
    classical_fraction,
    conductance_from_bracket,
    conductance_paths,
    conductance_recursive,
    parse_vector,
)

EXAMPLES = ["2,3,1", "2,3,1v", "1v,1v", "inf,2v", "2v,0v,1v", "0,1,2v"]

for text in EXAMPLES:
    vec = parse_vector(text)
    values, errors = conductance_paths(vec)
    print(f"({text})")
    for label, cv in values.items():
        print(f"  {label:>20}: {cv.value}")
    for label, err in errors.items():
        print(f"  {label:>20}: degenerate, {err}")
    print()

# classical vectors recover the ordinary continued fraction
vec = parse_vector("2,3,1")
frac = classical_fraction([a for a, _ in vec.entries])
print(f"classical fraction of (2,3,1): {frac.real_str()}")
c = conductance_from_bracket(bracket(build_basic(vec)))
print(f"conductance of (2,3,1):        {c}")
print()

# the (0, b, cv) family breaks the recursion's divisor but not the value:
# the state sum still says c + i
for text in ("0,1,2v", "0,2v,1v"):
    vec = parse_vector(text)
    truth = conductance_from_bracket(bracket(build_basic(vec)))
    print(f"({text}) state sum: {truth}")
    try:
        conductance_recursive(vec)
    except TangleError as exc:
        print(f"({text}) recursion: {exc}")
