"""Tour of the bracket decomposition: three pictures, three coefficients.

Every 4-ended diagram expands into f * (vertical) + g * (horizontal)
+ h * (virtual crossing).  Run: python3 demos/bracket_basics.py
"""

from vtangle import (
    HORIZONTAL,
    PLUS,
    STAR,
    VERTICAL,
    bracket,
    bracket_elementary,
    build_basic,
    combine,
    combine_triples,
    elementary,
    insert_kink,
    parse_vector,
    virtualize_crossing,
)
from vtangle.diagram import NW


def show(label, t):
    print(f"{label:>28}: f = {t.f},  g = {t.g},  h = {t.h}")


# the three trivial pictures pin the decomposition
show("[0]", bracket(elementary(0, 0, HORIZONTAL)))
show("1/[0]", bracket(elementary(0, 0, VERTICAL)))
show("virtual crossing", bracket(elementary(0, 1, HORIZONTAL)))
print()

# twist regions: the state sum and the closed form always agree
for n in (1, 2, -3):
    d = elementary(n, 0, HORIZONTAL)
    show(f"[{n}] state sum", bracket(d))
    show(f"[{n}] closed form", bracket_elementary(n, 0, HORIZONTAL))
print()

# a virtual marker moves one coefficient onto the virtual picture
show("[2]", bracket(elementary(2, 0)))
show("[2] marked", bracket(elementary(2, 1)))
print()

# gluing diagrams multiplies out to the triple combination rules
t = build_basic(parse_vector("2,1v"))
s = elementary(1, 0)
for op in (PLUS, STAR):
    glued = bracket(combine(t, s, op))
    predicted = combine_triples(bracket(t), bracket(s), op)
    show(f"(2,1v) {op} [1] glued", glued)
    show(f"(2,1v) {op} [1] predicted", predicted)
print()

# a kink only scales the bracket; virtualizing a crossing does nothing
d = build_basic(parse_vector("2,1v"))
show("(2,1v)", bracket(d))
show("(2,1v) with a +kink", bracket(insert_kink(d, NW, 1)))
show("(2,1v) virtualized", bracket(virtualize_crossing(d, 0)))
