"""The conductance invariant C(T) = i * (f+h)/(g+h) evaluated at A = zeta_8.

Four independent routes compute the same Gaussian-rational (or infinite)
value: the bracket state sum, a linear two-track recursion over the vector,
a generalized continued fraction, and closed forms for vectors of length at
most three.  The classical continued fraction is kept alongside as the
consistency anchor for marker-free vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bracket import BracketTriple, bracket, combine_triples
from .cyclotomic import C_I, eval_at_zeta8
from .diagram import HORIZONTAL, PLUS, STAR, TangleDiagram, build_basic, combine, elementary
from .errors import (
    DivisorZeroError,
    IndeterminateError,
    TangleError,
    UnsupportedPatternError,
    VectorRuleError,
)
from .gaussian import G_I, INFINITY, GaussRational
from .vector import INF, TangleVector

PATH_STATE_SUM = "state-sum"
PATH_RECURSION = "recursion"
PATH_FRACTION = "continued-fraction"
PATH_CLOSED = "closed-form"
PATH_CLASSICAL = "classical-fraction"


@dataclass(frozen=True)
class ConductanceValue:
    """A conductance with the computation route that produced it."""

    value: GaussRational
    provenance: str


def conductance_from_bracket(t: BracketTriple) -> GaussRational:
    """i * (f+h)/(g+h) at A = zeta_8; infinite when only the denominator
    vanishes, indeterminate when both do, loud when outside Q(i)."""
    num = eval_at_zeta8(t.f + t.h)
    den = eval_at_zeta8(t.g + t.h)
    if den.is_zero():
        if num.is_zero():
            raise IndeterminateError(
                "both bracket combinations vanish at A = zeta_8 (0/0)"
            )
        return INFINITY
    return (C_I * num / den).to_gauss()


def _gr(a) -> GaussRational:
    if a is INF:
        return INFINITY
    return GaussRational(a, 0)


def classical_fraction(entries, first_is_horizontal: bool = True) -> GaussRational:
    """Projective continued fraction of a marker-free vector.

    entries are plain integers, optionally INF first; vertical-first input
    is normalized by an INF prefix; an even length folds one extra
    reciprocal, matching the trailing trivial entry of the odd normal form.
    """
    entries = list(entries)
    if not first_is_horizontal:
        entries = [INF] + entries
    if not entries:
        raise VectorRuleError("a tangle vector needs at least one entry", 1)
    for i, a in enumerate(entries):
        if a is INF and i > 0:
            raise VectorRuleError("inf is allowed only as the first entry", i + 1)
    v = _gr(entries[0])
    for a in entries[1:]:
        v = _gr(a) + v.invert()
    if len(entries) % 2 == 0:
        v = v.invert()
    return v


# The [inf] tangle with a virtual crossing stacked below is the single
# virtual crossing, whose conductance is i.  It replaces the inf/inf ratio
# the recursion would otherwise form on an infinite first entry.
_VC_OF_INF = GaussRational(0, 1)


def _prefix_track(entries):
    """C_k for every prefix and D_k for the prefix with its last marker
    flipped, computed left to right in one pass.

    D_k is None when its own divisor was degenerate; it is only an error if
    a later entry actually needs it (DivisorZeroError identifies the entry).
    """
    a0, e0 = entries[0]
    if a0 is INF:
        cs = [INFINITY]
        ds = [None]
        inf_base = True
    else:
        cs = [GaussRational(a0, e0)]
        ds = [GaussRational(a0, 1 - e0)]
        inf_base = False
    for k in range(1, len(entries)):
        a, e = entries[k]
        horizontal = k % 2 == 0
        prev_c, prev_d = cs[-1], ds[-1]

        def twist_div():
            if k == 1 and inf_base:
                return _VC_OF_INF
            if prev_d is None:
                raise DivisorZeroError(k + 1, "flipped-prefix value already degenerate")
            try:
                return prev_c.mul_i() / prev_d
            except IndeterminateError as exc:
                raise DivisorZeroError(k + 1, str(exc)) from exc

        def value(bit):
            inner = prev_c if bit == 0 else twist_div()
            if horizontal:
                return _gr(a) + inner
            return (_gr(a) + inner.invert()).invert()

        new_c = value(e)
        try:
            new_d = value(1 - e)
        except DivisorZeroError:
            new_d = None
        cs.append(new_c)
        ds.append(new_d)
    return cs, ds


def conductance_recursive(vec: TangleVector) -> GaussRational:
    """Two-track linear recursion over the vector entries.

    Each step needs the previous prefix conductance and the conductance of
    the previous prefix with its last marker flipped; an infinite first
    entry routes through the exact limit value C([inf] stacked on a virtual
    crossing) = i.
    """
    vec = vec.normalized()
    vec.validate()
    cs, _ = _prefix_track(vec.entries)
    return cs[-1]


def continued_fraction_C(vec: TangleVector) -> GaussRational:
    """Generalized continued fraction a_n + b_n/(a_{n-1} + b_{n-1}/(...)).

    b_k is 1 on marker-free entries; on marked entries it is -i times the
    flipped-prefix conductance (even positions) or the reciprocal of that
    (odd positions), with b_1 = i when the first entry is marked.  Prefix
    values come from the same linear pass as the recursion.
    """
    vec = vec.extended_odd()
    vec.validate()
    entries = vec.entries
    cs, ds = _prefix_track(entries)
    a0, e0 = entries[0]
    inf_base = a0 is INF
    if inf_base:
        w = INFINITY
    else:
        w = GaussRational(a0, e0)  # a_1 + b_1 with b_1 = i on a marked entry
    for k in range(1, len(entries)):
        a, e = entries[k]
        if e == 0:
            b = GaussRational(1, 0)
        elif k == 1 and inf_base:
            # Exact limit of a_2 + b_2/W_1 when the first twist count grows.
            w = _gr(a) - G_I
            continue
        else:
            d = ds[k - 1]
            if d is None:
                raise DivisorZeroError(k + 1, "flipped-prefix value already degenerate")
            neg_id = -(d.mul_i())
            b = neg_id if k % 2 == 1 else neg_id.invert()
        try:
            w = _gr(a) + b / w
        except IndeterminateError as exc:
            raise IndeterminateError(
                f"continued fraction undefined at level {k + 1}: {exc}"
            ) from exc
    return w


def _ratio(num_re, num_im, den) -> GaussRational:
    """(num_re + num_im*i)/den projectively, for integer formula pieces."""
    if den == 0:
        if num_re == 0 and num_im == 0:
            raise IndeterminateError("closed form evaluates to 0/0")
        return INFINITY
    return GaussRational(Fraction(num_re, den), Fraction(num_im, den))


def _closed_two(a, e1, b, e2) -> GaussRational:
    if a is INF:
        if e2 == 0:
            return _ratio(1, 0, b)
        return _ratio(b, 1, b * b + 1)
    if (e1, e2) == (0, 0):
        return _ratio(a, 0, a * b + 1)
    if (e1, e2) == (1, 0):
        return _ratio(a + b + a * a * b, 1, (a * b + 1) ** 2 + b * b)
    if (e1, e2) == (0, 1):
        return _ratio(a * (a * b + 1), a * a, (a * b + 1) ** 2 + a * a)
    return _ratio(
        -a + b + a * a * b, a * a, (a * b - 1) ** 2 + a * a + b * b - 1
    )


def _closed_three_marked(a, e1, b, e2, c) -> GaussRational:
    base = _gr(c)
    if a is INF:
        if e2 == 0:
            return _ratio(1, 0, b) + base + G_I
        return _ratio(-b, b * b, b * b + 1) + base
    if (e1, e2) == (0, 0):
        return _ratio(a, 0, a * b + 1) + base + G_I
    if (e1, e2) == (1, 0):
        d = (a * b + 1) ** 2 + b * b
        return _ratio(a - b + a * a * b, (1 + a * a) * b * b, d) + base
    if (e1, e2) == (0, 1):
        d = (a * b + 1) ** 2 + a * a
        return _ratio(-a * (a * b + 1), (a * b + 1) ** 2, d) + base
    d = (a * b - 1) ** 2 + a * a + b * b - 1
    return _ratio(-(a - b + a * a * b), (1 + a * a) * b * b, d) + base


def closed_form(vec: TangleVector) -> GaussRational:
    """Direct substitution into the displayed closed forms (length <= 3).

    An infinite first entry uses the exact limit forms.  The formulas are
    total over integer entries up to projective division; a vanishing
    denominator with vanishing numerator raises IndeterminateError.
    """
    vec = vec.normalized()
    entries = vec.entries
    n = len(entries)
    if n == 0 or n > 3:
        raise UnsupportedPatternError(f"no closed form for length {n}")
    for i, (a, e) in enumerate(entries):
        if a is INF and i > 0:
            raise VectorRuleError("inf is allowed only as the first entry", i + 1)
    if n == 1:
        a, e = entries[0]
        if a is INF:
            return INFINITY
        return GaussRational(a, e)
    if n == 2:
        (a, e1), (b, e2) = entries
        return _closed_two(a, e1, b, e2)
    (a, e1), (b, e2), (c, e3) = entries
    if e3 == 0:
        return _closed_two(a, e1, b, e2) + _gr(c)
    return _closed_three_marked(a, e1, b, e2, c)


def additivity_identity(t: BracketTriple, s: BracketTriple, op: str = "plus"):
    """(lhs, rhs, correction) for the conductance of a combined tangle.

    plus: lhs = C(T+S) and lhs = rhs - correction, where rhs = C(T) + C(S)
    and correction = 2*h_T*h_S*i / ((g_T+h_T)(g_S+h_S)) at A = zeta_8.
    star: lhs = C(T*S), rhs = 1/(1/C(T) + 1/C(S)), and the correction
    2*h_T*h_S*i / ((f_T+h_T)(f_S+h_S)) satisfies 1/lhs = 1/rhs + correction.
    The correction vanishes whenever either side has no virtual coefficient.
    """
    if op not in ("plus", "star"):
        raise ValueError(f"unknown combination {op!r}")
    lhs = conductance_from_bracket(combine_triples(t, s, op))
    ct = conductance_from_bracket(t)
    cs = conductance_from_bracket(s)
    cross = eval_at_zeta8(t.h) * eval_at_zeta8(s.h) * (C_I + C_I)
    if op == "plus":
        rhs = ct + cs
        den = eval_at_zeta8(t.g + t.h) * eval_at_zeta8(s.g + s.h)
    else:
        rhs = (ct.invert() + cs.invert()).invert()
        den = eval_at_zeta8(t.f + t.h) * eval_at_zeta8(s.f + s.h)
    if den.is_zero():
        raise IndeterminateError("correction denominator vanishes at A = zeta_8")
    correction = (cross / den).to_gauss()
    return lhs, rhs, correction


def ratio_identity(d: TangleDiagram):
    """(C(T), C(T'), C(T'')) where T' and T'' append a virtual crossing to
    the east and to the south; projectively C(T) = -i * C(T') * C(T'')."""
    vc = elementary(0, 1, HORIZONTAL)
    t = bracket(d)
    t_east = bracket(combine(d, vc, PLUS))
    t_south = bracket(combine(d, vc, STAR))
    return (
        conductance_from_bracket(t),
        conductance_from_bracket(t_east),
        conductance_from_bracket(t_south),
    )


def conductance_paths(vec: TangleVector, include_state_sum: bool = True):
    """Every available route for one vector.

    Returns (values, errors): values maps a provenance label to a
    ConductanceValue, errors maps a label to the TangleError it raised.
    """
    vec = vec.normalized()
    vec.validate()
    values = {}
    errors = {}

    def attempt(label, fn):
        try:
            values[label] = ConductanceValue(fn(), label)
        except TangleError as exc:
            errors[label] = exc

    if include_state_sum:
        attempt(PATH_STATE_SUM, lambda: conductance_from_bracket(bracket(build_basic(vec))))
    attempt(PATH_RECURSION, lambda: conductance_recursive(vec))
    attempt(PATH_FRACTION, lambda: continued_fraction_C(vec))
    if len(vec.entries) <= 3:
        attempt(PATH_CLOSED, lambda: closed_form(vec))
    if vec.classical:
        attempt(
            PATH_CLASSICAL,
            lambda: classical_fraction([a for a, _ in vec.entries]),
        )
    return values, errors
