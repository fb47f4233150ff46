"""Exact gradings: Spin^c class, Maslov number, Alexander number.

Everything here is exact integer or Fraction arithmetic; no floating
point is ever used.  The Maslov grading of a generator is computed from
dominance counts between the universal-cover lifts of its components and
of the marker centres, weighted by 1/p and shifted by the lens-space
correction term d(p, q, q-1) + (p-1)/p.  The Alexander grading is half
the gap between the Maslov numbers taken with respect to the O markers
and the X markers, shifted by (n-1)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cover import lift_points
from .errors import ValidationError
from .grid import canonical_generator, require_knot, require_valid


@dataclass(frozen=True)
class GradingTriple:
    spin: int
    maslov: Fraction
    alexander: Fraction


def dominance_count(first, second):
    """Number of pairs (a, b) with a in first, b in second, and a strictly
    below-left of b (both coordinates strictly smaller)."""
    return sum(1 for a in first for b in second if a[0] < b[0] and a[1] < b[1])


def symmetric_dominance(first, second):
    """Half the sum of the dominance counts in both orders."""
    return Fraction(dominance_count(first, second)
                    + dominance_count(second, first), 2)


def weighted_dominance(first, second):
    """Dominance count extended bilinearly to weighted point collections.

    Arguments are sequences of ``(point, weight)`` pairs; weights may be
    ints or Fractions.  Formal differences of point sets are expressed by
    negative weights.
    """
    total = 0
    for (pa, wa) in first:
        for (pb, wb) in second:
            if pa[0] < pb[0] and pa[1] < pb[1]:
                total += wa * wb
    return total


def symmetric_dominance_weighted(first, second):
    """Bilinear extension of the symmetrised dominance pairing."""
    return Fraction(weighted_dominance(first, second)
                    + weighted_dominance(second, first), 2)


@lru_cache(maxsize=None)
def _d(p, q, i):
    if p == 1:
        return Fraction(0)
    return (Fraction(p * q - (2 * i + 1 - p - q) ** 2, 4 * p * q)
            - _d(q, p % q, i % q))


def d_invariant(p, q, i):
    """Correction term of the i-th Spin^c structure of the lens space.

    Defined by the Euclidean recursion with base value 0 at p = 1; at
    every step the new modulus and index are reduced modulo the previous
    q.  The top-level q is first reduced mod p (so negative q is fine,
    the lens space being unchanged by q -> q + p) and i is reduced mod p.
    """
    if not isinstance(p, int) or p < 1:
        raise ValidationError("range-error: d-invariant needs integer p >= 1, got %r" % (p,))
    q = q % p if p > 1 else 0
    i = i % p if p > 1 else 0
    if p > 1 and (q == 0 or math.gcd(p, q) != 1):
        raise ValidationError("gcd-failure: d-invariant needs gcd(p, q) = 1, "
                              "got p=%d q=%d" % (p, q))
    return _d(p, q, i)


def _scaled_generator_lift(x, p, q, n):
    # coordinates doubled so that marker centres become odd integers
    return tuple((2 * a, 2 * b) for (a, b) in lift_points(x.points(), p, q, n))


def _scaled_center_lift(cells, p, q, n):
    return tuple((2 * a + 1, 2 * b + 1) for (a, b) in lift_points(cells, p, q, n))


def spin_grading(x, diagram):
    """Z_p-valued Spin^c class of a generator.

    Normalised so that the canonical generator under the O markers sits
    in class (q - 1) mod p; two generators differ by the difference of
    their a-vector sums.
    """
    p, q = diagram.lens.p, diagram.lens.q
    base = canonical_generator(diagram)
    return ((q - 1) + sum(x.a) - sum(base.a)) % p


def maslov_grading(x, diagram, basepoints="O"):
    """Rational homological degree of a generator.

    ``basepoints`` selects which marker family anchors the grading: "O"
    gives the homological grading proper, "X" the one used to measure the
    Alexander grading.  Both use the same additive constant.
    """
    p, q, n = diagram.lens.p, diagram.lens.q, diagram.n
    cells = diagram.O if basepoints == "O" else diagram.X
    gen = _scaled_generator_lift(x, p, q, n)
    base = _scaled_center_lift(cells, p, q, n)
    raw = (dominance_count(gen, gen) - dominance_count(gen, base)
           - dominance_count(base, gen) + dominance_count(base, base) + 1)
    qn = q % p
    return Fraction(raw, p) + d_invariant(p, qn, qn - 1) + Fraction(p - 1, p)


def alexander_grading(x, diagram):
    """Rational Alexander grading; defined for knot diagrams only."""
    require_knot(diagram)
    return _alexander_unchecked(x, diagram)


def _alexander_unchecked(x, diagram):
    return (maslov_grading(x, diagram, "O") - maslov_grading(x, diagram, "X")
            - (diagram.n - 1)) / 2


def alexander_grading_swapped(x, diagram):
    """Alexander grading with the O and X roles exchanged (orientation
    reversal of the knot)."""
    require_knot(diagram)
    return (maslov_grading(x, diagram, "X") - maslov_grading(x, diagram, "O")
            - (diagram.n - 1)) / 2


def gradings_table(diagram, generators):
    """GradingTriple for each generator, with the per-diagram work shared.

    Requires a knot diagram (the Alexander grading is only defined then).
    """
    require_valid(diagram)
    require_knot(diagram)
    p, q, n = diagram.lens.p, diagram.lens.q, diagram.n
    qn = q % p
    const = d_invariant(p, qn, qn - 1) + Fraction(p - 1, p)
    base_o = _scaled_center_lift(diagram.O, p, q, n)
    base_x = _scaled_center_lift(diagram.X, p, q, n)
    self_o = dominance_count(base_o, base_o)
    self_x = dominance_count(base_x, base_x)
    base_gen = canonical_generator(diagram)
    base_sum = sum(base_gen.a)
    out = {}
    for x in generators:
        gen = _scaled_generator_lift(x, p, q, n)
        gg = dominance_count(gen, gen)
        raw_o = (gg - dominance_count(gen, base_o)
                 - dominance_count(base_o, gen) + self_o + 1)
        raw_x = (gg - dominance_count(gen, base_x)
                 - dominance_count(base_x, gen) + self_x + 1)
        m_o = Fraction(raw_o, p) + const
        m_x = Fraction(raw_x, p) + const
        out[x] = GradingTriple(
            spin=((q - 1) + sum(x.a) - base_sum) % p,
            maslov=m_o,
            alexander=(m_o - m_x - (n - 1)) / 2)
    return out


def monomial_grading(diagram, x, exponents):
    """Gradings of a monomial U_0^e_0 ... U_{n-1}^e_{n-1} times a generator.

    Each U-power leaves the Spin^c class alone, lowers the Maslov grading
    by 2 and the Alexander grading by 1.
    """
    n = diagram.n
    if len(exponents) != n or any(e < 0 for e in exponents):
        raise ValidationError("range-error: exponent vector %r must have %d "
                              "nonnegative entries" % (exponents, n))
    shift = sum(exponents)
    return GradingTriple(
        spin=spin_grading(x, diagram),
        maslov=maslov_grading(x, diagram) - 2 * shift,
        alexander=alexander_grading(x, diagram) - shift)


def element_grading(diagram, terms):
    """Gradings of a formal sum of monomial terms ``(exponents, generator)``.

    Refuses non-homogeneous sums: every term must carry the same triple.
    """
    terms = list(terms)
    if not terms:
        raise ValidationError("cannot grade the zero element")
    triples = [monomial_grading(diagram, x, e) for (e, x) in terms]
    if any(t != triples[0] for t in triples[1:]):
        raise ValidationError("element is not homogeneous: gradings %s"
                              % sorted(set((t.spin, str(t.maslov), str(t.alexander))
                                           for t in triples)))
    return triples[0]
