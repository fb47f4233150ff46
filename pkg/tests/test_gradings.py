import random
from fractions import Fraction

import pytest

from lensgrid import (Generator, GridDiagram, LensParams, ValidationError,
                      alexander_grading, alexander_grading_swapped,
                      canonical_generator, d_invariant, dominance_count,
                      element_grading, gradings_table, maslov_grading,
                      monomial_grading, spin_grading, symmetric_dominance,
                      symmetric_dominance_weighted)
from lensgrid.corpus import coprime_qs, random_knot_diagram
from lensgrid.errors import KnotRequiredError

STAIRCASE = ((0, 0), (2, 1), (4, 2), (1, 3), (3, 4))

L21 = GridDiagram(LensParams(2, 1), 2, ((0, 0), (1, 1)), ((1, 0), (0, 1)))


def test_dominance_count_basics():
    assert dominance_count([(0, 0)], [(1, 1)]) == 1
    assert dominance_count([(0, 0), (1, 1)], []) == 0
    assert dominance_count(STAIRCASE, STAIRCASE) == 7


def test_symmetric_dominance_examples():
    assert symmetric_dominance([(0, 0)], [(1, 1)]) == Fraction(1, 2)
    rng = random.Random(1)
    for _ in range(30):
        pts = [(rng.randrange(10), rng.randrange(10)) for _ in range(4)]
        assert symmetric_dominance(pts, pts) == dominance_count(pts, pts)


def test_weighted_dominance_bilinearity():
    rng = random.Random(2)
    for _ in range(40):
        a = [(rng.randrange(12), rng.randrange(12)) for _ in range(4)]
        b = [(rng.randrange(12), rng.randrange(12)) for _ in range(3)]
        c = [(rng.randrange(12) + 20, rng.randrange(12)) for _ in range(3)]
        wa = [(pt, 1) for pt in a]
        # disjoint union additivity
        assert (symmetric_dominance_weighted(wa, [(pt, 1) for pt in b + c])
                == symmetric_dominance_weighted(wa, [(pt, 1) for pt in b])
                + symmetric_dominance_weighted(wa, [(pt, 1) for pt in c]))
        # quadratic expansion of a formal difference
        diff = [(pt, 1) for pt in a] + [(pt, -1) for pt in b]
        lhs = symmetric_dominance_weighted(diff, diff)
        rhs = (symmetric_dominance_weighted(wa, wa)
               - 2 * symmetric_dominance_weighted(wa, [(pt, 1) for pt in b])
               + symmetric_dominance_weighted([(pt, 1) for pt in b],
                                              [(pt, 1) for pt in b]))
        assert lhs == rhs


def test_d_invariant_anchors():
    assert d_invariant(1, 0, 0) == 0
    assert d_invariant(2, 1, 0) == Fraction(-1, 4)
    assert d_invariant(2, 1, 1) == Fraction(1, 4)
    assert d_invariant(5, 2, 1) == Fraction(-2, 5)


def test_d_invariant_tables():
    assert [d_invariant(3, 1, i) for i in range(3)] == [
        Fraction(-1, 2), Fraction(1, 6), Fraction(1, 6)]
    assert [d_invariant(3, 2, i) for i in range(3)] == [
        Fraction(-1, 6), Fraction(-1, 6), Fraction(1, 2)]
    assert [d_invariant(5, 2, i) for i in range(5)] == [
        Fraction(-2, 5), Fraction(-2, 5), Fraction(2, 5), Fraction(0),
        Fraction(2, 5)]
    assert {d_invariant(2, 1, i) for i in range(2)} == {Fraction(-1, 4),
                                                        Fraction(1, 4)}


def test_d_invariant_normalisation():
    for i in range(3):
        assert d_invariant(3, -1, i) == d_invariant(3, 2, i)
    assert d_invariant(5, 2, 6) == d_invariant(5, 2, 1)
    with pytest.raises(ValidationError):
        d_invariant(4, 2, 0)


def test_spin_grading_gn1():
    d = GridDiagram(LensParams(5, 2), 1, ((0, 0),), ((2, 0),))
    assert spin_grading(canonical_generator(d), d) == 1
    assert spin_grading(Generator((0,), (3,)), d) == 4


def test_spin_grading_relative():
    rng = random.Random(3)
    for _ in range(25):
        p = rng.choice([3, 5])
        q = rng.choice(coprime_qs(p))
        d = random_knot_diagram(p, q, 2, rng)
        for _ in range(5):
            a1 = tuple(rng.randrange(p) for _ in range(2))
            a2 = tuple(rng.randrange(p) for _ in range(2))
            x1, x2 = Generator((0, 1), a1), Generator((1, 0), a2)
            assert (spin_grading(x2, d) - spin_grading(x1, d)) % p \
                == (sum(a2) - sum(a1)) % p


def test_maslov_anchor_gn1():
    d = GridDiagram(LensParams(5, 2), 1, ((0, 0),), ((2, 0),))
    assert maslov_grading(canonical_generator(d), d) == Fraction(-2, 5)


def test_frozen_l21_values():
    # every value below was computed by hand from the dominance counts
    table = {
        Generator((0, 1), (0, 0)): (Fraction(-5, 4), Fraction(-1, 4), Fraction(-1)),
        Generator((1, 0), (0, 0)): (Fraction(-1, 4), Fraction(-5, 4), Fraction(0)),
        Generator((0, 1), (0, 1)): (Fraction(-3, 4), Fraction(-7, 4), Fraction(0)),
        Generator((1, 0), (0, 1)): (Fraction(1, 4), Fraction(-3, 4), Fraction(0)),
    }
    for x, (m_o, m_x, a) in table.items():
        assert maslov_grading(x, L21, "O") == m_o
        assert maslov_grading(x, L21, "X") == m_x
        assert alexander_grading(x, L21) == a
    assert canonical_generator(L21) == Generator((0, 1), (0, 0))


def test_alexander_symmetry():
    rng = random.Random(4)
    for _ in range(12):
        p = rng.choice([2, 3, 5])
        q = rng.choice(coprime_qs(p))
        d = random_knot_diagram(p, q, 2, rng)
        for _ in range(6):
            sigma = [0, 1] if rng.random() < 0.5 else [1, 0]
            x = Generator(tuple(sigma), tuple(rng.randrange(p) for _ in range(2)))
            assert alexander_grading_swapped(x, d) \
                == -alexander_grading(x, d) - (d.n - 1)


def test_gradings_table_matches_pointwise():
    rng = random.Random(8)
    d = random_knot_diagram(3, 2, 2, rng)
    from lensgrid.complexes import enumerate_generators
    gens = list(enumerate_generators(d))
    table = gradings_table(d, gens)
    for x in gens[::3]:
        t = table[x]
        assert t.spin == spin_grading(x, d)
        assert t.maslov == maslov_grading(x, d)
        assert t.alexander == alexander_grading(x, d)


def test_gradings_refuse_links():
    link = GridDiagram(LensParams(3, 1), 2, ((0, 0), (1, 1)), ((0, 0), (1, 1)))
    with pytest.raises(KnotRequiredError):
        alexander_grading(Generator((0, 1), (0, 0)), link)


def test_monomial_and_element_gradings():
    x = Generator((0, 1), (0, 0))
    base = monomial_grading(L21, x, (0, 0))
    shifted = monomial_grading(L21, x, (2, 1))
    assert shifted.spin == base.spin
    assert shifted.maslov == base.maslov - 6
    assert shifted.alexander == base.alexander - 3
    y = Generator((1, 0), (0, 1))
    # M(x) - M(y) = -3/2, A diff = -1: no U-power can make the sum homogeneous
    with pytest.raises(ValidationError):
        element_grading(L21, [((0, 0), x), ((0, 0), y)])
    # U_0 x and U_1 x are homogeneous together
    t = element_grading(L21, [((1, 0), x), ((0, 1), x)])
    assert t.maslov == base.maslov - 2 and t.alexander == base.alexander - 1
    with pytest.raises(ValidationError):
        element_grading(L21, [])
