"""Square-torus grid invariants, used as an independent cross-check.

The Maslov grading here is the classical integer-valued dominance-count
formula on an N x N grid; the Alexander multi-grading comes from the
symmetrised dominance pairing against the per-component marker
differences.  Gradings of a lens-space diagram are validated against
these by lifting to the universal cover: relative Maslov and Alexander
gradings scale by 1/p under the covering, and the absolute Maslov
gradings differ by d(p, q, q-1) + (p-1)/p.

The rectangle engine is shared with the lens-space complex (the square
torus is the untwisted case), so the geometric layer is common code; the
grading formulas on the two sides are independent of one another, which
is where the cross-validation has its teeth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .complexes import (DEFAULT_GENERATOR_CAP, enumerate_generators,
                        interior_count, torus_parallelograms)
from .cover import (lift_diagram, lift_generator, require_valid_s3,
                    s3_link_components)
from .errors import InternalInvariantError, SizeCapError
from .gradings import d_invariant, dominance_count, gradings_table
from .grid import canonical_generator, require_knot, require_valid
from .homology import HomologyTable, homology_ranks


def _scaled(points):
    return tuple((2 * a, 2 * b) for (a, b) in points)


def _scaled_centers(cells):
    return tuple((2 * c + 1, 2 * r + 1) for (c, r) in cells)


def s3_maslov(points, marker_cells):
    """Integer Maslov grading of a grid generator on the square torus.

    ``points`` are the generator's (col, row) components, ``marker_cells``
    the cells of the marker family playing the anchoring role.
    """
    gen = _scaled(points)
    base = _scaled_centers(marker_cells)
    return (dominance_count(gen, gen) - dominance_count(gen, base)
            - dominance_count(base, gen) + dominance_count(base, base) + 1)


def basepoint_partition(diagram):
    """Markers grouped by link component, as (o_cells, x_cells) pairs."""
    comps = s3_link_components(diagram)
    return [(tuple(diagram.O[r] for r in rows), tuple(diagram.X[r] for r in rows))
            for rows in comps]


def s3_alexander_multi(points, diagram):
    """Alexander multi-grading of a generator, one rational per component."""
    require_valid_s3(diagram)
    gen = _scaled(points)
    all_o = _scaled_centers(diagram.O)
    all_x = _scaled_centers(diagram.X)
    # weights doubled so the 1/2 coefficients stay integral
    left = [(pt, 2) for pt in gen] + [(pt, -1) for pt in all_x] \
        + [(pt, -1) for pt in all_o]
    out = []
    for (o_cells, x_cells) in basepoint_partition(diagram):
        right = [(pt, 1) for pt in _scaled_centers(x_cells)] \
            + [(pt, -1) for pt in _scaled_centers(o_cells)]
        j = Fraction(_wdom(left, right) + _wdom(right, left), 4)
        out.append(j - Fraction(len(o_cells) - 1, 2))
    return tuple(out)


def s3_alexander_total(points, diagram, components=None):
    """Total Alexander grading; equals the sum of the multi-grading."""
    require_valid_s3(diagram)
    ell = components if components is not None else len(s3_link_components(diagram))
    gen = _scaled(points)
    all_o = _scaled_centers(diagram.O)
    all_x = _scaled_centers(diagram.X)
    left = [(pt, 2) for pt in gen] + [(pt, -1) for pt in all_x] \
        + [(pt, -1) for pt in all_o]
    right = [(pt, 1) for pt in all_x] + [(pt, -1) for pt in all_o]
    j = Fraction(_wdom(left, right) + _wdom(right, left), 4)
    return j - Fraction(diagram.N - ell, 2)


def _wdom(first, second):
    total = 0
    for (pa, wa) in first:
        for (pb, wb) in second:
            if pa[0] < pb[0] and pa[1] < pb[1]:
                total += wa * wb
    return total


def s3_tilde_homology(diagram, cap=DEFAULT_GENERATOR_CAP, pivot="low"):
    """Bigraded homology of the fully blocked square-grid complex.

    Works for links; the extracted groups divide out one tensor factor
    per marker pair beyond the component count.
    """
    require_valid_s3(diagram)
    N = diagram.N
    total = math.factorial(N)
    if cap is not None and total > cap:
        raise SizeCapError("refusing to enumerate %d! = %d generators (cap %d)"
                           % (N, total, cap))
    ell = len(s3_link_components(diagram))
    o_centers = [(c + Fraction(1, 2), r + Fraction(1, 2)) for (c, r) in diagram.O]
    x_centers = [(c + Fraction(1, 2), r + Fraction(1, 2)) for (c, r) in diagram.X]

    gens = [tuple((perm[r], r) for r in range(N))
            for perm in permutations(range(N))]
    grading = {}
    for pts in gens:
        m = s3_maslov(pts, diagram.O)
        a = s3_alexander_total(pts, diagram, components=ell)
        grading[pts] = (m, a)

    def blocked_targets(pts):
        cols = tuple(c for (c, _) in sorted(pts, key=lambda t: t[1]))
        out = []
        for (i, j, _, w, h, target) in torus_parallelograms(cols, N, N, 0):
            hit = any(
                interior_count(sc, tc, cols[i], i, w, h, N, N, 0)
                for (sc, tc) in o_centers + x_centers)
            if not hit:
                out.append(tuple((target[r], r) for r in range(N)))
        return out

    groups = {}
    for pts in gens:
        m, a = grading[pts]
        groups.setdefault(a, {}).setdefault(m, []).append(pts)

    ranks = {}
    for a, levels in sorted(groups.items()):
        bits = {}
        for m, basis in levels.items():
            below = {y: k for k, y in enumerate(levels.get(m - 1, []))}
            rows = []
            for pts in basis:
                row = 0
                acc = {}
                for y in blocked_targets(pts):
                    acc[y] = acc.get(y, 0) + 1
                for y, c in acc.items():
                    if c % 2 == 0:
                        continue
                    if grading[y] != (m - 1, a):
                        raise InternalInvariantError(
                            "blocked term changes Alexander or drops Maslov != 1")
                    row |= 1 << below[y]
                rows.append(row)
            bits[m] = rows
        for m, h in homology_ranks(levels, bits, pivot).items():
            ranks[(m, a)] = ranks.get((m, a), 0) + h

    table = HomologyTable(spin_count=1, tensor_exponent=N - ell,
                          classes={0: ranks})
    return table


@dataclass
class CoverReport:
    """Outcome of cross-checking lens gradings through the universal cover."""

    rows: list
    violations: list

    @property
    def ok(self):
        return not self.violations


def verify_cover_relations(diagram, cap=DEFAULT_GENERATOR_CAP):
    """Check every covering-space grading relation on a lens knot diagram.

    For each generator x with lift x~: the absolute relation
    M(x) = M~(x~)/p + d(p, q, q-1) + (p-1)/p must hold, and relative to a
    fixed base generator both p*(M(x) - M(base)) = M~(x~) - M~(base~) and
    p*(A(x) - A(base)) = A~(x~) - A~(base~).  The canonical generator's
    lift must have square-grid Maslov grading -(p*n - 1), and the lifted
    link must have p / order(class) components.  Violations are report
    content, not exceptions.
    """
    require_valid(diagram)
    link = require_knot(diagram)
    p, q, n = diagram.lens.p, diagram.lens.q, diagram.n
    lifted = lift_diagram(diagram)
    ell = len(s3_link_components(lifted))
    violations = []
    if ell * link.order != p:
        violations.append("lifted diagram has %d components, expected p/order "
                          "= %d/%d" % (ell, p, link.order))

    qn = q % p
    shift = d_invariant(p, qn, qn - 1) + Fraction(p - 1, p)
    gens = list(enumerate_generators(diagram, cap))
    table = gradings_table(diagram, gens)

    rows = []
    base = None
    for x in gens:
        t = table[x]
        pts = lift_generator(x, diagram)
        m_cover = s3_maslov(pts, lifted.O)
        a_cover = s3_alexander_total(pts, lifted, components=ell)
        row = {"generator": x, "spin": t.spin, "maslov": t.maslov,
               "alexander": t.alexander, "cover_maslov": m_cover,
               "cover_alexander": a_cover}
        rows.append(row)
        if t.maslov != Fraction(m_cover, p) + shift:
            violations.append("absolute Maslov shift fails for %r" % (x,))
        if base is None:
            base = row
        else:
            if p * (t.maslov - base["maslov"]) != m_cover - base["cover_maslov"]:
                violations.append("relative Maslov relation fails for %r" % (x,))
            if p * (t.alexander - base["alexander"]) != a_cover - base["cover_alexander"]:
                violations.append("relative Alexander relation fails for %r" % (x,))

    canon = canonical_generator(diagram)
    canon_lift = lift_generator(canon, diagram)
    if s3_maslov(canon_lift, lifted.O) != -(p * n - 1):
        violations.append("canonical generator's lift has square-grid Maslov "
                          "%d, expected %d"
                          % (s3_maslov(canon_lift, lifted.O), -(p * n - 1)))
    if table[canon].maslov != d_invariant(p, qn, qn - 1) - (n - 1):
        violations.append("canonical generator Maslov %s != d(p,q,q-1) - (n-1)"
                          % (table[canon].maslov,))
    return CoverReport(rows=rows, violations=violations)
