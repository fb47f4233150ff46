"""Twisted toroidal grid diagrams for knots and links in lens spaces.

Coordinate conventions, shared by every module in the package:

* ``L(p, q)`` denotes ``-p/q`` surgery on the unknot, with ``p >= 2``,
  ``q != 0``, ``-p < q < p`` and ``gcd(p, |q|) = 1``.
* All geometry lives in sheared plane coordinates ``(s, t)``.  The alpha
  curves are the horizontal lines ``t = 0 .. n-1``; the beta curve
  ``beta_j`` meets the fundamental domain ``[0, n*p) x [0, n)`` in the
  ``p`` vertical lines ``s = j, j+n, ..., j+(p-1)*n``.  The torus is the
  quotient of the plane by the lattice spanned by ``(n*p, 0)`` and
  ``(n*q, n)``: climbing one row period shifts the horizontal coordinate
  by ``n*q``.
* A cell ``(s, t)``, with ``0 <= s < n*p`` and ``0 <= t < n``, is the unit
  square whose lower-left corner is ``(s, t)``; its marker sits at the
  centre ``(s + 1/2, t + 1/2)``.
* Markers are stored row-major: ``O[t]`` is the O cell in row ``t``.
* A generator of the chain complex picks one intersection point on each
  alpha curve, forming a bijection onto the beta curves.  It is encoded
  as ``(sigma, a)`` with ``sigma`` a permutation of ``{0..n-1}`` and
  ``a`` a vector in ``{0..p-1}^n``; the row-``t`` component is the point
  ``(sigma[t] + n*a[t], t)``.

The underlying knot or link is recovered by joining each X to the O in
its row by an arc inside that row, then each O onward to the X in its
column by an arc inside that column; row arcs are pushed below the
Heegaard torus and column arcs above it.  An O and an X occupying the
same cell encode a small split unknot component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (InternalInvariantError, KnotRequiredError,
                     ParseError, ValidationError)


@dataclass(frozen=True)
class LensParams:
    p: int
    q: int


@dataclass(frozen=True)
class GridDiagram:
    lens: LensParams
    n: int
    O: tuple
    X: tuple

    @property
    def width(self):
        """Horizontal extent n*p of the fundamental domain."""
        return self.n * self.lens.p


@dataclass(frozen=True)
class Generator:
    """One chain-group basis element, encoded as (sigma, a)."""

    sigma: tuple
    a: tuple

    @property
    def n(self):
        return len(self.sigma)

    @property
    def columns(self):
        """Horizontal position of the component in each row."""
        n = len(self.sigma)
        return tuple(self.sigma[t] + n * self.a[t] for t in range(n))

    def points(self):
        """Sheared coordinates of the n components, ordered by row."""
        n = len(self.sigma)
        return tuple((self.sigma[t] + n * self.a[t], t) for t in range(n))

    @classmethod
    def from_columns(cls, cols):
        """Inverse of .columns: rebuild (sigma, a) from the s-positions."""
        n = len(cols)
        return cls(tuple(c % n for c in cols), tuple(c // n for c in cols))

    def sort_key(self):
        return (self.sigma, self.a)


@dataclass(frozen=True)
class LinkStructure:
    component_count: int
    homology_class: int
    order: int


def validate_lens(lens):
    """Violation messages for the surgery coefficients, empty if valid."""
    out = []
    p, q = lens.p, lens.q
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        out.append("range-error: p must be an integer >= 2 (got %r)" % (p,))
        return out
    if not isinstance(q, int) or isinstance(q, bool) or q == 0 or not -p < q < p:
        out.append("range-error: q must be a nonzero integer with -p < q < p "
                   "(got %r)" % (q,))
        return out
    g = math.gcd(p, abs(q))
    if g != 1:
        out.append("gcd-failure: gcd(%d, %d) = %d, p and q must be coprime"
                   % (p, abs(q), g))
    return out


def _marker_violations(label, cells, n, width):
    out = []
    if not isinstance(cells, tuple) or len(cells) != n:
        out.append("range-error: %s must be a tuple of exactly %d cells "
                   "(got %r)" % (label, n, cells))
        return out
    for i, cell in enumerate(cells):
        shape_ok = (isinstance(cell, tuple) and len(cell) == 2
                    and all(isinstance(v, int) and not isinstance(v, bool)
                            for v in cell))
        if not shape_ok or not (0 <= cell[0] < width and 0 <= cell[1] < n):
            out.append("range-error: %s[%d] = %r outside [0, %d) x [0, %d)"
                       % (label, i, cell, width, n))
    if out:
        return out
    rows = [t for (_, t) in cells]
    for t in range(n):
        hits = [i for i, r in enumerate(rows) if r == t]
        if len(hits) > 1:
            out.append("row-collision: %s cells at indices %s all sit in row %d"
                       % (label, hits, t))
    if not out and rows != list(range(n)):
        out.append("storage-order: %s must be stored row-major (%s[t] in "
                   "row t); got rows %s" % (label, label, rows))
    cols = [s % n for (s, _) in cells]
    for c in range(n):
        hits = [i for i, cc in enumerate(cols) if cc == c]
        if len(hits) > 1:
            out.append("column-collision: %s cells in rows %s share column %d"
                       % (label, hits, c))
    return out


def validate(diagram):
    """Check every diagram invariant; return the list of violations.

    An empty list means the diagram is valid.  Messages are prefixed with
    one of ``range-error``, ``gcd-failure``, ``row-collision``,
    ``column-collision`` or ``storage-order``.
    """
    out = validate_lens(diagram.lens)
    n = diagram.n
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        out.append("range-error: n must be a positive integer (got %r)" % (n,))
        return out
    if out:
        return out
    width = diagram.width
    out += _marker_violations("O", diagram.O, n, width)
    out += _marker_violations("X", diagram.X, n, width)
    return out


def require_valid(diagram):
    violations = validate(diagram)
    if violations:
        raise ValidationError(violations)
    return diagram


def validate_generator(x, diagram):
    """Violation messages for a generator against its diagram."""
    out = []
    n, p = diagram.n, diagram.lens.p
    if sorted(x.sigma) != list(range(n)):
        out.append("sigma %r is not a permutation of 0..%d" % (x.sigma, n - 1))
    if len(x.a) != n or not all(isinstance(v, int) and 0 <= v < p for v in x.a):
        out.append("a %r is not a vector in [0, %d)^%d" % (x.a, p, n))
    return out


def cell_to_sheared(cell, center=False):
    """Sheared coordinates of a cell's lower-left corner or of its centre."""
    s, t = cell
    if center:
        return (s + Fraction(1, 2), t + Fraction(1, 2))
    return (s, t)


def canonical_generator(diagram):
    """The generator sitting at the lower-left corners of the O cells."""
    n = diagram.n
    return Generator(tuple(s % n for (s, _) in diagram.O),
                     tuple(s // n for (s, _) in diagram.O))


def row_cycles(o_cols, x_cols):
    """Cycle decomposition of the row-to-row walk along the link.

    From row t, the row arc ends on that row's O, whose column contains
    exactly one X; the walk continues from that X's row.  ``o_cols`` and
    ``x_cols`` give the column index of the marker in each row.
    """
    col_to_xrow = {c: r for r, c in enumerate(x_cols)}
    perm = [col_to_xrow[c] for c in o_cols]
    cycles, seen = [], set()
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc, r = [], start
        while r not in seen:
            seen.add(r)
            cyc.append(r)
            r = perm[r]
        cycles.append(tuple(cyc))
    return cycles


def reconstruct_link(diagram):
    """Component count, homology class and its order for the encoded link.

    The class is computed as the net upward row-winding of the column
    arcs divided by n, taken mod p.  This fixes one identification of the
    first homology with Z_p; only the order of the class is canonical.
    """
    require_valid(diagram)
    p, q, n = diagram.lens.p, diagram.lens.q, diagram.n
    width = n * p
    cycles = row_cycles([s % n for (s, _) in diagram.O],
                        [s % n for (s, _) in diagram.X])
    x_by_col = {s % n: (s, t) for (s, t) in diagram.X}
    total = 0
    for (s_o, t_o) in diagram.O:
        s_x, t_x = x_by_col[s_o % n]
        k = next(k for k in range(p) if (s_o - k * n * q - s_x) % width == 0)
        total += ((t_x + k * n) - t_o) % (p * n)
    if total % n:
        raise InternalInvariantError("net row winding %d not divisible by n=%d"
                                     % (total, n))
    cls = (total // n) % p
    return LinkStructure(component_count=len(cycles),
                         homology_class=cls,
                         order=p // math.gcd(cls, p))


def require_knot(diagram):
    """Raise unless the diagram encodes a single-component knot."""
    link = reconstruct_link(diagram)
    if link.component_count != 1:
        raise KnotRequiredError(link.component_count)
    return link


def enumerate_grid_number_one(lens):
    """The p grid-number-one diagrams: O fixed at (0,0), X at (j,0)."""
    bad = validate_lens(lens)
    if bad:
        raise ValidationError(bad)
    return [GridDiagram(lens, 1, ((0, 0),), ((j, 0),)) for j in range(lens.p)]


def parse_grid(text):
    """Parse the lens grid file format.

    Line 1 holds ``p q n``, line 2 ``O:`` followed by the s-coordinate of
    the O in each row, line 3 the same for ``X:``.  ``#`` starts a
    comment; tokens may be split across lines.
    """
    tokens = []
    for ln, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        tokens.extend((ln, tok) for tok in body.split())
    pos = 0

    def take(what):
        nonlocal pos
        if pos >= len(tokens):
            last = tokens[-1][0] if tokens else 1
            raise ParseError(last, "unexpected end of file, expected %s" % what)
        ln, tok = tokens[pos]
        pos += 1
        return ln, tok

    def take_int(what):
        ln, tok = take(what)
        try:
            return int(tok)
        except ValueError:
            raise ParseError(ln, "expected %s, got %r" % (what, tok)) from None

    p = take_int("integer p")
    q = take_int("integer q")
    n = take_int("integer n")
    if n < 1:
        raise ParseError(tokens[pos - 1][0], "n must be positive, got %d" % n)

    def marker_row(label):
        ln, tok = take("%r marker" % label)
        if tok != label:
            raise ParseError(ln, "expected %r, got %r" % (label, tok))
        return tuple((take_int("%s s-coordinate" % label[0], ), t)
                     for t in range(n))

    o_cells = marker_row("O:")
    x_cells = marker_row("X:")
    if pos != len(tokens):
        raise ParseError(tokens[pos][0], "trailing input %r" % tokens[pos][1])
    return GridDiagram(LensParams(p, q), n, o_cells, x_cells)


def format_grid(diagram):
    """Inverse of parse_grid; emits the canonical three-line form."""
    return "%d %d %d\nO: %s\nX: %s\n" % (
        diagram.lens.p, diagram.lens.q, diagram.n,
        " ".join(str(s) for (s, _) in diagram.O),
        " ".join(str(s) for (s, _) in diagram.X))
