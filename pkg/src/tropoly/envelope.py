"""Piecewise-linear lower envelope of the monomial lines y = i·x + a_i.

A degree i is active somewhere iff the point (i, a_i) lies on the lower
convex hull of the finite support points, collinear points included. The
envelope's breakpoints are exactly the corner locus: the x-values where
at least two monomials tie for the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DomainError
from .polynomial import TropPoly
from .scalar import ExtendedRational


def _lower_hull_degrees(points) -> list:
    """Monotone-chain lower hull over (degree, numerator, denominator)
    triples sorted by degree. Collinear points are kept, so the result is
    every input point lying on the hull boundary.

    Turn tests are evaluated as integer sign expressions; no rounding.
    """
    hull: list = []
    for p in points:
        while len(hull) >= 2:
            (x0, n0, d0), (x1, n1, d1) = hull[-2], hull[-1]
            x2, n2, d2 = p
            # sign of the cross product (p1-p0) x (p2-p0), cleared of denominators
            turn = (x1 - x0) * (n2 * d0 - n0 * d2) * d1 - (x2 - x0) * (n1 * d0 - n0 * d1) * d2
            if turn < 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def hull_points(f: TropPoly) -> list:
    """The finite support points (i, a_i) on the lower hull, as
    (degree, numerator, denominator) triples in increasing degree.
    Memoized on the polynomial."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no envelope")
    if f._hull is None:
        low = f.low_degree
        pts = [
            (low + j, fr.numerator, fr.denominator)
            for j, c in enumerate(f.coeffs)
            if (fr := c._frac) is not None
        ]
        f._hull = _lower_hull_degrees(pts)
    return f._hull


@dataclass(frozen=True)
class Piece:
    """One linear piece: the active degree and its closed x-interval.
    None endpoints mark -inf / +inf."""

    degree: int
    lo: Optional[ExtendedRational]
    hi: Optional[ExtendedRational]


@dataclass(frozen=True)
class Envelope:
    """Pieces ordered left to right (degrees strictly decreasing) plus the
    sorted, deduplicated breakpoint list."""

    pieces: Tuple[Piece, ...]
    breakpoints: Tuple[ExtendedRational, ...]


def lower_envelope(f: TropPoly) -> Envelope:
    """Compute the envelope of a nonzero polynomial.

    Between adjacent hull degrees i < k the active line switches at
    x = (a_i - a_k)/(k - i); a degree sandwiched at a multiple switch
    gets a degenerate single-point piece.
    """
    hull = hull_points(f)
    # switch points, one per adjacent hull pair, indexed like hull[:-1]
    switches = []
    for (i, ni, di), (k, nk, dk) in zip(hull, hull[1:]):
        switches.append(ExtendedRational(Fraction(ni * dk - nk * di, di * dk * (k - i))))
    pieces = []
    m = len(hull) - 1
    for t in range(m, -1, -1):
        lo = switches[t] if t < m else None
        hi = switches[t - 1] if t > 0 else None
        pieces.append(Piece(hull[t][0], lo, hi))
    distinct = []
    for x in sorted(switches):
        if not distinct or distinct[-1] != x:
            distinct.append(x)
    return Envelope(tuple(pieces), tuple(distinct))


def supports_degree(f: TropPoly, i: int) -> bool:
    """True iff the monomial of degree i attains the minimum at some
    finite point, i.e. (i, a_i) is finite and on the lower hull."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no envelope")
    if not f.low_degree <= i <= f.degree:
        raise DomainError(f"degree {i} outside the support range")
    return any(h == i for h, _, _ in hull_points(f))


def breakpoints(f: TropPoly) -> list:
    """The corner locus of f: sorted distinct x-values where at least two
    monomials tie for the minimum."""
    return list(lower_envelope(f).breakpoints)
