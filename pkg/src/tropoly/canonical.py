"""Least-coefficient canonical forms.

Every tropical polynomial is functionally equivalent to exactly one
polynomial in which no coefficient can be lowered without changing the
function. Canonical equality therefore decides functional equivalence
exactly, with no sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .envelope import hull_points, supports_degree
from .errors import DomainError
from .polynomial import TropPoly
from .scalar import INFINITY, _wrap


@dataclass(frozen=True)
class CanonicalPoly:
    """A TropPoly verified to be in least-coefficient form.

    The tag is structural: construction re-checks the invariants (no
    interior inf, consecutive differences non-decreasing downward), so
    any polynomial passing `is_canonical` may be wrapped.
    """

    poly: TropPoly

    def __post_init__(self):
        if not is_canonical(self.poly):
            raise ValueError("polynomial is not in least-coefficient form")


def canonicalize_naive(f: TropPoly) -> CanonicalPoly:
    """Reference canonicalization: each coefficient b_j is the min of a_j
    and every chord value (a_i·(k-j) + a_k·(j-i))/(k-i) over i < j < k,
    chords with an infinite endpoint omitted. Cubic; kept as the oracle
    for the hull-based path.
    """
    if f.is_zero:
        raise DomainError("the zero polynomial has no canonical form")
    r = f.low_degree
    coeffs = [c._frac for c in f.coeffs]
    n_len = len(coeffs)
    out = []
    for j in range(n_len):
        best = coeffs[j]
        for i in range(j):
            if coeffs[i] is None:
                continue
            for k in range(j + 1, n_len):
                if coeffs[k] is None:
                    continue
                chord = (coeffs[i] * (k - j) + coeffs[k] * (j - i)) / Fraction(k - i)
                if best is None or chord < best:
                    best = chord
        out.append(INFINITY if best is None else _wrap(best))
    return CanonicalPoly(TropPoly(r, out))


def canonicalize(f: TropPoly) -> CanonicalPoly:
    """Production canonicalization via the lower hull: b_j is the hull's
    value at abscissa j, which is a_j on hull points and a single chord
    evaluation elsewhere. Linear after the degree-sorted scan."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no canonical form")
    hull = hull_points(f)
    r = f.low_degree
    out = []
    t = 0
    for j in range(r, f.degree + 1):
        while t + 1 < len(hull) and hull[t + 1][0] <= j:
            t += 1
        i, ni, di = hull[t]
        if i == j:
            out.append(f.coeffs[j - r])
            continue
        k, nk, dk = hull[t + 1]
        out.append(_wrap(Fraction(ni * (k - j) * dk + nk * (j - i) * di, di * dk * (k - i))))
    return CanonicalPoly(TropPoly(r, out))


def is_canonical(f: TropPoly) -> bool:
    """True iff f has no interior inf coefficient and the consecutive
    differences a_{i-1} - a_i do not decrease as i decreases."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no canonical form")
    fracs = [c._frac for c in f.coeffs]
    if any(fr is None for fr in fracs):
        return False
    pairs = [(fr.numerator, fr.denominator) for fr in fracs]
    # convexity of j -> a_j, with cleared denominators
    for (np_, dp), (nm, dm), (nn, dn) in zip(pairs, pairs[1:], pairs[2:]):
        if 2 * nm * dp * dn > (np_ * dn + nn * dp) * dm:
            return False
    return True


def is_least_coefficient(f: TropPoly, i: int) -> bool:
    """True iff a_i cannot be lowered without changing the function."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no coefficients")
    if not f.low_degree <= i <= f.degree:
        raise DomainError(f"degree {i} outside the support range")
    if f.coefficient(i).is_infinite:
        return False
    return supports_degree(f, i)


def equivalent(f: TropPoly, g: TropPoly) -> bool:
    """Decide whether f and g define the same function on all of Q, by
    comparing canonical forms coefficient-wise."""
    if f.is_zero or g.is_zero:
        return f.is_zero and g.is_zero
    return canonicalize(f).poly == canonicalize(g).poly
