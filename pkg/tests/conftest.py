import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tropoly import ExtendedRational, INFINITY, TropPoly, Term, from_terms

# -- hypothesis strategies -------------------------------------------------

finite_scalars = st.fractions(
    min_value=-20, max_value=20, max_denominator=20
).map(ExtendedRational)

scalars = st.one_of(finite_scalars, st.just(INFINITY))


@st.composite
def trop_polys(draw, max_degree=12, allow_zero=True):
    terms = draw(
        st.lists(
            st.tuples(scalars, st.integers(min_value=0, max_value=max_degree)),
            min_size=0 if allow_zero else 1,
            max_size=max_degree + 2,
        )
    )
    f = from_terms([Term(c, e) for c, e in terms])
    if not allow_zero and f.is_zero:
        f = from_terms([Term(ExtendedRational(0), 0)])
    return f


# -- seeded random corpus (shared by the acceptance criteria) --------------

def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 20))


def random_poly(rng: random.Random, max_degree=12, inf_prob=0.1) -> TropPoly:
    """Nonzero polynomial with random support range, rational coefficients
    with numerator/denominator in [-20, 20], and interior coefficients
    replaced by inf with the given probability."""
    low = rng.randint(0, 2)
    length = rng.randint(1, max_degree + 1 - low)
    coeffs = []
    for j in range(length):
        interior = 0 < j < length - 1
        if interior and rng.random() < inf_prob:
            coeffs.append(INFINITY)
        else:
            coeffs.append(ExtendedRational(random_rational(rng)))
    return TropPoly(low, coeffs)


@pytest.fixture(scope="session")
def corpus():
    """Deterministic corpus of 10,000 random nonzero polynomials."""
    rng = random.Random(20240817)
    return [random_poly(rng) for _ in range(10_000)]
