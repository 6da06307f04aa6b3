from fractions import Fraction

import pytest

from hyperfib.polynomials import BiPoly

X = BiPoly.x()
T = BiPoly.t()


def genus5_h() -> BiPoly:
    """Genus-5 branch curve with four distinct singular clusters over t = 0.

    Over the central fiber: a transverse point at x = 0, a vertical tangency
    at x = 1, an ordinary node at x = 2, an order-4 point with two tangent
    pairs at x = 3, and an order-3 point with a deep infinitely near
    singularity at x = 4.
    """
    return (
        (X + T)
        * ((X - 1) ** 2 + T)
        * ((X - 2) ** 2 + T**2)
        * ((X - 3 + T) ** 2 + T**3)
        * ((X - 3 - T) ** 2 + T**3)
        * ((X - 4) ** 3 + T**6)
    )


def generic_transverse(abscissae) -> BiPoly:
    """Product of transverse sections x - a - t at the given abscissae."""
    h = BiPoly.const(1)
    for a in abscissae:
        h = h * (X - Fraction(a) - T)
    return h


@pytest.fixture
def genus5_datum():
    from hyperfib.datum import load_datum

    return load_datum(genus5_h(), fibers=[0])
