"""Equal catenary degree: exact values, certificates, and the bound."""

import pytest

from monofact.catenary import (
    ChainCertificate,
    ceq,
    ceq_element_bruteforce,
    ceq_upper_bound_numerical,
    distance,
)
from monofact.errors import CapExceeded, InvalidInput, LengthMismatch, NotInMonoid
from monofact.monoid import Factorization, numerical, presentation


def test_distance():
    assert distance((1, 0, 1), (0, 2, 0)) == 2
    assert distance((2, 0, 1), (0, 3, 0)) == 3
    assert distance((1, 1, 0), (1, 1, 0)) == 0
    with pytest.raises(LengthMismatch):
        distance((1, 0), (1, 0, 0))
    with pytest.raises(LengthMismatch):
        distance((2, 0, 0), (0, 1, 0))


def test_ceq_values():
    assert ceq(numerical([3, 5, 7])) == 2
    assert ceq(numerical([17, 29, 37, 47])) == 5
    assert ceq(numerical([17, 20, 23, 26, 29])) == 2
    assert ceq(numerical([3, 5])) == 0  # no equal-length relations at all


def test_ceq_bruteforce_agrees():
    p = numerical([3, 5, 7])
    assert ceq_element_bruteforce(p, 30) == 2
    p6 = numerical([17, 29, 37, 47])
    assert ceq_element_bruteforce(p6, 145) == 5
    with pytest.raises(NotInMonoid):
        ceq_element_bruteforce(p, 4)
    with pytest.raises(CapExceeded):
        ceq_element_bruteforce(p6, 145, cap=4)


def test_chain_certificate():
    p = numerical([3, 5, 7])
    x = p.element((30,))

    def chain(*coeffs):
        return tuple(Factorization(c) for c in coeffs)

    # the length-6 class of 30, stepped through at distance 2
    cert = ChainCertificate(p, x, chain((0, 6, 0), (1, 4, 1), (2, 2, 2), (3, 0, 3)), 2)
    assert cert.bound == 2
    with pytest.raises(LengthMismatch):
        ChainCertificate(p, x, chain((10, 0, 0), (0, 6, 0)), 10)
    with pytest.raises(InvalidInput):
        ChainCertificate(p, x, chain((9, 1, 0)), 2)  # factors 32, not 30
    with pytest.raises(InvalidInput):
        ChainCertificate(p, x, chain((0, 6, 0), (3, 0, 3)), 3)  # distance 6 > 3
    with pytest.raises(InvalidInput):
        ChainCertificate(p, x, (), 0)


def test_upper_bound_values():
    # consecutive steps 2 and 2, divided by d = gcd(2, 4) = 2
    assert ceq_upper_bound_numerical(numerical([3, 5, 7])) == 2
    assert ceq_upper_bound_numerical(numerical([17, 29, 37, 47])) == 11
    assert ceq_upper_bound_numerical(numerical([17, 20, 23, 26, 29])) == 2


def test_upper_bound_preconditions():
    with pytest.raises(InvalidInput):
        ceq_upper_bound_numerical(numerical([3, 5]))
    with pytest.raises(InvalidInput):
        ceq_upper_bound_numerical(presentation(2, (), [(1, 0), (0, 1), (1, 1)]))


def test_ceq_below_bound_on_small_instances(numerical_instances):
    for p in numerical_instances[:12]:
        if p.n < 3:
            continue
        assert ceq(p) <= ceq_upper_bound_numerical(p)
