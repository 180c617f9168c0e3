"""Kernel lattices, Buchberger, saturation, and minimal generators."""

import pytest

from monofact.errors import InvalidInput, NotHomogeneous
from monofact.ideal import (
    Binomial,
    BinomialBasis,
    groebner,
    ideals_equal,
    in_ideal,
    kernel_lattice,
    lattice_ideal,
    minimal_generators,
    normal_form,
    saturate,
)
from monofact.monoid import numerical, presentation
from monofact.orders import GREVLEX, LEX, wgrevlex


def test_kernel_lattice_of_357():
    p = numerical([3, 5, 7])
    lat = kernel_lattice(p)
    assert lat.rank == 2
    assert lat.contains((1, -2, 1))
    assert lat.contains((-4, 1, 1))
    assert not lat.contains((1, 0, 0))


def test_kernel_lattice_with_torsion():
    q = presentation(1, (2,), [(2, 0), (3, 1), (4, 1)])
    lat = kernel_lattice(q)
    # 3*(2;0) - 2*(3;1): free part 0, torsion residue 0
    assert lat.contains((3, -2, 0))
    # 2*(2;0) - (4;1) kills the free part but leaves residue 1
    assert not lat.contains((2, 0, -1))


def test_lattice_ideal_357_not_complete_intersection():
    p = numerical([3, 5, 7])
    gb = lattice_ideal(p)
    for b in gb.elements:
        assert p.evaluate(b.plus) == p.evaluate(b.minus)
    mg = minimal_generators(gb, p)
    assert len(mg.elements) == 3
    degs = sorted(p.evaluate(b.plus).free[0] for b in mg.elements)
    assert degs == [10, 12, 14]


def test_membership_in_lattice_ideal():
    gb = lattice_ideal(numerical([3, 5, 7]))
    assert in_ideal(Binomial.difference((0, 2, 0), (1, 0, 1)), gb)
    assert not in_ideal(Binomial.difference((1, 1, 0), (0, 0, 1)), gb)


def test_torsion_lattice_ideal_matches_hand_generators():
    q = presentation(1, (2,), [(2, 0), (3, 1), (4, 1)])
    gbq = lattice_ideal(q)
    expected = groebner(
        [
            Binomial.difference((1, 2, 0), (0, 0, 2)),
            Binomial.difference((3, 0, 0), (0, 2, 0)),
            Binomial.difference((0, 4, 0), (2, 0, 2)),
        ],
        GREVLEX,
    )
    assert ideals_equal(gbq, expected)


def test_lex_and_grevlex_agree_as_ideals():
    q = presentation(1, (2,), [(2, 0), (3, 1), (4, 1)])
    gbq = lattice_ideal(q)
    gbq_lex = lattice_ideal(q, order=LEX)
    assert ideals_equal(gbq, groebner(list(gbq_lex.elements), GREVLEX))


def test_rank2_ideal_contains_curve_relations():
    r = presentation(2, (), [(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1)])
    gbr = lattice_ideal(r)
    # x_i x_j - x_{i-1} x_{j+1} for the consecutive-difference pattern
    n = 5
    for i in range(1, n - 1):
        for j in range(i, n - 1):
            plus = [0] * n
            plus[i] += 1
            plus[j] += 1
            minus = [0] * n
            minus[i - 1] += 1
            minus[j + 1] += 1
            assert in_ideal(Binomial.difference(tuple(plus), tuple(minus)), gbr), (i, j)


def test_normal_form_idempotent_and_needs_groebner_flag():
    gb = lattice_ideal(numerical([3, 5, 7]))
    nf = normal_form(Binomial.difference((0, 2, 0), (0, 0, 0)), gb)
    assert normal_form(nf, gb) == nf
    plain = BinomialBasis(tuple(gb.elements), gb.order)
    with pytest.raises(InvalidInput):
        normal_form(nf, plain)


def test_principal_ideal_single_generator():
    p = numerical([3, 5])
    gh = lattice_ideal(p)
    mg = minimal_generators(gh, p)
    assert len(mg.elements) == 1
    assert p.evaluate(mg.elements[0].plus).free[0] == 15


def test_saturate_rejects_inhomogeneous_input():
    # 1 - x1 admits no positive grading
    with pytest.raises(NotHomogeneous):
        saturate([Binomial((0,), (1,))])


def test_minimal_generators_rejects_wrong_grading():
    p = numerical([3, 5, 7])
    with pytest.raises(NotHomogeneous):
        minimal_generators([Binomial.difference((1, 0, 0), (0, 1, 0))], p)


def test_binomial_basics():
    b = Binomial((3, 0, 0), (0, 2, 0))
    assert b.text() == "x1^3 - x2^2"
    assert not b.is_monomial and not b.is_zero
    m = Binomial.monomial((0, 1, 1))
    assert m.is_monomial and m.text() == "x2*x3"
    z = Binomial((1, 0, 0), (1, 0, 0))
    assert z.is_zero
    with pytest.raises(InvalidInput):
        Binomial((1, -1, 0), (0, 0, 0))
    with pytest.raises(InvalidInput):
        Binomial((1, 0), (0, 0, 1))
    # shared support is factored out by difference, not by the constructor
    d = Binomial.difference((2, 1, 0), (1, 0, 1))
    assert d == Binomial((1, 1, 0), (0, 0, 1))


def test_groebner_is_reduced_and_order_dependent_leads():
    gens = [
        Binomial.difference((0, 2, 0), (1, 0, 1)),
        Binomial.difference((4, 0, 0), (0, 1, 1)),
    ]
    g1 = groebner(gens, GREVLEX)
    assert g1.is_groebner and g1.is_reduced
    g2 = groebner(gens, wgrevlex((3, 5, 7)))
    assert ideals_equal(g1, g2)


def test_random_instances_lattice_ideal_is_homogeneous(reduced_instances):
    for p in reduced_instances[:12]:
        gb = lattice_ideal(p)
        for b in gb.elements:
            assert p.evaluate(b.plus) == p.evaluate(b.minus)
