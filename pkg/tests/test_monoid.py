"""Presentations, reducedness, membership, and factorization search."""

import pytest
from hypothesis import given, settings, strategies as st

from monofact.errors import (
    DimensionMismatch,
    InvalidInput,
    NotInMonoid,
    NotReduced,
)
from monofact.monoid import (
    GroupElement,
    all_factorizations,
    cones_equal,
    element_from_data,
    extremal_rays,
    is_minimal_generating,
    member,
    numerical,
    presentation,
    presentation_from_data,
    require_member,
    validate_reduced,
)


def test_numerical_rejects_nonpositive():
    with pytest.raises(InvalidInput):
        numerical([3, 0, 5])
    with pytest.raises(InvalidInput):
        numerical([-2, 3])


def test_generator_length_must_match_rank_and_torsion():
    with pytest.raises(DimensionMismatch):
        presentation(2, (), [(1, 2, 3)])
    with pytest.raises(DimensionMismatch):
        presentation(1, (2,), [(1,)])


def test_torsion_moduli_must_be_at_least_two():
    with pytest.raises(InvalidInput):
        presentation(1, (1,), [(2, 0)])


def test_duplicate_generators_rejected():
    p = presentation(1, (), [(3,), (3,)])
    with pytest.raises(InvalidInput):
        validate_reduced(p)


def test_pure_torsion_generator_is_a_unit():
    p = presentation(1, (2,), [(0, 1), (3, 0)])
    with pytest.raises(NotReduced) as err:
        validate_reduced(p)
    assert err.value.generator is not None
    assert all(a == 0 for a in err.value.generator.free)


def test_unpointed_cone_witnessed_by_zero_combination():
    # 2 and -3 generate a group, not a reduced monoid
    p = presentation(1, (), [(2,), (-3,)])
    with pytest.raises(NotReduced) as err:
        validate_reduced(p)
    comb = err.value.combination
    assert comb is not None and any(c > 0 for c in comb)
    assert sum(c * g for c, g in zip(comb, [2, -3])) == 0


def test_validate_accepts_mixed_signs_when_pointed():
    p = validate_reduced(presentation(2, (), [(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1)]))
    assert p.validated
    # the pointing vector is strictly positive on every generator
    w = p.pointing
    for g in p.generators:
        assert sum(a * b for a, b in zip(w, g.free)) > 0


def test_minimalize_drops_redundant_generator():
    p = validate_reduced(numerical([3, 5, 8]), minimalize=True)
    assert [g.free[0] for g in p.generators] == [3, 5]


def test_is_minimal_generating():
    assert is_minimal_generating(numerical([3, 5, 7]))
    assert not is_minimal_generating(numerical([3, 5, 8]))


def test_member_finds_factorization():
    p = numerical([3, 5, 7])
    f = member(p, p.element((12,)))
    assert f is not None
    assert sum(c * g for c, g in zip(f, [3, 5, 7])) == 12
    assert member(p, p.element((4,))) is None
    with pytest.raises(NotInMonoid):
        require_member(p, p.element((4,)))


def test_member_handles_torsion():
    p = presentation(1, (2,), [(2, 0), (3, 1), (4, 1)])
    # 5 with residue 1 = 2 + 3
    assert member(p, p.element((5,), (1,))) is not None
    # 5 with residue 0 has no factorization
    assert member(p, p.element((5,), (0,))) is None


def test_all_factorizations_complete():
    p = numerical([3, 5, 7])
    facs = {tuple(f) for f in all_factorizations(p, p.element((10,)))}
    assert facs == {(1, 0, 1), (0, 2, 0)}
    assert all_factorizations(p, p.element((1,))) == []


def test_element_from_data_shapes():
    p = numerical([3, 5, 7])
    assert element_from_data(p, 12).free == (12,)
    assert element_from_data(p, "12").free == (12,)
    with pytest.raises(InvalidInput):
        element_from_data(p, True)
    q = presentation(1, (2,), [(2, 0), (3, 1)])
    e = element_from_data(q, [5, 1])
    assert e.free == (5,) and e.torsion == (1,)
    with pytest.raises(InvalidInput):
        element_from_data(q, 5)  # scalar needs rank 1 without torsion
    with pytest.raises(InvalidInput):
        element_from_data(q, [5])


def test_presentation_from_data():
    p = presentation_from_data({"numerical": [3, 5, 7]})
    assert p.is_numerical and p.weights == (3, 5, 7)
    q = presentation_from_data(
        {"rank": 1, "torsion": [2], "generators": [[2, 0], [3, 1], [4, 1]]}
    )
    assert q.rank == 1 and q.torsion.moduli == (2,)
    with pytest.raises(InvalidInput):
        presentation_from_data({"numerical": []})
    with pytest.raises(InvalidInput):
        presentation_from_data([3, 5, 7])
    with pytest.raises(InvalidInput):
        presentation_from_data({"rank": 1})


def test_group_element_arithmetic_reduces_torsion():
    a = GroupElement((2,), (1,), (2,))
    b = GroupElement((3,), (1,), (2,))
    s = a + b
    assert s.free == (5,) and s.torsion == (0,)
    assert (2 * a).torsion == (0,)
    with pytest.raises(DimensionMismatch):
        a + GroupElement((1, 1))


def test_extremal_rays_of_flat_cone():
    rays = extremal_rays([(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1)]).rays
    assert set(rays) == {(-2, 1), (2, 1)}


def test_cones_equal_checks_ray_coverage():
    p = validate_reduced(presentation(2, (), [(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1)]))
    covering = [p.element((-4, 2)), p.element((2, 1))]
    assert cones_equal(p, covering)
    assert not cones_equal(p, [p.element((0, 1)), p.element((2, 1))])


@given(st.lists(st.integers(min_value=0, max_value=6), min_size=3, max_size=3))
@settings(max_examples=40, deadline=None)
def test_evaluate_then_member_round_trip(coeffs):
    p = numerical([3, 5, 7])
    x = p.evaluate(tuple(coeffs))
    f = member(p, x)
    assert f is not None
    assert p.evaluate(tuple(f)) == x


@given(
    st.lists(st.integers(min_value=0, max_value=5), min_size=3, max_size=3),
    st.lists(st.integers(min_value=0, max_value=5), min_size=3, max_size=3),
)
@settings(max_examples=40, deadline=None)
def test_weights_are_additive(ca, cb):
    p = presentation(1, (2,), [(2, 0), (3, 1), (4, 1)])
    xa, xb = p.evaluate(tuple(ca)), p.evaluate(tuple(cb))
    w = p.weights
    wa = sum(c * x for c, x in zip(ca, w))
    wb = sum(c * x for c, x in zip(cb, w))
    assert p.weight_of(xa + xb) == wa + wb
