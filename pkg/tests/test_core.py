import pytest
from hypothesis import given, strategies as st

from donuts.core import (
    DonutConfig,
    InvalidDonutError,
    area,
    is_coprime_config,
    is_twistable_definitional,
    is_twistable_fast,
    scale,
    twist,
    validate,
)

from conftest import donuts_st


@pytest.mark.parametrize(
    "quad,valid,violations",
    [
        ((28, 3, 21, 2), True, []),
        ((22, 20, 11, 20), False, ["y < b"]),
        ((2, 2, 1, 2), False, ["y < b"]),
        ((10, 9, 9, 5), True, []),
        ((3, 4, 3, 2), False, ["b <= a", "x < a"]),
        ((5, 1, 1, 1), False, ["1 < b", "a < ab", "ab = 2xy", "y < b"]),
    ],
)
def test_validate_examples(quad, valid, violations):
    report = validate(*quad)
    assert report.valid is valid
    assert report.violations == violations


def test_validate_does_not_reorient():
    assert validate(4, 3, 3, 2).valid
    assert "b <= a" in validate(3, 4, 2, 3).violations


@pytest.mark.parametrize("bad", [(0, 3, 1, 1), (4, -3, 3, 2), (4, 3, 0, 2)])
def test_validate_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        validate(*bad)


def test_validate_rejects_non_int():
    with pytest.raises(TypeError):
        validate(4.0, 3, 3, 2)


def test_config_construction_checks_validity():
    with pytest.raises(InvalidDonutError) as err:
        DonutConfig(22, 20, 11, 20)
    assert err.value.violations == ["y < b"]


@pytest.mark.parametrize("quad,D", [((28, 3, 21, 2), 84), ((4, 3, 3, 2), 12), ((12, 12, 8, 9), 144)])
def test_area(quad, D):
    d = DonutConfig(*quad)
    assert area(d) == D == 2 * d.x * d.y


@pytest.mark.parametrize(
    "quad,twisted",
    [
        ((21, 20, 15, 14), (21, 20, 14, 15)),
        ((22, 20, 20, 11), (22, 20, 11, 20)),
        ((50, 36, 30, 30), (50, 36, 30, 30)),
    ],
)
def test_twist(quad, twisted):
    assert twist(DonutConfig(*quad)) == twisted


@pytest.mark.parametrize(
    "quad,expected",
    [((21, 20, 15, 14), True), ((22, 20, 20, 11), False), ((12, 12, 8, 9), True), ((4, 3, 3, 2), False)],
)
def test_twistable(quad, expected):
    d = DonutConfig(*quad)
    assert is_twistable_definitional(d) is expected
    assert is_twistable_fast(d) is expected


def test_twist_boundary_is_strict():
    # 2y == a exactly: not twistable
    d = DonutConfig(22, 20, 20, 11)
    assert 2 * d.y == d.a
    assert not is_twistable_fast(d)


@pytest.mark.parametrize("quad,expected", [((12, 7, 7, 6), True), ((28, 3, 21, 2), False), ((50, 36, 30, 30), False)])
def test_coprime_config(quad, expected):
    assert is_coprime_config(DonutConfig(*quad)) is expected


@pytest.mark.parametrize(
    "h,k,expected",
    [(1, 1, (4, 3, 3, 2)), (7, 1, (28, 3, 21, 2)), (3, 4, (12, 12, 9, 8)), (1, 2, (6, 4, 4, 3))],
)
def test_scale(h, k, expected):
    assert scale(DonutConfig(4, 3, 3, 2), h, k).as_tuple() == expected


def test_scale_overflow_is_reported():
    with pytest.raises(OverflowError):
        scale(DonutConfig(4, 3, 3, 2), 2**62, 2**62)


@given(donuts_st)
def test_fast_twistability_agrees(d):
    assert is_twistable_fast(d) == is_twistable_definitional(d)


@given(donuts_st)
def test_twist_involution(d):
    a, b, y, x = twist(d)
    assert (a, b, x, y) == d.as_tuple()
    if is_twistable_definitional(d):
        assert twist(DonutConfig(*twist(d))) == d.as_tuple()


@given(donuts_st)
def test_area_is_even(d):
    assert area(d) % 2 == 0


@given(donuts_st, st.integers(1, 50), st.integers(1, 50))
def test_scale_stays_valid(d, h, k):
    s = scale(d, h, k)
    assert validate(*s.as_tuple()).valid
    assert area(s) == h * k * area(d)


@given(donuts_st)
def test_square_exterior_or_hole_twistable(d):
    if d.a == d.b or d.x == d.y:
        assert is_twistable_definitional(d)


@given(donuts_st)
def test_twistability_proof_inequalities(d):
    # a twistable hole forces a < 2x and a < 2y, via 2xy < 2yb <=> ab < 2xb
    if is_twistable_definitional(d):
        assert d.x < d.b and d.y < d.a
        assert 2 * d.x * d.y < 2 * d.y * d.b
        assert d.a * d.b < 2 * d.x * d.b
        assert d.a < 2 * d.x and d.a < 2 * d.y
    # conversely a < 2y gives x < b; y < b <= a always
    if d.a < 2 * d.y:
        assert d.a * d.b < 2 * d.y * d.b
        assert d.x < d.b
    assert d.y < d.a
