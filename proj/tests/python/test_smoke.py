"""End-to-end smoke tests over the pybind11 module."""

import pytest

import shuffles


def test_fixture_addresses_round_trip():
    eo = shuffles.fixture("evens_odds")
    a = eo.address_of(3)
    assert a.as_tuple() == (1, 1)
    assert eo.value_at(a) == 3
    assert eo.address_of(4).as_tuple() == (0, 2)

    rev = shuffles.fixture("sharkovskii_reversed")
    assert rev.address_of(36).as_tuple() == (1, -3, -4)
    assert rev.value_at(shuffles.Address(1, [-3, -4])) == 36


def test_order_queries():
    shark = shuffles.fixture("sharkovskii")
    assert shark.precedes(3, 1)
    assert not shark.precedes(1, 3)
    assert shark.sort([1, 2, 3, 5, 6, 10]) == [3, 5, 6, 10, 2, 1]
    assert shark.order_type() == "w^2 + w*"
    assert shuffles.fixture("evens_odds").order_type() == "w*2"
    assert shuffles.fixture("identity").successor(5) == 6


def test_verify_reports():
    assert shuffles.fixture("evens_odds").verify(200).ok()
    rep = shuffles.fixture("sharkovskii_reversed").verify(200)
    assert not rep.ok()
    assert rep.missing == [0]


def test_support_enumeration():
    pairs = shuffles.fixture("evens_odds").support(budget=50)
    values = {v for v, _ in pairs}
    assert {0, 1, 2, 3}.issubset(values)
    by_value = dict(pairs)
    assert by_value[3].as_tuple() == (1, 1)


def test_diagram_and_canonical():
    shark = shuffles.fixture("sharkovskii")
    assert shark.diagram() == "•-o •-o ... •-o ... o-•"
    parts, unique = shark.canonical()
    assert unique
    assert "ladder" in parts
    assert "digraph shuffle" in shark.diagram(dot=True)


def test_involution_reverses():
    eo = shuffles.fixture("evens_odds")
    star = eo.involute()
    for x, y in [(0, 1), (2, 7), (8, 3)]:
        assert eo.precedes(x, y) == star.precedes(y, x)
    assert star.sign() == "(0, [-, -])"


def test_algebra_round_trip():
    ident = shuffles.identity("+")
    swap = shuffles.from_permutation([1, 0])
    composed = shuffles.compose(swap, swap)
    for x in range(20):
        assert composed.value_at(shuffles.Address(0, [x])) == x

    inv = shuffles.invert(swap, upto=50)
    assert inv.value_at(shuffles.Address(0, [0])) == 1

    report = shuffles.group_check([ident, swap], upto=100)
    assert report.passed()


def test_json_round_trip():
    eo = shuffles.fixture("evens_odds")
    again = shuffles.Shuffle.from_json(eo.to_json())
    assert again.to_json() == eo.to_json()
    assert again.order_type() == "w*2"


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError, match="NotFoundWithinBudget"):
        shuffles.fixture("sharkovskii_reversed").address_of(0, budget=1000)
    with pytest.raises(ValueError, match="DocumentError"):
        shuffles.Shuffle.from_json("{}")
