import pytest

from mvfusion.tableaux import (
    Tableau,
    TableauError,
    add_padding,
    beta_sum,
    datum_from_gt,
    dominance_padding,
    enumerate_tableaux,
    format_datum,
    from_datum,
    gt_pattern,
    is_dominant,
    is_stable,
    lusztig_datum,
    padding,
    parse_datum,
    rho_dot,
    sigma,
    strip_padding,
)


def T(text, m=4):
    return Tableau.parse(text, m)


def test_parse_and_render():
    t = T("1112/23", 3)
    assert str(t) == "1112/23"
    assert t.shape == (4, 2, 0)
    assert t.weight == (3, 2, 1)
    assert str(T("-")) == "-" and T("-").is_empty()


@pytest.mark.parametrize("bad", ["21", "1/1", "2/1", "1/22", "15", "x"])
def test_invalid_tableaux(bad):
    with pytest.raises(TableauError):
        T(bad)


def test_gt_pattern_and_datum():
    t = T("1112/23", 3)
    assert gt_pattern(t) == [(3,), (4, 1), (4, 2, 0)]
    assert lusztig_datum(t) == (1, 0, 1)
    assert datum_from_gt(gt_pattern(t), 3) == (1, 0, 1)
    assert lusztig_datum(T("2/4")) == (1, 0, 0, 0, 1, 0)
    assert format_datum((1, 0, 1)) == "1,0,1"
    assert parse_datum("1, 0,1") == (1, 0, 1)
    with pytest.raises(ValueError):
        parse_datum("1,0")


def test_enumeration():
    assert [str(t) for t in enumerate_tableaux((4, 2, 0), (3, 2, 1))] == ["1112/23", "1113/22"]
    assert len(enumerate_tableaux((2, 1, 0), (1, 1, 1))) == 2
    assert enumerate_tableaux((1, 1), (0, 2)) == []
    assert [str(t) for t in enumerate_tableaux((1, 0), (0, 1))] == ["2"]
    assert [str(t) for t in enumerate_tableaux((3, 3, 0), (2, 2, 2))] == ["112/233"]
    assert {str(t) for t in enumerate_tableaux((4, 2, 0), (2, 2, 2))} == {"1133/22", "1122/33", "1123/23"}


def test_padding_and_strip():
    t = T("112/24/3")
    assert padding(t) == (2, 1, 1, 0)
    assert str(strip_padding(t)) == "2/4"
    assert is_stable(T("2/4")) and not is_stable(t)
    assert add_padding(T("2/4"), (2, 1, 1, 0)) == t
    assert from_datum((1, 0, 0, 0, 1, 0), (2, 1, 1, 0), 4) == t
    # removing the padding box in row 2 would leave an invalid shape
    assert is_stable(T("13/2/4"))


def test_sigma_examples():
    assert str(sigma((1, 0, 0, 0, 0, 0), 4)) == "12"
    assert str(sigma((0, 0, 0, 0, 0, 0), 4)) == "-"
    assert str(sigma((1, 0, 0, 1, 0, 0), 4)) == "12/3"
    assert str(sigma((0, 1, 0, 0, 0, 0), 4)) == "13/2"
    assert str(sigma((1, 0, 0, 0, 1, 0), 4)) == "112/24/3"
    for n in [(1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 0, 1), (2, 1, 0, 0, 3, 1)]:
        t = sigma(n, 4)
        assert lusztig_datum(t) == n
        assert is_dominant(t.weight)


def test_dominance_padding():
    a, b = dominance_padding(T("22", 3), T("11/33", 3))
    assert (str(a), str(b)) == ("22", "11/33")
    a, b = dominance_padding(T("2"), T("1/4"))
    assert (str(a), str(b)) == ("2", "11/24/3")
    assert is_dominant(tuple(x + y for x, y in zip(a.weight, b.weight)))


def test_weights():
    assert beta_sum((1, 0, 1), 3) == (1, 0, -1)
    t = T("1112/23", 3)
    assert tuple(x - y for x, y in zip(t.shape, t.weight)) == beta_sum(lusztig_datum(t), 3)
    assert rho_dot((1, 0, -1), 3) == 2
