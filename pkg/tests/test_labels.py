import pytest

from artinlab.labels import ArtinLabError, Family, GroupLabel, parse_label


@pytest.mark.parametrize(
    "text, family, params",
    [
        ("A5", Family.A, (5,)),
        ("A1", Family.A, (1,)),
        ("B4", Family.B, (4,)),
        ("C4", Family.B, (4,)),
        ("D6", Family.D, (6,)),
        ("F4", Family.F4, ()),
        ("G2", Family.G2, ()),
        ("I2(7)", Family.I2, (7,)),
        ("~A4", Family.AffA, (4,)),
        ("~B4", Family.AffB, (4,)),
        ("~C4", Family.AffC, (4,)),
        ("~D4", Family.AffD, (4,)),
        ("G(4,2,3)", Family.Gder, (4, 2, 3)),
    ],
)
def test_grammar(text, family, params):
    label = parse_label(text)
    assert label == GroupLabel(family, params)


def test_c_is_canonicalised_to_b():
    assert parse_label("C4") == parse_label("B4")
    assert str(parse_label("C4")) == "B4"


@pytest.mark.parametrize(
    "text, needle",
    [
        ("I2(2)", "p >= 3"),
        ("G(4,2,1)", "r >= 2"),
        ("G(2,2,3)", "d >= 2"),
        ("G(5,2,3)", "dividing"),
        ("A0", "n >= 1"),
        ("B1", "n >= 2"),
        ("~B2", "n >= 3"),
        ("~C1", "n >= 2"),
        ("E8", "cannot parse"),
        ("A", "cannot parse"),
    ],
)
def test_rejections_name_the_bound(text, needle):
    with pytest.raises(ArtinLabError, match=needle):
        parse_label(text)


@pytest.mark.parametrize("text", ["A5", "B4", "D6", "F4", "G2", "I2(7)", "~A4", "~C3", "G(6,3,2)"])
def test_str_round_trip(text):
    assert str(parse_label(text)) == text
    assert parse_label(str(parse_label(text))) == parse_label(text)
