import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinlab.coxeter import (
    INF,
    CoxeterMatrix,
    artin_presentation,
    coxeter_image,
    coxeter_matrix,
    coxeter_presentation,
    enumerate_group,
    group_order,
    is_pure,
    multiply,
    rank,
    reflection_count,
    reflections,
)
from artinlab.labels import ArtinLabError, parse_label
from artinlab.words import Word, artin_alphabet, parse_word

ALL_REAL = ["A1", "A4", "B2", "B5", "D2", "D3", "D5", "F4", "G2", "I2(5)", "I2(9)",
            "~A1", "~A3", "~B3", "~B5", "~C2", "~C4", "~D3", "~D4", "~D6"]
FINITE = ["A1", "A2", "A3", "A5", "B2", "B3", "B4", "D2", "D3", "D4", "D5", "F4", "G2", "I2(3)", "I2(5)", "I2(8)"]


@pytest.mark.parametrize("text", ALL_REAL)
def test_matrix_symmetric_unit_diagonal(text):
    m = coxeter_matrix(parse_label(text))
    k = m.size
    assert k == rank(parse_label(text))
    for i, j in itertools.product(range(k), repeat=2):
        assert m[i, j] == m[j, i]
        assert (m[i, j] == 1) == (i == j)


def test_matrix_examples():
    assert coxeter_matrix(parse_label("G2")).to_list() == [[1, 6], [6, 1]]
    assert coxeter_matrix(parse_label("A1")).to_list() == [[1]]
    assert coxeter_matrix(parse_label("F4")).to_list() == [
        [1, 3, 2, 2],
        [3, 1, 4, 2],
        [2, 4, 1, 3],
        [2, 2, 3, 1],
    ]
    assert coxeter_matrix(parse_label("~A1")).to_list() == [[1, "inf"], ["inf", 1]]
    # ~A3 is a 4-cycle and ~D3 coincides with it
    assert coxeter_matrix(parse_label("~D3")) == coxeter_matrix(parse_label("~A3"))


def test_affine_diagrams_have_expected_bond_counts():
    def bonds(text):
        m = coxeter_matrix(parse_label(text))
        return sorted(m[i, j] for i in range(m.size) for j in range(i + 1, m.size) if m[i, j] != 2)

    assert bonds("~A4") == [3] * 5
    assert bonds("~B4") == [3, 3, 3, 4]
    assert bonds("~C4") == [3, 3, 4, 4]
    assert bonds("~D5") == [3] * 5


def test_gder_has_no_coxeter_matrix():
    with pytest.raises(ArtinLabError):
        coxeter_matrix(parse_label("G(4,2,3)"))


def test_matrix_validation():
    with pytest.raises(ArtinLabError):
        CoxeterMatrix(((1, 3), (2, 1)))
    with pytest.raises(ArtinLabError):
        CoxeterMatrix(((2,),))
    with pytest.raises(ArtinLabError):
        CoxeterMatrix(((1, 1), (1, 1)))


def test_coxeter_presentation_examples():
    p = coxeter_presentation(coxeter_matrix(parse_label("A1")))
    assert p.to_text() == "<s1 | s1^2=1>"
    p = coxeter_presentation(coxeter_matrix(parse_label("A2")))
    assert p.to_text() == "<s1,s2 | s1^2=1, s2^2=1, s1 s2 s1 s2 s1 s2=1>"
    p = coxeter_presentation(CoxeterMatrix(((1, INF), (INF, 1))))
    assert len(p.relations) == 2  # only the squares


def test_artin_presentation_examples():
    p = artin_presentation(coxeter_matrix(parse_label("A2")))
    assert p.to_text() == "<s1,s2 | s1 s2 s1=s2 s1 s2>"
    p = artin_presentation(coxeter_matrix(parse_label("A3")))
    assert "s1 s3=s3 s1" in p.to_text()
    assert artin_presentation(CoxeterMatrix(((1, INF), (INF, 1)))).relations == ()
    d = artin_presentation(coxeter_matrix(parse_label("A2"))).to_dict()
    assert d == {"generators": ["s1", "s2"], "relations": [[[1, 2, 1], [2, 1, 2]]]}


@pytest.mark.parametrize("text", ALL_REAL)
def test_artin_relation_lengths(text):
    m = coxeter_matrix(parse_label(text))
    p = artin_presentation(m)
    for lhs, rhs in p.relations:
        i, j = lhs.letters[0][0], lhs.letters[1][0]
        assert len(lhs) == len(rhs) == m[i, j]
        assert rhs.letters[0][0] == j


@pytest.mark.parametrize("text", FINITE)
def test_enumeration_sizes(text):
    label = parse_label(text)
    g = enumerate_group(label)
    assert g.order == group_order(label)
    assert len(set(g.elements)) == g.order


def test_enumeration_frozen_sizes():
    assert enumerate_group(parse_label("A2")).order == 6
    assert enumerate_group(parse_label("I2(5)")).order == 10
    assert enumerate_group(parse_label("F4")).order == 1152


@pytest.mark.parametrize("text", FINITE)
def test_generators_satisfy_coxeter_relations(text):
    label = parse_label(text)
    g = enumerate_group(label)
    m = coxeter_matrix(label)
    for i, j in itertools.product(range(m.size), repeat=2):
        x = multiply(label, g.generators[i], g.generators[j])
        power, k = x, 1
        while power != g.identity:
            power = multiply(label, power, x)
            k += 1
        assert k == m[i, j]


@pytest.mark.parametrize("text", ["A3", "D4", "I2(5)", "F4"])
def test_closed_under_product_and_inverse(text):
    g = enumerate_group(parse_label(text))
    sample = random.Random(0).sample(g.elements, min(40, g.order))
    for a, b in itertools.product(sample, repeat=2):
        assert g.mul(a, b) in g
    for a in sample:
        assert g.mul(a, g.inverse(a)) == g.identity


def test_enumeration_is_deterministic():
    a = enumerate_group(parse_label("B3")).elements
    b = enumerate_group(parse_label("B3")).elements
    assert a == b


@pytest.mark.parametrize("text, expected", [("F4", 24), ("A3", 6), ("B3", 9), ("D4", 12), ("G2", 6), ("I2(7)", 7)])
def test_reflection_counts(text, expected):
    count, elements = reflections(parse_label(text))
    assert count == expected == reflection_count(parse_label(text))
    assert len(set(elements)) == count


def test_reflections_are_involutions_closed_under_conjugation():
    label = parse_label("B3")
    g = enumerate_group(label)
    _, refl = reflections(label)
    rs = set(refl)
    for r in refl:
        assert g.mul(r, r) == g.identity
        for s in g.generators:
            assert g.mul(g.mul(s, r), s) in rs


def test_infinite_types_rejected():
    for text in ["~A3", "G(4,2,3)"]:
        with pytest.raises(ArtinLabError):
            enumerate_group(parse_label(text))
        with pytest.raises(ArtinLabError):
            reflections(parse_label(text))


def test_coxeter_image_examples():
    a2 = parse_label("A2")
    alpha = artin_alphabet(2)
    ident = enumerate_group(a2).identity
    assert coxeter_image(Word(alpha), a2) == ident
    assert coxeter_image(parse_word("s1 s1", alpha), a2) == ident
    assert coxeter_image(parse_word("s1 s2 s1 s2 s1 s2", alpha), a2) == ident
    assert coxeter_image(parse_word("s1^-1", alpha), a2) == coxeter_image(parse_word("s1", alpha), a2)


def test_is_pure_examples():
    a2 = parse_label("A2")
    alpha = artin_alphabet(2)
    assert is_pure(parse_word("s1^2", alpha), a2)
    assert not is_pure(parse_word("s1", alpha), a2)
    assert is_pure(parse_word("s1 s2 s1 s2^-1 s1^-1 s2^-1", alpha), a2)


def test_coxeter_image_rejects_foreign_alphabet():
    with pytest.raises(ArtinLabError):
        coxeter_image(parse_word("s1 s3", artin_alphabet(3)), parse_label("A2"))
    with pytest.raises(ArtinLabError):
        parse_word("s4", artin_alphabet(3))


def _words(k):
    return st.lists(st.tuples(st.integers(0, k - 1), st.sampled_from([1, -1])), max_size=12)


@pytest.mark.parametrize("text", ["A3", "B3", "D4", "F4", "I2(7)"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_coxeter_image_is_a_homomorphism(text, data):
    label = parse_label(text)
    alpha = artin_alphabet(rank(label))
    u = Word(alpha, tuple(data.draw(_words(len(alpha)))))
    v = Word(alpha, tuple(data.draw(_words(len(alpha)))))
    lhs = coxeter_image(u * v, label)
    rhs = multiply(label, coxeter_image(u, label), coxeter_image(v, label))
    assert lhs == rhs
