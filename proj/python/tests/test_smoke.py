from fractions import Fraction

import pytest

import efbcl


def test_golden_table_and_gamma():
    table = efbcl.render_table(2)
    assert "-q1 p2" in table
    assert efbcl.gamma(2, 1).to_matrix() == [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]]


def test_clifford_relations():
    m = 3
    one = efbcl.identity(m)
    for i in range(1, 2 * m + 1):
        gi = efbcl.gamma(m, i)
        for j in range(1, 2 * m + 1):
            gj = efbcl.gamma(m, j)
            expect = 0 if i != j else (2 if i % 2 else -2)
            assert gi * gj + gj * gi == expect * one


def test_parse_format_round_trip():
    v = efbcl.Element.parse(3, "2 * e1 e3 - 1/2 * e2")
    assert efbcl.Element.parse(3, v.gamma_text()) == v
    assert efbcl.Element.parse(3, v.null_text()) == v
    assert v.to_gamma() == [((2,), Fraction(-1, 2)), ((1, 3), Fraction(2))]
    assert Fraction(1, 3) * v == v * "1/3"


def test_oracle_and_signs():
    assert efbcl.reduce_word(1, "q1 p1 q1") == efbcl.Element.basis("+", "-")
    assert efbcl.reduce_word(1, "p1 p1").is_zero()
    assert efbcl.sign_s("--", "++", "++") == 1
    assert efbcl.table_sign("--", "++") == -1


def test_automorphisms():
    e1 = efbcl.gamma(1, 1)
    assert efbcl.main_auto(e1) == -e1
    qp = efbcl.Element.parse(1, "q1 p1")
    assert efbcl.reversion_auto(qp).null_text() == "p1 q1"
    w = efbcl.omega(2)
    assert efbcl.inverse(w) == w * w * w
    with pytest.raises(efbcl.NotInvertibleError):
        efbcl.inverse(efbcl.witt_p(2, 1))
    images = [-efbcl.gamma(2, i) for i in range(1, 5)]
    assert efbcl.realize_inner(images) == w


def test_spinor_spaces():
    report = efbcl.classify(efbcl.tau(2))
    assert report["is_negation"]
    assert efbcl.classify(efbcl.omega(2))["stabilizes_all"]
    ker = efbcl.solve_weyl(efbcl.witt_p(1, 1), "-")
    assert ker == [efbcl.Element.basis("-", "-")]
    assert efbcl.chirality(efbcl.Element.basis("--", "--")) == "+1"


def test_bench_counts():
    assert efbcl.count_vector_times_spinor(4, 1) == (16, 256)


def test_errors():
    with pytest.raises(efbcl.ParseError):
        efbcl.Element.parse(2, "e1 +")
    with pytest.raises(IndexError):
        efbcl.gamma(2, 5)
    with pytest.raises(efbcl.DimensionError):
        efbcl.identity(0)
