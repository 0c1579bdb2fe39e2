import pytest

import braidties as bt


def test_dimensions():
    assert [bt.dim(n) for n in range(1, 5)] == [1, 4, 30, 360]
    assert len(bt.basis(3)) == 30


def test_eval_and_printing():
    x = bt.parse("T1*T1", 2)
    assert str(x) == "1 + (u-1)*E{1,2} + (u-1)*E{1,2}*T1"
    assert bt.parse(str(x), 2) == x
    t = bt.gen("T", 1, 2)
    assert t * t == x
    assert bt.gen("T", 1, 2) * bt.gen("Tinv", 1, 2) == bt.one(2)
    e = bt.gen("E", 1, 3)
    assert e * e == e
    assert bt.e_set([[1, 2, 3]], 3) == bt.parse("E1*E2", 3)


def test_errors():
    with pytest.raises(bt.ParseError):
        bt.parse("T1 * ?", 2)
    with pytest.raises(ValueError):
        bt.parse("T3", 2)
    with pytest.raises(ValueError):
        bt.gen("T", 1, 2) * bt.gen("T", 1, 3)


def test_terms_shape():
    terms = bt.parse("E1*T1", 2).terms()
    assert terms == [{"partition": [[1, 2]], "perm": [2, 1], "coeff": {"num": ["1/1"], "den": ["1/1"]}}]


def test_involutions_and_form():
    t1, t2 = bt.gen("T", 1, 3), bt.gen("T", 2, 3)
    assert bt.star(t1 * t2) == t2 * t1
    assert bt.flip(t1) == t2
    assert bt.epsilon(bt.e_set([[1, 2, 3]], 3)) == "1"
    assert bt.form(bt.one(2), bt.gen("E", 1, 2)) == "1"
    assert bt.form(bt.one(2), bt.one(2)) == "0"


def test_verification():
    assert bt.verify_relations(3)["pass"]
    rep = bt.verify_tensor_relations(2)
    assert rep["pass"] and rep["mode"] == "exact"
    assert bt.faithfulness(3)["rank"] == 30
    assert bt.quotient_checks(3)["pass"]
    assert bt.gram_rank(3) == 30


def test_specht():
    rep = bt.specht(3)
    assert rep["dims"] == [1, 2, 1, 3, 3, 1, 2, 1]
    assert rep["sumSquares"] == 30
    assert len(bt.labels(4)) == 22
    assert bt.specht_dim(2, 1) == 1


def test_moebius():
    assert bt.moebius([[1], [2], [3]], 3) == ("2/1", 2)
    assert bt.moebius([[1, 2], [3]], 3) == ("-1/1", -1)
