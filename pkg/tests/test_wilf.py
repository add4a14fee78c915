import pytest

from prefixavoid.core import Pattern
from prefixavoid.oracle import leading_term_vector, oracle_count
from prefixavoid.sequences import bell
from prefixavoid.wilf import (
    CLASSICAL_S3,
    VINCULAR_S3,
    classify_r_wilf,
    leading_count,
    table2,
    table3,
)


def partition(res):
    return {frozenset(str(p) for p in cls) for cls in res.classes}


def test_r1_two_classes():
    res = classify_r_wilf(1, CLASSICAL_S3, 8)
    assert partition(res) == {frozenset({"123", "132"}), frozenset({"321", "312", "213", "231"})}


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_three_classical_classes(r):
    res = classify_r_wilf(r, CLASSICAL_S3, 8)
    assert partition(res) == {
        frozenset({"213", "231"}),
        frozenset({"123", "132"}),
        frozenset({"321", "312"}),
    }


def test_nine_vincular_classes():
    res = classify_r_wilf(5, VINCULAR_S3, 8)
    got = partition(res)
    assert len(got) == 9
    for pair in [{"2-13", "2-31"}, {"1-23", "1-32"}, {"3-21", "3-12"}]:
        assert frozenset(pair) in got


def test_classification_shape():
    res = classify_r_wilf(3, ["123", "132", "1-32"], 6)
    assert res.n_range == (3, 6)
    assert all(len(v) == 4 for v in res.evidence.values())
    flat = [p for cls in res.classes for p in cls]
    assert sorted(map(str, flat)) == sorted(map(str, res.patterns))
    d = res.to_dict()
    assert d["basis"] == "empirical over 3 <= n <= 6"
    assert all(isinstance(x, str) for vec in d["evidence"].values() for x in vec)


def test_classify_errors():
    with pytest.raises(ValueError):
        classify_r_wilf(5, CLASSICAL_S3, 4)
    with pytest.raises(ValueError):
        classify_r_wilf(0, CLASSICAL_S3, 4)


def test_leading_count_agrees_with_oracle():
    for n in range(1, 8):
        for r in range(1, n + 1):
            for p in CLASSICAL_S3 + ("1-32",):
                assert leading_count(n, r, p) == oracle_count(n, (r,) if n > 1 else (), [p])


def test_table2_examples():
    t = table2(4)
    assert t[(2, "321")] == 5
    assert t[(3, "213")] == 2
    assert t[(2, "123")] == 3
    assert len(t) == 24


def test_table2_small_n_merges_rows():
    # for n = 2 the rows r = 1, 2 coincide with r = n-1, n
    assert table2(2)[(1, "123")] == 1
    with pytest.raises(ValueError):
        table2(1)


@pytest.mark.parametrize("n", range(2, 9))
def test_table2_matches_oracle(n):
    vecs = {p: leading_term_vector(n, [p]) for p in CLASSICAL_S3}
    for (r, p), v in table2(n).items():
        assert vecs[p][r - 1] == v, (n, r, p)


def test_table3_examples():
    t = table3(5)
    assert t[("32-1", 5)] == bell(3) == 5
    assert t[("3-21", 6)] == 16
    assert t[("1-23", 7)] == 188
    assert t[("32-1", 6)] is None
    assert len(t) == 36
    with pytest.raises(ValueError):
        table3(2)


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_table3_matches_oracle(r):
    for (p, n), v in table3(r).items():
        if v is not None and n <= 8:
            assert oracle_count(n, (r,), [Pattern.parse(p)]) == v, (p, n)
