from itertools import permutations
import threading

import pytest
from hypothesis import given, strategies as st

from prefixavoid.sequences import (
    ballot,
    ballot_descent_sum,
    bell,
    binomial,
    catalan,
    schroder,
    simion_schmidt_a,
    vandermonde_sum,
)

from brute import brute_contains, brute_count

TABLE1 = {
    "catalan": [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796],
    "bell": [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975],
    "schroder": [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718],
}


@pytest.mark.parametrize("name, fn", [("catalan", catalan), ("bell", bell), ("schroder", schroder)])
def test_table1(name, fn):
    assert [fn(i) for i in range(11)] == TABLE1[name]


def test_binomial():
    assert binomial(5, 4) == 5
    assert binomial(7, 5) == 21
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0


@given(st.integers(0, 40), st.integers(-5, 45))
def test_binomial_pascal(n, k):
    if n >= 1:
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_ballot_examples():
    for n in range(1, 12):
        assert ballot(n, 1) == 1
        assert ballot(n, n) == catalan(n - 1)
    assert ballot(5, 3) == 9 == brute_count(5, (3,), ["123"])
    for bad in [(3, 0), (3, 4)]:
        with pytest.raises(ValueError):
            ballot(*bad)


def test_simion_schmidt_examples():
    for n in range(1, 10):
        assert simion_schmidt_a(n, n) == 1
    assert simion_schmidt_a(1, 1) == 1
    assert simion_schmidt_a(4, 1) == 5
    with pytest.raises(ValueError):
        simion_schmidt_a(3, 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_simion_schmidt_counts_first_ascent(n):
    counts = [0] * (n + 1)
    for w in permutations(range(1, n + 1)):
        if brute_contains(w, (1, 2, 3)):
            continue
        first = next((i for i in range(1, n) if w[i - 1] < w[i]), n)
        counts[first] += 1
    assert counts[1:] == [simion_schmidt_a(n, i) for i in range(1, n + 1)]


def test_descent_sum_identity():
    for n in range(2, 31):
        for r in range(2, n + 1):
            assert ballot_descent_sum(n, r) == ballot(n, r)
            assert vandermonde_sum(n, r) == binomial(n + r - 2, r - 2)


def test_inequalities():
    assert all(catalan(n) < bell(n) for n in range(4, 26))
    assert all(bell(n) > 2 * bell(n - 1) for n in range(3, 26))
    assert catalan(3) == bell(3)


def test_catalan_convolution():
    for n in range(1, 21):
        assert catalan(n) == sum(catalan(n - r) * catalan(r - 1) for r in range(1, n + 1))


def test_memo_is_thread_safe():
    results = []

    def work():
        results.append([schroder(i) for i in range(60, 0, -1)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        catalan(-1)
