import pytest

from sumpow.errors import DomainError
from sumpow.search import SolutionTriple as T, cross_check_polynomial, find_solutions


def brute_force(k, l, x_max, n_max=None):
    """Double loop over (x, n) and every base y; no shortcuts, no reuse."""
    out = []
    for x in range(1, x_max + 1):
        N = 0
        for j in range(x + 1, l * x + 1):
            N += j**k
        n = 2
        while 2**n <= N and (n_max is None or n <= n_max):
            y = 1
            while y**n < N:
                y += 1
            if y**n == N:
                out.append(T(x, y, n))
            n += 1
    return out


@pytest.mark.parametrize(
    "k, l, x_max, expected",
    [
        (1, 2, 10, [T(8, 10, 2)]),
        (2, 2, 10, [T(1, 2, 2), T(2, 5, 2)]),
        (3, 2, 1, [T(1, 2, 3)]),
    ],
)
def test_examples(k, l, x_max, expected):
    assert find_solutions((k, l), x_max) == expected


@pytest.mark.parametrize("k, l, x_max", [(1, 2, 40), (1, 3, 30), (2, 2, 25), (2, 3, 12), (3, 2, 12), (3, 3, 8), (4, 2, 8)])
def test_complete_in_box(k, l, x_max):
    assert find_solutions((k, l), x_max) == brute_force(k, l, x_max)


def test_every_exponent_reported():
    # k=6, l=2, x=1: the sum is 2^6
    assert find_solutions((6, 2), 1) == [T(1, 8, 2), T(1, 4, 3), T(1, 2, 6)]
    assert find_solutions((6, 2), 1, n_max=3) == [T(1, 8, 2), T(1, 4, 3)]


def test_soundness():
    for k, l in [(1, 2), (1, 5), (2, 2), (3, 2), (3, 3)]:
        for t in find_solutions((k, l), 60):
            assert sum(j**k for j in range(t.x + 1, l * t.x + 1)) == t.y**t.n
            assert t.n >= 2 and t.y >= 1


def test_monotone_box_growth():
    small = find_solutions((1, 2), 50)
    big = find_solutions((1, 2), 200)
    assert big[: len(small)] == small
    assert all(t.x > 50 for t in big[len(small):])


def test_k1_family_keeps_growing():
    counts = [len(find_solutions((1, 2), x, n_max=2)) for x in (10, 1000, 100000)]
    assert counts == [1, 2, 3]
    assert find_solutions((1, 2), 100000, n_max=2)[-1] == T(78408, 96030, 2)


def test_k3_has_solutions():
    assert T(1, 2, 3) in find_solutions((3, 2), 50)
    assert T(5, 60, 3) in find_solutions((3, 6), 50)


def test_parallel_matches_sequential():
    seq = find_solutions((1, 3), 400)
    par = find_solutions((1, 3), 400, workers=3)
    assert par == seq


def test_domain_errors():
    with pytest.raises(DomainError):
        find_solutions((2, 2), 0)
    with pytest.raises(DomainError):
        find_solutions((2, 2), 5, n_max=1)


@pytest.mark.parametrize("k, l", [(2, 2), (5, 4), (1, 3)])
def test_cross_check_polynomial(k, l):
    assert cross_check_polynomial((k, l), 10)
