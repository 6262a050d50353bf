import pytest

from ntdom.enumerate import enumerate_trees
from ntdom.graph import popcount
from ntdom.named import cycle, example_member, path, star
from ntdom.solvers import Method, ParamKind, PreconditionError, is_ntd_set, solve_exact
from ntdom.treedp import ntd_number_tree_dp

import oracles


@pytest.mark.parametrize("n, expected", [(2, 2), (3, 2), (4, 2), (5, 3), (6, 3), (7, 3), (8, 4)])
def test_paths(n, expected):
    assert oracles.ntd_brute(path(n)) == expected
    result = ntd_number_tree_dp(path(n))
    assert result.value == expected
    assert result.method is Method.TREE_DP
    assert is_ntd_set(path(n), result.witness)


def test_stars():
    for k in range(1, 7):
        assert ntd_number_tree_dp(star(k)).value == 2


def test_rejects_non_trees():
    with pytest.raises(PreconditionError):
        ntd_number_tree_dp(cycle(5))
    with pytest.raises(PreconditionError):
        ntd_number_tree_dp(path(1))


def test_matches_brute_force_up_to_ten():
    for n in range(2, 11):
        for T in enumerate_trees(n):
            result = ntd_number_tree_dp(T)
            assert result.value == oracles.ntd_brute(T), T.edges()
            assert is_ntd_set(T, result.witness)
            assert popcount(result.witness) == result.value


def test_example_member():
    result = ntd_number_tree_dp(example_member())
    assert result.value == 18
    assert is_ntd_set(example_member(), result.witness)


def test_dispatch_through_solve_exact():
    assert solve_exact(path(6), ParamKind.NTD, Method.TREE_DP).value == 3
