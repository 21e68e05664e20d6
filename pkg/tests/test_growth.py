import pytest
from hypothesis import given

import goldens
from fibribbon import growth
from fibribbon.fibword import chain_count, covers_up, elements_of_rank, is_cover, parse_word
from fibribbon.growth import LocalRuleError, build, extract_p_hat, extract_q_hat, format_grid, local_rule
from fibribbon.insertion import insert
from fibribbon.permutation import enumerate_all, inverse, parse_permutation
from fibribbon.tableau import Single, Tableau, is_path, shape_word
from test_permutation import colored


def W(text, k=5):
    return parse_word(text, k)


class TestLocalRule:
    def test_x_in_empty_square(self):
        assert str(local_rule(W(""), W(""), W(""), 3)) == "1_3"

    def test_both_cover(self):
        assert str(local_rule(W(""), W("1_3"), W("1_1"))) == "2"

    def test_both_cover_longer(self):
        assert str(local_rule(W("1_4 2"), W("1_3 1_4 2"), W("2 2"))) == "2 1_4 2"

    def test_both_cover_equal_sides(self):
        assert str(local_rule(W("1_2"), W("2"), W("2"))) == "2 1_2"

    def test_one_side(self):
        assert local_rule(W("2"), W("1_1 2"), W("2")) == W("1_1 2")
        assert local_rule(W("2"), W("2"), W("2 1_1")) == W("2 1_1")

    def test_nothing(self):
        assert local_rule(W("2 1_1"), W("2 1_1"), W("2 1_1")) == W("2 1_1")

    def test_bad_side_is_named(self):
        with pytest.raises(LocalRuleError) as info:
            local_rule(W("1_1"), W("1_1"), W("1_1 1_1 1_1"))
        assert info.value.side == "mu2"
        with pytest.raises(LocalRuleError) as info:
            local_rule(W("1_1"), W(""), W("1_1"))
        assert info.value.side == "mu1"

    def test_x_needs_flat_square(self):
        with pytest.raises(LocalRuleError):
            local_rule(W(""), W("1_1"), W(""), 2)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_two_nu_covers_every_pair_of_up_covers(self, k):
        for n in range(5):
            for nu in elements_of_rank(k, n):
                ups = covers_up(nu)
                for a in ups:
                    for b in ups:
                        lam = local_rule(nu, a, b)
                        assert is_cover(a, lam) and is_cover(b, lam)


class TestBuild:
    def test_worked_grid(self):
        g = build(parse_permutation(goldens.PERMUTATION, goldens.K))
        assert format_grid(g) == goldens.GRID
        assert str(g.top_right) == goldens.SHAPE

    def test_worked_tableaux(self):
        g = build(parse_permutation(goldens.PERMUTATION, goldens.K))
        assert extract_p_hat(g) == goldens.P_HAT
        assert extract_q_hat(g) == goldens.Q_HAT
        assert extract_q_hat(g) == goldens.Q

    def test_single(self):
        g = build(parse_permutation("1^2", 2))
        assert str(g.top_right) == "1_2"
        assert extract_p_hat(g) == extract_q_hat(g) == Tableau(2, (Single(2, 1),))

    def test_identity(self):
        assert str(build(parse_permutation("1^1 2^1", 1)).top_right) == "1_1 1_1"

    def test_empty(self):
        g = build(parse_permutation("", 3))
        assert format_grid(g) == "@"
        assert extract_p_hat(g) == Tableau(3)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_edges_are_chains_and_transpose(n, k):
    for p in enumerate_all(n, k):
        g = build(p)
        for edge in (g.right_edge(), g.top_edge()):
            assert all(is_cover(a, b) for a, b in zip(edge, edge[1:]))
        ph, qh = extract_p_hat(g), extract_q_hat(g)
        assert is_path(ph) and is_path(qh)
        assert shape_word(ph) == shape_word(qh) == g.top_right
        assert extract_q_hat(build(inverse(p))) == ph
        assert insert(p).Q == qh


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pairs_count_matches_chain_squares(n, k):
    pairs = set()
    for p in enumerate_all(n, k):
        g = build(p)
        pairs.add((extract_p_hat(g), extract_q_hat(g)))
    expected = sum(chain_count(w) ** 2 for w in elements_of_rank(k, n))
    assert len(pairs) == expected == k**n * len(list(enumerate_all(n, 1)))


@given(colored)
def test_random_growth(p):
    g = growth.build(p)
    assert extract_q_hat(g) == insert(p).Q
    assert extract_p_hat(g) == extract_q_hat(build(inverse(p)))
