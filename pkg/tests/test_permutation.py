import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from fibribbon.errors import ParseError
from fibribbon.permutation import (
    ColoredPermutation,
    SquareDiagram,
    color,
    count_all,
    enumerate_all,
    format_permutation,
    from_square_diagram,
    inverse,
    parse_permutation,
    to_square_diagram,
)

WORKED = "2^3 7^1 1^1 5^4 6^3 4^2 3^4"


def perm(text, k):
    return parse_permutation(text, k)


class TestParse:
    def test_worked(self):
        p = perm(WORKED, 5)
        assert p.n == 7
        assert format_permutation(p) == WORKED

    def test_singleton(self):
        assert perm("1^1", 1).entries == ((1, 1),)

    def test_empty(self):
        assert perm("", 2).n == 0

    @pytest.mark.parametrize("text,pos", [("1^1 1^2", 2), ("1^1 3^1", 2), ("1^3 2^1", 1), ("1^1 2", 2), ("x^1", 1)])
    def test_errors_name_position(self, text, pos):
        with pytest.raises(ParseError) as info:
            perm(text, 2)
        assert info.value.position == pos

    def test_whitespace_normalized(self):
        assert format_permutation(perm("  2^1\t1^2 ", 2)) == "2^1 1^2"


class TestSquareDiagram:
    def test_worked_cells(self):
        d = to_square_diagram(perm(WORKED, 5))
        assert {(1, 2, 3), (2, 7, 1), (7, 3, 4)} <= d.cells
        assert len(d.cells) == 7

    @pytest.mark.parametrize("text,k,cells", [
        ("1^1 2^1", 1, {(1, 1, 1), (2, 2, 1)}),
        ("2^1 1^2", 2, {(1, 2, 1), (2, 1, 2)}),
    ])
    def test_small(self, text, k, cells):
        assert to_square_diagram(perm(text, k)).cells == cells

    def test_round_trip(self):
        p = perm(WORKED, 5)
        assert from_square_diagram(to_square_diagram(p), 5) == p

    def test_rejects_two_in_a_row(self):
        with pytest.raises(ValueError):
            SquareDiagram(2, frozenset({(1, 1, 1), (2, 1, 1)}))


class TestInverse:
    def test_worked(self):
        assert format_permutation(inverse(perm(WORKED, 5))) == "3^1 1^3 7^4 6^2 4^4 5^3 2^1"

    def test_identity(self):
        p = perm("1^2 2^1 3^2", 2)
        assert inverse(p) == p

    def test_small(self):
        assert format_permutation(inverse(perm("2^1 1^2", 2))) == "2^2 1^1"

    def test_matches_transpose(self):
        for p in enumerate_all(3, 2):
            cells = {(r, c, col) for c, r, col in to_square_diagram(p).cells}
            assert to_square_diagram(inverse(p)).cells == cells


class TestColor:
    def test_worked(self):
        assert color(perm(WORKED, 5)) == 11

    def test_all_ones(self):
        assert color(perm("3^1 1^1 2^1", 4)) == 0

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_single(self, k):
        assert color(perm(f"1^{k}", k)) == k - 1


class TestEnumerate:
    def test_small(self):
        assert [format_permutation(p) for p in enumerate_all(1, 2)] == ["1^1", "1^2"]
        assert [format_permutation(p) for p in enumerate_all(2, 1)] == ["1^1 2^1", "2^1 1^1"]

    @pytest.mark.parametrize("n,k", [(n, k) for n in range(6) for k in range(1, 4) if (n, k) != (5, 3)])
    def test_counts_against_oracle(self, n, k):
        got = [p.entries for p in enumerate_all(n, k)]
        assert len(got) == count_all(n, k) == oracles.count_colored(n, k)
        assert set(got) == set(oracles.colored_permutations(n, k))

    def test_count_n5_k3(self):
        assert sum(1 for _ in enumerate_all(5, 3)) == 3**5 * 120

    def test_deterministic_order(self):
        assert list(enumerate_all(3, 2)) == list(enumerate_all(3, 2))


colored = st.integers(min_value=1, max_value=4).flatmap(
    lambda k: st.integers(min_value=0, max_value=9).flatmap(
        lambda n: st.tuples(
            st.permutations(range(1, n + 1)),
            st.lists(st.integers(min_value=1, max_value=k), min_size=n, max_size=n),
        ).map(lambda vc: ColoredPermutation(k, tuple(zip(vc[0], vc[1]))))
    )
)


@given(colored)
def test_inverse_properties(p):
    assert inverse(inverse(p)) == p
    assert color(inverse(p)) == color(p)
    assert parse_permutation(format_permutation(p), p.k) == p
