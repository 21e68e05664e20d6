import pytest
from hypothesis import given

import goldens
from fibribbon.errors import InvalidTableau
from fibribbon.evacuation import Vacated, evacuate, evacuate_iteration, unevacuate
from fibribbon.fibword import elements_of_rank
from fibribbon.growth import build, extract_p_hat
from fibribbon.insertion import insert
from fibribbon.permutation import enumerate_all
from fibribbon.tableau import Double, Single, Tableau, enumerate_path, enumerate_standard, is_path, shape_word
from fibribbon.verify import tiling_swapped
from test_permutation import colored

P = goldens.P


class TestIteration:
    def test_first_pass(self):
        rest, vacated = evacuate_iteration(P)
        assert rest == goldens.EVAC_STEPS[0]
        # third column, a whole Single of height 4
        assert vacated == Vacated(2, False, 4)

    def test_second_pass_slides_a_top(self):
        rest, vacated = evacuate_iteration(goldens.EVAC_STEPS[0])
        assert rest == goldens.EVAC_STEPS[1]
        assert vacated == Vacated(1, True, 4)

    def test_all_passes(self):
        current = P
        for expected in goldens.EVAC_STEPS:
            current, _ = evacuate_iteration(current)
            assert current == expected

    def test_single(self):
        rest, vacated = evacuate_iteration(Tableau(4, (Single(3, 1),)))
        assert rest == Tableau(4)
        assert vacated == Vacated(0, False, 3)

    def test_rejects(self):
        with pytest.raises(InvalidTableau):
            evacuate_iteration(Tableau(3))
        with pytest.raises(InvalidTableau):
            evacuate_iteration(goldens.Q)


class TestEvacuate:
    def test_worked(self):
        assert evacuate(P) == goldens.P_HAT

    def test_single(self):
        t = Tableau(3, (Single(2, 1),))
        assert evacuate(t) == t
        assert unevacuate(t) == t

    def test_empty(self):
        assert evacuate(Tableau(2)) == Tableau(2)
        assert unevacuate(Tableau(2)) == Tableau(2)

    def test_unevacuate_worked(self):
        assert unevacuate(goldens.P_HAT) == P

    def test_unevacuate_rejects_non_path(self):
        with pytest.raises(InvalidTableau):
            unevacuate(P)

    def test_tiling_swap_worked(self):
        assert tiling_swapped(P, goldens.P_HAT)
        assert not tiling_swapped(P, P)

    def test_tiling_swap_shape_mismatch(self):
        assert not tiling_swapped(P, Tableau(5, (Double(1, 1, 2),)))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_round_trips(k):
    for n in range(6):
        for w in elements_of_rank(k, n):
            std = enumerate_standard(w)
            image = set()
            for t in std:
                e = evacuate(t)
                assert is_path(e)
                assert shape_word(e) == w
                assert tiling_swapped(t, e)
                assert unevacuate(e) == t
                image.add(e)
            paths = enumerate_path(w)
            assert image == set(paths)
            for t in paths:
                assert evacuate(unevacuate(t)) == t


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matches_growth(n, k):
    for p in enumerate_all(n, k):
        assert evacuate(insert(p).P) == extract_p_hat(build(p))


@given(colored)
def test_random(p):
    P, _ = insert(p)
    e = evacuate(P)
    assert e == extract_p_hat(build(p))
    assert unevacuate(e) == P
