import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from impfloor.feasibility import check_theorem1, check_zds_condition, dominance_gap
from impfloor.model import Circuit, Instance, InvalidInstance, SoftModule

from helpers import make_instance

EIGHT_ONES = [8] + [1] * 8


class TestTheorem1:
    def test_4211(self):
        rep = check_theorem1(make_instance([4, 2, 1, 1], width=4.0, height=2.0))
        assert rep.worst_ratio == 1.0
        assert rep.uniform_lambda == 3.0
        assert rep.circuit_ratio == 0.5
        assert rep.guaranteed

    def test_8_ones(self):
        rep = check_theorem1(make_instance(EIGHT_ONES, width=4.0, height=4.0))
        assert rep.worst_ratio == 1.0 and rep.guaranteed

    def test_9111_fails_condition3(self):
        rep = check_theorem1(make_instance([9, 1, 1, 1], width=math.sqrt(12), height=math.sqrt(12)))
        assert rep.worst_ratio == 3.0
        assert rep.lambda_ok and rep.circuit_ratio_ok
        assert not rep.condition3_ok and not rep.guaranteed

    def test_small_lambda_and_bad_circuit(self):
        rep = check_theorem1(make_instance([1, 1], lam=2.5, width=2.0, height=1.0))
        assert not rep.lambda_ok and rep.condition3_ok and not rep.guaranteed
        rep = check_theorem1(make_instance([1, 1], width=4.0, height=0.5))
        assert rep.circuit_ratio == 0.125 and not rep.circuit_ratio_ok

    def test_boundary_inclusive(self):
        # 2 / (1) = 2 = lambda - 1 exactly
        assert check_theorem1(make_instance([2, 1], aspect=1.0)).condition3_ok

    def test_non_uniform_lambda(self):
        c = Circuit(2.0, 2.0)
        inst = Instance(c, (SoftModule("a", 2.0, 4.0), SoftModule("b", 1.0, 3.0), SoftModule("c", 1.0, 3.0)))
        rep = check_theorem1(inst)
        assert rep.uniform_lambda is None and not rep.lambda_ok and not rep.guaranteed
        assert rep.worst_ratio == 1.0 and rep.condition3_ok

    def test_needs_two_modules(self):
        with pytest.raises(InvalidInstance):
            check_theorem1(make_instance([1.0]))


class TestZdsCondition:
    @pytest.mark.parametrize(
        "areas, worst, ok",
        [([4, 2, 1, 1], 2.0, True), (EIGHT_ONES, 8.0, False), ([1, 1], 1.0, True)],
    )
    def test_examples(self, areas, worst, ok):
        rep = check_zds_condition(make_instance(areas))
        assert rep.worst_ratio == worst
        assert rep.condition3_ok is ok


@pytest.mark.parametrize(
    "areas, expected", [(EIGHT_ONES, (1.0, 8.0)), ([1, 1], (1.0, 1.0)), ([4, 2, 1, 1], (1.0, 2.0))]
)
def test_dominance_gap_examples(areas, expected):
    assert dominance_gap(make_instance(areas)) == expected


positive_areas = st.lists(st.floats(1e-3, 1e3), min_size=2, max_size=40)


@given(positive_areas)
def test_dominance(areas):
    inst = make_instance(areas)
    imp_worst, zds_worst = dominance_gap(inst)
    assert imp_worst <= zds_worst
    if check_zds_condition(inst).guaranteed:
        assert check_theorem1(inst).guaranteed


@given(positive_areas, st.randoms(use_true_random=False))
def test_theorem1_is_permutation_invariant(areas, rnd):
    shuffled = list(areas)
    rnd.shuffle(shuffled)
    a = check_theorem1(make_instance(areas))
    b = check_theorem1(make_instance(shuffled))
    assert a.worst_ratio == b.worst_ratio and a.guaranteed == b.guaranteed
