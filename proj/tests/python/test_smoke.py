from fractions import Fraction

import pytest

import surgery


def test_bernoulli_and_t():
    assert surgery.bernoulli(1) == Fraction(1, 6)
    assert surgery.bernoulli(6) == Fraction(691, 2730)
    assert [surgery.t(4 * k) for k in range(1, 6)] == [2, 28, 992, 8128, 261632]
    assert surgery.t(6) == 0
    assert surgery.t(24) == 1448424448


def test_bp_and_tables():
    assert surgery.bp_order(8).order == 28
    assert surgery.bp_order(7).is_trivial()
    assert str(surgery.theta_order(7)) == "Z_28"
    table = surgery.GroupTable.from_json('{"theta": {"9": "unknown"}}')
    assert not surgery.theta_order(9, table).is_known()


def test_structure_set_3_4():
    s = surgery.present(4, 3)
    assert (s.p, s.q, s.swapped) == (3, 4, True)
    assert s.residual_order == 1
    assert s.theta.order == 28
    assert s.action == "stabilizers"
    assert s.stabilizer(7).is_trivial()
    assert s.stabilizer(1).order == 7
    assert surgery.eta_fiber_size(3, 4, 7).order == 28
    assert surgery.eta_fiber_size(3, 4, 1).order == 4
    assert surgery.del_map(3, 4, 1, 1) == 0
    assert surgery.del_map(4, 4, 1, 1) == 32 % 28


def test_structure_set_4_4():
    s = surgery.present(4, 4)
    assert s.residual_order == 7
    assert s.action == "free"
    assert surgery.residual_order(4, 8) == 31
    assert not surgery.image_F_is_subgroup(4, 4)
    assert not surgery.image_F_is_subgroup(4, 8)
    possible, reason = surgery.group_structure_possible(4, 8)
    assert not possible and reason


def test_classification():
    assert surgery.plumbing_boundary_class(1, 7) == (-28) % 28
    assert surgery.s4s4_boundary_is_standard(1, 7)
    assert surgery.s4s4_diffeomorphic(1, 7, 0, 7, 1, 0)
    assert surgery.s3s4_inertia_group(3).generator == 2
    assert surgery.s3s4_diffeomorphic(0, 5, 0, -5)


def test_errors_and_big_ints():
    with pytest.raises(surgery.DomainError):
        surgery.bernoulli(0)
    with pytest.raises(ValueError):
        surgery.t(-4)
    big = 10**40 + 7
    assert surgery.quotient_order(big, 0) == big
