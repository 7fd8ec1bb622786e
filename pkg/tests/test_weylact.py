import random
from fractions import Fraction as Q

import pytest

from weylmod.core import Vec, avar, enumerate_monomials, mono, svar
from weylmod.frame import DEFAULT, VACUUM, Frame, HypothesisError
from weylmod.textio import parse_vec
from weylmod.weylact import (
    act_a,
    act_astar,
    act_E,
    act_I,
    act_word,
    iw_vector,
    whittaker_defect,
)

F = DEFAULT
W = Vec.unit()


def V(text):
    return parse_vec(text)


def test_act_a_examples():
    assert act_a(0, W, F) == W                       # a(0) w = lambda_0 w
    assert act_a(2, W, F).is_zero()                  # beyond the support
    # Leibniz through the polynomial model
    assert act_a(1, V("as[-1]"), F) == V("2*as[-1] + 1")
    assert act_a(-1, W, F) == V("a[-1]")


def test_act_astar_examples():
    assert act_astar(1, W, F) == W                   # a*(1) w = mu_1 w
    assert act_astar(1, V("a[-1]"), F) == V("a[-1] - 1")
    assert act_astar(0, W, F) == V("as[0]")


def test_act_E_examples():
    assert act_E(1, 1, W, F) == V("a[-1]")
    assert act_E(0, 0, W, F) == V("as[0]")
    assert act_E(-1, 2, W, F).is_zero()              # mu_2 = 0, no a(-2) factor


def test_act_I_examples():
    assert act_I(W, F) == V("as[0] + 2*as[-1] + a[-1]")
    assert act_I(W, VACUUM).is_zero()
    # the charge term enters with the sign forced by [a(n), I] = a(n)
    got = act_I(V("a[-1]"), F)
    assert got == V("-a[-1] + a[-1]*as[0] + 2*a[-1]*as[-1] + a[-1]^2")
    assert got == act_I(V("a[-1]"), F, path="window")
    assert act_I(W, F) == iw_vector(F)


@pytest.mark.parametrize("wt", [0, 2, 4, 6])
def test_act_I_paths_agree_on_basis(wt):
    for m in enumerate_monomials(wt):
        v = Vec.term(m)
        assert act_I(v, F, "closed") == act_I(v, F, "window")


def test_weyl_relations_random():
    rng = random.Random(11)
    for _ in range(60):
        m = mono(*[(rng.choice([avar(1), avar(2), svar(0), svar(1)]), 1)
                   for _ in range(rng.randint(0, 4))])
        v = Vec.term(m, rng.choice([1, -1, Q(2, 3)]))
        k, ln = rng.randint(-3, 3), rng.randint(-3, 3)
        lhs = act_a(k, act_astar(ln, v, F), F) - act_astar(ln, act_a(k, v, F), F)
        assert lhs == (v if k + ln == 0 else Vec())


def test_shift_covariance():
    v = V("a[-1]*as[0] + 2*as[-2]")
    for s in (-2, -1, 1, 3):
        Fs = F.with_shift(s)
        for k in range(-3, 4):
            assert act_a(k, v, Fs) == act_a(k + s, v, F)
            assert act_astar(k, v, Fs) == act_astar(k - s, v, F)


def test_matrix_unit_commutators():
    # [E_{i,j}, a(-m)] = -delta_{j,m} a(-i) and [E_{i,j}, a*(m)] = +delta_{i,m} a*(j)
    rng = random.Random(4)
    for _ in range(40):
        m = mono(*[(rng.choice([avar(1), avar(2), svar(0), svar(1)]), 1)
                   for _ in range(rng.randint(0, 3))])
        v = Vec.term(m)
        i, j, mm = rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(0, 2)
        lhs = act_E(i, j, act_a(-mm, v, F), F) - act_a(-mm, act_E(i, j, v, F), F)
        assert lhs == (-act_a(-i, v, F) if j == mm else Vec())
        lhs = act_E(i, j, act_astar(mm, v, F), F) - act_astar(mm, act_E(i, j, v, F), F)
        assert lhs == (act_astar(j, v, F) if i == mm else Vec())


def test_central_scalar_table():
    v = V("a[-1]*as[0] + 2*a[-2]")
    K = Q(-1)
    for i in range(-2, 3):
        for j in range(-2, 3):
            lhs = act_E(i, j, act_E(j, i, v, F), F) - act_E(j, i, act_E(i, j, v, F), F)
            rhs = act_E(j, j, v, F) - act_E(i, i, v, F)
            diff = lhs - rhs
            expected = K * ((1 if i <= 0 else 0) - (1 if j <= 0 else 0))
            assert diff == expected * v


def test_whittaker_defect_examples():
    res = whittaker_defect(W, F, 2, 2)
    assert all(r.is_zero() for _, r in res)
    res = whittaker_defect(act_I(W, F), F, 2, 2)
    assert all(r.is_zero() for _, r in res)
    res = dict(whittaker_defect(V("a[-1]"), F, 2, 2))
    assert res[(0, 1)] == -W
    # a*(0)-dependence is detected by the i = 0 row
    res = whittaker_defect(V("as[0]"), F, 2, 2)
    assert any(not r.is_zero() for _, r in res)


def test_defect_window_args():
    with pytest.raises(ValueError):
        whittaker_defect(W, F, -1, 2)
    with pytest.raises(ValueError):
        whittaker_defect(W, F, 1, 0)


def test_act_word_examples():
    assert act_word([("a", 0)], W, F) == W
    got = act_word([("E", 1, 1), ("E", 1, 1)], W, F)
    assert got == V("a[-1]^2 - a[-1]")
    v = V("as[0] + 2*a[-1]")
    assert act_word([("I",), ("I",)], v, F) == act_I(act_I(v, F), F)


def test_degenerate_frames():
    vac = VACUUM
    # action operations accept the vacuum frame
    assert act_a(0, W, vac).is_zero()
    assert act_astar(0, W, vac) == V("as[0]")
    with pytest.raises(HypothesisError):
        Frame(lam=(), mu=(1,)).pivot_i0()
    with pytest.raises(HypothesisError):
        Frame(lam=(1,), mu=()).require_nondegenerate()
    with pytest.raises(HypothesisError):
        Frame(lam=(1, 0), mu=(1,), i0=1)
