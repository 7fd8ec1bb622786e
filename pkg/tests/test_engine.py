import random
from fractions import Fraction as Q
from math import factorial

from weylmod.core import Vec, avar, enumerate_monomials, mono, svar
from weylmod.engine import (
    A_STATE,
    J0_STATE,
    J1_STATE,
    ONE,
    OMEGA_STATE,
    S_STATE,
    delta_mode_act,
    delta_twist,
    jk_state,
    l_state,
    mode_act,
    normal_prod,
    translate,
    w3_state,
)
from weylmod.frame import DEFAULT, VACUUM
from weylmod.textio import parse_vec
from weylmod.weylact import act_a, act_astar, act_I
from weylmod.winf import act_Jk, act_L, act_L_engine

F = DEFAULT
V = parse_vec


def rand_vec(rng, max_w=4):
    out = Vec()
    for _ in range(rng.randint(1, 3)):
        pairs, wt = [], 0
        for _ in range(rng.randint(0, 3)):
            v = rng.choice([avar(1), avar(2), svar(0), svar(1)])
            if wt + abs(v) > max_w:
                continue
            pairs.append((v, 1))
            wt += abs(v)
        out = out.add_scaled(Vec.term(mono(*pairs)), rng.randint(-2, 2) or 1)
    return out


def test_base_cases():
    rng = random.Random(0)
    v = rand_vec(rng)
    for k in range(-4, 5):
        assert mode_act(A_STATE, k, v, F) == act_a(k, v, F)
        assert mode_act(S_STATE, k, v, F) == act_astar(k + 1, v, F)
    assert mode_act(ONE, -1, v, F) == v
    assert mode_act(ONE, 2, v, F).is_zero()


def test_j0_state_zero_mode_is_casimir():
    rng = random.Random(1)
    for _ in range(6):
        v = rand_vec(rng)
        assert mode_act(J0_STATE, 0, v, F) == act_I(v, F)


def test_engine_window_constants():
    rng = random.Random(2)
    basis = [Vec.term(m) for m in enumerate_monomials(4)]
    sample = rng.sample(basis, 10)
    for k in range(0, 4):
        ck = Q(1, factorial(k))
        state = jk_state(k)
        for n in range(-3, 4):
            for v in sample:
                assert mode_act(state, n + k, v, F) == ck * act_Jk(k, n, v, F)


def test_l_state_matches_window():
    rng = random.Random(3)
    for n in range(-3, 4):
        v = rand_vec(rng)
        assert act_L_engine(n, v, F) == act_L(n, v, F)
        assert mode_act(l_state(), n + 1, v, VACUUM) == act_L(n, v, VACUUM)


def test_translation_covariance():
    rng = random.Random(4)
    for u in (J0_STATE, jk_state(2), OMEGA_STATE):
        tu = translate(u)
        for n in range(-2, 3):
            v = rand_vec(rng, 3)
            assert mode_act(tu, n, v, F) == Q(-n) * mode_act(u, n - 1, v, F)


def test_normal_prod_on_generators():
    # a(-1)a(-1)|0> and a*(0)a*(0)|0> through the iterate product
    assert normal_prod(A_STATE, A_STATE) == V("a[-1]^2")
    assert normal_prod(S_STATE, S_STATE) == V("as[0]^2")
    assert normal_prod(A_STATE, S_STATE) == V("a[-1]*as[0]")


def test_w3_state_structure():
    w3 = w3_state()
    assert set(w3.charges()) == {0}
    # lies in the commutant of the current modes and is a Virasoro primary
    for n in range(1, 5):
        assert act_Jk(0, n, w3, VACUUM).is_zero()
    assert act_L(1, w3, VACUUM).is_zero()
    assert act_L(2, w3, VACUUM).is_zero()
    assert act_L(0, w3, VACUUM) == 3 * w3
    # contains the cubic current term
    assert w3.coeff(mono((avar(1), 3), (svar(0), 3))) != 0


def test_delta_twist_examples():
    for s in (1, -2):
        got = delta_twist(J0_STATE, s)
        assert got == [(-1, Q(s) * ONE), (0, J0_STATE)]
    assert delta_twist(ONE, 5) == [(0, ONE)]
    # charge-homogeneous scaling: a(-1)|0> has charge 1
    got = dict(delta_twist(A_STATE, 2))
    assert got[2] == A_STATE


def test_twisted_modes_match_shifted_engine():
    rng = random.Random(6)
    for s in (-1, 1, 2):
        Fs = F.with_shift(s)
        for u in (J0_STATE, J1_STATE, OMEGA_STATE):
            for n in range(-2, 3):
                v = rand_vec(rng, 3)
                assert mode_act(u, n, v, Fs) == delta_mode_act(u, n, v, F, s)
