"""Acceptance gate: every criterion at its stated size, exact arithmetic.

Each test prints one pass/fail line; run with ``pytest -s tests/test_acceptance.py``
to see them.  All tolerances are exact (zero residuals): there is no floating
point anywhere in the package.
"""

import random
from fractions import Fraction as Q
from math import factorial

from weylmod.core import Vec, avar, enumerate_monomials, svar
from weylmod.engine import J0_STATE, ONE, delta_twist, jk_state, mode_act
from weylmod.frame import DEFAULT, VACUUM, Frame
from weylmod.linalg import spans_equal
from weylmod.quotient import (
    cyclicity_probe,
    expected_whittaker_basis,
    ipow_w,
    non_tensor_witness,
    project,
    whittaker_space,
)
from weylmod.suites import (
    FRAMES,
    _pbw_cases,
    _rel_pattern_cases,
    ishift_poly,
    poly_mul,
    rand_vec,
    run_suite,
)
from weylmod.weylact import act_a, act_astar, act_E, act_I, iw_vector
from weylmod.winf import act_H, act_Jk, act_L, relation_probe
from weylmod.quotient import der_a, der_s

F = DEFAULT
W = Vec.unit()


def _report(num, name, ok):
    print("ACCEPTANCE %02d %-28s %s" % (num, name, "PASS" if ok else "FAIL"))
    assert ok, "criterion %d (%s) failed" % (num, name)


def test_criterion_01_weyl_glhat_brackets():
    rng = random.Random(101)
    ok = True
    for _ in range(100):
        v = rand_vec(rng, 6)
        k, ln = rng.randint(-3, 3), rng.randint(-3, 3)
        lhs = act_a(k, act_astar(ln, v, F), F) - act_astar(ln, act_a(k, v, F), F)
        ok &= lhs == (v if k + ln == 0 else Vec())
        i, j, m = rng.randint(-2, 3), rng.randint(-2, 3), rng.randint(0, 3)
        ca = act_E(i, j, act_a(-m, v, F), F) - act_a(-m, act_E(i, j, v, F), F)
        ok &= ca == (-act_a(-i, v, F) if j == m else Vec())
        cs = act_E(i, j, act_astar(m, v, F), F) - act_astar(m, act_E(i, j, v, F), F)
        ok &= cs == (act_astar(j, v, F) if i == m else Vec())
    # empirical central scalar table: antisymmetric, supported on the split
    # pattern, values matching K = -1
    v = rand_vec(rng, 5)
    K = Q(-1)
    table = {}
    for i in range(-3, 4):
        for j in range(-3, 4):
            lhs = act_E(i, j, act_E(j, i, v, F), F) - act_E(j, i, act_E(i, j, v, F), F)
            rhs = act_E(j, j, v, F) - act_E(i, i, v, F)
            diff = lhs - rhs
            expect = K * ((1 if i <= 0 else 0) - (1 if j <= 0 else 0))
            ok &= diff == expect * v
            table[(i, j)] = expect
    ok &= all(table[(i, j)] == -table[(j, i)] for (i, j) in table)
    ok &= all(sc == 0 for (i, j), sc in table.items()
              if (i <= 0) == (j <= 0))
    _report(1, "weyl/glhat bracket suite", ok)


def test_criterion_02_casimir():
    rng = random.Random(102)
    ok = all(
        act_I(Vec.term(m), F, "closed") == act_I(Vec.term(m), F, "window")
        for m in enumerate_monomials(8)
    )
    for _ in range(20):
        v = rand_vec(rng, 6)
        n = rng.randint(-3, 3)
        ok &= act_a(n, act_I(v, F), F) - act_I(act_a(n, v, F), F) == act_a(n, v, F)
        i, j = rng.randint(-2, 2), rng.randint(-2, 2)
        ok &= act_E(i, j, act_I(v, F), F) == act_I(act_E(i, j, v, F), F)
    ok &= all(act_I(W, Fx) == iw_vector(Fx) for Fx in FRAMES)
    ok &= len(FRAMES) == 5
    _report(2, "Casimir suite", ok)


def test_criterion_03_casimir_shift_lemma():
    ok = True
    for Fx in FRAMES[:3]:
        for n in range(0, Fx.n_max + 2):
            for k in range(0, 5):
                ok &= act_a(n, ipow_w(k, Fx), Fx) == \
                    Fx.lam_at(n) * ishift_poly(k, 1, Fx)
        for n in range(0, Fx.m_max + 1):
            for k in range(0, 5):
                ok &= act_astar(n + 1, ipow_w(k, Fx), Fx) == \
                    Fx.mu_at(n + 1) * ishift_poly(k, -1, Fx)
    _report(3, "Casimir-power eigenvalue lemma", ok)


def test_criterion_04_derivation_lemma():
    rng = random.Random(104)
    ok = True
    for Fx in FRAMES[:3]:
        i0 = Fx.pivot_i0()
        piv = svar(i0)
        for _ in range(20):
            k = rng.randint(0, 3)
            p = rng.randint(1, 3)
            phi = rand_vec(rng, 4, 2, allow=lambda v: v != piv)
            lhs = der_a(p, poly_mul(phi, ipow_w(k, Fx)), Fx)
            ok &= lhs == poly_mul(phi.derive(avar(p)), ishift_poly(k, 1, Fx))
            phis = rand_vec(rng, 4, 2, allow=lambda v: v < 0 and v != piv)
            ps = rng.choice([m for m in range(0, 4) if m != i0])
            lhs = der_s(ps, poly_mul(phis, ipow_w(k, Fx)), Fx)
            ok &= lhs == poly_mul(phis.derive(svar(ps)), ishift_poly(k, -1, Fx))
    _report(4, "derivation lemma", ok)


def test_criterion_05_whittaker_completeness():
    ok = True
    wi = iw_vector(F).weight()
    for mw in (2, 4, 6):
        res = whittaker_space(F, mw)
        ok &= res.dimension == mw // wi + 1
        ok &= spans_equal(res.basis, expected_whittaker_basis(F, mw))
        ok &= res.stable
    _report(5, "Whittaker-vector completeness", ok)


def test_criterion_06_irreducibility_probe():
    rng = random.Random(106)
    frames = [FRAMES[0], FRAMES[2], FRAMES[4]]
    shifted = [FRAMES[0].with_shift(1), FRAMES[0].with_shift(-1)]
    ok = True
    count = 0
    for Fx in frames:
        for d in (Q(3), Q(0), Q(-1, 2)):
            for _ in range(50):
                q = project(rand_vec(rng, 5), d, Fx)
                if q.is_zero():
                    q = project(W, d, Fx)
                pr = cyclicity_probe(q, d, Fx)
                ok &= pr.ok
                count += 1
    for Fs in shifted:
        for d in (Q(3), Q(0), Q(-1, 2)):
            for _ in range(50):
                q = project(rand_vec(rng, 5), d, Fs)
                if q.is_zero():
                    q = project(W, d, Fs)
                ok &= cyclicity_probe(q, d, Fs).ok
                count += 1
    ok &= count == 3 * 3 * 50 + 2 * 3 * 50
    _report(6, "irreducibility certificates", ok)


def test_criterion_07_non_tensor_witness():
    rep1 = non_tensor_witness(F, Q(3))
    rep2 = non_tensor_witness(Frame(lam=(1, 1, 1), mu=(0, 1, 1)), Q(3))
    ok = rep1["ok"] and rep1["rank"] == F.m_max + 1
    ok &= rep2["ok"] and rep2["rank"] == 4
    _report(7, "non-tensor-product witness", ok)


def test_criterion_08_virasoro_hvir():
    rng = random.Random(108)
    ok = True
    for _ in range(100):
        v = rand_vec(rng, 6)
        r, s = rng.randint(-3, 3), rng.randint(-3, 3)
        ka, kb = rng.choice([0, 1]), rng.choice([0, 1])
        ok &= relation_probe(("J", ka, r), ("J", kb, s), v, F).is_zero()
    grid = [(1, -1), (2, -2), (2, -1), (-1, 2), (3, -2), (3, -3), (0, 2)]
    for t, (r, s) in enumerate(grid):
        v = rand_vec(rng, 4)
        ok &= relation_probe(("Lw", r), ("Lw", s), v, F).is_zero()
        ok &= relation_probe(("L", r), ("L", s), v, F).is_zero()
        ok &= relation_probe(("L", r), ("L", s), v, VACUUM).is_zero()
    _report(8, "Virasoro and current relations", ok)


def test_criterion_09_weight3_field():
    ok = True
    for Fx in (F, FRAMES[4]):
        n, m = Fx.n_max, Fx.m_max
        top = act_H(3 * n + 3 * m, W, Fx)
        q = top.coeff(())
        ok &= q != 0 and top == q * W
        for s in (1, 2, 3):
            ok &= act_H(3 * n + 3 * m + s, W, Fx).is_zero()
    ok &= act_H(6, W, F) == Q(-10) * W  # golden value on the default frame
    one = Vec.unit()
    rel = (Q(3, 4) * act_H(-6, one, VACUUM)
           - act_L(-2, act_H(-4, one, VACUUM), VACUUM)
           + Q(3, 2) * act_L(-3, act_H(-3, one, VACUUM), VACUUM))
    ok &= rel.is_zero()
    _report(9, "weight-3 field suite", ok)


def test_criterion_10_induced_module():
    cases = _rel_pattern_cases(F) + _pbw_cases(F, 4)
    ok = all(c["ok"] for c in cases)
    _report(10, "induced-module structure", ok)


def test_criterion_11_engine_crosscheck():
    rng = random.Random(111)
    basis = [Vec.term(m) for m in enumerate_monomials(5)]
    ok = True
    for k in range(0, 4):
        ck = Q(1, factorial(k))
        state = jk_state(k)
        for n in range(-4, 5):
            for v in basis:
                ok &= mode_act(state, n + k, v, F) == ck * act_Jk(k, n, v, F)
    for s in (-2, -1, 1, 2):
        ok &= delta_twist(J0_STATE, s) == [(-1, Q(s) * ONE), (0, J0_STATE)]
    _report(11, "mode-engine cross-check", ok)


def test_criterion_12_gl2l():
    rep = run_suite("gl2l", F, seed=112, n_vectors=20, n_probe=25)
    ok = rep["ok"]
    _report(12, "finite 2l-by-2l suite", ok)
