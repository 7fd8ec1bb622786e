"""Rederive the frozen constants used by the package and print them.

Covers:
  * the sign of the derivative term in the singlet Virasoro modes
    (coefficient of J0(n) in L(n)), selected by requiring central charge -2
    closure and commutation with the J0 modes;
  * the engine normalization constants c_k relating the generic mode engine
    on the current states a*(-k)a(-1)|0> to the direct window sums J^k(n);
  * the central polynomial in [J1(r), J0(s)];
  * the central scalar table of the matrix-unit brackets;
  * the top eigenvalue q of the weight-3 field on the default frame.

Run from the repository root:  python scripts/derive_constants.py
"""

import itertools
import random
import sys

sys.path.insert(0, "src")

from weylmod.core import Q, Vec, avar, mono, svar
from weylmod.engine import jk_state, mode_act
from weylmod.frame import DEFAULT, VACUUM
from weylmod.weylact import act_E
from weylmod.winf import act_H, act_Jk


def rand_vec(rng, max_weight=4, terms=3):
    out = Vec()
    for _ in range(terms):
        m = []
        wt = 0
        while wt < max_weight:
            v = rng.choice([avar(1), avar(2), svar(0), svar(1), avar(3), svar(2)])
            if wt + abs(v) > max_weight:
                break
            m.append((v, 1))
            wt += abs(v)
        out = out.add_scaled(Vec.term(mono(*m)), rng.randint(1, 3))
    return out


def act_L_with(kappa, n, v, F):
    """Candidate L(n) with derivative-term coefficient kappa*(n+1)."""
    out = act_Jk(1, n, v, F)
    jb = max(F.n_max, v.max_s_index(), 0) + max(F.m_max, v.max_a_index(), 0)
    for i in range(n - jb, jb + 1):
        lo, hi = min(i, n - i), max(i, n - i)
        inner = act_Jk(0, hi, v, F)
        if inner:
            out = out.add_scaled(act_Jk(0, lo, inner, F), Q(1, 2))
    out = out.add_scaled(act_Jk(0, n, v, F), kappa * (n + 1))
    return out


def main():
    rng = random.Random(11)
    vecs = [Vec.unit(), rand_vec(rng), rand_vec(rng), rand_vec(rng)]
    frames = [VACUUM, DEFAULT]

    # --- J1-J0 central polynomial -------------------------------------------
    print("[J1(r), J0(-r)] central values (noncentral part subtracted):")
    for r in range(-3, 4):
        vals = set()
        for F in frames:
            for v in vecs:
                lhs = act_Jk(1, r, act_Jk(0, -r, v, F), F) - act_Jk(
                    0, -r, act_Jk(1, r, v, F), F
                )
                # expected noncentral part of [J1(r), J0(-r)] is r*J0(0)
                lhs = lhs.add_scaled(act_Jk(0, 0, v, F), -Q(r))
                # remaining part must be scalar*v
                diff = lhs
                cands = {diff.coeff(m) / c for m, c in v.terms.items()}
                assert len(cands) == 1, (r, diff)
                sc = cands.pop()
                assert diff == sc * v
                vals.add(sc)
        assert len(vals) == 1
        got = vals.pop()
        predicted = -Q(r * r + r, 2) * Q(-1)  # -((r^2+r)/2) C2
        print("  r=%2d  value=%s  -((r^2+r)/2)C2=%s  %s"
              % (r, got, predicted, "ok" if got == predicted else "MISMATCH"))

    # --- derivative-term coefficient of L ------------------------------------
    print("\nSelecting the J0(n)-coefficient kappa*(n+1) in L(n):")
    for kappa in (Q(1, 2), Q(-1, 2)):
        bad = 0
        for F in frames:
            for v in vecs[:3]:
                for r, s in [(1, -1), (2, -2), (2, -1), (-1, 2), (3, -2)]:
                    lhs = act_L_with(kappa, r, act_L_with(kappa, s, v, F), F) - \
                        act_L_with(kappa, s, act_L_with(kappa, r, v, F), F)
                    rhs = act_L_with(kappa, r + s, v, F) * Q(r - s)
                    if r + s == 0:
                        rhs = rhs.add_scaled(v, Q(r**3 - r, 12) * Q(-2))
                    if lhs != rhs:
                        bad += 1
                for r, s in [(1, -1), (2, -2), (1, 0), (0, 1), (-2, 2)]:
                    comm = act_L_with(kappa, r, act_Jk(0, s, v, F), F) - \
                        act_Jk(0, s, act_L_with(kappa, r, v, F), F)
                    if comm:
                        bad += 1
        print("  kappa=%s: %d violations (0 means Virasoro c=-2 and [L,J0]=0)"
              % (kappa, bad))

    # --- engine constants c_k -------------------------------------------------
    print("\nEngine constants c_k (mode_act(state_k, n+k) = c_k * J^k(n)):")
    for k in range(0, 4):
        state = jk_state(k)
        consts = set()
        for F in frames:
            for v in vecs[:3]:
                for n in range(-3, 4):
                    eng = mode_act(state, n + k, v, F)
                    win = act_Jk(k, n, v, F)
                    if win.is_zero():
                        assert eng.is_zero(), (k, n)
                        continue
                    m, c = next(iter(win.terms.items()))
                    ck = eng.coeff(m) / c
                    assert eng == ck * win, (k, n)
                    consts.add(ck)
        consts.discard(None)
        assert len(consts) == 1, consts
        print("  c_%d = %s  (1/k! = %s)" % (k, consts.pop(), Q(1, [1, 1, 2, 6][k])))

    # --- central scalar table for matrix units -------------------------------
    print("\nCentral scalars of [E_{i,j}, E_{j,i}] minus (d_it E_sj - d_js E_it):")
    F = DEFAULT
    v = vecs[1]
    for i, j in itertools.product(range(-2, 3), repeat=2):
        lhs = act_E(i, j, act_E(j, i, v, F), F) - act_E(j, i, act_E(i, j, v, F), F)
        rhs = act_E(j, j, v, F) - act_E(i, i, v, F)  # transposed convention
        diff = lhs - rhs
        cands = {diff.coeff(m) / c for m, c in v.terms.items()}
        assert len(cands) == 1 and diff == cands.copy().pop() * v, (i, j)
        sc = cands.pop()
        expect = Q(-1) * ((1 if i <= 0 else 0) - (1 if j <= 0 else 0))
        flag = "ok" if sc == expect else "MISMATCH"
        if sc:
            print("  (i,j)=(%2d,%2d): scalar=%s  K*([i<=0]-[j<=0])=%s  %s"
                  % (i, j, sc, expect, flag))

    # --- weight-3 field top eigenvalue on the default frame ------------------
    n, m = DEFAULT.n_max, DEFAULT.m_max
    w = Vec.unit()
    print("\nWeight-3 field on the default frame (n=%d, m=%d):" % (n, m))
    for s in range(0, 4):
        hv = act_H(3 * n + 3 * m + s, w, DEFAULT)
        print("  H(%d) w = %s" % (3 * n + 3 * m + s, hv))


if __name__ == "__main__":
    main()
