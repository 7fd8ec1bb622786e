"""Named verification suites with seeded randomness and JSON-able reports.

Each suite function returns a list of case dicts; ``run_suite`` wraps them in
a report with deterministic content (identical config and seed give identical
reports, wall time aside).  Suite sizes are tuned so each default run stays
well under a minute; the acceptance tests drive the same functions at their
full stated sizes.
"""

from __future__ import annotations

import random
import time
from math import comb

from .core import Q, Vec, avar, enumerate_monomials, mono, mono_weight, svar
from .engine import (
    A_STATE,
    J0_STATE,
    J1_STATE,
    ONE,
    S_STATE,
    delta_mode_act,
    delta_twist,
    jk_state,
    mode_act,
    translate,
)
from .frame import DEFAULT, VACUUM, Frame, HypothesisError
from .linalg import kernel_basis, span_rank, spans_equal, vec_matrix
from .quotient import (
    act_quot,
    cyclicity_probe,
    der_a,
    der_s,
    expected_whittaker_basis,
    ipow_w,
    non_tensor_witness,
    project,
    whittaker_space,
)
from .textio import format_vec
from .weylact import act_a, act_astar, act_E, act_I, act_op, iw_vector, whittaker_defect
from .winf import act_H, act_Jk, act_L, act_L_engine, relation_probe

SCHEMA = "1"

# frames used by the multi-frame suites; all satisfy the standing hypotheses
FRAMES = [
    DEFAULT,
    Frame(lam=(1,), mu=(1, 2)),
    Frame(lam=(2, 0, 3), mu=(1,)),
    Frame(lam=(Q(1, 2), 2), mu=(0, Q(3, 2))),
    Frame(lam=(1, 1, 1), mu=(0, 1, 1)),
]
D_VALUES = (Q(3), Q(0), Q(-1, 2))


def _case(cid, ok, detail="", residual=None):
    out = {"id": cid, "ok": bool(ok), "detail": detail}
    if residual is not None:
        out["residual"] = format_vec(residual)
    return out


def _zero_case(cid, residual, detail=""):
    return _case(cid, residual.is_zero(), detail, residual)


# ---------------------------------------------------------------------------
# seeded random vectors
# ---------------------------------------------------------------------------


def rand_vec(rng, max_weight=4, max_terms=3, allow=None, nonzero=True):
    """Random sparse vector of bounded weight with small rational coefficients."""
    alphabet = [avar(n) for n in range(1, max_weight + 1)]
    alphabet += [svar(m) for m in range(0, max_weight)]
    if allow is not None:
        alphabet = [v for v in alphabet if allow(v)]
    out = Vec()
    for _ in range(rng.randint(1, max_terms)):
        pairs, wt = [], 0
        for _ in range(rng.randint(0, 4)):
            v = rng.choice(alphabet)
            if wt + abs(v) > max_weight:
                continue
            pairs.append((v, 1))
            wt += abs(v)
        coeff = Q(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
        out = out.add_scaled(Vec.term(mono(*pairs)), coeff)
    if nonzero and out.is_zero():
        out = Vec.unit()
    return out


def poly_mul(p: Vec, v: Vec) -> Vec:
    """Multiply v by the creation polynomial p (termwise variable products)."""
    out = Vec()
    for m, c in p.terms.items():
        t = v
        for var, e in m:
            t = t.mul_var(var, e)
        out = out.add_scaled(t, c)
    return out


def ishift_poly(k: int, step: int, F: Frame) -> Vec:
    """(I + step)^k w expanded through the Casimir powers."""
    out = Vec()
    for t in range(k + 1):
        out = out.add_scaled(ipow_w(t, F), comb(k, t) * step ** (k - t))
    return out


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_weyl(F: Frame, seed: int, n_vectors: int = 40, max_weight: int = 6):
    rng = random.Random(seed)
    cases = []
    for t in range(n_vectors):
        v = rand_vec(rng, max_weight)
        k = rng.randint(-3, 3)
        ln = rng.randint(-3, 3)
        lhs = act_a(k, act_astar(ln, v, F), F) - act_astar(ln, act_a(k, v, F), F)
        rhs = v if k + ln == 0 else Vec()
        cases.append(_zero_case("weyl-%03d" % t, lhs - rhs,
                                "[a(%d), a*(%d)] = delta" % (k, ln)))
    for s in (-1, 1):
        Fs = F.with_shift(s)
        v = rand_vec(rng, 4)
        oka = all(act_a(k, v, Fs) == act_a(k + s, v, F) for k in range(-3, 4))
        oks = all(act_astar(k, v, Fs) == act_astar(k - s, v, F) for k in range(-3, 4))
        cases.append(_case("weyl-shift-%+d" % s, oka and oks,
                           "shift covariance of the mode actions"))
    return cases


def suite_glhat(F: Frame, seed: int, n_vectors: int = 25, max_weight: int = 6):
    rng = random.Random(seed)
    cases = []
    for t in range(n_vectors):
        v = rand_vec(rng, max_weight)
        i = rng.randint(-2, 3)
        j = rng.randint(-2, 3)
        m = rng.randint(0, 3)
        # adjoint action on the generators (transposed-sign convention)
        lhs = act_E(i, j, act_a(-m, v, F), F) - act_a(-m, act_E(i, j, v, F), F)
        rhs = -act_a(-i, v, F) if j == m else Vec()
        cases.append(_zero_case("glhat-a-%03d" % t, lhs - rhs,
                                "[E_{%d,%d}, a(-%d)] = -delta a(-i)" % (i, j, m)))
        lhs = act_E(i, j, act_astar(m, v, F), F) - act_astar(m, act_E(i, j, v, F), F)
        rhs = act_astar(j, v, F) if i == m else Vec()
        cases.append(_zero_case("glhat-as-%03d" % t, lhs - rhs,
                                "[E_{%d,%d}, a*(%d)] = +delta a*(j)" % (i, j, m)))
    # central scalar table of [E_{i,j}, E_{s,t}] minus the matrix-unit part
    v = rand_vec(rng, 4)
    table = {}
    okpat = True
    for i in range(-2, 3):
        for j in range(-2, 3):
            for (s_, t_) in [(j, i), (j, i + 1), (i, j)]:
                lhs = act_E(i, j, act_E(s_, t_, v, F), F) - act_E(s_, t_, act_E(i, j, v, F), F)
                rhs = Vec()
                if j == s_:
                    rhs = rhs - act_E(i, t_, v, F)
                if i == t_:
                    rhs = rhs + act_E(s_, j, v, F)
                diff = lhs - rhs
                if diff.is_zero():
                    sc = Q(0)
                else:
                    ratios = {diff.coeff(m_) / c for m_, c in v.terms.items()}
                    if len(ratios) != 1 or diff != next(iter(ratios)) * v:
                        okpat = False
                        continue
                    sc = ratios.pop()
                if (s_, t_) == (j, i):
                    table[(i, j)] = sc
                elif sc:
                    okpat = False
    cases.append(_case("glhat-bracket-scalar", okpat,
                       "bracket defect is scalar, supported on (s,t)=(j,i)"))
    K = Q(-1)
    okval = all(
        sc == K * ((1 if i <= 0 else 0) - (1 if j <= 0 else 0))
        for (i, j), sc in table.items()
    )
    oksym = all(table[(i, j)] == -table[(j, i)] for (i, j) in table)
    cases.append(_case("glhat-central-K", okval and oksym,
                       "central table antisymmetric, values K*([i<=0]-[j<=0]), K=-1"))
    return cases


def suite_casimir(F: Frame, seed: int, max_weight: int = 6, frames=None):
    rng = random.Random(seed)
    cases = []
    for t, m in enumerate(enumerate_monomials(max_weight)):
        v = Vec.term(m)
        diff = act_I(v, F, "closed") - act_I(v, F, "window")
        if not diff.is_zero():
            cases.append(_zero_case("casimir-paths-%04d" % t, diff))
    cases.append(_case("casimir-paths", True,
                       "both Casimir paths agree on all %d basis vectors of weight <= %d"
                       % (len(enumerate_monomials(max_weight)), max_weight)))
    for t in range(8):
        v = rand_vec(rng, 5)
        n = rng.randint(-3, 3)
        r1 = act_a(n, act_I(v, F), F) - act_I(act_a(n, v, F), F) - act_a(n, v, F)
        cases.append(_zero_case("casimir-a-%02d" % t, r1, "[a(n), I] = a(n)"))
        r2 = act_astar(n, act_I(v, F), F) - act_I(act_astar(n, v, F), F) + act_astar(n, v, F)
        cases.append(_zero_case("casimir-as-%02d" % t, r2, "[a*(n), I] = -a*(n)"))
        i, j = rng.randint(-2, 2), rng.randint(-2, 2)
        r3 = act_E(i, j, act_I(v, F), F) - act_I(act_E(i, j, v, F), F)
        cases.append(_zero_case("casimir-E-%02d" % t, r3, "[E, I] = 0"))
    for fi, Fx in enumerate(frames or FRAMES):
        diff = act_I(Vec.unit(), Fx) - iw_vector(Fx)
        cases.append(_zero_case("casimir-Iw-frame%d" % fi, diff,
                                "I.w matches the functional display"))
    v = rand_vec(rng, 4)
    stable = act_I(v, F, "window") == _act_I_padded(v, F, 2)
    cases.append(_case("casimir-window-stable", stable,
                       "enlarging the diagonal window does not change I.v"))
    return cases


def _act_I_padded(v, F, pad):
    from .weylact import diag_window

    out = Vec()
    for j in diag_window(v, F, pad):
        out = out + act_E(j, j, v, F)
    return out


def suite_lemmas(F: Frame, seed: int, n_phi: int = 20, frames=None, k_max: int = 4):
    rng = random.Random(seed)
    cases = []
    for fi, Fx in enumerate(frames or FRAMES[:3]):
        for n in range(0, Fx.n_max + 2):
            for k in range(0, k_max + 1):
                lhs = act_a(n, ipow_w(k, Fx), Fx)
                rhs = Fx.lam_at(n) * ishift_poly(k, 1, Fx)
                cases.append(_zero_case("lemma-a-f%d-n%d-k%d" % (fi, n, k), lhs - rhs,
                                        "a(n) I^k w = lambda_n (I+1)^k w"))
        for n in range(0, Fx.m_max + 1):
            for k in range(0, k_max + 1):
                lhs = act_astar(n + 1, ipow_w(k, Fx), Fx)
                rhs = Fx.mu_at(n + 1) * ishift_poly(k, -1, Fx)
                cases.append(_zero_case("lemma-as-f%d-n%d-k%d" % (fi, n, k), lhs - rhs,
                                        "a*(n+1) I^k w = mu_{n+1} (I-1)^k w"))
    # derivation lemmas on pivot-free polynomials
    for fi, Fx in enumerate(frames or FRAMES[:3]):
        i0 = Fx.pivot_i0()
        piv = svar(i0)
        for t in range(n_phi):
            phi = rand_vec(rng, 4, 2, allow=lambda v: v != piv)
            k = rng.randint(0, 3)
            p = rng.randint(1, 3)
            lhs = der_a(p, poly_mul(phi, ipow_w(k, Fx)), Fx)
            rhs = poly_mul(phi.derive(avar(p)), ishift_poly(k, 1, Fx))
            cases.append(_zero_case("lemma-derA-f%d-%02d" % (fi, t), lhs - rhs,
                                    "DerA(p) Phi I^k w = dPhi/da(-p) (I+1)^k w"))
            phis = rand_vec(rng, 4, 2, allow=lambda v: v < 0 and v != piv)
            ps = rng.choice([m for m in range(0, 4) if m != i0])
            lhs = der_s(ps, poly_mul(phis, ipow_w(k, Fx)), Fx)
            rhs = poly_mul(phis.derive(svar(ps)), ishift_poly(k, -1, Fx))
            cases.append(_zero_case("lemma-derS-f%d-%02d" % (fi, t), lhs - rhs,
                                    "DerS(p) Phi* I^k w = dPhi*/da*(-p) (I-1)^k w"))
    return cases


def suite_whittaker(F: Frame, seed: int, weights=(2, 4), **_):
    cases = []
    wi = iw_vector(F).weight()
    for mw in weights:
        res = whittaker_space(F, mw)
        predicted = mw // wi + 1
        expected = expected_whittaker_basis(F, mw)
        cases.append(_case("whittaker-dim-w%d" % mw, res.dimension == predicted,
                           "solver dimension %d, predicted %d" % (res.dimension, predicted)))
        cases.append(_case("whittaker-span-w%d" % mw, spans_equal(res.basis, expected),
                           "solution space equals the Casimir-power span"))
        cases.append(_case("whittaker-stable-w%d" % mw, res.stable,
                           "window-stable under enlargement"))
    try:
        whittaker_space(Frame(lam=(), mu=(1,)), 2)
        cases.append(_case("whittaker-hypothesis", False, "degenerate frame accepted"))
    except HypothesisError as e:
        cases.append(_case("whittaker-hypothesis", True, "rejected: %s" % e))
    return cases


def suite_quotient(F: Frame, seed: int, n_vectors: int = 12, frames=None,
                   d_values=D_VALUES, shifts=(0, 1, -1), max_weight: int = 5):
    rng = random.Random(seed)
    cases = []
    frames = list(frames or FRAMES[:3])
    # the defining submodule maps to zero
    for di, d in enumerate(d_values):
        for k in range(0, 3):
            v = act_I(ipow_w(k, F), F) - Q(d) * ipow_w(k, F)
            cases.append(_zero_case("quotient-submodule-d%d-k%d" % (di, k),
                                    project(v, d, F), "(I-d) I^k w projects to 0"))
    # projection commutes with the Casimir-commuting operators; I acts as d
    # (single Weyl modes carry charge and do not descend to the quotient)
    ops = [("I",), ("E", 1, 1), ("E", 0, 0), ("E", -1, 2), ("E", 2, -1),
           ("J", 0, 1), ("J", 0, -1), ("J", 1, 0), ("J", 1, -2)]
    d = Q(3)
    for t in range(8):
        v = rand_vec(rng, 4)
        op = rng.choice(ops)
        lhs = project(act_op(op, v, F), d, F)
        rhs = act_quot(op, project(v, d, F), d, F)
        cases.append(_zero_case("quotient-sound-%02d" % t, lhs - rhs,
                                "projection commutes with %s" % (op,)))
    for t in range(4):
        q = project(rand_vec(rng, 4), d, F)
        diff = act_quot(("I",), q, d, F) - d * q
        cases.append(_zero_case("quotient-central-%d" % t, diff, "I = d on the quotient"))
    # cyclicity certificates
    cid = 0
    for fi, Fx in enumerate(frames):
        for s in shifts:
            Fs = Fx.with_shift(s)
            for d in d_values:
                for _ in range(max(1, n_vectors // (len(frames) * len(shifts) * len(d_values)))):
                    q = project(rand_vec(rng, max_weight), d, Fs)
                    if q.is_zero():
                        q = project(Vec.unit(), d, Fs)
                    pr = cyclicity_probe(q, d, Fs)
                    cases.append(_case("quotient-cyclic-%03d" % cid, pr.ok,
                                       "f%d s=%+d d=%s sigma=%s retries=%d"
                                       % (fi, s, d, pr.sigma, pr.retries)))
                    cid += 1
    # non-tensor-product witness
    for fi, Fx in enumerate([F, FRAMES[4]]):
        rep = non_tensor_witness(Fx, Q(3))
        cases.append(_case("quotient-witness-f%d" % fi, rep["ok"],
                           "rank %d of expected %d (extended %d)"
                           % (rep["rank"], rep["expected"], rep["rank_extended"])))
    try:
        non_tensor_witness(Frame(lam=(1,), mu=(1,)), Q(3))
        cases.append(_case("quotient-witness-hyp", False, "n_max=0 accepted"))
    except HypothesisError as e:
        cases.append(_case("quotient-witness-hyp", True, "rejected: %s" % e))
    return cases


def suite_hvir(F: Frame, seed: int, n_vectors: int = 30, max_weight: int = 6,
               pbw_weight: int = 4):
    rng = random.Random(seed)
    cases = []
    pairs = [(("J", 0), ("J", 0)), (("J", 1), ("J", 0)),
             (("J", 0), ("J", 1)), (("J", 1), ("J", 1))]
    for t in range(n_vectors):
        v = rand_vec(rng, max_weight)
        (ka, _), (kb, _) = rng.choice(pairs), rng.choice(pairs)
        ra, rb = rng.randint(-3, 3), rng.randint(-3, 3)
        opA = ("J", rng.choice([0, 1]), ra)
        opB = ("J", rng.choice([0, 1]), rb)
        res = relation_probe(opA, opB, v, F)
        cases.append(_zero_case("hvir-%03d" % t, res,
                                "relation [%s, %s]" % (opA, opB)))
    cases.extend(_rel_pattern_cases(F))
    cases.extend(_pbw_cases(F, pbw_weight))
    return cases


def _rel_pattern_cases(F: Frame):
    """The boundary eigenvalue pattern of the current and Virasoro-current modes."""
    cases = []
    w = Vec.unit()
    n, m = F.n_max, F.m_max

    def a_scalar(i):
        return sum(
            (F.lam_at(n + i - j) * F.mu_at(j) for j in range(1, m + 1)), Q(0)
        )

    def b_scalar(i):
        N = n + i - 1
        return sum(
            (Q(-j) * F.lam_at(N - j) * F.mu_at(j) for j in range(1, m + 1)), Q(0)
        )

    for s in (1, 2, 3):
        cases.append(_zero_case("rel0-J0-s%d" % s, act_Jk(0, n + m + s, w, F),
                                "J0(n+m+s) w = 0"))
        cases.append(_zero_case("rel0-J1-s%d" % s, act_Jk(1, n + m + s, w, F),
                                "J1(n+m+s) w = 0"))
    ok_a = True
    for i in range(1, m + 1):
        if act_Jk(0, n + i, w, F) != a_scalar(i) * w:
            ok_a = False
    cases.append(_case("rel1-J0-scalars", ok_a, "J0(n+i) w = a_i w for i = 1..m"))
    cases.append(_case("rel1-am-nonzero", a_scalar(m) != 0, "a_m != 0"))
    ok_b = True
    for i in range(1, m + 2):
        if act_Jk(1, n + i - 1, w, F) != b_scalar(i) * w:
            ok_b = False
    cases.append(_case("rel2-J1-scalars", ok_b, "J1(n+i-1) w = b_i w for i = 1..m+1"))
    cases.append(_case("rel2-bm1-nonzero", b_scalar(m + 1) != 0, "b_{m+1} != 0"))
    bound_a = act_Jk(0, n, w, F)
    bound_b = act_Jk(1, n - 1, w, F)
    cases.append(_case("rel-boundary", not _proportional(bound_a, w)
                       and not _proportional(bound_b, w),
                       "J0(n) w and J1(n-1) w are not proportional to w"))
    return cases


def _proportional(v: Vec, w: Vec) -> bool:
    return span_rank([v, w]) <= 1


def _pbw_words(F: Frame, cost_max: int):
    """Multisets in the complement generators with total top-weight <= cost_max."""
    wi = iw_vector(F).weight()
    gens = []
    for r in range(F.n_max, F.n_max - cost_max, -1):
        c = wi - r
        if 1 <= c <= cost_max:
            gens.append((("J", 0, r), c))
    for r in range(F.n_max - 1, F.n_max - 1 - cost_max, -1):
        c = wi - r
        if 1 <= c <= cost_max:
            gens.append((("J", 1, r), c))
    words = []

    def fill(idx, rem, acc):
        words.append(tuple(acc))
        for t in range(idx, len(gens)):
            op, c = gens[t]
            if c <= rem:
                acc.append(op)
                fill(t, rem - c, acc)
                acc.pop()

    fill(0, cost_max, [])
    return sorted(set(words))


def _apply_word(word, F: Frame) -> Vec:
    v = Vec.unit()
    for op in reversed(word):
        v = act_op(op, v, F)
    return v


def _pbw_cases(F: Frame, D: int):
    cases = []
    words = _pbw_words(F, D)
    images = [_apply_word(wd, F) for wd in words]
    cases.append(_case("pbw-independent", span_rank(images) == len(words),
                       "%d ordered words in the complement generators are independent"
                       % len(words)))
    # typicality: the span of current-algebra words fills each weight level
    for Dx in range(1, D + 1):
        target = len(enumerate_monomials(Dx))
        got, used_cost = _span_truncation_dim(F, Dx, Dx + 4)
        cases.append(_case("pbw-typicality-d%d" % Dx, got == target,
                           "weight<=%d truncation: dimension %d of %d (word cost <= %d)"
                           % (Dx, got, target, used_cost)))
    return cases


def _span_truncation_dim(F: Frame, D: int, cost_cap: int):
    target = len(enumerate_monomials(D))
    for cost in range(D, cost_cap + 1):
        words = _pbw_words(F, cost)
        images = [_apply_word(wd, F) for wd in words]
        monos, rows = vec_matrix(images)
        high = [ci for ci, m in enumerate(monos) if mono_weight(m) > D]
        cols = list(zip(*rows)) if rows else []
        constraints = [list(cols[ci]) for ci in high]
        coeffs = kernel_basis(constraints, len(words))
        low_vecs = []
        for cv in coeffs:
            acc = Vec()
            for c, img in zip(cv, images):
                acc = acc.add_scaled(img, c)
            low_vecs.append(acc)
        dim = span_rank(low_vecs)
        if dim == target:
            return dim, cost
    return dim, cost_cap


def suite_singlet(F: Frame, seed: int, n_vectors: int = 6, frames=None, **_):
    rng = random.Random(seed)
    cases = []
    one = Vec.unit()
    grid = [(1, -1), (2, -2), (2, -1), (-1, 2), (3, -2), (0, 2), (-2, 1)]
    for t in range(n_vectors):
        v = rand_vec(rng, 4, 2)
        r, s = grid[t % len(grid)]
        for Fx, tag in ((VACUUM, "vac"), (F, "frame")):
            cases.append(_zero_case("singlet-LL-%s-%02d" % (tag, t),
                                    relation_probe(("L", r), ("L", s), v, Fx),
                                    "[L(%d), L(%d)] closes at c=-2" % (r, s)))
            cases.append(_zero_case("singlet-LwLw-%s-%02d" % (tag, t),
                                    relation_probe(("Lw", r), ("Lw", s), v, Fx),
                                    "[Lw(%d), Lw(%d)] closes at c=-1" % (r, s)))
            cases.append(_zero_case("singlet-LJ0-%s-%02d" % (tag, t),
                                    relation_probe(("L", r), ("J", 0, s), v, Fx),
                                    "[L, J0] = 0"))
    rel = (Q(3, 4) * act_H(-6, one, VACUUM)
           - act_L(-2, act_H(-4, one, VACUUM), VACUUM)
           + Q(3, 2) * act_L(-3, act_H(-3, one, VACUUM), VACUUM))
    cases.append(_zero_case("singlet-relation", rel,
                            "3/4 H(-6)1 - L(-2)H(-4)1 + 3/2 L(-3)H(-3)1 = 0"))
    cases.append(_case("singlet-H-vacuum", all(
        act_H(nn, one, VACUUM).is_zero() for nn in range(1, 5)),
        "H(n) 1 = 0 for n >= 1"))
    cases.append(_zero_case("singlet-L0-vacuum", act_L(0, one, VACUUM),
                            "L(0) 1 = 0"))
    for fi, Fx in enumerate(frames or [F, FRAMES[4], Frame(lam=(Q(1, 2),), mu=(2,))]):
        n, m = Fx.n_max, Fx.m_max
        top = act_H(3 * n + 3 * m, Vec.unit(), Fx)
        q = top.coeff(())
        okq = (not top.is_zero()) and top == q * Vec.unit() and q != 0
        okzero = all(act_H(3 * n + 3 * m + s, Vec.unit(), Fx).is_zero()
                     for s in (1, 2, 3))
        cases.append(_case("singlet-H-pattern-f%d" % fi, okq and okzero,
                           "H(3n+3m) w = %s w, zero above" % q))
        if fi == 0 and Fx == DEFAULT:
            cases.append(_case("singlet-H-golden", q == Q(-10),
                               "golden top eigenvalue on the default frame"))
    return cases


def suite_spectral(F: Frame, seed: int, **_):
    rng = random.Random(seed)
    cases = []
    for s in (-2, -1, 1, 2):
        dt = delta_twist(J0_STATE, s)
        expect = [(-1, Q(s) * ONE), (0, J0_STATE)] if s else [(0, J0_STATE)]
        cases.append(_case("spectral-J0-twist-%+d" % s, dt == expect,
                           "twisted current is J0(z) + s z^-1 Id"))
    one_tw = delta_twist(ONE, 3)
    cases.append(_case("spectral-vacuum-twist", one_tw == [(0, ONE)],
                       "the vacuum is twist-invariant"))
    for s in (-1, 1):
        Fs = F.with_shift(s)
        ok = True
        for n in range(-2, 3):
            v = rand_vec(rng, 3, 2)
            if mode_act(J1_STATE, n, v, Fs) != delta_mode_act(J1_STATE, n, v, F, s):
                ok = False
        cases.append(_case("spectral-J1-modes-%+d" % s, ok,
                           "twisted engine equals the twisted mode sum"))
        res = whittaker_defect(Vec.unit(), Fs, 2, 2)
        cases.append(_case("spectral-defect-%+d" % s,
                           all(r.is_zero() for _, r in res),
                           "w stays a Whittaker vector on the shifted frame"))
        sol = whittaker_space(Fs, 2)
        cases.append(_case("spectral-solver-%+d" % s,
                           sol.stable and spans_equal(
                               sol.basis, expected_whittaker_basis(Fs, 2)),
                           "solver transports under the flow"))
    return cases


def suite_crosscheck(F: Frame, seed: int, max_weight: int = 4, k_max: int = 3,
                     n_range: int = 3, **_):
    rng = random.Random(seed)
    cases = []
    basis = [Vec.term(m) for m in enumerate_monomials(max_weight)]
    sample = basis if len(basis) <= 24 else rng.sample(basis, 24)
    from math import factorial

    for k in range(0, k_max + 1):
        state = jk_state(k)
        ck = Q(1, factorial(k))
        ok = True
        for n in range(-n_range, n_range + 1):
            for v in sample:
                if mode_act(state, n + k, v, F) != ck * act_Jk(k, n, v, F):
                    ok = False
        cases.append(_case("cross-ck-%d" % k, ok,
                           "engine reproduces the window sum with c_%d = %s" % (k, ck)))
    v = rand_vec(rng, 4)
    cases.append(_case("cross-base-A", all(
        mode_act(A_STATE, k, v, F) == act_a(k, v, F) for k in range(-3, 4)),
        "A-state modes are the a(k)"))
    cases.append(_case("cross-base-S", all(
        mode_act(S_STATE, k, v, F) == act_astar(k + 1, v, F) for k in range(-3, 4)),
        "S-state modes are the a*(k+1)"))
    cases.append(_case("cross-base-one", mode_act(ONE, -1, v, F) == v
                       and mode_act(ONE, 0, v, F).is_zero(),
                       "vacuum modes are delta_{n,-1}"))
    cases.append(_zero_case("cross-J0-I", mode_act(J0_STATE, 0, v, F) - act_I(v, F),
                            "current zero mode is the Casimir"))
    ok = True
    for n in range(-2, 3):
        if act_L_engine(n, v, F) != act_L(n, v, F):
            ok = False
    cases.append(_case("cross-L-engine", ok, "engine and window Virasoro modes agree"))
    for u, tag in ((J0_STATE, "J0"), (jk_state(2), "J2")):
        tu = translate(u)
        ok = all(
            mode_act(tu, n, v, F) == Q(-n) * mode_act(u, n - 1, v, F)
            for n in range(-2, 3)
        )
        cases.append(_case("cross-T-%s" % tag, ok,
                           "translation covariance (Tu)_(n) = -n u_(n-1)"))
    pad_ok = True
    for n in range(-2, 3):
        if act_Jk(0, n, v, F, pad=2) != act_Jk(0, n, v, F):
            pad_ok = False
        if act_Jk(1, n, v, F, pad=2) != act_Jk(1, n, v, F):
            pad_ok = False
        if act_L(n, v, F, pad=2) != act_L(n, v, F):
            pad_ok = False
    cases.append(_case("cross-window-stable", pad_ok,
                       "all mode windows are stable under enlargement"))
    return cases


def suite_gl2l(F: Frame, seed: int, n_vectors: int = 20, n_probe: int = 25, **_):
    from . import glfinite as gl

    rng = random.Random(seed)
    cases = []
    frames = [gl.GlFrame(1, (1,), (2,)), gl.GlFrame(2, (1, Q(1, 2)), (0, 3))]

    def frand(G, max_deg=3, terms=3):
        out = {}
        for _ in range(terms):
            pairs = []
            for _ in range(rng.randint(0, max_deg)):
                pairs.append((rng.randint(1, 2 * G.ell), 1))
            out = gl.fadd(out, {gl.fmono(*pairs): Q(1)},
                          rng.choice([-2, -1, 1, 2]))
        return out or dict(gl.FW)

    for gi, G in enumerate(frames):
        ell = G.ell
        for t in range(n_vectors):
            v = frand(G)
            i, j = rng.randint(1, 2 * ell), rng.randint(1, 2 * ell)
            lhs = gl.act_gen_fin("a", i, gl.act_gen_fin("as", j, v, G), G)
            rhs = gl.act_gen_fin("as", j, gl.act_gen_fin("a", i, v, G), G)
            diff = gl.fadd(lhs, rhs, -1)
            expect = v if i == j else {}
            cases.append(_case("gl2l-weyl-l%d-%02d" % (ell, t),
                               gl.fadd(diff, expect, -1) == {},
                               "[a_%d, a*_%d] = delta" % (i, j)))
        # transposed matrix-unit bracket, no central term
        ok = True
        v = frand(G)
        for i in range(1, 2 * ell + 1):
            for j in range(1, 2 * ell + 1):
                for k in range(1, 2 * ell + 1):
                    for l in range(1, 2 * ell + 1):
                        lhs = gl.fadd(
                            gl.act_e_fin(i, j, gl.act_e_fin(k, l, v, G), G),
                            gl.act_e_fin(k, l, gl.act_e_fin(i, j, v, G), G), -1)
                        rhs = {}
                        if i == l:
                            rhs = gl.fadd(rhs, gl.act_e_fin(k, j, v, G), 1)
                        if j == k:
                            rhs = gl.fadd(rhs, gl.act_e_fin(i, l, v, G), -1)
                        if gl.fadd(lhs, rhs, -1) != {}:
                            ok = False
        cases.append(_case("gl2l-bracket-l%d" % ell, ok,
                           "matrix-unit brackets close with no central term"))
        # Whittaker property and the Casimir display
        w = dict(gl.FW)
        okw = True
        for i in range(1, ell + 1):
            for j in range(1, ell + 1):
                got = gl.act_e_fin(i, ell + j, w, G)
                if gl.fadd(got, w, -G.alpha_at(i) * G.beta_at(j)) != {}:
                    okw = False
        cases.append(_case("gl2l-whittaker-l%d" % ell, okw,
                           "e_{i,l+j} w = alpha_i beta_j w"))
        diff = gl.fadd(gl.act_I_fin(w, G), gl.iw_fin(G), -1)
        cases.append(_case("gl2l-Iw-l%d" % ell, diff == {},
                           "I w matches the functional display"))
        v = frand(G)
        cases.append(_case("gl2l-Ipaths-l%d" % ell,
                           gl.act_I_fin(v, G) == gl.act_I_fin(v, G, "window"),
                           "both Casimir paths agree"))
        ok = True
        for t in range(4):
            v = frand(G)
            i, j = rng.randint(1, 2 * ell), rng.randint(1, 2 * ell)
            lhs = gl.act_e_fin(i, j, gl.act_I_fin(v, G), G)
            rhs = gl.act_I_fin(gl.act_e_fin(i, j, v, G), G)
            if lhs != rhs:
                ok = False
        cases.append(_case("gl2l-central-l%d" % ell, ok, "[e_{i,j}, I] = 0"))
        # quotient probes
        okp = True
        for t in range(n_probe):
            G.require_nondegenerate()
            d = rng.choice(D_VALUES)
            q = gl.quotient_fin(frand(G), d, G)
            if not q:
                q = dict(gl.FW)
            sigma = gl.cyclicity_probe_fin(q, d, G)
            if not sigma:
                okp = False
        cases.append(_case("gl2l-cyclic-l%d" % ell, okp,
                           "%d random classes reduce to nonzero multiples of [w]"
                           % n_probe))
        # solver
        sols = gl.whittaker_space_fin(G, 3)
        iws = []
        v = dict(gl.FW)
        for _ in range(4):
            iws.append(v)
            v = gl.act_I_fin(v, G)
        okd = len(sols) == 4 and gl.fin_span_rank(sols + iws) == 4
        cases.append(_case("gl2l-solver-l%d" % ell, okd,
                           "degree-3 solver returns exactly the Casimir-power span"))
    diff = gl.fadd(gl.quotient_fin(gl.fadd(gl.iw_fin(frames[0]), gl.FW, -Q(3)),
                                   Q(3), frames[0]), {}, -1)
    cases.append(_case("gl2l-submodule", diff == {}, "(I-d) w projects to zero"))
    return cases


SUITES = {
    "weyl": suite_weyl,
    "glhat": suite_glhat,
    "casimir": suite_casimir,
    "lemmas": suite_lemmas,
    "whittaker": suite_whittaker,
    "quotient": suite_quotient,
    "hvir": suite_hvir,
    "singlet": suite_singlet,
    "spectral": suite_spectral,
    "gl2l": suite_gl2l,
    "crosscheck": suite_crosscheck,
}


def run_suite(name: str, F: Frame = DEFAULT, seed: int = 0, **params) -> dict:
    """Run one named suite (or 'all') and assemble the deterministic report."""
    t0 = time.monotonic()
    if name == "all":
        subs = [run_suite(k, F, seed, **params) for k in sorted(SUITES)]
        cases = []
        for sub in subs:
            cases.extend(sub["cases"])
        report = _assemble("all", F, seed, params, cases, t0)
        return report
    if name not in SUITES:
        raise KeyError("unknown suite %r (choose from %s, all)"
                       % (name, ", ".join(sorted(SUITES))))
    fun = SUITES[name]
    import inspect

    accepted = inspect.signature(fun).parameters
    kwargs = {k: v for k, v in params.items()
              if k in accepted and v is not None}
    cases = fun(F, seed, **kwargs)
    return _assemble(name, F, seed, params, cases, t0)


def _assemble(name, F, seed, params, cases, t0):
    cases = sorted(cases, key=lambda c: c["id"])
    failed = [c for c in cases if not c["ok"]]
    return {
        "schema": SCHEMA,
        "suite": name,
        "frame": F.summary(),
        "seed": seed,
        "params": {k: str(v) for k, v in sorted(params.items()) if v is not None},
        "cases": cases,
        "n_cases": len(cases),
        "n_failed": len(failed),
        "ok": not failed,
        "wall_time_ms": int((time.monotonic() - t0) * 1000),
    }
