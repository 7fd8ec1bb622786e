"""Exact actions of the Weyl modes, the matrix units E_{i,j}, and the Casimir.

The module model: vectors are polynomials in a(-n) (n >= 1), a*(-m) (m >= 0)
applied to the cyclic vector w.  The defining relations give, for the
untwisted frame,

    a(k).v  = lambda_k v + d v / d a*(-k)      (k >= 0)
    a(k).v  = a(k) * v                          (k <= -1, multiplication)
    a*(k).v = mu_k v - d v / d a(-k)            (k >= 1)
    a*(k).v = a*(k) * v                         (k <= 0, multiplication)

A spectral shift s twists the action: a(k) acts as a(k+s) and a*(k) as
a*(k-s) of the untwisted module.

E_{i,j} is the normally ordered product of a(-i) and a*(j): the factor that
annihilates (in the twisted frame) is applied first; if neither annihilates
the two multiplications commute.

The Casimir I = sum_j E_{j,j} has two implementations: the finite window sum
and the closed form I.(P w) = (-charge(P)) P w + sum_k lambda_k a*(-k) P w
+ sum_k mu_k a(-k) P w; they agree exactly and the test suite enforces it.
"""

from __future__ import annotations

from .core import Vec, avar, mono_charge, svar
from .frame import Frame


def act_a(k: int, v: Vec, F: Frame) -> Vec:
    """Action of the mode a(k) on the frame F."""
    kp = k + F.shift
    if kp <= -1:
        return v.mul_var(avar(-kp))
    out = v.derive(svar(kp))
    lam = F.lam_at(kp)
    if lam:
        out = out.add_scaled(v, lam)
    return out


def act_astar(k: int, v: Vec, F: Frame) -> Vec:
    """Action of the mode a*(k) on the frame F."""
    kp = k - F.shift
    if kp <= 0:
        return v.mul_var(svar(-kp))
    out = -v.derive(avar(kp))
    mu = F.mu_at(kp)
    if mu:
        out = out.add_scaled(v, mu)
    return out


def a_kills(k: int, v: Vec, F: Frame) -> bool:
    """True when act_a(k, v, F) is provably zero (annihilation bound)."""
    kp = k + F.shift
    return kp > F.n_max and kp > v.max_s_index()


def astar_kills(k: int, v: Vec, F: Frame) -> bool:
    kp = k - F.shift
    return kp > F.m_max and kp > v.max_a_index()


def act_E(i: int, j: int, v: Vec, F: Frame) -> Vec:
    """Normally ordered product of a(-i) and a*(j), annihilator first."""
    if j - F.shift >= 1:
        return act_a(-i, act_astar(j, v, F), F)
    if i - F.shift <= 0:
        return act_astar(j, act_a(-i, v, F), F)
    # both factors create; they commute
    return act_a(-i, act_astar(j, v, F), F)


def iw_vector(F: Frame) -> Vec:
    """I.w = sum_k lambda_k a*(-k) w + sum_k mu_k a(-k) w."""
    out = Vec()
    for k, lam in enumerate(F.lam):
        if lam:
            out = out.add_scaled(Vec.term(((svar(k), 1),)), lam)
    for k1, mu in enumerate(F.mu, start=1):
        if mu:
            out = out.add_scaled(Vec.term(((avar(k1), 1),)), mu)
    return out


def act_I(v: Vec, F: Frame, path: str = "closed") -> Vec:
    """The Casimir sum of all E_{j,j}; either evaluation path, same result."""
    if path == "closed":
        out = Vec()
        for m, c in v.terms.items():
            out = out.add_scaled(Vec.term(m), -mono_charge(m) * c)
        for k, lam in enumerate(F.lam):
            if lam:
                out = out.add_scaled(v.mul_var(svar(k)), lam)
        for k1, mu in enumerate(F.mu, start=1):
            if mu:
                out = out.add_scaled(v.mul_var(avar(k1)), mu)
        return out
    if path == "window":
        out = Vec()
        for j in diag_window(v, F):
            out = out + act_E(j, j, v, F)
        return out
    raise ValueError("unknown act_I path %r" % path)


def e_window(n: int, v: Vec, F: Frame, pad: int = 0):
    """Sufficient j-range for sums of E_{j-n,j} acting on v.

    Outside the range one factor of E_{j-n,j} provably annihilates v (after
    the other, index-nonincreasing, factor acted), so the term vanishes.
    """
    s = F.shift
    hi = s + max(F.m_max, v.max_a_index(), 0)
    lo = n + s - max(F.n_max, v.max_s_index(), 0)
    return range(lo - pad, hi + pad + 1)


def diag_window(v: Vec, F: Frame, pad: int = 0):
    return e_window(0, v, F, pad)


# ---------------------------------------------------------------------------
# Whittaker property
# ---------------------------------------------------------------------------


def whittaker_residual(i: int, j: int, v: Vec, F: Frame) -> Vec:
    """(E_{-i,j} - lambda_i mu_j).v in the frame's operator labelling.

    On a shifted frame the matrix-unit labels are transported by the flow, so
    the operator applied is the untwisted E_{-i,j}.
    """
    s = F.shift
    return act_E(-i + s, j + s, v, F).add_scaled(v, -(F.lam_at(i) * F.mu_at(j)))


def whittaker_defect(v: Vec, F: Frame, i_max: int, j_max: int):
    """Residuals (E_{-i,j} - lambda_i mu_j).v over 0 <= i <= i_max, 1 <= j <= j_max.

    v is a Whittaker vector on this window iff every residual vanishes.
    Row index i runs from 0 (the i = 0 row is needed to detect a*(0)
    dependence); column index j starts at 1 because the j = 0 column of the
    commutative family never acts by a scalar on w.
    """
    if i_max < 0 or j_max < 1:
        raise ValueError("need i_max >= 0 and j_max >= 1")
    out = []
    for i in range(0, i_max + 1):
        for j in range(1, j_max + 1):
            out.append(((i, j), whittaker_residual(i, j, v, F)))
    return out


# ---------------------------------------------------------------------------
# word application
# ---------------------------------------------------------------------------


def act_op(op, v: Vec, F: Frame) -> Vec:
    """Apply one parsed operator descriptor (see textio.parse_op)."""
    kind = op[0]
    if kind == "a":
        return act_a(op[1], v, F)
    if kind == "as":
        return act_astar(op[1], v, F)
    if kind == "E":
        return act_E(op[1], op[2], v, F)
    if kind == "I":
        return act_I(v, F)
    # field operators live one layer up; import here to keep layering acyclic
    from .winf import act_H, act_Jk, act_L, act_Lw

    if kind == "J":
        return act_Jk(op[1], op[2], v, F)
    if kind == "L":
        return act_L(op[1], v, F)
    if kind == "Lw":
        return act_Lw(op[1], v, F)
    if kind == "H":
        return act_H(op[1], v, F)
    raise ValueError("unknown operator %r" % (op,))


def act_word(word, v: Vec, F: Frame) -> Vec:
    """Apply a list of operator descriptors left to right."""
    for op in word:
        v = act_op(op, v, F)
    return v
