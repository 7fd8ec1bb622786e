"""Current-algebra modes on Whittaker frames: J^k(n), the two Virasoro
families, the weight-3 singlet field, and the frozen relation table.

J^k(n) acts by the finite window sum

    J^k(n).v = sum_j f_k(-j) E_{j-n, j}.v,      f_k(x) = x(x-1)...(x-k+1)

(the falling factorial; f_0 = 1).  The singlet Virasoro modes are

    L(n) = J^1(n) + (1/2) sum_{i+k=n} :J^0(i)J^0(k): + ((n+1)/2) J^0(n)

with normal order "smaller mode index left".  The derivative-term coefficient
(n+1)/2 is golden data: it is the unique choice for which the L-modes close
with central charge -2 and commute with the J^0-modes; the rederivation lives
in scripts/derive_constants.py.

The relation table below was verified by exact commutator computation before
being frozen.  On every module arising here the two central elements act by
C1 = 2 and C2 = -1, and

    [J^0(r), J^0(s)] = r delta_{r+s,0} C2
    [J^1(r), J^0(s)] = -s J^0(r+s) - ((r^2+r)/2) delta_{r+s,0} C2
    [J^1(r), J^1(s)] = (r-s) J^1(r+s) + ((r^3-r)/12) delta_{r+s,0} C1
    [L(r),   L(s)]   = (r-s) L(r+s) + ((r^3-r)/12) delta_{r+s,0} (-2)
    [Lw(r),  Lw(s)]  = (r-s) Lw(r+s) + ((r^3-r)/12) delta_{r+s,0} (-1)
    [L(r),  J^0(s)]  = 0
"""

from __future__ import annotations

from .core import Q, Vec
from .engine import OMEGA_STATE, l_state, mode_act, w3_state
from .frame import Frame
from .weylact import act_E, act_I, e_window

C1 = Q(2)
C2 = Q(-1)


def falling(x: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= x - t
    return out


def act_Jk(k: int, n: int, v: Vec, F: Frame, pad: int = 0) -> Vec:
    """J^k(n).v by the direct window sum (transported labels on shifted frames)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0 and n == 0:
        return act_I(v, F)
    out = Vec()
    for j in e_window(n, v, F, pad):
        c = falling(-j, k)
        if c:
            term = act_E(j - n, j, v, F)
            if term:
                out = out.add_scaled(term, c)
    return out


def _j0_bound(v: Vec, F: Frame) -> int:
    """J^0(N).v = 0 for N > this bound (empty window)."""
    return max(F.n_max, v.max_s_index(), 0) + max(F.m_max, v.max_a_index(), 0)


def l_dterm_coeff(n: int) -> Q:
    """Coefficient of J^0(n) in L(n); golden data, see module docstring."""
    return Q(n + 1, 2)


def act_L(n: int, v: Vec, F: Frame, pad: int = 0) -> Vec:
    """Singlet Virasoro mode by the window formula."""
    out = act_Jk(1, n, v, F)
    jb = _j0_bound(v, F) + pad
    half = Q(1, 2)
    for i in range(n - jb, jb + 1):
        lo, hi = min(i, n - i), max(i, n - i)
        inner = act_Jk(0, hi, v, F)
        if inner.is_zero():
            continue
        out = out.add_scaled(act_Jk(0, lo, inner, F), half)
    cd = l_dterm_coeff(n)
    if cd:
        out = out.add_scaled(act_Jk(0, n, v, F), cd)
    return out


def act_Lw(n: int, v: Vec, F: Frame) -> Vec:
    """Mode of the conformal vector (central charge -1), via the engine."""
    return mode_act(OMEGA_STATE, n + 1, v, F)


def act_H(n: int, v: Vec, F: Frame) -> Vec:
    """Mode of the weight-3 singlet field, indexed so the top component of a
    weight-3 primary is H(n) at z^(-n-3)."""
    return mode_act(w3_state(), n + 2, v, F)


def act_L_engine(n: int, v: Vec, F: Frame) -> Vec:
    """Engine evaluation of the singlet Virasoro mode (cross-check path)."""
    return mode_act(l_state(), n + 1, v, F)


# ---------------------------------------------------------------------------
# relation probe
# ---------------------------------------------------------------------------

_MODE_FUNS = {
    ("J", 0): lambda n, v, F: act_Jk(0, n, v, F),
    ("J", 1): lambda n, v, F: act_Jk(1, n, v, F),
    ("L",): act_L,
    ("Lw",): act_Lw,
    ("H",): act_H,
}


def _apply(op, v, F):
    if op[0] == "J":
        return act_Jk(op[1], op[2], v, F)
    return _MODE_FUNS[(op[0],)](op[1], v, F)


def _mode_of(op):
    return op[2] if op[0] == "J" else op[1]


def expected_bracket(opA, opB, v: Vec, F: Frame) -> Vec:
    """Frozen right-hand side of [A, B].v for the supported operator pairs."""
    kA = (opA[0], opA[1]) if opA[0] == "J" else (opA[0],)
    kB = (opB[0], opB[1]) if opB[0] == "J" else (opB[0],)
    r, s = _mode_of(opA), _mode_of(opB)
    delta = r + s == 0

    if kA == ("J", 0) and kB == ("J", 0):
        return (Q(r) * C2 * v) if delta else Vec()
    if kA == ("J", 1) and kB == ("J", 0):
        out = act_Jk(0, r + s, v, F) * Q(-s)
        if delta:
            out = out.add_scaled(v, -Q(r * r + r, 2) * C2)
        return out
    if kA == ("J", 0) and kB == ("J", 1):
        return -expected_bracket(opB, opA, v, F)
    if kA == ("J", 1) and kB == ("J", 1):
        out = act_Jk(1, r + s, v, F) * Q(r - s)
        if delta:
            out = out.add_scaled(v, Q(r**3 - r, 12) * C1)
        return out
    if kA == ("L",) and kB == ("L",):
        out = act_L(r + s, v, F) * Q(r - s)
        if delta:
            out = out.add_scaled(v, Q(r**3 - r, 12) * Q(-2))
        return out
    if kA == ("Lw",) and kB == ("Lw",):
        out = act_Lw(r + s, v, F) * Q(r - s)
        if delta:
            out = out.add_scaled(v, Q(r**3 - r, 12) * Q(-1))
        return out
    if (kA, kB) in ((("L",), ("J", 0)), (("J", 0), ("L",))):
        return Vec()
    raise ValueError("no frozen relation for pair %r, %r" % (opA, opB))


def relation_probe(opA, opB, v: Vec, F: Frame) -> Vec:
    """[A, B].v minus the expected right-hand side; zero iff the relation holds on v."""
    lhs = _apply(opA, _apply(opB, v, F), F) - _apply(opB, _apply(opA, v, F), F)
    return lhs - expected_bracket(opA, opB, v, F)
