"""Generic vertex-operator mode engine over the vacuum module.

A VacState is a Vec over the vacuum frame; the empty monomial is the vacuum.
``mode_act(u, n, v, F)`` evaluates the n-th mode of the field of u on a
vector v of any frame, by the iterate recursion

    (g_(-k) u')_(n) = sum_{j>=0} C(k+j-1, j) *
        ( g_(-k-j) u'_(n+j)  -  (-1)^k  u'_(n-k-j) g_(j) )

with base cases 1_(n) = delta_{n,-1} id, A_(j) = a(j) for the generator
A = a(-1)|0>, and S_(j) = a*(j+1) for S = a*(0)|0>.  Both sums terminate on
restricted vectors: generator modes of index >= B(v) annihilate v, and an
induction over the factor count gives u_(N) v = 0 once

    N >= wt(u) + nfactors(u) * (B(v) + 1),

where B never grows under nonnegative generator modes.  The recursion
enforces this bound; exceeding the guard would indicate a convention bug.

Results are memoized per frame on (state monomial, mode, vector monomial);
the cache is read-mostly and safe under the usual dict-access atomicity.
"""

from __future__ import annotations

from math import comb

from .core import ONE_MONO, Q, Vec, avar, mono, mono_weight, svar
from .frame import Frame, VACUUM
from .weylact import act_a, act_astar

_GUARD = 100000


def _gen_bounds(v: Vec, F: Frame):
    """(B_A, B_S): generator modes g_(l) kill v for l >= bound."""
    s = F.shift
    ba = max(F.n_max, v.max_s_index()) - s + 1
    bs = max(F.m_max, v.max_a_index()) + s
    return ba, bs


class ModeEngine:
    """Mode evaluator for one frame, with memoized monomial recursion."""

    def __init__(self, F: Frame):
        self.F = F
        self._memo = {}

    def act(self, u: Vec, n: int, v: Vec) -> Vec:
        out = Vec()
        for um, cu in u.terms.items():
            for vm, cv in v.terms.items():
                out = out.add_scaled(self._mono(um, n, vm), cu * cv)
        return out

    def _apply_gen(self, gvar: int, j: int, v: Vec) -> Vec:
        # A_(j) = a(j); S_(j) = a*(j+1)
        if gvar > 0:
            return act_a(j, v, self.F)
        return act_astar(j + 1, v, self.F)

    def _mono(self, um, n: int, vm) -> Vec:
        key = (um, n, vm)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if um == ONE_MONO:
            res = Vec.term(vm) if n == -1 else Vec()
            self._memo[key] = res
            return res

        gvar, gexp = um[0]
        rest = ((gvar, gexp - 1),) + um[1:] if gexp > 1 else um[1:]
        k = abs(gvar)  # weight of the pulled factor: a(-p) -> p, a*(-m) -> m+1
        w_rest = mono_weight(rest)
        p_rest = sum(e for _, e in rest)

        vvec = Vec.term(vm)
        ba, bs = _gen_bounds(vvec, self.F)
        beta = max(ba, bs, 0)
        cutoff = w_rest + p_rest * (beta + 1)  # u'_(N) vm = 0 for N >= cutoff

        res = Vec()
        j = 0
        while n + j < cutoff:
            if j > _GUARD:
                raise RuntimeError("mode recursion exceeded annihilation bound")
            coef = comb(k + j - 1, j)
            inner = self._mono(rest, n + j, vm)
            if inner:
                res = res.add_scaled(self._apply_gen(gvar, -k - j, inner), coef)
            j += 1

        sign = -1 if k % 2 else 1
        gbound = ba if gvar > 0 else bs
        for j in range(0, max(gbound, 0)):
            wj = self._apply_gen(gvar, j, vvec)
            if wj.is_zero():
                continue
            coef = -sign * comb(k + j - 1, j)
            acc = Vec()
            for wm, cw in wj.terms.items():
                acc = acc.add_scaled(self._mono(rest, n - k - j, wm), cw)
            res = res.add_scaled(acc, coef)

        self._memo[key] = res
        return res


_ENGINES: dict[Frame, ModeEngine] = {}


def get_engine(F: Frame) -> ModeEngine:
    eng = _ENGINES.get(F)
    if eng is None:
        eng = _ENGINES[F] = ModeEngine(F)
    return eng


def mode_act(u: Vec, n: int, v: Vec, F: Frame) -> Vec:
    """n-th mode of the field of the vacuum state u, acting on v over F."""
    return get_engine(F).act(u, n, v)


# ---------------------------------------------------------------------------
# distinguished vacuum states
# ---------------------------------------------------------------------------

ONE = Vec.unit()
A_STATE = Vec.term(mono((avar(1), 1)))          # a(-1)|0>
S_STATE = Vec.term(mono((svar(0), 1)))          # a*(0)|0>


def jk_state(k: int) -> Vec:
    """a*(-k) a(-1) |0>, the weight-(k+1) current state."""
    return Vec.term(mono((avar(1), 1), (svar(k), 1)))


J0_STATE = jk_state(0)
J1_STATE = jk_state(1)

# sl(2) triple inside the vacuum module
E_SL2 = Q(1, 2) * Vec.term(mono((avar(1), 2)))
H_SL2 = -J0_STATE
F_SL2 = Q(-1, 2) * Vec.term(mono((svar(0), 2)))

# conformal vector of central charge -1
OMEGA_STATE = Vec(
    {
        mono((avar(1), 1), (svar(1), 1)): Q(1, 2),
        mono((avar(2), 1), (svar(0), 1)): Q(-1, 2),
    }
)


def normal_prod(u: Vec, v: Vec) -> Vec:
    """Normally ordered product u_(-1) v in the vacuum module."""
    return mode_act(u, -1, v, VACUUM)


def translate(u: Vec) -> Vec:
    """The translation T u = u_(-2) |0>."""
    return mode_act(u, -2, ONE, VACUUM)


_W3_CACHE = None


def w3_state() -> Vec:
    """The weight-3 singlet generator, built from the sl(2) triple.

    With k = -1/2:  k h(-3)|0> + 3k h(-2)h + 2 h(-1)h(-1)h
    - 6k h(-1)(e(-1)f) + 3k^2 e(-2)f - 3k^2 f(-2)e,
    where x(n) denotes the n-th mode of the weight-1 state x.

    The coefficient of h(-3)|0> is golden data: with k there (and not k^2)
    the state is the unique weight-3 primary of the current commutant, and
    the cubic singlet relation holds for it; see scripts/derive_constants.py.
    """
    global _W3_CACHE
    if _W3_CACHE is not None:
        return _W3_CACHE
    k = Q(-1, 2)
    h, e, f = H_SL2, E_SL2, F_SL2

    def md(x, n, y):
        return mode_act(x, n, y, VACUUM)

    w3 = k * md(h, -3, ONE)
    w3 = w3 + 3 * k * md(h, -2, h)
    w3 = w3 + 2 * md(h, -1, md(h, -1, h))
    w3 = w3 - 6 * k * md(h, -1, md(e, -1, f))
    w3 = w3 + 3 * k * k * md(e, -2, f)
    w3 = w3 - 3 * k * k * md(f, -2, e)
    _W3_CACHE = w3
    return w3


_L_CACHE = None


def l_state() -> Vec:
    """The singlet Virasoro state: J1 + (1/2)(J0 J0) - (1/2) T J0.

    The sign of the translation term is pinned by requiring central charge -2
    and commutation with the weight-1 current modes; see scripts/derive_constants.py.
    """
    global _L_CACHE
    if _L_CACHE is None:
        _L_CACHE = (
            J1_STATE
            + Q(1, 2) * normal_prod(J0_STATE, J0_STATE)
            - Q(1, 2) * translate(J0_STATE)
        )
    return _L_CACHE


# ---------------------------------------------------------------------------
# spectral-flow twists
# ---------------------------------------------------------------------------


def delta_twist(u: Vec, s: int):
    """Finite Laurent expansion of the flow twist applied to a vacuum state.

    Returns a sorted list of (z-power, VacState).  Charge-inhomogeneous input
    is decomposed termwise.  The zero-mode factor contributes z^(s*c) on the
    charge-c component (the current zero mode acts by -charge on the vacuum
    module); the exponential tail terminates because positive current modes
    strictly lower the weight.
    """
    comps: dict[int, Vec] = {}
    for c in sorted(u.charges()):
        uc = u.charge_component(c)
        parts = {s * c: uc}
        for n in range(1, max(uc.weight(), 0) + 1):
            # X_n = ((-1)^(n+1)/n) * (-s) * J0(n) * z^(-n); exp(X_n) termwise
            coef = Q((-1) ** (n + 1), n) * Q(-s)
            new: dict[int, Vec] = {}
            for p, vec in parts.items():
                t = 0
                term = vec
                while not term.is_zero():
                    tgt = p - n * t
                    new[tgt] = new.get(tgt, Vec()) + term
                    term = Q(1, t + 1) * coef * mode_act(J0_STATE, n, term, VACUUM)
                    t += 1
            parts = {p: v for p, v in new.items() if not v.is_zero()}
        for p, vec in parts.items():
            comps[p] = comps.get(p, Vec()) + vec
    return sorted(((p, v) for p, v in comps.items() if not v.is_zero()),
                  key=lambda t: t[0])


def delta_mode_act(u: Vec, n: int, v: Vec, F: Frame, s: int) -> Vec:
    """Mode n of the flow-twisted field of u, evaluated on the untwisted frame.

    Equals mode_act(u, n, v, F.with_shift(s)) computed over F itself.
    """
    out = Vec()
    for p, up in delta_twist(u, s):
        out = out + mode_act(up, n + p, v, F)
    return out
