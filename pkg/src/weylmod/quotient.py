"""Simple quotients at Casimir eigenvalue d, in pivot-eliminated coordinates.

Classes in the quotient are represented by the unique vector containing no
power of the pivot variable a*(-i0) (lambda_{i0} != 0).  The elimination rule
comes from reading the Casimir closed form at eigenvalue d:

    a*(-i0) u = (1/lambda_{i0}) ( d u + charge(u) u
                 - sum_{k != i0} lambda_k a*(-k) u - sum_k mu_k a(-k) u ).

Each rewrite strictly lowers the pivot degree, so projection terminates in
the canonical representative.

The cyclicity probe reduces any nonzero class to a scalar multiple of [w]
with the normalized derivation operators

    DerA(p) = -(1/lambda_{i0}) (E_{-i0, p} - lambda_{i0} mu_p)   (p >= 1)
    DerS(p) =  (1/mu_{j0})     (E_{-p, j0}  - lambda_p  mu_{j0}) (p >= 0, p != i0)

applied to a weight-maximal monomial, A-variables first.  Every step maps the
class to a combination of derivatives, so the maximal weight drops strictly
and the survivor is automatically a multiple of [w].  A zero survivor is
retried after multiplying by a(-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Q, Vec, avar, mono_charge, mono_degree, svar
from .frame import Frame, HypothesisError
from .linalg import kernel_basis, span_rank, spans_equal
from .textio import format_vec
from .weylact import act_E, act_I, act_op, whittaker_residual


def ipow_w(k: int, F: Frame) -> Vec:
    """The exact vector I^k.w."""
    if k < 0:
        raise ValueError("k must be >= 0")
    v = Vec.unit()
    for _ in range(k):
        v = act_I(v, F)
    return v


def project(v: Vec, d, F: Frame) -> Vec:
    """Canonical pivot-free representative of the class of v at eigenvalue d."""
    d = Q(d)
    if F.n_max < 0:
        raise HypothesisError("projection requires lambda != 0 (no pivot)")
    i0 = F.pivot_i0()
    piv = svar(i0)
    lam0 = F.lam_at(i0)
    while True:
        target = None
        for m in v.terms:
            if mono_degree(m, piv):
                target = m
                break
        if target is None:
            return v
        c = v.terms[target]
        u = _strip_one(target, piv)
        uvec = Vec.term(u)
        repl = uvec * (d + mono_charge(u))
        for k, lam in enumerate(F.lam):
            if lam and k != i0:
                repl = repl.add_scaled(uvec.mul_var(svar(k)), -lam)
        for k1, mu in enumerate(F.mu, start=1):
            if mu:
                repl = repl.add_scaled(uvec.mul_var(avar(k1)), -mu)
        repl = (1 / lam0) * repl
        v = v.add_scaled(Vec.term(target), -c).add_scaled(repl, c)


def _strip_one(m, piv):
    out = []
    for var, e in m:
        if var == piv:
            if e > 1:
                out.append((var, e - 1))
        else:
            out.append((var, e))
    return tuple(out)


def act_quot(op, q: Vec, d, F: Frame) -> Vec:
    """Apply an operator to a class: embed, act exactly, project back."""
    return project(act_op(op, q, F), d, F)


# ---------------------------------------------------------------------------
# complete Whittaker-vector solver
# ---------------------------------------------------------------------------


@dataclass
class SolverResult:
    frame: Frame
    max_weight: int
    window: tuple
    basis: list
    stable: bool

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def report(self) -> dict:
        return {
            "frame": self.frame.summary(),
            "maxWeight": self.max_weight,
            "window": list(self.window),
            "dimension": self.dimension,
            "basis": [format_vec(v) for v in self.basis],
            "stable": self.stable,
        }


def _solve_window(F: Frame, candidates, i_max: int, j_max: int):
    vecs = [Vec.term(m) for m in candidates]
    rows = []
    images = []
    for i in range(0, i_max + 1):
        for j in range(1, j_max + 1):
            images.append([whittaker_residual(i, j, v, F) for v in vecs])
    for img in images:
        monos = sorted({m for w in img for m in w.terms})
        for m in monos:
            rows.append([w.coeff(m) for w in img])
    coeffs = kernel_basis(rows, len(vecs))
    out = []
    for cv in coeffs:
        acc = Vec()
        for c, v in zip(cv, vecs):
            acc = acc.add_scaled(v, c)
        out.append(acc)
    return out


def whittaker_space(F: Frame, max_weight: int, max_ipow: int | None = None,
                    i_max: int | None = None, j_max: int | None = None) -> SolverResult:
    """Truncated space of Whittaker vectors for the frame's functional.

    Solves (E_{-i,j} - lambda_i mu_j) v = 0 over the window on the span of all
    monomials of weight <= max_weight, and checks stability under enlarging
    the window by one in each direction.
    """
    F.require_nondegenerate()
    from .core import enumerate_monomials

    if i_max is None:
        i_max = max(F.pivot_i0(), max_weight)
    if j_max is None:
        j_max = max(F.pivot_j0(), max_weight)
    candidates = enumerate_monomials(max_weight)
    basis = _solve_window(F, candidates, i_max, j_max)
    bigger = _solve_window(F, candidates, i_max + 1, j_max + 1)
    stable = spans_equal(basis, bigger) if (basis or bigger) else True
    return SolverResult(F, max_weight, (i_max, j_max), basis, stable)


def expected_whittaker_basis(F: Frame, max_weight: int, max_ipow: int | None = None):
    """span{I^k w} truncated by weight; the solver's contracted answer."""
    out = [Vec.unit()]
    k = 1
    while True:
        if max_ipow is not None and k > max_ipow:
            break
        v = ipow_w(k, F)
        if v.weight() > max_weight:
            break
        out.append(v)
        k += 1
    return out


# ---------------------------------------------------------------------------
# cyclicity probe
# ---------------------------------------------------------------------------


def _e_abs(i: int, j: int, v: Vec, F: Frame) -> Vec:
    # untwisted matrix-unit labels; transported through the flow on shifted frames
    s = F.shift
    return act_E(i + s, j + s, v, F)


def der_a(p: int, v: Vec, F: Frame) -> Vec:
    """DerA(p).v; on pivot-free polynomials this is d/d a(-p) (times I -> I+1)."""
    if p < 1:
        raise ValueError("DerA needs p >= 1")
    i0 = F.pivot_i0()
    out = _e_abs(-i0, p, v, F).add_scaled(v, -F.lam_at(i0) * F.mu_at(p))
    return (-1 / F.lam_at(i0)) * out


def der_s(p: int, v: Vec, F: Frame) -> Vec:
    """DerS(p).v; the a*(-p) derivation, valid for p != i0."""
    if p < 0:
        raise ValueError("DerS needs p >= 0")
    if p == F.pivot_i0():
        raise ValueError("DerS is undefined at the pivot index i0")
    j0 = F.pivot_j0()
    out = _e_abs(-p, j0, v, F).add_scaled(v, -F.lam_at(p) * F.mu_at(j0))
    return (1 / F.mu_at(j0)) * out


@dataclass
class ProbeResult:
    sigma: Fraction | None
    retries: int
    steps: int
    word: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sigma is not None and self.sigma != 0

    def report(self) -> dict:
        return {
            "sigma": None if self.sigma is None else str(self.sigma),
            "retries": self.retries,
            "steps": self.steps,
            "word": self.word,
            "ok": self.ok,
        }


def _reduce_once(q: Vec, d, F: Frame):
    """One derivation step towards [w], targeting the leading monomial."""
    target = q.leading_monomial()
    var, _ = target[0]
    if var > 0:
        return der_a(var, q, F), "DerA[%d]" % var
    m = -var - 1
    return der_s(m, q, F), "DerS[%d]" % m


def cyclicity_probe(q: Vec, d, F: Frame, max_retries: int | None = None) -> ProbeResult:
    """Reduce a nonzero class to sigma.[w], certifying that [w] lies in its orbit.

    Every derivation step strictly lowers the maximal monomial weight, so the
    loop terminates with either a scalar multiple of [w] (success) or zero;
    zero survivors are retried on a(-1).q, by default up to
    (pivot degree of the embedding) + 2 times.
    """
    F.require_nondegenerate()
    d = Q(d)
    q = project(q, d, F)
    if q.is_zero():
        raise ValueError("probe requires a nonzero class")
    i0 = F.pivot_i0()
    if max_retries is None:
        max_retries = max(mono_degree(m, svar(i0)) for m in q.terms) + 2
    word_all = []
    steps = 0
    for retry in range(max_retries + 1):
        v = q
        for _ in range(retry):
            v = project(v.mul_var(avar(1)), d, F)
            word_all.append("mul a[-1]")
        while not v.is_zero() and v.leading_monomial() != ():
            v, opname = _reduce_once(v, d, F)
            v = project(v, d, F)
            word_all.append(opname)
            steps += 1
        if not v.is_zero():
            return ProbeResult(v.coeff(()), retry, steps, word_all)
    return ProbeResult(None, max_retries, steps, word_all)


# ---------------------------------------------------------------------------
# non-tensor-product witness
# ---------------------------------------------------------------------------


def non_tensor_witness(F: Frame, d) -> dict:
    """Rank growth of the charge-current orbit of [w] in the quotient.

    Computes J^0(k0)^i [w] for i = 0..m_max with k0 = n_max and returns the
    exact rank of the span; full rank m_max + 1 certifies that the orbit
    escapes every bounded-dimension constraint.  One extra power is recorded.
    """
    F.require_nondegenerate()
    if F.n_max < 1:
        raise HypothesisError("witness requires n_max >= 1 (lambda beyond index 0)")
    if not F.lam_at(F.n_max) or not F.mu_at(F.m_max):
        raise HypothesisError("witness requires lambda_{n_max} != 0 and mu_{m_max} != 0")
    k0 = F.n_max
    count = F.m_max + 1
    vecs = [project(Vec.unit(), d, F)]
    for _ in range(count):
        vecs.append(act_quot(("J", 0, k0), vecs[-1], d, F))
    rank_main = span_rank(vecs[:count])
    rank_ext = span_rank(vecs)
    return {
        "k0": k0,
        "count": count,
        "rank": rank_main,
        "expected": count,
        "rank_extended": rank_ext,
        "ok": rank_main == count,
    }
