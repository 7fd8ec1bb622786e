"""Generalized Whittaker modules for the 2l-by-2l matrix algebra.

The rank-2l Weyl algebra has generators a_1..a_{2l}, a*_1..a*_{2l} with
[a_i, a*_j] = delta_{ij}.  The module is the polynomial ring in the symbols

    a*_1 .. a*_l,  a_{l+1} .. a_{2l}

on which the remaining generators act by the functional plus derivations:

    a_i       = alpha_i + d/d a*_i        (i <= l)
    a*_{l+j}  = beta_j  - d/d a_{l+j}     (j <= l)

Matrix units act through the symmetrized product e_{i,j} = (a_i a*_j + a*_j a_i)/2
(the one-half shifts matter only on the diagonal).  The central element
I = sum_i e_{i,i} has the closed form I.(P w) = (-charge(P)) P w + sum_i
alpha_i a*_i P w + sum_j beta_j a_{l+j} P w, mirroring the infinite case.

Polynomial variables are encoded as ints 1..2l (k <= l: the symbol a*_k;
k > l: the symbol a_k); a monomial is an ascending tuple of (var, exp) pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Q
from .frame import HypothesisError
from .linalg import kernel_basis


@dataclass(frozen=True)
class GlFrame:
    ell: int
    alpha: tuple
    beta: tuple
    iA: int | None = None  # pivot with alpha != 0 (1..l), default largest
    iB: int | None = None  # pivot with beta != 0 (1..l), default largest

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be >= 1")
        if len(self.alpha) != self.ell or len(self.beta) != self.ell:
            raise ValueError("alpha and beta must each have length ell")
        object.__setattr__(self, "alpha", tuple(Q(x) for x in self.alpha))
        object.__setattr__(self, "beta", tuple(Q(x) for x in self.beta))

    def alpha_at(self, i):
        return self.alpha[i - 1]

    def beta_at(self, j):
        return self.beta[j - 1]

    def pivot_a(self) -> int:
        if self.iA is not None:
            if not self.alpha_at(self.iA):
                raise HypothesisError("pivot iA has alpha = 0")
            return self.iA
        for i in range(self.ell, 0, -1):
            if self.alpha[i - 1]:
                return i
        raise HypothesisError("requires alpha != 0")

    def pivot_b(self) -> int:
        if self.iB is not None:
            if not self.beta_at(self.iB):
                raise HypothesisError("pivot iB has beta = 0")
            return self.iB
        for i in range(self.ell, 0, -1):
            if self.beta[i - 1]:
                return i
        raise HypothesisError("requires beta != 0")

    def require_nondegenerate(self):
        if not any(self.alpha) or not any(self.beta):
            raise HypothesisError("requires alpha != 0 and beta != 0")

    def summary(self):
        return {
            "ell": self.ell,
            "alpha": [str(x) for x in self.alpha],
            "beta": [str(x) for x in self.beta],
        }


# --- sparse polynomials over the 2l symbols --------------------------------


def fmono(*pairs):
    acc = {}
    for v, e in pairs:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def fvec(terms=None):
    out = {}
    if terms:
        items = terms.items() if isinstance(terms, dict) else terms
        for m, c in items:
            c = out.get(m, Q(0)) + Q(c)
            if c:
                out[m] = c
            elif m in out:
                del out[m]
    return out


FW = {(): Q(1)}  # the cyclic vector


def fadd(u, v, c=1):
    c = Q(c)
    out = dict(u)
    for m, x in v.items():
        y = out.get(m, Q(0)) + c * x
        if y:
            out[m] = y
        elif m in out:
            del out[m]
    return out


def fscale(u, c):
    c = Q(c)
    return {m: c * x for m, x in u.items()} if c else {}


def fmul_var(u, var):
    out = {}
    for m, c in u.items():
        acc = dict(m)
        acc[var] = acc.get(var, 0) + 1
        out[tuple(sorted(acc.items()))] = c
    return out


def fderive(u, var):
    out = {}
    for m, c in u.items():
        acc = dict(m)
        e = acc.get(var, 0)
        if not e:
            continue
        if e == 1:
            del acc[var]
        else:
            acc[var] = e - 1
        m2 = tuple(sorted(acc.items()))
        y = out.get(m2, Q(0)) + e * c
        if y:
            out[m2] = y
        elif m2 in out:
            del out[m2]
    return out


def fdegree(m) -> int:
    return sum(e for _, e in m)


def fcharge(m, ell) -> int:
    """a-type factors minus a*-type factors of a monomial."""
    return sum(e if v > ell else -e for v, e in m)


def fequal(u, v) -> bool:
    return u == v


# --- generator actions ------------------------------------------------------


def act_gen_fin(kind: str, i: int, v, G: GlFrame):
    """Action of a_i (kind 'a') or a*_i (kind 'as'), 1 <= i <= 2l."""
    ell = G.ell
    if not 1 <= i <= 2 * ell:
        raise ValueError("generator index out of range: %d" % i)
    if kind == "a":
        if i <= ell:
            return fadd(fderive(v, i), fscale(v, G.alpha_at(i)), 1)
        return fmul_var(v, i)
    if kind == "as":
        if i <= ell:
            return fmul_var(v, i)
        return fadd(fscale(v, G.beta_at(i - ell)), fderive(v, i), -1)
    raise ValueError("kind must be 'a' or 'as'")


def act_e_fin(i: int, j: int, v, G: GlFrame):
    """Symmetrized product of a_i and a*_j acting on v."""
    x = act_gen_fin("a", i, act_gen_fin("as", j, v, G), G)
    y = act_gen_fin("as", j, act_gen_fin("a", i, v, G), G)
    return fscale(fadd(x, y, 1), Q(1, 2))


def iw_fin(G: GlFrame):
    out = {}
    for i in range(1, G.ell + 1):
        if G.alpha_at(i):
            out[fmono((i, 1))] = G.alpha_at(i)
    for j in range(1, G.ell + 1):
        if G.beta_at(j):
            out[fmono((G.ell + j, 1))] = G.beta_at(j)
    return out


def act_I_fin(v, G: GlFrame, path: str = "closed"):
    if path == "window":
        out = {}
        for i in range(1, 2 * G.ell + 1):
            out = fadd(out, act_e_fin(i, i, v, G), 1)
        return out
    if path != "closed":
        raise ValueError("unknown path %r" % path)
    out = {}
    for m, c in v.items():
        out = fadd(out, {m: c}, -fcharge(m, G.ell))
    for i in range(1, G.ell + 1):
        if G.alpha_at(i):
            out = fadd(out, fmul_var(v, i), G.alpha_at(i))
        if G.beta_at(i):
            out = fadd(out, fmul_var(v, G.ell + i), G.beta_at(i))
    return out


# --- quotient at Casimir eigenvalue d ---------------------------------------


def quotient_fin(v, d, G: GlFrame):
    """Pivot-free representative of the class of v at eigenvalue d."""
    d = Q(d)
    piv = G.pivot_a()
    a0 = G.alpha_at(piv)
    while True:
        target = None
        for m in v:
            if dict(m).get(piv):
                target = m
                break
        if target is None:
            return v
        c = v[target]
        acc = dict(target)
        acc[piv] -= 1
        if not acc[piv]:
            del acc[piv]
        u = {tuple(sorted(acc.items())): Q(1)}
        um = next(iter(u))
        repl = fscale(u, d + fcharge(um, G.ell))
        for i in range(1, G.ell + 1):
            if i != piv and G.alpha_at(i):
                repl = fadd(repl, fmul_var(u, i), -G.alpha_at(i))
            if G.beta_at(i):
                repl = fadd(repl, fmul_var(u, G.ell + i), -G.beta_at(i))
        repl = fscale(repl, 1 / a0)
        v = fadd(fadd(v, {target: c}, -1), repl, c)


def der_a_fin(j: int, v, G: GlFrame):
    """Kills one a_{l+j} factor: -(1/alpha_iA)(e_{iA, l+j} - alpha_iA beta_j)."""
    iA = G.pivot_a()
    out = fadd(act_e_fin(iA, G.ell + j, v, G), v, -G.alpha_at(iA) * G.beta_at(j))
    return fscale(out, -1 / G.alpha_at(iA))


def der_s_fin(i: int, v, G: GlFrame):
    """Kills one a*_i factor (i != iA): (1/beta_iB)(e_{i, l+iB} - alpha_i beta_iB)."""
    iB = G.pivot_b()
    out = fadd(act_e_fin(i, G.ell + iB, v, G), v, -G.alpha_at(i) * G.beta_at(iB))
    return fscale(out, 1 / G.beta_at(iB))


def cyclicity_probe_fin(q, d, G: GlFrame, max_retries: int = 2):
    """Reduce a nonzero class to a scalar multiple of [w]; mirror of the
    infinite-rank probe with the same retry discipline."""
    G.require_nondegenerate()
    d = Q(d)
    q = quotient_fin(q, d, G)
    if not q:
        raise ValueError("probe requires a nonzero class")
    retries = 0
    while retries <= max_retries:
        v = q
        for _ in range(retries):
            v = quotient_fin(fmul_var(v, G.ell + 1), d, G)
        while v and max(map(fdegree, v)) > 0:
            target = max(v, key=lambda m: (fdegree(m), m))
            var = max(var for var, _ in target)
            if var > G.ell:
                v = der_a_fin(var - G.ell, v, G)
            else:
                v = der_s_fin(var, v, G)
            v = quotient_fin(v, d, G)
        if v:
            return v.get((), Q(0))
        retries += 1
    return None


# --- truncated Whittaker solver ---------------------------------------------


def enumerate_fin(max_deg: int, ell: int):
    """Monomials of total degree <= max_deg, graded then lexicographic."""
    nvars = 2 * ell
    out = []

    def fill(var, rem, acc):
        if var > nvars:
            if rem == 0:
                out.append(tuple(acc))
            return
        for e in range(rem, -1, -1):
            if e:
                acc.append((var, e))
                fill(var + 1, rem - e, acc)
                acc.pop()
            else:
                fill(var + 1, rem, acc)

    for d in range(max_deg + 1):
        fill(1, d, [])
    return out


def whittaker_space_fin(G: GlFrame, max_deg: int):
    """Kernel of all (e_{i, l+j} - alpha_i beta_j) on polynomials of degree <= max_deg."""
    G.require_nondegenerate()
    cands = enumerate_fin(max_deg, G.ell)
    vecs = [{m: Q(1)} for m in cands]
    rows = []
    for i in range(1, G.ell + 1):
        for j in range(1, G.ell + 1):
            images = [
                fadd(act_e_fin(i, G.ell + j, v, G), v, -G.alpha_at(i) * G.beta_at(j))
                for v in vecs
            ]
            monos = sorted({m for w in images for m in w})
            for m in monos:
                rows.append([w.get(m, Q(0)) for w in images])
    coeffs = kernel_basis(rows, len(vecs))
    out = []
    for cv in coeffs:
        acc = {}
        for c, v in zip(cv, vecs):
            acc = fadd(acc, v, c)
        out.append(acc)
    return out


def fin_span_rank(vecs) -> int:
    monos = sorted({m for v in vecs for m in v})
    idx = {m: i for i, m in enumerate(monos)}
    rows = []
    for v in vecs:
        row = [Q(0)] * len(monos)
        for m, c in v.items():
            row[idx[m]] = c
        rows.append(row)
    from .linalg import rank

    return rank(rows)


# --- text form ---------------------------------------------------------------

_FVAR = re.compile(r"^(as|a)_(\d+)$")


def format_fin(v, G: GlFrame) -> str:
    if not v:
        return "0"
    parts = []
    for m in sorted(v, key=lambda m: (fdegree(m), m)):
        c = v[m]
        body = []
        for var, e in m:
            name = "as_%d" % var if var <= G.ell else "a_%d" % var
            body.append(name + ("^%d" % e if e > 1 else ""))
        body = "*".join(body)
        mag = abs(c)
        chunk = str(mag) if not body else (body if mag == 1 else "%s*%s" % (mag, body))
        parts.append((c < 0, chunk))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, chunk in parts[1:]:
        out += (" - " if neg else " + ") + chunk
    return out


def parse_fin(text: str, G: GlFrame):
    """Parse 'c*as_1^2*a_2 + ...' into a finite vector; '1' is the cyclic vector."""
    text = text.strip()
    if text == "0":
        return {}
    out = {}
    for signed in re.findall(r"[+-]?[^+-]+", text):
        signed = signed.strip()
        sign = 1
        if signed.startswith("-"):
            sign, signed = -1, signed[1:].strip()
        elif signed.startswith("+"):
            signed = signed[1:].strip()
        coeff = Q(sign)
        pairs = []
        for factor in signed.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Q(factor)
                continue
            fm = re.fullmatch(r"(as|a)_(\d+)(?:\^(\d+))?", factor)
            if not fm:
                raise ValueError("bad finite-vector factor %r" % factor)
            kind, idx, exp = fm.group(1), int(fm.group(2)), int(fm.group(3) or 1)
            if kind == "as" and not 1 <= idx <= G.ell:
                raise ValueError("as_%d out of range (creation symbols are as_1..as_%d)"
                                 % (idx, G.ell))
            if kind == "a" and not G.ell + 1 <= idx <= 2 * G.ell:
                raise ValueError("a_%d out of range (creation symbols are a_%d..a_%d)"
                                 % (idx, G.ell + 1, 2 * G.ell))
            pairs.append((idx, exp))
        out = fadd(out, {fmono(*pairs): Q(1)}, coeff)
    return out
