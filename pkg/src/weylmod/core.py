"""Sparse exact linear combinations of creation monomials.

Everything is built over the polynomial model of the cyclic module: a vector
is a finite Q-linear combination of monomials in the creation symbols

    a(-n)   for n >= 1      ("A-variables")
    a*(-m)  for m >= 0      ("S-variables")

applied to the cyclic vector w (the empty monomial).  Coefficients are exact
rationals (fractions.Fraction); there is no floating point anywhere in this
package.

Variables are encoded as nonzero ints: the A-variable a(-n) is ``+n`` and the
S-variable a*(-m) is ``-(m+1)``.  With this encoding ``abs(v)`` is the grading
weight of the variable (wt a(-n) = n, wt a*(-m) = m + 1), which keeps every
weight level finite-dimensional.

A monomial is a tuple of (variable, exponent) pairs sorted in the canonical
variable order: A-variables before S-variables, higher indices first.  The
empty tuple is the monomial 1 (i.e. the vector w itself).  Vectors never store
zero coefficients, so equality of vectors is equality of term maps.
"""

from __future__ import annotations

from fractions import Fraction

Q = Fraction

# ---------------------------------------------------------------------------
# variables
# ---------------------------------------------------------------------------


def avar(n: int) -> int:
    """The variable a(-n), n >= 1."""
    if n < 1:
        raise ValueError("A-variable index must be >= 1, got %d" % n)
    return n


def svar(m: int) -> int:
    """The variable a*(-m), m >= 0."""
    if m < 0:
        raise ValueError("S-variable index must be >= 0, got %d" % m)
    return -(m + 1)


def var_is_a(v: int) -> bool:
    return v > 0


def var_index(v: int) -> int:
    """The index n of a(-n), resp. m of a*(-m)."""
    return v if v > 0 else -v - 1


def var_weight(v: int) -> int:
    return abs(v)


def var_key(v: int):
    # canonical order: A-variables first, higher indices first within a kind
    return (0, -v) if v > 0 else (1, v)


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------

# Monomial = tuple[(var, exp), ...] sorted by var_key, exponents >= 1.
ONE_MONO = ()


def mono(*pairs) -> tuple:
    """Build a monomial from (var, exp) pairs; merges repeats, drops exp 0."""
    acc = {}
    for v, e in pairs:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted(((v, e) for v, e in acc.items() if e), key=lambda p: var_key(p[0])))


def mono_weight(m) -> int:
    return sum(var_weight(v) * e for v, e in m)


def mono_charge(m) -> int:
    """Number of A-factors minus number of S-factors, with multiplicity."""
    return sum(e if v > 0 else -e for v, e in m)


def mono_degree(m, v) -> int:
    for u, e in m:
        if u == v:
            return e
    return 0


def mono_mul_var(m, v, k: int = 1) -> tuple:
    out = dict(m)
    out[v] = out.get(v, 0) + k
    return tuple(sorted(out.items(), key=lambda p: var_key(p[0])))


def mono_derive(m, v):
    """Formal partial derivative: returns (multiplicity, monomial) or None."""
    e = mono_degree(m, v)
    if e == 0:
        return None
    out = dict(m)
    if e == 1:
        del out[v]
    else:
        out[v] = e - 1
    return e, tuple(sorted(out.items(), key=lambda p: var_key(p[0])))


def mono_key(m):
    """Graded order, then lexicographic on the expanded variable sequence."""
    seq = []
    for v, e in m:
        seq.extend([var_key(v)] * e)
    return (mono_weight(m), seq)


def mono_max_a_index(m) -> int:
    """Largest n with a(-n) present, or -1."""
    best = -1
    for v, e in m:
        if v > 0:
            best = max(best, v)
    return best


def mono_max_s_index(m) -> int:
    """Largest m with a*(-m) present, or -1."""
    best = -1
    for v, e in m:
        if v < 0:
            best = max(best, -v - 1)
    return best


def enumerate_monomials(max_weight: int, allow=None) -> list:
    """All monomials of weight <= max_weight over the allowed variables.

    The order is deterministic: graded by weight, then lexicographic on the
    sorted variable sequence (A-variables before S-variables, higher indices
    first).  ``allow`` is an optional predicate on encoded variables.
    """
    if max_weight < 0:
        raise ValueError("max_weight must be >= 0")
    alphabet = [avar(n) for n in range(max_weight, 0, -1)]
    alphabet += [svar(m) for m in range(max_weight - 1, -1, -1)]
    if allow is not None:
        alphabet = [v for v in alphabet if allow(v)]
    out = []

    def fill(idx, rem, acc):
        if idx == len(alphabet):
            if rem == 0:
                out.append(tuple(acc))
            return
        v = alphabet[idx]
        wv = var_weight(v)
        for e in range(rem // wv, -1, -1):
            if e:
                acc.append((v, e))
                fill(idx + 1, rem - wv * e, acc)
                acc.pop()
            else:
                fill(idx + 1, rem, acc)

    for w in range(max_weight + 1):
        fill(0, w, [])
    return out


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


class Vec:
    """Sparse vector: finite map monomial -> nonzero Fraction.

    Instances are treated as immutable; all operations return new vectors.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                c = Q(c)
                if not c:
                    continue
                c0 = acc.get(m)
                c = c if c0 is None else c0 + c
                if c:
                    acc[m] = c
                elif m in acc:
                    del acc[m]
        self.terms = acc

    @classmethod
    def unit(cls) -> "Vec":
        """The cyclic vector w (empty monomial, coefficient 1)."""
        return cls({ONE_MONO: Q(1)})

    @classmethod
    def zero(cls) -> "Vec":
        return cls()

    @classmethod
    def term(cls, m, c=1) -> "Vec":
        return cls({m: Q(c)})

    def items(self):
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]))

    def coeff(self, m) -> Q:
        return self.terms.get(m, Q(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Vec) and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        return self.add_scaled(other, 1)

    def __sub__(self, other):
        return self.add_scaled(other, -1)

    def __neg__(self):
        return Vec({m: -c for m, c in self.terms.items()})

    def __rmul__(self, c):
        c = Q(c)
        if not c:
            return Vec()
        return Vec({m: c * x for m, x in self.terms.items()})

    def __mul__(self, c):
        return self.__rmul__(c)

    def add_scaled(self, other: "Vec", c) -> "Vec":
        """self + c*other, dropping cancelled terms."""
        c = Q(c)
        if not c or other.is_zero():
            return self
        out = dict(self.terms)
        for m, x in other.terms.items():
            y = out.get(m, Q(0)) + c * x
            if y:
                out[m] = y
            elif m in out:
                del out[m]
        return Vec(out)

    def mul_var(self, v: int, k: int = 1) -> "Vec":
        """Multiply every term by the k-th power of a creation variable."""
        if k == 0:
            return self
        return Vec({mono_mul_var(m, v, k): c for m, c in self.terms.items()})

    def derive(self, v: int) -> "Vec":
        """Formal partial derivative with respect to one variable."""
        out = {}
        for m, c in self.terms.items():
            d = mono_derive(m, v)
            if d is not None:
                e, m2 = d
                out[m2] = out.get(m2, Q(0)) + e * c
        return Vec(out)

    def weight(self) -> int:
        """Largest term weight (0 for the zero vector)."""
        return max((mono_weight(m) for m in self.terms), default=0)

    def max_a_index(self) -> int:
        return max((mono_max_a_index(m) for m in self.terms), default=-1)

    def max_s_index(self) -> int:
        return max((mono_max_s_index(m) for m in self.terms), default=-1)

    def charges(self):
        """Set of charges of the monomials present."""
        return {mono_charge(m) for m in self.terms}

    def charge_component(self, c: int) -> "Vec":
        return Vec({m: x for m, x in self.terms.items() if mono_charge(m) == c})

    def leading_monomial(self):
        """Largest monomial in the graded-lex order, or None."""
        if not self.terms:
            return None
        return max(self.terms, key=mono_key)

    def __repr__(self):
        from .textio import format_vec

        return "Vec(%s)" % format_vec(self)


def add_scaled(u: Vec, v: Vec, c) -> Vec:
    """u + c*v (module-level spelling of Vec.add_scaled)."""
    return u.add_scaled(v, c)
