"""Canonical text and JSON forms for vectors, and the operator mini-grammar.

Vector grammar::

    vector := ['-'] term (('+'|'-') term)*
    term   := coeff ('*' var)*  |  var ('*' var)*
    coeff  := integer | integer '/' positive-integer
    var    := 'a[' negint ']' ('^' posint)?  |  'as[' nonposint ']' ('^' posint)?

The internal A-variable a(-n) prints as ``a[-n]`` (so the bracket index is
always negative) and the S-variable a*(-m) prints as ``as[-m]`` (index always
<= 0).  The zero vector prints as ``0``.

JSON form: ``{"terms": [{"coeff": "3/2", "vars": [["a", -1, 2], ["as", 0, 1]]}]}``
with terms in canonical monomial order.

Operator syntax (used by the CLI and by word application)::

    a[k]  as[k]  E[i,j]  I  J0[n] J1[n] J2[n] ...  L[n]  Lw[n]  H[n]
"""

from __future__ import annotations

import re

from .core import Q, Vec, avar, mono, svar, var_index, var_is_a


class ParseError(ValueError):
    """Syntax or index-range error, carrying the offending position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<name>as|a)\[(?P<idx>-?\d+)\]|(?P<num>\d+)|(?P<op>[+\-*/^]))"
)


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError("unexpected character %r" % text[pos:].lstrip()[0],
                             len(text) - len(text[pos:].lstrip()))
        if m.group("name"):
            toks.append(("var", (m.group("name"), int(m.group("idx"))), m.start()))
        elif m.group("num"):
            toks.append(("num", int(m.group("num")), m.start()))
        else:
            toks.append(("op", m.group("op"), m.start()))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


def _decode_var(name, idx, pos):
    if name == "a":
        if idx >= 0:
            raise ParseError("a-index out of range: a[%d] needs a negative index" % idx, pos)
        return avar(-idx)
    if idx > 0:
        raise ParseError("as-index out of range: as[%d] needs a nonpositive index" % idx, pos)
    return svar(-idx)


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind, value=None):
        k, v, pos = self.toks[self.i]
        if k != kind or (value is not None and v != value):
            raise ParseError("expected %s" % (value or kind), pos)
        self.i += 1
        return v, pos

    def parse_vector(self) -> Vec:
        terms = []
        sign = 1
        k, v, pos = self.peek()
        if k == "op" and v in "+-":
            sign = -1 if v == "-" else 1
            self.i += 1
        terms.append(self.parse_term(sign))
        while True:
            k, v, pos = self.peek()
            if k == "end":
                break
            if k != "op" or v not in "+-":
                raise ParseError("expected '+' or '-' between terms", pos)
            self.i += 1
            terms.append(self.parse_term(-1 if v == "-" else 1))
        out = Vec()
        for t in terms:
            out = out + t
        return out

    def parse_term(self, sign) -> Vec:
        k, v, pos = self.peek()
        coeff = Q(sign)
        pairs = []
        if k == "num":
            self.i += 1
            num = v
            den = 1
            kk, vv, p2 = self.peek()
            if kk == "op" and vv == "/":
                self.i += 1
                den, dpos = self.take("num")
                if den == 0:
                    raise ParseError("zero denominator", dpos)
            coeff = coeff * Q(num, den)
        elif k == "var":
            pairs.append(self.parse_var())
        else:
            raise ParseError("expected coefficient or variable", pos)
        while True:
            kk, vv, p2 = self.peek()
            if kk == "op" and vv == "*":
                self.i += 1
                pairs.append(self.parse_var())
            else:
                break
        return Vec.term(mono(*pairs), coeff)

    def parse_var(self):
        (name, idx), pos = self.take("var")
        var = _decode_var(name, idx, pos)
        exp = 1
        k, v, p2 = self.peek()
        if k == "op" and v == "^":
            self.i += 1
            exp, epos = self.take("num")
            if exp < 1:
                raise ParseError("exponent must be >= 1", epos)
        return (var, exp)


def parse_vec(text: str) -> Vec:
    text = text.strip()
    if text == "0":
        return Vec()
    if not text:
        raise ParseError("empty vector text", 0)
    return _Parser(text).parse_vector()


def _var_str(v) -> str:
    if var_is_a(v):
        return "a[-%d]" % var_index(v)
    return "as[%s]" % (-var_index(v) if var_index(v) else "0")


def format_vec(v: Vec) -> str:
    if v.is_zero():
        return "0"
    parts = []
    for m, c in v.items():
        body = "*".join(
            _var_str(var) + ("^%d" % e if e > 1 else "") for var, e in m
        )
        mag = abs(c)
        if not body:
            chunk = str(mag)
        elif mag == 1:
            chunk = body
        else:
            chunk = "%s*%s" % (mag, body)
        parts.append((c < 0, chunk))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, chunk in parts[1:]:
        out += (" - " if neg else " + ") + chunk
    return out


def vec_to_json(v: Vec) -> dict:
    terms = []
    for m, c in v.items():
        vars_ = []
        for var, e in m:
            if var_is_a(var):
                vars_.append(["a", -var_index(var), e])
            else:
                vars_.append(["as", -var_index(var), e])
        terms.append({"coeff": str(c), "vars": vars_})
    return {"terms": terms}


def vec_from_json(obj) -> Vec:
    out = Vec()
    for t in obj["terms"]:
        pairs = []
        for name, idx, e in t["vars"]:
            pairs.append((_decode_var(name, idx, 0), e))
        out = out.add_scaled(Vec.term(mono(*pairs)), Q(t["coeff"]))
    return out


# ---------------------------------------------------------------------------
# operator descriptors
# ---------------------------------------------------------------------------

_OP = re.compile(r"^\s*(?P<name>I|a|as|E|J\d+|Lw|L|H)\s*(?:\[(?P<args>[^\]]*)\])?\s*$")


def parse_op(text: str):
    """Parse one operator descriptor to a tuple form.

    Returns ('a', k) | ('as', k) | ('E', i, j) | ('I',) | ('J', k, n)
    | ('L', n) | ('Lw', n) | ('H', n).
    """
    m = _OP.match(text)
    if m is None:
        raise ParseError("bad operator syntax: %r" % text, 0)
    name = m.group("name")
    raw = m.group("args")
    args = []
    if raw is not None:
        for piece in raw.split(","):
            piece = piece.strip()
            if not re.fullmatch(r"-?\d+", piece or ""):
                raise ParseError("bad operator argument %r" % piece, 0)
            args.append(int(piece))
    if name == "I":
        if args:
            raise ParseError("I takes no arguments", 0)
        return ("I",)
    if name in ("a", "as"):
        if len(args) != 1:
            raise ParseError("%s[] takes one mode argument" % name, 0)
        return (name, args[0])
    if name == "E":
        if len(args) != 2:
            raise ParseError("E[] takes two indices", 0)
        return ("E", args[0], args[1])
    if name.startswith("J"):
        if len(args) != 1:
            raise ParseError("%s[] takes one mode argument" % name, 0)
        return ("J", int(name[1:]), args[0])
    if name in ("L", "Lw", "H"):
        if len(args) != 1:
            raise ParseError("%s[] takes one mode argument" % name, 0)
        return (name, args[0])
    raise ParseError("unknown operator %r" % name, 0)


def parse_word(text: str):
    """Parse a ';'-separated word of operators, applied left to right."""
    return [parse_op(p) for p in text.split(";") if p.strip()]


def format_op(op) -> str:
    kind = op[0]
    if kind == "I":
        return "I"
    if kind in ("a", "as", "L", "Lw", "H"):
        return "%s[%d]" % (kind, op[1])
    if kind == "E":
        return "E[%d,%d]" % (op[1], op[2])
    if kind == "J":
        return "J%d[%d]" % (op[1], op[2])
    raise ValueError("unknown op %r" % (op,))
