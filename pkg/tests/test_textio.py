import json
import random
from fractions import Fraction as Q

import pytest

from weylmod.core import Vec, avar, mono, svar
from weylmod.textio import (
    ParseError,
    format_vec,
    parse_op,
    parse_vec,
    parse_word,
    vec_from_json,
    vec_to_json,
)


def test_parse_examples():
    assert parse_vec("1") == Vec.unit()
    got = parse_vec("3/2*a[-1]^2*as[0]")
    assert got == Vec.term(mono((avar(1), 2), (svar(0), 1)), Q(3, 2))
    assert parse_vec("0").is_zero()
    assert parse_vec("a[-1] - 1") == Vec.term(mono((avar(1), 1))) - Vec.unit()
    assert parse_vec("-as[0] + 2") == Vec({(): Q(2), mono((svar(0), 1)): Q(-1)})


def test_parse_index_range_errors():
    with pytest.raises(ParseError):
        parse_vec("a[0]")
    with pytest.raises(ParseError):
        parse_vec("a[1]")
    with pytest.raises(ParseError):
        parse_vec("as[1]")
    err = None
    try:
        parse_vec("a[-1] + ?")
    except ParseError as e:
        err = e
    assert err is not None and err.pos == 8


def test_parse_syntax_errors():
    for bad in ["", "+ +", "3/0", "a[-1]^0", "a[-1] 2"]:
        with pytest.raises(ParseError):
            parse_vec(bad)


def test_round_trips():
    rng = random.Random(3)
    vars_ = [avar(1), avar(2), avar(3), svar(0), svar(2)]
    for _ in range(30):
        v = Vec()
        for _ in range(rng.randint(0, 4)):
            m = mono(*[(rng.choice(vars_), rng.randint(1, 2))
                       for _ in range(rng.randint(0, 3))])
            v = v.add_scaled(Vec.term(m), Q(rng.randint(-5, 5), rng.randint(1, 4)))
        text = format_vec(v)
        assert parse_vec(text) == v
        assert format_vec(parse_vec(text)) == text
        blob = json.dumps(vec_to_json(v))
        assert vec_from_json(json.loads(blob)) == v


def test_format_canonical():
    v = parse_vec("as[0] + 2*as[-1] + a[-1]")
    # canonical order puts A-variables first, higher indices first
    assert format_vec(v) == "a[-1] + as[0] + 2*as[-1]"
    assert format_vec(Vec()) == "0"
    assert format_vec(-1 * Vec.unit()) == "-1"
    assert format_vec(Vec.term(mono((svar(0), 1)), -1)) == "-as[0]"


def test_parse_ops():
    assert parse_op("I") == ("I",)
    assert parse_op("a[-3]") == ("a", -3)
    assert parse_op("as[2]") == ("as", 2)
    assert parse_op("E[2,5]") == ("E", 2, 5)
    assert parse_op("J0[3]") == ("J", 0, 3)
    assert parse_op("J12[-2]") == ("J", 12, -2)
    assert parse_op("L[0]") == ("L", 0)
    assert parse_op("Lw[-1]") == ("Lw", -1)
    assert parse_op("H[-4]") == ("H", -4)
    assert parse_word("E[1,1]; I ;a[0]") == [("E", 1, 1), ("I",), ("a", 0)]
    for bad in ["Q[1]", "E[1]", "I[2]", "J0", "L[x]"]:
        with pytest.raises(ParseError):
            parse_op(bad)
