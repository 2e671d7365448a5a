import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from malformed import CASES
from lcperturb.dsl import SessionError, check_session, parse_poly, parse_session
from lcperturb.poly import Ring


def test_ring_and_ideal():
    s = parse_session("ring p=32003 vars=x,y,z; ideal I = x^2, y;")
    assert s.ring == Ring("xyz")
    assert [str(g) for g in s.ideal("I")] == ["x^2", "y"]
    assert s.commands == []


def test_experiment_command():
    s = parse_session("ring p=32003 vars=x,y,z; ideal I = x^2, y;\ncmd perturb I N=5 trials=20 seed=42 p=1;")
    (c,) = s.commands
    assert (c.verb, c.target, c.line) == ("perturb", "I", 2)
    assert c.params == {"N": 5, "trials": 20, "seed": 42, "p": 1}


def test_missing_ring_is_located():
    d = check_session("ideal I = x^2;")
    assert (d.line, d.col, d.kind) == (1, 1, "semantic")
    assert "ring not declared" in d.message


def test_expressions():
    R = Ring("xyz", 7)
    x, y, z = R.gens()
    assert parse_poly("-(x+2)^3*x - 3", R) == -((x + 2) ** 3) * x - 3
    assert parse_poly("x*y - y*x", R) == R.zero()
    assert parse_poly("8*x", R) == x
    assert parse_poly("+x - -y", R) == x + y
    assert parse_poly("(x)^0", R) == R.one()


def test_comments_and_layout():
    text = "# header\nring p=7\n  vars=x,y;  # trailing\n\nideal I =\n  x,\n  y;\n"
    s = parse_session(text)
    assert s.ideals["I"].line == 5
    assert s.ideals["I"].sources == ["x", "y"]


def test_every_malformed_case_is_located():
    assert len(CASES) == 50
    for text, line, col in CASES:
        with pytest.raises(SessionError) as info:
            parse_session(text)
        d = info.value.diagnostic
        assert (d.line, d.col) == (line, col), (text, d)
        assert str(d).startswith(f"{line}:{col}: ")


def test_non_text_input():
    assert check_session(b"ring p=7 vars=x;") is not None


def test_limits():
    assert check_session("ring p=2 vars=x;") is not None
    deep = "ring p=7 vars=x; ideal I = " + "(" * 3000 + "x" + ")" * 3000 + ";"
    assert check_session(deep) is not None
    assert check_session("ring p=7 vars=a,b,c,d,e,f,g,h,i;") is not None


alphabet = st.sampled_from(list("ringdealcmpvarsxyz=;,+-*^()0123456789 \n#_@") + ["ring", "ideal", "cmd", "vars=", "p="])


@settings(max_examples=300, deadline=None)
@given(st.lists(alphabet, max_size=40).map("".join))
def test_parser_is_total(text):
    try:
        parse_session(text)
    except SessionError as exc:
        d = exc.diagnostic
        assert d.line >= 1 and d.col >= 1


@settings(max_examples=100, deadline=None)
@given(st.text(max_size=60))
def test_parser_is_total_on_arbitrary_text(text):
    try:
        parse_session(HEAD_TEXT + text)
    except SessionError:
        pass


HEAD_TEXT = "ring p=32003 vars=x,y,z;\n"
