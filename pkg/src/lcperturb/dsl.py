"""Session files: a ring, named ideals and commands.

    ring p=32003 vars=x,y,z;
    ideal I = x^2, y;
    cmd perturb I N=5 trials=20 seed=42 p=1;

Hand-written lexer and recursive-descent parser.  Every failure is a
``SessionError`` carrying a line/column diagnostic.
"""

from dataclasses import dataclass, field

from .poly import AlgebraError, Ring, is_prime

MAX_EXPONENT = 1000

VERBS = {
    "invariants": {"n"},
    "hilbert": {"n"},
    "betti": set(),
    "perturb": {"N", "D", "trials", "seed", "p", "sparsity", "adversarial", "equidim"},
}


@dataclass(frozen=True)
class Diagnostic:
    line: int
    col: int
    message: str
    kind: str = "syntax"

    def __str__(self):
        return f"{self.line}:{self.col}: {self.kind} error: {self.message}"


class SessionError(AlgebraError):
    def __init__(self, diagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


@dataclass(frozen=True)
class Token:
    kind: str  # ident, int, op, eof
    text: str
    line: int
    col: int


@dataclass
class RingDecl:
    p: int
    variables: list
    line: int = 0


@dataclass
class IdealDecl:
    name: str
    gens: list  # Poly
    sources: list  # generator text, as written
    line: int = 0


@dataclass
class Command:
    verb: str
    target: str
    params: dict = field(default_factory=dict)
    line: int = 0


@dataclass
class Session:
    ring: Ring
    ring_decl: RingDecl
    ideals: dict
    commands: list

    def ideal(self, name):
        return self.ideals[name].gens


_SINGLE = set("=;,+-*^()")
_DIGITS = set("0123456789")
_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT = _IDENT_START | _DIGITS


def tokenize(text):
    toks = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            toks.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _IDENT_START:
            j = i
            while j < n and text[j] in _IDENT:
                j += 1
            toks.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _SINGLE:
            toks.append(Token("op", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise SessionError(Diagnostic(line, start_col, f"unexpected character {ch!r}", "lexical"))
    toks.append(Token("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.pos = 0
        self.ring = None
        self.ring_decl = None
        self.ideals = {}
        self.commands = []

    # -- token helpers --

    @property
    def tok(self):
        return self.toks[self.pos]

    def fail(self, message, tok=None, kind="syntax"):
        tok = tok or self.tok
        raise SessionError(Diagnostic(tok.line, tok.col, message, kind))

    def describe(self, tok):
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def advance(self):
        t = self.tok
        if t.kind != "eof":
            self.pos += 1
        return t

    def expect_op(self, ch):
        t = self.tok
        if t.kind != "op" or t.text != ch:
            self.fail(f"expected {ch!r}, found {self.describe(t)}")
        return self.advance()

    def expect_ident(self, what="identifier"):
        t = self.tok
        if t.kind != "ident":
            self.fail(f"expected {what}, found {self.describe(t)}")
        return self.advance()

    def expect_int(self, what="integer"):
        t = self.tok
        if t.kind != "int":
            self.fail(f"expected {what}, found {self.describe(t)}")
        return self.advance()

    def at_op(self, ch):
        return self.tok.kind == "op" and self.tok.text == ch

    # -- statements --

    def parse(self):
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind != "ident":
                self.fail(f"expected 'ring', 'ideal' or 'cmd', found {self.describe(t)}")
            if t.text == "ring":
                self.ring_stmt()
            elif t.text == "ideal":
                self.ideal_stmt()
            elif t.text == "cmd":
                self.cmd_stmt()
            else:
                self.fail(f"unknown statement {t.text!r}")
        if self.ring is None:
            self.fail("ring not declared", kind="semantic")
        return Session(self.ring, self.ring_decl, self.ideals, self.commands)

    def keyword_value(self, key):
        t = self.expect_ident(f"'{key}'")
        if t.text != key:
            self.fail(f"expected '{key}', found {t.text!r}", t)
        self.expect_op("=")

    def ring_stmt(self):
        start = self.advance()
        if self.ring is not None:
            self.fail("ring declared twice", start, "semantic")
        self.keyword_value("p")
        pt = self.expect_int("prime")
        p = int(pt.text)
        if p == 2 or not is_prime(p) or p >= 1 << 31:
            self.fail(f"p={p} is not an odd prime below 2^31", pt, "semantic")
        self.keyword_value("vars")
        names = []
        while True:
            v = self.expect_ident("variable name")
            if v.text in names:
                self.fail(f"variable {v.text!r} declared twice", v, "semantic")
            if v.text in ("ring", "ideal", "cmd"):
                self.fail(f"{v.text!r} is reserved", v, "semantic")
            names.append(v.text)
            if not self.at_op(","):
                break
            self.advance()
        self.expect_op(";")
        if len(names) > 8:
            self.fail("at most 8 variables are supported", start, "semantic")
        self.ring = Ring(names, p)
        self.ring_decl = RingDecl(p, names, start.line)

    def ideal_stmt(self):
        start = self.advance()
        if self.ring is None:
            self.fail("ring not declared", start, "semantic")
        name = self.expect_ident("ideal name")
        if name.text in self.ideals:
            self.fail(f"ideal {name.text!r} declared twice", name, "semantic")
        if name.text in self.ring.names:
            self.fail(f"ideal name {name.text!r} clashes with a variable", name, "semantic")
        self.expect_op("=")
        gens, sources = [], []
        while True:
            first = self.pos
            gens.append(self.expr())
            sources.append(" ".join(t.text for t in self.toks[first:self.pos]))
            if not self.at_op(","):
                break
            self.advance()
        self.expect_op(";")
        self.ideals[name.text] = IdealDecl(name.text, gens, sources, start.line)

    def cmd_stmt(self):
        start = self.advance()
        if self.ring is None:
            self.fail("ring not declared", start, "semantic")
        verb = self.expect_ident("command verb")
        if verb.text not in VERBS:
            self.fail(f"unknown command {verb.text!r}", verb, "semantic")
        target = self.expect_ident("ideal name")
        if target.text not in self.ideals:
            self.fail(f"ideal {target.text!r} not declared", target, "semantic")
        params = {}
        while not self.at_op(";"):
            if self.tok.kind == "eof":
                self.fail("expected ';', found end of input")
            key = self.expect_ident("parameter name")
            if key.text not in VERBS[verb.text]:
                self.fail(f"unknown parameter {key.text!r} for {verb.text}", key, "semantic")
            if key.text in params:
                self.fail(f"parameter {key.text!r} given twice", key, "semantic")
            self.expect_op("=")
            val = self.tok
            if val.kind == "int":
                self.advance()
                params[key.text] = int(val.text)
            elif val.kind == "ident":
                self.advance()
                params[key.text] = val.text
            else:
                self.fail(f"expected a value, found {self.describe(val)}")
            self.check_param(verb.text, key.text, params[key.text], val)
        self.expect_op(";")
        self.commands.append(Command(verb.text, target.text, params, start.line))

    def check_param(self, verb, key, value, tok):
        if key == "adversarial":
            if value not in ("identity", "paper"):
                self.fail("adversarial must be 'identity' or 'paper'", tok, "semantic")
            return
        if key == "equidim":
            if value not in ("true", "false"):
                self.fail("equidim must be 'true' or 'false'", tok, "semantic")
            return
        if not isinstance(value, int):
            self.fail(f"{key} must be an integer", tok, "semantic")
        if key in ("N", "D", "trials", "n") and value < 1:
            self.fail(f"{key} must be at least 1", tok, "semantic")
        if key == "sparsity" and value < 0:
            self.fail("sparsity must be non-negative", tok, "semantic")
        if key == "p" and value > self.ring.nvars:
            self.fail(f"p={value} exceeds the number of variables", tok, "semantic")
        if key == "trials" and value > 10_000:
            self.fail("at most 10000 trials", tok, "semantic")

    # -- polynomial expressions --

    def expr(self):
        sign = 1
        if self.at_op("-"):
            self.advance()
            sign = -1
        elif self.at_op("+"):
            self.advance()
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.at_op("+") or self.at_op("-"):
            op = self.advance().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.power()
        while self.at_op("*"):
            self.advance()
            acc = acc * self.power()
        return acc

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            t = self.tok
            if t.kind == "op" and t.text == "-":
                self.fail("negative exponent", t, "semantic")
            e = self.expect_int("exponent")
            k = int(e.text)
            if k > MAX_EXPONENT:
                self.fail(f"exponent {k} exceeds {MAX_EXPONENT}", e, "semantic")
            if self.at_op("^"):
                self.fail("chained exponents need parentheses")
            return base**k
        return base

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.advance()
            return self.ring.const(int(t.text))
        if t.kind == "ident":
            if t.text not in self.ring.names:
                self.fail(f"unknown variable {t.text!r}", t, "semantic")
            self.advance()
            return self.ring.var(t.text)
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        if self.at_op("-"):
            self.advance()
            return -self.atom()
        self.fail(f"expected a polynomial, found {self.describe(t)}")


def parse_session(text):
    """Parse a whole session; raises SessionError with a located diagnostic."""
    if not isinstance(text, str):
        raise SessionError(Diagnostic(1, 1, "input is not text", "lexical"))
    parser = _Parser(text)
    return _guarded(parser, parser.parse)


def _guarded(parser, fn):
    try:
        return fn()
    except SessionError:
        raise
    except RecursionError:
        parser.fail("expression nested too deeply", kind="semantic")
    except AlgebraError as exc:
        parser.fail(str(exc), kind="semantic")


def check_session(text):
    """The diagnostic for ``text``, or None if it parses."""
    try:
        parse_session(text)
    except SessionError as exc:
        return exc.diagnostic
    return None


def parse_poly(text, ring):
    """Parse one polynomial expression in ``ring``."""
    p = _Parser(text)
    p.ring = ring
    f = _guarded(p, p.expr)
    if p.tok.kind != "eof":
        p.fail(f"unexpected {p.describe(p.tok)} after expression")
    return f
