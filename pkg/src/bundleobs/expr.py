"""
Tiny arithmetic-expression parser shared by class polynomials and the CLI.

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | power
    power := atom ('^' INT)?
    atom  := NUMBER | NAME | '(' expr ')'

NUMBER is an integer or a fraction ``p/q``; NAME may contain dots
(``left.s``).  Products are kept in written order because degree-1
generators anticommute.
"""

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)*)|(.))")


class ExprError(ValueError):
    def __init__(self, msg, pos=None):
        super().__init__(msg if pos is None else "%s (at column %d)" % (msg, pos + 1))
        self.pos = pos


def tokenize(text):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        start = m.start(1) if num else m.start(2) if name else m.start(3)
        if num:
            out.append(("num", num, start))
        elif name:
            out.append(("name", name, start))
        elif op in "+-*^()":
            out.append(("op", op, start))
        else:
            raise ExprError("unexpected character %r" % op, start)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, op=None):
        t = self.peek()
        if t is None:
            raise ExprError("unexpected end of expression", len(self.text))
        if op is not None and (t[0] != "op" or t[1] != op):
            raise ExprError("expected %r" % op, t[2])
        self.i += 1
        return t

    def expr(self):
        terms = [self.term()]
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] in "+-":
                self.take()
                x = self.term()
                terms.append(x if t[1] == "+" else ("neg", x))
            else:
                break
        return terms[0] if len(terms) == 1 else ("add", tuple(terms))

    def term(self):
        fs = [self.unary()]
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] == "*":
                self.take()
                fs.append(self.unary())
            else:
                break
        return fs[0] if len(fs) == 1 else ("mul", tuple(fs))

    def unary(self):
        t = self.peek()
        if t and t[0] == "op" and t[1] == "-":
            self.take()
            return ("neg", self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t and t[0] == "op" and t[1] == "^":
            self.take()
            n = self.take()
            if n[0] != "num" or "/" in n[1]:
                raise ExprError("exponent must be a nonnegative integer", n[2])
            return ("pow", base, int(n[1]))
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return ("num", Fraction(t[1]))
        if t[0] == "name":
            return ("name", t[1])
        if t[1] == "(":
            x = self.expr()
            self.take(")")
            return x
        raise ExprError("unexpected %r" % t[1], t[2])


def parse(text):
    p = _Parser(text)
    if p.peek() is None:
        raise ExprError("empty expression", 0)
    x = p.expr()
    t = p.peek()
    if t is not None:
        raise ExprError("unexpected %r" % t[1], t[2])
    return x


def names(ast):
    kind = ast[0]
    if kind == "name":
        return {ast[1]}
    if kind == "num":
        return set()
    if kind in ("add", "mul"):
        out = set()
        for x in ast[1]:
            out |= names(x)
        return out
    return names(ast[1])


def evaluate(ast, resolve, one):
    """Evaluate with ``resolve(name)`` for names; numbers are scaled units."""
    kind = ast[0]
    if kind == "num":
        return one * ast[1]
    if kind == "name":
        return resolve(ast[1])
    if kind == "neg":
        return -evaluate(ast[1], resolve, one)
    if kind == "pow":
        b = evaluate(ast[1], resolve, one)
        out = one
        for _ in range(ast[2]):
            out = out * b
        return out
    vals = [evaluate(x, resolve, one) for x in ast[1]]
    out = vals[0]
    for v in vals[1:]:
        out = out + v if kind == "add" else out * v
    return out


def _num(q):
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def render(ast):
    """Inverse of parse on its own output."""
    kind = ast[0]
    if kind == "num":
        return _num(ast[1])
    if kind == "name":
        return ast[1]
    if kind == "neg":
        return "-" + _wrap(ast[1], ("add", "mul"))
    if kind == "pow":
        return "%s^%d" % (_wrap(ast[1], ("add", "mul", "neg", "pow")), ast[2])
    if kind == "mul":
        return "*".join(_wrap(x, ("add", "mul")) for x in ast[1])
    parts = [_wrap(ast[1][0], ("add",))]
    for x in ast[1][1:]:
        if x[0] == "neg":
            parts.append("- " + _wrap(x[1], ("add",)))
        else:
            parts.append("+ " + _wrap(x, ("add",)))
    return " ".join(parts)


def _wrap(x, kinds):
    s = render(x)
    return "(%s)" % s if x[0] in kinds else s
