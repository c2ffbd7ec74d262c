"""
Script front end.

A script is a sequence of statements, one per line (a statement may run over
several lines while braces, brackets or parentheses are open).  ``#`` starts a
comment.  Declarations::

    space B = product(cp(3), torus(2))
    space C = manual { basis: [(1, 0), (x, 2), (y, 4)], mult: [(x, x) -> (1, y)], top: 4 }
    bundle xi over B { rank 2, oriented, euler = a + t1*t2 }
    bundle nu = tangent(B)            # also sum, cross, pullback, stab
    map f = cover(B, 3)               # also incl, proj, degmap

Queries::

    check xi
    check-flat eta xi
    sphere-check xi [Q=P1]
    gysin xi
    realize eta over B { p1 = t1*t2*a } [m=2] [as name]
    same xi eta
    classify-s1s3 rank=4 w1=0 p1=1 e=0
    classify-s1s2 rank=2 w1=0 e=5
    s4 1 0
    betti 3 2 1

Each query prints a block of ``key: value`` lines; blocks are separated by
blank lines.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import expr
from .bundles import (Bundle, BundleError, external_product, pullback, stabilize, tangent_bundle,
                      whitney_sum)
from .coh_algebra import AlgebraError, GradedAlgebra, format_element
from .lowdim import (LowDimBundle, LowDimError, S4BundleClass, classify_s1s2, classify_s1s3, s4_invariants,
                     s4_realizable)
from .obstruction import (DEFAULT_BUDGET, BudgetExceeded, ClassPolynomial, ObstructionError, betti_obstruction,
                          check_flat_product, find_obstruction, realize, same_in_finite_cover)
from .spaces import (SpaceError, cp, degree_map_to_sphere, inclusion_map, manual, point, product,
                     projection_map, sphere, torus, torus_cover_map)
from .sphere_bundles import gysin_betti, sphere_euler_check, sphere_pontrjagin_check

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 3

NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_NAME_RE = re.compile(NAME + "$")


class ScriptError(ValueError):
    def __init__(self, msg, line=None, col=None):
        where = ""
        if line is not None:
            where = "line %d" % line + (", column %d" % col if col is not None else "") + ": "
        super().__init__(where + msg)
        self.line = line
        self.col = col
        self.msg = msg


# -- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class BundleBody:
    rank: int = None
    oriented: bool = False
    euler: tuple = None
    pontrjagin: tuple = ()          # ((i, ast), ...) sorted by i

    def pretty(self, with_rank=True):
        items = []
        if with_rank:
            items.append("rank %d" % self.rank)
            if self.oriented:
                items.append("oriented")
        if self.euler is not None:
            items.append("euler = " + expr.render(self.euler))
        items += ["p%d = %s" % (i, expr.render(a)) for i, a in self.pontrjagin]
        return "{ " + ", ".join(items) + " }" if items else "{ }"


@dataclass(frozen=True)
class ManualSpec:
    basis: tuple                     # ((label, degree), ...)
    mult: tuple                      # ((l1, l2, coef, l3), ...)
    top: int
    orientation: str = None
    simply_connected: bool = None
    tangent: BundleBody = None

    def pretty(self):
        items = ["basis: [%s]" % ", ".join("(%s, %d)" % b for b in self.basis),
                 "mult: [%s]" % ", ".join("(%s, %s) -> (%s, %s)" % (a, b, _num(c), d) for a, b, c, d in self.mult),
                 "top: %d" % self.top]
        if self.orientation is not None:
            items.append("orientation: %s" % self.orientation)
        if self.simply_connected is not None:
            items.append("simply_connected: %s" % ("true" if self.simply_connected else "false"))
        if self.tangent is not None:
            items.append("tangent: " + self.tangent.pretty())
        return "manual { " + ", ".join(items) + " }"


@dataclass(frozen=True)
class SpaceDecl:
    name: str
    ctor: tuple
    line: int = field(default=None, compare=False)

    def pretty(self):
        return "space %s = %s" % (self.name, _pretty_ctor(self.ctor))


@dataclass(frozen=True)
class BundleDecl:
    name: str
    space: str
    body: BundleBody
    line: int = field(default=None, compare=False)

    def pretty(self):
        return "bundle %s over %s %s" % (self.name, self.space, self.body.pretty())


@dataclass(frozen=True)
class BundleOp:
    name: str
    op: str
    args: tuple
    line: int = field(default=None, compare=False)

    def pretty(self):
        return "bundle %s = %s(%s)" % (self.name, self.op, ", ".join(str(a) for a in self.args))


@dataclass(frozen=True)
class MapDecl:
    name: str
    op: str
    args: tuple
    line: int = field(default=None, compare=False)

    def pretty(self):
        return "map %s = %s(%s)" % (self.name, self.op, ", ".join(str(a) for a in self.args))


@dataclass(frozen=True)
class Query:
    kind: str
    args: tuple
    line: int = field(default=None, compare=False)

    def pretty(self):
        k, a = self.kind, self.args
        if k in ("check", "gysin"):
            return "%s %s" % (k, a[0])
        if k in ("check-flat", "same"):
            return "%s %s %s" % (k, a[0], a[1])
        if k == "sphere-check":
            return "sphere-check %s" % a[0] + ("" if a[1] is None else " Q=" + expr.render(a[1]))
        if k == "realize":
            name, space, body, m, alias = a
            out = "realize %s over %s %s" % (name, space, body.pretty(with_rank=False))
            if m is not None:
                out += " m=%d" % m
            if alias is not None:
                out += " as %s" % alias
            return out
        if k in ("classify-s1s3", "classify-s1s2"):
            return " ".join([k] + ["%s=%d" % kv for kv in a])
        return " ".join([k] + [str(x) for x in a])


@dataclass(frozen=True)
class Script:
    statements: tuple = ()

    def pretty(self):
        return "".join(s.pretty() + "\n" for s in self.statements)

    def symbols(self):
        out = {}
        for s in self.statements:
            if isinstance(s, SpaceDecl):
                out[s.name] = "space"
            elif isinstance(s, (BundleDecl, BundleOp)):
                out[s.name] = "bundle"
            elif isinstance(s, MapDecl):
                out[s.name] = "map"
            elif isinstance(s, Query) and s.kind == "realize" and s.args[4] is not None:
                out[s.args[4]] = "bundle"
        return out


def _num(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def _pretty_ctor(c):
    kind = c[0]
    if kind == "ref":
        return c[1]
    if kind == "point":
        return "point"
    if kind in ("sphere", "torus", "cp"):
        return "%s(%d)" % (kind, c[1])
    if kind == "product":
        return "product(%s, %s)" % (_pretty_ctor(c[1]), _pretty_ctor(c[2]))
    return c[1].pretty()


# -- splitting text into statements ------------------------------------------

_OPEN = {"(": ")", "[": "]", "{": "}"}
_CLOSE = {v: k for k, v in _OPEN.items()}


def _strip_comment(line):
    i = line.find("#")
    return line if i < 0 else line[:i]


def split_statements(text):
    """Yield (line number, statement text) with bracket-aware continuation."""
    buf, start, depth = "", None, []
    for no, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip() and not depth:
            continue
        if start is None:
            start = no
        for col, ch in enumerate(line, 1):
            if ch in _OPEN:
                depth.append((ch, no, col))
            elif ch in _CLOSE:
                if not depth or depth[-1][0] != _CLOSE[ch]:
                    raise ScriptError("unbalanced %r" % ch, no, col)
                depth.pop()
        buf += (" " if buf else "") + line.strip()
        if not depth:
            yield start, buf
            buf, start = "", None
    if depth:
        ch, no, col = depth[-1]
        raise ScriptError("unclosed %r" % ch, no, col)


def split_top(text, sep=","):
    """Split at top-level separators; returns (offset, piece) pairs."""
    out, depth, cur, off = [], 0, "", 0
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
        if ch == sep and depth == 0:
            out.append((off, cur))
            cur, off = "", i + 1
        else:
            cur += ch
    out.append((off, cur))
    return [(o + len(p) - len(p.lstrip()), p.strip()) for o, p in out if p.strip() or len(out) > 1]


# -- parsing ---------------------------------------------------------------

class _Parser:
    def __init__(self):
        self.symbols = {}
        self.statements = []

    def fail(self, msg, line, col=None):
        raise ScriptError(msg, line, col)

    def declare(self, name, kind, line):
        if not _NAME_RE.match(name):
            self.fail("invalid name %r" % name, line)
        if name in self.symbols:
            self.fail("name %r is already declared" % name, line)
        self.symbols[name] = kind

    def need(self, name, kind, line):
        got = self.symbols.get(name)
        if got is None:
            self.fail("unknown %s %r" % (kind, name), line)
        if got != kind:
            self.fail("%r is a %s, not a %s" % (name, got, kind), line)

    def int_arg(self, text, line, what, minimum=None):
        text = text.strip()
        if not re.fullmatch(r"-?\d+", text):
            self.fail("%s must be an integer, got %r" % (what, text), line)
        v = int(text)
        if minimum is not None and v < minimum:
            self.fail("%s must be at least %d" % (what, minimum), line)
        return v

    def expression(self, text, line, col):
        try:
            return expr.parse(text)
        except expr.ExprError as exc:
            pos = exc.pos
            self.fail(str(exc).split(" (at column")[0], line, None if pos is None else col + pos)

    # spaces

    def space_ctor(self, text, line):
        text = text.strip()
        if text == "point":
            return ("point",)
        m = re.fullmatch(r"(sphere|torus|cp)\s*\((.*)\)", text)
        if m:
            return (m.group(1), self.int_arg(m.group(2), line, m.group(1) + " dimension", 1))
        m = re.fullmatch(r"product\s*\((.*)\)", text)
        if m:
            parts = split_top(m.group(1))
            if len(parts) != 2:
                self.fail("product takes two spaces", line)
            return ("product", self.space_ctor(parts[0][1], line), self.space_ctor(parts[1][1], line))
        m = re.fullmatch(r"manual\s*\{(.*)\}", text)
        if m:
            return ("manual", self.manual(m.group(1), line))
        if _NAME_RE.match(text):
            self.need(text, "space", line)
            return ("ref", text)
        self.fail("cannot read space expression %r" % text, line)

    def manual(self, text, line):
        keys = {}
        for _, item in split_top(text):
            m = re.fullmatch(r"(\w+)\s*:\s*(.*)", item, re.S)
            if not m:
                self.fail("expected key: value in manual block, got %r" % item, line)
            k, v = m.group(1), m.group(2).strip()
            if k in keys:
                self.fail("duplicate key %r" % k, line)
            keys[k] = v
        for k in ("basis", "mult", "top"):
            if k not in keys:
                self.fail("manual block needs %r" % k, line)
        unknown = set(keys) - {"basis", "mult", "top", "orientation", "simply_connected", "tangent"}
        if unknown:
            self.fail("unknown manual key(s): %s" % ", ".join(sorted(unknown)), line)
        label = r"(?:%s|1)" % NAME
        inner = self._list(keys["basis"], line, "basis")
        basis = []
        for _, it in split_top(inner) if inner.strip() else []:
            m = re.fullmatch(r"\(\s*(%s)\s*,\s*(\d+)\s*\)" % label, it)
            if not m:
                self.fail("basis entries look like (label, degree), got %r" % it, line)
            basis.append((m.group(1), int(m.group(2))))
        inner = self._list(keys["mult"], line, "mult")
        mult = []
        for _, it in split_top(inner) if inner.strip() else []:
            m = re.fullmatch(r"\(\s*(%s)\s*,\s*(%s)\s*\)\s*->\s*\(\s*(-?\d+(?:/\d+)?)\s*,\s*(%s)\s*\)"
                             % (label, label, label), it)
            if not m:
                self.fail("mult entries look like (l1, l2) -> (coef, l3), got %r" % it, line)
            mult.append((m.group(1), m.group(2), Fraction(m.group(3)), m.group(4)))
        top = self.int_arg(keys["top"], line, "top", 0)
        orientation = keys.get("orientation")
        if orientation is not None and not re.fullmatch(label, orientation):
            self.fail("orientation must be a basis label", line)
        sc = keys.get("simply_connected")
        if sc is not None:
            if sc not in ("true", "false"):
                self.fail("simply_connected is true or false", line)
            sc = sc == "true"
        tangent = None
        if "tangent" in keys:
            m = re.fullmatch(r"\{(.*)\}", keys["tangent"], re.S)
            if not m:
                self.fail("tangent data goes in braces", line)
            tangent = self.bundle_body(m.group(1), line, 0)
        return ManualSpec(tuple(basis), tuple(mult), top, orientation, sc, tangent)

    def _list(self, text, line, what):
        m = re.fullmatch(r"\[(.*)\]", text.strip(), re.S)
        if not m:
            self.fail("%s must be a [...] list" % what, line)
        return m.group(1)

    # bundles

    def bundle_body(self, text, line, col, need_rank=True):
        rank, oriented, euler, p = None, False, None, {}
        for off, item in split_top(text):
            if not item:
                continue
            c = col + off
            m = re.fullmatch(r"rank\s+(\d+)", item)
            if m:
                if not need_rank:
                    self.fail("rank is taken from the bundle being realized", line, c)
                rank = int(m.group(1))
                continue
            if item == "oriented":
                oriented = True
                continue
            m = re.fullmatch(r"(euler|p(\d+))\s*=\s*(.*)", item, re.S)
            if m:
                ast = self.expression(m.group(3), line, c + m.start(3))
                if m.group(1) == "euler":
                    if euler is not None:
                        self.fail("euler given twice", line, c)
                    euler = ast
                else:
                    i = int(m.group(2))
                    if i < 1 or i in p:
                        self.fail("bad or repeated Pontrjagin index p%d" % i, line, c)
                    p[i] = ast
                continue
            self.fail("cannot read bundle item %r" % item, line, c)
        if need_rank and rank is None:
            self.fail("bundle block needs 'rank R'", line)
        return BundleBody(rank, oriented, euler, tuple(sorted(p.items())))

    def statement(self, line, text):
        m = re.fullmatch(r"space\s+(\S+)\s*=\s*(.*)", text, re.S)
        if m:
            ctor = self.space_ctor(m.group(2), line)
            self.declare(m.group(1), "space", line)
            return SpaceDecl(m.group(1), ctor, line)
        m = re.fullmatch(r"bundle\s+(\S+)\s+over\s+(\S+)\s*\{(.*)\}", text, re.S)
        if m:
            self.need(m.group(2), "space", line)
            body = self.bundle_body(m.group(3), line, m.start(3) + 1)
            self.declare(m.group(1), "bundle", line)
            return BundleDecl(m.group(1), m.group(2), body, line)
        m = re.fullmatch(r"bundle\s+(\S+)\s*=\s*(\w+)\s*\((.*)\)", text, re.S)
        if m:
            op = m.group(2)
            args = [a for _, a in split_top(m.group(3))]
            sig = {"tangent": ("space",), "sum": ("bundle", "bundle"), "cross": ("bundle", "bundle"),
                   "pullback": ("map", "bundle"), "stab": ("bundle", "int")}
            if op not in sig:
                self.fail("unknown bundle operation %r" % op, line)
            args = tuple(self._args(args, sig[op], line, op))
            self.declare(m.group(1), "bundle", line)
            return BundleOp(m.group(1), op, args, line)
        m = re.fullmatch(r"map\s+(\S+)\s*=\s*(\w+)\s*\((.*)\)", text, re.S)
        if m:
            op = m.group(2)
            sig = {"cover": ("space", "int"), "incl": ("space",), "proj": ("space",), "degmap": ("space", "int")}
            if op not in sig:
                self.fail("unknown map %r" % op, line)
            args = tuple(self._args([a for _, a in split_top(m.group(3))], sig[op], line, op))
            self.declare(m.group(1), "map", line)
            return MapDecl(m.group(1), op, args, line)
        return self.query(line, text)

    def _args(self, args, kinds, line, op):
        if len(args) != len(kinds):
            self.fail("%s takes %d argument(s)" % (op, len(kinds)), line)
        out = []
        for a, k in zip(args, kinds):
            if k == "int":
                out.append(self.int_arg(a, line, op + " argument"))
            else:
                self.need(a, k, line)
                out.append(a)
        return out

    def query(self, line, text):
        words = text.split()
        kind, rest = words[0], words[1:]
        if kind in ("check", "gysin"):
            self._arity(rest, 1, kind, line)
            self.need(rest[0], "bundle", line)
            return Query(kind, tuple(rest), line)
        if kind in ("check-flat", "same"):
            self._arity(rest, 2, kind, line)
            for r in rest:
                self.need(r, "bundle", line)
            return Query(kind, tuple(rest), line)
        if kind == "sphere-check":
            m = re.fullmatch(r"sphere-check\s+(\S+)(?:\s+Q\s*=\s*(.+))?", text, re.S)
            if not m:
                self.fail("usage: sphere-check NAME [Q=EXPR]", line)
            self.need(m.group(1), "bundle", line)
            q = None if m.group(2) is None else self.expression(m.group(2), line, m.start(2) + 1)
            return Query(kind, (m.group(1), q), line)
        if kind == "realize":
            m = re.fullmatch(r"realize\s+(\S+)\s+over\s+(\S+)\s*\{(.*)\}\s*(?:m\s*=\s*(\d+))?\s*(?:as\s+(\S+))?",
                             text, re.S)
            if not m:
                self.fail("usage: realize NAME over SPACE { euler = EXPR, p1 = EXPR, ... } [m=M] [as NAME]", line)
            self.need(m.group(1), "bundle", line)
            self.need(m.group(2), "space", line)
            body = self.bundle_body(m.group(3), line, m.start(3) + 1, need_rank=False)
            mm = None if m.group(4) is None else int(m.group(4))
            if mm is not None and mm < 1:
                self.fail("m must be positive", line)
            if m.group(5) is not None:
                self.declare(m.group(5), "bundle", line)
            return Query(kind, (m.group(1), m.group(2), body, mm, m.group(5)), line)
        if kind in ("classify-s1s3", "classify-s1s2"):
            allowed = ("rank", "w1", "p1", "e", "lift") if kind == "classify-s1s3" else ("rank", "w1", "e", "w2")
            kv = {}
            for w in rest:
                m = re.fullmatch(r"(\w+)=(-?\d+)", w)
                if not m or m.group(1) not in allowed:
                    self.fail("expected key=int with key in %s, got %r" % (", ".join(allowed), w), line)
                if m.group(1) in kv:
                    self.fail("repeated key %r" % m.group(1), line)
                kv[m.group(1)] = int(m.group(2))
            if "rank" not in kv:
                self.fail("%s needs rank=" % kind, line)
            return Query(kind, tuple((k, kv[k]) for k in allowed if k in kv), line)
        if kind == "s4":
            self._arity(rest, 2, kind, line)
            return Query(kind, tuple(self.int_arg(x, line, "s4 coordinate") for x in rest), line)
        if kind == "betti":
            self._arity(rest, 3, kind, line)
            return Query(kind, tuple(self.int_arg(x, line, "betti argument") for x in rest), line)
        self.fail("unknown statement %r" % kind, line)

    def _arity(self, rest, n, kind, line):
        if len(rest) != n:
            self.fail("%s takes %d argument(s)" % (kind, n), line)


def parse(text):
    p = _Parser()
    for line, stmt in split_statements(text):
        p.statements.append(p.statement(line, stmt))
    return Script(tuple(p.statements))


# -- running ---------------------------------------------------------------

def fmt(x):
    return "none" if x is None else format_element(x)


class Runner:
    def __init__(self, budget=DEFAULT_BUDGET, cover_m=1):
        self.budget = budget
        self.cover_m = cover_m
        self.spaces, self.bundles, self.maps = {}, {}, {}

    # building

    def build_space(self, ctor, name=None):
        kind = ctor[0]
        if kind == "ref":
            return self.spaces[ctor[1]]
        if kind == "point":
            return point()
        if kind == "sphere":
            return sphere(ctor[1])
        if kind == "torus":
            return torus(ctor[1])
        if kind == "cp":
            return cp(ctor[1])
        if kind == "product":
            return product(self.build_space(ctor[1]), self.build_space(ctor[2]), name)
        return self.build_manual(ctor[1], name or "manual")

    def build_manual(self, spec, name):
        basis = sorted(spec.basis, key=lambda b: (b[1], b[0]))
        index = {l: i for i, (l, _) in enumerate(basis)}
        if len(index) != len(basis):
            raise SpaceError("duplicate basis labels")
        deg = dict(spec.basis)
        table = {}
        given = set()
        for a, b, c, d in spec.mult:
            for l in (a, b, d):
                if l not in index:
                    raise SpaceError("unknown basis label %r in mult" % l)
            table.setdefault((index[a], index[b]), []).append((index[d], c))
            given.add((a, b))
        # fill in the mirrored products by graded commutativity
        for a, b, c, d in spec.mult:
            if (b, a) not in given and a != b:
                sign = -1 if deg[a] * deg[b] % 2 else 1
                table.setdefault((index[b], index[a]), []).append((index[d], sign * c))
        units = [l for l, dg in basis if dg == 0]
        if len(units) != 1:
            raise SpaceError("need exactly one degree-0 basis class")
        u = index[units[0]]
        for i in range(len(basis)):
            table.setdefault((u, i), [(i, 1)])
            table.setdefault((i, u), [(i, 1)])
        A = GradedAlgebra(basis, table, spec.top)
        S = manual(A, name, spec.orientation, spec.simply_connected)
        if spec.tangent is not None:
            t = spec.tangent
            S.tangent = {"rank": t.rank, "oriented": t.oriented,
                         "euler": None if t.euler is None else self.evaluate(t.euler, S),
                         "pontrjagin": self.p_list(t.pontrjagin, S)}
        return S

    def evaluate(self, ast, space):
        A = space.algebra

        def resolve(n):
            if n in A.index and A.index[n] != A.unit_index:
                return A.basis_element(n)
            return space.generator(n)

        return expr.evaluate(ast, resolve, A.one())

    def p_list(self, items, space):
        if not items:
            return []
        n = max(i for i, _ in items)
        out = [space.algebra.zero()] * n
        for i, a in items:
            out[i - 1] = self.evaluate(a, space)
        return out

    def build_bundle(self, stmt):
        if isinstance(stmt, BundleDecl):
            B = self.spaces[stmt.space]
            b = stmt.body
            if b.euler is not None and not b.oriented and b.rank:
                raise BundleError("an Euler class needs the 'oriented' flag")
            e = None if b.euler is None else self.evaluate(b.euler, B)
            return Bundle(B, b.rank, b.oriented, e, self.p_list(b.pontrjagin, B), name=stmt.name)
        op, a = stmt.op, stmt.args
        if op == "tangent":
            return tangent_bundle(self.spaces[a[0]])
        if op == "sum":
            return whitney_sum(self.bundles[a[0]], self.bundles[a[1]])
        if op == "cross":
            return external_product(self.bundles[a[0]], self.bundles[a[1]])
        if op == "pullback":
            return pullback(self.maps[a[0]], self.bundles[a[1]])
        return stabilize(self.bundles[a[0]], a[1])

    def build_map(self, stmt):
        a = stmt.args
        S = self.spaces[a[0]]
        if stmt.op == "cover":
            return torus_cover_map(S, a[1])
        if stmt.op == "incl":
            return inclusion_map(S)
        if stmt.op == "proj":
            return projection_map(S)
        return degree_map_to_sphere(S, S.dim, a[1])

    # queries

    def certificate_record(self, cert, rec):
        rec["verdict"] = str(cert.verdict)
        if cert.obstructed:
            rec["witness"] = str(cert.witness)
            rec["value"] = fmt(cert.value)
            rec["restriction"] = fmt(cert.restriction)
        rec["generators"] = "; ".join("%s = %s" % (s, fmt(x)) for s, x in cert.generator_report) or "none"
        rec["check"] = cert.check
        rec["notes"] = cert.notes
        return rec

    def query(self, q):
        k, a = q.kind, q.args
        rec = {"query": q.pretty()}
        if k == "check":
            return self.certificate_record(find_obstruction(self.bundles[a[0]], self.budget), rec)
        if k == "check-flat":
            return self.certificate_record(check_flat_product(self.bundles[a[0]], self.bundles[a[1]]), rec)
        if k == "sphere-check":
            xi = self.bundles[a[0]]
            if xi.base.is_torus and a[1] is None:
                v = sphere_euler_check(xi)
                if v.obstructed:
                    rec.update(verdict=str(v.verdict), check=v.check, notes=v.detail)
                    return rec
            Q = None
            if a[1] is not None:
                Q = expr.evaluate(a[1], ClassPolynomial.symbol, ClassPolynomial.constant(1))
            v = sphere_pontrjagin_check(xi, Q, self.budget)
            self.certificate_record(v.certificate, rec)
            rec["check"] = v.check
            return rec
        if k == "gysin":
            g = gysin_betti(self.bundles[a[0]])
            rec.update(fiber="S^%d" % g.fiber_dim, euler=fmt(g.euler), betti=" ".join(map(str, g.betti)),
                       total=str(g.total), euler_characteristic=str(g.euler_characteristic),
                       rational_homology_sphere="yes" if g.is_rational_homology_sphere() else "no")
            return rec
        if k == "realize":
            name, space, body, m, alias = a
            xi_c, B = self.bundles[name], self.spaces[space]
            m = self.cover_m if m is None else m
            e = None if body.euler is None else self.evaluate(body.euler, B)
            eta = realize(xi_c, B, e, self.p_list(body.pontrjagin, B), m)
            if alias is not None:
                self.bundles[alias] = eta
            rec["verdict"] = "Realized"
            rec["m"] = str(m)
            rec["rank"] = str(eta.rank)
            if eta.euler is not None and eta.rank:
                rec["euler"] = fmt(eta.euler)
            for i, x in enumerate(eta.pontrjagin, 1):
                rec["p%d" % i] = fmt(x)
            rec["notes"] = "classes after pulling back along the cover of multiplier m"
            return rec
        if k == "same":
            c = same_in_finite_cover(self.bundles[a[0]], self.bundles[a[1]])
            rec.update(same="yes" if c.same else "no",
                       **{f: "yes" if getattr(c, f) else "no"
                          for f in ("rank", "orientation", "pontrjagin", "euler", "restriction")})
            rec["notes"] = c.caveat
            return rec
        if k == "classify-s1s3":
            kv = dict(a)
            b = LowDimBundle("S1xS3", kv["rank"], kv.get("w1", 0), kv.get("p1", 0), kv.get("e", 0),
                             kv.get("lift"))
            c = classify_s1s3(b)
            rec.update(verdict=str(c.verdict), classification=c.kind, detail=c.detail)
            if c.trivial_summand:
                rec["split_trivial_rank"] = str(c.trivial_summand)
            return rec
        if k == "classify-s1s2":
            kv = dict(a)
            b = LowDimBundle("S1xS2", kv["rank"], kv.get("w1", 0), 0, kv.get("e", 0), None, kv.get("w2"))
            d = classify_s1s2(b)
            rec.update(verdict=str(d.verdict), s1_factor=d.s1_factor, s2_factor=d.s2_factor,
                       trivial_rank=str(d.trivial_rank), notes="every bundle over S1 x S2 splits as a product")
            return rec
        if k == "s4":
            p1, e = s4_invariants(S4BundleClass(*a))
            rec.update(p1=str(p1), e=str(e), rank3_realizable="yes" if e == 0 and s4_realizable(3, p1, 0) else "no")
            return rec
        v = betti_obstruction(*a)
        rec.update(verdict=str(v), bound=str(a[1] * 2 ** a[2]),
                   notes="total Betti number below dim H*(C) * 2^k forces a nonzero differential")
        return rec

    def run(self, script):
        """Yield one record (an ordered dict of strings) per query."""
        for s in script.statements:
            try:
                if isinstance(s, SpaceDecl):
                    self.spaces[s.name] = self.build_space(s.ctor, s.name)
                elif isinstance(s, (BundleDecl, BundleOp)):
                    self.bundles[s.name] = self.build_bundle(s)
                elif isinstance(s, MapDecl):
                    self.maps[s.name] = self.build_map(s)
                else:
                    yield self.query(s)
            except BudgetExceeded as exc:
                raise BudgetExceeded("line %d: %s" % (s.line, exc)) from None
            except (AlgebraError, SpaceError, BundleError, ObstructionError, LowDimError, expr.ExprError) as exc:
                raise ScriptError(str(exc), s.line) from None


def run(script, budget=DEFAULT_BUDGET, cover_m=1):
    return list(Runner(budget, cover_m).run(script))


def format_records(records, quiet=False):
    blocks = []
    for r in records:
        keys = ["query", "verdict"] if quiet else list(r)
        blocks.append("\n".join("%s: %s" % (k, r[k]) for k in keys if k in r))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def main(argv=None):
    ap = argparse.ArgumentParser(prog="bundleobs",
                                 description="Characteristic-class obstructions to nonnegative curvature.")
    ap.add_argument("file", nargs="?", default="-", help="script file, or - for stdin")
    ap.add_argument("-e", dest="text", help="script text given inline (overrides FILE)")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="monomial cap for the search")
    ap.add_argument("--cover-m", type=int, default=1, help="default cover multiplier for realize")
    ap.add_argument("--quiet", action="store_true", help="print only query and verdict lines")
    ap.add_argument("--json", action="store_true", help="print records as a JSON list")
    args = ap.parse_args(argv)
    if args.cover_m < 1 or args.budget < 1:
        ap.error("--budget and --cover-m must be positive")
    if args.text is not None:
        text = args.text.replace(";", "\n")
    elif args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    records = []
    code = EXIT_OK
    try:
        script = parse(text)
        for rec in Runner(args.budget, args.cover_m).run(script):
            records.append(rec)
            if not args.json:
                sys.stdout.write(("\n" if len(records) > 1 else "") + format_records([rec], args.quiet))
    except BudgetExceeded as exc:
        print("bundleobs: budget exceeded: %s" % exc, file=sys.stderr)
        code = EXIT_BUDGET
    except ScriptError as exc:
        print("bundleobs: %s" % exc, file=sys.stderr)
        code = EXIT_ERROR
    if args.json:
        if args.quiet:
            records = [{k: r[k] for k in ("query", "verdict") if k in r} for r in records]
        json.dump(records, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
