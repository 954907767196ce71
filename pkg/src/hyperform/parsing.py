"""Small recursive-descent parser for polynomials in x over Q(a).

Accepts integer literals, the symbols ``a`` and ``x``, ``+ - * / ^ **``,
parentheses, implicit multiplication (``3a``, ``2x^5``, ``(1+a)x``) and
TeX-style exponents ``x^{6}``.
"""

from __future__ import annotations

import re

from .nfield import FieldError, QuadField

_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^(){}])|([A-Za-z_]\w*))")


class ParseError(FieldError):
    pass


def _tokenize(text: str):
    pos, out = 0, []
    text = text.replace("·", "*").replace("−", "-")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        num, op, name = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif op is not None:
            out.append(("op", "^" if op == "**" else op))
        else:
            out.append(("name", name))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, field: QuadField, var):
        self.toks = tokens
        self.i = 0
        self.field = field
        self.var = var

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, got {val!r}")

    # grammar: expr := term (('+'|'-') term)*
    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = _scale(self.term(), sign, self.field)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = _add(acc, _scale(t, -1 if val == "-" else 1, self.field))
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = _mul(acc, self.power())
            elif kind == "op" and val == "/":
                self.take()
                d = self.power()
                if set(d) != {0}:
                    raise ParseError("division by a non-constant")
                inv = d[0].inverse()
                acc = {k: v * inv for k, v in acc.items()}
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                acc = _mul(acc, self.power())
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.peek()
            if kind == "op" and val == "{":
                self.take()
                e = self._int_expr()
                self.expect("}")
            elif kind == "op" and val == "(":
                self.take()
                e = self._int_expr()
                self.expect(")")
            else:
                e = self._int_expr()
            return _pow(base, e, self.field)
        return base

    def _int_expr(self):
        kind, val = self.take()
        neg = False
        if kind == "op" and val == "-":
            neg = True
            kind, val = self.take()
        if kind != "num":
            raise ParseError("exponent must be an integer literal")
        return -val if neg else val

    def atom(self):
        kind, val = self.take()
        f = self.field
        if kind == "num":
            return {0: f(val)}
        if kind == "name":
            if val == "a":
                return {0: f.gen}
            if self.var is not None and val == self.var:
                return {1: f.one}
            raise ParseError(f"unknown symbol {val!r}")
        if kind == "op" and val in "({":
            inner = self.expr()
            self.expect(")" if val == "(" else "}")
            return inner
        if kind == "op" and val == "-":
            return _scale(self.power(), -1, f)
        raise ParseError(f"unexpected token {val!r}")


def _clean(p):
    return {k: v for k, v in p.items() if not v.is_zero()}


def _add(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out[k] + v if k in out else v
    return _clean(out)


def _scale(p, c, field):
    return {k: v * c for k, v in p.items()}


def _mul(p, q):
    out = {}
    for i, u in p.items():
        for j, v in q.items():
            w = u * v
            out[i + j] = out[i + j] + w if i + j in out else w
    return _clean(out)


def _pow(p, e, field):
    if e < 0:
        if set(p) != {0}:
            raise ParseError("negative power of a non-constant")
        return {0: p[0] ** e}
    out = {0: field.one}
    for _ in range(e):
        out = _mul(out, p)
    return out


def parse_polynomial(text: str, field: QuadField, var: str | None = "x"):
    """Parse into a dict {power: FieldElement} (zero coefficients dropped)."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty expression")
    p = _Parser(toks, field, var)
    out = p.expr()
    if p.i != len(toks):
        raise ParseError(f"trailing input in {text!r}")
    return out


def split_top_level(text: str, sep: str = ","):
    """Split on ``sep`` outside brackets."""
    depth, cur, out = 0, [], []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out]
