"""Expression trees for mode products, their parser, and printers.

The textual grammar mirrors the notation used throughout the identity
catalog: ``w_3 w`` is the mode-3 product of the conformal vector with itself,
``H[1]_0 E`` applies the weight-4 generator at mode 0 to E, chains nest to
the right (``a_m b_n w`` means ``a_m (b_n w)``), ``h[i](m)`` acts directly as
a Heisenberg mode, and scalar factors use the scalar syntax (integers,
fractions, ``I``, ``q``, ``z``, ``p`` for ``q^2``).  Twisted mode subscripts
admit halves, written ``_3/2`` or ``_-1/2``.
"""

from __future__ import annotations

from fractions import Fraction

from .fock import State, VoaError
from .scalars import S_ONE, Scalar, ScalarSyntaxError, format_scalar
from .twisted import TwistedState


class Span:
    __slots__ = ("start", "end")

    def __init__(self, start: int, end: int):
        self.start = start
        self.end = end


class ExprNode:
    """AST node: sum, scale, apply (vertex mode), hmode, or a named atom."""

    __slots__ = ("kind", "scalar", "children", "name", "params", "mode", "span")

    def __init__(self, kind, *, scalar=None, children=(), name=None,
                 params=(), mode=None, span=None):
        self.kind = kind
        self.scalar = scalar
        self.children = list(children)
        self.name = name
        self.params = tuple(params)
        self.mode = mode
        self.span = span

    def __repr__(self):
        return f"<{self.kind} {format_expr(self)}>"

    def __eq__(self, other):
        if not isinstance(other, ExprNode):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.scalar == other.scalar
            and self.name == other.name
            and self.params == other.params
            and self.mode == other.mode
            and self.children == other.children
        )


def sum_node(children):
    return ExprNode("sum", children=children)


def scale_node(scalar: Scalar, child: ExprNode):
    return ExprNode("scale", scalar=scalar, children=[child])


def apply_node(head: ExprNode, mode, arg: ExprNode):
    return ExprNode("apply", mode=Fraction(mode), children=[head, arg])


def hmode_node(index: int, mode: int, arg: ExprNode):
    return ExprNode("hmode", params=(index,), mode=Fraction(mode), children=[arg])


def atom_node(name: str, params=()):
    return ExprNode("atom", name=name, params=tuple(params))


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_ATOM_NAMES = {"w", "H", "J", "S", "E", "Eu", "Et", "Lam", "e", "h", "vac", "vactw"}


class _Tok:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("num", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum()):
                j += 1
            toks.append(_Tok("name", text[i:j], i))
            i = j
            continue
        if ch in "_()[],+-*/^":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unknown token {ch!r}", i)
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> _Tok:
        t = self.next()
        if t.kind != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {t.text!r}", t.pos)
        return t

    def error(self, msg: str):
        raise ExprSyntaxError(msg, self.peek().pos)

    # value = ExprNode (state-valued) or Scalar (scalar-valued)

    def parse(self) -> ExprNode:
        v = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected trailing input {self.peek().text!r}")
        if isinstance(v, Scalar):
            self.error("expression is a bare scalar, not a state")
        return v

    def expr(self):
        first = True
        parts = []
        sign = 1
        while True:
            t = self.peek()
            if t.kind in "+-":
                self.next()
                sign = 1 if t.kind == "+" else -1
            elif not first:
                break
            v = self.term()
            if sign < 0:
                v = (-v) if isinstance(v, Scalar) else scale_node(
                    Scalar.from_int(-1), v
                )
            parts.append(v)
            sign = 1
            first = False
            if self.peek().kind not in "+-":
                break
        if len(parts) == 1:
            return parts[0]
        if all(isinstance(p, Scalar) for p in parts):
            total = parts[0]
            for p in parts[1:]:
                total = total + p
            return total
        if any(isinstance(p, Scalar) for p in parts):
            self.error("cannot add a scalar to a state")
        return sum_node(parts)

    def term(self):
        factors = [self.factor()]
        while True:
            t = self.peek()
            if t.kind == "*":
                self.next()
                factors.append(self.factor())
            elif t.kind == "/":
                self.next()
                f = self.factor()
                if not isinstance(f, Scalar):
                    self.error("cannot divide by a state")
                factors.append(f.inverse())
            else:
                break
        scalars = [f for f in factors if isinstance(f, Scalar)]
        states = [f for f in factors if not isinstance(f, Scalar)]
        if len(states) > 1:
            self.error("cannot multiply two states")
        coeff = S_ONE
        for s in scalars:
            coeff = coeff * s
        if not states:
            return coeff
        if coeff.is_one():
            return states[0]
        return scale_node(coeff, states[0])

    def factor(self):
        t = self.peek()
        if t.kind == "-":
            self.next()
            f = self.factor()
            return (-f) if isinstance(f, Scalar) else scale_node(
                Scalar.from_int(-1), f
            )
        v = self.primary()
        while self.peek().kind == "^":
            self.next()
            neg = False
            if self.peek().kind == "-":
                self.next()
                neg = True
            n = int(self.expect("num").text)
            if not isinstance(v, Scalar):
                self.error("exponent on a state is not supported; repeat the mode")
            v = v ** (-n if neg else n)
        return v

    def primary(self):
        t = self.peek()
        if t.kind == "num":
            self.next()
            return Scalar.from_int(int(t.text))
        if t.kind == "(":
            self.next()
            v = self.expr()
            self.expect(")")
            if isinstance(v, Scalar):
                return v
            return self.continue_chain(v)
        if t.kind == "name":
            if t.text in _ATOM_NAMES:
                return self.chain()
            self.next()
            if t.text == "I":
                from .scalars import GR_I

                return Scalar.from_gaussian(GR_I)
            if t.text == "p":
                return Scalar.var("q") ** 2
            return Scalar.var(t.text)
        self.error(f"unexpected token {t.text!r}")

    # -- chains ------------------------------------------------------------

    def chain(self):
        t = self.peek()
        if t.kind == "(":
            self.next()
            v = self.expr()
            self.expect(")")
            if isinstance(v, Scalar):
                self.error("parenthesized scalar cannot head a chain")
            return self.continue_chain(v)
        atom = self.state_atom()
        return self.continue_chain(atom)

    def continue_chain(self, head: ExprNode):
        t = self.peek()
        if t.kind == "_":
            self.next()
            mode = self.mode_index()
            arg = self.chain_argument()
            return apply_node(head, mode, arg)
        if head.kind == "atom" and head.name == "h" and len(head.params) == 2:
            # bare Heisenberg mode acts directly on the rest of the chain
            i, m = head.params
            arg = self.chain_argument()
            return hmode_node(i, m, arg)
        if self.peek().kind in ("name", "(") and (
            self.peek().kind == "(" or self.peek().text in _ATOM_NAMES
        ):
            self.error("operator in a chain needs a mode subscript")
        return head

    def chain_argument(self):
        t = self.peek()
        if t.kind == "(" or (t.kind == "name" and t.text in _ATOM_NAMES):
            return self.chain()
        self.error("a mode application needs a state to act on")

    def mode_index(self) -> Fraction:
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        num = int(self.expect("num").text)
        if self.peek().kind == "/":
            self.next()
            den = int(self.expect("num").text)
            if den != 2:
                raise ExprSyntaxError("mode denominators must be 2", self.peek().pos)
            return Fraction(sign * num, 2)
        return Fraction(sign * num)

    def state_atom(self) -> ExprNode:
        t = self.expect("name")
        name = t.text
        if name in ("vac", "vactw", "E"):
            return atom_node(name)
        if name in ("w", "H", "J"):
            if self.peek().kind == "[":
                self.next()
                i = self.int_value()
                self.expect("]")
                return atom_node(name, (i,))
            return atom_node(name)
        if name in ("S", "Eu", "Et", "Lam"):
            self.expect("[")
            i = self.int_value()
            self.expect(",")
            j = self.int_value()
            self.expect("]")
            if name == "S":
                self.expect("(")
                l = self.int_value()
                self.expect(",")
                m = self.int_value()
                self.expect(")")
                return atom_node("S", (i, j, l, m))
            return atom_node(name, (i, j))
        if name == "h":
            i = 1
            if self.peek().kind == "[":
                self.next()
                i = self.int_value()
                self.expect("]")
            self.expect("(")
            m = self.mode_index()
            self.expect(")")
            return atom_node("h", (i, m))
        if name == "e":
            self.expect("(")
            coeffs = [self.int_value()]
            while self.peek().kind == ",":
                self.next()
                coeffs.append(self.int_value())
            self.expect(")")
            return atom_node("e", tuple(coeffs))
        raise ExprSyntaxError(f"unknown atom {name!r}", t.pos)

    def int_value(self) -> int:
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        return sign * int(self.expect("num").text)


def parse(text: str) -> ExprNode:
    """Parse an expression; raises ExprSyntaxError with a position on failure."""
    try:
        return _Parser(text).parse()
    except ScalarSyntaxError as exc:  # normalized error type
        raise ExprSyntaxError(str(exc), getattr(exc, "pos", 0)) from exc


# -- printing -------------------------------------------------------------------


def _fmt_mode(m: Fraction) -> str:
    if m.denominator == 1:
        return str(m.numerator)
    return f"{m.numerator}/{m.denominator}"


def format_expr(node: ExprNode) -> str:
    return _fmt(node, top=True)


def _fmt(node: ExprNode, top: bool = False) -> str:
    if node.kind == "sum":
        parts = [_fmt(c, top=True) for c in node.children]
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s if top else f"({s})"
    if node.kind == "scale":
        inner = _fmt(node.children[0])
        sc = node.scalar
        if sc == Scalar.from_int(-1):
            return f"-{inner}"
        txt = format_scalar(sc)
        if any(c in txt for c in "+-") and not txt.startswith("-"):
            txt = f"({txt})"
        elif txt.startswith("-") and any(c in txt[1:] for c in "+-"):
            txt = f"({txt})"
        return f"{txt}*{inner}"
    if node.kind == "apply":
        head_node = node.children[0]
        if head_node.kind == "atom":
            head = _fmt(head_node)
        else:
            head = f"({_fmt(head_node, top=True)})"
        return f"{head}_{_fmt_mode(node.mode)} {_fmt(node.children[1], top=False)}"
    if node.kind == "hmode":
        i = node.params[0]
        return f"h[{i}]({_fmt_mode(node.mode)}) {_fmt(node.children[0])}"
    if node.kind == "atom":
        name = node.name
        if name in ("vac", "vactw", "E"):
            return name
        if name in ("w", "H", "J"):
            return name if not node.params else f"{name}[{node.params[0]}]"
        if name == "S":
            i, j, l, m = node.params
            return f"S[{i},{j}]({l},{m})"
        if name in ("Eu", "Et", "Lam"):
            i, j = node.params
            return f"{name}[{i},{j}]"
        if name == "h":
            i, m = node.params
            return f"h[{i}]({_fmt_mode(Fraction(m))})"
        if name == "e":
            return "e(" + ",".join(str(c) for c in node.params) + ")"
    raise VoaError(f"cannot print node kind {node.kind!r}")


def format_state(s) -> str:
    """Canonical-term rendering of a state, one monomial per summand."""
    if isinstance(s, TwistedState):
        return format_twisted_state(s)
    if s.is_zero():
        return "0"
    parts = []
    for mono, coeff in sorted(
        s.terms.items(), key=lambda kv: (kv[0].momentum, kv[0].modes)
    ):
        body = "".join(
            f"h[{i}](-{n})"
            for i, n in sorted(mono.modes, key=lambda t: (t[0], -t[1]))
        )
        if any(mono.momentum):
            body += " " if body else ""
            body += "e(" + ",".join(str(c) for c in mono.momentum) + ")"
        elif not body:
            body = "vac"
        else:
            body += " vac"
        txt = format_scalar(coeff)
        if txt == "1":
            parts.append(body)
        elif txt == "-1":
            parts.append(f"-{body}")
        else:
            if any(c in txt[1:] for c in "+-") or "/" in txt:
                txt = f"({txt})"
            parts.append(f"{txt}*{body}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def format_twisted_state(s: TwistedState) -> str:
    if s.is_zero():
        return "0"
    parts = []
    for mono, coeff in sorted(s.terms.items(), key=lambda kv: kv[0].modes):
        body = "".join(f"h[{i}](-{_fmt_mode(n)})" for i, n in mono.modes)
        body = (body + " vactw") if body else "vactw"
        txt = format_scalar(coeff)
        if txt == "1":
            parts.append(body)
        elif txt == "-1":
            parts.append(f"-{body}")
        else:
            if any(c in txt[1:] for c in "+-") or "/" in txt:
                txt = f"({txt})"
            parts.append(f"{txt}*{body}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out
