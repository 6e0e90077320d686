"""Exact coefficient arithmetic: Gaussian rationals, multivariate polynomials,
and canonically normalized rational functions.

All values are immutable and hashable.  A ``Scalar`` is a fraction of two
polynomials over the Gaussian rationals, kept in lowest terms with the
denominator monic under graded-lexicographic order, so equal scalars have
equal representations and print identically.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def RAT(a=0, b=1):
        return _mpq(a) if b == 1 else _mpq(a, b)

except ImportError:  # pragma: no cover
    def RAT(a=0, b=1):
        return Fraction(a, b)

_RAT_ZERO = RAT(0)
_RAT_ONE = RAT(1)


def rat_pow(a, n: int):
    if n >= 0:
        return a ** n
    return 1 / (a ** (-n))


class GaussianRational:
    """Element re + im*I of Q(I), I^2 = -1, with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_RAT_ZERO) else RAT(re)
        self.im = im if type(im) is type(_RAT_ZERO) else RAT(im)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        return (
            isinstance(other, GaussianRational)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_one(self):
        return self.re == 1 and self.im == 0

    def is_rational(self):
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gaussian(self)


GR_ZERO = GaussianRational(0, 0)
GR_ONE = GaussianRational(1, 0)
GR_I = GaussianRational(0, 1)


def gr(a, b=0) -> GaussianRational:
    return GaussianRational(RAT(a), RAT(b))


def _fmt_rat(x) -> str:
    return str(x)


def format_gaussian(c: GaussianRational, product_context: bool = False) -> str:
    """Render a Gaussian rational; parenthesized when used as a factor."""
    if c.im == 0:
        return _fmt_rat(c.re)
    if c.re == 0:
        if c.im == 1:
            return "I"
        if c.im == -1:
            return "-I"
        s = f"{_fmt_rat(c.im)}*I"
        return s
    im = c.im
    sign = "+" if im > 0 else "-"
    ims = "I" if abs(im) == 1 else f"{_fmt_rat(abs(im))}*I"
    s = f"{_fmt_rat(c.re)}{sign}{ims}"
    return f"({s})" if product_context else s


def _merge_vars(u: tuple[str, ...], v: tuple[str, ...]) -> tuple[str, ...]:
    if u == v:
        return u
    return tuple(sorted(set(u) | set(v)))


def _remap(expv: tuple[int, ...], old: tuple[str, ...], new: tuple[str, ...]):
    pos = {name: k for k, name in enumerate(new)}
    out = [0] * len(new)
    for name, e in zip(old, expv):
        out[pos[name]] = e
    return tuple(out)


def _grlex_key(expv: tuple[int, ...]):
    return (sum(expv), expv)


class Poly:
    """Multivariate polynomial over the Gaussian rationals.

    ``vars`` is the sorted tuple of indeterminate names actually occurring;
    ``terms`` maps exponent vectors (aligned with ``vars``) to nonzero
    coefficients.  Construction always compresses unused variables so that
    structural equality coincides with mathematical equality.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict):
        # compress: drop zero coefficients and unused variables
        terms = {e: c for e, c in terms.items() if not c.is_zero()}
        if vars:
            used = [k for k in range(len(vars)) if any(e[k] for e in terms)]
            if len(used) != len(vars):
                vars = tuple(vars[k] for k in used)
                terms = {tuple(e[k] for k in used): c for e, c in terms.items()}
        self.vars = vars
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c: GaussianRational) -> "Poly":
        if c.is_zero():
            return Poly((), {})
        return Poly((), {(): c})

    @staticmethod
    def variable(name: str) -> "Poly":
        return Poly((name,), {(1,): GR_ONE})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.vars

    def const_value(self) -> GaussianRational:
        if self.vars:
            raise ValueError("not a constant polynomial")
        return self.terms.get((), GR_ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def leading(self):
        """Leading (exponent, coefficient) under graded-lex order."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- arithmetic --------------------------------------------------------

    def _aligned(self, other: "Poly"):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        nv = _merge_vars(self.vars, other.vars)
        a = {_remap(e, self.vars, nv): c for e, c in self.terms.items()}
        b = {_remap(e, other.vars, nv): c for e, c in other.terms.items()}
        return nv, a, b

    def __add__(self, other: "Poly") -> "Poly":
        nv, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return Poly(nv, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return P_ZERO
        nv, a, b = self._aligned(other)
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return Poly(nv, out)

    def scale(self, c: GaussianRational) -> "Poly":
        if c.is_zero():
            return P_ZERO
        return Poly(self.vars, {e: x * c for e, x in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of polynomial")
        result = P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: dict) -> "Poly":
        """Evaluate some variables at Gaussian rational values."""
        if not any(v in bindings for v in self.vars):
            return self
        keep = [k for k, v in enumerate(self.vars) if v not in bindings]
        out: dict = {}
        nv = tuple(self.vars[k] for k in keep)
        for e, c in self.terms.items():
            val = c
            for k, v in enumerate(self.vars):
                if v in bindings and e[k]:
                    b = bindings[v]
                    for _ in range(e[k]):
                        val = val * b
            ne = tuple(e[k] for k in keep)
            s = out.get(ne)
            out[ne] = val if s is None else s + val
        return Poly(nv, out)

    def reduce_square(self, name: str, value: GaussianRational) -> "Poly":
        """Reduce modulo name^2 = value (exponents of ``name`` fold to 0/1)."""
        if name not in self.vars:
            return self
        k = self.vars.index(name)
        out: dict = {}
        for e, c in self.terms.items():
            q, r = divmod(e[k], 2)
            val = c
            for _ in range(q):
                val = val * value
            ne = e[:k] + (r,) + e[k + 1:]
            s = out.get(ne)
            out[ne] = val if s is None else s + val
        return Poly(self.vars, out)

    # -- division and gcd --------------------------------------------------

    def divmod(self, other: "Poly"):
        """Multivariate division under graded-lex; returns (quotient, remainder)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        nv, a, b = self._aligned(other)
        rem = {e: c for e, c in a.items() if not c.is_zero()}
        b = {e: c for e, c in b.items() if not c.is_zero()}
        le = max(b, key=_grlex_key)
        lc = b[le]
        if sum(le) == 0:
            inv = lc.inverse()
            return Poly(nv, {e: c * inv for e, c in rem.items()}), P_ZERO
        quot: dict = {}
        lcinv = lc.inverse()
        while rem:
            re_ = max(rem, key=_grlex_key)
            rc = rem[re_]
            diff = tuple(x - y for x, y in zip(re_, le))
            if any(d < 0 for d in diff):
                break
            q = rc * lcinv
            s = quot.get(diff, GR_ZERO) + q
            if s.is_zero():
                quot.pop(diff, None)
            else:
                quot[diff] = s
            for be, bc in b.items():
                e = tuple(x + y for x, y in zip(diff, be))
                s = rem.get(e, GR_ZERO) - q * bc
                if s.is_zero():
                    rem.pop(e, None)
                else:
                    rem[e] = s
        return Poly(nv, quot), Poly(nv, rem)

    def exact_div(self, other: "Poly"):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


P_ZERO = Poly((), {})
P_ONE = Poly((), {(): GR_ONE})


def _gaussian_int_gcd(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    """Euclidean gcd in the Gaussian integers (inputs must be integral)."""
    while not b.is_zero():
        # nearest-integer quotient
        q = a / b
        qr = RAT(round(Fraction(q.re.numerator, q.re.denominator)))
        qi = RAT(round(Fraction(q.im.numerator, q.im.denominator)))
        qg = GaussianRational(qr, qi)
        a, b = b, a - qg * b
    return a


def _content_and_denclear(p: Poly):
    """Scale to Gaussian-integer coefficients and strip their gcd.

    Returns the primitive integral polynomial; exactness is preserved since
    gcd of a field-coefficient polynomial is only defined up to a unit.
    """
    if p.is_zero():
        return p
    den = 1
    for c in p.terms.values():
        den = den * c.re.denominator // _int_gcd(den, c.re.denominator)
        den = den * c.im.denominator // _int_gcd(den, c.im.denominator)
    scaled = {e: GaussianRational(c.re * den, c.im * den) for e, c in p.terms.items()}
    g = GR_ZERO
    for c in scaled.values():
        g = _gaussian_int_gcd(g, c) if not g.is_zero() else c
        if g.re * g.re + g.im * g.im == 1:
            break
    if not g.is_zero() and not g.is_one():
        ginv = g.inverse()
        scaled = {e: c * ginv for e, c in scaled.items()}
    return Poly(p.vars, scaled)


def _int_gcd(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a if a else 1


def _poly_in_main_var(p: Poly, name: str):
    """View p as a dense coefficient list in ``name`` with Poly coefficients."""
    k = p.vars.index(name)
    rest = p.vars[:k] + p.vars[k + 1:]
    coeffs: dict[int, dict] = {}
    for e, c in p.terms.items():
        d = e[k]
        re_ = e[:k] + e[k + 1:]
        coeffs.setdefault(d, {})[re_] = c
    deg = max(coeffs)
    return [Poly(rest, coeffs.get(i, {})) for i in range(deg + 1)]


def _from_main_var(coeffs: list[Poly], name: str) -> Poly:
    total = P_ZERO
    xn = P_ONE
    x = Poly.variable(name)
    for c in coeffs:
        if not c.is_zero():
            total = total + c * xn
        xn = xn * x
    return total


def _univ_gcd(a: list[GaussianRational], b: list[GaussianRational]):
    """Monic gcd of univariate dense coefficient lists over Q(I)."""

    def strip(p):
        while p and p[-1].is_zero():
            p.pop()
        return p

    a, b = strip(list(a)), strip(list(b))
    while b:
        # a mod b
        inv = b[-1].inverse()
        while len(a) >= len(b):
            q = a[-1] * inv
            off = len(a) - len(b)
            for i, c in enumerate(b):
                a[off + i] = a[off + i] - q * c
            strip(a)
            if not a:
                break
        a, b = b, a
    if not a:
        return []
    inv = a[-1].inverse()
    return [c * inv for c in a]


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """GCD over Q(I), normalized with graded-lex leading coefficient 1."""
    if a.is_zero():
        return _monic(b)
    if b.is_zero():
        return _monic(a)
    if a.is_const() or b.is_const():
        return P_ONE
    # clearing to Gaussian-integer coefficients keeps growth down; the gcd is
    # only defined up to a unit, so this is harmless
    a = _content_and_denclear(a)
    b = _content_and_denclear(b)
    vs = _merge_vars(a.vars, b.vars)
    if len(vs) == 1:
        name = vs[0]
        da = _dense_univ(a, name)
        db = _dense_univ(b, name)
        g = _univ_gcd(da, db)
        if not g:
            return P_ONE
        return Poly((name,), {(i,): c for i, c in enumerate(g) if not c.is_zero()})
    # multivariate: primitive PRS in the last variable
    name = vs[-1]
    ca = _poly_in_main_var(_expand_vars(a, vs), name)
    cb = _poly_in_main_var(_expand_vars(b, vs), name)
    conta = _poly_list_gcd(ca)
    contb = _poly_list_gcd(cb)
    pa = [c.exact_div(conta) for c in ca]
    pb = [c.exact_div(contb) for c in cb]
    g = _primitive_prs(pa, pb)
    cont = poly_gcd(conta, contb)
    return _monic(cont * _from_main_var(g, name))


def _expand_vars(p: Poly, vs: tuple[str, ...]) -> Poly:
    if p.vars == vs:
        return p
    out = Poly(vs, {_remap(e, p.vars, vs): c for e, c in p.terms.items()})
    # Poly() compresses; rebuild with full var tuple preserved via dict view
    return out if out.vars == vs else _pad(out, vs)


def _pad(p: Poly, vs: tuple[str, ...]) -> Poly:
    q = Poly.__new__(Poly)
    q.vars = vs
    q.terms = {_remap(e, p.vars, vs): c for e, c in p.terms.items()}
    return q


def _dense_univ(p: Poly, name: str):
    out = [GR_ZERO] * (p.total_degree() + 1)
    for e, c in p.terms.items():
        out[e[0] if p.vars else 0] = c
    return out


def _poly_list_gcd(ps: list[Poly]) -> Poly:
    g = P_ZERO
    for p in ps:
        if not p.is_zero():
            g = poly_gcd(g, p) if not g.is_zero() else _monic(p)
            if g == P_ONE:
                break
    return g if not g.is_zero() else P_ONE


def _primitive_prs(a: list[Poly], b: list[Poly]) -> list[Poly]:
    def strip(p):
        while p and p[-1].is_zero():
            p.pop()
        return p

    def content(p):
        return _poly_list_gcd(p)

    a, b = strip(list(a)), strip(list(b))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while True:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        while len(r) >= len(b):
            lr = r[-1]
            off = len(r) - len(b)
            r = [c * lb for c in r]
            for i, c in enumerate(b):
                r[off + i] = r[off + i] - lr * c
            strip(r)
            if not r:
                break
        if not r:
            g = b
            break
        cont = content(r)
        r = [c.exact_div(cont) for c in r]
        a, b = b, r
        if len(b) == 1:
            g = [P_ONE]
            break
    return g


def _monic(p: Poly) -> Poly:
    if p.is_zero():
        return p
    _, lc = p.leading()
    if lc.is_one():
        return p
    inv = lc.inverse()
    return Poly(p.vars, {e: c * inv for e, c in p.terms.items()})


class Scalar:
    """Canonical rational function num/den over the Gaussian rationals.

    Invariants: den != 0, gcd(num, den) = 1, and den has graded-lex leading
    coefficient 1 (so constants have den = 1 and equality is structural).
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, _normalized: bool = False):
        if _normalized:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        if num.is_zero():
            self.num = P_ZERO
            self.den = P_ONE
            return
        if den.is_const():
            inv = den.const_value().inverse()
            self.num = num.scale(inv)
            self.den = P_ONE
            return
        g = poly_gcd(num, den)
        if not (g.is_const()):
            num = num.exact_div(g)
            den = den.exact_div(g)
        _, lc = den.leading()
        if not lc.is_one():
            inv = lc.inverse()
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(n) -> "Scalar":
        return Scalar(Poly.const(gr(n)), P_ONE, _normalized=True)

    @staticmethod
    def from_rat(q) -> "Scalar":
        return Scalar(Poly.const(GaussianRational(RAT(q))), P_ONE, _normalized=True)

    @staticmethod
    def from_gaussian(c: GaussianRational) -> "Scalar":
        return Scalar(Poly.const(c), P_ONE, _normalized=True)

    @staticmethod
    def var(name: str) -> "Scalar":
        return Scalar(Poly.variable(name), P_ONE, _normalized=True)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den == P_ONE and self.num == P_ONE

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> GaussianRational:
        if not self.is_const():
            raise ValueError(f"not a constant scalar: {self}")
        return self.num.const_value()

    def is_integer(self) -> bool:
        if not self.is_const():
            return False
        c = self.const_value()
        return c.im == 0 and c.re.denominator == 1

    def as_int(self) -> int:
        c = self.const_value()
        if c.im != 0 or c.re.denominator != 1:
            raise ValueError(f"not an integer scalar: {self}")
        return int(c.re)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            if self.den == P_ONE:
                return Scalar(self.num + other.num, P_ONE)
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den, _normalized=True)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.is_zero() or other.is_zero():
            return S_ZERO
        if self.den == P_ONE and other.den == P_ONE:
            return Scalar(self.num * other.num, P_ONE, _normalized=True)
        return Scalar(self.num * other.num, self.den * other.den)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * other.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        return Scalar(self.num ** n, self.den ** n)

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def substitute(self, bindings: dict) -> "Scalar":
        """Specialize indeterminates at Gaussian rational values.

        Raises ZeroDivisionError when the denominator vanishes under the
        binding; unbound indeterminates remain symbolic.
        """
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes under binding")
        return Scalar(self.num.substitute(bindings), den)

    def reduce_square(self, name: str, value: GaussianRational) -> "Scalar":
        if name not in self.num.vars and name not in self.den.vars:
            return self
        den = self.den.reduce_square(name, value)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes under norm reduction")
        return Scalar(self.num.reduce_square(name, value), den)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


S_ZERO = Scalar.from_int(0)
S_ONE = Scalar.from_int(1)
S_HALF = Scalar.from_rat(Fraction(1, 2))


def normalize(num: Poly, den: Poly) -> Scalar:
    """Canonical lowest-terms fraction of two polynomials."""
    return Scalar(num, den)


# -- printing ---------------------------------------------------------------


def format_poly(p: Poly, product_context: bool = False) -> str:
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)
    parts = []
    for e, c in items:
        factors = []
        for name, k in zip(p.vars, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if not factors:
            mono = format_gaussian(c, product_context=False)
        elif c.is_one():
            mono = "*".join(factors)
        elif c == -GR_ONE:
            mono = "-" + "*".join(factors)
        else:
            mono = format_gaussian(c, product_context=True) + "*" + "*".join(factors)
        parts.append(mono)
    s = parts[0]
    for part in parts[1:]:
        s += part if part.startswith("-") else "+" + part
    if product_context and (len(items) > 1 or s.startswith("-")):
        return f"({s})"
    return s


def format_scalar(s: Scalar) -> str:
    if s.den == P_ONE:
        return format_poly(s.num)
    num = format_poly(s.num, product_context=True)
    den = format_poly(s.den, product_context=True)
    return f"{num}/{den}"


# -- parsing ----------------------------------------------------------------


class ScalarSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _ScalarParser:
    """Recursive-descent parser for the textual scalar syntax.

    Grammar: integers, fractions a/b, I, indeterminate names (``p`` aliases
    q^2), and + - * / ^ ( ).
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ScalarSyntaxError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Scalar:
        v = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected trailing input {self.text[self.pos:]!r}")
        return v

    def expr(self) -> Scalar:
        ch = self.peek()
        neg = False
        if ch in "+-":
            self.pos += 1
            neg = ch == "-"
        v = self.term()
        if neg:
            v = -v
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                v = v + self.term()
            elif ch == "-":
                self.pos += 1
                v = v - self.term()
            else:
                return v

    def term(self) -> Scalar:
        v = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                v = v * self.power()
            elif ch == "/":
                self.pos += 1
                v = v / self.power()
            else:
                return v

    def power(self) -> Scalar:
        v = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            n = self.integer()
            v = v ** (sign * n)
        return v

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def atom(self) -> Scalar:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            v = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return v
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch.isdigit():
            return Scalar.from_int(self.integer())
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start:self.pos]
            if name == "I":
                return Scalar.from_gaussian(GR_I)
            if name == "p":
                return Scalar.var("q") ** 2
            return Scalar.var(name)
        self.error(f"unexpected character {ch!r}")


def parse_scalar(text: str) -> Scalar:
    return _ScalarParser(text).parse()
