"""Half-integer moded Fock space with the involution-twisted action of the
Heisenberg part.

Twisted vertex operators are built in two stages: the quadratic annihilation
operator with exact series coefficients c_mn (a correction exponential that
terminates because each application removes two creation modes), followed by
the normally-ordered operator Y0 over half-integer modes.
"""

from __future__ import annotations

from fractions import Fraction

from .fock import LatticeContext, State, VoaError, accumulate
from .scalars import RAT, S_ONE, Scalar

HALF = Fraction(1, 2)


class TwistedMonomial:
    """Sorted multiset of (basis index, half-integer creation depth)."""

    __slots__ = ("modes", "_hash")

    def __init__(self, modes):
        modes = tuple(sorted((i, Fraction(n)) for i, n in modes))
        for i, n in modes:
            if n <= 0 or (2 * n) % 1 != 0 or n % 1 != HALF:
                raise VoaError(f"twisted creation depth must be in 1/2 + Z>=0, got {n}")
        self.modes = modes
        self._hash = hash(modes)

    def __eq__(self, other):
        return self.modes == other.modes

    def __hash__(self):
        return self._hash

    def depth(self) -> Fraction:
        return sum((n for _, n in self.modes), Fraction(0))

    def __repr__(self):
        return f"TwistedMonomial({self.modes!r})"


class TwistedState:
    """Finite linear combination of twisted monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @staticmethod
    def zero() -> "TwistedState":
        return TwistedState({})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, TwistedState) and self.terms == other.terms

    def __add__(self, other: "TwistedState") -> "TwistedState":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            ns = c if s is None else s + c
            if ns.is_zero():
                out.pop(m, None)
            else:
                out[m] = ns
        t = TwistedState.__new__(TwistedState)
        t.terms = out
        return t

    def __sub__(self, other: "TwistedState") -> "TwistedState":
        return self + other.scale(Scalar.from_int(-1))

    def scale(self, c: Scalar) -> "TwistedState":
        if c.is_zero():
            return TwistedState.zero()
        if c.is_one():
            return self
        t = TwistedState.__new__(TwistedState)
        t.terms = {m: x * c for m, x in self.terms.items()}
        return t

    def items(self):
        return self.terms.items()

    def __repr__(self):
        from .exprs import format_twisted_state

        return f"<TwistedState {format_twisted_state(self)}>"


def twisted_vacuum() -> TwistedState:
    return TwistedState({TwistedMonomial(()): S_ONE})


def theta_twisted(s: TwistedState) -> TwistedState:
    """Involution on the twisted space: sign (-1)^#modes."""
    out: dict = {}
    for mono, coeff in s.terms.items():
        c = coeff if len(mono.modes) % 2 == 0 else coeff * Scalar.from_int(-1)
        accumulate(out, mono, c)
    return TwistedState(out)


def half_mode_action(ctx: LatticeContext, i: int, m, s: TwistedState) -> TwistedState:
    """Heisenberg mode h^[i](m), m in 1/2 + Z, on a twisted state."""
    m = Fraction(m)
    if m % 1 != HALF:
        raise VoaError(f"twisted mode index must be in 1/2 + Z, got {m}")
    if not 1 <= i <= ctx.rank:
        raise VoaError(f"basis index {i} out of range 1..{ctx.rank}")
    out: dict = {}
    for mono, coeff in s.terms.items():
        if m < 0:
            accumulate(out, TwistedMonomial(mono.modes + ((i, -m),)), coeff)
        else:
            for k, (j, n) in enumerate(mono.modes):
                if j == i and n == m:
                    rest = mono.modes[:k] + mono.modes[k + 1:]
                    accumulate(out, TwistedMonomial(rest),
                               coeff * Scalar.from_rat(RAT(m.numerator, m.denominator)))
    return TwistedState(out)


# -- c_mn series ---------------------------------------------------------------


class CTable:
    """Exact coefficients c_mn of the twisted correction series.

    The generating function is -log((sqrt(1+x) + sqrt(1+y))/2); the table is
    symmetric and c_00 = 0.
    """

    __slots__ = ("max_degree", "values")

    def __init__(self, max_degree: int, values: dict):
        self.max_degree = max_degree
        self.values = values

    def __getitem__(self, key):
        m, n = key
        if m + n > self.max_degree:
            raise KeyError(f"c_{m}{n} beyond computed degree {self.max_degree}")
        return self.values.get((m, n), RAT(0))


def _series_mul(a: dict, b: dict, maxdeg: int) -> dict:
    out: dict = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            i, j = i1 + i2, j1 + j2
            if i + j > maxdeg:
                continue
            key = (i, j)
            out[key] = out.get(key, RAT(0)) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def c_table(max_degree: int) -> CTable:
    """Bivariate Taylor coefficients of the correction series through the
    given total degree, computed with exact rational arithmetic."""
    if max_degree < 0:
        raise VoaError("max_degree must be >= 0")
    # sqrt(1+t) by the binomial series
    sq = [RAT(0)] * (max_degree + 1)
    for k in range(max_degree + 1):
        num = RAT(1)
        m = Fraction(1, 2)
        for t in range(k):
            num = num * RAT((m - t).numerator, (m - t).denominator)
        for t in range(2, k + 1):
            num = num / t
        sq[k] = num
    # w = (sqrt(1+x) + sqrt(1+y))/2 - 1
    w: dict = {}
    for k in range(1, max_degree + 1):
        w[(k, 0)] = sq[k] / 2
        w[(0, k)] = w.get((0, k), RAT(0)) + sq[k] / 2
    # -log(1+w) = sum_{k>=1} (-1)^k w^k / k
    total: dict = {}
    wk = {(0, 0): RAT(1)}
    for k in range(1, max_degree + 1):
        wk = _series_mul(wk, w, max_degree)
        if not wk:
            break
        sign = RAT(-1) if k % 2 == 1 else RAT(1)
        for key, c in wk.items():
            total[key] = total.get(key, RAT(0)) + sign * c / k
    values = {k: v for k, v in total.items() if v != 0}
    return CTable(max_degree, values)


_CTABLES: dict[int, CTable] = {}


def cached_c_table(max_degree: int) -> CTable:
    """Tables are extended lazily to the degree a computation demands."""
    have = [d for d in _CTABLES if d >= max_degree]
    if have:
        return _CTABLES[min(have)]
    table = c_table(max_degree)
    _CTABLES[max_degree] = table
    return table


# -- the correction exponential ------------------------------------------------


def _delta_once(ctx: LatticeContext, s: State, table: CTable) -> dict[int, State]:
    """One application of the quadratic annihilation operator, keyed by the
    x-power shift -(m+n)."""
    from .fock import mode_action

    out: dict[int, State] = {}
    maxd = max((m.depth() for m in s.terms), default=0)
    for m in range(1, maxd + 1):
        for n in range(1, maxd - m + 1):
            c = table[(m, n)]
            if c == 0:
                continue
            acc = State.zero()
            for i in range(1, ctx.rank + 1):
                acc = acc + mode_action(ctx, i, n, mode_action(ctx, i, m, s))
            if acc.is_zero():
                continue
            shift = -(m + n)
            prev = out.get(shift, State.zero())
            out[shift] = prev + acc.scale(Scalar.from_rat(c))
    return {k: v for k, v in out.items() if not v.is_zero()}


def delta_apply(ctx: LatticeContext, u: State) -> dict[int, State]:
    """exp of the correction operator on a momentum-zero state, as a finite
    map from x-power shifts to states."""
    for mono in u.terms:
        if any(mono.momentum):
            raise VoaError("twisted correction requires momentum zero")
    maxd = max((m.depth() for m in u.terms), default=0)
    table = cached_c_table(max(maxd, 0))
    result: dict[int, State] = {0: u}
    term: dict[int, State] = {0: u}
    k = 0
    while term:
        k += 1
        inv = Scalar.from_rat(RAT(1, k))
        nxt: dict[int, State] = {}
        for shift, s in term.items():
            for dshift, ds in _delta_once(ctx, s, table).items():
                key = shift + dshift
                prev = nxt.get(key, State.zero())
                nxt[key] = prev + ds.scale(inv)
        term = {k2: v for k2, v in nxt.items() if not v.is_zero()}
        for shift, s in term.items():
            prev = result.get(shift, State.zero())
            result[shift] = prev + s
    return {k2: v for k2, v in result.items() if not v.is_zero()}


# -- Y0 and the full twisted product -------------------------------------------


def _y0_bound(um, wm: TwistedMonomial) -> Fraction:
    return Fraction(um.depth()) + wm.depth()


def _y0_mono(ctx: LatticeContext, um, n: Fraction, wm: TwistedMonomial
             ) -> TwistedState:
    key = ("y0", um, n, wm)
    cache = ctx._twisted_cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not um.modes:
        result = (
            TwistedState({wm: S_ONE}) if n == -1 else TwistedState.zero()
        )
    else:
        i, k = um.modes[0]
        from .fock import FockMonomial

        u2 = FockMonomial(um.modes[1:], um.momentum)
        out: dict = {}
        # creation half: m in 1/2 + Z, m <= -1/2
        m = -HALF
        lo = n - k - _y0_bound(u2, wm)
        while m >= lo:
            c = _binom_frac(-m - 1, k - 1)
            if c != 0:
                inner = _y0_mono(ctx, u2, n - m - k, wm)
                if not inner.is_zero():
                    acted = half_mode_action(ctx, i, m, inner)
                    sc = Scalar.from_rat(c)
                    for mono, x in acted.terms.items():
                        accumulate(out, mono, x * sc)
            m -= 1
        # annihilation half: m in 1/2 + Z, m > 0 bounded by the state's depth
        depths = sorted({d for j, d in wm.modes if j == i})
        for m in depths:
            acted = half_mode_action(ctx, i, m, TwistedState({wm: S_ONE}))
            if acted.is_zero():
                continue
            sc = Scalar.from_rat(_binom_frac(-m - 1, k - 1))
            for mono, x in acted.terms.items():
                inner = _y0_mono(ctx, u2, n - m - k, mono)
                if inner.is_zero():
                    continue
                c = x * sc
                for mono2, y in inner.terms.items():
                    accumulate(out, mono2, y * c)
        result = TwistedState(out)
    cache[key] = result
    return result


def _binom_frac(m: Fraction, k: int):
    if k < 0:
        return RAT(0)
    out = RAT(1)
    for t in range(k):
        v = m - t
        out = out * RAT(v.numerator, v.denominator)
    for t in range(2, k + 1):
        out = out / t
    return out


def y0_product(ctx: LatticeContext, u: State, n, w: TwistedState) -> TwistedState:
    """Mode of the plain normally-ordered twisted operator, without the
    correction exponential."""
    n = Fraction(n)
    out = TwistedState.zero()
    for um, uc in u.terms.items():
        if any(um.momentum):
            raise VoaError("only Heisenberg-part operators act on twisted states")
        for wm, wc in w.terms.items():
            r = _y0_mono(ctx, um, n, wm)
            if not r.is_zero():
                out = out + r.scale(uc * wc)
    return TwistedState({m: ctx.reduce(c) for m, c in out.terms.items()})


def twisted_product(ctx: LatticeContext, u: State, n, w: TwistedState
                    ) -> TwistedState:
    """Twisted mode action: the x^(-n-1) coefficient of the corrected
    operator Y0(exp(Delta) u, x) on a twisted state."""
    n = Fraction(n)
    out = TwistedState.zero()
    for shift, us in delta_apply(ctx, u).items():
        out = out + y0_product(ctx, us, n + shift, w)
    return out


# -- JSON -----------------------------------------------------------------------


def twisted_state_to_json(s: TwistedState) -> list[dict]:
    terms = []
    for mono, coeff in sorted(s.terms.items(), key=lambda kv: kv[0].modes):
        terms.append(
            {
                "coeff": str(coeff),
                "modes": [[i, [n.numerator, n.denominator]] for i, n in mono.modes],
            }
        )
    return terms


def twisted_state_from_json(ctx: LatticeContext, data: list[dict]) -> TwistedState:
    out: dict = {}
    for term in data:
        coeff = ctx.scalar(term.get("coeff", "1"))
        modes = tuple(
            (int(i), Fraction(int(n[0]), int(n[1]))) for i, n in term.get("modes", [])
        )
        accumulate(out, TwistedMonomial(modes), coeff)
    return TwistedState(out)
