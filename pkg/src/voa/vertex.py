"""Untwisted vertex operators: mode products u_n v in canonical form, the
standard residual checks (commutator, Borcherds, skew symmetry), the mode
expansion of composite operators (a_k b)_n, and the Zhu products with an
O(V)-membership certificate search.

The product recursion follows the usual construction: the vacuum gives
delta_{n,-1}, exponentials act through exp-series of momentum modes with the
sign cocycle and the x^<mu,nu> shift, and a leading creation mode splits off
as the normally-ordered derivative field h^[i](x) against the rest.  All sums
are truncated by exact finite support bounds, so every result is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .fock import (
    FockMonomial,
    LatticeContext,
    State,
    VoaError,
    accumulate,
    mode_action,
    momentum_mode_action,
    vacuum,
    weight,
    weight_components,
)
from .scalars import RAT, S_ONE, S_ZERO, Scalar


def binom(m, k: int):
    """Falling-factorial binomial, defined for any rational m and k >= 0."""
    if k < 0:
        return RAT(0)
    out = RAT(1)
    m = RAT(m)
    for t in range(k):
        out = out * (m - t)
    for t in range(2, k + 1):
        out = out / t
    return out


def _sbinom(m, k: int) -> Scalar:
    return Scalar.from_rat(binom(m, k))


def reduce_state(ctx: LatticeContext, s: State) -> State:
    if ctx.norm_rule is None:
        return s
    return State({m: ctx.reduce(c) for m, c in s.terms.items()})


def _bound_mono(ctx: LatticeContext, u: FockMonomial, v: FockMonomial) -> int:
    """Exact finite-support bound: u_n v = 0 for every n above it."""
    d = u.depth() + v.depth()
    if any(u.momentum) and any(v.momentum):
        t = ctx.pairing(u.momentum, v.momentum)
        if not t.is_integer():
            raise VoaError(f"non-integer exponent pairing {t}")
        d += max(0, -t.as_int())
    return d


def max_product_index(ctx: LatticeContext, u: State, v: State) -> int:
    """Largest n for which u_n v can be nonzero (exact truncation bound)."""
    best = None
    for um in u.terms:
        for vm in v.terms:
            b = _bound_mono(ctx, um, vm)
            best = b if best is None else max(best, b)
    return -1 if best is None else best


def _cache(ctx: LatticeContext) -> dict:
    return ctx._product_cache


def product(ctx: LatticeContext, u: State, n: int, v: State) -> State:
    """Coefficient of x^(-n-1) in Y(u, x)v as a canonical state."""
    total: dict = {}
    for um, uc in u.terms.items():
        for vm, vc in v.terms.items():
            r = _product_mono(ctx, um, n, vm)
            if r.is_zero():
                continue
            c = uc * vc
            for m, x in r.terms.items():
                accumulate(total, m, ctx.reduce(x * c))
    return State(total)


def _product_mono(ctx: LatticeContext, um: FockMonomial, n: int,
                  vm: FockMonomial) -> State:
    key = (um, n, vm)
    cache = _cache(ctx)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if um.modes:
        result = _product_split(ctx, um, n, vm)
    elif not any(um.momentum):
        result = State({vm: S_ONE}) if n == -1 else State.zero()
    else:
        result = _product_exponential(ctx, um.momentum, n, vm)
    result = reduce_state(ctx, result)
    cache[key] = result
    return result


def _product_split(ctx: LatticeContext, um: FockMonomial, n: int,
                   vm: FockMonomial) -> State:
    """Normal-ordered splitting on the leading creation mode of u."""
    i, k = um.modes[0]
    u2 = FockMonomial(um.modes[1:], um.momentum)
    out: dict = {}
    # creation half of (1/(k-1)!) d^(k-1) h^[i](x): modes m <= -1 on the left
    lo = n - k - _bound_mono(ctx, u2, vm)
    for m in range(lo, 0):
        c = binom(-m - 1, k - 1)
        if not c:
            continue
        inner = _product_mono(ctx, u2, n - m - k, vm)
        if inner.is_zero():
            continue
        acted = mode_action(ctx, i, m, inner)
        sc = Scalar.from_rat(c)
        for mono, x in acted.terms.items():
            accumulate(out, mono, x * sc)
    # annihilation half: modes m >= 0 act on v first
    maxdepth = max((d for j, d in vm.modes if j == i), default=0)
    for m in range(0, maxdepth + 1):
        acted = mode_action(ctx, i, m, State({vm: S_ONE}))
        if acted.is_zero():
            continue
        sc = Scalar.from_rat(binom(-m - 1, k - 1))
        for mono, x in acted.terms.items():
            inner = _product_mono(ctx, u2, n - m - k, mono)
            if inner.is_zero():
                continue
            c = x * sc
            for mono2, y in inner.terms.items():
                accumulate(out, mono2, y * c)
    return State(out)


def _product_exponential(ctx: LatticeContext, mu: tuple[int, ...], n: int,
                         vm: FockMonomial) -> State:
    """Y(e^mu, x) v: exp of creation modes times exp of annihilation modes,
    with the cocycle sign and the x^<mu,nu> shift."""
    nu = vm.momentum
    t = ctx.pairing(mu, nu)
    if not t.is_integer():
        raise VoaError(f"non-integer exponent pairing {t}")
    t = t.as_int()
    sign = ctx.epsilon(mu, nu)
    shifted = tuple(a + b for a, b in zip(mu, nu))
    base = State({vm.with_momentum(shifted): S_ONE})
    if sign < 0:
        base = base.scale(Scalar.from_int(-1))
    # annihilation series exp(-sum_{k>=1) mu(k) x^-k / k) on v, by the
    # recursion j*G_j = -sum_k mu(k) G_{j-k}
    gs = [base]
    for j in range(1, vm.depth() + 1):
        acc = State.zero()
        for k in range(1, j + 1):
            if gs[j - k].is_zero():
                continue
            acc = acc + momentum_mode_action(ctx, mu, k, gs[j - k])
        gs.append(acc.scale(Scalar.from_rat(RAT(-1, j))))
    # creation series exp(sum_{k>=1} mu(-k) x^k / k): l*R_l = sum mu(-k) R_{l-k}
    out = State.zero()
    for j, g in enumerate(gs):
        if g.is_zero():
            continue
        l = -n - 1 - t + j
        if l < 0:
            continue
        rs = [g]
        for ll in range(1, l + 1):
            acc = State.zero()
            for k in range(1, ll + 1):
                if rs[ll - k].is_zero():
                    continue
                acc = acc + momentum_mode_action(ctx, mu, -k, rs[ll - k])
            rs.append(acc.scale(Scalar.from_rat(RAT(1, ll))))
        out = out + rs[l]
    return out


def translate(ctx: LatticeContext, s: State) -> State:
    """Translation operator L(-1): the derivation with h(-n) -> n h(-n-1)
    and e^mu -> mu(-1) e^mu."""
    out: dict = {}
    for mono, coeff in s.terms.items():
        for k, (i, d) in enumerate(mono.modes):
            lifted = mono.modes[:k] + ((i, d + 1),) + mono.modes[k + 1:]
            accumulate(out, FockMonomial(lifted, mono.momentum),
                       coeff * Scalar.from_int(d))
        if any(mono.momentum):
            shifted = momentum_mode_action(
                ctx, mono.momentum, -1, State({mono: coeff})
            )
            for m2, c2 in shifted.terms.items():
                accumulate(out, m2, c2)
    return State(out)


# -- residual checks ----------------------------------------------------------


def commutator_check(ctx: LatticeContext, a: State, m: int, b: State, n: int,
                     w: State) -> State:
    """[a_m, b_n]w - sum_k C(m,k) (a_k b)_{m+n-k} w; zero when the identity holds."""
    lhs = product(ctx, a, m, product(ctx, b, n, w)) - product(
        ctx, b, n, product(ctx, a, m, w)
    )
    rhs = State.zero()
    for k in range(0, max_product_index(ctx, a, b) + 1):
        c = binom(m, k)
        if not c:
            continue
        akb = product(ctx, a, k, b)
        if akb.is_zero():
            continue
        rhs = rhs + product(ctx, akb, m + n - k, w).scale(Scalar.from_rat(c))
    return lhs - rhs


def lemma22_expand(ctx: LatticeContext, a: State, k: int, b: State, n: int,
                   m: int, w: State) -> State:
    """Mode expansion of (a_k b)_n applied to w, for k <= -1, m >= -1.

    Splits a_i b_j at threshold m with binomially shifted corrections; equals
    product(a, k, b) applied at mode n.
    """
    if k > -1 or m < -1:
        raise VoaError("expansion requires k <= -1 and m >= -1")
    out = State.zero()
    # i <= m side: a_i b_j with j = n + k - i
    eb = max_product_index(ctx, b, w)
    for i in range(n + k - eb, m + 1):
        c = binom(-i - 1, -k - 1)
        if not c:
            continue
        inner = product(ctx, b, n + k - i, w)
        if inner.is_zero():
            continue
        out = out + product(ctx, a, i, inner).scale(Scalar.from_rat(c))
    # i >= m+1 side: b_j a_i
    ea = max_product_index(ctx, a, w)
    for i in range(m + 1, ea + 1):
        c = binom(-i - 1, -k - 1)
        if not c:
            continue
        inner = product(ctx, a, i, w)
        if inner.is_zero():
            continue
        out = out + product(ctx, b, n + k - i, inner).scale(Scalar.from_rat(c))
    # binomially shifted correction
    for l in range(0, max_product_index(ctx, a, b) + 1):
        c = ((-1) ** k) * binom(l - k - 1, -k - 1) * binom(m - k, l - k)
        if not c:
            continue
        alb = product(ctx, a, l, b)
        if alb.is_zero():
            continue
        out = out + product(ctx, alb, n + k - l, w).scale(Scalar.from_rat(c))
    return out


def borcherds_check(ctx: LatticeContext, a: State, b: State, c: State,
                    p: int, q: int, r: int) -> State:
    """Component Borcherds identity residual on (a, b, c) at indices (p, q, r)."""
    out = State.zero()
    for i in range(0, max_product_index(ctx, a, b) + 1):
        co = binom(p, i)
        if not co:
            continue
        aib = product(ctx, a, q + i, b)
        if aib.is_zero():
            continue
        out = out + product(ctx, aib, p + r - i, c).scale(Scalar.from_rat(co))
    ea = max_product_index(ctx, a, c)
    eb = max_product_index(ctx, b, c)
    i = 0
    while r + i <= eb or p + i <= ea:
        co = binom(q, i)
        if co:
            term = State.zero()
            inner_b = product(ctx, b, r + i, c)
            if not inner_b.is_zero():
                term = term + product(ctx, a, p + q - i, inner_b)
            inner_a = product(ctx, a, p + i, c)
            if not inner_a.is_zero():
                sgn = Scalar.from_int((-1) ** (q + 1))
                term = term + product(ctx, b, q + r - i, inner_a).scale(sgn)
            co_s = Scalar.from_rat(co * (-1) ** i)
            out = out - term.scale(co_s)
        i += 1
    return out


def skew_check(ctx: LatticeContext, a: State, b: State, n: int) -> State:
    """a_n b - sum_i (-1)^(n+1+i) T^i (b_{n+i} a) / i!, T the translation."""
    out = product(ctx, a, n, b)
    eb = max_product_index(ctx, b, a)
    fact = RAT(1)
    powered = None
    for i in range(0, max(0, eb - n) + 1):
        if i > 0:
            fact = fact * i
        inner = product(ctx, b, n + i, a)
        if inner.is_zero():
            continue
        for _ in range(i):
            inner = translate(ctx, inner)
        sgn = RAT((-1) ** (n + 1 + i)) / fact
        out = out - inner.scale(Scalar.from_rat(sgn))
    return out


# -- Zhu products -------------------------------------------------------------


def _weight_int(ctx: LatticeContext, a: State) -> int:
    w = weight(ctx, a)
    if w is None:
        raise VoaError("inhomogeneous state in Zhu product")
    if not w.is_integer():
        raise VoaError(f"non-integer weight {w} in Zhu product")
    wi = w.as_int()
    if wi < 0:
        raise VoaError(f"negative weight {wi} in Zhu product")
    return wi


def zhu_star(ctx: LatticeContext, a: State, b: State) -> State:
    """a * b = sum_i C(wt a, i) a_{i-1} b for homogeneous a."""
    wa = _weight_int(ctx, a)
    out = State.zero()
    for i in range(0, wa + 1):
        c = binom(wa, i)
        if c:
            out = out + product(ctx, a, i - 1, b).scale(Scalar.from_rat(c))
    return out


def zhu_circ(ctx: LatticeContext, a: State, b: State) -> State:
    """a o b = sum_i C(wt a, i) a_{i-2} b for homogeneous a."""
    wa = _weight_int(ctx, a)
    out = State.zero()
    for i in range(0, wa + 1):
        c = binom(wa, i)
        if c:
            out = out + product(ctx, a, i - 2, b).scale(Scalar.from_rat(c))
    return out


def zhu_star_mixed(ctx: LatticeContext, a: State, b: State) -> State:
    """Zhu star extended to inhomogeneous a by linearity in weight components."""
    out = State.zero()
    for _, comp in weight_components(ctx, a):
        out = out + zhu_star(ctx, comp, b)
    return out


def zhu_circ_mixed(ctx: LatticeContext, a: State, b: State) -> State:
    out = State.zero()
    for _, comp in weight_components(ctx, a):
        out = out + zhu_circ(ctx, comp, b)
    return out


# -- O(V) membership ----------------------------------------------------------


def even_monomials(ctx: LatticeContext, max_weight: int) -> list[FockMonomial]:
    """Momentum-zero monomials with an even number of modes, weight <= bound.

    These span the theta-fixed subalgebra of the Heisenberg part.
    """
    partitions: dict[int, list[tuple[int, ...]]] = {0: [()]}

    def parts(n: int, largest: int):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in parts(n - first, first):
                yield (first,) + rest

    out = []
    zero = ctx.zero_momentum()
    for w in range(0, max_weight + 1):
        for p in parts(w, w if w else 1):
            if len(p) % 2 == 0:
                out.append(FockMonomial(tuple((1, d) for d in p), zero))
    return out


class Certificate:
    """Explicit combination v = sum coeff * (a o b), re-verifiable by expansion."""

    __slots__ = ("combination",)

    def __init__(self, combination):
        self.combination = list(combination)

    def expand(self, ctx: LatticeContext) -> State:
        out = State.zero()
        for a, b, coeff in self.combination:
            out = out + zhu_circ(ctx, a, b).scale(coeff)
        return out

    def __len__(self):
        return len(self.combination)


def o_membership(ctx: LatticeContext, v: State, weight_cutoff: int,
                 basis_rank: int = 1) -> Certificate | None:
    """Search an explicit O(V) certificate for v at the given weight cutoff.

    Solves v exactly against the span of {a o b} over monomial-basis elements
    of the even Heisenberg subalgebra with wt a + wt b + 1 <= cutoff.  Returns
    None when inconclusive at this cutoff (membership is one-sided).
    """
    if basis_rank != 1:
        raise VoaError("membership search is implemented for the rank-1 basis")
    for mono in v.terms:
        if any(mono.momentum):
            raise VoaError("membership search expects a momentum-zero state")
        if mono.depth() > weight_cutoff:
            raise VoaError("state exceeds the weight cutoff")
    basis = even_monomials(ctx, weight_cutoff - 1)
    # online row reduction; pivots map monomial -> (row, combination)
    pivots: dict[FockMonomial, tuple[dict, dict]] = {}

    def order(m: FockMonomial):
        return (m.depth(), m.modes)

    def reduce_row(row: dict, combo: dict):
        while True:
            reducible = [m for m in row if m in pivots]
            if not reducible:
                return row, combo
            mono = max(reducible, key=order)
            prow, pcombo = pivots[mono]
            factor = row[mono] / prow[mono]
            for m2, c2 in prow.items():
                s = row.get(m2, S_ZERO) - factor * c2
                if s.is_zero():
                    row.pop(m2, None)
                else:
                    row[m2] = s
            for key, c2 in pcombo.items():
                s = combo.get(key, S_ZERO) - factor * c2
                if s.is_zero():
                    combo.pop(key, None)
                else:
                    combo[key] = s

    pairs = []
    for a in basis:
        for b in basis:
            if a.depth() + b.depth() + 1 <= weight_cutoff:
                pairs.append((a, b))
    for idx, (a, b) in enumerate(pairs):
        vec = zhu_circ(ctx, State({a: S_ONE}), State({b: S_ONE}))
        if vec.is_zero():
            continue
        row, combo = reduce_row(dict(vec.terms), {idx: S_ONE})
        if row:
            lead = max(row, key=lambda m: (m.depth(), m.modes))
            pivots[lead] = (row, combo)
    target, combo = reduce_row(dict(v.terms), {})
    if target:
        return None
    combination = []
    for idx, c in combo.items():
        a, b = pairs[idx]
        combination.append(
            (State({a: S_ONE}), State({b: S_ONE}), -c)
        )
    return Certificate(combination)
