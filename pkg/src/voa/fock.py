"""Canonical untwisted Fock states over a lattice context.

States are finite linear combinations of monomials
``h^[i1](-n1) ... h^[ik](-nk) e^mu`` with exact ``Scalar`` coefficients.  A
``LatticeContext`` fixes the ambient rank, the named momentum generators with
their pairing vectors against the implicit orthonormal basis, and the sign
cocycle used by exponential vertex operators.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .scalars import (
    GR_ONE,
    GaussianRational,
    P_ONE,
    RAT,
    S_ONE,
    S_ZERO,
    Scalar,
    gr,
    parse_scalar,
)


class VoaError(Exception):
    """Domain error (bad indices, non-integer exponents, wrong module)."""


class LatticeContext:
    """Rank, momentum generators with pairing data, cocycle, and norm rule.

    ``generators`` maps generator names to pairing vectors: ``pv(g)[i]`` is
    the pairing of ``g`` against the orthonormal basis vector ``h^[i+1]``.
    ``norm_rule = (name, value)`` imposes ``name^2 = value`` on every
    coefficient, which realizes numeric norms exactly while keeping
    ``sqrt(norm)`` a polynomial object.
    """

    __slots__ = ("rank", "gen_names", "gen_pairings", "norm_rule", "_pair_cache",
                 "_product_cache", "_twisted_cache")

    def __init__(self, rank: int,
                 generators: dict[str, tuple[Scalar, ...]] | None = None,
                 norm_rule: tuple[str, GaussianRational] | None = None):
        if rank < 1:
            raise VoaError(f"rank must be positive, got {rank}")
        generators = generators or {}
        self.rank = rank
        self.gen_names = tuple(generators)
        self.gen_pairings = {}
        self.norm_rule = norm_rule
        for name, pv in generators.items():
            pv = tuple(pv)
            if len(pv) != rank:
                raise VoaError(f"pairing vector of {name!r} must have length {rank}")
            self.gen_pairings[name] = tuple(self.reduce(s) for s in pv)
        self._pair_cache = {}
        self._product_cache = {}
        self._twisted_cache = {}
        self._check_cocycle()

    # -- scalars -----------------------------------------------------------

    def reduce(self, s: Scalar) -> Scalar:
        if self.norm_rule is None:
            return s
        name, value = self.norm_rule
        return s.reduce_square(name, value)

    def scalar(self, text_or_value) -> Scalar:
        if isinstance(text_or_value, Scalar):
            return self.reduce(text_or_value)
        if isinstance(text_or_value, str):
            return self.reduce(parse_scalar(text_or_value))
        return Scalar.from_rat(RAT(text_or_value))

    # -- momenta -----------------------------------------------------------

    def zero_momentum(self) -> tuple[int, ...]:
        return (0,) * len(self.gen_names)

    def momentum(self, coeffs) -> tuple[int, ...]:
        if isinstance(coeffs, dict):
            out = [0] * len(self.gen_names)
            for name, c in coeffs.items():
                out[self.gen_names.index(name)] = int(c)
            return tuple(out)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) > len(self.gen_names):
            raise VoaError("momentum has more entries than generators")
        return coeffs + (0,) * (len(self.gen_names) - len(coeffs))

    def pairing_vector(self, momentum: tuple[int, ...]) -> tuple[Scalar, ...]:
        """Pairing of a momentum against each orthonormal basis vector."""
        cached = self._pair_cache.get(momentum)
        if cached is not None:
            return cached
        out = [S_ZERO] * self.rank
        for coeff, name in zip(momentum, self.gen_names):
            if coeff:
                c = Scalar.from_int(coeff)
                for i, s in enumerate(self.gen_pairings[name]):
                    if not s.is_zero():
                        out[i] = out[i] + c * s
        result = tuple(self.reduce(s) for s in out)
        self._pair_cache[momentum] = result
        return result

    def pairing_basis(self, momentum: tuple[int, ...], i: int) -> Scalar:
        """<mu, h^[i]> for a basis index i in 1..rank."""
        return self.pairing_vector(momentum)[i - 1]

    def pairing(self, mu: tuple[int, ...], nu: tuple[int, ...]) -> Scalar:
        a = self.pairing_vector(mu)
        b = self.pairing_vector(nu)
        total = S_ZERO
        for x, y in zip(a, b):
            if not (x.is_zero() or y.is_zero()):
                total = total + x * y
        return self.reduce(total)

    def pairing_int(self, mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
        s = self.pairing(mu, nu)
        if not s.is_integer():
            raise VoaError(f"non-integer exponent pairing {s}")
        return s.as_int()

    # -- cocycle -----------------------------------------------------------

    def epsilon(self, mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
        """Sign cocycle: generator pairs use eps(g_i, g_j) = 1 for i <= j and
        (-1)^<g_i, g_j> for i > j, extended bimultiplicatively."""
        sign = 0
        for i, a in enumerate(mu):
            if not a:
                continue
            for j, b in enumerate(nu):
                if not b or i <= j:
                    continue
                gi = tuple(1 if k == i else 0 for k in range(len(mu)))
                gj = tuple(1 if k == j else 0 for k in range(len(nu)))
                sign += a * b * self.pairing_int(gi, gj)
        return -1 if sign % 2 else 1

    def _check_cocycle(self):
        """eps(mu,nu)/eps(nu,mu) = (-1)^<mu,nu> on integer-pairing generator pairs."""
        n = len(self.gen_names)
        for i in range(n):
            for j in range(n):
                if i == j:
                    # self-pairs carry no sign condition; odd self-norms occur
                    # only in intertwining-style contexts
                    continue
                gi = tuple(1 if k == i else 0 for k in range(n))
                gj = tuple(1 if k == j else 0 for k in range(n))
                p = self.pairing(gi, gj)
                if p.is_integer():
                    lhs = self.epsilon(gi, gj) * self.epsilon(gj, gi)
                    if lhs != (-1) ** (p.as_int() % 2):
                        raise VoaError(
                            f"cocycle commutator condition fails on generators "
                            f"{self.gen_names[i]!r}, {self.gen_names[j]!r}"
                        )


class FockMonomial:
    """Canonical monomial: sorted creation modes over a momentum label."""

    __slots__ = ("modes", "momentum", "_hash")

    def __init__(self, modes, momentum):
        self.modes = tuple(sorted(modes))
        self.momentum = tuple(momentum)
        self._hash = hash((self.modes, self.momentum))
        for i, n in self.modes:
            if n < 1:
                raise VoaError(f"creation depth must be >= 1, got {n}")

    def __eq__(self, other):
        return (
            self.modes == other.modes and self.momentum == other.momentum
        )

    def __hash__(self):
        return self._hash

    def depth(self) -> int:
        return sum(n for _, n in self.modes)

    def with_momentum(self, momentum) -> "FockMonomial":
        return FockMonomial(self.modes, momentum)

    def __repr__(self):
        return f"FockMonomial({self.modes!r}, {self.momentum!r})"


class State:
    """Finite linear combination of Fock monomials with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @staticmethod
    def zero() -> "State":
        return State({})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, State) and self.terms == other.terms

    def __add__(self, other: "State") -> "State":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            ns = c if s is None else s + c
            if ns.is_zero():
                out.pop(m, None)
            else:
                out[m] = ns
        return State.__new_from(out)

    def __sub__(self, other: "State") -> "State":
        return self + other.scale(_S_MINUS_ONE)

    def scale(self, c: Scalar) -> "State":
        if c.is_zero():
            return State.zero()
        if c.is_one():
            return self
        return State.__new_from({m: x * c for m, x in self.terms.items()})

    @staticmethod
    def __new_from(terms: dict) -> "State":
        s = State.__new__(State)
        s.terms = terms
        return s

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        from .exprs import format_state

        return f"<State {format_state(self)}>"


_S_MINUS_ONE = Scalar.from_int(-1)


def vacuum(ctx: LatticeContext) -> State:
    return State({FockMonomial((), ctx.zero_momentum()): S_ONE})


def exponential(ctx: LatticeContext, momentum) -> State:
    return State({FockMonomial((), ctx.momentum(momentum)): S_ONE})


def accumulate(acc: dict, mono: FockMonomial, coeff: Scalar):
    s = acc.get(mono)
    ns = coeff if s is None else s + coeff
    if ns.is_zero():
        acc.pop(mono, None)
    else:
        acc[mono] = ns


def mode_action(ctx: LatticeContext, i: int, m: int, s: State) -> State:
    """Action of the Heisenberg mode h^[i](m) on a state.

    m < 0 appends a creation mode; m > 0 contracts matching creation modes
    with coefficient n per mode of depth n = m; m = 0 multiplies by the
    momentum pairing <mu, h^[i]>.
    """
    if not 1 <= i <= ctx.rank:
        raise VoaError(f"basis index {i} out of range 1..{ctx.rank}")
    out: dict = {}
    for mono, coeff in s.terms.items():
        if m < 0:
            accumulate(out, FockMonomial(mono.modes + ((i, -m),), mono.momentum),
                       coeff)
        elif m == 0:
            pair = ctx.pairing_basis(mono.momentum, i)
            if not pair.is_zero():
                accumulate(out, mono, coeff * pair)
        else:
            # one contraction term per matching creation mode
            for k, (j, n) in enumerate(mono.modes):
                if j == i and n == m:
                    rest = mono.modes[:k] + mono.modes[k + 1:]
                    accumulate(out, FockMonomial(rest, mono.momentum),
                               coeff * Scalar.from_int(m))
    return State(out)


def momentum_mode_action(ctx: LatticeContext, momentum, m: int, s: State) -> State:
    """mu(m) = sum_i <mu, h^[i]> h^[i](m) acting on a state."""
    momentum = ctx.momentum(momentum) if not isinstance(momentum, tuple) else momentum
    pv = ctx.pairing_vector(momentum)
    total = State.zero()
    for i, c in enumerate(pv, start=1):
        if not c.is_zero():
            total = total + mode_action(ctx, i, m, s).scale(c)
    return total


def theta(ctx: LatticeContext, s: State) -> State:
    """Involution: sign (-1)^#modes and momentum negation (theta(e^mu) = e^-mu)."""
    out: dict = {}
    for mono, coeff in s.terms.items():
        sign = S_ONE if len(mono.modes) % 2 == 0 else _S_MINUS_ONE
        neg = tuple(-c for c in mono.momentum)
        accumulate(out, FockMonomial(mono.modes, neg), coeff * sign)
    return State(out)


def weight(ctx: LatticeContext, s: State) -> Scalar | None:
    """Conformal weight sum(n_i) + <mu,mu>/2 if homogeneous, else None."""
    w = None
    for mono, _ in s.terms.items():
        pm = ctx.pairing(mono.momentum, mono.momentum)
        this = Scalar.from_int(mono.depth()) + pm * _S_HALF
        if w is None:
            w = this
        elif w != this:
            return None
    return w


_S_HALF = Scalar.from_rat(Fraction(1, 2))


def weight_components(ctx: LatticeContext, s: State) -> list[tuple[Scalar, State]]:
    """Split a state into its homogeneous weight components."""
    buckets: dict[Scalar, dict] = {}
    for mono, coeff in s.terms.items():
        pm = ctx.pairing(mono.momentum, mono.momentum)
        w = Scalar.from_int(mono.depth()) + pm * _S_HALF
        buckets.setdefault(w, {})[mono] = coeff
    return [(w, State(t)) for w, t in buckets.items()]


# -- JSON ---------------------------------------------------------------------


def state_to_json(ctx: LatticeContext, s: State) -> list[dict]:
    terms = []
    for mono, coeff in sorted(
        s.terms.items(), key=lambda kv: (kv[0].momentum, kv[0].modes)
    ):
        momentum = {
            name: c for name, c in zip(ctx.gen_names, mono.momentum) if c
        }
        terms.append(
            {
                "coeff": str(coeff),
                "momentum": momentum,
                "modes": [[i, n] for i, n in mono.modes],
            }
        )
    return terms


def state_from_json(ctx: LatticeContext, data: list[dict]) -> State:
    out: dict = {}
    for term in data:
        coeff = ctx.scalar(term.get("coeff", "1"))
        momentum = ctx.momentum(term.get("momentum", {}))
        modes = tuple((int(i), int(n)) for i, n in term.get("modes", []))
        accumulate(out, FockMonomial(modes, momentum), coeff)
    return State(out)


def context_to_json(ctx: LatticeContext) -> dict:
    data = {
        "rank": ctx.rank,
        "generators": {
            name: [str(s) for s in pv] for name, pv in ctx.gen_pairings.items()
        },
    }
    if ctx.norm_rule is not None:
        name, value = ctx.norm_rule
        data["norm_rule"] = {"indeterminate": name, "square": str(value)}
    return data


def context_from_json(data: dict) -> LatticeContext:
    generators = {
        name: tuple(parse_scalar(s) for s in pv)
        for name, pv in data.get("generators", {}).items()
    }
    norm_rule = None
    if "norm_rule" in data:
        nr = data["norm_rule"]
        norm_rule = (nr["indeterminate"], parse_scalar(nr["square"]).const_value())
    return LatticeContext(int(data["rank"]), generators, norm_rule)


def load_context(path: str) -> LatticeContext:
    with open(path) as f:
        return context_from_json(json.load(f))
