"""Named distinguished elements, standard contexts, and expression evaluation.

Every generator the identity catalog refers to is constructed here from its
defining monomials: the conformal vector and its per-direction summands, the
weight-4 generators, the cross terms S_ij(l,m), their weight-4 combinations,
and the symmetrized exponentials.
"""

from __future__ import annotations

from fractions import Fraction

from .exprs import ExprNode, parse
from .fock import (
    FockMonomial,
    LatticeContext,
    State,
    VoaError,
    exponential,
    mode_action,
    vacuum,
    weight,
)
from .scalars import GR_I, GR_ONE, GaussianRational, S_ONE, Scalar, gr
from .twisted import TwistedState, twisted_product, twisted_vacuum
from .vertex import product

_HALF = Scalar.from_rat(Fraction(1, 2))
_THIRD = Scalar.from_rat(Fraction(1, 3))


def _mono(ctx: LatticeContext, modes) -> State:
    return State({FockMonomial(modes, ctx.zero_momentum()): S_ONE})


def omega_dir(ctx: LatticeContext, i: int) -> State:
    """Per-direction conformal summand (1/2) h^[i](-1)^2."""
    return _mono(ctx, ((i, 1), (i, 1))).scale(_HALF)


def omega(ctx: LatticeContext) -> State:
    total = State.zero()
    for i in range(1, ctx.rank + 1):
        total = total + omega_dir(ctx, i)
    return total


def weight4_h(ctx: LatticeContext, i: int) -> State:
    """H^[i] = (1/3) h^[i](-3)h^[i](-1) - (1/3) h^[i](-2)^2."""
    return (
        _mono(ctx, ((i, 3), (i, 1))).scale(_THIRD)
        - _mono(ctx, ((i, 2), (i, 2))).scale(_THIRD)
    )


def weight4_j(ctx: LatticeContext, i: int) -> State:
    """J^[i] = h^[i](-1)^4 - 2 h^[i](-3)h^[i](-1) + (3/2) h^[i](-2)^2."""
    return (
        _mono(ctx, ((i, 1),) * 4)
        - _mono(ctx, ((i, 3), (i, 1))).scale(Scalar.from_int(2))
        + _mono(ctx, ((i, 2), (i, 2))).scale(Scalar.from_rat(Fraction(3, 2)))
    )


def s_cross(ctx: LatticeContext, i: int, j: int, l: int, m: int) -> State:
    """S_ij(l,m) = h^[i](-l) h^[j](-m), i distinct from j."""
    if i == j:
        raise VoaError("cross generator needs distinct basis indices")
    return _mono(ctx, ((i, l), (j, m)))


_EU = (5, 25, 36, 16)
_ET = (-16, 145, 19, 8)
_LAMBDA = (45, 190, 240, 96)


def _s_combo(ctx, i, j, coeffs) -> State:
    total = State.zero()
    for m, c in zip((2, 3, 4, 5), coeffs):
        total = total + s_cross(ctx, i, j, 1, m).scale(Scalar.from_int(c))
    return total


def e_u(ctx, i, j) -> State:
    return _s_combo(ctx, i, j, _EU)


def e_t(ctx, i, j) -> State:
    return _s_combo(ctx, i, j, _ET)


def lam(ctx, i, j) -> State:
    return _s_combo(ctx, i, j, _LAMBDA)


def symmetric_exponential(ctx: LatticeContext, momentum) -> State:
    """E(mu) = e^mu + e^-mu (the section fixes theta(e^mu) = e^-mu)."""
    mom = ctx.momentum(momentum)
    neg = tuple(-c for c in mom)
    return exponential(ctx, mom) + exponential(ctx, neg)


def element(ctx: LatticeContext, name: str, params=()):
    """Named element constructor; raises on unknown names or bad indices."""
    params = tuple(params)
    if name == "vac":
        return vacuum(ctx)
    if name == "vactw":
        return twisted_vacuum()
    if name == "w":
        return omega(ctx) if not params else omega_dir(ctx, params[0])
    if name == "H":
        return weight4_h(ctx, params[0] if params else 1)
    if name == "J":
        return weight4_j(ctx, params[0] if params else 1)
    if name == "S":
        return s_cross(ctx, *params)
    if name == "Eu":
        return e_u(ctx, *params)
    if name == "Et":
        return e_t(ctx, *params)
    if name == "Lam":
        return lam(ctx, *params)
    if name == "E":
        return symmetric_exponential(ctx, (1,))
    if name == "e":
        return exponential(ctx, params)
    raise VoaError(f"unknown element {name!r}")


# -- standard contexts ---------------------------------------------------------

NORM_CHOICES = ("symbolic", "2", "1/2", "1", "0")


def make_context(norm: str = "symbolic", rank: int = 1,
                 with_momentum: bool = True,
                 with_symbolic_momentum: bool = False) -> LatticeContext:
    """Standard verification contexts.

    norm 'symbolic' uses pairing sqrt(norm) = q with norm p = q^2; numeric
    norms impose q^2 = value exactly; norm '0' realizes an isotropic momentum
    through the pairings (z, I*z, 0, ...).  ``with_symbolic_momentum`` adds a
    second generator ``lam`` with independent symbolic pairings z1..zd.
    """
    generators: dict[str, tuple[Scalar, ...]] = {}
    norm_rule = None
    q = Scalar.var("q")

    def pad(front: tuple[Scalar, ...]) -> tuple[Scalar, ...]:
        from .scalars import S_ZERO

        return front + (S_ZERO,) * (rank - len(front))

    if with_momentum:
        if norm == "symbolic":
            generators["a"] = pad((q,))
        elif norm == "0":
            if rank < 2:
                raise VoaError("isotropic momentum needs rank >= 2")
            z = Scalar.var("z")
            generators["a"] = pad((z, z * Scalar.from_gaussian(GR_I)))
        else:
            value = {"2": gr(2), "1": gr(1), "1/2": GaussianRational(
                Fraction(1, 2), 0)}.get(norm)
            if value is None:
                raise VoaError(f"unknown norm choice {norm!r}")
            generators["a"] = pad((q,))
            norm_rule = ("q", value)
    if with_symbolic_momentum:
        generators["lam"] = tuple(
            Scalar.var(f"z{i}") for i in range(1, rank + 1)
        )
    return LatticeContext(rank, generators, norm_rule)


# -- expression evaluation -------------------------------------------------------


def evaluate(ctx: LatticeContext, node: ExprNode):
    """Evaluate an expression tree to a canonical State or TwistedState.

    Evaluation is innermost-first; a mode application dispatches on the type
    of its argument, so Heisenberg-part operators act on twisted states
    through the corrected twisted operator.
    """
    if node.kind == "sum":
        parts = [evaluate(ctx, c) for c in node.children]
        total = parts[0]
        for p in parts[1:]:
            if isinstance(p, TwistedState) != isinstance(total, TwistedState):
                raise VoaError("cannot add twisted and untwisted states")
            total = total + p
        return total
    if node.kind == "scale":
        return evaluate(ctx, node.children[0]).scale(ctx.reduce(node.scalar))
    if node.kind == "apply":
        head = evaluate(ctx, node.children[0])
        arg = evaluate(ctx, node.children[1])
        if isinstance(head, TwistedState):
            raise VoaError("a twisted state cannot act as an operator")
        if isinstance(arg, TwistedState):
            return twisted_product(ctx, head, node.mode, arg)
        if node.mode.denominator != 1:
            raise VoaError("half-integer modes act only on twisted states")
        return product(ctx, head, int(node.mode), arg)
    if node.kind == "hmode":
        from .twisted import half_mode_action

        i = node.params[0]
        arg = evaluate(ctx, node.children[0])
        if isinstance(arg, TwistedState):
            return half_mode_action(ctx, i, node.mode, arg)
        if node.mode.denominator != 1:
            raise VoaError("half-integer modes act only on twisted states")
        return mode_action(ctx, i, int(node.mode), arg)
    if node.kind == "atom":
        return element(ctx, node.name, node.params)
    raise VoaError(f"cannot evaluate node kind {node.kind!r}")


def evaluate_text(ctx: LatticeContext, text: str):
    return evaluate(ctx, parse(text))


def is_homogeneous_of_weight(ctx, s: State, w) -> bool:
    got = weight(ctx, s)
    return got is not None and got == ctx.scalar(w)
