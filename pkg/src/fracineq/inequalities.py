"""Closed-form constants, case validation, and certificates.

Each inequality family bounds a left-hand norm by an explicit constant times
a product of right-hand norms.  ``evaluate_sides`` computes both sides for a
sampled function and records the outcome in a :class:`Certificate`.  The
pass rule is

    ratio = lhs / (constant * rhs_norm_product) <= 1 + disc_tol,

where disc_tol is a Richardson-style discretization-error proxy: 1e-6 plus
the change of the ratio between the evaluation grid and one coarser grid.

Families without a fully explicit constant of their own get the composed
constant of the underlying chain of inequalities:

* Gagliardo-Nirenberg variants chain a Hoelder interpolation step with the
  L^q Poincare-Sobolev bound taken at exponent q on both sides, so the
  constant is that bound's constant raised to the interpolation weight s.
* CKN variants chain a Hoelder step with the weighted Hardy bound at weight
  power -d, so the constant is the weighted-Hardy constant to the power
  delta (delta = 0 degenerates to an identity, constant 1).
* Uncertainty principles chain Cauchy-Schwarz with the Hardy bound and
  inherit the Hardy constant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields, replace

import numpy as np

from .errors import (
    FracineqError,
    HypothesisError,
    NumericError,
    ParamError,
)
from .grids import Grid, GridFn, NormKind, lp_trapezoid, norm, uniform_grid
from .operators import caputo_derivative, hadamard_derivative
from .special import conjugate, gamma_fn, holder_denominator

__all__ = [
    "Family",
    "InequalityCase",
    "Certificate",
    "SweepCell",
    "gamma_fn",
    "validate_case",
    "constant",
    "sobolev_beta_statement_constant",
    "evaluate_sides",
    "sweep",
    "BOUNDARY_TOLERANCE",
]

#: absolute threshold for the numeric boundary-hypothesis check |u(a)|
BOUNDARY_TOLERANCE = 1e-10

_REL_TOL = 1e-10  # tolerance for exponent-relation checks on user input


class Family(enum.Enum):
    POINCARE_SOBOLEV = "poincare-sobolev"
    POINCARE_SOBOLEV_LQ = "poincare-sobolev-lq"
    SOBOLEV_BETA = "sobolev-beta"
    HARDY = "hardy"
    WEIGHTED_HARDY = "weighted-hardy"
    GAGLIARDO_NIRENBERG = "gagliardo-nirenberg"
    CKN = "ckn"
    SEQ_POINCARE_SOBOLEV = "seq-poincare-sobolev"
    SEQ_HARDY = "seq-hardy"
    SEQ_GAGLIARDO_NIRENBERG = "seq-gagliardo-nirenberg"
    HAD_POINCARE_SOBOLEV = "hadamard-poincare-sobolev"
    HAD_HARDY = "hadamard-hardy"
    HAD_WEIGHTED_HARDY = "hadamard-weighted-hardy"
    HAD_GAGLIARDO_NIRENBERG = "hadamard-gagliardo-nirenberg"
    HAD_CKN = "hadamard-ckn"
    UNCERTAINTY = "uncertainty"
    HAD_UNCERTAINTY = "hadamard-uncertainty"


@dataclass(frozen=True)
class InequalityCase:
    """One fully parameterized instance of an inequality family.

    Only the fields a family actually uses may be set; conjugate exponents
    are always derived from p, never stored.  ``gamma`` is the weight power
    for the weighted Hardy families and the output exponent for the
    Gagliardo-Nirenberg families (where it may be left None and is then
    derived from the exponent relation).
    """

    family: Family
    a: float
    b: float
    alpha: float
    beta: float | None = None
    p: float | None = None
    q: float | None = None
    r: float | None = None
    s: float | None = None
    delta: float | None = None
    gamma: float | None = None
    c: float | None = None
    d: float | None = None
    e: float | None = None
    theta: float | None = None


_GN_FAMILIES = (
    Family.GAGLIARDO_NIRENBERG,
    Family.SEQ_GAGLIARDO_NIRENBERG,
    Family.HAD_GAGLIARDO_NIRENBERG,
)
_CKN_FAMILIES = (Family.CKN, Family.HAD_CKN)

#: required case fields per family (beyond family/a/b/alpha);
#: fields not listed here (and not derivable) must be absent.
_REQUIRED: dict[Family, tuple[str, ...]] = {
    Family.POINCARE_SOBOLEV: ("p",),
    Family.POINCARE_SOBOLEV_LQ: ("p", "theta"),
    Family.SOBOLEV_BETA: ("beta", "p"),
    Family.HARDY: ("p",),
    Family.WEIGHTED_HARDY: ("p", "gamma"),
    Family.GAGLIARDO_NIRENBERG: ("p", "q", "s"),
    Family.CKN: ("p", "q", "delta", "d", "e"),
    Family.SEQ_POINCARE_SOBOLEV: ("beta", "p"),
    Family.SEQ_HARDY: ("beta", "p"),
    Family.SEQ_GAGLIARDO_NIRENBERG: ("beta", "p", "q", "s"),
    Family.HAD_POINCARE_SOBOLEV: ("p",),
    Family.HAD_HARDY: ("p",),
    Family.HAD_WEIGHTED_HARDY: ("p", "gamma"),
    Family.HAD_GAGLIARDO_NIRENBERG: ("p", "q", "s"),
    Family.HAD_CKN: ("p", "q", "delta", "d", "e"),
    Family.UNCERTAINTY: ("p",),
    Family.HAD_UNCERTAINTY: ("p",),
}

#: optional fields that are derived from the required ones when absent
_DERIVABLE: dict[Family, tuple[str, ...]] = {
    Family.GAGLIARDO_NIRENBERG: ("gamma",),
    Family.SEQ_GAGLIARDO_NIRENBERG: ("gamma",),
    Family.HAD_GAGLIARDO_NIRENBERG: ("gamma",),
    Family.CKN: ("r", "c"),
    Family.HAD_CKN: ("r", "c"),
}

#: families whose interval must satisfy a > 0 (Hardy-type weights or
#: Hadamard kernels appear on one of the sides)
_NEEDS_POSITIVE_A = (
    Family.HARDY,
    Family.WEIGHTED_HARDY,
    Family.CKN,
    Family.SEQ_HARDY,
    Family.UNCERTAINTY,
    Family.HAD_POINCARE_SOBOLEV,
    Family.HAD_HARDY,
    Family.HAD_WEIGHTED_HARDY,
    Family.HAD_GAGLIARDO_NIRENBERG,
    Family.HAD_CKN,
    Family.HAD_UNCERTAINTY,
)


def _fail(family: Family, clause: str) -> ParamError:
    return ParamError(f"{family.value}: requires {clause}")


def _check_fields(case: InequalityCase) -> None:
    required = _REQUIRED[case.family]
    derivable = _DERIVABLE.get(case.family, ())
    for name in required:
        if getattr(case, name) is None:
            raise _fail(case.family, f"field {name!r}")
    for f in fields(case):
        if f.name in ("family", "a", "b", "alpha"):
            continue
        if f.name in required or f.name in derivable:
            continue
        if getattr(case, f.name) is not None:
            raise ParamError(
                f"{case.family.value}: field {f.name!r} is not used by this family"
            )


def _check_basic_window(case: InequalityCase) -> None:
    fam = case.family
    if not case.a < case.b:
        raise _fail(fam, f"a < b (got a={case.a}, b={case.b})")
    if fam in _NEEDS_POSITIVE_A and not case.a > 0.0:
        raise _fail(fam, f"a > 0 (got a={case.a})")


def _check_sup_family(case: InequalityCase) -> None:
    # shared hypothesis of the plain Poincare-Sobolev / Hardy block
    fam = case.family
    if not case.p > 1.0:
        raise _fail(fam, f"p > 1 (got p={case.p})")
    if not 1.0 / case.p < case.alpha <= 1.0:
        raise _fail(fam, f"alpha in (1/p, 1] (got alpha={case.alpha}, p={case.p})")


def _check_gn(case: InequalityCase) -> InequalityCase:
    fam = case.family
    if not case.p >= 1.0:
        raise _fail(fam, f"p >= 1 (got p={case.p})")
    if not case.q > 1.0:
        raise _fail(fam, f"q > 1 (got q={case.q})")
    if not 0.0 <= case.s <= 1.0:
        raise _fail(fam, f"s in [0, 1] (got s={case.s})")
    if fam is Family.SEQ_GAGLIARDO_NIRENBERG:
        if not 0.0 < case.alpha < 1.0:
            raise _fail(fam, f"alpha in (0, 1) (got alpha={case.alpha})")
        if not 1.0 / case.q < case.beta < 1.0:
            raise _fail(fam, f"beta in (1/q, 1) (got beta={case.beta}, q={case.q})")
    else:
        if not 1.0 / case.q < case.alpha <= 1.0:
            raise _fail(fam, f"alpha in (1/q, 1] (got alpha={case.alpha}, q={case.q})")
    derived = 1.0 / (case.s / case.q + (1.0 - case.s) / case.p)
    if case.gamma is None:
        return replace(case, gamma=derived)
    rel = case.gamma * case.s / case.q + case.gamma * (1.0 - case.s) / case.p
    if abs(rel - 1.0) > _REL_TOL:
        raise _fail(fam, f"gamma*s/q + gamma*(1-s)/p = 1 (got {rel})")
    return case


def _check_ckn(case: InequalityCase) -> InequalityCase:
    fam = case.family
    if not case.p > 1.0:
        raise _fail(fam, f"p > 1 (got p={case.p})")
    if not case.q > 1.0:
        raise _fail(fam, f"q > 1 (got q={case.q})")
    if not 1.0 - 1.0 / case.q < case.alpha < 1.0:
        raise _fail(fam, f"alpha in (1 - 1/q, 1) (got alpha={case.alpha}, q={case.q})")
    if not 0.0 <= case.delta <= 1.0:
        raise _fail(fam, f"delta in [0, 1] (got delta={case.delta})")
    # when r is derived from the exponent relation, the window and p+q >= r
    # clauses hold automatically; a stored r is checked clause by clause
    inv_r = case.delta / case.p + (1.0 - case.delta) / case.q
    r_given = case.r is not None
    if not r_given:
        case = replace(case, r=1.0 / inv_r)
    if not case.r > 0.0:
        raise _fail(fam, f"r > 0 (got r={case.r})")
    if not case.p + case.q >= case.r:
        raise _fail(fam, f"p + q >= r (got p={case.p}, q={case.q}, r={case.r})")
    lo, hi = (case.r - case.q) / case.r, case.p / case.r
    if not lo - _REL_TOL <= case.delta <= hi + _REL_TOL:
        raise _fail(fam, f"delta in [(r-q)/r, p/r] = [{lo}, {hi}] (got delta={case.delta})")
    if r_given and abs(inv_r - 1.0 / case.r) > _REL_TOL:
        raise _fail(fam, f"1/r = delta/p + (1-delta)/q (got 1/r={1.0 / case.r}, "
                         f"delta/p + (1-delta)/q={inv_r})")
    c_rel = case.delta * (case.d - 1.0) + case.e * (1.0 - case.delta)
    if case.c is None:
        case = replace(case, c=c_rel)
    elif abs(case.c - c_rel) > _REL_TOL:
        raise _fail(fam, f"c = delta*(d-1) + e*(1-delta) (got c={case.c}, "
                         f"relation value {c_rel})")
    if not 1.0 + (case.d - 1.0) * case.p > 0.0:
        raise _fail(fam, f"1 + (d-1)*p > 0 (got d={case.d}, p={case.p})")
    if case.delta > 0.0 and not case.alpha > 1.0 / case.p:
        # the composed weighted-Hardy constant is finite only for alpha > 1/p
        raise _fail(fam, f"alpha > 1/p when delta > 0 (got alpha={case.alpha}, p={case.p})")
    return case


def _check_sequential(case: InequalityCase) -> None:
    fam = case.family
    if not case.p > 1.0:
        raise _fail(fam, f"p > 1 (got p={case.p})")
    q = conjugate(case.p)
    if not 1.0 / q < case.alpha < 1.0:
        raise _fail(fam, f"alpha in (1/q, 1) with q = p/(p-1) (got alpha={case.alpha}, "
                         f"q={q})")
    if not 0.0 < case.beta < 1.0:
        raise _fail(fam, f"beta in (0, 1) (got beta={case.beta})")
    if not case.alpha > 1.0 / case.p:
        # kernel-moment positivity; the alpha window above does not imply it
        # for p < 2
        raise _fail(fam, f"alpha > 1/p (got alpha={case.alpha}, p={case.p})")


def validate_case(case: InequalityCase) -> InequalityCase:
    """Check every hypothesis of the case's family; fill derived exponents.

    Returns the (possibly normalized) case or raises ParamError naming the
    violated clause.
    """
    fam = case.family
    if fam not in _REQUIRED:
        raise ParamError(f"unknown family {fam!r}")
    _check_fields(case)
    _check_basic_window(case)

    if fam in (Family.POINCARE_SOBOLEV, Family.HARDY, Family.WEIGHTED_HARDY,
               Family.UNCERTAINTY, Family.HAD_POINCARE_SOBOLEV, Family.HAD_HARDY,
               Family.HAD_WEIGHTED_HARDY, Family.HAD_UNCERTAINTY):
        _check_sup_family(case)
    elif fam is Family.POINCARE_SOBOLEV_LQ:
        _check_sup_family(case)
        if not case.theta > 1.0:
            raise _fail(fam, f"theta > 1 (got theta={case.theta})")
    elif fam is Family.SOBOLEV_BETA:
        if not case.p > 1.0:
            raise _fail(fam, f"p > 1 (got p={case.p})")
        if not 0.0 <= case.beta < 1.0:
            raise _fail(fam, f"beta in [0, 1) (got beta={case.beta})")
        if not case.beta + 1.0 / case.p < case.alpha <= 1.0:
            raise _fail(fam, f"alpha in (beta + 1/p, 1] (got alpha={case.alpha}, "
                             f"beta={case.beta}, p={case.p})")
    elif fam in _GN_FAMILIES:
        case = _check_gn(case)
    elif fam in _CKN_FAMILIES:
        case = _check_ckn(case)
    elif fam in (Family.SEQ_POINCARE_SOBOLEV, Family.SEQ_HARDY):
        _check_sequential(case)
    return case


def _log_span(case: InequalityCase) -> float:
    return abs(np.log(case.b / case.a))


def _ps_constant(alpha: float, p: float, a: float, b: float) -> float:
    return (b - a) ** (alpha - 1.0 / p) / (holder_denominator(alpha, p) * gamma_fn(alpha))


def _hardy_constant(alpha: float, p: float, a: float, b: float) -> float:
    return (b - a) ** alpha / (a * holder_denominator(alpha, p) * gamma_fn(alpha))


def _weighted_hardy_constant(alpha: float, p: float, gamma: float,
                             a: float, b: float) -> float:
    g = abs(gamma)
    return (a ** (-g - 1.0) * b**g * (b - a) ** alpha
            / (holder_denominator(alpha, p) * gamma_fn(alpha)))


def _had_ps_constant(alpha: float, p: float, case: InequalityCase) -> float:
    return _log_span(case) ** (alpha - 1.0 / p) / (
        holder_denominator(alpha, p) * gamma_fn(alpha))


def _had_hardy_constant(alpha: float, p: float, case: InequalityCase) -> float:
    return ((case.b - case.a) ** (1.0 / p) * _log_span(case) ** (alpha - 1.0 / p)
            / (case.a * holder_denominator(alpha, p) * gamma_fn(alpha)))


def _had_weighted_hardy_constant(alpha: float, p: float, gamma: float,
                                 case: InequalityCase) -> float:
    g = abs(gamma)
    return (case.a ** (-g - 1.0) * case.b**g * (case.b - case.a) ** (1.0 / p)
            * _log_span(case) ** (alpha - 1.0 / p)
            / (holder_denominator(alpha, p) * gamma_fn(alpha)))


def constant(case: InequalityCase) -> float:
    """Closed-form constant multiplying the right-hand side."""
    case = validate_case(case)
    fam, a, b, alpha = case.family, case.a, case.b, case.alpha
    if fam is Family.POINCARE_SOBOLEV:
        value = _ps_constant(alpha, case.p, a, b)
    elif fam is Family.POINCARE_SOBOLEV_LQ:
        value = _ps_constant(alpha, case.p, a, b) * (b - a) ** (1.0 / case.theta)
    elif fam is Family.SOBOLEV_BETA:
        q = conjugate(case.p)
        denom = (alpha * q - case.beta * q - q + 1.0) ** (1.0 / q)
        value = (b - a) ** (alpha - case.beta - 1.0 / case.p) / (
            denom * gamma_fn(alpha - case.beta))
    elif fam is Family.HARDY or fam is Family.UNCERTAINTY:
        value = _hardy_constant(alpha, case.p, a, b)
    elif fam is Family.WEIGHTED_HARDY:
        value = _weighted_hardy_constant(alpha, case.p, case.gamma, a, b)
    elif fam is Family.GAGLIARDO_NIRENBERG:
        # L^q Poincare-Sobolev with exponent q on both sides, to the power s
        base = (b - a) ** alpha / (holder_denominator(alpha, case.q) * gamma_fn(alpha))
        value = base ** case.s
    elif fam is Family.CKN:
        value = (1.0 if case.delta == 0.0 else
                 _weighted_hardy_constant(alpha, case.p, -case.d, a, b) ** case.delta)
    elif fam is Family.SEQ_POINCARE_SOBOLEV:
        value = _ps_constant(alpha, case.p, a, b)
    elif fam is Family.SEQ_HARDY:
        value = _hardy_constant(alpha, case.p, a, b)
    elif fam is Family.SEQ_GAGLIARDO_NIRENBERG:
        # sequential L^q bound applied to the inner derivative, outer order
        # beta, exponent q on both sides, to the power s
        base = (b - a) ** case.beta / (
            holder_denominator(case.beta, case.q) * gamma_fn(case.beta))
        value = base ** case.s
    elif fam is Family.HAD_POINCARE_SOBOLEV:
        value = _had_ps_constant(alpha, case.p, case)
    elif fam is Family.HAD_HARDY or fam is Family.HAD_UNCERTAINTY:
        value = _had_hardy_constant(alpha, case.p, case)
    elif fam is Family.HAD_WEIGHTED_HARDY:
        value = _had_weighted_hardy_constant(alpha, case.p, case.gamma, case)
    elif fam is Family.HAD_GAGLIARDO_NIRENBERG:
        base = ((b - a) ** (1.0 / case.q) * _log_span(case) ** (alpha - 1.0 / case.q)
                / (holder_denominator(alpha, case.q) * gamma_fn(alpha)))
        value = base ** case.s
    elif fam is Family.HAD_CKN:
        value = (1.0 if case.delta == 0.0 else
                 _had_weighted_hardy_constant(alpha, case.p, -case.d, case) ** case.delta)
    else:  # pragma: no cover
        raise ParamError(f"unknown family {fam!r}")
    if not np.isfinite(value) or value <= 0.0:
        raise NumericError(f"{fam.value}: constant is not a positive finite number "
                           f"({value})")
    return float(value)


def sobolev_beta_statement_constant(case: InequalityCase) -> float:
    """The statement-form constant with the extra (b-a)^(1/q) factor.

    The default :func:`constant` follows the proof's final display, which
    carries (b-a)^(alpha - beta - 1/p); this variant multiplies in the
    additional (b-a)^(1/q) of the statement so either version can be
    asserted against.
    """
    case = validate_case(case)
    if case.family is not Family.SOBOLEV_BETA:
        raise ParamError("statement constant is defined for sobolev-beta only")
    return constant(case) * (case.b - case.a) ** (1.0 / conjugate(case.p))


# ---------------------------------------------------------------------------
# side evaluation


def _boundary_check(case: InequalityCase, u: GridFn) -> None:
    fam = case.family
    if fam is Family.SOBOLEV_BETA:
        return
    if fam in (Family.SEQ_POINCARE_SOBOLEV, Family.SEQ_HARDY):
        inner = caputo_derivative(u, case.beta)
        value = inner.samples[0]
        what = "inner derivative"
    elif fam is Family.SEQ_GAGLIARDO_NIRENBERG:
        inner = caputo_derivative(u, case.alpha)
        value = inner.samples[0]
        what = "inner derivative"
    else:
        value = u.samples[0]
        what = "function"
    if abs(value) > BOUNDARY_TOLERANCE:
        raise HypothesisError(
            f"{fam.value}: {what} must vanish at a "
            f"(|value| = {abs(value):.3e} > {BOUNDARY_TOLERANCE:.0e})"
        )


def _caputo_or_identity(u: GridFn, order: float) -> GridFn:
    # order 0 appears only for sobolev-beta's lhs: the zeroth derivative of
    # the representation is u - u(a)
    if order == 0.0:
        return GridFn(u.grid, u.samples - u.samples[0], name=u.name)
    return caputo_derivative(u, order)


def _log_weighted_factor(g: GridFn, p: float, power: float, a: float) -> float:
    # (integral |g(sigma)|^p x(sigma)^(power*p) dsigma)^(1/p) on the
    # companion grid, x(sigma) = a e^sigma; power 0 is the plain dx/x norm
    if power == 0.0:
        return norm(g, NormKind.lp(p))
    x = a * np.exp(g.grid.nodes)
    return lp_trapezoid(g.samples, g.grid.h, p, weights=x ** (power * p))


def _sides(case: InequalityCase, u: GridFn) -> tuple[float, float]:
    """Left-hand norm and right-hand norm product of the inequality."""
    fam = case.family
    if fam is Family.POINCARE_SOBOLEV:
        return (norm(u, NormKind.sup()),
                norm(caputo_derivative(u, case.alpha), NormKind.lp(case.p)))
    if fam is Family.POINCARE_SOBOLEV_LQ:
        return (norm(u, NormKind.lp(case.theta)),
                norm(caputo_derivative(u, case.alpha), NormKind.lp(case.p)))
    if fam is Family.SOBOLEV_BETA:
        return (norm(_caputo_or_identity(u, case.beta), NormKind.sup()),
                norm(caputo_derivative(u, case.alpha), NormKind.lp(case.p)))
    if fam is Family.HARDY:
        return (norm(u, NormKind.weighted_lp(case.p, -1.0)),
                norm(caputo_derivative(u, case.alpha), NormKind.lp(case.p)))
    if fam is Family.WEIGHTED_HARDY:
        return (norm(u, NormKind.weighted_lp(case.p, -(case.gamma + 1.0))),
                norm(caputo_derivative(u, case.alpha),
                     NormKind.weighted_lp(case.p, -case.gamma)))
    if fam is Family.GAGLIARDO_NIRENBERG:
        d = caputo_derivative(u, case.alpha)
        return (norm(u, NormKind.lp(case.gamma)),
                norm(d, NormKind.lp(case.q)) ** case.s
                * norm(u, NormKind.lp(case.p)) ** (1.0 - case.s))
    if fam is Family.CKN:
        d = caputo_derivative(u, case.alpha)
        return (norm(u, NormKind.weighted_lp(case.r, case.c)),
                norm(d, NormKind.weighted_lp(case.p, case.d)) ** case.delta
                * norm(u, NormKind.weighted_lp(case.q, case.e)) ** (1.0 - case.delta))
    if fam is Family.SEQ_POINCARE_SOBOLEV:
        inner = caputo_derivative(u, case.beta)
        return (norm(inner, NormKind.sup()),
                norm(caputo_derivative(inner, case.alpha), NormKind.lp(case.p)))
    if fam is Family.SEQ_HARDY:
        inner = caputo_derivative(u, case.beta)
        return (norm(inner, NormKind.weighted_lp(case.p, -1.0)),
                norm(caputo_derivative(inner, case.alpha), NormKind.lp(case.p)))
    if fam is Family.SEQ_GAGLIARDO_NIRENBERG:
        inner = caputo_derivative(u, case.alpha)
        outer = caputo_derivative(inner, case.beta)
        return (norm(inner, NormKind.lp(case.gamma)),
                norm(outer, NormKind.lp(case.q)) ** case.s
                * norm(inner, NormKind.lp(case.p)) ** (1.0 - case.s))
    if fam is Family.HAD_POINCARE_SOBOLEV:
        g = hadamard_derivative(u, case.alpha, allow_order_one=True)
        return norm(u, NormKind.sup()), norm(g, NormKind.lp(case.p))
    if fam is Family.HAD_HARDY:
        g = hadamard_derivative(u, case.alpha, allow_order_one=True)
        return (norm(u, NormKind.weighted_lp(case.p, -1.0)),
                norm(g, NormKind.lp(case.p)))
    if fam is Family.HAD_WEIGHTED_HARDY:
        g = hadamard_derivative(u, case.alpha, allow_order_one=True)
        return (norm(u, NormKind.weighted_lp(case.p, -(case.gamma + 1.0))),
                _log_weighted_factor(g, case.p, -case.gamma, case.a))
    if fam is Family.HAD_GAGLIARDO_NIRENBERG:
        g = hadamard_derivative(u, case.alpha, allow_order_one=True)
        return (norm(u, NormKind.lp(case.gamma)),
                norm(g, NormKind.lp(case.q)) ** case.s
                * norm(u, NormKind.lp(case.p)) ** (1.0 - case.s))
    if fam is Family.HAD_CKN:
        g = hadamard_derivative(u, case.alpha, allow_order_one=True)
        return (norm(u, NormKind.weighted_lp(case.r, case.c)),
                _log_weighted_factor(g, case.p, case.d, case.a) ** case.delta
                * norm(u, NormKind.weighted_lp(case.q, case.e)) ** (1.0 - case.delta))
    if fam is Family.UNCERTAINTY:
        q = conjugate(case.p)
        return (norm(u, NormKind.lp(2.0)) ** 2,
                norm(caputo_derivative(u, case.alpha), NormKind.lp(case.p))
                * norm(u, NormKind.weighted_lp(q, 1.0)))
    if fam is Family.HAD_UNCERTAINTY:
        q = conjugate(case.p)
        g = hadamard_derivative(u, case.alpha, allow_order_one=True)
        return (norm(u, NormKind.lp(2.0)) ** 2,
                norm(g, NormKind.lp(case.p))
                * norm(u, NormKind.weighted_lp(q, 1.0)))
    raise ParamError(f"unknown family {fam!r}")  # pragma: no cover


@dataclass(frozen=True)
class Certificate:
    """Evaluated inequality instance for one (case, function) pair."""

    case: InequalityCase
    function: str
    lhs: float
    rhs_norm_product: float
    constant: float
    rhs: float
    ratio: float
    disc_tol: float
    passed: bool
    grid_n: int


@dataclass(frozen=True)
class SweepCell:
    """One sweep entry: either a certificate or an isolated error."""

    case: InequalityCase
    function: str
    certificate: Certificate | None
    error: str | None = None


def _ratio_of(lhs: float, rhs: float) -> float:
    if rhs > 0.0:
        return lhs / rhs
    return 0.0 if lhs == 0.0 else float("inf")


def _coarsen(u: GridFn) -> GridFn | None:
    g = u.grid
    if g.n < 4:
        return None
    m = g.n // 2
    coarse = uniform_grid(g.a, g.b, m)
    if g.n % 2 == 0:
        samples = u.samples[::2]
    else:
        samples = np.interp(coarse.nodes, g.nodes, u.samples)
    return GridFn(coarse, samples, name=u.name)


def evaluate_sides(case: InequalityCase, u: GridFn,
                   disc_tol: float | None = None) -> Certificate:
    """Evaluate both sides of the inequality for one sampled function.

    The discretization tolerance defaults to the Richardson policy
    ``1e-6 + |ratio(n) - ratio(n/2)|``; pass ``disc_tol`` to pin it.
    Raises HypothesisError when the function violates the family's boundary
    hypothesis, ParamError for invalid cases.
    """
    case = validate_case(case)
    if u.grid.a != case.a or u.grid.b != case.b:
        raise ParamError(
            f"{case.family.value}: function is sampled on [{u.grid.a}, {u.grid.b}] "
            f"but the case interval is [{case.a}, {case.b}]"
        )
    _boundary_check(case, u)
    cval = constant(case)
    lhs, product = _sides(case, u)
    rhs = cval * product
    ratio = _ratio_of(lhs, rhs)
    if disc_tol is None:
        tol = 1e-6
        coarse = _coarsen(u)
        if coarse is not None:
            lhs_c, product_c = _sides(case, coarse)
            tol += abs(ratio - _ratio_of(lhs_c, cval * product_c))
    else:
        tol = float(disc_tol)
    if not np.isfinite([lhs, product, cval]).all():
        raise NumericError(
            f"{case.family.value}: non-finite certificate values "
            f"(lhs={lhs}, product={product}, constant={cval})"
        )
    return Certificate(
        case=case,
        function=u.name,
        lhs=float(lhs),
        rhs_norm_product=float(product),
        constant=cval,
        rhs=float(rhs),
        ratio=float(ratio),
        disc_tol=float(tol),
        passed=bool(ratio <= 1.0 + tol),
        grid_n=u.grid.n,
    )


def sweep(family: Family, cases: list[InequalityCase],
          corpus: list[GridFn]) -> list[SweepCell]:
    """Evaluate the full cases x corpus cross product, lattice-major.

    Per-cell errors are captured in the cell instead of aborting the sweep,
    so one invalid case or one hypothesis violation leaves the remaining
    cells intact.
    """
    cells: list[SweepCell] = []
    for case in cases:
        for u in corpus:
            try:
                if case.family is not family:
                    raise ParamError(
                        f"case family {case.family.value} does not match sweep "
                        f"family {family.value}"
                    )
                cells.append(SweepCell(case, u.name, evaluate_sides(case, u)))
            except FracineqError as exc:
                cells.append(SweepCell(case, u.name, None,
                                       error=f"{type(exc).__name__}: {exc}"))
    return cells
