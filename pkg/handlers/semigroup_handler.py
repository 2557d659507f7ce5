import argparse
import logging
from fractions import Fraction

from semigroup import (
    big_lambda, bound_L, frobenius, lambda_min, min_representation, normalize_generators,
    ratio_bounds, representation_with_total,
)
from utils.decorators import EXIT_OK, argument, command, domain_errors, usage_error
from utils.ideal_parser import parse_int_list
from utils.render import emit, render_fraction

LOGGER = logging.getLogger(__name__)

SEMIGROUP_TEMPLATE = """
Semigroup: {S}  (minimal generators, h = {h})
g(S):      {g}
Lambda:    {big_lambda}
a_r:       {a_r}
"""

LAMBDA_TEMPLATE = "lambda({s}) = {lam}, minimal representation {s} = {terms}"
TOTAL_TEMPLATE = "representation of {s} with {total} coefficients (lambda_0 first): {coeffs}"
RATIO_TEMPLATE = "{lower} <= {s}/lambda({s}) <= {upper}"
BOUND_TEMPLATE = "bound_L(alpha={alpha}, beta={beta}) = {value}"


@command("semigroup", help="Frobenius number, Lambda and representations in a numerical semigroup",
         arguments=[
             argument("generators", help='Comma-separated generators, e.g. "3,5,8"'),
             argument("--lambda", dest="member", type=int, default=None,
                      help="Report lambda(s) and its minimal representation"),
             argument("--total", type=int, default=None,
                      help="With --lambda: a representation with exactly this many coefficients"),
             argument("--alpha", type=Fraction, default=None, help="Compute bound_L at this alpha (< 1), e.g. 1/2"),
             argument("--beta", type=Fraction, default=Fraction(0), help="beta for bound_L (default 0)"),
         ])
@domain_errors
def semigroup_command(args: argparse.Namespace) -> int:
    if args.total is not None and args.member is None:
        return usage_error("--total needs --lambda")

    S = normalize_generators(parse_int_list(args.generators))
    g = frobenius(S)
    payload = {"generators": list(S.generators), "h": S.h, "frobenius": g, "big_lambda": big_lambda(S)}
    lines = [SEMIGROUP_TEMPLATE.format(S=S, h=S.h, g=g, big_lambda=payload["big_lambda"], a_r=S.largest).strip("\n")]

    if args.member is not None:
        s = args.member
        coeffs = min_representation(S, s)
        terms = " + ".join(f"{c}*{a}" for c, a in zip(coeffs, S.generators) if c) or "0"
        payload["lambda"] = {"s": s, "value": lambda_min(S, s), "representation": list(coeffs)}
        lines.append(LAMBDA_TEMPLATE.format(s=s, lam=lambda_min(S, s), terms=terms))
        if s > g and s > 0:
            lower, upper = ratio_bounds(S, s)
            lines.append(RATIO_TEMPLATE.format(
                lower=render_fraction(lower), s=s, upper=render_fraction(upper) if upper is not None else "inf",
            ))
        if args.total is not None:
            with_total = representation_with_total(S, s, args.total)
            payload["lambda"]["with_total"] = list(with_total)
            lines.append(TOTAL_TEMPLATE.format(s=s, total=args.total, coeffs=with_total))

    if args.alpha is not None:
        value = bound_L(S, args.alpha, args.beta)
        payload["bound_L"] = {"alpha": render_fraction(args.alpha), "beta": render_fraction(args.beta), "value": value}
        lines.append(BOUND_TEMPLATE.format(alpha=render_fraction(args.alpha), beta=render_fraction(args.beta), value=value))

    emit(args, "\n".join(lines), payload)
    return EXIT_OK
