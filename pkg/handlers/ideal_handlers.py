import argparse
import logging

from ideal import colength, colon, hilbert_function, hilbert_polynomial, intersect, power
from utils.decorators import EXIT_OK, argument, command, domain_errors, usage_error
from utils.ideal_parser import parse_ideal
from utils.render import bracketed, emit, ideal_payload, render_fraction, render_staircase

LOGGER = logging.getLogger(__name__)

HILBERT_POLY_TEMPLATE = """
Ideal:     {ideal}
P_I(l) = {c2}*l^2 + {c1}*l + {c0}
{status}
"""


@command("power", help="The power I^l",
         arguments=[argument("ideal", help="Monomial ideal"), argument("l", type=int, help="Exponent l >= 0")])
@domain_errors
def power_command(args: argparse.Namespace) -> int:
    I = parse_ideal(args.ideal)
    P = power(I, args.l)
    emit(args, f"I^{args.l} = {bracketed(P)}", ideal_payload(P), render_staircase(P))
    return EXIT_OK


@command("colon", help="The colon ideal I : J",
         arguments=[argument("ideal", help="Dividend I"), argument("divisor", help="Divisor J")])
@domain_errors
def colon_command(args: argparse.Namespace) -> int:
    I, J = parse_ideal(args.ideal), parse_ideal(args.divisor)
    Q = colon(I, J)
    emit(args, f"I : J = {bracketed(Q)}", ideal_payload(Q), render_staircase(Q))
    return EXIT_OK


@command("intersect", help="The intersection of two monomial ideals",
         arguments=[argument("ideal", help="First ideal"), argument("other", help="Second ideal")])
@domain_errors
def intersect_command(args: argparse.Namespace) -> int:
    I, J = parse_ideal(args.ideal), parse_ideal(args.other)
    K = intersect(I, J)
    emit(args, f"I ∩ J = {bracketed(K)}", ideal_payload(K), render_staircase(K))
    return EXIT_OK


@command("hilbert", help="Hilbert function H(l) = dim R/I^l, or the Hilbert polynomial with 'poly'",
         arguments=[
             argument("ideal", help="An <x, y>-primary monomial ideal"),
             argument("l", help="A power l >= 0, or 'poly'"),
             argument("--from", dest="l_start", type=int, default=1,
                      help="First power used to fit the polynomial (default 1)"),
         ])
@domain_errors
def hilbert_command(args: argparse.Namespace) -> int:
    I = parse_ideal(args.ideal)
    if args.l == "poly":
        poly = hilbert_polynomial(I, args.l_start)
        c2, c1, c0 = (render_fraction(c) for c in poly.coefficients)
        status = (f"verified on two further powers past l = {poly.l_start}" if poly.verified
                  else f"NOT yet stable from l = {poly.l_start}; retry with a larger --from")
        emit(args, HILBERT_POLY_TEMPLATE.format(ideal=bracketed(I), c2=c2, c1=c1, c0=c0, status=status), {
            "coefficients": [c2, c1, c0],
            "verified": poly.verified,
            "l_start": poly.l_start,
        })
        return EXIT_OK

    if not args.l.isdigit():
        return usage_error(f"hilbert expects a nonnegative integer or 'poly', got '{args.l}'")
    l = int(args.l)
    value = hilbert_function(I, l)
    emit(args, f"H({l}) = dim R/I^{l} = {value}", {"l": l, "value": value, "colength": colength(I)})
    return EXIT_OK
