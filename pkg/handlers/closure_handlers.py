import argparse
import logging

import config
from ideal import extract_common_factor, shift
from ratliff_rush import (
    ClassKind, all_powers_rr_check, classify, closure, cross_check, power_decomposition,
    power_form_bound, reduction_bound, semigroups_of,
)
from semigroup import big_lambda, frobenius
from utils.decorators import EXIT_DOMAIN_ERROR, EXIT_OK, argument, command, domain_errors
from utils.ideal_parser import parse_ideal
from utils.render import (
    UNCERTIFIED_BANNER, bracketed, closure_payload, emit, ideal_payload, render_monomial,
    render_monomials, render_staircase,
)

LOGGER = logging.getLogger(__name__)

IDEAL_ARGUMENT = argument("ideal", help='Monomial ideal, e.g. "y^7, x^2*y^5, x^5*y^2, x^7" or "(0,7),(2,5),(5,2),(7,0)"')

CLOSURE_TEMPLATE = """
Ideal:     {ideal}
Class:     {cls}{factor}
Closure:   {closure}
Added:     {added}
Method:    {method}
r(I):      {reduction}
"""

PRINCIPAL_TEMPLATE = """
Ideal:     {ideal}
Principal ideals are trivially Ratliff-Rush: closure = input.
r(I):      0
"""

ORACLE_TEMPLATE = "Oracle:    colon chain at l={l_used} ({certified}) {verdict} the closed form"

REDUCTION_TEMPLATE = """
Ideal:     {ideal}
r(I):      {reduction}{bound}
"""

CLASSIFY_TEMPLATE = """
Ideal:     {ideal}
Class:     {cls}
"""

SEMIGROUPS_TEMPLATE = """S:         {S}  (g = {g_s}, Lambda = {lam_s})
T:         {T}  (g = {g_t}, Lambda = {lam_t})"""

BOUNDS_TEMPLATE = """reduction bound:   {reduction_bound}
power-form bound:  {power_form_bound}"""

DECOMPOSE_TEMPLATE = """
I^{l} = y^{shift}*I_S + x^{shift}*I_T + x^{d}*y^{d}*(I^{l} : x^{d}*y^{d})
y-part:    {s_part}
x-part:    {t_part}
middle:    {middle}
holds:                     {holds}
middle is <x,y>^{middle_degree}:     {is_max}
g(S), g(T) <= d - 1:       {expected}
"""


def _reduction_text(result) -> str:
    if result.reduction_number is not None:
        return str(result.reduction_number)
    return "unknown (closure not certified)"


@command("closure", help="Ratliff-Rush closure and reduction number", arguments=[IDEAL_ARGUMENT])
@domain_errors
def closure_command(args: argparse.Namespace) -> int:
    I = parse_ideal(args.ideal)
    if I.is_principal:
        emit(args, PRINCIPAL_TEMPLATE.format(ideal=bracketed(I)), {
            "closure": ideal_payload(I), "method": "closed_form", "reduction_number": 0,
            "certified": True, "l_used": 0, "factor": [I.gens[0].a, I.gens[0].b], "added": [],
        }, render_staircase(I))
        return EXIT_OK

    factor, result = closure(I, args.max_l)
    _, reduced = extract_common_factor(I)
    full = shift(result.closure, factor)
    payload = closure_payload(result, full, I, factor)

    if not result.certified and not args.json:
        print(UNCERTIFIED_BANNER.format(l_used=result.l_used))

    added = tuple(m for m in full.gens if m not in I.gens)
    text = CLOSURE_TEMPLATE.format(
        ideal=bracketed(I),
        cls=classify(reduced),
        factor=f"  (common factor {render_monomial(factor)})" if factor.degree else "",
        closure=bracketed(full),
        added=render_monomials(added) if added else "none (I is Ratliff-Rush)",
        method=result.method.value,
        reduction=_reduction_text(result),
    )

    exit_code = EXIT_OK
    if args.oracle:
        if classify(reduced).has_closed_form:
            check = cross_check(reduced, args.max_l)
            payload["oracle"] = {
                "agree": check.agree,
                "l_used": check.brute_force.l_used,
                "certified": check.brute_force.certified,
            }
            text += "\n" + ORACLE_TEMPLATE.format(
                l_used=check.brute_force.l_used,
                certified="certified" if check.brute_force.certified else "uncertified",
                verdict="agrees with" if check.agree else "DISAGREES with",
            )
            if not check.agree and check.brute_force.certified:
                exit_code = EXIT_DOMAIN_ERROR
        else:
            payload["oracle"] = None
            text += "\nOracle:    no closed form for General ideals; the colon chain is the only method"

    emit(args, text, payload, render_staircase(I, full))
    return exit_code


@command("reduction", help="Reduction number r(I), the least l with I^(l+1):I^l equal to the closure",
         arguments=[IDEAL_ARGUMENT])
@domain_errors
def reduction_command(args: argparse.Namespace) -> int:
    I = parse_ideal(args.ideal)
    factor, result = closure(I, args.max_l)
    if not result.certified and not args.json:
        print(UNCERTIFIED_BANNER.format(l_used=result.l_used))

    bound = ""
    payload = {"reduction_number": result.reduction_number, "certified": result.certified,
               "l_used": result.l_used, "reduction_bound": None}
    _, reduced = extract_common_factor(I)
    if not reduced.is_unit and classify(reduced).kind is ClassKind.EQUAL_DEGREE:
        payload["reduction_bound"] = reduction_bound(reduced)
        bound = f"  (bound {payload['reduction_bound']})"
    emit(args, REDUCTION_TEMPLATE.format(ideal=bracketed(I), reduction=_reduction_text(result), bound=bound), payload)
    return EXIT_OK


@command("classify", help="Equal-degree, slanted-line or general, with the associated semigroups",
         arguments=[IDEAL_ARGUMENT])
@domain_errors
def classify_command(args: argparse.Namespace) -> int:
    I = parse_ideal(args.ideal)
    cls = classify(I)
    text = CLASSIFY_TEMPLATE.format(ideal=bracketed(I), cls=cls)
    payload = {"class": cls.kind.name.lower(), "degree": cls.degree, "a_r": cls.a_r, "b_0": cls.b_0}

    if cls.has_closed_form:
        S, T = semigroups_of(I)
        a_r, b_0 = cls.line
        text += SEMIGROUPS_TEMPLATE.format(
            S=S, g_s=frobenius(S), lam_s=big_lambda(S, a_r), T=T, g_t=frobenius(T), lam_t=big_lambda(T, b_0),
        )
        payload["S"] = list(S.generators)
        payload["T"] = list(T.generators)
    if cls.kind is ClassKind.EQUAL_DEGREE:
        payload["reduction_bound"] = reduction_bound(I)
        payload["power_form_bound"] = power_form_bound(I)
        text += "\n" + BOUNDS_TEMPLATE.format(**payload)
    emit(args, text, payload, render_staircase(I))
    return EXIT_OK


@command("check-powers", help="Ratliff-Rush status of I, I^2, ..., I^lmax",
         arguments=[
             IDEAL_ARGUMENT,
             argument("--lmax", type=int, default=None,
                      help=f"Highest power to check (default {config.CHECK_POWERS_LMAX})"),
         ])
@domain_errors
def check_powers_command(args: argparse.Namespace) -> int:
    I = parse_ideal(args.ideal)
    statuses = all_powers_rr_check(I, config.CHECK_POWERS_LMAX if args.lmax is None else args.lmax, args.max_l)

    rows = [f"{'l':>3}  {'status':<18}witness"]
    for status in statuses:
        if not status.is_rr:
            label = "not Ratliff-Rush"
        elif status.certified:
            label = "Ratliff-Rush"
        else:
            label = "RR (uncertified)"
        rows.append(f"{status.l:>3}  {label:<18}{render_monomials(status.added)}")

    payload = {"powers": [
        {"l": s.l, "is_rr": s.is_rr, "certified": s.certified, "added": [[m.a, m.b] for m in s.added]}
        for s in statuses
    ]}
    emit(args, f"Ideal: {bracketed(I)}\n" + "\n".join(rows), payload)
    return EXIT_OK


@command("decompose", help="Split I^l into its y-part, x-part and middle (equal-degree ideals)",
         arguments=[
             IDEAL_ARGUMENT,
             argument("--l", dest="l", type=int, required=True, help="Power to decompose (l >= 2)"),
         ])
@domain_errors
def decompose_command(args: argparse.Namespace) -> int:
    I = parse_ideal(args.ideal)
    d = classify(I).degree
    result = power_decomposition(I, args.l)
    text = DECOMPOSE_TEMPLATE.format(
        l=args.l, d=d, shift=d * args.l - d,
        s_part=bracketed(result.s_part), t_part=bracketed(result.t_part), middle=bracketed(result.middle),
        holds=result.holds, middle_degree=d * (args.l - 2),
        is_max=result.middle_is_maximal_power, expected=result.maximal_power_expected,
    )
    if result.maximal_power_expected and not result.middle_is_maximal_power:
        LOGGER.info(f"Middle of I^{args.l} is not yet a power of <x, y>; try a larger l")
    emit(args, text, {
        "s_part": ideal_payload(result.s_part),
        "t_part": ideal_payload(result.t_part),
        "middle": ideal_payload(result.middle),
        "holds": result.holds,
        "middle_is_maximal_power": result.middle_is_maximal_power,
        "maximal_power_expected": result.maximal_power_expected,
    })
    return EXIT_OK
