import argparse
from dataclasses import asdict
import logging

from ratliff_rush import (
    FAMILY_PARAMETERS, EnumeratedIdeal, Family, FamilySpec, enumerate_equal_degree, family_ideal,
    is_ratliff_rush,
)
from utils.decorators import EXIT_OK, argument, command, domain_errors
from utils.render import bracketed, emit, ideal_payload, render_ideal, render_staircase

LOGGER = logging.getLogger(__name__)

FAMILY_TEMPLATE = """
{name}{params}: {ideal}
Ratliff-Rush: {status}
"""

ENUMERATE_TEMPLATE = """
Equal-degree <x, y>-primary ideals of degree {degree}: {total}
Ratliff-Rush:                               {rr_count}
meeting the half criterion:                 {half_criterion_count}  (estimate {half_criterion_estimate})
  of which Ratliff-Rush:                    {half_criterion_rr_count}
passing the exponent-sum check:             {sufficient_count}
"""

FAMILY_HELP = "; ".join(f"{f.value}({', '.join(p)})" for f, p in FAMILY_PARAMETERS.items())


def _flag(value: bool) -> str:
    return "yes" if value else "no "


@command("family", help=f"Build a named family of ideals: {FAMILY_HELP}",
         arguments=[
             argument("name", choices=[f.value for f in Family], help="Family name"),
             argument("params", type=int, nargs="+", help="Family parameters"),
         ])
@domain_errors
def family_command(args: argparse.Namespace) -> int:
    spec = FamilySpec(Family(args.name), tuple(args.params))
    I = family_ideal(spec)
    is_rr, certified = is_ratliff_rush(I, args.max_l)
    status = ("yes" if is_rr else "no") + ("" if certified else " (uncertified)")
    text = FAMILY_TEMPLATE.format(
        name=spec.family.value,
        params="(" + ", ".join(str(p) for p in spec.params) + ")",
        ideal=bracketed(I),
        status=status,
    )
    payload = ideal_payload(I)
    payload.update({"family": spec.family.value, "params": list(spec.params), "is_rr": is_rr, "certified": certified})
    emit(args, text, payload, render_staircase(I))
    return EXIT_OK


@command("enumerate", help="Every equal-degree <x, y>-primary ideal of degree d, with Ratliff-Rush counts",
         arguments=[
             argument("d", type=int, help="Degree d >= 2"),
             argument("--list", dest="list_all", action="store_true", help="Print every ideal with its status"),
         ])
@domain_errors
def enumerate_command(args: argparse.Namespace) -> int:
    entries = []

    def collect(entry: EnumeratedIdeal):
        entries.append(entry)

    summary = enumerate_equal_degree(args.d, collect if args.list_all else None)
    text = ENUMERATE_TEMPLATE.format(**asdict(summary))
    if args.list_all:
        rows = ["RR   half suff ideal"]
        rows += [
            f"{_flag(e.is_rr)}  {_flag(e.half_criterion)}  {_flag(e.sufficient)}  {render_ideal(e.ideal)}"
            for e in entries
        ]
        text += "\n" + "\n".join(rows)

    payload = asdict(summary)
    if args.list_all:
        payload["ideals"] = [
            {**ideal_payload(e.ideal), "is_rr": e.is_rr, "half_criterion": e.half_criterion, "sufficient": e.sufficient}
            for e in entries
        ]
    emit(args, text, payload)
    return EXIT_OK
