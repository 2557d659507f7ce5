import argparse
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

import config
from ideal import Monomial, MonomialIdeal, contains_monomial
from ratliff_rush import ClosureResult

# Staircase cells
GENERATOR_CELL = "o"
ADDED_GENERATOR_CELL = "*"
ADDED_CELL = "+"
IDEAL_CELL = "#"
STANDARD_CELL = "."

STAIRCASE_LEGEND = "legend: o generator, * added generator, + added by closure, # in ideal, . standard monomial"
UNCERTIFIED_BANNER = "!!! UNCERTIFIED (l ≤ {l_used} examined): closure shown is a lower approximation !!!"


def render_monomial(m: Monomial) -> str:
    parts = []
    if m.a:
        parts.append("x" if m.a == 1 else f"x^{m.a}")
    if m.b:
        parts.append("y" if m.b == 1 else f"y^{m.b}")
    return "*".join(parts) or "1"


def render_monomials(monomials: Iterable[Monomial]) -> str:
    return ", ".join(render_monomial(m) for m in monomials)


def render_ideal(I: MonomialIdeal) -> str:
    """Comma-separated generators; parse_ideal reads it back. The zero ideal renders as "0"."""
    return render_monomials(I.gens) if not I.is_zero else "0"


def bracketed(I: MonomialIdeal) -> str:
    return f"<{render_ideal(I)}>"


def render_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def pairs(monomials: Iterable[Monomial]) -> List[List[int]]:
    return [[m.a, m.b] for m in monomials]


def ideal_payload(I: MonomialIdeal) -> Dict[str, Any]:
    return {"generators": pairs(I.gens)}


def closure_payload(result: ClosureResult, closure: MonomialIdeal, original: MonomialIdeal,
                    factor: Monomial) -> Dict[str, Any]:
    return {
        "closure": ideal_payload(closure),
        "method": result.method.value,
        "reduction_number": result.reduction_number,
        "certified": result.certified,
        "l_used": result.l_used,
        "factor": [factor.a, factor.b],
        "added": pairs(m for m in closure.gens if not contains_monomial(original, m)),
    }


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def render_staircase(I: MonomialIdeal, closure: Optional[MonomialIdeal] = None,
                     max_cells: Optional[int] = None) -> str:
    """ASCII staircase with the y-axis pointing up, clipped to max_cells per side."""
    max_cells = max_cells or config.STAIRCASE_MAX_CELLS
    shown = closure if closure is not None else I
    if I.is_zero:
        return "(zero ideal: no staircase)"

    gens = set(I.gens)
    added = set(shown.gens) - gens
    width = max(m.a for m in I.gens) + 1
    height = max(m.b for m in I.gens) + 1
    cols, rows = min(width, max_cells), min(height, max_cells)
    label = len(str(rows - 1))

    lines = []
    for v in range(rows - 1, -1, -1):
        cells = []
        for u in range(cols):
            m = Monomial(u, v)
            if m in gens:
                cells.append(GENERATOR_CELL)
            elif m in added:
                cells.append(ADDED_GENERATOR_CELL)
            elif contains_monomial(I, m):
                cells.append(IDEAL_CELL)
            elif contains_monomial(shown, m):
                cells.append(ADDED_CELL)
            else:
                cells.append(STANDARD_CELL)
        suffix = " ..." if cols < width else ""
        lines.append(f"{v:>{label}} |{''.join(cells)}{suffix}")
    if rows < height:
        lines.insert(0, f"{'':>{label}} |{':' * cols}")
    lines.append(f"{'':>{label}} +{'-' * cols}")
    axis = "0" + (f"{cols - 1:>{cols - 1}}" if cols > 1 else "")
    lines.append(f"{'':>{label}}  {axis}")
    if cols < width or rows < height:
        lines.append(f"(clipped to {cols}x{rows} of {width}x{height} cells)")
    lines.append(STAIRCASE_LEGEND)
    return "\n".join(lines)


def emit(args: argparse.Namespace, text: str, payload: Optional[Dict[str, Any]] = None,
         staircase: Optional[str] = None) -> None:
    """Prints a result in the form the global flags ask for."""
    if args.json and payload is not None:
        print(dumps(payload))
        return
    print(text.strip("\n"))
    if staircase is not None and args.staircase:
        print()
        print(staircase)
