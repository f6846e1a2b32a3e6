"""Builtin algebra presentations and their defining relation tables.

Builtins:

  dqsp              coordinates x, xi, theta, z with the q-exchange rules
  dqsp-ext          same, with x Laurent (the inverse letter ``xinv``)
  dqsp-omega        coordinates plus the differentials dx, dxi, dtheta, dz
  dqsp-ops          omega plus the partials Dx, Dxi, Dtheta, Dz
  manin-sp          the q-superplane on x, xi, theta (both odd ones
                    anticommuting), for comparison
  z22-commutative   the q = 1 degeneration of dqsp: signs only

Presentation files use the same JSON layout as the builtin specs below;
``load_presentation`` accepts a builtin name or a file path (searching the
directories in ``Z2Q_PRESENTATION_PATH`` as a fallback).
"""

from __future__ import annotations

import json
import os

from .engine import (AlgebraPresentation, ExchangeRule, GeneratorInfo,
                     PresentationError, check_local_confluence)
from .scalars import ZERO, QScalar

__all__ = ["BUILTIN_NAMES", "load_presentation", "build_presentation",
           "presentation_from_file", "DEFINING_RELATIONS",
           "COORD_DIFF_RELATIONS", "DIFF_DIFF_RELATIONS",
           "PARTIAL_COORD_RELATIONS", "PARTIAL_PARTIAL_RELATIONS",
           "PARTIAL_DIFF_RELATIONS"]

SEARCH_PATH_ENV = "Z2Q_PRESENTATION_PATH"


def _gen(symbol, degree, form_degree=0, nilpotent=False, laurent=False,
         kind="coordinate"):
    return {"symbol": symbol, "degree": list(degree), "form_degree": form_degree,
            "nilpotent": nilpotent, "laurent": laurent, "kind": kind}


def _rule(hi, lo, coeff, delta=None):
    entry = {"hi": hi, "lo": lo, "coeff": coeff}
    if delta is not None:
        entry["delta"] = delta
    return entry


_COORD_GENS_2 = [
    _gen("x", (0, 0)),
    _gen("xi", (0, 1), nilpotent=True),
    _gen("theta", (1, 0), nilpotent=True),
    _gen("z", (1, 1)),
]

# Z2^3 degrees: bit 0 is the form-degree parity
_COORD_GENS_3 = [
    _gen("x", (0, 0, 0)),
    _gen("xi", (0, 0, 1), nilpotent=True),
    _gen("theta", (0, 1, 0), nilpotent=True),
    _gen("z", (0, 1, 1)),
]

_DIFF_GENS = [
    _gen("dx", (1, 0, 0), form_degree=1, nilpotent=True, kind="differential"),
    _gen("dxi", (1, 0, 1), form_degree=1, kind="differential"),
    _gen("dtheta", (1, 1, 0), form_degree=1, kind="differential"),
    _gen("dz", (1, 1, 1), form_degree=1, nilpotent=True, kind="differential"),
]

_PARTIAL_GENS = [
    _gen("Dx", (0, 0, 0), kind="partial"),
    _gen("Dxi", (0, 0, 1), nilpotent=True, kind="partial"),
    _gen("Dtheta", (0, 1, 0), nilpotent=True, kind="partial"),
    _gen("Dz", (0, 1, 1), kind="partial"),
]

_COORD_RULES = [
    _rule("xi", "x", "q^-1"),
    _rule("theta", "x", "q^-1"),
    _rule("theta", "xi", "1"),
    _rule("z", "x", "1"),
    _rule("z", "xi", "-q"),
    _rule("z", "theta", "-q"),
]

_DIFF_COORD_RULES = [
    _rule("dx", "x", "1"),
    _rule("dx", "xi", "q"),
    _rule("dx", "theta", "q"),
    _rule("dx", "z", "1"),
    _rule("dxi", "x", "q^-1"),
    _rule("dxi", "xi", "-1"),
    _rule("dxi", "theta", "1"),
    _rule("dxi", "z", "-q^-1"),
    _rule("dtheta", "x", "q^-1"),
    _rule("dtheta", "xi", "1"),
    _rule("dtheta", "theta", "-1"),
    _rule("dtheta", "z", "-q^-1"),
    _rule("dz", "x", "1"),
    _rule("dz", "xi", "-q"),
    _rule("dz", "theta", "-q"),
    _rule("dz", "z", "1"),
]

_DIFF_DIFF_RULES = [
    _rule("dxi", "dx", "-q^-1"),
    _rule("dtheta", "dx", "-q^-1"),
    _rule("dtheta", "dxi", "-1"),
    _rule("dz", "dx", "-1"),
    _rule("dz", "dxi", "q"),
    _rule("dz", "dtheta", "q"),
]

_PARTIAL_COORD_RULES = [
    _rule("Dx", "x", "1", "1"),
    _rule("Dx", "xi", "q^-1"),
    _rule("Dx", "theta", "q^-1"),
    _rule("Dx", "z", "1"),
    _rule("Dxi", "x", "q"),
    _rule("Dxi", "xi", "-1", "1"),
    _rule("Dxi", "theta", "1"),
    _rule("Dxi", "z", "-q"),
    _rule("Dtheta", "x", "q"),
    _rule("Dtheta", "xi", "1"),
    _rule("Dtheta", "theta", "-1", "1"),
    _rule("Dtheta", "z", "-q"),
    _rule("Dz", "x", "1"),
    _rule("Dz", "xi", "-q^-1"),
    _rule("Dz", "theta", "-q^-1"),
    _rule("Dz", "z", "1", "1"),
]

_PARTIAL_DIFF_RULES = [
    _rule("Dx", "dx", "1"),
    _rule("Dx", "dxi", "q^-1"),
    _rule("Dx", "dtheta", "q^-1"),
    _rule("Dx", "dz", "1"),
    _rule("Dxi", "dx", "q"),
    _rule("Dxi", "dxi", "-1"),
    _rule("Dxi", "dtheta", "1"),
    _rule("Dxi", "dz", "-q"),
    _rule("Dtheta", "dx", "q"),
    _rule("Dtheta", "dxi", "1"),
    _rule("Dtheta", "dtheta", "-1"),
    _rule("Dtheta", "dz", "-q"),
    _rule("Dz", "dx", "1"),
    _rule("Dz", "dxi", "-q^-1"),
    _rule("Dz", "dtheta", "-q^-1"),
    _rule("Dz", "dz", "1"),
]

_PARTIAL_PARTIAL_RULES = [
    _rule("Dxi", "Dx", "q^-1"),
    _rule("Dtheta", "Dx", "q^-1"),
    _rule("Dtheta", "Dxi", "1"),
    _rule("Dz", "Dx", "1"),
    _rule("Dz", "Dxi", "-q"),
    _rule("Dz", "Dtheta", "-q"),
]

BUILTIN_SPECS = {
    "dqsp": {
        "name": "dqsp",
        "degree_length": 2,
        "generators": _COORD_GENS_2,
        "rules": _COORD_RULES,
    },
    "dqsp-ext": {
        "name": "dqsp-ext",
        "degree_length": 2,
        "generators": [dict(_COORD_GENS_2[0], laurent=True)] + _COORD_GENS_2[1:],
        "rules": _COORD_RULES,
    },
    "dqsp-omega": {
        "name": "dqsp-omega",
        "degree_length": 3,
        "generators": _COORD_GENS_3 + _DIFF_GENS,
        "rules": _COORD_RULES + _DIFF_COORD_RULES + _DIFF_DIFF_RULES,
    },
    "dqsp-ops": {
        "name": "dqsp-ops",
        "degree_length": 3,
        "generators": _COORD_GENS_3 + _DIFF_GENS + _PARTIAL_GENS,
        "rules": (_COORD_RULES + _DIFF_COORD_RULES + _DIFF_DIFF_RULES
                  + _PARTIAL_COORD_RULES + _PARTIAL_DIFF_RULES
                  + _PARTIAL_PARTIAL_RULES),
    },
    "manin-sp": {
        "name": "manin-sp",
        "degree_length": 2,
        "generators": [
            _gen("x", (0, 0)),
            _gen("xi", (0, 1), nilpotent=True),
            _gen("theta", (0, 1), nilpotent=True),
        ],
        "rules": [
            _rule("xi", "x", "q^-1"),
            _rule("theta", "x", "q^-1"),
            _rule("theta", "xi", "-q"),
        ],
    },
    "z22-commutative": {
        "name": "z22-commutative",
        "degree_length": 2,
        "generators": _COORD_GENS_2,
        "rules": [
            _rule("xi", "x", "1"),
            _rule("theta", "x", "1"),
            _rule("theta", "xi", "1"),
            _rule("z", "x", "1"),
            _rule("z", "xi", "-1"),
            _rule("z", "theta", "-1"),
        ],
    },
}

BUILTIN_NAMES = tuple(BUILTIN_SPECS)

_CACHE: dict = {}


def build_presentation(spec: dict, check: bool = True) -> AlgebraPresentation:
    """Construct a presentation from its JSON-format description.

    A generator marked ``laurent`` gets an inverse letter named
    ``<symbol>inv`` sharing its exponent slot; rules for the inverse letter
    are derived by inverting the stored exchange coefficients.
    """
    try:
        name = spec["name"]
        gen_specs = spec["generators"]
        rule_specs = spec["rules"]
        degree_length = int(spec.get("degree_length")
                            or len(gen_specs[0]["degree"]))
    except (KeyError, IndexError, TypeError) as exc:
        raise PresentationError(f"malformed presentation description: {exc}")

    generators = []
    slot_of = {}
    index = 0
    for slot, gs in enumerate(gen_specs):
        try:
            symbol = gs["symbol"]
            degree = tuple(int(b) for b in gs["degree"])
            form_degree = int(gs.get("form_degree", 0))
            nilpotent = bool(gs.get("nilpotent", False))
            laurent = bool(gs.get("laurent", False))
            kind = gs.get("kind", "coordinate")
        except (KeyError, TypeError, ValueError) as exc:
            raise PresentationError(f"{name}: bad generator entry: {exc}")
        generators.append(GeneratorInfo(symbol, index, slot, 1, degree,
                                        form_degree, nilpotent, kind))
        slot_of[symbol] = slot
        index += 1
        if laurent:
            generators.append(GeneratorInfo(symbol + "inv", index, slot, -1,
                                            degree, form_degree, nilpotent,
                                            "inverse-coordinate"))
            index += 1

    rules = []
    for rs in rule_specs:
        try:
            hi = slot_of[rs["hi"]]
            lo = slot_of[rs["lo"]]
            coeff = QScalar.parse(rs["coeff"])
            delta = QScalar.parse(rs["delta"]) if "delta" in rs else ZERO
        except KeyError as exc:
            raise PresentationError(f"{name}: rule references unknown generator {exc}")
        except ValueError as exc:
            raise PresentationError(f"{name}: bad rule coefficient: {exc}")
        rules.append(ExchangeRule(hi, lo, coeff, delta))

    pres = AlgebraPresentation(name, generators, rules, degree_length)
    if check:
        report = check_local_confluence(pres)
        if not report.ok():
            bad = next(e for e in report.entries if e.status == "fail")
            raise PresentationError(
                f"{name}: not locally confluent: {bad.label} "
                f"({bad.lhs} vs {bad.rhs})")
    return pres


def presentation_from_file(path: str) -> AlgebraPresentation:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            spec = json.load(handle)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"{path}: not valid JSON: {exc}")
    return build_presentation(spec)


def load_presentation(name_or_path: str) -> AlgebraPresentation:
    """A builtin by name (cached), or a presentation file by path."""
    if name_or_path in BUILTIN_SPECS:
        pres = _CACHE.get(name_or_path)
        if pres is None:
            pres = build_presentation(BUILTIN_SPECS[name_or_path])
            _CACHE[name_or_path] = pres
        return pres
    candidates = [name_or_path]
    for directory in os.environ.get(SEARCH_PATH_ENV, "").split(os.pathsep):
        if directory:
            candidates.append(os.path.join(directory, name_or_path))
    for path in candidates:
        if os.path.isfile(path):
            return presentation_from_file(path)
    raise PresentationError(
        f"unknown presentation {name_or_path!r}: not a builtin "
        f"({', '.join(BUILTIN_NAMES)}) and no such file")


# -- defining relations, written in the orientation of the source algebra ----
#
# Each relation is a list of (coefficient, word) pairs asserted to sum to
# zero.  These are deliberately NOT the rewrite rules verbatim: they state
# the relations with the factors in the opposite order, so normalising them
# exercises the inversion of every rule.

_DQSP_RELATIONS = [
    [("1", ("x", "xi")), ("-q", ("xi", "x"))],
    [("1", ("x", "theta")), ("-q", ("theta", "x"))],
    [("1", ("x", "z")), ("-1", ("z", "x"))],
    [("1", ("xi", "xi"))],
    [("1", ("theta", "theta"))],
    [("1", ("xi", "theta")), ("-1", ("theta", "xi"))],
    [("1", ("xi", "z")), ("q^-1", ("z", "xi"))],
    [("1", ("theta", "z")), ("q^-1", ("z", "theta"))],
]

_INVERSE_RELATIONS = [
    [("1", ("xinv", "xi")), ("-q^-1", ("xi", "xinv"))],
    [("1", ("xinv", "theta")), ("-q^-1", ("theta", "xinv"))],
    [("1", ("xinv", "z")), ("-1", ("z", "xinv"))],
]

_MANIN_RELATIONS = [
    [("1", ("x", "xi")), ("-q", ("xi", "x"))],
    [("1", ("x", "theta")), ("-q", ("theta", "x"))],
    [("1", ("xi", "theta")), ("q^-1", ("theta", "xi"))],
    [("1", ("xi", "xi"))],
    [("1", ("theta", "theta"))],
]

# coordinate-differential exchange, in the fixed order used by the
# derivative-consistency check (each row is coordinate*differential first)
COORD_DIFF_RELATIONS = [
    [("1", ("x", "dx")), ("-1", ("dx", "x"))],
    [("1", ("x", "dxi")), ("-q", ("dxi", "x"))],
    [("1", ("x", "dtheta")), ("-q", ("dtheta", "x"))],
    [("1", ("x", "dz")), ("-1", ("dz", "x"))],
    [("1", ("xi", "dx")), ("-q^-1", ("dx", "xi"))],
    [("1", ("xi", "dxi")), ("1", ("dxi", "xi"))],
    [("1", ("xi", "dtheta")), ("-1", ("dtheta", "xi"))],
    [("1", ("xi", "dz")), ("q^-1", ("dz", "xi"))],
    [("1", ("theta", "dx")), ("-q^-1", ("dx", "theta"))],
    [("1", ("theta", "dxi")), ("-1", ("dxi", "theta"))],
    [("1", ("theta", "dtheta")), ("1", ("dtheta", "theta"))],
    [("1", ("theta", "dz")), ("q^-1", ("dz", "theta"))],
    [("1", ("z", "dx")), ("-1", ("dx", "z"))],
    [("1", ("z", "dxi")), ("q", ("dxi", "z"))],
    [("1", ("z", "dtheta")), ("q", ("dtheta", "z"))],
    [("1", ("z", "dz")), ("-1", ("dz", "z"))],
]

DIFF_DIFF_RELATIONS = [
    [("1", ("dx", "dxi")), ("q", ("dxi", "dx"))],
    [("1", ("dx", "dtheta")), ("q", ("dtheta", "dx"))],
    [("1", ("dx", "dz")), ("1", ("dz", "dx"))],
    [("1", ("dxi", "dtheta")), ("1", ("dtheta", "dxi"))],
    [("1", ("dxi", "dz")), ("-q^-1", ("dz", "dxi"))],
    [("1", ("dtheta", "dz")), ("-q^-1", ("dz", "dtheta"))],
    [("1", ("dx", "dx"))],
    [("1", ("dz", "dz"))],
]

PARTIAL_COORD_RELATIONS = [
    [("1", ("Dx", "x")), ("-1", ("x", "Dx")), ("-1", ())],
    [("1", ("Dxi", "x")), ("-q", ("x", "Dxi"))],
    [("1", ("Dtheta", "x")), ("-q", ("x", "Dtheta"))],
    [("1", ("Dz", "x")), ("-1", ("x", "Dz"))],
    [("1", ("Dx", "xi")), ("-q^-1", ("xi", "Dx"))],
    [("1", ("Dxi", "xi")), ("1", ("xi", "Dxi")), ("-1", ())],
    [("1", ("Dtheta", "xi")), ("-1", ("xi", "Dtheta"))],
    [("1", ("Dz", "xi")), ("q^-1", ("xi", "Dz"))],
    [("1", ("Dx", "theta")), ("-q^-1", ("theta", "Dx"))],
    [("1", ("Dxi", "theta")), ("-1", ("theta", "Dxi"))],
    [("1", ("Dtheta", "theta")), ("1", ("theta", "Dtheta")), ("-1", ())],
    [("1", ("Dz", "theta")), ("q^-1", ("theta", "Dz"))],
    [("1", ("Dx", "z")), ("-1", ("z", "Dx"))],
    [("1", ("Dxi", "z")), ("q", ("z", "Dxi"))],
    [("1", ("Dtheta", "z")), ("q", ("z", "Dtheta"))],
    [("1", ("Dz", "z")), ("-1", ("z", "Dz")), ("-1", ())],
]

PARTIAL_PARTIAL_RELATIONS = [
    [("1", ("Dx", "Dxi")), ("-q", ("Dxi", "Dx"))],
    [("1", ("Dx", "Dtheta")), ("-q", ("Dtheta", "Dx"))],
    [("1", ("Dx", "Dz")), ("-1", ("Dz", "Dx"))],
    [("1", ("Dxi", "Dtheta")), ("-1", ("Dtheta", "Dxi"))],
    [("1", ("Dxi", "Dz")), ("q^-1", ("Dz", "Dxi"))],
    [("1", ("Dtheta", "Dz")), ("q^-1", ("Dz", "Dtheta"))],
    [("1", ("Dxi", "Dxi"))],
    [("1", ("Dtheta", "Dtheta"))],
]

PARTIAL_DIFF_RELATIONS = [
    [("1", ("Dx", "dx")), ("-1", ("dx", "Dx"))],
    [("1", ("Dx", "dxi")), ("-q^-1", ("dxi", "Dx"))],
    [("1", ("Dx", "dtheta")), ("-q^-1", ("dtheta", "Dx"))],
    [("1", ("Dx", "dz")), ("-1", ("dz", "Dx"))],
    [("1", ("Dxi", "dx")), ("-q", ("dx", "Dxi"))],
    [("1", ("Dxi", "dxi")), ("1", ("dxi", "Dxi"))],
    [("1", ("Dxi", "dtheta")), ("-1", ("dtheta", "Dxi"))],
    [("1", ("Dxi", "dz")), ("q", ("dz", "Dxi"))],
    [("1", ("Dtheta", "dx")), ("-q", ("dx", "Dtheta"))],
    [("1", ("Dtheta", "dxi")), ("-1", ("dxi", "Dtheta"))],
    [("1", ("Dtheta", "dtheta")), ("1", ("dtheta", "Dtheta"))],
    [("1", ("Dtheta", "dz")), ("q", ("dz", "Dtheta"))],
    [("1", ("Dz", "dx")), ("-1", ("dx", "Dz"))],
    [("1", ("Dz", "dxi")), ("q^-1", ("dxi", "Dz"))],
    [("1", ("Dz", "dtheta")), ("q^-1", ("dtheta", "Dz"))],
    [("1", ("Dz", "dz")), ("-1", ("dz", "Dz"))],
]

DEFINING_RELATIONS = {
    "dqsp": _DQSP_RELATIONS,
    "dqsp-ext": _DQSP_RELATIONS + _INVERSE_RELATIONS,
    "manin-sp": _MANIN_RELATIONS,
}
