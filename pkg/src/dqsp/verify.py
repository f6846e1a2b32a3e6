"""Suite drivers: bundled verification runs behind the CLI `verify` command."""

from __future__ import annotations

from .calculus import CALCULUS_CHECKS, calculus_verify
from .engine import (Element, check_local_confluence, iter_monomials,
                     relation_element, relation_label)
from .hopf import HOPF_CHECKS, hopf_verify, primitive_bracket_check
from .operators import OPERATOR_CHECKS, operator_verify
from .presentations import BUILTIN_NAMES, DEFINING_RELATIONS, load_presentation
from .report import Report

__all__ = ["relation_suite", "confluence_suite", "degeneration_check",
           "run_suite", "SUITE_NAMES"]

SUITE_NAMES = ("engine", "hopf", "calculus", "operators", "all")


def relation_suite() -> Report:
    """Normalise every defining relation of the coordinate algebras to 0."""
    rep = Report(suite="relations")
    for name, relations in DEFINING_RELATIONS.items():
        pres = load_presentation(name)
        for parts in relations:
            total = relation_element(pres, parts)
            ok = total.is_zero()
            rep.add("relation", f"{name}: {relation_label(pres, parts)}", ok,
                    lhs=None if ok else str(total), rhs=None if ok else "0")
    return rep


def confluence_suite() -> Report:
    rep = Report(suite="confluence")
    for name in BUILTIN_NAMES:
        rep.extend(check_local_confluence(load_presentation(name)))
    return rep


def degeneration_check(bound: int = 4) -> Report:
    """At q = 1 every product coefficient collapses to the pure Koszul sign.

    For each pair of basis monomials, the product coefficient in the
    deformed algebra, evaluated at q = 1, must equal the coefficient the
    sign-only presentation produces, and the products must hit the same
    monomial (or vanish together).
    """
    deformed = load_presentation("dqsp")
    signs = load_presentation("z22-commutative")
    rep = Report(suite="degeneration", bound=bound)
    failures = 0
    count = 0
    basis = list(iter_monomials(deformed, bound))
    for m1 in basis:
        e1 = Element(deformed, {m1: 1})
        s1 = Element(signs, {m1: 1})
        for m2 in basis:
            count += 1
            product = e1 * Element(deformed, {m2: 1})
            expected = s1 * Element(signs, {m2: 1})
            got = {m: c.evaluate(1) for m, c in product.terms.items()}
            want = {m: c.evaluate(1) for m, c in expected.terms.items()}
            if got != want:
                failures += 1
                rep.add("q1-degeneration",
                        f"{deformed.format_monomial(m1)} * "
                        f"{deformed.format_monomial(m2)}", False,
                        lhs=str(product), rhs=str(expected))
    rep.add("q1-degeneration",
            f"{count} monomial pairs match the sign-only product at q = 1",
            failures == 0)
    return rep


def run_suite(name: str, bound: int | None = None) -> Report:
    """Assemble one named suite (or all of them) into a single report."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    rep = Report(suite=name, bound=bound)
    if name in ("engine", "all"):
        rep.extend(relation_suite())
        rep.extend(confluence_suite())
        rep.extend(degeneration_check(bound if bound is not None else 4))
    if name in ("hopf", "all"):
        for check in HOPF_CHECKS:
            rep.extend(hopf_verify(check, bound if bound is not None else 4))
        ok = True
        for a in range(4):
            for b in range(4):
                deg_a, deg_b = divmod(a, 2), divmod(b, 2)
                if not primitive_bracket_check(deg_a, deg_b):
                    ok = False
                    rep.add("primitive-bracket",
                            f"degrees {deg_a}, {deg_b}", False,
                            lhs="bracket not primitive", rhs="")
        rep.add("primitive-bracket",
                "graded commutator of primitives is primitive "
                "(all 16 degree pairs)", ok)
    if name in ("calculus", "all"):
        for check in CALCULUS_CHECKS:
            rep.extend(calculus_verify(check, bound))
    if name in ("operators", "all"):
        for check in OPERATOR_CHECKS:
            rep.extend(operator_verify(check, bound if bound is not None else 4))
    return rep
