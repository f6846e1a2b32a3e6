"""Partial derivatives as first-order operators: action and verification.

A partial acts on a partial-free element by normal ordering: push the
operator letter to the right through the word and keep the terms in which
it has been consumed by a delta rule (the operator kills the constant 1).
``pbw_action_oracle`` recomputes the same action from independent closed
formulas on the coordinate basis, so the two routes cross-check each other.
"""

from __future__ import annotations

from fractions import Fraction

from .calculus import de_rham
from .engine import (Element, convert, iter_monomials_box, normal_form,
                     relation_element, relation_label)
from .presentations import (PARTIAL_COORD_RELATIONS, PARTIAL_DIFF_RELATIONS,
                            PARTIAL_PARTIAL_RELATIONS, load_presentation)
from .report import Report
from .scalars import ONE, QScalar, qpow

__all__ = ["apply_partial", "pbw_action_oracle", "operator_verify",
           "OPERATOR_CHECKS", "PARTIAL_SYMBOLS"]

OPERATOR_CHECKS = ("derham-decomposition", "partial-coordinate-relations",
                   "partial-partial-relations", "partial-differential-relations",
                   "oracle-equivalence")

PARTIAL_SYMBOLS = ("Dx", "Dxi", "Dtheta", "Dz")

_COORD_OF = {"Dx": "x", "Dxi": "xi", "Dtheta": "theta", "Dz": "z"}


def _ops():
    return load_presentation("dqsp-ops")


def _partial_slots(ops):
    return [ops.generator(sym).slot for sym in PARTIAL_SYMBOLS]


def apply_partial(symbol: str, element: Element) -> Element:
    """Action of one partial derivative on a partial-free element."""
    if symbol not in PARTIAL_SYMBOLS:
        raise ValueError(f"unknown partial {symbol!r}; expected one of "
                         f"{PARTIAL_SYMBOLS}")
    ops = _ops()
    source = element.pres
    if source is not ops:
        element = convert(element, ops)
    partials = _partial_slots(ops)
    for mono in element.terms:
        if any(mono[slot] for slot in partials):
            raise ValueError("apply_partial expects an element without partials")
    letter = ops.generator(symbol).index
    acted = Element.zero(ops)
    for mono, coeff in element.terms.items():
        word = [letter] + ops.monomial_letters(mono)
        acted = acted + normal_form(word, ops, coeff)
    kept = {mono: coeff for mono, coeff in acted.terms.items()
            if not any(mono[slot] for slot in partials)}
    result = Element(ops, kept)
    return result if source is ops else convert(result, source)


def pbw_action_oracle(symbol: str, mono) -> Element:
    """Closed-form action on a coordinate basis monomial x^m xi^a th^b z^n.

    Independent of the rewrite engine: coefficients come straight from the
    exponent bookkeeping of the exchange rules.
    """
    coords = load_presentation("dqsp")
    m, alpha, beta, n = mono
    if alpha not in (0, 1) or beta not in (0, 1) or m < 0 or n < 0:
        raise ValueError(f"not a coordinate basis monomial: {mono}")
    if symbol == "Dx":
        if m == 0:
            return Element.zero(coords)
        return Element(coords, {(m - 1, alpha, beta, n): QScalar.promote(m)})
    if symbol == "Dxi":
        if alpha == 0:
            return Element.zero(coords)
        return Element(coords, {(m, 0, beta, n): qpow(m)})
    if symbol == "Dtheta":
        if beta == 0:
            return Element.zero(coords)
        return Element(coords, {(m, alpha, 0, n): qpow(m)})
    if symbol == "Dz":
        if n == 0:
            return Element.zero(coords)
        coeff = qpow(-(alpha + beta), Fraction(n))
        if (alpha + beta) % 2:
            coeff = -coeff
        return Element(coords, {(m, alpha, beta, n - 1): coeff})
    raise ValueError(f"unknown partial {symbol!r}")


def _act_word(word, element: Element) -> Element:
    """Apply a mixed word (partials, coordinates, differentials) to an
    element, rightmost letter first; partials act, others multiply."""
    out = element
    for sym in reversed(list(word)):
        if sym in PARTIAL_SYMBOLS:
            out = apply_partial(sym, out)
        else:
            out = Element.from_generator(out.pres, sym) * out
    return out


def _coordinate_monomials(bound):
    coords = load_presentation("dqsp")
    return coords, list(iter_monomials_box(coords, bound))


def _relation_checks(rep, check, relations, bound, pointwise_pres):
    """Verify relations both as normal-form identities and pointwise."""
    ops = _ops()
    coords, basis = _coordinate_monomials(bound)
    failures = 0
    for parts in relations:
        label = relation_label(ops, parts)
        nf = relation_element(ops, parts)
        nf_ok = nf.is_zero()
        point_ok = True
        witness = None
        for mono in basis:
            f = Element(pointwise_pres, {_pad(mono, pointwise_pres, coords): ONE}) \
                if pointwise_pres is not coords else Element(coords, {mono: ONE})
            total = None
            for coeff, word in parts:
                piece = _act_word(word, f).scale(QScalar.parse(coeff))
                total = piece if total is None else total + piece
            if not total.is_zero():
                point_ok = False
                witness = (coords.format_monomial(mono), str(total))
                break
        ok = nf_ok and point_ok
        if not ok:
            failures += 1
        rep.add(check, f"{label} (normal form and pointwise)", ok,
                lhs=None if ok else (str(nf) if not nf_ok else witness[1]),
                rhs=None if ok else "0")
    return failures


def _pad(mono, target, source):
    out = [0] * target.nslots
    for slot, exp in enumerate(mono):
        out[target.generator(source.slot_symbol[slot]).slot] = exp
    return tuple(out)


def operator_verify(check: str, bound: int = 4) -> Report:
    """Run one named operator-algebra check at the given exponent bound."""
    if check not in OPERATOR_CHECKS:
        raise ValueError(f"unknown check {check!r}; expected one of "
                         f"{OPERATOR_CHECKS}")
    ops = _ops()
    omega = load_presentation("dqsp-omega")
    rep = Report(suite="operators", bound=bound)
    failures = 0
    count = 0

    if check == "derham-decomposition":
        coords, basis = _coordinate_monomials(bound)
        diff_of = {"Dx": "dx", "Dxi": "dxi", "Dtheta": "dtheta", "Dz": "dz"}
        for mono in basis:
            count += 1
            e = Element(coords, {mono: ONE})
            total = Element.zero(omega)
            for sym in PARTIAL_SYMBOLS:
                piece = convert(apply_partial(sym, e), omega)
                total = total + Element.from_generator(omega, diff_of[sym]) * piece
            expected = de_rham(convert(e, omega))
            if total != expected:
                failures += 1
                rep.add(check, f"monomial {coords.format_monomial(mono)}",
                        False, lhs=str(total), rhs=str(expected))
        rep.add(check, f"d = dx*Dx + dxi*Dxi + dtheta*Dtheta + dz*Dz "
                f"on {count} coordinate monomials", failures == 0)

    elif check == "partial-coordinate-relations":
        coords, _ = _coordinate_monomials(bound)
        failures = _relation_checks(rep, check, PARTIAL_COORD_RELATIONS,
                                    bound, coords)
        rep.add(check, f"{len(PARTIAL_COORD_RELATIONS)} partial-coordinate "
                f"relations at bound {bound}", failures == 0)

    elif check == "partial-partial-relations":
        coords, _ = _coordinate_monomials(bound)
        failures = _relation_checks(rep, check, PARTIAL_PARTIAL_RELATIONS,
                                    bound, coords)
        rep.add(check, f"{len(PARTIAL_PARTIAL_RELATIONS)} partial-partial "
                f"relations at bound {bound}", failures == 0)

    elif check == "partial-differential-relations":
        failures = _relation_checks(rep, check, PARTIAL_DIFF_RELATIONS,
                                    bound, omega)
        rep.add(check, f"{len(PARTIAL_DIFF_RELATIONS)} partial-differential "
                f"relations at bound {bound}", failures == 0)

    elif check == "oracle-equivalence":
        coords, basis = _coordinate_monomials(bound)
        for mono in basis:
            for sym in PARTIAL_SYMBOLS:
                count += 1
                rewritten = apply_partial(sym, Element(coords, {mono: ONE}))
                oracle = pbw_action_oracle(sym, mono)
                if rewritten != oracle:
                    failures += 1
                    rep.add(check,
                            f"{sym} on {coords.format_monomial(mono)}",
                            False, lhs=str(rewritten), rhs=str(oracle))
        rep.add(check, f"rewriting action matches the closed form on "
                f"{count} (partial, monomial) pairs", failures == 0)

    return rep
