"""The differential calculus: de Rham operator, coactions, bicovariance.

The calculus presentation adjoins the differentials dx, dxi, dtheta, dz to
the coordinates.  The de Rham operator acts on words by the form-degree
signed Leibniz rule; the left/right coactions are built from the coproduct
by differentiating one tensor slot, and extend over products of coordinates
and one-forms slotwise.  ``calculus_verify`` re-derives the consistency
lemmas, the bicovariance of all exchange rules, the differential-exchange
table and the absence of top forms.
"""

from __future__ import annotations

import random

from .engine import (Element, convert, iter_monomials, normal_form,
                     relation_label)
from .presentations import (COORD_DIFF_RELATIONS, DIFF_DIFF_RELATIONS,
                            load_presentation)
from .hopf import bialgebra_data
from .report import Report
from .scalars import ONE, QScalar, ZERO
from .tensor import TensorElement

__all__ = ["de_rham", "coaction", "calculus_verify", "CALCULUS_CHECKS",
           "basis_one_forms", "coaction_one_form"]

CALCULUS_CHECKS = ("d-squared", "leibniz", "lemma-condiff",
                   "valcom-bicovariance", "diff-diff-consistency",
                   "no-top-forms", "woronowicz-compatibility")

D_DEGREE = (1, 0, 0)

_STATE: dict = {}


def _ctx():
    if not _STATE:
        omega = load_presentation("dqsp-omega")
        coords = load_presentation("dqsp")
        _STATE["omega"] = omega
        _STATE["coords"] = coords
        _STATE["bialg"] = bialgebra_data(coords)
        _STATE["diff_of"] = {
            "x": "dx", "xi": "dxi", "theta": "dtheta", "z": "dz"}
    return _STATE


def basis_one_forms():
    omega = _ctx()["omega"]
    return [Element.from_generator(omega, sym)
            for sym in ("dx", "dxi", "dtheta", "dz")]


# -- the de Rham operator -----------------------------------------------------

def de_rham_word(word, pres, coeff=ONE) -> Element:
    """d of a raw word: Leibniz across positions, with the form-parity sign
    of the prefix; d(coordinate) is its differential, d(differential) = 0."""
    ctx = _ctx()
    letters = pres.letters(word)
    out = Element.zero(pres)
    prefix_form = 0
    for i, letter in enumerate(letters):
        gen = pres.generators[letter]
        image = ctx["diff_of"].get(gen.symbol)
        if image is not None:
            replaced = letters[:i] + [pres.generator(image).index] + letters[i + 1:]
            sign = ONE if prefix_form % 2 == 0 else -ONE
            out = out + normal_form(replaced, pres, coeff * sign)
        elif gen.kind not in ("differential",):
            raise ValueError(f"cannot differentiate through {gen.symbol}")
        prefix_form += gen.form_degree
    return out


def de_rham_word_formal(word, pres) -> dict:
    """Like de_rham_word but without normalising: {word-tuple: coefficient}.

    Used to compare the image of an exchange relation under d against the
    differential-exchange table literally, before any rewriting.
    """
    ctx = _ctx()
    letters = pres.letters(word)
    out: dict = {}
    prefix_form = 0
    for i, letter in enumerate(letters):
        gen = pres.generators[letter]
        image = ctx["diff_of"].get(gen.symbol)
        if image is not None:
            replaced = tuple(letters[:i] + [pres.generator(image).index]
                             + letters[i + 1:])
            coeff = ONE if prefix_form % 2 == 0 else -ONE
            acc = out.get(replaced, ZERO) + coeff
            if acc.is_zero():
                out.pop(replaced, None)
            else:
                out[replaced] = acc
        prefix_form += gen.form_degree
    return out


def de_rham(element: Element) -> Element:
    """The de Rham differential of a calculus element."""
    omega = _ctx()["omega"]
    if element.pres is not omega:
        element = convert(element, omega)
    out = Element.zero(omega)
    for mono, coeff in element.terms.items():
        out = out + de_rham_word(omega.monomial_letters(mono), omega, coeff)
    return out


# -- coactions ----------------------------------------------------------------

def _embedded_coproduct(symbol, side) -> TensorElement:
    """Coproduct of a coordinate generator with one slot pushed into the
    calculus presentation: (A, Omega) for the left coaction, (Omega, A)
    for the right one."""
    ctx = _ctx()
    t = ctx["bialg"].coproduct_on_generators[symbol]
    return t.convert_slot(1 if side == "left" else 0, ctx["omega"])


def coaction_one_form(symbol, side) -> TensorElement:
    """Coaction of a basis one-form, derived from the definition by
    differentiating one slot of the coproduct of its coordinate."""
    ctx = _ctx()
    base = {"dx": "x", "dxi": "xi", "dtheta": "theta", "dz": "z"}[symbol]
    t = _embedded_coproduct(base, side)
    slot = 1 if side == "left" else 0
    return t.map_slot(slot, de_rham, fn_degree=D_DEGREE)


def coaction_word(word, side, coeff=ONE) -> TensorElement:
    """Coaction of a word of coordinates containing exactly one differential,
    extended slotwise: coordinates contribute their coproduct, the
    differential letter contributes its one-form coaction."""
    ctx = _ctx()
    omega, coords = ctx["omega"], ctx["coords"]
    pres_pair = (coords, omega) if side == "left" else (omega, coords)
    out = TensorElement.one(pres_pair)
    for item in word:
        symbol = item if isinstance(item, str) else omega.generators[item].symbol
        if symbol in ctx["diff_of"]:
            out = out * _embedded_coproduct(symbol, side)
        else:
            out = out * coaction_one_form(symbol, side)
    return out.scale(coeff)


def coaction(side: str, element: Element) -> TensorElement:
    """Left or right coaction of a one-form element (shape sum of a*db)."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    ctx = _ctx()
    omega = ctx["omega"]
    if element.pres is not omega:
        element = convert(element, omega)
    pres_pair = ((ctx["coords"], omega) if side == "left"
                 else (omega, ctx["coords"]))
    out = TensorElement.zero(pres_pair)
    for mono, coeff in element.terms.items():
        if omega.monomial_form_degree(mono) != 1:
            raise ValueError(
                f"{omega.format_monomial(mono)} is not of the shape a*db")
        word = [omega.generators[i].symbol
                for i in omega.monomial_letters(mono)]
        out = out + coaction_word(word, side, coeff)
    return out


def _coaction_slot(t: TensorElement, slot: int, side: str) -> TensorElement:
    """Expand one (one-form) slot of a tensor by a coaction."""
    ctx = _ctx()
    pres_pair = ((ctx["coords"], ctx["omega"]) if side == "left"
                 else (ctx["omega"], ctx["coords"]))
    return t.expand_slot(slot, lambda e: coaction(side, e), pres_pair)


# -- the verification suite ---------------------------------------------------

# consistency identities that any exchange rule between coordinates and
# their differentials must satisfy (the image of the coordinate relations
# under d); each is a list of (coeff, word) summing to zero
_CONSISTENCY_IDENTITIES = [
    [("1", ("x", "dxi")), ("-q", ("dxi", "x")),
     ("-q", ("xi", "dx")), ("1", ("dx", "xi"))],
    [("1", ("x", "dtheta")), ("-q", ("dtheta", "x")),
     ("-q", ("theta", "dx")), ("1", ("dx", "theta"))],
    [("1", ("x", "dz")), ("-1", ("dz", "x")),
     ("-1", ("z", "dx")), ("1", ("dx", "z"))],
    [("1", ("xi", "dtheta")), ("-1", ("dtheta", "xi")),
     ("-1", ("theta", "dxi")), ("1", ("dxi", "theta"))],
    [("1", ("xi", "dz")), ("q^-1", ("dz", "xi")),
     ("q^-1", ("z", "dxi")), ("1", ("dxi", "z"))],
    [("1", ("theta", "dz")), ("q^-1", ("dz", "theta")),
     ("q^-1", ("z", "dtheta")), ("1", ("dtheta", "z"))],
]


def _formal_multiple_of(formal: dict, pres) -> str | None:
    """If a formal word sum is a scalar multiple of a differential-exchange
    table row, return that row's label; empty sums match trivially."""
    if not formal:
        return "0"
    for parts in DIFF_DIFF_RELATIONS:
        row = {}
        for coeff, word in parts:
            row[tuple(pres.letters(word))] = QScalar.parse(coeff)
        if set(row) != set(formal):
            continue
        ratio = None
        good = True
        for key, coeff in row.items():
            this = formal[key] * coeff.inverse()
            if ratio is None:
                ratio = this
            elif ratio != this:
                good = False
                break
        if good:
            return relation_label(pres, parts)
    return None


def calculus_verify(check: str, bound: int | None = None) -> Report:
    """Run one named calculus check; ``bound`` where a sweep needs one."""
    if check not in CALCULUS_CHECKS:
        raise ValueError(f"unknown check {check!r}; expected one of {CALCULUS_CHECKS}")
    ctx = _ctx()
    omega = ctx["omega"]
    rep = Report(suite="calculus", bound=bound)
    failures = 0
    count = 0

    if check == "d-squared":
        bound = 5 if bound is None else bound
        rep.bound = bound
        for mono in iter_monomials(omega, bound):
            count += 1
            e = Element(omega, {mono: ONE})
            dd = de_rham(de_rham(e))
            if not dd.is_zero():
                failures += 1
                rep.add(check, f"monomial {omega.format_monomial(mono)}",
                        False, lhs=str(dd), rhs="0")
        rep.add(check, f"d(d(m)) = 0 on {count} monomials with <= {bound} factors",
                failures == 0)

    elif check == "leibniz":
        bound = 4 if bound is None else bound
        rep.bound = bound
        rng = random.Random(1729)
        pool = [m for m in iter_monomials(omega, max(bound - 1, 1))]
        for _ in range(50 * max(bound, 1)):
            count += 1
            m1, m2 = rng.choice(pool), rng.choice(pool)
            a = Element(omega, {m1: ONE})
            b = Element(omega, {m2: ONE})
            p = omega.monomial_form_degree(m1)
            sign = ONE if p % 2 == 0 else -ONE
            lhs = de_rham(a * b)
            rhs = de_rham(a) * b + (a * de_rham(b)).scale(sign)
            if lhs != rhs:
                failures += 1
                rep.add(check,
                        f"{omega.format_monomial(m1)} * {omega.format_monomial(m2)}",
                        False, lhs=str(lhs), rhs=str(rhs))
        rep.add(check, f"d(ab) = (da)b + (-1)^p a(db) on {count} sampled pairs",
                failures == 0)

    elif check == "lemma-condiff":
        for parts in _CONSISTENCY_IDENTITIES:
            count += 1
            total = Element.zero(omega)
            for coeff, word in parts:
                total = total + normal_form(word, omega, QScalar.parse(coeff))
            ok = total.is_zero()
            if not ok:
                failures += 1
            rep.add(check, f"consistency identity {relation_label(omega, parts)}",
                    ok, lhs=None if ok else str(total), rhs=None if ok else "0")
        rep.add(check, f"{count} consistency identities reduce to 0",
                failures == 0)

    elif check == "valcom-bicovariance":
        for parts in COORD_DIFF_RELATIONS:
            label = relation_label(omega, parts)
            for side in ("left", "right"):
                count += 1
                pres_pair = ((ctx["coords"], omega) if side == "left"
                             else (omega, ctx["coords"]))
                total = TensorElement.zero(pres_pair)
                for coeff, word in parts:
                    total = total + coaction_word(word, side,
                                                  QScalar.parse(coeff))
                ok = total.is_zero()
                if not ok:
                    failures += 1
                rep.add(check, f"{side} coaction annihilates {label}", ok,
                        lhs=None if ok else str(total), rhs=None if ok else "0")
        rep.add(check, f"{count} coaction checks", failures == 0)

    elif check == "diff-diff-consistency":
        for parts in COORD_DIFF_RELATIONS:
            count += 1
            label = relation_label(omega, parts)
            formal: dict = {}
            normalized = Element.zero(omega)
            for coeff, word in parts:
                coeff = QScalar.parse(coeff)
                for w, c in de_rham_word_formal(word, omega).items():
                    acc = formal.get(w, ZERO) + c * coeff
                    if acc.is_zero():
                        formal.pop(w, None)
                    else:
                        formal[w] = acc
                normalized = normalized + de_rham_word(word, omega, coeff)
            row = _formal_multiple_of(formal, omega)
            ok = row is not None and normalized.is_zero()
            if not ok:
                failures += 1
            rep.add(check,
                    f"d({label}) matches the differential table"
                    + (f" via {row}" if row not in (None, "0") else ""),
                    ok, lhs=None if ok else str(normalized),
                    rhs=None if ok else "0")
        for parts in DIFF_DIFF_RELATIONS:
            count += 1
            total = Element.zero(omega)
            for coeff, word in parts:
                total = total + normal_form(word, omega, QScalar.parse(coeff))
            ok = total.is_zero()
            if not ok:
                failures += 1
            rep.add(check, f"table row {relation_label(omega, parts)} "
                    f"normalises to 0", ok,
                    lhs=None if ok else str(total), rhs=None if ok else "0")
        rep.add(check, f"{count} derivative-consistency checks", failures == 0)

    elif check == "no-top-forms":
        bound = 8 if bound is None else bound
        rep.bound = bound
        for sym in ("dxi", "dtheta"):
            for k in range(1, bound + 1):
                count += 1
                power = normal_form([sym] * k, omega)
                gen = omega.generator(sym)
                expected = [0] * omega.nslots
                expected[gen.slot] = k
                ok = power == Element(omega, {tuple(expected): ONE})
                if not ok:
                    failures += 1
                    rep.add(check, f"{sym}^{k}", False,
                            lhs=str(power), rhs=omega.format_monomial(tuple(expected)))
        rep.add(check, f"dxi^k and dtheta^k nonzero for k <= {bound}",
                failures == 0)

    elif check == "woronowicz-compatibility":
        for sym in ("dx", "dxi", "dtheta", "dz"):
            count += 1
            left_first = _coaction_slot(coaction_one_form(sym, "right"),
                                        0, "left")
            right_first = _coaction_slot(coaction_one_form(sym, "left"),
                                         1, "right")
            ok = left_first == right_first
            if not ok:
                failures += 1
            rep.add(check, f"(DL(x)Id)DR = (Id(x)DR)DL on {sym}", ok,
                    lhs=None if ok else str(left_first),
                    rhs=None if ok else str(right_first))
        rep.add(check, f"{count} basis one-forms", failures == 0)

    return rep
