"""Coproduct, counit and antipode on the extended plane, and their axioms.

The structure maps: x is group-like, its inverse too, and xi, theta, z are
x-conjugate-primitive (Delta(g) = x (x) g + g (x) x).  The antipode sends x
to its inverse and g to -x^-1*g*x^-1.  ``hopf_verify`` sweeps the PBW basis
and mechanically re-derives every Hopf axiom at small degree.
"""

from __future__ import annotations

from .engine import Element, iter_monomials, relation_element, relation_label
from .grading import degree_add, scalar_product
from .presentations import DEFINING_RELATIONS, load_presentation
from .report import Report
from .scalars import ONE, QScalar, ZERO
from .tensor import TensorElement, interchange, tensor

__all__ = ["HopfData", "bialgebra_data", "hopf_ext", "coproduct", "counit",
           "antipode", "hopf_verify", "primitive_bracket_check", "HOPF_CHECKS"]

HOPF_CHECKS = ("coassociativity", "counit-axiom", "algebra-morphism-compat",
               "cocommutativity", "antipode-axiom", "antipode-involutive",
               "counit-grading")


class HopfData:
    """Generator images of the structure maps over one presentation."""

    def __init__(self, pres, coproducts, counits, antipodes=None):
        self.pres = pres
        self.coproduct_on_generators = coproducts
        self.counit_on_generators = counits
        self.antipode_on_generators = antipodes

    # -- structure maps, extended to arbitrary elements -------------------

    def coproduct_word(self, letters) -> TensorElement:
        """Multiplicative image of a word under the coproduct."""
        out = TensorElement.one((self.pres, self.pres))
        for letter in letters:
            out = out * self.coproduct_on_generators[
                self.pres.generators[letter].symbol]
        return out

    def coproduct(self, element: Element) -> TensorElement:
        self._own(element)
        out = TensorElement.zero((self.pres, self.pres))
        for mono, coeff in element.terms.items():
            piece = self._coproduct_monomial(mono)
            out = out + piece.scale(coeff)
        return out

    def _coproduct_monomial(self, mono) -> TensorElement:
        # the Laurent slot is group-like, so a whole power goes in one step
        out = TensorElement.one((self.pres, self.pres))
        for slot, exp in enumerate(mono):
            if exp == 0:
                continue
            if slot in self.pres.laurent_slots:
                chunk = [0] * self.pres.nslots
                chunk[slot] = exp
                key = (tuple(chunk), tuple(chunk))
                out = out * TensorElement((self.pres, self.pres), {key: ONE})
            else:
                sym = self.pres.slot_symbol[slot]
                for _ in range(exp):
                    out = out * self.coproduct_on_generators[sym]
        return out

    def counit(self, element: Element) -> QScalar:
        self._own(element)
        total = ZERO
        for mono, coeff in element.terms.items():
            keep = True
            for slot, exp in enumerate(mono):
                if exp and self.counit_on_generators[
                        self.pres.slot_symbol[slot]].is_zero():
                    keep = False
                    break
            if keep:
                total = total + coeff
        return total

    def antipode(self, element: Element) -> Element:
        if self.antipode_on_generators is None:
            raise ValueError(f"{self.pres.name} carries no antipode")
        self._own(element)
        out = Element.zero(self.pres)
        for mono, coeff in element.terms.items():
            out = out + self._antipode_monomial(mono).scale(coeff)
        return out

    def _antipode_monomial(self, mono) -> Element:
        # S reverses the word, maps each letter, and pays the Koszul sign
        # of every pair: S(ab) = (-1)^<deg a, deg b> S(b) S(a), iterated.
        factors = []
        degrees = []
        for slot, exp in enumerate(mono):
            if exp == 0:
                continue
            if slot in self.pres.laurent_slots:
                inv = [0] * self.pres.nslots
                inv[slot] = -exp
                factors.append(Element(self.pres, {tuple(inv): ONE}))
                degrees.append((0,) * self.pres.degree_length)
            else:
                sym = self.pres.slot_symbol[slot]
                image = self.antipode_on_generators[sym]
                for _ in range(exp):
                    factors.append(image)
                    degrees.append(self.pres.slot_degree[slot])
        sign = 0
        for i in range(len(degrees)):
            for j in range(i + 1, len(degrees)):
                sign += scalar_product(degrees[i], degrees[j])
        out = Element.one(self.pres)
        for factor in reversed(factors):
            out = out * factor
        return -out if sign & 1 else out

    def _own(self, element: Element):
        if element.pres is not self.pres:
            raise ValueError(
                f"element lives in {element.pres.name}, not {self.pres.name}")


def bialgebra_data(pres) -> HopfData:
    """Coproduct and counit for any presentation containing x, xi, theta, z."""
    def pair(a, b):
        return tensor(Element.from_generator(pres, a),
                      Element.from_generator(pres, b))

    coproducts = {"x": pair("x", "x")}
    counits = {"x": ONE}
    if pres.has_generator("xinv"):
        coproducts["xinv"] = tensor(Element.from_generator(pres, "xinv"),
                                    Element.from_generator(pres, "xinv"))
        counits["xinv"] = ONE
    for sym in ("xi", "theta", "z"):
        coproducts[sym] = pair("x", sym) + pair(sym, "x")
        counits[sym] = ZERO
    return HopfData(pres, coproducts, counits)


def hopf_ext() -> HopfData:
    """The full Hopf structure on the extended plane."""
    pres = load_presentation("dqsp-ext")
    data = bialgebra_data(pres)
    x = Element.from_generator(pres, "x")
    xinv = Element.from_generator(pres, "xinv")
    antipodes = {"x": xinv, "xinv": x}
    for sym in ("xi", "theta", "z"):
        g = Element.from_generator(pres, sym)
        antipodes[sym] = -(xinv * g * xinv)
    data.antipode_on_generators = antipodes
    return data


_HOPF = None


def _hopf() -> HopfData:
    global _HOPF
    if _HOPF is None:
        _HOPF = hopf_ext()
    return _HOPF


def coproduct(element: Element) -> TensorElement:
    return _hopf().coproduct(element)


def counit(element: Element) -> QScalar:
    return _hopf().counit(element)


def antipode(element: Element) -> Element:
    return _hopf().antipode(element)


def counit_substitution_oracle(element: Element) -> QScalar:
    """Independent route to the counit: the coefficient extraction at
    xi = theta = z = 0, x = 1 (sum of coefficients of pure x-powers)."""
    pres = element.pres
    total = ZERO
    for mono, coeff in element.terms.items():
        if all(exp == 0 or slot in pres.laurent_slots
               or pres.slot_symbol[slot] == "x"
               for slot, exp in enumerate(mono)):
            total = total + coeff
    return total


# -- axiom sweeps ------------------------------------------------------------

def _sweep(pres, bound):
    # total absolute degree <= bound, x-exponent within [-(bound-1), bound-1]
    # so the antipode keeps the sweep inside its own window
    return iter_monomials(pres, bound, laurent_window=max(bound - 1, 0))


def _slot_element(pres, mono):
    return Element(pres, {mono: ONE})


def _apply_counit_slot(hopf, t: TensorElement, slot: int) -> Element:
    other = 1 - slot
    out = Element.zero(t.presentations[other])
    for monos, coeff in t.terms.items():
        eps = hopf.counit(_slot_element(t.presentations[slot], monos[slot]))
        if not eps.is_zero():
            out = out + Element(t.presentations[other],
                                {monos[other]: coeff * eps})
    return out


def hopf_verify(check: str, max_degree: int = 4) -> Report:
    """Run one named Hopf axiom over the PBW basis at small degree."""
    if check not in HOPF_CHECKS:
        raise ValueError(f"unknown check {check!r}; expected one of {HOPF_CHECKS}")
    hopf = _hopf()
    pres = hopf.pres
    rep = Report(suite="hopf", bound=max_degree)
    failures = 0
    count = 0

    if check == "coassociativity":
        for mono in _sweep(pres, max_degree):
            count += 1
            t = hopf._coproduct_monomial(mono)
            left = t.expand_slot(0, hopf.coproduct)
            right = t.expand_slot(1, hopf.coproduct)
            if left != right:
                failures += 1
                rep.add(check, f"monomial {pres.format_monomial(mono)}",
                        False, lhs=str(left), rhs=str(right))
        rep.add(check, f"(Delta(x)Id)Delta = (Id(x)Delta)Delta on {count} monomials",
                failures == 0)

    elif check == "counit-axiom":
        for mono in _sweep(pres, max_degree):
            count += 1
            t = hopf._coproduct_monomial(mono)
            expected = _slot_element(pres, mono)
            left = _apply_counit_slot(hopf, t, 0)
            right = _apply_counit_slot(hopf, t, 1)
            if left != expected or right != expected:
                failures += 1
                rep.add(check, f"monomial {pres.format_monomial(mono)}",
                        False, lhs=str(left), rhs=str(expected))
        rep.add(check, f"(eps(x)Id)Delta = Id = (Id(x)eps)Delta on {count} monomials",
                failures == 0)

    elif check == "algebra-morphism-compat":
        for parts in DEFINING_RELATIONS["dqsp-ext"]:
            count += 1
            label = relation_label(pres, parts)
            total = TensorElement.zero((pres, pres))
            eps_total = ZERO
            for coeff, word in parts:
                coeff = QScalar.parse(coeff)
                letters = pres.letters(word)
                total = total + hopf.coproduct_word(letters).scale(coeff)
                eps_word = ONE
                for letter in letters:
                    eps_word = eps_word * hopf.counit_on_generators[
                        pres.generators[letter].symbol]
                eps_total = eps_total + coeff * eps_word
            ok = total.is_zero() and eps_total.is_zero()
            if not ok:
                failures += 1
            rep.add(check, f"Delta and eps annihilate {label}", ok,
                    lhs=None if ok else str(total),
                    rhs=None if ok else str(eps_total))
        rep.add(check, f"{count} defining relations checked", failures == 0)

    elif check == "cocommutativity":
        for mono in _sweep(pres, max_degree):
            count += 1
            t = hopf._coproduct_monomial(mono)
            flipped = interchange(t)
            if flipped != t:
                failures += 1
                rep.add(check, f"monomial {pres.format_monomial(mono)}",
                        False, lhs=str(flipped), rhs=str(t))
        rep.add(check, f"sigma o Delta = Delta on {count} monomials",
                failures == 0)

    elif check == "antipode-axiom":
        for mono in _sweep(pres, max_degree):
            count += 1
            t = hopf._coproduct_monomial(mono)
            expected = Element.scalar(
                pres, hopf.counit(_slot_element(pres, mono)))
            left = t.map_slot(0, hopf.antipode).contract()
            right = t.map_slot(1, hopf.antipode).contract()
            if left != expected or right != expected:
                failures += 1
                rep.add(check, f"monomial {pres.format_monomial(mono)}",
                        False, lhs=str(left), rhs=str(expected))
        rep.add(check, f"mu(S(x)Id)Delta = eta eps = mu(Id(x)S)Delta "
                f"on {count} monomials", failures == 0)

    elif check == "antipode-involutive":
        for mono in _sweep(pres, max_degree):
            count += 1
            e = _slot_element(pres, mono)
            twice = hopf.antipode(hopf.antipode(e))
            if twice != e:
                failures += 1
                rep.add(check, f"monomial {pres.format_monomial(mono)}",
                        False, lhs=str(twice), rhs=str(e))
        rep.add(check, f"S^2 = Id on {count} monomials", failures == 0)

    elif check == "counit-grading":
        zero_deg = (0,) * pres.degree_length
        for mono in _sweep(pres, max_degree):
            if pres.monomial_degree(mono) == zero_deg:
                continue
            count += 1
            eps = hopf.counit(_slot_element(pres, mono))
            if not eps.is_zero():
                failures += 1
                rep.add(check, f"monomial {pres.format_monomial(mono)}",
                        False, lhs=str(eps), rhs="0")
        ok = failures == 0 and hopf.counit(Element.one(pres)) == ONE
        rep.add(check, f"eps vanishes on {count} nonzero-degree monomials "
                f"and eps(1) = 1", ok)

    return rep


# -- primitive elements in a free graded algebra ------------------------------

def primitive_bracket_check(deg_a, deg_b) -> bool:
    """In a free graded algebra on two primitive generators, the graded
    commutator of the generators is again primitive.

    Words are tuples over {'a', 'b'}; there are no relations, so products
    just concatenate.  The coproduct extends Delta(g) = g(x)1 + 1(x)g
    multiplicatively through the graded tensor product.
    """
    deg_a, deg_b = tuple(deg_a), tuple(deg_b)
    degs = {"a": deg_a, "b": deg_b}

    def word_degree(word):
        deg = (0,) * len(deg_a)
        for letter in word:
            deg = degree_add(deg, degs[letter])
        return deg

    def tmul(t1, t2):
        out = {}
        for (a1, b1), c1 in t1.items():
            for (a2, b2), c2 in t2.items():
                sign = scalar_product(word_degree(b1), word_degree(a2))
                coeff = c1 * c2 if not sign else -(c1 * c2)
                key = (a1 + a2, b1 + b2)
                acc = out.get(key, ZERO) + coeff
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return out

    def delta(word):
        out = {((), ()): ONE}
        for letter in word:
            out = tmul(out, {((letter,), ()): ONE, ((), (letter,)): ONE})
        return out

    def add(t1, t2, scale=ONE):
        out = dict(t1)
        for key, coeff in t2.items():
            acc = out.get(key, ZERO) + coeff * scale
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc
        return out

    sign = -ONE if scalar_product(deg_a, deg_b) else ONE
    # Delta([a, b]) with [a, b] = ab - (-1)^<deg a, deg b> ba
    lhs = add(delta(("a", "b")), delta(("b", "a")), scale=-sign)
    bracket = {(("a", "b"),): ONE, (("b", "a"),): -sign}
    rhs = {}
    for (word,), coeff in bracket.items():
        rhs = add(rhs, {(word, ()): coeff})
        rhs = add(rhs, {((), word): coeff})
    return lhs == rhs
