"""Graded tensor products of elements, with Koszul-signed multiplication.

Slots may live in different presentations (e.g. coordinates next to forms);
degrees are promoted to the longest grading group in play, so a Z2^2 slot
next to a Z2^3 slot picks up a leading form-parity bit of 0.
"""

from __future__ import annotations

from .engine import Element, reduce_word
from .grading import promote, scalar_product
from .scalars import ONE, QScalar, ZERO

__all__ = ["TensorElement", "tensor", "interchange"]


class TensorElement:
    """Linear combination of monomial tuples over fixed slot presentations."""

    __slots__ = ("presentations", "terms")

    def __init__(self, presentations, terms=None):
        self.presentations = tuple(presentations)
        data = {}
        if terms:
            for monos, coeff in terms.items():
                coeff = QScalar.promote(coeff)
                if not coeff.is_zero():
                    data[tuple(tuple(m) for m in monos)] = coeff
        self.terms = data

    @property
    def rank(self) -> int:
        return len(self.presentations)

    @classmethod
    def zero(cls, presentations):
        return cls(presentations)

    @classmethod
    def one(cls, presentations):
        key = tuple(p.one_mono for p in presentations)
        return cls(presentations, {key: ONE})

    def _require_compatible(self, other):
        if not isinstance(other, TensorElement):
            raise TypeError("expected a TensorElement")
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        for mine, theirs in zip(self.presentations, other.presentations):
            if mine is not theirs:
                raise ValueError(
                    f"slot presentation mismatch: {mine.name} vs {theirs.name}")

    def _degree_length(self) -> int:
        return max(p.degree_length for p in self.presentations)

    def slot_degree(self, monos, slot) -> tuple:
        deg = self.presentations[slot].monomial_degree(monos[slot])
        return promote(deg, self._degree_length())

    # linear structure

    def __add__(self, other):
        self._require_compatible(other)
        data = dict(self.terms)
        for monos, coeff in other.terms.items():
            data[monos] = data.get(monos, ZERO) + coeff
        return TensorElement(self.presentations, data)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.presentations,
                             {k: -c for k, c in self.terms.items()})

    def scale(self, value):
        value = QScalar.promote(value)
        return TensorElement(self.presentations,
                             {k: c * value for k, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        self._require_compatible(other)
        length = self._degree_length()
        out: dict = {}
        for monos1, c1 in self.terms.items():
            degs1 = [self.slot_degree(monos1, s) for s in range(self.rank)]
            for monos2, c2 in other.terms.items():
                # slot i of the right factor crosses slots > i of the left
                cross = 0
                for i in range(self.rank):
                    deg2 = promote(
                        self.presentations[i].monomial_degree(monos2[i]), length)
                    for j in range(i + 1, self.rank):
                        cross += scalar_product(deg2, degs1[j])
                coeff = c1 * c2 if not (cross & 1) else -(c1 * c2)
                # multiply slotwise; each slot product may itself branch
                partial = [((), coeff)]
                dead = False
                for slot, pres in enumerate(self.presentations):
                    word = (pres.monomial_letters(monos1[slot])
                            + pres.monomial_letters(monos2[slot]))
                    reduced = reduce_word(word, pres)
                    if not reduced:
                        dead = True
                        break
                    partial = [(prefix + (mono,), c * k)
                               for prefix, c in partial
                               for mono, k in reduced.items()]
                if dead:
                    continue
                for key, c in partial:
                    acc = out.get(key, ZERO) + c
                    if acc.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = acc
        return TensorElement(self.presentations, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (tuple(p.name for p in self.presentations)
                == tuple(p.name for p in other.presentations)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((tuple(p.name for p in self.presentations),
                     tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    # structural maps

    def map_slot(self, slot: int, fn, fn_degree=None) -> "TensorElement":
        """Apply an Element -> Element map to one slot, with the Koszul sign
        for carrying a map of degree ``fn_degree`` past the earlier slots."""
        length = self._degree_length()
        if fn_degree is not None:
            fn_degree = promote(fn_degree, length)
        out: dict = {}
        for monos, coeff in self.terms.items():
            sign = 0
            if fn_degree is not None:
                for j in range(slot):
                    sign += scalar_product(fn_degree, self.slot_degree(monos, j))
            image = fn(Element(self.presentations[slot], {monos[slot]: ONE}))
            base = coeff if not (sign & 1) else -coeff
            for mono, c in image.terms.items():
                key = monos[:slot] + (mono,) + monos[slot + 1:]
                acc = out.get(key, ZERO) + base * c
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        new_pres = list(self.presentations)
        # the map may move the slot to another presentation (e.g. d: A -> Omega)
        probe = fn(Element.one(self.presentations[slot]))
        new_pres[slot] = probe.pres
        return TensorElement(new_pres, out)

    def expand_slot(self, slot: int, fn_tensor,
                    slot_presentations=None) -> "TensorElement":
        """Replace one slot by the rank-2 image of a degree-0 map
        (Element -> TensorElement), raising the rank by one."""
        if slot_presentations is None:
            slot_presentations = fn_tensor(
                Element.one(self.presentations[slot])).presentations
        new_pres = (self.presentations[:slot] + tuple(slot_presentations)
                    + self.presentations[slot + 1:])
        out: dict = {}
        for monos, coeff in self.terms.items():
            image = fn_tensor(Element(self.presentations[slot],
                                      {monos[slot]: ONE}))
            for pair, c in image.terms.items():
                key = monos[:slot] + pair + monos[slot + 1:]
                acc = out.get(key, ZERO) + coeff * c
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return TensorElement(new_pres, out)

    def convert_slot(self, slot: int, target) -> "TensorElement":
        from .engine import convert
        out: dict = {}
        new_pres = list(self.presentations)
        new_pres[slot] = target
        for monos, coeff in self.terms.items():
            image = convert(Element(self.presentations[slot],
                                    {monos[slot]: ONE}), target)
            for mono, c in image.terms.items():
                key = monos[:slot] + (mono,) + monos[slot + 1:]
                acc = out.get(key, ZERO) + coeff * c
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return TensorElement(new_pres, out)

    def contract(self) -> Element:
        """Multiply the two slots of a rank-2 tensor inside one presentation."""
        if self.rank != 2:
            raise ValueError("contract is defined for rank-2 tensors")
        p0, p1 = self.presentations
        if p0 is not p1:
            raise ValueError(
                f"contract needs equal slot presentations, got {p0.name}, {p1.name}")
        out = Element.zero(p0)
        for (m0, m1), coeff in self.terms.items():
            word = p0.monomial_letters(m0) + p0.monomial_letters(m1)
            out = out + Element(p0, reduce_word(word, p0, coeff))
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda item: (sum(sum(abs(e) for e in m) for m in item[0]),
                                        item[0]))

    def __str__(self):
        from .engine import format_term
        if not self.terms:
            return "0"
        parts = []
        for monos, coeff in self.sorted_terms():
            slots = " (x) ".join(p.format_monomial(m)
                                 for p, m in zip(self.presentations, monos))
            body = format_term(coeff, slots if self.rank else "1")
            # the coefficient binds to the whole tensor term
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(" - " + body[1:])
            else:
                parts.append(" + " + body)
        return "".join(parts)

    def __repr__(self):
        names = ",".join(p.name for p in self.presentations)
        return f"<tensor[{names}]: {self}>"


def tensor(*elements) -> TensorElement:
    """Plain tensor product of elements (no signs: this is juxtaposition)."""
    presentations = tuple(e.pres for e in elements)
    out: dict = {}
    keys = [((), ONE)]
    for e in elements:
        keys = [(prefix + (mono,), c * coeff)
                for prefix, c in keys
                for mono, coeff in e.terms.items()]
    for key, c in keys:
        if not c.is_zero():
            out[key] = out.get(key, ZERO) + c
    return TensorElement(presentations, out)


def interchange(t: TensorElement) -> TensorElement:
    """The graded flip a (x) b -> (-1)^<deg a, deg b> b (x) a."""
    if t.rank != 2:
        raise ValueError("interchange is defined for rank-2 tensors")
    out: dict = {}
    for (m0, m1), coeff in t.terms.items():
        sign = scalar_product(t.slot_degree((m0, m1), 0),
                              t.slot_degree((m0, m1), 1))
        key = (m1, m0)
        c = coeff if not sign else -coeff
        acc = out.get(key, ZERO) + c
        if acc.is_zero():
            out.pop(key, None)
        else:
            out[key] = acc
    return TensorElement((t.presentations[1], t.presentations[0]), out)
