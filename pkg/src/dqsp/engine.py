"""PBW normal forms for algebras presented by pairwise exchange rules.

A presentation fixes a total order on generators and, for every out-of-order
pair, a single rewrite rule

    hi * lo  ->  coeff * lo * hi  +  delta * 1 .

Sorted exponent vectors (nilpotent exponents capped at 1, Laurent slots
allowed negative exponents) are the monomial basis.  Rewriting terminates:
an exchange step keeps the word length and removes one inversion, while
nilpotent squares, inverse-pair cancellations and delta terms all shorten
the word.  Well-definedness of the normal form is not assumed --
``check_local_confluence`` reduces every three-letter word under two
opposite strategies and compares the outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import degree_add
from .report import Report
from .scalars import ONE, QScalar, ZERO

__all__ = [
    "GeneratorInfo", "ExchangeRule", "AlgebraPresentation", "PresentationError",
    "Element", "normal_form", "reduce_word", "relation_element", "check_relation",
    "check_local_confluence", "iter_monomials", "iter_monomials_box",
    "convert", "homogeneous_degree",
]

Monomial = tuple

COORDINATE = "coordinate"
INVERSE = "inverse-coordinate"
DIFFERENTIAL = "differential"
PARTIAL = "partial"


class PresentationError(ValueError):
    """Raised for malformed or inconsistent algebra presentations."""


@dataclass(frozen=True)
class GeneratorInfo:
    symbol: str
    index: int          # position in the fixed total order
    slot: int           # exponent slot; an inverse letter shares its base slot
    step: int           # +1, or -1 for the inverse letter of a Laurent slot
    z2_degree: tuple
    form_degree: int    # 0 for coordinates/partials, 1 for differentials
    nilpotent: bool
    kind: str


@dataclass(frozen=True)
class ExchangeRule:
    hi: int             # slot of the left (larger) generator
    lo: int             # slot of the right (smaller) generator
    coeff: QScalar
    delta: QScalar      # nonzero only for (partial, its own coordinate)


class AlgebraPresentation:
    """Generator table plus a total exchange-rule table over slot pairs."""

    def __init__(self, name: str, generators, rules, degree_length: int):
        self.name = name
        self.generators = list(generators)
        self.degree_length = degree_length
        self._by_symbol = {}
        for pos, gen in enumerate(self.generators):
            if gen.index != pos:
                raise PresentationError(f"{name}: generator indices must be contiguous")
            if gen.symbol in self._by_symbol:
                raise PresentationError(f"{name}: duplicate symbol {gen.symbol}")
            if len(gen.z2_degree) != degree_length:
                raise PresentationError(f"{name}: degree length mismatch on {gen.symbol}")
            self._by_symbol[gen.symbol] = gen

        primaries = [g for g in self.generators if g.step == 1]
        inverses = [g for g in self.generators if g.step == -1]
        self.nslots = len(primaries)
        for want, gen in enumerate(primaries):
            if gen.slot != want:
                raise PresentationError(f"{name}: primary slots must be contiguous")
        self._primary = {g.slot: g for g in primaries}
        self._inverse = {}
        for gen in inverses:
            base = self._primary.get(gen.slot)
            if base is None or gen.kind != INVERSE:
                raise PresentationError(f"{name}: stray inverse letter {gen.symbol}")
            if base.nilpotent or gen.nilpotent:
                raise PresentationError(f"{name}: Laurent slot cannot be nilpotent")
            self._inverse[gen.slot] = gen
        self.laurent_slots = frozenset(self._inverse)
        self.nilpotent_slots = frozenset(g.slot for g in primaries if g.nilpotent)
        self.slot_degree = tuple(self._primary[s].z2_degree for s in range(self.nslots))
        self.slot_form_degree = tuple(self._primary[s].form_degree for s in range(self.nslots))
        self.slot_symbol = tuple(self._primary[s].symbol for s in range(self.nslots))
        self._letter_slot = tuple(g.slot for g in self.generators)
        self._letter_step = tuple(g.step for g in self.generators)

        self.rules = {}
        for rule in rules:
            key = (rule.hi, rule.lo)
            if rule.hi <= rule.lo or rule.hi >= self.nslots or rule.lo < 0:
                raise PresentationError(f"{name}: bad rule pair {key}")
            if key in self.rules:
                raise PresentationError(f"{name}: duplicate rule for {key}")
            if rule.coeff.is_zero():
                raise PresentationError(f"{name}: zero exchange coefficient for {key}")
            if not rule.delta.is_zero():
                hi_gen, lo_gen = self._primary[rule.hi], self._primary[rule.lo]
                if hi_gen.kind != PARTIAL or lo_gen.kind != COORDINATE:
                    raise PresentationError(
                        f"{name}: delta term allowed only on (partial, coordinate), "
                        f"got ({hi_gen.symbol}, {lo_gen.symbol})")
                if rule.hi in self.laurent_slots or rule.lo in self.laurent_slots:
                    raise PresentationError(f"{name}: delta rule on a Laurent slot")
            self.rules[key] = rule
        want = self.nslots * (self.nslots - 1) // 2
        if len(self.rules) != want:
            raise PresentationError(
                f"{name}: rule table must cover every pair ({len(self.rules)} of {want})")

    # -- lookups ---------------------------------------------------------

    def generator(self, symbol: str) -> GeneratorInfo:
        gen = self._by_symbol.get(symbol)
        if gen is None:
            raise KeyError(f"unknown generator {symbol!r} in {self.name}")
        return gen

    def has_generator(self, symbol: str) -> bool:
        return symbol in self._by_symbol

    def letters(self, word) -> list:
        """Translate a word of symbols (or letter indices) to letter indices."""
        out = []
        for item in word:
            if isinstance(item, str):
                out.append(self.generator(item).index)
            else:
                out.append(int(item))
        return out

    def exchange(self, a: int, b: int):
        """Coefficient and delta for moving letter a left past letter b."""
        sa, sb = self._letter_slot[a], self._letter_slot[b]
        rule = self.rules[(sa, sb)]
        if self._letter_step[a] * self._letter_step[b] == 1:
            return rule.coeff, rule.delta
        return rule.coeff.inverse(), ZERO

    # -- monomials -------------------------------------------------------

    @property
    def one_mono(self) -> Monomial:
        return (0,) * self.nslots

    def monomial_letters(self, mono: Monomial) -> list:
        out = []
        for slot, exp in enumerate(mono):
            if exp >= 0:
                out.extend([self._primary[slot].index] * exp)
            else:
                out.extend([self._inverse[slot].index] * (-exp))
        return out

    def monomial_degree(self, mono: Monomial) -> tuple:
        deg = (0,) * self.degree_length
        for slot, exp in enumerate(mono):
            if exp & 1:
                deg = degree_add(deg, self.slot_degree[slot])
        return deg

    def monomial_form_degree(self, mono: Monomial) -> int:
        return sum(self.slot_form_degree[slot] * exp for slot, exp in enumerate(mono))

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for slot, exp in enumerate(mono):
            if exp == 0:
                continue
            sym = self.slot_symbol[slot]
            parts.append(sym if exp == 1 else f"{sym}^{exp}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, {len(self.generators)} generators)"


# -- the rewrite kernel ----------------------------------------------------

def reduce_word(word, pres: AlgebraPresentation, coeff: QScalar = ONE,
                rightmost: bool = False) -> dict:
    """Fully reduce a word of letters; returns {monomial: coefficient}.

    ``rightmost`` selects the opposite reduction strategy; a confluent rule
    table makes the result independent of the choice.
    """
    slots = pres._letter_slot
    steps = pres._letter_step
    nil = pres.nilpotent_slots
    out: dict = {}
    stack = [(list(word), coeff)]
    while stack:
        w, c = stack.pop()
        n = len(w)
        pos = -1
        scan = range(n - 2, -1, -1) if rightmost else range(n - 1)
        for i in scan:
            sa, sb = slots[w[i]], slots[w[i + 1]]
            if sa > sb or (sa == sb and (steps[w[i]] != steps[w[i + 1]] or sa in nil)):
                pos = i
                break
        if pos < 0:
            mono = _word_monomial(w, pres)
            acc = out.get(mono)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = acc
            continue
        a, b = w[pos], w[pos + 1]
        if slots[a] == slots[b]:
            if steps[a] != steps[b]:
                stack.append((w[:pos] + w[pos + 2:], c))
            # nilpotent square: the term vanishes
            continue
        cf, dl = pres.exchange(a, b)
        stack.append((w[:pos] + [b, a] + w[pos + 2:], c * cf))
        if not dl.is_zero():
            stack.append((w[:pos] + w[pos + 2:], c * dl))
    return out


def _word_monomial(word, pres: AlgebraPresentation) -> Monomial:
    exps = [0] * pres.nslots
    for letter in word:
        exps[pres._letter_slot[letter]] += pres._letter_step[letter]
    return tuple(exps)


# -- elements ----------------------------------------------------------------

class Element:
    """Finite linear combination of PBW monomials with QScalar coefficients."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: AlgebraPresentation, terms=None):
        self.pres = pres
        data = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = QScalar.promote(coeff)
                if not coeff.is_zero():
                    data[tuple(mono)] = coeff
        self.terms = data

    # constructors

    @classmethod
    def zero(cls, pres):
        return cls(pres)

    @classmethod
    def one(cls, pres):
        return cls(pres, {pres.one_mono: ONE})

    @classmethod
    def scalar(cls, pres, value):
        return cls(pres, {pres.one_mono: QScalar.promote(value)})

    @classmethod
    def from_generator(cls, pres, symbol: str):
        gen = pres.generator(symbol)
        mono = [0] * pres.nslots
        mono[gen.slot] = gen.step
        return cls(pres, {tuple(mono): ONE})

    # ring structure

    def _require_same(self, other):
        if self.pres is not other.pres:
            raise ValueError(
                f"presentation mismatch: {self.pres.name} vs {other.pres.name}")

    def __add__(self, other):
        if isinstance(other, (int, QScalar)):
            other = Element.scalar(self.pres, other)
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        data = dict(self.terms)
        for mono, coeff in other.terms.items():
            data[mono] = data.get(mono, ZERO) + coeff
        return Element(self.pres, data)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, QScalar)):
            other = Element.scalar(self.pres, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Element(self.pres, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            w1 = self.pres.monomial_letters(m1)
            for m2, c2 in other.terms.items():
                word = w1 + self.pres.monomial_letters(m2)
                for mono, coeff in reduce_word(word, self.pres, c1 * c2).items():
                    acc = out.get(mono, ZERO) + coeff
                    if acc.is_zero():
                        out.pop(mono, None)
                    else:
                        out[mono] = acc
        return Element(self.pres, out)

    def __rmul__(self, other):
        if isinstance(other, (int, QScalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value):
        value = QScalar.promote(value)
        return Element(self.pres, {m: c * value for m, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers only via invert() on monomial elements")
        result = Element.one(self.pres)
        for _ in range(n):
            result = result * self
        return result

    def invert(self):
        """Inverse of a single-term monomial supported on Laurent slots."""
        if len(self.terms) != 1:
            raise ValueError("only single-term elements can be inverted")
        (mono, coeff), = self.terms.items()
        for slot, exp in enumerate(mono):
            if exp and slot not in self.pres.laurent_slots:
                raise ValueError(f"{self} is not invertible in {self.pres.name}")
        return Element(self.pres, {tuple(-e for e in mono): coeff.inverse()})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.pres is other.pres and self.terms == other.terms

    def __hash__(self):
        return hash((self.pres.name, tuple(sorted(self.terms.items(), key=_term_key))))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Common Z2^n degree of all monomials, or None if inhomogeneous."""
        deg = None
        for mono in self.terms:
            d = self.pres.monomial_degree(mono)
            if deg is None:
                deg = d
            elif deg != d:
                return None
        return deg if deg is not None else (0,) * self.pres.degree_length

    def sorted_terms(self):
        return sorted(self.terms.items(), key=_term_key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            body = format_term(coeff, self.pres.format_monomial(mono))
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(" - " + body[1:])
            else:
                parts.append(" + " + body)
        return "".join(parts)

    def __repr__(self):
        return f"<{self.pres.name}: {self}>"


def _term_key(item):
    mono = item[0]
    return (sum(abs(e) for e in mono), mono)


def format_term(coeff: QScalar, body: str) -> str:
    """Attach a coefficient to a rendered monomial."""
    if not coeff.is_single_term():
        text = f"({coeff})"
        return text if body == "1" else f"{text}*{body}"
    if body == "1":
        return str(coeff)
    if coeff.is_one():
        return body
    if (-coeff).is_one():
        return "-" + body
    return f"{coeff}*{body}"


def normal_form(word, pres: AlgebraPresentation, coeff=ONE) -> Element:
    """Normal form of a single word (symbols or letter indices)."""
    letters = pres.letters(word)
    return Element(pres, reduce_word(letters, pres, QScalar.promote(coeff)))


def relation_element(pres: AlgebraPresentation, parts) -> Element:
    """Sum of coeff * word over (coeff, word) pairs; coeffs may be strings."""
    total = Element.zero(pres)
    for coeff, word in parts:
        if isinstance(coeff, str):
            coeff = QScalar.parse(coeff)
        total = total + normal_form(word, pres, coeff)
    return total


def check_relation(pres: AlgebraPresentation, lhs, rhs) -> bool:
    """True iff lhs and rhs have equal normal forms.

    Each side is an Element or a list of (coeff, word) pairs.
    """
    if not isinstance(lhs, Element):
        lhs = relation_element(pres, lhs)
    if not isinstance(rhs, Element):
        rhs = relation_element(pres, rhs)
    return lhs == rhs


def relation_label(pres: AlgebraPresentation, parts) -> str:
    """Render a sum-to-zero relation as '<first word> = <minus the rest>'."""
    def word_str(word):
        return "*".join(word) if word else "1"

    head_coeff, head_word = parts[0]
    head = format_term(QScalar.parse(head_coeff) if isinstance(head_coeff, str)
                       else head_coeff, word_str(head_word))
    rest = []
    for coeff, word in parts[1:]:
        coeff = QScalar.parse(coeff) if isinstance(coeff, str) else coeff
        body = format_term(-coeff, word_str(word))
        if not rest:
            rest.append(body)
        elif body.startswith("-"):
            rest.append(" - " + body[1:])
        else:
            rest.append(" + " + body)
    return f"{head} = {''.join(rest) if rest else '0'}"


# -- confluence --------------------------------------------------------------

def check_local_confluence(pres: AlgebraPresentation) -> Report:
    """Reduce every three-letter word two ways and compare.

    Quadratic rules only overlap on three-letter words, so this exhausts the
    critical pairs of the system (the diamond property at the base gives
    global confluence).
    """
    rep = Report(suite="confluence")
    alphabet = range(len(pres.generators))
    slots = pres._letter_slot
    total = 0
    descending = 0
    for a in alphabet:
        for b in alphabet:
            for c in alphabet:
                total += 1
                if slots[a] > slots[b] > slots[c]:
                    descending += 1
                word = [a, b, c]
                left = reduce_word(word, pres)
                right = reduce_word(word, pres, rightmost=True)
                if left != right:
                    syms = "*".join(pres.generators[i].symbol for i in word)
                    rep.add("confluence",
                            f"{pres.name}: overlap {syms} is not confluent",
                            False,
                            lhs=str(Element(pres, left)),
                            rhs=str(Element(pres, right)))
    if rep.failed == 0:
        rep.add("confluence",
                f"{pres.name}: {total} three-letter words confluent "
                f"({descending} strictly descending triples)", True)
    return rep


# -- monomial sweeps ---------------------------------------------------------

def iter_monomials(pres: AlgebraPresentation, bound: int, laurent_window=None):
    """All monomials with total absolute exponent sum <= bound.

    Laurent slots range over [-w, w] with w = min(bound, laurent_window);
    nilpotent slots over {0, 1}.  Deterministic ascent in every slot.
    """
    nslots = pres.nslots

    def rec(slot, budget, acc):
        if slot == nslots:
            yield tuple(acc)
            return
        if slot in pres.laurent_slots:
            w = budget if laurent_window is None else min(budget, laurent_window)
            exps = range(-w, w + 1)
        elif slot in pres.nilpotent_slots:
            exps = range(0, min(1, budget) + 1)
        else:
            exps = range(0, budget + 1)
        for e in exps:
            acc.append(e)
            yield from rec(slot + 1, budget - abs(e), acc)
            acc.pop()

    yield from rec(0, bound, [])


def iter_monomials_box(pres: AlgebraPresentation, bound: int, slots=None):
    """Monomials with every exponent in [0, bound], restricted to ``slots``."""
    chosen = range(pres.nslots) if slots is None else sorted(slots)

    def rec(i, acc):
        if i == len(chosen):
            mono = [0] * pres.nslots
            for slot, e in zip(chosen, acc):
                mono[slot] = e
            yield tuple(mono)
            return
        top = 1 if chosen[i] in pres.nilpotent_slots else bound
        for e in range(0, top + 1):
            acc.append(e)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def convert(element: Element, target: AlgebraPresentation) -> Element:
    """Re-express an element in another presentation, matching by symbol."""
    out = Element.zero(target)
    for mono, coeff in element.terms.items():
        word = []
        for slot, exp in enumerate(mono):
            if exp == 0:
                continue
            sym = element.pres.slot_symbol[slot]
            if not target.has_generator(sym):
                raise ValueError(f"{sym} does not exist in {target.name}")
            if exp > 0:
                word.extend([sym] * exp)
            else:
                inv = element.pres._inverse[slot].symbol
                word.extend([inv] * (-exp))
        out = out + normal_form(word, target, coeff)
    return out


def homogeneous_degree(element: Element):
    """Common degree of all monomials or None (inhomogeneous)."""
    return element.degree()
