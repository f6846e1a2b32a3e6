"""Z2^n degrees, their canonical scalar product and the Koszul sign rule.

Degrees are tuples of bits: length 2 for the coordinate algebras, length 3
for form/operator algebras (bit 0 carrying the form-degree parity).  Two
homogeneous factors exchange at the cost of (-1) to the scalar product of
their degrees; every sign in the package routes through here.
"""

from __future__ import annotations

Degree = tuple

__all__ = ["Degree", "degree_add", "scalar_product", "koszul_sign", "promote"]


def _check(a, b):
    if len(a) != len(b):
        raise ValueError(f"degree length mismatch: {a} vs {b}")


def degree_add(a: Degree, b: Degree) -> Degree:
    """Componentwise sum mod 2."""
    _check(a, b)
    return tuple((x + y) & 1 for x, y in zip(a, b))


def scalar_product(a: Degree, b: Degree) -> int:
    """Canonical pairing: sum of products of components, mod 2."""
    _check(a, b)
    return sum(x * y for x, y in zip(a, b)) & 1


def koszul_sign(a: Degree, b: Degree) -> int:
    """+1 or -1: the sign picked up when factors of these degrees cross."""
    return -1 if scalar_product(a, b) else 1


def promote(deg: Degree, length: int) -> Degree:
    """Embed a degree into a longer grading group by prepending zero bits."""
    if len(deg) > length:
        raise ValueError(f"cannot shorten degree {deg} to length {length}")
    return (0,) * (length - len(deg)) + tuple(deg)
