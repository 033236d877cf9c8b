"""Integer Laurent polynomials in one variable v.

Stored as a sorted tuple of (exponent, coefficient) pairs with no zero
coefficients, so values are hashable and equality is exact.  The loop
scalar is delta = v + 1/v.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LaurentPoly:
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        exps = [e for e, _ in self.terms]
        if exps != sorted(exps) or len(set(exps)) != len(exps):
            raise ValueError("terms must be sorted by exponent without repeats")
        if any(c == 0 for _, c in self.terms):
            raise ValueError("zero coefficients must not be stored")

    @classmethod
    def from_dict(cls, coeffs: dict[int, int]) -> LaurentPoly:
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        acc = ONE
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "v" if e == 1 else f"v^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[dict]:
        return [{"exp": e, "c": c} for e, c in self.terms]

    @classmethod
    def from_json(cls, obj) -> LaurentPoly:
        out: dict[int, int] = {}
        for entry in obj:
            out[int(entry["exp"])] = out.get(int(entry["exp"]), 0) + int(entry["c"])
        return cls.from_dict(out)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(((0, x),)) if x else ZERO
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly(((0, 1),))
V = LaurentPoly(((1, 1),))
V_INV = LaurentPoly(((-1, 1),))
DELTA = LaurentPoly(((-1, 1), (1, 1)))


def delta_power(x: int) -> LaurentPoly:
    """(v + 1/v) ** x."""
    if x < 0:
        raise ValueError("negative loop exponent")
    return DELTA ** x
