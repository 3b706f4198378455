"""Exact sparse polynomials in q and Laurent polynomials in z over them.

Coefficients are Python integers but are held to the signed 128-bit range;
any result outside it raises :class:`ArithmeticOverflow` instead of being
stored.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Mapping

INT128_MIN = -(1 << 127)
INT128_MAX = (1 << 127) - 1


class ArithmeticOverflow(OverflowError):
    """A coefficient left the signed 128-bit range."""


def _check(c: int) -> int:
    if c < INT128_MIN or c > INT128_MAX:
        raise ArithmeticOverflow(f"coefficient {c} exceeds 128-bit signed range")
    return c


class QPoly:
    """Polynomial in q with integer coefficients, stored as {exponent: coeff}.

    Zero coefficients are never stored, so ``==`` is structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e} in QPoly")
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: _check(c) for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "QPoly":
        # terms must already be canonical (nonzero, in range); sorted here
        p = object.__new__(cls)
        p._terms = dict(sorted(terms.items()))
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "QPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "QPoly":
        """Build from a dense ascending coefficient list."""
        return cls(enumerate(coeffs))

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return next(reversed(self._terms)) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def to_dense(self) -> list[int]:
        d = self.degree()
        if d is None:
            return []
        return [self._terms.get(e, 0) for e in range(d + 1)]

    def truncate(self, n: int) -> "QPoly":
        return QPoly._raw({e: c for e, c in self._terms.items() if e <= n})

    def shift(self, k: int) -> "QPoly":
        """Multiply by q**k."""
        return QPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, s: int) -> "QPoly":
        if s == 0:
            return ZERO
        return QPoly._raw({e: _check(c * s) for e, c in self._terms.items()})

    def eval_at(self, q: int) -> int:
        return sum(c * q**e for e, c in self._terms.items())

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _check(s)
            else:
                out.pop(e, None)
        return QPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._raw({e: _check(-c) for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = defaultdict(int)
        bitems = list(b.items())
        for ea, ca in a.items():
            for eb, cb in bitems:
                out[ea + eb] += ca * cb
        return QPoly._raw({e: _check(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power of QPoly")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return f"QPoly({self._terms!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {"terms": [[e, str(c)] for e, c in self._terms.items()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "QPoly":
        return cls((int(e), int(c)) for e, c in obj["terms"])


ZERO = QPoly()
ONE = QPoly({0: 1})
Q = QPoly({1: 1})


def format_poly(p: QPoly, var: str = "q") -> str:
    """Ascending form such as ``1 - 2*q + 2*q^3 - q^4``; zero prints as ``0``."""
    if p.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def qp_add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def qp_mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def qp_truncate(a: QPoly, n: int) -> QPoly:
    return a.truncate(n)


class ZQLaurent:
    """Laurent polynomial in z with QPoly coefficients, {z-exponent: QPoly}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, QPoly] | Iterable[tuple[int, QPoly]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, QPoly] = {}
        for k, c in items:
            if isinstance(c, int):
                c = QPoly.constant(c)
            k = int(k)
            acc[k] = acc[k] + c if k in acc else c
        self._terms = {k: c for k, c in sorted(acc.items()) if not c.is_zero()}

    @classmethod
    def z_power(cls, k: int, coeff: QPoly | int = 1) -> "ZQLaurent":
        return cls({k: coeff})

    @property
    def terms(self) -> dict[int, QPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, k: int) -> QPoly:
        return self._terms.get(k, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if isinstance(other, (int, QPoly)):
            other = ZQLaurent({0: other})
        if not isinstance(other, ZQLaurent):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return ZQLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return ZQLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, QPoly)):
            other = ZQLaurent({0: other})
        if not isinstance(other, ZQLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)):
            other = ZQLaurent({0: other})
        if not isinstance(other, ZQLaurent):
            return NotImplemented
        out: dict[int, QPoly] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                prod = ca * cb
                k = ka + kb
                out[k] = out[k] + prod if k in out else prod
        return ZQLaurent(out)

    __rmul__ = __mul__

    def derivative(self) -> "ZQLaurent":
        """Formal d/dz."""
        return ZQLaurent({k - 1: c.scale(k) for k, c in self._terms.items() if k})

    def eval_z1(self) -> QPoly:
        total = ZERO
        for c in self._terms.values():
            total = total + c
        return total

    def __eq__(self, other):
        if isinstance(other, (int, QPoly)):
            other = ZQLaurent({0: other})
        if not isinstance(other, ZQLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"ZQLaurent({self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms.items():
            zs = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            cs = format_poly(c)
            if not zs:
                parts.append(f"({cs})")
            else:
                parts.append(f"({cs})*{zs}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [[k, c.to_json()] for k, c in self._terms.items()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "ZQLaurent":
        return cls((int(k), QPoly.from_json(c)) for k, c in obj["terms"])


Z = ZQLaurent({1: ONE})
ZINV = ZQLaurent({-1: ONE})


def zq_mul(a: ZQLaurent, b: ZQLaurent) -> ZQLaurent:
    return a * b


def zq_derivative(a: ZQLaurent) -> ZQLaurent:
    return a.derivative()


def zq_eval_z1(a: ZQLaurent) -> QPoly:
    return a.eval_z1()
