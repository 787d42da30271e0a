"""
Univariate polynomials in q with arbitrary-precision integer coefficients.

A polynomial is stored as a tuple of coefficients in ascending degree, so
1 + 2q + q^3 is ``Polynomial((1, 2, 0, 1))``.  Trailing zeros are always
trimmed, which makes equality structural.
"""
from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable


class Polynomial:
    """
    An immutable polynomial in q.

    >>> Polynomial((21, 28, 15, 5, 1))
    Polynomial('q^4 + 5*q^3 + 15*q^2 + 28*q + 21')
    >>> Polynomial((1, 1)) * Polynomial((1, 1, 1))
    Polynomial('q^3 + 2*q^2 + 2*q + 1')
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        """c * q^k."""
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"Polynomial('{self}')"

    def __str__(self):
        return to_text(self)

    def __getitem__(self, i: int) -> int:
        """Coefficient of q^i (zero beyond the degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        return eval_at(self, x)

    def shift(self, k: int) -> Polynomial:
        """Multiply by q^k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs or k == 0:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


ZERO = Polynomial()
ONE = Polynomial((1,))
Q = Polynomial((0, 1))
Q_MINUS_ONE = Polynomial((-1, 1))
ONE_MINUS_Q = Polynomial((1, -1))


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    c = list(a.coeffs)
    for i, x in enumerate(b.coeffs):
        c[i] += x
    return Polynomial(c)


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a.coeffs or not b.coeffs:
        return ZERO
    c = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            c[i + j] += x * y
    return Polynomial(c)


def eval_at(p: Polynomial, x: int) -> int:
    """Horner evaluation at an integer."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    acc: list[int] = []
    for p in polys:
        if len(p.coeffs) > len(acc):
            acc.extend([0] * (len(p.coeffs) - len(acc)))
        for i, c in enumerate(p.coeffs):
            acc[i] += c
    return Polynomial(acc)


@lru_cache(maxsize=None)
def q_int(n: int) -> Polynomial:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q is zero."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return Polynomial((1,) * n)


@lru_cache(maxsize=None)
def q_binomial(n: int, m: int) -> Polynomial:
    """Gaussian binomial coefficient via [n,m] = [n-1,m-1] + q^m [n-1,m]."""
    if m < 0 or n < 0 or m > n:
        return ZERO
    if m == 0 or m == n:
        return ONE
    return q_binomial(n - 1, m - 1) + q_binomial(n - 1, m).shift(m)


def to_text(p: Polynomial, var: str = "q") -> str:
    """Descending-degree human form, e.g. ``q^4 + 5*q^3 + 28*q + 21``."""
    if not p.coeffs:
        return "0"
    out = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            term = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            term = mono if a == 1 else f"{a}*{mono}"
        if not out:
            out.append(term if sign == "+" else "-" + term)
        else:
            out.append(f"{sign} {term}")
    return " ".join(out)


def to_json_obj(p: Polynomial) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs]}


def from_json_obj(obj) -> Polynomial:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Polynomial(int(c) for c in obj["coeffs"])
