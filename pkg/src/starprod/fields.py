"""Arithmetic for GF(p**m), table driven and numpy friendly.

Elements are encoded as integers in [0, q): an element sum(a_i * x**i) in
the polynomial basis maps to sum(a_i * p**i).  For prime fields this is
plain residue arithmetic with a precomputed inverse table.  For extension
fields the shipped modulus (see _moduli.py) makes x a multiplicative
generator, so multiplication and inversion go through log/antilog tables
while addition works digit by digit in base p (XOR when p = 2).

All FieldSpec tables are immutable after construction; the vectorised
methods accept numpy integer arrays of any broadcastable shape and never
mutate their inputs.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from ._moduli import MODULI
from .errors import BadRange, DivisionByZero, NoModulusTableEntry, NotPrime, TooLarge

Q_LIMIT = 2**16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """A finite field GF(p**m) with its lookup tables.

    Do not call directly; use :func:`field_make` so instances are cached
    per (p, m).  Two specs with equal order are interchangeable.
    """

    __slots__ = ("p", "m", "q", "modulus", "_inv", "_exp", "_log")

    def __init__(self, p: int, m: int):
        if m < 1:
            raise BadRange(f"extension degree must be >= 1, got {m}")
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        q = p**m
        if q > Q_LIMIT:
            raise TooLarge(f"field order {q} exceeds limit {Q_LIMIT}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            self.modulus = None
            self._exp = None
            self._log = None
            # inv[a] for a >= 1 via the standard recurrence; inv[0] unused
            inv = np.zeros(q, dtype=np.int64)
            if q > 1:
                inv[1] = 1
            for a in range(2, q):
                inv[a] = (-(q // a) * inv[q % a]) % q
            self._inv = inv
            inv.flags.writeable = False
        else:
            key = (p, m)
            if key not in MODULI:
                raise NoModulusTableEntry(f"no shipped modulus for GF({p}^{m})")
            self.modulus = MODULI[key]
            self._inv = None
            self._build_log_tables()

    def _build_log_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        red = self.modulus[:m]  # x**m = -red in the quotient ring
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        coeffs = [1] + [0] * (m - 1)
        for i in range(q - 1):
            val = 0
            for j in range(m - 1, -1, -1):
                val = val * p + coeffs[j]
            if val == 1 and i > 0:
                raise NoModulusTableEntry(
                    f"modulus for GF({p}^{m}) is not primitive (x has order {i})"
                )
            exp[i] = val
            log[val] = i
            # multiply by x: shift digits, then reduce the overflow digit
            top = coeffs[m - 1]
            coeffs = [0] + coeffs[: m - 1]
            if top:
                for j in range(m):
                    coeffs[j] = (coeffs[j] - top * red[j]) % p
        self._exp = exp
        self._log = log
        exp.flags.writeable = False
        log.flags.writeable = False

    # -- vectorised arithmetic on integer-encoded elements ----------------

    def add(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        if self.m == 1:
            return (a + b) % self.q
        if self.p == 2:
            return np.bitwise_xor(a, b)
        out = 0
        pw = 1
        for _ in range(self.m):
            out = out + (((a // pw) % self.p + (b // pw) % self.p) % self.p) * pw
            pw *= self.p
        return out

    def neg(self, a):
        a = np.asarray(a)
        if self.m == 1:
            return (-a) % self.q
        if self.p == 2:
            return a.copy() if a.flags.writeable else a
        out = 0
        pw = 1
        for _ in range(self.m):
            out = out + ((-((a // pw) % self.p)) % self.p) * pw
            pw *= self.p
        return out

    def sub(self, a, b):
        if self.m == 1:
            return (np.asarray(a) - np.asarray(b)) % self.q
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        if self.m == 1:
            return (a * b) % self.q
        prod = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    def inv(self, a):
        a = np.asarray(a)
        if (a == 0).any():
            raise DivisionByZero("zero has no multiplicative inverse")
        if self.m == 1:
            return self._inv[a]
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- element helpers ---------------------------------------------------

    def elem(self, value: int) -> "FieldElem":
        return FieldElem(self, int(value))

    def coeffs(self, value: int) -> tuple:
        """Base-p digits of an encoded element, constant term first."""
        out = []
        for _ in range(self.m):
            out.append(value % self.p)
            value //= self.p
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.q == other.q

    def __hash__(self):
        return hash(("FieldSpec", self.q))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"


@functools.lru_cache(maxsize=None)
def field_make(p: int, m: int = 1) -> FieldSpec:
    """Construct (and cache) GF(p**m).  p must be prime and p**m <= 2**16."""
    return FieldSpec(p, m)


@functools.lru_cache(maxsize=None)
def field_from_order(q: int) -> FieldSpec:
    """Construct GF(q) from the order q = p**m."""
    if q < 2:
        raise BadRange(f"field order must be >= 2, got {q}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q  # q itself is prime
    m = 0
    v = q
    while v % p == 0:
        v //= p
        m += 1
    if v != 1:
        raise NotPrime(f"{q} is not a prime power")
    return field_make(p, m)


@dataclass(frozen=True)
class FieldElem:
    """A single field element; arithmetic delegates to its FieldSpec."""

    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise BadRange(f"element {self.value} outside [0, {self.field.q})")

    def _check(self, other: "FieldElem") -> None:
        if self.field != other.field:
            raise BadRange("elements from different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElem(self.field, int(self.field.add(self.value, other.value)))

    def __sub__(self, other):
        self._check(other)
        return FieldElem(self.field, int(self.field.sub(self.value, other.value)))

    def __mul__(self, other):
        self._check(other)
        return FieldElem(self.field, int(self.field.mul(self.value, other.value)))

    def __truediv__(self, other):
        self._check(other)
        return FieldElem(self.field, int(self.field.div(self.value, other.value)))

    def __neg__(self):
        return FieldElem(self.field, int(self.field.neg(self.value)))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, int(self.field.inv(self.value)))


def field_arith(a: FieldElem, b, op: str) -> FieldElem:
    """Dispatch one of {add, sub, mul, div, inv, neg} on field elements.

    Unary operations (inv, neg) ignore b.
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise BadRange(f"unknown field operation {op!r}")
