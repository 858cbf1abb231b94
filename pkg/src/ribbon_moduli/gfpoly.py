"""Dense univariate polynomial arithmetic over a prime field F_p.

Coefficients are stored ascending by degree with no trailing zeros, so
the zero polynomial is the empty tuple and its ``degree`` is -1.  Inputs
in this package stay tiny (degree tens at most), so everything is the
schoolbook algorithm on purpose: obviously correct beats fast here.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


def is_prime(p: int) -> bool:
    """Trial division; adequate for the moduli accepted here (p <= 2^31)."""
    if p < 2:
        return False
    for q in (2, 3):
        if p % q == 0:
            return p == q
    f = 5
    while f * f <= p:
        if p % f == 0 or p % (f + 2) == 0:
            return False
        f += 6
    return True


@dataclass(frozen=True)
class Poly:
    """Immutable element of F_p[s]."""

    p: int
    coeffs: tuple[int, ...]

    @staticmethod
    def of(p: int, coeffs: Iterable[int]) -> Poly:
        """Build from coefficients (ascending degree), reducing mod p."""
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(p, tuple(cs))

    @staticmethod
    def zero(p: int) -> Poly:
        return Poly(p, ())

    @staticmethod
    def one(p: int) -> Poly:
        return Poly(p, (1,))

    @staticmethod
    def x(p: int) -> Poly:
        """The variable s itself."""
        return Poly(p, (0, 1))

    @staticmethod
    def const(p: int, a: int) -> Poly:
        return Poly.of(p, (a,))

    @staticmethod
    def from_roots(p: int, roots: Iterable[int]) -> Poly:
        """Monic product of (s - r) over the given root multiset."""
        out = Poly.one(p)
        for r in roots:
            out = out * Poly.of(p, (-r, 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def _same_field(self, other: Poly) -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: Poly) -> Poly:
        self._same_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return Poly.of(self.p, out)

    def __neg__(self) -> Poly:
        return Poly(self.p, tuple((-c) % self.p for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly.of(self.p, (c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented  # let richer rings try __rmul__
        self._same_field(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.p
        return Poly.of(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative exponent")
        out = Poly.one(self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> Poly:
        """Multiply by s^k."""
        if self.is_zero:
            return self
        return Poly(self.p, (0,) * k + self.coeffs)

    def monic(self) -> Poly:
        if self.is_zero:
            return self
        return self * pow(self.lc, self.p - 2, self.p)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv = pow(other.lc, p - 2, p)
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        for i in range(len(rem) - len(other.coeffs), -1, -1):
            c = (rem[i + other.degree] * inv) % p
            if c == 0:
                continue
            quo[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] = (rem[i + j] - c * b) % p
        return Poly.of(p, quo), Poly.of(p, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, c: int) -> int:
        """Evaluate at s = c by Horner."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * c + a) % self.p
        return acc

    def ord_at(self, c: int) -> int:
        """Multiplicity of the root s = c (0 when c is not a root)."""
        if self.is_zero:
            raise ZeroDivisionError("the zero polynomial vanishes to infinite order")
        k = 0
        q = self
        lin = Poly.of(self.p, (-c, 1))
        while q(c) == 0:
            q = q // lin
            k += 1
        return k

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("s" if c == 1 else f"{c}*s")
            else:
                terms.append(f"s^{i}" if c == 1 else f"{c}*s^{i}")
        return " + ".join(terms)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero when both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with g = u*a + v*b monic, by the extended Euclid loop."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = Poly.one(p), Poly.zero(p)
    t0, t1 = Poly.zero(p), Poly.one(p)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    c = pow(r0.lc, p - 2, p)
    return r0 * c, s0 * c, t0 * c
