"""Homology of the periodic self-map attached to the degenerate local models.

Over O = k[s, eps]/(eps^2) localized at the origin, the rank-1 module
with local index n is presented by the 2x2 matrix [[eps, s^n], [0, -eps]],
and the same matrix repeats in every homological degree.  This module
computes with a truncated polynomial model M of O/(s^n, eps)-free data:
k-basis {s^i, w*s^i : 0 <= i < T} where w marks the nilpotent line and
eps acts as w*s^n (w*w = 0).  Giving s weight 1 and w weight 0 makes the
self-map

    d(u, v) = (eps*u, s^n*u - eps*v)

graded of degree n on M^2, so kernels and images split into constant
4x4 blocks per s-degree and truncation noise stays confined to degrees
>= T - n.  Dimensions are certified by recomputing at T + 2: any
disagreement raises instead of returning a number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfpoly import is_prime

_PRIME_CAP = 2**31


class NotStabilized(ArithmeticError):
    """Two consecutive truncations disagreed; raise T."""


def _rank(p: int, rows: list[list[int]]) -> int:
    """Rank over F_p by Gaussian elimination on a copy."""
    m = [row[:] for row in rows]
    if not m:
        return 0
    rank = 0
    for col in range(len(m[0])):
        piv = next((i for i in range(rank, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] % p:
                c = m[i][col]
                m[i] = [(x - c * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class TruncatedComplex:
    """Graded blocks of d(u, v) = (eps*u, s^n*u - eps*v) on M^2.

    Basis of the degree-j slice, in order:
      0: s^j   in the first summand     1: w*s^j in the first summand
      2: s^j   in the second summand    3: w*s^j in the second summand
    """

    n: int
    p: int
    T: int

    def block(self, j: int) -> list[list[int]]:
        """Matrix of d from degree j to degree j + n (rows = targets)."""
        out = [[0] * 4 for _ in range(4)]
        if j < 0 or j + self.n >= self.T:
            # target degree falls off the truncation: the map is zero here
            return out
        # eps sends s^j to w*s^(j+n) and kills w*s^j; s^n shifts both kinds.
        out[1][0] = 1
        out[2][0] = 1
        out[3][1] = 1
        out[3][2] = self.p - 1
        return out

    def composes_to_zero(self, j: int) -> bool:
        """d at degree j+n after d at degree j must vanish."""
        a, b = self.block(j + self.n), self.block(j)
        for r in range(4):
            for c in range(4):
                if sum(a[r][k] * b[k][c] for k in range(4)) % self.p:
                    return False
        return True


def _validate(n: int, p: int) -> None:
    if n < 0:
        raise ValueError(f"local index must be >= 0, got {n}")
    if not is_prime(p) or p > _PRIME_CAP:
        raise ValueError(f"p must be a prime <= 2^31, got {p}")


def _graded_homology(n: int, p: int, T: int, bound: int) -> int:
    """Sum over s-degrees j < bound of dim ker(block j) - rank(block j-n)."""
    cx = TruncatedComplex(n, p, T)
    total = 0
    for j in range(bound):
        out_rank = _rank(p, cx.block(j))
        in_rank = _rank(p, cx.block(j - n)) if j >= n else 0
        total += (4 - out_rank) - in_rank
    return total


def ext1_dim(n: int, p: int, T: int) -> int:
    """k-dimension of the middle homology of the periodic self-map.

    Representatives are summed per s-degree below T - 2n, where the
    truncated model is faithful; the count is re-derived at T + 2 and a
    mismatch raises NotStabilized rather than guessing.
    """
    _validate(n, p)
    if T < 4 * n + 4:
        raise ValueError(f"truncation {T} too small, need T >= {4 * n + 4}")
    first = _graded_homology(n, p, T, T - 2 * n)
    second = _graded_homology(n, p, T + 2, T + 2 - 2 * n)
    if first != second:
        raise NotStabilized(f"homology moved between T={T} and T={T + 2}")
    return first


def _endo_value(n: int, p: int, T: int) -> int:
    cx = TruncatedComplex(n, p, T)
    total = 0
    for j in range(T - n):
        ker = 4 - _rank(p, cx.block(j))
        # Scalar multiplications evaluated on the generator pair (w, 1):
        # s^j gives (w*s^j, s^j); s^(j-n)*eps gives (0, w*s^j) once j >= n.
        scalars = [[0, 1, 1, 0]]
        if j >= n:
            scalars.append([0, 0, 0, 1])
        blk = cx.block(j)
        for vec in scalars:
            assert all(
                sum(blk[r][k] * vec[k] for k in range(4)) % p == 0 for r in range(4)
            )
        total += ker - _rank(p, scalars)
    return total


def endo_quotient_dim(n: int, p: int, T: int) -> int:
    """k-dimension of the endomorphisms of the index-n local model modulo
    the scalar action of the ambient ring; equals the local index."""
    _validate(n, p)
    if T < 2 * n + 2:
        raise ValueError(f"truncation {T} too small, need T >= {2 * n + 2}")
    first = _endo_value(n, p, T)
    second = _endo_value(n, p, T + 2)
    if first != second:
        raise NotStabilized(f"endomorphism count moved between T={T} and T={T + 2}")
    return first
