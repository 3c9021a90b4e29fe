"""Exact integer linear algebra: determinants, principal minors and
characteristic polynomials, all over Python ints."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .chords import chord_diagram_from_bouquet, intersection_matrix
from .ribbon import RibbonGraph

__all__ = [
    "IntPolynomial",
    "IneligibleBouquetError",
    "det_exact",
    "principal_minor",
    "sum_principal_minors",
    "char_poly",
    "char_poly_by_minors",
    "identity_plus",
    "kappa_by_determinant",
    "determinant_eligible",
]


class IneligibleBouquetError(ValueError):
    """The determinant formula is only valid for orientable bouquets and
    bouquets with exactly one non-orientable loop."""


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in ``t``; ``coeffs[k]`` multiplies ``t**k``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def t(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _lift(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __floordiv__(self, other):
        """Exact division; raises ``ArithmeticError`` if it does not divide."""
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            if rem:
                raise ArithmeticError("inexact polynomial division")
            return IntPolynomial()
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1]
            if c % lead:
                raise ArithmeticError("inexact polynomial division")
            q = c // lead
            quot[k] = q
            if q:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= q * y
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial(tuple(quot))

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"


def _check_square(M: Sequence[Sequence]) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    return n


def _bareiss(M, one, zero):
    """Fraction-free elimination; every division is exact over the ring."""
    a = [list(row) for row in M]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = zero
        prev = pivot
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


def det_exact(M: Sequence[Sequence[int]]) -> int:
    _check_square(M)
    return _bareiss(M, 1, 0)


def principal_minor(M: Sequence[Sequence[int]], X: Iterable[int]) -> int:
    """``det(M[X])`` for 0-based row/column indices ``X`` (order irrelevant)."""
    n = _check_square(M)
    X = sorted(set(X))
    if any(not 0 <= i < n for i in X):
        raise IndexError(f"index set {X} outside 0..{n - 1}")
    return det_exact([[M[i][j] for j in X] for i in X])


def sum_principal_minors(M: Sequence[Sequence[int]], k: int) -> int:
    n = _check_square(M)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    return sum(principal_minor(M, X) for X in combinations(range(n), k))


def char_poly(M: Sequence[Sequence[int]]) -> IntPolynomial:
    """``det(t*I - M)`` by fraction-free elimination over Z[t]."""
    n = _check_square(M)
    t = IntPolynomial.t()
    tm = [[(t if i == j else IntPolynomial()) - M[i][j] for j in range(n)] for i in range(n)]
    return _bareiss(tm, IntPolynomial.const(1), IntPolynomial())


def char_poly_by_minors(M: Sequence[Sequence[int]]) -> IntPolynomial:
    """``sum_k (-1)^k E_k(M) t^(n-k)`` with ``E_k`` the principal-minor sums."""
    n = _check_square(M)
    coeffs = [0] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = (-1) ** k * sum_principal_minors(M, k)
    return IntPolynomial(tuple(coeffs))


def identity_plus(A: Sequence[Sequence[int]]) -> list[list[int]]:
    return [[x + (i == j) for j, x in enumerate(row)] for i, row in enumerate(A)]


def determinant_eligible(B: RibbonGraph) -> bool:
    """Bouquet with at most one non-orientable loop."""
    return B.is_bouquet and sum(1 for _, _, s in B.edges.values() if s == -1) <= 1


def kappa_by_determinant(B: RibbonGraph) -> int:
    """``det(I + A(B))``; refuses bouquets with two or more twisted loops,
    where the determinant is not the quasi-tree count."""
    if not B.is_bouquet:
        raise IneligibleBouquetError(f"not a bouquet ({B.num_vertices} vertices)")
    twisted = [lab for lab, (_, _, s) in B.edges.items() if s == -1]
    if len(twisted) > 1:
        raise IneligibleBouquetError(
            f"bouquet has {len(twisted)} non-orientable loops {twisted}; "
            "the determinant counts quasi-trees only for orientable bouquets "
            "or those with exactly one non-orientable loop")
    A = intersection_matrix(chord_diagram_from_bouquet(B))
    return det_exact(identity_plus(A))
