"""Named bouquet families, Fibonacci/Lucas/associated-Mersenne numbers and
polynomials, and the closed forms their quasi-tree counts follow.

Family ids:

======  ============================================  ==========
id      bouquet                                       range
======  ============================================  ==========
F       fan-like path bouquet ``1,2,1,3,2,...,n``      n >= 0
W       wheel-like cycle bouquet ``1,n,2,1,...``      n >= 3
Fp      caterpillar bouquet ``1,2,3,2,1,4,3,...``     n >= 2
F1      F with its first edge twisted                n >= 1
Fp1     Fp with its first edge twisted               n >= 2
Fpn     Fp with its last edge twisted                n >= 3
W1      W with its first edge twisted                n >= 3
======  ============================================  ==========
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import IntPolynomial
from .ribbon import RibbonGraph, from_signed_rotation, kappa_by_deletion_contraction

__all__ = [
    "FAMILIES",
    "MIN_N",
    "FamilySpec",
    "fib",
    "lucas",
    "mersenne_assoc",
    "family_rotation",
    "make_family",
    "family_spec",
    "predicted_kappa",
    "fibonacci_poly",
    "lucas_poly",
    "predicted_charpoly",
    "needs_l1",
    "fp1_charpoly_expanded",
    "delcon_kappa",
]

FAMILIES = ("F", "W", "Fp", "F1", "Fp1", "Fpn", "W1")
MIN_N = {"F": 0, "W": 3, "Fp": 2, "F1": 1, "Fp1": 2, "Fpn": 3, "W1": 3}

KAPPA_FORMULA = {
    "F": "f(n+1)",
    "W": "a(n)",
    "Fp": "l(n-1)",
    "F1": "f(n+2)",
    "Fp1": "f(n) + l(n-1)",
    "Fpn": "l(n)",
    "W1": "2 f(n+1) - 1 + (-1)^(n+1)",
}

CHARPOLY_FORMULA = {
    "Fp": "t l[n-1](t)",
    "Fp1": "t l[n-1](t) - f[n](t)",
    "F1": "f[n+1](t) - f[n](t)",
    "W1": "(t-1) f[n](t) + 2 f[n-1](t) + (-1)^(n+1) - 1",
    "Fpn": "t (l[n-1](t) - l[n-2](t))",
}


# -- integer sequences ------------------------------------------------------

@lru_cache(maxsize=None)
def fib(n: int) -> int:
    if n < 0:
        raise ValueError("fib(n) needs n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def lucas(n: int) -> int:
    """l_1 = 1, l_2 = 3, l_n = l_(n-1) + l_(n-2)."""
    if n < 1:
        raise ValueError("lucas(n) needs n >= 1")
    a, b = 1, 3
    for _ in range(n - 1):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def mersenne_assoc(n: int) -> int:
    """a_1 = a_2 = 1, a_n = a_(n-1) + a_(n-2) + 1 - (-1)^n."""
    if n < 1:
        raise ValueError("mersenne_assoc(n) needs n >= 1")
    a, b = 1, 1
    for k in range(3, n + 1):
        a, b = b, b + a + 1 - (-1) ** k
    return a if n == 1 else b


# -- family generators ------------------------------------------------------

def _check_range(fid: str, n: int):
    if fid not in MIN_N:
        raise ValueError(f"unknown family {fid!r}; expected one of {', '.join(FAMILIES)}")
    if n < MIN_N[fid]:
        raise ValueError(f"family {fid} is defined for n >= {MIN_N[fid]}, got {n}")


def _path_tail(start: int, n: int) -> list[int]:
    """``i, i-1`` for i = start..n (the shared ``...,i,i-1,i+1,i,...`` run)."""
    out = []
    for i in range(start, n + 1):
        out += [i, i - 1]
    return out


def family_rotation(fid: str, n: int) -> tuple[int, ...]:
    _check_range(fid, n)
    base = {"F1": "F", "Fp1": "Fp", "Fpn": "Fp", "W1": "W"}.get(fid, fid)
    if base == "F":
        tokens = [] if n == 0 else [1] + _path_tail(2, n) + [n]
    elif base == "W":
        tokens = [1, n] + _path_tail(2, n)
    else:  # Fp
        tokens = [1, 2, 2, 1] if n == 2 else [1, 2, 3, 2, 1] + _path_tail(4, n) + [n]
    if fid in ("F1", "Fp1", "W1"):
        tokens[0] = -tokens[0]
    elif fid == "Fpn":
        tokens[-1] = -tokens[-1]
    return tuple(tokens)


def make_family(fid: str, n: int) -> RibbonGraph:
    return from_signed_rotation(family_rotation(fid, n))


def predicted_kappa(fid: str, n: int) -> int:
    _check_range(fid, n)
    if fid == "F":
        return fib(n + 1)
    if fid == "W":
        return mersenne_assoc(n)
    if fid == "Fp":
        return lucas(n - 1)
    if fid == "F1":
        return fib(n + 2)
    if fid == "Fp1":
        return fib(n) + lucas(n - 1)
    if fid == "Fpn":
        return lucas(n)
    return 2 * fib(n + 1) - 1 + (-1) ** (n + 1)  # W1


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    rotation: tuple[int, ...]
    kappa_formula: str
    kappa: int
    charpoly_formula: str | None


def family_spec(fid: str, n: int) -> FamilySpec:
    return FamilySpec(fid, n, family_rotation(fid, n), KAPPA_FORMULA[fid],
                      predicted_kappa(fid, n), CHARPOLY_FORMULA.get(fid))


# -- polynomials ------------------------------------------------------------

@lru_cache(maxsize=None)
def fibonacci_poly(n: int) -> IntPolynomial:
    """f_1 = 1, f_2 = t, f_(n+1) = t f_n + f_(n-1); f_0 = 0 by running the
    recurrence backwards."""
    if n < 0:
        raise ValueError("fibonacci_poly(n) needs n >= 0")
    t = IntPolynomial.t()
    a, b = IntPolynomial.const(1), t
    if n <= 1:
        return a if n else IntPolynomial()
    for _ in range(n - 2):
        a, b = b, t * b + a
    return b


def lucas_poly(n: int) -> IntPolynomial:
    """l_n = f_(n+1) + f_(n-1), so l_1 = t through f_0 = 0."""
    if n < 1:
        raise ValueError(f"lucas_poly(n) needs n >= 1, got {n}")
    return fibonacci_poly(n + 1) + fibonacci_poly(n - 1)


def needs_l1(fid: str, n: int) -> bool:
    """True when the closed form reaches l_1(t), which only exists through
    the f_0 = 0 extension."""
    return (fid, n) in {("Fp", 2), ("Fp1", 2), ("Fpn", 3)}


def predicted_charpoly(fid: str, n: int) -> IntPolynomial:
    _check_range(fid, n)
    if fid == "F":
        return fibonacci_poly(n + 1)
    if fid not in CHARPOLY_FORMULA:
        raise ValueError(f"no characteristic polynomial formula for family {fid}")
    t = IntPolynomial.t()
    f, l = fibonacci_poly, lucas_poly
    if fid == "Fp":
        return t * l(n - 1)
    if fid == "Fp1":
        return t * l(n - 1) - f(n)
    if fid == "F1":
        return f(n + 1) - f(n)
    if fid == "W1":
        return (t - 1) * f(n) + 2 * f(n - 1) + ((-1) ** (n + 1) - 1)
    return t * (l(n - 1) - l(n - 2))  # Fpn


def fp1_charpoly_expanded(n: int) -> IntPolynomial:
    """The alternative rendering (t-1) f_n(t) + t f_(n-2)(t) for Fp1."""
    if n < 3:
        raise ValueError("needs n >= 3")
    t = IntPolynomial.t()
    return (t - 1) * fibonacci_poly(n) + t * fibonacci_poly(n - 2)


# -- deletion-contraction recursions -----------------------------------------

@lru_cache(maxsize=None)
def delcon_kappa(fid: str, n: int) -> int:
    """kappa from each family's deletion-contraction recursion and base cases.

    W has no family-level recursion, so it is evaluated by generic
    deletion-contraction on the ribbon graph itself.
    """
    _check_range(fid, n)
    if fid == "F":
        if n <= 1:
            return 1
        return delcon_kappa("F", n - 1) + delcon_kappa("F", n - 2)
    if fid == "F1":
        if n <= 2:
            return {1: 2, 2: 3}[n]
        return delcon_kappa("F1", n - 1) + delcon_kappa("F1", n - 2)
    if fid == "Fp":
        if n <= 3:
            return {2: 1, 3: 3}[n]
        return delcon_kappa("Fp", n - 1) + delcon_kappa("Fp", n - 2)
    if fid == "Fp1":
        if n <= 3:
            return {2: 2, 3: 5}[n]
        return delcon_kappa("Fp1", n - 1) + delcon_kappa("Fp1", n - 2)
    if fid == "Fpn":
        if n == 3:
            return 4
        return delcon_kappa("Fp", n - 1) + delcon_kappa("Fpn", n - 1)
    if fid == "W1":
        if n <= 4:
            return {3: 6, 4: 8}[n]
        return delcon_kappa("F", n - 1) + delcon_kappa("F1", n - 2) + delcon_kappa("W1", n - 2)
    return kappa_by_deletion_contraction(make_family("W", n))
