"""The group of Dirichlet characters modulo N, evaluated as circle exponents.

The unit group (Z/NZ)^x is decomposed into cyclic factors by the Chinese
remainder theorem: the smallest primitive root for each odd prime power, and
the pair {-1, 5} for powers of two above 4.  Discrete logarithms are computed
by a brute-force table, memoized per modulus; levels in this package are desk
scale so this is never the bottleneck.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import CircleExponent


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, primes ascending."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors, ascending."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def _smallest_primitive_root(q: int, phi: int) -> int:
    prime_parts = [p for p, _ in factorize(phi)]
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, phi // p, q) != 1 for p in prime_parts):
            return g
    raise ValueError(f"no primitive root modulo {q}")


def _crt_lift(residue: int, q: int, n: int) -> int:
    """The unit mod n that is `residue` mod q and 1 mod n/q (gcd(q, n/q) = 1)."""
    m = n // q
    if m == 1:
        return residue % n
    inv_m = pow(m, -1, q)
    inv_q = pow(q, -1, m)
    return (residue * m * inv_m + 1 * q * inv_q) % n


@dataclass(frozen=True)
class UnitGroupStructure:
    """Cyclic decomposition of (Z/NZ)^x: generators with their orders.

    The product of the orders is phi(N) and every unit has a unique exponent
    vector against the factors, available through ``dlog``.
    """

    modulus: int
    factors: tuple[tuple[int, int], ...]

    def dlog(self, d: int) -> tuple[int, ...]:
        d %= self.modulus
        if math.gcd(d, self.modulus) != 1:
            raise ValueError(f"{d} is not a unit modulo {self.modulus}")
        return _dlog_table(self.modulus)[d]


@lru_cache(maxsize=None)
def unit_group_structure(n: int) -> UnitGroupStructure:
    """Deterministic cyclic decomposition of (Z/NZ)^x (smallest generators)."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    factors: list[tuple[int, int]] = []
    for p, e in factorize(n):
        q = p**e
        if p == 2:
            if e == 2:
                factors.append((_crt_lift(3, 4, n), 2))
            elif e >= 3:
                factors.append((_crt_lift(q - 1, q, n), 2))
                factors.append((_crt_lift(5, q, n), 2 ** (e - 2)))
            # e == 1 contributes the trivial group
        else:
            phi = (p - 1) * p ** (e - 1)
            g = _smallest_primitive_root(q, phi)
            factors.append((_crt_lift(g, q, n), phi))
    return UnitGroupStructure(n, tuple(factors))


@lru_cache(maxsize=None)
def _dlog_table(n: int) -> dict[int, tuple[int, ...]]:
    structure = unit_group_structure(n)
    table: dict[int, tuple[int, ...]] = {}
    orders = [order for _, order in structure.factors]

    def fill(i: int, value: int, exps: tuple[int, ...]) -> None:
        if i == len(structure.factors):
            table[value] = exps
            return
        gen, order = structure.factors[i]
        current = value
        for k in range(order):
            fill(i + 1, current, exps + (k,))
            current = current * gen % n
    fill(0, 1 % n, ())
    return table


@dataclass(frozen=True)
class DirichletCharacter:
    """A character of (Z/NZ)^x, encoded by exponents on the cyclic factors."""

    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        structure = unit_group_structure(self.modulus)
        if len(self.exponents) != len(structure.factors):
            raise ValueError("exponent vector length does not match the unit group")

    def __call__(self, d: int) -> CircleExponent:
        return evaluate(self, d)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        structure = unit_group_structure(self.modulus)
        exps = tuple(
            (x + y) % order
            for (x, y, (_, order)) in zip(
                self.exponents, other.exponents, structure.factors
            )
        )
        return DirichletCharacter(self.modulus, exps)

    def is_principal(self) -> bool:
        return not any(self.exponents)

    def id(self) -> int:
        """Mixed-radix rank of the exponent vector (principal character is 0)."""
        structure = unit_group_structure(self.modulus)
        rank = 0
        for exp, (_, order) in zip(self.exponents, structure.factors):
            rank = rank * order + exp
        return rank


def character_from_id(n: int, rank: int) -> DirichletCharacter:
    structure = unit_group_structure(n)
    exps = []
    for _, order in reversed(structure.factors):
        exps.append(rank % order)
        rank //= order
    if rank:
        raise ValueError("character id out of range")
    return DirichletCharacter(n, tuple(reversed(exps)))


def enumerate_characters(n: int) -> list[DirichletCharacter]:
    """All phi(N) characters, ordered by id; the principal character first."""
    return [character_from_id(n, k) for k in range(euler_phi(n))]


def evaluate(chi: DirichletCharacter, d: int) -> CircleExponent:
    """chi(d) as a circle exponent; d must be a unit modulo N.

    The exponent is the dot product of the character's exponent vector with
    the discrete log of d, each coordinate weighted by 1/order.
    """
    structure = unit_group_structure(chi.modulus)
    dlog = structure.dlog(d)
    total = Fraction(0)
    for k, e, (_, order) in zip(chi.exponents, dlog, structure.factors):
        total += Fraction(k * e, order)
    return CircleExponent(total)
