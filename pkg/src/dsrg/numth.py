"""Small exact number-theory helpers for prime moduli."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def quadratic_residues(q: int) -> frozenset[int]:
    """Nonzero squares modulo a prime q."""
    return frozenset(x * x % q for x in range(1, q))


def mod_inverse(x: int, q: int) -> int:
    return pow(x, -1, q)
