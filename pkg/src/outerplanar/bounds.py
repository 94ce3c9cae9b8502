"""Closed-form bounds on proximity, remoteness and radius, evaluated exactly.

Every evaluator returns a Fraction (or exact ints); callers comparing
against integer transmissions should clear denominators rather than ever
touching floats: the sharpness gaps being tested are as small as 1/(8(n-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BoundValue",
    "prox_bound_2conn",
    "prox_bound_mop",
    "prox_cert_numerator",
    "remoteness_bound",
    "radius_bound",
    "chordal_radius_interval",
]


@dataclass(frozen=True)
class BoundValue:
    """A bound with its provenance slug and parameters, for machine output."""

    value: Fraction
    source: str
    n: int
    q: int | None = None


def prox_bound_2conn(n: int, q: int) -> Fraction:
    """Proximity cap for 2-connected outerplanar graphs of order n, faces at most q."""
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    if not 3 <= q <= n:
        raise ValueError(f"face bound must satisfy 3 <= q <= n, got q={q}, n={n}")
    return Fraction(n + 5, 8) + Fraction(q * q - 4 * q + 9, 8 * (n - 1))


def prox_bound_mop(n: int) -> Fraction:
    """Proximity cap for maximal outerplanar graphs (the q = 3 specialisation)."""
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    return Fraction(n + 5, 8) + Fraction(3, 4 * (n - 1))


def prox_cert_numerator(n: int, k: int) -> int:
    """Numerator N(n, k) with 8*sigma(w) <= N(n, k) for the constructed witness w.

    Dividing by 8(n-1) at k = q reproduces prox_bound_2conn(n, q) exactly.
    """
    return n * n + 4 * n + k * k - 4 * k + 4


def remoteness_bound(n: int) -> Fraction:
    """Remoteness cap for 2-connected outerplanar graphs of order n (cycle value)."""
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    if n % 2 == 0:
        return Fraction(n + 1, 4) + Fraction(1, 4 * (n - 1))
    return Fraction(n + 1, 4)


def radius_bound(n: int) -> int:
    """Radius cap floor(n/4) + 1 for bounded-face 2-connected outerplanar graphs."""
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    return n // 4 + 1


def chordal_radius_interval(diam: int) -> tuple[int, int]:
    """Integer radii consistent with a chordal graph of the given diameter.

    Chordal graphs satisfy 2 rad - 2 <= diam <= 2 rad, i.e.
    rad in [ceil(diam/2), floor((diam+2)/2)].
    """
    if diam < 0:
        raise ValueError(f"diameter must be nonnegative, got {diam}")
    return (diam + 1) // 2, (diam + 2) // 2
