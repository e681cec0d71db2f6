"""Dense integer polynomial helpers for the exact pipelines.

Polynomials are lists of int coefficients, constant term first.  Only the
two operations the pipelines need are provided, and both are single linear
passes: multiplication by a binomial t**j - 1 and exact division by one.
"""

from __future__ import annotations

from .errors import InexactDivisionError


def mul_binomial(coeffs: list[int], j: int) -> list[int]:
    """Multiply by t**j - 1."""
    if j < 1:
        raise ValueError(f"binomial exponent {j} is not positive")
    out = [0] * (len(coeffs) + j)
    for k, c in enumerate(coeffs):
        out[k + j] += c
        out[k] -= c
    return out


def div_binomial(coeffs: list[int], j: int) -> list[int]:
    """Divide exactly by t**j - 1; remainder must vanish."""
    if j < 1:
        raise ValueError(f"binomial exponent {j} is not positive")
    n = len(coeffs)
    if n <= j:
        raise InexactDivisionError(f"degree {n - 1} polynomial is not divisible by t^{j} - 1")
    qlen = n - j
    q = [0] * qlen
    for k in range(n - 1, j - 1, -1):
        q[k - j] = coeffs[k] + (q[k] if k < qlen else 0)
    for k in range(j):
        if coeffs[k] != -(q[k] if k < qlen else 0):
            raise InexactDivisionError(f"division by t^{j} - 1 leaves a remainder")
    return q
