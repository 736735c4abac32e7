"""Graded dimensions of the Jacobian ring of a smooth projective hypersurface.

For a smooth degree-``d`` hypersurface in projective ``n``-space the Jacobian
ring ``C[z_1..z_{n+1}] / (partial derivatives)`` has Hilbert series
``((1 - t^(d-1)) / (1 - t))^(n+1)``, independent of the chosen equation.  Its
graded pieces compute the primitive Hodge numbers via residues of rational
differential forms, which is why these dimensions act as the universal
constants of the global solvers.

The production path is the closed binomial form of the Hilbert coefficient;
the independent test oracle counts monomials in the Fermat Jacobian ring,
whose Jacobian ideal is generated by pure powers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb


def hilbert_coefficient(n: int, d: int, ell: int) -> int:
    """Coefficient of ``t**ell`` in ``((1 - t**(d-1)) / (1 - t))**(n+1)``."""
    if n < 1 or d < 2:
        raise ValueError(f"need n >= 1 and d >= 2, got n={n}, d={d}")
    if ell < 0 or ell > (n + 1) * (d - 2):
        return 0
    total = 0
    j = 0
    while j * (d - 1) <= ell:
        total += (-1) ** j * comb(n + 1, j) * comb(ell - j * (d - 1) + n, n)
        j += 1
    return total


def jacobian_graded_dim(n: int, d: int, k: int, s: int) -> int:
    """Dimension of the Jacobian-ring piece in degree ``(k+1)d - (n+1) - s``.

    Returns 0 whenever the degree falls outside the socle range.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if not 0 <= s < d:
        raise ValueError(f"need 0 <= s < d, got s={s}, d={d}")
    return hilbert_coefficient(n, d, (k + 1) * d - (n + 1) - s)


@lru_cache(maxsize=None)
def _fermat_histogram(n: int, d: int) -> tuple[int, ...]:
    # brute-force enumeration of exponent vectors 0 <= v_i <= d-2
    counts = [0] * ((n + 1) * (d - 2) + 1)
    for exps in product(range(d - 1), repeat=n + 1):
        counts[sum(exps)] += 1
    return tuple(counts)


def fermat_monomial_count(n: int, d: int, ell: int) -> int:
    """Number of monomials of degree ``ell`` in the Fermat Jacobian ring.

    Counts vectors ``(v_1, ..., v_{n+1})`` with ``0 <= v_i <= d - 2`` and
    ``sum v_i = ell`` by explicit enumeration; kept deliberately independent
    of :func:`hilbert_coefficient`.
    """
    if ell < 0:
        return 0
    hist = _fermat_histogram(n, d)
    return hist[ell] if ell < len(hist) else 0
