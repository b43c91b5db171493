"""Parameterless k-Schur functions, expanded in the Schur basis.

The construction is the weak Pieri recursion: multiplying a k-Schur function
by a complete homogeneous generator h_r spreads it over the k-bounded
horizontal r-strips whose k-conjugates grow by a vertical r-strip.  Peeling
off the first part of the index and subtracting the dominance-larger targets
pins each expansion down uniquely.

The memo table is the only shared state; entries are immutable and recomputing
one yields an identical value, so concurrent use is safe.
"""

from __future__ import annotations

from functools import cache

from .partitions import Partition, _k_conjugate
from .schur import SymVector, _horizontal_strips, pieri_h


def _is_vertical_strip(big: tuple[int, ...], small: tuple[int, ...]) -> bool:
    for idx in range(max(len(big), len(small))):
        b = big[idx] if idx < len(big) else 0
        s = small[idx] if idx < len(small) else 0
        if not s <= b <= s + 1:
            return False
    return True


def _strictly_dominates(mu: tuple[int, ...], lam: tuple[int, ...]) -> bool:
    if mu == lam:
        return False
    pa = pb = 0
    for idx in range(max(len(mu), len(lam))):
        pa += lam[idx] if idx < len(lam) else 0
        pb += mu[idx] if idx < len(mu) else 0
        if pa > pb:
            return False
    return True


@cache
def _targets(nu: tuple[int, ...], r: int, k: int) -> tuple[tuple[int, ...], ...]:
    nu_conj = _k_conjugate(nu, k)
    out = []
    for mu in _horizontal_strips(nu, r):
        if mu and mu[0] > k:
            continue
        if _is_vertical_strip(_k_conjugate(mu, k), nu_conj):
            out.append(mu)
    out.sort(reverse=True)
    return tuple(out)


def weak_pieri_targets(nu: Partition, r: int, k: int) -> tuple[Partition, ...]:
    """k-bounded mu with mu/nu a horizontal r-strip whose k-conjugates differ
    by a vertical r-strip; these index the expansion of h_r times the k-Schur
    function of nu."""
    if k < 1 or not 1 <= r <= k:
        raise ValueError(f"need 1 <= r <= k, got r={r}, k={k}")
    if nu.first > k:
        raise ValueError(f"{nu!r} is not {k}-bounded")
    return tuple(Partition(t, check=False) for t in _targets(nu.parts, r, k))


@cache
def _k_schur(parts: tuple[int, ...], k: int) -> SymVector:
    if not parts:
        return SymVector.unit()
    r, nu = parts[0], parts[1:]
    result = pieri_h(r, _k_schur(nu, k))
    targets = _targets(nu, r, k)
    if parts not in targets:
        raise RuntimeError(
            f"weak Pieri rule inconsistency: {parts} is missing from its own "
            f"target set {targets} (r={r}, k={k})"
        )
    for mu in targets:
        if mu == parts:
            continue
        if not _strictly_dominates(mu, parts):
            raise RuntimeError(
                f"weak Pieri rule inconsistency: target {mu} does not strictly "
                f"dominate {parts} (r={r}, k={k})"
            )
        result = result - _k_schur(mu, k)
    return result


def k_schur(lam: Partition, k: int) -> SymVector:
    """Schur expansion of the k-Schur function indexed by a k-bounded partition.

    Unitriangular with leading coefficient 1: every other term strictly
    dominates lam.  The empty partition maps to the unit for any k >= 0.
    """
    if lam.first > k:
        raise ValueError(f"{lam!r} is not {k}-bounded")
    return _k_schur(lam.parts, k)
