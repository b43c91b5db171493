"""Symmetric functions in Schur coordinates: Pieri products and the involution omega.

The Schur basis is the only stored basis; complete homogeneous and elementary
symmetric functions enter only as multiplication operators and expansions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterator, Mapping

from .partitions import Partition, _conjugate


def _order_key(p: Partition):
    # increasing size, then lexicographically decreasing parts
    return (p.size, tuple(-v for v in p.parts))


class SymVector:
    """Finite rational linear combination of Schur basis elements."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, Fraction | int] | None = None, check: bool = True):
        data: dict[Partition, Fraction] = {}
        if terms:
            for p, c in terms.items():
                c = Fraction(c)
                if c:
                    if check and not isinstance(p, Partition):
                        raise TypeError(f"SymVector keys must be partitions, got {p!r}")
                    data[p] = c
        self._terms = data

    @classmethod
    def zero(cls) -> "SymVector":
        return cls()

    @classmethod
    def unit(cls) -> "SymVector":
        return cls({Partition(): Fraction(1)}, check=False)

    @classmethod
    def schur(cls, lam: Partition) -> "SymVector":
        return cls({lam: Fraction(1)}, check=False)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, lam: Partition) -> Fraction:
        return self._terms.get(lam, Fraction(0))

    def items(self):
        return self._terms.items()

    def support(self) -> list[Partition]:
        return sorted(self._terms, key=_order_key)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "SymVector") -> "SymVector":
        data = dict(self._terms)
        for p, c in other._terms.items():
            new = data.get(p, 0) + c
            if new:
                data[p] = new
            else:
                data.pop(p, None)
        out = SymVector.__new__(SymVector)
        out._terms = data
        return out

    def __sub__(self, other: "SymVector") -> "SymVector":
        data = dict(self._terms)
        for p, c in other._terms.items():
            new = data.get(p, 0) - c
            if new:
                data[p] = new
            else:
                data.pop(p, None)
        out = SymVector.__new__(SymVector)
        out._terms = data
        return out

    def scale(self, c) -> "SymVector":
        c = Fraction(c)
        if not c:
            return SymVector.zero()
        out = SymVector.__new__(SymVector)
        out._terms = {p: v * c for p, v in self._terms.items()}
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SymVector) and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "SymVector(0)"
        bits = [f"{c}*s({p})" for p, c in sorted(self._terms.items(), key=lambda t: _order_key(t[0]))]
        return "SymVector(" + " + ".join(bits) + ")"

    def to_json_obj(self) -> list[dict[str, str]]:
        return [
            {"partition": str(p), "coeff": str(c)}
            for p, c in sorted(self._terms.items(), key=lambda t: _order_key(t[0]))
        ]


@cache
def _horizontal_strips(parts: tuple[int, ...], r: int) -> tuple[tuple[int, ...], ...]:
    """All mu containing parts with mu/parts a horizontal r-strip, generated row
    by row under the interlacing condition mu[i+1] <= parts[i] <= mu[i]."""
    n = len(parts)
    out: list[tuple[int, ...]] = []

    def build(row: int, remaining: int, acc: tuple[int, ...]):
        if row == n + 1:
            if remaining == 0:
                out.append(acc)
            return
        low = parts[row] if row < n else 0
        high = low + remaining if row == 0 else min(parts[row - 1], low + remaining)
        for val in range(high, low - 1, -1):
            # rows below can still absorb at most what interlacing allows; prune
            # by budget only, the recursion enforces the rest
            build(row + 1, remaining - (val - low), acc + (val,))

    build(0, r, ())
    return tuple(tuple(v for v in t if v) for t in out)


@cache
def _vertical_strips(parts: tuple[int, ...], r: int) -> tuple[tuple[int, ...], ...]:
    conj = _conjugate(parts)
    out = sorted((_conjugate(m) for m in _horizontal_strips(conj, r)), reverse=True)
    return tuple(out)


def pieri_h(r: int, v: SymVector) -> SymVector:
    """Multiply by the complete homogeneous generator of degree r: each Schur
    term grows by every horizontal r-strip."""
    if r < 1:
        raise ValueError(f"pieri_h needs r >= 1, got {r}")
    data: dict[Partition, Fraction] = {}
    for lam, c in v.items():
        for mu in _horizontal_strips(lam.parts, r):
            key = Partition(mu, check=False)
            new = data.get(key, 0) + c
            if new:
                data[key] = new
            else:
                data.pop(key, None)
    out = SymVector.__new__(SymVector)
    out._terms = data
    return out


def pieri_e(r: int, v: SymVector) -> SymVector:
    """Multiply by the elementary generator of degree r: vertical r-strips."""
    if r < 1:
        raise ValueError(f"pieri_e needs r >= 1, got {r}")
    data: dict[Partition, Fraction] = {}
    for lam, c in v.items():
        for mu in _vertical_strips(lam.parts, r):
            key = Partition(mu, check=False)
            new = data.get(key, 0) + c
            if new:
                data[key] = new
            else:
                data.pop(key, None)
    out = SymVector.__new__(SymVector)
    out._terms = data
    return out


@cache
def _h_to_schur(parts: tuple[int, ...]) -> SymVector:
    if not parts:
        return SymVector.unit()
    return pieri_h(parts[0], _h_to_schur(parts[1:]))


def h_to_schur(lam: Partition) -> SymVector:
    """Schur expansion of the product of complete homogeneous generators
    indexed by the parts of lam; all coefficients are Kostka numbers."""
    return _h_to_schur(lam.parts)


def omega(v: SymVector) -> SymVector:
    """Fundamental involution: transpose every Schur index, coefficients unchanged."""
    out = SymVector.__new__(SymVector)
    out._terms = {p.conjugate(): c for p, c in v.items()}
    return out
