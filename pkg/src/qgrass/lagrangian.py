"""The Lagrangian Grassmannian cohomology ring via a terminating rewriting system.

Generators e_1, ..., e_n with deg(e_i) = i; whenever an index repeats, the
quadratic relation

    e_i^2 = 2 e_{i+1} e_{i-1} - 2 e_{i+2} e_{i-2} + ... (e_0 = 1, e_{<0} = 0)

replaces the pair.  Rewriting a pair keeps the factor count while strictly
increasing the sum of squared indices (or drops the count when e_0 appears),
both bounded, so reduction terminates; the square-free monomials it lands on
are counted by the ring's Hilbert series, hence form a basis and the normal
form is independent of the pair-selection strategy.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping

from .echelon import DegreeSlice
from .partitions import strict_partitions_of_size
from .qseries import QPoly

STRATEGIES = ("smallest", "largest")


class LagVector:
    """Rational combination of square-free index sets {i1 < ... < ir} in [1, n]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction | int] | None = None, check: bool = True):
        data: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c:
                    key = tuple(key)
                    if check and any(a >= b for a, b in zip(key, key[1:])):
                        raise ValueError(f"index sets must be strictly increasing, got {key}")
                    data[key] = c
        self._terms = data

    @classmethod
    def zero(cls) -> "LagVector":
        return cls()

    @classmethod
    def unit(cls) -> "LagVector":
        return cls({(): Fraction(1)}, check=False)

    @classmethod
    def generator(cls, i: int) -> "LagVector":
        return cls({(i,): Fraction(1)}, check=False)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, key: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    def items(self):
        return self._terms.items()

    def __eq__(self, other) -> bool:
        return isinstance(other, LagVector) and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "LagVector(0)"
        bits = [f"{c}*e{list(key)}" for key, c in sorted(self._terms.items(), key=_key_order)]
        return "LagVector(" + " + ".join(bits) + ")"

    def scale(self, c) -> "LagVector":
        c = Fraction(c)
        if not c:
            return LagVector.zero()
        out = LagVector.__new__(LagVector)
        out._terms = {k: v * c for k, v in self._terms.items()}
        return out

    def __add__(self, other: "LagVector") -> "LagVector":
        data = dict(self._terms)
        for k, c in other._terms.items():
            new = data.get(k, 0) + c
            if new:
                data[k] = new
            else:
                data.pop(k, None)
        out = LagVector.__new__(LagVector)
        out._terms = data
        return out

    def __sub__(self, other: "LagVector") -> "LagVector":
        return self + other.scale(-1)

    def to_json_obj(self) -> list[dict]:
        return [
            {"set": list(key), "coeff": str(c)}
            for key, c in sorted(self._terms.items(), key=_key_order)
        ]


def _key_order(item):
    # sort (index set, coeff) pairs by degree, then lex-decreasing partitions
    key = item[0]
    return (sum(key), tuple(-v for v in sorted(key, reverse=True)))


def _find_repeat(mono: tuple[int, ...], strategy: str) -> int | None:
    hits = [mono[idx] for idx in range(len(mono) - 1) if mono[idx] == mono[idx + 1]]
    if not hits:
        return None
    return hits[0] if strategy == "smallest" else hits[-1]


@cache
def _reduce_monomial(mono: tuple[int, ...], n: int, strategy: str) -> tuple[tuple[tuple[int, ...], int], ...]:
    out: dict[tuple[int, ...], int] = {}
    stack: list[tuple[tuple[int, ...], int]] = [(mono, 1)]
    while stack:
        m, c = stack.pop()
        i = _find_repeat(m, strategy)
        if i is None:
            new = out.get(m, 0) + c
            if new:
                out[m] = new
            else:
                out.pop(m, None)
            continue
        pos = m.index(i)
        rest = m[:pos] + m[pos + 2 :]
        for t in range(1, n - i + 1):
            lo, hi = i - t, i + t
            if lo < 0:
                continue
            extra = (hi,) if lo == 0 else (lo, hi)
            stack.append((tuple(sorted(rest + extra)), c * (2 if t % 2 else -2)))
    return tuple(sorted(out.items()))


def normal_form(indices: Iterable[int], n: int, strategy: str = "smallest") -> LagVector:
    """Expand a monomial in the generators over the square-free basis.

    The default strategy rewrites the smallest repeated index first; the
    output is strategy-independent (the basis argument), which the test suite
    enforces rather than assumes.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    mono = tuple(sorted(indices))
    if any(i < 1 or i > n for i in mono):
        raise ValueError(f"indices must lie in [1, {n}], got {mono}")
    return LagVector(
        {key: Fraction(c) for key, c in _reduce_monomial(mono, n, strategy)}, check=False
    )


def multiply(u: LagVector, v: LagVector, n: int) -> LagVector:
    """Product in the quotient ring: multiset union of index sets, renormalised."""
    data: dict[tuple[int, ...], Fraction] = {}
    for a, ca in u.items():
        for b, cb in v.items():
            c = ca * cb
            for key, coeff in _reduce_monomial(tuple(sorted(a + b)), n, "smallest"):
                new = data.get(key, 0) + c * coeff
                if new:
                    data[key] = new
                else:
                    data.pop(key, None)
    out = LagVector.__new__(LagVector)
    out._terms = data
    return out


def _mult_by_generator(vec: dict[tuple[int, ...], Fraction], i: int, n: int) -> dict[tuple[int, ...], Fraction]:
    data: dict[tuple[int, ...], Fraction] = {}
    for key, c in vec.items():
        for newkey, coeff in _reduce_monomial(tuple(sorted(key + (i,))), n, "smallest"):
            new = data.get(newkey, 0) + c * coeff
            if new:
                data[newkey] = new
            else:
                data.pop(newkey, None)
    return data


def _columns_of_degree(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    # strict partitions of d with parts <= n, as increasing index sets, in the
    # enumeration order of the partition module
    return tuple(tuple(reversed(p.parts)) for p in strict_partitions_of_size(n, d))


@cache
def _lg_slice_data(n: int, m: int) -> tuple[tuple[DegreeSlice, tuple[dict, ...]], ...]:
    top = n * (n + 1) // 2
    data: list[tuple[DegreeSlice, tuple[dict, ...]]] = []
    s0 = DegreeSlice(0, ((),))
    s0.add_vector({(): 1})
    data.append((s0, ({(): Fraction(1)},)))
    for d in range(1, top + 1):
        sl = DegreeSlice(d, _columns_of_degree(n, d))
        for i in range(1, min(m, d) + 1):
            if sl.saturated:
                break
            for basis_vec in data[d - i][1]:
                if sl.saturated:
                    break
                image = _mult_by_generator(basis_vec, i, n)
                if image:
                    sl.add_vector(image)
        data.append((sl, tuple(sl.basis_rows())))
    return tuple(data)


def lg_subalgebra_slices(n: int, m: int) -> tuple[DegreeSlice, ...]:
    if not (1 <= m <= n):
        raise ValueError(f"need 1 <= m <= n, got n={n}, m={m}")
    return tuple(sl for sl, _ in _lg_slice_data(n, m))


def lg_subalgebra_hilbert(n: int, m: int) -> QPoly:
    """Hilbert series of the subalgebra generated by e_1, ..., e_m."""
    slices = lg_subalgebra_slices(n, m)
    return QPoly({sl.degree: sl.rank for sl in slices})


def lg_top_power(n: int) -> int:
    """Coefficient of the full staircase class in e_1 raised to the ring's top
    degree; nonzero, and equal to the degree of the Plucker embedding."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    vec: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
    for _ in range(n * (n + 1) // 2):
        vec = _mult_by_generator(vec, 1, n)
    coeff = vec.get(tuple(range(1, n + 1)), Fraction(0))
    if coeff.denominator != 1:
        raise RuntimeError(f"top coefficient {coeff} is not an integer")
    return int(coeff)
