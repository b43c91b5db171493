"""Exact integer-coefficient polynomials in q and the closed-form Hilbert series.

All identity checks downstream assert that a difference of QPoly values is the
zero polynomial; nothing here is ever approximate.
"""

from __future__ import annotations

from functools import cache
from math import comb
from typing import Iterable, Mapping

from .partitions import Partition


class QPoly:
    """Polynomial in q with arbitrary-precision integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        data = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    if e < 0:
                        raise ValueError(f"exponents must be nonnegative, got {e}")
                    data[int(e)] = int(c)
        self._c = data

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1})

    @classmethod
    def q_power(cls, e: int) -> "QPoly":
        return cls({e: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "QPoly":
        return cls({e: c for e, c in enumerate(coeffs)})

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        """Largest supported exponent; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def coeffs(self) -> list[int]:
        """Dense coefficient list from exponent 0 to the degree."""
        out = [0] * (self.degree + 1)
        for e, c in self._c.items():
            out[e] = c
        return out

    def json_coeffs(self) -> list[str]:
        return [str(c) for c in self.coeffs()]

    def evaluate(self, x: int) -> int:
        return sum(c * x**e for e, c in self._c.items())

    def __add__(self, other: "QPoly") -> "QPoly":
        data = dict(self._c)
        for e, c in other._c.items():
            data[e] = data.get(e, 0) + c
        return QPoly(data)

    def __sub__(self, other: "QPoly") -> "QPoly":
        data = dict(self._c)
        for e, c in other._c.items():
            data[e] = data.get(e, 0) - c
        return QPoly(data)

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self._c.items()})
        if isinstance(other, QPoly):
            data: dict[int, int] = {}
            for e1, c1 in self._c.items():
                for e2, c2 in other._c.items():
                    e = e1 + e2
                    data[e] = data.get(e, 0) + c1 * c2
            return QPoly(data)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        out = QPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self._c == other._c

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c):
            c = self._c[e]
            if e == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else str(c))
                terms.append(f"{head}q" if e == 1 else f"{head}q^{e}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QPoly({self})"


@cache
def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial coefficient, via the Pascal recurrence (division-free)."""
    if a < 0:
        raise ValueError(f"q_binomial needs a >= 0, got {a}")
    if b < 0 or b > a:
        return QPoly.zero()
    if b == 0 or b == a:
        return QPoly.one()
    return q_binomial(a - 1, b - 1) + QPoly.q_power(b) * q_binomial(a - 1, b)


def q_binomial_prime(ell: int, i: int, k: int) -> QPoly:
    """Width-k q-analogue of binomial(ell, i): sum of q^(j(k-i+1)) [i+j-1, j]_q."""
    if not (1 <= i <= ell and i <= k):
        raise ValueError(f"need 1 <= i <= ell and i <= k, got ell={ell}, i={i}, k={k}")
    out = QPoly.zero()
    for j in range(ell - i + 1):
        out = out + QPoly.q_power(j * (k - i + 1)) * q_binomial(i + j - 1, j)
    return out


def q_binomial_double_prime(n: int, i: int) -> QPoly:
    """Shifted q-analogue of binomial(n+1, i+1): q^i sum of q^C(j+1,2) [i+j, i]_q."""
    if not (1 <= i <= n):
        raise ValueError(f"need 1 <= i <= n, got n={n}, i={i}")
    out = QPoly.zero()
    for j in range(n - i + 1):
        out = out + QPoly.q_power(comb(j + 1, 2)) * q_binomial(i + j, i)
    return QPoly.q_power(i) * out


def grass_hilbert_series(ell: int, k: int) -> QPoly:
    """Hilbert series of the full Grassmannian cohomology ring: [k+ell, ell]_q."""
    if ell < 0 or k < 0:
        raise ValueError(f"need ell, k >= 0, got ell={ell}, k={k}")
    return q_binomial(k + ell, ell)


def lg_hilbert_series(n: int) -> QPoly:
    """Hilbert series of the full Lagrangian ring: product of (1 + q^j), j = 1..n."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    out = QPoly.one()
    for j in range(1, n + 1):
        out = out * (QPoly.one() + QPoly.q_power(j))
    return out


def grass_subalgebra_formula(ell: int, k: int, m: int) -> QPoly:
    """Closed-form candidate for the Hilbert series of the subalgebra generated
    in degrees at most m (proven for m in {0, 1, min(ell, k)})."""
    if not (0 <= m <= min(ell, k)):
        raise ValueError(f"need 0 <= m <= min(ell, k), got ell={ell}, k={k}, m={m}")
    out = QPoly.one()
    for i in range(1, m + 1):
        out = out + QPoly.q_power(i) * q_binomial(k, i) * q_binomial_prime(ell, i, k)
    return out


def lg_subalgebra_formula(n: int, m: int) -> QPoly:
    """Closed-form candidate for the Lagrangian subalgebra Hilbert series
    (proven for m in {1, n}): 1 plus the odd-indexed shifted q-binomials."""
    if not (1 <= m <= n):
        raise ValueError(f"need 1 <= m <= n, got n={n}, m={m}")
    out = QPoly.one()
    for i in range(1, m + 1, 2):
        out = out + q_binomial_double_prime(n, i)
    return out


def gen_sum(family: Iterable[Partition]) -> QPoly:
    """Generating sum q^|lam| over a finite family of partitions."""
    data: dict[int, int] = {}
    for lam in family:
        d = lam.size
        data[d] = data.get(d, 0) + 1
    return QPoly(data)
