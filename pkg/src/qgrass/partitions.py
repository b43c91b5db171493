"""Integer partitions: hooks, cores, k-conjugation, vacancy, and bijective decompositions.

Everything in this module is a pure function on immutable values, so all
operations are safe to call concurrently.  Partitions are value objects:
construction trims trailing zeros and validates the weakly decreasing
invariant.  The text format used by the CLI and JSON reports is a
comma-separated list of parts, with the empty string denoting the empty
partition.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Iterator


class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    __slots__ = ("_parts", "_hash")

    def __init__(self, parts: Iterable[int] = (), check: bool = True):
        data = tuple(int(p) for p in parts)
        while data and data[-1] == 0:
            data = data[:-1]
        if check and data:
            if data[-1] <= 0:
                raise ValueError(f"partition parts must be positive, got {data}")
            for a, b in zip(data, data[1:]):
                if a < b:
                    raise ValueError(f"partition parts must be weakly decreasing, got {data}")
        self._parts = data
        self._hash = hash(data)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated text format; '' parses to the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition from {text!r}: parts must be integers")
        return cls(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def size(self) -> int:
        return sum(self._parts)

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self._parts[0] if self._parts else 0

    def part(self, idx: int) -> int:
        """Part at 0-based index, padded with zeros past the last row."""
        return self._parts[idx] if 0 <= idx < len(self._parts) else 0

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, idx):
        return self._parts[idx]

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __le__(self, other: "Partition") -> bool:
        return self._parts <= other._parts

    def __repr__(self) -> str:
        return f"Partition{self._parts}"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts)

    @property
    def is_strict(self) -> bool:
        """True when the parts are strictly decreasing."""
        return all(a > b for a, b in zip(self._parts, self._parts[1:]))

    def without_first(self) -> "Partition":
        return Partition(self._parts[1:], check=False)

    def conjugate(self) -> "Partition":
        """Transpose of the Ferrers diagram (column lengths)."""
        return Partition(_conjugate(self._parts), check=False)

    def hook_lengths(self) -> list[list[int]]:
        """Hook length of every cell, row by row."""
        conj = _conjugate(self._parts)
        return [
            [self._parts[r] - c + conj[c] - r - 1 for c in range(self._parts[r])]
            for r in range(len(self._parts))
        ]

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other fits inside self row by row."""
        return len(other) <= len(self._parts) and all(
            other[i] <= self._parts[i] for i in range(len(other))
        )

    def fits(self, rows: int, cols: int) -> bool:
        """True when the diagram fits in a rows x cols box."""
        return len(self._parts) <= rows and self.first <= cols


@cache
def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    cols = [0] * parts[0]
    for p in parts:
        for c in range(p):
            cols[c] += 1
    return tuple(cols)


def is_core(lam: Partition, c: int) -> bool:
    """True when no cell of lam has hook length exactly c."""
    return all(h != c for row in lam.hook_lengths() for h in row)


def _row_hooks_ok(offset: int, length: int, below: list[tuple[int, int]], k: int) -> bool:
    # Hooks of a left-shifted row, given the (offset, length) spans of the rows
    # beneath it.  Arm counts boxes to the right in the row, leg counts rows
    # below covering the same column.
    for col in range(offset + 1, offset + length + 1):
        arm = offset + length - col
        leg = sum(1 for off2, len2 in below if off2 < col <= off2 + len2)
        if arm + leg + 1 > k:
            return False
    return True


def core_from_bounded(lam: Partition, k: int) -> Partition:
    """The unique (k+1)-core obtained by sliding the rows of a k-bounded partition.

    Each row is shifted right until every one of its boxes has hook length at
    most k.  A row's hooks depend only on the rows below it, so a single
    bottom-to-top pass lands on the stable configuration; the final left
    offsets determine the core.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if lam.first > k:
        raise ValueError(f"{lam!r} is not {k}-bounded")
    parts = lam.parts
    n = len(parts)
    offsets = [0] * n
    for r in range(n - 1, -1, -1):
        below = [(offsets[s], parts[s]) for s in range(r + 1, n)]
        off = 0
        while not _row_hooks_ok(off, parts[r], below, k):
            off += 1
        offsets[r] = off
    rows = tuple(offsets[r] + parts[r] for r in range(n))
    core = Partition(rows, check=False)
    if any(a < b for a, b in zip(rows, rows[1:])) or not is_core(core, k + 1):
        raise RuntimeError(f"row sliding produced {rows}, which is not a {k + 1}-core")
    return core


def bounded_from_core(core: Partition, k: int) -> Partition:
    """Delete every box of a (k+1)-core with hook length above k+1 and left-justify.

    A (k+1)-core has no hook equal to k+1, so deleting hooks > k+1 is the same
    as keeping hooks <= k; the surviving boxes per row form a k-bounded
    partition.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if not is_core(core, k + 1):
        raise ValueError(f"{core!r} is not a {k + 1}-core")
    rows = tuple(sum(1 for h in row if h <= k + 1) for row in core.hook_lengths())
    out = Partition(rows, check=False)
    if any(a < b for a, b in zip(rows, rows[1:])) or out.first > k:
        raise RuntimeError(f"box removal from {core!r} produced {rows}")
    return out


@cache
def _k_conjugate(parts: tuple[int, ...], k: int) -> tuple[int, ...]:
    core = core_from_bounded(Partition(parts, check=False), k)
    return bounded_from_core(core.conjugate(), k).parts


def k_conjugate(lam: Partition, k: int) -> Partition:
    """k-conjugation: core lift, transpose, box removal."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if lam.first > k:
        raise ValueError(f"{lam!r} is not {k}-bounded")
    return Partition(_k_conjugate(lam.parts, k), check=False)


def vacancy(lam: Partition, k: int) -> int:
    """Largest i such that the complement of lam in (k^len(lam)) contains an
    i x (i-1) rectangle in its southeast corner; 0 for the empty partition."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if lam.first > k:
        raise ValueError(f"{lam!r} is not {k}-bounded")
    n = len(lam)
    best = 0
    for i in range(1, n + 1):
        if lam[n - i] <= k - i + 1:
            best = i
        else:
            # once the corner test fails it fails for every larger i
            break
    return best


def vacant_decompose(lam: Partition, k: int) -> tuple[int, int, Partition, Partition]:
    """Split an i-vacant partition into (i, j, dagger, ddagger).

    The top j rows each shed a full width of k-i+1 leaving ddagger inside an
    (i-1)^j box; the bottom i rows each shed one box leaving dagger inside a
    (k-i)^i box.  Inverse of vacant_compose.
    """
    if not lam:
        raise ValueError("the empty partition has no vacant decomposition")
    i = vacancy(lam, k)
    j = len(lam) - i
    ddagger = Partition((lam[r] - (k - i + 1) for r in range(j)), check=False)
    dagger = Partition((lam[j + s] - 1 for s in range(i)), check=False)
    return i, j, dagger, ddagger


def vacant_compose(i: int, j: int, dagger: Partition, ddagger: Partition, k: int) -> Partition:
    """Rebuild the unique i-vacant partition with i+j rows from its two pieces."""
    if i < 1 or j < 0:
        raise ValueError(f"need i >= 1 and j >= 0, got i={i}, j={j}")
    if i > k:
        raise ValueError(f"no i-vacant partition with i={i} fits a width-{k} box")
    if not dagger.fits(i, k - i):
        raise ValueError(f"dagger {dagger!r} does not fit in a {i} x {k - i} box")
    if not ddagger.fits(j, i - 1):
        raise ValueError(f"ddagger {ddagger!r} does not fit in a {j} x {i - 1} box")
    rows = [(k - i + 1) + ddagger.part(r) for r in range(j)]
    rows += [1 + dagger.part(s) for s in range(i)]
    return Partition(rows, check=False)


def shifted_decompose(lam: Partition, n: int) -> tuple[int, int, Partition]:
    """Split a nonempty strict partition inside the staircase (n, ..., 1) into
    (i, j, mu): an odd tail of i boxes on the first row, a staircase of j rows
    underneath, and a remainder mu inside an i^j box.  Inverse of shifted_compose."""
    if not lam:
        raise ValueError("the empty partition has no shifted decomposition")
    if not lam.is_strict:
        raise ValueError(f"{lam!r} is not strict")
    if lam.first > n:
        raise ValueError(f"{lam!r} does not fit inside the staircase of order {n}")
    ell = len(lam)
    j = ell if (lam.first - ell) % 2 == 1 else ell - 1
    i = lam.first - j
    mu = Partition((lam.part(r) - (j - r) for r in range(1, j + 1)), check=False)
    return i, j, mu


def shifted_compose(i: int, j: int, mu: Partition, n: int) -> Partition:
    """Rebuild the strict partition with first row i+j from (i, j, mu)."""
    if i < 1 or i % 2 == 0:
        raise ValueError(f"i must be a positive odd integer, got {i}")
    if j < 0 or i + j > n:
        raise ValueError(f"need 0 <= j and i + j <= n, got i={i}, j={j}, n={n}")
    if not mu.fits(j, i):
        raise ValueError(f"mu {mu!r} does not fit in a {j} x {i} box")
    rows = [i + j] + [mu.part(r - 1) + (j - r) for r in range(1, j + 1)]
    return Partition(rows, check=False)


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """Dominance order on partitions of equal size: every prefix sum of lam is
    at most the corresponding prefix sum of mu."""
    if lam.size != mu.size:
        raise ValueError(f"dominance compares partitions of equal size: {lam!r} vs {mu!r}")
    pa = pb = 0
    for idx in range(max(len(lam), len(mu))):
        pa += lam.part(idx)
        pb += mu.part(idx)
        if pa > pb:
            return False
    return True


# ---------------------------------------------------------------------------
# Enumeration.  Every family is emitted in increasing size, ties broken by
# lexicographically decreasing part sequences; this fixes golden-test output
# and the column order of echelon bases.


def _box_tuples(maxpart: int, rows: int, total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if rows == 0 or maxpart == 0:
        return
    for head in range(min(maxpart, total), 0, -1):
        if total - head > head * (rows - 1):
            continue
        for rest in _box_tuples(head, rows - 1, total - head):
            yield (head,) + rest


def _strict_tuples(maxpart: int, total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for head in range(min(maxpart, total), 0, -1):
        if total - head > head * (head - 1) // 2:
            continue
        for rest in _strict_tuples(head - 1, total - head):
            yield (head,) + rest


def partitions_in_box_of_size(ell: int, k: int, d: int) -> Iterator[Partition]:
    """Partitions of d with at most ell parts, each at most k."""
    for t in _box_tuples(k, ell, d):
        yield Partition(t, check=False)


def partitions_in_box(ell: int, k: int) -> Iterator[Partition]:
    """All partitions inside an ell x k box."""
    for d in range(ell * k + 1):
        yield from partitions_in_box_of_size(ell, k, d)


def k_bounded_partitions(k: int, d: int) -> Iterator[Partition]:
    """Partitions of d with every part at most k."""
    yield from partitions_in_box_of_size(d, k, d)


def strict_partitions_of_size(n: int, d: int) -> Iterator[Partition]:
    """Strict partitions of d with parts at most n."""
    for t in _strict_tuples(n, d):
        yield Partition(t, check=False)


def strict_partitions_in_triangle(n: int) -> Iterator[Partition]:
    """All strict partitions fitting inside the staircase (n, n-1, ..., 1)."""
    for d in range(n * (n + 1) // 2 + 1):
        yield from strict_partitions_of_size(n, d)


def vacant_partitions(ell: int, k: int, i: int) -> Iterator[Partition]:
    """Nonempty i-vacant partitions inside an ell x k box."""
    if i < 1:
        raise ValueError(f"vacancy classes are indexed by i >= 1, got {i}")
    for lam in partitions_in_box(ell, k):
        if lam and vacancy(lam, k) == i:
            yield lam


def candidate_partitions(ell: int, k: int, m: int) -> Iterator[Partition]:
    """Partitions with first part at most m whose k-conjugate fits the ell x k box.

    Computed by pushing the box family through k-conjugation (an involution on
    k-bounded partitions) and filtering on the first part.
    """
    if m > k:
        raise ValueError(f"m={m} exceeds k={k}: k-conjugation is undefined beyond k-bounded parts")
    for d in range(ell * k + 1):
        images = [k_conjugate(lam, k) for lam in partitions_in_box_of_size(ell, k, d)]
        yield from sorted((p for p in images if p.first <= m), reverse=True)
