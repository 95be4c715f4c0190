"""Integer partitions and Young diagrams.

A partition is a weakly decreasing tuple of positive integers.  Rows and
columns are 1-based throughout, cell (i, j) meaning row i, column j.  The
alpha-deformed content of a cell is (j - 1) - (i - 1)/alpha, so a row
partition has contents 0, 1, ..., n-1 at every alpha.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence


class Partition:
    """Immutable integer partition."""

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be weakly decreasing")
        if parts and parts[-1] <= 0:
            raise ValueError("parts must be positive")
        self.parts = parts

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse the CLI spelling: "3,2,1"; "" and "0" denote the empty shape."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}") from exc
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part accessor; rows past the last are 0."""
        if i < 1:
            raise ValueError("row index is 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def multiplicity(self, v: int) -> int:
        return sum(1 for p in self.parts if p == v)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = self.parts[0]
        return Partition(
            tuple(sum(1 for p in self.parts if p >= j) for j in range(1, cols + 1))
        )

    def addable_rows(self) -> tuple[int, ...]:
        """Rows where one cell can be appended and the shape stays a partition."""
        rows = []
        for i in range(1, len(self.parts) + 2):
            if i == 1 or self.part(i - 1) > self.part(i):
                rows.append(i)
        return tuple(rows)

    def removable_rows(self) -> tuple[int, ...]:
        rows = []
        for i in range(1, len(self.parts) + 1):
            if self.part(i) > self.part(i + 1):
                rows.append(i)
        return tuple(rows)

    def add_cell(self, row: int) -> "Partition":
        if row not in self.addable_rows():
            raise ValueError(f"row {row} is not addable on {self}")
        parts = list(self.parts)
        if row == len(parts) + 1:
            parts.append(1)
        else:
            parts[row - 1] += 1
        return Partition(parts)

    def remove_cell(self, row: int) -> "Partition":
        if row not in self.removable_rows():
            raise ValueError(f"row {row} is not removable on {self}")
        parts = list(self.parts)
        parts[row - 1] -= 1
        if parts[row - 1] == 0:
            parts.pop()
        return Partition(parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(("Partition", self.parts))

    def __lt__(self, other: "Partition"):
        return (self.weight, self.parts) < (other.weight, other.parts)

    def __str__(self):
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __repr__(self):
        return f"Partition({self.parts})"


EMPTY = Partition()


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse-lexicographic order, as bare tuples."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lex, largest first part first."""
    return tuple(Partition(p) for p in partitions_of(n))


def partitions_upto(n: int) -> list[Partition]:
    """All partitions of weight 0..n, by weight then reverse-lex."""
    out: list[Partition] = []
    for m in range(n + 1):
        out.extend(enumerate_partitions(m))
    return out


def z_of(mu: Partition) -> int:
    """Centralizer order: product over distinct parts i of i^m_i * m_i!."""
    z = 1
    for v, m in mu.multiplicities().items():
        f = 1
        for t in range(1, m + 1):
            f *= t
        z *= v**m * f
    return z


def check_alpha(alpha: Fraction) -> Fraction:
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return alpha


def content_alphabet(la: Partition, alpha: Fraction) -> tuple[Fraction, ...]:
    """Multiset of alpha-contents (j-1) - (i-1)/alpha, row-major order."""
    alpha = check_alpha(alpha)
    out = []
    for i, p in enumerate(la.parts, start=1):
        shift = Fraction(i - 1, 1) / alpha
        for j in range(1, p + 1):
            out.append(Fraction(j - 1) - shift)
    return tuple(out)
