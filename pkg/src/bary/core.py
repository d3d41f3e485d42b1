"""Partitions of an integer into powers of a basis, and their dynamics.

A b-ary partition of n is a tuple ``(p_0, ..., p_{k-1})`` of nonnegative
integers with ``sum(p_i * b**i) == n``.  Parts are stored little-endian
(lowest power first) without trailing zeros, so the partition of 0 is the
empty tuple.

Firing at position i moves b units from part i to one unit of part i+1.
Starting from the one-part partition ``(n)``, firings reach every b-ary
partition of n; the number of firings done at each position does not depend
on the path and is recorded by the shot vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    FireUnderflow,
    IncPreconditionViolated,
    InconsistentValue,
    InvalidBasis,
    InvalidShotVector,
    PositionOutOfRange,
    UnfireUnderflow,
)


def check_basis(b: int) -> int:
    if not isinstance(b, int) or isinstance(b, bool) or b < 2:
        raise InvalidBasis(f"basis must be an integer >= 2, got {b!r}")
    return b


def trim(parts: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zero parts."""
    k = len(parts)
    while k and parts[k - 1] == 0:
        k -= 1
    return tuple(parts[:k])


def _trimmed(parts: tuple[int, ...]) -> tuple[int, ...]:
    if parts and parts[-1] == 0:
        return trim(parts)
    return parts


@dataclass(frozen=True, slots=True)
class Partition:
    parts: tuple[int, ...]
    b: int

    def __post_init__(self):
        check_basis(self.b)
        parts = tuple(self.parts)
        for x in parts:
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"parts must be nonnegative integers: {parts!r}")
        object.__setattr__(self, "parts", trim(parts))

    @classmethod
    def _make(cls, parts: tuple[int, ...], b: int) -> Partition:
        # trusted constructor for hot loops: parts already normalized
        p = object.__new__(cls)
        object.__setattr__(p, "parts", parts)
        object.__setattr__(p, "b", b)
        return p

    @classmethod
    def parse(cls, text: str, b: int) -> Partition:
        """Read the ``"p0,p1,..."`` syntax used on the command line."""
        text = text.strip().strip("()")
        if not text:
            return cls((), b)
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
        return cls(parts, b)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        # convention p_j = 0 beyond the stored length
        if i < len(self.parts):
            return self.parts[i]
        return 0

    def __iter__(self):
        return iter(self.parts)

    @property
    def value(self) -> int:
        return value(self)

    def text(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def __str__(self) -> str:
        return f"({self.text()})"


@dataclass(frozen=True, slots=True)
class ShotVector:
    """Firing counts per position.  Entries past the end are zero."""

    shots: tuple[int, ...]

    def __post_init__(self):
        shots = tuple(self.shots)
        if any(s < 0 for s in shots):
            raise InvalidShotVector(f"negative shot count in {shots!r}")
        object.__setattr__(self, "shots", trim(shots))

    def __len__(self) -> int:
        return len(self.shots)

    def __getitem__(self, i: int) -> int:
        return self.shots[i] if i < len(self.shots) else 0

    def _padded(self, other: ShotVector) -> Iterable[tuple[int, int]]:
        m = max(len(self.shots), len(other.shots))
        return ((self[i], other[i]) for i in range(m))

    def dominates(self, other: ShotVector) -> bool:
        """True when every entry is >= the matching entry of ``other``."""
        return all(x >= y for x, y in self._padded(other))

    def minimum(self, other: ShotVector) -> ShotVector:
        return ShotVector(tuple(min(x, y) for x, y in self._padded(other)))

    def maximum(self, other: ShotVector) -> ShotVector:
        return ShotVector(tuple(max(x, y) for x, y in self._padded(other)))

    def text(self) -> str:
        return ",".join(map(str, self.shots)) if self.shots else "0"


def value(p: Partition) -> int:
    b = p.b
    total = 0
    for x in reversed(p.parts):
        total = total * b + x
    return total


def canonical(n: int, b: int) -> Partition:
    """The usual base-b digits of n."""
    check_basis(b)
    if n < 0:
        raise ValueError("n must be nonnegative")
    digits = []
    while n:
        n, d = divmod(n, b)
        digits.append(d)
    return Partition._make(tuple(digits), b)


def top(n: int, b: int) -> Partition:
    """The one-part partition ``(n)``, maximum of the order."""
    check_basis(b)
    return Partition._make((n,) if n else (), b)


# Tuple-level kernels.  The public functions below validate and wrap them.

def fire_parts(parts: tuple[int, ...], i: int, b: int) -> tuple[int, ...]:
    if i == len(parts) - 1:
        return _trimmed(parts[:i] + (parts[i] - b, 1))
    return _trimmed(parts[:i] + (parts[i] - b, parts[i + 1] + 1) + parts[i + 2:])


def successor_parts(parts: tuple[int, ...], b: int):
    """Yield ``(i, fire(parts, i))`` for every fireable i, in increasing i."""
    for i, x in enumerate(parts):
        if x >= b:
            yield i, fire_parts(parts, i, b)


def inc_parts(parts: tuple[int, ...], i: int) -> tuple[int, ...]:
    if i == len(parts):
        return (0,) * i + (1,)
    return (0,) * i + (parts[i] + 1,) + parts[i + 1:]


def leading_parts(parts: tuple[int, ...], b: int) -> int:
    top_digit = b - 1
    k = 0
    for x in parts:
        if x != top_digit:
            break
        k += 1
    return k


def fire(p: Partition, i: int) -> Partition:
    if i < 0 or i >= len(p.parts):
        raise PositionOutOfRange(f"cannot fire at {i} in {p}")
    if p.parts[i] < p.b:
        raise FireUnderflow(f"part {i} of {p} is below {p.b}")
    return Partition._make(fire_parts(p.parts, i, p.b), p.b)


def unfire(p: Partition, i: int) -> Partition:
    """Undo a firing at i-1: part i loses one unit, part i-1 gains b."""
    if i < 1 or i >= len(p.parts):
        raise PositionOutOfRange(f"cannot unfire at {i} in {p}")
    if p.parts[i] < 1:
        raise UnfireUnderflow(f"part {i} of {p} is zero")
    parts = list(p.parts)
    parts[i - 1] += p.b
    parts[i] -= 1
    return Partition._make(trim(parts), p.b)


def successors(p: Partition) -> set[Partition]:
    return {Partition._make(q, p.b) for _, q in successor_parts(p.parts, p.b)}


def predecessors(p: Partition) -> set[Partition]:
    return {unfire(p, i) for i in range(1, len(p.parts)) if p.parts[i] >= 1}


def is_canonical(p: Partition) -> bool:
    return all(x < p.b for x in p.parts)


def shot_vector(p: Partition, n: int) -> ShotVector:
    """Number of firings at each position on any path from ``(n)`` to ``p``."""
    if value(p) != n:
        raise InconsistentValue(f"{p} has value {value(p)}, expected {n}")
    b = p.b
    shots = []
    carry = n
    for i, x in enumerate(p.parts):
        q, r = divmod(carry - x, b)
        if r or q < 0:
            raise InconsistentValue(f"{p} is not reachable from ({n}) at position {i}")
        shots.append(q)
        carry = q
    # value(p) == n forces the last shot to be zero
    return ShotVector(tuple(shots))


def partition_from_shots(n: int, s: ShotVector | Sequence[int], b: int) -> Partition:
    check_basis(b)
    shots = s.shots if isinstance(s, ShotVector) else tuple(s)
    parts = []
    prev = n
    for i, si in enumerate(shots):
        x = prev - b * si
        if x < 0 or si < 0:
            raise InvalidShotVector(f"shot vector {shots!r} gives negative part {i} for n={n}")
        parts.append(x)
        prev = si
    parts.append(prev)
    return Partition._make(trim(parts), b)


def leading(p: Partition) -> int:
    """Length of the prefix made of parts equal to b-1."""
    return leading_parts(p.parts, p.b)


def inc(p: Partition, i: int) -> Partition:
    """Odometer step: zero the first i parts (all b-1) and add one at part i."""
    if i < 0 or i > len(p.parts) or leading(p) < i:
        raise IncPreconditionViolated(f"the first {i} parts of {p} are not all {p.b - 1}")
    return Partition._make(inc_parts(p.parts, i), p.b)
