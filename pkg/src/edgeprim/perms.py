"""Permutations of {0, ..., n-1}.

A permutation is stored as a tuple of images: ``p.images[x]`` is the image
of ``x``.  Products are read left to right: ``compose(p, q)`` applies ``p``
first, then ``q``.  All permutations are immutable and hashable.

The private tuple-level helpers (``_compose_t`` and friends) are used by the
group machinery to avoid constructing wrapper objects in hot loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


def _compose_t(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[x] for x in p)


def _inverse_t(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _identity_t(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _is_identity_t(p: tuple[int, ...]) -> bool:
    return all(i == x for i, x in enumerate(p))


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., n-1}, given by its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation must have positive degree")
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise ValueError(f"images {images!r} are not a bijection on 0..{n - 1}")
            seen[x] = True

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return Permutation(_inverse_t(self.images))

    def is_identity(self) -> bool:
        return _is_identity_t(self.images)

    def order(self) -> int:
        cycles = self.cycles()
        return math.lcm(*(len(c) for c in cycles)) if cycles else 1

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cycle = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return tuple(out)

    def moved_points(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.images) if i != x)

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return f"Permutation(identity, degree={self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
        return f"Permutation({text}, degree={self.degree})"


def identity(n: int) -> Permutation:
    return Permutation(_identity_t(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation(_compose_t(p.images, q.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def from_cycles(n: int, cycles: Iterable[Iterable[int]]) -> Permutation:
    """Build a permutation of degree n from disjoint cycles."""
    images = list(range(n))
    touched = set()
    for cycle in cycles:
        cycle = list(cycle)
        for x in cycle:
            if not 0 <= x < n:
                raise ValueError(f"point {x} out of range for degree {n}")
            if x in touched:
                raise ValueError(f"point {x} appears in more than one cycle")
            touched.add(x)
        for a, b in zip(cycle, cycle[1:]):
            images[a] = b
        if cycle:
            images[cycle[-1]] = cycle[0]
    return Permutation(tuple(images))
