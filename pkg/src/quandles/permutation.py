"""Permutations of {1..n} and concrete finite permutation groups."""

from __future__ import annotations

import itertools
import re
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from math import lcm

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection of {1, .., n}, stored as the tuple of images of 1, .., n.

    Instances are immutable and ordered by their image tuple, so "smallest
    witness" always means lexicographically least image array.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= n:
                    raise ValueError(f"cycle entry {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"symbol {x} appears twice")
                seen.add(x)
            for a, b in zip(cycle, cycle[1:]):
                images[a - 1] = b
            if len(cycle) > 1:
                images[cycle[-1] - 1] = cycle[0]
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse disjoint-cycle notation such as "(1 5 3)(2 4)" or "()"."""
        normalized = text.strip().replace(",", " ")
        if not re.fullmatch(r"(\([0-9 ]*\)\s*)+", normalized):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(normalized):
            entries = [int(tok) for tok in body.split()]
            if entries:
                cycles.append(entries)
        return cls.from_cycles(n, cycles)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """Return self∘other, the permutation applying `other` first."""
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        img = self.images
        return Permutation(img[x - 1] for x in other.images)

    def inverse(self) -> Permutation:
        out = [0] * self.degree
        for i, v in enumerate(self.images):
            out[v - 1] = i + 1
        return Permutation(out)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its least symbol, fixed points omitted."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths including fixed points, descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation({self.images!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __le__(self, other: Permutation) -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of {1..n} in lexicographic order of image arrays."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


class PermGroup:
    """A set of permutations of one degree, closed under composition and inverse."""

    __slots__ = ("degree", "_elements", "_sorted")

    def __init__(self, degree: int, elements: Iterable[Permutation], *, _trusted: bool = False):
        elems = frozenset(elements)
        if not elems:
            elems = frozenset([Permutation.identity(degree)])
        for g in elems:
            if g.degree != degree:
                raise ValueError("mixed degrees in group")
        if not _trusted:
            for g in elems:
                if g.inverse() not in elems:
                    raise ValueError(f"not closed under inverse: {g}")
                for h in elems:
                    if g.compose(h) not in elems:
                        raise ValueError(f"not closed under composition: {g} * {h}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_elements", elems)
        object.__setattr__(self, "_sorted", None)

    def __setattr__(self, name, value):
        if name == "_sorted":
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("PermGroup is immutable")

    @classmethod
    def generate(cls, generators: Iterable[Permutation], degree: int | None = None) -> PermGroup:
        """Breadth-first closure of the generators (inverses arise automatically)."""
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for the empty generating set")
            degree = gens[0].degree
        elements = {Permutation.identity(degree)}
        frontier = [g for g in gens if g not in elements]
        elements.update(frontier)
        while frontier:
            new = []
            for g in frontier:
                for h in gens:
                    prod = h.compose(g)
                    if prod not in elements:
                        elements.add(prod)
                        new.append(prod)
            frontier = new
        return cls(degree, elements, _trusted=True)

    @classmethod
    def from_elements(cls, elements: Iterable[Permutation]) -> PermGroup:
        """Build from an explicit element list, verifying closure."""
        elems = list(elements)
        if not elems:
            raise ValueError("empty element list")
        return cls(elems[0].degree, elems)

    @property
    def order(self) -> int:
        return len(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements())

    def elements(self) -> tuple[Permutation, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._elements))
        return self._sorted

    def generators(self) -> tuple[Permutation, ...]:
        """A deterministic generating sequence (greedy over sorted elements)."""
        gens: list[Permutation] = []
        span = {Permutation.identity(self.degree)}
        for g in self.elements():
            if g not in span:
                gens.append(g)
                span = set(PermGroup.generate(gens, self.degree)._elements)
                if len(span) == len(self._elements):
                    break
        return tuple(gens)

    def is_abelian(self) -> bool:
        gens = self.generators()
        return all(
            a.compose(b) == b.compose(a) for a, b in itertools.combinations(gens, 2)
        )

    def center_order(self) -> int:
        gens = self.generators()
        return sum(
            1 for z in self._elements if all(z.compose(g) == g.compose(z) for g in gens)
        )

    def element_order_histogram(self) -> tuple[tuple[int, int], ...]:
        counts = Counter(g.order() for g in self._elements)
        return tuple(sorted(counts.items()))

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbit partition of {1..degree}, blocks sorted by least element."""
        parent = list(range(self.degree + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators():
            for i in range(1, self.degree + 1):
                a, b = find(i), find(g(i))
                if a != b:
                    parent[max(a, b)] = min(a, b)
        blocks: dict[int, list[int]] = {}
        for i in range(1, self.degree + 1):
            blocks.setdefault(find(i), []).append(i)
        return tuple(tuple(blocks[r]) for r in sorted(blocks))

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"
