"""Finite partially ordered sets given by their cover relation.

A poset is built from element labels plus cover pairs (lower, upper).  The
constructor validates labels, rejects cycles, materializes the full order as
per-element bitmasks, and recomputes the transitive reduction so redundant
input pairs are dropped.  Instances are immutable and hashable; element order
is the input order and every reported witness or enumeration follows it.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import CycleDetected, DuplicateLabel, SizeLimit, UnknownLabel

DEFAULT_SIZE_LIMIT = 64


class Poset:
    """Immutable finite poset with bitmask order relation."""

    __slots__ = (
        "elements",
        "covers",
        "_index",
        "_up",
        "_down",
        "_upper",
        "_lower",
        "_topo",
        "_hash",
    )

    def __init__(self, elements: Iterable[str], covers: Iterable[tuple[str, str]]):
        self.elements: tuple[str, ...] = tuple(elements)
        index: dict[str, int] = {}
        for label in self.elements:
            if not isinstance(label, str):
                raise TypeError(f"labels must be strings, got {type(label).__name__}")
            if label in index:
                raise DuplicateLabel(label)
            index[label] = len(index)
        self._index = index

        n = len(self.elements)
        raw_up: list[set[int]] = [set() for _ in range(n)]
        for lo, hi in covers:
            i, j = self._resolve(lo), self._resolve(hi)
            if i == j:
                raise CycleDetected((self.elements[i], self.elements[i]))
            raw_up[i].add(j)

        self._topo = _toposort(self.elements, raw_up)

        # Strict up-sets by accumulating over the reversed topological order.
        strict_up = [0] * n
        for i in reversed(self._topo):
            acc = 0
            for j in raw_up[i]:
                acc |= strict_up[j] | (1 << j)
            strict_up[i] = acc

        self._up = tuple(strict_up[i] | (1 << i) for i in range(n))
        down = [0] * n
        for i in range(n):
            bit = 1 << i
            for j in range(n):
                if self._up[j] & bit:
                    down[i] |= 1 << j
        self._down = tuple(down)

        # Transitive reduction: j covers i iff j is strictly above i but not
        # reachable through any other element strictly above i.
        upper: list[tuple[int, ...]] = []
        for i in range(n):
            via = 0
            rest = strict_up[i]
            while rest:
                k = rest & -rest
                via |= strict_up[k.bit_length() - 1]
                rest ^= k
            upper.append(_bits(strict_up[i] & ~via))
        self._upper = tuple(upper)
        lower: list[list[int]] = [[] for _ in range(n)]
        for i in range(n):
            for j in self._upper[i]:
                lower[j].append(i)
        self._lower = tuple(tuple(v) for v in lower)
        self.covers: tuple[tuple[str, str], ...] = tuple(
            (self.elements[i], self.elements[j])
            for i in range(n)
            for j in self._upper[i]
        )
        self._hash = hash((self.elements, frozenset(self.covers)))

    @classmethod
    def from_covers(cls, elements: Iterable[str], covers: Iterable[tuple[str, str]]) -> "Poset":
        """Build a poset from labels and (lower, upper) cover pairs."""
        return cls(elements, covers)

    def _resolve(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and set(self.covers) == set(other.covers)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"

    def leq(self, a: str, b: str) -> bool:
        """True when a <= b in the order."""
        return bool(self._up[self._resolve(a)] >> self._resolve(b) & 1)

    def lt(self, a: str, b: str) -> bool:
        """True when a < b strictly."""
        return a != b and self.leq(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def lower_covers(self, x: str) -> tuple[str, ...]:
        """Elements covered by x, in input order."""
        return tuple(self.elements[j] for j in self._lower[self._resolve(x)])

    def upper_covers(self, x: str) -> tuple[str, ...]:
        """Elements covering x, in input order."""
        return tuple(self.elements[j] for j in self._upper[self._resolve(x)])

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(
            self.elements[i] for i in range(len(self.elements)) if not self._lower[i]
        )

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(
            self.elements[i] for i in range(len(self.elements)) if not self._upper[i]
        )

    def has_unique_minimum(self) -> bool:
        return len(self.minimal_elements()) == 1

    def has_unique_maximum(self) -> bool:
        return len(self.maximal_elements()) == 1

    def downset(self, x: str) -> tuple[str, ...]:
        """All elements <= x, in input order."""
        return tuple(self.elements[j] for j in _bits(self._down[self._resolve(x)]))

    def upset(self, x: str) -> tuple[str, ...]:
        """All elements >= x, in input order."""
        return tuple(self.elements[j] for j in _bits(self._up[self._resolve(x)]))

    def maximal_chains(self, size_limit: int = DEFAULT_SIZE_LIMIT) -> list[tuple[str, ...]]:
        """All maximal chains as label tuples, lexicographic in input order.

        Refuses posets larger than size_limit since the count can be
        exponential in the number of elements.
        """
        n = len(self.elements)
        if n > size_limit:
            raise SizeLimit("maximal_chains", size_limit, n)
        out: list[tuple[str, ...]] = []
        stack: list[int] = []

        def walk(i: int) -> None:
            stack.append(i)
            if not self._upper[i]:
                out.append(tuple(self.elements[k] for k in stack))
            else:
                for j in self._upper[i]:
                    walk(j)
            stack.pop()

        for i in range(n):
            if not self._lower[i]:
                walk(i)
        return out

    def maximal_chain_count_through(self, x: str) -> int:
        """Number of maximal chains containing x, counted by dynamic programming."""
        i = self._resolve(x)
        down = self._saturated_counts(self._lower)
        up = self._saturated_counts(self._upper)
        return down[i] * up[i]

    def maximal_chain_count(self) -> int:
        """Total number of maximal chains."""
        up = self._saturated_counts(self._upper)
        return sum(up[i] for i in range(len(self.elements)) if not self._lower[i])

    def _saturated_counts(self, step: tuple[tuple[int, ...], ...]) -> list[int]:
        # counts[i] = saturated paths from i to an endpoint of the step relation
        counts = [0] * len(self.elements)
        order = self._topo if step is self._lower else tuple(reversed(self._topo))
        for i in order:
            counts[i] = sum(counts[j] for j in step[i]) or 1
        return counts

    def is_pure(self) -> bool:
        """True when every maximal chain has the same cardinality."""
        n = len(self.elements)
        if n == 0:
            return True
        down_min, down_max = self._extremal_depths(self._lower, self._topo)
        up_min, up_max = self._extremal_depths(self._upper, tuple(reversed(self._topo)))
        sizes = {down_min[i] + up_min[i] for i in range(n)}
        if len(sizes) > 1:
            return False
        return all(
            down_min[i] + up_min[i] == down_max[i] + up_max[i] for i in range(n)
        )

    def _extremal_depths(
        self, step: tuple[tuple[int, ...], ...], order: tuple[int, ...]
    ) -> tuple[list[int], list[int]]:
        lo = [0] * len(self.elements)
        hi = [0] * len(self.elements)
        for i in order:
            if step[i]:
                lo[i] = 1 + min(lo[j] for j in step[i])
                hi[i] = 1 + max(hi[j] for j in step[i])
        return lo, hi

    def heights(self) -> dict[str, int]:
        """Longest chain strictly below each element, as a label map."""
        _, down_max = self._extremal_depths(self._lower, self._topo)
        return {self.elements[i]: down_max[i] for i in range(len(self.elements))}

    def is_chain(self, seq: Sequence[str]) -> bool:
        """Validate a chain: known labels, no repeats, strictly increasing."""
        seen: set[str] = set()
        for label in seq:
            self._resolve(label)
            if label in seen:
                return False
            seen.add(label)
        return all(self.lt(seq[k], seq[k + 1]) for k in range(len(seq) - 1))


def _toposort(elements: tuple[str, ...], raw_up: list[set[int]]) -> tuple[int, ...]:
    """Kahn's algorithm; raises CycleDetected with an explicit cycle."""
    n = len(elements)
    indeg = [0] * n
    for i in range(n):
        for j in raw_up[i]:
            indeg[j] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    order: list[int] = []
    while queue:
        i = queue.pop()
        order.append(i)
        for j in raw_up[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    if len(order) < n:
        stuck = [i for i in range(n) if indeg[i] > 0]
        raise CycleDetected(_find_cycle(elements, raw_up, stuck))
    return tuple(order)


def _find_cycle(
    elements: tuple[str, ...], raw_up: list[set[int]], stuck: list[int]
) -> tuple[str, ...]:
    # Walk forward inside the stuck set until a vertex repeats.
    stuck_set = set(stuck)
    path: list[int] = []
    pos: dict[int, int] = {}
    i = stuck[0]
    while i not in pos:
        pos[i] = len(path)
        path.append(i)
        i = next(j for j in sorted(raw_up[i]) if j in stuck_set)
    cycle = path[pos[i] :] + [i]
    return tuple(elements[k] for k in cycle)


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)
