"""Integer partitions, bounded-part enumeration, and the greedy construction
of the smallest partition of n from which every partition of n with at most
k parts can be assembled by grouping parts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class Partition:
    """Non-increasing tuple of positive integers.

    `weight` is the sum of the parts, `size` the number of parts. Instances
    are immutable and validated once at construction; callers may rely on
    sortedness everywhere else.
    """

    parts: tuple[int, ...]
    weight: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))
        object.__setattr__(self, "size", len(parts))

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.parts)

    def suffix(self, start: int) -> "Partition":
        """Partition formed by the parts from 1-based position `start` on."""
        if not 1 <= start <= self.size:
            raise ValueError(f"start must be in 1..{self.size}, got {start}")
        return Partition(self.parts[start - 1:])


def make_partition(values: Iterable[int]) -> Partition:
    """Build a Partition from values in any order (sorted non-increasing)."""
    vals = list(values)
    if not vals:
        raise ValueError("a partition needs at least one part")
    return Partition(tuple(sorted(vals, reverse=True)))


@dataclass(frozen=True)
class GenerationPlan:
    """Witness that `source` can be grouped to assemble `target`.

    `groups[i]` lists the source part indices (0-based) whose values sum to
    `target.parts[i]`; the groups are disjoint and cover every source index.
    """

    source: Partition
    target: Partition
    groups: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        """Recompute the plan invariants from scratch; raise on violation."""
        if len(self.groups) != self.target.size:
            raise ValueError(
                f"expected {self.target.size} groups, got {len(self.groups)}"
            )
        used: list[int] = []
        for i, group in enumerate(self.groups):
            total = sum(self.source.parts[j] for j in group)
            if total != self.target.parts[i]:
                raise ValueError(
                    f"group {i} sums to {total}, target part is {self.target.parts[i]}"
                )
            used.extend(group)
        if sorted(used) != list(range(self.source.size)):
            raise ValueError("groups must cover every source index exactly once")

    def group_values(self) -> tuple[tuple[int, ...], ...]:
        """Part values per group, in placement order."""
        return tuple(
            tuple(self.source.parts[j] for j in group) for group in self.groups
        )


class GreedyStep(NamedTuple):
    part_index: int
    part: int
    target_index: int
    remaining: tuple[int, ...]


@dataclass(frozen=True)
class GreedyTrace:
    """Step log of a greedy placement run.

    `remaining` holds the per-target capacities after the last completed
    step; `failed_at` is the 0-based source index that fit nowhere, or None.
    """

    steps: tuple[GreedyStep, ...]
    failed_at: int | None
    remaining: tuple[int, ...]


@dataclass(frozen=True)
class GreedyResult:
    plan: GenerationPlan | None
    trace: GreedyTrace

    @property
    def ok(self) -> bool:
        return self.plan is not None


def greedy_generate(mu: Partition, gamma: Partition) -> GreedyResult:
    """Place mu's parts, largest first, onto gamma's parts greedily.

    Each part goes to the target that still has room for it and has the
    largest original value; ties break by largest remaining capacity, then
    by smallest target index. Returns a plan on success, or a trace whose
    `failed_at` marks the first part that fit nowhere.
    """
    if mu.weight != gamma.weight:
        raise ValueError(
            f"weight mismatch: source weighs {mu.weight}, target weighs {gamma.weight}"
        )
    remaining = list(gamma.parts)
    groups: list[list[int]] = [[] for _ in gamma.parts]
    steps: list[GreedyStep] = []
    for j, part in enumerate(mu.parts):
        best = -1
        for i, room in enumerate(remaining):
            if room < part:
                continue
            if best < 0 or (gamma.parts[i], room) > (gamma.parts[best], remaining[best]):
                best = i
        if best < 0:
            trace = GreedyTrace(tuple(steps), j, tuple(remaining))
            return GreedyResult(None, trace)
        remaining[best] -= part
        groups[best].append(j)
        steps.append(GreedyStep(j, part, best, tuple(remaining)))
    plan = GenerationPlan(mu, gamma, tuple(tuple(g) for g in groups))
    trace = GreedyTrace(tuple(steps), None, tuple(remaining))
    return GreedyResult(plan, trace)


def minimal_generator(n: int, k: int) -> Partition:
    """Smallest partition of n that can assemble every partition of n with
    at most k parts: repeatedly take the ceiling of (residual / k)."""
    _check_positive("n", n)
    _check_positive("k", k)
    parts = []
    residual = n
    while residual:
        p = _ceil_div(residual, k)
        parts.append(p)
        residual -= p
    return Partition(tuple(parts))


def generator_size(n: int, k: int) -> int:
    """Number of parts minimal_generator(n, k) produces, via the size
    recurrence alone (no partition materialized)."""
    _check_positive("n", n)
    _check_positive("k", k)
    size = 0
    residual = n
    while residual:
        residual -= _ceil_div(residual, k)
        size += 1
    return size


def size_upper_bound(n: int, k: int) -> int:
    """Upper bound ceil(log_{k/(k-1)}(n)) + 1 on generator_size(n, k).

    Computed by exact integer power iteration: the smallest t with
    k**t >= n * (k-1)**t, plus one. Floating-point logs would misround at
    exact powers (e.g. n=16, k=2). For k = 1 the bound is 1 by convention.
    """
    _check_positive("n", n)
    _check_positive("k", k)
    if k == 1:
        return 1
    t = 0
    pow_k = 1
    pow_k1 = 1
    while pow_k < n * pow_k1:
        t += 1
        pow_k *= k
        pow_k1 *= k - 1
    return t + 1


def size_row(n_max: int, k: int) -> list[int]:
    """generator_size(n, k) for n = 0..n_max in one dynamic-programming pass."""
    _check_positive("n_max", n_max)
    _check_positive("k", k)
    row = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        row[n] = 1 + row[n - _ceil_div(n, k)]
    return row


@dataclass(frozen=True)
class SizeTable:
    """Grid of generator sizes for n = 1..n_max, k = 1..k_max.

    `entries[k-1][n-1]` equals generator_size(n, k).
    """

    n_max: int
    k_max: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, n: int, k: int) -> int:
        if not (1 <= n <= self.n_max and 1 <= k <= self.k_max):
            raise ValueError(f"cell (n={n}, k={k}) outside table bounds")
        return self.entries[k - 1][n - 1]


def build_size_table(n_max: int, k_max: int) -> SizeTable:
    _check_positive("n_max", n_max)
    _check_positive("k_max", k_max)
    rows = tuple(tuple(size_row(n_max, k)[1:]) for k in range(1, k_max + 1))
    return SizeTable(n_max, k_max, rows)


def enumerate_partitions(n: int, max_parts: int) -> Iterator[Partition]:
    """Every partition of n with at most max_parts parts, exactly once, in
    descending lexicographic order of the part tuples."""
    _check_positive("n", n)
    _check_positive("max_parts", max_parts)
    for parts in _bounded_partitions(n, max_parts, n):
        yield Partition(parts)


def _bounded_partitions(
    remaining: int, slots: int, cap: int
) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    if slots == 0:
        return
    low = _ceil_div(remaining, slots)
    for first in range(min(remaining, cap), low - 1, -1):
        for rest in _bounded_partitions(remaining - first, slots - 1, first):
            yield (first,) + rest


def exact_size_partitions(n: int, size: int) -> Iterator[Partition]:
    """Every partition of n with exactly `size` parts, descending lex order."""
    _check_positive("n", n)
    _check_positive("size", size)
    for parts in _exact_partitions(n, size, n):
        yield Partition(parts)


def _exact_partitions(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if remaining == 0:
            yield ()
        return
    low = _ceil_div(remaining, slots)
    high = min(cap, remaining - (slots - 1))
    for first in range(high, low - 1, -1):
        for rest in _exact_partitions(remaining - first, slots - 1, first):
            yield (first,) + rest


def count_partitions(n: int, max_parts: int) -> int:
    """Number of partitions of n with at most max_parts parts.

    Uses the two-variable recurrence p(n, m) = p(n-m, m) + p(n, m-1) on
    largest-part-bounded partitions, which agree in count with part-count
    bounded ones by conjugation. Independent of enumerate_partitions.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    _check_positive("max_parts", max_parts)
    row = [1] + [0] * n
    for m in range(1, max_parts + 1):
        for total in range(m, n + 1):
            row[total] += row[total - m]
    return row[n]
