"""Exact decision procedures for the generation relation, plus exhaustive
searches that independently confirm the greedy construction's feasibility
and minimality at desk scale."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .partitions import (
    GenerationPlan,
    Partition,
    _ceil_div,
    enumerate_partitions,
    exact_size_partitions,
    greedy_generate,
)

MODE_GREEDY = "greedy"
MODE_EXACT = "exact"


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out before the search could decide."""


class InfeasibleGeneratorError(ValueError):
    """A partition assumed to generate all bounded-part partitions does not."""


@dataclass
class SearchStats:
    """Node counter shared across the exact searches of one operation.

    When `max_nodes` is set, exceeding it raises SearchBudgetExceeded: the
    outcome is then inconclusive, never a silent pass or fail.
    """

    nodes: int = 0
    max_nodes: int | None = None

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SearchBudgetExceeded(
                f"search exceeded the {self.max_nodes}-node budget"
            )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one candidate against every bounded-part target."""

    subject: Partition
    n: int
    k: int
    ok: bool
    counterexample: Partition | None
    mode: str
    partitions_checked: int
    nodes_expanded: int


def generates_exact(
    mu: Partition, lam: Partition, stats: SearchStats | None = None
) -> GenerationPlan | None:
    """Complete backtracking search for a grouping of mu's parts realizing lam.

    Returns a valid plan iff one exists. Parts are assigned largest first;
    branches are cut when a target cannot be filled exactly any more, and
    symmetric branches (equal part values, equal remaining capacities) are
    explored once.
    """
    if mu.weight != lam.weight:
        raise ValueError(
            f"weight mismatch: source weighs {mu.weight}, target weighs {lam.weight}"
        )
    if stats is None:
        stats = SearchStats()
    parts = mu.parts
    last = len(parts) - 1
    smallest = parts[last]
    remaining = list(lam.parts)
    target_count = len(remaining)
    if remaining[-1] < smallest:
        return None
    groups: list[list[int]] = [[] for _ in range(target_count)]
    choice = [0] * len(parts)

    def place(j: int) -> bool:
        if j > last:
            return True
        stats.tick()
        part = parts[j]
        start = choice[j - 1] if j and parts[j - 1] == part else 0
        tried: set[int] = set()
        for i in range(start, target_count):
            room = remaining[i]
            if room < part or room in tried:
                continue
            tried.add(room)
            left = room - part
            if left and j < last and left < smallest:
                continue
            remaining[i] = left
            choice[j] = i
            groups[i].append(j)
            if place(j + 1):
                return True
            groups[i].pop()
            remaining[i] = room
        return False

    if not place(0):
        return None
    return GenerationPlan(mu, lam, tuple(tuple(g) for g in groups))


def generates_all(
    mu: Partition,
    n: int,
    k: int,
    mode: str = MODE_GREEDY,
    max_nodes: int | None = None,
) -> VerificationReport:
    """Check mu against every partition of n with at most k parts.

    In greedy mode each target is tried greedily first with the exact search
    as fallback (greedy failure alone proves nothing for arbitrary mu); in
    exact mode every target goes straight to the backtracking search. The
    counterexample reported is the first failing target in enumeration order.
    """
    if mode not in (MODE_GREEDY, MODE_EXACT):
        raise ValueError(f"mode must be '{MODE_GREEDY}' or '{MODE_EXACT}', got {mode!r}")
    if mu.weight != n:
        raise ValueError(f"weight mismatch: subject weighs {mu.weight}, n is {n}")
    stats = SearchStats(max_nodes=max_nodes)
    checked = 0
    for gamma in enumerate_partitions(n, k):
        checked += 1
        plan = None
        if mode == MODE_GREEDY:
            plan = greedy_generate(mu, gamma).plan
        if plan is None:
            plan = generates_exact(mu, gamma, stats)
        if plan is None:
            return VerificationReport(
                mu, n, k, False, gamma, mode, checked, stats.nodes
            )
    return VerificationReport(mu, n, k, True, None, mode, checked, stats.nodes)


class MinSizeResult(NamedTuple):
    size: int
    witness: Partition


def brute_force_min_size(
    n: int, k: int, max_nodes: int | None = None
) -> MinSizeResult:
    """Smallest partition of n passing generates_all, found by trying every
    partition of n in order of increasing part count (exact mode only).

    Intended for desk scale; `max_nodes`, when set, bounds each candidate's
    search and exhaustion raises rather than skewing the answer.
    """
    for size in range(1, n + 1):
        for candidate in exact_size_partitions(n, size):
            report = generates_all(candidate, n, k, MODE_EXACT, max_nodes)
            if report.ok:
                return MinSizeResult(size, candidate)
    raise AssertionError("unreachable: the all-ones partition always passes")


def feasible_generators(
    n: int, k: int, max_nodes: int | None = None
) -> Iterator[Partition]:
    """Every partition of n that passes generates_all (exact mode), in the
    enumeration order of all partitions of n."""
    for candidate in enumerate_partitions(n, n):
        if generates_all(candidate, n, k, MODE_EXACT, max_nodes).ok:
            yield candidate


def check_prefix_dominance(mu: Partition, lam: Partition) -> int | None:
    """First prefix length m where lam's prefix sum exceeds mu's, or None.

    None means mu's prefix sums dominate lam's for every m up to the shorter
    size, which is what the construction guarantees against any feasible
    competitor.
    """
    sum_mu = 0
    sum_lam = 0
    for m in range(1, min(mu.size, lam.size) + 1):
        sum_mu += mu.parts[m - 1]
        sum_lam += lam.parts[m - 1]
        if sum_lam > sum_mu:
            return m
    return None


def check_suffix_property(
    lam: Partition,
    k: int,
    m: int,
    max_nodes: int | None = None,
    assume_feasible: bool = False,
) -> VerificationReport:
    """Check that lam's parts from 1-based position m on generate every
    partition of their own weight with at most k parts.

    lam itself must generate all such partitions of its full weight; unless
    `assume_feasible` is set this precondition is verified first and its
    violation raised as InfeasibleGeneratorError, distinct from a suffix
    failure (which is reported in the returned report).
    """
    if not 2 <= m <= lam.size:
        raise ValueError(f"m must be in 2..{lam.size}, got {m}")
    if not assume_feasible:
        base = generates_all(lam, lam.weight, k, MODE_EXACT, max_nodes)
        if not base.ok:
            raise InfeasibleGeneratorError(
                f"{lam} does not generate all {k}-part-bounded partitions of "
                f"{lam.weight}; first failure {base.counterexample}"
            )
    tail = lam.suffix(m)
    return generates_all(tail, tail.weight, k, MODE_EXACT, max_nodes)


def observation_cap(n: int, k: int) -> int:
    """Largest value any feasible generator may use as its first part."""
    return _ceil_div(n, k)
