import pytest

from genpart import (
    GreedyStep,
    Partition,
    build_size_table,
    count_partitions,
    enumerate_partitions,
    exact_size_partitions,
    generator_size,
    greedy_generate,
    make_partition,
    minimal_generator,
    size_row,
    size_upper_bound,
)


def test_make_partition_sorts_and_measures():
    p = make_partition([1, 3, 2])
    assert p.parts == (3, 2, 1)
    assert p.weight == 6
    assert p.size == 3


def test_make_partition_singleton():
    p = make_partition([5])
    assert p.parts == (5,)
    assert p.weight == 5
    assert p.size == 1


def test_make_partition_already_sorted():
    p = make_partition([2, 2, 1, 1])
    assert p.parts == (2, 2, 1, 1)
    assert p.weight == 6
    assert p.size == 4


def test_make_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        make_partition([])
    with pytest.raises(ValueError):
        make_partition([3, 0])
    with pytest.raises(ValueError):
        make_partition([-1])
    with pytest.raises(ValueError):
        make_partition([2, True])


def test_partition_requires_sorted_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_partition_sequence_protocol():
    p = make_partition([3, 1, 2])
    assert len(p) == 3
    assert list(p) == [3, 2, 1]
    assert p[0] == 3
    assert str(p) == "3 2 1"


def test_suffix():
    p = make_partition([3, 2, 2, 1, 1])
    assert p.suffix(2).parts == (2, 2, 1, 1)
    assert p.suffix(1) == p
    assert p.suffix(5).parts == (1,)
    with pytest.raises(ValueError):
        p.suffix(6)


def test_minimal_generator_known_values():
    assert minimal_generator(9, 3).parts == (3, 2, 2, 1, 1)
    assert minimal_generator(7, 1).parts == (7,)
    assert minimal_generator(4, 3).parts == (2, 1, 1)
    assert minimal_generator(20, 10).size == 15


def test_minimal_generator_rejects_zero():
    with pytest.raises(ValueError):
        minimal_generator(0, 3)
    with pytest.raises(ValueError):
        minimal_generator(3, 0)


def test_generator_size_known_values():
    assert generator_size(16, 2) == 5
    assert generator_size(12, 3) == 6
    for k in (1, 2, 7, 40):
        assert generator_size(1, k) == 1


def test_core_sweep_weight_size_and_first_part():
    # stated ranges: n <= 500, k <= 50
    for k in range(1, 51):
        for n in range(1, 501):
            mu = minimal_generator(n, k)
            assert mu.weight == n
            assert all(a >= b for a, b in zip(mu.parts, mu.parts[1:]))
            assert mu.parts[-1] >= 1
            assert mu.size == generator_size(n, k)
            assert mu.parts[0] == -(-n // k)


def test_size_upper_bound_exact_arithmetic():
    assert size_upper_bound(1, 5) == 1
    assert size_upper_bound(16, 2) == 5  # tight at an exact power of 2
    assert size_upper_bound(20, 10) == 30
    assert size_upper_bound(20, 10) >= generator_size(20, 10) == 15
    assert size_upper_bound(7, 1) == 1
    with pytest.raises(ValueError):
        size_upper_bound(0, 2)
    with pytest.raises(ValueError):
        size_upper_bound(5, 0)


def test_size_bound_dominates_size_sampled():
    for k in (2, 3, 5, 8, 13, 21, 34, 64):
        for n in range(1, 2001):
            assert generator_size(n, k) <= size_upper_bound(n, k)


def test_size_row_matches_generator_size():
    for k in (1, 2, 3, 7, 19):
        row = size_row(300, k)
        assert row[0] == 0
        for n in range(1, 301):
            assert row[n] == generator_size(n, k)


def test_size_table_matches_construction():
    table = build_size_table(20, 10)
    for k in range(1, 11):
        for n in range(1, 21):
            assert table.entry(n, k) == minimal_generator(n, k).size
    assert table.entry(19, 5) == 10
    assert table.entry(14, 8) == 11
    with pytest.raises(ValueError):
        table.entry(21, 1)


def test_greedy_generate_paper_style_example():
    mu = make_partition([3, 2, 2, 1, 1])
    gamma = make_partition([4, 3, 2])
    result = greedy_generate(mu, gamma)
    assert result.ok
    assert result.plan.group_values() == ((3, 1), (2, 1), (2,))
    result.plan.validate()
    assert result.trace.failed_at is None
    assert result.trace.remaining == (0, 0, 0)


def test_greedy_generate_identity():
    result = greedy_generate(make_partition([5]), make_partition([5]))
    assert result.ok
    assert result.plan.group_values() == ((5,),)


def test_greedy_generate_failure_records_stuck_part():
    result = greedy_generate(make_partition([3, 1]), make_partition([2, 2]))
    assert not result.ok
    assert result.trace.failed_at == 0
    assert result.trace.steps == ()
    assert result.trace.remaining == (2, 2)


def test_greedy_generate_weight_mismatch_is_an_error():
    with pytest.raises(ValueError):
        greedy_generate(make_partition([5]), make_partition([4, 2]))


def test_greedy_trace_capacities_are_consistent():
    for n, k in [(12, 3), (18, 4), (9, 3)]:
        mu = minimal_generator(n, k)
        for gamma in enumerate_partitions(n, k):
            result = greedy_generate(mu, gamma)
            assert result.ok
            running = list(gamma.parts)
            for step in result.trace.steps:
                assert isinstance(step, GreedyStep)
                running[step.target_index] -= step.part
                assert tuple(running) == step.remaining
                assert min(step.remaining) >= 0


def test_enumerate_partitions_golden_order():
    assert [p.parts for p in enumerate_partitions(4, 2)] == [(4,), (3, 1), (2, 2)]
    assert [p.parts for p in enumerate_partitions(9, 3)][:4] == [
        (9,),
        (8, 1),
        (7, 2),
        (7, 1, 1),
    ]
    assert sum(1 for _ in enumerate_partitions(9, 3)) == 12
    assert [p.parts for p in enumerate_partitions(6, 1)] == [(6,)]


def test_enumerate_partitions_is_descending_lex():
    for n, m in [(10, 3), (8, 8), (12, 5)]:
        seq = [p.parts for p in enumerate_partitions(n, m)]
        assert seq == sorted(seq, reverse=True)


def test_enumeration_matches_count_no_duplicates():
    # stated ranges: n <= 40, max_parts <= 8
    for m in range(1, 9):
        for n in range(1, 41):
            seen = set()
            total = 0
            for p in enumerate_partitions(n, m):
                assert p.weight == n
                assert p.size <= m
                seen.add(p.parts)
                total += 1
            assert total == len(seen) == count_partitions(n, m)


def test_count_partitions_base_cases():
    assert count_partitions(4, 2) == 3
    assert count_partitions(9, 3) == 12
    for m in (1, 4, 9):
        assert count_partitions(0, m) == 1
    with pytest.raises(ValueError):
        count_partitions(-1, 3)
    with pytest.raises(ValueError):
        count_partitions(4, 0)


def test_exact_size_partitions_golden():
    assert [p.parts for p in exact_size_partitions(9, 5)] == [
        (5, 1, 1, 1, 1),
        (4, 2, 1, 1, 1),
        (3, 3, 1, 1, 1),
        (3, 2, 2, 1, 1),
        (2, 2, 2, 2, 1),
    ]
    assert [p.parts for p in exact_size_partitions(5, 1)] == [(5,)]
    assert list(exact_size_partitions(3, 4)) == []


def test_exact_size_partitions_counts():
    for n in range(1, 21):
        by_size = sum(
            sum(1 for _ in exact_size_partitions(n, s)) for s in range(1, n + 1)
        )
        assert by_size == count_partitions(n, n)
