import pytest

from gkf2.partitions import (
    TypeSignature,
    count_partitions,
    enumerate_types,
    partition_series,
)


def brute_force_partitions(w, exactly):
    """All partitions of w into exactly `exactly` parts, each >= 1."""
    def rec(total, parts, cap):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(min(total, cap), 0, -1):
            for rest in rec(total - first, parts - 1, first):
                yield (first,) + rest
    return list(rec(w, exactly, w))


class TestEnumerate:
    def test_weight2(self):
        assert enumerate_types(1, 2) == [TypeSignature({4: 1})]

    def test_weight4_degree2(self):
        assert enumerate_types(2, 4) == [
            TypeSignature({3: 1, 5: 1}),
            TypeSignature({4: 2}),
        ]

    def test_weight6_degree3_with_ref_order(self):
        types = enumerate_types(3, 6)
        assert [t.compact() for t in types] == ["3^2 6", "3 4 5", "4^3"]

    def test_weight6_degree6_vanishes(self):
        raw = enumerate_types(6, 6)
        assert raw == [TypeSignature({3: 6})]
        assert enumerate_types(6, 6, nonvanishing_only=True) == []

    def test_weight8_ref_order_matches_tables(self):
        assert [t.compact() for t in enumerate_types(3, 8)] == [
            "3^2 8", "3 4 7", "3 5 6", "4^2 6", "4 5^2"]
        assert [t.compact() for t in enumerate_types(4, 8)] == [
            "3^3 7", "3^2 4 6", "3^2 5^2", "3 4^2 5", "4^4"]

    def test_degree_weight_consistency(self):
        for w in range(2, 21):
            for m in range(1, w + 1):
                for t in enumerate_types(m, w):
                    assert t.degree == m
                    assert t.weight == w

    def test_empty_when_weight_below_degree(self):
        assert enumerate_types(5, 4) == []

    def test_partition_bijection(self):
        # signature -> sorted parts of w (shifted by -2) -> signature
        for w in range(2, 18):
            for m in range(1, w + 1):
                for t in enumerate_types(m, w):
                    parts = sorted((ell - 2 for ell in t.generator_degrees()),
                                   reverse=True)
                    assert sum(parts) == w and len(parts) == m
                    rebuilt = TypeSignature(
                        {p + 2: parts.count(p) for p in set(parts)})
                    assert rebuilt == t


class TestCounts:
    def test_small_values(self):
        assert count_partitions(2, 4) == 2
        assert count_partitions(3, 6) == 3
        for w in range(1, 12):
            assert count_partitions(1, w) == 1

    def test_zero_below_degree(self):
        assert count_partitions(4, 3) == 0

    def test_matches_enumeration(self):
        for m in range(1, 13):
            for w in range(1, 31):
                assert len(enumerate_types(m, w)) == count_partitions(m, w)

    def test_matches_brute_force(self):
        for m in range(1, 7):
            for w in range(1, 15):
                assert count_partitions(m, w) == len(brute_force_partitions(w, m))

    def test_series(self):
        assert partition_series(1, 6) == [1, 1, 1, 1, 1, 1, 1]
        # frozen from brute force: partitions into at most 2 parts
        assert partition_series(2, 4) == [1, 1, 2, 2, 3]

    def test_series_shift_identity(self):
        for m in range(1, 9):
            series = partition_series(m, 24)
            for w in range(m, 25):
                assert series[w - m] == count_partitions(m, w)


class TestTypeSignature:
    def test_compact_and_parse(self):
        t = TypeSignature({3: 2, 6: 1})
        assert t.compact() == "3^2 6"
        assert TypeSignature.parse("3^2 6") == t
        assert TypeSignature.parse("(3 4 5)") == TypeSignature({3: 1, 4: 1, 5: 1})

    def test_validation(self):
        with pytest.raises(ValueError):
            TypeSignature({2: 1})
        with pytest.raises(ValueError):
            TypeSignature({4: -1})

    def test_nonvanishing_bound(self):
        assert TypeSignature({3: 4}).nonvanishing()
        assert not TypeSignature({3: 5}).nonvanishing()
        assert TypeSignature({5: 6}).nonvanishing()
        assert not TypeSignature({5: 7}).nonvanishing()

    def test_generator_degrees(self):
        assert TypeSignature({3: 2, 5: 1}).generator_degrees() == (3, 3, 5)
