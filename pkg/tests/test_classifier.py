import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from splitloci.classifier import (
    CrossCheck,
    GorensteinVerdict,
    Kind,
    Path,
    classify,
    classify_via_class_group,
    crosscheck,
    is_ap,
    is_block_ap,
    is_contiguous,
    proportionality_diagnostic,
)
from splitloci.splitting import enumerate_types, from_entries

T = from_entries


class TestPatterns:
    def test_block_ap_example(self):
        m = is_block_ap(T((-3, -3, 0, 0, 3, 3)))
        assert (2, 3) in m
        assert (1, 3) not in m and (2, 2) not in m

    def test_ap(self):
        assert (1, 3) in is_block_ap(T((0, 3, 6)))

    def test_unequal_multiplicities(self):
        m = is_block_ap(T((0, 1, 1, 2)))
        assert not m and list(m) == []

    def test_constant_tuple_matches_degenerately(self):
        m = is_block_ap(T((4, 4, 4, 4)))
        for t in (0, 1, 5, 100):
            assert (4, t) in m
        assert {(s, 0) for s in (1, 2, 4)} <= set(m)
        assert (3, 0) not in m and (2, 1) not in m

    @pytest.mark.parametrize(
        "entries,expected",
        [
            ((-1, 0, 0, 0, 1), True),
            ((0, 1, 1, 1, 2, 3, 3, 3), True),
            ((0, 0, 2, 2), False),
            ((0, 0, 0, 1), True),
            ((0, 1, 1, 2, 2), False),
            ((7,), True),
        ],
    )
    def test_contiguous(self, entries, expected):
        assert is_contiguous(T(entries)) is expected

    @pytest.mark.parametrize(
        "entries,t", [((0, 3, 6), 3), ((0, 0, 3, 3), None), ((-2, 0, 2), 2), ((5,), 0), ((0, 1, 3), None)]
    )
    def test_is_ap(self, entries, t):
        assert is_ap(T(entries)) == t

    def test_small_difference_block_ap_is_contiguous_or_spaced(self):
        for e in enumerate_types(6, 6):
            m = is_block_ap(e)
            if m.has_difference(1) and e.length > 1:
                assert is_contiguous(e)
            if any(t == 0 for _, t in m):
                assert e.length == 1 and is_contiguous(e)


class TestClassify:
    @pytest.mark.parametrize(
        "entries,expected",
        [
            ((-3, -3, 0, 0, 3, 3), "not-Q-gorenstein"),
            ((0, 5, 10), "N-gorenstein:N=5"),
            ((-2, 0, 2), "gorenstein"),
            ((-1, 0, 0, 0, 1), "gorenstein"),
            ((0, 1, 1, 1, 2, 3, 3, 3), "gorenstein"),
            ((0, 0), "gorenstein"),
            ((9,), "gorenstein"),
            ((0, 0, 2), "not-Q-gorenstein"),
            ((0, 2, 2, 4), "not-Q-gorenstein"),
        ],
    )
    def test_criterion(self, entries, expected):
        assert str(classify(T(entries))) == expected

    @pytest.mark.parametrize(
        "entries,expected",
        [((-2, 0, 2), "gorenstein"), ((0, 4, 8), "N-gorenstein:N=2"), ((0, 0, 4, 4), "not-Q-gorenstein")],
    )
    def test_class_group(self, entries, expected):
        v = classify_via_class_group(T(entries))
        assert str(v) == expected and v.path is Path.CLASS_GROUP

    @pytest.mark.parametrize("t,n", [(3, 3), (4, 2), (5, 5), (6, 3), (7, 7), (8, 4)])
    def test_min_n_table(self, t, n):
        for m in (2, 3, 4):
            e = T(tuple(k * t for k in range(m)))
            assert classify(e).min_n == n
            assert classify_via_class_group(e).min_n == n

    def test_shift_invariance(self):
        for e in enumerate_types(5, 5):
            ref = classify(e).key
            for c in (-7, 3):
                assert classify(e.shift(c)).key == ref
                assert classify_via_class_group(e.shift(c)).key == ref

    def test_verdict_invariants(self):
        with pytest.raises(ValueError):
            GorensteinVerdict(Kind.N_GORENSTEIN, Path.CRITERION, 1)
        with pytest.raises(ValueError):
            GorensteinVerdict(Kind.NOT_Q_GORENSTEIN, Path.CRITERION, 3)
        assert GorensteinVerdict(Kind.GORENSTEIN, Path.CRITERION).min_n == 1


class TestProportionality:
    def test_ap(self):
        p = proportionality_diagnostic(T((0, 3, 6)))
        assert (p.delta_f, p.delta_delta, p.proportional, p.ratio) == ((3, 3), (2, 2), True, Fraction(2, 3))

    def test_contiguous(self):
        p = proportionality_diagnostic(T((0, 1, 1, 1, 2, 3, 3, 3)))
        assert (p.delta_f, p.delta_delta, p.ratio) == ((1, 1, 1), (4, 4, 4), Fraction(4))

    def test_middle_block(self):
        p = proportionality_diagnostic(T((0, 1, 1, 2)))
        assert (p.delta_f, p.delta_delta, p.proportional, p.ratio) == ((1, 1), (3, 3), True, Fraction(3))

    def test_not_proportional(self):
        p = proportionality_diagnostic(T((0, 1, 3)))
        assert not p.proportional and p.ratio is None

    def test_single_block(self):
        with pytest.raises(ValueError, match="no consecutive blocks"):
            proportionality_diagnostic(T((0, 0)))

    def test_delta_differences_are_neighbour_sums(self):
        for e in enumerate_types(6, 5):
            if e.length < 2:
                continue
            s = e.multiplicities
            p = proportionality_diagnostic(e)
            assert p.delta_delta == tuple(a + b for a, b in zip(s, s[1:]))


class TestCrossCheck:
    @pytest.mark.parametrize(
        "entries,verdict",
        [((-2, 0, 2), "gorenstein"), ((0, 3, 6), "N-gorenstein:N=3"), ((0, 0, 4, 4), "not-Q-gorenstein")],
    )
    def test_examples(self, entries, verdict):
        r = crosscheck(T(entries))
        assert r.agree
        assert str(r.criterion) == str(r.class_group) == verdict

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
    def test_json_round_trip(self, entries):
        r = crosscheck(T(entries))
        back = CrossCheck.from_json(json.loads(json.dumps(r.to_json())))
        assert back == r and back.agree == r.agree
        assert back.to_json() == r.to_json()
