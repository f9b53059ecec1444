"""Pattern extraction mechanics: standardize, ranking, symmetries, windows."""

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ordinalwalk import (
    LengthError,
    OrdinalPattern,
    PatternDistribution,
    RangeError,
    TieError,
    TiePolicy,
    TimeSeries,
    all_patterns,
    empirical_distribution,
    extract_patterns,
    lex_rank,
    lex_unrank,
    standardize,
    symmetry_transform,
)

# ---------------------------------------------------------------- examples

def test_standardize_basic_window():
    assert str(standardize((1.2, 3.4, 0.5))) == "231"


def test_standardize_monotone():
    assert str(standardize((1.0, 2.0, 3.0, 4.0))) == "1234"
    assert str(standardize((4.0, 3.0, 2.0, 1.0))) == "4321"


def test_stable_ties_rank_earlier_value_smaller():
    assert str(standardize((2.0, 2.0))) == "12"
    assert str(standardize((5.0, 2.0, 2.0))) == "312"


def test_strict_ties_raise():
    with pytest.raises(TieError):
        standardize((2.0, 2.0), TiePolicy("strict"))


def test_jitter_is_deterministic():
    policy = TiePolicy("jitter", jitter_scale=1e-9, seed=42)
    window = (1.0, 1.0, 2.0)
    assert standardize(window, policy) == standardize(window, policy)


def test_window_too_short():
    with pytest.raises(LengthError):
        standardize((1.0,))


def test_rank_examples():
    assert OrdinalPattern.from_string("231").rank == 3
    assert OrdinalPattern.from_string("123").rank == 0
    assert OrdinalPattern.from_string("321").rank == 5
    assert lex_unrank(3, 3) == OrdinalPattern.from_string("231")


def test_pattern_string_roundtrip():
    for pat in all_patterns(4):
        assert OrdinalPattern.from_string(str(pat)) == pat


def test_bad_pattern_word():
    with pytest.raises(RangeError):
        OrdinalPattern((1, 1, 2))
    with pytest.raises(RangeError):
        OrdinalPattern((1,))


def test_order_thirteen_rejected():
    with pytest.raises(RangeError):
        lex_unrank(13, 0)


def test_extract_patterns_count_and_delay():
    series = [3.0, 1.0, 4.0, 1.5, 5.0, 9.0, 2.0]
    pats = extract_patterns(series, 3)
    assert len(pats) == 7 - 2
    # delay 2 compares values two apart: windows (x0,x2,x4), (x1,x3,x5), ...
    pats_d2 = extract_patterns(series, 3, d=2)
    assert len(pats_d2) == 7 - 4
    assert str(pats_d2[0]) == str(standardize((3.0, 4.0, 5.0)))


def test_extract_patterns_length_guard():
    with pytest.raises(LengthError):
        extract_patterns([1.0, 2.0, 3.0], 4)
    with pytest.raises(RangeError):
        extract_patterns([1.0, 2.0, 3.0], 3, d=0)


def test_empirical_distribution_counts():
    series = [1.0, 2.0, 3.0, 2.5, 3.5]
    dist = empirical_distribution(series, 3)
    assert dist.sample_count == 3
    assert dist.weights.sum() == pytest.approx(1.0, abs=1e-15)
    np.testing.assert_allclose(dist.weights * 3, np.round(dist.weights * 3))


def test_timeseries_validation():
    with pytest.raises(RangeError):
        TimeSeries([1.0, np.nan])
    with pytest.raises(RangeError):
        TimeSeries([1.0, np.inf])
    with pytest.raises(LengthError):
        TimeSeries([])
    ts = TimeSeries([1.0, 2.0])
    with pytest.raises(ValueError):
        ts.values[0] = 9.0  # read-only


def test_distribution_must_sum_to_one():
    with pytest.raises(RangeError):
        PatternDistribution(3, np.full(6, 0.2), "model", 0)
    uni = PatternDistribution.uniform(3)
    assert uni.weights.sum() == pytest.approx(1.0)


# ------------------------------------------------------------- invariants

words = st.integers(3, 7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


class TestLexBijection:
    @given(words)
    def test_unrank_inverts_rank(self, word):
        pat = OrdinalPattern(tuple(word))
        assert lex_unrank(pat.order, lex_rank(pat)) == pat

    @given(st.integers(2, 6))
    def test_ranks_cover_factorial_range(self, n):
        ranks = sorted(p.rank for p in all_patterns(n))
        assert ranks == list(range(len(ranks)))

    @given(words)
    def test_rank_matches_lexicographic_position(self, word):
        pat = OrdinalPattern(tuple(word))
        smaller = sum(1 for q in all_patterns(pat.order) if q.word < pat.word)
        assert pat.rank == smaller


class TestSymmetries:
    @given(words)
    def test_complement_is_involution(self, word):
        pat = OrdinalPattern(tuple(word))
        twice = symmetry_transform(symmetry_transform(pat, "complement"), "complement")
        assert twice == pat

    @given(words)
    def test_reverse_is_involution(self, word):
        pat = OrdinalPattern(tuple(word))
        twice = symmetry_transform(symmetry_transform(pat, "reverse"), "reverse")
        assert twice == pat

    @given(words)
    def test_reverse_complement_composes(self, word):
        pat = OrdinalPattern(tuple(word))
        rc = symmetry_transform(pat, "reverse_complement")
        assert rc == symmetry_transform(symmetry_transform(pat, "reverse"), "complement")
        assert rc == symmetry_transform(symmetry_transform(pat, "complement"), "reverse")

    def test_complement_example(self):
        pat = OrdinalPattern.from_string("1342")
        assert str(symmetry_transform(pat, "complement")) == "4213"


finite_series = st.lists(
    st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False),
    min_size=5, max_size=40,
)


integer_series = st.lists(
    st.integers(-1000, 1000).map(float), min_size=5, max_size=40,
)


class TestScaleInvariance:
    """Patterns depend only on relative order, so exact affine maps with
    positive slope must leave every pattern bit-identical. Integer values
    keep v * 2**k + offset exact in float arithmetic (extreme magnitudes
    would let the offset absorb small values and manufacture ties)."""

    @given(integer_series, st.integers(-8, 8), st.integers(-50, 50))
    def test_power_of_two_scale_and_integer_shift(self, series, k, offset):
        base = extract_patterns(series, 3)
        mapped = [v * 2.0 ** k + offset for v in series]
        assert extract_patterns(mapped, 3) == base

    @given(finite_series)
    def test_sign_flip_complements_every_pattern(self, series):
        # strictly distinct values so ties cannot flip asymmetrically
        distinct = [v + i * 1e-3 for i, v in enumerate(series)]
        assume(len(set(distinct)) == len(distinct))
        base = extract_patterns(distinct, 3)
        flipped = extract_patterns([-v for v in distinct], 3)
        assert flipped == [symmetry_transform(p, "complement") for p in base]


class TestVectorizedAgainstStandardize:
    """extract_patterns must agree with window-by-window standardize."""

    @given(finite_series, st.integers(3, 5), st.integers(1, 2))
    @settings(max_examples=60)
    def test_windows_match(self, series, n, d):
        if len(series) < (n - 1) * d + 1:
            return
        pats = extract_patterns(series, n, d)
        for i, pat in enumerate(pats):
            window = [series[i + j * d] for j in range(n)]
            assert standardize(window) == pat
