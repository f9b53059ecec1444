"""Ordinal-pattern core: extraction, lexicographic coding, symmetries,
and empirical pattern distributions.

The rank convention throughout: the pattern of a window (x_1, ..., x_n) is
the permutation word where word[i] is the rank of x_i among the window
values, 1 for the smallest. So (1.2, 3.4, 0.5) has pattern 231.

Main entry points
-----------------
standardize            pattern of a single window
extract_patterns       all patterns of a series (order n, delay d)
empirical_distribution relative pattern frequencies of a series
lex_rank / lex_unrank  bijection between patterns and 0..n!-1
symmetry_transform     complement / reverse / reverse-complement
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import LengthError, RangeError, TieError

#: Largest supported pattern order; n! tables stay small below this.
MAX_ORDER = 12

_FACT = [math.factorial(k) for k in range(MAX_ORDER + 1)]


# --------------------------------------------------------------------------
# domain types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TimeSeries:
    """A finite, real-valued series with optional time labels.

    Parameters
    ----------
    values : array_like
        One-dimensional, nonempty, all values finite. Stored as a
        read-only float64 array.
    labels : sequence, optional
        Time identifiers, one per value, strictly increasing.
    """

    values: np.ndarray
    labels: tuple | None = None

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise LengthError("series must be one-dimensional and nonempty")
        if not np.isfinite(arr).all():
            raise RangeError("series values must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != arr.size:
                raise LengthError(
                    f"got {len(labels)} labels for {arr.size} values"
                )
            if any(not a < b for a, b in zip(labels, labels[1:])):
                raise RangeError("labels must be strictly increasing")
            object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return int(self.values.size)


TieMode = Literal["strict", "stable", "jitter"]


@dataclass(frozen=True)
class TiePolicy:
    """How equal values within a window are ranked.

    stable (the default) ranks the earlier index as smaller; strict raises
    TieError on any duplicate; jitter adds seeded normal noise of scale
    jitter_scale to the values before ranking.
    """

    mode: TieMode = "stable"
    jitter_scale: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("strict", "stable", "jitter"):
            raise RangeError(f"unknown tie mode {self.mode!r}")
        if self.mode == "jitter" and not self.jitter_scale > 0:
            raise RangeError("jitter mode requires jitter_scale > 0")


@dataclass(frozen=True, order=True)
class OrdinalPattern:
    """A permutation of {1..n} in one-line notation.

    word[i] is the rank of the i-th window value (1 = smallest). Patterns
    compare and sort lexicographically by word, and serialize as digit
    strings for n <= 9 ("2314") and hyphen-separated beyond ("10-2-...").
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if not 2 <= n <= MAX_ORDER:
            raise RangeError(f"pattern order must be in [2, {MAX_ORDER}], got {n}")
        if sorted(word) != list(range(1, n + 1)):
            raise RangeError(f"{word} is not a permutation of 1..{n}")

    @property
    def order(self) -> int:
        return len(self.word)

    @property
    def rank(self) -> int:
        return lex_rank(self)

    def __str__(self) -> str:
        if self.order <= 9:
            return "".join(str(v) for v in self.word)
        return "-".join(str(v) for v in self.word)

    @classmethod
    def from_string(cls, text: str) -> "OrdinalPattern":
        """Parse "231" or "10-2-1-..." back into a pattern."""
        text = text.strip()
        if "-" in text:
            parts = text.split("-")
        else:
            parts = list(text)
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise RangeError(f"cannot parse pattern string {text!r}") from exc


@dataclass(frozen=True)
class PatternDistribution:
    """A probability vector over all n! patterns, indexed by lex rank.

    kind says whether the weights came from data ("empirical") or from a
    null model ("model"); sample_count is the number of windows or draws
    behind the weights, 0 for exact closed forms.
    """

    order: int
    weights: np.ndarray
    kind: Literal["empirical", "model"]
    sample_count: int = 0

    def __post_init__(self):
        n = int(self.order)
        if not 2 <= n <= MAX_ORDER:
            raise RangeError(f"order must be in [2, {MAX_ORDER}], got {n}")
        w = np.array(self.weights, dtype=np.float64)
        if w.shape != (_FACT[n],):
            raise RangeError(
                f"expected {_FACT[n]} weights for order {n}, got shape {w.shape}"
            )
        if np.any(w < 0):
            raise RangeError("weights must be nonnegative")
        total = float(w.sum())
        if abs(total - 1.0) > 1e-12:
            raise RangeError(f"weights must sum to 1 (got {total!r})")
        if self.kind not in ("empirical", "model"):
            raise RangeError(f"unknown distribution kind {self.kind!r}")
        if self.sample_count < 0:
            raise RangeError("sample_count must be nonnegative")
        w.setflags(write=False)
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "sample_count", int(self.sample_count))

    @classmethod
    def uniform(cls, n: int) -> "PatternDistribution":
        """The uniform distribution over all n! patterns."""
        size = _FACT[n] if 2 <= n <= MAX_ORDER else 0
        if not size:
            raise RangeError(f"order must be in [2, {MAX_ORDER}], got {n}")
        return cls(n, np.full(size, 1.0 / size), "model", 0)

    def weight_of(self, pattern: OrdinalPattern) -> float:
        if pattern.order != self.order:
            raise RangeError(
                f"pattern order {pattern.order} does not match distribution "
                f"order {self.order}"
            )
        return float(self.weights[pattern.rank])

    def as_dict(self) -> dict[str, float]:
        """Weights keyed by pattern string, in lexicographic order."""
        return {
            str(lex_unrank(self.order, r)): float(w)
            for r, w in enumerate(self.weights)
        }


# --------------------------------------------------------------------------
# lexicographic coding
# --------------------------------------------------------------------------

def lex_rank(pattern: OrdinalPattern) -> int:
    """Lexicographic rank of a pattern, 0 for 12...n."""
    word = pattern.word
    n = len(word)
    rank = 0
    for i in range(n - 1):
        smaller_after = sum(word[j] < word[i] for j in range(i + 1, n))
        rank += smaller_after * _FACT[n - 1 - i]
    return rank


def lex_unrank(n: int, rank: int) -> OrdinalPattern:
    """Inverse of lex_rank: the pattern of given order at the given rank."""
    if not 2 <= n <= MAX_ORDER:
        raise RangeError(f"order must be in [2, {MAX_ORDER}], got {n}")
    if not 0 <= rank < _FACT[n]:
        raise RangeError(f"rank must be in [0, {n}!), got {rank}")
    remaining = list(range(1, n + 1))
    word = []
    rest = rank
    for i in range(n):
        base = _FACT[n - 1 - i]
        idx, rest = divmod(rest, base)
        word.append(remaining.pop(idx))
    return OrdinalPattern(tuple(word))


def all_patterns(n: int) -> list[OrdinalPattern]:
    """Every order-n pattern in lexicographic order."""
    return [lex_unrank(n, r) for r in range(_FACT[n])]


def symmetry_transform(
    pattern: OrdinalPattern,
    kind: Literal["complement", "reverse", "reverse_complement"],
) -> OrdinalPattern:
    """Apply a pattern symmetry.

    complement maps each value v to n+1-v (the pattern of the sign-flipped
    window); reverse reads the word backwards (the pattern of the
    time-reversed window is reverse of complement, so these two compose);
    reverse_complement applies both, in either order.
    """
    n = pattern.order
    word = pattern.word
    if kind == "complement":
        out = tuple(n + 1 - v for v in word)
    elif kind == "reverse":
        out = word[::-1]
    elif kind == "reverse_complement":
        out = tuple(n + 1 - v for v in word[::-1])
    else:
        raise RangeError(f"unknown symmetry {kind!r}")
    return OrdinalPattern(out)


# --------------------------------------------------------------------------
# extraction
# --------------------------------------------------------------------------

def _as_values(series) -> np.ndarray:
    if isinstance(series, TimeSeries):
        return series.values
    return TimeSeries(np.asarray(series, dtype=np.float64)).values


def _apply_jitter(values: np.ndarray, policy: TiePolicy) -> np.ndarray:
    rng = np.random.default_rng(policy.seed)
    return values + rng.normal(0.0, policy.jitter_scale, size=values.shape)


def _window_ranks(rows: np.ndarray, strict: bool) -> np.ndarray:
    """Lex ranks of each row of a (windows x n) matrix.

    Equal values rank earlier-index-smaller; under strict=True any
    duplicate raises TieError instead.
    """
    m, n = rows.shape
    if strict:
        sorted_rows = np.sort(rows, axis=1)
        if np.any(sorted_rows[:, 1:] == sorted_rows[:, :-1]):
            raise TieError("window contains duplicate values (strict ties)")
    ranks = np.zeros(m, dtype=np.int64)
    for i in range(n - 1):
        col = rows[:, i]
        smaller_after = np.zeros(m, dtype=np.int64)
        for j in range(i + 1, n):
            smaller_after += rows[:, j] < col
        ranks += smaller_after * _FACT[n - 1 - i]
    return ranks


def _series_ranks(
    series, n: int, d: int, policy: TiePolicy | None
) -> np.ndarray:
    """Lex rank of every length-n, delay-d window of the series."""
    policy = policy or TiePolicy()
    if not 2 <= n <= MAX_ORDER:
        raise RangeError(f"order must be in [2, {MAX_ORDER}], got {n}")
    if d < 1:
        raise RangeError(f"delay must be >= 1, got {d}")
    values = _as_values(series)
    span = (n - 1) * d + 1
    if values.size < span:
        raise LengthError(
            f"series of length {values.size} is too short for order {n} "
            f"at delay {d} (needs {span})"
        )
    if policy.mode == "jitter":
        values = _apply_jitter(values, policy)
    m = values.size - (n - 1) * d
    idx = np.arange(m)[:, None] + np.arange(n)[None, :] * d
    return _window_ranks(values[idx], strict=policy.mode == "strict")


def standardize(window: Sequence[float], policy: TiePolicy | None = None) -> OrdinalPattern:
    """Ordinal pattern of a single window.

    Parameters
    ----------
    window : sequence of float
        At least two values.
    policy : TiePolicy, optional
        Tie handling; stable by default.

    Returns
    -------
    OrdinalPattern
        word[i] is the rank of window[i], 1 for the smallest value.
    """
    policy = policy or TiePolicy()
    vals = np.asarray(window, dtype=np.float64)
    if vals.ndim != 1 or vals.size < 2:
        raise LengthError("a window needs at least two values")
    if not np.isfinite(vals).all():
        raise RangeError("window values must be finite")
    if vals.size > MAX_ORDER:
        raise RangeError(f"window length {vals.size} exceeds max order {MAX_ORDER}")
    if policy.mode == "strict" and np.unique(vals).size < vals.size:
        raise TieError("window contains duplicate values (strict ties)")
    if policy.mode == "jitter":
        vals = _apply_jitter(vals, policy)
    order = sorted(range(vals.size), key=lambda i: (vals[i], i))
    word = [0] * vals.size
    for rank, i in enumerate(order, start=1):
        word[i] = rank
    return OrdinalPattern(tuple(word))


def extract_patterns(
    series,
    n: int,
    d: int = 1,
    policy: TiePolicy | None = None,
) -> list[OrdinalPattern]:
    """All ordinal patterns of a series.

    Windows are (x_t, x_{t+d}, ..., x_{t+(n-1)d}) for t = 1..N-(n-1)d, so
    exactly N-(n-1)d patterns come back, in series order.
    """
    ranks = _series_ranks(series, n, d, policy)
    cache: dict[int, OrdinalPattern] = {}
    out = []
    for r in ranks:
        r = int(r)
        pat = cache.get(r)
        if pat is None:
            pat = cache[r] = lex_unrank(n, r)
        out.append(pat)
    return out


def empirical_distribution(
    series,
    n: int,
    d: int = 1,
    policy: TiePolicy | None = None,
) -> PatternDistribution:
    """Relative frequency of each pattern across the series' windows.

    Returns
    -------
    PatternDistribution
        kind "empirical", sample_count = number of windows. The output is
        invariant under positive affine maps of the input values.
    """
    ranks = _series_ranks(series, n, d, policy)
    counts = np.bincount(ranks, minlength=_FACT[n])
    return PatternDistribution(n, counts / ranks.size, "empirical", ranks.size)
