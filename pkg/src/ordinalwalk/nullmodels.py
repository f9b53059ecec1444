"""Random-walk null models for pattern distributions.

A null model fixes an i.i.d. step law Y and asks how the walk
Z = (0, Y1, Y1+Y2, ...) distributes its ordinal patterns. Three routes to
that distribution are provided, plus the data-driven bootstrap built on
resampled steps:

closed_form_uniform            exact table, uniform steps on [b-1, b], n <= 4
closed_form_normal_zero_mean   exact table, centered normal steps, n <= 4
monte_carlo_distribution       frequency over m independent simulated walks
volume_oracle                  deterministic quadrature estimate (uniform steps)
associated_walk                long walk resampled from a series' own steps
kl_to_null                     divergence of a series from a chosen null
bootstrap_band                 replicate divergences against a shared null

The uniform closed forms hold for b in [1/2, 1); b below 1/2 reflects
through the step sign flip, which maps b to 1-b and every pattern to its
complement. Formula provenance for two entries that differ from their
commonly printed versions: the {1432, 2143, 3214} branch below 2/3 must
read (1/6)(2 - 12b + 24b^2 - 15b^3) for the class-weighted total to be 1
and the branches to meet at b = 2/3, and the centered-normal constants
for {1342, 3124} and {1423, 2314} (with their complements) are the exact
orthant values 0.0355 and 1/48; both were validated by quadrature and
Monte Carlo before being frozen here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from .errors import LengthError, OrderError, RangeError, SupportError
from .metrics import kl_divergence
from .patterns import (
    _FACT,
    MAX_ORDER,
    OrdinalPattern,
    PatternDistribution,
    TiePolicy,
    TimeSeries,
    _window_ranks,
    empirical_distribution,
    lex_unrank,
    symmetry_transform,
)

# --------------------------------------------------------------------------
# step models
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class StepModel:
    """The step law Y of a random walk.

    Exactly one family is populated: uniform_b (steps uniform on [b-1, b],
    so P(Y > 0) = b), normal(mu, sigma), or an empirical multiset of
    observed steps resampled with replacement.
    """

    family: Literal["uniform_b", "normal", "empirical"]
    b: float | None = None
    mu: float | None = None
    sigma: float | None = None
    steps: np.ndarray | None = None

    def __post_init__(self):
        if self.family == "uniform_b":
            if self.b is None or not 0.0 < self.b < 1.0:
                raise RangeError(f"uniform_b needs b in (0, 1), got {self.b}")
            if self.mu is not None or self.sigma is not None or self.steps is not None:
                raise RangeError("uniform_b takes only b")
        elif self.family == "normal":
            if self.mu is None or self.sigma is None or not self.sigma > 0:
                raise RangeError(
                    f"normal needs mu and sigma > 0, got mu={self.mu} sigma={self.sigma}"
                )
            if self.b is not None or self.steps is not None:
                raise RangeError("normal takes only mu and sigma")
        elif self.family == "empirical":
            if self.steps is None:
                raise RangeError("empirical needs a step multiset")
            arr = np.array(self.steps, dtype=np.float64)
            if arr.ndim != 1 or arr.size == 0:
                raise RangeError("empirical steps must be a nonempty 1d multiset")
            if not np.isfinite(arr).all():
                raise RangeError("empirical steps must be finite")
            arr.setflags(write=False)
            object.__setattr__(self, "steps", arr)
            if self.b is not None or self.mu is not None or self.sigma is not None:
                raise RangeError("empirical takes only steps")
        else:
            raise RangeError(f"unknown step family {self.family!r}")

    @classmethod
    def uniform(cls, b: float) -> "StepModel":
        return cls("uniform_b", b=float(b))

    @classmethod
    def normal(cls, mu: float, sigma: float) -> "StepModel":
        return cls("normal", mu=float(mu), sigma=float(sigma))

    @classmethod
    def empirical(cls, steps) -> "StepModel":
        return cls("empirical", steps=np.asarray(steps, dtype=np.float64))

    def describe(self) -> str:
        if self.family == "uniform_b":
            return f"uniform_b(b={self.b})"
        if self.family == "normal":
            return f"normal(mu={self.mu}, sigma={self.sigma})"
        return f"empirical({self.steps.size} steps)"


def _sample_steps(model: StepModel, shape, rng: np.random.Generator) -> np.ndarray:
    if model.family == "uniform_b":
        return rng.uniform(model.b - 1.0, model.b, shape)
    if model.family == "normal":
        return rng.normal(model.mu, model.sigma, shape)
    return rng.choice(model.steps, size=shape, replace=True)


def step_sign_distribution(model: StepModel) -> PatternDistribution:
    """The order-2 pattern distribution (P(Y > 0), P(Y <= 0)) of a step law.

    For uniform_b the up-weight reproduces the closed-form tables' monotone
    entries bit for bit, so momentum on exact models cancels identically.
    Zero steps count as non-decreasing, matching the stable tie rule.
    """
    if model.family == "uniform_b":
        b = model.b
        up = b if b >= 0.5 else 1.0 - (1.0 - b)
    elif model.family == "normal":
        up = 0.5 * (1.0 + math.erf(model.mu / (model.sigma * math.sqrt(2.0))))
    else:
        up = float(np.mean(model.steps >= 0))
    return PatternDistribution(2, np.array([up, 1.0 - up]), "model", 0)


# --------------------------------------------------------------------------
# closed forms
# --------------------------------------------------------------------------

# per-class formulas for uniform steps, valid on b in [1/2, 1);
# (members, formula below 2/3, formula above) with None meaning one branch

_UNIF3 = [
    (("123",), lambda b: b ** 2, None),
    (("132", "213"), lambda b: 0.5 * (1.0 - b) * (3.0 * b - 1.0), None),
    (("231", "312"), lambda b: 0.5 * (1.0 - b) ** 2, None),
    (("321",), lambda b: (1.0 - b) ** 2, None),
]

_UNIF4 = [
    (("1234",), lambda b: b ** 3, None),
    (("1243", "2134"), lambda b: 0.5 * b * (1.0 - b) * (3.0 * b - 1.0), None),
    (("1324",), lambda b: (1.0 - b) * (7.0 * b * b - 5.0 * b + 1.0) / 3.0, None),
    (("1342", "3124"), lambda b: (1.0 - b) ** 2 * (4.0 * b - 1.0) / 6.0, None),
    (("1423", "2314"), lambda b: (1.0 - b) ** 2 * (5.0 * b - 2.0) / 6.0, None),
    (("1432", "2143", "3214"),
     lambda b: (2.0 - 12.0 * b + 24.0 * b * b - 15.0 * b ** 3) / 6.0,
     lambda b: (1.0 - b) ** 2 * (2.0 * b - 1.0)),
    (("2341", "3412", "4123"), lambda b: (1.0 - b) ** 3 / 6.0, None),
    (("2413",), lambda b: (1.0 - b) ** 3 / 6.0, None),
    (("2431", "4213"),
     lambda b: (24.0 * b ** 3 - 45.0 * b * b + 27.0 * b - 5.0) / 6.0,
     lambda b: 0.5 * (1.0 - b) ** 3),
    (("3142",),
     lambda b: (25.0 * b ** 3 - 48.0 * b * b + 30.0 * b - 6.0) / 6.0,
     lambda b: (1.0 - b) ** 3 / 3.0),
    (("3241", "4132"), lambda b: (1.0 - b) ** 3 / 6.0, None),
    (("3421", "4312"), lambda b: 0.5 * (1.0 - b) ** 3, None),
    (("4231",), lambda b: (1.0 - b) ** 3 / 3.0, None),
    (("4321",), lambda b: (1.0 - b) ** 3, None),
]

# centered-normal constants by the same class rows (exact orthant values,
# rounded to four decimals; raw class-weighted total is 0.9998)
_NORMAL4 = (0.1250, 0.0625, 0.0417, 0.0355, 0.0208, 0.0270, 0.0270,
            0.0146, 0.0355, 0.0146, 0.0208, 0.0625, 0.0417, 0.1250)

_UNIF_TABLES = {3: _UNIF3, 4: _UNIF4}


@lru_cache(maxsize=None)
def _class_ranks(n: int) -> tuple[tuple[int, ...], ...]:
    table = _UNIF_TABLES[n]
    return tuple(
        tuple(OrdinalPattern.from_string(s).rank for s in members)
        for members, _, _ in table
    )


@lru_cache(maxsize=None)
def _complement_perm(n: int) -> np.ndarray:
    perm = np.empty(_FACT[n], dtype=np.intp)
    for r in range(_FACT[n]):
        perm[r] = symmetry_transform(lex_unrank(n, r), "complement").rank
    perm.setflags(write=False)
    return perm


def _uniform_weights(n: int, b: float) -> np.ndarray:
    low_branch = b <= 2.0 / 3.0
    weights = np.empty(_FACT[n])
    for ranks, (_, low, high) in zip(_class_ranks(n), _UNIF_TABLES[n]):
        fn = low if (high is None or low_branch) else high
        value = fn(b)
        for r in ranks:
            weights[r] = value
    return weights


def closed_form_uniform(n: int, b: float) -> PatternDistribution:
    """Exact pattern distribution of a uniform-step walk, n in {3, 4}.

    Steps are uniform on [b-1, b] with b in (0, 1). Values below 1/2 use
    the reflection P_b(pi) = P_{1-b}(complement(pi)). The monotone
    patterns get exactly b^(n-1) and (1-b)^(n-1).
    """
    if n not in (3, 4):
        raise OrderError(f"closed forms exist for n in (3, 4), got {n}")
    if not 0.0 < b < 1.0:
        raise RangeError(f"b must be in (0, 1), got {b}")
    if b >= 0.5:
        weights = _uniform_weights(n, b)
    else:
        weights = _uniform_weights(n, 1.0 - b)[_complement_perm(n)]
    return PatternDistribution(n, weights, "model", 0)


def closed_form_normal_zero_mean(n: int) -> PatternDistribution:
    """Exact pattern distribution of a centered normal-step walk, n in {3, 4}.

    Independent of sigma. The n = 3 weights are the exact fractions
    (1/4, 1/8, 1/8, 1/4) by class; n = 4 uses the four-decimal orthant
    constants, renormalized to total exactly one.
    """
    if n == 3:
        weights = np.array([0.25, 0.125, 0.125, 0.125, 0.125, 0.25])
        return PatternDistribution(3, weights, "model", 0)
    if n == 4:
        weights = np.empty(_FACT[4])
        for ranks, value in zip(_class_ranks(4), _NORMAL4):
            for r in ranks:
                weights[r] = value
        return PatternDistribution(4, weights / weights.sum(), "model", 0)
    raise OrderError(f"closed forms exist for n in (3, 4), got {n}")


# --------------------------------------------------------------------------
# Monte Carlo
# --------------------------------------------------------------------------

_MC_CHUNK = 1 << 20


def monte_carlo_distribution(
    model: StepModel, n: int, samples: int, seed=0
) -> PatternDistribution:
    """Pattern frequencies over independent simulated length-n walks.

    Each walk starts at 0 and takes n-1 fresh steps; m >= 100 n! keeps
    the per-pattern standard error below roughly sqrt(p/m). Deterministic
    given the seed. Exact ties (possible under empirical step multisets)
    rank earlier-index-smaller.
    """
    if not 2 <= n <= MAX_ORDER:
        raise RangeError(f"order must be in [2, {MAX_ORDER}], got {n}")
    if samples < 1:
        raise RangeError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    counts = np.zeros(_FACT[n], dtype=np.int64)
    remaining = samples
    while remaining > 0:
        k = min(_MC_CHUNK, remaining)
        z = np.zeros((k, n))
        np.cumsum(_sample_steps(model, (k, n - 1), rng), axis=1, out=z[:, 1:])
        counts += np.bincount(_window_ranks(z, strict=False), minlength=_FACT[n])
        remaining -= k
    return PatternDistribution(n, counts / samples, "model", samples)


# --------------------------------------------------------------------------
# quadrature oracle
# --------------------------------------------------------------------------

#: grid-unit tolerance for calling a cut point an exact midpoint hit
_SNAP_GRID = 1e-6
#: absolute tolerance for calling two partial sums tied at a cell center
_SNAP_SUM = 1e-9


def _count_below(cut_grid: np.ndarray, res: int) -> np.ndarray:
    # midpoints sit at grid coordinates 0.5, 1.5, ...; cut_grid is the cut
    # in units of cells minus 0.5, so midpoint k falls below iff k < cut.
    # Exact hits count half, which splits tied cells between the two
    # adjacent patterns and keeps total mass exactly 1.
    with np.errstate(invalid="ignore"):
        nearest = np.rint(cut_grid)
        hit = np.abs(cut_grid - nearest) <= _SNAP_GRID
    below = np.where(hit, nearest, np.ceil(cut_grid))
    below = np.clip(below, 0.0, res)
    return below + np.where(hit & (nearest >= 0) & (nearest < res), 0.5, 0.0)


def _prefix_chunks(res: int, n: int, mids: np.ndarray, chunk: int):
    """Yield (k, n-1) matrices of walk prefixes (0, y1, y1+y2, ...) over
    the midpoint grid of the first n-2 step axes."""
    total = res ** (n - 2)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total))
        z = np.zeros((idx.size, n - 1))
        for axis in range(n - 2):
            digit = (idx // res ** (n - 3 - axis)) % res
            z[:, axis + 1] = z[:, axis] + mids[digit]
        yield z


@lru_cache(maxsize=8)
def _oracle_sweep(n: int, b: float, resolution: int) -> np.ndarray:
    """Quadrature volumes of all n! pattern regions in [b-1, b]^(n-1).

    Midpoint rule with resolution cells per axis; the last axis is counted
    analytically per column, so cost grows as resolution^(n-2) columns.
    A column whose prefix sums tie at the cell center spreads its mass
    equally over every ordering the non-tied pairs admit (normalized per
    column, so the volumes always total exactly 1). Error is
    O(1/resolution) from cells straddling the boundary hyperplanes;
    everything else is exact.
    """
    mids = (b - 1.0) + (np.arange(resolution) + 0.5) / resolution
    words = [lex_unrank(n, r).word for r in range(_FACT[n])]
    prefixes = [lex_unrank(n - 1, r).word for r in range(_FACT[n - 1])]
    prefix_index = {pword: u for u, pword in enumerate(prefixes)}
    prefix_of = [
        prefix_index[tuple(r - (r > word[n - 1]) for r in word[: n - 1])]
        for word in words
    ]
    acc = np.zeros(_FACT[n])
    for z in _prefix_chunks(resolution, n, mids, 1 << 17):
        k = z.shape[0]
        pair_tie = {}
        pair_pos = {}
        for a in range(n - 1):
            for c in range(a + 1, n - 1):
                d = z[:, c] - z[:, a]
                pair_tie[a, c] = np.abs(d) <= _SNAP_SUM
                pair_pos[a, c] = d > 0
        share = np.empty((len(prefixes), k))
        for u, pword in enumerate(prefixes):
            ind = np.ones(k)
            for a in range(n - 1):
                for c in range(a + 1, n - 1):
                    match = pair_pos[a, c] == (pword[c] > pword[a])
                    ind = ind * np.where(pair_tie[a, c], 1.0, match)
            share[u] = ind
        share /= share.sum(axis=0)
        z_last = z[:, n - 2]
        for rank, word in enumerate(words):
            weight = share[prefix_of[rank]]
            if not weight.any():
                continue
            lo = np.full(k, -np.inf)
            hi = np.full(k, np.inf)
            for a in range(n - 1):
                cut = z[:, a] - z_last
                if word[a] < word[n - 1]:
                    lo = np.maximum(lo, cut)
                else:
                    hi = np.minimum(hi, cut)
            lo_grid = (lo - (b - 1.0)) * resolution - 0.5
            hi_grid = (hi - (b - 1.0)) * resolution - 0.5
            cells = _count_below(hi_grid, resolution) - _count_below(lo_grid, resolution)
            acc[rank] += float((weight * np.maximum(cells, 0.0)).sum())
    acc /= float(resolution) ** (n - 1)
    acc.setflags(write=False)
    return acc


def volume_oracle(
    pattern: OrdinalPattern, model: StepModel, resolution: int
) -> float:
    """Deterministic quadrature estimate of P(pattern) for a uniform-step walk.

    Counts midpoint-grid cells of the step cube whose partial sums realize
    the pattern (tied cells count half). Independent of the closed forms
    and of any random number stream, with error O(1/resolution); this is
    the arbiter the closed-form tables were validated against.
    """
    if model.family != "uniform_b":
        raise RangeError("the volume oracle is defined for uniform_b models")
    n = pattern.order
    if n > 5:
        raise OrderError(f"volume oracle supports n <= 5, got {n}")
    if resolution < 2:
        raise RangeError(f"resolution must be >= 2, got {resolution}")
    sweep = _oracle_sweep(n, float(model.b), int(resolution))
    return float(sweep[pattern.rank])


# --------------------------------------------------------------------------
# data-driven nulls
# --------------------------------------------------------------------------

def default_walk_length(n_obs: int) -> int:
    """Walk length used for associated nulls: max(10^6, 100 N)."""
    return max(1_000_000, 100 * n_obs)


def associated_walk(series, length: int, seed=0) -> TimeSeries:
    """A walk of the given length whose steps are resampled (with
    replacement) from the observed first differences of the series.

    Starts at 0; the output has exactly `length` values.
    """
    values = series.values if isinstance(series, TimeSeries) else np.asarray(series, float)
    if values.size < 2:
        raise LengthError("need at least two observations to extract steps")
    if length < 2:
        raise LengthError(f"walk length must be >= 2, got {length}")
    steps = np.diff(values)
    rng = np.random.default_rng(seed)
    draws = rng.choice(steps, size=length - 1, replace=True)
    walk = np.empty(length)
    walk[0] = 0.0
    np.cumsum(draws, out=walk[1:])
    return TimeSeries(walk)


@dataclass(frozen=True)
class NullSpec:
    """Which null model to hold a series against.

    kind "associated" resamples the series' own steps into a walk of
    walk_length (default max(10^6, 100 N)); "uniform" and "normal" are
    parametric step laws, evaluated exactly when closed_form is set and
    n <= 4 (normal requires mu = 0), by Monte Carlo with `samples` draws
    otherwise.
    """

    kind: Literal["associated", "uniform", "normal"] = "associated"
    walk_length: int | None = None
    b: float = 0.5
    mu: float = 0.0
    sigma: float = 1.0
    closed_form: bool = False
    samples: int = 1_000_000

    def __post_init__(self):
        if self.kind not in ("associated", "uniform", "normal"):
            raise RangeError(f"unknown null kind {self.kind!r}")
        if self.kind == "uniform" and not 0.0 < self.b < 1.0:
            raise RangeError(f"uniform null needs b in (0, 1), got {self.b}")
        if self.kind == "normal" and not self.sigma > 0:
            raise RangeError(f"normal null needs sigma > 0, got {self.sigma}")
        if self.samples < 1:
            raise RangeError("samples must be >= 1")
        if self.walk_length is not None and self.walk_length < 2:
            raise RangeError("walk_length must be >= 2")

    def describe(self) -> str:
        if self.kind == "associated":
            length = self.walk_length if self.walk_length else "auto"
            return f"associated(walk_length={length})"
        if self.kind == "uniform":
            how = "closed_form" if self.closed_form else f"samples={self.samples}"
            return f"uniform_b(b={self.b}, {how})"
        how = "closed_form" if self.closed_form else f"samples={self.samples}"
        return f"normal(mu={self.mu}, sigma={self.sigma}, {how})"


@dataclass(frozen=True)
class NullModel:
    """A realized null: step model, order, and its pattern distribution."""

    step_model: StepModel
    order: int
    distribution: PatternDistribution
    method: Literal["closed_form", "monte_carlo", "quadrature"]
    sample_count: int
    seed: int | None

    def __post_init__(self):
        if self.distribution.order != self.order:
            raise RangeError("distribution order does not match the model order")
        if self.method == "closed_form":
            legit = self.order <= 4 and (
                self.step_model.family == "uniform_b"
                or (self.step_model.family == "normal" and self.step_model.mu == 0)
            )
            if not legit:
                raise RangeError(
                    "closed_form is only available for uniform_b or centered "
                    "normal steps at n <= 4"
                )

    def to_json_dict(self) -> dict:
        params: dict = {}
        if self.step_model.family == "uniform_b":
            params["b"] = self.step_model.b
        elif self.step_model.family == "normal":
            params["mu"] = self.step_model.mu
            params["sigma"] = self.step_model.sigma
        else:
            params["step_count"] = int(self.step_model.steps.size)
        return {
            "family": self.step_model.family,
            "parameters": params,
            "n": self.order,
            "method": self.method,
            "seed": self.seed,
            "sample_count": self.sample_count,
            "weights": self.distribution.as_dict(),
        }


def build_null(series, n: int, spec: NullSpec, seed=0) -> NullModel:
    """Realize a NullSpec for a given series and order."""
    if spec.kind == "associated":
        values = series.values if isinstance(series, TimeSeries) else np.asarray(series, float)
        length = spec.walk_length or default_walk_length(values.size)
        walk = associated_walk(values, length, seed)
        dist = empirical_distribution(walk, n)
        dist = PatternDistribution(n, dist.weights, "model", dist.sample_count)
        model = StepModel.empirical(np.diff(values))
        return NullModel(model, n, dist, "monte_carlo", dist.sample_count,
                         _seed_int(seed))
    if spec.kind == "uniform":
        model = StepModel.uniform(spec.b)
        if spec.closed_form:
            if n > 4:
                raise OrderError(f"closed-form uniform nulls need n <= 4, got {n}")
            return NullModel(model, n, closed_form_uniform(n, spec.b),
                             "closed_form", 0, None)
        dist = monte_carlo_distribution(model, n, spec.samples, seed)
        return NullModel(model, n, dist, "monte_carlo", spec.samples, _seed_int(seed))
    model = StepModel.normal(spec.mu, spec.sigma)
    if spec.closed_form:
        if spec.mu != 0:
            raise RangeError("closed-form normal nulls require mu = 0")
        if n > 4:
            raise OrderError(f"closed-form normal nulls need n <= 4, got {n}")
        return NullModel(model, n, closed_form_normal_zero_mean(n),
                         "closed_form", 0, None)
    dist = monte_carlo_distribution(model, n, spec.samples, seed)
    return NullModel(model, n, dist, "monte_carlo", spec.samples, _seed_int(seed))


def _seed_int(seed) -> int | None:
    if isinstance(seed, (int, np.integer)):
        return int(seed)
    return None  # derived SeedSequence; recorded upstream


def _kl_with_fallback(p, q, smoothing):
    # pseudocounts only when the sampled null actually leaves an observed
    # pattern empty; a fully supported null is used as-is, so exact and
    # degenerate cases return 0 exactly
    try:
        return kl_divergence(p, q, 0.0)
    except SupportError:
        if smoothing <= 0 or q.sample_count == 0:
            raise
        return kl_divergence(p, q, smoothing)


def kl_to_null(
    series,
    n: int,
    model_spec: NullSpec | StepModel | None = None,
    seed=0,
    d: int = 1,
    policy: TiePolicy | None = None,
    smoothing: float = 1.0,
) -> float:
    """Normalized KL divergence of a series' patterns from a null model.

    model_spec may be a NullSpec, a bare StepModel (simulated with the
    default sample budget), or None for the associated-walk null.
    Pseudocount smoothing kicks in only if the sampled null misses a
    pattern the series realizes.
    """
    if model_spec is None:
        model_spec = NullSpec()
    if isinstance(model_spec, StepModel):
        null_dist = monte_carlo_distribution(model_spec, n, 1_000_000, seed)
    else:
        null_dist = build_null(series, n, model_spec, seed).distribution
    p = empirical_distribution(series, n, d, policy)
    return _kl_with_fallback(p, null_dist, smoothing)


@dataclass(frozen=True)
class BandResult:
    """Bootstrap replicate divergences: mean, sample std, raw values."""

    mean: float
    std: float
    samples: tuple[float, ...]


def bootstrap_band(
    series,
    n: int,
    replicates: int = 400,
    walk_length: int | None = None,
    seed=0,
    d: int = 1,
    policy: TiePolicy | None = None,
    smoothing: float = 1.0,
    null_walk_length: int | None = None,
) -> BandResult:
    """Spread of the KL-to-null statistic under the series' own step law.

    Builds one shared associated-walk null from the series, then generates
    `replicates` independent associated walks of walk_length (default: the
    series length) and measures each against that shared null. Replicate
    seed streams derive from `seed`, so results are bit-identical across
    runs and independent of evaluation order.
    """
    if replicates < 2:
        raise RangeError(f"need at least 2 replicates, got {replicates}")
    values = series.values if isinstance(series, TimeSeries) else np.asarray(series, float)
    base = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    children = base.spawn(replicates + 1)
    null_length = null_walk_length or default_walk_length(values.size)
    null_walk = associated_walk(values, null_length, children[0])
    q = empirical_distribution(null_walk, n)
    q = PatternDistribution(n, q.weights, "model", q.sample_count)
    length = walk_length or values.size
    draws = []
    for child in children[1:]:
        replica = associated_walk(values, length, child)
        p = empirical_distribution(replica, n, d, policy)
        draws.append(_kl_with_fallback(p, q, smoothing))
    arr = np.asarray(draws)
    return BandResult(float(arr.mean()), float(arr.std(ddof=1)), tuple(draws))
