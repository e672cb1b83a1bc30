"""Finite sets, total functions between them, and exhaustive arrow enumeration.

This is the explicit category the rest of the library stands on: objects are
:class:`FiniteSet` values, arrows are :class:`FiniteFunction` values, and
`enumerate_functions` walks every arrow between two objects so that laws can
be checked by brute force instead of taken on faith.

Everything is immutable after construction and safe to share across threads.
Sets keep their elements in one canonical sorted order, which makes equality
of sets, functions, and nested subsets plain structural comparison.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from typing import Any

Atom = Any  # ints, bools, strings, or Subset values nested recursively

DEFAULT_ENUMERATION_CAP = 1_000_000

# Kind tags give mixed-type element universes a single total order.
_KIND_INT = 0
_KIND_STR = 1
_KIND_SUBSET = 2


class FinsetError(Exception):
    """Base class for finite-set construction and application errors."""


class MissingMappingError(FinsetError):
    """A domain element has no entry in the function table."""


class CodomainViolationError(FinsetError):
    """A table value is not a member of the declared codomain."""


class DuplicateKeyError(FinsetError):
    """The same domain element was mapped twice."""


class CompositionMismatchError(FinsetError):
    """Inner codomain and outer domain disagree."""


class NotInDomainError(FinsetError):
    """The argument is outside the function's domain (or a subset's carrier)."""


class EnumerationTooLargeError(FinsetError):
    """The requested function space exceeds the enumeration cap."""


def atom_key(atom: Atom):
    """Sort key giving a total order over every admissible atom kind.

    Booleans share the integer kind: the host language already identifies
    True with 1 in equality and hashing, and the ordering must agree with
    equality for canonicalization to be sound.
    """
    if isinstance(atom, (bool, int)):
        return (_KIND_INT, atom)
    if isinstance(atom, str):
        return (_KIND_STR, atom)
    if isinstance(atom, Subset):
        return atom.sort_key
    raise TypeError(f"not an admissible atom: {atom!r}")


class FiniteSet:
    """An immutable collection of distinct atoms in canonical sorted order.

    Two sets built from any permutations of the same atoms compare equal and
    have identical element tuples, so downstream diagram checks reduce to
    structural equality.
    """

    __slots__ = ("elements", "_members", "_hash")

    def __init__(self, atoms: Iterable[Atom] = ()):
        unique = list(dict.fromkeys(atoms))
        unique.sort(key=atom_key)
        self.elements: tuple[Atom, ...] = tuple(unique)
        self._members = frozenset(self.elements)
        self._hash = hash(self.elements)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, atom: Atom) -> bool:
        return atom in self._members

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self._hash == other._hash and self.elements == other.elements

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if len(self.elements) <= 8:
            return f"FiniteSet({{{', '.join(map(repr, self.elements))}}})"
        return f"FiniteSet(<{len(self.elements)} atoms>)"


def make_finite_set(atoms: Iterable[Atom] = ()) -> FiniteSet:
    """Build a canonical FiniteSet from any iterable of atoms."""
    return FiniteSet(atoms)


class Subset:
    """A subset of a fixed carrier set, itself usable as a set element.

    Nesting subsets is what lets P(X), P(P(X)) and P(P(P(X))) be ordinary
    FiniteSets: their elements are Subset atoms over the next space down.
    The constructor trusts its input; use `make_subset` for validated,
    canonicalizing construction.
    """

    __slots__ = ("carrier", "members", "member_set", "sort_key", "_hash")

    def __init__(self, carrier: FiniteSet, members: tuple[Atom, ...]):
        self.carrier = carrier
        self.members = members
        self.member_set = frozenset(members)
        self.sort_key = (_KIND_SUBSET, tuple(atom_key(m) for m in members))
        self._hash = hash(self.sort_key)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, atom: Atom) -> bool:
        return atom in self.member_set

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Subset):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.members == other.members
            and self.carrier == other.carrier
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if len(self.members) <= 8:
            return f"Subset({{{', '.join(map(repr, self.members))}}})"
        return f"Subset(<{len(self.members)} atoms>)"


def make_subset(carrier: FiniteSet, members: Iterable[Atom]) -> Subset:
    """Validated Subset constructor: dedupes, sorts, and checks membership."""
    unique = list(dict.fromkeys(members))
    for atom in unique:
        if atom not in carrier:
            raise NotInDomainError(f"{atom!r} is not in the carrier {carrier!r}")
    unique.sort(key=atom_key)
    return Subset(carrier, tuple(unique))


class FiniteFunction:
    """A total function between two finite sets, stored as an explicit table.

    `pairs` holds one (x, f(x)) entry per domain element in canonical domain
    order; `table` is the same data as a dict for O(1) application. Equality
    is categorical arrow identity: domain, codomain, and table must all agree.

    The constructor trusts its input; use `make_function` for validation.
    """

    __slots__ = ("domain", "codomain", "pairs", "table", "_hash")

    def __init__(self, domain: FiniteSet, codomain: FiniteSet, pairs: Iterable[tuple[Atom, Atom]]):
        self.domain = domain
        self.codomain = codomain
        self.pairs: tuple[tuple[Atom, Atom], ...] = tuple(pairs)
        self.table = dict(self.pairs)
        self._hash = hash((domain, codomain, self.pairs))

    def __call__(self, x: Atom) -> Atom:
        return apply(self, x)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteFunction):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteFunction({self.domain!r} -> {self.codomain!r})"


def make_function(
    domain: FiniteSet,
    codomain: FiniteSet,
    table: Mapping[Atom, Atom] | Iterable[tuple[Atom, Atom]],
) -> FiniteFunction:
    """Build a validated arrow from an explicit mapping table.

    The table keys must be exactly the domain elements and every value must
    lie in the codomain; anything else raises one of DuplicateKeyError,
    NotInDomainError, MissingMappingError, or CodomainViolationError.
    """
    items = table.items() if isinstance(table, Mapping) else table
    mapping: dict[Atom, Atom] = {}
    for key, value in items:
        if key in mapping:
            raise DuplicateKeyError(f"{key!r} is mapped more than once")
        mapping[key] = value
    for key in mapping:
        if key not in domain:
            raise NotInDomainError(f"table key {key!r} is not a domain element")
    for x in domain:
        if x not in mapping:
            raise MissingMappingError(f"domain element {x!r} has no mapping")
    for x, value in mapping.items():
        if value not in codomain:
            raise CodomainViolationError(f"{x!r} maps to {value!r}, which is outside the codomain")
    return FiniteFunction(domain, codomain, tuple((x, mapping[x]) for x in domain))


def identity(space: FiniteSet) -> FiniteFunction:
    """The identity arrow on `space`."""
    return FiniteFunction(space, space, tuple((x, x) for x in space))


def compose(outer: FiniteFunction, inner: FiniteFunction) -> FiniteFunction:
    """The composite outer∘inner, defined when inner's codomain is outer's domain."""
    if inner.codomain != outer.domain:
        raise CompositionMismatchError(
            f"cannot compose: inner codomain {inner.codomain!r} != outer domain {outer.domain!r}"
        )
    table = outer.table
    return FiniteFunction(
        inner.domain,
        outer.codomain,
        tuple((x, table[y]) for x, y in inner.pairs),
    )


def apply(f: FiniteFunction, x: Atom) -> Atom:
    """Evaluate the arrow at one atom of its domain."""
    try:
        return f.table[x]
    except KeyError:
        raise NotInDomainError(f"{x!r} is not in the domain of {f!r}") from None


def enumerate_functions(
    domain: FiniteSet,
    codomain: FiniteSet,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[FiniteFunction]:
    """Yield every total function domain -> codomain exactly once.

    The order is deterministic: domain elements are assigned images from
    `itertools.product` over the codomain's canonical order. The full count
    |codomain| ** |domain| is checked against `cap` up front, so the error
    is raised eagerly rather than mid-iteration.
    """
    total = len(codomain) ** len(domain)
    if total > cap:
        raise EnumerationTooLargeError(
            f"{total} functions from {domain!r} to {codomain!r} exceeds the cap of {cap}"
        )
    xs = domain.elements

    def generate() -> Iterator[FiniteFunction]:
        for images in itertools.product(codomain.elements, repeat=len(xs)):
            yield FiniteFunction(domain, codomain, tuple(zip(xs, images)))

    return generate()
