"""Symbolic descriptors for subsets of an infinite Fort space.

A subset is identified by three facts only: its cardinality, whether it
contains the particular point ``b``, and the cardinality of its complement.
For every predicate this library evaluates, two subsets with the same
descriptor are interchangeable, so the classifiers below work entirely at
the descriptor level.  The countable concrete model in
:mod:`fortdesign.concrete` grounds these predicates with explicit point maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cardinal import Cardinal, ZERO, compare


@dataclass(frozen=True)
class SpaceDescriptor:
    """The ambient space: infinite, with a distinguished point ``b``.

    ``b`` is part of every space and is not parameterized; descriptors only
    record membership of ``b``, never its identity.
    """

    size: Cardinal

    def __post_init__(self) -> None:
        if self.size.is_finite:
            raise ValueError("the ambient space must be infinite")


@dataclass(frozen=True)
class SubsetDescriptor:
    """(size, contains_b, cosize) triple for a subset of the space."""

    size: Cardinal
    contains_b: bool
    cosize: Cardinal

    def to_record(self) -> dict[str, str]:
        return {
            "size": str(self.size),
            "contains_b": "true" if self.contains_b else "false",
            "cosize": str(self.cosize),
        }

    @classmethod
    def from_record(cls, record: dict[str, str]) -> "SubsetDescriptor":
        flag = record["contains_b"].strip().lower()
        if flag not in ("true", "false"):
            raise ValueError(f"contains_b must be true or false, got {flag!r}")
        return cls(
            size=Cardinal.parse(record["size"]),
            contains_b=flag == "true",
            cosize=Cardinal.parse(record["cosize"]),
        )

    def __str__(self) -> str:
        b = "true" if self.contains_b else "false"
        return f"(size={self.size},b={b},cosize={self.cosize})"


def validate(subset: SubsetDescriptor, space: SpaceDescriptor) -> list[str]:
    """Check every descriptor invariant; the returned list is empty iff valid.

    Violations are data, not exceptions: callers that require validity raise
    on a nonempty result, probes and complements may inspect it.
    """
    violations = []
    x = space.size
    if max(subset.size, subset.cosize) != x:
        violations.append(
            f"max(size, cosize) must equal card(X)={x}, "
            f"got size={subset.size}, cosize={subset.cosize}"
        )
    if subset.size > x:
        violations.append(f"size={subset.size} exceeds card(X)={x}")
    if subset.cosize > x:
        violations.append(f"cosize={subset.cosize} exceeds card(X)={x}")
    if subset.size < x and subset.cosize != x:
        violations.append("size below card(X) forces cosize = card(X)")
    if subset.cosize < x and subset.size != x:
        violations.append("cosize below card(X) forces size = card(X)")
    if subset.size == ZERO and subset.contains_b:
        violations.append("the empty set cannot contain b")
    if subset.cosize == ZERO and not subset.contains_b:
        violations.append("a set with empty complement must contain b")
    return violations


def complement(subset: SubsetDescriptor, space: SpaceDescriptor) -> SubsetDescriptor:
    """Descriptor of X minus the subset; an involution on valid descriptors."""
    return SubsetDescriptor(
        size=subset.cosize,
        contains_b=not subset.contains_b,
        cosize=subset.size,
    )


def size_minus_b(subset: SubsetDescriptor) -> Cardinal:
    """card(S \\ {b}): decrements only finite b-containing sizes."""
    if subset.contains_b and subset.size.is_finite:
        return Cardinal.finite(max(subset.size.value - 1, 0))
    return subset.size


def cosize_minus_b(subset: SubsetDescriptor) -> Cardinal:
    """card(X \\ (S u {b})): the b-free part of the complement."""
    if not subset.contains_b and subset.cosize.is_finite:
        return Cardinal.finite(max(subset.cosize.value - 1, 0))
    return subset.cosize


def subspace_homeomorphic(u: SubsetDescriptor, v: SubsetDescriptor) -> bool:
    """Whether the two subsets are homeomorphic as subspaces.

    Finite subsets are discrete, so only cardinality matters.  Infinite
    subsets are homeomorphic exactly when their cardinalities agree and they
    agree on membership of ``b``: with ``b`` the subspace is again a Fort
    space with a limit point, without it the subspace is discrete.
    """
    if u.size != v.size:
        return False
    if u.size.is_finite:
        return True
    return u.contains_b == v.contains_b


def pair_equivalent(
    u: SubsetDescriptor, v: SubsetDescriptor, space: SpaceDescriptor
) -> bool:
    """Whether U ~ V and X\\U ~ X\\V simultaneously.

    Computed as equal sizes, equal cosizes and matching b-membership.  One of
    U, X\\U is always infinite, so the b clause is exactly what matching on
    both sides requires.  ``space`` is part of the contract (both descriptors
    must be valid in the same space) but carries no extra data.
    """
    return (
        u.size == v.size
        and u.cosize == v.cosize
        and u.contains_b == v.contains_b
    )


def embeddable(c: SubsetDescriptor, d: SubsetDescriptor) -> bool:
    """Whether C is homeomorphic to some subspace of D.

    Holds iff card(C) <= card(D) and, when C is infinite, ``b`` does not lie
    in C without lying in D: an infinite copy of C carries its limit point
    with it.
    """
    if compare(c.size, d.size) > 0:
        return False
    if c.size.is_finite:
        return True
    return not (c.contains_b and not d.contains_b)


def descriptor_grid(
    space: SpaceDescriptor,
    max_finite: int = 6,
    finite_sizes_only: bool = False,
) -> list[SubsetDescriptor]:
    """All valid nonempty descriptors with small symbolic sizes.

    Sizes range over Finite(1..max_finite) and, unless ``finite_sizes_only``,
    the alephs up to the space's own; cosizes take every value the
    invariants admit.  Used by the exhaustive sweeps.
    """
    sizes: list[Cardinal] = [Cardinal.finite(n) for n in range(1, max_finite + 1)]
    if not finite_sizes_only:
        sizes += [Cardinal.aleph(i) for i in range(space.size.value + 1)]
    grid: list[SubsetDescriptor] = []
    for size in sizes:
        if size < space.size:
            for flag in (True, False):
                grid.append(SubsetDescriptor(size, flag, space.size))
        else:
            cosizes: Iterable[Cardinal] = [
                Cardinal.finite(n) for n in range(0, max_finite + 1)
            ] + [Cardinal.aleph(i) for i in range(space.size.value + 1)]
            for cosize in cosizes:
                flags = (True,) if cosize == ZERO else (True, False)
                for flag in flags:
                    grid.append(SubsetDescriptor(size, flag, cosize))
    return grid
