"""Multipartitions over Frobenius orbits and their class statistics.

A multipartition assigns a nonempty partition to finitely many orbits of one
kind. For kind phi these index the conjugacy classes of the unitary group,
and the centralizer orders, class sizes, and torus data computed here are the
combinatorial side of that correspondence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import NamedTuple

from .orbits import CyclicElt, OrbitId, enumerate_orbits, level_order, orbit_of
from .partitions import (
    Partition,
    conjugate,
    is_partition,
    multiplicities,
    n_stat,
    partitions_of,
    z_stat,
)
from .symfunc import psi_poly


def unitary_group_order(q: int, n: int) -> int:
    """Order q^(n(n-1)/2) * prod(q^i - (-1)^i) of the rank-n unitary group.

    >>> [unitary_group_order(2, n) for n in (1, 2, 3)]
    [3, 18, 648]
    """
    return q ** (n * (n - 1) // 2) * math.prod(level_order(q, i) for i in range(1, n + 1))


def general_linear_order(q: int, n: int) -> int:
    """Order of GL_n over the field with q elements."""
    return q ** (n * (n - 1) // 2) * math.prod(q**i - 1 for i in range(1, n + 1))


@dataclass(frozen=True)
class MultiPartition:
    """Finite map from orbits to nonempty partitions, canonically sorted."""

    kind: str
    q: int
    assignment: tuple[tuple[OrbitId, Partition], ...]

    def __post_init__(self) -> None:
        items = self.assignment
        if isinstance(items, dict):
            items = tuple(items.items())
        blocks = []
        for orb, lam in items:
            lam = tuple(lam)
            if orb.kind != self.kind or orb.q != self.q:
                raise ValueError("orbit kind or q does not match the multipartition")
            if not lam or not is_partition(lam):
                raise ValueError(f"invalid block partition {lam!r}")
            blocks.append((orb, lam))
        blocks.sort(key=lambda b: (b[0].size, b[0].residue))
        if len({orb for orb, _ in blocks}) != len(blocks):
            raise ValueError("repeated orbit in assignment")
        object.__setattr__(self, "assignment", tuple(blocks))

    def part(self, orb: OrbitId) -> Partition:
        for other, lam in self.assignment:
            if other == orb:
                return lam
        return ()

    def orbits(self) -> tuple[OrbitId, ...]:
        return tuple(orb for orb, _ in self.assignment)

    def sort_key(self) -> tuple:
        return tuple((orb.size, orb.residue, lam) for orb, lam in self.assignment)

    def to_json(self) -> list:
        return [[orb.to_json(), list(lam)] for orb, lam in self.assignment]


def mp_size(nu: MultiPartition) -> int:
    """Total size, each block weighted by its orbit degree."""
    return sum(orb.size * sum(lam) for orb, lam in nu.assignment)


class MPStats(NamedTuple):
    size: int
    n: int
    conjugate: MultiPartition
    height: int
    odd: int


def mp_conjugate(nu: MultiPartition) -> MultiPartition:
    """Blockwise partition conjugation."""
    return MultiPartition(
        nu.kind, nu.q, tuple((orb, conjugate(lam)) for orb, lam in nu.assignment)
    )


def mp_stats(nu: MultiPartition) -> MPStats:
    """Size, n statistic, blockwise conjugate, height, and odd-part count.

    The n and odd statistics weight each block by its orbit degree; height is
    the maximal block length.
    """
    return MPStats(
        size=mp_size(nu),
        n=sum(orb.size * n_stat(lam) for orb, lam in nu.assignment),
        conjugate=mp_conjugate(nu),
        height=max((len(lam) for _, lam in nu.assignment), default=0),
        odd=sum(orb.size * sum(1 for v in lam if v % 2) for orb, lam in nu.assignment),
    )


def semisimple_part(nu: MultiPartition) -> MultiPartition:
    """Replace each block by a single column of the same size."""
    return MultiPartition(
        nu.kind, nu.q,
        tuple((orb, (1,) * sum(lam)) for orb, lam in nu.assignment),
    )


def unipotent_part(nu: MultiPartition) -> MultiPartition:
    """Collect the degree-scaled parts on the trivial orbit."""
    parts = sorted(
        (orb.size * v for orb, lam in nu.assignment for v in lam), reverse=True
    )
    if not parts:
        return MultiPartition(nu.kind, nu.q, ())
    trivial = OrbitId(nu.kind, nu.q, 1, 0)
    return MultiPartition(nu.kind, nu.q, ((trivial, tuple(parts)),))


@cache
def _enumerate_mp(q: int, kind: str, n: int) -> tuple[MultiPartition, ...]:
    orbs = enumerate_orbits(q, kind, max(n, 1))
    found: list[MultiPartition] = []

    def assign(index: int, remaining: int, blocks: tuple) -> None:
        if remaining == 0:
            found.append(MultiPartition(kind, q, blocks))
            return
        if index == len(orbs):
            return
        orb = orbs[index]
        assign(index + 1, remaining, blocks)
        for k in range(1, remaining // orb.size + 1):
            for lam in partitions_of(k):
                assign(index + 1, remaining - orb.size * k, blocks + ((orb, lam),))

    assign(0, n, ())
    found.sort(key=MultiPartition.sort_key)
    return tuple(found)


def enumerate_mp(q: int, kind: str, n: int) -> list[MultiPartition]:
    """All multipartitions of the given size, in a stable canonical order."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    return list(_enumerate_mp(q, kind, n))


def _block_centralizer(lam: Partition, x: Fraction) -> Fraction:
    # a_lam(x) = x^(|lam| + 2 n(lam)) prod_j psi_{m_j}(1/x)
    value = x ** (sum(lam) + 2 * n_stat(lam))
    for mult in multiplicities(lam).values():
        value *= psi_poly(mult).eval(1 / x)
    return value


def centralizer_order(mu: MultiPartition) -> int:
    """Centralizer order a_mu, a positive integer dividing the group order.

    >>> trivial = OrbitId("phi", 2, 1, 0)
    >>> centralizer_order(MultiPartition("phi", 2, ((trivial, (1, 1)),)))
    18
    """
    value = Fraction((-1) ** mp_size(mu))
    for orb, lam in mu.assignment:
        value *= _block_centralizer(lam, Fraction((-orb.q) ** orb.size))
    if value.denominator != 1 or value <= 0:
        raise AssertionError(f"centralizer order came out as {value}")
    return int(value)


def class_size(mu: MultiPartition) -> int:
    """Conjugacy class size, the group order divided by a_mu."""
    order = unitary_group_order(mu.q, mp_size(mu))
    a = centralizer_order(mu)
    if order % a:
        raise AssertionError("centralizer order does not divide the group order")
    return order // a


def levi_factors(mu: MultiPartition) -> tuple[tuple[int, int], ...]:
    """Factor descriptors (orbit degree d, multiplicity m) of the Levi subgroup."""
    return tuple((orb.size, sum(lam)) for orb, lam in mu.assignment)


def levi_order(mu: MultiPartition) -> int:
    """Order of the Levi subgroup: unitary factors for odd degree, general
    linear factors over the degree-d extension for even degree."""
    total = 1
    for d, m in levi_factors(mu):
        if d % 2:
            total *= unitary_group_order(mu.q**d, m)
        else:
            total *= general_linear_order(mu.q**d, m)
    return total


@dataclass(frozen=True)
class TorusLabel:
    """Conjugacy datum in the relative Weyl group with its torus factors."""

    gamma: MultiPartition
    factors: tuple[int, ...]
    z: int
    weyl_class_size: int


class TorusData(NamedTuple):
    weyl_order: int
    labels: tuple[TorusLabel, ...]


def torus_data(nu: MultiPartition) -> TorusData:
    """Weyl group order and the torus labels gamma with gamma_s = nu_s.

    Each label carries z_gamma (the product of the blockwise cycle-type
    centralizer orders) and its class size in the product of symmetric groups.
    """
    sizes = [(orb, sum(lam)) for orb, lam in nu.assignment]
    weyl_order = math.prod(math.factorial(m) for _, m in sizes)

    def products(index: int, blocks: tuple) -> list[tuple]:
        if index == len(sizes):
            return [blocks]
        orb, m = sizes[index]
        out = []
        for lam in partitions_of(m):
            out.extend(products(index + 1, blocks + ((orb, lam),)))
        return out

    labels = []
    for blocks in products(0, ()):
        gamma = MultiPartition(nu.kind, nu.q, blocks)
        z = math.prod(z_stat(lam) for _, lam in blocks)
        factors = tuple(
            sorted((orb.size * v for orb, lam in blocks for v in lam), reverse=True)
        )
        if weyl_order % z:
            raise AssertionError("cycle-type centralizer does not divide the Weyl order")
        labels.append(TorusLabel(gamma, factors, z, weyl_order // z))
    labels.sort(key=lambda lab: lab.gamma.sort_key())
    return TorusData(weyl_order, tuple(labels))


def gamma_t(blocks: list[tuple[int, CyclicElt]]) -> MultiPartition:
    """Class label of a torus element given as (block size, element) pairs.

    Each element contributes the part (block size)/(orbit degree) at its
    point orbit; the unipotent part of the result recovers the block sizes.
    """
    collected: dict[OrbitId, list[int]] = {}
    q = None
    for size, x in blocks:
        if x.level != size:
            raise ValueError(f"element level {x.level} does not match block size {size}")
        if q is None:
            q = x.q
        elif q != x.q:
            raise ValueError("mixed q in torus element")
        orb = orbit_of("phi", x)
        collected.setdefault(orb, []).append(size // orb.size)
    if q is None:
        raise ValueError("empty torus element")
    return MultiPartition(
        "phi", q,
        tuple((orb, tuple(sorted(parts, reverse=True))) for orb, parts in collected.items()),
    )
