"""Cyclic model of Frobenius orbits and the variable-change transform.

The multiplicative group fixed by the m-th power of the twisted Frobenius is
cyclic of order N_m = q^m - (-1)^m, with Frobenius acting as multiplication
by -q. Everything here works with residues in that abstract model; no finite
field arithmetic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .exactnum import Cyclotomic


def level_order(q: int, m: int) -> int:
    """Order N_m = q^m - (-1)^m of the level-m cyclic group.

    >>> [level_order(2, m) for m in (1, 2, 3, 4)]
    [3, 3, 9, 15]
    """
    return q**m - (-1) ** m


def _divisors(m: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, m + 1) if m % d == 0)


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@dataclass(frozen=True)
class CyclicElt:
    """Element of the level-m group: residue k mod N_m, Frobenius acts by -q."""

    q: int
    level: int
    residue: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("level must be positive")
        n = level_order(self.q, self.level)
        object.__setattr__(self, "residue", self.residue % n)

    def embed(self, m: int) -> CyclicElt:
        """Image at a higher compatible level, residue k -> k * N_m / N_r."""
        if m % self.level:
            raise ValueError(f"level {self.level} does not divide {m}")
        step = level_order(self.q, m) // level_order(self.q, self.level)
        return CyclicElt(self.q, m, self.residue * step)


def _orbit_residues(q: int, m: int, k: int) -> tuple[int, ...]:
    # trajectory of k under repeated multiplication by -q, without repeats
    n = level_order(q, m)
    out = []
    cur = k % n
    while cur not in out:
        out.append(cur)
        cur = cur * -q % n
    return tuple(out)


def _is_primitive(q: int, m: int, k: int) -> bool:
    # k lies in no proper sublevel: N_m/N_r divides k only for r = m
    n = level_order(q, m)
    for r in _divisors(m)[:-1]:
        if k % (n // level_order(q, r)) == 0:
            return False
    return True


@dataclass(frozen=True)
class OrbitId:
    """Frobenius orbit of characters (kind theta) or of points (kind phi).

    The residue is the minimal element of the orbit at its primitive level,
    and the level equals the orbit size.
    """

    kind: str
    q: int
    size: int
    residue: int

    def __post_init__(self) -> None:
        if self.kind not in ("theta", "phi"):
            raise ValueError(f"unknown orbit kind {self.kind!r}")
        n = level_order(self.q, self.size)
        if not 0 <= self.residue < n:
            raise ValueError("residue out of range")
        if not _is_primitive(self.q, self.size, self.residue):
            raise ValueError("residue is not primitive at this level")
        traj = _orbit_residues(self.q, self.size, self.residue)
        if len(traj) != self.size or min(traj) != self.residue:
            raise ValueError("residue is not the canonical orbit representative")

    def to_json(self) -> dict:
        return {"kind": self.kind, "q": self.q, "size": self.size, "residue": self.residue}


def orbit_of(kind: str, x: CyclicElt) -> OrbitId:
    """Canonical orbit through x: primitive level, then minimal residue."""
    q, m, k = x.q, x.level, x.residue
    n = level_order(q, m)
    for d in _divisors(m):
        step = n // level_order(q, d)
        if k % step == 0 and _is_primitive(q, d, k // step):
            return OrbitId(kind, q, d, min(_orbit_residues(q, d, k // step)))
    raise AssertionError("unreachable: level m itself always admits x")


def orbit_count(q: int, r: int) -> int:
    """Number of Frobenius orbits of size exactly r, by Mobius inversion.

    >>> [orbit_count(2, r) for r in (1, 2, 3)]
    [3, 0, 2]
    """
    if r < 1:
        raise ValueError("orbit size must be positive")
    total = sum(_mobius(r // s) * level_order(q, s) for s in _divisors(r))
    if total % r:
        raise AssertionError("Mobius inversion did not divide evenly")
    return total // r


@cache
def _enumerate_residues(q: int, max_size: int) -> tuple[tuple[int, int], ...]:
    # canonical (size, residue) pairs, sorted
    found = []
    for m in range(1, max_size + 1):
        seen: set[int] = set()
        for k in range(level_order(q, m)):
            if k in seen or not _is_primitive(q, m, k):
                continue
            traj = _orbit_residues(q, m, k)
            seen.update(traj)
            if len(traj) != m:
                raise AssertionError("primitive residue with wrong orbit size")
            found.append((m, min(traj)))
    return tuple(sorted(found))


def enumerate_orbits(q: int, kind: str, max_size: int) -> list[OrbitId]:
    """All orbits of size at most max_size, sorted by (size, residue)."""
    if max_size < 1:
        raise ValueError("max_size must be positive")
    return [OrbitId(kind, q, m, k) for m, k in _enumerate_residues(q, max_size)]


def f_of_x(x: CyclicElt) -> tuple[OrbitId, int]:
    """Point orbit through x together with its degree d (the orbit size)."""
    orb = orbit_of("phi", x)
    return orb, orb.size


def char_eval(xi: CyclicElt, x: CyclicElt) -> Cyclotomic:
    """Pair a level-r character with a level-m point, r dividing m.

    The character of residue j is lifted along the relative norm, which on
    residues is multiplication by (-1)^(m+r) N_m/N_r; identifying the image
    with the level-r group divides that factor back out, leaving
    zeta_{N_r}^e with e = (-1)^(m+r) j k mod N_r.

    >>> char_eval(CyclicElt(2, 1, 1), CyclicElt(2, 3, 1)) == Cyclotomic.root(3)
    True
    """
    if xi.q != x.q:
        raise ValueError("mismatched q")
    r, m = xi.level, x.level
    if m % r:
        raise ValueError(f"character level {r} does not divide point level {m}")
    nr = level_order(xi.q, r)
    e = (-1) ** (m + r) * xi.residue * x.residue % nr
    return Cyclotomic.root(nr, e)


@cache
def _transform_items(phi: OrbitId, n: int) -> tuple[tuple[OrbitId, int, Cyclotomic], ...]:
    q = phi.q
    r = phi.size
    m = n * r
    nm = level_order(q, m)
    nr = level_order(q, r)
    xi = CyclicElt(q, r, phi.residue)
    sign = (-1) ** (m - 1)
    acc: dict[tuple[OrbitId, int], Cyclotomic] = {}
    for k in range(nm):
        x = CyclicElt(q, m, k)
        orb, d = f_of_x(x)
        key = (orb, m // d)
        val = char_eval(xi, x)
        if sign < 0:
            val = -val
        prev = acc.get(key)
        acc[key] = val if prev is None else prev + val
    zero = Cyclotomic.zero(nr)
    return tuple(
        (orb, power, v) for (orb, power), v in sorted(
            acc.items(), key=lambda kv: (kv[0][0].size, kv[0][0].residue, kv[0][1])
        ) if v != zero
    )


def transform_p(phi: OrbitId, n: int, q: int) -> dict[tuple[OrbitId, int], Cyclotomic]:
    """Expand the degree-n power sum at a character orbit into point orbits.

    Returns the coefficient map of
    p_n(phi) = (-1)^(n|phi|-1) sum over x at level n|phi| of xi(x) p_{n|phi|/d}(f_x),
    keyed by (point orbit, local power index); coefficients live at
    conductor N_{|phi|}.
    """
    if phi.kind != "theta":
        raise ValueError("transform_p expects a character orbit")
    if phi.q != q:
        raise ValueError("mismatched q")
    if n < 1:
        raise ValueError("power index must be positive")
    return {(orb, power): v for orb, power, v in _transform_items(phi, n)}
