"""The characteristic map between unitary class functions and symmetric functions.

Class functions of the rank-n unitary groups, summed over all n, form a graded
ring under either of two products: the Ennola product, whose structure
constants are Hall polynomials evaluated at (-q)^d, and Deligne-Lusztig
induction. The characteristic map identifies this ring with a graded ring of
symmetric functions spread over the point orbits, sending the indicator of a
class to a normalized Hall-Littlewood element. Under the variable-change
transform of module ``orbits``, power sums indexed by character orbits
correspond to the virtual characters induced from tori, and Schur elements
correspond, up to an explicit sign, to the irreducible characters. Expanding
Schur elements in the Hall-Littlewood basis therefore computes the full
character table.

Elements are exact: coefficients are cyclotomic numbers, and every basis
conversion is a finite integer or rational linear map (symmetric group
characters, Green polynomial evaluations, and the orbit transform).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product as iproduct

from .exactnum import Cyclotomic
from .multipartitions import (
    MultiPartition,
    centralizer_order,
    class_size,
    enumerate_mp,
    gamma_t,
    mp_conjugate,
    mp_size,
    mp_stats,
    torus_data,
)
from .orbits import CyclicElt, OrbitId, char_eval, enumerate_orbits, level_order, transform_p
from .partitions import Partition, partitions_of
from .symfunc import green_poly, hall_polynomial, sn_char

_BASIS_KIND = {"P": "phi", "pi": "phi", "p_theta": "theta", "s_theta": "theta"}


@cache
def conductor(q: int, n: int) -> int:
    """Common conductor of every root of unity appearing in degree n.

    >>> conductor(2, 3)
    9
    >>> conductor(3, 3)
    56
    """
    return math.lcm(*(level_order(q, m) for m in range(1, n + 1))) if n else 1


def _cadd(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    x, y = Cyclotomic.common(a, b)
    return x + y


def _acc(table: dict[MultiPartition, Cyclotomic], key: MultiPartition, val: Cyclotomic) -> None:
    prev = table.get(key)
    table[key] = val if prev is None else _cadd(prev, val)


@dataclass(frozen=True, eq=False)
class SymElement:
    """Exact linear combination of basis elements of one graded component.

    The basis tag is one of ``P`` and ``pi`` (indexed by point-orbit
    multipartitions; ``pi`` marks the class-function side, ``P`` its image)
    or ``p_theta`` and ``s_theta`` (indexed by character-orbit
    multipartitions). All index multipartitions must have total size n.
    """

    q: int
    n: int
    basis: str
    coeffs: dict[MultiPartition, Cyclotomic]

    def __post_init__(self) -> None:
        if self.basis not in _BASIS_KIND:
            raise ValueError(f"unknown basis {self.basis!r}")
        kind = _BASIS_KIND[self.basis]
        cleaned = {}
        for mp, v in self.coeffs.items():
            if mp.kind != kind or mp.q != self.q:
                raise ValueError("index multipartition does not match basis or q")
            if mp_size(mp) != self.n:
                raise ValueError("index multipartition has the wrong size")
            if v:
                cleaned[mp] = v
        object.__setattr__(self, "coeffs", cleaned)

    def coefficient(self, mp: MultiPartition) -> Cyclotomic:
        return self.coeffs.get(mp, Cyclotomic.zero(1))

    def __add__(self, other: SymElement) -> SymElement:
        if (self.q, self.n, self.basis) != (other.q, other.n, other.basis):
            raise ValueError("can only add elements of one basis and degree")
        out = dict(self.coeffs)
        for mp, v in other.coeffs.items():
            _acc(out, mp, v)
        return SymElement(self.q, self.n, self.basis, out)

    def scale(self, c: Cyclotomic | Fraction | int) -> SymElement:
        return SymElement(
            self.q, self.n, self.basis, {mp: v * c for mp, v in self.coeffs.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymElement):
            return NotImplemented
        if (self.q, self.n, self.basis) != (other.q, other.n, other.basis):
            return False
        for mp in self.coeffs.keys() | other.coeffs.keys():
            if self.coefficient(mp) != other.coefficient(mp):
                return False
        return True

    def __repr__(self) -> str:
        return f"SymElement(q={self.q}, n={self.n}, basis={self.basis!r}, terms={len(self.coeffs)})"


def pi_class(mp: MultiPartition) -> SymElement:
    """Indicator class function of one conjugacy class."""
    return SymElement(mp.q, mp_size(mp), "pi", {mp: Cyclotomic.from_rational(1)})


def power_theta(gamma: MultiPartition) -> SymElement:
    """Power-sum basis element at a character-orbit multipartition."""
    return SymElement(gamma.q, mp_size(gamma), "p_theta", {gamma: Cyclotomic.from_rational(1)})


def schur(lam: MultiPartition) -> SymElement:
    """Schur basis element at a character-orbit multipartition."""
    return SymElement(lam.q, mp_size(lam), "s_theta", {lam: Cyclotomic.from_rational(1)})


def _green_block(nu: Partition, mu: Partition, t: int) -> int:
    val = green_poly(nu, mu).eval(t)
    if val.denominator != 1:
        raise AssertionError("Green polynomial evaluation is not integral")
    return int(val)


@cache
def _power_phi_to_P_items(nu: MultiPartition) -> tuple[tuple[MultiPartition, int], ...]:
    """Expand a point-orbit power sum in the Hall-Littlewood basis.

    The coefficient of the element at mu is the product over point orbits of
    classical Green polynomials evaluated at (-q)^d, and vanishes unless mu
    assigns each orbit the same total as nu.
    """
    per_orbit = []
    for orb, parts in nu.assignment:
        t = (-orb.q) ** orb.size
        opts = []
        for mu in partitions_of(sum(parts)):
            g = _green_block(parts, mu, t)
            if g:
                opts.append((orb, mu, g))
        per_orbit.append(opts)
    out = []
    for combo in iproduct(*per_orbit):
        mp = MultiPartition(nu.kind, nu.q, tuple((orb, mu) for orb, mu, _ in combo))
        out.append((mp, math.prod(g for _, _, g in combo)))
    out.sort(key=lambda kv: kv[0].sort_key())
    return tuple(out)


@cache
def _power_theta_to_P_items(gamma: MultiPartition) -> tuple[tuple[MultiPartition, Cyclotomic], ...]:
    """Expand a character-orbit power sum in the Hall-Littlewood basis.

    Each part passes through the variable-change transform, the resulting
    point-orbit power sums are multiplied out, and Green polynomial values
    finish the conversion. Coefficients are returned at the degree-n common
    conductor.
    """
    q = gamma.q
    n = mp_size(gamma)
    big = conductor(q, n)
    blocks = [(orb, c) for orb, lam in gamma.assignment for c in lam]
    dicts = [transform_p(orb, c, q) for orb, c in blocks]
    acc: dict[MultiPartition, Cyclotomic] = {}
    for combo in iproduct(*(d.items() for d in dicts)):
        coeff = Cyclotomic.from_rational(1, big)
        parts: dict[OrbitId, list[int]] = {}
        for (f, power), v in combo:
            coeff = coeff * v.lift(big)
            parts.setdefault(f, []).append(power)
        nu = MultiPartition(
            "phi", q, tuple((f, tuple(sorted(ps, reverse=True))) for f, ps in parts.items())
        )
        for mu, g in _power_phi_to_P_items(nu):
            _acc(acc, mu, coeff * g)
    return tuple(
        sorted(((mu, v) for mu, v in acc.items() if v), key=lambda kv: kv[0].sort_key())
    )


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a square matrix by Gauss-Jordan elimination."""
    size = len(mat)
    work = [row[:] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(mat)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if work[r][col])
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return [row[size:] for row in work]


@cache
def _hl_to_power_rows(k: int, t: int) -> dict[Partition, tuple[tuple[Partition, Fraction], ...]]:
    """Rows of the inverse Green matrix: one Hall-Littlewood element of degree
    k, at parameter value t, written in single-orbit power sums."""
    ps = partitions_of(k)
    mat = [[Fraction(_green_block(nu, mu, t)) for mu in ps] for nu in ps]
    inv = _invert(mat)
    return {
        mu: tuple((nu, inv[j][i]) for i, nu in enumerate(ps) if inv[j][i])
        for j, mu in enumerate(ps)
    }


@cache
def _power_phi_block_to_theta_items(f: OrbitId, c: int) -> tuple[tuple[OrbitId, int, Cyclotomic], ...]:
    """Invert the variable-change transform on one point-orbit power sum.

    Fourier inversion over the level-m group, m = c*d(f), gives
    p_c(f) = (-1)^(m-1)/N_m sum over character orbits phi with size dividing m
    of (sum of conjugated character values on a point of f) p_{m/|phi|}(phi).
    """
    q = f.q
    m = c * f.size
    nm = level_order(q, m)
    nr_cache: dict[int, int] = {}
    y = CyclicElt(q, f.size, f.residue).embed(m)
    out = []
    for phi in enumerate_orbits(q, "theta", m):
        r = phi.size
        if m % r:
            continue
        nr = nr_cache.setdefault(r, level_order(q, r))
        total = Cyclotomic.zero(nr)
        j = phi.residue
        for _ in range(r):
            total = total + char_eval(CyclicElt(q, r, j), y).conj()
            j = j * -q % nr
        if total:
            out.append((phi, m // r, total * Fraction((-1) ** (m - 1), nm)))
    return tuple(out)


@cache
def _P_to_power_theta_items(mu: MultiPartition) -> tuple[tuple[MultiPartition, Cyclotomic], ...]:
    """Expand one Hall-Littlewood element in character-orbit power sums."""
    q = mu.q
    n = mp_size(mu)
    big = conductor(q, n)
    per_orbit = []
    for orb, lam in mu.assignment:
        t = (-q) ** orb.size
        row = _hl_to_power_rows(sum(lam), t)[lam]
        per_orbit.append([(orb, nu, cf) for nu, cf in row])
    acc: dict[MultiPartition, Cyclotomic] = {}
    for combo in iproduct(*per_orbit):
        frac = math.prod((cf for _, _, cf in combo), start=Fraction(1))
        blocks = [(orb, c) for orb, nu, _ in combo for c in nu]
        theta_opts = [_power_phi_block_to_theta_items(orb, c) for orb, c in blocks]
        for tcombo in iproduct(*theta_opts):
            coeff = Cyclotomic.from_rational(frac, big)
            parts: dict[OrbitId, list[int]] = {}
            for phi, power, v in tcombo:
                coeff = coeff * v.lift(big)
                parts.setdefault(phi, []).append(power)
            gmp = MultiPartition(
                "theta", q,
                tuple((orb, tuple(sorted(ps, reverse=True))) for orb, ps in parts.items()),
            )
            _acc(acc, gmp, coeff)
    return tuple(
        sorted(((g, v) for g, v in acc.items() if v), key=lambda kv: kv[0].sort_key())
    )


@cache
def _schur_to_power_factors(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """One-orbit Schur expansion s_lam = sum_nu (omega^lam(nu)/z_nu) p_nu."""
    from .partitions import z_stat

    out = []
    for nu in partitions_of(sum(lam)):
        w = sn_char(lam, nu)
        if w:
            out.append((nu, Fraction(w, z_stat(nu))))
    return tuple(out)


def _expand_linear(elem: SymElement, items_of, out_basis: str) -> SymElement:
    acc: dict[MultiPartition, Cyclotomic] = {}
    for mp, c in elem.coeffs.items():
        for target, v in items_of(mp):
            if isinstance(v, Cyclotomic):
                vc, cc = Cyclotomic.common(v, c)
                _acc(acc, target, vc * cc)
            else:
                _acc(acc, target, c * v)
    return SymElement(elem.q, elem.n, out_basis, acc)


def _schur_items(lam: MultiPartition) -> list[tuple[MultiPartition, Fraction]]:
    per_orbit = [
        [(orb, nu, cf) for nu, cf in _schur_to_power_factors(blam)]
        for orb, blam in lam.assignment
    ]
    out = []
    for combo in iproduct(*per_orbit):
        gamma = MultiPartition(lam.kind, lam.q, tuple((orb, nu) for orb, nu, _ in combo))
        out.append((gamma, math.prod((cf for _, _, cf in combo), start=Fraction(1))))
    return out


def _power_to_schur_items(gamma: MultiPartition) -> list[tuple[MultiPartition, int]]:
    per_orbit = []
    for orb, nu in gamma.assignment:
        opts = []
        for lam in partitions_of(sum(nu)):
            w = sn_char(lam, nu)
            if w:
                opts.append((orb, lam, w))
        per_orbit.append(opts)
    out = []
    for combo in iproduct(*per_orbit):
        lam = MultiPartition(gamma.kind, gamma.q, tuple((orb, bl) for orb, bl, _ in combo))
        out.append((lam, math.prod(w for _, _, w in combo)))
    return out


def to_basis(elem: SymElement, basis: str) -> SymElement:
    """Rewrite an element in another basis; every route is exact."""
    if basis not in _BASIS_KIND:
        raise ValueError(f"unknown basis {basis!r}")
    src = elem.basis
    if src == basis:
        return elem
    if src == "pi":
        retagged = SymElement(elem.q, elem.n, "P", dict(elem.coeffs))
        return to_basis(retagged, basis)
    if basis == "pi":
        return SymElement(elem.q, elem.n, "pi", dict(to_basis(elem, "P").coeffs))
    if src == "s_theta":
        return to_basis(_expand_linear(elem, _schur_items, "p_theta"), basis)
    if src == "p_theta" and basis == "P":
        return _expand_linear(elem, _power_theta_to_P_items, "P")
    if src == "p_theta" and basis == "s_theta":
        return _expand_linear(elem, _power_to_schur_items, "s_theta")
    if src == "P":
        return to_basis(_expand_linear(elem, _P_to_power_theta_items, "p_theta"), basis)
    raise AssertionError(f"no conversion from {src} to {basis}")


def ch(elem: SymElement) -> SymElement:
    """The characteristic map: class indicators to Hall-Littlewood elements."""
    if elem.basis != "pi":
        raise ValueError("the characteristic map applies to class functions")
    return SymElement(elem.q, elem.n, "P", dict(elem.coeffs))


def ch_inverse(elem: SymElement) -> SymElement:
    """Inverse characteristic map, from any symmetric-function basis."""
    if elem.basis == "pi":
        raise ValueError("already a class function")
    return to_basis(elem, "pi")


@dataclass(frozen=True)
class CharLabel:
    """Label of an irreducible character: a character-orbit multipartition."""

    lam: MultiPartition

    def __post_init__(self) -> None:
        if self.lam.kind != "theta":
            raise ValueError("character labels are indexed by character orbits")

    @property
    def q(self) -> int:
        return self.lam.q

    @property
    def n(self) -> int:
        return mp_size(self.lam)

    def tau(self) -> int:
        """Sign exponent parity floor(n/2) + n(lam) of the character."""
        st = mp_stats(self.lam)
        return (st.size // 2 + st.n) % 2

    def sign(self) -> int:
        return -1 if self.tau() else 1

    def to_json(self) -> list:
        return self.lam.to_json()


def expand_schur(label: CharLabel | MultiPartition) -> SymElement:
    """Schur element of a label expanded in the Hall-Littlewood basis."""
    lam = label.lam if isinstance(label, CharLabel) else label
    return to_basis(schur(lam), "P")


def character_row(label: CharLabel | MultiPartition) -> SymElement:
    """The irreducible character of a label, as coefficients on class indicators."""
    label = label if isinstance(label, CharLabel) else CharLabel(label)
    expanded = expand_schur(label)
    return SymElement(
        expanded.q, expanded.n, "pi",
        dict(expanded.scale(label.sign()).coeffs),
    )


def identity_column_entry(label: CharLabel | MultiPartition) -> int:
    """Character degree read off the identity-class column, without expanding
    the full row: only torus labels supported on the trivial point orbit
    survive, leaving a rational sum of Green polynomial values.

    >>> triv = OrbitId("theta", 2, 1, 0)
    >>> identity_column_entry(MultiPartition("theta", 2, ((triv, (2,)),)))
    2
    """
    label = label if isinstance(label, CharLabel) else CharLabel(label)
    lam = label.lam
    n = label.n
    q = label.q
    ones = (1,) * n
    total = Fraction(0)
    for tl in torus_data(lam).labels:
        w = math.prod(sn_char(lam.part(orb), tl.gamma.part(orb)) for orb in lam.orbits())
        if not w:
            continue
        g = _green_block(tl.factors, ones, -q)
        total += Fraction(w, tl.z) * (-1) ** (n - len(tl.factors)) * g
    value = label.sign() * total
    if value.denominator != 1 or value <= 0:
        raise AssertionError(f"character degree came out as {value}")
    return int(value)


@dataclass(frozen=True)
class CharTable:
    """Full character table of one unitary group, with exact entries."""

    n: int
    q: int
    rows: tuple[CharLabel, ...]
    cols: tuple[MultiPartition, ...]
    values: tuple[tuple[Cyclotomic, ...], ...]
    class_sizes: tuple[int, ...]

    def entry(self, label: CharLabel, mu: MultiPartition) -> Cyclotomic:
        return self.values[self.rows.index(label)][self.cols.index(mu)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "rows": [label.to_json() for label in self.rows],
            "cols": [mu.to_json() for mu in self.cols],
            "values": [[v.to_json() for v in row] for row in self.values],
            "class_sizes": list(self.class_sizes),
        }


def char_table_row(label: CharLabel, cols: tuple[MultiPartition, ...]) -> tuple[Cyclotomic, ...]:
    """One table row over the given column order, at the common conductor."""
    big = conductor(label.q, label.n)
    row = character_row(label)
    return tuple(row.coefficient(mu).lift(big) for mu in cols)


def _row_task(args: tuple[int, CharLabel, tuple[MultiPartition, ...]]) -> tuple[int, tuple[Cyclotomic, ...]]:
    index, label, cols = args
    return index, char_table_row(label, cols)


def char_table(n: int, q: int, processes: int = 0) -> CharTable:
    """Character table of the rank-n unitary group over the q^2 field.

    Rows and columns follow the canonical multipartition order. Rows are
    independent; with processes > 1 they are computed in a process pool and
    assembled in order.
    """
    if n < 1:
        raise ValueError("rank must be positive")
    rows = tuple(CharLabel(lam) for lam in enumerate_mp(q, "theta", n))
    cols = tuple(enumerate_mp(q, "phi", n))
    if processes and processes > 1:
        tasks = [(i, label, cols) for i, label in enumerate(rows)]
        values: list[tuple[Cyclotomic, ...]] = [()] * len(rows)
        with ProcessPoolExecutor(max_workers=processes) as pool:
            for index, row in pool.map(_row_task, tasks):
                values[index] = row
    else:
        values = [char_table_row(label, cols) for label in rows]
    sizes = tuple(class_size(mu) for mu in cols)
    return CharTable(n, q, rows, cols, tuple(values), sizes)


def dl_character(nu: MultiPartition, check: bool = True) -> SymElement:
    """Torus-induced virtual character of a torus label, in the image basis.

    The label encodes a torus and a character of it as a character-orbit
    multipartition. The element is computed two independent ways: through the
    power-sum identification with sign (-1)^(size - blocks), and as the direct
    sum of character values against Green polynomial values over all torus
    elements; the two must agree.
    """
    if nu.kind != "theta":
        raise ValueError("torus labels are indexed by character orbits")
    n = mp_size(nu)
    blocks = sum(len(lam) for _, lam in nu.assignment)
    sign = (-1) ** (n - blocks)
    direct = to_basis(power_theta(nu), "P").scale(sign)
    if check:
        torus = _dl_torus_sum(nu)
        if torus != direct:
            raise AssertionError("torus-sum and power-sum routes disagree")
    return direct


def _dl_torus_sum(nu: MultiPartition) -> SymElement:
    """Sum character values times Green values over all torus elements."""
    q = nu.q
    n = mp_size(nu)
    big = conductor(q, n)
    blocks = [(orb, c) for orb, lam in nu.assignment for c in lam]
    levels = [orb.size * c for orb, c in blocks]
    chars = [CyclicElt(q, orb.size, orb.residue) for orb, _ in blocks]
    acc: dict[MultiPartition, Cyclotomic] = {}
    for residues in iproduct(*(range(level_order(q, m)) for m in levels)):
        elts = [CyclicElt(q, m, k) for m, k in zip(levels, residues)]
        theta = Cyclotomic.from_rational(1, big)
        for xi, x in zip(chars, elts):
            theta = theta * char_eval(xi, x).lift(big)
        gamma = gamma_t(list(zip(levels, elts)))
        for mu, g in _power_phi_to_P_items(gamma):
            _acc(acc, mu, theta * g)
    return SymElement(q, n, "P", acc)


def ls_sum(label: CharLabel | MultiPartition) -> SymElement:
    """Weighted sum of torus-induced characters attached to a label.

    Summing the virtual characters of all torus labels with matching
    semisimple type, each weighted by a symmetric group character value over
    the cycle-type centralizer, and applying the closed-form sign, yields an
    irreducible character: the table row of the conjugate label.
    """
    label = label if isinstance(label, CharLabel) else CharLabel(label)
    lam = label.lam
    q = label.q
    n = label.n
    tau_prime = mp_stats(mp_conjugate(lam)).n + sum(
        orb.size * (sum(bl) // 2) for orb, bl in lam.assignment
    )
    exponent = tau_prime + n // 2 + sum(
        sum(bl) + orb.size * -(-sum(bl) // 2) for orb, bl in lam.assignment
    )
    acc: dict[MultiPartition, Cyclotomic] = {}
    for tl in torus_data(lam).labels:
        w = math.prod(sn_char(lam.part(orb), tl.gamma.part(orb)) for orb in lam.orbits())
        if not w:
            continue
        ell = sum(len(bl) for _, bl in tl.gamma.assignment)
        factor = Fraction(w * (-1) ** (n - ell), tl.z)
        for mu, v in _power_theta_to_P_items(tl.gamma):
            _acc(acc, mu, v * factor)
    return SymElement(q, n, "P", acc).scale((-1) ** exponent)


def inner_product(a: SymElement, b: SymElement) -> Cyclotomic:
    """Hermitian inner product, conjugating the second argument.

    Indicator classes are orthogonal with squared norm one over the
    centralizer order; irreducible character rows are orthonormal.
    """
    if a.q != b.q:
        raise ValueError("mismatched q")
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    left = to_basis(a, "P") if a.basis != "P" else a
    right = to_basis(b, "P") if b.basis != "P" else b
    total = Cyclotomic.zero(1)
    for mu, u in left.coeffs.items():
        v = right.coeffs.get(mu)
        if v:
            u, v = Cyclotomic.common(u, v)
            total = _cadd(total, u * v.conj() * Fraction(1, centralizer_order(mu)))
    return total


@cache
def _hall_combine_items(
    mu1: MultiPartition, mu2: MultiPartition
) -> tuple[tuple[MultiPartition, int], ...]:
    """Structure constants of the Ennola product on a pair of classes."""
    q = mu1.q
    orbs = sorted(set(mu1.orbits()) | set(mu2.orbits()), key=lambda o: (o.size, o.residue))
    per_orbit = []
    for orb in orbs:
        p1, p2 = mu1.part(orb), mu2.part(orb)
        if not p1 or not p2:
            per_orbit.append([(orb, p1 or p2, 1)])
            continue
        t = (-q) ** orb.size
        opts = []
        for lam in partitions_of(sum(p1) + sum(p2)):
            g = hall_polynomial(p1, p2, lam).eval(t)
            if g:
                if g.denominator != 1:
                    raise AssertionError("Hall polynomial evaluation is not integral")
                opts.append((orb, lam, int(g)))
        per_orbit.append(opts)
    out = []
    for combo in iproduct(*per_orbit):
        mp = MultiPartition("phi", q, tuple((orb, lam) for orb, lam, _ in combo))
        out.append((mp, math.prod(g for _, _, g in combo)))
    out.sort(key=lambda kv: kv[0].sort_key())
    return tuple(out)


def star_product(a: SymElement, b: SymElement) -> SymElement:
    """Ennola product of class functions: Hall polynomial structure
    constants evaluated at (-q)^d combine the two class supports."""
    if a.q != b.q:
        raise ValueError("mismatched q")
    left = to_basis(a, "pi")
    right = to_basis(b, "pi")
    acc: dict[MultiPartition, Cyclotomic] = {}
    for mu1, c1 in left.coeffs.items():
        for mu2, c2 in right.coeffs.items():
            c1c, c2c = Cyclotomic.common(c1, c2)
            c12 = c1c * c2c
            for lam, g in _hall_combine_items(mu1, mu2):
                _acc(acc, lam, c12 * g)
    return SymElement(a.q, a.n + b.n, "pi", acc)


def circ_product(a: SymElement, b: SymElement) -> SymElement:
    """Deligne-Lusztig induction product of class functions.

    Computed through the characteristic map: both factors are written in
    character-orbit power sums, where the product is concatenation of parts,
    and the result is carried back to class indicators. Agreement with the
    Ennola product is a theorem, and a genuine cross-check, because this
    route never touches Hall polynomials.
    """
    if a.q != b.q:
        raise ValueError("mismatched q")
    left = to_basis(a, "p_theta")
    right = to_basis(b, "p_theta")
    q = a.q
    acc: dict[MultiPartition, Cyclotomic] = {}
    for g1, c1 in left.coeffs.items():
        for g2, c2 in right.coeffs.items():
            parts: dict[OrbitId, list[int]] = {}
            for src in (g1, g2):
                for orb, bl in src.assignment:
                    parts.setdefault(orb, []).extend(bl)
            merged = MultiPartition(
                "theta", q,
                tuple((orb, tuple(sorted(ps, reverse=True))) for orb, ps in parts.items()),
            )
            c1c, c2c = Cyclotomic.common(c1, c2)
            _acc(acc, merged, c1c * c2c)
    product = SymElement(q, a.n + b.n, "p_theta", acc)
    return to_basis(product, "pi")
