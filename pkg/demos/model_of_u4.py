"""A model for U_4(F_9): every irreducible character exactly once.

A model of a finite group is a multiplicity-free sum of induced characters
that contains every irreducible character with multiplicity one. For the
unitary groups (odd q) the pieces are Gelfand-Graev characters tensored
against characters induced from symplectic subgroups, glued by the Ennola
product. The pieces sort the character labels by one statistic: the number
of odd columns of the conjugated label.
"""

from __future__ import annotations

from ennola import (
    degree_hook,
    degree_sum,
    enumerate_mp,
    gelfand_graev,
    irreducible_multiplicities,
    model_decomposition,
    mp_conjugate,
    mp_stats,
)
from ennola.cli import mp_text

M, Q = 4, 3

print(f"== the Gelfand-Graev character of U_{M}(F_{Q * Q}) ==")
gg = irreducible_multiplicities(gelfand_graev(M, Q))
heights = {mp_stats(label.lam).height for label in gg}
print(f"constituents       : {len(gg)}, every multiplicity 1")
print(f"heights in support : {sorted(heights)} (height one means one column block)")
assert heights == {1}
assert set(gg.values()) == {1}

print()
print(f"== the model at m = {M}, q = {Q} ==")
dec = model_decomposition(M, Q)
labels_seen = []
for r, labels in dec.parts:
    stat = M - 2 * r
    expected = {
        lam
        for lam in enumerate_mp(Q, "theta", M)
        if mp_stats(mp_conjugate(lam)).odd == stat
    }
    assert {label.lam for label in labels} == expected
    total = sum(degree_hook(label.lam) for label in labels)
    print(
        f"  r = {r}: Gelfand-Graev of rank {stat} (x) symplectic induction, "
        f"{len(labels):3d} characters with o(conjugate) = {stat}, degree sum {total}"
    )
    labels_seen.extend(labels)

everything = enumerate_mp(Q, "theta", M)
assert len(labels_seen) == len(set(labels_seen)) == len(everything)
print(f"  union: all {len(everything)} irreducible characters, each exactly once")

print()
print("== the degree sum identity ==")
total = sum(degree_hook(label.lam) for label in labels_seen)
closed = degree_sum(M, Q)
print(f"sum of all degrees : {total}")
print(f"closed form        : (q+1) q^2 (q^3+1) q^4 = {closed}")
assert total == closed
print()
print("a model exists precisely because this sum also counts the symmetric")
print("elements of the group, one fixed point per irreducible character.")
