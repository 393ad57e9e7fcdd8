"""Two ways to multiply class functions of the unitary groups, and a trap.

Class functions of the whole family U_1, U_2, ... form a ring in two ways:
through Hall polynomial structure constants evaluated at -q (the Ennola
substitution), and through Deligne-Lusztig induction carried along the
characteristic map. The products agree, which is far from obvious from the
definitions. The trap: the product of two irreducible characters need not be
a character at all, and a parity invariant knows it in advance.
"""

from __future__ import annotations

from ennola import (
    MultiPartition,
    OrbitId,
    character_row,
    charprod_parity,
    circ_product,
    degree_hook,
    enumerate_mp,
    irreducible_multiplicities,
    pi_class,
    star_product,
)
from ennola.cli import cyc_text, mp_text

Q = 2

print("== the two products agree ==")
print("for every pair of class indicators with total size at most 3:")
pairs = 0
for na in (1, 2):
    for nb in range(na, 4 - na):
        for ma in enumerate_mp(Q, "phi", na):
            for mb in enumerate_mp(Q, "phi", nb):
                star = star_product(pi_class(ma), pi_class(mb))
                circ = circ_product(pi_class(ma), pi_class(mb))
                assert star == circ
                pairs += 1
print(f"  {pairs} pairs, Hall-at-(-q) route == induction route, exactly")

print()
print("== one product, spelled out ==")
reg = next(
    mu for mu in enumerate_mp(Q, "phi", 1) if mp_text(mu) == "(1,0):1"
)
prod = star_product(pi_class(reg), pi_class(reg))
print(f"pi[{mp_text(reg)}] * pi[{mp_text(reg)}] expands as")
for mu, c in sorted(prod.coeffs.items(), key=lambda kv: kv[0].sort_key()):
    print(f"  {cyc_text(c):>8s} * pi[{mp_text(mu)}]")

print()
print("== the product of two characters need not be a character ==")
box = MultiPartition("theta", Q, ((OrbitId("theta", Q, 1, 0), (1,)),))
print(f"take the character labeled {mp_text(box)} of U_1 (degree "
      f"{degree_hook(box)}) and multiply it with itself:")
chi = character_row(box)
mults = irreducible_multiplicities(circ_product(chi, chi))
for label, mult in sorted(mults.items(), key=lambda kv: kv[0].lam.sort_key()):
    print(f"  multiplicity {str(mult):>3s} at {mp_text(label.lam)}")
negative = min(mults.values())
assert negative < 0
print(f"a multiplicity of {negative} cannot come from an actual representation.")
print()
print("the parity invariant predicts this without decomposing anything:")
print(f"  charprod_parity(box, box) = {charprod_parity(box, box)}")
assert charprod_parity(box, box) is False
