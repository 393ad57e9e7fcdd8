"""A guided tour of U_2(F_4), the smallest unitary group with real structure.

Builds the group twice: once by enumerating unitary matrices over the field
with four elements, once through the partition-indexed symbolic machinery.
Every number printed by one construction is checked against the other.
"""

from __future__ import annotations

from ennola import (
    centralizer_order,
    char_table,
    class_census,
    class_size,
    classify,
    degree_hook,
    enumerate_group,
    enumerate_mp,
    symmetric_count,
    twisted_fs,
    unitary_group_order,
)
from ennola.cli import cyc_text, mp_text

N, Q = 2, 2

print(f"== the group U_{N}(F_{Q * Q}) ==")
order = unitary_group_order(Q, N)
group = enumerate_group(N, Q)
print(f"order by formula   : {order}")
print(f"order by counting  : {len(group)}")
assert len(group) == order

print()
print("== conjugacy classes ==")
print("every matrix is classified by its module structure; the resulting")
print("labels are partition-valued maps on Frobenius orbits:")
print()
census = class_census(N, Q)
for mu, size in census.items():
    a = centralizer_order(mu)
    assert size == class_size(mu) == order // a
    print(f"  {mp_text(mu):18s} size {size}  centralizer {a}")
assert sum(census.values()) == order
print()
print(f"{len(census)} classes, sizes summing to the group order.")

print()
print("== one matrix, one label ==")
g = next(m for m in group if classify(m) == list(census)[3])
print("a representative of the unipotent regular class:")
for row in g.entries:
    print("   " + " ".join(str(e) for e in row))
print(f"classified as {mp_text(classify(g))}")

print()
print("== the character table ==")
table = char_table(N, Q)
width = max(len(mp_text(mu)) for mu in table.cols) + 2
print(" " * 18 + "".join(mp_text(mu).ljust(width) for mu in table.cols))
for label, row in zip(table.rows, table.values):
    cells = "".join(cyc_text(v).ljust(width) for v in row)
    print(f"  {mp_text(label.lam):16s}{cells}")

print()
print("== degrees and indicators ==")
identity = list(census)[2]
column = table.cols.index(identity)
degrees = [int(row[column].rational_value()) for row in table.values]
print(f"degrees            : {sorted(degrees)}")
assert sorted(degrees) == sorted(degree_hook(lab.lam) for lab in table.rows)
assert sum(d * d for d in degrees) == order

indicators = twisted_fs(N, Q)
print(f"twisted indicators : all {set(indicators.values()).pop()}")
weighted = sum(v * degree_hook(lab.lam) for lab, v in indicators.items())
sym = symmetric_count(N, Q)
print(f"sum of degrees     : {weighted}")
print(f"symmetric elements : {sym}")
assert weighted == sym == sum(degrees)
print()
print("the degree sum counts the symmetric matrices in the group, exactly.")
