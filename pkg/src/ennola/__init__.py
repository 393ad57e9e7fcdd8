"""Exact conjugacy-class data and irreducible character tables of finite unitary groups."""

from ennola.bruteforce import (
    class_census,
    class_representative,
    classify,
    enumerate_group,
    symmetric_count,
    symmetric_profile,
    twisted_fs,
)
from ennola.charmap import (
    CharLabel,
    CharTable,
    SymElement,
    ch,
    ch_inverse,
    char_table,
    character_row,
    circ_product,
    dl_character,
    inner_product,
    ls_sum,
    pi_class,
    star_product,
    to_basis,
)
from ennola.exactnum import Cyclotomic, QPoly
from ennola.multipartitions import (
    MultiPartition,
    centralizer_order,
    class_size,
    enumerate_mp,
    mp_conjugate,
    mp_size,
    mp_stats,
    unitary_group_order,
)
from ennola.orbits import CyclicElt, OrbitId, enumerate_orbits, level_order, orbit_count
from ennola.reptables import (
    charprod_parity,
    degree_hook,
    degree_polynomial,
    degree_records,
    degree_sum,
    even_degree_sum,
    gelfand_graev,
    irreducible_multiplicities,
    model_decomposition,
    sp_induction,
)

__version__ = "0.1.0"

__all__ = [
    "CharLabel",
    "CharTable",
    "CyclicElt",
    "Cyclotomic",
    "MultiPartition",
    "OrbitId",
    "QPoly",
    "SymElement",
    "centralizer_order",
    "ch",
    "ch_inverse",
    "char_table",
    "character_row",
    "charprod_parity",
    "circ_product",
    "class_census",
    "class_representative",
    "class_size",
    "classify",
    "degree_hook",
    "degree_polynomial",
    "degree_records",
    "degree_sum",
    "dl_character",
    "enumerate_group",
    "enumerate_mp",
    "enumerate_orbits",
    "even_degree_sum",
    "gelfand_graev",
    "inner_product",
    "irreducible_multiplicities",
    "level_order",
    "ls_sum",
    "model_decomposition",
    "mp_conjugate",
    "mp_size",
    "mp_stats",
    "orbit_count",
    "pi_class",
    "sp_induction",
    "star_product",
    "symmetric_count",
    "symmetric_profile",
    "to_basis",
    "twisted_fs",
    "unitary_group_order",
]
