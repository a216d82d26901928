"""Finite groups represented as explicit operation tables."""

from .core import (
    CheckReport,
    Elem,
    Group,
    RawTable,
    check_abelian,
    check_assoc,
    check_closed,
    check_group,
    check_inverses,
    check_subgroup,
    index,
    make_subgroup,
)
from .cosets import append_cosets, check_lagrange, lcoset, lcosets, subgroup_index
from .cyclic import cyclic, elt_of_ord, ord, power, powers
from .families import alt, sym, zadd, zmul
from .quotient import check_normal, conj, quotient_group
from .classes import cauchy_witness, center, centralizer, check_class_equation, conjs, conjs_list
from .persist import load_group, save_group

__all__ = [
    "CheckReport", "Elem", "Group", "RawTable",
    "check_abelian", "check_assoc", "check_closed", "check_group", "check_inverses",
    "check_subgroup", "index", "make_subgroup",
    "append_cosets", "check_lagrange", "lcoset", "lcosets", "subgroup_index",
    "cyclic", "elt_of_ord", "ord", "power", "powers",
    "alt", "sym", "zadd", "zmul",
    "check_normal", "conj", "quotient_group",
    "cauchy_witness", "center", "centralizer", "check_class_equation", "conjs", "conjs_list",
    "load_group", "save_group",
]

__version__ = "0.1.0"
