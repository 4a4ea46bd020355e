"""Combinatorics of KLR algebras of types A and C.

Shapes are lists of parts for a single partition or lists of such lists
for l-partitions.  Root vectors are dicts {residue: multiplicity}.
Laurent polynomials are lists of (exponent, coefficient) pairs.
"""

from . import _core
from ._core import (
    KLRError,
    bilinear_form,
    bridge,
    conjugate,
    count_tableaux,
    factors_through,
    from_type_c,
    sstd_plus,
    to_type_c,
    verify,
    verify_range,
)

__all__ = [
    "KLRError",
    "bilinear_form",
    "block",
    "bridge",
    "cogood_node",
    "content",
    "conjugate",
    "count_tableaux",
    "dominates",
    "factors_through",
    "from_type_c",
    "gdim_block",
    "gdim_specht",
    "good_node",
    "good_path",
    "is_kleshchev",
    "residue",
    "sstd_plus",
    "tableaux",
    "to_type_c",
    "verify",
    "verify_range",
]


def _shape(s):
    if s and all(isinstance(x, int) for x in s):
        return [list(s)]
    if not s:
        return [[]]
    return [list(c) for c in s]


def _charge(c):
    return [c] if isinstance(c, int) else list(c)


def residue(type, charge, row, col, comp=1):
    return _core.residue(type, _charge(charge), row, col, comp)


def content(type, charge, shape):
    return _core.content(type, _charge(charge), _shape(shape))


def block(type, charge, beta):
    return _core.block(type, _charge(charge), beta)


def dominates(a, b):
    return _core.dominates(_shape(a), _shape(b))


def tableaux(type, charge, shape, residues=None):
    return _core.tableaux(type, _charge(charge), _shape(shape), residues)


def is_kleshchev(type, charge, shape):
    return _core.is_kleshchev(type, _charge(charge), _shape(shape))


def good_node(type, charge, shape, i):
    return _core.good_node(type, _charge(charge), _shape(shape), i)


def cogood_node(type, charge, shape, i):
    return _core.cogood_node(type, _charge(charge), _shape(shape), i)


def good_path(type, charge, shape):
    return _core.good_path(type, _charge(charge), _shape(shape))


def gdim_specht(type, charge, shape, weight=None):
    return _core.gdim_specht(type, _charge(charge), _shape(shape), weight)


def gdim_block(type, charge, beta, omega=None):
    return _core.gdim_block(type, _charge(charge), beta, omega)
