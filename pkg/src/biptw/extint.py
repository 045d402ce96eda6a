"""Saturating extended integers.

Objective values are plain Python ints, with ``POS_INF`` and ``NEG_INF``
standing in for +inf and -inf.  Adding a finite value to an infinity keeps
the infinity; adding opposite infinities is a programming error and raises.
"""

import math

POS_INF = math.inf
NEG_INF = -math.inf


def is_finite(x):
    return x != POS_INF and x != NEG_INF


def ext_add(*values):
    total = 0
    seen_pos = seen_neg = False
    for v in values:
        if v == POS_INF:
            seen_pos = True
        elif v == NEG_INF:
            seen_neg = True
        else:
            total += v
    if seen_pos and seen_neg:
        raise ArithmeticError("cannot add +inf and -inf")
    if seen_pos:
        return POS_INF
    if seen_neg:
        return NEG_INF
    return total


def ext_sub(a, b):
    return ext_add(a, -b)


def to_json_value(x):
    if x == POS_INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return int(x)


def from_json_value(x):
    if x == "inf":
        return POS_INF
    if x == "-inf":
        return NEG_INF
    return int(x)
