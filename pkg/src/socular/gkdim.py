"""Gelfand-Kirillov dimension of simple highest weight modules L(lambda).

Families: A = sl(n), B = so(2n+1), C = sp(n), D = so(2n), where n is the
number of weight coordinates.  The general (not necessarily integral) formula
splits the weight into congruence classes; for a fully integral weight it
reduces to n^2 - F_b(lambda^-) (B, C) and n^2 - n - F_d(lambda^-) (D).
"""

from fractions import Fraction

from .errors import DomainError
from .hollow import f_stat
from .tableaux import rs_shape
from .weights import congruence_decompose, double, tilde

FAMILIES = ("A", "B", "C", "D")

# which F statistic the integral and half-integral classes contribute
_CLASS_KINDS = {"B": ("b", "b"), "C": ("b", "d"), "D": ("d", "d")}


def check_family(family: str, n: int) -> None:
    if family not in FAMILIES:
        raise DomainError(f"family must be one of {FAMILIES}, got {family!r}")
    if n < 1:
        raise DomainError("rank must be positive")
    if family in ("A", "D") and n < 2:
        raise DomainError(f"family {family} needs n >= 2, got n={n}")


def gk_breakdown(weight, family: str) -> dict:
    """GK dimension plus the per-congruence-class contributions.

    Each class record carries its 1-based positions, entries, the sequence
    whose insertion tableau is used, that tableau's shape, the statistic kind,
    and the subtracted amount.
    """
    w = tuple(Fraction(v) for v in weight)
    n = len(w)
    check_family(family, n)
    records = []

    def record(cls, kind: str, seq) -> int:
        sh = rs_shape(tuple(seq))
        value = f_stat(sh, kind)
        records.append(
            {
                "positions": list(cls.positions),
                "entries": [str(v) for v in cls.values],
                "sequence": [str(v) for v in seq],
                "shape": list(sh),
                "kind": kind,
                "f": value,
            }
        )
        return value

    if family == "A":
        split = congruence_decompose(w, "typeA")
        ambient = n * (n - 1) // 2
        penalty = sum(record(c, "a", c.values) for c in split.classes())
    else:
        split = congruence_decompose(w, "bcd")
        ambient = n * n - (n if family == "D" else 0)
        kind0, kind_half = _CLASS_KINDS[family]
        penalty = 0
        if split.integral is not None:
            penalty += record(split.integral, kind0, double(split.integral.values))
        if split.half_integral is not None:
            penalty += record(split.half_integral, kind_half, double(split.half_integral.values))
        for cls in split.others:
            penalty += record(cls, "a", tilde(cls.values))
    return {"gkdim": ambient - penalty, "ambient": ambient, "classes": records}


def gk_dimension(weight, family: str) -> int:
    """GK dimension of L(lambda) for lambda = ``weight`` in the given family."""
    w = tuple(Fraction(v) for v in weight)
    n = len(w)
    check_family(family, n)
    if family == "A":
        split = congruence_decompose(w, "typeA")
        return n * (n - 1) // 2 - sum(
            f_stat(rs_shape(c.values), "a") for c in split.classes()
        )
    split = congruence_decompose(w, "bcd")
    kind0, kind_half = _CLASS_KINDS[family]
    penalty = 0
    if split.integral is not None:
        penalty += f_stat(rs_shape(double(split.integral.values)), kind0)
    if split.half_integral is not None:
        penalty += f_stat(rs_shape(double(split.half_integral.values)), kind_half)
    for cls in split.others:
        penalty += f_stat(rs_shape(tilde(cls.values)), "a")
    base = n * n - (n if family == "D" else 0)
    return base - penalty
