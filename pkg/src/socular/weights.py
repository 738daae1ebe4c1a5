"""Exact-rational weight sequences, doubling maps, and congruence decompositions.

Weights are tuples of ``fractions.Fraction`` (plain ints are accepted anywhere
and mean the same thing).  All operations are pure; no floating point is used
anywhere because the downstream criteria are exact equalities.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

Weight = tuple[Fraction, ...]

_ENTRY_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse one entry: ``a``, ``-a`` or ``a/b`` with b > 0.  No decimals."""
    text = text.strip()
    if not _ENTRY_RE.match(text):
        raise DomainError(f"not a rational literal: {text!r}")
    return Fraction(text)


def parse_weight(text: str) -> Weight:
    """Parse a comma-separated weight, e.g. ``-5,-6,-4,1/2``."""
    toks = text.split(",")
    if not toks or not text.strip():
        raise DomainError("empty weight")
    return tuple(parse_rational(tok) for tok in toks)


def format_weight(weight) -> str:
    return ",".join(str(v) for v in weight)


def double(weight, side: str = "back") -> tuple:
    """The doubling maps: back gives (x_1,...,x_n,-x_n,...,-x_1), front the reverse half first."""
    w = tuple(weight)
    if side == "back":
        return w + tuple(-v for v in reversed(w))
    if side == "front":
        return tuple(-v for v in reversed(w)) + w
    raise DomainError(f"side must be 'back' or 'front', got {side!r}")


def _frac(v) -> Fraction:
    f = Fraction(v)
    return f - (f.numerator // f.denominator)


def _class_key(v, grouping: str) -> Fraction:
    f = _frac(v)
    if grouping == "typeA":
        return f
    # difference-or-sum congruence: fractional parts f and 1-f merge
    g = (1 - f) % 1
    return min(f, g)


@dataclass(frozen=True)
class CongruenceClass:
    """A maximal congruent subsequence of a weight, with 1-based positions."""

    positions: tuple[int, ...]
    values: Weight


@dataclass(frozen=True)
class CongruenceSplit:
    grouping: str
    integral: CongruenceClass | None
    half_integral: CongruenceClass | None
    others: tuple[CongruenceClass, ...]

    def classes(self) -> tuple[CongruenceClass, ...]:
        """Every class, ordered by first position."""
        out = [c for c in (self.integral, self.half_integral) if c is not None]
        out.extend(self.others)
        out.sort(key=lambda c: c.positions[0])
        return tuple(out)


def congruence_decompose(weight, grouping: str) -> CongruenceSplit:
    """Split a weight into maximal congruent subsequences.

    ``grouping="typeA"`` merges entries whose difference is an integer;
    ``grouping="bcd"`` merges entries whose difference or sum is an integer.
    Classes keep the original entry order; ``others`` is sorted by the first
    position of each class.
    """
    if grouping not in ("typeA", "bcd"):
        raise DomainError(f"grouping must be 'typeA' or 'bcd', got {grouping!r}")
    w = tuple(Fraction(v) for v in weight)
    buckets: dict[Fraction, list[int]] = {}
    for i, v in enumerate(w):
        buckets.setdefault(_class_key(v, grouping), []).append(i)
    classes = {
        key: CongruenceClass(
            positions=tuple(i + 1 for i in idxs),
            values=tuple(w[i] for i in idxs),
        )
        for key, idxs in buckets.items()
    }
    if grouping == "typeA":
        others = tuple(sorted(classes.values(), key=lambda c: c.positions[0]))
        return CongruenceSplit(grouping, None, None, others)
    integral = classes.pop(Fraction(0), None)
    half = classes.pop(Fraction(1, 2), None)
    others = tuple(sorted(classes.values(), key=lambda c: c.positions[0]))
    return CongruenceSplit(grouping, integral, half, others)


def tilde(values) -> tuple:
    """Rewrite one non-integral difference-or-sum class as an integral-difference sequence.

    The entries congruent to the first one (by integral difference) stay put;
    the remaining entries are negated and appended in reversed order.
    """
    vals = tuple(Fraction(v) for v in values)
    if not vals:
        return ()
    lead = _frac(vals[0])
    y = [v for v in vals if _frac(v) == lead]
    z = [v for v in vals if _frac(v) != lead]
    return tuple(y) + tuple(-v for v in reversed(z))


def is_integral(weight) -> bool:
    return all(Fraction(v).denominator == 1 for v in weight)
