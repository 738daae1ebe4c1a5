"""Brute-force reference implementations used to validate the fast paths.

These are deliberately naive: collapse by scanning the whole dominance poset,
the H-algorithm by enumerating all same-hollow orbit partitions, socularity by
enumerating integral weights.  They exist to be obviously correct.
"""

from dataclasses import dataclass
from itertools import product

from .errors import DomainError, IntegrityError
from .gkdim import gk_dimension
from .hollow import hollow
from .parabolic import ParabolicSetup, dim_nilradical, is_p_dominant, is_socular, parabolic_from_roots
from .partitions import (
    ORBIT_FAMILIES,
    Partition,
    as_partition,
    dominates,
    is_orbit_partition,
    is_special,
    partitions_of,
)
from .transforms import h_algorithm, is_domino_type


@dataclass(frozen=True)
class EnumerationBudget:
    max_total: int = 14
    entry_window: tuple[int, int] = (-3, 3)
    max_n: int = 3


def _unique_max(cands: list[Partition], context: str) -> Partition:
    for q in cands:
        if all(dominates(q, other) for other in cands):
            return q
    raise IntegrityError(f"no unique dominance maximum among {len(cands)} candidates: {context}")


def _unique_min(cands: list[Partition], context: str) -> Partition:
    for q in cands:
        if all(dominates(other, q) for other in cands):
            return q
    raise IntegrityError(f"no unique dominance minimum among {len(cands)} candidates: {context}")


def collapse_oracle(p, family: str) -> Partition:
    """Dominance-maximum type-``family`` partition below ``p``, by full enumeration."""
    p = as_partition(p)
    if family not in ORBIT_FAMILIES:
        raise DomainError(f"family must be one of {ORBIT_FAMILIES}, got {family!r}")
    want = 1 if family == "B" else 0
    if sum(p) % 2 != want:
        raise DomainError(f"type {family} needs total parity {want}, got total {sum(p)}")
    cands = [
        q for q in partitions_of(sum(p)) if is_orbit_partition(q, family) and dominates(p, q)
    ]
    return _unique_max(cands, f"collapse of {p} in type {family}")


def restricted_transform_oracle(p, family: str) -> Partition:
    """The H-algorithm's output recovered as restricted collapse then expansion.

    Candidates are the orbit partitions of the target total whose retained
    hollow shape equals that of ``p``.  Within them: dominance maximum below
    ``p`` (below ``p`` with its first part raised by one for B, whose target
    total is one box larger), then dominance minimum among the special
    candidates above that.
    """
    p = as_partition(p)
    if family not in ORBIT_FAMILIES:
        raise DomainError(f"family must be one of {ORBIT_FAMILIES}, got {family!r}")
    if not is_domino_type(p):
        raise DomainError(f"{p} is not of domino type")
    parity = "odd" if family in ("B", "C") else "even"
    target = sum(p) + 1 if family == "B" else sum(p)
    ph = hollow(p, parity)
    cands = [
        q
        for q in partitions_of(target)
        if is_orbit_partition(q, family) and hollow(q, parity) == ph
    ]
    if not cands:
        raise IntegrityError(f"no type-{family} partition of {target} shares the {parity} boxes of {p}")
    if family == "B":
        reference = (p[0] + 1,) + p[1:] if p else (1,)
    else:
        reference = p
    below = [q for q in cands if dominates(reference, q)]
    context = f"restricted transform of {p} in type {family}"
    lower = _unique_max(below, context) if below else None
    specials = [
        q
        for q in cands
        if is_special(q, family) and (lower is None or dominates(q, lower))
    ]
    if not specials:
        raise IntegrityError(f"no special candidate above the restricted collapse: {context}")
    return _unique_min(specials, context)


def integral_weights(n: int, window: tuple[int, int]):
    """All integer weights of length ``n`` with entries in the closed window."""
    lo, hi = window
    if lo > hi:
        raise DomainError(f"bad window {window}")
    return product(range(lo, hi + 1), repeat=n)


def socular_enumeration(setup: ParabolicSetup, budget: EnumerationBudget):
    """Maximum GK dimension over windowed integral p-dominant weights, with witnesses."""
    if setup.n > budget.max_n:
        raise DomainError(f"rank {setup.n} exceeds budget max_n={budget.max_n}")
    best = -1
    attaining: list[tuple[int, ...]] = []
    for w in integral_weights(setup.n, budget.entry_window):
        if not is_p_dominant(w, setup):
            continue
        g = gk_dimension(w, setup.family)
        if g > best:
            best, attaining = g, [w]
        elif g == best:
            attaining.append(w)
    return best, attaining


def _all_setups(family: str, max_n: int):
    for n in range(1, max_n + 1):
        if family in ("A", "D") and n < 2:
            continue
        top = n - 1 if family == "A" else n
        for mask in range(1 << top):
            excluded = frozenset(i + 1 for i in range(top) if mask >> i & 1)
            yield parabolic_from_roots(family, n, excluded)


def check_collapse(budget: EnumerationBudget) -> list[str]:
    """Compare collapse against the oracle on all parity-compatible partitions."""
    from .partitions import collapse

    failures = []
    for total in range(budget.max_total + 1):
        for p in partitions_of(total):
            for family in ORBIT_FAMILIES:
                if total % 2 != (1 if family == "B" else 0):
                    continue
                fast, slow = collapse(p, family), collapse_oracle(p, family)
                if fast != slow:
                    failures.append(f"collapse {p} {family}: {fast} != oracle {slow}")
    return failures


def check_halg(budget: EnumerationBudget) -> list[str]:
    """Compare the H-algorithm against the oracle on all domino-type partitions."""
    failures = []
    for total in range(0, budget.max_total + 1, 2):
        for p in partitions_of(total):
            if not is_domino_type(p):
                continue
            for family in ORBIT_FAMILIES:
                fast, slow = h_algorithm(p, family), restricted_transform_oracle(p, family)
                if fast != slow:
                    failures.append(f"halg {p} {family}: {fast} != oracle {slow}")
    return failures


def check_socular(budget: EnumerationBudget, families=("A", "B", "C", "D")) -> list[str]:
    """For every setup: max GK equals dim(u) and the attaining weights are the socular ones."""
    failures = []
    for family in families:
        for setup in _all_setups(family, budget.max_n):
            best, attaining = socular_enumeration(setup, budget)
            du = dim_nilradical(setup)
            if best != du:
                failures.append(f"{setup}: max GK {best} != dim u {du}")
                continue
            attain_set = set(attaining)
            for w in integral_weights(setup.n, budget.entry_window):
                if not is_p_dominant(w, setup):
                    continue
                cert = is_socular(w, setup)
                if cert.verdict != (w in attain_set):
                    failures.append(
                        f"{setup}, weight {w}: criterion says {cert.verdict}, "
                        f"gk attainment says {w in attain_set}"
                    )
    return failures
