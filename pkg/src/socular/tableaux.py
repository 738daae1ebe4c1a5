"""Robinson-Schensted insertion for sequences over any totally ordered entries.

Tableaux are tuples of tuples (rows, top first).  Rows are weakly increasing,
columns strictly increasing; an inserted value replaces the leftmost entry of
the first row that is strictly bigger, so equal entries append.
"""

from bisect import bisect_right
from functools import lru_cache

from .errors import DomainError
from .partitions import Partition

Tableau = tuple[tuple, ...]

EMPTY: Tableau = ()


def rs_insert(tableau: Tableau, value) -> Tableau:
    """Insert one value by row bumping and return the new tableau."""
    rows = [list(r) for r in tableau]
    v = value
    for row in rows:
        i = bisect_right(row, v)
        if i == len(row):
            row.append(v)
            return tuple(tuple(r) for r in rows)
        row[i], v = v, row[i]
    rows.append([v])
    return tuple(tuple(r) for r in rows)


def rs_tableau(seq) -> Tableau:
    """Left-to-right insertion of a whole sequence, starting from the empty tableau."""
    rows: list[list] = []
    for v in seq:
        for row in rows:
            i = bisect_right(row, v)
            if i == len(row):
                row.append(v)
                break
            row[i], v = v, row[i]
        else:
            rows.append([v])
    return tuple(tuple(r) for r in rows)


def shape(tableau: Tableau) -> Partition:
    """Row lengths of a tableau, as a partition."""
    sh = tuple(len(row) for row in tableau)
    if any(sh[i] < sh[i + 1] for i in range(len(sh) - 1)):
        raise DomainError(f"rows do not form a partition shape: {sh}")
    return sh


@lru_cache(maxsize=None)
def rs_shape(seq: tuple) -> Partition:
    """Shape of the insertion tableau of ``seq``; cached, so ``seq`` must be a tuple."""
    return shape(rs_tableau(seq))


def render_tableau(tableau: Tableau) -> str:
    """One row per line, entries space-separated, top row first."""
    return "\n".join(" ".join(str(v) for v in row) for row in tableau)
