"""
Balanced contiguous partition of a frequency-sorted symbol list.

The split is exact: among all ways of cutting the list into n nonempty
contiguous slices, the one returned minimizes the largest absolute deviation
of a slice sum from total/n, with ties going to the earliest cut positions.
Deviations are compared as |n * slice_sum - total| so that integer counts
never touch floating point.
"""

from bisect import bisect_left
from itertools import accumulate, combinations
from typing import Sequence, TypeVar

from app.errors import ConfigError

T = TypeVar("T")


def best_cuts(freqs: Sequence[int], n: int) -> tuple[int, ...]:
    """
    Cut positions (n - 1 increasing indices) of the optimal split.

    Every slice is nonempty, so ``len(freqs) >= n`` is required. The first
    n - 2 cuts are enumerated in lexicographic order; for each of them the
    last cut is located by bisection, since the worse of the two remaining
    slice deviations is convex in the position of that cut.
    """
    size = len(freqs)
    if n < 2:
        raise ConfigError("bad_partition_arity", f"cannot split into {n} slices")
    if size < n:
        raise ValueError(f"{size} items cannot fill {n} nonempty slices")

    prefix = [0, *accumulate(freqs)]
    total = prefix[-1]

    def dev(lo: int, hi: int) -> int:
        return abs(n * (prefix[hi] - prefix[lo]) - total)

    best: tuple[int, ...] = ()
    best_score = None
    for head in combinations(range(1, size - 1), n - 2):
        bounds = (0, *head)
        fixed = max((dev(a, b) for a, b in zip(bounds, bounds[1:])), default=0)
        if best_score is not None and fixed >= best_score:
            continue
        start = bounds[-1]
        rest = prefix[size] - prefix[start]

        # last cut k in [start + 1, size - 1]; g is smallest near rest / 2
        mid = bisect_left(prefix, prefix[start] + rest / 2, start + 1, size - 1)
        g_star = min(max(dev(start, k), dev(k, size)) for k in {max(mid - 1, start + 1), mid})
        score = max(fixed, g_star)

        # earliest k whose deviation pair fits under the score
        lower = max(total - score, n * rest - total - score)
        need = prefix[start] + -(-lower // n)
        k = bisect_left(prefix, need, start + 1, size - 1)

        if best_score is None or score < best_score:
            best_score = score
            best = (*head, k)
    return best


def split_contiguous(items: Sequence[T], freqs: Sequence[int], n: int) -> list[list[T]]:
    """
    Split ``items`` into exactly n contiguous slices balanced on ``freqs``.

    With fewer items than slices each item gets its own slice and the
    remaining slices are empty.
    """
    if len(items) != len(freqs):
        raise ValueError("items and freqs differ in length")
    if len(items) <= n:
        return [[item] for item in items] + [[] for _ in range(n - len(items))]
    cuts = (0, *best_cuts(freqs, n), len(items))
    return [list(items[a:b]) for a, b in zip(cuts, cuts[1:])]


def partition(items: Sequence[T], freqs: Sequence[int], n: int) -> list[list[T]]:
    """Ternary or quaternary split used by the constrained Shannon-Fano builder."""
    if n not in (3, 4):
        raise ConfigError("bad_partition_arity", f"partition slices into 3 or 4, not {n}")
    return split_contiguous(items, freqs, n)
