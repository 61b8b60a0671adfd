"""Smith normal form over the integers.

Entries are held as Python integers in an object array so elimination is
exact. The pivot is always an entry of minimal absolute value in the
remaining block.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt


@dataclass(frozen=True)
class SmithForm:
    """Rank and invariant factors d1 | d2 | ... of an integer matrix."""

    rank: int
    invariant_factors: tuple[int, ...]

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _min_abs_pivot(a: npt.NDArray[np.object_], s: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_value = 0
    rows, cols = a.shape
    for i in range(s, rows):
        for j in range(s, cols):
            value = abs(a[i, j])
            if value and (best is None or value < best_value):
                best, best_value = (i, j), value
                if value == 1:
                    return best
    return best


def _eliminate(a: npt.NDArray[np.object_], s: int) -> bool:
    """Reduce row s and column s against the pivot; True when both are clear."""
    rows, cols = a.shape
    clear = True
    pivot = a[s, s]
    for i in range(s + 1, rows):
        if a[i, s] != 0:
            a[i, :] = a[i, :] - (a[i, s] // pivot) * a[s, :]
            clear = clear and a[i, s] == 0
    for j in range(s + 1, cols):
        if a[s, j] != 0:
            a[:, j] = a[:, j] - (a[s, j] // pivot) * a[:, s]
            clear = clear and a[s, j] == 0
    return clear


def _non_divisible_row(a: npt.NDArray[np.object_], s: int) -> int | None:
    rows, cols = a.shape
    pivot = a[s, s]
    for i in range(s + 1, rows):
        for j in range(s + 1, cols):
            if a[i, j] % pivot != 0:
                return i
    return None


def smith_normal_form(matrix: npt.ArrayLike) -> SmithForm:
    """Diagonalize ``matrix`` by unimodular row and column operations.

    Args:
        matrix: Integer matrix (any array-like, possibly with a zero dimension).

    Returns:
        The rank and the positive invariant factors in divisibility order.
    """
    a = np.array(matrix, dtype=object)
    if a.ndim != 2:
        a = a.reshape(0, 0) if a.size == 0 else np.atleast_2d(a)
    a = np.vectorize(int, otypes=[object])(a) if a.size else a
    factors: list[int] = []
    s = 0
    while s < min(a.shape):
        pivot = _min_abs_pivot(a, s)
        if pivot is None:
            break
        i, j = pivot
        a[[s, i], :] = a[[i, s], :]
        a[:, [s, j]] = a[:, [j, s]]
        if not _eliminate(a, s):
            continue
        row = _non_divisible_row(a, s)
        if row is not None:
            a[s, :] = a[s, :] + a[row, :]
            continue
        factors.append(abs(a[s, s]))
        s += 1
    return SmithForm(rank=len(factors), invariant_factors=tuple(factors))
