"""Chain bases and differential matrices.

``simplicial_boundary`` is the ordinary boundary of the full simplicial
chain complex; ``morse_differential`` counts index 1 flowlines between
critical simplices with their signs.
"""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from morse_flowlines.complexes.field import critical_simplices
from morse_flowlines.complexes.hasse import ModifiedHasseDiagram
from morse_flowlines.complexes.simplex import Simplex, SimplicialComplex, arrow_sign
from morse_flowlines.errors import DimensionMismatchError, NonZeroSquareError
from morse_flowlines.flow.enumeration import (
    enumerate_flowlines_index1,
    enumerate_flowlines_index2,
)
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ChainBasis:
    """Ordered generators of a chain group in one dimension."""

    dimension: int
    simplices: tuple[Simplex, ...]

    def __post_init__(self) -> None:
        if len(set(self.simplices)) != len(self.simplices):
            raise ValueError(f"duplicate generators in dimension {self.dimension}")

    def __len__(self) -> int:
        return len(self.simplices)

    def index(self, sigma: Simplex) -> int:
        return self.simplices.index(sigma)


@dataclass(frozen=True, eq=False)
class DifferentialMatrix:
    """Integer matrix of a map from ``cols`` (dimension p) to ``rows`` (dimension p-1)."""

    rows: ChainBasis
    cols: ChainBasis
    entries: npt.NDArray[np.int64]

    def __post_init__(self) -> None:
        if self.entries.shape != (len(self.rows), len(self.cols)):
            raise DimensionMismatchError(
                f"matrix shape {self.entries.shape} does not match bases "
                f"({len(self.rows)}, {len(self.cols)})"
            )

    @property
    def dimension(self) -> int:
        return self.cols.dimension

    def entry(self, row: Simplex, col: Simplex) -> int:
        return int(self.entries[self.rows.index(row), self.cols.index(col)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries.tobytes()))

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.entries]


@dataclass(frozen=True)
class SquareCheck:
    """Outcome of ``verify_d_squared``; ``witness`` is (alpha, gamma, value)."""

    witness: tuple[Simplex, Simplex, int] | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.ok


def _matrix(
    rows: ChainBasis, cols: ChainBasis, columns: Sequence[dict[Simplex, int]]
) -> DifferentialMatrix:
    entries = np.zeros((len(rows), len(cols)), dtype=np.int64)
    position = {s: i for i, s in enumerate(rows.simplices)}
    for j, column in enumerate(columns):
        for sigma, value in column.items():
            entries[position[sigma], j] = value
    return DifferentialMatrix(rows, cols, entries)


def simplicial_basis(complex_: SimplicialComplex, p: int) -> ChainBasis:
    return ChainBasis(p, complex_.simplices(p))


def morse_basis(diagram: ModifiedHasseDiagram, p: int) -> ChainBasis:
    return ChainBasis(p, tuple(critical_simplices(diagram.complex, diagram.field, p)))


def simplicial_boundary(complex_: SimplicialComplex, p: int) -> DifferentialMatrix:
    """Boundary map C_p -> C_{p-1} with entry(tau, sigma) = arrow_sign(sigma, tau)."""
    rows = simplicial_basis(complex_, p - 1)
    cols = simplicial_basis(complex_, p)
    columns = [{tau: arrow_sign(sigma, tau) for tau in sigma.facets()} for sigma in cols.simplices]
    return _matrix(rows, cols, columns)


def morse_differential(
    diagram: ModifiedHasseDiagram, p: int, max_len: int | None = None, workers: int = 1
) -> DifferentialMatrix:
    """Morse differential on critical p-simplices.

    entry(beta, alpha) is the sum of path signs over index 1 flowlines
    alpha -> beta.

    Raises:
        UnboundedEnumerationError: On a non-gradient field without ``max_len``.
    """
    rows = morse_basis(diagram, p - 1)
    cols = morse_basis(diagram, p)

    def column(alpha: Simplex) -> dict[Simplex, int]:
        return {
            beta: sum(
                path.sign for path in enumerate_flowlines_index1(alpha, beta, diagram, max_len)
            )
            for beta in rows.simplices
        }

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            columns = list(pool.map(column, cols.simplices))
    else:
        columns = [column(alpha) for alpha in cols.simplices]
    matrix = _matrix(rows, cols, columns)
    logger.debug("morse differential assembled", p=p, shape=list(matrix.entries.shape))
    return matrix


def morse_differentials(
    diagram: ModifiedHasseDiagram, max_len: int | None = None, workers: int = 1
) -> list[DifferentialMatrix]:
    """Morse differentials for p = 0 .. top dimension (p = 0 maps to the zero group)."""
    return [
        morse_differential(diagram, p, max_len, workers)
        for p in range(diagram.complex.top_dimension + 1)
    ]


def simplicial_boundaries(complex_: SimplicialComplex) -> list[DifferentialMatrix]:
    return [simplicial_boundary(complex_, p) for p in range(complex_.top_dimension + 1)]


def verify_d_squared(high: DifferentialMatrix, low: DifferentialMatrix) -> SquareCheck:
    """Check low . high == 0.

    Raises:
        DimensionMismatchError: If the row basis of ``high`` is not the column
            basis of ``low``.
    """
    if high.rows != low.cols:
        raise DimensionMismatchError(
            f"cannot compose differentials of dimensions {high.dimension} and {low.dimension}"
        )
    product = low.entries @ high.entries
    nonzero = np.argwhere(product != 0)
    if len(nonzero) == 0:
        return SquareCheck()
    i, j = (int(x) for x in nonzero[0])
    witness = (high.cols.simplices[j], low.rows.simplices[i], int(product[i, j]))
    logger.warning(
        "differential squares to nonzero",
        alpha=witness[0].name,
        gamma=witness[1].name,
        value=witness[2],
    )
    return SquareCheck(witness)


def require_d_squared_zero(differentials: Sequence[DifferentialMatrix]) -> None:
    """Raise on the first consecutive pair that does not compose to zero.

    Raises:
        NonZeroSquareError: With the (alpha, gamma, value) witness.
    """
    for low, high in zip(differentials, differentials[1:], strict=False):
        check = verify_d_squared(high, low)
        if check.witness is not None:
            alpha, gamma, value = check.witness
            raise NonZeroSquareError(
                f"d^2 != 0: <d d {alpha}, {gamma}> = {value}", witness=check.witness
            )


def factorization_defect(
    diagram: ModifiedHasseDiagram, alpha: Simplex, gamma: Simplex, max_len: int | None = None
) -> dict[Simplex, tuple[int, int]]:
    """Compare #M(alpha, beta) * #M(beta, gamma) with the signed count of
    critical flowlines alpha -> gamma through beta, for every critical beta.

    Returns:
        Mapping from beta to (product of counts, signed count through beta).
    """
    flowlines = enumerate_flowlines_index2(alpha, gamma, diagram, max_len)
    result = {}
    for beta in critical_simplices(diagram.complex, diagram.field, alpha.dim - 1):
        upper = sum(
            path.sign for path in enumerate_flowlines_index1(alpha, beta, diagram, max_len)
        )
        lower = sum(
            path.sign for path in enumerate_flowlines_index1(beta, gamma, diagram, max_len)
        )
        through = sum(f.sign for f in flowlines if f.critical and f.intermediate == beta)
        result[beta] = (upper * lower, through)
    return result
