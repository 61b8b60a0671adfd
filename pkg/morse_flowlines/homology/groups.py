"""Integer homology from a list of differentials."""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from morse_flowlines.complexes.hasse import ModifiedHasseDiagram
from morse_flowlines.complexes.simplex import SimplicialComplex
from morse_flowlines.errors import DimensionMismatchError
from morse_flowlines.homology.chains import (
    DifferentialMatrix,
    morse_differentials,
    require_d_squared_zero,
    simplicial_boundaries,
)
from morse_flowlines.homology.snf import smith_normal_form
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    """Z^betti plus the cyclic torsion summands."""

    dimension: int
    betti: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyResult:
    groups: tuple[HomologyGroup, ...]

    def __getitem__(self, dimension: int) -> HomologyGroup:
        return self.groups[dimension]

    def __iter__(self) -> Iterator[HomologyGroup]:
        return iter(self.groups)

    def __len__(self) -> int:
        return len(self.groups)

    @property
    def betti_numbers(self) -> tuple[int, ...]:
        return tuple(g.betti for g in self.groups)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** g.dimension * g.betti for g in self.groups)


def homology(differentials: Sequence[DifferentialMatrix]) -> HomologyResult:
    """H_i = ker d_i / im d_{i+1}.

    Args:
        differentials: d_0 .. d_top, where d_p maps dimension p to p-1 (d_0
            has no rows).

    Raises:
        DimensionMismatchError: If the list is out of order.
        NonZeroSquareError: If two consecutive differentials do not compose to zero.
    """
    for p, d in enumerate(differentials):
        if d.dimension != p:
            raise DimensionMismatchError(f"differential {p} has dimension {d.dimension}")
    require_d_squared_zero(differentials)

    forms = [smith_normal_form(d.entries) for d in differentials]
    groups = []
    for p, d in enumerate(differentials):
        kernel = len(d.cols) - forms[p].rank
        image = forms[p + 1] if p + 1 < len(forms) else None
        betti = kernel - (image.rank if image else 0)
        torsion = image.torsion if image else ()
        groups.append(HomologyGroup(p, betti, torsion))
    return HomologyResult(tuple(groups))


def morse_homology(
    diagram: ModifiedHasseDiagram, max_len: int | None = None, workers: int = 1
) -> HomologyResult:
    """Homology of the Morse chain complex of ``diagram``."""
    result = homology(morse_differentials(diagram, max_len, workers))
    logger.info("morse homology computed", groups=[str(g) for g in result])
    return result


def simplicial_homology_oracle(complex_: SimplicialComplex) -> HomologyResult:
    """Homology of the full simplicial chain complex."""
    result = homology(simplicial_boundaries(complex_))
    logger.info("simplicial homology computed", groups=[str(g) for g in result])
    return result
