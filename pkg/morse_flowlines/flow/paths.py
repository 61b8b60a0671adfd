"""Paths through the modified Hasse diagram, their signs, and flowlines.

A path is a sequence of simplices, consecutive ones a facet pair, with a
traversal flag per step: forward when the step follows its arrow in the
modified Hasse diagram, backward when it goes against it.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

from morse_flowlines.complexes.field import DiscreteVectorField
from morse_flowlines.complexes.hasse import ModifiedHasseDiagram
from morse_flowlines.complexes.simplex import Simplex, arrow_sign
from morse_flowlines.errors import EndpointMismatchError, MalformedPathError


class Traversal(StrEnum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class Step:
    source: Simplex
    target: Simplex
    traversal: Traversal

    @property
    def rises(self) -> bool:
        return self.target.dim > self.source.dim

    @property
    def sign(self) -> int:
        if self.rises:
            return arrow_sign(self.target, self.source)
        return arrow_sign(self.source, self.target)


@dataclass(frozen=True, order=True)
class Path:
    """A nonempty sequence of steps.

    Attributes:
        simplices: The visited simplices, at least two.
        forward: One flag per step; False marks a backward traversal.
    """

    simplices: tuple[Simplex, ...]
    forward: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.simplices) < 2:
            raise MalformedPathError("a path needs at least one step")
        if len(self.forward) != len(self.simplices) - 1:
            raise MalformedPathError(
                f"{len(self.simplices) - 1} steps but {len(self.forward)} traversal flags"
            )
        for a, b in zip(self.simplices, self.simplices[1:], strict=False):
            if not (a.is_facet_of(b) or b.is_facet_of(a)):
                raise MalformedPathError(f"{a} -> {b} is not a facet step")

    @classmethod
    def through(cls, diagram: ModifiedHasseDiagram, simplices: Iterable[Simplex]) -> "Path":
        """Path along ``simplices`` with traversal flags read off ``diagram``."""
        items = tuple(simplices)
        if len(items) < 2:
            raise MalformedPathError("a path needs at least one step")
        return cls(items, diagram.traversal_flags(items))

    @classmethod
    def parse(cls, diagram: ModifiedHasseDiagram, text: str) -> "Path":
        """Parse a comma-separated list of hyphen-joined simplices."""
        return cls.through(diagram, (Simplex.parse(part) for part in text.split(",")))

    @property
    def first(self) -> Simplex:
        return self.simplices[0]

    @property
    def last(self) -> Simplex:
        return self.simplices[-1]

    @property
    def length(self) -> int:
        return len(self.forward)

    @property
    def index(self) -> int:
        return self.first.dim - self.last.dim

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(
            Step(a, b, Traversal.FORWARD if fwd else Traversal.BACKWARD)
            for a, b, fwd in zip(self.simplices, self.simplices[1:], self.forward, strict=False)
        )

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.simplices)

    @property
    def backward_positions(self) -> tuple[int, ...]:
        return tuple(i for i, fwd in enumerate(self.forward) if not fwd)

    @property
    def is_legal(self) -> bool:
        """All steps forward and the dimension never rises twice in a row."""
        if not all(self.forward):
            return False
        levels = self.levels
        rises = [b > a for a, b in zip(levels, levels[1:], strict=False)]
        return not any(r1 and r2 for r1, r2 in zip(rises, rises[1:], strict=False))

    @cached_property
    def sign(self) -> int:
        return path_sign(self)

    @property
    def name(self) -> str:
        return ",".join(s.name for s in self.simplices)

    def __str__(self) -> str:
        return self.name


def path_sign(path: Path) -> int:
    """Product of the arrow signs times (-1)^((length - index) / 2).

    A backward step contributes the sign of the arrow it traverses.
    """
    product = 1
    for step in path.steps:
        product *= step.sign
    exponent, remainder = divmod(path.length - path.index, 2)
    if remainder:
        raise MalformedPathError(f"length and index of {path} differ in parity")
    return product * (-1 if exponent % 2 else 1)


def compose(first: Path, second: Path) -> Path:
    """Concatenate two paths sharing an endpoint.

    Raises:
        EndpointMismatchError: If ``first`` does not end where ``second`` starts.
    """
    if first.last != second.first:
        raise EndpointMismatchError(
            f"cannot compose: {first} ends at {first.last}, {second} starts at {second.first}"
        )
    return Path(first.simplices + second.simplices[1:], first.forward + second.forward)


def find_double_drop(path: Path) -> int:
    """Step position i where the dimension falls at steps i and i+1.

    Traversal direction is ignored, so half-up half-down drops in illegal
    paths are found too.

    Raises:
        MalformedPathError: If the index is not 2 or the drop is not unique.
    """
    if path.index != 2:
        raise MalformedPathError(f"{path} has index {path.index}, expected 2")
    levels = path.levels
    drops = [
        i
        for i in range(len(levels) - 2)
        if levels[i] - levels[i + 1] == 1 and levels[i + 1] - levels[i + 2] == 1
    ]
    if len(drops) != 1:
        raise MalformedPathError(f"{path} has {len(drops)} double drops, expected exactly one")
    return drops[0]


@dataclass(frozen=True, order=True)
class Flowline:
    """A legal index 2 path between critical simplices.

    Attributes:
        path: The underlying legal path.
        critical: Whether the intermediate simplex is critical.
    """

    path: Path
    critical: bool

    @classmethod
    def from_path(cls, path: Path, field_: DiscreteVectorField) -> "Flowline":
        """Validate ``path`` as a flowline under ``field_``.

        Raises:
            MalformedPathError: If the path is illegal, not of index 2, or
                does not start and end at critical simplices.
        """
        if not path.is_legal:
            raise MalformedPathError(f"{path} is not a legal path")
        position = find_double_drop(path)
        for end in (path.first, path.last):
            if not field_.is_critical(end):
                raise MalformedPathError(f"flowline endpoint {end} is not critical")
        return cls(path, field_.is_critical(path.simplices[position + 1]))

    @classmethod
    def parse(cls, diagram: ModifiedHasseDiagram, text: str) -> "Flowline":
        return cls.from_path(Path.parse(diagram, text), diagram.field)

    @property
    def simplices(self) -> tuple[Simplex, ...]:
        return self.path.simplices

    @property
    def alpha(self) -> Simplex:
        return self.path.first

    @property
    def gamma(self) -> Simplex:
        return self.path.last

    @property
    def double_drop_position(self) -> int:
        return find_double_drop(self.path)

    @property
    def intermediate(self) -> Simplex:
        return self.path.simplices[self.double_drop_position + 1]

    @property
    def sign(self) -> int:
        return self.path.sign

    @property
    def name(self) -> str:
        return self.path.name

    def __str__(self) -> str:
        return self.path.name

