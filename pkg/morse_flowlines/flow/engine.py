"""The flowline algorithm: Flop, Insert, Cancel and the labelled run.

Every floperation negates the path sign. A run starting from a critical
flowline alternates floperations until it appends another critical
flowline with label ``f``; from a noncritical start it may instead come
back to where it began.
"""

from dataclasses import dataclass
from enum import StrEnum

from morse_flowlines.complexes.hasse import ModifiedHasseDiagram
from morse_flowlines.complexes.simplex import Simplex
from morse_flowlines.errors import (
    CannotCancelError,
    CannotInsertError,
    InvariantViolationError,
    MalformedPathError,
)
from morse_flowlines.flow.paths import Flowline, Path, find_double_drop
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


class Label(StrEnum):
    """How a flowline entered the list: just Cancelled (c) or just Flopped (f)."""

    C = "c"
    F = "f"

    @property
    def conjugate(self) -> "Label":
        return Label.F if self is Label.C else Label.C


class Floperation(StrEnum):
    FLOP = "flop"
    INSERT = "insert"
    CANCEL = "cancel"


@dataclass(frozen=True)
class LabeledFlowline:
    flowline: Flowline
    label: Label

    def __str__(self) -> str:
        return f"{self.label}\t{self.flowline.sign:+d}\t{self.flowline.name}"


@dataclass(frozen=True)
class StepResult:
    """One algorithm step from a labelled flowline to the next one.

    Attributes:
        entry: The next labelled flowline.
        operations: The floperations applied, in order.
        paths: The path before and after each floperation.
    """

    entry: LabeledFlowline
    operations: tuple[Floperation, ...]
    paths: tuple[Path, ...]


@dataclass(frozen=True)
class AlgOutcome:
    """A labelled list produced by the algorithm."""

    entries: tuple[LabeledFlowline, ...]
    operations: tuple[Floperation, ...]

    @property
    def first(self) -> LabeledFlowline:
        return self.entries[0]

    @property
    def last(self) -> LabeledFlowline:
        return self.entries[-1]

    @property
    def labels(self) -> tuple[Label, ...]:
        return tuple(e.label for e in self.entries)

    @property
    def flops(self) -> int:
        return self.operations.count(Floperation.FLOP)

    @property
    def inserts(self) -> int:
        return self.operations.count(Floperation.INSERT)

    @property
    def cancels(self) -> int:
        return self.operations.count(Floperation.CANCEL)

    @property
    def floperations(self) -> int:
        return len(self.operations)


@dataclass(frozen=True)
class Terminated(AlgOutcome):
    """The run appended a critical flowline with label f."""

    @property
    def final(self) -> Flowline:
        return self.entries[-1].flowline


@dataclass(frozen=True)
class Cycled(AlgOutcome):
    """The run came back to its starting entry after ``period`` steps."""

    period: int = 0


class FlowlineEngine:
    """Applies floperations to paths of one modified Hasse diagram."""

    def __init__(self, diagram: ModifiedHasseDiagram, max_steps: int = 100_000) -> None:
        """
        Initialize the engine.

        Args:
            diagram: Modified Hasse diagram the paths live in.
            max_steps: Upper bound on steps in a single run.
        """
        self.diagram = diagram
        self.field = diagram.field
        self.max_steps = max_steps

    def flop(self, path: Path) -> Path:
        """Replace the double-drop middle by the other simplex between top and bottom.

        Raises:
            MalformedPathError: If there is no unique double drop or its bottom is
                not a face of its top.
        """
        i = find_double_drop(path)
        top, middle, bottom = path.simplices[i : i + 3]
        spare = set(top.vertices) - set(bottom.vertices)
        if not bottom.is_face_of(top) or len(spare) != 2:
            raise MalformedPathError(f"double drop {top} -> {middle} -> {bottom} is not floppable")
        (kept,) = spare - set(middle.vertices)
        alternative = Simplex.from_iterable(bottom.vertices + (kept,))
        simplices = path.simplices[: i + 1] + (alternative,) + path.simplices[i + 2 :]
        forward = (
            path.forward[:i]
            + (
                self.diagram.is_forward(top, alternative),
                self.diagram.is_forward(alternative, bottom),
            )
            + path.forward[i + 2 :]
        )
        return Path(simplices, forward)

    def insert(self, flowline: Flowline) -> Path:
        """Splice the Morse arrow of the intermediate simplex into the path.

        A pair tail b gets b -> head => b after it; a pair head b gets
        b => tail -> b before its outgoing step. The result has one backward
        step.

        Raises:
            CannotInsertError: If the flowline is critical.
        """
        if flowline.critical:
            raise CannotInsertError(f"cannot insert into critical flowline {flowline}")
        path = flowline.path
        i = flowline.double_drop_position + 1
        beta = path.simplices[i]
        head = self.field.head_of(beta)
        if head is not None:
            spliced, flags = (head, beta), (True, False)
        else:
            tail = self.field.tail_of(beta)
            assert tail is not None
            spliced, flags = (tail, beta), (False, True)
        return Path(
            path.simplices[: i + 1] + spliced + path.simplices[i + 1 :],
            path.forward[:i] + flags + path.forward[i:],
        )

    def cancel(self, path: Path) -> Path:
        """Remove a doubled traversal X -> Y -> X of one edge in opposite directions.

        Raises:
            CannotCancelError: If the path has no such sub-sequence.
        """
        s, fwd = path.simplices, path.forward
        for k in path.backward_positions:
            for j in (k - 1, k):
                if 0 <= j and j + 2 < len(s) and s[j] == s[j + 2] and fwd[j] != fwd[j + 1]:
                    return Path(s[: j + 1] + s[j + 3 :], fwd[:j] + fwd[j + 2 :])
        raise CannotCancelError(f"nothing to cancel in {path}")

    def _flowline(self, path: Path) -> Flowline:
        try:
            return Flowline.from_path(path, self.field)
        except MalformedPathError as e:
            raise InvariantViolationError(f"algorithm produced a non-flowline: {e}") from e

    def step(self, entry: LabeledFlowline) -> StepResult:
        """Advance one appended entry to the next.

        A ``c`` entry is Flopped; an ``f`` entry is Inserted then Flopped. If
        the result is illegal it is Cancelled and labelled ``c``, otherwise
        it is labelled ``f``.
        """
        operations: list[Floperation] = []
        path = entry.flowline.path
        paths = [path]
        if entry.label is Label.F:
            path = self.insert(entry.flowline)
            operations.append(Floperation.INSERT)
            paths.append(path)
        path = self.flop(path)
        operations.append(Floperation.FLOP)
        paths.append(path)
        label = Label.F
        if not path.is_legal:
            try:
                path = self.cancel(path)
            except CannotCancelError as e:
                raise InvariantViolationError(f"illegal path without a cancel site: {e}") from e
            operations.append(Floperation.CANCEL)
            paths.append(path)
            label = Label.C
        nxt = LabeledFlowline(self._flowline(path), label)
        logger.debug(
            "algorithm step",
            source=entry.flowline.name,
            target=nxt.flowline.name,
            label=str(label),
            operations=[str(o) for o in operations],
        )
        return StepResult(nxt, tuple(operations), tuple(paths))

    def alg_list(self, flowline: Flowline, start: Label | str = Label.C) -> AlgOutcome:
        """Run the algorithm from ``flowline``.

        With ``start`` c the first floperation is a Flop; with f it is an
        Insert. The run stops when a critical flowline is appended with label
        f, or when the starting entry recurs.

        Raises:
            CannotInsertError: If ``start`` is f and the flowline is critical.
            InvariantViolationError: If an entry other than the start repeats.
        """
        start = Label(start)
        if start is Label.F and flowline.critical:
            raise CannotInsertError(f"cannot start with Insert on critical flowline {flowline}")
        initial = LabeledFlowline(flowline, start)
        entries = [initial]
        operations: list[Floperation] = []
        seen = {initial}
        current = initial
        for _ in range(self.max_steps):
            result = self.step(current)
            current = result.entry
            entries.append(current)
            operations.extend(result.operations)
            if current.label is Label.F and current.flowline.critical:
                logger.info(
                    "algorithm terminated",
                    start=flowline.name,
                    end=current.flowline.name,
                    floperations=len(operations),
                )
                return Terminated(tuple(entries), tuple(operations))
            if current == initial:
                logger.warning(
                    "algorithm cycled", start=flowline.name, period=len(entries) - 1
                )
                return Cycled(tuple(entries), tuple(operations), period=len(entries) - 1)
            if current in seen:
                raise InvariantViolationError(
                    f"entry {current.label} {current.flowline} repeated before the start recurred"
                )
            seen.add(current)
        raise InvariantViolationError(f"no termination within {self.max_steps} steps")

    def alg(self, flowline: Flowline) -> Flowline:
        """The critical flowline a critical ``flowline`` is carried to.

        Raises:
            MalformedPathError: If ``flowline`` is not critical.
            InvariantViolationError: If the run cycles.
        """
        if not flowline.critical:
            raise MalformedPathError(f"{flowline} is not a critical flowline")
        outcome = self.alg_list(flowline, Label.C)
        if not isinstance(outcome, Terminated):
            raise InvariantViolationError(f"run from critical flowline {flowline} cycled")
        return outcome.final

    def successor(self, flowline: Flowline, label: Label) -> Flowline:
        """The flowline one algorithm step after ``(flowline, label)``."""
        return self.step(LabeledFlowline(flowline, label)).entry.flowline
