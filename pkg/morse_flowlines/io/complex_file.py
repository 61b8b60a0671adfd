"""Complex files: YAML documents describing a complex and its vector field.

A document looks like::

    vertices: [1, 2, 3, 4]
    maximal_simplices:
    - [1, 2, 3]
    - [2, 3, 4]
    vector_field:
    - - [1, 3]
      - [1, 2, 3]
    morse_values:
    - simplex: [1]
      value: 3.0

``vector_field`` and ``morse_values`` are optional. Simplices are sorted
integer lists. Errors point at the offending YAML node.
"""

from collections.abc import Sequence
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from morse_flowlines.complexes.field import DiscreteVectorField, MorseFunction, field_from_morse
from morse_flowlines.complexes.simplex import Simplex, SimplicialComplex, build_complex
from morse_flowlines.errors import ComplexFileError
from morse_flowlines.logging import get_logger

logger = get_logger(__name__)


def _check_simplex(vertices: list[int]) -> list[int]:
    if not vertices:
        raise ValueError("a simplex needs at least one vertex")
    if any(v < 0 for v in vertices):
        raise ValueError(f"vertex ids must be non-negative, got {vertices}")
    if any(a >= b for a, b in zip(vertices, vertices[1:], strict=False)):
        raise ValueError(f"simplex vertices must be strictly increasing, got {vertices}")
    return vertices


class MorseValue(BaseModel):
    """One entry of ``morse_values``."""

    model_config = ConfigDict(extra="forbid")

    simplex: list[int]
    value: float

    @field_validator("simplex")
    @classmethod
    def _sorted_simplex(cls, v: list[int]) -> list[int]:
        return _check_simplex(v)


class ComplexDocument(BaseModel):
    """The parsed form of a complex file."""

    model_config = ConfigDict(extra="forbid")

    vertices: list[int] = Field(description="Vertex universe; ids are unique and non-negative")
    maximal_simplices: list[list[int]] = Field(default_factory=list)
    vector_field: list[tuple[list[int], list[int]]] | None = Field(
        default=None, description="(tail, head) pairs"
    )
    morse_values: list[MorseValue] | None = None

    @field_validator("vertices")
    @classmethod
    def _unique_vertices(cls, v: list[int]) -> list[int]:
        if any(x < 0 for x in v):
            raise ValueError("vertex ids must be non-negative")
        if len(set(v)) != len(v):
            raise ValueError("vertex ids must be unique")
        return v

    @field_validator("maximal_simplices")
    @classmethod
    def _sorted_simplices(cls, v: list[list[int]]) -> list[list[int]]:
        return [_check_simplex(s) for s in v]

    @field_validator("vector_field")
    @classmethod
    def _sorted_pairs(
        cls, v: list[tuple[list[int], list[int]]] | None
    ) -> list[tuple[list[int], list[int]]] | None:
        if v is not None:
            for tail, head in v:
                _check_simplex(tail)
                _check_simplex(head)
        return v


def _node_at(root: yaml.Node | None, loc: Sequence[int | str]) -> yaml.Node | None:
    """Deepest node of ``root`` along a pydantic error location."""
    node = root
    for key in loc:
        child: yaml.Node | None = None
        if isinstance(node, yaml.MappingNode):
            for key_node, value_node in node.value:
                if key_node.value == key:
                    child = value_node
                    break
        elif isinstance(node, yaml.SequenceNode) and isinstance(key, int):
            if 0 <= key < len(node.value):
                child = node.value[key]
        if child is None:
            break
        node = child
    return node


def parse_complex_file(text: str) -> ComplexDocument:
    """Parse a complex file.

    Raises:
        ComplexFileError: On YAML syntax errors or documents that do not
            follow the grammar, with the 1-based line and column when known.
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        problem = getattr(e, "problem", None) or str(e)
        if mark is not None:
            raise ComplexFileError(problem, mark.line + 1, mark.column + 1) from e
        raise ComplexFileError(problem) from e

    if not isinstance(data, dict):
        raise ComplexFileError("a complex file must be a mapping", 1, 1)

    try:
        return ComplexDocument.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        where = ".".join(str(part) for part in error["loc"])
        node = _node_at(yaml.compose(text), error["loc"])
        message = f"{where}: {error['msg']}" if where else error["msg"]
        if node is None:
            raise ComplexFileError(message) from e
        raise ComplexFileError(
            message, node.start_mark.line + 1, node.start_mark.column + 1
        ) from e


def print_complex_file(document: ComplexDocument) -> str:
    """Serialize a document; parsing the result gives back an equal document."""
    data: dict[str, Any] = document.model_dump(mode="json", exclude_none=True)
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None)


def load_complex(
    document: ComplexDocument,
) -> tuple[SimplicialComplex, DiscreteVectorField | None, MorseFunction | None]:
    """Build the complex, the vector field and the Morse function of a document.

    When only ``morse_values`` are given the field is the one they induce.

    Raises:
        PropertyViolationError: If a simplex uses a vertex outside ``vertices``.
        InvalidMorseFunctionError: If ``morse_values`` is not a discrete Morse function.
        ComplexFileError: If a Morse value names a simplex outside the complex
            or the explicit field disagrees with the Morse values.
    """
    complex_ = build_complex(
        (Simplex(tuple(s)) for s in document.maximal_simplices), vertices=document.vertices
    )

    field_: DiscreteVectorField | None = None
    if document.vector_field is not None:
        field_ = DiscreteVectorField.from_pairs(
            (Simplex(tuple(tail)), Simplex(tuple(head))) for tail, head in document.vector_field
        )

    morse: MorseFunction | None = None
    if document.morse_values is not None:
        values: dict[Simplex, float] = {}
        for entry in document.morse_values:
            sigma = Simplex(tuple(entry.simplex))
            if sigma not in complex_:
                raise ComplexFileError(f"morse value given for {sigma}, not in the complex")
            if sigma in values:
                raise ComplexFileError(f"two morse values given for {sigma}")
            values[sigma] = entry.value
        morse = MorseFunction(values)
        induced = field_from_morse(morse, complex_)
        if field_ is None:
            field_ = induced
        elif field_ != induced:
            logger.error("vector field disagrees with morse values")
            raise ComplexFileError("vector_field differs from the field induced by morse_values")

    logger.debug(
        "complex file loaded",
        simplices=len(complex_),
        pairs=len(field_) if field_ is not None else 0,
        morse=morse is not None,
    )
    return complex_, field_, morse


def read_complex(
    text: str,
) -> tuple[SimplicialComplex, DiscreteVectorField | None, MorseFunction | None]:
    """``load_complex`` of ``parse_complex_file``."""
    return load_complex(parse_complex_file(text))


def document_from(
    complex_: SimplicialComplex,
    field_: DiscreteVectorField | None = None,
    morse: MorseFunction | None = None,
) -> ComplexDocument:
    """The document describing ``complex_`` with an optional field and Morse function."""
    return ComplexDocument(
        vertices=list(complex_.vertices),
        maximal_simplices=[list(s.vertices) for s in complex_.maximal_simplices()],
        vector_field=(
            [(list(t.vertices), list(h.vertices)) for t, h in field_.sorted_pairs()]
            if field_ is not None
            else None
        ),
        morse_values=(
            [MorseValue(simplex=list(s.vertices), value=morse(s)) for s in complex_]
            if morse is not None
            else None
        ),
    )
