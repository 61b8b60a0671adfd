"""Complex files and text reports."""

from morse_flowlines.io.complex_file import (
    ComplexDocument,
    MorseValue,
    document_from,
    load_complex,
    parse_complex_file,
    print_complex_file,
    read_complex,
)
from morse_flowlines.io.render import (
    render_dot,
    render_flowlines,
    render_homology,
    render_matrix,
    render_moduli,
    render_trace,
)

__all__ = [
    "ComplexDocument",
    "MorseValue",
    "document_from",
    "load_complex",
    "parse_complex_file",
    "print_complex_file",
    "read_complex",
    "render_dot",
    "render_flowlines",
    "render_homology",
    "render_matrix",
    "render_moduli",
    "render_trace",
]
