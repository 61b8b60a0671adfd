"""Flowlines, the Flop/Insert/Cancel algorithm and moduli spaces."""

from morse_flowlines.flow.engine import (
    AlgOutcome,
    Cycled,
    FlowlineEngine,
    Label,
    LabeledFlowline,
    Terminated,
)
from morse_flowlines.flow.enumeration import (
    enumerate_flowlines_index1,
    enumerate_flowlines_index2,
)
from morse_flowlines.flow.moduli import Component, ModuliSpace, boundary, build_moduli, components
from morse_flowlines.flow.paths import Flowline, Path, Step, compose, find_double_drop, path_sign

__all__ = [
    "AlgOutcome",
    "Component",
    "Cycled",
    "Flowline",
    "FlowlineEngine",
    "Label",
    "LabeledFlowline",
    "ModuliSpace",
    "Path",
    "Step",
    "Terminated",
    "boundary",
    "build_moduli",
    "components",
    "compose",
    "enumerate_flowlines_index1",
    "enumerate_flowlines_index2",
    "find_double_drop",
    "path_sign",
]
