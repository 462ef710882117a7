"""Quantum teleportation for distinguishable qubits and for identical photons."""

from .distinguishable import BellKind, QubitState
from .identical_teleport import PolarizationState, teleport_identical
from .symmetric_space import OMEGA, ModeLabel, OccupationState, sym_dimension
from .tensor_core import ATOL, LabeledBasis, LinearOperator, StateVector

__all__ = [
    "ATOL",
    "BellKind",
    "LabeledBasis",
    "LinearOperator",
    "ModeLabel",
    "OMEGA",
    "OccupationState",
    "PolarizationState",
    "QubitState",
    "StateVector",
    "sym_dimension",
    "teleport_identical",
]
