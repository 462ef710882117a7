"""Teleportation of a qubit with three distinguishable particles.

The three-qubit register is always ordered ``(3, 1, 2)``: the particle holding
the unknown state first, then the two halves of the EPR pair. Particles 1 and
3 are measured in the Bell basis and particle 2 receives the state.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .tensor_core import (
    ATOL,
    LabeledBasis,
    LinearOperator,
    NotNormalizedError,
    StateVector,
    apply,
    fidelity,
    product_basis,
    projector,
    tensor_product,
)

QUBIT = LabeledBasis((0, 1))
TWO_QUBITS = product_basis(QUBIT, QUBIT)
THREE_QUBITS = product_basis(TWO_QUBITS, QUBIT)

#: Slot order of the three-particle register.
SLOT_ORDER = (3, 1, 2)

_S = 1 / np.sqrt(2)


class BellKind(enum.IntEnum):
    """Bell measurement outcomes, numbered 1-4 in the order the corrections are listed."""

    PhiPlus = 1
    PhiMinus = 2
    PsiPlus = 3
    PsiMinus = 4


# amplitudes over |00>, |01>, |10>, |11> (first slot major)
_BELL_AMPLITUDES = {
    BellKind.PhiPlus: (_S, 0, 0, _S),
    BellKind.PhiMinus: (_S, 0, 0, -_S),
    BellKind.PsiPlus: (0, _S, _S, 0),
    BellKind.PsiMinus: (0, _S, -_S, 0),
}

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_CORRECTIONS = {
    BellKind.PhiPlus: np.eye(2, dtype=complex),
    BellKind.PhiMinus: SIGMA_Z,
    BellKind.PsiPlus: SIGMA_X,
    BellKind.PsiMinus: SIGMA_X @ SIGMA_Z,
}


@dataclass(frozen=True)
class QubitState:
    """``alpha|0> + beta|1>``."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        weight = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(weight - 1.0) > ATOL:
            raise NotNormalizedError(f"|alpha|^2 + |beta|^2 = {weight!r}, expected 1")

    @classmethod
    def normalized(cls, alpha: complex, beta: complex) -> "QubitState":
        n = np.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if n <= 1e-14:
            raise ValueError("alpha and beta cannot both vanish")
        return cls(alpha / n, beta / n)

    @classmethod
    def from_vector(cls, v: StateVector) -> "QubitState":
        return cls.normalized(v.amplitudes[0], v.amplitudes[1])

    def vector(self) -> StateVector:
        return StateVector(QUBIT, [self.alpha, self.beta])


@dataclass(frozen=True, eq=False)
class MeasurementOutcome:
    kind: BellKind
    probability: float
    # None when the outcome has zero probability
    conditional_state: Optional[StateVector]


def bell_state(kind: BellKind, pair: tuple = (1, 3)) -> StateVector:
    """Bell vector on an ordered pair of qubit slots, first slot major."""
    if len(pair) != 2 or pair[0] == pair[1]:
        raise ValueError(f"a Bell pair needs two distinct slots, got {pair!r}")
    return StateVector(TWO_QUBITS, _BELL_AMPLITUDES[BellKind(kind)])


def total_state(input: QubitState) -> StateVector:
    """Unknown state on particle 3 times the EPR pair on (1, 2), in slot order (3, 1, 2)."""
    return tensor_product(input.vector(), bell_state(BellKind.PhiPlus, (1, 2)))


def _as_132(total: StateVector) -> np.ndarray:
    # (3, 1, 2) -> array indexed [s1, s3, s2]
    if total.basis != THREE_QUBITS:
        raise ValueError("expected a three-qubit state")
    return total.amplitudes.reshape(2, 2, 2).transpose(1, 0, 2)


def decompose(total: StateVector) -> dict:
    """Particle-2 companions of each Bell state of (1, 3).

    ``total == sum_k companion[k] (x) bell_state(k, (1, 3))`` with the tensor
    factors placed back in (3, 1, 2) order; the companions are not normalized.
    """
    pairs = _as_132(total).reshape(4, 2)
    return {
        kind: StateVector(QUBIT, bell_state(kind).amplitudes.conj() @ pairs)
        for kind in BellKind
    }


def reconstruct(companions: dict) -> StateVector:
    """Inverse of :func:`decompose`."""
    arr = np.zeros((2, 2, 2), dtype=complex)  # [s1, s3, s2]
    for kind, companion in companions.items():
        arr += np.multiply.outer(
            bell_state(kind).amplitudes.reshape(2, 2), companion.amplitudes
        )
    return StateVector(THREE_QUBITS, arr.transpose(1, 0, 2).reshape(-1))


def bell_projector_full(kind: BellKind) -> LinearOperator:
    """``I_2 (x) |B_13><B_13|`` written on the (3, 1, 2) register."""
    p13 = projector(bell_state(kind)).matrix.reshape(2, 2, 2, 2)  # [s1, s3, s1', s3']
    # indices: out (s3, s1, s2), in (s3', s1', s2')
    full = np.einsum("acbd,ef->caedbf", p13, np.eye(2))
    return LinearOperator.on(THREE_QUBITS, full.reshape(8, 8))


def measure_bell(total: StateVector, kind: BellKind) -> MeasurementOutcome:
    if not total.is_normalized():
        raise NotNormalizedError("measurement needs a normalized total state")
    companion = decompose(total)[BellKind(kind)]
    probability = companion.norm() ** 2
    conditional = companion / np.sqrt(probability) if probability > ATOL else None
    return MeasurementOutcome(BellKind(kind), float(probability), conditional)


def correction(kind: BellKind) -> LinearOperator:
    """Fixed Pauli correction for an outcome: I, sz, sx, sx.sz."""
    return LinearOperator.on(QUBIT, _CORRECTIONS[BellKind(kind)])


def teleport(input: QubitState, kind: BellKind) -> tuple:
    """Run the protocol for one outcome; returns ``(probability, fidelity)``."""
    outcome = measure_bell(total_state(input), kind)
    if outcome.conditional_state is None:
        return outcome.probability, float("nan")
    corrected = apply(correction(kind), outcome.conditional_state)
    return outcome.probability, fidelity(input.vector(), corrected)


def bell_completeness() -> LinearOperator:
    """Sum of the four Bell projectors on the two-qubit space."""
    total = projector(bell_state(BellKind.PhiPlus))
    for kind in list(BellKind)[1:]:
        total = total + projector(bell_state(kind))
    return total



def expected_conditional(kind: BellKind, alpha: complex, beta: complex) -> np.ndarray:
    """Closed-form particle-2 state after each outcome, as ``(amp on |0>, amp on |1>)``.

    Equal to :func:`measure_bell`'s conditional state up to a global phase.
    """
    table = {
        BellKind.PhiPlus: (alpha, beta),
        BellKind.PhiMinus: (alpha, -beta),
        BellKind.PsiPlus: (beta, alpha),
        BellKind.PsiMinus: (-beta, alpha),
    }
    return np.array(table[BellKind(kind)], dtype=complex)
