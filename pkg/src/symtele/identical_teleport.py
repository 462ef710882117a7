"""Teleportation of a photon polarization among three identical photons.

Photons travel along three momentum directions. The unknown polarization
sits on direction 3, the EPR pair occupies directions 1 and 2, and the Bell
measurement acts on the two-photon symmetric space over the four modes of
directions 1 and 3. Which photon is "measured" is meaningless for bosons, so
the partial trace over the measured pair is realized as a two-photon
contraction: the Bell state's pair-annihilation operator removes two photons
from the three-photon state and leaves a one-photon state.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import distinguishable
from .distinguishable import BellKind, QubitState
from .symmetric_space import (
    OMEGA,
    ModeLabel,
    OccupationState,
    annihilate,
    create,
    modes,
    occupation_basis,
    space_modes,
    sym_dimension,
    tensor_basis,
    to_first_quantized,
    to_occupation,
)
from .tensor_core import (
    ATOL,
    NotNormalizedError,
    StateVector,
    gram_matrix,
    identity,
    normalize,
    projector,
    rank,
)

#: Modes entering the Bell measurement (momentum directions 1 and 3).
BELL_MODES = modes("1H", "1V", "3H", "3V")

H2, V2 = ModeLabel(2, "H"), ModeLabel(2, "V")
_S = 1 / math.sqrt(2)

# Bell pairs as (first-photon mode, second-photon mode) occupations with sign.
_SYM_BELL_TERMS = {
    BellKind.PhiPlus: ((("1H", "3H"), 1), (("1V", "3V"), 1)),
    BellKind.PhiMinus: ((("1H", "3H"), 1), (("1V", "3V"), -1)),
    BellKind.PsiPlus: ((("1H", "3V"), 1), (("1V", "3H"), 1)),
    BellKind.PsiMinus: ((("1H", "3V"), 1), (("1V", "3H"), -1)),
}


@dataclass(frozen=True)
class PolarizationState:
    """``alpha|kH> + beta|kV>`` for one photon on momentum direction ``k``."""

    alpha: complex
    beta: complex
    momentum: int = 3

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        if self.momentum not in (1, 2, 3):
            raise ValueError(f"momentum index must be 1, 2 or 3, got {self.momentum!r}")
        weight = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(weight - 1.0) > ATOL:
            raise NotNormalizedError(f"|alpha|^2 + |beta|^2 = {weight!r}, expected 1")

    @classmethod
    def normalized(cls, alpha: complex, beta: complex, momentum: int = 3):
        q = QubitState.normalized(alpha, beta)
        return cls(q.alpha, q.beta, momentum)

    def qubit(self) -> QubitState:
        return QubitState(self.alpha, self.beta)

    def vector(self) -> StateVector:
        """One-photon occupation vector over all six modes."""
        basis = occupation_basis(OMEGA, 1)
        return StateVector.from_dict(
            basis,
            {
                OccupationState.of(ModeLabel(self.momentum, "H")): self.alpha,
                OccupationState.of(ModeLabel(self.momentum, "V")): self.beta,
            },
        )


@dataclass(frozen=True, eq=False)
class SymBellState:
    kind: BellKind
    vector: StateVector
    pair: tuple = (1, 3)


@dataclass(frozen=True, eq=False)
class SymMeasurementOutcome:
    kind: BellKind
    probability: float
    # None when the outcome has zero probability
    conditional_state: Optional[StateVector]
    corrected_state: Optional[StateVector]
    fidelity: float

    def conditional_pair(self) -> np.ndarray:
        """``(amp on 2H, amp on 2V)`` of the conditional state."""
        return polarization_pair(self.conditional_state)

    def corrected_pair(self) -> np.ndarray:
        return polarization_pair(self.corrected_state)


def polarization_pair(state: StateVector, momentum: int = 2) -> np.ndarray:
    """H and V amplitudes of a one-photon state on one momentum direction."""
    return np.array(
        [
            state.amplitude(OccupationState.of(ModeLabel(momentum, "H"))),
            state.amplitude(OccupationState.of(ModeLabel(momentum, "V"))),
        ]
    )


def leakage(state: StateVector, momentum: int = 2) -> float:
    """Largest amplitude of a one-photon state outside direction ``momentum``."""
    return max(
        (abs(a) for occ, a in state.items() if occ.modes[0].momentum != momentum),
        default=0.0,
    )


def epr_state() -> StateVector:
    """Polarization-entangled pair on directions 1 and 2: ``(|1H,2H> + |1V,2V>)/sqrt(2)``."""
    basis = occupation_basis(OMEGA, 2)
    return StateVector.from_dict(
        basis,
        {OccupationState.of("1H", "2H"): _S, OccupationState.of("1V", "2V"): _S},
    )


def total_state(input: PolarizationState) -> StateVector:
    """Three-photon state: the input photon added to the EPR pair by a creation operator."""
    if input.momentum != 3:
        raise ValueError("the photon to teleport must travel along direction 3")
    pair = epr_state()
    out = input.alpha * create(ModeLabel(3, "H"), pair) + input.beta * create(
        ModeLabel(3, "V"), pair
    )
    return normalize(out)


def sym_bell(kind: BellKind) -> SymBellState:
    """Symmetric two-photon Bell analog over directions 1 and 3."""
    kind = BellKind(kind)
    basis = occupation_basis(BELL_MODES, 2)
    vec = StateVector.from_dict(
        basis, {OccupationState.of(*pair): sign * _S for pair, sign in _SYM_BELL_TERMS[kind]}
    )
    return SymBellState(kind, vec)


def bell_decomposition() -> tuple:
    """Bell projectors and the complement projector on two-photon states of the Bell modes.

    Returns ``(projectors, complement)`` with ``projectors`` keyed by kind and
    ``complement = I - sum(projectors)``.
    """
    projectors = {kind: projector(sym_bell(kind).vector) for kind in BellKind}
    basis = occupation_basis(BELL_MODES, 2)
    complement = identity(basis)
    for p in projectors.values():
        complement = complement - p
    return projectors, complement


def bell_complement_rank() -> int:
    """Rank of the part of the two-photon identity orthogonal to the four Bell states."""
    _, complement = bell_decomposition()
    return rank(complement.matrix)


def pair_contraction(pair: StateVector, state: StateVector) -> StateVector:
    """Remove two photons from ``state`` along a two-photon state ``pair``.

    Applies ``sum_occ conj(c_occ) a_J a_K / sqrt(prod n!)`` for each pair
    component ``c_occ |J K>``. For ``n`` photons this equals
    ``sqrt(n(n-1)/2)`` times the slot-wise partial inner product in the
    first-quantized picture.
    """
    total_modes = space_modes(state.basis)
    if not set(space_modes(pair.basis)) <= set(total_modes):
        raise ValueError("pair modes are not part of the state's mode set")
    n = state.basis.labels[0].total
    out = StateVector.zeros(occupation_basis(total_modes, n - 2))
    for occ, c in pair.items():
        reduced = state
        for mode in occ.slots():
            reduced = annihilate(mode, reduced)
        norm = math.sqrt(math.prod(math.factorial(k) for _, k in occ.counts))
        out = out + (np.conj(c) / norm) * reduced
    return out


def _outcome_weight(total: StateVector, pair: StateVector) -> float:
    return pair_contraction(pair, total).norm() ** 2


def measured_pair_weight(total: StateVector) -> float:
    """Expected number of photon pairs found inside the Bell modes."""
    basis = occupation_basis(BELL_MODES, 2)
    return sum(_outcome_weight(total, StateVector.basis_state(basis, occ)) for occ in basis)


def complement_weight(total: StateVector) -> float:
    """Weight of the measurement channel orthogonal to all four Bell states."""
    bell = sum(_outcome_weight(total, sym_bell(k).vector) for k in BellKind)
    return measured_pair_weight(total) - bell


def correct(kind: BellKind, conditional: StateVector) -> StateVector:
    """Apply the outcome's Pauli correction to the direction-2 polarization amplitudes."""
    pair = polarization_pair(conditional)
    fixed = distinguishable.correction(kind).matrix @ pair
    return StateVector.from_dict(
        conditional.basis,
        {OccupationState.of(H2): fixed[0], OccupationState.of(V2): fixed[1]},
    )


def polarization_fidelity(input: PolarizationState, state: StateVector) -> float:
    """``|<(alpha, beta)|(aH, aV)>|^2`` with direction 2 read as the input's direction."""
    pair = polarization_pair(state)
    return float(abs(np.vdot([input.alpha, input.beta], pair)) ** 2)


def measure_sym_bell(
    total: StateVector, kind: BellKind, input: Optional[PolarizationState] = None
) -> SymMeasurementOutcome:
    """Probability and post-measurement photon for one symmetric Bell outcome.

    Probabilities are normalized by the pair weight inside the Bell modes, so
    the four Bell outcomes and the complement channel add up to one. The
    fidelity is filled in only when ``input`` is given.
    """
    if not total.is_normalized():
        raise NotNormalizedError("measurement needs a normalized total state")
    kind = BellKind(kind)
    denominator = measured_pair_weight(total)
    if denominator <= ATOL:
        raise ValueError("no photon pair reaches the Bell measurement modes")
    remainder = pair_contraction(sym_bell(kind).vector, total)
    probability = remainder.norm() ** 2 / denominator
    if probability <= ATOL:
        return SymMeasurementOutcome(kind, float(probability), None, None, float("nan"))
    conditional = normalize(remainder)
    corrected = correct(kind, conditional)
    fid = polarization_fidelity(input, corrected) if input is not None else float("nan")
    return SymMeasurementOutcome(kind, float(probability), conditional, corrected, fid)


def teleport_identical(input: PolarizationState, kind: BellKind) -> SymMeasurementOutcome:
    return measure_sym_bell(total_state(input), kind, input)


# -- first-quantized cross-checks ---------------------------------------------


def _product(space, *factors) -> np.ndarray:
    """Tensor product of one-slot amplitude dicts ``{mode_name: amp}`` as a dense array."""
    index = {str(m): i for i, m in enumerate(space)}
    vecs = []
    for factor in factors:
        v = np.zeros(len(space), dtype=complex)
        for name, amp in factor.items():
            v[index[name]] += amp
        vecs.append(v)
    out = vecs[0]
    for v in vecs[1:]:
        out = np.kron(out, v)
    return out


def _slot_permutation_sum(arr: np.ndarray, n: int, m: int) -> np.ndarray:
    cube = arr.reshape((m,) * n)
    return sum(cube.transpose(p) for p in itertools.permutations(range(n))).reshape(-1)


def total_state_permutation_sum(input: PolarizationState) -> StateVector:
    """Three-slot tensor form of ``(1/(2 sqrt 3)) sum_P3 |input> (x) |EPR>``.

    The EPR factor is itself written as ``(1/2) sum_P2`` over its two slots.
    Every one of the 3! slot permutations is summed explicitly.
    """
    m = len(OMEGA)
    epr = _product(OMEGA, {"1H": 1}, {"2H": 1}) + _product(OMEGA, {"1V": 1}, {"2V": 1})
    epr = 0.5 * _slot_permutation_sum(epr, 2, m)
    photon = _product(OMEGA, {f"{input.momentum}H": input.alpha, f"{input.momentum}V": input.beta})
    summed = _slot_permutation_sum(np.kron(photon, epr), 3, m) / (2 * math.sqrt(3))
    return StateVector(tensor_basis(OMEGA, 3), summed)


def effective_total_prefactor(input: PolarizationState) -> float:
    """Prefactor that normalizes ``sum_P3 |input> (x) |EPR>``; compare with ``1/(2 sqrt 3)``."""
    raw = total_state_permutation_sum(input).norm() * 2 * math.sqrt(3)
    return 1.0 / raw


# Regrouped total state: companion photon on slot 1 times a pair on slots 2, 3.
_REGROUPED = {
    "corrected": (
        ({"2H": 1, "2V": 1}, ((("1H", "3H"), 1), (("1V", "3V"), 1))),
        ({"2H": 1, "2V": -1}, ((("1H", "3H"), 1), (("1V", "3V"), -1))),
        ({"2V": 1, "2H": 1}, ((("1H", "3V"), 1), (("1V", "3H"), 1))),
        ({"2V": -1, "2H": 1}, ((("1H", "3V"), 1), (("1V", "3H"), -1))),
    ),
    "verbatim": (
        ({"2H": 1, "2V": 1}, ((("1H", "3H"), 1), (("1V", "3V"), 1))),
        ({"2H": 1, "2V": -1}, ((("1H", "3H"), 1), (("1V", "3V"), -1))),
        ({"2V": 1, "2H": 1}, ((("1H", "3V"), 1), (("3V", "1H"), 1))),
        ({"2V": 1, "2H": -1}, ((("1H", "3V"), 1), (("3V", "1H"), -1))),
    ),
}
_REGROUPED_PREFACTOR = {"corrected": 1 / (4 * math.sqrt(3)), "verbatim": 1 / (2 * math.sqrt(3))}


def regrouped_state(input: PolarizationState, verbatim: bool = False) -> StateVector:
    """Three-slot tensor vector of the regrouped total state, summed over all 3! slot orders.

    Each companion polarization on direction 2 multiplies alpha on its first
    listed mode and beta on its second. The ``verbatim`` variant keeps the
    inconsistent pair ``1H (x) 3V +- 3V (x) 1H`` in the last two terms, the
    companion ``alpha|2V> - beta|2H>`` in the last term and the prefactor
    ``1/(2 sqrt 3)``. The default variant uses ``1H (x) 3V +- 1V (x) 3H``,
    the companion ``beta|2H> - alpha|2V>`` and the prefactor
    ``1/(4 sqrt 3)`` that makes the sum equal the normalized total state.
    """
    variant = "verbatim" if verbatim else "corrected"
    m = len(OMEGA)
    acc = np.zeros(m**3, dtype=complex)
    for companion, pair_terms in _REGROUPED[variant]:
        (first, s1), (second, s2) = companion.items()
        photon = {first: s1 * input.alpha, second: s2 * input.beta}
        for (a, b), sign in pair_terms:
            acc += sign * _product(OMEGA, photon, {a: 1}, {b: 1})
    acc = _slot_permutation_sum(acc, 3, m) * _REGROUPED_PREFACTOR[variant]
    return StateVector(tensor_basis(OMEGA, 3), acc)


def regrouping_identity_check(input: PolarizationState, verbatim: bool = False) -> float:
    """Norm of (regrouped form - total state), both in the three-slot tensor basis."""
    reference = to_first_quantized(total_state(input))
    return (regrouped_state(input, verbatim) - reference).norm()


def symmetrized_total_from_tensor(input: PolarizationState) -> StateVector:
    """Brute-force total state: expand every permutation term, then project to occupations."""
    return to_occupation(total_state_permutation_sum(input), OMEGA)


# -- identical photons without spatial modes ----------------------------------


def polarization_only_candidates() -> list:
    """Symmetric parts of the four Bell states when both photons share one direction.

    The distinguishable Bell vectors over ``{0, 1} -> {1H, 1V}`` are projected
    onto the two-photon symmetric space; the singlet-like one vanishes.
    """
    space = modes("1H", "1V")
    tensor = tensor_basis(space, 2)
    out = []
    for kind in BellKind:
        vec = StateVector(tensor, distinguishable.bell_state(kind).amplitudes)
        out.append(to_occupation(vec, space))
    return out


def impossibility_demo() -> int:
    """Dimension of the two-photon space without momentum labels (polarization only).

    Raises ``RuntimeError`` if the four candidate Bell vectors there were
    linearly independent, which would contradict the dimension count.
    """
    dim = occupation_basis(modes("1H", "1V"), 2).size
    if dim != sym_dimension(2, 2):
        raise RuntimeError("occupation basis disagrees with the dimension formula")
    gram_rank = rank(gram_matrix(polarization_only_candidates()))
    if gram_rank > dim or gram_rank >= 4:
        raise RuntimeError(f"four independent Bell analogs found (rank {gram_rank})")
    return dim


def candidate_gram_rank() -> int:
    return rank(gram_matrix(polarization_only_candidates()))
