"""Bosonic state spaces over photon modes (momentum direction x polarization).

States of ``n`` identical photons are stored in the occupation-number basis.
The permutation-sum (first-quantized) picture, where each photon occupies a
numbered tensor slot, is available as a conversion layer and is what the
tests use as an independent oracle.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .tensor_core import LabeledBasis, StateVector

#: Largest particle number accepted by the basis-building functions.
MAX_PARTICLES = 3

POLARIZATIONS = ("H", "V")


@dataclass(frozen=True, order=True)
class ModeLabel:
    """Single-photon mode: momentum direction ``k1..k3`` and polarization H/V."""

    momentum: int
    polarization: str

    def __post_init__(self):
        if self.momentum not in (1, 2, 3):
            raise ValueError(f"momentum index must be 1, 2 or 3, got {self.momentum!r}")
        if self.polarization not in POLARIZATIONS:
            raise ValueError(f"polarization must be 'H' or 'V', got {self.polarization!r}")

    @classmethod
    def parse(cls, text: str) -> "ModeLabel":
        text = text.strip()
        return cls(int(text[:-1]), text[-1].upper())

    def __str__(self) -> str:
        return f"{self.momentum}{self.polarization}"

    def __repr__(self) -> str:
        return f"ModeLabel({str(self)!r})"


def modes(*names: str) -> tuple:
    """``modes("1H", "3V")`` -> sorted tuple of :class:`ModeLabel`."""
    return mode_set(ModeLabel.parse(n) for n in names)


def mode_set(labels: Iterable[ModeLabel]) -> tuple:
    labels = tuple(labels)
    if not labels:
        raise ValueError("a mode set cannot be empty")
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate modes in mode set")
    return tuple(sorted(labels))


#: All six single-photon modes: 1H < 1V < 2H < 2V < 3H < 3V.
OMEGA = tuple(ModeLabel(k, p) for k in (1, 2, 3) for p in POLARIZATIONS)


@dataclass(frozen=True, order=True)
class OccupationState:
    """Photon counts per mode; only occupied modes are stored, in mode order."""

    counts: tuple  # ((ModeLabel, count), ...)

    def __post_init__(self):
        merged = Counter()
        for mode, count in self.counts:
            if not isinstance(mode, ModeLabel):
                mode = ModeLabel.parse(mode)
            merged[mode] += int(count)
        if any(c < 0 for c in merged.values()):
            raise ValueError("occupation numbers are non-negative")
        canonical = tuple(sorted((m, c) for m, c in merged.items() if c > 0))
        if not canonical:
            raise ValueError("an occupation state holds at least one photon")
        object.__setattr__(self, "counts", canonical)

    @classmethod
    def of(cls, *slots) -> "OccupationState":
        """Occupation of a product configuration, e.g. ``of("1H", "2H")``."""
        return cls(tuple((s, 1) for s in slots))

    @classmethod
    def parse(cls, text: str) -> "OccupationState":
        pairs = []
        for item in text.split(","):
            mode, count = item.split(":")
            pairs.append((ModeLabel.parse(mode), int(count)))
        return cls(tuple(pairs))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def modes(self) -> tuple:
        return tuple(m for m, _ in self.counts)

    def count(self, mode: ModeLabel) -> int:
        return dict(self.counts).get(mode, 0)

    def slots(self) -> tuple:
        """Sorted product configuration with these counts."""
        return tuple(m for m, c in self.counts for _ in range(c))

    def __str__(self) -> str:
        return ",".join(f"{m}:{c}" for m, c in self.counts)

    def __repr__(self) -> str:
        return f"OccupationState({str(self)!r})"


def _check_n(n: int):
    if n < 1:
        raise ValueError("particle number must be positive")
    if n > MAX_PARTICLES:
        raise ValueError(f"particle number {n} exceeds the supported maximum {MAX_PARTICLES}")


def sym_dimension(mode_count: int, n: int) -> int:
    """Dimension of the symmetric n-fold tensor power of a ``mode_count``-dim space."""
    return math.comb(mode_count + n - 1, n)


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def occupation_basis(modes: Sequence[ModeLabel], n: int) -> LabeledBasis:
    """All n-photon occupation states over ``modes``, in colexicographic count order."""
    _check_n(n)
    return _occupation_basis(mode_set(modes), n)


@functools.lru_cache(maxsize=None)
def _occupation_basis(modes: tuple, n: int) -> LabeledBasis:
    vectors = sorted(_compositions(n, len(modes)), key=lambda v: v[::-1])
    return LabeledBasis(
        tuple(OccupationState(tuple(zip(modes, v))) for v in vectors)
    )


def tensor_basis(modes: Sequence[ModeLabel], n: int) -> LabeledBasis:
    """n-slot product basis (slot 1 major) used by the first-quantized picture."""
    _check_n(n)
    return _tensor_basis(mode_set(modes), n)


@functools.lru_cache(maxsize=None)
def _tensor_basis(modes: tuple, n: int) -> LabeledBasis:
    return LabeledBasis(tuple(itertools.product(modes, repeat=n)))


@functools.lru_cache(maxsize=256)
def space_modes(basis: LabeledBasis) -> tuple:
    """Modes spanned by an occupation basis, recovered from its labels."""
    return mode_set({m for occ in basis for m in occ.modes})


def _multiplicity(occ: OccupationState) -> int:
    return math.prod(math.factorial(c) for _, c in occ.counts)


def symmetrize(config: Sequence, space: Sequence[ModeLabel] = OMEGA) -> StateVector:
    """Normalized symmetric state of a product configuration, as an occupation vector.

    The result does not depend on the order of ``config``. Repeated modes are
    allowed; the state is always returned with unit norm.
    """
    occ = OccupationState.of(*config)
    basis = occupation_basis(space, occ.total)
    return StateVector.basis_state(basis, occ)


def permutation_sum(config: Sequence, space: Sequence[ModeLabel] = OMEGA) -> StateVector:
    """Literal ``(1/sqrt(n!)) * sum over all n! slot permutations`` of a product state.

    Each permutation contributes separately, so repeated modes add up and the
    result is not normalized in that case (its norm is ``sqrt(prod n_J!)``).
    """
    slots = tuple(m if isinstance(m, ModeLabel) else ModeLabel.parse(m) for m in config)
    n = len(slots)
    basis = tensor_basis(space, n)
    amps = np.zeros(basis.size, dtype=complex)
    for perm in itertools.permutations(slots):
        amps[basis.index(perm)] += 1.0
    return StateVector(basis, amps / math.sqrt(math.factorial(n)))


def first_quantized_expansion(
    occ: OccupationState, space: Sequence[ModeLabel] = OMEGA
) -> StateVector:
    """Unit vector in the n-slot tensor basis representing an occupation state.

    Every distinct arrangement of the photons over the slots carries amplitude
    ``sqrt(prod_J n_J! / n!)``.
    """
    n = occ.total
    basis = tensor_basis(space, n)
    amp = math.sqrt(_multiplicity(occ) / math.factorial(n))
    amps = np.zeros(basis.size, dtype=complex)
    for arrangement in set(itertools.permutations(occ.slots())):
        amps[basis.index(arrangement)] = amp
    return StateVector(basis, amps)


def to_first_quantized(state: StateVector) -> StateVector:
    """Expand an occupation-basis vector into the n-slot tensor basis."""
    space = space_modes(state.basis)
    n = state.basis.labels[0].total
    out = np.zeros(len(space) ** n, dtype=complex)
    for occ, amp in state.items():
        out += amp * first_quantized_expansion(occ, space).amplitudes
    return StateVector(tensor_basis(space, n), out)


def to_occupation(state: StateVector, space: Sequence[ModeLabel] = OMEGA) -> StateVector:
    """Project a tensor-basis vector onto the symmetric subspace, in occupation form.

    Components outside the symmetric subspace are discarded (not renormalized).
    """
    n = len(state.basis.labels[0])
    basis = occupation_basis(space, n)
    tensor = tensor_basis(space, n)
    if state.basis != tensor:
        raise ValueError("state is not over the n-slot tensor basis of this mode set")
    amps = [
        np.vdot(first_quantized_expansion(occ, space).amplitudes, state.amplitudes)
        for occ in basis
    ]
    return StateVector(basis, amps)


def swap_slots(state: StateVector, permutation: Sequence[int]) -> StateVector:
    """Relabel particles in a tensor-basis vector: new slot ``i`` takes old slot ``permutation[i]``."""
    n = len(permutation)
    m = round(state.basis.size ** (1 / n))
    arr = state.amplitudes.reshape((m,) * n).transpose(tuple(permutation))
    return StateVector(state.basis, arr.reshape(-1))


def embed(state: StateVector, target: Sequence[ModeLabel]) -> StateVector:
    """Carry an occupation vector over a mode subset into the space over ``target``."""
    source = space_modes(state.basis)
    target = mode_set(target)
    missing = set(source) - set(target)
    if missing:
        raise ValueError(f"modes {sorted(map(str, missing))} are not in the target mode set")
    n = state.basis.labels[0].total
    basis = occupation_basis(target, n)
    return StateVector.from_dict(basis, dict(state.items()))


def annihilate(mode: ModeLabel, state: StateVector) -> StateVector:
    """Bosonic ``a_mode``: ``|..n..> -> sqrt(n) |..n-1..>``; needs at least two photons."""
    space = space_modes(state.basis)
    n = state.basis.labels[0].total
    if n < 2:
        raise ValueError("annihilating the last photon would leave the vacuum sector")
    basis = occupation_basis(space, n - 1)
    out = {}
    for occ, amp in state.items():
        k = occ.count(mode)
        if k:
            reduced = OccupationState(occ.counts + ((mode, -1),))
            out[reduced] = out.get(reduced, 0) + math.sqrt(k) * amp
    return StateVector.from_dict(basis, out)


def create(mode: ModeLabel, state: StateVector) -> StateVector:
    """Bosonic ``a_mode^dagger``: ``|..n..> -> sqrt(n+1) |..n+1..>``."""
    space = space_modes(state.basis)
    if mode not in space:
        space = mode_set(space + (mode,))
    n = state.basis.labels[0].total
    basis = occupation_basis(space, n + 1)
    out = {}
    for occ, amp in state.items():
        k = occ.count(mode)
        raised = OccupationState(occ.counts + ((mode, 1),))
        out[raised] = out.get(raised, 0) + math.sqrt(k + 1) * amp
    return StateVector.from_dict(basis, out)
