"""Dense complex linear algebra over explicitly labeled finite bases.

States and operators carry the basis they are expressed in, so a vector in a
symmetric (occupation) space can never be silently combined with one living
in a tensor-product space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Sequence

import numpy as np

#: Absolute tolerance for every comparison on unit-scale quantities.
ATOL = 1e-12


class BasisMismatchError(ValueError):
    """Two objects that must share a basis do not."""


class NullStateError(ValueError):
    """A (numerically) zero vector where a nonzero one is required."""


class NotNormalizedError(ValueError):
    """A state that must have unit norm does not."""


@dataclass(frozen=True, eq=False)
class LabeledBasis:
    """Ordered collection of distinct, hashable basis labels."""

    labels: tuple
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise ValueError("a basis needs at least one label")
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("basis labels must be unique")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not in basis") from None

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, LabeledBasis) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)


def _as_slots(label) -> tuple:
    return label if isinstance(label, tuple) else (label,)


def product_basis(a: LabeledBasis, b: LabeledBasis) -> LabeledBasis:
    """Pair-product basis, ``a`` index major. Tuple labels are flattened into slots."""
    return LabeledBasis(tuple(_as_slots(x) + _as_slots(y) for x in a for y in b))


@dataclass(frozen=True, eq=False)
class StateVector:
    """Complex amplitude vector over a labeled basis (immutable)."""

    basis: LabeledBasis
    amplitudes: np.ndarray

    # keep numpy scalars on the left of ``*`` from broadcasting into object arrays
    __array_ufunc__ = None

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != self.basis.size:
            raise ValueError(
                f"{amps.shape[0]} amplitudes for a basis of size {self.basis.size}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis_state(cls, basis: LabeledBasis, label) -> "StateVector":
        amps = np.zeros(basis.size, dtype=complex)
        amps[basis.index(label)] = 1.0
        return cls(basis, amps)

    @classmethod
    def from_dict(cls, basis: LabeledBasis, coefficients: dict) -> "StateVector":
        amps = np.zeros(basis.size, dtype=complex)
        for label, c in coefficients.items():
            amps[basis.index(label)] += c
        return cls(basis, amps)

    @classmethod
    def zeros(cls, basis: LabeledBasis) -> "StateVector":
        return cls(basis, np.zeros(basis.size, dtype=complex))

    def amplitude(self, label) -> complex:
        return complex(self.amplitudes[self.basis.index(label)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, atol: float = ATOL) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= atol

    def items(self, atol: float = 0.0):
        """``(label, amplitude)`` pairs with ``|amplitude| > atol``."""
        return [
            (label, complex(a))
            for label, a in zip(self.basis.labels, self.amplitudes)
            if abs(a) > atol
        ]

    def _check(self, other: "StateVector"):
        if not isinstance(other, StateVector):
            return NotImplemented
        if other.basis != self.basis:
            raise BasisMismatchError("states live in different bases")
        return None

    def __add__(self, other: "StateVector") -> "StateVector":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return StateVector(self.basis, self.amplitudes + other.amplitudes)

    def __sub__(self, other: "StateVector") -> "StateVector":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return StateVector(self.basis, self.amplitudes - other.amplitudes)

    def __mul__(self, scalar: complex) -> "StateVector":
        if not np.isscalar(scalar):
            return NotImplemented
        return StateVector(self.basis, self.amplitudes * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "StateVector":
        return StateVector(self.basis, -self.amplitudes)

    def __truediv__(self, scalar: complex) -> "StateVector":
        return StateVector(self.basis, self.amplitudes / scalar)

    def allclose(self, other: "StateVector", atol: float = ATOL) -> bool:
        self._check(other)
        return bool(np.max(np.abs(self.amplitudes - other.amplitudes)) <= atol)

    def __repr__(self) -> str:
        terms = " + ".join(f"({a:.6g})|{label}>" for label, a in self.items(1e-15))
        return f"StateVector({terms or '0'})"


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """Dense matrix from ``basis_in`` to ``basis_out`` (rows index the output)."""

    basis_in: LabeledBasis
    basis_out: LabeledBasis
    matrix: np.ndarray

    __array_ufunc__ = None

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (self.basis_out.size, self.basis_in.size):
            raise ValueError(
                f"matrix shape {m.shape} does not match bases "
                f"({self.basis_out.size}, {self.basis_in.size})"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def on(cls, basis: LabeledBasis, matrix) -> "LinearOperator":
        return cls(basis, basis, matrix)

    @property
    def dagger(self) -> "LinearOperator":
        return LinearOperator(self.basis_out, self.basis_in, self.matrix.conj().T)

    def __matmul__(self, other):
        if isinstance(other, LinearOperator):
            if other.basis_out != self.basis_in:
                raise BasisMismatchError("operator bases do not compose")
            return LinearOperator(other.basis_in, self.basis_out, self.matrix @ other.matrix)
        if isinstance(other, StateVector):
            return apply(self, other)
        return NotImplemented

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        if not isinstance(other, LinearOperator):
            return NotImplemented
        if other.basis_in != self.basis_in or other.basis_out != self.basis_out:
            raise BasisMismatchError("operators act between different bases")
        return LinearOperator(self.basis_in, self.basis_out, self.matrix + other.matrix)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> "LinearOperator":
        if not np.isscalar(scalar):
            return NotImplemented
        return LinearOperator(self.basis_in, self.basis_out, self.matrix * scalar)

    __rmul__ = __mul__

    def trace(self) -> complex:
        if self.basis_in != self.basis_out:
            raise BasisMismatchError("trace needs a square operator on one basis")
        return complex(np.trace(self.matrix))

    def is_projector(self, atol: float = ATOL) -> bool:
        m = self.matrix
        if self.basis_in != self.basis_out:
            return False
        return bool(
            np.max(np.abs(m @ m - m)) <= atol and np.max(np.abs(m - m.conj().T)) <= atol
        )

    def is_unitary(self, atol: float = ATOL) -> bool:
        m = self.matrix
        if m.shape[0] != m.shape[1]:
            return False
        return bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) <= atol)


def identity(basis: LabeledBasis) -> LinearOperator:
    return LinearOperator.on(basis, np.eye(basis.size, dtype=complex))


def tensor_product(a: StateVector, b: StateVector) -> StateVector:
    """``a ⊗ b`` over :func:`product_basis`; amplitude of ``(i, j)`` is ``a[i]*b[j]``."""
    return StateVector(product_basis(a.basis, b.basis), np.kron(a.amplitudes, b.amplitudes))


def operator_tensor(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return LinearOperator(
        product_basis(a.basis_in, b.basis_in),
        product_basis(a.basis_out, b.basis_out),
        np.kron(a.matrix, b.matrix),
    )


def inner_product(a: StateVector, b: StateVector) -> complex:
    """``<a|b>``, conjugate-linear in ``a``."""
    if a.basis != b.basis:
        raise BasisMismatchError("inner product of states in different bases")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def normalize(v: StateVector) -> StateVector:
    n = v.norm()
    if n <= 1e-14:
        raise NullStateError("cannot normalize a null state")
    return v / n


def projector(v: StateVector) -> LinearOperator:
    """Rank-one projector ``|v><v|``; ``v`` must be normalized."""
    if not v.is_normalized():
        raise NotNormalizedError(f"projector needs a unit vector (norm {v.norm():.3e})")
    return LinearOperator.on(v.basis, np.outer(v.amplitudes, v.amplitudes.conj()))


def apply(op: LinearOperator, v: StateVector) -> StateVector:
    if op.basis_in != v.basis:
        raise BasisMismatchError("operator input basis differs from the state's basis")
    return StateVector(op.basis_out, op.matrix @ v.amplitudes)


def fidelity(a: StateVector, b: StateVector) -> float:
    """``|<a|b>|**2``; global phase drops out here and only here."""
    return abs(inner_product(a, b)) ** 2


def phase_mismatch(a, b) -> float:
    """Largest entry of ``a - e^{it} b`` with ``t`` the phase of ``<b|a>``; 0 iff equal up to phase."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    overlap = np.vdot(b, a)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.max(np.abs(a - phase * b)))


def phase_distance(a: StateVector, b: StateVector) -> float:
    """Distance between two states once the global phase is quotiented out."""
    if a.basis != b.basis:
        raise BasisMismatchError("states live in different bases")
    return phase_mismatch(a.amplitudes, b.amplitudes)


def gram_matrix(states: Sequence[StateVector]) -> np.ndarray:
    """Matrix of pairwise inner products ``<s_i|s_j>``."""
    return np.array([[inner_product(s, t) for t in states] for s in states])


def rank(matrix: Any, atol: float = 1e-9) -> int:
    return int(np.linalg.matrix_rank(np.asarray(matrix), tol=atol))


def span_projector(states: Iterable[StateVector]) -> LinearOperator:
    """Sum of ``|s><s|`` over an orthonormal family."""
    states = list(states)
    total = projector(states[0])
    for s in states[1:]:
        total = total + projector(s)
    return total
