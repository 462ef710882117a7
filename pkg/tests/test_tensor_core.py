import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from symtele.tensor_core import (
    ATOL,
    BasisMismatchError,
    LabeledBasis,
    LinearOperator,
    NotNormalizedError,
    NullStateError,
    StateVector,
    apply,
    identity,
    inner_product,
    normalize,
    phase_distance,
    product_basis,
    projector,
    tensor_product,
)

Q = LabeledBasis((0, 1))
S = 1 / np.sqrt(2)


def ket(*amps, basis=Q):
    return StateVector(basis, amps)


finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def vectors(size):
    return st.tuples(arrays(float, size, elements=finite), arrays(float, size, elements=finite)).map(
        lambda ri: ri[0] + 1j * ri[1]
    )


def test_basis_rejects_duplicates():
    with pytest.raises(ValueError):
        LabeledBasis(("a", "a"))


def test_basis_index_is_bijection():
    b = LabeledBasis(("x", "y", "z"))
    assert [b.index(label) for label in b] == [0, 1, 2]
    with pytest.raises(KeyError):
        b.index("w")


def test_amplitude_count_must_match_basis():
    with pytest.raises(ValueError):
        StateVector(Q, [1, 0, 0])


def test_states_are_immutable():
    v = ket(1, 0)
    with pytest.raises(ValueError):
        v.amplitudes[0] = 2


class TestTensorProduct:
    def test_identity_case(self):
        v = tensor_product(ket(1, 0), ket(1, 0))
        assert v.amplitude((0, 0)) == 1
        assert v.norm() == 1

    def test_bilinearity(self):
        a, b = 0.6, 0.8j
        v = tensor_product(ket(a, b), ket(0, 1))
        assert v.amplitude((0, 1)) == a
        assert v.amplitude((1, 1)) == b
        assert v.amplitude((0, 0)) == v.amplitude((1, 0)) == 0

    def test_uniform_plus_plus(self):
        plus = ket(S, S)
        v = tensor_product(plus, plus)
        # brute-force expansion
        expected = {(i, j): plus.amplitudes[i] * plus.amplitudes[j] for i in (0, 1) for j in (0, 1)}
        for label, amp in expected.items():
            assert abs(v.amplitude(label) - amp) <= ATOL
            assert abs(amp - 0.5) <= ATOL

    def test_labels_flatten_into_slots(self):
        v = tensor_product(tensor_product(ket(1, 0), ket(0, 1)), ket(0, 1))
        assert v.basis.labels[0] == (0, 0, 0)
        assert v.amplitude((0, 1, 1)) == 1

    @settings(max_examples=100)
    @given(vectors(3), vectors(4))
    def test_norm_multiplies(self, a, b):
        va = StateVector(LabeledBasis(range(3)), a)
        vb = StateVector(LabeledBasis("abcd"), b)
        assert abs(tensor_product(va, vb).norm() - va.norm() * vb.norm()) <= 1e-12 * max(1, va.norm() * vb.norm())


class TestInnerProduct:
    def test_basis_states(self):
        assert inner_product(ket(1, 0), ket(1, 0)) == 1
        assert inner_product(ket(1, 0), ket(0, 1)) == 0

    def test_bell_phi_plus_minus_orthogonal(self):
        b2 = product_basis(Q, Q)
        phi_p = StateVector(b2, [S, 0, 0, S])
        phi_m = StateVector(b2, [S, 0, 0, -S])
        assert abs(inner_product(phi_p, phi_m)) <= ATOL

    def test_conjugate_linear_in_first_argument(self):
        a, b = ket(1j, 0), ket(1, 0)
        assert inner_product(a, b) == -1j

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatchError):
            inner_product(ket(1, 0), StateVector(LabeledBasis(("a", "b")), [1, 0]))

    @given(vectors(5), vectors(5))
    def test_hermitian_symmetry(self, a, b):
        basis = LabeledBasis(range(5))
        va, vb = StateVector(basis, a), StateVector(basis, b)
        scale = max(1.0, va.norm() * vb.norm())
        assert abs(inner_product(va, vb) - np.conj(inner_product(vb, va))) <= 1e-12 * scale
        assert abs(inner_product(va, va).imag) <= 1e-12 * scale
        assert inner_product(va, va).real >= 0


class TestNormalize:
    def test_rescales(self):
        assert normalize(ket(2, 0)).allclose(ket(1, 0))
        assert normalize(ket(1, 1)).allclose(ket(S, S))

    def test_null_state(self):
        with pytest.raises(NullStateError):
            normalize(ket(0, 0))

    @given(vectors(4).filter(lambda v: np.linalg.norm(v) > 1e-6))
    def test_unit_and_parallel(self, a):
        v = StateVector(LabeledBasis(range(4)), a)
        n = normalize(v)
        assert abs(n.norm() - 1) <= ATOL
        assert phase_distance(n, v / v.norm()) <= ATOL


class TestProjector:
    def test_basis_state(self):
        assert np.array_equal(projector(ket(1, 0)).matrix, np.diag([1, 0]))

    def test_plus_state(self):
        assert np.allclose(projector(ket(S, S)).matrix, 0.5, atol=ATOL, rtol=0)

    def test_bell_projector_rank_one_trace_one(self):
        phi = StateVector(product_basis(Q, Q), [S, 0, 0, S])
        p = projector(phi)
        eig = np.sort(np.linalg.eigvalsh(p.matrix))
        assert np.allclose(eig, [0, 0, 0, 1], atol=ATOL, rtol=0)
        assert abs(p.trace() - 1) <= ATOL
        assert p.is_projector()

    def test_rejects_unnormalized(self):
        with pytest.raises(NotNormalizedError):
            projector(ket(1, 1))

    @given(vectors(6).filter(lambda v: np.linalg.norm(v) > 1e-3))
    def test_idempotent_and_self_adjoint(self, a):
        p = projector(normalize(StateVector(LabeledBasis(range(6)), a)))
        assert np.max(np.abs(p.matrix @ p.matrix - p.matrix)) <= ATOL
        assert np.max(np.abs(p.matrix - p.matrix.conj().T)) <= ATOL


class TestApply:
    alpha, beta = 0.6, 0.8j

    def test_identity(self):
        v = ket(self.alpha, self.beta)
        assert apply(identity(Q), v).allclose(v)

    def test_projector_action(self):
        v = ket(self.alpha, self.beta)
        assert apply(projector(ket(1, 0)), v).allclose(ket(self.alpha, 0))

    def test_sigma_x(self):
        sx = LinearOperator.on(Q, [[0, 1], [1, 0]])
        assert apply(sx, ket(self.alpha, self.beta)).allclose(ket(self.beta, self.alpha))

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatchError):
            apply(identity(LabeledBasis("ab")), ket(1, 0))

    def test_shape_checked(self):
        with pytest.raises(ValueError):
            LinearOperator.on(Q, np.eye(3))

    @given(arrays(complex, (4, 4), elements=st.complex_numbers(max_magnitude=5, allow_nan=False)),
           vectors(4), vectors(4), st.complex_numbers(max_magnitude=5, allow_nan=False))
    def test_linear(self, m, x, y, lam):
        basis = LabeledBasis(range(4))
        op = LinearOperator.on(basis, m)
        vx, vy = StateVector(basis, x), StateVector(basis, y)
        lhs = apply(op, vx + lam * vy)
        rhs = apply(op, vx) + lam * apply(op, vy)
        scale = max(1.0, np.abs(m).max() * (np.abs(x).max() + abs(lam) * np.abs(y).max()))
        assert np.max(np.abs(lhs.amplitudes - rhs.amplitudes)) <= 1e-12 * scale


def test_numpy_scalar_times_state():
    v = np.float64(2.0) * ket(1, 0)
    assert isinstance(v, StateVector)
    assert v.amplitude(0) == 2
