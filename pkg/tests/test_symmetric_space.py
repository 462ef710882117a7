import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from symtele.symmetric_space import (
    OMEGA,
    ModeLabel,
    OccupationState,
    annihilate,
    create,
    embed,
    first_quantized_expansion,
    mode_set,
    modes,
    occupation_basis,
    permutation_sum,
    swap_slots,
    sym_dimension,
    symmetrize,
    tensor_basis,
    to_first_quantized,
    to_occupation,
)
from symtele.tensor_core import ATOL, StateVector, inner_product

S = 1 / math.sqrt(2)
mode_labels = st.sampled_from(OMEGA)


def occ(text):
    return OccupationState.parse(text)


class TestModes:
    def test_six_modes_in_order(self):
        assert [str(m) for m in OMEGA] == ["1H", "1V", "2H", "2V", "3H", "3V"]
        assert list(OMEGA) == sorted(OMEGA)

    @pytest.mark.parametrize("bad", [(0, "H"), (4, "V"), (1, "D")])
    def test_invalid_labels(self, bad):
        with pytest.raises(ValueError):
            ModeLabel(*bad)

    def test_mode_set_sorted_and_unique(self):
        assert mode_set([ModeLabel(3, "V"), ModeLabel(1, "H")]) == modes("1H", "3V")
        with pytest.raises(ValueError):
            mode_set([ModeLabel(1, "H")] * 2)
        with pytest.raises(ValueError):
            mode_set([])


class TestOccupationState:
    def test_serialization_round_trip(self):
        o = OccupationState.of("2H", "1H")
        assert str(o) == "1H:1,2H:1"
        assert OccupationState.parse(str(o)) == o

    def test_repeated_mode(self):
        o = OccupationState.of("1H", "1H", "3V")
        assert o.total == 3 and o.count(ModeLabel(1, "H")) == 2

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            OccupationState(((ModeLabel(1, "H"), -1),))


class TestDimension:
    @pytest.mark.parametrize("m, n, dim", [(2, 2, 3), (4, 2, 10), (6, 3, 56), (6, 2, 21), (6, 1, 6)])
    def test_values(self, m, n, dim):
        assert sym_dimension(m, n) == dim

    @pytest.mark.parametrize("m", range(1, 7))
    @pytest.mark.parametrize("n", range(1, 4))
    def test_formula_matches_multiset_count_and_basis(self, m, n):
        multisets = len(list(itertools.combinations_with_replacement(range(m), n)))
        assert sym_dimension(m, n) == multisets
        assert occupation_basis(OMEGA[:m], n).size == multisets


class TestOccupationBasis:
    def test_two_modes_two_photons_order(self):
        b = occupation_basis(modes("1H", "1V"), 2)
        assert [str(o) for o in b] == ["1H:2", "1H:1,1V:1", "1V:2"]

    def test_bell_modes(self):
        assert occupation_basis(modes("1H", "1V", "3H", "3V"), 2).size == 10

    def test_single_photon(self):
        assert occupation_basis(OMEGA, 1).size == 6

    def test_deterministic(self):
        assert occupation_basis(OMEGA, 3).labels == occupation_basis(tuple(reversed(OMEGA)), 3).labels

    def test_particle_cap(self):
        with pytest.raises(ValueError):
            occupation_basis(OMEGA, 4)
        with pytest.raises(ValueError):
            first_quantized_expansion(OccupationState.of("1H", "1H", "2H", "3V"))


class TestSymmetrize:
    def test_single_photon(self):
        v = symmetrize(["3H"])
        assert v.amplitude(occ("3H:1")) == 1 and v.norm() == 1

    def test_two_distinct_modes(self):
        v = symmetrize(["1H", "2H"])
        assert v.amplitude(occ("1H:1,2H:1")) == 1
        # literal (|1H,2H> + |2H,1H>)/sqrt(2) is that occupation state
        assert np.allclose(to_first_quantized(v).amplitudes, permutation_sum(["1H", "2H"]).amplitudes, atol=ATOL)

    def test_repeated_mode_renormalized(self):
        # oracle: expand (1/sqrt 2!) sum_P |1H>|1H> explicitly, then normalize
        tensor = tensor_basis(OMEGA, 2)
        raw = np.zeros(tensor.size)
        for perm in itertools.permutations([ModeLabel(1, "H")] * 2):
            raw[tensor.index(perm)] += 1 / math.sqrt(2)
        assert abs(np.linalg.norm(raw) - math.sqrt(2)) <= ATOL
        expected = raw / np.linalg.norm(raw)
        v = symmetrize(["1H", "1H"])
        assert abs(v.amplitude(occ("1H:2")) - 1) <= ATOL
        assert np.allclose(to_first_quantized(v).amplitudes, expected, atol=ATOL)

    @given(st.lists(mode_labels, min_size=1, max_size=3), st.randoms())
    def test_permutation_invariant(self, slots, rnd):
        shuffled = list(slots)
        rnd.shuffle(shuffled)
        assert np.array_equal(symmetrize(slots).amplitudes, symmetrize(shuffled).amplitudes)


class TestFirstQuantized:
    def test_two_distinct(self):
        v = first_quantized_expansion(occ("1H:1,2H:1"))
        h1, h2 = ModeLabel(1, "H"), ModeLabel(2, "H")
        assert abs(v.amplitude((h1, h2)) - S) <= ATOL
        assert abs(v.amplitude((h2, h1)) - S) <= ATOL
        assert abs(v.norm() - 1) <= ATOL

    def test_double_occupation(self):
        v = first_quantized_expansion(occ("1H:2"))
        h1 = ModeLabel(1, "H")
        assert v.amplitude((h1, h1)) == 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_unit_and_slot_symmetric(self, n):
        for o in occupation_basis(OMEGA, n):
            v = first_quantized_expansion(o)
            assert abs(v.norm() - 1) <= ATOL
            for perm in itertools.permutations(range(n)):
                assert np.max(np.abs(swap_slots(v, perm).amplitudes - v.amplitudes)) <= ATOL

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_round_trip(self, n):
        for o in occupation_basis(OMEGA, n):
            back = to_occupation(first_quantized_expansion(o))
            assert np.max(np.abs(back.amplitudes - StateVector.basis_state(back.basis, o).amplitudes)) <= ATOL
            assert np.array_equal(symmetrize(o.slots()).amplitudes, StateVector.basis_state(back.basis, o).amplitudes)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_literal_formula_for_distinct_modes(self, n):
        for slots in itertools.combinations(OMEGA, n):
            literal = permutation_sum(slots)
            assert abs(literal.norm() - 1) <= ATOL
            v = first_quantized_expansion(OccupationState.of(*slots))
            assert np.max(np.abs(v.amplitudes - literal.amplitudes)) <= ATOL

    def test_literal_formula_overcounts_repeated_modes(self):
        literal = permutation_sum(["1H", "1H", "2V"])
        assert abs(literal.norm() - math.sqrt(2)) <= ATOL

    def test_occupation_basis_is_orthonormal_in_tensor_space(self):
        vecs = [first_quantized_expansion(o) for o in occupation_basis(OMEGA, 2)]
        gram = np.array([[inner_product(a, b) for b in vecs] for a in vecs])
        assert np.max(np.abs(gram - np.eye(21))) <= ATOL


class TestEmbed:
    def test_single_photon(self):
        v = StateVector.basis_state(occupation_basis(modes("1H", "1V"), 1), occ("1H:1"))
        e = embed(v, OMEGA)
        assert e.basis == occupation_basis(OMEGA, 1)
        assert e.amplitude(occ("1H:1")) == 1

    def test_bell_pair_space_norm_preserved(self):
        rng = np.random.default_rng(5)
        basis = occupation_basis(modes("1H", "1V", "3H", "3V"), 2)
        v = StateVector(basis, rng.standard_normal(10) + 1j * rng.standard_normal(10))
        e = embed(v, OMEGA)
        assert e.basis.size == 21
        assert abs(e.norm() - v.norm()) <= ATOL

    def test_identity_when_same_modes(self):
        v = symmetrize(["1H", "3V"])
        assert np.array_equal(embed(v, OMEGA).amplitudes, v.amplitudes)

    def test_not_a_subset(self):
        v = StateVector.basis_state(occupation_basis(modes("2H"), 1), occ("2H:1"))
        with pytest.raises(ValueError):
            embed(v, modes("1H", "1V"))


class TestLadderOperators:
    def test_create_annihilate_factors(self):
        v = symmetrize(["1H", "1H"])
        h = ModeLabel(1, "H")
        assert abs(create(h, v).amplitude(occ("1H:3")) - math.sqrt(3)) <= ATOL
        assert abs(annihilate(h, v).amplitude(occ("1H:1")) - math.sqrt(2)) <= ATOL

    def test_commutator_on_two_photons(self):
        # a a^dag - a^dag a = 1 on the 2-photon sector of one mode
        h = ModeLabel(1, "H")
        v = symmetrize(["1H", "2V"])
        lhs = annihilate(h, create(h, v))
        rhs = create(h, annihilate(h, v))
        assert np.max(np.abs((lhs - rhs).amplitudes - v.amplitudes)) <= ATOL
