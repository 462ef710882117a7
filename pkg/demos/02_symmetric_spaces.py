# %% [markdown]
# # Bosonic state spaces over photon modes
#
# A photon mode is a momentum direction (1, 2, 3) with a polarization (H, V).
# States of identical photons live in the symmetric part of the tensor power,
# which is labeled here by occupation numbers.

# %%
from symtele.symmetric_space import (
    OMEGA,
    OccupationState,
    first_quantized_expansion,
    modes,
    occupation_basis,
    permutation_sum,
    sym_dimension,
    symmetrize,
    to_first_quantized,
)

for m, n in [(2, 2), (4, 2), (6, 2), (6, 3)]:
    print(f"{m} modes, {n} photons: dim = {sym_dimension(m, n)}")

print([str(o) for o in occupation_basis(modes("1H", "1V"), 2)])

# %% [markdown]
# Occupation states and permutation sums are two views of the same vector.
# For distinct modes the 1/sqrt(n!) permutation sum is already normalized.

# %%
occ = OccupationState.of("1H", "2H", "3V")
fq = first_quantized_expansion(occ)
literal = permutation_sum(["1H", "2H", "3V"])
print("distinct modes, max difference:", abs(fq.amplitudes - literal.amplitudes).max())

# %% [markdown]
# With a repeated mode the plain permutation sum over-counts; `symmetrize`
# always returns a unit vector.

# %%
print("norm of literal sum for (1H, 1H):", permutation_sum(["1H", "1H"]).norm())
v = symmetrize(["1H", "1H"])
print("symmetrize:", v, "norm", v.norm())
print("as slots:", to_first_quantized(v).items())
print("six single-photon modes:", [str(m) for m in OMEGA])
