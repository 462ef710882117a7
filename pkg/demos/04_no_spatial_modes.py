# %% [markdown]
# # Why polarization alone is not enough
#
# If both photons share one momentum direction, two-photon states are
# symmetric combinations of H and V only: three of them. Four orthonormal
# Bell states cannot fit.

# %%
import numpy as np

from symtele.identical_teleport import candidate_gram_rank, impossibility_demo, polarization_only_candidates
from symtele.distinguishable import BellKind
from symtele.tensor_core import gram_matrix

print("dimension:", impossibility_demo())
candidates = polarization_only_candidates()
for kind, v in zip(BellKind, candidates):
    print(f"{kind.name:9s} symmetric part: {np.round(v.amplitudes, 4)}")
print("Gram matrix:\n", np.round(gram_matrix(candidates).real, 4))
print("rank:", candidate_gram_rank())
