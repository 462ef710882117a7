# %% [markdown]
# # Teleporting a qubit between distinguishable particles
#
# Particle 3 carries an unknown state, particles 1 and 2 share an EPR pair.
# A Bell measurement on (1, 3) leaves particle 2 in one of four states that a
# fixed Pauli rotation turns back into the input.

# %%
import numpy as np

from symtele.distinguishable import (
    BellKind,
    QubitState,
    correction,
    decompose,
    measure_bell,
    total_state,
)
from symtele.tensor_core import apply, fidelity

psi = QubitState.normalized(0.6, 0.8j)
total = total_state(psi)  # slot order (3, 1, 2)
print("total state:", total)

# %% [markdown]
# The three-particle state splits into four Bell components, each with a
# half-weight companion state on particle 2.

# %%
for kind, companion in decompose(total).items():
    print(f"{kind.name:9s} companion on particle 2: {np.round(companion.amplitudes, 4)}")

# %%
for kind in BellKind:
    outcome = measure_bell(total, kind)
    fixed = apply(correction(kind), outcome.conditional_state)
    print(
        f"{kind.name:9s} p={outcome.probability:.4f}  "
        f"correction={np.real_if_close(correction(kind).matrix).tolist()}  "
        f"fidelity={fidelity(psi.vector(), fixed):.12f}"
    )
