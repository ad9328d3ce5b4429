# %% [markdown]
# # The free Lie algebra and its theta quotient
#
# Letters are indexed 0..2g-1 in the order a1, b1, a2, b2, ...; Lie
# elements are sparse dictionaries keyed by Lyndon words.

# %%
from hypjohnson.free_lie import (
    bracket,
    ideal_component,
    letter,
    lie_to_tensor,
    lyndon_basis,
    quotient_space,
    theta_lie,
    witt_dim,
)

g = 2

# %% Lyndon bases have Witt-formula size
for k in range(1, 5):
    print(f"L_{k}: {len(lyndon_basis(k, g))} words (Witt: {witt_dim(2 * g, k)})")

# %% A bracket, and its expansion into the tensor algebra
x = bracket(letter(0), bracket(letter(1), letter(2)))
print("[a1,[b1,a2]] =", dict(x))
print("as tensors  =", dict(lie_to_tensor(x)))

# %% The ideal generated by theta and the quotient p
print("theta =", dict(theta_lie(g)))
for k in range(2, 5):
    print(f"dim J_{k} = {ideal_component(k, g).dim}")
for m in range(1, 5):
    print(f"dim p(-{m}) = {quotient_space(m, g).dim}")
