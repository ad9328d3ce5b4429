# %% [markdown]
# # Mod-2 homology from even subsets of Weierstrass points

# %%
import itertools

from hypjohnson.f2model import class_coordinates, f2_class_space, is_symplectic_f2, perm_to_sp_f2

g = 2
space = f2_class_space(g)
print("dimension:", space.dimension)
print("{1,2} ->", class_coordinates({1, 2}, g), " {3,4,5,6} ->", class_coordinates({3, 4, 5, 6}, g))

# %% Every permutation of the six points acts symplectically, and faithfully
mats = {perm_to_sp_f2(p, g) for p in itertools.permutations(range(1, 7))}
print(len(mats), "distinct matrices; all symplectic:", all(is_symplectic_f2(M, g) for M in mats))
