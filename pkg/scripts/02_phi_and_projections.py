# %% [markdown]
# # phi, its projection to Lambda^2 H, and the constant of j_theta

# %%
from fractions import Fraction

from hypjohnson.derivations import annihilation_residue, j_theta, phi, pi_hat, pi_lambda2, pi_phi_closed_form
from hypjohnson.symplectic import BiVector, SymSq, project_mod_theta, sym_product, theta_I, v_basis, wedge

g = 3

# %% phi of a single monomial (a1^b1)(a1^a2) is a degree -2 derivation
s = sym_product(wedge(0, 1), wedge(0, 2))
d = phi(s, g)
for x, img in sorted(d.images.items()):
    print(f"  letter {x} -> {len(img)} Lyndon terms")
print("kills theta:", not annihilation_residue(d))

# %% Its Lambda^2 projection agrees with the closed form
print(dict(pi_lambda2(d)), "==", dict(pi_phi_closed_form(s, g)))

# %% theta_J^2 projects to a multiple of theta_J
for J in ([1], [1, 2], [1, 2, 3]):
    t = theta_I(g, J)
    print(J, dict(pi_lambda2(phi(sym_product(t, t), g))))

# %% pi_hat o j_theta is -4(g+1) on V
v = BiVector({v_basis(g)[3]: 1})
print(dict(project_mod_theta(pi_hat(j_theta(v, g), g), g)), "vs", -4 * (g + 1), dict(v))
