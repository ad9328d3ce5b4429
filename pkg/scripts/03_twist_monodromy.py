# %% [markdown]
# # Twist images and Collino monodromy
#
# A separating twist in genus 2 with one Weierstrass triple {1,2,3} on its
# genus-1 side, handle 1 on that side.

# %%
from hypjohnson.monodromy import TwistDescriptor, v_prime_vanishing_check, pi_E, pi_Z, tau_tilde, verify_monodromy_relation
from hypjohnson.class_span import canonical_family

D = TwistDescriptor(2, 1, [1, 2, 3], [1])

# %% tau~ depends only on which side the base point is on
for q in D.weierstrass_points:
    print(q, "A-side" if D.on_A_side(q) else "other", dict(tau_tilde(D, q)))

# %% The difference is (g+1) times the Collino monodromy
q1, q2 = 1, 4
print("tau~_4 - tau~_1 =", dict(tau_tilde(D, q2) - tau_tilde(D, q1)))
print("(g+1) pi_Z      =", dict(pi_Z(D, q1, q2) * 3))
print("pi_E            =", dict(pi_E(D, q1, q2)))

# %% Over a whole family
for g in (2, 3):
    recs = verify_monodromy_relation(g, canonical_family(g).descriptors)
    print(f"g={g}: {sum(r.ok for r in recs)}/{len(recs)} descriptors satisfy the relation")

# %% The chain showing the difference has no V' component
print(v_prime_vanishing_check(3, TwistDescriptor(3, 1, [1, 2, 3], [2])).details)
