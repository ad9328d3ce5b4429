# %% [markdown]
# # Span of the Weierstrass and Collino classes
#
# The class matrix has one row per Weierstrass point. Its rank is the
# dimension of the span; Collino rows are differences of Weierstrass rows.

# %%
from hypjohnson.class_span import FAMILIES, span_report

# %% Consecutive arcs give 2g+1 from genus 3 on; genus 2 needs more point sets
for g in (2, 3, 4):
    for kind in ("consecutive", "all-subsets"):
        r = span_report(FAMILIES[kind](g))
        print(f"g={g} {kind:12s} descriptors={r.n_descriptors:3d} "
              f"W-rank={r.weierstrass_rank} C-rank={r.collino_rank} "
              f"target={r.target_rank} equal={r.row_spaces_equal}")
