"""From ridge cycles to the index-six subgroup of the Whitehead filling.

Run with ``python3 demos/presentations.py``.  Takes a few seconds.
"""
from chorbifold import grouptheory as gt

steps = gt.eliminate_chain()
print("Tietze moves on the ridge presentation:")
for p in steps:
    print(f"    {len(p.gens):2d} generators, {len(p.relators):2d} relators, {gt.abelianization(p)}")

print("\nThe seven-generator result:")
print("   ", steps[-1].format().replace("\n", "\n    "))

ridge = gt.low_index_counts(steps[0], 4)
print("Low-index class counts of the orbifold group:", ridge)

q = gt.whitehead_filling()
print("\nThe filling has", len(gt.low_index_subgroups(q, 6)), "classes of index-6 subgroups.")
table = gt.q_subgroup_table()
sub = gt.reidemeister_schreier(q, table, simplify_result=True)
print(f"The listed subgroup has index {table.index}; Reidemeister-Schreier gives "
      f"{len(sub.gens)} generators and {len(sub.relators)} relators.")
ev = gt.compare_groups(steps[0], sub, 4, counts=ridge)
print("Against the orbifold group:", ev.verdict)

ev = gt.compare_groups(steps[0], gt.u_presentation(), 4, counts=ridge)
print("The rewritten u-form, by contrast:", ev.verdict)

link = gt.wirtinger(gt.chain_link())
print("\nThe chain link has", len(gt.chain_link().components()), "components; H1 =", gt.abelianization(link))
