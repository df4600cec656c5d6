"""Walk through the representation and the first intersection lemmas.

Run with ``python3 demos/relations_and_bisectors.py``.
"""
from chorbifold import bisectors, reference, reps
from chorbifold.numfield import pretty

print("The six complex reflections have order three and commute cyclically:")
for c in reps.relation_checks()[:12]:
    print("   ", "ok" if c.holds else "FAIL", c.name)

print("\nThe anti-holomorphic symmetries conjugate each reflection to an inverse:")
for c in reps.symmetry_inverse_checks()[:3]:
    print("   ", "ok" if c.holds else "FAIL", c.name)

bs = bisectors.dirichlet_bisectors()
row = bisectors.row_table("B0", bs)
print("\nB0 meets", ", ".join(sorted(row.row("B0"))))
empty = [b for b in bs if b != "B0" and row.kind("B0", b).value == "Empty"]
print("Sturm certificates for the", len(empty), "disjoint pairs, for example:")
print("   ", row.get("B0", empty[0]).certificate.summary())

c = bisectors.c_row()
print("\nIn the ball, C meets all", len(c.row("C")), "Dirichlet bisectors; one witness:")
w = c.get("C", "B9").witness
print("    <w, w> =", pretty(w.norm()))

d = bisectors.discriminant_comparison(reference.DISCRIMINANT_C_B0)
print("\nnu² - |mu|² for (C, B0), divided by 9/16:")
print("   ", " + ".join(f"({pretty(a)}){m}" for m, a in d.derived.terms()))
print("    positive on the whole circle:", d.derived_positive)
