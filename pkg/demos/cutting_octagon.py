"""Build the octagon on the boundary of C and write a picture of it.

Run with ``python3 demos/cutting_octagon.py [out.svg]``.
"""
import sys

from chorbifold import cutdisk

oc = cutdisk.octagon()
print("Vertices on the unit sphere, in cycle order:")
for v in oc.vertices:
    print(f"    {'/'.join(v.labels):9s}", ", ".join(v.decimals()))

print("\nEach side is one or two branches of a trace:")
for a in oc.arcs:
    for s in a.segments:
        print(f"    α{a.index} {a.label:4s} {'+' if s.sign > 0 else '-'} branch, t3 in {s.interval_text}")

pairs = cutdisk.jordan_check(oc)
print(f"\n{sum(p[2] for p in pairs)} of {len(pairs)} segment pairs certified to meet only where they should")

print("\nCritical points of the B0b trace:")
for cp in cutdisk.critical_points("B0b"):
    print("   ", ", ".join(cp.decimals()), "-", cp.reason)

out = sys.argv[1] if len(sys.argv) > 1 else "octagon.svg"
cutdisk.emit_figure("projection", out, label="B0b")
print("\nwrote", out)
