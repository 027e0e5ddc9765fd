# %% [markdown]
# Anatomy of a hole with left notches
#
# The fixture instance stacks 17 wide blockers against the left wall and
# then closes the space with a few fillers.  What remains is one hole with
# four leftmost edges, three left notches and a falling corner.

# %%
from blpack import pack
from blpack.geometry import Rect
from blpack.hole_model import Hole, dump
from blpack.instance_io import FIXTURE_SHIFT, bls_fixture_instance
from blpack.nice_hole_scan import bottom_function, top_function
from blpack.oracle import extract_holes
from blpack.partitioning import all_bl_locs_bls, compute_anchors, qn_partition, qw_partition

inst = bls_fixture_instance()
pk = pack(inst.W, inst.rects).packing
h = next(x for x in extract_holes(pk) if x.canonical().k == 4)
h = Hole([(v.x - FIXTURE_SHIFT, v.y) for v in h.vertices])   # back to the picture's frame
print(dump(h))

# %%
co = h.canonical()
for name, e in co.sequence():
    ed = h.edge(e)
    print(f"{name:3s} {tuple(ed.a)} -> {tuple(ed.b)}")
print("falling corner", tuple(h.vertex(co.falling_corner)))

# %% [markdown]
# Each notch has an upper vertex Q.  Shooting a ray up from Q gives QN,
# shooting it right gives QW.  Cutting along these chords splits the hole
# into pieces without notches, which a single left-to-right sweep handles.

# %%
for a in compute_anchors(h):
    print(f"N{a.i}: Q={tuple(a.q)} QN={tuple(a.qn)} QW={tuple(a.qw)}")

for name, parts in (("vertical cuts", qn_partition(h).parts),
                    ("horizontal cuts, w=5", qw_partition(h, 5).parts)):
    print(name, [p.nv for p in parts])

# %% [markdown]
# Inside a notch-free piece, C(p) is the lowest a bar of width w can sit at
# abscissa p, and D(p) the highest its top can reach.  Both are staircases.

# %%
piece = max(qn_partition(h).parts, key=lambda p: p.area())
w = 3
print("C", [tuple(p) for p in bottom_function(piece, w).points])
print("D", [tuple(p) for p in top_function(piece, w).points])

# %%
for r in (Rect(3, 2), Rect(5, 3), Rect(10, 1), Rect(12, 4)):
    print(r, sorted(tuple(p) for p in all_bl_locs_bls(h, r)))
