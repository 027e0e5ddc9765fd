# %% [markdown]
# A first bottom-left packing
#
# Rectangles go into a strip of fixed width, one at a time, each at the
# lowest feasible position and then the leftmost one at that height.  The
# packer keeps the free space as a list of holes and searches only those.

# %%
import tempfile
from pathlib import Path

from blpack import Rect, pack
from blpack.cli import holes_report, render_svg
from blpack.oracle import oracle_pack, validate_bl_stability, validate_packing

W = 24
rects = [Rect(8, 4), Rect(4, 8), Rect(8, 4), Rect(4, 6), Rect(22, 4),
         Rect(4, 12), Rect(4, 8), Rect(4, 6), Rect(4, 8), Rect(8, 5)]

rep = pack(W, rects)
pk = rep.packing
for i, at in enumerate(pk.origins()):
    print(f"rect {i} {rects[i].w}x{rects[i].h} -> {tuple(at)}")
print("height", rep.height)

# %% [markdown]
# The brute-force oracle tries every candidate corner. It is slow but
# obviously right, so the two should agree placement for placement.

# %%
slow = oracle_pack(W, rects)
print("agrees with oracle:", slow.origins() == pk.origins())
print("feasible:", bool(validate_packing(pk)), " BL-stable:", bool(validate_bl_stability(pk)))

# %% [markdown]
# Three pockets are left below the top: two closed holes and the open
# region under the lid.  Using the packing height as the ceiling shows them
# as they would be drawn.

# %%
print(holes_report(pk, ceiling=30))

# %%
out = Path(tempfile.gettempdir()) / "blpack_first_packing.svg"
out.write_text(render_svg(pk, holes=True))
print("wrote", out)

# %% [markdown]
# Work per placement, as counted by the packer.

# %%
for i, s in enumerate(rep.steps):
    print(f"{i:2d} holes={s.holes_examined} edges={s.edges_visited} nv={s.nv_after}")
