# %% [markdown]
# Edge visits as the strip fills up
#
# Wall-clock time is noisy, so the packer counts boundary edges it touches.
# On the comb family a flat ratio of visits to n squared means quadratic
# work.  The flawed variant keeps only the vertical cuts and therefore
# resweeps the comb's narrow notches on every probe.

# %%
from blpack.cli import bench_rows

sizes = [64, 128, 256, 512]
good = bench_rows("staircase-flaw", sizes)
bad = bench_rows("staircase-flaw", sizes, flawed=True)

print(f"{'n':>5} {'visits':>9} {'/n^2':>7} {'flawed':>9} {'/n^2':>7}")
for (n, v, _), (_, fv, _) in zip(good, bad):
    print(f"{n:5d} {v:9d} {v / n**2:7.3f} {fv:9d} {fv / n**2:7.3f}")

# %% [markdown]
# The corrected column settles while the flawed one keeps climbing.  The
# same numbers come out of `blpack bench --flawed` as CSV.
