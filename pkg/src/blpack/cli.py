"""Command line: pack, verify, oracle-compare, bench, render, holes, gen.

Exit status is 0 on success, 1 when a check fails and 2 on bad usage or
unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .geometry import Packing
from .hole_model import HoleError, dump
from .instance_io import (FAMILIES, GeneratorSpec, ParseError, generate,
                          parse_instance, parse_packing, serialize_instance,
                          serialize_packing)
from .oracle import extract_holes, oracle_pack, validate_bl_stability, validate_packing
from .packer import _pack, pack
from .partitioning import all_bl_locs_bls, flawed_all_bl_locs_bls

BENCH_HEADER = "n,total_edge_visits,wall_ms"


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise UsageError(str(e)) from None


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(inst_path: str, pk_path: Optional[str] = None):
    inst = parse_instance(_read(inst_path))
    if pk_path is None:
        return inst
    return inst, parse_packing(_read(pk_path), inst)


def cmd_pack(args) -> int:
    inst = _load(args.instance)
    rep = pack(inst.W, inst.rects)
    text = serialize_packing(rep.packing)
    if args.trace:
        text += "# step,holes_examined,edges_visited,candidates,total_nv\n"
        text += "".join(f"# {i},{s.holes_examined},{s.edges_visited},{s.candidates},{s.nv_after}\n"
                        for i, s in enumerate(rep.steps))
    _write(args.out, text)
    return 0


def cmd_verify(args) -> int:
    inst, pk = _load(args.instance, args.packing)
    res = validate_packing(pk)
    if res and args.stability:
        res = validate_bl_stability(pk)
    if not res:
        print(f"FAIL: {res.message}")
        return 1
    print("ok")
    return 0


def cmd_oracle_compare(args) -> int:
    inst = _load(args.instance)
    fast = pack(inst.W, inst.rects).packing.origins()
    slow = oracle_pack(inst.W, inst.rects).origins()
    for i, (a, b) in enumerate(zip(fast, slow)):
        if a != b:
            print(f"MISMATCH at rectangle {i}: packer {tuple(a)} oracle {tuple(b)}")
            return 1
    print(f"ok: {len(fast)} placements agree")
    return 0


def bench_rows(family: str, sizes: Sequence[int], flawed: bool = False, seed: int = 0):
    """(n, total_edge_visits, wall_ms) per size for one search variant."""
    search = flawed_all_bl_locs_bls if flawed else all_bl_locs_bls
    rows = []
    for n in sizes:
        inst = generate(GeneratorSpec(family, seed=seed, n=n, W=max(30, n // 4)))
        rep = _pack(inst.W, inst.rects, search)
        rows.append((n, rep.total_edge_visits, rep.wall_ms))
    return rows


def _csv(rows) -> str:
    return BENCH_HEADER + "\n" + "".join(f"{n},{v},{ms:.1f}\n" for n, v, ms in rows)


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    text = _csv(bench_rows(args.family, sizes))
    if args.flawed:
        text += "# flawed\n" + _csv(bench_rows(args.family, sizes, flawed=True))
    _write(args.out, text)
    return 0


def render_svg(pk: Packing, holes: bool = False) -> str:
    """SVG of a packing.

    Packing y grows upward and SVG y grows downward, so shapes are drawn
    inside a group flipped about the strip's mid-height; labels are placed
    outside that group with the flip applied by hand so the text stays
    upright.
    """
    placed = pk.placed()
    H = max((p.y_max for p in placed), default=0)
    W = pk.W
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<!-- blpack: W={W} H={H}; strip y points up, the group below flips it '
        f'with translate(0,{H}) scale(1,-1); labels are placed at H - y -->',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="-1 -1 {W + 2} {H + 2}" width="{10 * (W + 2)}" height="{10 * (H + 2)}">',
        f'<g transform="translate(0,{H}) scale(1,-1)">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="none" stroke="black" stroke-width="0.1"/>',
    ]
    for i, p in enumerate(pk.placements):
        if p is None:
            continue
        out.append(f'<rect x="{p.x_min}" y="{p.y_min}" width="{p.rect.w}" height="{p.rect.h}" '
                   f'fill="#6fa8dc" stroke="#1c4587" stroke-width="0.05"/>')
    if holes:
        for h in extract_holes(pk, ceiling=H):
            pts = " ".join(f"{v.x},{v.y}" for v in h.vertices + h.vertices[:1])
            out.append(f'<polyline points="{pts}" fill="none" stroke="#cc0000" '
                       f'stroke-width="0.1" stroke-dasharray="0.4,0.2"/>')
    out.append("</g>")
    for i, p in enumerate(pk.placements):
        if p is None:
            continue
        cx = p.x_min + p.rect.w / 2
        cy = H - (p.y_min + p.rect.h / 2)
        size = max(0.3, min(p.rect.w, p.rect.h) * 0.5)
        out.append(f'<text x="{cx:g}" y="{cy:g}" font-size="{size:g}" text-anchor="middle" '
                   f'dominant-baseline="central">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_render(args) -> int:
    inst, pk = _load(args.instance, args.packing)
    _write(args.svg, render_svg(pk, args.holes))
    return 0


def _pt(p) -> str:
    return f"({p.x},{p.y})"


def holes_report(pk: Packing, ceiling: Optional[int] = None) -> str:
    lines = []
    for j, h in enumerate(extract_holes(pk, ceiling)):
        lines.append(f"# hole {j} nv={h.nv}")
        try:
            co = h.canonical()
            labels = " ".join(f"{name}={_pt(h.vertex(e))}-{_pt(h.vertex(e + 1))}"
                              for name, e in co.sequence())
            lines.append(f"# k={co.k} {labels}")
            if co.falling_corner is not None:
                cf = h.vertex(co.falling_corner)
                lines.append(f"# c_f={_pt(cf)}")
        except HoleError as e:
            lines.append(f"# not a BLS-hole: {e}")
        lines.append(dump(h).rstrip("\n"))
    return "\n".join(lines) + "\n"


def cmd_holes(args) -> int:
    inst, pk = _load(args.instance, args.packing)
    _write(None, holes_report(pk, sum(r.h for r in inst.rects)))
    return 0


def cmd_gen(args) -> int:
    spec = GeneratorSpec(args.family, seed=args.seed, n=args.n, W=args.W, max_dim=args.max_dim)
    _write(args.out, serialize_instance(generate(spec)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="blpack", description="Bottom-left strip packing.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pack", help="pack an instance")
    p.add_argument("instance")
    p.add_argument("-o", "--out")
    p.add_argument("--trace", action="store_true", help="append per-placement work as comments")
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("verify", help="check a packing for feasibility")
    p.add_argument("instance")
    p.add_argument("packing")
    p.add_argument("--stability", action="store_true", help="also require BL-stability")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-compare", help="compare the packer against brute force")
    p.add_argument("instance")
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("bench", help="edge visits and wall time per size")
    p.add_argument("--family", default="staircase-flaw", choices=FAMILIES)
    p.add_argument("--sizes", default="128,256,512,1024")
    p.add_argument("--flawed", action="store_true", help="also run the original partition scheme")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("render", help="draw a packing as SVG")
    p.add_argument("instance")
    p.add_argument("packing")
    p.add_argument("svg")
    p.add_argument("--holes", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("holes", help="list the holes of a packing")
    p.add_argument("instance")
    p.add_argument("packing")
    p.set_defaults(func=cmd_holes)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-n", type=int, default=20)
    p.add_argument("-W", type=int, default=30)
    p.add_argument("--max-dim", type=int, default=10)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
