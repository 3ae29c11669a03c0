#!/usr/bin/env python3
"""Run the full verification battery and print a one-line-per-check summary.

Covers: enumeration vs. catalogue closure at two desk-scale bounds, the
multiplicity-free lists for all supported simple types, the root-geometry
censuses, and (with --sweep) the exhaustive detector comparison on the
7x7 grid. Exits nonzero if any check fails.
"""

import argparse
import sys
import time

sys.path.insert(0, "tests")

from rectrep import (SimpleType, long_roots_3space_census,
                     roots_in_plane_census, verify_classification,
                     verify_howe)

HOWE_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2", "F4")


def check(name, ok, detail=""):
    mark = "ok " if ok else "FAIL"
    print(f"[{mark}] {name}" + (f"  {detail}" if detail else ""))
    return ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=3)
    ap.add_argument("--max-dim", type=int, default=128)
    ap.add_argument("--howe-dim", type=int, default=128)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--sweep", action="store_true",
                    help="also run the exhaustive 7x7-grid detector sweep")
    args = ap.parse_args()

    all_ok = True
    t0 = time.monotonic()

    bounds = {(2, min(64, args.max_dim)), (args.max_rank, args.max_dim)}
    for rank, dim in sorted(bounds):
        t = time.monotonic()
        rep = verify_classification(rank, dim, seed=args.seed)
        all_ok &= check(
            f"classification rank<={rank} dim<={dim}", rep["ok"],
            f"enumerated={rep['enumerated']} catalogue={rep['catalogue']} "
            f"spot_checks={rep['unimodular_spot_checks']} "
            f"({time.monotonic() - t:.1f}s)")

    for label in HOWE_TYPES:
        rep = verify_howe(SimpleType.parse(label), args.howe_dim)
        all_ok &= check(f"multiplicity-free list {label}", rep["ok"],
                        f"scanned={rep['scanned']} flagged={len(rep['flagged'])}")

    for n in (2, 3, 4):
        rep = roots_in_plane_census(n)
        all_ok &= check(f"plane census B{n}", rep["ok"],
                        f"rich={rep['rich_planes']}")
    for n in (3, 4):
        rep = long_roots_3space_census(n)
        all_ok &= check(f"long-root 3-space census B{n}", rep["ok"],
                        f"rich={rep['rich_spaces']}")

    if args.sweep:
        from rectrep import detect_rectangular_points, lengths
        from oracles import grid_rect_oracle, symmetric_sets

        t = time.monotonic()
        sets, lengths_of = grid_rect_oracle()
        bad = 0
        n_swept = 0
        for s in symmetric_sets():
            n_swept += 1
            cert = detect_rectangular_points(s, 2)
            if (cert is not None) != (s in sets):
                bad += 1
            elif cert is not None and lengths(cert) != tuple(
                    sorted(lengths_of[s])):
                bad += 1
        all_ok &= check("detector vs forward oracle", bad == 0,
                        f"swept={n_swept} disagreements={bad} "
                        f"({time.monotonic() - t:.1f}s)")

    print(f"total {time.monotonic() - t0:.1f}s")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
