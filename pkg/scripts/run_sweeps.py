#!/usr/bin/env python3
"""Run every worst-case sweep at full resolution and write CSVs.

Produces one file per series under results/ (d step 0.01, exit step
0.001).  Takes a couple of minutes single-process; pass --jobs to spread
the d cells over workers.
"""

import argparse
import time
from pathlib import Path

from diskevac.scenarios import CommModel
from diskevac.sweep import SeriesSpec, SweepConfig, run_sweep, write_csv

ALL_SERIES = [
    SeriesSpec(CommModel.WIRELESS, False, "0"),
    SeriesSpec(CommModel.WIRELESS, False, "d/2"),
    SeriesSpec(CommModel.WIRELESS, False, "d"),
    SeriesSpec(CommModel.WIRELESS, True, "0"),
    SeriesSpec(CommModel.WIRELESS, True, "d/2"),
    SeriesSpec(CommModel.WIRELESS, True, "d"),
    SeriesSpec(CommModel.FACE_TO_FACE, False, "0"),
    SeriesSpec(CommModel.FACE_TO_FACE, False, "d"),
    SeriesSpec(CommModel.FACE_TO_FACE, True, "0"),
    SeriesSpec(CommModel.FACE_TO_FACE, True, "d/2"),
    SeriesSpec(CommModel.FACE_TO_FACE, True, "d"),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--d-step", type=float, default=0.01)
    parser.add_argument("--exit-step", type=float, default=0.001)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    cfg = SweepConfig(d_step=args.d_step, exit_step=args.exit_step,
                      workers=args.jobs)
    for series in ALL_SERIES:
        t0 = time.time()
        records = run_sweep(cfg, series)
        path = out_dir / f"sweep-{series.key.replace('/', '')}.csv"
        write_csv(records, path)
        print(f"{series.key:24s} {len(records)} cells "
              f"{time.time() - t0:6.1f}s -> {path}")


if __name__ == "__main__":
    main()
