#!/usr/bin/env python3
"""Reproduce the minimum-evacuation-time table for the wireless model.

For each zeta policy and labeling, sweep d over [0, pi], take the worst
case per d over all exit placements, and report the d that minimizes it.
Expected (time from perimeter): pi/4 + sqrt(2) ~ 2.1996 at d = pi for
zeta in {0, d} both labelings, pi/2 + sqrt(2) ~ 2.985 at d = pi for
zeta = d/2 unlabeled, and 2.88 at d = 1.26 for zeta = d/2 labeled.
"""

import argparse

from diskevac.sweep import SweepConfig, table1


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d-step", type=float, default=0.01)
    parser.add_argument("--exit-step", type=float, default=0.001)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    cfg = SweepConfig(d_step=args.d_step, exit_step=args.exit_step,
                      workers=args.jobs)
    print(f"{'zeta':6s} {'exits':10s} {'min time':>9s} {'at d':>7s}")
    for series, d_star, t_star in table1(cfg):
        label = "labeled" if series.labeled else "unlabeled"
        print(f"{series.zeta_policy:6s} {label:10s} {t_star:9.4f} {d_star:7.4f}")


if __name__ == "__main__":
    main()
