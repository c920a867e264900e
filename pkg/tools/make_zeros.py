"""Regenerate tests/data/zeta_zeros_1e4.txt: ordinates of the nontrivial zeta zeros up to height 10^4.

Uses Arb's zeta-zero isolation through python-flint (pip install python-flint),
which returns the zeros by index with certified error radii, so the list is
complete by construction.  mpmath.zetazero gives the same values but takes
hours for the full range.  Run: python tools/make_zeros.py [height]
"""
import sys
from pathlib import Path

import flint

flint.ctx.prec = 80
BATCH = 200


def _ordinate(z):
    g = z.imag
    if float(g.rad()) > 1e-10:
        raise RuntimeError(f"radius too large at {g}")
    return float(g.mid())


def main():
    height = float(sys.argv[1]) if len(sys.argv) > 1 else 1e4
    out = Path(__file__).resolve().parents[1] / "tests" / "data" / "zeta_zeros_1e4.txt"
    rows = []
    n = 1
    done = False
    while not done:
        for z in flint.acb.zeta_zeros(n, BATCH):
            g = _ordinate(z)
            if g > height:
                done = True
                break
            rows.append(f"{g:.9f}")
        n += BATCH
    header = [
        "# nontrivial zeros of zeta(s), ordinates gamma > 0 of 1/2 + i*gamma",
        "# generated with Arb (python-flint acb.zeta_zeros), rounded to 9 decimals",
        f"# complete_to={height:g}",
        f"# count={len(rows)}",
    ]
    out.write_text("\n".join(header + rows) + "\n")


if __name__ == "__main__":
    main()
