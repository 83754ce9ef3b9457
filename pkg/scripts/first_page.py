"""Draw the first page E_1 as a grid (rows b, columns a) and list its terms."""

import argparse
from dataclasses import dataclass

from btstrata.spectral import e1_page, inertial_report


@dataclass
class Config:
    n: int = 3
    p: int = 3
    mode: str = "closed"
    max_columns: int = 8


def main(cfg: Config) -> None:
    page = e1_page(cfg.n, cfg.p, cfg.mode)
    support = page.support()
    amin = max(min(a for a, _ in support), -cfg.max_columns + 1)
    bs = sorted({b for _, b in support}, reverse=True)
    print("E_1 for n=%d, p=%d (%s mode); * marks a non-zero term" % (cfg.n, cfg.p, cfg.mode))
    for b in bs:
        row = "".join(" * " if (a, b) in page.entries else " . " for a in range(amin, 1))
        print("b=%-3d%s" % (b, row))
    print("     " + "".join("%3d" % a for a in range(amin, 1)))
    print()
    for ab in support:
        print("%-10s %s" % (ab, page[ab]))
    sc = [f for f in inertial_report(page) if f.supercuspidal]
    print()
    print("supercuspidal terms:", ", ".join("(%d,%d) rho(%s)" % (f.a, f.b, f.partition) for f in sc) or "none")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--p", type=int, default=Config.p)
    ap.add_argument("--mode", choices=["closed", "bruteforce"], default=Config.mode)
    a = ap.parse_args()
    main(Config(n=a.n, p=a.p, mode=a.mode))
