"""Print nu(r, d) symbolically and at a few primes, checked against enumeration."""

import argparse
from dataclasses import dataclass

from btstrata.counts import nu_eval, nu_symbolic
from btstrata.fieldgeom import FieldDescriptor, HermitianSpace, count_N


@dataclass
class Config:
    max_d: int = 6
    primes: tuple = (3, 5, 7)
    verify_up_to: int = 3  # enumerate over F_{p^2} only while d is this small
    verify_prime: int = 3


def main(cfg: Config) -> None:
    header = "%-4s %-4s %-40s " % ("r", "d", "nu(r,d)") + " ".join("p=%-8d" % p for p in cfg.primes)
    print(header)
    for d in range(cfg.max_d + 1):
        for r in range((d + 1) // 2, d + 1):
            vals = " ".join("%-10d" % nu_eval(r, d, p) for p in cfg.primes)
            mark = ""
            if d <= cfg.verify_up_to:
                S = HermitianSpace(FieldDescriptor(cfg.verify_prime), d)
                mark = " ok" if count_N(r, S) == nu_eval(r, d, cfg.verify_prime) else " MISMATCH"
            print("%-4d %-4d %-40s %s%s" % (r, d, nu_symbolic(r, d), vals, mark))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=Config.max_d)
    ap.add_argument("--verify-up-to", type=int, default=Config.verify_up_to)
    a = ap.parse_args()
    main(Config(max_d=a.max_d, verify_up_to=a.verify_up_to))
