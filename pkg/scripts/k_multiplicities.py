"""Brute-force k_{s,theta} tables, compared with binomial bounds and closed forms."""

import argparse
import time
from dataclasses import dataclass
from math import comb

from btstrata.counts import max_theta
from btstrata.spectral import k_mult_bruteforce, k_mult_closed, nu_theta


@dataclass
class Config:
    ns: tuple = (3, 4, 5)
    p: int = 3
    show: int = 6  # how many s values to print per row


def main(cfg: Config) -> None:
    for n in cfg.ns:
        for theta in range(max_theta(n) + 1):
            t0 = time.perf_counter()
            nu = nu_theta(n, theta, cfg.p)
            ks = [k_mult_bruteforce(n, theta, s, cfg.p) for s in range(1, nu + 1)]
            assert all(0 <= k <= comb(nu, s) for s, k in enumerate(ks, start=1))
            closed = ""
            if n in (3, 4):
                agree = all(k == k_mult_closed(n, theta, s, cfg.p) for s, k in enumerate(ks, start=1))
                closed = "closed form %s" % ("agrees" if agree else "DISAGREES")
            head = ", ".join(str(k) for k in ks[: cfg.show]) + (", ..." if nu > cfg.show else "")
            print("n=%d theta=%d nu_theta=%-5d k = [%s]  %s (%.2fs)" % (
                n, theta, nu, head, closed, time.perf_counter() - t0))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=Config.p)
    ap.add_argument("--n", type=int, nargs="*", default=list(Config.ns))
    a = ap.parse_args()
    main(Config(ns=tuple(a.n), p=a.p))
