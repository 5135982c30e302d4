"""Certify psd-but-not-sos for L_n (odd n) and C_2m, and show L_2m is sos.

    python scripts/certify_families.py --max-n 11
"""

import argparse
import time

from symquartic.forms import make_C, make_L
from symquartic.nonsos import (
    certify_not_sos,
    default_weights,
    enumerate_zero_points,
    even_L_sos_identity,
    verify_sos_identity,
)
from symquartic.psd import check_psd


def row(name, f, sos_identity=None):
    t0 = time.perf_counter()
    psd = check_psd(f).verdict
    cert = certify_not_sos(f, enumerate_zero_points(f.n, default_weights(f.n)))
    sos = "-" if sos_identity is None else str(verify_sos_identity(sos_identity)).lower()
    dt = time.perf_counter() - t0
    print(f"{name:<6} {f.n:>3} {len(f):>6} {psd:>8} {cert.verdict:>13} {cert.kernel_dimension:>5} {sos:>9} {dt:7.2f}s")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=11)
    args = parser.parse_args()
    print(f"{'form':<6} {'n':>3} {'terms':>6} {'psd':>8} {'zero-forcing':>13} {'ker':>5} {'sos-ident':>9} {'time':>8}")
    for n in range(4, args.max_n + 1):
        if n % 2:
            row(f"L{n}", make_L(n))
        else:
            row(f"L{n}", make_L(n), even_L_sos_identity(n))
            row(f"C{n}", make_C(n))


if __name__ == "__main__":
    main()
