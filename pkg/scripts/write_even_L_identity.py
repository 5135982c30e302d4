"""Write L_2m and its sum-of-squares pairs as files for `symquartic verify-sos`.

    python scripts/write_even_L_identity.py 6 out/
    symquartic verify-sos out/L6.poly out/L6.pairs
"""

import argparse
from pathlib import Path

from symquartic.nonsos import even_L_sos_identity, summands_to_text


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("two_m", type=int)
    parser.add_argument("outdir", type=Path)
    args = parser.parse_args()
    ident = even_L_sos_identity(args.two_m)
    args.outdir.mkdir(parents=True, exist_ok=True)
    target = args.outdir / f"L{args.two_m}.poly"
    pairs = args.outdir / f"L{args.two_m}.pairs"
    target.write_text(ident.target.to_text())
    pairs.write_text(summands_to_text(ident.summands))
    print(target)
    print(pairs)


if __name__ == "__main__":
    main()
