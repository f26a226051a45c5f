#!/usr/bin/env python3
"""Writes the bundled b-file fixtures under data/oeis from closed formulas."""

import argparse
import pathlib
from math import comb

ROWS = 40
TERMS = 150


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def ballot(n, k):
    if k < 0 or k > n or (n - k) % 2:
        return 0
    return (k + 1) * comb(n + 1, (n - k) // 2) // (n + 1)


def weighted(t):
    return lambda n, k: sum(comb(n, i) * t ** (n - i) * ballot(i, k) for i in range(n + 1))


def a039598(n, k):
    return 2 * (k + 1) * comb(2 * n + 1, n - k) // (n + k + 2)


def a039599(n, k):
    return (2 * k + 1) * comb(2 * n, n - k) // (n + k + 1)


def triangle(f):
    return [f(n, k) for n in range(ROWS) for k in range(n + 1)]


SEQUENCES = {
    "A053121": ("Catalan triangle with zeros, read by rows", lambda: triangle(ballot)),
    "A064189": ("Motzkin triangle, read by rows", lambda: triangle(weighted(1))),
    "A039598": ("Catalan triangle, read by rows", lambda: triangle(a039598)),
    "A091965": ("Motzkin-type triangle with level steps of weight 3", lambda: triangle(weighted(3))),
    "A039599": ("Catalan triangle, read by rows", lambda: triangle(a039599)),
    "A001006": ("Motzkin numbers", lambda: [sum(comb(n, 2 * j) * catalan(j) for j in range(n // 2 + 1)) for n in range(TERMS)]),
    "A126120": ("Catalan numbers interleaved with zeros", lambda: [0 if n % 2 else catalan(n // 2) for n in range(TERMS)]),
    "A000108": ("Catalan numbers", lambda: [catalan(n) for n in range(TERMS)]),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for sid, (title, gen) in SEQUENCES.items():
        lines = [f"# {sid} {title}", "# fixture regenerated by tools/gen_oeis_fixtures.py", ""]
        lines += [f"{i} {v}" for i, v in enumerate(gen())]
        (out / f"b{sid[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
