#!/usr/bin/env python3
"""Regenerate src/arbor/data/b345973.txt and b346787.txt without the network.

Deliberately imports nothing from ``arbor`` so the fixtures stay an
independent reference for the package's own code paths:

* A345973 comes from the logarithmic derivative of 1/prod(1 - a_k x^k),
  i.e.  m R_m = sum_{i=1..m} b_i R_{m-i}  with  b_i = sum_{d | i} d a_d^(i/d),
  rather than the factor-by-factor series update used in the package.
* A346787 (indexed by vertex count) counts all-black trees where every
  nonleaf vertex has >= 2 children and child subtree sizes weakly decrease.
  It is computed by a DP over weakly decreasing child-size sequences, with
  no partition generator involved.

When oeis.org is reachable, prefer ``arbor oeis <id> --refresh`` and copy
the cached file over these.
"""

from __future__ import annotations

import argparse
from functools import lru_cache
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "arbor" / "data"


def a345973(count: int) -> list[int]:
    a = [0, 1]  # 1-based, a(1) = 1 from the x term
    R = [1]     # coefficients of 1/prod(1 - a_k x^k)
    b = [0]
    while len(a) <= count:
        m = len(a) - 2  # a(m+2) = R_m
        if m >= 1:
            b.append(sum(d * a[d] ** (m // d) for d in range(1, m + 1) if m % d == 0))
            s = sum(b[i] * R[m - i] for i in range(1, m + 1))
            assert s % m == 0
            R.append(s // m)
        a.append(R[m])
    return a[1:count + 1]


def a346787(count: int) -> list[int]:
    @lru_cache(maxsize=None)
    def trees(e: int) -> int:
        if e == 0:
            return 1
        return sum(seqs(e - k, k, e - k) for k in range(2, e + 1))

    @lru_cache(maxsize=None)
    def seqs(total: int, length: int, cap: int) -> int:
        # Weighted count of weakly decreasing length-`length` sequences of
        # sizes <= cap summing to `total`; each size s weighs trees(s).
        if length == 0:
            return 1 if total == 0 else 0
        return sum(trees(s) * seqs(total - s, length - 1, s) for s in range(min(cap, total) + 1))

    return [trees(v - 1) for v in range(1, count + 1)]


def write(path: Path, seq_id: str, values: list[int], note: str) -> None:
    lines = [f"# {seq_id}", f"# {note}"]
    lines += [f"{n} {v}" for n, v in enumerate(values, start=1)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a345973", type=int, default=1000, help="terms to write (default 1000)")
    ap.add_argument("--a346787", type=int, default=60, help="terms to write (default 60)")
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)
    write(DATA / "b345973.txt", "A345973", a345973(args.a345973),
          "regenerated offline by tools/make_fixtures.py (log-derivative recurrence)")
    write(DATA / "b346787.txt", "A346787", a346787(args.a346787),
          "regenerated offline by tools/make_fixtures.py (index = vertex count)")


if __name__ == "__main__":
    main()
