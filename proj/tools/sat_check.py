#!/usr/bin/env python3
"""Independent existence check for codes of a given size on C(n;1,3).

Encodes domination, separation and |S| <= k as CNF and asks CaDiCaL.
Needs python-sat (pip install python-sat). Shares no code with the library.

    tools/sat_check.py --kind locating -n 21 -k 7
    tools/sat_check.py --kind identifying --range 38 60 --target
"""

import argparse
import math
import sys

from pysat.card import CardEnc, EncType
from pysat.solvers import Cadical153


def closed(n, offsets, u):
    out = {u}
    for d in offsets:
        out.add((u + d) % n)
        out.add((u - d) % n)
    return out


def solve(n, k, kind, offsets):
    """Returns a sorted code of size <= k, or None."""
    var = lambda v: v + 1
    clauses = [[var(v) for v in closed(n, offsets, u)] for u in range(n)]
    if kind != "dominating":
        for u in range(n):
            for v in range(u + 1, n):
                diff = closed(n, offsets, u) ^ closed(n, offsets, v)
                clause = [var(w) for w in diff]
                if kind == "locating":
                    clause += [var(u), var(v)]
                if not clause:
                    return None
                clauses.append(clause)
    card = CardEnc.atmost(lits=list(range(1, n + 1)), bound=k, top_id=n, encoding=EncType.seqcounter)
    clauses.extend(card.clauses)
    clauses.append([var(0)])  # any nonempty code can be rotated to contain 0
    with Cadical153(bootstrap_with=clauses) as s:
        if not s.solve():
            return None
        return sorted(l - 1 for l in s.get_model() if 0 < l <= n)


def target(n, kind):
    return math.ceil(n / 3) if kind == "locating" else math.ceil(4 * n / 11)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", choices=["dominating", "locating", "identifying"], required=True)
    ap.add_argument("-n", type=int)
    ap.add_argument("-k", type=int)
    ap.add_argument("--range", nargs=2, type=int, metavar=("FROM", "TO"))
    ap.add_argument("--target", action="store_true", help="use k = ceil(n/3) or ceil(4n/11)")
    ap.add_argument("--offsets", default="1,3")
    args = ap.parse_args()

    offsets = [int(x) for x in args.offsets.split(",")]
    orders = range(args.range[0], args.range[1] + 1) if args.range else [args.n]
    if None in orders or (args.k is None and not args.target):
        ap.error("need -n or --range, and -k or --target")

    found_any = False
    for n in orders:
        k = target(n, args.kind) if args.target else args.k
        code = solve(n, k, args.kind, offsets)
        found_any |= code is not None
        print(f"n={n} k={k} {args.kind}: " + ("none" if code is None else "exists " + ",".join(map(str, code))))
    return 0 if found_any else 1


if __name__ == "__main__":
    sys.exit(main())
