"""Enumerate every S-ring over S_n (n <= 4) and write them as label lists.

Every S-ring is the join of the closures of its basic sets, so it suffices to
close each single subset X of S_n \\ {e} (up to conjugation, inversion and
complement, which give the same closure) and then close that family under
joins.  About 15 minutes for n = 4 on one core.

    python3 tests/golden/make_srings.py 4 tests/golden/s4_srings.json
"""

from __future__ import annotations

import json
import sys

import numpy as np

from schurring.perm import ElementSet, symmetric_group
from schurring.sring import SRing, closure, conjugates_of_sring


def subset_classes(n: int) -> np.ndarray:
    """Bitmasks over the non-identity ranks, one per symmetry class."""
    G = symmetric_group(n)
    if G.identity != 0:
        raise RuntimeError("expected the identity to have rank 0")
    k = G.order - 1
    full = np.uint32((1 << k) - 1)
    masks = np.arange(1 << k, dtype=np.uint32)
    canon = masks.copy()
    for h in range(G.order):
        conj = G.mul[G.mul[h], G.inv[h]]
        for f in (conj, G.inv[conj]):
            img = np.zeros_like(masks)
            for r in range(1, G.order):
                img |= ((masks >> np.uint32(r - 1)) & np.uint32(1)) << np.uint32(f[r] - 1)
            np.minimum(canon, img, out=canon)
            np.minimum(canon, full ^ img, out=canon)
    return np.flatnonzero((canon == masks) & (masks != 0) & (masks != full))


def _key(S: SRing) -> bytes:
    return min(T.labels.tobytes() for T in conjugates_of_sring(S))


def all_srings(n: int, log=print) -> list[SRing]:
    G = symmetric_group(n)
    single = {}
    for x in subset_classes(n):
        X = ElementSet(n, [r for r in range(1, G.order) if int(x) >> (r - 1) & 1])
        S = closure([X], degree=n)
        single.setdefault(S.labels.tobytes(), S)
    gens = {T.labels.tobytes(): T for S in single.values() for T in conjugates_of_sring(S)}
    gens = list(gens.values())
    log(f"{len(gens)} rings generated by one set", flush=True)
    trivial = SRing(n, np.array([0 if r == G.identity else 1 for r in range(G.order)]))
    found = {_key(S): S for S in [trivial, *gens]}
    frontier = list(found.values())
    while frontier:
        new = []
        for R in frontier:
            for p in gens:
                if R.refines(p):
                    continue
                J = closure([R, p])
                k = _key(J)
                if k not in found:
                    found[k] = J
                    new.append(J)
        frontier = new
        log(f"{len(found)} classes, {len(new)} new", flush=True)
    every = {T.labels.tobytes(): T for S in found.values() for T in conjugates_of_sring(S)}
    return [every[k] for k in sorted(every)]


def main() -> None:
    n, path = int(sys.argv[1]), sys.argv[2]
    rings = all_srings(n)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"degree": n, "count": len(rings), "labels": [R.labels.tolist() for R in rings]}, fh)
        fh.write("\n")
    print(f"{len(rings)} S-rings over S{n}")


if __name__ == "__main__":
    main()
