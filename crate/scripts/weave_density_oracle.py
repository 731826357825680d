#!/usr/bin/env python3
"""Independent determinant oracle for the closed alternating braid
(s1 s2^-1 s3 ...)^n on m strands (the D closure of the weaving tangle W_{m,n}).

The Tait graph is read straight off the braid columns: the strip between
strand positions i and i+1 is cut by the column-i crossings into n pieces;
the strip left of strand 1 and right of strand m are single regions.
Spanning trees are counted with exact Fraction Gaussian elimination on a
reduced Laplacian, independently of the Rust engine.
"""
from fractions import Fraction
import math
import sys

V8 = 3.663862376708876


def tait_edges(m, n):
    def piece(col, t):
        if col == 0:
            return ("inner",)
        if col == m:
            return ("outer",)
        return ("p", col, t % n)

    edges = []
    for t in range(n):
        for i in range(1, m):
            if i % 2 == 0:
                edges.append((piece(i, t - 1), piece(i, t)))
            else:
                edges.append((piece(i - 1, t), piece(i + 1, t - 1)))
    return edges


def spanning_trees(edges):
    verts = sorted({v for e in edges for v in e})
    index = {v: k for k, v in enumerate(verts)}
    size = len(verts) - 1
    lap = [[Fraction(0)] * size for _ in range(size)]
    for a, b in edges:
        ia, ib = index[a], index[b]
        if ia == ib:
            continue
        for x, y in ((ia, ib), (ib, ia)):
            if x < size:
                lap[x][x] += 1
                if y < size:
                    lap[x][y] -= 1
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if lap[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            lap[col], lap[piv] = lap[piv], lap[col]
            det = -det
        det *= lap[col][col]
        for r in range(col + 1, size):
            f = lap[r][col] / lap[col][col]
            if f:
                for c in range(col, size):
                    lap[r][c] -= f * lap[col][c]
    assert det.denominator == 1
    return abs(det.numerator)


def main():
    assert spanning_trees(tait_edges(2, 3)) == 3
    assert spanning_trees(tait_edges(3, 2)) == 5
    k_max = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    print("k,crossings,det,det_density,gap_to_v8")
    for k in range(3, k_max + 1):
        det = spanning_trees(tait_edges(k, k))
        c = k * (k - 1)
        dens = 2 * math.pi * math.log(det) / c
        print(f"{k},{c},{det},{dens:.15f},{V8 - dens:.15f}")


if __name__ == "__main__":
    main()
