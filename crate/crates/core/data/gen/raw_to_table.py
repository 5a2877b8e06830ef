#!/usr/bin/env python3
"""Convert GAP output from `gen_gap_input.py` into a raw character file.

Class representatives are turned into words in the simple reflections by
descent. Class and irrep names are provisional (`c<k>`, `X<k>`); the
`cherednik import-raw` command assigns the final names.
"""
import re
import sys
from fractions import Fraction as F


def parse_gap(path):
    text = open(path).read()
    order = int(re.search(r"order (\d+)", text).group(1))
    classes, irreps = [], []
    for m in re.finditer(r"class (\d+) \[([^\]]*)\]", text):
        perm = [int(x) for x in m.group(2).replace("\\\n", "").split(",")]
        classes.append((int(m.group(1)), perm))
    for m in re.finditer(r"irrep \[([^\]]*)\]", text):
        irreps.append([int(x) for x in m.group(1).replace("\\\n", "").split(",")])
    return order, classes, irreps


def load_roots(path):
    roots, simple = [], None
    for line in open(path):
        if line.startswith("simple"):
            simple = [int(x) - 1 for x in line.split()[1:]]
        else:
            roots.append([F(x) for x in line.split()])
    return roots, simple


def solve_height_vector(roots, simple):
    # v with <v, alpha_i> = 1, v in the span of the simple roots.
    k = len(simple)
    a = [[sum(x * y for x, y in zip(roots[simple[i]], roots[simple[j]])) for j in range(k)] + [F(1)]
         for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        for r in range(k):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    coeff = [a[i][k] / a[i][i] for i in range(k)]
    dim = len(roots[0])
    return [sum(coeff[i] * roots[simple[i]][d] for i in range(k)) for d in range(dim)]


def main():
    kind, gap_out, roots_path = sys.argv[1:4]
    order, classes, irreps = parse_gap(gap_out)
    roots, simple = load_roots(roots_path)
    height = solve_height_vector(roots, simple)
    positive = [sum(x * y for x, y in zip(r, height)) > 0 for r in roots]
    n = len(roots)
    refl = []
    for s in simple:
        a = roots[s]
        aa = sum(x * x for x in a)
        lookup = {tuple(r): i for i, r in enumerate(roots)}
        img = []
        for r in roots:
            c = 2 * sum(x * y for x, y in zip(r, a)) / aa
            img.append(lookup[tuple(x - c * y for x, y in zip(r, a))])
        refl.append(img)
    print(f"group {kind} order {order}")
    for k, (size, perm) in enumerate(classes):
        p = [x - 1 for x in perm]
        word = []
        while True:
            desc = next((i for i, s in enumerate(simple) if not positive[p[s]]), None)
            if desc is None:
                break
            p = [p[refl[desc][j]] for j in range(n)]
            word.append(desc + 1)
        assert all(p[j] == j for j in range(n))
        word.reverse()
        print(f"class c{k + 1} size {size} rep {' '.join(map(str, word))}".rstrip())
    for k, vals in enumerate(irreps):
        print(f"irrep X{k + 1} dim {vals[0]} : {' '.join(map(str, vals))}")


if __name__ == "__main__":
    main()
