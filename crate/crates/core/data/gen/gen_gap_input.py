#!/usr/bin/env python3
"""Emit a GAP script that computes the character table of W(E7) or W(E8).

The group is built as a permutation group on the root system, in the same
coordinates the library uses. GAP prints one class per line (size and the
permutation images of a representative) and one irreducible character per
line; `raw_to_table.py` turns that into the character-file format.
"""
import sys
from fractions import Fraction as F

HALF = F(1, 2)


def simple_roots(kind):
    a1 = [HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF]
    e = lambda i: [F(int(k == i)) for k in range(8)]
    add = lambda u, v: [x + y for x, y in zip(u, v)]
    neg = lambda u: [-x for x in u]
    roots = [a1, add(e(0), e(1)), add(neg(e(0)), e(1))]
    for k in range(1, {"E6": 4, "E7": 5, "E8": 6}[kind]):
        roots.append(add(neg(e(k)), e(k + 1)))
    return roots


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def reflect(v, a):
    c = 2 * dot(v, a) / dot(a, a)
    return tuple(x - c * y for x, y in zip(v, a))


def closure(simple):
    seen = {tuple(s) for s in simple}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                w = reflect(v, a)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def main():
    kind = sys.argv[1]
    simple = simple_roots(kind)
    roots = closure(simple)
    index = {r: i + 1 for i, r in enumerate(roots)}
    gens = []
    for a in simple:
        gens.append([index[reflect(r, a)] for r in roots])
    print(f"# {kind}: {len(roots)} roots")
    print("gens := [" + ",\n".join("PermList([" + ",".join(map(str, g)) + "])" for g in gens) + "];;")
    print("W := Group(gens);;")
    print('Print("order ", Size(W), "\\n");')
    print("tbl := CharacterTable(W);;")
    print("cls := ConjugacyClasses(tbl);;")
    print("irr := Irr(tbl);;")
    print(f"n := {len(roots)};;")
    print("for c in cls do")
    print('  Print("class ", Size(c), " ", List([1..n], i -> i^Representative(c)), "\\n");')
    print("od;")
    print("for x in irr do")
    print('  Print("irrep ", ValuesOfClassFunction(x), "\\n");')
    print("od;")
    print("QUIT;")
    # Roots are emitted alongside so the converter can recover words.
    with open(f"{kind}_roots.txt", "w") as fh:
        for r in roots:
            fh.write(" ".join(str(x) for x in r) + "\n")
        fh.write("simple " + " ".join(str(index[tuple(a)]) for a in simple) + "\n")


if __name__ == "__main__":
    main()
