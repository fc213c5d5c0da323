#!/usr/bin/env python3
"""Regenerates the algebra files under data/algebras/.

Each file is a graded Frobenius algebra model of H*(X; Q) in the symprod
JSON format. Products list one orientation per unordered pair.
"""
import itertools
import json
import pathlib
import sys


def write(path, name, complex_dim, basis, unit, counit, products):
    doc = {
        "name": name,
        "complex_dim": complex_dim,
        "basis": [{"id": i, "degree": d} for i, d in basis],
        "unit": unit,
        "counit": counit,
        "products": products,
    }
    path.write_text(json.dumps(doc, indent=1) + "\n")


def unit_products(basis, unit):
    return [[unit, b, b, "1"] for b, _ in basis]


def projective_space(k):
    """H*(CP^k) = Q[h]/h^(k+1); complex dimension k."""
    basis = [("1", 0)] + [(f"h{p}" if p > 1 else "h", 2 * p) for p in range(1, k + 1)]
    ids = [b for b, _ in basis]
    products = unit_products(basis, "1")
    for p in range(1, k + 1):
        for q in range(p, k + 1 - p + 1):
            if p + q <= k:
                products.append([ids[p], ids[q], ids[p + q], "1"])
    return basis, {ids[k]: "1"}, products


def k3_form():
    hyperbolic = [[0, 1], [1, 0]]
    edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
    e8 = [[0] * 8 for _ in range(8)]
    for i in range(8):
        e8[i][i] = -2
    for i, j in edges:
        e8[i][j] = e8[j][i] = 1
    blocks = [hyperbolic] * 3 + [e8] * 2
    size = sum(len(b) for b in blocks)
    form = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                form[offset + i][offset + j] = v
        offset += len(b)
    return form


def k3():
    form = k3_form()
    classes = [f"a{i + 1}" for i in range(22)]
    basis = [("1", 0)] + [(c, 2) for c in classes] + [("pt", 4)]
    products = unit_products(basis, "1")
    for i in range(22):
        for j in range(i, 22):
            if form[i][j]:
                products.append([classes[i], classes[j], "pt", str(form[i][j])])
    return basis, {"pt": "1"}, products


def abelian_surface():
    """Exterior algebra on four degree-1 generators (complex torus of dim 2)."""
    gens = [1, 2, 3, 4]
    subsets = [s for r in range(5) for s in itertools.combinations(gens, r)]
    name = lambda s: "1" if not s else "a" + "".join(map(str, s))
    basis = [(name(s), len(s)) for s in subsets]
    products = []
    for i, s in enumerate(subsets):
        for t in subsets[i:]:
            if set(s) & set(t):
                continue
            merged = list(s) + list(t)
            inversions = sum(1 for x, y in itertools.combinations(merged, 2) if x > y)
            sign = -1 if inversions % 2 else 1
            products.append([name(s), name(t), name(tuple(sorted(merged))), str(sign)])
    return basis, {"a1234": "1"}, products


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write(out / "a2.json", "A2", 2, [("1", 0), ("x", 4)], "1", {"x": "1"},
          [["1", "1", "1", "1"], ["1", "x", "x", "1"]])
    for filename, name, dim, model in [
        ("k3.json", "K3", 2, k3()),
        ("p2.json", "P2", 2, projective_space(2)),
        ("p4.json", "P4", 4, projective_space(4)),
        ("abelian_surface.json", "AbelianSurface", 2, abelian_surface()),
    ]:
        basis, counit, products = model
        write(out / filename, name, dim, basis, "1", counit, products)
    basis = [("1", 0), ("h1", 2), ("h2", 2), ("pt", 4)]
    write(out / "p1xp1.json", "P1xP1", 2, basis, "1", {"pt": "1"},
          unit_products(basis, "1") + [["h1", "h2", "pt", "1"]])

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data" / "algebras")
