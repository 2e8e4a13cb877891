#!/usr/bin/env python3
"""Writes the corpus documents next to this script."""

import itertools
import json
from pathlib import Path

HERE = Path(__file__).resolve().parent


def cyclic(k):
    return {"size": k, "table": [(x + y) % k for x in range(k) for y in range(k)], "identity": 0}


def perms(k):
    return list(itertools.permutations(range(k)))


def symmetric(k):
    ps = perms(k)
    index = {p: i for i, p in enumerate(ps)}
    table = [index[tuple(p[q[i]] for i in range(k))] for p in ps for q in ps]
    names = ["[" + ",".join(map(str, p)) + "]" for p in ps]
    return {"size": len(ps), "table": table, "identity": 0, "names": names}


def product(a, b):
    sa, sb = a["size"], b["size"]
    ta, tb = a["table"], b["table"]
    table = []
    for x in range(sa * sb):
        for y in range(sa * sb):
            xa, xb, ya, yb = x // sb, x % sb, y // sb, y % sb
            table.append(ta[xa * sa + ya] * sb + tb[xb * sb + yb])
    return {"size": sa * sb, "table": table, "identity": a["identity"] * sb + b["identity"]}


def mul(g, x, y):
    return g["table"][x * g["size"] + y]


def inverse(g, x):
    return next(y for y in range(g["size"]) if mul(g, x, y) == g["identity"])


def conjugation(g, by):
    inv = inverse(g, by)
    return [mul(g, mul(g, by, x), inv) for x in range(g["size"])]


def presentation(n, base, theta, b):
    return {"n": n, "base": base, "theta": theta, "b": b}


def level(n, base, theta, b):
    return {"arity": n, "presentation": presentation(n, base, theta, b)}


def derived_table(n, base, theta, b):
    s = base["size"]
    powers = [list(range(s))]
    for _ in range(n - 1):
        powers.append([theta[v] for v in powers[-1]])
    table = []
    for xs in itertools.product(range(s), repeat=n):
        acc = base["identity"]
        for k, x in enumerate(xs):
            acc = mul(base, acc, powers[k][x])
        table.append(mul(base, acc, b))
    return table


def group_doc(n, base, theta, b, with_presentation=False):
    doc = {"arity": n, "size": base["size"], "table": derived_table(n, base, theta, b)}
    if with_presentation:
        doc["presentation"] = presentation(n, base, theta, b)
    return doc


def system(levels, order, maps, top):
    return {"levels": levels, "order": order, "maps": maps, "top": top}


def mod_tower(n, thetas, bs):
    z2, z4, z8 = cyclic(2), cyclic(4), cyclic(8)
    return system(
        {
            "Z2": level(n, z2, thetas[0], bs[0]),
            "Z4": level(n, z4, thetas[1], bs[1]),
            "Z8": level(n, z8, thetas[2], bs[2]),
        },
        [["Z4", "Z2"], ["Z8", "Z4"]],
        {"Z4>Z2": [x % 2 for x in range(4)], "Z8>Z4": [x % 4 for x in range(8)]},
        "Z8",
    )


def ident(k):
    return list(range(k))


def neg(k):
    return [(-x) % k for x in range(k)]


def sign(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]) % 2


def s3_tower(n):
    s3 = symmetric(3)
    t = perms(3).index((1, 0, 2))
    return system(
        {
            "Z2": level(n, cyclic(2), ident(2), 0),
            "S3": level(n, s3, conjugation(s3, t), 0),
        },
        [["S3", "Z2"]],
        {"S3>Z2": [sign(p) for p in perms(3)]},
        "S3",
    )


def diamond():
    s3, z2 = symmetric(3), cyclic(2)
    top = product(s3, z2)
    t = perms(3).index((1, 0, 2))
    theta_top = [conjugation(s3, t)[x // 2] * 2 + x % 2 for x in range(12)]
    signs = [sign(p) for p in perms(3)]
    return system(
        {
            "Z2": level(3, z2, ident(2), 0),
            "S3": level(3, s3, conjugation(s3, t), 0),
            "Z2'": level(3, z2, ident(2), 0),
            "S3xZ2": level(3, top, theta_top, 0),
        },
        [["S3", "Z2"], ["Z2'", "Z2"], ["S3xZ2", "S3"], ["S3xZ2", "Z2'"]],
        {
            "S3>Z2": signs,
            "Z2'>Z2": [0, 1],
            "S3xZ2>S3": [x // 2 for x in range(12)],
            "S3xZ2>Z2'": [signs[x // 2] for x in range(12)],
        },
        "S3xZ2",
    )


def s4_tower():
    s4, s3 = symmetric(4), symmetric(3)
    p4, p3 = perms(4), perms(3)
    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]

    def act(p, m):
        blocks = sorted(tuple(sorted((p[a], p[b]))) for a, b in m)
        return pairings.index(tuple(blocks))

    to_s3 = [p3.index(tuple(act(p, m) for m in pairings)) for p in p4]
    t4 = p4.index((1, 0, 2, 3))
    t3 = to_s3[t4]
    return system(
        {
            "Z2": level(3, cyclic(2), ident(2), 0),
            "S3": level(3, s3, conjugation(s3, t3), 0),
            "S4": level(3, s4, conjugation(s4, t4), 0),
        },
        [["S3", "Z2"], ["S4", "S3"]],
        {"S3>Z2": [sign(p) for p in p3], "S4>S3": to_s3},
        "S4",
    )


def z3_tower():
    return system(
        {
            "Z3": level(3, cyclic(3), neg(3), 0),
            "Z9": level(3, cyclic(9), neg(9), 0),
        },
        [["Z9", "Z3"]],
        {"Z9>Z3": [x % 3 for x in range(9)]},
        "Z9",
    )


def z3_deep():
    levels = {f"Z{3 ** k}": level(3, cyclic(3 ** k), neg(3 ** k), 0) for k in (1, 2, 3)}
    return system(
        levels,
        [["Z9", "Z3"], ["Z27", "Z9"]],
        {"Z9>Z3": [x % 3 for x in range(9)], "Z27>Z9": [x % 9 for x in range(27)]},
        "Z27",
    )


def write(rel, doc):
    path = HERE / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n")


def main():
    z2, z3, z4 = cyclic(2), cyclic(3), cyclic(4)
    s3 = symmetric(3)

    write("groups/e1.json", group_doc(3, z2, ident(2), 0))
    write("groups/e2.json", group_doc(3, z4, ident(4), 2))
    write("groups/e3.json", group_doc(3, z3, [0, 2, 1], 0))
    write("groups/e2_with_presentation.json", group_doc(3, z4, ident(4), 2, True))
    write("presentations/e1.json", presentation(3, z2, ident(2), 0))
    write("presentations/e2.json", presentation(3, z4, ident(4), 2))
    write("presentations/e3.json", presentation(3, z3, [0, 2, 1], 0))
    write("presentations/s3_n3.json",
          presentation(3, s3, conjugation(s3, perms(3).index((1, 0, 2))), 0))
    write("presentations/z3_n4.json", presentation(4, z3, ident(3), 1))

    write("systems/s1.json", mod_tower(3, [ident(2), ident(4), ident(8)], [0, 0, 0]))
    write("systems/n2_cyclic.json", mod_tower(2, [ident(2), ident(4), ident(8)], [0, 0, 0]))
    write("systems/n4_cyclic.json", mod_tower(4, [ident(2), ident(4), ident(8)], [1, 1, 1]))
    write("systems/n5_cyclic.json", mod_tower(5, [neg(2), neg(4), neg(8)], [0, 0, 4]))
    write("systems/s3_n3.json", s3_tower(3))
    write("systems/s3_n5.json", s3_tower(5))
    write("systems/diamond.json", diamond())
    write("systems/z3_tower.json", z3_tower())
    write("systems/z3_deep.json", z3_deep())
    write("systems/z3_n4.json", system({"Z3": level(4, z3, ident(3), 1)}, [], {}, "Z3"))
    write("systems/s4_tower.json", s4_tower())

    write("cylinders/s1_z4_1.json", {"level": "Z4", "subset": [1]})

    bad = mod_tower(3, [ident(2), ident(4), ident(8)], [0, 0, 0])
    bad["order"].append(["Z8", "Z2"])
    bad["maps"]["Z8>Z2"] = [1 if x == 3 else 0 for x in range(8)]
    write("invalid/s1_broken_cocycle.json", bad)
    write("invalid/theta_moves_b.json", presentation(3, z4, [(3 * x) % 4 for x in range(4)], 1))
    write("invalid/theta_not_conjugation.json", presentation(3, s3, ident(6), perms(3).index((1, 2, 0))))
    latin = dict(z3)
    latin["table"] = [0, 1, 2, 1, 1, 0, 2, 0, 1]
    write("invalid/non_latin_base.json", presentation(3, latin, ident(3), 0))
    write("invalid/cylinder_out_of_range.json", {"level": "Z4", "subset": [9]})
    write("invalid/missing_table.json", {"arity": 3, "size": 2})
    (HERE / "invalid/truncated.json").write_text("{\"arity\": 3, \"table\": [0, 1\n")


if __name__ == "__main__":
    main()
