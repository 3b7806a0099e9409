#!/usr/bin/env python3
"""Regenerate the bundled graph corpus under corpus/."""
import json
import os
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "corpus")


class G:
    def __init__(self):
        self.v, self.e = [], []

    def add(self, *names):
        for n in names:
            if n not in self.v:
                self.v.append(n)

    def edge(self, a, b):
        self.add(a, b)
        self.e.append((a, b))

    def cycle(self, names):
        self.add(*names)
        for i in range(len(names)):
            self.edge(names[i], names[(i + 1) % len(names)])

    def text(self, comment):
        out = ["# " + comment]
        out += ["v " + n for n in self.v]
        out += ["e %s %s" % e for e in self.e]
        return "\n".join(out) + "\n"


def ring(name, length=3):
    return [name] + ["%s%s" % (name, chr(ord("b") + i)) for i in range(length - 1)]


def o_k(k, legs=1, extra=None):
    g = G()
    g.add("x")
    for i in range(1, k + 1):
        n = "a%d" % i
        g.cycle(ring(n, (extra or {}).get(i, 3)))
        prev = "x"
        for j in range(legs - 1):
            m = "m%d_%d" % (i, j)
            g.edge(prev, m)
            prev = m
        g.edge(prev, n)
    return g


def o4prime(n):
    g = G()
    g.add("x1", "y1")
    for i in range(1, 5):
        g.cycle(ring("a%d" % i))
    g.edge("x1", "a1")
    g.edge("x1", "a2")
    g.edge("y1", "a3")
    g.edge("y1", "a4")
    prev = "x1"
    for i in range(n):
        name = "a%d" % (5 + i)
        g.cycle(ring(name))
        g.edge(prev, name)
        prev = name
    g.edge(prev, "y1")
    return g


def chain(lengths):
    g = G()
    for i, l in enumerate(lengths, 1):
        g.cycle(ring("a%d" % i, l))
    for i in range(1, len(lengths)):
        g.edge("a%dc" % i if lengths[i - 1] >= 3 else "a%d" % i, "a%d" % (i + 1))
    return g


def tjoint():
    g = G()
    g.cycle(ring("a1"))
    for i, hub in enumerate(["a1", "a1b", "a1c"], 2):
        g.cycle(ring("a%d" % i))
        g.edge(hub, "a%d" % i)
    return g


def double_star():
    g = G()
    g.add("x", "y")
    for i in (1, 2):
        g.cycle(ring("a%d" % i))
        g.edge("x", "a%d" % i)
    for i in (3, 4, 5):
        g.cycle(ring("a%d" % i))
        g.edge("y", "a%d" % i)
    g.edge("x", "y")
    return g


def path(n):
    g = G()
    names = [chr(ord("a") + i) for i in range(n)]
    g.add(*names)
    for i in range(n - 1):
        g.edge(names[i], names[i + 1])
    return g


def cyc(n, prefix="v"):
    g = G()
    g.cycle(["%s%d" % (prefix, i) for i in range(n)])
    return g


def star(k):
    g = G()
    g.add("c")
    for i in range(k):
        g.edge("c", "l%d" % i)
    return g


def kmn(m, n):
    g = G()
    a = ["p%d" % i for i in range(m)]
    b = ["q%d" % i for i in range(n)]
    g.add(*a, *b)
    for x in a:
        for y in b:
            g.edge(x, y)
    return g


def petersen(prefix="o", inner="i"):
    g = G()
    for i in range(5):
        g.add("%s%d" % (prefix, i))
    for i in range(5):
        g.add("%s%d" % (inner, i))
    for i in range(5):
        g.edge("%s%d" % (prefix, i), "%s%d" % (prefix, (i + 1) % 5))
        g.edge("%s%d" % (prefix, i), "%s%d" % (inner, i))
        g.edge("%s%d" % (inner, i), "%s%d" % (inner, (i + 2) % 5))
    return g


def bipartite_double(h):
    g = G()
    for n in h.v:
        g.add(n + "+")
    for n in h.v:
        g.add(n + "-")
    for a, b in h.e:
        g.edge(a + "+", b + "-")
        g.edge(b + "+", a + "-")
    return g


def cube():
    g = G()
    outer = ["p0", "p1", "p2", "p3"]
    inner = ["q0", "q1", "q2", "q3"]
    g.cycle(outer)
    g.cycle(inner)
    for a, b in zip(outer, inner):
        g.edge(a, b)
    return g


def main():
    entries = []

    def emit(sub, name, g, family, comment, **tags):
        d = os.path.join(ROOT, sub)
        os.makedirs(d, exist_ok=True)
        with open(os.path.join(d, name + ".graph"), "w") as f:
            f.write(g.text(comment))
        entry = {"file": "%s/%s.graph" % (sub, name), "name": name, "family": family}
        entry.update(tags)
        entries.append(entry)

    cacti = [
        ("o3", o_k(3), "star with a triangle on each of 3 leaves", {"shape": "O", "k": 3}),
        ("o4", o_k(4), "star with a triangle on each of 4 leaves", {"shape": "O", "k": 4}),
        ("o5", o_k(5), "star with a triangle on each of 5 leaves", {"shape": "O", "k": 5}),
        ("o6", o_k(6), "star with a triangle on each of 6 leaves", {"shape": "O", "k": 6}),
        ("o7", o_k(7), "star with a triangle on each of 7 leaves", {"shape": "O", "k": 7}),
        ("o4prime", o4prime(0), "two centres joined by an edge, two triangles each", {"shape": "Oprime", "n": 0}),
        ("o4prime1", o4prime(1), "o4prime with one triangle on the middle path", {"shape": "Oprime", "n": 1}),
        ("o4prime2", o4prime(2), "o4prime with two triangles on the middle path", {"shape": "Oprime", "n": 2}),
        ("spider3", o_k(3, legs=2), "o3 with subdivided legs", {"shape": "O", "k": 3}),
        ("o3pent", o_k(3, extra={3: 5}), "o3 with one pentagon", {"shape": "O", "k": 3}),
        ("tjoint", tjoint(), "triangle with a triangle hanging off each corner", {}),
        ("dstar", double_star(), "two centres with 2 and 3 triangles", {}),
        ("tsq", chain([3, 4, 3]), "triangle, square, triangle in a row", {"shape": "S"}),
    ]
    for n in range(2, 8):
        cacti.append(("chain%d" % n, chain([3] * n), "%d triangles in a row" % n, {"shape": "S"}))
    o3p = o_k(3)
    o3p.edge("x", "z")
    cacti.append(("o3pendant", o3p, "o3 with a pendant vertex on the centre", {}))
    for name, g, comment, tags in cacti:
        emit("cacti", name, g, "cactus", comment, **tags)

    raags = [
        ("p4", path(4), "path on 4 vertices"),
        ("p5", path(5), "path on 5 vertices"),
        ("p6", path(6), "path on 6 vertices"),
        ("k13", star(3), "star with 3 leaves"),
        ("c4", cyc(4), "4-cycle"),
        ("c5", cyc(5), "5-cycle"),
        ("c6", cyc(6), "6-cycle"),
        ("c7", cyc(7), "7-cycle"),
        ("petersen", petersen(), "Petersen graph"),
        ("k23", kmn(2, 3), "complete bipartite K2,3"),
    ]
    for name, g, comment in raags:
        emit("raags", name, g, "raag", comment)

    c5r = G()
    c5r.cycle(["w3", "w0", "w2", "w4", "w1"])
    finite = [
        ("c5", cyc(5), "5-cycle"),
        ("c5_relabel", c5r, "5-cycle with another labelling"),
        ("c6", cyc(6), "6-cycle"),
        ("c7", cyc(7), "7-cycle"),
        ("petersen", petersen(), "Petersen graph"),
        ("desargues", bipartite_double(petersen()), "bipartite double of the Petersen graph"),
    ]
    for name, g, comment in finite:
        emit("finite_out", name, g, "raag", comment)

    t3 = star(3)
    k3 = G()
    k3.cycle(["a", "b", "c"])
    k4 = G()
    for a in "abcd":
        for b in "abcd":
            if a < b:
                k4.edge(a, b)
    single = G()
    single.edge("a", "b")
    p4pt = path(4)
    p4pt.add("z")
    misc = [
        ("t3", t3, "tripod"),
        ("k3", k3, "triangle"),
        ("k4", k4, "complete graph on 4 vertices"),
        ("edge", single, "single edge"),
        ("cube", cube(), "cube graph: two nested squares joined by rungs"),
        ("p4_plus_point", p4pt, "path on 4 vertices plus an isolated vertex"),
    ]
    for name, g, comment in misc:
        emit("misc", name, g, "misc", comment)

    with open(os.path.join(ROOT, "manifest.json"), "w") as f:
        json.dump({"graphs": entries}, f, indent=2)
        f.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
