#!/usr/bin/env python3
"""Writes the bundled named-graph edge lists into crates/core/data/graphs/.

Only graphs with a reproducible construction are generated here:

  tutte                       networkx.tutte_graph()
  small-rhombicuboctahedron   vertices = permutations of (+-1, +-1, +-(1+sqrt 2)),
                              edges join vertices at Euclidean distance 2
  deltoidal-icositetrahedron  dual of the above: 6 axis vertices, 8 cube-corner
                              vertices, 12 edge-midpoint vertices; kites join each
                              axis/corner vertex to the midpoints it touches

thomassen-94, thomassen-105 and wiener-araya have no machine-readable source
that can be regenerated here; drop `<name>.txt` edge lists into the data
directory (or $HFPROD_GRAPH_DIR) to provision them.
"""
import itertools
import math
import os
import sys

import networkx as nx

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data", "graphs")


def write(name, g, source):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    path = os.path.join(OUT, name + ".txt")
    with open(path, "w") as fh:
        fh.write(f"# {name}: {g.number_of_nodes()} vertices, {len(edges)} edges\n")
        fh.write(f"# source: {source}\n")
        fh.write(f"n {g.number_of_nodes()}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")
    degs = sorted(set(dict(g.degree()).values()))
    print(name, g.number_of_nodes(), len(edges), "degrees", degs,
          "planar", nx.check_planarity(g)[0], "connected", nx.is_connected(g))


def rhombicuboctahedron():
    s = 1 + math.sqrt(2)
    pts = set()
    for base in set(itertools.permutations((1.0, 1.0, s))):
        for signs in itertools.product((1, -1), repeat=3):
            pts.add(tuple(round(b * t, 9) for b, t in zip(base, signs)))
    pts = sorted(pts)
    g = nx.Graph()
    g.add_nodes_from(range(len(pts)))
    for i, j in itertools.combinations(range(len(pts)), 2):
        if abs(math.dist(pts[i], pts[j]) - 2.0) < 1e-6:
            g.add_edge(i, j)
    return g


def deltoidal_icositetrahedron():
    axes = [v for v in itertools.product((-1, 0, 1), repeat=3) if sum(map(abs, v)) == 1]
    corners = [v for v in itertools.product((-1, 1), repeat=3)]
    mids = [v for v in itertools.product((-1, 0, 1), repeat=3) if sum(map(abs, v)) == 2]
    labels = {v: i for i, v in enumerate(sorted(axes) + sorted(corners) + sorted(mids))}
    g = nx.Graph()
    g.add_nodes_from(labels.values())
    for m in mids:
        for a in axes:
            # axis vertex touches the midpoints sharing its nonzero coordinate
            if all(x == 0 or x == y for x, y in zip(a, m)):
                g.add_edge(labels[a], labels[m])
        for c in corners:
            if all(y == 0 or x == y for x, y in zip(c, m)):
                g.add_edge(labels[c], labels[m])
    return g


def main():
    os.makedirs(OUT, exist_ok=True)
    write("tutte", nx.tutte_graph(), "networkx.tutte_graph()")
    write("small-rhombicuboctahedron", rhombicuboctahedron(),
          "coordinates: permutations of (+-1, +-1, +-(1+sqrt 2)), unit-2 edges")
    write("deltoidal-icositetrahedron", deltoidal_icositetrahedron(),
          "kite faces of the dual of the small rhombicuboctahedron")


if __name__ == "__main__":
    sys.exit(main())
