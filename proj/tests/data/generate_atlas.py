#!/usr/bin/env python3
"""Write connected_upto7.g6: every connected graph with 1..7 vertices.

Uses the networkx graph atlas (all graphs up to 7 vertices, one per
isomorphism class). Rerun only if the file needs regenerating.
"""
import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main() -> None:
    lines = []
    for g in graph_atlas_g():
        if g.number_of_nodes() == 0 or not nx.is_connected(g):
            continue
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    with open("connected_upto7.g6", "w", encoding="ascii") as out:
        out.write("\n".join(lines) + "\n")
    print(len(lines), "graphs")


if __name__ == "__main__":
    main()
