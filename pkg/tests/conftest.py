import networkx as nx
import pytest

import helpers


@pytest.fixture(scope="session")
def atlas_connected():
    """Connected graphs with 1..7 vertices, one per isomorphism class."""
    return helpers.connected_atlas()


@pytest.fixture(scope="session")
def atlas_all_small():
    """Every graph with 1..6 vertices (disconnected included)."""
    out = {n: [] for n in range(1, 7)}
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= 6:
            out[G.number_of_nodes()].append(helpers.nx_to_graph(G))
    return out
