import pytest

from hamnet.graph_core import Graph


def make(n, edges):
    return Graph(n, edges)


# a-b-c-d as 0-1-2-3
P4 = make(4, [(0, 1), (1, 2), (2, 3)])
P5 = make(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
K3 = make(3, [(0, 1), (1, 2), (0, 2)])
K4 = make(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
C4 = make(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
# K4 minus the edge 0-3; the central edge is 1-2
DIAMOND = make(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
# triangles {0,1,2} and {2,3,4} sharing 2
BOWTIE = make(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
CLAW = make(4, [(0, 1), (0, 2), (0, 3)])
# triangle 0,1,2 with pendants 3,4,5
NET = make(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
# K4 on {0,1,2,3} (c=0, u=1, v=2, w=3) plus pendant s=4 at c
K4_PENDANT = make(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
TWO_EDGES = make(4, [(0, 1), (2, 3)])


@pytest.fixture
def named():
    return {
        "P4": P4, "P5": P5, "K3": K3, "K4": K4, "C4": C4, "diamond": DIAMOND,
        "bowtie": BOWTIE, "claw": CLAW, "net": NET, "K4+pendant": K4_PENDANT,
    }
