"""Programmatic builders for the quivers used throughout tests and demos."""

from .quiver import Quiver


def a_n(n: int, orientation: str = "linear") -> Quiver:
    """Type A_n quiver on vertices 1..n.

    ``linear``: n -> n-1 -> ... -> 1.  ``zigzag``: arrows alternate, with
    every even vertex a source (2 -> 1, 2 -> 3, 4 -> 3, ...).
    """
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    if orientation == "linear":
        for i in range(n, 1, -1):
            arrows.append((f"a{i}", str(i), str(i - 1)))
    elif orientation == "zigzag":
        for i in range(1, n):
            if i % 2 == 1:
                arrows.append((f"a{i}", str(i + 1), str(i)))
            else:
                arrows.append((f"a{i}", str(i), str(i + 1)))
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return Quiver(vertices, arrows)


def d4_subspace() -> Quiver:
    """The D4 quiver with three arrows into the central vertex 1."""
    return Quiver(
        ["1", "2", "3", "4"],
        [("al", "2", "1"), ("be", "3", "1"), ("ga", "4", "1")],
    )


def kronecker() -> Quiver:
    """Two parallel arrows 2 -> 1; the smallest representation-infinite case."""
    return Quiver(["1", "2"], [("a", "2", "1"), ("b", "2", "1")])
