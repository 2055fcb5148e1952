"""Shared fixtures: standing graphs and the worked 8-cell heap example."""

import pytest

from heappieces import build_graph, linear_window


@pytest.fixture(scope="session")
def path3():
    return build_graph("abc", [("a", "b"), ("b", "c")])


@pytest.fixture(scope="session")
def path5():
    return build_graph("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")])


@pytest.fixture(scope="session")
def k3():
    return build_graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture(scope="session")
def edgeless3():
    return build_graph("abc", [])


@pytest.fixture(scope="session")
def cycle4():
    return build_graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture(scope="session")
def cube():
    """Outer square abcd, inner square efgh, one spoke per corner."""
    return build_graph(
        "abcdefgh",
        [
            ("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"),
            ("e", "f"), ("f", "g"), ("g", "h"), ("h", "e"),
            ("a", "e"), ("b", "f"), ("c", "g"), ("d", "h"),
        ],
    )


@pytest.fixture(scope="session")
def window4():
    return linear_window(4)


def to_word(g, text):
    """Label string -> vertex index tuple (single-character labels)."""
    return tuple(g.index(ch) for ch in text)
