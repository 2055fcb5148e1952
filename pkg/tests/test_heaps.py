"""Heap monoid: canonical form, product, duality, strictness, pyramids."""

from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from heappieces import (
    Heap,
    HeapError,
    canonical_word,
    colored_layers,
    dual,
    empty_heap,
    enumerate_heaps,
    equivalent,
    heap_from_json,
    heap_of_word,
    heap_to_json,
    is_pyramid,
    is_strict,
    product,
    push,
    pyramid_split,
    strict_skeleton,
)
from heappieces.heaps import expand_skeleton, is_strict_by_layers

from conftest import to_word


def word_strategy(g, max_len=8):
    return st.lists(
        st.integers(0, g.vertex_count - 1), max_size=max_len
    ).map(tuple)


def equivalence_class(g, word):
    """All words reachable by adjacent transpositions of commuting letters."""
    seen = {tuple(word)}
    queue = deque(seen)
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            u, v = w[i], w[i + 1]
            if u != v and not g.are_neighbors(u, v):
                swapped = w[:i] + (v, u) + w[i + 2 :]
                if swapped not in seen:
                    seen.add(swapped)
                    queue.append(swapped)
    return seen


class TestPush:
    def test_first_cell(self, window4):
        g, _ = window4
        h = push(empty_heap(g), g.index("0"))
        assert h.cells() == [(g.index("0"), 1)]

    def test_word_010(self, window4):
        g, _ = window4
        v0, v1 = g.index("0"), g.index("1")
        h = heap_of_word(g, [v0, v1, v0])
        assert h.cells() == [(v0, 1), (v1, 2), (v0, 3)]

    def test_commuting_letters_side_by_side(self, window4):
        g, _ = window4
        v0, v2 = g.index("0"), g.index("2")
        h = heap_of_word(g, [v0, v2])
        assert h.layers == ((min(v0, v2), max(v0, v2)),)

    def test_out_of_range(self, path3):
        with pytest.raises(Exception):
            push(empty_heap(path3), 7)


class TestHeapOfWord:
    def test_worked_example(self, cube):
        h = heap_of_word(cube, to_word(cube, "acbegeaf"))
        named = tuple(tuple(cube.labels[v] for v in l) for l in h.layers)
        assert named == (("a", "c"), ("b", "e", "g"), ("e",), ("a", "f"))

    def test_empty(self, cube):
        assert heap_of_word(cube, ()) == empty_heap(cube)

    def test_alternate_representative(self, cube):
        assert heap_of_word(cube, to_word(cube, "cgabeeaf")) == heap_of_word(
            cube, to_word(cube, "acbegeaf")
        )

    def test_canonical_word_round_trip(self, cube):
        h = heap_of_word(cube, to_word(cube, "acbegeaf"))
        assert canonical_word(h) == to_word(cube, "acbegeaf")
        assert heap_of_word(cube, canonical_word(h)) == h

    def test_single_cell_word(self, path3):
        h = heap_of_word(path3, (2,))
        assert canonical_word(h) == (2,)

    def test_empty_canonical_word(self, path3):
        assert canonical_word(empty_heap(path3)) == ()

    def test_canonical_fixed_point_exhaustive(self, path5):
        # every heap of size <= 8 is the heap of its canonical word; this is
        # the length-<=8 word round-trip statement, quotiented by the trace
        for h in enumerate_heaps(path5, 8):
            assert heap_of_word(path5, canonical_word(h)) == h

    @given(data=st.data())
    def test_theorem1_round_trip(self, path5, data):
        w = data.draw(word_strategy(path5, 8))
        h = heap_of_word(path5, w)
        assert heap_of_word(path5, canonical_word(h)) == h


class TestMonoid:
    def test_worked_product(self, cube):
        h = heap_of_word(cube, to_word(cube, "acbegeaf"))
        hc = product(h, heap_of_word(cube, to_word(cube, "c")))
        named = tuple(tuple(cube.labels[v] for v in l) for l in hc.layers)
        assert named == (("a", "c"), ("b", "e", "g"), ("c", "e"), ("a", "f"))

    def test_unit(self, path3):
        h = heap_of_word(path3, (0, 1, 2))
        assert product(h, empty_heap(path3)) == h
        assert product(empty_heap(path3), h) == h

    def test_noncommuting_order_matters(self, window4):
        g, _ = window4
        v0, v1 = g.index("0"), g.index("1")
        h01 = product(heap_of_word(g, (v0,)), heap_of_word(g, (v1,)))
        h10 = product(heap_of_word(g, (v1,)), heap_of_word(g, (v0,)))
        assert h01 != h10
        assert h01.cells() == [(v0, 1), (v1, 2)]
        assert h10.cells() == [(v1, 1), (v0, 2)]

    def test_graph_mismatch(self, path3, k3):
        with pytest.raises(HeapError):
            product(empty_heap(path3), empty_heap(k3))

    @given(data=st.data())
    def test_associativity(self, path5, data):
        a = heap_of_word(path5, data.draw(word_strategy(path5, 5)))
        b = heap_of_word(path5, data.draw(word_strategy(path5, 5)))
        c = heap_of_word(path5, data.draw(word_strategy(path5, 5)))
        assert product(product(a, b), c) == product(a, product(b, c))


class TestEquivalence:
    def test_chain_word_pair(self, window4):
        g, _ = window4
        assert equivalent(g, to_word(g, "0102302302401"), to_word(g, "0102030203241"))

    def test_commuting_pair(self, path3):
        assert equivalent(path3, (0, 2), (2, 0))

    def test_noncommuting_pair(self, path3):
        assert not equivalent(path3, (0, 1), (1, 0))

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_matches_rewriting_search(self, path5, data):
        w = data.draw(word_strategy(path5, 7))
        cls = equivalence_class(path5, w)
        for other in list(cls)[:50]:
            assert equivalent(path5, w, other)
        outside = data.draw(word_strategy(path5, 7))
        assert equivalent(path5, w, outside) == (tuple(outside) in cls)


class TestDual:
    def test_empty(self, path3):
        assert dual(empty_heap(path3)) == empty_heap(path3)

    def test_two_cells(self, window4):
        g, _ = window4
        v0, v1 = g.index("0"), g.index("1")
        d = dual(heap_of_word(g, (v0, v1)))
        assert d.cells() == [(v1, 1), (v0, 2)]

    def test_single_cell_fixed(self, path3):
        h = heap_of_word(path3, (1,))
        assert dual(h) == h

    def test_involution_and_size(self, path5):
        for h in enumerate_heaps(path5, 4):
            assert dual(dual(h)) == h
            assert dual(h).size == h.size


class TestStrict:
    def test_examples(self, window4):
        g, _ = window4
        v0, v1, v2 = g.index("0"), g.index("1"), g.index("2")
        assert is_strict(heap_of_word(g, (v0, v1, v0)))
        assert not is_strict(heap_of_word(g, (v0, v0)))
        assert not is_strict(heap_of_word(g, (v0, v2, v0)))

    def test_word_and_layer_criteria_agree(self, path5):
        for h in enumerate_heaps(path5, 5):
            assert is_strict(h) == is_strict_by_layers(h)

    def test_skeleton_examples(self, window4):
        g, _ = window4
        v0, v1 = g.index("0"), g.index("1")
        s, mult = strict_skeleton(heap_of_word(g, (v0, v0, v0)))
        assert s.cells() == [(v0, 1)] and mult == {(v0, 1): 3}
        s2, mult2 = strict_skeleton(heap_of_word(g, (v0, v1, v1, v0)))
        assert s2 == heap_of_word(g, (v0, v1, v0))
        assert mult2 == {(v0, 1): 1, (v1, 2): 2, (v0, 3): 1}

    def test_strict_heap_is_fixed_point(self, path3):
        h = heap_of_word(path3, (0, 1, 0))
        s, mult = strict_skeleton(h)
        assert s == h and all(m == 1 for m in mult.values())

    def test_skeleton_bijection(self, path5):
        import math

        heaps = enumerate_heaps(path5, 5)
        all_counts = [0] * 6
        strict_counts = [0] * 6
        for h in heaps:
            s, mult = strict_skeleton(h)
            assert is_strict(s)
            assert sum(mult.values()) == h.size
            assert expand_skeleton(s, mult) == h
            all_counts[h.size] += 1
            if is_strict(h):
                strict_counts[h.size] += 1
        # heaps of size n <-> (strict heap of size k, composition of n into k parts)
        for n in range(1, 6):
            assert all_counts[n] == sum(
                strict_counts[k] * math.comb(n - 1, k - 1) for k in range(1, n + 1)
            )


class TestPyramids:
    def test_is_pyramid(self, cube, window4):
        g, _ = window4
        assert not is_pyramid(heap_of_word(cube, to_word(cube, "acbegeaf")))
        assert is_pyramid(heap_of_word(g, to_word(g, "010")))
        assert not is_pyramid(empty_heap(g))

    def test_worked_splits(self, cube):
        h = heap_of_word(cube, to_word(cube, "acbegeaf"))
        x, p = pyramid_split(h, (cube.index("g"), 2))
        assert x == heap_of_word(cube, to_word(cube, "acbeea"))
        assert p == heap_of_word(cube, to_word(cube, "gf"))
        x2, p2 = pyramid_split(h, (cube.index("f"), 4))
        assert x2 == heap_of_word(cube, to_word(cube, "acbegea"))
        assert p2 == heap_of_word(cube, to_word(cube, "f"))

    def test_single_cell(self, path3):
        h = heap_of_word(path3, (1,))
        assert pyramid_split(h, (1, 1)) == (empty_heap(path3), h)

    def test_missing_cell(self, path3):
        with pytest.raises(HeapError):
            pyramid_split(heap_of_word(path3, (0,)), (2, 1))

    def test_unique_factorization_per_cell(self, path3):
        for h in enumerate_heaps(path3, 5):
            splits = set()
            for cell in h.cells():
                x, p = pyramid_split(h, cell)
                assert is_pyramid(p)
                assert product(x, p) == h
                splits.add((x.layers, p.layers))
            assert len(splits) == h.size


class TestEnumeration:
    def test_counts_path3(self, path3):
        heaps = enumerate_heaps(path3, 3)
        assert sum(1 for h in heaps if h.size == 3) == 21
        pyramids = enumerate_heaps(path3, 3, pyramids_only=True)
        assert sum(1 for h in pyramids if h.size == 3) == 18

    def test_size_zero(self, k3):
        assert enumerate_heaps(k3, 0) == [empty_heap(k3)]

    def test_deterministic_order(self, path3):
        first = enumerate_heaps(path3, 4)
        second = enumerate_heaps(path3, 4)
        assert first == second
        sizes = [h.size for h in first]
        assert sizes == sorted(sizes)

    def test_base_filter(self, path3):
        based = enumerate_heaps(path3, 3, pyramid_base=0)
        assert all(h.layers[0] == (0,) for h in based)


class TestColoredLayers:
    def test_fig_words(self, window4):
        g, coloring = window4
        heap = colored_layers(g, coloring, to_word(g, "0102030203241"))
        assert heap.reading() == to_word(g, "0102302302401")

    def test_empty(self, window4):
        g, coloring = window4
        assert colored_layers(g, coloring, ()).layers == ()

    def test_single_letter_lands_on_its_color(self, window4):
        g, coloring = window4
        v1 = g.index("1")
        heap = colored_layers(g, coloring, (v1,))
        assert heap.layers == ((), (v1,))  # color 2 => layer 2

    @given(data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_reading_is_trace_equivalent(self, window4, data):
        g, coloring = window4
        w = data.draw(word_strategy(g, 8))
        heap = colored_layers(g, coloring, w)
        assert equivalent(g, w, heap.reading())

    def test_layer_color_classes(self, window4):
        g, coloring = window4
        heap = colored_layers(g, coloring, to_word(g, "0102030203241"))
        for i, layer in enumerate(heap.layers):
            want = (i % coloring.r) + 1
            assert all(coloring.colors[v] == want for v in layer)

    def test_improper_coloring_rejected(self, window4):
        from heappieces import Coloring, GraphError

        g, _ = window4
        bad = Coloring((1,) * g.vertex_count, 2)
        with pytest.raises(GraphError):
            colored_layers(g, bad, (0,))


class TestJson:
    def test_round_trip(self, cube):
        h = heap_of_word(cube, to_word(cube, "acbegeaf"))
        assert heap_from_json(heap_to_json(h)) == h

    def test_label_layers(self, path3):
        text = heap_to_json(heap_of_word(path3, (0, 2, 1)))
        assert '"layers":[["a","c"],["b"]]' in text

    def test_rejects_bad_layers(self, path3):
        bad = '{"graph": "vertices: a b c\\nedge: a b\\nedge: b c\\n", "layers": [["a","b"]]}'
        with pytest.raises(HeapError):
            heap_from_json(bad)


class TestValidate:
    def test_catches_unsupported_layer(self, path3):
        with pytest.raises(HeapError):
            Heap(path3, ((0,), (2,))).validate()

    def test_catches_non_stable_layer(self, path3):
        with pytest.raises(HeapError):
            Heap(path3, ((0, 1),)).validate()

    def test_accepts_enumerated(self, path3):
        for h in enumerate_heaps(path3, 4):
            h.validate()
