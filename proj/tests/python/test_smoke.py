import random

import pytest

import starlit


def test_petersen_uniform_lists():
    g = starlit.named_graph("petersen")
    colors = starlit.star_edge_color(g, uniform_k=7)
    assert len(colors) == 15
    assert starlit.is_star_coloring(g, colors)
    assert starlit.find_violation(g, colors) is None


def test_random_lists_are_respected():
    rng = random.Random(3)
    g = starlit.random_subcubic(24, seed=5, allow_parallel=True)
    lists = [set(rng.sample(range(1, 22), 7)) for _ in range(g.edge_count)]
    colors = starlit.star_edge_color(g, lists=lists)
    assert all(c in l for c, l in zip(colors, lists))
    assert starlit.is_star_coloring(g, colors)


def test_violation_witness():
    c4 = starlit.Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert starlit.find_violation(c4, [1, 2, 1, 2]) == ("bichromatic_cycle", [0, 1, 2, 3])
    assert starlit.find_violation(c4, [1, 2, 1, 3]) is None
    assert starlit.find_violation(c4, [1, 1, None, None]) == ("improper", [0, 1])


def test_chromatic_index():
    assert starlit.star_chromatic_index(starlit.named_graph("c5")) == 4
    assert starlit.star_chromatic_index(starlit.named_graph("k33")) == 6
    assert starlit.star_chromatic_index(starlit.named_graph("c5"), max_k=3) is None


def test_cactus_and_cycles():
    d = starlit.decompose_cactus(starlit.named_graph("prism"))
    assert len(d["cycles"]) == 2
    assert len(d["connectors"]) == 1
    assert len(d["leftover_matching"]) == 2
    assert starlit.color_cycle([{1, 2, 3}] * 5) is None
    assert starlit.color_cycle([{1}, {2}, {3}]) == [1, 2, 3]


def test_text_round_trip_and_errors():
    g = starlit.random_cubic(10, seed=1)
    assert starlit.Multigraph.from_text(g.to_text()) == g
    with pytest.raises(ValueError):
        starlit.Multigraph(2, [(1, 1)])
    with pytest.raises(ValueError):
        starlit.star_edge_color(starlit.named_graph("k4"), uniform_k=6)
    with pytest.raises(ValueError):
        starlit.named_graph("nope")


def test_fuzz():
    report = starlit.fuzz(count=50, max_n=20, seed=7)
    assert report["verified"] == 50
    assert report["failures"] == []
