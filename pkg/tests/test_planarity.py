import pytest
from hypothesis import given, settings

from conftest import complete, complete_bipartite, cycle, graph_from_pairs, petersen, small_graphs
from girththick.construct import construct
from girththick.graph import SimpleGraph
from girththick.oracles import has_kuratowski_minor
from girththick.planarity import (
    EmbeddingError,
    is_planar,
    kuratowski_type,
    kuratowski_witness,
    lr_rotation,
    trace_faces,
    validate_embedding,
)


def grid(rows, cols):
    idx = lambda r, c: r * cols + c
    pairs = [(idx(r, c), idx(r, c + 1)) for r in range(rows) for c in range(cols - 1)]
    pairs += [(idx(r, c), idx(r + 1, c)) for r in range(rows - 1) for c in range(cols)]
    return graph_from_pairs(rows * cols, pairs)


@given(small_graphs(max_n=8))
@settings(max_examples=300, deadline=None)
def test_verdict_matches_minor_oracle(g):
    result = is_planar(g)
    assert result.is_planar == (not has_kuratowski_minor(g))
    if result:
        assert validate_embedding(g, result.embedding)
    else:
        assert result.embedding is None


@given(small_graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_edge_deletion_keeps_planarity(g):
    if not is_planar(g) or not g.edges:
        return
    e = min(g.edges)
    assert is_planar(SimpleGraph(g.vertices, g.edges - {e}))


def test_euler_count_on_grid():
    g = grid(8, 9)
    rotation = is_planar(g).embedding
    faces = trace_faces(rotation)
    assert g.n_vertices - g.n_edges + len(faces) == 2
    assert sorted(len(f) for f in faces)[:-1] == [4] * (7 * 8)


def test_large_planar_and_nonplanar():
    assert is_planar(grid(30, 30))
    assert not is_planar(petersen())
    assert lr_rotation(6, [(a, b) for a in range(3) for b in range(3, 6)]) is None


def test_disconnected_graph_embeds_per_component():
    g = graph_from_pairs(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)])
    result = is_planar(g)
    assert result and validate_embedding(g, result.embedding)


def test_validation_rejects_wrong_rotation():
    g = cycle(4)
    rotation = dict(is_planar(g).embedding)
    some = next(iter(rotation))
    rotation[some] = rotation[some][:1]
    with pytest.raises(EmbeddingError):
        validate_embedding(g, rotation)


def test_validation_detects_non_planar_rotation():
    g = complete(4)
    verts = g.sorted_vertices
    # identical cyclic order at every vertex is not a planar rotation of K4
    rotation = {x: tuple(y for y in verts if y != x) for x in verts}
    assert not validate_embedding(g, rotation)


@pytest.mark.parametrize("g, kind", [
    (complete(5), "K5"),
    (complete_bipartite(3, 3), "K3,3"),
    (complete(6), None),
    (petersen(), "K3,3"),
])
def test_witness(g, kind):
    """Witness is edge-minimal non-planar, hence a Kuratowski subdivision."""
    result = is_planar(g, witness=True)
    assert not result
    w = result.witness
    assert w <= g.edges
    sub = SimpleGraph.from_edges(w)
    assert not is_planar(sub)
    for e in w:
        assert is_planar(SimpleGraph(sub.vertices, w - {e}))
    if kind is not None:
        assert kuratowski_type(w) == kind
    else:
        assert kuratowski_type(w) in ("K5", "K3,3")
    assert kuratowski_witness(g) == w


@pytest.mark.parametrize("n", [2, 5, 8])
def test_construction_parts_embed(n):
    d = construct(n)
    for i in range(d.n_parts):
        g = d.part_graph(i)
        result = is_planar(g)
        assert validate_embedding(g, result.embedding)
