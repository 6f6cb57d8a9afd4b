import pytest
from hypothesis import given, strategies as st

from gaingraph.document import ParseError, parse, serialize
from gaingraph.gains import HALF_TURN, GroupSpec, UnitGain
from gaingraph.graphcore import GainGraph, SimpleGraph, random_gain_graph
from strategies import gain_graphs, group_specs

HEAD = "gaingraph v1\ngroup mu 4\ninvolution 1/2\nvertices 3\n"


def test_single_edge_document():
    phi = parse("gaingraph v1\ngroup mu 4\ninvolution 1/2\nvertices 2\nedge 1 2 1/4\n")
    assert phi.graph == SimpleGraph(2, ((0, 1),))
    assert phi.gains == (UnitGain.of("1/4"),)
    assert phi.spec == GroupSpec.mu(4) and phi.involution == HALF_TURN


def test_reversed_edge_stores_inverse():
    phi = parse(HEAD + "edge 3 1 1/4\n")
    assert phi.graph.edges == ((0, 2),)
    assert phi.gains == (UnitGain.of("3/4"),)


def test_comments_and_blank_lines():
    text = "# a triangle\n\ngaingraph v1\ngroup sign  # signed\ninvolution 0\nvertices 3\n\nedge 1 2 1/2\n"
    assert parse(text).gains == (HALF_TURN,)


@pytest.mark.parametrize("line, reason", [
    ("edge 1 1 0", "loop"),
    ("edge 1 2 0\nedge 2 1 0", "duplicate edge"),
    ("edge 1 2 1/3", "outside group"),
    ("edge 1 2 1/x", "1/x"),
    ("edge 1 2 1/0", "1/0"),
    ("colour 1 red", "unknown directive"),
    ("edge 1 4 0", "out of range"),
    ("edge 1 2", "two vertices and a gain"),
    ("edge a 2 0", "bad vertex"),
    ("vertices 5", "twice"),
])
def test_errors_name_their_line(line, reason):
    text = HEAD + line + "\n"
    with pytest.raises(ParseError, match=reason) as err:
        parse(text)
    assert err.value.line == text.count("\n")


def test_loop_line_number():
    with pytest.raises(ParseError) as err:
        parse(HEAD + "edge 1 2 0\nedge 1 1 0\n")
    assert err.value.line == 6 and str(err.value).startswith("line 6:")


@pytest.mark.parametrize("text, reason", [
    ("", "empty"),
    ("gaingraph v2\n", "header"),
    ("gaingraph v1\ngroup mu 4\nvertices 2\n", "missing involution"),
    ("gaingraph v1\ninvolution 1/2\n", "before group"),
    ("gaingraph v1\ngroup mu 3\ninvolution 1/2\n", "involution"),
    ("gaingraph v1\ngroup circle\ninvolution 1/4\n", "involution"),
    ("gaingraph v1\ngroup mu 0\n", "positive"),
    ("gaingraph v1\ngroup torus\n", "unknown group"),
    ("gaingraph v1\ngroup circle\ninvolution 0\n", "missing vertices"),
    ("gaingraph v1\ngroup circle\ninvolution 0\nvertices -1\n", "non-negative"),
])
def test_header_errors(text, reason):
    with pytest.raises(ParseError, match=reason):
        parse(text)


def test_serialize_format():
    phi = GainGraph.from_edges(3, GroupSpec.mu(4), [(0, 1, UnitGain.of("1/4")), (1, 2, UnitGain.of("0"))])
    assert serialize(phi) == HEAD + "edge 1 2 1/4\nedge 2 3 0\n"


@given(gain_graphs(max_n=8))
def test_round_trip(phi):
    assert parse(serialize(phi)) == phi
    assert serialize(parse(serialize(phi))) == serialize(phi)


def test_round_trip_hundred_documents(rng):
    for k in range(100):
        spec = [GroupSpec.mu(6), GroupSpec.sign("0"), GroupSpec.circle(), GroupSpec.mu(12, "0")][k % 4]
        phi = random_gain_graph(int(rng.integers(0, 9)), spec, rng)
        text = serialize(phi)
        assert parse(text) == phi and serialize(parse(text)) == text


@given(st.text(alphabet="gaingrph v1\nedgeusomcl0123456789/ -#x", max_size=120))
def test_garbage_never_crashes(text):
    try:
        parse(text)
    except ParseError:
        pass


@given(st.lists(st.sampled_from([
    "gaingraph v1", "group mu 4", "group circle", "involution 1/2", "involution 0", "vertices 3",
    "edge 1 2 1/4", "edge 2 3 1/2", "edge 3 1 0", "edge 1 1 0", "edge 1 2 1/3", "edge 4 1 0",
]), max_size=8))
def test_shuffled_directives_never_crash(lines):
    try:
        phi = parse("\n".join(lines))
    except ParseError:
        return
    assert parse(serialize(phi)) == phi
