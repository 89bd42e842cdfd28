import hashlib
import json
from pathlib import Path

import pytest

from linlay.cli import main
from linlay.io import DocumentError, parse_layout, serialize_layout, write_atomic
from linlay.layout import Layout, Part, verify_layout
from linlay.pages import build_union_page_layout, zigzag_page_layout
from linlay.queues.elbow import elbow_chains, elbow_queue_layout
from linlay.queues.recursive import build_local_queue_layout, build_recursive_chain_cover
from linlay.svg import render_triangle_svg
from linlay.triangle import Chain

GOLDEN = Path(__file__).parent / "golden"


def doc(**over):
    base = {"schema_version": 1, "n": 3, "kind": "queue", "variant": "plain", "parts": [{"id": 0, "edges": [[1, 2], [1, 3], [2, 3]]}]}
    base.update(over)
    return json.dumps(base)


@pytest.mark.parametrize(
    "layout",
    [elbow_queue_layout(9), build_local_queue_layout(30), zigzag_page_layout(11), build_union_page_layout(54), Layout(1, [])],
)
def test_round_trip(layout):
    text = serialize_layout(layout)
    back = parse_layout(text)
    assert back == layout
    assert back.kind == layout.kind and back.variant == layout.variant
    assert serialize_layout(back) == text


def test_serialization_is_canonical():
    a = Layout(3, [Part(1, [(2, 3)]), Part(0, [(1, 3), (1, 2)])], metadata={"z": 1, "a": [2]})
    b = Layout(3, [Part(0, [(1, 2), (3, 1)]), Part(1, [(3, 2)])], metadata={"a": [2], "z": 1})
    assert serialize_layout(a) == serialize_layout(b)
    assert serialize_layout(a).endswith("\n")
    # frozen digest so any change in the byte format is noticed
    digest = hashlib.sha256(serialize_layout(elbow_queue_layout(6)).encode()).hexdigest()
    assert digest == (GOLDEN / "elbow6.sha256").read_text().strip()


def test_valid_document_loads():
    layout = parse_layout(doc())
    assert verify_layout(layout).ok


@pytest.mark.parametrize(
    "text, code, message",
    [
        (doc(kind="tree"), "schema", "schema violation"),
        (doc(schema_version=2), "schema", "schema violation"),
        (doc(parts=[{"id": 0, "edges": [[1, 2, 3]]}]), "schema", "schema violation"),
        (doc(parts=[{"id": 0, "edges": [[2, 1]]}]), "schema", "schema violation"),
        ("{not json", "schema", "schema violation"),
        (doc(parts=[{"id": 0, "edges": [[0, 2]]}]), "range", "index out of range"),
        (doc(parts=[{"id": 0, "edges": [[1, 4]]}]), "range", "index out of range"),
        (doc(parts=[{"id": 0, "edges": [[1, 2]]}, {"id": 1, "edges": [[1, 2]]}]), "duplicate", "edge covered twice"),
        (doc(parts=[{"id": 0, "edges": [[1, 2]]}, {"id": 0, "edges": [[1, 3]]}]), "schema", "schema violation"),
    ],
)
def test_document_errors(text, code, message):
    with pytest.raises(DocumentError, match=message) as info:
        parse_layout(text)
    assert info.value.code == code


def test_write_atomic(tmp_path):
    target = tmp_path / "out.json"
    write_atomic(target, "first\n")
    write_atomic(target, "second\n")
    assert target.read_text() == "second\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]
    with pytest.raises(OSError):
        write_atomic(tmp_path / "missing" / "x.json", "x")
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]


# svg ---------------------------------------------------------------------------


def test_svg_golden_t8_one_chain():
    chain = Chain([(1, 8), (1, 7), (2, 7), (3, 5), (4, 3), (6, 2), (7, 1)], "highlight")
    svg = render_triangle_svg([chain], 8, title="T_8")
    assert svg == (GOLDEN / "t8_one_chain.svg").read_text()
    # seven chain cells plus the legend swatch
    assert svg.count('fill="#e6194b"') == 8


def test_svg_empty_is_bare_grid():
    svg = render_triangle_svg([], 8)
    assert svg.count("<rect") == 36
    assert 'fill="#ffffff"' in svg and "<text" not in svg


def test_svg_t13_cover_shows_two_elbows():
    chains = build_recursive_chain_cover(13)
    svg = render_triangle_svg(chains, 13)
    assert svg.count("<rect") == 91 + 2  # cells plus one legend swatch per family
    assert ">elbow<" in svg and ">A<" in svg
    assert svg == render_triangle_svg(chains, 13)


def test_svg_from_layout():
    svg = render_triangle_svg(elbow_queue_layout(6))
    assert svg.count("<rect") == 15 + 3
    with pytest.raises(ValueError):
        render_triangle_svg(elbow_chains(4))


# cli ---------------------------------------------------------------------------


@pytest.mark.parametrize("kind", ["local-queue", "union-queue", "local-page", "union-page", "global-queue", "global-page"])
def test_cli_construct_and_verify(kind, tmp_path, capsys):
    out = tmp_path / "layout.json"
    assert main(["construct", "--kind", kind, "--n", "20", "--out", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert summary["construction"] == kind and summary["within_budget"] and summary["covered"]
    assert main(["verify", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]


def test_cli_construct_stdout_and_svg(tmp_path, capsys):
    svg = tmp_path / "q.svg"
    assert main(["construct", "--kind", "local-queue", "--n", "14", "--svg", str(svg)]) == 0
    captured = capsys.readouterr()
    assert parse_layout(captured.out).n == 14
    assert "within_budget" in captured.err
    assert svg.read_text().startswith("<?xml")


def test_cli_verify_exit_codes(tmp_path, capsys):
    f = tmp_path / "layout.json"
    f.write_text(serialize_layout(elbow_queue_layout(10)))
    assert main(["verify", str(f), "--expect-max-parts", "5"]) == 0
    assert main(["verify", str(f), "--expect-max-parts", "4"]) == 1
    assert main(["verify", str(f), "--expect-max-locality", "4"]) == 1
    f.write_text(serialize_layout(Layout(4, [Part(0, [(1, 4), (2, 3)])])))
    assert main(["verify", str(f)]) == 1  # nested pair and missing edges
    f.write_text(doc(parts=[{"id": 0, "edges": [[1, 2]]}, {"id": 1, "edges": [[1, 2]]}]))
    assert main(["verify", str(f)]) == 1
    f.write_text(doc(parts=[{"id": 0, "edges": [[0, 2]]}]))
    assert main(["verify", str(f)]) == 1
    f.write_text(doc(kind="tree"))
    assert main(["verify", str(f)]) == 2
    assert main(["verify", str(tmp_path / "nope.json")]) == 2
    assert main(["construct", "--kind", "bogus", "--n", "3"]) == 2
    assert main(["construct", "--kind", "local-queue", "--n", "0"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_cli_bounds_and_oracle(capsys):
    assert main(["bounds", "--n", "69", "--json"]) == 0
    table = json.loads(capsys.readouterr().out)
    assert table["lqn_lower_int"] == 21 and table["lqn_upper"] == 22
    assert main(["bounds", "--n", "10"]) == 0
    assert "uqn_upper" in capsys.readouterr().out
    assert main(["oracle", "--n", "5", "--parameter", "upn"]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["value"] == 3 and res["refuted_below"] == 2
    assert main(["oracle", "--n", "9", "--parameter", "lqn"]) == 2
    assert "cap" in capsys.readouterr().err


def test_cli_help_mentions_seed(capsys):
    assert main(["--help"]) == 0
    assert "LINLAY_SEED" in capsys.readouterr().out
