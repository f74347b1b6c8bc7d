import json
import re
from pathlib import Path

import pytest

from jugglecards.cards import crossings, parse_sequence
from jugglecards.svg import RenderSpec, render_svg

GOLDEN = Path(__file__).parent / "golden"

RUNNING = parse_sequence("C3 C3 C2 C4 C3 C4 C3 C2 C2", 4)


def thrown_labels(doc: str) -> list[str]:
    return re.findall(r'class="thrown"[^>]*>([^<]*)</text>', doc)


def metadata(doc: str) -> dict:
    return json.loads(re.search(r"<metadata>(.*?)</metadata>", doc).group(1))


@pytest.mark.parametrize(
    "name, cards, b",
    [
        ("single_card.svg", "C3", 4),
        ("nine_card_row.svg", "C3 C3 C2 C4 C3 C4 C3 C2 C2", 4),
        ("multiplex_row.svg", "C2,4 C2,5 C2,3 C5,4 C5,2 C4,2", 5),
    ],
)
def test_matches_golden_byte_for_byte(name, cards, b):
    doc = render_svg(parse_sequence(cards, b))
    assert doc == (GOLDEN / name).read_text()


def test_rendering_is_deterministic():
    assert render_svg(RUNNING) == render_svg(RUNNING)


def test_nine_card_row_structure():
    doc = render_svg(RUNNING)
    assert doc.count("<g id=\"card-") == 9
    assert thrown_labels(doc) == ["1", "2", "3", "1", "3", "2", "4", "3", "1"]
    assert metadata(doc)["crossings"] == 17


def test_bottom_card_draws_parallel_tracks():
    doc = render_svg(parse_sequence("C1", 4))
    points = re.findall(r'points="([^"]*)"', doc)
    assert len(points) == 4
    for track in points:
        ys = {pair.split(",")[1] for pair in track.split()}
        assert len(ys) == 1, track
    assert metadata(doc)["crossings"] == 0


def test_metadata_reports_the_crossing_number():
    nested = parse_sequence("C3 C5 C1 C5 C2 C5 C2 C5", 5)
    assert metadata(render_svg(nested))["crossings"] == crossings(nested) == 20


def test_label_toggles():
    bare = render_svg(RUNNING, RenderSpec(ball_labels=False, thrown_labels=False))
    assert "ball-labels" not in bare
    assert thrown_labels(bare) == []
    assert bare.count("<g id=\"card-") == 9


def test_spec_scales_geometry():
    wide = render_svg(RUNNING, RenderSpec(card_width=100))
    assert 'width="100"' in wide
    assert wide != render_svg(RUNNING)


def test_spec_rejects_nonpositive_dimensions():
    with pytest.raises(ValueError, match="card_width"):
        RenderSpec(card_width=0)
    with pytest.raises(ValueError, match="level_spacing"):
        RenderSpec(level_spacing=-3)
