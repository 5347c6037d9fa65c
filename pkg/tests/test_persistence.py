"""Tests for JSON save/load and CSV orbit export."""

import json

import pytest

from pwilab.errors import PersistenceError
from pwilab.experiments import build_cone_family, build_return_strip
from pwilab.iet import make_iet
from pwilab.persistence import (
    ORBIT_HEADER,
    SAVE_VERSION,
    export_orbit,
    load_iet,
    load_pwi,
    read_orbit,
    save_iet,
    save_pwi,
    write_report,
)
from pwilab.pwi import pwi_orbit


# ---------------------------------------------------------------------------
# Exchanges
# ---------------------------------------------------------------------------

class TestIetRoundTrip:
    def test_round_trip(self, tmp_path, four_iet):
        path = tmp_path / "four.json"
        save_iet(four_iet, path)
        assert load_iet(path) == four_iet

    def test_file_format(self, tmp_path, swap_iet):
        path = tmp_path / "swap.json"
        save_iet(swap_iet, path)
        data = json.loads(path.read_text())
        assert data == {"version": SAVE_VERSION, "lengths": [0.6, 0.4], "perm": [2, 1]}

    def test_hand_written_without_version(self, tmp_path):
        path = tmp_path / "hand.json"
        path.write_text('{"lengths": [1, 2, 3], "perm": [3, 2, 1]}')
        iet = load_iet(path)
        assert iet.lengths == (1.0, 2.0, 3.0)
        assert iet.perm.mapping == (3, 2, 1)

    def test_creates_parent_directories(self, tmp_path, swap_iet):
        path = tmp_path / "nested" / "dir" / "swap.json"
        save_iet(swap_iet, path)
        assert path.exists()


class TestIetErrors:
    def test_missing_file(self, tmp_path):
        with pytest.raises(PersistenceError, match="File not found"):
            load_iet(tmp_path / "nope.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(PersistenceError, match="Invalid JSON"):
            load_iet(path)

    def test_not_an_object(self, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")
        with pytest.raises(PersistenceError, match="JSON object"):
            load_iet(path)

    def test_unsupported_version(self, tmp_path):
        path = tmp_path / "v2.json"
        path.write_text('{"version": 2, "lengths": [0.6, 0.4], "perm": [2, 1]}')
        with pytest.raises(PersistenceError, match="Unsupported version"):
            load_iet(path)

    def test_missing_key(self, tmp_path):
        path = tmp_path / "partial.json"
        path.write_text('{"lengths": [0.6, 0.4]}')
        with pytest.raises(PersistenceError, match="Failed to load exchange"):
            load_iet(path)

    def test_reducible_rejected(self, tmp_path):
        path = tmp_path / "identity.json"
        path.write_text('{"lengths": [0.6, 0.4], "perm": [1, 2]}')
        with pytest.raises(PersistenceError, match="Failed to load exchange"):
            load_iet(path)

    def test_reducible_allowed_on_request(self, tmp_path):
        path = tmp_path / "identity.json"
        path.write_text('{"lengths": [0.6, 0.4], "perm": [1, 2]}')
        iet = load_iet(path, require_irreducible=False)
        assert iet.perm.mapping == (1, 2)

    def test_non_positive_length(self, tmp_path):
        path = tmp_path / "zero.json"
        path.write_text('{"lengths": [0.0, 0.4], "perm": [2, 1]}')
        with pytest.raises(PersistenceError):
            load_iet(path)

    def test_cause_is_chained(self, tmp_path):
        path = tmp_path / "identity.json"
        path.write_text('{"lengths": [0.6, 0.4], "perm": [1, 2]}')
        with pytest.raises(PersistenceError) as info:
            load_iet(path)
        assert info.value.__cause__ is not None


# ---------------------------------------------------------------------------
# Piecewise isometries
# ---------------------------------------------------------------------------

class TestPwiRoundTrip:
    def test_cone_family(self, tmp_path):
        pwi = build_cone_family(0.7, 0.5, 0.618).pwi
        path = tmp_path / "cone.json"
        save_pwi(pwi, path)
        loaded = load_pwi(path)
        assert loaded == pwi
        assert loaded.symbols == (1, 2, 3, 4, 4)
        assert loaded.atoms[0].special_points == (0j,)

    def test_loaded_system_iterates_identically(self, tmp_path):
        pwi = build_return_strip().pwi
        path = tmp_path / "strip.json"
        save_pwi(pwi, path)
        loaded = load_pwi(path)
        assert pwi_orbit(loaded, 0.416j, 200) == pwi_orbit(pwi, 0.416j, 200)

    def test_hand_written_defaults(self, tmp_path):
        path = tmp_path / "halves.json"
        path.write_text(
            json.dumps(
                {
                    "atoms": [
                        {"halfplanes": [{"phi": 0.0, "anchor": [0, 0], "sense": "ge"}]},
                        {"halfplanes": [{"phi": 0.0, "anchor": [0, 0], "sense": "lt"}]},
                    ],
                    "maps": [
                        {"theta": 0.0, "lambda": [0, -1]},
                        {"theta": 0.0, "lambda": [0, 1]},
                    ],
                }
            )
        )
        pwi = load_pwi(path)
        assert pwi.symbols == (1, 2)
        assert pwi.name == ""
        assert pwi.apply(0.5j) == (-0.5j, 1)
        assert pwi.apply(-0.5j) == (0.5j, 2)

    def test_bad_sense(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            '{"atoms": [{"halfplanes": [{"phi": 0, "anchor": [0, 0], "sense": "up"}]}],'
            ' "maps": [{"theta": 0, "lambda": [0, 0]}]}'
        )
        with pytest.raises(PersistenceError, match="Failed to load piecewise isometry"):
            load_pwi(path)

    def test_bad_complex(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            '{"atoms": [{"halfplanes": []}], "maps": [{"theta": 0, "lambda": "north"}]}'
        )
        with pytest.raises(PersistenceError, match="re, im"):
            load_pwi(path)

    def test_atom_map_mismatch(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"atoms": [{"halfplanes": []}], "maps": []}')
        with pytest.raises(PersistenceError):
            load_pwi(path)


# ---------------------------------------------------------------------------
# Orbits and reports
# ---------------------------------------------------------------------------

class TestOrbitCsv:
    def test_round_trip_with_transient(self, tmp_path):
        record = pwi_orbit(build_return_strip().pwi, 0.416j, 30, transient=2)
        path = tmp_path / "orbit.csv"
        export_orbit(record, path)
        assert read_orbit(path) == record

    def test_header_and_numbering(self, tmp_path):
        record = pwi_orbit(build_return_strip().pwi, 0.416j, 3, transient=2)
        path = tmp_path / "orbit.csv"
        export_orbit(record, path)
        lines = path.read_text().splitlines()
        assert lines[0] == ",".join(ORBIT_HEADER)
        assert lines[0] == "n,re,im,atom,boundary_flag"
        assert [line.split(",")[0] for line in lines[1:]] == ["2", "3", "4", "5"]

    def test_full_precision(self, tmp_path):
        record = pwi_orbit(build_return_strip().pwi, 0.416j, 5)
        path = tmp_path / "orbit.csv"
        export_orbit(record, path)
        assert read_orbit(path).points == record.points

    def test_missing_file(self, tmp_path):
        with pytest.raises(PersistenceError, match="Orbit file not found"):
            read_orbit(tmp_path / "none.csv")

    def test_bad_header(self, tmp_path):
        path = tmp_path / "orbit.csv"
        path.write_text("step,x,y\n0,1,2\n")
        with pytest.raises(PersistenceError, match="Unexpected orbit header"):
            read_orbit(path)

    def test_malformed_row(self, tmp_path):
        path = tmp_path / "orbit.csv"
        path.write_text("n,re,im,atom,boundary_flag\n0,0.5,abc,1,0\n")
        with pytest.raises(PersistenceError, match="Malformed orbit row"):
            read_orbit(path)

    def test_header_only(self, tmp_path):
        path = tmp_path / "orbit.csv"
        path.write_text("n,re,im,atom,boundary_flag\n")
        record = read_orbit(path)
        assert len(record) == 0
        assert record.transient == 0


class TestWriteReport:
    def test_sorted_indented(self, tmp_path):
        path = tmp_path / "report.json"
        write_report({"b": 1, "a": {"d": 2, "c": 3}}, path)
        text = path.read_text()
        assert text.index('"a"') < text.index('"b"')
        assert text.index('"c"') < text.index('"d"')
        assert json.loads(text) == {"a": {"c": 3, "d": 2}, "b": 1}
        assert "\n  " in text

    def test_not_serializable(self, tmp_path):
        with pytest.raises(PersistenceError, match="Failed to save report"):
            write_report({"z": 1j}, tmp_path / "report.json")
