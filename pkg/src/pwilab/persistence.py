"""JSON save/load for exchanges and piecewise isometries, CSV orbit export."""

from __future__ import annotations

import csv
import json
from collections.abc import Mapping
from pathlib import Path

from pwilab.errors import PersistenceError
from pwilab.iet.transformation import Iet, Itinerary, make_iet
from pwilab.pwi.isometry import Isometry
from pwilab.pwi.regions import ConvexRegion, HalfPlane, Sense
from pwilab.pwi.system import OrbitRecord, Pwi

SAVE_VERSION = 1

ORBIT_HEADER = ("n", "re", "im", "atom", "boundary_flag")


def save_iet(iet: Iet, path: str | Path) -> None:
    """Write ``{"lengths": [...], "perm": [...]}`` with perm in one-line notation.

    Raises:
        PersistenceError: If writing fails.
    """
    data = {
        "version": SAVE_VERSION,
        "lengths": list(iet.lengths),
        "perm": list(iet.perm.mapping),
    }
    _write_json(data, path, "exchange")


def load_iet(path: str | Path, require_irreducible: bool = True) -> Iet:
    """Read an exchange written by save_iet or by hand.

    Raises:
        PersistenceError: If the file is missing, not valid JSON, has an
            unsupported version or does not describe a valid exchange.
    """
    raw = _read_json(path)
    try:
        return make_iet(raw["lengths"], raw["perm"], require_irreducible=require_irreducible)
    except PersistenceError:
        raise
    except Exception as exc:
        raise PersistenceError(f"Failed to load exchange from {path}: {exc}") from exc


def save_pwi(pwi: Pwi, path: str | Path) -> None:
    """Write a piecewise isometry as atoms of half-planes plus maps.

    Raises:
        PersistenceError: If writing fails.
    """
    data = {
        "version": SAVE_VERSION,
        "name": pwi.name,
        "atoms": [_region_to_dict(piece.region, piece.symbol) for piece in pwi.pieces()],
        "maps": [{"theta": iso.theta, "lambda": _pair(iso.lam)} for iso in pwi.maps],
    }
    _write_json(data, path, "piecewise isometry")


def load_pwi(path: str | Path) -> Pwi:
    """Read a piecewise isometry written by save_pwi or by hand.

    ``symbol`` is optional on each atom and defaults to its position.

    Raises:
        PersistenceError: If the file is missing, not valid JSON, has an
            unsupported version or does not describe a valid system.
    """
    raw = _read_json(path)
    try:
        atoms = [_region_from_dict(atom) for atom in raw["atoms"]]
        symbols = tuple(
            int(atom.get("symbol", k)) for k, atom in enumerate(raw["atoms"], start=1)
        )
        maps = [Isometry(float(m["theta"]), _complex(m["lambda"])) for m in raw["maps"]]
        return Pwi(tuple(atoms), tuple(maps), name=raw.get("name", ""), symbols=symbols)
    except PersistenceError:
        raise
    except Exception as exc:
        raise PersistenceError(f"Failed to load piecewise isometry from {path}: {exc}") from exc


def export_orbit(record: OrbitRecord, path: str | Path) -> None:
    """Write ``n,re,im,atom,boundary_flag`` rows with 17 significant digits.

    ``n`` counts steps from the seed, so the first row is the transient.

    Raises:
        PersistenceError: If writing fails.
    """
    try:
        p = Path(path)
        p.parent.mkdir(parents=True, exist_ok=True)
        with p.open("w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(ORBIT_HEADER)
            rows = zip(record.points, record.atom_trace.symbols, record.boundary_flags)
            for k, (z, atom, flag) in enumerate(rows):
                writer.writerow(
                    (record.transient + k, f"{z.real:.17g}", f"{z.imag:.17g}", atom, int(flag))
                )
    except Exception as exc:
        raise PersistenceError(f"Failed to export orbit: {exc}") from exc


def read_orbit(path: str | Path) -> OrbitRecord:
    """Read an orbit CSV written by export_orbit.

    Raises:
        PersistenceError: If the file is missing or malformed.
    """
    p = Path(path)
    if not p.exists():
        raise PersistenceError(f"Orbit file not found: {path}")
    try:
        with p.open(newline="") as handle:
            reader = csv.reader(handle)
            header = tuple(next(reader, ()))
            if header != ORBIT_HEADER:
                raise PersistenceError(f"Unexpected orbit header {header!r}")
            rows = list(reader)
    except PersistenceError:
        raise
    except Exception as exc:
        raise PersistenceError(f"Failed to read orbit: {exc}") from exc

    try:
        points = tuple(complex(float(row[1]), float(row[2])) for row in rows)
        trace = Itinerary(tuple(int(row[3]) for row in rows))
        flags = tuple(bool(int(row[4])) for row in rows)
        transient = int(rows[0][0]) if rows else 0
    except (IndexError, ValueError) as exc:
        raise PersistenceError(f"Malformed orbit row in {path}: {exc}") from exc
    return OrbitRecord(points, trace, flags, transient=transient)


def write_report(report: Mapping, path: str | Path) -> None:
    """Write a report mapping as sorted, indented JSON.

    Raises:
        PersistenceError: If the report is not serializable or writing fails.
    """
    _write_json(dict(report), path, "report")


# ---------------------------------------------------------------------------
# Serialization helpers
# ---------------------------------------------------------------------------

def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _complex(value: object) -> complex:
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, (int, float)):
        return complex(value)
    raise PersistenceError(f"Expected a [re, im] pair, got {value!r}")


def _region_to_dict(region: ConvexRegion, symbol: int) -> dict:
    return {
        "halfplanes": [
            {"phi": h.phi, "anchor": _pair(h.anchor), "sense": h.sense.value}
            for h in region.constraints
        ],
        "special_points": [_pair(p) for p in region.special_points],
        "symbol": symbol,
    }


def _region_from_dict(data: dict) -> ConvexRegion:
    constraints = tuple(
        HalfPlane(float(h["phi"]), _complex(h["anchor"]), Sense(h["sense"]))
        for h in data.get("halfplanes", ())
    )
    special = tuple(_complex(p) for p in data.get("special_points", ()))
    return ConvexRegion(constraints, special)


def _write_json(data: dict, path: str | Path, what: str) -> None:
    try:
        p = Path(path)
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    except Exception as exc:
        raise PersistenceError(f"Failed to save {what}: {exc}") from exc


def _read_json(path: str | Path) -> dict:
    p = Path(path)
    if not p.exists():
        raise PersistenceError(f"File not found: {path}")
    try:
        raw = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise PersistenceError(f"Invalid JSON in {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise PersistenceError(f"Expected a JSON object in {path}")

    version = raw.pop("version", SAVE_VERSION)
    if version != SAVE_VERSION:
        raise PersistenceError(f"Unsupported version {version!r}, expected {SAVE_VERSION}")
    return raw
