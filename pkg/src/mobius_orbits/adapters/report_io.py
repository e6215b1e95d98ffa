"""Report adapter: JSON/CSV encoding of domain values and report files.

JSON is written with ``indent=2`` and ``allow_nan=False``; floats keep their
shortest round-trip repr. Complex numbers become ``{"re", "im"}`` objects and
points of Ĉ add an ``is_infinity`` flag (∞ is ``{"is_infinity": true}``).
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np

from mobius_orbits.domain.bridge import quaternion_of
from mobius_orbits.domain.exceptions import ReportError
from mobius_orbits.domain.mobius import fixed_points, induced_rotation
from mobius_orbits.domain.polar import decompose, extract_polar, reconstruction_error
from mobius_orbits.domain.quaternion import rotation_matrix_cq

if TYPE_CHECKING:
    from mobius_orbits.domain.extplane import ExtComplex
    from mobius_orbits.domain.mobius import QuatMobius
    from mobius_orbits.domain.orbits import OrbitSample
    from mobius_orbits.domain.verification import SuiteReport

CSV_COLUMNS = ("tau", "re", "im", "is_infinity", "eta1", "eta2", "eta3")

JsonDict = dict[str, Any]


# ──────────────────────────────────────────────────────────────────────────────
# Value encoders
# ──────────────────────────────────────────────────────────────────────────────


def encode_complex(z: complex) -> JsonDict:
    return {"re": float(z.real), "im": float(z.imag)}


def encode_ext(z: ExtComplex) -> JsonDict:
    if z.is_infinity:
        return {"is_infinity": True}
    return {"re": z.re, "im": z.im, "is_infinity": False}


def encode_matrix(m: np.ndarray) -> list[list[float]]:
    return [[float(v) for v in row] for row in np.asarray(m, dtype=np.float64)]


def encode_quat_mobius(q: QuatMobius) -> JsonDict:
    return {"zeta": encode_complex(q.zeta), "omega": encode_complex(q.omega)}


def encode_quaternion(q: QuatMobius) -> list[float]:
    """Coordinates (q0, q1, q2, q3) of γ⁻¹ of the canonical parameters."""
    return [float(c) for c in quaternion_of(q).as_array()]


# ──────────────────────────────────────────────────────────────────────────────
# Report builders
# ──────────────────────────────────────────────────────────────────────────────


def decompose_report(q: QuatMobius) -> JsonDict:
    """Polar data, W/D factors and fixed points of q."""
    data = extract_polar(q)
    parts = decompose(q)
    fixed = None if data.degenerate == "identity" else fixed_points(q)
    return {
        **encode_quat_mobius(q),
        "axis": [float(c) for c in data.axis_vector],
        "tau": data.tau,
        "phi": data.phi,
        "lambda": data.lam,
        "W": encode_quat_mobius(parts.W),
        "D": encode_quat_mobius(parts.D),
        "fixed_points": None if fixed is None else [encode_ext(z) for z in fixed],
        "degenerate": data.degenerate,
        "reconstruction_error": reconstruction_error(q, parts),
    }


def rotmat_report(q: QuatMobius, generator: np.ndarray | None) -> JsonDict:
    """[M̂], [C_q] of γ⁻¹(ζ, ω) and the orbit generator."""
    m_hat = induced_rotation(q)
    c_q = rotation_matrix_cq(quaternion_of(q))
    return {
        **encode_quat_mobius(q),
        "quaternion": encode_quaternion(q),
        "m_hat": encode_matrix(m_hat),
        "c_q": encode_matrix(c_q),
        "generator": None if generator is None else encode_matrix(generator),
        "max_abs_diff": float(np.max(np.abs(m_hat - c_q))),
    }


def convert_report(q: QuatMobius) -> JsonDict:
    """Every representation of q."""
    data = extract_polar(q)
    return {
        **encode_quat_mobius(q),
        "quaternion": encode_quaternion(q),
        "angles": {"phi": data.phi, "lambda": data.lam, "tau": data.tau},
        "longitude": data.longitude,
        "degenerate": data.degenerate,
    }


def orbit_rows(samples: list[OrbitSample]) -> list[JsonDict]:
    """Flat rows keyed by :data:`CSV_COLUMNS`; ∞ rows carry null ``re``/``im``."""
    rows = []
    for sample in samples:
        point, sphere = sample.image_of_start, sample.sphere_image
        if point is None or sphere is None:
            continue
        rows.append(
            {
                "tau": sample.parameter,
                "re": None if point.is_infinity else point.re,
                "im": None if point.is_infinity else point.im,
                "is_infinity": point.is_infinity,
                "eta1": sphere.eta1,
                "eta2": sphere.eta2,
                "eta3": sphere.eta3,
            }
        )
    return rows


def orbit_report(q: QuatMobius, z0: ExtComplex, samples: list[OrbitSample]) -> JsonDict:
    """Invariant curve of z0, one flat row per sample."""
    return {
        **encode_quat_mobius(q),
        "z0": encode_ext(z0),
        "axis": [float(c) for c in extract_polar(q).axis_vector],
        "samples": orbit_rows(samples),
    }


def check_report(suite: SuiteReport) -> JsonDict:
    return {
        "seed": suite.seed,
        "n_iters": suite.n_iters,
        "passed": suite.passed,
        "invariants": [r.model_dump() for r in suite.results],
    }


# ──────────────────────────────────────────────────────────────────────────────
# Serialization and persistence
# ──────────────────────────────────────────────────────────────────────────────


def dump_json(payload: JsonDict) -> str:
    """Serialize a report; NaN or infinite floats raise ``ReportError``."""
    try:
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"
    except ValueError as e:
        msg = f"Report contains a non-finite number: {e}"
        raise ReportError(msg) from e


def _csv_cell(value: float | bool | None) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value)


def dump_csv(samples: list[OrbitSample]) -> str:
    """Orbit samples as CSV with the fixed :data:`CSV_COLUMNS` header.

    Rows at ∞ leave ``re`` and ``im`` empty.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in orbit_rows(samples):
        writer.writerow([_csv_cell(row[column]) for column in CSV_COLUMNS])
    return buffer.getvalue()


def save_report(text: str, path: Path | str) -> Path:
    """Write a serialized report, creating parent directories.

    Args:
        text: Output of :func:`dump_json` or :func:`dump_csv`.
        path: Destination file.

    Returns:
        The path written.

    Raises:
        ReportError: If the file cannot be written.
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        msg = f"Failed to write report: {path} ({e})"
        raise ReportError(msg) from e
    return path
