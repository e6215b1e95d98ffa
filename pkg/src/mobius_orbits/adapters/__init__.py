"""Adapters layer: report serialization and file output."""

from mobius_orbits.adapters.report_io import (
    check_report,
    convert_report,
    decompose_report,
    dump_csv,
    dump_json,
    orbit_report,
    orbit_rows,
    rotmat_report,
    save_report,
)

__all__ = [
    "check_report",
    "convert_report",
    "decompose_report",
    "dump_csv",
    "dump_json",
    "orbit_report",
    "orbit_rows",
    "rotmat_report",
    "save_report",
]
