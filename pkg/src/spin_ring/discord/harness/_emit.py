"""CSV and JSON output of sweep rows."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

import contextlib
import csv
import json
import logging
import math
from pathlib import Path
import sys
from typing import IO, TYPE_CHECKING, Any, Protocol

from spin_ring.discord._errors import UsageError
from spin_ring.discord.harness._sweep import SweepRow

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Mapping, Sequence

logger = logging.getLogger(__name__)

STDOUT = "-"


def _as_record(row: SweepRow | Mapping[str, Any]) -> Mapping[str, Any]:
    return row.as_dict() if isinstance(row, SweepRow) else row


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def _format_cell(value: Any) -> str:
    if isinstance(value, float):
        return format(value, ".17g")
    if value is None:
        return ""
    return str(value)


###############################################################################
# WRITERS


class RowWriter(Protocol):
    """EMIT_REGISTRY protocol."""

    def __call__(
        self,
        records: Iterable[Mapping[str, Any]],
        fieldnames: Sequence[str],
        stream: IO[str],
        /,
    ) -> int:
        ...


def _write_csv(
    records: Iterable[Mapping[str, Any]], fieldnames: Sequence[str], stream: IO[str], /
) -> int:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(fieldnames)
    count = 0
    for record in records:
        writer.writerow([_format_cell(record[k]) for k in fieldnames])
        count += 1
    return count


def _write_json(
    records: Iterable[Mapping[str, Any]], fieldnames: Sequence[str], stream: IO[str], /
) -> int:
    # floats use repr, the shortest string that round-trips; NaN becomes null
    objects = [{k: _json_value(record[k]) for k in fieldnames} for record in records]
    json.dump(objects, stream, indent=1, allow_nan=False)
    stream.write("\n")
    return len(objects)


EMIT_REGISTRY: dict[str, RowWriter] = {"csv": _write_csv, "json": _write_json}


###############################################################################


@contextlib.contextmanager
def _open(path: str | Path) -> Iterator[IO[str]]:
    if str(path) == STDOUT:
        yield sys.stdout
        return
    with Path(path).open("w", encoding="utf-8", newline="") as stream:
        yield stream


def emit(
    rows: Iterable[SweepRow | Mapping[str, Any]],
    fmt: str = "csv",
    path: str | Path = STDOUT,
    *,
    fieldnames: Sequence[str] | None = None,
) -> int:
    """Write rows as CSV or JSON.

    Parameters
    ----------
    rows : iterable of SweepRow or mapping
        Consumed in full before ``path`` is opened, so an error raised while
        producing the rows leaves no partial file behind.
    fmt : {"csv", "json"}, optional
    path : str or Path, optional
        ``"-"`` writes to standard output.
    fieldnames : sequence of str or None, optional keyword-only
        Column order. Defaults to the `SweepRow` fields.

    Returns
    -------
    int
        Number of rows written.

    Raises
    ------
    UsageError
        For an unknown format.
    OSError
        If ``path`` cannot be written.

    Examples
    --------
    >>> emit([], "csv")
    N,gamma,tau,D_numeric,C_numeric,I_numeric,D_ht,C_ht,regime,n_opt_x,n_opt_y,n_opt_z,abs_dev,rel_dev
    0
    """
    try:
        writer = EMIT_REGISTRY[fmt]
    except KeyError:
        msg = f"format: expected one of {sorted(EMIT_REGISTRY)}, got {fmt!r}"
        raise UsageError(msg) from None

    names = SweepRow.field_names() if fieldnames is None else tuple(fieldnames)
    records = [_as_record(r) for r in rows]
    with _open(path) as stream:
        count = writer(records, names, stream)
    logger.info("wrote %d rows as %s to %s", count, fmt, path)
    return count


def emit_metadata(metadata: Mapping[str, Any], path: str | Path) -> Path | None:
    """Write ``metadata`` next to ``path`` as ``<path>.boundaries.json``.

    Nothing is written when ``path`` is standard output.
    """
    if str(path) == STDOUT:
        return None
    sidecar = Path(f"{path}.boundaries.json")
    with sidecar.open("w", encoding="utf-8") as stream:
        json.dump(metadata, stream, indent=1, sort_keys=True)
        stream.write("\n")
    logger.info("wrote boundary metadata to %s", sidecar)
    return sidecar
