import csv
import io
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Sequence

from core.errors import UsageError
from modules.report.rows import ROW_FIELDS, ReportRow, VerdictRow

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")


def render_csv(rows: Sequence[ReportRow], verdicts: Sequence[VerdictRow]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=ROW_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_record())
    for verdict in verdicts:
        writer.writerow(verdict.as_record())
    return buffer.getvalue()


def render_json(rows: Sequence[ReportRow], verdicts: Sequence[VerdictRow]) -> str:
    document = {
        "passed": all(v.passed for v in verdicts),
        "rows": [row.as_record() for row in rows],
        "verdicts": [verdict.as_record() for verdict in verdicts],
    }
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render(rows: Sequence[ReportRow], verdicts: Sequence[VerdictRow], fmt: str) -> str:
    if fmt == "csv":
        return render_csv(rows, verdicts)
    if fmt == "json":
        return render_json(rows, verdicts)
    raise UsageError(f"unknown report format {fmt!r}; expected one of {', '.join(FORMATS)}")


def write_atomic(path: Path, text: str):
    """Write through a temp file in the target directory; the target is never left half-written."""
    path = Path(path)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.info("[REPORT] wrote %s (%d bytes)", path, len(text.encode("utf-8")))
