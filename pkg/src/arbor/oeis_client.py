"""Read OEIS b-files from disk, the network, or the copies bundled with the package.

A b-file is plain text, one ``index value`` pair per line.  Blank lines and
lines starting with ``#`` are ignored.

Network fetches go to ``https://oeis.org/<id>/b<digits>.txt`` and are cached
under ``$ARBOR_CACHE_DIR`` (default ``$XDG_CACHE_HOME/arbor/oeis`` or
``~/.cache/arbor/oeis``).  Cache files are written to a temp file and
renamed into place, so concurrent fetches of one id cannot tear a file.
"""

from __future__ import annotations

import logging
import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple

log = logging.getLogger(__name__)

CACHE_ENV = "ARBOR_CACHE_DIR"
DEFAULT_BASE_URL = "https://oeis.org"
BUNDLED = ("A345973", "A346787")

_ID_RE = re.compile(r"A\d{6}")


class OEISError(Exception):
    pass


class BFileParseError(OEISError):
    def __init__(self, message: str, line: int, source: str = "<string>"):
        super().__init__(f"{source}:{line}: {message}")
        self.line = line
        self.source = source


class OEISNetworkError(OEISError):
    """Fetching from the network failed.  Never papered over with a fallback."""


class BFileEntry(NamedTuple):
    index: int
    value: int


@dataclass(frozen=True)
class Mismatch:
    n: int
    computed: int
    reference: int

    def as_json(self) -> dict:
        return {"n": self.n, "computed": str(self.computed), "reference": str(self.reference)}


def check_id(sequence_id: str) -> str:
    if not _ID_RE.fullmatch(sequence_id):
        raise ValueError(f"not an OEIS id (A + 6 digits): {sequence_id!r}")
    return sequence_id


def bfile_url(sequence_id: str, base_url: str = DEFAULT_BASE_URL) -> str:
    check_id(sequence_id)
    return f"{base_url.rstrip('/')}/{sequence_id}/b{sequence_id[1:]}.txt"


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "arbor" / "oeis"


def parse_bfile(text: str, source: str = "<string>") -> list[BFileEntry]:
    entries: list[BFileEntry] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(f"expected 'index value', got {raw!r}", lineno, source)
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {raw!r}", lineno, source) from None
        if entries and index <= entries[-1].index:
            raise BFileParseError(
                f"index {index} does not increase (previous {entries[-1].index})", lineno, source
            )
        entries.append(BFileEntry(index, value))
    return entries


def bundled_path(sequence_id: str) -> Path:
    check_id(sequence_id)
    if sequence_id not in BUNDLED:
        raise ValueError(f"no bundled b-file for {sequence_id}; have {BUNDLED}")
    return Path(str(resources.files("arbor") / "data" / f"b{sequence_id[1:]}.txt"))


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _download(url: str, timeout: float) -> str:
    log.info("fetching %s", url)
    req = urllib.request.Request(url, headers={"User-Agent": "arbor-bfile/0.1"})
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            return resp.read().decode("utf-8")
    except (urllib.error.URLError, OSError, UnicodeDecodeError) as exc:
        raise OEISNetworkError(f"could not fetch {url}: {exc}") from exc


def fetch_bfile(
    sequence_id: str,
    source: str = "network",
    path: str | os.PathLike | None = None,
    *,
    refresh: bool = False,
    base_url: str = DEFAULT_BASE_URL,
    cache: Path | None = None,
    timeout: float = 30.0,
) -> list[BFileEntry]:
    """Load the b-file for ``sequence_id``.

    ``source="file"`` reads ``path``, or the bundled copy when ``path`` is
    None.  ``source="network"`` serves from the cache unless ``refresh`` is
    set, otherwise downloads and stores the text verbatim.
    """
    check_id(sequence_id)
    if source == "file":
        p = Path(path) if path is not None else bundled_path(sequence_id)
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as exc:
            raise OEISError(f"cannot read {p}: {exc}") from exc
        return parse_bfile(text, str(p))
    if source != "network":
        raise ValueError(f"source must be 'network' or 'file', got {source!r}")

    cached = (cache or cache_dir()) / f"{sequence_id}.txt"
    if cached.exists() and not refresh:
        log.debug("cache hit %s", cached)
        return parse_bfile(cached.read_text(encoding="utf-8"), str(cached))
    text = _download(bfile_url(sequence_id, base_url), timeout)
    # Parse before caching so a bad payload never lands in the cache.
    entries = parse_bfile(text, bfile_url(sequence_id, base_url))
    _atomic_write(cached, text)
    return entries


def compare(
    computed: Mapping[int, int] | Iterable[tuple[int, int]],
    reference: Iterable[BFileEntry],
    offset: int = 0,
) -> list[Mismatch]:
    """Mismatches between ``computed[n]`` and ``reference[n + offset]`` on the overlap.

    ``computed`` may be a ``SequenceTable``, a dict, or ``(n, value)`` pairs.
    Raises ``ValueError`` when no index overlaps, since that is a
    configuration mistake rather than agreement.
    """
    if hasattr(computed, "items"):
        pairs = list(computed.items())
    else:
        pairs = list(computed)
    ref = {e.index: e.value for e in reference}
    overlap = 0
    out = []
    for n, value in sorted(pairs):
        want = ref.get(n + offset)
        if want is None:
            continue
        overlap += 1
        if value != want:
            out.append(Mismatch(n, value, want))
    if overlap == 0:
        raise ValueError(f"no overlapping indices between computed values and reference (offset {offset})")
    return out
