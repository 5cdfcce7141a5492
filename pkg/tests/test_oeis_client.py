import http.server
import os
import threading
from pathlib import Path

import pytest

from arbor import oeis_client
from arbor.oeis_client import (
    BFileEntry,
    BFileParseError,
    Mismatch,
    OEISNetworkError,
    bfile_url,
    bundled_path,
    compare,
    fetch_bfile,
    parse_bfile,
)
from arbor.sequence import a_gf
from arbor.trees import count_no_gray

PREFIX = [1, 1, 1, 2, 3, 6, 10, 20, 36, 73]


def test_parse_basic():
    text = "# comment\n\n1 1\n5 3\n  \n10 73\n"
    assert parse_bfile(text) == [BFileEntry(1, 1), BFileEntry(5, 3), BFileEntry(10, 73)]


def test_parse_single_line():
    assert parse_bfile("5 3") == [BFileEntry(5, 3)]
    assert parse_bfile("# comment") == []


def test_parse_big_values_and_tabs():
    big = 10 ** 200 + 7
    assert parse_bfile(f"3\t{big}\n") == [BFileEntry(3, big)]


@pytest.mark.parametrize("text, line", [
    ("1 1\n2\n", 2),
    ("1 1\n2 x\n", 2),
    ("# c\n1 1 1\n", 2),
    ("1 1\n3 1\n2 1\n", 3),
    ("1 1\n1 1\n", 2),
])
def test_parse_errors_report_line(text, line):
    with pytest.raises(BFileParseError) as info:
        parse_bfile(text)
    assert info.value.line == line


def test_bundled_fixtures_parse():
    a = fetch_bfile("A345973", "file")
    assert [e.value for e in a[:10]] == PREFIX
    assert {e.index: e.value for e in a}[10] == 73
    b = fetch_bfile("A346787", "file", bundled_path("A346787"))
    assert b[0] == BFileEntry(1, 1)


def test_bundled_fixture_matches_full_range():
    ref = fetch_bfile("A345973", "file")
    assert compare(a_gf(len(ref)), ref, 0) == []


@pytest.mark.parametrize("bad", ["A34597", "a345973", "A3459730", "B345973", ""])
def test_bad_ids(bad):
    with pytest.raises(ValueError):
        fetch_bfile(bad, "file")


def test_url_pattern():
    assert bfile_url("A346787") == "https://oeis.org/A346787/b346787.txt"


def test_compare_examples():
    ref = fetch_bfile("A345973", "file")
    assert compare(a_gf(10), ref, 0) == []
    same = [BFileEntry(i, v) for i, v in enumerate(PREFIX, start=1)]
    assert compare(dict(enumerate(PREFIX, start=1)), same, 0) == []
    gray_free = {n: count_no_gray(n) for n in range(2, 11)}
    assert compare(gray_free, fetch_bfile("A346787", "file"), 1) == []


def test_compare_reports_every_mismatch_with_both_values():
    ref = [BFileEntry(i, v) for i, v in enumerate(PREFIX, start=1)]
    computed = dict(enumerate(PREFIX, start=1))
    computed[4] = 5
    computed[9] = 0
    computed[50] = 1  # outside the reference, ignored
    assert compare(computed, ref) == [Mismatch(4, 5, 2), Mismatch(9, 0, 36)]


def test_compare_offset_shifts_reference():
    ref = [BFileEntry(3, 30), BFileEntry(4, 40)]
    assert compare({2: 30, 3: 40}, ref, offset=1) == []
    assert compare({2: 30, 3: 41}, ref, offset=1) == [Mismatch(3, 41, 40)]


def test_compare_without_overlap_is_an_error():
    with pytest.raises(ValueError):
        compare({1: 1}, [BFileEntry(5, 3)], 0)


def test_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv(oeis_client.CACHE_ENV, str(tmp_path))
    assert oeis_client.cache_dir() == tmp_path
    monkeypatch.delenv(oeis_client.CACHE_ENV)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "x"))
    assert oeis_client.cache_dir() == tmp_path / "x" / "arbor" / "oeis"


@pytest.fixture
def bfile_server():
    """A local HTTP server laid out like oeis.org, counting requests."""
    payload = Path(bundled_path("A345973")).read_bytes()
    hits = []

    class Handler(http.server.BaseHTTPRequestHandler):
        def do_GET(self):
            hits.append(self.path)
            if self.path == "/A345973/b345973.txt":
                self.send_response(200)
                self.end_headers()
                self.wfile.write(payload)
            elif self.path == "/A000001/b000001.txt":
                self.send_response(200)
                self.end_headers()
                self.wfile.write(b"1 1\nnot a bfile\n")
            else:
                self.send_error(404)

        def log_message(self, *args):
            pass

    server = http.server.ThreadingHTTPServer(("127.0.0.1", 0), Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}", hits
    server.shutdown()


def test_network_fetch_and_cache(bfile_server, tmp_path):
    url, hits = bfile_server
    fresh = fetch_bfile("A345973", "network", base_url=url, cache=tmp_path)
    assert hits == ["/A345973/b345973.txt"]
    cached_file = tmp_path / "A345973.txt"
    assert cached_file.read_bytes() == Path(bundled_path("A345973")).read_bytes()
    again = fetch_bfile("A345973", "network", base_url=url, cache=tmp_path)
    assert len(hits) == 1
    assert again == fresh == fetch_bfile("A345973", "file")
    fetch_bfile("A345973", "network", base_url=url, cache=tmp_path, refresh=True)
    assert len(hits) == 2
    assert not [p for p in tmp_path.iterdir() if p.suffix == ".tmp"]


def test_network_404_is_network_error(bfile_server, tmp_path):
    url, _ = bfile_server
    with pytest.raises(OEISNetworkError):
        fetch_bfile("A346787", "network", base_url=url, cache=tmp_path)
    assert not list(tmp_path.iterdir())


def test_bad_payload_not_cached(bfile_server, tmp_path):
    url, _ = bfile_server
    with pytest.raises(BFileParseError):
        fetch_bfile("A000001", "network", base_url=url, cache=tmp_path)
    assert not (tmp_path / "A000001.txt").exists()


def test_unreachable_host(tmp_path):
    with pytest.raises(OEISNetworkError):
        fetch_bfile("A345973", "network", base_url="http://127.0.0.1:9", cache=tmp_path, timeout=2)


@pytest.mark.network
@pytest.mark.skipif(not os.environ.get("ARBOR_NETWORK_TESTS"), reason="set ARBOR_NETWORK_TESTS=1")
@pytest.mark.parametrize("sid, offset", [("A345973", 0), ("A346787", 1)])
def test_live_oeis(tmp_path, sid, offset):
    ref = fetch_bfile(sid, "network", cache=tmp_path)
    if sid == "A345973":
        computed = dict(a_gf(200).items())
    else:
        computed = {n: count_no_gray(n) for n in range(2, 41)}
    assert compare(computed, ref, offset) == []
