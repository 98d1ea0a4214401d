import threading
from pathlib import Path

import circiso
import circiso.orbits

GOLDEN = Path(__file__).parent / "golden"

# Every classify_pair verdict produced while the suite runs is recorded here,
# so the witness-soundness criterion can re-check all of them at the end.
VERDICTS: list = []
_lock = threading.Lock()
_classify = circiso.orbits.classify_pair


def _recording_classify(g1, g2, *args, **kwargs):
    verdict = _classify(g1, g2, *args, **kwargs)
    with _lock:
        VERDICTS.append((g1, g2, verdict))
    return verdict


circiso.orbits.classify_pair = _recording_classify
circiso.classify_pair = _recording_classify

CRITERIA = {
    1: "theta table for C81(1,3,26,28), r=3",
    2: "theta table for C54(1,3,17,19), r=3",
    3: "Adam's orbit of C54(1,17,18,19)",
    4: "Type-2 groups of three reference graphs",
    5: "composite isomorphism C54(1,3,17,19) ~ C54(5,13,21,23)",
    6: "annexure golden blocks",
    7: "family verification over the parameter grid",
    8: "p=2 specialisation at order 48",
    9: "complement parameters give the same family",
    10: "oracle agrees with classify_pair",
    11: "witness soundness of all verdicts",
    12: "group laws (property tests)",
}

_results: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config.addinivalue_line("markers", "run_last: run after every other test")


def pytest_collection_modifyitems(config, items):
    # the soundness sweep must see the verdicts of every other test
    last = [it for it in items if it.get_closest_marker("run_last")]
    rest = [it for it in items if not it.get_closest_marker("run_last")]
    items[:] = rest + last


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        _results.setdefault(marker.args[0], []).append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _results:
            continue
        status = "PASS" if all(_results[n]) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {CRITERIA[n]}")
