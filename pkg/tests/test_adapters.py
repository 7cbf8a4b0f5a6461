import sys

import httpx
import pytest

from yuemt.errors import AdapterUnavailableError
from yuemt.metrics.adapters import (
    CallableAdapter,
    HttpAdapter,
    SubprocessAdapter,
    embedding_metric_score,
)

HYPS = ["hello there", "good morning", "bye"]
REFS = ["hello world", "good evening", "goodbye"]


def test_constant_adapter_gives_constant_corpus_score():
    adapter = CallableAdapter(adapter_id="mock", version="1", fn=lambda h, r: 0.5)
    scores = embedding_metric_score(adapter, HYPS, REFS)
    assert scores.corpus == 0.5
    assert scores.segments == (0.5, 0.5, 0.5)
    assert scores.adapter_id == "mock"


def test_corpus_score_is_mean_of_segments():
    per_pair = {(h, r): 0.1 * (i + 1) for i, (h, r) in enumerate(zip(HYPS, REFS))}
    adapter = CallableAdapter(adapter_id="echo", version="2", fn=lambda h, r: per_pair[(h, r)])
    scores = embedding_metric_score(adapter, HYPS, REFS)
    expected_mean = sum(per_pair.values()) / len(per_pair)
    assert scores.corpus == pytest.approx(expected_mean)
    assert scores.segments == tuple(per_pair[(h, r)] for h, r in zip(HYPS, REFS))


_LENGTH_SCORER = (
    "import sys, json\n"
    "for line in sys.stdin:\n"
    "    if not line.strip():\n"
    "        continue\n"
    "    r = json.loads(line)\n"
    "    assert r['schema_version'] == 1\n"
    "    score = 1.0 if r['hyp'] == r['ref'] else 0.25\n"
    "    print(json.dumps({'score': score}))\n"
)


def test_subprocess_adapter_round_trip():
    adapter = SubprocessAdapter(
        adapter_id="bertscore", version="stub", command=(sys.executable, "-c", _LENGTH_SCORER)
    )
    scores = embedding_metric_score(adapter, ["same", "other"], ["same", "different"])
    assert scores.segments == (1.0, 0.25)
    assert scores.corpus == pytest.approx(0.625)


def test_subprocess_adapter_failure_is_unavailable():
    adapter = SubprocessAdapter(
        adapter_id="broken", version="0", command=(sys.executable, "-c", "raise SystemExit(2)")
    )
    with pytest.raises(AdapterUnavailableError):
        adapter.score_segments([("a", "b")])


def test_subprocess_adapter_wrong_count_is_unavailable():
    adapter = SubprocessAdapter(
        adapter_id="short", version="0",
        command=(sys.executable, "-c", "print('{\"score\": 0.5}')"),
    )
    with pytest.raises(AdapterUnavailableError, match="1 scores for 2"):
        adapter.score_segments([("a", "b"), ("c", "d")])


def test_http_adapter_against_mock_transport():
    def handler(request: httpx.Request) -> httpx.Response:
        import json

        lines = request.content.decode("utf-8").strip().splitlines()
        out = []
        for line in lines:
            record = json.loads(line)
            out.append(json.dumps({"score": float(len(record["hyp"])) }))
        return httpx.Response(200, text="\n".join(out) + "\n")

    adapter = HttpAdapter(
        adapter_id="comet", version="stub", url="http://scorer.test/score",
        transport=httpx.MockTransport(handler),
    )
    scores = embedding_metric_score(adapter, ["ab", "abcd"], ["x", "y"])
    assert scores.segments == (2.0, 4.0)
    assert scores.corpus == 3.0


def test_http_adapter_unreachable_is_unavailable():
    def handler(request):
        raise httpx.ConnectError("refused")

    adapter = HttpAdapter(
        adapter_id="comet", version="stub", url="http://scorer.test/score",
        transport=httpx.MockTransport(handler),
    )
    with pytest.raises(AdapterUnavailableError):
        adapter.score_segments([("a", "b")])
