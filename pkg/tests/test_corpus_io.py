import pytest

from conftest import make_pair, make_parallel
from yuemt.corpus.io import load_corpus, load_mono, load_parallel, save_corpus
from yuemt.corpus.types import MonoCorpus, Sentence
from yuemt.errors import IntegrityError, ParseError


def test_parallel_round_trip_field_for_field(tmp_path):
    corpus = make_parallel(
        [
            make_pair("a1", "你好世界", "hello world"),
            make_pair("a2", "早晨", "good morning", provenance="synthetic",
                      generator="toy/ft/yue-en"),
            make_pair("a3", "再見", "bye"),
        ],
        name="trip",
    )
    path = save_corpus(corpus, tmp_path / "c.jsonl")
    loaded = load_parallel(path)
    assert loaded.items == corpus.items
    assert loaded.name == corpus.name
    assert loaded.log == corpus.log


def test_mono_round_trip(tmp_path):
    corpus = MonoCorpus(
        items=(Sentence(id="m1", text="香港", lang="yue"),),
        name="mono",
        seed=42,
        log=("toylang.mono(seed=1, size=1)",),
    )
    path = save_corpus(corpus, tmp_path / "m.jsonl")
    loaded = load_mono(path)
    assert loaded == corpus


def test_save_is_byte_identical_across_calls(tmp_path):
    corpus = make_parallel(
        [make_pair("e1", "香港🙂加油", "go go 🙂"), make_pair("e2", "早晨", "morning")],
        name="emoji",
    )
    first = save_corpus(corpus, tmp_path / "a.jsonl").read_bytes()
    reloaded = load_parallel(save_corpus(corpus, tmp_path / "b.jsonl"))
    second = save_corpus(reloaded, tmp_path / "c.jsonl").read_bytes()
    assert first == second


def test_load_corpus_dispatches_on_kind(tmp_path):
    mono = MonoCorpus(items=(Sentence(id="m1", text="香港", lang="yue"),), name="m")
    parallel = make_parallel([make_pair("p1", "你好", "hi")], name="p")
    mono_path = save_corpus(mono, tmp_path / "mono.jsonl")
    par_path = save_corpus(parallel, tmp_path / "par.jsonl")
    assert isinstance(load_corpus(mono_path), MonoCorpus)
    assert load_corpus(par_path).items == parallel.items


def test_missing_field_names_field_and_line(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text(
        '{"id":"a","src":"x","tgt":"y","src_lang":"yue","tgt_lang":"en","provenance":"real"}\n'
        '{"id":"b","src":"x","src_lang":"yue","tgt_lang":"en","provenance":"real"}\n',
        encoding="utf-8",
    )
    with pytest.raises(ParseError, match="line 2.*'tgt'"):
        load_parallel(path)


def test_malformed_json_reports_line_number(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text('{"id":"a","text":"x","lang":"yue"}\n{oops\n', encoding="utf-8")
    with pytest.raises(ParseError, match="line 2"):
        load_mono(path)


def test_duplicate_ids_are_integrity_error(tmp_path):
    path = tmp_path / "dup.jsonl"
    path.write_text(
        '{"id":"a","text":"x","lang":"yue"}\n{"id":"a","text":"y","lang":"yue"}\n',
        encoding="utf-8",
    )
    with pytest.raises(IntegrityError, match="duplicate id"):
        load_mono(path)


def test_text_is_nfc_normalized_on_load(tmp_path):
    # U+0065 U+0301 (decomposed) must load as U+00E9.
    path = tmp_path / "nfc.jsonl"
    path.write_text('{"id":"a","text":"cafe\\u0301","lang":"en"}\n', encoding="utf-8")
    loaded = load_mono(path)
    assert loaded.items[0].text == "café"
