import json
import sys

import pytest

from conftest import CIPHER_SEED
from yuemt.backends.registry import ModelRegistry
from yuemt.backends.toy import cipher_table
from yuemt.errors import ContractError, ExperimentError
from yuemt.experiment.curve import EpochRecord, LearningCurve
from yuemt.experiment.runner import ExperimentConfig, run_experiment
from yuemt.experiment.trainer import ExternalCommandTrainer, ToyTrainer
from yuemt.toylang import make_parallel_corpus


def corpora(train_size=60, dev_size=20):
    train = make_parallel_corpus(seed=3, size=train_size, cipher_seed=CIPHER_SEED, name="train")
    dev = make_parallel_corpus(seed=4, size=dev_size, cipher_seed=CIPHER_SEED,
                               name="dev", id_prefix="d")
    return train, dev


# ------------------------------------------------------------ toy trainer


def test_toy_trainer_learns_the_cipher_on_observed_tokens():
    train, _ = corpora()
    trainer = ToyTrainer()
    state = trainer.train_epoch(trainer.init_state(0), train, seed=1)
    table = cipher_table(CIPHER_SEED)
    for src_token, counts in state.items():
        expected = "".join(table.get(ch, ch) for ch in src_token)
        assert list(counts) == [expected]


def test_toy_trainer_empty_corpus_is_copy_through():
    from yuemt.corpus.types import ParallelCorpus

    trainer = ToyTrainer()
    state = trainer.train_epoch(trainer.init_state(0), ParallelCorpus(items=()), seed=1)
    assert trainer.translate(state, "abc def") == "abc def"


def test_toy_trainer_counts_never_decrease():
    train, _ = corpora()
    trainer = ToyTrainer()
    one = trainer.train_epoch(trainer.init_state(0), train, seed=1)
    two = trainer.train_epoch(one, train, seed=2)
    for src, counts in one.items():
        for tgt, count in counts.items():
            assert two[src][tgt] >= count


def test_toy_trainer_coverage_monotone_in_data():
    real, _ = corpora(train_size=40)
    more = make_parallel_corpus(seed=9, size=40, cipher_seed=CIPHER_SEED,
                                name="extra", id_prefix="x")
    trainer = ToyTrainer()
    small = trainer.train_epoch(trainer.init_state(0), real, seed=1)
    big = trainer.train_epoch(small, more, seed=1)
    assert set(small).issubset(set(big))


# ----------------------------------------------------------- experiments


def test_run_experiment_produces_full_curve_and_registers(tmp_path):
    train, dev = corpora()
    cfg = ExperimentConfig(base="toy", train_corpus=train, dev_corpus=dev, epochs=3, seed=5)
    registry = ModelRegistry(tmp_path / "registry")
    result = run_experiment(cfg, ToyTrainer(), registry, workdir=tmp_path / "run")
    assert len(result.curve) == 3
    assert [r.epoch for r in result.curve.records] == [1, 2, 3]
    assert result.descriptor.training_category == "ft"
    assert registry.resolve("toy", "ft", ("yue", "en"))
    assert result.curve_path.exists() and result.model_path.exists()


def test_run_experiment_is_deterministic(tmp_path):
    train, dev = corpora()
    cfg = ExperimentConfig(base="toy", train_corpus=train, dev_corpus=dev, epochs=2, seed=5)
    registry = ModelRegistry(tmp_path / "registry")
    first = run_experiment(cfg, ToyTrainer(), registry, workdir=tmp_path / "a")
    second = run_experiment(cfg, ToyTrainer(), registry, workdir=tmp_path / "b")
    assert [r.dev_bleu for r in first.curve.records] == [
        r.dev_bleu for r in second.curve.records
    ]
    assert first.model_path.read_text() == second.model_path.read_text()


class _ScriptedTrainer:
    """Dev accuracy follows a script; state is the epoch number. Used to pin
    checkpoint-policy behavior to a curve that peaks mid-run."""

    def __init__(self, correct_per_epoch):
        self.correct_per_epoch = correct_per_epoch

    def init_state(self, seed):
        return 0

    def train_epoch(self, state, corpus, seed):
        return state + 1

    def translate_batch(self, state, texts):
        correct = self.correct_per_epoch[state - 1]
        return [t if i < correct else "wrong" for i, t in enumerate(texts)]

    def snapshot(self, state):
        return state

    def save(self, state, path):
        from pathlib import Path

        path = Path(path)
        path.write_text(json.dumps({"epoch": state}), encoding="utf-8")
        return path

    def backend_params(self, path):
        return {"kind": "external", "command": ["true"]}


def test_best_dev_policy_selects_the_peak_epoch(tmp_path):
    _, dev = corpora(dev_size=10)
    train, _ = corpora(train_size=10)
    # Dev quality peaks at epoch 3 then collapses.
    trainer = _ScriptedTrainer(correct_per_epoch=[2, 5, 9, 3, 1])
    cfg = ExperimentConfig(base="nllb", train_corpus=train, dev_corpus=dev, epochs=5, seed=0)
    registry = ModelRegistry(tmp_path / "registry")
    result = run_experiment(cfg, trainer, registry, workdir=tmp_path / "run")
    assert result.curve.best_epoch() == 3
    saved = json.loads(result.model_path.read_text())
    assert saved["epoch"] == 3


def test_best_dev_ties_break_to_earliest_epoch(tmp_path):
    train, dev = corpora(train_size=10, dev_size=10)
    trainer = _ScriptedTrainer(correct_per_epoch=[4, 4, 4])
    cfg = ExperimentConfig(base="toy", train_corpus=train, dev_corpus=dev, epochs=3, seed=0)
    registry = ModelRegistry(tmp_path / "registry")
    result = run_experiment(cfg, trainer, registry, workdir=tmp_path / "run")
    assert result.curve.best_epoch() == 1
    assert json.loads(result.model_path.read_text())["epoch"] == 1


def test_last_policy_keeps_final_state(tmp_path):
    train, dev = corpora(train_size=10, dev_size=10)
    trainer = _ScriptedTrainer(correct_per_epoch=[9, 2, 1])
    cfg = ExperimentConfig(
        base="toy", train_corpus=train, dev_corpus=dev, epochs=3, seed=0,
        checkpoint_policy="last",
    )
    registry = ModelRegistry(tmp_path / "registry")
    result = run_experiment(cfg, trainer, registry, workdir=tmp_path / "run")
    assert json.loads(result.model_path.read_text())["epoch"] == 3


class _FailingTrainer(_ScriptedTrainer):
    def train_epoch(self, state, corpus, seed):
        if state >= 2:
            raise RuntimeError("boom")
        return state + 1


def test_trainer_failure_persists_partial_curve(tmp_path):
    train, dev = corpora(train_size=10, dev_size=10)
    trainer = _FailingTrainer(correct_per_epoch=[3, 3, 3, 3])
    cfg = ExperimentConfig(base="toy", train_corpus=train, dev_corpus=dev, epochs=4, seed=0)
    registry = ModelRegistry(tmp_path / "registry")
    with pytest.raises(ExperimentError):
        run_experiment(cfg, trainer, registry, workdir=tmp_path / "run")
    partial = LearningCurve.load(tmp_path / "run" / "curve.json")
    assert len(partial) == 2


def test_experiment_config_validation():
    train, dev = corpora(train_size=5, dev_size=5)
    with pytest.raises(ContractError):
        ExperimentConfig(base="toy", train_corpus=train, dev_corpus=dev, epochs=0)
    with pytest.raises(ContractError):
        ExperimentConfig(
            base="toy", train_corpus=train, dev_corpus=dev, checkpoint_policy="newest"
        )


def test_mix_ratio_and_generator_derive_category():
    train, dev = corpora(train_size=5, dev_size=5)
    cfg = ExperimentConfig(
        base="nllb", train_corpus=train, dev_corpus=dev,
        mix_ratio="1:1", generator_base="mbart",
    )
    assert cfg.training_category == "ft-syn-1:1-mbart"


def test_curve_requires_contiguous_epochs():
    with pytest.raises(ContractError):
        LearningCurve(records=(EpochRecord(epoch=2, dev_bleu=1.0, wall_time_s=0.1),))


def test_curve_round_trips_through_json(tmp_path):
    curve = LearningCurve(
        records=(
            EpochRecord(epoch=1, dev_bleu=10.5, wall_time_s=0.2, extras={"hlepor": 0.4}),
            EpochRecord(epoch=2, dev_bleu=11.0, wall_time_s=0.3),
        )
    )
    path = curve.save(tmp_path / "curve.json")
    assert LearningCurve.load(path) == curve


# ------------------------------------------------------ external trainer

_STUB_TRAINER = r"""
import json, sys, pathlib
req = json.loads(sys.stdin.readline())
state = pathlib.Path(req["state_dir"]) / "model.json"
op = req["op"]
if op == "init":
    state.write_text(json.dumps({}))
    print(json.dumps({"ok": True}))
elif op == "train_epoch":
    table = json.loads(state.read_text())
    for line in pathlib.Path(req["corpus_path"]).read_text().splitlines():
        rec = json.loads(line)
        for s, t in zip(rec["src"].split(), rec["tgt"].split()):
            table.setdefault(s, {}).setdefault(t, 0)
            table[s][t] += 1
    state.write_text(json.dumps(table))
    print(json.dumps({"ok": True}))
elif op == "translate":
    table = json.loads(state.read_text())
    outs = []
    for text in req["texts"]:
        toks = []
        for tok in text.split():
            options = table.get(tok) or {}
            toks.append(max(options, key=options.get) if options else tok)
        outs.append(" ".join(toks))
    print(json.dumps({"ok": True, "texts": outs}))
else:
    print(json.dumps({"ok": False, "error": "bad op"}))
"""


def test_external_command_trainer_runs_an_experiment(tmp_path):
    train, dev = corpora(train_size=30, dev_size=10)
    trainer = ExternalCommandTrainer(
        command=[sys.executable, "-c", _STUB_TRAINER], workdir=tmp_path / "ext"
    )
    cfg = ExperimentConfig(base="opus", train_corpus=train, dev_corpus=dev, epochs=2, seed=1)
    registry = ModelRegistry(tmp_path / "registry")
    result = run_experiment(cfg, trainer, registry, workdir=tmp_path / "run")
    assert len(result.curve) == 2
    assert result.curve.records[0].dev_bleu > 0.0
    _, params = registry.resolve("opus", "ft", ("yue", "en"))
    assert params["kind"] == "external"
