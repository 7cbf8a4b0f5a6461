"""Fine-tuning orchestration: run epochs through a trainer, score the dev
set after each one, select a checkpoint, and register the resulting model.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

from yuemt.backends.descriptors import ModelDescriptor, make_category
from yuemt.backends.registry import ModelRegistry
from yuemt.corpus.types import ParallelCorpus
from yuemt.errors import ContractError, ExperimentError
from yuemt.experiment.curve import EpochRecord, LearningCurve
from yuemt.experiment.trainer import TrainerInterface
from yuemt.metrics.bleu import corpus_bleu
from yuemt.metrics.tokenize import tokenize

CHECKPOINT_POLICIES = ("best-dev", "last")
DEFAULT_EPOCHS = 3


@dataclass(frozen=True)
class ExperimentConfig:
    base: str
    train_corpus: ParallelCorpus
    dev_corpus: ParallelCorpus
    epochs: int = DEFAULT_EPOCHS
    seed: int = 0
    mix_ratio: str | None = None  # None -> plain "ft"
    generator_base: str | None = None  # set on a model switch
    generator_key: str | None = None
    checkpoint_policy: str = "best-dev"
    name: str = ""
    eval_scheme: str = "whitespace"

    def __post_init__(self):
        if self.epochs < 1:
            raise ContractError(f"epochs must be >= 1, got {self.epochs}")
        if self.checkpoint_policy not in CHECKPOINT_POLICIES:
            raise ContractError(
                f"unknown checkpoint policy {self.checkpoint_policy!r}; "
                f"expected one of {CHECKPOINT_POLICIES}"
            )
        if (
            self.train_corpus.direction
            and self.dev_corpus.direction
            and self.train_corpus.direction != self.dev_corpus.direction
        ):
            raise ContractError(
                f"train/dev direction mismatch: {self.train_corpus.direction} "
                f"vs {self.dev_corpus.direction}"
            )

    @property
    def training_category(self) -> str:
        return make_category(
            ratio=self.mix_ratio, trainee_base=self.base, generator_base=self.generator_base
        )


@dataclass(frozen=True)
class ExperimentResult:
    descriptor: ModelDescriptor
    curve: LearningCurve
    model_path: Path
    curve_path: Path


def _dev_bleu(trainer: TrainerInterface, state, dev: ParallelCorpus, scheme: str) -> float:
    if len(dev) == 0:
        return 0.0
    sources = [pair.source.text for pair in dev]
    hyps_text = trainer.translate_batch(state, sources)
    tgt_lang = dev.direction[1] if dev.direction else "en"
    hyps = [tokenize(t, lang=tgt_lang, scheme=scheme) for t in hyps_text]
    refs = [tokenize(p.target.text, lang=tgt_lang, scheme=scheme) for p in dev]
    return corpus_bleu(hyps, refs).score


def run_experiment(
    cfg: ExperimentConfig,
    trainer: TrainerInterface,
    registry: ModelRegistry,
    workdir: str | Path,
) -> ExperimentResult:
    """Train cfg.epochs epochs, tracking dev SacreBLEU after each epoch.

    The learning curve is persisted incrementally (a trainer failure leaves
    the completed-epoch prefix on disk) and the checkpoint-policy-selected
    state is saved and registered under the category derived from cfg.
    """
    workdir = Path(workdir)
    workdir.mkdir(parents=True, exist_ok=True)
    curve_path = workdir / "curve.json"

    direction = cfg.train_corpus.direction or cfg.dev_corpus.direction
    if direction is None:
        raise ContractError("cannot infer direction from empty train and dev corpora")

    state = trainer.init_state(cfg.seed)
    records: list[EpochRecord] = []
    best_state = trainer.snapshot(state)
    best_score: float | None = None

    for epoch in range(1, cfg.epochs + 1):
        started = time.perf_counter()
        try:
            state = trainer.train_epoch(state, cfg.train_corpus, seed=cfg.seed + epoch)
        except Exception as exc:
            LearningCurve(records=tuple(records)).save(curve_path)
            raise ExperimentError(
                f"trainer failed at epoch {epoch}; partial curve persisted to {curve_path}"
            ) from exc
        wall = time.perf_counter() - started
        score = _dev_bleu(trainer, state, cfg.dev_corpus, cfg.eval_scheme)
        records.append(EpochRecord(epoch=epoch, dev_bleu=score, wall_time_s=wall))
        LearningCurve(records=tuple(records)).save(curve_path)
        if best_score is None or score > best_score:
            best_score = score
            best_state = trainer.snapshot(state)

    curve = LearningCurve(records=tuple(records))
    final_state = best_state if cfg.checkpoint_policy == "best-dev" else state

    category = cfg.training_category
    model_path = trainer.save(final_state, workdir / "model")
    descriptor = ModelDescriptor(
        base=cfg.base,
        training_category=category,
        direction=direction,
        path=str(model_path),
    )
    registry.register(descriptor, trainer.backend_params(model_path))
    return ExperimentResult(
        descriptor=descriptor, curve=curve, model_path=model_path, curve_path=curve_path
    )
