"""Fine-tuning orchestration: trainers, learning curves, checkpoint policy."""

from yuemt.experiment.curve import EpochRecord, LearningCurve
from yuemt.experiment.runner import (
    CHECKPOINT_POLICIES,
    ExperimentConfig,
    ExperimentResult,
    run_experiment,
)
from yuemt.experiment.trainer import (
    ExternalCommandTrainer,
    ToyTrainer,
    TrainerInterface,
)

__all__ = [
    "CHECKPOINT_POLICIES",
    "EpochRecord",
    "ExperimentConfig",
    "ExperimentResult",
    "ExternalCommandTrainer",
    "LearningCurve",
    "ToyTrainer",
    "TrainerInterface",
    "run_experiment",
]
