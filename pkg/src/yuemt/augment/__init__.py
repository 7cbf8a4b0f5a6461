"""Synthetic data generation and ratio-controlled corpus mixing."""

from yuemt.augment.backtranslate import backtranslate
from yuemt.augment.mix import NAMED_SPECS, MixSpec, mix
from yuemt.augment.switching import SwitchPlan, model_switch_plan

__all__ = [
    "MixSpec",
    "NAMED_SPECS",
    "SwitchPlan",
    "backtranslate",
    "mix",
    "model_switch_plan",
]
