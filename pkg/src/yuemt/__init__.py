"""yuemt: Cantonese-English low-resource MT toolkit.

Corpus cleaning and splitting, back-translation data augmentation with
ratio-controlled mixing and model switching, a fine-tuning harness with
learning curves, lexical metrics (BLEU, hLEPOR) plus embedding-metric
adapters, and a model-serving REST API with an LRU model manager.
"""

__version__ = "0.1.0"
