"""Command-line interface: every pipeline stage as a headless subcommand.

    yuemt clean         de-noise + anonymize a raw monolingual dump
    yuemt split         shuffle and partition a corpus
    yuemt backtranslate generate synthetic pairs with a registered model
    yuemt mix           combine real + synthetic data under a ratio spec
    yuemt train         run a fine-tuning experiment, register the model
    yuemt evaluate      score registered systems on a test corpus
    yuemt report        build the clustered score table (TSV/JSON/text/PNG)
    yuemt serve         start the translation REST API
    yuemt toydata       generate the seeded toy-language fixture set

Every subcommand validates its configuration before writing anything, puts
all outputs in a run directory with a manifest (config, seeds, content
hashes), and exits 0 on success, 2 on config errors, 3 on data errors, and
4 on runtime errors. YUEMT_REGISTRY overrides the default registry path.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

import yaml

from yuemt import augment, corpus, toylang
from yuemt.backends.base import TranslationRequest
from yuemt.backends.descriptors import BASES, ModelDescriptor, parse_descriptor
from yuemt.backends.registry import ModelRegistry
from yuemt.corpus.cleaning import CleaningConfig
from yuemt.errors import ConfigError, DataError, YuemtError
from yuemt.experiment import ExperimentConfig, ToyTrainer, run_experiment
from yuemt.metrics import (
    ScoreRow,
    SubprocessAdapter,
    build_score_table,
    corpus_bleu,
    corpus_hlepor,
    embedding_metric_score,
    tokenize,
)
from yuemt.metrics.figures import render_learning_curve, render_score_figure
from yuemt.runs import RunDir
from yuemt.errors import AdapterUnavailableError

logger = logging.getLogger("yuemt")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_RUNTIME = 4


def _parse_set_overrides(pairs: list[str]) -> dict:
    overrides = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise ConfigError(f"--set expects key=value, got {pair!r}")
        key, _, value = pair.partition("=")
        overrides[key.strip()] = yaml.safe_load(value)
    return overrides


def resolve_config(args: argparse.Namespace, defaults: dict) -> dict:
    """Layer config sources: defaults < config file < --set < explicit flags.

    Unknown keys anywhere are rejected. Returns the effective config and
    logs it, so every run records exactly what it ran with.
    """
    config = dict(defaults)
    config_path = getattr(args, "config", None)
    if config_path:
        try:
            loaded = yaml.safe_load(Path(config_path).read_text(encoding="utf-8")) or {}
        except FileNotFoundError as exc:
            raise ConfigError(f"config file not found: {config_path}") from exc
        except yaml.YAMLError as exc:
            raise ConfigError(f"config file {config_path} is not valid YAML: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError(f"config file {config_path} must hold a mapping")
        for key, value in loaded.items():
            if key not in defaults:
                raise ConfigError(f"unknown config key {key!r} (allowed: {sorted(defaults)})")
            config[key] = value
    for key, value in _parse_set_overrides(getattr(args, "set", None)).items():
        if key not in defaults:
            raise ConfigError(f"unknown config key {key!r} (allowed: {sorted(defaults)})")
        config[key] = value
    for key in defaults:
        flag = getattr(args, key, None)
        if flag is not None:
            config[key] = flag
    logger.info("effective config: %s", json.dumps(config, ensure_ascii=False, default=str))
    return config


def _require(config: dict, *keys: str) -> None:
    missing = [k for k in keys if config.get(k) in (None, "")]
    if missing:
        raise ConfigError(f"missing required config: {', '.join(missing)}")


def _require_inputs(*paths) -> None:
    missing = [str(p) for p in paths if p and not Path(p).exists()]
    if missing:
        raise ConfigError(f"input not found: {', '.join(missing)}")


def _registry_path(value) -> Path:
    path = value or os.environ.get("YUEMT_REGISTRY")
    if not path:
        raise ConfigError("no registry path: pass --registry or set YUEMT_REGISTRY")
    return Path(path)


def _load_mono_any(path: str | Path, lang: str) -> corpus.MonoCorpus:
    """Load a mono corpus from JSONL, or from a plain-text dump (one sentence
    per line) for raw scraped input."""
    path = Path(path)
    if path.suffix == ".txt":
        lines = path.read_text(encoding="utf-8").splitlines()
        return toylang.lines_to_mono(lines, lang=lang, name=path.stem)
    return corpus.load_mono(path)


# ------------------------------------------------------------- subcommands


def cmd_clean(args) -> int:
    defaults = {
        "input": None,
        "lang": "yue",
        "min_cjk_chars": 10,
        "dedupe": False,
        "output": "clean.jsonl",
    }
    config = resolve_config(args, defaults)
    _require(config, "input")
    _require_inputs(config["input"])
    run = RunDir(args.run_dir, "clean", config)
    run.record_input(config["input"])

    raw = _load_mono_any(config["input"], config["lang"])
    cfg = CleaningConfig(min_cjk_chars=int(config["min_cjk_chars"]), dedupe=bool(config["dedupe"]))
    cleaned, report = corpus.clean(raw, cfg)

    out_path = run.file(config["output"])
    corpus.save_corpus(cleaned, out_path)
    run.record_output(out_path)
    run.write_json("clean_report.json", report.as_dict())
    run.finish()
    print(f"clean: kept {report.kept_count}/{report.input_count} "
          f"(short={report.dropped_short}, noise={report.dropped_noise}, "
          f"anonymized={report.anonymized_count}) -> {out_path}")
    return EXIT_OK


def cmd_split(args) -> int:
    defaults = {"input": None, "sizes": None, "seed": 0}
    config = resolve_config(args, defaults)
    _require(config, "input", "sizes")
    _require_inputs(config["input"])
    sizes = config["sizes"]
    if isinstance(sizes, str):
        sizes = tuple(int(s) for s in sizes.split(","))
    sizes = tuple(int(s) for s in sizes)
    if len(sizes) != 3:
        raise ConfigError(f"sizes must be train,dev,test; got {config['sizes']!r}")
    run = RunDir(args.run_dir, "split", {**config, "sizes": list(sizes)})
    run.record_input(config["input"])

    data = corpus.load_corpus(config["input"])
    train, dev, test = corpus.split(data, sizes, seed=int(config["seed"]))
    for name, part in (("train", train), ("dev", dev), ("test", test)):
        path = run.file(f"{name}.jsonl")
        corpus.save_corpus(part, path)
        run.record_output(path)
    run.finish()
    print(f"split: {len(train)}/{len(dev)}/{len(test)} -> {run.path}")
    return EXIT_OK


def cmd_backtranslate(args) -> int:
    defaults = {
        "input": None,
        "model": None,
        "registry": None,
        "batch_size": 32,
        "output": "synthetic.jsonl",
    }
    config = resolve_config(args, defaults)
    _require(config, "input", "model")
    _require_inputs(config["input"])
    registry = ModelRegistry(_registry_path(config["registry"]))
    descriptor = parse_descriptor(config["model"])
    backend = registry.load_backend(descriptor)

    run = RunDir(args.run_dir, "backtranslate", config)
    run.record_input(config["input"])
    mono = corpus.load_mono(config["input"])
    synthetic = augment.backtranslate(
        mono,
        backend,
        batch_size=int(config["batch_size"]),
        checkpoint_dir=run.file("checkpoint"),
    )
    out_path = run.file(config["output"])
    corpus.save_corpus(synthetic, out_path)
    run.record_output(out_path)
    run.finish()
    print(f"backtranslate: {len(synthetic)} synthetic pairs via {descriptor.key} -> {out_path}")
    return EXIT_OK


def cmd_mix(args) -> int:
    defaults = {
        "real": None,
        "synthetic": None,
        "spec": "1:1",
        "seed": 0,
        "output": "mixed.jsonl",
    }
    config = resolve_config(args, defaults)
    _require(config, "real", "synthetic")
    _require_inputs(config["real"], config["synthetic"])
    spec = augment.MixSpec.named(str(config["spec"]), seed=int(config["seed"]))
    run = RunDir(args.run_dir, "mix", config)
    run.record_input(config["real"])
    run.record_input(config["synthetic"])

    real = corpus.load_parallel(config["real"])
    synthetic = corpus.load_parallel(config["synthetic"])
    mixed = augment.mix(real, synthetic, spec)
    out_path = run.file(config["output"])
    corpus.save_corpus(mixed, out_path)
    run.record_output(out_path)
    run.finish()
    print(f"mix {spec.name}: {len(real)} real + {len(synthetic)} pool -> {len(mixed)} pairs")
    return EXIT_OK


def cmd_train(args) -> int:
    defaults = {
        "train": None,
        "dev": None,
        "base": "toy",
        "epochs": 3,
        "seed": 0,
        "mix_ratio": None,
        "generator_base": None,
        "registry": None,
        "checkpoint_policy": "best-dev",
    }
    config = resolve_config(args, defaults)
    _require(config, "train", "dev")
    _require_inputs(config["train"], config["dev"])
    registry = ModelRegistry(_registry_path(config["registry"]))
    run = RunDir(args.run_dir, "train", config)
    run.record_input(config["train"])
    run.record_input(config["dev"])

    cfg = ExperimentConfig(
        base=str(config["base"]),
        train_corpus=corpus.load_parallel(config["train"]),
        dev_corpus=corpus.load_parallel(config["dev"]),
        epochs=int(config["epochs"]),
        seed=int(config["seed"]),
        mix_ratio=config["mix_ratio"],
        generator_base=config["generator_base"],
        checkpoint_policy=str(config["checkpoint_policy"]),
    )
    result = run_experiment(cfg, ToyTrainer(), registry, workdir=run.path)
    run.record_output(result.model_path)
    run.record_output(result.curve_path)
    figure = render_learning_curve(
        result.curve.records, run.file("curve.png"), title=result.descriptor.display_name
    )
    run.record_output(figure)
    run.extra["descriptor"] = result.descriptor.as_dict()
    run.finish()
    best = result.curve.best_epoch()
    print(
        f"train: registered {result.descriptor.key} "
        f"(best epoch {best}, dev BLEU {result.curve.records[best - 1].dev_bleu:.2f})"
    )
    return EXIT_OK


def _adapter_from_config(name: str, spec: dict) -> SubprocessAdapter:
    if not isinstance(spec, dict) or "command" not in spec:
        raise ConfigError(f"adapter {name!r} needs a command list")
    return SubprocessAdapter(
        adapter_id=name,
        version=str(spec.get("version", "unversioned")),
        command=tuple(spec["command"]),
    )


def cmd_evaluate(args) -> int:
    defaults = {
        "models": None,  # comma-separated descriptor keys
        "test": None,
        "registry": None,
        "scheme": "whitespace",
        "cluster": "systems",
        "batch_size": 64,
        "adapters": {},
        "output": "scores.json",
    }
    config = resolve_config(args, defaults)
    _require(config, "models", "test")
    _require_inputs(config["test"])
    registry = ModelRegistry(_registry_path(config["registry"]))
    model_keys = (
        config["models"].split(",") if isinstance(config["models"], str) else list(config["models"])
    )
    run = RunDir(args.run_dir, "evaluate", {**config, "models": model_keys})
    run.record_input(config["test"])

    test = corpus.load_parallel(config["test"])
    sources = [p.source.text for p in test]
    tgt_lang = test.direction[1] if test.direction else "en"
    refs_text = [p.target.text for p in test]
    refs = [tokenize(t, lang=tgt_lang, scheme=config["scheme"]) for t in refs_text]

    adapters = {
        name: _adapter_from_config(name, spec)
        for name, spec in (config["adapters"] or {}).items()
    }

    rows = []
    for key in model_keys:
        descriptor = parse_descriptor(key.strip())
        backend = registry.load_backend(descriptor)
        hyps_text: list[str] = []
        batch = int(config["batch_size"])
        for begin in range(0, len(sources), batch):
            result = backend.translate_batch(
                TranslationRequest(
                    sentences=tuple(sources[begin:begin + batch]),
                    direction=descriptor.direction,
                )
            )
            hyps_text.extend(result.sentences)
        hyps = [tokenize(t, lang=tgt_lang, scheme=config["scheme"]) for t in hyps_text]
        bleu = corpus_bleu(hyps, refs)
        hlepor_mean, _ = corpus_hlepor(hyps, refs)
        row = {
            "system": descriptor.display_name,
            "model_key": descriptor.key,
            "cluster": str(config["cluster"]),
            "scheme": config["scheme"],
            "sacrebleu": bleu.score,
            "hlepor": hlepor_mean,
        }
        for name, adapter in adapters.items():
            try:
                scores = embedding_metric_score(adapter, hyps_text, refs_text)
                row[name] = scores.corpus
                row[f"{name}_adapter"] = f"{scores.adapter_id}@{scores.version}"
            except AdapterUnavailableError as exc:
                logger.warning("adapter %s unavailable: %s", name, exc)
                row[name] = None
        rows.append(row)
        hyp_path = run.file(f"hyps-{descriptor.key.replace('/', '_')}.txt")
        hyp_path.write_text("\n".join(hyps_text) + "\n", encoding="utf-8")
        run.record_output(hyp_path)

    run.write_json(config["output"], rows)
    run.finish()
    for row in rows:
        print(f"evaluate: {row['system']}: SacreBLEU {row['sacrebleu']:.2f}, "
              f"hLEPOR {row['hlepor']:.4f}")
    return EXIT_OK


def cmd_report(args) -> int:
    defaults = {"scores": None, "title": "Evaluation scores", "output_prefix": "scores"}
    config = resolve_config(args, defaults)
    _require(config, "scores")
    score_files = (
        config["scores"].split(",") if isinstance(config["scores"], str) else list(config["scores"])
    )
    _require_inputs(*score_files)
    run = RunDir(args.run_dir, "report", {**config, "scores": score_files})

    rows = []
    for path in score_files:
        run.record_input(path)
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        for record in payload if isinstance(payload, list) else [payload]:
            scores = {
                k: v
                for k, v in record.items()
                if k not in ("system", "model_key", "cluster", "scheme")
                and not k.endswith("_adapter")
                and (v is None or isinstance(v, (int, float)))
            }
            rows.append(
                ScoreRow(
                    system=record["system"],
                    cluster=record.get("cluster", "systems"),
                    scores=scores,
                )
            )
    table = build_score_table(rows)

    prefix = str(config["output_prefix"])
    tsv_path = run.file(f"{prefix}.tsv")
    tsv_path.write_text(table.to_tsv(), encoding="utf-8")
    run.record_output(tsv_path)
    json_path = run.file(f"{prefix}.json")
    json_path.write_text(table.to_json(), encoding="utf-8")
    run.record_output(json_path)
    text_path = run.file(f"{prefix}.txt")
    text_path.write_text(table.render_text(), encoding="utf-8")
    run.record_output(text_path)
    figure = render_score_figure(table, run.file(f"{prefix}.png"), title=str(config["title"]))
    run.record_output(figure)
    run.finish()
    print(table.render_text())
    print(f"report: {tsv_path}, {json_path}, {text_path}, {figure}")
    return EXIT_OK


def cmd_serve(args) -> int:
    from yuemt.server import ServerConfig, serve

    defaults = {
        "registry": None,
        "host": "127.0.0.1",
        "port": 8900,
        "capacity": 2,
        "max_input_chars": 2000,
        "max_batch": 64,
        "cors_origins": [],
    }
    config = resolve_config(args, defaults)
    registry_path = _registry_path(config["registry"])
    _require_inputs(registry_path)
    server_config = ServerConfig(
        registry_path=registry_path,
        host=str(config["host"]),
        port=int(config["port"]),
        capacity=int(config["capacity"]),
        max_input_chars=int(config["max_input_chars"]),
        max_batch=int(config["max_batch"]),
        cors_origins=tuple(config["cors_origins"] or ()),
    )
    print(f"serving registry {registry_path} on {server_config.host}:{server_config.port}")
    serve(server_config)
    return EXIT_OK


def cmd_toydata(args) -> int:
    defaults = {
        "seed": 7,
        "real_pairs": 500,
        "mono_sentences": 2000,
        "cipher_seed": toylang.DEFAULT_CIPHER_SEED,
        "registry": None,
        "noisy": True,
    }
    config = resolve_config(args, defaults)
    run = RunDir(args.run_dir, "toydata", config)
    seed = int(config["seed"])
    vocab = toylang.make_vocabulary(seed)

    real = toylang.make_parallel_corpus(
        seed=seed,
        size=int(config["real_pairs"]),
        cipher_seed=int(config["cipher_seed"]),
        vocab=vocab,
    )
    real_path = run.file("real.jsonl")
    corpus.save_corpus(real, real_path)
    run.record_output(real_path)

    if config["noisy"]:
        lines = toylang.make_noisy_mono_lines(seed + 1, int(config["mono_sentences"]), vocab=vocab)
        dump_path = run.file("raw_dump.txt")
        dump_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        run.record_output(dump_path)
    else:
        mono = toylang.make_mono_corpus(seed + 1, int(config["mono_sentences"]), vocab=vocab)
        mono_path = run.file("mono.jsonl")
        corpus.save_corpus(mono, mono_path)
        run.record_output(mono_path)

    if config["registry"]:
        registry = ModelRegistry(_registry_path(config["registry"]))
        for direction in (("yue", "en"), ("en", "yue")):
            descriptor = ModelDescriptor(
                base="toy", training_category="baseline", direction=direction
            )
            registry.register(
                descriptor, {"kind": "cipher", "seed": int(config["cipher_seed"])}
            )
        print(f"toydata: registered oracle cipher models in {config['registry']}")
    run.finish()
    print(f"toydata: {len(real)} real pairs, {config['mono_sentences']} mono -> {run.path}")
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yuemt", description="Cantonese-English low-resource MT toolkit"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--run-dir", required=(name != "serve"), help="output directory")
        p.add_argument("--config", help="YAML config file")
        p.add_argument("--set", action="append", metavar="KEY=VALUE", help="config override")
        return p

    p = add("clean", cmd_clean, "clean and anonymize a raw monolingual dump")
    p.add_argument("--input")
    p.add_argument("--lang", choices=list(corpus.LANG_TAGS))
    p.add_argument("--min-cjk-chars", type=int, dest="min_cjk_chars")
    p.add_argument("--dedupe", action="store_const", const=True, default=None)

    p = add("split", cmd_split, "shuffle and partition a corpus")
    p.add_argument("--input")
    p.add_argument("--sizes", help="train,dev,test e.g. 38000,3000,3000")
    p.add_argument("--seed", type=int)

    p = add("backtranslate", cmd_backtranslate, "generate synthetic pairs")
    p.add_argument("--input")
    p.add_argument("--model", help="descriptor key base/category/src-tgt")
    p.add_argument("--registry")
    p.add_argument("--batch-size", type=int, dest="batch_size")

    p = add("mix", cmd_mix, "combine real and synthetic pairs")
    p.add_argument("--real")
    p.add_argument("--synthetic")
    p.add_argument("--spec", help="h:h, 1:1, 1:3, 1:5")
    p.add_argument("--seed", type=int)

    p = add("train", cmd_train, "run a fine-tuning experiment")
    p.add_argument("--train")
    p.add_argument("--dev")
    p.add_argument("--base", choices=list(BASES))
    p.add_argument("--epochs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--mix-ratio", dest="mix_ratio")
    p.add_argument("--generator-base", dest="generator_base", choices=list(BASES))
    p.add_argument("--registry")
    p.add_argument("--checkpoint-policy", dest="checkpoint_policy")

    p = add("evaluate", cmd_evaluate, "score systems on a test corpus")
    p.add_argument("--models", help="comma-separated descriptor keys")
    p.add_argument("--test")
    p.add_argument("--registry")
    p.add_argument("--scheme")
    p.add_argument("--cluster")

    p = add("report", cmd_report, "build the clustered score table")
    p.add_argument("--scores", help="comma-separated evaluate outputs")
    p.add_argument("--title")

    p = add("serve", cmd_serve, "start the translation REST API")
    p.add_argument("--registry")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.add_argument("--capacity", type=int)

    p = add("toydata", cmd_toydata, "generate toy-language fixtures")
    p.add_argument("--seed", type=int)
    p.add_argument("--real-pairs", type=int, dest="real_pairs")
    p.add_argument("--mono-sentences", type=int, dest="mono_sentences")
    p.add_argument("--registry")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except YuemtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
