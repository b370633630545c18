"""Command-line entry point.

Subcommands: ingest, stats, annotate, train, eval, mcnemar, explain,
profile, param-count, validate-embeddings. Exit codes: 0 success,
1 usage error, 2 data/validation error, 3 numeric error. Flag values
override --config file entries, which override built-in defaults; every
training run dumps its effective configuration into the run directory.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import corpus as corpus_mod
from .affect import (SENTIMENT_LABELS, EMOTION_LABELS, annotate_instance,
                     load_emotion_lexicon, load_sentiment_lexicon)
from .embeddings import FallbackVocab, read_embedding_file
from .encoding import SEP_TOKEN, encode_contextual, encode_fallback
from .errors import DataError, NumericError, StancelabError
from .evaluation import mcnemar_test, metrics_report, sentiment_profile
from .explain import engagement_scores, render_heatmap, top_tokens
from .fixtures import (default_emotion_lexicon_path,
                       default_sentiment_lexicon_path)
from .network import (CLASS_NAMES, ModelConfig, classify_forward, init_params,
                      load_checkpoint, parameter_count)
from .training import TrainConfig, encode_corpus, evaluate_split, train

USAGE_EXIT, DATA_EXIT, NUMERIC_EXIT = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        raise SystemExit(f"error: {message}") from None


def _write_json(payload, out: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _load_lexicons(args):
    sent = load_sentiment_lexicon(args.sentiment_lexicon)
    emo = load_emotion_lexicon(args.emotion_lexicon)
    return sent, emo


def _model_config(args, d_context: int, fallback_vocab: int = 0) -> ModelConfig:
    sentiment = args.mode == "sentiment"
    emotion = args.mode == "emotion"
    if args.bidirectional == "auto":
        bidirectional = not emotion
    else:
        bidirectional = args.bidirectional == "yes"
    return ModelConfig(
        d_context=d_context,
        hidden=args.hidden,
        sentiment_mode=sentiment,
        emotion_mode=emotion,
        bidirectional=bidirectional,
        affect_dim=args.affect_dim,
        fallback_vocab=fallback_vocab,
        seed=args.seed,
    )


def _add_model_flags(p: argparse.ArgumentParser):
    p.add_argument("--mode", choices=("sentiment", "emotion", "none"),
                   default="sentiment")
    p.add_argument("--hidden", type=int, default=384)
    p.add_argument("--affect-dim", type=int, default=None)
    p.add_argument("--bidirectional", choices=("auto", "yes", "no"),
                   default="auto")
    p.add_argument("--seed", type=int, default=0)


def _add_lexicon_flags(p: argparse.ArgumentParser):
    p.add_argument("--sentiment-lexicon",
                   default=default_sentiment_lexicon_path())
    p.add_argument("--emotion-lexicon",
                   default=default_emotion_lexicon_path())


def _resolve_embeddings(args):
    """Returns (embeddings source, d_context, descriptor dict)."""
    if args.embeddings:
        store = read_embedding_file(args.embeddings)
        return store, store.dim, {"embeddings": str(args.embeddings),
                                  "fallback_dim": None}
    return None, args.fallback_dim, {"embeddings": None,
                                     "fallback_dim": args.fallback_dim}


def cmd_ingest(args) -> int:
    instances = corpus_mod.load_corpus(args.input, format=args.format)
    corpus_mod.save_corpus(args.output, instances)
    print(f"wrote {len(instances)} instances to {args.output}")
    return 0


def cmd_stats(args) -> int:
    corpus = corpus_mod.load_corpus(args.corpus)
    rows = [
        {"split": s.split, "n_topics": s.n_topics, "avg_words": s.avg_words,
         "n_pro": s.n_pro, "n_con": s.n_con, "total": s.total}
        for s in corpus_mod.corpus_stats(corpus)
    ]
    _write_json(rows, args.out)
    return 0


def cmd_annotate(args) -> int:
    corpus = corpus_mod.load_corpus(args.corpus)
    sent_lex, emo_lex = _load_lexicons(args)
    out = Path(args.out) if args.out else None
    fh = out.open("w", encoding="utf-8") if out else sys.stdout
    try:
        for inst in corpus:
            tok = corpus_mod.tokenize_instance(inst)
            ann = annotate_instance(tok, sent_lex, emo_lex)
            fh.write(json.dumps({
                "id": inst.id,
                "tokens": list(tok.tokens),
                "sentence_scores": list(ann.sentence_scores),
                "question_sentence_count": ann.question_sentence_count,
                "sentiment_labels": [SENTIMENT_LABELS[i]
                                     for i in ann.sentiment_labels],
                "emotion_labels": [EMOTION_LABELS[i]
                                   for i in ann.emotion_labels],
            }, ensure_ascii=False, sort_keys=True) + "\n")
    finally:
        if out:
            fh.close()
    return 0


def cmd_train(args) -> int:
    corpus = corpus_mod.load_corpus(args.corpus)
    sent_lex, emo_lex = _load_lexicons(args)
    store, d_context, emb_desc = _resolve_embeddings(args)

    if store is None:
        train_tokens = []
        for inst in corpus:
            if inst.split != "train":
                continue
            tok = corpus_mod.tokenize_instance(inst)
            train_tokens.append(list(tok.tokens) + [SEP_TOKEN])
        vocab = FallbackVocab.from_token_streams(train_tokens)
        embeddings = vocab
        fallback_rows = vocab.num_rows
    else:
        embeddings = store
        vocab = None
        fallback_rows = 0

    model_config = _model_config(args, d_context, fallback_rows)
    train_config = TrainConfig(
        epochs=args.epochs, batch_size=args.batch_size, lr=args.lr,
        patience=args.patience, seed=args.seed,
        lambda_consistency=args.lambda_consistency,
        pair_mode=not args.unary)

    run_dir = Path(args.run_dir)
    run_dir.mkdir(parents=True, exist_ok=True)
    effective = {
        "model": asdict(model_config),
        "train": asdict(train_config),
        "corpus": str(args.corpus),
        "lexicons": {"sentiment": str(args.sentiment_lexicon),
                     "emotion": str(args.emotion_lexicon)},
        **emb_desc,
        "created_at": datetime.now(timezone.utc).isoformat(),
    }
    (run_dir / "config.json").write_text(
        json.dumps(effective, indent=2, sort_keys=True) + "\n",
        encoding="utf-8")
    if vocab is not None:
        (run_dir / "vocab.json").write_text(
            json.dumps(vocab.to_list()) + "\n", encoding="utf-8")

    _, history = train(model_config, train_config, corpus, embeddings,
                       (sent_lex, emo_lex), run_dir=run_dir)
    print(json.dumps({
        "best_epoch": history.best_epoch,
        "epochs_run": len(history.epochs),
        "stopped_early": history.stopped_early,
        "best_dev_f1": max(e.dev_f1 for e in history.epochs),
        "run_dir": str(run_dir),
    }, sort_keys=True))
    return 0


def _load_run(run_dir: Path):
    config = json.loads((run_dir / "config.json").read_text(encoding="utf-8"))
    params = load_checkpoint(run_dir / "best.ckpt")
    vocab = None
    vocab_path = run_dir / "vocab.json"
    if vocab_path.exists():
        vocab = FallbackVocab(json.loads(vocab_path.read_text(encoding="utf-8")))
    return config, params, vocab


def _encode_for_run(run_config, params, vocab, corpus, sent_lex, emo_lex):
    pair_mode = run_config["train"].get("pair_mode", True)
    if run_config.get("embeddings"):
        store = read_embedding_file(run_config["embeddings"])
        return {
            split: [encode_contextual(i, store, sent_lex, emo_lex)
                    for i in split_insts]
            for split, split_insts in _group(corpus).items()
        }
    return {
        split: [encode_fallback(i, vocab, sent_lex, emo_lex, pair_mode)
                for i in split_insts]
        for split, split_insts in _group(corpus).items()
    }


def _group(corpus):
    groups: dict[str, list] = {}
    for inst in corpus:
        groups.setdefault(inst.split, []).append(inst)
    return groups


def cmd_eval(args) -> int:
    run_dir = Path(args.run_dir)
    run_config, params, vocab = _load_run(run_dir)
    corpus = corpus_mod.load_corpus(args.corpus)
    sent_lex, emo_lex = _load_lexicons(args)
    encoded = _encode_for_run(run_config, params, vocab, corpus,
                              sent_lex, emo_lex)
    split = encoded.get(args.split, [])
    if not split:
        raise DataError(f"no instances in split {args.split!r}")
    preds, golds = evaluate_split(params, split)
    report = metrics_report(preds, golds)
    report["split"] = args.split
    _write_json(report, args.out)
    if args.preds_out:
        with Path(args.preds_out).open("w", encoding="utf-8") as fh:
            for enc, pred in zip(split, preds):
                fh.write(json.dumps({"id": enc.instance.id, "pred": pred})
                         + "\n")
    return 0


def _read_preds(path: str) -> dict[str, str]:
    preds = {}
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            row = json.loads(line)
            if "id" not in row or "pred" not in row:
                raise DataError(f"{path}:{lineno}: rows need id and pred")
            preds[row["id"]] = row["pred"]
    return preds


def cmd_mcnemar(args) -> int:
    corpus = corpus_mod.load_corpus(args.corpus)
    if args.split:
        corpus = [i for i in corpus if i.split == args.split]
    preds_a = _read_preds(args.preds_a)
    preds_b = _read_preds(args.preds_b)
    golds, a, b = [], [], []
    for inst in corpus:
        if inst.id in preds_a and inst.id in preds_b:
            golds.append(inst.stance)
            a.append(preds_a[inst.id])
            b.append(preds_b[inst.id])
    if not golds:
        raise DataError("no overlapping instance ids between prediction files")
    result = mcnemar_test(a, b, golds)
    payload = result.to_dict()
    payload["n_compared"] = len(golds)
    _write_json(payload, args.out)
    return 0


def cmd_explain(args) -> int:
    run_dir = Path(args.run_dir)
    run_config, params, vocab = _load_run(run_dir)
    corpus = corpus_mod.load_corpus(args.corpus)
    matches = [i for i in corpus if i.id == args.id]
    if not matches:
        raise DataError(f"instance id {args.id!r} not found in corpus")
    inst = matches[0]
    sent_lex, emo_lex = _load_lexicons(args)
    if run_config.get("embeddings"):
        store = read_embedding_file(run_config["embeddings"])
        enc = encode_contextual(inst, store, sent_lex, emo_lex)
    else:
        enc = encode_fallback(inst, vocab, sent_lex, emo_lex,
                              run_config["train"].get("pair_mode", True))
    cache = classify_forward(enc.inputs, params)
    engagement = engagement_scores(
        cache, enc.tokens, enc.word_alignment, enc.question_token_count,
        question=inst.question, predicted=CLASS_NAMES[cache.predicted],
        gold=inst.stance)
    doc = render_heatmap(engagement, format=args.format)
    if args.out:
        Path(args.out).write_text(doc, encoding="utf-8")
    else:
        sys.stdout.write(doc if doc.endswith("\n") else doc + "\n")
    if args.top_k:
        ranked = top_tokens(engagement, args.top_k, merge_subtokens=True)
        print(json.dumps({"top_tokens": ranked}), file=sys.stderr)
    return 0


def cmd_profile(args) -> int:
    corpus = corpus_mod.load_corpus(args.corpus)
    sent_lex, emo_lex = _load_lexicons(args)
    scores = {}
    for inst in corpus:
        tok = corpus_mod.tokenize_instance(inst)
        ann = annotate_instance(tok, sent_lex, emo_lex)
        scores[inst.id] = list(
            ann.sentence_scores[ann.question_sentence_count:])
    issues = args.issues.split(",") if args.issues else None
    _write_json(sentiment_profile(corpus, scores, issues), args.out)
    return 0


def cmd_param_count(args) -> int:
    config = _model_config(args, args.d_context, args.fallback_vocab)
    count = parameter_count(config)
    walk = sum(t.size for t in init_params(config).tensors.values())
    _write_json({"parameter_count": count, "allocation_walk": walk,
                 "config": asdict(config)}, args.out)
    return 0


def cmd_validate_embeddings(args) -> int:
    store = read_embedding_file(args.embeddings)
    lengths = {}
    for iid in store.ids:
        rec = store.get(iid)
        lengths[iid] = rec.matrix.shape[0]
    _write_json({
        "path": str(args.embeddings),
        "count": len(store),
        "dim": store.dim,
        "errors": [],
        "token_counts": lengths,
    }, args.out)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="stancelab",
                     description="Affect-enriched recurrent stance detection")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="convert delimiter files to JSONL")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("csv", "tsv", "jsonl"), required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("stats", help="per-split corpus statistics")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("annotate", help="affect annotations as JSONL")
    p.add_argument("--corpus", required=True)
    _add_lexicon_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("train", help="train a model")
    p.add_argument("--corpus", required=True)
    p.add_argument("--run-dir", required=True)
    p.add_argument("--embeddings", help="contextual embedding file")
    p.add_argument("--fallback-dim", type=int, default=16,
                   help="trainable embedding size when no store is given")
    p.add_argument("--epochs", type=int, default=30)
    p.add_argument("--batch-size", type=int, default=8)
    p.add_argument("--lr", type=float, default=2e-4)
    p.add_argument("--patience", type=int, default=5)
    p.add_argument("--lambda-consistency", type=float, default=0.0)
    p.add_argument("--unary", action="store_true",
                   help="concatenate question and perspective without a separator")
    _add_model_flags(p)
    _add_lexicon_flags(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="evaluate a trained run on one split")
    p.add_argument("--run-dir", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--split", default="test")
    p.add_argument("--out")
    p.add_argument("--preds-out")
    _add_lexicon_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("mcnemar", help="paired significance test")
    p.add_argument("--preds-a", required=True)
    p.add_argument("--preds-b", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--split", default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mcnemar)

    p = sub.add_parser("explain", help="engagement heatmap for one instance")
    p.add_argument("--run-dir", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--id", required=True)
    p.add_argument("--format", choices=("json", "html", "ansi"),
                   default="json")
    p.add_argument("--out")
    p.add_argument("--top-k", type=int, default=0)
    _add_lexicon_flags(p)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("profile", help="per-issue average sentiment")
    p.add_argument("--corpus", required=True)
    p.add_argument("--issues", help="comma-separated topic filter")
    _add_lexicon_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("param-count", help="trainable parameter total")
    p.add_argument("--d-context", type=int, default=768)
    p.add_argument("--fallback-vocab", type=int, default=0)
    _add_model_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_param_count)

    p = sub.add_parser("validate-embeddings", help="check an embedding file")
    p.add_argument("--embeddings", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate_embeddings)

    return parser


def _apply_config_file(parser: _Parser, argv: list[str]) -> list[str]:
    """--config FILE entries become subcommand defaults (flags still win)."""
    if "--config" not in argv:
        return argv
    idx = argv.index("--config")
    if idx + 1 >= len(argv):
        raise SystemExit("error: --config requires a path")
    path = argv[idx + 1]
    try:
        overrides = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(overrides, dict):
        raise DataError(f"config file {path} must hold a JSON object")
    rest = argv[:idx] + argv[idx + 2:]
    for action in parser._subparsers._group_actions:
        for sub_parser in getattr(action, "choices", {}).values():
            known = {a.dest for a in sub_parser._actions}
            sub_parser.set_defaults(
                **{k: v for k, v in overrides.items() if k in known})
    return rest


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        argv = _apply_config_file(parser, list(argv))
        args = parser.parse_args(argv)
        np.seterr(all="raise", under="ignore")
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return USAGE_EXIT
        return exc.code if exc.code is not None else 0
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return NUMERIC_EXIT
    except (DataError, StancelabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except FloatingPointError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return NUMERIC_EXIT


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
