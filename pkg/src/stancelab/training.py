"""Mini-batch Adam training with dev-F1 early stopping and best-model keep.

The training protocol: shuffle the train split each epoch with a seeded
generator, average per-instance gradients over each batch (last partial
batch kept), one Adam step per batch, evaluate dev F1 after every epoch,
and stop once the best F1 has not improved for ``patience`` consecutive
epochs. The returned parameters are the snapshot from the best epoch.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict, field
from pathlib import Path

import numpy as np

from .affect import EmotionLexicon, SentimentLexicon
from .corpus import Instance
from .embeddings import EmbeddingStore, FallbackVocab
from .encoding import (EncodedInstance, encode_contextual, encode_fallback,
                       encode_question_only)
from .errors import DataError, NumericError
from .evaluation import compute_metrics
from .network import (CLASS_NAMES, ModelConfig, ModelParams, backward,
                      backward_pooled, classify_forward,
                      consistency_penalty_grads, init_params, save_checkpoint)

log = logging.getLogger(__name__)

THREADS_ENV = "STANCELAB_THREADS"


@dataclass
class TrainConfig:
    epochs: int = 30
    batch_size: int = 8
    lr: float = 2e-4
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    patience: int = 5
    seed: int = 0
    lambda_consistency: float = 0.0
    pair_mode: bool = True

    def __post_init__(self):
        if self.lr <= 0:
            raise ValueError("learning rate must be positive")
        if self.patience > self.epochs:
            raise ValueError("patience cannot exceed the epoch budget")


def cross_entropy_loss(probs: np.ndarray, gold: int) -> float:
    """-log p(gold); probabilities at zero are clamped with a warning."""
    p = float(probs[gold])
    if p <= 0.0:
        log.warning("gold probability clamped to 1e-12")
        p = 1e-12
    return -float(np.log(max(p, 1e-12)))


@dataclass
class AdamState:
    """First/second moment accumulators plus the shared step counter."""

    m: dict[str, np.ndarray]
    v: dict[str, np.ndarray]
    step: int = 0

    @classmethod
    def for_params(cls, params: ModelParams) -> "AdamState":
        return cls(m=params.zeros_like(), v=params.zeros_like())


def adam_update(params: ModelParams, grads: dict[str, np.ndarray],
                state: AdamState, config: TrainConfig) -> None:
    """Standard bias-corrected Adam step, in place."""
    state.step += 1
    t = state.step
    b1, b2 = config.beta1, config.beta2
    for name, tensor in params.tensors.items():
        g = grads[name]
        if not np.all(np.isfinite(g)):
            raise NumericError(f"non-finite gradient for tensor {name!r}")
        state.m[name] = b1 * state.m[name] + (1.0 - b1) * g
        state.v[name] = b2 * state.v[name] + (1.0 - b2) * g * g
        m_hat = state.m[name] / (1.0 - b1 ** t)
        v_hat = state.v[name] / (1.0 - b2 ** t)
        tensor -= config.lr * m_hat / (np.sqrt(v_hat) + config.eps)


@dataclass
class EpochStats:
    epoch: int
    train_loss: float
    dev_precision: float
    dev_recall: float
    dev_f1: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class TrainHistory:
    epochs: list[EpochStats] = field(default_factory=list)
    best_epoch: int = 0
    stopped_early: bool = False

    def write_jsonl(self, path: str | Path) -> None:
        with Path(path).open("w", encoding="utf-8") as fh:
            for row in self.epochs:
                fh.write(json.dumps(row.to_dict(), sort_keys=True) + "\n")


def encode_corpus(
    corpus: list[Instance],
    embeddings: EmbeddingStore | FallbackVocab,
    lexicons: tuple[SentimentLexicon, EmotionLexicon],
    pair_mode: bool = True,
) -> dict[str, list[EncodedInstance]]:
    """Encode every instance, grouped by split."""
    sent_lex, emo_lex = lexicons
    by_split: dict[str, list[EncodedInstance]] = {}
    for inst in corpus:
        if isinstance(embeddings, FallbackVocab):
            enc = encode_fallback(inst, embeddings, sent_lex, emo_lex, pair_mode)
        else:
            enc = encode_contextual(inst, embeddings, sent_lex, emo_lex)
        by_split.setdefault(inst.split, []).append(enc)
    return by_split


def evaluate_split(params: ModelParams, encoded: list[EncodedInstance]):
    """Predicted class names for a list of encoded instances."""
    preds, golds = [], []
    for enc in encoded:
        cache = classify_forward(enc.inputs, params)
        preds.append(CLASS_NAMES[cache.predicted])
        golds.append(enc.instance.stance)
    return preds, golds


def _instance_pass(enc: EncodedInstance, params: ModelParams,
                   scale: float, lam: float,
                   q_inputs) -> tuple[float, dict[str, np.ndarray]]:
    grads = {k: np.zeros_like(v) for k, v in params.tensors.items()}
    cache = classify_forward(enc.inputs, params)
    loss = cross_entropy_loss(cache.probs, enc.gold)
    backward(cache, enc.gold, params, grads, scale=scale)
    if lam > 0.0 and q_inputs is not None:
        cache_q = classify_forward(q_inputs, params)
        pen, dq, dqp = consistency_penalty_grads(cache_q.u, cache.u, enc.gold)
        loss += lam * pen
        backward_pooled(cache_q, scale * lam * dq, params, grads)
        backward_pooled(cache, scale * lam * dqp, params, grads)
    return loss, grads


def train(
    model_config: ModelConfig,
    train_config: TrainConfig,
    corpus: list[Instance],
    embeddings: EmbeddingStore | FallbackVocab,
    lexicons: tuple[SentimentLexicon, EmotionLexicon],
    run_dir: str | Path | None = None,
) -> tuple[ModelParams, TrainHistory]:
    """Run the full protocol; returns best-epoch parameters and history."""
    if isinstance(embeddings, FallbackVocab):
        if model_config.fallback_vocab != embeddings.num_rows:
            model_config.fallback_vocab = embeddings.num_rows

    by_split = encode_corpus(corpus, embeddings, lexicons,
                             train_config.pair_mode)
    train_set = by_split.get("train", [])
    dev_set = by_split.get("dev", [])
    if not train_set:
        raise DataError("train split is empty")
    if not dev_set:
        raise DataError("dev split is empty")

    lam = train_config.lambda_consistency
    q_inputs = [encode_question_only(enc) if lam > 0 else None
                for enc in train_set]

    params = init_params(model_config)
    state = AdamState.for_params(params)
    rng = np.random.default_rng(train_config.seed)
    n_threads = max(1, int(os.environ.get(THREADS_ENV, "1")))

    history = TrainHistory()
    best_params = params.copy()
    best_f1 = -1.0
    epochs_since_best = 0

    if run_dir is not None:
        run_dir = Path(run_dir)
        run_dir.mkdir(parents=True, exist_ok=True)

    for epoch in range(1, train_config.epochs + 1):
        order = rng.permutation(len(train_set))
        total_loss = 0.0
        for start in range(0, len(order), train_config.batch_size):
            batch = order[start:start + train_config.batch_size]
            scale = 1.0 / len(batch)
            jobs = [(train_set[i], params, scale, lam, q_inputs[i])
                    for i in batch]
            if n_threads > 1 and len(jobs) > 1:
                with ThreadPoolExecutor(max_workers=n_threads) as pool:
                    results = list(pool.map(lambda a: _instance_pass(*a), jobs))
            else:
                results = [_instance_pass(*a) for a in jobs]
            grads = {k: np.zeros_like(v) for k, v in params.tensors.items()}
            for loss, g in results:  # fixed batch order keeps sums deterministic
                total_loss += loss
                for name in grads:
                    grads[name] += g[name]
            adam_update(params, grads, state, train_config)

        preds, golds = evaluate_split(params, dev_set)
        dev = compute_metrics(preds, golds, positive_class="pro")
        stats = EpochStats(
            epoch=epoch,
            train_loss=total_loss / len(train_set),
            dev_precision=dev.precision,
            dev_recall=dev.recall,
            dev_f1=dev.f1,
        )
        history.epochs.append(stats)
        log.info("epoch %d: loss %.4f dev F1 %.4f", epoch, stats.train_loss,
                 stats.dev_f1)

        if dev.f1 > best_f1:
            best_f1 = dev.f1
            best_params = params.copy()
            history.best_epoch = epoch
            epochs_since_best = 0
            if run_dir is not None:
                save_checkpoint(run_dir / "best.ckpt", best_params)
        else:
            epochs_since_best += 1
            if epochs_since_best >= train_config.patience:
                history.stopped_early = True
                break

    if run_dir is not None:
        history.write_jsonl(run_dir / "history.jsonl")
        if not (run_dir / "best.ckpt").exists():
            save_checkpoint(run_dir / "best.ckpt", best_params)
    return best_params, history
