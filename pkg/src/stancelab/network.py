"""The stance classifier: affect embeddings, (bi)GRU, pooling, softmax head.

Everything is plain numpy in float64 with hand-written backpropagation so
gradients can be verified against central finite differences. Token inputs
are the concatenation of a contextual embedding (frozen store row or
trainable fallback row) with one affect embedding row selected by the
token's sentiment or emotion label.
"""

from __future__ import annotations

import json
import logging
import struct
from dataclasses import dataclass, field, asdict
from pathlib import Path

import numpy as np

from .errors import NumericError

log = logging.getLogger(__name__)

N_SENTIMENT = 3
N_EMOTION = 9  # eight emotions plus neutral
N_CLASSES = 2
CLASS_NAMES = ("pro", "con")
CLASS_INDEX = {name: i for i, name in enumerate(CLASS_NAMES)}

_U32 = struct.Struct("<I")
_CKPT_MAGIC = b"STNCCKP1"


@dataclass
class ModelConfig:
    """Architecture switches and sizes.

    At most one of ``sentiment_mode``/``emotion_mode`` may be set; with
    both off the model degrades to the plain GRU over contextual inputs.
    ``fallback_vocab`` > 0 switches the contextual channel to a trainable
    embedding table with that many rows (row 0 = OOV).
    """

    d_context: int = 768
    hidden: int = 384
    sentiment_mode: bool = False
    emotion_mode: bool = False
    bidirectional: bool = True
    affect_dim: int | None = None
    fallback_vocab: int = 0
    seed: int = 0
    dropout: float = 0.0  # off for all verified runs

    def __post_init__(self):
        if self.sentiment_mode and self.emotion_mode:
            raise ValueError("at most one affect mode may be enabled")
        if self.hidden <= 0:
            raise ValueError("hidden size must be positive")
        if self.d_context <= 0:
            raise ValueError("context dim must be positive")
        if self.affect_dim is None:
            self.affect_dim = self.d_context

    @property
    def affect_rows(self) -> int:
        if self.sentiment_mode:
            return N_SENTIMENT
        if self.emotion_mode:
            return N_EMOTION
        return 0

    @property
    def d_in(self) -> int:
        return self.d_context + (self.affect_dim if self.affect_rows else 0)

    @property
    def h_total(self) -> int:
        return self.hidden * (2 if self.bidirectional else 1)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ModelConfig":
        return cls(**d)


_GATES = ("update", "reset", "cand")


def _tensor_spec(config: ModelConfig) -> list[tuple[str, tuple[int, ...]]]:
    """Declaration-ordered (name, shape) list of all trainable tensors."""
    spec: list[tuple[str, tuple[int, ...]]] = []
    if config.sentiment_mode:
        spec.append(("sentiment_embedding", (N_SENTIMENT, config.affect_dim)))
    elif config.emotion_mode:
        spec.append(("emotion_embedding", (N_EMOTION, config.affect_dim)))
    h, d_in = config.hidden, config.d_in
    directions = ("fwd", "bwd") if config.bidirectional else ("fwd",)
    for dirn in directions:
        for gate in _GATES:
            spec.append((f"{dirn}.w_{gate}", (h, d_in)))
            spec.append((f"{dirn}.u_{gate}", (h, h)))
            spec.append((f"{dirn}.b_{gate}", (h,)))
    spec.append(("head_weight", (N_CLASSES, 3 * config.h_total)))
    spec.append(("head_bias", (N_CLASSES,)))
    if config.fallback_vocab > 0:
        spec.append(("fallback_embedding", (config.fallback_vocab, config.d_context)))
    return spec


@dataclass
class ModelParams:
    """All trainable tensors, keyed by declaration-ordered names."""

    config: ModelConfig
    tensors: dict[str, np.ndarray]

    def zeros_like(self) -> dict[str, np.ndarray]:
        return {k: np.zeros_like(v) for k, v in self.tensors.items()}

    def copy(self) -> "ModelParams":
        return ModelParams(self.config, {k: v.copy() for k, v in self.tensors.items()})

    def check_finite(self) -> None:
        for name, t in self.tensors.items():
            if not np.all(np.isfinite(t)):
                raise NumericError(f"non-finite values in tensor {name!r}")


def init_params(config: ModelConfig) -> ModelParams:
    """Seeded initialization: uniform(-0.1, 0.1) embeddings, fan-scaled
    uniform gate/dense weights, zero biases."""
    rng = np.random.default_rng(config.seed)
    tensors: dict[str, np.ndarray] = {}
    for name, shape in _tensor_spec(config):
        if name.endswith("_embedding"):
            tensors[name] = rng.uniform(-0.1, 0.1, size=shape)
        elif name.split(".")[-1].startswith("b_") or name == "head_bias":
            tensors[name] = np.zeros(shape)
        else:
            fan_out, fan_in = shape
            limit = np.sqrt(6.0 / (fan_in + fan_out))
            tensors[name] = rng.uniform(-limit, limit, size=shape)
    return ModelParams(config=config, tensors=tensors)


def parameter_count(config: ModelConfig) -> int:
    """Exact trainable scalar count from closed-form shape arithmetic."""
    total = 0
    if config.sentiment_mode:
        total += N_SENTIMENT * config.affect_dim
    elif config.emotion_mode:
        total += N_EMOTION * config.affect_dim
    n_dir = 2 if config.bidirectional else 1
    total += n_dir * 3 * (config.hidden * config.d_in
                          + config.hidden * config.hidden
                          + config.hidden)
    total += N_CLASSES * 3 * config.h_total + N_CLASSES
    if config.fallback_vocab > 0:
        total += config.fallback_vocab * config.d_context
    return total


# -----------------------------------------------------------------------
# forward
# -----------------------------------------------------------------------

def _sigmoid(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


@dataclass
class GruStepCache:
    x: np.ndarray
    h_prev: np.ndarray
    r: np.ndarray
    z: np.ndarray
    c: np.ndarray
    k: np.ndarray  # u_cand @ h_prev, pre reset-gating


def gru_step(x_t: np.ndarray, h_prev: np.ndarray, params: ModelParams,
             direction: str = "fwd") -> tuple[np.ndarray, GruStepCache]:
    """One gated recurrent step; returns the next state and its cache."""
    if not (np.all(np.isfinite(x_t)) and np.all(np.isfinite(h_prev))):
        raise NumericError("non-finite input to gru_step")
    p = params.tensors
    r = _sigmoid(p[f"{direction}.w_reset"] @ x_t
                 + p[f"{direction}.u_reset"] @ h_prev
                 + p[f"{direction}.b_reset"])
    z = _sigmoid(p[f"{direction}.w_update"] @ x_t
                 + p[f"{direction}.u_update"] @ h_prev
                 + p[f"{direction}.b_update"])
    k = p[f"{direction}.u_cand"] @ h_prev
    c = np.tanh(p[f"{direction}.w_cand"] @ x_t + r * k
                + p[f"{direction}.b_cand"])
    h_t = z * h_prev + (1.0 - z) * c
    return h_t, GruStepCache(x=x_t, h_prev=h_prev, r=r, z=z, c=c, k=k)


def _scan(x_rows: np.ndarray, params: ModelParams, direction: str):
    h = np.zeros(params.config.hidden)
    states, caches = [], []
    for x_t in x_rows:
        h, cache = gru_step(x_t, h, params, direction)
        states.append(h)
        caches.append(cache)
    return np.array(states), caches


def run_gru(x: np.ndarray, params: ModelParams) -> tuple[np.ndarray, dict]:
    """Scan the sequence; returns Z (T x h_total) and the step caches.

    The backward direction scans the reversed sequence and its state for
    position t is concatenated onto the forward state at t.
    """
    if x.shape[0] < 1:
        raise NumericError("run_gru requires at least one timestep")
    z_fwd, caches_fwd = _scan(x, params, "fwd")
    caches = {"fwd": caches_fwd}
    if params.config.bidirectional:
        z_bwd_rev, caches_bwd = _scan(x[::-1], params, "bwd")
        caches["bwd"] = caches_bwd
        z = np.concatenate([z_fwd, z_bwd_rev[::-1]], axis=1)
    else:
        z = z_fwd
    return z, caches


def pool_and_assemble(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """u = [column means; column maxes; last row]; ties pick the smallest
    token index so the explainer is deterministic."""
    if z.shape[0] < 1:
        raise NumericError("pooling requires at least one row")
    argmax = np.argmax(z, axis=0)  # first occurrence wins ties
    u = np.concatenate([z.mean(axis=0), z[argmax, np.arange(z.shape[1])], z[-1]])
    return u, argmax


def _softmax(logits: np.ndarray) -> np.ndarray:
    e = np.exp(logits - logits.max())
    return e / e.sum()


@dataclass
class ModelInputs:
    """One encoded sequence ready for the classifier.

    Exactly one of ``context`` (frozen T x d_context matrix) or
    ``token_ids`` (fallback table rows) must be provided; affect label
    arrays are always length T.
    """

    sentiment_labels: np.ndarray
    emotion_labels: np.ndarray
    context: np.ndarray | None = None
    token_ids: np.ndarray | None = None

    @property
    def length(self) -> int:
        if self.context is not None:
            return self.context.shape[0]
        return self.token_ids.shape[0]


@dataclass
class ForwardCache:
    """Everything the backward pass and the explainer need."""

    inputs: ModelInputs
    x: np.ndarray  # T x d_in assembled inputs
    z: np.ndarray  # T x h_total hidden states
    argmax_indices: np.ndarray  # length h_total
    u: np.ndarray  # pooled vector, length 3*h_total
    logits: np.ndarray
    probs: np.ndarray
    gru_caches: dict = field(repr=False, default_factory=dict)

    @property
    def predicted(self) -> int:
        return int(np.argmax(self.probs))


def classify_forward(inputs: ModelInputs, params: ModelParams) -> ForwardCache:
    """Assemble x_t = [context; affect row], run the GRU, pool, classify."""
    config = params.config
    t = inputs.length
    if len(inputs.sentiment_labels) != t or len(inputs.emotion_labels) != t:
        raise NumericError(
            f"affect label length mismatch: T={t}, "
            f"sentiment={len(inputs.sentiment_labels)}, "
            f"emotion={len(inputs.emotion_labels)}")
    if inputs.context is not None:
        ctx = np.asarray(inputs.context, dtype=np.float64)
        if ctx.shape[1] != config.d_context:
            raise NumericError(
                f"context dim {ctx.shape[1]} != configured {config.d_context}")
    else:
        if config.fallback_vocab <= 0:
            raise NumericError("token_ids given but no fallback table configured")
        ctx = params.tensors["fallback_embedding"][inputs.token_ids]

    if config.sentiment_mode:
        affect = params.tensors["sentiment_embedding"][inputs.sentiment_labels]
        x = np.concatenate([ctx, affect], axis=1)
    elif config.emotion_mode:
        affect = params.tensors["emotion_embedding"][inputs.emotion_labels]
        x = np.concatenate([ctx, affect], axis=1)
    else:
        x = ctx

    z, gru_caches = run_gru(x, params)
    u, argmax = pool_and_assemble(z)
    logits = params.tensors["head_weight"] @ u + params.tensors["head_bias"]
    probs = _softmax(logits)
    return ForwardCache(inputs=inputs, x=x, z=z, argmax_indices=argmax,
                        u=u, logits=logits, probs=probs, gru_caches=gru_caches)


# -----------------------------------------------------------------------
# backward
# -----------------------------------------------------------------------

def _bptt(dz_block: np.ndarray, caches: list[GruStepCache], params: ModelParams,
          direction: str, grads: dict[str, np.ndarray]) -> np.ndarray:
    """Backprop one direction given per-position state gradients (in scan
    order); returns dx rows in scan order."""
    p = params.tensors
    w_r, u_r = p[f"{direction}.w_reset"], p[f"{direction}.u_reset"]
    w_z, u_z = p[f"{direction}.w_update"], p[f"{direction}.u_update"]
    w_c, u_c = p[f"{direction}.w_cand"], p[f"{direction}.u_cand"]
    g_wr, g_ur, g_br = (grads[f"{direction}.w_reset"],
                        grads[f"{direction}.u_reset"],
                        grads[f"{direction}.b_reset"])
    g_wz, g_uz, g_bz = (grads[f"{direction}.w_update"],
                        grads[f"{direction}.u_update"],
                        grads[f"{direction}.b_update"])
    g_wc, g_uc, g_bc = (grads[f"{direction}.w_cand"],
                        grads[f"{direction}.u_cand"],
                        grads[f"{direction}.b_cand"])

    t_len = dz_block.shape[0]
    dx = np.zeros((t_len, params.config.d_in))
    dh = np.zeros(params.config.hidden)
    for t in range(t_len - 1, -1, -1):
        cache = caches[t]
        dh = dh + dz_block[t]
        dz_gate = dh * (cache.h_prev - cache.c)
        dc = dh * (1.0 - cache.z)
        dh_prev = dh * cache.z

        da_c = dc * (1.0 - cache.c * cache.c)
        g_wc += np.outer(da_c, cache.x)
        g_bc += da_c
        dr = da_c * cache.k
        dk = da_c * cache.r
        g_uc += np.outer(dk, cache.h_prev)
        dh_prev = dh_prev + u_c.T @ dk

        da_r = dr * cache.r * (1.0 - cache.r)
        g_wr += np.outer(da_r, cache.x)
        g_ur += np.outer(da_r, cache.h_prev)
        g_br += da_r
        dh_prev = dh_prev + u_r.T @ da_r

        da_z = dz_gate * cache.z * (1.0 - cache.z)
        g_wz += np.outer(da_z, cache.x)
        g_uz += np.outer(da_z, cache.h_prev)
        g_bz += da_z
        dh_prev = dh_prev + u_z.T @ da_z

        dx[t] = w_r.T @ da_r + w_z.T @ da_z + w_c.T @ da_c
        dh = dh_prev
    return dx


def _backward_from_dz(cache: ForwardCache, dz: np.ndarray, params: ModelParams,
                      grads: dict[str, np.ndarray]) -> None:
    """Shared tail: GRU BPTT, then route dx into trainable embeddings."""
    config = params.config
    h = config.hidden
    if config.bidirectional:
        dx = _bptt(dz[:, :h], cache.gru_caches["fwd"], params, "fwd", grads)
        dx_bwd = _bptt(dz[::-1, h:], cache.gru_caches["bwd"], params, "bwd", grads)
        dx = dx + dx_bwd[::-1]
    else:
        dx = _bptt(dz, cache.gru_caches["fwd"], params, "fwd", grads)

    d_ctx = dx[:, :config.d_context]
    if cache.inputs.context is None and config.fallback_vocab > 0:
        np.add.at(grads["fallback_embedding"], cache.inputs.token_ids, d_ctx)
    if config.sentiment_mode:
        np.add.at(grads["sentiment_embedding"],
                  cache.inputs.sentiment_labels, dx[:, config.d_context:])
    elif config.emotion_mode:
        np.add.at(grads["emotion_embedding"],
                  cache.inputs.emotion_labels, dx[:, config.d_context:])


def _dz_from_du(cache: ForwardCache, du: np.ndarray) -> np.ndarray:
    """Distribute pooled-vector gradient onto the hidden-state rows."""
    t_len, h_total = cache.z.shape
    dz = np.zeros_like(cache.z)
    dz += du[:h_total] / t_len  # avg-pool spreads 1/T everywhere
    cols = np.arange(h_total)
    np.add.at(dz, (cache.argmax_indices, cols), du[h_total:2 * h_total])
    dz[-1] += du[2 * h_total:]
    return dz


def backward(cache: ForwardCache, gold: int, params: ModelParams,
             grads: dict[str, np.ndarray] | None = None,
             scale: float = 1.0) -> dict[str, np.ndarray]:
    """Gradients of scale * cross-entropy(probs, gold) for every tensor."""
    if grads is None:
        grads = {k: np.zeros_like(v) for k, v in params.tensors.items()}
    dlogits = cache.probs.copy()
    dlogits[gold] -= 1.0
    dlogits *= scale
    grads["head_weight"] += np.outer(dlogits, cache.u)
    grads["head_bias"] += dlogits
    du = params.tensors["head_weight"].T @ dlogits
    _backward_from_dz(cache, _dz_from_du(cache, du), params, grads)
    return grads


def backward_pooled(cache: ForwardCache, du: np.ndarray, params: ModelParams,
                    grads: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    """Backprop an externally supplied pooled-vector gradient (no head)."""
    _backward_from_dz(cache, _dz_from_du(cache, du), params, grads)
    return grads


# -----------------------------------------------------------------------
# consistency penalty (question-only vs question+perspective poolings)
# -----------------------------------------------------------------------

def consistency_penalty(u_q: np.ndarray, u_qp: np.ndarray, label: int) -> float:
    """pro: 1 - cos(u_q, u_qp); con: max(0, cos(u_q, u_qp))."""
    loss, _, _ = consistency_penalty_grads(u_q, u_qp, label)
    return loss


def consistency_penalty_grads(
    u_q: np.ndarray, u_qp: np.ndarray, label: int
) -> tuple[float, np.ndarray, np.ndarray]:
    nq = np.linalg.norm(u_q)
    nqp = np.linalg.norm(u_qp)
    if nq == 0.0 or nqp == 0.0:
        log.warning("zero-norm pooled vector in consistency penalty")
        return 0.0, np.zeros_like(u_q), np.zeros_like(u_qp)
    cos = float(u_q @ u_qp) / (nq * nqp)
    dcos_dq = u_qp / (nq * nqp) - cos * u_q / (nq * nq)
    dcos_dqp = u_q / (nq * nqp) - cos * u_qp / (nqp * nqp)
    if label == CLASS_INDEX["pro"]:
        return 1.0 - cos, -dcos_dq, -dcos_dqp
    if cos > 0.0:
        return cos, dcos_dq, dcos_dqp
    return 0.0, np.zeros_like(u_q), np.zeros_like(u_qp)


# -----------------------------------------------------------------------
# gradient verification
# -----------------------------------------------------------------------

def instance_loss(params: ModelParams, inputs: ModelInputs, gold: int,
                  lambda_consistency: float = 0.0,
                  inputs_q: ModelInputs | None = None) -> float:
    cache = classify_forward(inputs, params)
    loss = -float(np.log(max(cache.probs[gold], 1e-12)))
    if lambda_consistency > 0.0 and inputs_q is not None:
        cache_q = classify_forward(inputs_q, params)
        loss += lambda_consistency * consistency_penalty(
            cache_q.u, cache.u, gold)
    return loss


def instance_grads(params: ModelParams, inputs: ModelInputs, gold: int,
                   lambda_consistency: float = 0.0,
                   inputs_q: ModelInputs | None = None
                   ) -> tuple[float, dict[str, np.ndarray]]:
    cache = classify_forward(inputs, params)
    loss = -float(np.log(max(cache.probs[gold], 1e-12)))
    grads = backward(cache, gold, params)
    if lambda_consistency > 0.0 and inputs_q is not None:
        cache_q = classify_forward(inputs_q, params)
        pen, dq, dqp = consistency_penalty_grads(cache_q.u, cache.u, gold)
        loss += lambda_consistency * pen
        backward_pooled(cache_q, lambda_consistency * dq, params, grads)
        backward_pooled(cache, lambda_consistency * dqp, params, grads)
    return loss, grads


def gradient_check(params: ModelParams, inputs: ModelInputs, gold: int,
                   eps: float = 1e-5, min_coords: int = 200,
                   rng: np.random.Generator | None = None,
                   lambda_consistency: float = 0.0,
                   inputs_q: ModelInputs | None = None) -> float:
    """Max relative error of analytic vs central-finite-difference grads.

    Samples at least ``min_coords`` coordinates spread over every tensor;
    comparisons where both sides are below 1e-10 in magnitude are skipped.
    """
    rng = rng or np.random.default_rng(0)
    _, grads = instance_grads(params, inputs, gold, lambda_consistency, inputs_q)
    names = list(params.tensors)
    per_tensor = max(4, -(-min_coords // len(names)))  # ceil division
    max_rel = 0.0
    for name in names:
        tensor = params.tensors[name]
        n_coords = min(tensor.size, per_tensor)
        flat_idx = rng.choice(tensor.size, size=n_coords, replace=False)
        for fi in flat_idx:
            idx = np.unravel_index(fi, tensor.shape)
            orig = tensor[idx]
            tensor[idx] = orig + eps
            loss_plus = instance_loss(params, inputs, gold,
                                      lambda_consistency, inputs_q)
            tensor[idx] = orig - eps
            loss_minus = instance_loss(params, inputs, gold,
                                       lambda_consistency, inputs_q)
            tensor[idx] = orig
            numeric = (loss_plus - loss_minus) / (2.0 * eps)
            analytic = grads[name][idx]
            denom = max(abs(numeric), abs(analytic))
            if denom < 1e-10:
                continue
            max_rel = max(max_rel, abs(numeric - analytic) / denom)
    return max_rel


# -----------------------------------------------------------------------
# checkpoint file
# -----------------------------------------------------------------------

def save_checkpoint(path: str | Path, params: ModelParams) -> None:
    """Header (length-prefixed config JSON) + tensors, float64 LE."""
    meta = {
        "config": asdict(params.config),
        "tensors": [[name, list(t.shape)] for name, t in params.tensors.items()],
    }
    blob = json.dumps(meta, sort_keys=True).encode("utf-8")
    with Path(path).open("wb") as fh:
        fh.write(_CKPT_MAGIC)
        fh.write(_U32.pack(len(blob)))
        fh.write(blob)
        for tensor in params.tensors.values():
            fh.write(np.ascontiguousarray(tensor, dtype="<f8").tobytes())


def load_checkpoint(path: str | Path) -> ModelParams:
    data = Path(path).read_bytes()
    if data[:8] != _CKPT_MAGIC:
        raise NumericError(f"{path}: not a checkpoint file")
    (blob_len,) = _U32.unpack(data[8:12])
    meta = json.loads(data[12:12 + blob_len].decode("utf-8"))
    config = ModelConfig.from_dict(meta["config"])
    pos = 12 + blob_len
    tensors: dict[str, np.ndarray] = {}
    for name, shape in meta["tensors"]:
        size = int(np.prod(shape)) * 8
        arr = np.frombuffer(data[pos:pos + size], dtype="<f8").reshape(shape)
        tensors[name] = arr.copy()
        pos += size
    if pos != len(data):
        raise NumericError(f"{path}: trailing bytes in checkpoint")
    return ModelParams(config=config, tensors=tensors)
