"""Max-pooling engagement scores and heatmap rendering.

A token's engagement score counts how many max-pool columns its hidden
state won; the scores over an instance always sum to the pooled width.
Sub-token scores can be merged into their source words through the word
alignment map. Renderers emit JSON, HTML, or ANSI terminal shading.
"""

from __future__ import annotations

import html as html_lib
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DataError
from .network import ForwardCache


@dataclass
class Engagement:
    """Per-token max-pool win counts for one explained instance."""

    tokens: tuple[str, ...]
    scores: tuple[int, ...]
    pooled_width: int
    word_alignment: tuple[int, ...] | None = None
    question_token_count: int = 0
    question: str = ""
    predicted: str = ""
    gold: str = ""


def engagement_scores(cache: ForwardCache, tokens: tuple[str, ...],
                      word_alignment: tuple[int, ...] | None = None,
                      question_token_count: int = 0,
                      question: str = "", predicted: str = "",
                      gold: str = "") -> Engagement:
    """Count max-pool column wins per token position."""
    t_len = cache.z.shape[0]
    if len(tokens) != t_len:
        raise DataError(f"token count {len(tokens)} != sequence length {t_len}")
    counts = np.zeros(t_len, dtype=np.int64)
    np.add.at(counts, cache.argmax_indices, 1)
    return Engagement(
        tokens=tuple(tokens),
        scores=tuple(int(c) for c in counts),
        pooled_width=int(cache.z.shape[1]),
        word_alignment=word_alignment,
        question_token_count=question_token_count,
        question=question,
        predicted=predicted,
        gold=gold,
    )


def top_tokens(engagement: Engagement, k: int,
               merge_subtokens: bool = False) -> list[tuple[str, int]]:
    """Top-k (token, score) pairs; ties rank by earliest position.

    With ``merge_subtokens`` the scores of sub-tokens sharing a source word
    sum together and the merged word ranks at its first position.
    """
    if k < 1:
        raise DataError("k must be at least 1")
    if merge_subtokens and engagement.word_alignment is not None:
        merged: dict[int, list] = {}
        for pos, (tok, score, word) in enumerate(zip(
                engagement.tokens, engagement.scores,
                engagement.word_alignment)):
            key = word if word >= 0 else -(pos + 2)  # specials stay alone
            if key not in merged:
                merged[key] = [tok, 0, pos]
            else:
                merged[key][0] = merged[key][0] + tok.removeprefix("##")
            merged[key][1] += score
        items = [(tok, score, pos) for tok, score, pos in merged.values()]
    else:
        items = [(tok, score, pos) for pos, (tok, score) in
                 enumerate(zip(engagement.tokens, engagement.scores))]
    items.sort(key=lambda x: (-x[1], x[2]))
    return [(tok, score) for tok, score, _ in items[:k]]


def _intensity(score: int, max_score: int) -> float:
    return score / max_score if max_score > 0 else 0.0


def render_heatmap(engagement: Engagement, format: str = "json") -> str:
    """Render the engagement map as json, html, or ansi text."""
    if format == "json":
        return json.dumps({
            "question": engagement.question,
            "predicted": engagement.predicted,
            "gold": engagement.gold,
            "tokens": list(engagement.tokens),
            "scores": list(engagement.scores),
            "pooled_width": engagement.pooled_width,
            "question_token_count": engagement.question_token_count,
        }, ensure_ascii=False, sort_keys=True)

    max_score = max(engagement.scores) if engagement.scores else 0
    if format == "html":
        spans = []
        for i, (tok, score) in enumerate(zip(engagement.tokens,
                                             engagement.scores)):
            alpha = round(_intensity(score, max_score), 3)
            marker = " data-question=\"1\"" if i < engagement.question_token_count else ""
            spans.append(
                f'<span class="tok" style="background: rgba(178, 24, 43, {alpha})"'
                f' title="{score}"{marker}>{html_lib.escape(tok)}</span>'
            )
        body = "\n".join(spans)
        header = html_lib.escape(engagement.question)
        meta = (f"predicted: {html_lib.escape(engagement.predicted)} | "
                f"gold: {html_lib.escape(engagement.gold)}")
        return (
            "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">\n"
            "<style>.tok{display:inline-block;margin:1px;padding:2px 4px;"
            "border-radius:3px;font-family:monospace}</style></head>\n"
            f"<body>\n<h3>{header}</h3>\n<p>{meta}</p>\n<div>\n{body}\n</div>\n"
            "</body></html>\n"
        )
    if format == "ansi":
        shades = (255, 224, 223, 217, 196, 160, 124)  # light to dark red
        parts = []
        for tok, score in zip(engagement.tokens, engagement.scores):
            level = _intensity(score, max_score)
            shade = shades[min(int(level * (len(shades) - 1) + 0.5),
                               len(shades) - 1)]
            if score == 0:
                parts.append(tok)
            else:
                parts.append(f"\x1b[48;5;{shade}m{tok}\x1b[0m")
        return " ".join(parts) + "\n"
    raise DataError(f"unknown heatmap format {format!r}")
