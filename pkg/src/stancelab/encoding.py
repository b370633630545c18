"""Assembles classifier-ready sequences from instances, affect and embeddings.

Two sources feed the contextual channel: a frozen embedding store written by
the offline exporter (sub-token granularity, with word alignment), or the
trainable fallback table (our own tokenizer, one row per token). In both
cases affect labels are computed on words and broadcast onto the sequence;
separator and other special positions stay neutral.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .affect import (AffectAnnotation, EmotionLexicon, NEUTRAL,
                     NEUTRAL_EMOTION, SentimentLexicon, annotate_instance,
                     emotion_for_word, label_from_score, score_text)
from .corpus import Instance, split_sentences, tokenize_instance
from .embeddings import EmbeddingStore, FallbackVocab
from .network import ModelInputs

SEP_TOKEN = "<sep>"

_WORD_RE = re.compile(r"\S+")
_BOUNDARY_PUNCT = "\"'`.,;:!?()[]{}<>"


@dataclass(frozen=True)
class EncodedInstance:
    """One instance bound to its model inputs and explanation metadata."""

    instance: Instance
    tokens: tuple[str, ...]
    inputs: ModelInputs
    word_alignment: tuple[int, ...]
    question_token_count: int
    annotation: AffectAnnotation

    @property
    def gold(self) -> int:
        return 0 if self.instance.stance == "pro" else 1


def word_affect_labels(
    text: str,
    sentiment_lexicon: SentimentLexicon,
    emotion_lexicon: EmotionLexicon,
) -> tuple[list[str], list[int], list[int], list[float]]:
    """Whitespace words of ``text`` with sentence-broadcast sentiment and
    per-word emotion labels; also returns the sentence compound scores."""
    words: list[str] = []
    starts: list[int] = []
    for m in _WORD_RE.finditer(text):
        words.append(m.group(0))
        starts.append(m.start())

    snt_labels = [NEUTRAL] * len(words)
    scores: list[float] = []
    for cstart, cend in split_sentences(text):
        members = [i for i, s in enumerate(starts) if cstart <= s < cend]
        if not members:
            continue
        score = score_text(text[cstart:cend].strip(), sentiment_lexicon)
        scores.append(score)
        label = label_from_score(score)
        for i in members:
            snt_labels[i] = label

    emo_labels = [
        emotion_for_word(w.strip(_BOUNDARY_PUNCT).lower(), emotion_lexicon)
        for w in words
    ]
    return words, snt_labels, emo_labels, scores


def encode_fallback(
    instance: Instance,
    vocab: FallbackVocab,
    sentiment_lexicon: SentimentLexicon,
    emotion_lexicon: EmotionLexicon,
    pair_mode: bool = True,
) -> EncodedInstance:
    """Encode with the trainable table: question tokens, separator (pair
    mode), perspective tokens; OOV tokens map to the reserved row 0."""
    tok = tokenize_instance(instance)
    ann = annotate_instance(tok, sentiment_lexicon, emotion_lexicon)
    nq = len(tok.question_tokens)

    tokens = list(tok.tokens)
    snt = list(ann.sentiment_labels)
    emo = list(ann.emotion_labels)
    alignment = list(range(len(tokens)))
    if pair_mode:
        tokens.insert(nq, SEP_TOKEN)
        snt.insert(nq, NEUTRAL)
        emo.insert(nq, NEUTRAL_EMOTION)
        alignment.insert(nq, -1)

    inputs = ModelInputs(
        sentiment_labels=np.array(snt, dtype=np.int64),
        emotion_labels=np.array(emo, dtype=np.int64),
        token_ids=vocab.rows(tokens),
    )
    return EncodedInstance(
        instance=instance,
        tokens=tuple(tokens),
        inputs=inputs,
        word_alignment=tuple(alignment),
        question_token_count=nq,
        annotation=ann,
    )


def encode_contextual(
    instance: Instance,
    store: EmbeddingStore,
    sentiment_lexicon: SentimentLexicon,
    emotion_lexicon: EmotionLexicon,
) -> EncodedInstance:
    """Encode from the frozen store; word-level affect labels broadcast onto
    sub-tokens through the record's alignment, specials stay neutral."""
    rec = store.get(instance.id)

    q_words, q_snt, q_emo, q_scores = word_affect_labels(
        instance.question, sentiment_lexicon, emotion_lexicon)
    p_words, p_snt, p_emo, p_scores = word_affect_labels(
        instance.perspective, sentiment_lexicon, emotion_lexicon)
    word_snt = q_snt + p_snt
    word_emo = q_emo + p_emo
    n_words = len(word_snt)

    snt = np.full(len(rec.tokens), NEUTRAL, dtype=np.int64)
    emo = np.full(len(rec.tokens), NEUTRAL_EMOTION, dtype=np.int64)
    last_word = -1
    for i, w in enumerate(rec.word_alignment):
        if 0 <= w < n_words:
            snt[i] = word_snt[w]
            emo[i] = word_emo[w]
            if w > last_word:
                last_word = w

    # question sub-token count for the explainer's span marker
    nq_sub = sum(1 for w in rec.word_alignment if 0 <= w < len(q_words))

    inputs = ModelInputs(
        sentiment_labels=snt,
        emotion_labels=emo,
        context=rec.matrix.astype(np.float64),
    )
    ann = AffectAnnotation(
        sentiment_labels=tuple(int(v) for v in snt),
        emotion_labels=tuple(int(v) for v in emo),
        sentence_scores=tuple(q_scores + p_scores),
        question_sentence_count=len(q_scores),
    )
    return EncodedInstance(
        instance=instance,
        tokens=rec.tokens,
        inputs=inputs,
        word_alignment=rec.word_alignment,
        question_token_count=nq_sub,
        annotation=ann,
    )


def encode_question_only(
    enc: EncodedInstance,
    vocab: FallbackVocab | None = None,
) -> ModelInputs:
    """Question-only inputs for the consistency penalty, sliced out of an
    already-encoded instance."""
    nq = enc.question_token_count
    if nq == 0:
        nq = 1  # degenerate: keep at least one position
    snt = np.asarray(enc.inputs.sentiment_labels[:nq])
    emo = np.asarray(enc.inputs.emotion_labels[:nq])
    if enc.inputs.context is not None:
        return ModelInputs(sentiment_labels=snt, emotion_labels=emo,
                           context=enc.inputs.context[:nq])
    return ModelInputs(sentiment_labels=snt, emotion_labels=emo,
                       token_ids=enc.inputs.token_ids[:nq])


def embeddings_for(
    instance: Instance,
    mode: str,
    store: EmbeddingStore | None = None,
    vocab: FallbackVocab | None = None,
    pair_mode: bool = True,
):
    """Resolve the contextual channel for one instance.

    ``mode`` is "contextual" (frozen store matrix) or "fallback" (trainable
    table row ids). Returns (tokens, matrix_or_ids, word_alignment).
    """
    if mode == "contextual":
        if store is None:
            raise ValueError("contextual mode requires an embedding store")
        rec = store.get(instance.id)
        return rec.tokens, rec.matrix.astype(np.float64), rec.word_alignment
    if mode == "fallback":
        if vocab is None:
            raise ValueError("fallback mode requires a vocabulary")
        tok = tokenize_instance(instance)
        tokens = list(tok.tokens)
        alignment = list(range(len(tokens)))
        if pair_mode:
            tokens.insert(len(tok.question_tokens), SEP_TOKEN)
            alignment.insert(len(tok.question_tokens), -1)
        return tuple(tokens), vocab.rows(tokens), tuple(alignment)
    raise ValueError(f"unknown embedding mode {mode!r}")
