"""Rule-based sentence sentiment scoring and word-level emotion tagging.

The sentiment scorer ports the classic social-media rule set: lexicon
valences modified by boosters, negation, all-caps emphasis, punctuation
amplification and the contrastive-"but" reweighting, normalized into a
compound score in [-1, 1]. Scores are computed per sentence and broadcast
onto every token of that sentence; emotions are tagged per word against an
association lexicon with a neutral catch-all class.
"""

from __future__ import annotations

import logging
import math
import string
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import TokenizedInstance
from .errors import LexiconError

log = logging.getLogger(__name__)

# empirically derived rule constants from the published analyzer
B_INCR = 0.293
B_DECR = -0.293
C_INCR = 0.733
N_SCALAR = -0.74
NORMALIZATION_ALPHA = 15

NEGATIONS = frozenset(
    ["aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
     "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
     "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
     "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
     "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing",
     "nowhere", "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
     "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't", "without",
     "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom", "despite"]
)

BOOSTERS = {
    "absolutely": B_INCR, "amazingly": B_INCR, "awfully": B_INCR,
    "completely": B_INCR, "considerable": B_INCR, "considerably": B_INCR,
    "decidedly": B_INCR, "deeply": B_INCR, "effing": B_INCR,
    "enormous": B_INCR, "enormously": B_INCR, "entirely": B_INCR,
    "especially": B_INCR, "exceptional": B_INCR, "exceptionally": B_INCR,
    "extreme": B_INCR, "extremely": B_INCR, "fabulously": B_INCR,
    "flipping": B_INCR, "flippin": B_INCR, "frackin": B_INCR,
    "fracking": B_INCR, "fricking": B_INCR, "frickin": B_INCR,
    "frigging": B_INCR, "friggin": B_INCR, "fully": B_INCR,
    "fuckin": B_INCR, "fucking": B_INCR, "fuggin": B_INCR,
    "fugging": B_INCR, "greatly": B_INCR, "hella": B_INCR, "highly": B_INCR,
    "hugely": B_INCR, "incredible": B_INCR, "incredibly": B_INCR,
    "intensely": B_INCR, "major": B_INCR, "majorly": B_INCR, "more": B_INCR,
    "most": B_INCR, "particularly": B_INCR, "purely": B_INCR, "quite": B_INCR,
    "really": B_INCR, "remarkably": B_INCR, "so": B_INCR,
    "substantially": B_INCR, "thoroughly": B_INCR, "total": B_INCR,
    "totally": B_INCR, "tremendous": B_INCR, "tremendously": B_INCR,
    "uber": B_INCR, "unbelievably": B_INCR, "unusually": B_INCR,
    "utter": B_INCR, "utterly": B_INCR, "very": B_INCR,
    "almost": B_DECR, "barely": B_DECR, "hardly": B_DECR,
    "just enough": B_DECR, "kind of": B_DECR, "kinda": B_DECR,
    "kindof": B_DECR, "kind-of": B_DECR, "less": B_DECR, "little": B_DECR,
    "marginal": B_DECR, "marginally": B_DECR, "occasional": B_DECR,
    "occasionally": B_DECR, "partly": B_DECR, "scarce": B_DECR,
    "scarcely": B_DECR, "slight": B_DECR, "slightly": B_DECR,
    "somewhat": B_DECR, "sort of": B_DECR, "sorta": B_DECR,
    "sortof": B_DECR, "sort-of": B_DECR,
}

SPECIAL_CASES = {
    "the shit": 3, "the bomb": 3, "bad ass": 1.5, "badass": 1.5,
    "bus stop": 0.0, "yeah right": -2, "kiss of death": -1.5,
    "to die for": 3, "beating heart": 3.1, "broken heart": -2.9,
}

SENTIMENT_LABELS = ("negative", "neutral", "positive")
NEGATIVE, NEUTRAL, POSITIVE = 0, 1, 2

EMOTIONS = ("anger", "anticipation", "disgust", "fear", "joy",
            "sadness", "surprise", "trust")
EMOTION_INDEX = {name: i for i, name in enumerate(EMOTIONS)}
NEUTRAL_EMOTION = len(EMOTIONS)  # index 8
EMOTION_LABELS = EMOTIONS + ("neutral",)

POLARITY_CATEGORIES = ("positive", "negative")


@dataclass
class SentimentLexicon:
    """Word valences plus the booster and negation word lists."""

    valences: dict[str, float]
    boosters: dict[str, float] = field(default_factory=lambda: dict(BOOSTERS))
    negations: frozenset[str] = NEGATIONS

    def valence(self, word: str) -> float | None:
        return self.valences.get(word.lower())

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.valences

    def __len__(self) -> int:
        return len(self.valences)


@dataclass
class EmotionLexicon:
    """Word to emotion-set association map."""

    emotions: dict[str, frozenset[str]]

    def lookup(self, word: str) -> frozenset[str]:
        return self.emotions.get(word.lower(), frozenset())

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.emotions

    def __len__(self) -> int:
        return len(self.emotions)


def load_sentiment_lexicon(path: str | Path) -> SentimentLexicon:
    """Load a tab-separated valence lexicon (token, valence, extras ignored)."""
    path = Path(path)
    valences: dict[str, float] = {}
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise LexiconError(f"{path}:{lineno}: expected at least 2 columns")
            token = parts[0].lower()
            try:
                valence = float(parts[1])
            except ValueError as exc:
                raise LexiconError(
                    f"{path}:{lineno}: unparsable valence {parts[1]!r}"
                ) from exc
            if not math.isfinite(valence):
                raise LexiconError(f"{path}:{lineno}: non-finite valence")
            if token in valences:
                log.warning("%s:%d: duplicate lexicon token %r, last wins",
                            path, lineno, token)
            valences[token] = valence
    if not valences:
        log.warning("sentiment lexicon %s is empty", path)
    return SentimentLexicon(valences=valences)


def load_emotion_lexicon(path: str | Path) -> EmotionLexicon:
    """Load word/category/flag rows, keeping flag=1 emotion associations."""
    path = Path(path)
    emotions: dict[str, set[str]] = {}
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise LexiconError(f"{path}:{lineno}: expected 3 columns")
            word, category, flag = parts[0].lower(), parts[1].lower(), parts[2]
            if flag not in ("0", "1"):
                raise LexiconError(f"{path}:{lineno}: flag must be 0 or 1")
            if category in POLARITY_CATEGORIES:
                continue
            if category not in EMOTION_INDEX:
                log.warning("%s:%d: unknown category %r skipped",
                            path, lineno, category)
                continue
            if flag == "1":
                emotions.setdefault(word, set()).add(category)
    return EmotionLexicon(
        emotions={w: frozenset(e) for w, e in emotions.items() if e}
    )


# -----------------------------------------------------------------------
# compound scoring rules
# -----------------------------------------------------------------------

def _strip_punc_if_word(token: str) -> str:
    # emoticons collapse to <=2 chars when stripped, so keep them whole
    stripped = token.strip(string.punctuation)
    if len(stripped) <= 2:
        return token
    return stripped


def _allcap_differential(words: list[str]) -> bool:
    allcap = sum(1 for w in words if w.isupper())
    return 0 < len(words) - allcap < len(words)


def _normalize(score: float, alpha: float = NORMALIZATION_ALPHA) -> float:
    norm = score / math.sqrt(score * score + alpha)
    return max(-1.0, min(1.0, norm))


def _negated(word_lower: str, negations: frozenset[str]) -> bool:
    return word_lower in negations or "n't" in word_lower


def _scalar_inc_dec(word: str, valence: float, is_cap_diff: bool,
                    boosters: dict[str, float]) -> float:
    scalar = 0.0
    word_lower = word.lower()
    if word_lower in boosters:
        scalar = boosters[word_lower]
        if valence < 0:
            scalar *= -1
        if word.isupper() and is_cap_diff:
            scalar += C_INCR if valence > 0 else -C_INCR
    return scalar


def _negation_check(valence: float, wae_lower: list[str], start_i: int,
                    i: int, negations: frozenset[str]) -> float:
    if start_i == 0:
        if _negated(wae_lower[i - 1], negations):
            valence *= N_SCALAR
    if start_i == 1:
        if wae_lower[i - 2] == "never" and wae_lower[i - 1] in ("so", "this"):
            valence *= 1.25
        elif wae_lower[i - 2] == "without" and wae_lower[i - 1] == "doubt":
            pass
        elif _negated(wae_lower[i - 2], negations):
            valence *= N_SCALAR
    if start_i == 2:
        # published precedence: (never and so/this at i-2) OR so/this at i-1
        if ((wae_lower[i - 3] == "never" and wae_lower[i - 2] in ("so", "this"))
                or wae_lower[i - 1] in ("so", "this")):
            valence *= 1.25
        elif (wae_lower[i - 3] == "without"
                and "doubt" in (wae_lower[i - 2], wae_lower[i - 1])):
            pass
        elif _negated(wae_lower[i - 3], negations):
            valence *= N_SCALAR
    return valence


def _special_idioms_check(valence: float, wae_lower: list[str], i: int,
                          boosters: dict[str, float]) -> float:
    onezero = f"{wae_lower[i - 1]} {wae_lower[i]}"
    twoonezero = f"{wae_lower[i - 2]} {wae_lower[i - 1]} {wae_lower[i]}"
    twoone = f"{wae_lower[i - 2]} {wae_lower[i - 1]}"
    threetwoone = f"{wae_lower[i - 3]} {wae_lower[i - 2]} {wae_lower[i - 1]}"
    threetwo = f"{wae_lower[i - 3]} {wae_lower[i - 2]}"
    for seq in (onezero, twoonezero, twoone, threetwoone, threetwo):
        if seq in SPECIAL_CASES:
            valence = SPECIAL_CASES[seq]
            break
    n = len(wae_lower)
    if n - 1 > i:
        zeroone = f"{wae_lower[i]} {wae_lower[i + 1]}"
        if zeroone in SPECIAL_CASES:
            valence = SPECIAL_CASES[zeroone]
    if n - 1 > i + 1:
        zeroonetwo = f"{wae_lower[i]} {wae_lower[i + 1]} {wae_lower[i + 2]}"
        if zeroonetwo in SPECIAL_CASES:
            valence = SPECIAL_CASES[zeroonetwo]
    for n_gram in (threetwoone, threetwo, twoone):
        if n_gram in boosters:
            valence += boosters[n_gram]
    return valence


def _least_check(valence: float, wae_lower: list[str], i: int,
                 valences: dict[str, float]) -> float:
    if (i > 1 and wae_lower[i - 1] not in valences
            and wae_lower[i - 1] == "least"):
        if wae_lower[i - 2] not in ("at", "very"):
            valence *= N_SCALAR
    elif (i > 0 and wae_lower[i - 1] not in valences
            and wae_lower[i - 1] == "least"):
        valence *= N_SCALAR
    return valence


def _but_check(wae_lower: list[str], sentiments: list[float]) -> list[float]:
    # published behavior rescales by first-occurrence index; replicated
    # as-is so results stay comparable with the reference implementation
    if "but" in wae_lower:
        bi = wae_lower.index("but")
        for sentiment in sentiments:
            si = sentiments.index(sentiment)
            if si < bi:
                sentiments.pop(si)
                sentiments.insert(si, sentiment * 0.5)
            elif si > bi:
                sentiments.pop(si)
                sentiments.insert(si, sentiment * 1.5)
    return sentiments


def _punctuation_emphasis(text: str) -> float:
    ep = min(text.count("!"), 4) * 0.292
    qm_count = text.count("?")
    qm = 0.0
    if qm_count > 1:
        qm = qm_count * 0.18 if qm_count <= 3 else 0.96
    return ep + qm


def compound_score(sentence_tokens: list[str], lexicon: SentimentLexicon) -> float:
    """Compound sentiment of one sentence's whitespace tokens, in [-1, 1]."""
    if not sentence_tokens:
        return 0.0
    text = " ".join(sentence_tokens)
    wae = [_strip_punc_if_word(t) for t in sentence_tokens]
    wae_lower = [w.lower() for w in wae]
    is_cap_diff = _allcap_differential(wae)
    valences = lexicon.valences

    sentiments: list[float] = []
    for i, item in enumerate(wae):
        item_lower = wae_lower[i]
        if item_lower in lexicon.boosters:
            sentiments.append(0.0)
            continue
        if i < len(wae) - 1 and item_lower == "kind" and wae_lower[i + 1] == "of":
            sentiments.append(0.0)
            continue
        valence = 0.0
        if item_lower in valences:
            valence = valences[item_lower]
            if (item_lower == "no" and i != len(wae) - 1
                    and wae_lower[i + 1] in valences):
                # "no" negates the next lexicon word instead of scoring itself
                valence = 0.0
            if ((i > 0 and wae_lower[i - 1] == "no")
                    or (i > 1 and wae_lower[i - 2] == "no")
                    or (i > 2 and wae_lower[i - 3] == "no"
                        and wae_lower[i - 1] in ("or", "nor"))):
                valence = valences[item_lower] * N_SCALAR
            if item.isupper() and is_cap_diff:
                if valence > 0:
                    valence += C_INCR
                else:
                    valence -= C_INCR
            for start_i in range(3):
                if (i > start_i
                        and wae_lower[i - (start_i + 1)] not in valences):
                    s = _scalar_inc_dec(wae[i - (start_i + 1)], valence,
                                        is_cap_diff, lexicon.boosters)
                    if start_i == 1 and s != 0:
                        s *= 0.95
                    if start_i == 2 and s != 0:
                        s *= 0.9
                    valence += s
                    valence = _negation_check(valence, wae_lower, start_i, i,
                                              lexicon.negations)
                    if start_i == 2:
                        valence = _special_idioms_check(
                            valence, wae_lower, i, lexicon.boosters)
            valence = _least_check(valence, wae_lower, i, valences)
        sentiments.append(valence)

    sentiments = _but_check(wae_lower, sentiments)
    if not sentiments:
        return 0.0
    total = float(sum(sentiments))
    punct = _punctuation_emphasis(text)
    if total > 0:
        total += punct
    elif total < 0:
        total -= punct
    return round(_normalize(total), 4)


def score_text(text: str, lexicon: SentimentLexicon) -> float:
    """Compound score of raw sentence text (whitespace tokenization)."""
    return compound_score(text.split(), lexicon)


def label_from_score(score: float) -> int:
    """Threshold a compound score; boundaries +-0.05 are inclusive."""
    if score <= -0.05:
        return NEGATIVE
    if score >= 0.05:
        return POSITIVE
    return NEUTRAL


def emotion_for_word(word: str, lexicon: EmotionLexicon) -> int:
    """Emotion index for one word; ties break by the fixed category order."""
    tags = lexicon.lookup(word)
    if not tags:
        return NEUTRAL_EMOTION
    return min(EMOTION_INDEX[t] for t in tags)


def annotate_emotion(tokens: list[str], lexicon: EmotionLexicon) -> list[int]:
    """Per-token emotion indices, neutral for words outside the lexicon."""
    return [emotion_for_word(t, lexicon) for t in tokens]


@dataclass(frozen=True)
class AffectAnnotation:
    """Aligned per-token affect labels for one instance.

    ``sentiment_labels`` and ``emotion_labels`` have one entry per token;
    ``sentence_scores`` has one compound score per sentence in instance
    order (question sentences first).
    """

    sentiment_labels: tuple[int, ...]
    emotion_labels: tuple[int, ...]
    sentence_scores: tuple[float, ...]
    question_sentence_count: int = 0


def annotate_sentiment(
    tok_inst: TokenizedInstance, lexicon: SentimentLexicon
) -> tuple[list[float], list[int]]:
    """Score each sentence and broadcast its label onto the sentence tokens."""
    scores: list[float] = []
    labels = [NEUTRAL] * tok_inst.num_tokens
    for (start, end), text in zip(tok_inst.sentence_spans, tok_inst.sentence_texts):
        score = score_text(text, lexicon)
        label = label_from_score(score)
        scores.append(score)
        for t in range(start, end):
            labels[t] = label
    return scores, labels


def annotate_instance(
    tok_inst: TokenizedInstance,
    sentiment_lexicon: SentimentLexicon,
    emotion_lexicon: EmotionLexicon,
) -> AffectAnnotation:
    """Full affect annotation: sentence sentiment plus per-token emotion."""
    scores, snt_labels = annotate_sentiment(tok_inst, sentiment_lexicon)
    emo_labels = annotate_emotion(list(tok_inst.tokens), emotion_lexicon)
    return AffectAnnotation(
        sentiment_labels=tuple(snt_labels),
        emotion_labels=tuple(emo_labels),
        sentence_scores=tuple(scores),
        question_sentence_count=tok_inst.question_sentence_count,
    )
