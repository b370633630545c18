"""Deterministic synthetic corpora with a plantable affect signal.

Each instance is built from sentiment-neutral filler words plus a few
planted words drawn from the committed sentiment lexicon (restricted to
words that also carry emotion tags, so both affect modes see the signal).
``affect_signal_strength`` controls how often a planted word agrees with
the instance's stance: 1.0 makes stance perfectly recoverable by counting
planted words, 0.0 removes the correlation entirely.
"""

from __future__ import annotations

import random
from importlib import resources

from .affect import (EmotionLexicon, SentimentLexicon, load_emotion_lexicon,
                     load_sentiment_lexicon)
from .corpus import Instance

PLANT_VALENCE_MIN = 2.0
PLANT_MIN_LEN = 4

# fixed neutral vocabulary; a unit test asserts zero lexicon overlap
FILLER_WORDS = (
    "the", "a", "an", "of", "in", "on", "at", "to", "from", "with", "about",
    "between", "through", "during", "under", "over", "policy", "system",
    "process", "report", "study", "group", "people", "city", "state",
    "nation", "region", "program", "project", "measure", "number", "level",
    "result", "effect", "factor", "aspect", "topic", "matter", "question",
    "answer", "evidence", "research", "analysis", "data", "record", "period",
    "decade", "history", "public", "local", "federal", "general", "common",
    "typical", "standard", "schools", "students", "voters", "citizens",
    "workers", "budget", "market", "industry", "technology", "device",
    "network", "platform", "sector", "council", "committee", "board",
    "agency", "office", "document", "statement", "article", "section",
    "chapter", "survey", "review",
)

TOPICS = (
    ("uniform-policy", "Should schools require students to wear uniforms?"),
    ("vending-machines", "Should soda vending machines be allowed in schools?"),
    ("remote-work", "Should companies keep remote work as the default?"),
    ("voting-machines", "Do electronic voting machines improve elections?"),
    ("urban-transit", "Should the city expand its public transit network?"),
)


def default_sentiment_lexicon_path() -> str:
    return str(resources.files("stancelab") / "data" / "sentiment_lexicon.txt")


def default_emotion_lexicon_path() -> str:
    return str(resources.files("stancelab") / "data" / "emotion_lexicon.txt")


def load_default_lexicons() -> tuple[SentimentLexicon, EmotionLexicon]:
    return (load_sentiment_lexicon(default_sentiment_lexicon_path()),
            load_emotion_lexicon(default_emotion_lexicon_path()))


def planted_pools(
    sentiment_lexicon: SentimentLexicon,
    emotion_lexicon: EmotionLexicon,
) -> tuple[list[str], list[str]]:
    """Sorted positive and negative plantable word pools."""
    pos, neg = [], []
    for word, valence in sentiment_lexicon.valences.items():
        if len(word) < PLANT_MIN_LEN or not word.isalpha():
            continue
        if word not in emotion_lexicon:
            continue
        if valence >= PLANT_VALENCE_MIN:
            pos.append(word)
        elif valence <= -PLANT_VALENCE_MIN:
            neg.append(word)
    return sorted(pos), sorted(neg)


def _sentence(rng: random.Random, fillers: tuple[str, ...],
              plants: list[str]) -> str:
    words = [rng.choice(fillers) for _ in range(rng.randint(6, 9))]
    for plant in plants:
        words.insert(rng.randint(0, len(words)), plant)
    words[0] = words[0].capitalize()
    return " ".join(words) + "."


def make_fixture(
    seed: int,
    n_instances: int,
    affect_signal_strength: float,
    unique_planted: bool = False,
) -> list[Instance]:
    """Generate a balanced synthetic corpus.

    With ``unique_planted`` every planted word is used at most once across
    the whole corpus, so the stance signal cannot be memorized from token
    identities and must travel through the affect labels.
    """
    if n_instances < 2:
        raise ValueError("need at least 2 instances")
    if not 0.0 <= affect_signal_strength <= 1.0:
        raise ValueError("affect_signal_strength must be in [0, 1]")

    sent_lex, emo_lex = load_default_lexicons()
    pos_pool, neg_pool = planted_pools(sent_lex, emo_lex)
    rng = random.Random(seed)

    if unique_planted:
        pos_pool = pos_pool[:]
        neg_pool = neg_pool[:]
        rng.shuffle(pos_pool)
        rng.shuffle(neg_pool)

    def draw(pool_is_positive: bool) -> str:
        pool = pos_pool if pool_is_positive else neg_pool
        if unique_planted:
            if not pool:
                raise ValueError("planted word pool exhausted; lower n_instances")
            return pool.pop()
        return rng.choice(pool)

    p_aligned = (1.0 + affect_signal_strength) / 2.0
    instances = []
    for i in range(n_instances):
        stance = "pro" if i % 2 == 0 else "con"
        pair = i // 2
        phase = pair % 20
        split = "train" if phase < 14 else ("dev" if phase < 17 else "test")
        topic, question = TOPICS[i % len(TOPICS)]

        n_plants = rng.randint(2, 3) if unique_planted else rng.randint(2, 4)
        plants = []
        for _ in range(n_plants):
            aligned = rng.random() < p_aligned
            wants_positive = (stance == "pro") == aligned
            plants.append(draw(wants_positive))

        n_sentences = rng.randint(3, 5)
        per_sentence: list[list[str]] = [[] for _ in range(n_sentences)]
        for plant in plants:
            per_sentence[rng.randrange(n_sentences)].append(plant)
        perspective = " ".join(
            _sentence(rng, FILLER_WORDS, sent_plants)
            for sent_plants in per_sentence
        )
        instances.append(Instance(
            id=f"syn-{i:04d}",
            topic=topic,
            question=question,
            perspective=perspective,
            stance=stance,
            split=split,
        ))
    return instances
