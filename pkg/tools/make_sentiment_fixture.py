#!/usr/bin/env python3
"""Freeze the 50-sentence sentiment parity fixture.

Runs both the production scorer and the straight-line reference oracle on
the pinned sentences, refuses to write goldens unless they agree to 1e-9,
and records compound scores plus threshold labels.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from stancelab.affect import (SENTIMENT_LABELS, label_from_score,
                              load_sentiment_lexicon, score_text)
from oracles.vader_reference import ReferenceAnalyzer

SENTENCES = [
    "The movie was good.",
    "The movie was VERY good!!",
    "The movie was not good.",
    "The plan is not good, but the goal is wonderful.",
    "This is a terrible, horrible idea.",
    "I absolutely love this wonderful city.",
    "I don't hate it.",
    "She is extremely smart, handsome, and funny.",
    "He is smart, handsome, and funny.",
    "The results were kind of disappointing.",
    "At least the food was delicious.",
    "The least helpful answer imaginable.",
    "Without doubt an excellent outcome.",
    "Never so wonderful a day!",
    "It was never going to succeed.",
    "There is no hope for this plan.",
    "no good",
    "The committee rejected the proposal without any debate.",
    "Milk provides calcium and other nutrients.",
    "The evidence suggests vaccines are safe and effective.",
    "Critics claim the policy is dangerous and harmful.",
    "Is this really the best we can do???",
    "WOW, what an AMAZING victory!!!!",
    "The catastrophe destroyed everything we cherished.",
    "A boring, dull, tedious lecture.",
    "Slightly better than last year.",
    "Hardly an improvement at all.",
    "The reforms marginally improved hospital safety.",
    "An utterly disastrous and corrupt administration.",
    "Voters fear fraud and tampering with the machines.",
    "The jury praised the honest, courageous whistleblower.",
    "Smoking causes cancer and other deadly diseases.",
    "Students thrive when teachers encourage curiosity.",
    "The internet is neither good nor bad.",
    "I can't believe how incredibly beautiful this is!",
    "That so-called expert was a fraud.",
    "The bill passed after a long procedural vote.",
    "Opponents warn of rising debt and unemployment.",
    "Supporters celebrate the new freedom and prosperity.",
    "It's a bad ass machine.",
    "yeah right, like that will work",
    "This is the shit!",
    "A kiss of death for small businesses.",
    "The team was robbed of a well-deserved win.",
    "Nobody was hurt, thankfully.",
    "friendly staff but the rooms were filthy",
    ":) everything went fine",
    "The broken heart of the city never healed.",
    "Regulators uncovered massive fraud, corruption, and abuse.",
    "The festival felt joyful, peaceful, and free.",
]


def main():
    root = Path(__file__).resolve().parent.parent
    lex_path = root / "src" / "stancelab" / "data" / "sentiment_lexicon.txt"
    lex = load_sentiment_lexicon(lex_path)
    oracle = ReferenceAnalyzer(str(lex_path))

    rows = []
    for sent in SENTENCES:
        mine = score_text(sent, lex)
        ref = oracle.compound(sent)
        if abs(mine - ref) > 1e-9:
            raise SystemExit(f"disagreement on {sent!r}: {mine} vs {ref}")
        rows.append({
            "text": sent,
            "compound": ref,
            "label": SENTIMENT_LABELS[label_from_score(ref)],
        })

    out = root / "tests" / "data" / "sentiment_fixture.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(rows, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} sentences to {out}")
    labels = [r["label"] for r in rows]
    print({k: labels.count(k) for k in set(labels)})


if __name__ == "__main__":
    main()
