#!/usr/bin/env python3
"""Freeze tokenizer and sentence-segmenter golden files.

Run once after any deliberate rule change; tests compare against these
committed outputs byte-for-byte.
"""

import json
from pathlib import Path

from stancelab.corpus import split_sentences, tokenize

TOKENIZER_CASES = [
    "Is vaping safe?",
    "",
    "e-cigarettes aren't",
    "The FDA approved it in 2016.",
    "Don't panic!! (Seriously.)",
    "A cost-benefit analysis, re-evaluated.",
    "Version 3.14 shipped; users rejoiced...",
    "O'Brien's co-author said \"no\".",
]

SEGMENTER_CASES = [
    "A. B? C!",
    "No terminator here",
    "Dr. Smith agrees. So do we.",
    "The U.S. economy grew. Prices fell.",
    "It cost 3.50 dollars. Cheap!",
    "He asked, \"Why?\" Then he left.",
    "E.g. this one. And that one.",
    "Approx. half said yes. The rest said no.",
    "Wait... what happened? Nothing!",
]


def main():
    out_dir = Path(__file__).resolve().parent.parent / "tests" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)

    tok = [{"text": t, "tokens": tokenize(t)} for t in TOKENIZER_CASES]
    (out_dir / "tokenizer_golden.json").write_text(
        json.dumps(tok, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")

    seg = [{
        "text": t,
        "spans": split_sentences(t),
        "sentences": [t[a:b].strip() for a, b in split_sentences(t)],
    } for t in SEGMENTER_CASES]
    (out_dir / "segmenter_golden.json").write_text(
        json.dumps(seg, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")

    print("tokenizer cases:")
    for row in tok:
        print(" ", row["text"], "->", row["tokens"])
    print("segmenter cases:")
    for row in seg:
        print(" ", row["text"], "->", row["sentences"])


if __name__ == "__main__":
    main()
