"""Binary classification metrics, McNemar's paired significance test, and
per-issue sentiment profiles."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .corpus import Instance
from .errors import DataError


@dataclass
class Metrics:
    """Precision/recall/F1 with the underlying confusion counts."""

    positive_class: str
    tp: int
    fp: int
    fn: int
    tn: int
    precision: float = 0.0
    recall: float = 0.0
    f1: float = 0.0

    def __post_init__(self):
        self.precision = self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0
        self.recall = self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0
        pr = self.precision + self.recall
        self.f1 = 2.0 * self.precision * self.recall / pr if pr > 0 else 0.0

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def to_dict(self) -> dict:
        return {
            "positive_class": self.positive_class,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
        }


def compute_metrics(preds: list[str], golds: list[str],
                    positive_class: str = "pro") -> Metrics:
    """Standard binary P/R/F1 treating ``positive_class`` as positive."""
    if len(preds) != len(golds):
        raise DataError(
            f"prediction/gold length mismatch: {len(preds)} vs {len(golds)}")
    if not preds:
        raise DataError("compute_metrics requires at least one prediction")
    tp = fp = fn = tn = 0
    for p, g in zip(preds, golds):
        if p == positive_class:
            if g == positive_class:
                tp += 1
            else:
                fp += 1
        else:
            if g == positive_class:
                fn += 1
            else:
                tn += 1
    return Metrics(positive_class=positive_class, tp=tp, fp=fp, fn=fn, tn=tn)


def metrics_report(preds: list[str], golds: list[str]) -> dict:
    """Both per-class metric sets plus the macro-averaged F1."""
    pro = compute_metrics(preds, golds, "pro")
    con = compute_metrics(preds, golds, "con")
    return {
        "pro": pro.to_dict(),
        "con": con.to_dict(),
        "macro_f1": (pro.f1 + con.f1) / 2.0,
        "accuracy": (pro.tp + pro.tn) / pro.total,
        "n": pro.total,
    }


@dataclass
class McNemarResult:
    """Discordant-pair counts and significance of two paired classifiers."""

    b: int  # A right, B wrong
    c: int  # A wrong, B right
    chi2_statistic: float
    p_exact: float
    p_chi2: float
    chi2_defined: bool

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "c": self.c,
            "chi2_statistic": self.chi2_statistic,
            "p_exact": self.p_exact,
            "p_chi2": self.p_chi2,
            "chi2_defined": self.chi2_defined,
        }


def _chi2_sf_1df(x: float) -> float:
    # survival function of chi-square with 1 dof: erfc(sqrt(x/2))
    from math import erfc, sqrt
    return erfc(sqrt(x / 2.0))


def mcnemar_test(preds_a: list[str], preds_b: list[str],
                 golds: list[str]) -> McNemarResult:
    """Exact two-sided binomial McNemar test plus the continuity-corrected
    chi-square statistic (advisory)."""
    if not (len(preds_a) == len(preds_b) == len(golds)):
        raise DataError("mcnemar_test requires equal-length prediction lists")
    b = sum(1 for pa, pb, g in zip(preds_a, preds_b, golds)
            if pa == g and pb != g)
    c = sum(1 for pa, pb, g in zip(preds_a, preds_b, golds)
            if pa != g and pb == g)
    n = b + c
    if n == 0:
        return McNemarResult(b=0, c=0, chi2_statistic=0.0, p_exact=1.0,
                             p_chi2=1.0, chi2_defined=False)
    k = min(b, c)
    tail = sum(comb(n, i) for i in range(k + 1)) / (2.0 ** n)
    p_exact = min(1.0, 2.0 * tail)
    chi2 = (abs(b - c) - 1.0) ** 2 / n
    return McNemarResult(b=b, c=c, chi2_statistic=chi2, p_exact=p_exact,
                         p_chi2=_chi2_sf_1df(chi2), chi2_defined=True)


def sentiment_profile(
    corpus: list[Instance],
    sentence_scores: dict[str, list[float]],
    issues: list[str] | None = None,
) -> list[dict]:
    """Mean perspective sentence compound score per issue and stance.

    ``sentence_scores`` maps instance id to its perspective sentence scores.
    Issues with a single stance report the other side as None.
    """
    wanted = set(issues) if issues else None
    by_issue: dict[str, dict[str, list[float]]] = {}
    for inst in corpus:
        if wanted is not None and inst.topic not in wanted:
            continue
        scores = sentence_scores.get(inst.id)
        if not scores:
            continue
        by_issue.setdefault(inst.topic, {"pro": [], "con": []})[inst.stance].extend(scores)

    rows = []
    for topic in sorted(by_issue):
        sides = by_issue[topic]
        rows.append({
            "topic": topic,
            "pro_avg": (sum(sides["pro"]) / len(sides["pro"])
                        if sides["pro"] else None),
            "con_avg": (sum(sides["con"]) / len(sides["con"])
                        if sides["con"] else None),
            "n_pro_sentences": len(sides["pro"]),
            "n_con_sentences": len(sides["con"]),
        })
    return rows
