"""ROUGE-1 / ROUGE-2 / ROUGE-SU4 F-measures.

Texts are tokenized line by line (one sentence per line; n-gram units
never cross lines), lowercased and stemmed by default.  The SU4 unit set
is the union of unigrams and skip-bigrams whose positions are at most 4
apart.  Multi-reference scores are the arithmetic mean of per-reference
F-measures; this is deterministic but intentionally simpler than the
jackknifing protocol of the original toolkit, so scores are comparable
run-to-run rather than bit-identical to it.
"""

from collections import Counter
from dataclasses import dataclass

from .textproc import porter_stem, tokenize
from .wordlists import STOPWORDS

METRICS = ("rouge_1", "rouge_2", "rouge_su4")


class RougeError(Exception):
    pass


class EmptyReference(RougeError):
    pass


@dataclass
class RougeScore:
    recall: float
    precision: float
    f_measure: float


@dataclass
class RougeConfig:
    stemming: bool = True
    remove_stopwords: bool = False
    su4_max_gap: int = 4


def _prepare(text: str, config: RougeConfig) -> list[list[str]]:
    lines = []
    for line in text.splitlines():
        toks = [t.lower() for t in tokenize(line)]
        if config.remove_stopwords:
            toks = [t for t in toks if t not in STOPWORDS]
        if config.stemming:
            toks = [porter_stem(t) for t in toks]
        if toks:
            lines.append(toks)
    return lines


def _units(lines: list[list[str]], metric: str, config: RougeConfig) -> Counter:
    units: Counter = Counter()
    for toks in lines:
        if metric == "rouge_1":
            units.update(toks)
        elif metric == "rouge_2":
            units.update(zip(toks, toks[1:]))
        else:  # rouge_su4: unigrams plus bounded skip-bigrams
            units.update(("u", t) for t in toks)
            gap = config.su4_max_gap
            for i in range(len(toks)):
                for j in range(i + 1, min(i + gap, len(toks) - 1) + 1):
                    units[("s", toks[i], toks[j])] += 1
    return units


def _overlap(sys_units: Counter, ref_units: Counter) -> int:
    return sum(min(count, ref_units[unit])
               for unit, count in sys_units.items() if unit in ref_units)


def _f_measure(p: float, r: float) -> float:
    if p + r == 0:
        return 0.0
    return 2 * p * r / (p + r)


def score(system: str, references: list[str],
          config: RougeConfig | None = None) -> dict[str, RougeScore]:
    """Mean-over-references ROUGE scores of a system summary."""
    config = config or RougeConfig()
    if not references:
        raise EmptyReference("at least one reference summary is required")
    sys_lines = _prepare(system, config)
    ref_lines = [_prepare(ref, config) for ref in references]
    if any(not rl for rl in ref_lines):
        raise EmptyReference("a reference summary has no tokens")

    out: dict[str, RougeScore] = {}
    for metric in METRICS:
        sys_units = _units(sys_lines, metric, config)
        sys_total = sum(sys_units.values())
        p_sum = r_sum = f_sum = 0.0
        for rl in ref_lines:
            ref_units = _units(rl, metric, config)
            ref_total = sum(ref_units.values())
            hits = _overlap(sys_units, ref_units)
            p = hits / sys_total if sys_total else 0.0
            r = hits / ref_total if ref_total else 0.0
            p_sum += p
            r_sum += r
            f_sum += _f_measure(p, r)
        n = len(ref_lines)
        out[metric] = RougeScore(recall=r_sum / n, precision=p_sum / n,
                                 f_measure=f_sum / n)
    return out
