"""End-to-end pipeline: topic bundle in, summary files out.

Order of operations: expressiveness scoring, phrase extraction and
salience, mention preparation, unified selection/rewriting optimization,
postprocessing.  Also hosts the two reimplemented baselines (random and
lead) and the output writers.
"""

import json
import random
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import assembler, bnb, expressiveness, ilp, mentions, rouge, salience, treebank
from .corpus import Sentence, Topic, vectorize
from .textproc import word_count


@dataclass
class PipelineConfig:
    lam: float = 0.005
    eta: float = 1.0
    max_iter: int = 300
    epsilon: float = 1e-4
    position_base: float = 0.8
    paragraph_cap: int = 4
    length_budget: int | None = None  # None: honor the bundle's budget
    short_sentence_threshold: int = 10
    comments_enabled: bool = True
    time_limit: float = 30.0
    seed: int = 0
    rouge_stemming: bool = True
    rouge_remove_stopwords: bool = False

    def rouge_config(self) -> rouge.RougeConfig:
        return rouge.RougeConfig(stemming=self.rouge_stemming,
                                 remove_stopwords=self.rouge_remove_stopwords)


@dataclass
class PipelineResult:
    topic: Topic
    draft: assembler.SummaryDraft
    solution: ilp.IlpSolution
    model: ilp.IlpModel | None
    expressiveness: expressiveness.ExpressivenessResult
    sentence_scores: dict[str, float]
    pool: list[salience.SaliencedPhrase]
    clusters: list[mentions.MentionCluster]
    length_budget: int

    @property
    def summary_text(self) -> str:
        return self.draft.text


def score_sentences(topic: Topic, config: PipelineConfig):
    """Run the sparse-coding scorer; returns (result, {sentence_id: a})."""
    news = topic.news_sentences()
    d = len(topic.dictionary)
    news_vectors = [vectorize(s, topic.dictionary) for s in news]
    X = np.zeros((len(news), d))
    for row, vec in enumerate(news_vectors):
        for col, val in vec.entries.items():
            X[row, col] = val
    rho = np.array([
        expressiveness.position_weight(s.paragraph_index, config.position_base,
                                       config.paragraph_cap)
        for s in news
    ])

    comment_vectors = []
    tau_values = []
    if config.comments_enabled:
        for sent in topic.comment_sentences:
            vec = vectorize(sent, topic.dictionary)
            if vec.is_zero:
                continue  # carries no dictionary terms; cosine undefined
            comment_vectors.append(vec)
            tau_values.append(expressiveness.comment_weight(vec, news_vectors))
    Z = np.zeros((len(comment_vectors), d))
    for row, vec in enumerate(comment_vectors):
        for col, val in vec.entries.items():
            Z[row, col] = val

    model = expressiveness.ScModel(
        X=X, Z=Z, rho=rho, tau=np.array(tau_values, dtype=np.float64),
        lam=config.lam, eta=config.eta, max_iter=config.max_iter,
        epsilon=config.epsilon, position_base=config.position_base,
        paragraph_cap=config.paragraph_cap,
    )
    result = expressiveness.solve(model)
    scores = {s.id: float(a) for s, a in zip(news, result.A)}
    return result, scores


def extract_all_phrases(topic: Topic) -> dict[str, list[treebank.Phrase]]:
    by_sentence: dict[str, list[treebank.Phrase]] = {}
    for sent in topic.news_sentences():
        if sent.parse is None:
            continue
        try:
            by_sentence[sent.id] = treebank.extract_phrases(sent.parse, sent.id)
        except treebank.NoSentenceNode:
            by_sentence[sent.id] = []  # uncompressible; excluded from the pool
    return by_sentence


def run_summarize(topic: Topic, config: PipelineConfig | None = None) -> PipelineResult:
    config = config or PipelineConfig()
    budget = (config.length_budget if config.length_budget is not None
              else topic.length_budget_words)

    expr_result, scores = score_sentences(topic, config)
    phrases_by_sentence = extract_all_phrases(topic)
    all_sentences = topic.news_sentences() + topic.comment_sentences
    topic_tf = salience.topic_term_frequencies(all_sentences, topic.dictionary)
    pool = salience.build_candidate_pool(
        topic.news_sentences(), phrases_by_sentence, scores,
        topic.dictionary, topic_tf,
    )
    clusters = mentions.load_or_derive_clusters(topic)
    sentence_index: dict[str, Sentence] = {s.id: s for s in topic.news_sentences()}

    opt_config = ilp.OptConfig(
        length_budget=budget,
        short_sentence_threshold=config.short_sentence_threshold,
        time_limit=config.time_limit,
    )
    try:
        model = ilp.build_model(pool, salience.build_similarity(pool), clusters,
                                opt_config, sentence_index)
    except ilp.EmptyPool:
        empty = ilp.IlpSolution(assignment=np.zeros(0), objective_value=0.0,
                                status="optimal", nodes_explored=0)
        draft = assembler.SummaryDraft(sentences=[], total_words=0)
        return PipelineResult(topic=topic, draft=draft, solution=empty,
                              model=None, expressiveness=expr_result,
                              sentence_scores=scores, pool=pool,
                              clusters=clusters, length_budget=budget)

    solution = bnb.solve_ilp(model, time_limit=config.time_limit)
    draft = assembler.assemble(solution, model, clusters, topic)
    return PipelineResult(topic=topic, draft=draft, solution=solution,
                          model=model, expressiveness=expr_result,
                          sentence_scores=scores, pool=pool, clusters=clusters,
                          length_budget=budget)


# ---------------------------------------------------------------------------
# Baselines
# ---------------------------------------------------------------------------

def lead_baseline(topic: Topic, length_budget: int) -> str:
    """Leading sentences of chronologically ordered documents."""
    docs = sorted(enumerate(topic.documents), key=lambda e: (e[1].timestamp, e[0]))
    lines: list[str] = []
    used = 0
    for _, doc in docs:
        for sent in doc.sentences():
            words = word_count(sent.raw_text)
            if used + words > length_budget:
                return "\n".join(lines)
            lines.append(sent.raw_text)
            used += words
    return "\n".join(lines)


def random_baseline(topic: Topic, length_budget: int, seed: int) -> str:
    """Uniformly sampled whole sentences, stopped at the budget."""
    sentences = topic.news_sentences()
    order = list(range(len(sentences)))
    random.Random(seed).shuffle(order)
    lines: list[str] = []
    used = 0
    for idx in order:
        words = word_count(sentences[idx].raw_text)
        if used + words > length_budget:
            break
        lines.append(sentences[idx].raw_text)
        used += words
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Output files
# ---------------------------------------------------------------------------

def load_gold_summaries(bundle: Path) -> list[str]:
    gold_dir = Path(bundle) / "gold"
    if not gold_dir.is_dir():
        return []
    return [p.read_text(encoding="utf-8")
            for p in sorted(gold_dir.glob("*.txt"))]


def result_trace(result: PipelineResult) -> dict:
    sel = []
    for sent in result.draft.sentences:
        for pid in sent.phrase_ids:
            sel.append({"phrase_id": pid, "sentence_id": sent.sentence_id})
    return {
        "topic": result.topic.id,
        "objective": result.solution.objective_value,
        "status": result.solution.status,
        "gap": result.solution.gap,
        "nodes_explored": result.solution.nodes_explored,
        "length_budget": result.length_budget,
        "summary_words": result.draft.total_words,
        "selected": sel,
        "rewrites": [asdict(r) for s in result.draft.sentences for r in s.rewrites],
        "sentences": [
            {"sentence_id": s.sentence_id, "doc_id": s.doc_id, "text": s.text}
            for s in result.draft.sentences
        ],
        "expressiveness": result.sentence_scores,
        "solver_iterations": result.expressiveness.iterations_run,
        "solver_converged": result.expressiveness.converged,
    }


def write_outputs(result: PipelineResult, bundle: Path, out_dir: Path,
                  config: PipelineConfig) -> dict:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summary_path = out_dir / "summary.txt"
    text = result.summary_text
    summary_path.write_text(text + ("\n" if text else ""), encoding="utf-8")
    trace = result_trace(result)
    (out_dir / "trace.json").write_text(
        json.dumps(trace, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    references = load_gold_summaries(bundle)
    if references:
        scores = rouge.score(text, references, config.rouge_config())
        payload = {m: asdict(s) for m, s in scores.items()}
        (out_dir / "rouge.json").write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        trace["rouge"] = payload
    return trace
