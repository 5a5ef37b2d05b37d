"""Turn an ILP solution into final summary text.

Sentences are ordered by their source document's timestamp (original
order within a document), each one rebuilt from its selected phrases (NPs
first, then VPs, in token order).  Mention rewriting is applied exactly
as the gamma variables dictate, with later same-entity mentions inside a
phrase always taking the short form.  The emitted word count must equal
the length the optimizer accounted for; this is checked, not assumed.
"""

from dataclasses import dataclass, field

from .corpus import Topic
from .ilp import IlpModel, IlpSolution
from .mentions import MentionCluster
from .textproc import detokenize, word_count


class AssemblyError(Exception):
    pass


@dataclass
class AppliedRewrite:
    cluster_id: str
    sentence_id: str
    start: int
    end: int
    replacement: str
    form: str  # "full" | "short"


@dataclass
class AssembledSentence:
    sentence_id: str
    doc_id: str
    timestamp: int
    text: str
    phrase_ids: list[str]
    rewrites: list[AppliedRewrite] = field(default_factory=list)


@dataclass
class SummaryDraft:
    sentences: list[AssembledSentence]
    total_words: int

    @property
    def text(self) -> str:
        return "\n".join(s.text for s in self.sentences)


def _is_word(tok: str) -> bool:
    return any(ch.isalnum() for ch in tok)


def assemble(
    solution: IlpSolution,
    model: IlpModel,
    clusters: list[MentionCluster],
    topic: Topic,
) -> SummaryDraft:
    assignment = solution.assignment
    cluster_by_id = {c.id: c for c in clusters}
    sentences = {s.id: s for s in topic.news_sentences()}
    doc_meta = {d.id: d for d in topic.documents}

    selected = [i for i in model.alpha_of
                if assignment[model.alpha_of[i]] >= 0.5]
    by_sentence: dict[str, list[int]] = {}
    for i in selected:
        by_sentence.setdefault(model.pool[i].phrase.sentence_id, []).append(i)

    def sort_key(sid: str):
        sent = sentences[sid]
        return (doc_meta[sent.doc_id].timestamp, sent.doc_id, sent.position_in_doc)

    out_sentences: list[AssembledSentence] = []
    accounted = 0.0
    for sid in sorted(by_sentence, key=sort_key):
        sent = sentences[sid]
        leaves = sent.leaves()
        members = by_sentence[sid]
        nps = sorted((i for i in members if model.pool[i].phrase.kind == "NP"),
                     key=lambda i: model.pool[i].phrase.tokens)
        vps = sorted((i for i in members if model.pool[i].phrase.kind == "VP"),
                     key=lambda i: model.pool[i].phrase.tokens)
        tokens: list[str] = []
        phrase_ids: list[str] = []
        applied: list[AppliedRewrite] = []
        for i in nps + vps:
            phrase = model.pool[i].phrase
            ptoks, prew = _render_phrase(i, phrase, leaves, assignment, model,
                                         cluster_by_id)
            tokens.extend(ptoks)
            phrase_ids.append(phrase.id)
            applied.extend(prew)
        text = detokenize(tokens)
        if text:
            text = text[0].upper() + text[1:]
            if not text.endswith((".", "!", "?")):
                text += "."
        out_sentences.append(
            AssembledSentence(sentence_id=sid, doc_id=sent.doc_id,
                              timestamp=doc_meta[sent.doc_id].timestamp,
                              text=text, phrase_ids=phrase_ids, rewrites=applied)
        )

    # Word accounting must reproduce the optimizer's length row exactly.
    length_row = next(c for c in model.constraints if c.label == "length")
    accounted = sum(coeff * assignment[v] for v, coeff in length_row.coeffs.items())
    total = sum(word_count(s.text) for s in out_sentences)
    if total != round(accounted):
        raise AssemblyError(
            f"emitted word count {total} != optimizer accounting {accounted}")
    return SummaryDraft(sentences=out_sentences, total_words=total)


def _render_phrase(pool_index, phrase, leaves, assignment, model, cluster_by_id):
    lo, hi = phrase.tokens
    replacements: list[tuple[int, int, str, str, str]] = []
    for (pi, cid), rw in model.rewrites.items():
        if pi != pool_index:
            continue
        cluster = cluster_by_id[cid]
        gf, gs = model.gamma_vars[(pi, cid)]
        if assignment[gf] >= 0.5:
            replacements.append((rw.first_mention.start, rw.first_mention.end,
                                 cluster.full_form.surface, cid, "full"))
        elif assignment[gs] >= 0.5:
            replacements.append((rw.first_mention.start, rw.first_mention.end,
                                 cluster.short_form.surface, cid, "short"))
        for m in rw.later_mentions:
            replacements.append((m.start, m.end, cluster.short_form.surface,
                                 cid, "short"))

    tokens = list(leaves[lo:hi])
    applied: list[AppliedRewrite] = []
    last_start = len(leaves) + 1
    for start, end, surface, cid, form in sorted(replacements, reverse=True):
        if end > last_start:
            raise AssemblyError(
                f"overlapping mention spans in phrase {phrase.id}")
        last_start = start
        tokens[start - lo: end - lo] = [surface]
        applied.append(AppliedRewrite(cluster_id=cid, sentence_id=phrase.sentence_id,
                                      start=start, end=end, replacement=surface,
                                      form=form))
    while tokens and not _is_word(tokens[0]):
        tokens.pop(0)
    while tokens and not _is_word(tokens[-1]):
        tokens.pop()
    applied.reverse()
    return tokens, applied
