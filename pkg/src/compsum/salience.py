"""Phrase salience and pairwise phrase similarity.

A phrase's salience is the share of whole-topic term mass its dictionary
terms cover, scaled by the expressiveness of its sentence.  Similarity is
the Jaccard index over stemmed non-stopword unigram sets; only pairs from
different sentences are kept (same-tree overlap is handled by the
ancestor constraints instead).
"""

from dataclasses import dataclass

from .corpus import Dictionary, Sentence, Token, term_occurrences
from .textproc import is_stopword, porter_stem, tokenize
from .treebank import Phrase


@dataclass
class SaliencedPhrase:
    phrase: Phrase
    salience: float
    expressiveness: float
    terms: frozenset[str]  # distinct dictionary terms inside the phrase
    unigrams: frozenset[str]  # stemmed non-stopword unigrams, for Jaccard


@dataclass
class SimilarityMatrix:
    pairs: dict[tuple[int, int], float]

    def get(self, i: int, j: int) -> float:
        if i == j:
            return 1.0
        if i > j:
            i, j = j, i
        return self.pairs.get((i, j), 0.0)


def topic_term_frequencies(sentences: list[Sentence], dictionary: Dictionary) -> dict[str, int]:
    """Occurrence counts of dictionary terms over the whole topic."""
    tf: dict[str, int] = {}
    for sent in sentences:
        for term in term_occurrences(sent.tokens):
            if term in dictionary.index:
                tf[term] = tf.get(term, 0) + 1
    return tf


def _phrase_tokens(phrase: Phrase, leaves: list[str]) -> list[Token]:
    toks = []
    for surface in leaves[phrase.tokens[0]: phrase.tokens[1]]:
        for word in tokenize(surface):
            toks.append(Token(surface=word, stem=porter_stem(word),
                              is_stopword=is_stopword(word)))
    return toks


def phrase_terms(phrase: Phrase, leaves: list[str], dictionary: Dictionary) -> frozenset[str]:
    """Distinct dictionary terms (unigrams and bigrams) inside a phrase."""
    occurrences = term_occurrences(_phrase_tokens(phrase, leaves))
    return frozenset(t for t in occurrences if t in dictionary.index)


def phrase_unigrams(phrase: Phrase, leaves: list[str]) -> frozenset[str]:
    return frozenset(t.stem for t in _phrase_tokens(phrase, leaves) if not t.is_stopword)


def phrase_salience(terms: frozenset[str], expressiveness: float,
                    topic_tf: dict[str, int]) -> float:
    """Topic term-mass share of the phrase, scaled by expressiveness."""
    total = sum(topic_tf.values())
    if total == 0 or not terms:
        return 0.0
    covered = sum(topic_tf.get(t, 0) for t in terms)
    return (covered / total) * expressiveness


def jaccard(unigrams_a: frozenset[str], unigrams_b: frozenset[str]) -> float:
    if not unigrams_a and not unigrams_b:
        return 0.0
    union = len(unigrams_a | unigrams_b)
    if union == 0:
        return 0.0
    return len(unigrams_a & unigrams_b) / union


def build_candidate_pool(
    sentences: list[Sentence],
    phrases_by_sentence: dict[str, list[Phrase]],
    expressiveness_by_sentence: dict[str, float],
    dictionary: Dictionary,
    topic_tf: dict[str, int],
) -> list[SaliencedPhrase]:
    """Salience-scored candidate phrases, pruned.

    Sentences with zero expressiveness contribute nothing, and a sentence
    must have produced at least one NP and one VP to be compressible.
    """
    pool: list[SaliencedPhrase] = []
    for sent in sentences:
        a = expressiveness_by_sentence.get(sent.id, 0.0)
        if a <= 0.0:
            continue
        phrases = phrases_by_sentence.get(sent.id, [])
        kinds = {p.kind for p in phrases}
        if "NP" not in kinds or "VP" not in kinds:
            continue
        leaves = sent.leaves()
        for phrase in phrases:
            terms = phrase_terms(phrase, leaves, dictionary)
            pool.append(
                SaliencedPhrase(
                    phrase=phrase,
                    salience=phrase_salience(terms, a, topic_tf),
                    expressiveness=a,
                    terms=terms,
                    unigrams=phrase_unigrams(phrase, leaves),
                )
            )
    return pool


def build_similarity(pool: list[SaliencedPhrase]) -> SimilarityMatrix:
    """Nonzero Jaccard entries for phrase pairs from different sentences."""
    pairs: dict[tuple[int, int], float] = {}
    for i in range(len(pool)):
        pi = pool[i]
        for j in range(i + 1, len(pool)):
            pj = pool[j]
            if pi.phrase.sentence_id == pj.phrase.sentence_id:
                continue
            r = jaccard(pi.unigrams, pj.unigrams)
            if r > 0.0:
                pairs[(i, j)] = r
    return SimilarityMatrix(pairs=pairs)
