"""Topic bundles: loading, normalization, dictionary and term vectors.

A topic bundle is a directory:

    topic.json      id, length_budget_words, document list with timestamps,
                    optional entity_lexicon {surface: entity_type}
    docs/<id>.txt   paragraphs separated by blank lines, one sentence per line
    parses/<id>.ptb one bracketed constituency tree per news sentence
    comments.txt    one comment sentence per line (optional)
    mentions.json   optional per-document mention clusters
    gold/*.txt      optional reference summaries

The dictionary is built from news text only: unigrams over non-stopword
stems plus bigrams over adjacent non-stopword stems.  Comment-only terms
therefore never index a vector column.
"""

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from . import treebank
from .textproc import is_stopword, porter_stem, tokenize


class CorpusError(Exception):
    pass


class MalformedBundle(CorpusError):
    pass


class MissingParse(CorpusError):
    pass


class DuplicateId(CorpusError):
    pass


class EmptyDictionary(CorpusError):
    pass


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    is_stopword: bool


@dataclass
class Sentence:
    id: str
    origin: str  # "news" | "comment"
    raw_text: str
    tokens: list[Token]
    doc_id: str | None = None
    paragraph_index: int = 0
    position_in_doc: int = 0
    parse: treebank.ParseTree | None = None

    def leaves(self) -> list[str]:
        if self.parse is not None:
            return self.parse.leaves()
        return [t.surface for t in self.tokens]


@dataclass
class Document:
    id: str
    timestamp: int
    paragraphs: list[list[Sentence]]

    def sentences(self):
        for para in self.paragraphs:
            yield from para


@dataclass
class Dictionary:
    terms: list[str]
    index: dict[str, int] = field(init=False)

    def __post_init__(self):
        self.index = {t: i for i, t in enumerate(self.terms)}

    def __len__(self) -> int:
        return len(self.terms)


@dataclass
class TermVector:
    entries: dict[int, float]
    norm2: float = field(init=False)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v != 0}
        self.norm2 = math.sqrt(sum(v * v for v in self.entries.values()))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def dot(self, other: "TermVector") -> float:
        a, b = self.entries, other.entries
        if len(b) < len(a):
            a, b = b, a
        return sum(v * b[k] for k, v in a.items() if k in b)

    def cosine(self, other: "TermVector") -> float:
        if self.norm2 == 0 or other.norm2 == 0:
            return 0.0
        return self.dot(other) / (self.norm2 * other.norm2)


@dataclass
class Topic:
    id: str
    documents: list[Document]
    comment_sentences: list[Sentence]
    dictionary: Dictionary | None
    length_budget_words: int
    entity_lexicon: dict[str, str] = field(default_factory=dict)
    mentions_data: list | None = None

    def news_sentences(self) -> list[Sentence]:
        return [s for doc in self.documents for s in doc.sentences()]


@dataclass
class CorpusConfig:
    length_budget_override: int | None = None
    require_parses: bool = True


def _tokenize_sentence(text: str) -> list[Token]:
    toks = []
    for surface in tokenize(text):
        toks.append(
            Token(surface=surface, stem=porter_stem(surface),
                  is_stopword=is_stopword(surface))
        )
    return toks


def stem_sequence(tokens: list[Token]) -> list[str]:
    """Stems of the non-stopword tokens, in order."""
    return [t.stem for t in tokens if not t.is_stopword]


def term_occurrences(tokens: list[Token]) -> list[str]:
    """Unigram and bigram term occurrences (with multiplicity)."""
    stems = stem_sequence(tokens)
    terms = list(stems)
    terms.extend(f"{a}_{b}" for a, b in zip(stems, stems[1:]))
    return terms


def load_topic(path, config: CorpusConfig | None = None) -> Topic:
    """Load and validate a topic bundle; builds the dictionary."""
    config = config or CorpusConfig()
    root = Path(path)
    meta_path = root / "topic.json"
    if not meta_path.is_file():
        raise MalformedBundle(f"{meta_path}: missing topic.json")
    try:
        meta = json.loads(meta_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedBundle(f"{meta_path}:{exc.lineno}: {exc.msg}") from exc

    for key in ("id", "length_budget_words", "documents"):
        if key not in meta:
            raise MalformedBundle(f"{meta_path}: missing key '{key}'")
    budget = meta["length_budget_words"]
    if not isinstance(budget, int) or budget < 0:
        raise MalformedBundle(f"{meta_path}: length_budget_words must be a non-negative integer")
    if config.length_budget_override is not None:
        budget = config.length_budget_override
    if not meta["documents"]:
        raise MalformedBundle(f"{meta_path}: documents list is empty")

    seen_doc_ids: set[str] = set()
    documents: list[Document] = []
    for entry in meta["documents"]:
        if not isinstance(entry, dict) or "id" not in entry or "timestamp" not in entry:
            raise MalformedBundle(f"{meta_path}: document entries need 'id' and 'timestamp'")
        doc_id = str(entry["id"])
        if doc_id in seen_doc_ids:
            raise DuplicateId(f"duplicate document id '{doc_id}'")
        seen_doc_ids.add(doc_id)
        documents.append(_load_document(root, doc_id, int(entry["timestamp"]), config))

    sentence_ids: set[str] = set()
    for doc in documents:
        for sent in doc.sentences():
            if sent.id in sentence_ids:
                raise DuplicateId(f"duplicate sentence id '{sent.id}'")
            sentence_ids.add(sent.id)

    comments: list[Sentence] = []
    comments_path = root / "comments.txt"
    if comments_path.is_file():
        for n, line in enumerate(comments_path.read_text(encoding="utf-8").splitlines()):
            text = line.strip()
            if not text:
                continue
            toks = _tokenize_sentence(text)
            if not toks:
                continue  # punctuation-only comment carries no signal
            sid = f"c{len(comments)}"
            if sid in sentence_ids:
                raise DuplicateId(f"duplicate sentence id '{sid}'")
            sentence_ids.add(sid)
            comments.append(Sentence(id=sid, origin="comment", raw_text=text, tokens=toks))

    lexicon = {}
    for surface, etype in (meta.get("entity_lexicon") or {}).items():
        lexicon[str(surface)] = str(etype).lower()

    mentions_data = None
    mentions_path = root / "mentions.json"
    if mentions_path.is_file():
        try:
            mentions_data = json.loads(mentions_path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise MalformedBundle(f"{mentions_path}:{exc.lineno}: {exc.msg}") from exc

    topic = Topic(
        id=str(meta["id"]),
        documents=documents,
        comment_sentences=comments,
        dictionary=None,
        length_budget_words=budget,
        entity_lexicon=lexicon,
        mentions_data=mentions_data,
    )
    topic.dictionary = build_dictionary(topic)
    return topic


def _load_document(root: Path, doc_id: str, timestamp: int, config: CorpusConfig) -> Document:
    text_path = root / "docs" / f"{doc_id}.txt"
    if not text_path.is_file():
        raise MalformedBundle(f"{text_path}: missing document text")
    paragraphs_raw: list[list[tuple[int, str]]] = [[]]
    for n, line in enumerate(text_path.read_text(encoding="utf-8").splitlines(), start=1):
        if line.strip():
            paragraphs_raw[-1].append((n, line.strip()))
        elif paragraphs_raw[-1]:
            paragraphs_raw.append([])
    if paragraphs_raw and not paragraphs_raw[-1]:
        paragraphs_raw.pop()
    if not paragraphs_raw:
        raise MalformedBundle(f"{text_path}: document has no sentences")

    parse_lines: list[str] = []
    parses_path = root / "parses" / f"{doc_id}.ptb"
    if parses_path.is_file():
        parse_lines = [ln for ln in parses_path.read_text(encoding="utf-8").splitlines()
                       if ln.strip()]

    paragraphs: list[list[Sentence]] = []
    position = 0
    for p_index, para in enumerate(paragraphs_raw):
        sentences: list[Sentence] = []
        for line_no, text in para:
            sid = f"{doc_id}.s{position}"
            toks = _tokenize_sentence(text)
            if not toks:
                raise MalformedBundle(f"{text_path}:{line_no}: sentence has no word tokens")
            parse = None
            if config.require_parses:
                if position >= len(parse_lines):
                    raise MissingParse(f"news sentence '{sid}' has no parse tree")
                try:
                    parse = treebank.parse_ptb(parse_lines[position])
                except treebank.TreebankError as exc:
                    raise MalformedBundle(f"{parses_path}: sentence '{sid}': {exc}") from exc
            sentences.append(
                Sentence(id=sid, origin="news", raw_text=text, tokens=toks,
                         doc_id=doc_id, paragraph_index=p_index,
                         position_in_doc=position, parse=parse)
            )
            position += 1
        paragraphs.append(sentences)
    if config.require_parses and len(parse_lines) > position:
        raise MalformedBundle(
            f"{parses_path}: {len(parse_lines) - position} extra parse line(s)")
    return Document(id=doc_id, timestamp=timestamp, paragraphs=paragraphs)


def build_dictionary(topic: Topic) -> Dictionary:
    """Dictionary over news-derived unigrams and bigrams, sorted."""
    terms: set[str] = set()
    for sent in topic.news_sentences():
        terms.update(term_occurrences(sent.tokens))
    if not terms:
        raise EmptyDictionary(f"topic '{topic.id}' has no non-stopword news terms")
    return Dictionary(terms=sorted(terms))


def vectorize(sentence: Sentence, dictionary: Dictionary) -> TermVector:
    """Term-frequency vector over the dictionary; OOV terms are dropped."""
    counts: dict[int, float] = {}
    for term in term_occurrences(sentence.tokens):
        col = dictionary.index.get(term)
        if col is not None:
            counts[col] = counts.get(col, 0.0) + 1.0
    return TermVector(entries=counts)
