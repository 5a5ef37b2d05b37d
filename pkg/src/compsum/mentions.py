"""Entity mention clusters for summary rewriting.

Clusters normally arrive with the bundle (``mentions.json``, one cluster
per document per entity); without that file, per-document clusters are
derived by exact-matching capitalized token sequences against the topic's
entity lexicon.  Clusters are then merged across documents whenever they
share a non-pronoun surface (case-insensitive) of the same entity type,
via union-find so document order never matters.

Each merged cluster selects a full form (the mention whose stems carry
the most within-cluster frequency mass) and a short form (the best such
mention among the shortest non-pronoun ones).
"""

from dataclasses import dataclass, field

from .corpus import Sentence, Topic
from .textproc import porter_stem, tokenize, word_count
from .wordlists import PRONOUNS

ENTITY_TYPES = ("person", "location", "organization")


class MentionError(Exception):
    pass


class MalformedMentions(MentionError):
    pass


class SpanOutOfRange(MentionError):
    pass


class NoNonPronounMention(MentionError):
    pass


@dataclass(frozen=True)
class Mention:
    surface: str
    sentence_id: str
    start: int
    end: int
    is_pronoun: bool
    entity_type: str

    def stems(self) -> list[str]:
        return [porter_stem(w) for w in tokenize(self.surface)]

    @property
    def n_words(self) -> int:
        return word_count(self.surface)


@dataclass
class MentionCluster:
    id: str
    entity_type: str
    mentions: list[Mention]
    full_form: Mention | None = None
    short_form: Mention | None = None


def _sentence_order(topic: Topic) -> dict[str, tuple[int, int]]:
    order: dict[str, tuple[int, int]] = {}
    for d_idx, doc in enumerate(topic.documents):
        for sent in doc.sentences():
            order[sent.id] = (d_idx, sent.position_in_doc)
    for c_idx, sent in enumerate(topic.comment_sentences):
        order[sent.id] = (len(topic.documents), c_idx)
    return order


def _mention_sort_key(order: dict[str, tuple[int, int]]):
    def key(m: Mention):
        return (*order.get(m.sentence_id, (1 << 30, 1 << 30)), m.start, m.end)

    return key


def load_or_derive_clusters(topic: Topic) -> list[MentionCluster]:
    """Read bundle clusters (or derive them), merge across documents."""
    if topic.mentions_data is not None:
        raw = _clusters_from_json(topic)
    else:
        raw = _clusters_from_lexicon(topic)
    merged = merge_clusters(raw)
    order = _sentence_order(topic)
    out: list[MentionCluster] = []
    for cluster in merged:
        cluster.mentions.sort(key=_mention_sort_key(order))
        try:
            cluster.full_form, cluster.short_form = select_forms(cluster)
        except NoNonPronounMention:
            continue  # pronoun-only entities are never rewritten
        out.append(cluster)
    return out


def _clusters_from_json(topic: Topic) -> list[MentionCluster]:
    sentences = {s.id: s for s in topic.news_sentences()}
    sentences.update({s.id: s for s in topic.comment_sentences})
    if not isinstance(topic.mentions_data, list):
        raise MalformedMentions("mentions.json must hold a list of clusters")
    clusters: list[MentionCluster] = []
    for c_idx, entry in enumerate(topic.mentions_data):
        if not isinstance(entry, dict) or "entity_type" not in entry or "mentions" not in entry:
            raise MalformedMentions(
                f"cluster #{c_idx}: need 'entity_type' and 'mentions'")
        etype = str(entry["entity_type"]).lower()
        if etype not in ENTITY_TYPES:
            raise MalformedMentions(
                f"cluster #{c_idx}: unknown entity_type '{entry['entity_type']}'")
        mentions: list[Mention] = []
        for m_idx, m in enumerate(entry["mentions"]):
            for key in ("sentence_id", "start", "end", "surface"):
                if key not in m:
                    raise MalformedMentions(
                        f"cluster #{c_idx} mention #{m_idx}: missing '{key}'")
            sent = sentences.get(m["sentence_id"])
            if sent is None:
                raise MalformedMentions(
                    f"cluster #{c_idx} mention #{m_idx}: unknown sentence "
                    f"'{m['sentence_id']}'")
            start, end = int(m["start"]), int(m["end"])
            n_tokens = len(sent.leaves())
            if not 0 <= start < end <= n_tokens:
                raise SpanOutOfRange(
                    f"cluster #{c_idx} mention #{m_idx}: span [{start}, {end}) "
                    f"outside sentence '{sent.id}' ({n_tokens} tokens)")
            mentions.append(
                Mention(surface=str(m["surface"]), sentence_id=sent.id,
                        start=start, end=end,
                        is_pronoun=bool(m.get("is_pronoun", False)),
                        entity_type=etype)
            )
        if not mentions:
            raise MalformedMentions(f"cluster #{c_idx}: empty mention list")
        clusters.append(MentionCluster(id=f"m{c_idx}", entity_type=etype,
                                       mentions=mentions))
    return clusters


def _clusters_from_lexicon(topic: Topic) -> list[MentionCluster]:
    """Per-document clusters from exact lexicon matches on leaf tokens."""
    lexicon = {
        tuple(tokenize(surface)): etype
        for surface, etype in topic.entity_lexicon.items()
        if etype in ENTITY_TYPES
    }
    if not lexicon:
        return []
    max_len = max(len(k) for k in lexicon)
    clusters: list[MentionCluster] = []
    for doc in topic.documents:
        by_surface: dict[tuple[str, ...], list[Mention]] = {}
        for sent in doc.sentences():
            leaves = sent.leaves()
            i = 0
            while i < len(leaves):
                match = None
                for width in range(min(max_len, len(leaves) - i), 0, -1):
                    window = tuple(leaves[i: i + width])
                    if window in lexicon and window[0][:1].isupper():
                        match = (window, width)
                        break
                if match is None:
                    i += 1
                    continue
                window, width = match
                by_surface.setdefault(window, []).append(
                    Mention(surface=" ".join(window), sentence_id=sent.id,
                            start=i, end=i + width, is_pronoun=False,
                            entity_type=lexicon[window])
                )
                i += width
        for window, ms in sorted(by_surface.items()):
            clusters.append(
                MentionCluster(id=f"{doc.id}:{'_'.join(window)}",
                               entity_type=ms[0].entity_type, mentions=ms)
            )
    return clusters


def merge_clusters(clusters: list[MentionCluster]) -> list[MentionCluster]:
    """Union clusters sharing a non-pronoun surface of the same type."""
    parent = list(range(len(clusters)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    by_key: dict[tuple[str, str], int] = {}
    for idx, cluster in enumerate(clusters):
        for mention in cluster.mentions:
            if mention.is_pronoun:
                continue
            key = (cluster.entity_type, mention.surface.lower())
            if key in by_key:
                union(by_key[key], idx)
            else:
                by_key[key] = idx

    grouped: dict[int, list[MentionCluster]] = {}
    for idx, cluster in enumerate(clusters):
        grouped.setdefault(find(idx), []).append(cluster)
    merged = []
    for root in sorted(grouped):
        members = grouped[root]
        mentions = [m for c in members for m in c.mentions]
        merged.append(
            MentionCluster(id=members[0].id, entity_type=members[0].entity_type,
                           mentions=mentions)
        )
    return merged


def _tf_prime(cluster: MentionCluster) -> dict[str, int]:
    counts: dict[str, int] = {}
    for mention in cluster.mentions:
        for stem in mention.stems():
            counts[stem] = counts.get(stem, 0) + 1
    return counts


def _looks_pronoun(mention: Mention) -> bool:
    if mention.is_pronoun:
        return True
    words = tokenize(mention.surface)
    return len(words) == 1 and words[0].lower() in PRONOUNS


def select_forms(cluster: MentionCluster) -> tuple[Mention, Mention]:
    """Pick the full-form and short-form mentions of a cluster.

    Both maximize within-cluster stem-frequency mass; the short form is
    restricted to the shortest non-pronoun mentions.  Ties go to the
    earliest mention (mentions must already be in document order).
    """
    if not cluster.mentions:
        raise MentionError(f"cluster '{cluster.id}' has no mentions")
    tf = _tf_prime(cluster)
    candidates = [m for m in cluster.mentions if not _looks_pronoun(m)]
    if not candidates:
        raise NoNonPronounMention(
            f"cluster '{cluster.id}' has only pronoun mentions")

    def mass(mention: Mention) -> int:
        return sum(tf.get(s, 0) for s in mention.stems())

    full = max(candidates, key=mass)  # max() keeps the earliest on ties
    min_words = min(m.n_words for m in candidates)
    shortest = [m for m in candidates if m.n_words == min_words]
    short = max(shortest, key=mass)
    return full, short
