"""Bracketed constituency trees and noun/verb phrase extraction.

Phrase candidates are the compression units of the summarizer: direct NP
and VP children of the sentence node, one extra level of parallel sub-NPs
or sub-VPs, and subject clauses.  Extracted phrases may overlap; overlap
inside a tree is recorded through ancestor sets and resolved later by the
selection constraints.
"""

from dataclasses import dataclass, field

from .textproc import detokenize
from .wordlists import PRONOUNS

# Verbs that head auxiliary/modal/linking constructions.  A sub-VP right
# after one of these is not a standalone fact and is never extracted.
LINKING_STEMS = ("be", "am", "is", "are", "was", "were", "been", "being",
                 "have", "has", "had", "having", "do", "does", "did", "doing")


class TreebankError(Exception):
    pass


class UnbalancedBrackets(TreebankError):
    def __init__(self, position: int, message: str = "unbalanced brackets"):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EmptyTree(TreebankError):
    pass


class NoSentenceNode(TreebankError):
    pass


@dataclass
class ParseTree:
    label: str
    children: list["ParseTree"] = field(default_factory=list)
    leaf_token: str | None = None
    span: tuple[int, int] = (0, 0)
    function_tag: str | None = None

    @property
    def is_leaf(self) -> bool:
        return self.leaf_token is not None

    def leaves(self) -> list[str]:
        if self.is_leaf:
            return [self.leaf_token]
        out: list[str] = []
        for child in self.children:
            out.extend(child.leaves())
        return out

    def preorder(self):
        yield self
        for child in self.children:
            yield from child.preorder()


@dataclass
class Phrase:
    id: str
    sentence_id: str
    kind: str  # "NP" | "VP"
    node: ParseTree
    tokens: tuple[int, int]
    word_count: int
    ancestors: set[str] = field(default_factory=set)

    def surface(self, leaves: list[str]) -> str:
        return detokenize(leaves[self.tokens[0]: self.tokens[1]])


def _split_label(raw: str) -> tuple[str, str | None]:
    # -LRB- / -NONE- style labels are kept verbatim; otherwise functional
    # tag suffixes after "-" are stripped and recorded.
    if raw.startswith("-"):
        return raw, None
    if "-" in raw:
        head, _, tag = raw.partition("-")
        return head, tag
    return raw, None


def parse_ptb(text: str) -> ParseTree:
    """Parse one bracketed Penn-Treebank expression into a ParseTree."""
    stripped = text.strip()
    if not stripped:
        raise EmptyTree("empty parse string")

    # Tokenize into "(", ")" and atoms.
    atoms: list[tuple[str, int]] = []
    i = 0
    while i < len(stripped):
        ch = stripped[i]
        if ch in "()":
            atoms.append((ch, i))
            i += 1
        elif ch.isspace():
            i += 1
        else:
            j = i
            while j < len(stripped) and stripped[j] not in "()" and not stripped[j].isspace():
                j += 1
            atoms.append((stripped[i:j], i))
            i = j

    pos = 0

    def parse_node() -> ParseTree:
        nonlocal pos
        tok, at = atoms[pos]
        if tok != "(":
            raise UnbalancedBrackets(at, "expected '('")
        pos += 1
        if pos >= len(atoms):
            raise UnbalancedBrackets(len(stripped), "unexpected end of input")
        label_tok, label_at = atoms[pos]
        if label_tok in "()":
            raise UnbalancedBrackets(label_at, "missing node label")
        pos += 1
        label, tag = _split_label(label_tok)
        node = ParseTree(label=label, function_tag=tag)
        while True:
            if pos >= len(atoms):
                raise UnbalancedBrackets(len(stripped), "unexpected end of input")
            tok, at = atoms[pos]
            if tok == ")":
                pos += 1
                break
            if tok == "(":
                node.children.append(parse_node())
            else:
                # Preterminal: exactly one leaf token under the label.
                if node.children:
                    raise UnbalancedBrackets(at, "mixed leaf and constituent content")
                node.leaf_token = tok
                pos += 1
                tok, at = atoms[pos] if pos < len(atoms) else (None, len(stripped))
                if tok != ")":
                    raise UnbalancedBrackets(at, "expected ')' after leaf")
                pos += 1
                break
        if not node.is_leaf and not node.children:
            raise UnbalancedBrackets(at, "empty constituent")
        return node

    root = parse_node()
    if pos != len(atoms):
        raise UnbalancedBrackets(atoms[pos][1], "trailing input")
    _assign_spans(root, 0)
    return root


def _assign_spans(node: ParseTree, start: int) -> int:
    if node.is_leaf:
        node.span = (start, start + 1)
        return start + 1
    cur = start
    for child in node.children:
        cur = _assign_spans(child, cur)
    node.span = (start, cur)
    return cur


def _find_sentence_node(tree: ParseTree) -> ParseTree | None:
    for node in tree.preorder():
        if node.label == "S" and not node.is_leaf:
            return node
    return None


def _is_punct_label(node: ParseTree) -> bool:
    return node.is_leaf and not any(c.isalnum() for c in node.leaf_token)


def _parallel_children(node: ParseTree, kind: str) -> list[ParseTree]:
    """Same-kind children of a node, ignoring punctuation and CC leaves."""
    return [c for c in node.children if not c.is_leaf and c.label == kind]


def _follows_linking_verb(parent: ParseTree, index: int) -> bool:
    for sib in reversed(parent.children[:index]):
        if _is_punct_label(sib):
            continue
        if sib.is_leaf:
            if sib.label == "MD":
                return True
            if sib.label.startswith("VB") and sib.leaf_token.lower() in LINKING_STEMS:
                return True
        return False
    return False


def extract_phrases(tree: ParseTree, sentence_id: str) -> list[Phrase]:
    """Extract NP/VP compression candidates from a sentence tree.

    Rules: direct NP/VP children of the S node; parallel sub-phrases one
    level below a coordinated NP/VP (never deeper, and never right after a
    modal/linking/auxiliary verb); subject clauses (SBAR or S before the
    first VP) count as NPs.
    """
    s_node = _find_sentence_node(tree)
    if s_node is None:
        raise NoSentenceNode(f"no S node in parse of sentence {sentence_id}")

    leaves = tree.leaves()
    picked: list[tuple[str, ParseTree, tuple[int, ...]]] = []

    def add(kind: str, node: ParseTree, path: tuple[int, ...]):
        picked.append((kind, node, path))

    first_vp_pos = next(
        (i for i, c in enumerate(s_node.children) if not c.is_leaf and c.label == "VP"),
        len(s_node.children),
    )
    np_position_seen = False
    for i, child in enumerate(s_node.children):
        if child.is_leaf:
            continue
        path = (i,)
        if child.label == "NP":
            add("NP", child, path)
            np_position_seen = True
        elif child.label == "VP":
            add("VP", child, path)
        elif (child.label in ("SBAR", "S") and i < first_vp_pos
              and not np_position_seen):
            # Clause in subject position counts as an NP.
            add("NP", child, path)
            np_position_seen = True
        else:
            continue
        if child.label in ("NP", "VP") and len(_parallel_children(child, child.label)) >= 2:
            for j, sub in enumerate(child.children):
                if sub.is_leaf or sub.label != child.label:
                    continue
                if _follows_linking_verb(child, j):
                    continue
                add(child.label, sub, path + (j,))

    phrases: list[Phrase] = []
    for n, (kind, node, path) in enumerate(picked):
        start, end = node.span
        wc = sum(1 for tok in leaves[start:end] if any(c.isalnum() for c in tok))
        phrases.append(
            Phrase(
                id=f"{sentence_id}/p{n}",
                sentence_id=sentence_id,
                kind=kind,
                node=node,
                tokens=(start, end),
                word_count=wc,
            )
        )
    # Ancestor sets from extraction paths (k dominates j iff k's path is a
    # proper prefix of j's).
    paths = {ph.id: path for ph, (_, _, path) in zip(phrases, picked)}
    for ph_j in phrases:
        pj = paths[ph_j.id]
        for ph_k in phrases:
            pk = paths[ph_k.id]
            if len(pk) < len(pj) and pj[: len(pk)] == pk:
                ph_j.ancestors.add(ph_k.id)
    return phrases


def is_single_pronoun(phrase: Phrase, leaves: list[str]) -> bool:
    toks = [t for t in leaves[phrase.tokens[0]: phrase.tokens[1]]
            if any(c.isalnum() for c in t)]
    return len(toks) == 1 and toks[0].lower() in PRONOUNS
