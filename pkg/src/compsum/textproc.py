"""Tokenization, stemming and word counting shared across the pipeline.

Tokens are maximal runs of word characters; punctuation is dropped.  Stems
come from an in-repo implementation of the classic Porter algorithm so the
pipeline stays deterministic and dependency-free (no corpus downloads).
"""

import re

from .wordlists import STOPWORDS

_TOKEN_RE = re.compile(r"\w+")

# Tokens that attach to the preceding word when rebuilding surface text.
_NO_SPACE_BEFORE = {",", ".", "!", "?", ";", ":", "%", ")", "''", "'s", "n't"}
_NO_SPACE_AFTER = {"(", "``", "$"}


def tokenize(text: str) -> list[str]:
    """Split text into word tokens, discarding punctuation."""
    return _TOKEN_RE.findall(text)


def word_count(text: str) -> int:
    """Count whitespace tokens that contain at least one word character.

    This is the single length-accounting rule used by the length budget,
    the baselines and the summary assembler.
    """
    return sum(1 for chunk in text.split() if _TOKEN_RE.search(chunk))


def detokenize(tokens: list[str]) -> str:
    """Join tokens with spaces, re-attaching punctuation marks."""
    parts: list[str] = []
    for tok in tokens:
        if parts and tok not in _NO_SPACE_BEFORE and parts[-1] not in _NO_SPACE_AFTER:
            parts.append(" ")
        parts.append(tok)
    return "".join(parts)


def is_stopword(surface: str) -> bool:
    return surface.lower() in STOPWORDS


# ---------------------------------------------------------------------------
# Porter stemmer (classic 1980 rule set, longest-suffix-first semantics).
# ---------------------------------------------------------------------------

_VOWELS = "aeiou"


def _is_consonant(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_consonant(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of vowel→consonant transitions ([C](VC)^m[V])."""
    pattern: list[str] = []
    for i in range(len(stem)):
        flag = "c" if _is_consonant(stem, i) else "v"
        if not pattern or pattern[-1] != flag:
            pattern.append(flag)
    return "".join(pattern).count("vc")


def _contains_vowel(stem: str) -> bool:
    return any(not _is_consonant(stem, i) for i in range(len(stem)))


def _ends_double_consonant(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_consonant(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    if len(word) < 3:
        return False
    return (
        _is_consonant(word, len(word) - 3)
        and not _is_consonant(word, len(word) - 2)
        and _is_consonant(word, len(word) - 1)
        and word[-1] not in "wxy"
    )


_STEP2 = sorted(
    [
        ("ational", "ate"), ("tional", "tion"), ("enci", "ence"),
        ("anci", "ance"), ("izer", "ize"), ("abli", "able"), ("alli", "al"),
        ("entli", "ent"), ("eli", "e"), ("ousli", "ous"), ("ization", "ize"),
        ("ation", "ate"), ("ator", "ate"), ("alism", "al"),
        ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous"),
        ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ],
    key=lambda r: -len(r[0]),
)

_STEP3 = sorted(
    [
        ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
        ("ical", "ic"), ("ful", ""), ("ness", ""),
    ],
    key=lambda r: -len(r[0]),
)

_STEP4 = sorted(
    [
        "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
        "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
    ],
    key=len,
    reverse=True,
)


def _step1a(w: str) -> str:
    if w.endswith("sses"):
        return w[:-2]
    if w.endswith("ies"):
        return w[:-2]
    if w.endswith("ss"):
        return w
    if w.endswith("s"):
        return w[:-1]
    return w


def _step1b(w: str) -> str:
    if w.endswith("eed"):
        return w[:-1] if _measure(w[:-3]) > 0 else w
    stripped = False
    if w.endswith("ed") and _contains_vowel(w[:-2]):
        w, stripped = w[:-2], True
    elif w.endswith("ing") and _contains_vowel(w[:-3]):
        w, stripped = w[:-3], True
    if stripped:
        if w.endswith(("at", "bl", "iz")):
            return w + "e"
        if _ends_double_consonant(w) and w[-1] not in "lsz":
            return w[:-1]
        if _measure(w) == 1 and _ends_cvc(w):
            return w + "e"
    return w


def _step1c(w: str) -> str:
    if w.endswith("y") and _contains_vowel(w[:-1]):
        return w[:-1] + "i"
    return w


def _apply_table(w: str, rules, min_measure: int) -> str:
    # Longest matching suffix decides; a failed condition ends the step.
    for suffix, replacement in rules:
        if w.endswith(suffix):
            stem = w[: -len(suffix)]
            if _measure(stem) > min_measure:
                return stem + replacement
            return w
    return w


def _step4(w: str) -> str:
    for suffix in _STEP4:
        if w.endswith(suffix):
            stem = w[: -len(suffix)]
            if _measure(stem) <= 1:
                return w
            if suffix == "ion" and (not stem or stem[-1] not in "st"):
                return w
            return stem
    return w


def _step5(w: str) -> str:
    if w.endswith("e"):
        stem = w[:-1]
        m = _measure(stem)
        if m > 1 or (m == 1 and not _ends_cvc(stem)):
            w = stem
    if _measure(w) > 1 and _ends_double_consonant(w) and w.endswith("l"):
        w = w[:-1]
    return w


def porter_stem(word: str) -> str:
    """Stem a single word with the classic Porter algorithm."""
    w = word.lower()
    if len(w) <= 2:
        return w
    w = _step1a(w)
    w = _step1b(w)
    w = _step1c(w)
    w = _apply_table(w, _STEP2, 0)
    w = _apply_table(w, _STEP3, 0)
    w = _step4(w)
    w = _step5(w)
    return w
