import json
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data" / "topics"

TOPIC_IDS = [
    "t1-kerrville-dam",
    "t2-velora-recall",
    "t3-harbor-bridge",
    "t4-orchard-wildfire",
    "t5-brask-glacier",
]


@pytest.fixture(scope="session")
def topic_dirs():
    return [DATA_DIR / tid for tid in TOPIC_IDS]


@pytest.fixture(scope="session")
def dam_topic_dir():
    return DATA_DIR / "t1-kerrville-dam"


def write_bundle(root: Path, *, topic=None, docs=None, parses=None,
                 comments=None, mentions=None, gold=None) -> Path:
    """Write a topic bundle from dict/str specs; returns the bundle path."""
    root.mkdir(parents=True, exist_ok=True)
    if topic is not None:
        (root / "topic.json").write_text(json.dumps(topic), encoding="utf-8")
    if docs:
        (root / "docs").mkdir(exist_ok=True)
        for doc_id, text in docs.items():
            (root / "docs" / f"{doc_id}.txt").write_text(text, encoding="utf-8")
    if parses:
        (root / "parses").mkdir(exist_ok=True)
        for doc_id, text in parses.items():
            (root / "parses" / f"{doc_id}.ptb").write_text(text, encoding="utf-8")
    if comments is not None:
        (root / "comments.txt").write_text(comments, encoding="utf-8")
    if mentions is not None:
        (root / "mentions.json").write_text(json.dumps(mentions), encoding="utf-8")
    if gold:
        (root / "gold").mkdir(exist_ok=True)
        for name, text in gold.items():
            (root / "gold" / name).write_text(text, encoding="utf-8")
    return root


@pytest.fixture
def mini_bundle(tmp_path):
    """2 docs x 2 paragraphs x 2 sentences + 3 comments."""
    trees_a = "\n".join([
        "(S (NP (DT The) (NN cat)) (VP (VBD sat) (PP (IN on) (NP (DT the) (NN mat)))) (. .))",
        "(S (NP (DT The) (NN dog)) (VP (VBD barked) (ADVP (RB loudly))) (. .))",
        "(S (NP (DT The) (NN bird)) (VP (VBD sang) (NP (DT a) (NN song))) (. .))",
        "(S (NP (DT The) (NN fish)) (VP (VBD swam) (ADVP (RB away))) (. .))",
    ])
    trees_b = "\n".join([
        "(S (NP (DT A) (NN cat)) (VP (VBD chased) (NP (DT the) (NN dog))) (. .))",
        "(S (NP (DT The) (NN mouse)) (VP (VBD hid) (PP (IN under) (NP (DT the) (NN mat)))) (. .))",
        "(S (NP (DT The) (NN owl)) (VP (VBD watched) (NP (DT the) (NN mouse))) (. .))",
        "(S (NP (DT A) (NN fox)) (VP (VBD slept) (PP (IN in) (NP (DT the) (NN den)))) (. .))",
    ])
    return write_bundle(
        tmp_path / "mini",
        topic={"id": "mini", "length_budget_words": 100,
               "documents": [{"id": "a", "timestamp": 10},
                             {"id": "b", "timestamp": 20}]},
        docs={
            "a": "The cat sat on the mat.\nThe dog barked loudly.\n\n"
                 "The bird sang a song.\nThe fish swam away.\n",
            "b": "A cat chased the dog.\nThe mouse hid under the mat.\n\n"
                 "The owl watched the mouse.\nA fox slept in the den.\n",
        },
        parses={"a": trees_a + "\n", "b": trees_b + "\n"},
        comments="The cat is lovely.\nPoor mouse!\nThat dog barked all night.\n",
    )
