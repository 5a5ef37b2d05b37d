"""Independent oracles and seeded instance generators used by the tests.

Everything here is deliberately written from the rule definitions rather
than from the package's solver/encoder paths: a dense restatement of the
reconstruction loss, a specialized self-reconstruction coordinate-descent
solver, a first-principles brute-force optimum for selection instances,
and the random instance generators the property/acceptance tests share.
"""

import numpy as np

from compsum.corpus import Sentence, Token
from compsum.mentions import Mention, MentionCluster
from compsum.salience import SaliencedPhrase, SimilarityMatrix
from compsum.treebank import Phrase
from compsum.wordlists import PRONOUNS

# ---------------------------------------------------------------------------
# Expressiveness oracles
# ---------------------------------------------------------------------------

def dense_loss(X, Z, rho, tau, lam, A):
    """Direct restatement of the reconstruction loss, no shared code."""
    m = X.shape[0]
    xbar = np.zeros(X.shape[1])
    for j in range(m):
        xbar = xbar + A[j] * X[j]
    total = 0.0
    for i in range(m):
        diff = X[i] - xbar
        total += rho[i] * float(diff @ diff)
    total /= 2.0 * m
    n = Z.shape[0]
    if n > 0:
        comment = 0.0
        for i in range(n):
            diff = Z[i] - xbar
            comment += tau[i] * float(diff @ diff)
        total += comment / (2.0 * n)
    return total + lam * float(np.abs(A).sum())


def self_reconstruction_solve(X, lam, eta, max_iter, eps):
    """Specialized greedy CD for the no-comment, unit-weight problem.

    Mirrors the published update rule for the plain self-reconstruction
    objective J = (1/2m) sum_i ||x_i - sum_j a_j x_j||^2 + lam ||A||_1
    with a_j >= 0, computing everything densely per iteration.
    """
    m = X.shape[0]
    A = np.zeros(m)
    trace = [dense_loss(X, np.zeros((0, X.shape[1])), np.ones(m), np.zeros(0),
                        lam, A)]
    for _ in range(max_iter):
        xbar = A @ X
        grads = np.array([
            -float(((X - xbar) @ X[k]) @ np.ones(m)) / m for k in range(m)
        ])
        k = int(np.argmax(np.abs(grads)))
        kappa = float(X[k] @ X[k]) / m * m / m  # ||x_k||^2 * (mean weight 1)
        kappa = float(X[k] @ X[k])
        if kappa > 0:
            step = eta / kappa
            v = A[k] - step * grads[k]
            thr = lam * step
            new = np.sign(v) * max(abs(v) - thr, 0.0)
            A[k] = max(0.0, new)
        trace.append(dense_loss(X, np.zeros((0, X.shape[1])), np.ones(m),
                                np.zeros(0), lam, A))
        if abs(trace[-1] - trace[-2]) <= eps:
            break
    return A, np.array(trace)


def random_sc_instance(seed, d=50, m=20, n=10):
    """Seeded random topic-like instance: sparse count vectors, position
    weights for rho, true mean-cosine weights for tau."""
    rng = np.random.default_rng(seed)
    X = rng.integers(1, 4, size=(m, d)) * (rng.random((m, d)) < 0.15)
    X = X.astype(np.float64)
    for i in range(m):
        if not X[i].any():
            X[i, rng.integers(0, d)] = 1.0
    Z = rng.integers(1, 4, size=(n, d)) * (rng.random((n, d)) < 0.15)
    Z = Z.astype(np.float64)
    for i in range(n):
        if not Z[i].any():
            Z[i, rng.integers(0, d)] = 1.0
    rho = 0.8 ** np.minimum(rng.integers(0, 7, size=m), 4)
    norms_x = np.linalg.norm(X, axis=1)
    tau = np.empty(n)
    for i in range(n):
        cos = (X @ Z[i]) / np.maximum(norms_x * np.linalg.norm(Z[i]), 1e-300)
        tau[i] = float(cos.mean())
    return X, Z, rho.astype(np.float64), tau


# ---------------------------------------------------------------------------
# Selection (ILP) instance generator and brute-force oracle
# ---------------------------------------------------------------------------

class SelectionInstance:
    def __init__(self, pool, sim, clusters, sentences, length_budget,
                 short_sentence_threshold):
        self.pool = pool
        self.sim = sim
        self.clusters = clusters
        self.sentences = sentences
        self.length_budget = length_budget
        self.short_sentence_threshold = short_sentence_threshold


def _make_sentence(sid, words):
    tokens = [Token(surface=w, stem=w.lower(), is_stopword=False) for w in words]
    return Sentence(id=sid, origin="news", raw_text=" ".join(words),
                    tokens=tokens, doc_id="d", paragraph_index=0,
                    position_in_doc=0, parse=None)


def random_selection_instance(seed, max_phrases=15) -> SelectionInstance:
    """Random pool of NP/VP phrases with nesting, similarity pairs,
    entity clusters and a binding budget."""
    rng = np.random.default_rng(seed)
    n_sentences = int(rng.integers(2, 5))
    pool = []
    sentences = {}
    pronoun_list = sorted(PRONOUNS)
    for s in range(n_sentences):
        if len(pool) >= max_phrases - 1:
            break
        sid = f"s{s}"
        n_words = int(rng.integers(6, 16))
        words = [f"w{rng.integers(0, 30)}" for _ in range(n_words)]
        if rng.random() < 0.25:  # occasional pronoun NP candidate
            words[0] = pronoun_list[int(rng.integers(0, len(pronoun_list)))]
        sentences[sid] = _make_sentence(sid, words)
        n_np = int(rng.integers(1, 3))
        n_vp = int(rng.integers(1, 3))
        budget_left = max_phrases - len(pool)
        n_np = min(n_np, max(1, budget_left - 1))
        n_vp = min(n_vp, max(1, budget_left - n_np))
        split = int(rng.integers(1, max(2, n_words - 1)))
        for k in range(n_np):
            span = (0, max(1, split - k))
            pool.append(Phrase(id=f"{sid}/p{len(pool)}", sentence_id=sid,
                               kind="NP", node=None, tokens=span,
                               word_count=span[1] - span[0]))
        vp_parent = None
        for k in range(n_vp):
            if vp_parent is None:
                span = (split, n_words)
            else:
                lo = split + 1 + k
                span = (min(lo, n_words - 1), n_words)
            ph = Phrase(id=f"{sid}/p{len(pool)}", sentence_id=sid, kind="VP",
                        node=None, tokens=span, word_count=span[1] - span[0])
            if vp_parent is not None:
                ph.ancestors.add(vp_parent.id)
            pool.append(ph)
            if vp_parent is None:
                vp_parent = ph
    pool = pool[:max_phrases]

    salienced = []
    for ph in pool:
        a = float(rng.uniform(0.05, 1.0))
        salienced.append(SaliencedPhrase(phrase=ph, salience=float(rng.uniform(0, 0.5)),
                                         expressiveness=a, terms=frozenset(),
                                         unigrams=frozenset()))
    pairs = {}
    for i in range(len(salienced)):
        for j in range(i + 1, len(salienced)):
            if salienced[i].phrase.sentence_id == salienced[j].phrase.sentence_id:
                continue
            if rng.random() < 0.25:
                pairs[(i, j)] = float(rng.uniform(0.1, 1.0))
    sim = SimilarityMatrix(pairs=pairs)

    clusters = []
    n_clusters = int(rng.integers(0, 3))
    for c in range(n_clusters):
        members = [i for i in range(len(salienced)) if rng.random() < 0.4]
        mentions = []
        for i in members:
            ph = salienced[i].phrase
            lo, hi = ph.tokens
            if hi - lo < 1:
                continue
            start = int(rng.integers(lo, hi))
            mentions.append(Mention(surface=sentences[ph.sentence_id].tokens[start].surface,
                                    sentence_id=ph.sentence_id, start=start,
                                    end=start + 1, is_pronoun=False,
                                    entity_type="person"))
        if not mentions:
            continue
        full = Mention(surface=" ".join(f"F{c}x{k}" for k in range(int(rng.integers(1, 4)))),
                       sentence_id=mentions[0].sentence_id, start=mentions[0].start,
                       end=mentions[0].end, is_pronoun=False, entity_type="person")
        short = Mention(surface=f"S{c}", sentence_id=mentions[0].sentence_id,
                        start=mentions[0].start, end=mentions[0].end,
                        is_pronoun=False, entity_type="person")
        clusters.append(MentionCluster(id=f"m{c}", entity_type="person",
                                       mentions=mentions, full_form=full,
                                       short_form=short))
    total_words = sum(sp.phrase.word_count for sp in salienced)
    budget = int(rng.integers(2, max(3, total_words // 2)))
    return SelectionInstance(pool=salienced, sim=sim, clusters=clusters,
                             sentences=sentences, length_budget=budget,
                             short_sentence_threshold=int(rng.integers(0, 9)))


def brute_force_best(inst: SelectionInstance) -> float:
    """First-principles optimum: enumerate phrase subsets, apply the
    selection rules directly, complete rewriting choices cluster by
    cluster with the length-minimizing full-form carrier."""
    pool = inst.pool
    P = len(pool)
    rows = np.arange(1 << P, dtype=np.int64)
    sel = ((rows[:, None] >> np.arange(P)) & 1).astype(bool)

    feasible = np.ones(len(rows), dtype=bool)

    def sentence_words(sid):
        sent = inst.sentences[sid]
        return sum(1 for t in sent.leaves() if any(ch.isalnum() for ch in t))

    # Pinned: VPs of short sentences, single-pronoun NPs.
    pinned = []
    for i, sp in enumerate(pool):
        sid = sp.phrase.sentence_id
        if sp.phrase.kind == "VP" and sentence_words(sid) < inst.short_sentence_threshold:
            pinned.append(i)
        elif sp.phrase.kind == "NP":
            lo, hi = sp.phrase.tokens
            toks = [t for t in inst.sentences[sid].leaves()[lo:hi]
                    if any(ch.isalnum() for ch in t)]
            if len(toks) == 1 and toks[0].lower() in PRONOUNS:
                pinned.append(i)
    if pinned:
        feasible &= ~sel[:, pinned].any(axis=1)

    # A contributing sentence needs at least one NP and one VP.
    by_sentence = {}
    for i, sp in enumerate(pool):
        by_sentence.setdefault(sp.phrase.sentence_id, []).append(i)
    for sid, members in by_sentence.items():
        nps = [i for i in members if pool[i].phrase.kind == "NP"]
        vps = [i for i in members if pool[i].phrase.kind == "VP"]
        any_sel = sel[:, members].any(axis=1)
        ok = (sel[:, nps].any(axis=1) if nps else False) & \
             (sel[:, vps].any(axis=1) if vps else False)
        feasible &= ~any_sel | ok

    # Never a phrase together with a phrase it dominates.
    by_id = {sp.phrase.id: i for i, sp in enumerate(pool)}
    for j, sp in enumerate(pool):
        for anc in sp.phrase.ancestors:
            k = by_id.get(anc)
            if k is not None:
                feasible &= ~(sel[:, k] & sel[:, j])

    # Length with rewriting: later in-phrase mentions always go short;
    # each cluster with a selection pays sum(short deltas) plus the best
    # available full-minus-short correction on one selected carrier.
    def span_words(sid, start, end):
        return sum(1 for t in inst.sentences[sid].leaves()[start:end]
                   if any(ch.isalnum() for ch in t))

    w_eff = np.array([float(sp.phrase.word_count) for sp in pool])
    cluster_terms = []
    for cluster in inst.clusters:
        wc_full = len(cluster.full_form.surface.split())
        wc_short = len(cluster.short_form.surface.split())
        members = []
        d_full = []
        d_short = []
        for i, sp in enumerate(pool):
            lo, hi = sp.phrase.tokens
            inside = sorted(
                (m for m in cluster.mentions
                 if m.sentence_id == sp.phrase.sentence_id
                 and lo <= m.start and m.end <= hi and not m.is_pronoun),
                key=lambda m: (m.start, m.end))
            if not inside:
                continue
            first, later = inside[0], inside[1:]
            orig = span_words(sp.phrase.sentence_id, first.start, first.end)
            members.append(i)
            d_full.append(wc_full - orig)
            d_short.append(wc_short - orig)
            w_eff[i] += sum(
                wc_short - span_words(sp.phrase.sentence_id, m.start, m.end)
                for m in later)
        if members:
            cluster_terms.append((np.array(members),
                                  np.array(d_full, dtype=np.float64),
                                  np.array(d_short, dtype=np.float64)))

    length = sel @ w_eff
    for members, d_full, d_short in cluster_terms:
        sub = sel[:, members]
        any_m = sub.any(axis=1)
        base = sub @ d_short
        correction = np.where(sub, (d_full - d_short)[None, :], np.inf).min(axis=1)
        length = length + np.where(any_m, base + correction, 0.0)
    feasible &= length <= inst.length_budget + 1e-9

    saliences = np.array([sp.salience for sp in pool])
    objective = sel @ saliences
    for (i, j), r in inst.sim.pairs.items():
        objective = objective - (sel[:, i] & sel[:, j]) * (
            (saliences[i] + saliences[j]) * r)
    objective[~feasible] = -np.inf
    return float(objective.max())
