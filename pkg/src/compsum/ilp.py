"""The unified phrase-selection / rewriting integer program.

Binary variables: alpha_i (select phrase i), alpha_ij (both phrases of a
stored similarity pair selected), beta_k (sentence k contributes), and
gamma_f/gamma_s per (phrase, entity cluster) pair (rewrite the first
in-phrase mention with the full or the short form).  The objective is the
summed salience of selected phrases minus a similarity penalty on selected
pairs.  Constraints: compressive generation (a contributing sentence needs
at least one NP and one VP), rewriting consistency (exactly one full form
per selected cluster), no phrase together with a phrase it dominates,
pair-variable linking, pinned-to-zero selection rules (VPs of short
sentences, single-pronoun NPs), and the rewriting-aware length budget.
"""

from dataclasses import dataclass, field

import numpy as np

from .corpus import Sentence
from .mentions import MentionCluster
from .salience import SaliencedPhrase, SimilarityMatrix
from .textproc import word_count
from .treebank import is_single_pronoun


class IlpError(Exception):
    pass


class EmptyPool(IlpError):
    pass


@dataclass
class OptConfig:
    length_budget: int = 100
    short_sentence_threshold: int = 10
    time_limit: float = 30.0


@dataclass
class Variable:
    name: str
    kind: str  # alpha | alpha_pair | beta | gamma_f | gamma_s
    fixed_zero: bool = False


@dataclass
class Constraint:
    coeffs: dict[int, float]
    sense: str  # "<=" | "=="
    rhs: float
    label: str


@dataclass
class PhraseRewrite:
    """Rewriting bookkeeping for one (pool phrase, cluster) pair."""
    pool_index: int
    cluster_id: str
    first_mention: object  # Mention
    later_mentions: list
    delta_full: int
    delta_short: int
    later_delta: int


@dataclass
class IlpModel:
    variables: list[Variable]
    objective: np.ndarray
    constraints: list[Constraint]
    length_budget: int
    alpha_of: dict[int, int]                     # pool index -> var
    beta_of: dict[str, int]                      # sentence id -> var
    pair_var: dict[tuple[int, int], int]         # pool pair -> var
    gamma_vars: dict[tuple[int, str], tuple[int, int]]  # (pool, cluster) -> (f, s)
    rewrites: dict[tuple[int, str], PhraseRewrite]
    pool: list[SaliencedPhrase] = field(repr=False, default_factory=list)

    @property
    def n_vars(self) -> int:
        return len(self.variables)

    def arrays(self):
        """Dense (A, b, senses) view of the constraint system."""
        A = np.zeros((len(self.constraints), self.n_vars))
        b = np.zeros(len(self.constraints))
        eq = np.zeros(len(self.constraints), dtype=np.int64)
        for r, con in enumerate(self.constraints):
            for v, coeff in con.coeffs.items():
                A[r, v] = coeff
            b[r] = con.rhs
            eq[r] = 1 if con.sense == "==" else 0
        return A, b, eq


@dataclass
class IlpSolution:
    assignment: np.ndarray
    objective_value: float
    status: str  # "optimal" | "feasible_with_gap" | "infeasible"
    nodes_explored: int
    gap: float = 0.0


def mentions_in_phrase(phrase, cluster: MentionCluster):
    """Non-pronoun mentions of the cluster lying inside the phrase span."""
    lo, hi = phrase.tokens
    found = [
        m for m in cluster.mentions
        if m.sentence_id == phrase.sentence_id
        and lo <= m.start and m.end <= hi
        and not m.is_pronoun
    ]
    found.sort(key=lambda m: (m.start, m.end))
    return found


def build_model(
    pool: list[SaliencedPhrase],
    sim: SimilarityMatrix,
    clusters: list[MentionCluster],
    config: OptConfig,
    sentences: dict[str, Sentence],
) -> IlpModel:
    if not pool:
        raise EmptyPool("no candidate phrases")

    variables: list[Variable] = []
    constraints: list[Constraint] = []

    def new_var(name: str, kind: str) -> int:
        variables.append(Variable(name=name, kind=kind))
        return len(variables) - 1

    alpha_of = {i: new_var(f"a[{sp.phrase.id}]", "alpha") for i, sp in enumerate(pool)}

    pair_var: dict[tuple[int, int], int] = {}
    for (i, j) in sorted(sim.pairs):
        pair_var[(i, j)] = new_var(f"p[{pool[i].phrase.id}|{pool[j].phrase.id}]",
                                   "alpha_pair")

    sentence_order: list[str] = []
    for sp in pool:
        if sp.phrase.sentence_id not in sentence_order:
            sentence_order.append(sp.phrase.sentence_id)
    beta_of = {sid: new_var(f"b[{sid}]", "beta") for sid in sentence_order}

    # Rewriting variables: one gamma pair per (phrase, cluster) whose first
    # in-phrase mention is undecided; later in-phrase mentions are always
    # rewritten short, so their word delta rides on alpha.
    gamma_vars: dict[tuple[int, str], tuple[int, int]] = {}
    rewrites: dict[tuple[int, str], PhraseRewrite] = {}
    cluster_phrases: dict[str, list[int]] = {c.id: [] for c in clusters}
    leaves_of = {sid: sent.leaves() for sid, sent in sentences.items()}

    def span_words(sid: str, start: int, end: int) -> int:
        return sum(1 for t in leaves_of[sid][start:end] if any(c.isalnum() for c in t))

    for cluster in clusters:
        if cluster.full_form is None or cluster.short_form is None:
            continue
        wc_full = word_count(cluster.full_form.surface)
        wc_short = word_count(cluster.short_form.surface)
        for i, sp in enumerate(pool):
            found = mentions_in_phrase(sp.phrase, cluster)
            if not found:
                continue
            first, later = found[0], found[1:]
            sid = sp.phrase.sentence_id
            gf = new_var(f"gf[{sp.phrase.id}|{cluster.id}]", "gamma_f")
            gs = new_var(f"gs[{sp.phrase.id}|{cluster.id}]", "gamma_s")
            gamma_vars[(i, cluster.id)] = (gf, gs)
            rewrites[(i, cluster.id)] = PhraseRewrite(
                pool_index=i,
                cluster_id=cluster.id,
                first_mention=first,
                later_mentions=later,
                delta_full=wc_full - span_words(sid, first.start, first.end),
                delta_short=wc_short - span_words(sid, first.start, first.end),
                later_delta=sum(
                    wc_short - span_words(sid, m.start, m.end) for m in later
                ),
            )
            cluster_phrases[cluster.id].append(i)

    objective = np.zeros(len(variables))
    for i, sp in enumerate(pool):
        objective[alpha_of[i]] = sp.salience
    for (i, j), v in pair_var.items():
        objective[v] = -(pool[i].salience + pool[j].salience) * sim.pairs[(i, j)]

    # Compressive generation.
    for sid in sentence_order:
        members = [i for i, sp in enumerate(pool) if sp.phrase.sentence_id == sid]
        bvar = beta_of[sid]
        for kind in ("NP", "VP"):
            of_kind = [i for i in members if pool[i].phrase.kind == kind]
            for i in of_kind:
                constraints.append(Constraint(
                    coeffs={alpha_of[i]: 1.0, bvar: -1.0}, sense="<=", rhs=0.0,
                    label=f"sel[{pool[i].phrase.id}]->b[{sid}]"))
            constraints.append(Constraint(
                coeffs={bvar: 1.0, **{alpha_of[i]: -1.0 for i in of_kind}},
                sense="<=", rhs=0.0, label=f"b[{sid}]->{kind}"))

    # Entity rewriting.
    for cluster in clusters:
        members = cluster_phrases.get(cluster.id, [])
        if not members:
            continue
        gf_all = {gamma_vars[(i, cluster.id)][0]: 1.0 for i in members}
        for i in members:
            gf, gs = gamma_vars[(i, cluster.id)]
            constraints.append(Constraint(
                coeffs={gf: 1.0, gs: 1.0, alpha_of[i]: -1.0}, sense="==", rhs=0.0,
                label=f"rw[{pool[i].phrase.id}|{cluster.id}]"))
        constraints.append(Constraint(
            coeffs=dict(gf_all), sense="<=", rhs=1.0,
            label=f"onefull[{cluster.id}]"))
        for i in members:
            # A selected member forces one full form somewhere in the cluster.
            coeffs = {v: -coeff for v, coeff in gf_all.items()}
            coeffs[alpha_of[i]] = coeffs.get(alpha_of[i], 0.0) + 1.0
            constraints.append(Constraint(
                coeffs=coeffs, sense="<=", rhs=0.0,
                label=f"needfull[{cluster.id}|{pool[i].phrase.id}]",
            ))

    # Not i-within-i.
    id_to_index = {sp.phrase.id: i for i, sp in enumerate(pool)}
    for j, sp in enumerate(pool):
        for anc_id in sorted(sp.phrase.ancestors):
            k = id_to_index.get(anc_id)
            if k is None:
                continue
            constraints.append(Constraint(
                coeffs={alpha_of[k]: 1.0, alpha_of[j]: 1.0}, sense="<=", rhs=1.0,
                label=f"nest[{anc_id}|{sp.phrase.id}]"))

    # Pair linking.
    for (i, j), v in pair_var.items():
        ai, aj = alpha_of[i], alpha_of[j]
        lab = variables[v].name
        constraints.append(Constraint(coeffs={v: 1.0, ai: -1.0}, sense="<=",
                                      rhs=0.0, label=f"{lab}<=i"))
        constraints.append(Constraint(coeffs={v: 1.0, aj: -1.0}, sense="<=",
                                      rhs=0.0, label=f"{lab}<=j"))
        constraints.append(Constraint(coeffs={ai: 1.0, aj: 1.0, v: -1.0},
                                      sense="<=", rhs=1.0, label=f"{lab}>=i+j-1"))

    # Pinned selections: VPs of short sentences, single-pronoun NPs.
    for i, sp in enumerate(pool):
        sent = sentences[sp.phrase.sentence_id]
        leaves = sent.leaves()
        sent_words = sum(1 for t in leaves if any(c.isalnum() for c in t))
        pinned = False
        if sp.phrase.kind == "VP" and sent_words < config.short_sentence_threshold:
            pinned = True
            label = f"short[{sp.phrase.id}]"
        elif sp.phrase.kind == "NP" and is_single_pronoun(sp.phrase, leaves):
            pinned = True
            label = f"pron[{sp.phrase.id}]"
        if pinned:
            variables[alpha_of[i]].fixed_zero = True
            constraints.append(Constraint(
                coeffs={alpha_of[i]: 1.0}, sense="<=", rhs=0.0, label=label))

    # Length budget with rewriting deltas.
    length_coeffs: dict[int, float] = {}
    for i, sp in enumerate(pool):
        words = sp.phrase.word_count
        words += sum(rw.later_delta for (pi, _), rw in rewrites.items() if pi == i)
        length_coeffs[alpha_of[i]] = float(words)
    for (i, cid), (gf, gs) in gamma_vars.items():
        rw = rewrites[(i, cid)]
        if rw.delta_full:
            length_coeffs[gf] = float(rw.delta_full)
        if rw.delta_short:
            length_coeffs[gs] = float(rw.delta_short)
    constraints.append(Constraint(
        coeffs=length_coeffs, sense="<=", rhs=float(config.length_budget),
        label="length"))

    return IlpModel(
        variables=variables,
        objective=objective,
        constraints=constraints,
        length_budget=config.length_budget,
        alpha_of=alpha_of,
        beta_of=beta_of,
        pair_var=pair_var,
        gamma_vars=gamma_vars,
        rewrites=rewrites,
        pool=pool,
    )


def check_assignment(model: IlpModel, assignment: np.ndarray, tol: float = 1e-6):
    """Independent constraint evaluation; returns a list of violations."""
    x = np.asarray(assignment, dtype=np.float64)
    problems = []
    if x.shape != (model.n_vars,):
        return [f"assignment has shape {x.shape}, expected ({model.n_vars},)"]
    for v, val in enumerate(x):
        if abs(val) > tol and abs(val - 1.0) > tol:
            problems.append(f"{model.variables[v].name} = {val} is not binary")
    for con in model.constraints:
        lhs = sum(coeff * x[v] for v, coeff in con.coeffs.items())
        if con.sense == "<=" and lhs > con.rhs + tol:
            problems.append(f"{con.label}: {lhs} > {con.rhs}")
        elif con.sense == "==" and abs(lhs - con.rhs) > tol:
            problems.append(f"{con.label}: {lhs} != {con.rhs}")
    return problems


def dump_lp(model: IlpModel) -> str:
    """Human-readable LP rendering of the model."""
    lines = ["maximize"]
    terms = [
        f"{'+' if coeff >= 0 else '-'} {abs(coeff):.6g} {model.variables[v].name}"
        for v, coeff in enumerate(model.objective)
        if coeff != 0.0
    ]
    lines.append("  " + (" ".join(terms) if terms else "0"))
    lines.append("subject to")
    for con in model.constraints:
        parts = []
        for v in sorted(con.coeffs):
            coeff = con.coeffs[v]
            parts.append(f"{'+' if coeff >= 0 else '-'} {abs(coeff):.6g} "
                         f"{model.variables[v].name}")
        op = "<=" if con.sense == "<=" else "="
        lines.append(f"  {con.label}: {' '.join(parts)} {op} {con.rhs:.6g}")
    lines.append("binaries")
    lines.append("  " + " ".join(v.name for v in model.variables))
    return "\n".join(lines) + "\n"
