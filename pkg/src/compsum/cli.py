"""Command line interface.

Subcommands:
    summarize   run the full pipeline on one or more topic bundles
    baseline    random or lead baseline summaries
    rouge       score a summary file against a directory of references
    dump-trace  run the pipeline and print the JSON trace to stdout

Exit codes: 0 success, 1 input error, 2 solver stopped at the time limit
with an optimality gap.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import corpus, ilp, mentions, pipeline, rouge, treebank
from .assembler import AssemblyError

INPUT_ERRORS = (
    corpus.CorpusError,
    treebank.TreebankError,
    mentions.MentionError,
    rouge.RougeError,
    AssemblyError,
    OSError,
    ValueError,
)


def _add_pipeline_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("pipeline parameters")
    group.add_argument("--sparsity", type=float, default=0.005,
                       help="L1 penalty of the expressiveness solver")
    group.add_argument("--eta", type=float, default=1.0,
                       help="step scale of the coordinate updates")
    group.add_argument("--max-iter", type=int, default=300)
    group.add_argument("--epsilon", type=float, default=1e-4,
                       help="loss-change convergence threshold")
    group.add_argument("--position-base", type=float, default=0.8,
                       help="paragraph position weight base")
    group.add_argument("--paragraph-cap", type=int, default=4,
                       help="paragraph index where the position weight flattens")
    group.add_argument("--length-budget", type=int, default=None,
                       help="summary word limit (default: the bundle's value; "
                            "use 250 for long-form evaluation sets)")
    group.add_argument("--short-sentence-threshold", type=int, default=10,
                       help="sentences shorter than this contribute no VPs")
    group.add_argument("--no-comments", action="store_true",
                       help="ignore reader comments (plain MDS mode)")
    group.add_argument("--time-limit", type=float, default=30.0,
                       help="ILP solver time limit in seconds")
    group.add_argument("--rouge-no-stemming", action="store_true")
    group.add_argument("--rouge-remove-stopwords", action="store_true")
    group.add_argument("--loss-trace", type=Path, default=None, metavar="FILE",
                       help="write one loss value per solver iteration")
    group.add_argument("--dump-lp", type=Path, default=None, metavar="FILE",
                       help="write the selection model in LP text format")


def _config_from_args(args) -> pipeline.PipelineConfig:
    return pipeline.PipelineConfig(
        lam=args.sparsity,
        eta=args.eta,
        max_iter=args.max_iter,
        epsilon=args.epsilon,
        position_base=args.position_base,
        paragraph_cap=args.paragraph_cap,
        length_budget=args.length_budget,
        short_sentence_threshold=args.short_sentence_threshold,
        comments_enabled=not args.no_comments,
        time_limit=args.time_limit,
        rouge_stemming=not args.rouge_no_stemming,
        rouge_remove_stopwords=args.rouge_remove_stopwords,
    )


def _run_one_bundle(bundle: str, out: str | None, config: pipeline.PipelineConfig,
                    loss_trace: str | None, dump_lp: str | None) -> dict:
    bundle_path = Path(bundle)
    topic = corpus.load_topic(bundle_path)
    result = pipeline.run_summarize(topic, config)
    out_dir = Path(out) if out else bundle_path / "output"
    trace = pipeline.write_outputs(result, bundle_path, out_dir, config)
    if loss_trace:
        Path(loss_trace).write_text(
            "".join(f"{v:.12g}\n" for v in result.expressiveness.loss_trace),
            encoding="utf-8")
    if dump_lp and result.model is not None:
        Path(dump_lp).write_text(ilp.dump_lp(result.model), encoding="utf-8")
    return trace


def _cmd_summarize(args) -> int:
    config = _config_from_args(args)
    loss_trace = str(args.loss_trace) if args.loss_trace else None
    dump_lp = str(args.dump_lp) if args.dump_lp else None
    jobs = []
    for bundle in args.bundle:
        out = args.out
        if out is not None and len(args.bundle) > 1:
            out = str(Path(out) / Path(bundle).name)
        jobs.append((bundle, out, config, loss_trace, dump_lp))

    worst = 0
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            traces = list(pool.map(_run_one_bundle_star, jobs))
    else:
        traces = [_run_one_bundle(*job) for job in jobs]
    for bundle, trace in zip(args.bundle, traces):
        print(f"{bundle}: {trace['summary_words']} words, "
              f"objective {trace['objective']:.6g}, {trace['status']}")
        if trace["status"] == "feasible_with_gap":
            worst = 2
    return worst


def _run_one_bundle_star(job):
    return _run_one_bundle(*job)


def _cmd_baseline(args) -> int:
    topic = corpus.load_topic(Path(args.bundle))
    budget = args.length_budget if args.length_budget is not None \
        else topic.length_budget_words
    if args.kind == "lead":
        text = pipeline.lead_baseline(topic, budget)
    else:
        text = pipeline.random_baseline(topic, budget, args.seed)
    out_dir = Path(args.out) if args.out else Path(args.bundle) / "output"
    out_dir.mkdir(parents=True, exist_ok=True)
    name = f"baseline_{args.kind}.txt" if args.kind == "lead" \
        else f"baseline_{args.kind}_{args.seed}.txt"
    (out_dir / name).write_text(text + ("\n" if text else ""), encoding="utf-8")
    n_sentences = len(text.splitlines()) if text else 0
    print(f"{args.bundle}: {args.kind} baseline, {n_sentences} sentences "
          f"-> {out_dir / name}")
    return 0


def _cmd_rouge(args) -> int:
    system = Path(args.sys).read_text(encoding="utf-8")
    refs_dir = Path(args.refs)
    references = [p.read_text(encoding="utf-8")
                  for p in sorted(refs_dir.glob("*.txt"))]
    config = rouge.RougeConfig(stemming=not args.rouge_no_stemming,
                               remove_stopwords=args.rouge_remove_stopwords)
    scores = rouge.score(system, references, config)
    payload = {
        metric: {"recall": s.recall, "precision": s.precision,
                 "f_measure": s.f_measure}
        for metric, s in scores.items()
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_dump_trace(args) -> int:
    config = _config_from_args(args)
    topic = corpus.load_topic(Path(args.bundle))
    result = pipeline.run_summarize(topic, config)
    trace = pipeline.result_trace(result)
    if args.loss_trace:
        trace["loss_trace"] = [float(v) for v in result.expressiveness.loss_trace]
    print(json.dumps(trace, indent=2, sort_keys=True))
    return 2 if result.solution.status == "feasible_with_gap" else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compsum",
        description="Reader-aware compressive news summarization.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("summarize", help="summarize topic bundles")
    p_sum.add_argument("bundle", nargs="+", help="topic bundle directory")
    p_sum.add_argument("--out", default=None,
                       help="output directory (default: <bundle>/output)")
    p_sum.add_argument("--jobs", type=int, default=1,
                       help="process this many bundles in parallel")
    _add_pipeline_flags(p_sum)
    p_sum.set_defaults(func=_cmd_summarize)

    p_base = sub.add_parser("baseline", help="baseline summarizers")
    p_base.add_argument("kind", choices=("random", "lead"))
    p_base.add_argument("bundle")
    p_base.add_argument("--seed", type=int, default=0)
    p_base.add_argument("--length-budget", type=int, default=None)
    p_base.add_argument("--out", default=None)
    p_base.set_defaults(func=_cmd_baseline)

    p_rouge = sub.add_parser("rouge", help="score a summary against references")
    p_rouge.add_argument("--sys", required=True, help="system summary file")
    p_rouge.add_argument("--refs", required=True,
                         help="directory of reference .txt files")
    p_rouge.add_argument("--rouge-no-stemming", action="store_true")
    p_rouge.add_argument("--rouge-remove-stopwords", action="store_true")
    p_rouge.set_defaults(func=_cmd_rouge)

    p_dump = sub.add_parser("dump-trace",
                            help="print the pipeline trace as JSON")
    p_dump.add_argument("bundle")
    _add_pipeline_flags(p_dump)
    p_dump.set_defaults(func=_cmd_dump_trace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
