"""Main CLI entry point for the senLDA pipeline."""
import functools
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import click
import numpy as np
from jsonschema import ValidationError as SchemaValidationError

from .classify import (
    FeatureMatrix,
    align_labels,
    concat_features,
    evaluate_pipeline,
    read_feature_csv,
    read_label_file,
    train_test_split,
    write_feature_csv,
    write_label_file,
)
from .config import settings
from .corpus import (
    Corpus,
    Document,
    PreprocessConfig,
    Vocabulary,
    build_corpus,
    corpus_statistics,
    decode_document,
    encode_corpus_with_vocabulary,
    parse_document_file,
    parse_stopword_file,
)
from .errors import InputFormatError, ModelFormatError, SenLDAError
from .evaluation import (
    DiagnosticsSeries,
    perplexity,
    perplexity_ratio,
    read_diagnostics_csv,
    select_topic_count,
    training_perplexity,
    write_diagnostics_csv,
    write_ratio_csv,
)
from .orchestrator import BenchRunner
from .sampler import (
    GeneratorConfig,
    Granularity,
    Hyperparams,
    SamplerState,
    block_topics,
    document_seed,
    generate_corpus,
    infer_theta,
    to_model,
    train as train_model,
)
from .storage import (
    RunConfig,
    load_corpus,
    load_model,
    save_corpus,
    save_ground_truth,
    save_model,
    write_run_config,
)


# Setup logging
logging.basicConfig(
    level=getattr(logging, settings.log_level),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

EXIT_RUNTIME = 1
EXIT_USAGE = 2

GRANULARITIES = click.Choice([g.value for g in Granularity])


def handle_errors(func: Callable) -> Callable:
    """Map pipeline exceptions to exit codes: 1 runtime, 2 usage and I/O."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except (InputFormatError, ModelFormatError, SchemaValidationError, json.JSONDecodeError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except SenLDAError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_RUNTIME)
        except (OSError, ValueError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except Exception as e:
            logger.error(f"Unexpected failure: {e}", exc_info=True)
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_RUNTIME)
    return wrapper


def parse_list(value: Optional[str], cast: Callable[[str], Any], name: str) -> List[Any]:
    """Parse a comma-separated flag value."""
    if value is None:
        return []
    try:
        return [cast(item.strip()) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter(f"cannot parse {value!r} as a comma-separated list", param_hint=name)


def record_run(command: str, output: Path, **resolved) -> None:
    """Write the resolved parameters of this command next to its output."""
    params: Dict[str, Any] = dict(click.get_current_context().params)
    params.update(resolved)
    params = {key: str(value) if isinstance(value, Path) else value for key, value in params.items()}
    write_run_config(RunConfig(command=command, parameters=params), output)


def preprocess_config(stopwords: Optional[Path], pretokenized: bool,
                      min_term_length: int = 1, keep_case: bool = False) -> PreprocessConfig:
    words = parse_stopword_file(stopwords, lowercase=not keep_case) if stopwords else set()
    return PreprocessConfig(
        lowercase=not keep_case,
        stopwords=frozenset(words),
        min_term_length=min_term_length,
        pretokenized=pretokenized
    )


def reencode_corpus(corpus: Corpus, vocabulary: Vocabulary) -> Corpus:
    """Map an encoded corpus onto another vocabulary, skipping unknown terms."""
    documents = []
    skipped = 0
    for doc in corpus.documents:
        sentences = []
        for terms in decode_document(doc, corpus.vocabulary):
            ids = [vocabulary.get(term) for term in terms]
            skipped += sum(1 for term_id in ids if term_id is None)
            ids = [term_id for term_id in ids if term_id is not None]
            if ids:
                sentences.append(ids)
        documents.append(Document(doc_id=doc.doc_id, sentences=sentences, labels=doc.labels))
    if skipped:
        logger.info(f"Skipped {skipped} out-of-vocabulary tokens")
    return Corpus(documents=documents, vocabulary=vocabulary, skipped_tokens=skipped)


def load_documents(path: Path, vocabulary: Vocabulary, cfg: PreprocessConfig) -> Corpus:
    """Held-out documents from raw JSON Lines or an encoded corpus file."""
    if path.suffix.lower() == ".jsonl":
        return encode_corpus_with_vocabulary(parse_document_file(path), vocabulary, cfg)
    return reencode_corpus(load_corpus(path), vocabulary)


def build_hyperparams(topics: int, alpha: Optional[float], beta: Optional[float],
                      granularity: str, seed: int) -> Hyperparams:
    return Hyperparams(K=topics, alpha=alpha, beta=beta, granularity=Granularity(granularity), seed=seed)


def hyper_params_dict(hyper: Hyperparams) -> Dict[str, Any]:
    return {"alpha": hyper.alpha, "beta": hyper.beta}


def common_text_options(func: Callable) -> Callable:
    func = click.option('--keep-case', is_flag=True, help='Do not lowercase tokens')(func)
    func = click.option('--min-term-length', type=int, default=1, show_default=True,
                        help='Drop shorter terms; match the value used by prep')(func)
    func = click.option('--pretokenized', is_flag=True,
                        help='Input lines carry "sentences" token lists instead of "text"')(func)
    func = click.option('--stopwords', type=click.Path(exists=True, dir_okay=False, path_type=Path),
                        default=None, help='Stopword file, one term per line')(func)
    return func


@click.group()
def cli():
    """Sentence-level topic modeling (senLDA) and LDA."""
    pass


@cli.command()
@click.argument('input_file', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('output', type=click.Path(dir_okay=False, path_type=Path))
@common_text_options
@handle_errors
def prep(input_file: Path, output: Path, stopwords: Optional[Path], pretokenized: bool,
         min_term_length: int, keep_case: bool):
    """
    Build an encoded corpus file from JSON Lines documents.

    INPUT_FILE: .jsonl with one {"id", "text"|"sentences", "labels"?} object per line
    """
    cfg = preprocess_config(stopwords, pretokenized, min_term_length, keep_case)
    corpus = build_corpus(parse_document_file(input_file), cfg)
    save_corpus(corpus, output)
    record_run("prep", output)

    stats = corpus_statistics(corpus)
    click.echo(f"{'documents':<28}{stats['documents']}")
    click.echo(f"{'classes':<28}{stats['classes']}")
    click.echo(f"{'vocabulary':<28}{stats['vocabulary']}")
    click.echo(f"{'sentences':<28}{stats['sentences']}")
    click.echo(f"{'tokens':<28}{stats['tokens']}")
    click.echo(f"{'mean sentence length':<28}{stats['mean_sentence_length']:.2f}")
    click.echo(f"{'mean sentences / document':<28}{stats['mean_sentences_per_document']:.2f}")
    if corpus.dropped_documents:
        click.echo(f"{'dropped documents':<28}{corpus.dropped_documents}")


@cli.command()
@click.argument('corpus_file', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('model_file', type=click.Path(dir_okay=False, path_type=Path))
@click.option('--topics', type=int, default=settings.default_topics, show_default=True)
@click.option('--alpha', type=float, default=None, help='Document-topic prior (default 1/K)')
@click.option('--beta', type=float, default=None, help='Topic-term prior (default 1/K)')
@click.option('--granularity', type=GRANULARITIES, default=settings.default_granularity, show_default=True)
@click.option('--iterations', type=int, default=settings.default_iterations, show_default=True)
@click.option('--seed', type=int, default=settings.default_seed, show_default=True)
@click.option('--eval-every', type=int, default=settings.eval_every, show_default=True)
@click.option('--heldout', type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help='Held-out .jsonl or corpus file; diagnostics then use fold-in perplexity')
@click.option('--diagnostics', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='Per-sweep diagnostics CSV')
@click.option('--fold-in-iterations', type=int, default=settings.fold_in_iterations, show_default=True)
@click.option('--snapshot-at', type=str, default=None, help='Comma list of iterations to snapshot')
@common_text_options
@handle_errors
def train(corpus_file: Path, model_file: Path, topics: int, alpha: Optional[float], beta: Optional[float],
          granularity: str, iterations: int, seed: int, eval_every: int, heldout: Optional[Path],
          diagnostics: Optional[Path], fold_in_iterations: int, snapshot_at: Optional[str],
          stopwords: Optional[Path], pretokenized: bool,
          min_term_length: int, keep_case: bool):
    """Train a topic model with collapsed Gibbs sampling."""
    corpus = load_corpus(corpus_file)
    hyper = build_hyperparams(topics, alpha, beta, granularity, seed)
    snapshots = set(parse_list(snapshot_at, int, "--snapshot-at"))

    evaluate = None
    if diagnostics is None:
        if heldout is not None:
            logger.warning("--heldout has no effect without --diagnostics; skipping held-out evaluation")
    elif heldout is not None:
        heldout_corpus = load_documents(
            heldout, corpus.vocabulary, preprocess_config(stopwords, pretokenized, min_term_length, keep_case)
        )

        def evaluate(state: SamplerState) -> float:
            return perplexity(to_model(state, corpus), heldout_corpus, fold_in_iterations, seed).perplexity
    else:
        evaluate = training_perplexity

    def snapshot(iteration: int, state: SamplerState) -> None:
        if iteration in snapshots:
            path = model_file.with_suffix(f".iter{iteration}{model_file.suffix}")
            save_model(to_model(state, corpus, settings.model_format_version), path)

    series = DiagnosticsSeries(label=granularity)
    model, _ = train_model(
        corpus,
        hyper,
        iterations,
        hook=series.record,
        evaluate=evaluate,
        eval_every=eval_every,
        on_sweep=snapshot if snapshots else None,
        format_version=settings.model_format_version
    )

    save_model(model, model_file)
    if diagnostics is not None:
        write_diagnostics_csv(series, diagnostics)
        logger.info(f"Diagnostics written to {diagnostics}")
    record_run("train", model_file, **hyper_params_dict(hyper))

    for k in range(model.K):
        logger.info(f"Topic {k}: {' '.join(model.top_terms(k, 10))}")


@cli.command()
@click.argument('model_file', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('documents', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('output', type=click.Path(dir_okay=False, path_type=Path))
@click.option('--iterations', type=int, default=settings.fold_in_iterations, show_default=True,
              help='Fold-in sweeps per document')
@click.option('--seed', type=int, default=settings.default_seed, show_default=True)
@click.option('--labels-out', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='Also write the documents\' labels as a label file')
@common_text_options
@handle_errors
def infer(model_file: Path, documents: Path, output: Path, iterations: int, seed: int,
          labels_out: Optional[Path], stopwords: Optional[Path], pretokenized: bool,
          min_term_length: int, keep_case: bool):
    """Estimate topic distributions of unseen documents (theta CSV)."""
    model = load_model(model_file)
    cfg = preprocess_config(stopwords, pretokenized, min_term_length, keep_case)
    corpus = load_documents(documents, model.vocabulary, cfg)

    log_phi = np.log(model.phi)
    thetas = [
        infer_theta(model, doc, iterations, document_seed(seed, doc.doc_id), log_phi=log_phi).theta
        for doc in corpus.documents
    ]
    features = FeatureMatrix(
        [doc.doc_id for doc in corpus.documents],
        np.vstack(thetas) if thetas else np.empty((0, model.K))
    )
    write_feature_csv(features, output)
    logger.info(f"Wrote {len(thetas)} topic distributions to {output}")

    if labels_out is not None:
        labels = {doc.doc_id: doc.labels for doc in corpus.documents if doc.labels is not None}
        if len(labels) < corpus.num_documents:
            logger.warning(f"{corpus.num_documents - len(labels)} documents carry no labels")
        write_label_file(labels, labels_out)
    record_run("infer", output)


@cli.command(name="perplexity")
@click.argument('model_file', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('heldout', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('output', type=click.Path(dir_okay=False, path_type=Path))
@click.option('--iterations', type=int, default=settings.fold_in_iterations, show_default=True,
              help='Fold-in sweeps per document')
@click.option('--seed', type=int, default=settings.default_seed, show_default=True)
@common_text_options
@handle_errors
def perplexity_cmd(model_file: Path, heldout: Path, output: Path, iterations: int, seed: int,
                   stopwords: Optional[Path], pretokenized: bool,
          min_term_length: int, keep_case: bool):
    """Held-out perplexity of a trained model (report JSON)."""
    model = load_model(model_file)
    cfg = preprocess_config(stopwords, pretokenized, min_term_length, keep_case)
    corpus = load_documents(heldout, model.vocabulary, cfg)
    report = perplexity(model, corpus, iterations, seed)

    with open(output, "w", encoding="utf-8") as f:
        json.dump(report.to_dict(), f, indent=2)
        f.write("\n")
    record_run("perplexity", output)
    click.echo(f"perplexity {report.perplexity:.6f} over {report.total_tokens} tokens")


def _component_names(paths: Sequence[Path]) -> List[str]:
    names = [path.stem for path in paths]
    if len(set(names)) < len(names):
        names = [f"{name}_{i}" for i, name in enumerate(names)]
    return names


@cli.command()
@click.argument('features', nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option('--labels', 'labels_file', type=click.Path(exists=True, dir_okay=False, path_type=Path),
              required=True, help='Label file: doc_id,labels')
@click.option('--output', type=click.Path(dir_okay=False, path_type=Path), required=True,
              help='Report JSON')
@click.option('--lambda-grid', type=str, default=None, help='Comma list (default 1e-4,...,1e4)')
@click.option('--folds', type=int, default=settings.folds, show_default=True)
@click.option('--seed', type=int, default=settings.default_seed, show_default=True)
@click.option('--test-fraction', type=float, default=settings.test_fraction, show_default=True)
@click.option('--epochs', type=int, default=settings.classifier_epochs, show_default=True)
@handle_errors
def classify(features: Sequence[Path], labels_file: Path, output: Path, lambda_grid: Optional[str],
             folds: int, seed: int, test_fraction: float, epochs: int):
    """
    Classify documents from topic features.

    FEATURES: one feature CSV, or two to classify their concatenation
    """
    if len(features) > 2:
        raise click.UsageError("pass one or two feature files")
    grid = parse_list(lambda_grid, float, "--lambda-grid") or list(settings.lambda_grid)

    matrices = [read_feature_csv(path) for path in features]
    combined = matrices[0] if len(matrices) == 1 else concat_features(*matrices)
    label_sets = align_labels(combined, read_label_file(labels_file))
    train_idx, test_idx = train_test_split(len(label_sets), test_fraction, seed)
    train_labels = [label_sets[i] for i in train_idx]
    test_labels = [label_sets[i] for i in test_idx]

    def run(matrix: FeatureMatrix):
        return evaluate_pipeline(
            matrix.values[train_idx], train_labels, matrix.values[test_idx], test_labels,
            grid, folds=folds, seed=seed, epochs=epochs
        )

    report = run(combined)
    if len(matrices) == 2:
        report.components = {
            name: run(matrix).micro_f1 for name, matrix in zip(_component_names(features), matrices)
        }
        report.concatenation_outperforms = report.micro_f1 > max(report.components.values())

    with open(output, "w", encoding="utf-8") as f:
        json.dump(report.model_dump(), f, indent=2)
        f.write("\n")
    record_run("classify", output, lambda_grid=grid)
    click.echo(f"micro-F1 {report.micro_f1:.4f} (lambda={report.chosen_lambda:g}, dim={report.feature_dim})")


@cli.command()
@click.argument('corpus_out', type=click.Path(dir_okay=False, path_type=Path))
@click.argument('truth_out', type=click.Path(dir_okay=False, path_type=Path))
@click.option('--topics', type=int, default=settings.default_topics, show_default=True)
@click.option('--alpha', type=float, default=None, help='Document-topic prior (default 1/K)')
@click.option('--beta', type=float, default=None, help='Topic-term prior (default 1/K)')
@click.option('--documents', type=int, default=100, show_default=True)
@click.option('--vocab-size', type=int, default=50, show_default=True)
@click.option('--sentences', 'xi_sentences', type=float, default=8.0, show_default=True,
              help='Poisson mean of sentences per document')
@click.option('--words', 'xi_words', type=float, default=6.0, show_default=True,
              help='Poisson mean of words per sentence')
@click.option('--separated', is_flag=True, help='Use block topics with disjoint supports')
@click.option('--leak', type=float, default=0.0, show_default=True,
              help='Mass outside each block for --separated')
@click.option('--seed', type=int, default=settings.default_seed, show_default=True)
@handle_errors
def generate(corpus_out: Path, truth_out: Path, topics: int, alpha: Optional[float], beta: Optional[float],
             documents: int, vocab_size: int, xi_sentences: float, xi_words: float,
             separated: bool, leak: float, seed: int):
    """Draw a synthetic corpus and its ground truth from the generative process."""
    hyper = build_hyperparams(topics, alpha, beta, Granularity.SENTENCE.value, seed)
    cfg = GeneratorConfig(
        D=documents,
        xi_sentences=xi_sentences,
        xi_words=xi_words,
        vocab_size=vocab_size,
        true_phi=block_topics(topics, vocab_size, leak) if separated else None
    )
    corpus, truth = generate_corpus(cfg, hyper)
    save_corpus(corpus, corpus_out)
    save_ground_truth(truth, truth_out)
    record_run("generate", corpus_out, **hyper_params_dict(hyper))


@cli.command()
@click.argument('corpus_file', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('output', type=click.Path(dir_okay=False, path_type=Path))
@click.option('--topics', type=int, default=settings.default_topics, show_default=True)
@click.option('--alpha', type=float, default=None, help='Document-topic prior (default 1/K)')
@click.option('--beta', type=float, default=None, help='Topic-term prior (default 1/K)')
@click.option('--iterations', type=int, default=settings.default_iterations, show_default=True)
@click.option('--seeds', type=str, default="0", show_default=True, help='Comma list of chain seeds')
@click.option('--eval-every', type=int, default=settings.eval_every, show_default=True)
@click.option('--heldout', type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help='Held-out .jsonl or corpus file for fold-in perplexity')
@click.option('--fold-in-iterations', type=int, default=settings.fold_in_iterations, show_default=True)
@click.option('--jobs', type=int, default=settings.max_concurrent_chains, show_default=True,
              help='Concurrent chains')
@click.option('--summary', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='Summary JSON (default <output>.summary.json)')
@common_text_options
@handle_errors
def bench(corpus_file: Path, output: Path, topics: int, alpha: Optional[float], beta: Optional[float],
          iterations: int, seeds: str, eval_every: int, heldout: Optional[Path], fold_in_iterations: int,
          jobs: int, summary: Optional[Path], stopwords: Optional[Path], pretokenized: bool,
          min_term_length: int, keep_case: bool):
    """Compare sentence and word granularity: per-sweep timing and convergence."""
    corpus = load_corpus(corpus_file)
    seed_list = parse_list(seeds, int, "--seeds")
    heldout_corpus = None
    if heldout is not None:
        heldout_corpus = load_documents(
            heldout, corpus.vocabulary, preprocess_config(stopwords, pretokenized, min_term_length, keep_case)
        )

    runner = BenchRunner(
        corpus,
        K=topics,
        iterations=iterations,
        alpha=alpha,
        beta=beta,
        eval_every=eval_every,
        heldout=heldout_corpus,
        fold_in_iterations=fold_in_iterations,
        max_workers=jobs
    )
    job = runner.run(runner.create_job(seed_list))

    write_diagnostics_csv(job.series(), output)
    summary = summary or output.with_name(output.name + ".summary.json")
    with open(summary, "w", encoding="utf-8") as f:
        json.dump(runner.summary(job), f, indent=2)
        f.write("\n")
    record_run("bench", output, seeds=seed_list)

    for task in job.tasks:
        click.echo(
            f"{task.granularity.value:<9} seed={task.seed:<4} converged="
            f"{task.convergence_iteration} first_{runner.first_n}_seconds="
            f"{task.first_seconds if task.first_seconds is None else round(task.first_seconds, 3)}"
        )

    progress = job.progress
    if progress["failed"] > 0:
        logger.warning(f"{progress['failed']} chains failed")
        sys.exit(EXIT_RUNTIME)


def _pick_series(path: Path, label: Optional[str], seed: Optional[int]) -> DiagnosticsSeries:
    candidates = [
        s for s in read_diagnostics_csv(path)
        if (label is None or s.label == label) and (seed is None or s.seed == seed)
    ]
    if len(candidates) != 1:
        raise click.UsageError(
            f"{path} holds {len(candidates)} matching series; narrow it with --label-a/--label-b/--seed"
        )
    return candidates[0]


@cli.command()
@click.argument('diagnostics_a', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('diagnostics_b', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('output', type=click.Path(dir_okay=False, path_type=Path))
@click.option('--label-a', type=str, default=None)
@click.option('--label-b', type=str, default=None)
@click.option('--seed', type=int, default=None, help='Select the series of this bench seed')
@handle_errors
def ratio(diagnostics_a: Path, diagnostics_b: Path, output: Path, label_a: Optional[str],
          label_b: Optional[str], seed: Optional[int]):
    """Perplexity ratio b / a per evaluated iteration (CSV iteration,ratio)."""
    series_a = _pick_series(diagnostics_a, label_a, seed)
    series_b = _pick_series(diagnostics_b, label_b, seed)
    write_ratio_csv(perplexity_ratio(series_a, series_b), output)
    record_run("ratio", output)


@cli.command(name="select-topics")
@click.argument('corpus_file', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('output', type=click.Path(dir_okay=False, path_type=Path))
@click.option('--candidates', type=str, default="25,75,125,175", show_default=True,
              help='Comma list of topic counts')
@click.option('--alpha', type=float, default=None, help='Document-topic prior (default 1/K)')
@click.option('--beta', type=float, default=None, help='Topic-term prior (default 1/K)')
@click.option('--granularity', type=GRANULARITIES, default=settings.default_granularity, show_default=True)
@click.option('--folds', type=int, default=settings.folds, show_default=True)
@click.option('--iterations', type=int, default=50, show_default=True)
@click.option('--fold-in-iterations', type=int, default=settings.fold_in_iterations, show_default=True)
@click.option('--seed', type=int, default=settings.default_seed, show_default=True)
@handle_errors
def select_topics(corpus_file: Path, output: Path, candidates: str, alpha: Optional[float],
                  beta: Optional[float], granularity: str, folds: int, iterations: int,
                  fold_in_iterations: int, seed: int):
    """Choose K by cross-validated held-out perplexity."""
    topic_counts = parse_list(candidates, int, "--candidates")
    if not topic_counts:
        raise click.BadParameter("no candidates given", param_hint="--candidates")

    report = select_topic_count(
        load_corpus(corpus_file),
        topic_counts,
        granularity=Granularity(granularity),
        alpha=alpha,
        beta=beta,
        folds=folds,
        iterations=iterations,
        fold_in_iterations=fold_in_iterations,
        seed=seed
    )
    with open(output, "w", encoding="utf-8") as f:
        json.dump(report.to_dict(), f, indent=2)
        f.write("\n")
    record_run("select-topics", output, candidates=topic_counts)
    click.echo(f"best K={report.best_topics}")


if __name__ == "__main__":
    cli()
