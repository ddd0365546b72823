"""Tests for the collapsed Gibbs sampler."""
import itertools
import math

import numpy as np
import pytest

from src.corpus import Corpus, Document, Vocabulary
from src.errors import DomainError, NumericalError
from src.sampler import (
    GeneratorConfig,
    Granularity,
    Hyperparams,
    TrainedModel,
    block_topics,
    check_consistency,
    count_assignments,
    estimate_phi,
    estimate_theta,
    full_conditional,
    generate_corpus,
    gibbs_sweep,
    infer_theta,
    init_state,
    log_joint,
    log_normalize,
    log_rising_factorial,
    log_segment_factor,
    sample_categorical_log,
    train,
)
from src.sampler.gibbs import _add, _remove


def make_corpus(sentences_per_doc, V):
    vocabulary = Vocabulary.from_terms(f"t{i}" for i in range(V))
    documents = [
        Document(doc_id=f"d{d}", sentences=[list(s) for s in sentences])
        for d, sentences in enumerate(sentences_per_doc)
    ]
    return Corpus(documents=documents, vocabulary=vocabulary)


def random_instance(rng):
    """Small random corpus and hyperparameters (K<=4, V<=10, D<=5)."""
    K = int(rng.integers(1, 5))
    V = int(rng.integers(2, 11))
    D = int(rng.integers(1, 6))
    docs = [
        [rng.integers(0, V, size=int(rng.integers(1, 5))).tolist() for _ in range(int(rng.integers(1, 5)))]
        for _ in range(D)
    ]
    alpha = float(rng.uniform(0.05, 2.0))
    beta = float(rng.uniform(0.05, 2.0))
    return make_corpus(docs, V), K, alpha, beta


def oracle_conditional(state, d, s):
    """Normalized p(z_s = k | rest) from ratios of collapsed joints."""
    logs = []
    for k in range(state.num_topics):
        z = [z_d.copy() for z_d in state.z]
        z[d][s] = k
        logs.append(log_joint(state, z))
    return log_normalize(np.array(logs))


def test_log_rising_factorial_examples():
    """Test closed-form values."""
    assert log_rising_factorial(0.5, 2) == pytest.approx(math.log(0.75), abs=1e-12)
    assert log_rising_factorial(1.0, 3) == pytest.approx(math.log(6.0), abs=1e-12)
    assert log_rising_factorial(3.7, 0) == 0.0


def test_log_rising_factorial_long_run_matches_gamma():
    """Test the log-gamma branch agrees with the explicit sum."""
    explicit = math.fsum(math.log(2.5 + i) for i in range(200))
    assert log_rising_factorial(2.5, 200) == pytest.approx(explicit, rel=1e-12)


def test_log_rising_factorial_domain():
    """Test non-positive bases and negative lengths."""
    with pytest.raises(DomainError):
        log_rising_factorial(0.0, 1)
    with pytest.raises(DomainError):
        log_rising_factorial(-1.0, 2)
    with pytest.raises(DomainError):
        log_rising_factorial(1.0, -1)


def test_log_segment_factor_examples():
    """Test the hand-computed segment factors."""
    corpus = make_corpus([[[0]]], 2)
    state = init_state(corpus, Hyperparams(K=1, alpha=1.0, beta=0.5))
    _remove(state, 0, 0, 0)
    assert log_segment_factor(state, [0], 0) == pytest.approx(math.log(0.5 / 1.0), abs=1e-12)
    assert log_segment_factor(state, [], 0) == 0.0

    # word 0 twice with one other occurrence of word 0 in topic 0
    corpus = make_corpus([[[0], [0, 0]]], 2)
    state = init_state(corpus, Hyperparams(K=1, alpha=1.0, beta=1.0))
    _remove(state, 0, 1, 0)
    expected = math.log((2 * 3) / (3 * 4))
    assert log_segment_factor(state, [0, 0], 0) == pytest.approx(expected, abs=1e-12)
    _add(state, 0, 1, 0)
    assert log_segment_factor(state, [0, 0], 0, excluded=False) == pytest.approx(expected, abs=1e-12)


def test_oracle_equivalence():
    """Test the full conditional against collapsed-joint ratios on random states."""
    rng = np.random.default_rng(20240101)
    worst = 0.0
    for instance in range(120):
        corpus, K, alpha, beta = random_instance(rng)
        granularity = Granularity.SENTENCE if instance % 4 else Granularity.WORD
        state = init_state(corpus, Hyperparams(K=K, alpha=alpha, beta=beta, granularity=granularity, seed=instance))
        gibbs_sweep(state)
        for d, z_d in enumerate(state.z):
            for s in range(len(z_d)):
                expected = oracle_conditional(state, d, s)
                k = int(z_d[s])
                _remove(state, d, s, k)
                actual = log_normalize(full_conditional(state, d, s))
                _add(state, d, s, k)
                worst = max(worst, float(np.max(np.abs(actual - expected))))
    assert worst <= 1e-10


def test_full_conditional_matches_segment_factor():
    """Test the vectorized conditional term by term."""
    rng = np.random.default_rng(7)
    corpus, K, alpha, beta = random_instance(rng)
    state = init_state(corpus, Hyperparams(K=max(K, 2), alpha=alpha, beta=beta, seed=3))
    seg_tokens = corpus.documents[0].sentences[0]
    k0 = int(state.z[0][0])
    _remove(state, 0, 0, k0)
    weights = full_conditional(state, 0, 0)
    for k in range(state.num_topics):
        expected = math.log(state.doc_topic[0, k] + alpha) + log_segment_factor(state, seg_tokens, k)
        assert weights[k] == pytest.approx(expected, abs=1e-10)


def test_full_conditional_symmetric_state():
    """Test identical counts under both topics give equal weights."""
    corpus = make_corpus([[[0, 1], [0, 1], [0, 1, 2]]], V=3)
    state = init_state(corpus, Hyperparams(K=2, seed=0))
    state.z = [np.array([0, 1, 0], dtype=np.int64)]
    # Counts without the third sentence: one [0, 1] sentence under each topic
    state.topic_term, state.topic_total, state.doc_topic, state.doc_total = count_assignments(
        [state.z[0][:2]], [state.segments[0][:2]], 2, 3
    )
    assert np.array_equal(state.topic_term[0], state.topic_term[1])
    assert state.doc_topic[0, 0] == state.doc_topic[0, 1]

    weights = full_conditional(state, 0, 2)
    assert weights[0] == weights[1]


def test_lda_reduction():
    """Test word granularity gives the standard LDA conditional."""
    rng = np.random.default_rng(11)
    worst = 0.0
    for instance in range(100):
        corpus, K, alpha, beta = random_instance(rng)
        state = init_state(
            corpus, Hyperparams(K=K, alpha=alpha, beta=beta, granularity=Granularity.WORD, seed=instance)
        )
        gibbs_sweep(state)
        V = state.vocab_size
        for d, z_d in enumerate(state.z):
            for s in range(len(z_d)):
                k_old = int(z_d[s])
                w = int(state.segments[d][s].words[0])
                _remove(state, d, s, k_old)
                actual = log_normalize(full_conditional(state, d, s))
                lda = (
                    (state.doc_topic[d] + alpha)
                    * (state.topic_term[:, w] + beta)
                    / (state.topic_total + V * beta)
                )
                _add(state, d, s, k_old)
                worst = max(worst, float(np.max(np.abs(actual - lda / lda.sum()))))
    assert worst <= 1e-12


def test_exchangeability_within_segment():
    """Test token order inside a segment does not matter."""
    corpus = make_corpus([[[0, 1, 1, 2]], [[1, 2, 2, 0]]], 4)
    state = init_state(corpus, Hyperparams(K=3, seed=5))
    for _ in range(3):
        gibbs_sweep(state)
    k = int(state.z[0][0])
    _remove(state, 0, 0, k)
    for perm in itertools.permutations([0, 1, 1, 2]):
        for topic in range(3):
            assert log_segment_factor(state, list(perm), topic) == log_segment_factor(state, [0, 1, 1, 2], topic)


def test_log_space_correctness():
    """Test exp(log factor) against direct products on every short segment."""
    corpus = make_corpus([[[0, 1, 2], [2, 2]], [[1, 1, 0, 2]]], 3)
    state = init_state(corpus, Hyperparams(K=2, alpha=0.3, beta=0.7, seed=2))
    gibbs_sweep(state)
    beta, V = state.hyper.beta, state.vocab_size

    worst = 0.0
    for length in range(1, 9):
        for tokens in itertools.combinations_with_replacement(range(3), length):
            for k in range(2):
                direct = 1.0
                for w in set(tokens):
                    n = state.topic_term[k, w]
                    for i in range(tokens.count(w)):
                        direct *= n + beta + i
                total = state.topic_total[k]
                for j in range(length):
                    direct /= total + V * beta + j
                value = math.exp(log_segment_factor(state, tokens, k))
                worst = max(worst, abs(value - direct) / direct)
    assert worst <= 1e-10


def test_sample_categorical_concentrated():
    """Test a dominant weight always wins."""
    rng = np.random.default_rng(0)
    draws = [sample_categorical_log(np.array([0.0, -800.0]), rng) for _ in range(1000)]
    assert set(draws) == {0}


def test_sample_categorical_frequency():
    """Test empirical frequencies match the weights."""
    rng = np.random.default_rng(42)
    weights = np.log([0.3, 0.7])
    draws = np.array([sample_categorical_log(weights, rng) for _ in range(10_000)])
    assert draws.mean() == pytest.approx(0.7, abs=0.02)


def test_sample_categorical_single_and_invalid():
    """Test K=1 and unusable weights."""
    rng = np.random.default_rng(0)
    assert all(sample_categorical_log(np.array([-3.0]), rng) == 0 for _ in range(10))
    with pytest.raises(NumericalError):
        sample_categorical_log(np.array([-np.inf, -np.inf]), rng)
    with pytest.raises(NumericalError):
        sample_categorical_log(np.array([0.0, np.nan]), rng)


def test_init_state_deterministic_and_consistent():
    """Test seeded initialization."""
    rng = np.random.default_rng(3)
    corpus, _, _, _ = random_instance(rng)
    a = init_state(corpus, Hyperparams(K=3, seed=9))
    b = init_state(corpus, Hyperparams(K=3, seed=9))
    assert a.assignments() == b.assignments()
    check_consistency(a)
    assert a.topic_total.tolist() == a.topic_term.sum(axis=1).tolist()
    assert a.doc_total.tolist() == [len(doc.sentences) for doc in corpus.documents]


def test_single_topic_state_is_fixed():
    """Test K=1 assigns and keeps topic 0."""
    corpus = make_corpus([[[0, 1], [1]], [[2]]], 3)
    state = init_state(corpus, Hyperparams(K=1))
    before = state.topic_term.copy()
    gibbs_sweep(state)
    assert all(k == 0 for z_d in state.assignments() for k in z_d)
    assert np.array_equal(before, state.topic_term)


def test_word_granularity_segments():
    """Test every token becomes its own segment."""
    corpus = make_corpus([[[0, 1, 1], [2]]], 3)
    state = init_state(corpus, Hyperparams(K=2, granularity=Granularity.WORD))
    assert len(state.z[0]) == 4
    assert state.doc_total[0] == 4


def test_sweeps_keep_counts_consistent():
    """Test count consistency across sweeps on a generated corpus."""
    hyper = Hyperparams(K=5, seed=1)
    corpus, _ = generate_corpus(GeneratorConfig(D=40, xi_sentences=4, xi_words=5, vocab_size=30), hyper)
    state = init_state(corpus, hyper)
    for _ in range(20):
        gibbs_sweep(state)
        check_consistency(state)


def test_check_consistency_detects_drift():
    """Test drift in maintained counts is reported."""
    corpus = make_corpus([[[0, 1]]], 2)
    state = init_state(corpus, Hyperparams(K=2))
    state.topic_term[0, 0] += 1
    with pytest.raises(NumericalError):
        check_consistency(state)


def test_sweep_determinism():
    """Test identical seeds give identical chains."""
    corpus = make_corpus([[[0, 1, 2], [3, 4]], [[4, 4, 1]], [[2, 0]]], 5)
    runs = []
    for _ in range(2):
        state = init_state(corpus, Hyperparams(K=3, seed=123))
        for _ in range(5):
            gibbs_sweep(state)
        runs.append(state.assignments())
    assert runs[0] == runs[1]


def test_train_prefix_determinism():
    """Test a longer run extends the shorter run's trajectory."""
    corpus = make_corpus([[[0, 1, 2], [3, 4]], [[4, 4, 1]], [[2, 0]]], 5)
    hyper = Hyperparams(K=2, seed=8)
    snapshots = {}

    def capture(iteration, state):
        snapshots.setdefault(iteration, state.assignments())

    _, short_state = train(corpus, hyper, 5)
    train(corpus, hyper, 10, on_sweep=capture)
    assert snapshots[5] == short_state.assignments()


def test_train_single_document():
    """Test one sweep on one document yields a row-stochastic phi."""
    corpus = make_corpus([[[0, 1], [1, 2]]], 3)
    calls = []
    model, _ = train(corpus, Hyperparams(K=2), 1, hook=lambda *args: calls.append(args))
    assert model.phi.shape == (2, 3)
    assert np.allclose(model.phi.sum(axis=1), 1.0, atol=1e-12)
    assert len(calls) == 1
    assert calls[0][0] == 1 and calls[0][2] is None


def test_train_evaluation_cadence():
    """Test the hook sees perplexity only on evaluated sweeps."""
    corpus = make_corpus([[[0, 1], [1, 2]], [[2, 2]]], 3)
    seen = []
    train(corpus, Hyperparams(K=2), 6, hook=lambda it, sec, p: seen.append((it, p)),
          evaluate=lambda state: 1.5, eval_every=3)
    assert [it for it, _ in seen] == [1, 2, 3, 4, 5, 6]
    assert [p for _, p in seen] == [None, None, 1.5, None, None, 1.5]


def test_train_rejects_zero_iterations():
    corpus = make_corpus([[[0]]], 1)
    with pytest.raises(ValueError):
        train(corpus, Hyperparams(K=1), 0)


def test_estimate_phi_examples():
    """Test the smoothed topic-term estimator."""
    corpus = make_corpus([[[0, 0]]], 2)
    state = init_state(corpus, Hyperparams(K=1, alpha=1.0, beta=0.5))
    phi = estimate_phi(state)
    assert phi[0] == pytest.approx([2.5 / 3, 0.5 / 3], abs=1e-12)

    state.topic_term[:] = 0
    state.topic_total[:] = 0
    assert estimate_phi(state)[0] == pytest.approx([0.5, 0.5], abs=1e-12)


def test_estimate_theta_examples():
    """Test the smoothed topic-mixture estimator."""
    theta = estimate_theta(np.array([2, 0]), 0.5)
    assert theta.theta == pytest.approx([2.5 / 3, 0.5 / 3], abs=1e-12)
    assert not theta.empty
    empty = estimate_theta(np.array([0, 0, 0]), 0.2)
    assert empty.theta == pytest.approx([1 / 3] * 3, abs=1e-12)
    assert abs(empty.theta.sum() - 1.0) <= 1e-12


def test_hyperparams_defaults_and_validation():
    """Test 1/K priors and invalid values."""
    hyper = Hyperparams(K=4)
    assert hyper.alpha == 0.25 and hyper.beta == 0.25
    assert hyper.granularity == Granularity.SENTENCE
    with pytest.raises(ValueError):
        Hyperparams(K=0)
    with pytest.raises(ValueError):
        Hyperparams(K=2, alpha=0.0)
    with pytest.raises(ValueError):
        Hyperparams(K=2, beta=-1.0)


def test_trained_model_validation():
    """Test phi shape and normalization checks."""
    vocabulary = Vocabulary.from_terms(["a", "b"])
    with pytest.raises(ValueError):
        TrainedModel(phi=np.array([[0.5, 0.6]]), hyperparams=Hyperparams(K=1), vocabulary=vocabulary)
    with pytest.raises(ValueError):
        TrainedModel(phi=np.array([[1.0, 0.0]]), hyperparams=Hyperparams(K=1), vocabulary=vocabulary)
    with pytest.raises(ValueError):
        TrainedModel(phi=np.array([[0.5, 0.5]]), hyperparams=Hyperparams(K=2), vocabulary=vocabulary)


def separated_model():
    phi = np.array([[0.4999, 0.4999, 0.0001, 0.0001], [0.0001, 0.0001, 0.4999, 0.4999]])
    return TrainedModel(phi=phi, hyperparams=Hyperparams(K=2), vocabulary=Vocabulary.from_terms("abcd"))


def test_infer_theta_disjoint_support():
    """Test fold-in concentrates on the topic owning the document's words."""
    doc = Document(doc_id="x", sentences=[[0, 1], [1, 0, 0], [1], [0, 1]] * 3)
    theta = infer_theta(separated_model(), doc, 40, seed=1)
    assert theta.theta[0] > 0.9
    assert theta.theta.sum() == pytest.approx(1.0, abs=1e-9)


def test_infer_theta_single_topic_and_empty():
    """Test K=1 and documents without tokens."""
    model = TrainedModel(
        phi=np.array([[0.25, 0.75]]), hyperparams=Hyperparams(K=1), vocabulary=Vocabulary.from_terms("ab")
    )
    assert infer_theta(model, Document("x", [[0, 1]]), 5, seed=0).theta.tolist() == [1.0]

    empty = infer_theta(separated_model(), Document("y", []), 5, seed=0)
    assert empty.empty
    assert empty.theta.tolist() == [0.5, 0.5]


def test_infer_theta_deterministic():
    """Test identical seeds give identical mixtures."""
    doc = Document(doc_id="x", sentences=[[0, 2], [1, 3], [2]])
    a = infer_theta(separated_model(), doc, 20, seed=5)
    b = infer_theta(separated_model(), doc, 20, seed=5)
    assert np.array_equal(a.theta, b.theta)


def test_log_joint_self_difference():
    """Test the joint of a state against itself."""
    corpus = make_corpus([[[0, 1], [2]], [[1, 1]]], 3)
    state = init_state(corpus, Hyperparams(K=2, seed=4))
    assert log_joint(state) - log_joint(state, state.z) == 0.0


def test_log_joint_duplicated_corpus():
    """Test the joint of a mirrored corpus recomputed from counts."""
    docs = [[[0, 1], [2]], [[1, 1]]]
    state = init_state(make_corpus(docs, 3), Hyperparams(K=2, seed=4))
    doubled = init_state(make_corpus(docs + docs, 3), Hyperparams(K=2, seed=4))
    mirrored = [z.copy() for z in state.z] + [z.copy() for z in state.z]

    topic_term, _, doc_topic, _ = count_assignments(mirrored, doubled.segments, 2, 3)
    assert np.array_equal(topic_term, 2 * count_assignments(state.z, state.segments, 2, 3)[0])
    assert doc_topic.shape == (4, 2)
    assert np.isfinite(log_joint(doubled, mirrored))


def test_generate_corpus_deterministic():
    """Test a fixed seed gives an identical corpus."""
    cfg = GeneratorConfig(D=20, xi_sentences=3, xi_words=4, vocab_size=15)
    a, truth_a = generate_corpus(cfg, Hyperparams(K=3, seed=2))
    b, truth_b = generate_corpus(cfg, Hyperparams(K=3, seed=2))
    assert [d.sentences for d in a.documents] == [d.sentences for d in b.documents]
    assert truth_a.z == truth_b.z
    assert all(doc.sentences and all(doc.sentences) for doc in a.documents)


def test_generate_corpus_single_topic():
    """Test K=1 puts every segment on topic 0 with labels topic0."""
    cfg = GeneratorConfig(D=10, xi_sentences=2, xi_words=3, vocab_size=5)
    corpus, truth = generate_corpus(cfg, Hyperparams(K=1, seed=0))
    assert all(k == 0 for z_d in truth.z for k in z_d)
    assert all(doc.labels == frozenset({"topic0"}) for doc in corpus.documents)


def test_generate_corpus_sentence_count_mean():
    """Test the zero-truncated Poisson mean of sentences per document."""
    xi = 2.0
    cfg = GeneratorConfig(D=10_000, xi_sentences=xi, xi_words=1.0, vocab_size=3)
    corpus, _ = generate_corpus(cfg, Hyperparams(K=1, seed=17))
    expected = xi / (1 - math.exp(-xi))
    mean = np.mean([doc.num_sentences for doc in corpus.documents])
    assert mean == pytest.approx(expected, rel=0.02)


def test_block_topics_separated():
    """Test disjoint supports and leak."""
    phi = block_topics(5, 50)
    assert np.allclose(phi.sum(axis=1), 1.0)
    assert all((phi[k] > 0).sum() == 10 for k in range(5))
    assert (phi[:, None, :] * phi[None, :, :]).sum(axis=2)[~np.eye(5, dtype=bool)].max() == 0.0
    assert (block_topics(2, 4, leak=0.1) > 0).all()


def test_generator_config_requires_vocabulary():
    with pytest.raises(ValueError):
        GeneratorConfig(D=1, xi_sentences=1, xi_words=1)
