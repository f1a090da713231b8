#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Doğrusal zincir CRF testleri
"""

import math

import numpy as np
import pytest

from core.crf import (CRFLayer, enumerate_sequences, log_partition, marginal_check, nll_loss,
                      score_values, sequence_score, viterbi_decode)
from core.mathcore import ParameterCollection, Tape, Tensor, gradient_relative_error, numerical_gradient
from utils.errors import DomainError, ShapeError


def t(values):
    return Tensor(np.array(values, dtype=float))


def random_instance(rng, n, k):
    return rng.normal(size=(n, k)), rng.normal(size=(k + 2, k + 2))


class TestScore:
    def test_zero_scores(self):
        P, A = np.zeros((3, 2)), np.zeros((4, 4))
        for tags, score in enumerate_sequences(P, A):
            assert score == 0.0

    def test_single_emission(self):
        tape = Tape()
        score = sequence_score(tape, t([[2.0, 3.0]]), t(np.zeros((4, 4))), [1])
        assert score.item() == pytest.approx(3.0)

    def test_includes_start_and_end(self):
        A = np.zeros((4, 4))
        A[2, 0] = 1.0   # başlangıç → 0
        A[0, 1] = 10.0  # 0 → 1
        A[1, 3] = 100.0  # 1 → bitiş
        tape = Tape()
        assert sequence_score(tape, t(np.zeros((2, 2))), t(A), [0, 1]).item() == pytest.approx(111.0)

    def test_tag_out_of_range(self):
        with pytest.raises(DomainError):
            sequence_score(Tape(), t(np.zeros((2, 2))), t(np.zeros((4, 4))), [0, 2])

    def test_transition_shape(self):
        with pytest.raises(ShapeError):
            sequence_score(Tape(), t(np.zeros((2, 2))), t(np.zeros((3, 3))), [0, 1])


class TestPartition:
    def test_two_equal_paths(self):
        log_z = log_partition(Tape(), t(np.zeros((1, 2))), t(np.zeros((4, 4))))
        assert log_z.item() == pytest.approx(math.log(2), abs=1e-9)

    def test_enumerated_value(self):
        log_z = log_partition(Tape(), t([[1.0, 0.0], [0.0, 0.0]]), t(np.zeros((4, 4))))
        assert log_z.item() == pytest.approx(math.log(2 * math.e + 2), abs=1e-5)
        assert log_z.item() == pytest.approx(2.00671, abs=1e-5)

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_brute_force(self, seed):
        rng = np.random.default_rng(seed)
        n, k = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        P, A = random_instance(rng, n, k)
        scores = np.array([score for _, score in enumerate_sequences(P, A)])
        brute = np.log(np.sum(np.exp(scores - scores.max()))) + scores.max()
        assert log_partition(Tape(), t(P), t(A)).item() == pytest.approx(brute, abs=1e-9)

    @pytest.mark.parametrize("seed", range(5))
    def test_marginals_sum_to_one(self, seed):
        rng = np.random.default_rng(100 + seed)
        P, A = random_instance(rng, 3, 3)
        assert marginal_check(P, A) == pytest.approx(1.0, abs=1e-9)

    def test_uniform_single_position(self):
        P, A = np.zeros((1, 3)), np.zeros((5, 5))
        log_z = log_partition(Tape(), t(P), t(A)).item()
        for _, score in enumerate_sequences(P, A):
            assert math.exp(score - log_z) == pytest.approx(1.0 / 3.0)

    def test_empty_sentence(self):
        with pytest.raises(DomainError):
            log_partition(Tape(), t(np.zeros((0, 2))), t(np.zeros((4, 4))))


class TestNll:
    def test_uniform_loss(self):
        loss = nll_loss(Tape(), t(np.zeros((1, 2))), t(np.zeros((4, 4))), [0])
        assert loss.item() == pytest.approx(math.log(2))

    @pytest.mark.parametrize("seed", range(5))
    def test_non_negative(self, seed):
        rng = np.random.default_rng(seed)
        P, A = random_instance(rng, 4, 3)
        gold = list(rng.integers(3, size=4))
        assert nll_loss(Tape(), t(P), t(A), gold).item() >= 0.0

    @pytest.mark.parametrize("seed", range(5))
    def test_gradients(self, seed):
        rng = np.random.default_rng(seed)
        n, k = 4, 3
        params = ParameterCollection()
        P = params.add("P", rng.normal(size=(n, k)))
        layer = CRFLayer(params, "A", k)
        layer.transitions.value[...] = rng.normal(size=(k + 2, k + 2))
        gold = [int(x) for x in rng.integers(k, size=n)]

        tape = Tape(params)
        analytic = {name: g.copy() for name, g in tape.backward(layer.nll(tape, P, gold)).items()}
        for name, param in params.items():
            numeric = numerical_gradient(lambda: layer.nll(Tape(params, record=False), P, gold).item(), param)
            assert gradient_relative_error(analytic[name], numeric) < 1e-4

    def test_unused_transitions_get_no_gradient(self):
        rng = np.random.default_rng(4)
        params = ParameterCollection()
        P = params.add("P", rng.normal(size=(3, 2)))
        layer = CRFLayer(params, "A", 2)
        tape = Tape(params)
        grads = tape.backward(layer.nll(tape, P, [0, 1, 1]))
        np.testing.assert_array_equal(grads["A"][:, layer.start], 0.0)
        np.testing.assert_array_equal(grads["A"][layer.end, :], 0.0)


class TestViterbi:
    def test_dominant_emissions(self):
        path, score = viterbi_decode(np.array([[5.0, 0.0], [0.0, 5.0]]), np.zeros((4, 4)))
        assert path == [0, 1]
        assert score == pytest.approx(10.0)

    def test_tie_break_lowest_index(self):
        path, score = viterbi_decode(np.zeros((3, 3)), np.zeros((5, 5)))
        assert path == [0, 0, 0]
        assert score == 0.0

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_brute_force(self, seed):
        rng = np.random.default_rng(seed)
        n, k = int(rng.integers(1, 5)), int(rng.integers(1, 4))
        P, A = random_instance(rng, n, k)
        best_tags, best_score = max(enumerate_sequences(P, A), key=lambda item: item[1])
        path, score = viterbi_decode(P, A)
        assert score == pytest.approx(best_score)
        assert score_values(P, A, path) == pytest.approx(score)
        assert path == best_tags

    def test_mask_forbids_transition(self):
        P = np.array([[0.0, 5.0], [0.0, 5.0]])
        mask = np.ones((4, 4), dtype=bool)
        mask[1, 1] = False
        path, score = viterbi_decode(P, np.zeros((4, 4)), mask=mask)
        assert path in ([0, 1], [1, 0])
        assert score == pytest.approx(5.0)

    def test_layer_decode(self):
        params = ParameterCollection()
        layer = CRFLayer(params, "A", 2)
        path, _ = layer.decode(np.array([[0.0, 1.0]]))
        assert path == [1]


class TestInvariants:
    @pytest.mark.parametrize("seed", range(10))
    def test_constant_emission_shift(self, seed):
        rng = np.random.default_rng(seed)
        n, k = int(rng.integers(1, 7)), int(rng.integers(1, 5))
        P, A = random_instance(rng, n, k)
        c = 3.0 * float(rng.normal())
        tape = Tape(record=False)
        base = log_partition(tape, t(P), t(A)).item()
        shifted = log_partition(tape, t(P + c), t(A)).item()
        assert shifted == pytest.approx(base + n * c, abs=1e-9)
        path, score = viterbi_decode(P, A)
        shifted_path, shifted_score = viterbi_decode(P + c, A)
        assert shifted_path == path
        assert shifted_score == pytest.approx(score + n * c, abs=1e-9)

    @pytest.mark.parametrize("seed", range(10))
    def test_best_path_bounded_by_partition(self, seed):
        rng = np.random.default_rng(seed)
        n, k = int(rng.integers(1, 9)), int(rng.integers(1, 6))
        P, A = random_instance(rng, n, k)
        _, best = viterbi_decode(P, A)
        logz = log_partition(Tape(record=False), t(P), t(A)).item()
        assert best <= logz + 1e-9
        assert logz <= best + n * math.log(k) + 1e-9


@pytest.mark.slow
def test_bulk_brute_force_agreement():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n, k = int(rng.integers(1, 7)), int(rng.integers(1, 6))
        P, A = random_instance(rng, n, k)
        enumerated = list(enumerate_sequences(P, A))
        scores = np.array([score for _, score in enumerated])
        brute = np.log(np.sum(np.exp(scores - scores.max()))) + scores.max()
        assert log_partition(Tape(record=False), t(P), t(A)).item() == pytest.approx(brute, abs=1e-10)
        _, score = viterbi_decode(P, A)
        assert score == pytest.approx(scores.max(), abs=1e-10)
