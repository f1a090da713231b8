#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
LSTM hücresi ve çift yönlü kodlayıcı testleri
"""

import math

import numpy as np
import pytest

from core.mathcore import ParameterCollection, Tape, gradient_relative_error, numerical_gradient
from core.rnn import BiLSTM, LSTMCell, LSTMState, StackedLSTM, bilstm_encode, lstm_step
from utils.errors import DomainError, ShapeError


CELL_PARAMETERS = ("W_xi", "W_hi", "W_ci", "b_i", "W_xc", "W_hc", "b_c", "W_xo", "W_ho", "W_co", "b_o")


def zero_cell(input_dim, hidden_dim):
    params = ParameterCollection()
    cell = LSTMCell(params, "cell", input_dim, hidden_dim, np.random.default_rng(0))
    for param in params:
        param.value[...] = 0.0
    return cell


def vectors(tape, rng, n, dim):
    return [tape.constant(rng.normal(size=dim)) for _ in range(n)]


class TestLSTMCell:
    def test_zero_parameters_zero_state(self):
        cell = zero_cell(2, 3)
        tape = Tape(record=False)
        state = lstm_step(tape, cell, tape.constant([1.0, -2.0]), cell.initial_state(tape))
        np.testing.assert_allclose(state.c.value, 0.0)
        np.testing.assert_allclose(state.h.value, 0.0)

    def test_zero_parameters_decay(self):
        cell = zero_cell(1, 1)
        tape = Tape(record=False)
        prev = LSTMState(tape.constant([0.0]), tape.constant([1.0]))
        state = cell.step(tape, tape.constant([0.7]), prev)
        np.testing.assert_allclose(state.c.value, [0.5])
        np.testing.assert_allclose(state.h.value, [0.5 * math.tanh(0.5)])
        assert state.h.value[0] == pytest.approx(0.23106, abs=1e-5)

    def test_input_dimension_mismatch(self):
        cell = zero_cell(2, 3)
        tape = Tape(record=False)
        with pytest.raises(ShapeError):
            cell.step(tape, tape.constant([1.0]), cell.initial_state(tape))

    def test_time_invariant(self, rng):
        params = ParameterCollection()
        cell = LSTMCell(params, "cell", 2, 3, rng)
        tape = Tape(params, record=False)
        x = tape.constant(rng.normal(size=2))
        prev = cell.step(tape, tape.constant(rng.normal(size=2)), cell.initial_state(tape))
        first = cell.step(tape, x, prev)
        second = cell.step(tape, x, prev)
        np.testing.assert_array_equal(first.h.value, second.h.value)

    @pytest.mark.parametrize("full_peephole", [False, True])
    def test_peephole_shapes(self, rng, full_peephole):
        params = ParameterCollection()
        cell = LSTMCell(params, "cell", 2, 3, rng, full_peephole=full_peephole)
        expected = (3, 3) if full_peephole else (3,)
        assert cell.W_ci.shape == expected
        assert cell.W_co.shape == expected

    def test_random_bias(self, rng):
        params = ParameterCollection()
        cell = LSTMCell(params, "cell", 2, 3, rng, random_bias=True)
        assert np.any(cell.b_i.value != 0.0)
        assert np.all(LSTMCell(params, "other", 2, 3, rng).b_i.value == 0.0)

    @pytest.mark.parametrize("full_peephole", [False, True])
    def test_gradients(self, full_peephole):
        rng = np.random.default_rng(11)
        params = ParameterCollection()
        cell = LSTMCell(params, "cell", 2, 3, rng, full_peephole=full_peephole, random_bias=True)
        xs = rng.normal(size=(4, 2))

        def loss(tape):
            states = cell.run(tape, [tape.constant(x) for x in xs])
            return tape.sum(tape.add(states[-1].h, states[1].c))

        tape = Tape(params)
        analytic = {name: g.copy() for name, g in tape.backward(loss(tape)).items()}
        for name, param in params.items():
            numeric = numerical_gradient(lambda: loss(Tape(params, record=False)).item(), param)
            assert gradient_relative_error(analytic[name], numeric) < 1e-5


    @pytest.mark.parametrize("seed", range(5))
    @pytest.mark.parametrize("full_peephole", [False, True])
    def test_state_bounds(self, seed, full_peephole):
        rng = np.random.default_rng(seed)
        cell = LSTMCell(ParameterCollection(), "cell", 3, 4, rng, full_peephole=full_peephole, random_bias=True)
        tape = Tape(record=False)
        state = cell.initial_state(tape)
        for _ in range(40):
            new = cell.step(tape, tape.constant(rng.normal(scale=3.0, size=3)), state)
            assert np.all(np.abs(new.h.value) < 1.0)
            bound = np.maximum(np.abs(state.c.value), 1.0)
            assert np.all(np.abs(new.c.value) <= bound + 1e-12)
            state = new


class TestStackedLSTM:
    def test_layers_chain(self, rng):
        params = ParameterCollection()
        stacked = StackedLSTM(params, "stack", 2, 3, 2, rng)
        tape = Tape(params, record=False)
        states = stacked.step(tape, tape.constant([1.0, 0.0]), stacked.initial_state(tape))
        assert len(states) == 2
        assert StackedLSTM.output(states).shape == (3,)
        assert "stack.l1.W_xi" in params
        assert params["stack.l1.W_xi"].shape == (3, 3)


class TestBiLSTM:
    def test_shapes(self, rng):
        params = ParameterCollection()
        bi = BiLSTM(params, "bi", 2, 3, rng)
        tape = Tape(params, record=False)
        outputs = bilstm_encode(tape, bi, vectors(tape, rng, 5, 2))
        assert len(outputs) == 5
        assert all(o.shape == (6,) for o in outputs)

    def test_empty_sequence(self, rng):
        params = ParameterCollection()
        bi = BiLSTM(params, "bi", 2, 3, rng)
        with pytest.raises(DomainError):
            bilstm_encode(Tape(params, record=False), bi, [])

    def test_palindrome_symmetry(self, rng):
        params = ParameterCollection()
        bi = BiLSTM(params, "bi", 2, 3, rng)
        for name in CELL_PARAMETERS:
            getattr(bi.backward, name).value[...] = getattr(bi.forward, name).value
        tape = Tape(params, record=False)
        a, b, c = (tape.constant(rng.normal(size=2)) for _ in range(3))
        outputs = bilstm_encode(tape, bi, [a, b, c, b, a])
        middle = outputs[2].value
        np.testing.assert_allclose(middle[:3], middle[3:])

    @pytest.mark.parametrize("seed", range(5))
    def test_reversed_input_with_swapped_directions(self, seed):
        rng = np.random.default_rng(seed)
        params = ParameterCollection()
        bi = BiLSTM(params, "bi", 2, 3, rng)
        swapped = BiLSTM(ParameterCollection(), "swapped", 2, 3, rng)
        for name in CELL_PARAMETERS:
            getattr(swapped.forward, name).value[...] = getattr(bi.backward, name).value
            getattr(swapped.backward, name).value[...] = getattr(bi.forward, name).value
        tape = Tape(record=False)
        xs = vectors(tape, rng, 6, 2)
        outputs = [o.value for o in bilstm_encode(tape, bi, xs)]
        mirrored = [o.value for o in bilstm_encode(tape, swapped, list(reversed(xs)))]
        for t, out in enumerate(outputs):
            expected = mirrored[len(xs) - 1 - t]
            np.testing.assert_allclose(out[:3], expected[3:])
            np.testing.assert_allclose(out[3:], expected[:3])

    def test_final_states(self, rng):
        params = ParameterCollection()
        bi = BiLSTM(params, "bi", 2, 3, rng)
        tape = Tape(params, record=False)
        xs = vectors(tape, rng, 3, 2)
        forward, backward = bi.final_states(tape, xs)
        encoded = bilstm_encode(tape, bi, xs)
        np.testing.assert_allclose(forward.value, encoded[-1].value[:3])
        np.testing.assert_allclose(backward.value, encoded[0].value[3:])
