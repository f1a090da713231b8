#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Yinelemeli Ağ Modülü
Bağlı kapılı LSTM hücresi (unutma kapısı 1 − i_t) ve çift yönlü kodlayıcı.

    i_t = σ(W_xi x_t + W_hi h_{t−1} + W_ci ⊙ c_{t−1} + b_i)
    c_t = (1 − i_t) ⊙ c_{t−1} + i_t ⊙ tanh(W_xc x_t + W_hc h_{t−1} + b_c)
    o_t = σ(W_xo x_t + W_ho h_{t−1} + W_co ⊙ c_t + b_o)
    h_t = o_t ⊙ tanh(c_t)
"""

import logging

import numpy as np

from utils.errors import ShapeError, DomainError

# Modül için logger
logger = logging.getLogger(__name__)


class LSTMState:
    """LSTM durumu (h, c)"""

    __slots__ = ("h", "c")

    def __init__(self, h, c):
        self.h = h
        self.c = c


class LSTMCell:
    """Gözetleme (peephole) bağlantılı, bağlı giriş/unutma kapılı LSTM hücresi"""

    def __init__(self, params, prefix, input_dim, hidden_dim, rng,
                 full_peephole=False, random_bias=False):
        """Hücre başlatıcı

        Args:
            params: ParameterCollection
            prefix: Parametre adı öneki (ör. "tagger.fw")
            input_dim: Giriş boyutu d_in
            hidden_dim: Gizli boyut d_h
            rng: numpy.random.Generator
            full_peephole: True ise W_ci, W_co tam d_h×d_h matris
            random_bias: True ise sapmalar rastgele başlatılır (varsayılan sıfır)
        """
        self.input_dim = input_dim
        self.hidden_dim = hidden_dim
        self.full_peephole = full_peephole

        def weight(name, shape):
            return params.uniform(f"{prefix}.{name}", shape, rng)

        def bias(name):
            if random_bias:
                return params.uniform(f"{prefix}.{name}", (hidden_dim,), rng)
            return params.zeros(f"{prefix}.{name}", (hidden_dim,))

        peephole_shape = (hidden_dim, hidden_dim) if full_peephole else (hidden_dim,)

        # Giriş kapısı
        self.W_xi = weight("W_xi", (hidden_dim, input_dim))
        self.W_hi = weight("W_hi", (hidden_dim, hidden_dim))
        self.W_ci = weight("W_ci", peephole_shape)
        self.b_i = bias("b_i")
        # Aday hücre
        self.W_xc = weight("W_xc", (hidden_dim, input_dim))
        self.W_hc = weight("W_hc", (hidden_dim, hidden_dim))
        self.b_c = bias("b_c")
        # Çıkış kapısı
        self.W_xo = weight("W_xo", (hidden_dim, input_dim))
        self.W_ho = weight("W_ho", (hidden_dim, hidden_dim))
        self.W_co = weight("W_co", peephole_shape)
        self.b_o = bias("b_o")

    def parameters(self):
        return [self.W_xi, self.W_hi, self.W_ci, self.b_i,
                self.W_xc, self.W_hc, self.b_c,
                self.W_xo, self.W_ho, self.W_co, self.b_o]

    def initial_state(self, tape):
        """Sıfır başlangıç durumu (h_0 = c_0 = 0)"""
        zeros = np.zeros(self.hidden_dim)
        return LSTMState(tape.constant(zeros), tape.constant(zeros))

    def _peephole(self, tape, W, c):
        if self.full_peephole:
            return tape.matvec(W, c)
        return tape.hadamard(W, c)

    def step(self, tape, x, prev):
        """Tek zaman adımı

        Args:
            tape: Tape
            x: Giriş vektörü (d_in)
            prev: Önceki LSTMState

        Returns:
            LSTMState: Yeni durum
        """
        if x.value.shape != (self.input_dim,):
            raise ShapeError(f"LSTM girişi {self.input_dim} boyutlu olmalı, alınan {x.shape}")
        h, c = prev.h, prev.c
        i = tape.sigmoid(tape.add(tape.matvec(self.W_xi, x), tape.matvec(self.W_hi, h),
                                  self._peephole(tape, self.W_ci, c), self.b_i))
        candidate = tape.tanh(tape.add(tape.matvec(self.W_xc, x), tape.matvec(self.W_hc, h), self.b_c))
        forget = tape.sub(tape.constant(np.ones(self.hidden_dim)), i)
        c_new = tape.add(tape.hadamard(forget, c), tape.hadamard(i, candidate))
        o = tape.sigmoid(tape.add(tape.matvec(self.W_xo, x), tape.matvec(self.W_ho, h),
                                  self._peephole(tape, self.W_co, c_new), self.b_o))
        h_new = tape.hadamard(o, tape.tanh(c_new))
        return LSTMState(h_new, c_new)

    def run(self, tape, xs, state=None):
        """Diziyi baştan sona oku

        Returns:
            list: Her adımdaki LSTMState
        """
        state = state or self.initial_state(tape)
        states = []
        for x in xs:
            state = self.step(tape, x, state)
            states.append(state)
        return states


def lstm_step(tape, cell, x, prev):
    """Hücrenin tek adımı (işlevsel arayüz)"""
    return cell.step(tape, x, prev)


class StackedLSTM:
    """Üst üste LSTM katmanları; durum katman başına LSTMState listesidir"""

    def __init__(self, params, prefix, input_dim, hidden_dim, layers, rng, **cell_options):
        self.layers = []
        for layer in range(layers):
            layer_input = input_dim if layer == 0 else hidden_dim
            self.layers.append(LSTMCell(params, f"{prefix}.l{layer}", layer_input,
                                        hidden_dim, rng, **cell_options))
        self.input_dim = input_dim
        self.hidden_dim = hidden_dim

    def initial_state(self, tape):
        return [cell.initial_state(tape) for cell in self.layers]

    def step(self, tape, x, prev):
        states = []
        inp = x
        for cell, layer_prev in zip(self.layers, prev):
            state = cell.step(tape, inp, layer_prev)
            states.append(state)
            inp = state.h
        return states

    @staticmethod
    def output(states):
        """En üst katmanın gizli durumu"""
        return states[-1].h


class BiLSTM:
    """Farklı parametreli ileri ve geri LSTM çifti"""

    def __init__(self, params, prefix, input_dim, hidden_dim, rng, **cell_options):
        self.forward = LSTMCell(params, f"{prefix}.fw", input_dim, hidden_dim, rng, **cell_options)
        self.backward = LSTMCell(params, f"{prefix}.bw", input_dim, hidden_dim, rng, **cell_options)
        self.hidden_dim = hidden_dim

    @property
    def output_dim(self):
        return 2 * self.hidden_dim

    def final_states(self, tape, xs):
        """İleri ve geri yönün son gizli durumları

        Returns:
            tuple: (ileri LSTM'in x_n sonrası h'si, geri LSTM'in x_1 sonrası h'si)
        """
        if not xs:
            raise DomainError("Boş dizi kodlanamaz")
        fw = self.forward.run(tape, xs)
        bw = self.backward.run(tape, list(reversed(xs)))
        return fw[-1].h, bw[-1].h


def bilstm_encode(tape, bi, xs):
    """Her konum için [→h_t ; ←h_t] bağlam temsili

    Args:
        tape: Tape
        bi: BiLSTM
        xs: Giriş vektörleri listesi (boş olamaz)

    Returns:
        list: 2·d_h boyutlu vektörler (giriş uzunluğunda)
    """
    if not xs:
        raise DomainError("Boş dizi kodlanamaz")
    fw_states = bi.forward.run(tape, xs)
    bw_states = bi.backward.run(tape, list(reversed(xs)))
    bw_states.reverse()
    return [tape.concat(f.h, b.h) for f, b in zip(fw_states, bw_states)]
