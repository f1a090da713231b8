#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Stack-LSTM Öbekleyici Modülü
Çıktı, yığın, arabellek ve eylem geçmişi Stack-LSTM özetlerinden eylem
dağılımı; başvuru eylemleriyle eğitim ve açgözlü çözümleme.
"""

import logging

import numpy as np

from core.mathcore import Tape
from core.model import EntityModel
from core.rnn import BiLSTM
from core.stack_lstm import StackLSTM
from core.transitions import OUT, REDUCE, SHIFT, TransitionSystem
from core.wordrep import WordRepresenter
from utils.errors import DomainError

# Modül için logger
logger = logging.getLogger(__name__)

NULL_LABEL = None


class ChunkComposer:
    """Öbek temsili g(u, …, v, r_y)

    Öbek sözcükleri üzerinde BiLSTM, son durumlar etiket gömmesiyle
    birleştirilip tanh katmanıyla sabit boyuta indirgenir. OUT ile çıkan
    sözcükler için etiket gömmesi r_∅'dır (satır 0).
    """

    def __init__(self, params, prefix, input_dim, labels, settings, rng, **cell_options):
        self.output_dim = int(settings["chunk_dim"])
        self.label_dim = int(settings["label_dim"])
        self.label_to_row = {NULL_LABEL: 0}
        for i, label in enumerate(sorted(labels), 1):
            self.label_to_row[label] = i
        self.bilstm = BiLSTM(params, f"{prefix}.lstm", input_dim, self.output_dim, rng, **cell_options)
        self.label_embeddings = params.uniform(f"{prefix}.labels", (len(self.label_to_row), self.label_dim), rng)
        combined = self.bilstm.output_dim + self.label_dim
        self.W = params.uniform(f"{prefix}.W", (self.output_dim, combined), rng)
        self.b = params.zeros(f"{prefix}.b", (self.output_dim,))

    def compose(self, tape, word_vectors, label=NULL_LABEL):
        """Öbeğin tek vektörlük temsili (uzunluktan bağımsız boyut)

        Args:
            tape: Tape
            word_vectors: Öbek sözcüklerinin gömmeleri (soldan sağa, boş olamaz)
            label: Varlık türü; None ise r_∅

        Returns:
            Tensor: chunk_dim boyutlu vektör
        """
        try:
            row = self.label_to_row[label]
        except KeyError:
            raise DomainError(f"Bilinmeyen öbek etiketi: {label}")
        forward, backward = self.bilstm.final_states(tape, word_vectors)
        features = tape.concat(forward, backward, tape.index(self.label_embeddings, row))
        return tape.tanh(tape.add(tape.matvec(self.W, features), self.b))


class ChunkerState:
    """Bir çözümlemenin sembolik durumu ile Stack-LSTM imleçleri"""

    def __init__(self, tape, parser_state, word_vectors, buffer, stack, output, history):
        self.tape = tape
        self.parser = parser_state
        self.word_vectors = word_vectors
        self.buffer = buffer
        self.stack = stack
        self.output = output
        self.history = history

    @property
    def emitted(self):
        return self.parser.emitted

    def is_terminal(self):
        return self.parser.is_terminal()


class StackLSTMChunker(EntityModel):
    """Geçiş tabanlı Stack-LSTM varlık öbekleyici"""

    model_type = "stack-lstm"

    def __init__(self, vocab, settings):
        """Öbekleyici başlatıcı

        Args:
            vocab: Vocabulary (varlık türleri etiketlerinden çıkarılır)
            settings: Düz model ayarları; stack_hidden_dim, stack_layers,
                action_dim, label_dim, chunk_dim, state_hidden_dim ve sözcük
                temsili anahtarları
        """
        super().__init__(vocab, settings)
        self.system = TransitionSystem(vocab.labels)
        cell_options = {"full_peephole": settings["full_peephole"], "random_bias": settings["random_bias"]}
        hidden = int(settings["stack_hidden_dim"])
        layers = int(settings["stack_layers"])
        action_dim = int(settings["action_dim"])

        self.wordrep = WordRepresenter(self.params, vocab, settings, self.rng)
        word_dim = self.wordrep.output_dim
        self.composer = ChunkComposer(self.params, "chunker.composer", word_dim, self.system.labels,
                                      settings, self.rng, **cell_options)

        self.buffer_lstm = StackLSTM(self.params, "chunker.buffer", word_dim, hidden, layers, self.rng, **cell_options)
        self.stack_lstm = StackLSTM(self.params, "chunker.stack", word_dim, hidden, layers, self.rng, **cell_options)
        self.output_lstm = StackLSTM(self.params, "chunker.output", self.composer.output_dim, hidden, layers,
                                     self.rng, **cell_options)
        self.history_lstm = StackLSTM(self.params, "chunker.history", action_dim, hidden, layers,
                                      self.rng, **cell_options)
        self.action_embeddings = self.params.uniform("chunker.actions", (self.system.num_actions, action_dim),
                                                     self.rng)

        state_hidden = int(settings["state_hidden_dim"])
        self.W_state = self.params.uniform("chunker.state.W", (state_hidden, 4 * hidden), self.rng)
        self.b_state = self.params.zeros("chunker.state.b", (state_hidden,))
        self.W_action = self.params.uniform("chunker.scores.W", (self.system.num_actions, state_hidden), self.rng)
        self.b_action = self.params.zeros("chunker.scores.b", (self.system.num_actions,))

        logger.debug(f"Stack-LSTM oluşturuldu: {self.system.num_actions} eylem, {len(self.params)} parametre")

    # Durum yönetimi

    def start(self, tape, sentence, train=False):
        """Cümle için başlangıç durumu; arabellek sağdan sola doldurulur"""
        word_vectors = self.wordrep.sentence_embeddings(tape, sentence, train)
        parser_state = self.system.initial_state(len(sentence))
        buffer = self.buffer_lstm.start(tape)
        for index in range(len(sentence) - 1, -1, -1):
            buffer.push(word_vectors[index], index)
        return ChunkerState(tape, parser_state, word_vectors, buffer,
                            self.stack_lstm.start(tape), self.output_lstm.start(tape),
                            self.history_lstm.start(tape))

    def apply(self, state, action):
        """Eylemi hem sembolik duruma hem Stack-LSTM imleçlerine uygula"""
        tape = state.tape
        self.system.apply(state.parser, action)
        if action.kind == SHIFT:
            index = state.buffer.pop()
            state.stack.push(state.word_vectors[index], index)
        elif action.kind == OUT:
            index = state.buffer.pop()
            state.output.push(self.composer.compose(tape, [state.word_vectors[index]]))
        elif action.kind == REDUCE:
            indices = []
            while state.stack:
                indices.append(state.stack.pop())
            indices.reverse()
            chunk = self.composer.compose(tape, [state.word_vectors[i] for i in indices], action.label)
            state.output.push(chunk)
        action_row = tape.index(self.action_embeddings, self.system.action_id(action))
        state.history.push(action_row, action)
        return state

    # Eylem dağılımı

    def action_scores(self, state):
        """Tüm envanter için ham skorlar"""
        tape = state.tape
        summary = tape.concat(state.output.summary(), state.stack.summary(),
                              state.buffer.summary(), state.history.summary())
        hidden = tape.relu(tape.add(tape.matvec(self.W_state, summary), self.b_state))
        return tape.add(tape.matvec(self.W_action, hidden), self.b_action)

    def valid_log_probs(self, state):
        """Geçerli eylemler üzerinde log-softmax

        Returns:
            tuple: (geçerli eylem kimlikleri, log-olasılık tensörü)

        Raises:
            DomainError: Durum uç durum
        """
        if state.is_terminal():
            raise DomainError("Uç durumda eylem dağılımı tanımlı değil")
        valid_ids = self.system.valid_action_ids(state.parser)
        scores = self.action_scores(state)
        return valid_ids, state.tape.log_softmax(state.tape.index(scores, np.array(valid_ids)))

    def action_distribution(self, state):
        """Tüm envanter üzerinde olasılık vektörü; geçersiz eylemler 0"""
        valid_ids, log_probs = self.valid_log_probs(state)
        probs = np.zeros(self.system.num_actions)
        probs[valid_ids] = np.exp(log_probs.value)
        return probs

    # Eğitim ve çözümleme

    def train_loss(self, tape, sentence, gold_chunks, train=True):
        """Başvuru eylemlerinin negatif log-olasılıkları toplamı"""
        actions = self.system.oracle_actions(len(sentence), gold_chunks)
        state = self.start(tape, sentence, train)
        terms = []
        for action in actions:
            valid_ids, log_probs = self.valid_log_probs(state)
            position = valid_ids.index(self.system.action_id(action))
            terms.append(tape.index(log_probs, position))
            self.apply(state, action)
        return tape.scale(tape.add(*terms), -1.0)

    def loss(self, tape, sentence, train=True):
        if not sentence.has_gold():
            raise DomainError("Cümlede altın etiket yok")
        return self.train_loss(tape, sentence, sentence.gold_chunks(self.scheme), train)

    def greedy_decode(self, sentence):
        """En olası geçerli eylemi seçerek uç duruma kadar ilerle

        Eşitlikte envanter sırasında önce gelen eylem seçilir.

        Returns:
            list: LabeledChunk listesi
        """
        tape = Tape(self.params, record=False)
        state = self.start(tape, sentence, train=False)
        while not state.is_terminal():
            valid_ids, log_probs = self.valid_log_probs(state)
            best = valid_ids[int(np.argmax(log_probs.value))]
            self.apply(state, self.system.actions[best])
        return list(state.emitted)

    def predict_chunks(self, sentence):
        return self.greedy_decode(sentence)
