#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Sözcük Temsili Modülü
Karakter tabanlı BiLSTM temsili ile sözcük arama tablosu gömmesinin
birleştirilmesi; son gömme katmanında dropout.
"""

import logging

import numpy as np

from core.rnn import BiLSTM
from data.embeddings import load_pretrained
from utils.errors import DomainError, UsageError

# Modül için logger
logger = logging.getLogger(__name__)


class WordEmbeddingTable:
    """|V|×d_word sözcük arama tablosu"""

    def __init__(self, matrix):
        self.matrix = matrix
        self.dim = matrix.value.shape[1]
        # Dosyadan gelmeyen, rastgele başlatılmış satırlar
        self.random_rows = set(range(matrix.value.shape[0]))

    @classmethod
    def create(cls, params, name, vocab_size, dim, rng):
        return cls(params.uniform(name, (vocab_size, dim), rng))

    def set_row(self, row, vector):
        self.matrix.value[row] = vector
        self.random_rows.discard(row)

    def lookup(self, tape, row):
        return tape.index(self.matrix, int(row))


class CharEmbeddingTable:
    """|C|×d_char karakter arama tablosu (rastgele başlatılır)"""

    def __init__(self, matrix):
        self.matrix = matrix
        self.dim = matrix.value.shape[1]

    @classmethod
    def create(cls, params, name, num_chars, dim, rng):
        return cls(params.uniform(name, (num_chars, dim), rng))

    def lookup(self, tape, row):
        return tape.index(self.matrix, int(row))


class CharWordComposer:
    """Karakter BiLSTM'i: sözcüğü [ileri son durum ; geri son durum] ile temsil eder"""

    def __init__(self, params, prefix, char_dim, hidden_dim, rng, **cell_options):
        self.bilstm = BiLSTM(params, prefix, char_dim, hidden_dim, rng, **cell_options)

    @property
    def output_dim(self):
        return self.bilstm.output_dim

    def compose(self, tape, char_vectors):
        forward, backward = self.bilstm.final_states(tape, char_vectors)
        return tape.concat(forward, backward)


def char_compose(tape, word, vocab, char_table, composer):
    """Sözcüğün karakter düzeyi temsili

    Args:
        tape: Tape
        word: Sözcük (boş olamaz, büyük/küçük harf korunur)
        vocab: Vocabulary (bilinmeyen karakterler UNK'ye eşlenir)
        char_table: CharEmbeddingTable
        composer: CharWordComposer

    Returns:
        Tensor: 2·d_char_hidden boyutlu vektör
    """
    if not word:
        raise DomainError("Boş sözcüğün karakter temsili hesaplanamaz")
    chars = [char_table.lookup(tape, vocab.char_id(ch)) for ch in word]
    return composer.compose(tape, chars)


class DropoutPolicy:
    """Ters ölçekli dropout (eğitimde 1/(1−oran) ile ölçeklenir)"""

    def __init__(self, rate, rng):
        if not 0.0 <= rate < 1.0:
            raise UsageError(f"Dropout oranı [0, 1) aralığında olmalı: {rate}")
        self.rate = float(rate)
        self.rng = rng

    def mask(self, size):
        if self.rate == 0.0:
            return np.ones(size)
        keep = self.rng.random(size) >= self.rate
        return keep / (1.0 - self.rate)

    def apply(self, tape, x, train):
        if not train or self.rate == 0.0:
            return x
        return tape.hadamard(x, tape.constant(self.mask(x.value.shape[0])))


class WordRepresenter:
    """Her sözcük için son giriş gömmesini üretir"""

    def __init__(self, params, vocab, config, rng, prefix="wordrep"):
        """Temsilci başlatıcı

        Args:
            params: ParameterCollection
            vocab: Vocabulary
            config: Model yapılandırması (word_dim, char_dim, char_hidden_dim,
                use_char, dropout, singleton_unk_prob, pretrained)
            rng: numpy.random.Generator (başlatma, dropout ve UNK değişimi)
            prefix: Parametre adı öneki
        """
        self.vocab = vocab
        self.rng = rng
        self.use_char = bool(config["use_char"])
        self.singleton_unk_prob = float(config["singleton_unk_prob"])
        cell_options = {"full_peephole": config["full_peephole"], "random_bias": config["random_bias"]}

        self.words = WordEmbeddingTable.create(params, f"{prefix}.word_embeddings",
                                               vocab.num_words(), config["word_dim"], rng)
        if config.get("pretrained"):
            load_pretrained(config["pretrained"], vocab, self.words)

        self.chars = None
        self.composer = None
        if self.use_char:
            self.chars = CharEmbeddingTable.create(params, f"{prefix}.char_embeddings",
                                                   vocab.num_chars(), config["char_dim"], rng)
            self.composer = CharWordComposer(params, f"{prefix}.char_lstm", config["char_dim"],
                                             config["char_hidden_dim"], rng, **cell_options)
        self.dropout = DropoutPolicy(config["dropout"], rng)

    @property
    def output_dim(self):
        char_part = self.composer.output_dim if self.use_char else 0
        return char_part + self.words.dim

    def word_id_for(self, word, train):
        """Arama kimliği; eğitimde tekil sözcükler olasılıkla UNK'ye çevrilir"""
        if train and self.singleton_unk_prob > 0.0 and self.vocab.is_singleton(word):
            if self.rng.random() < self.singleton_unk_prob:
                return self.vocab.unk_word_id
        return self.vocab.word_id(word)

    def token_embedding(self, tape, token, train=False):
        """Sözcüğün son gömmesi: [karakter temsili ; sözcük gömmesi], eğitimde dropout

        Args:
            tape: Tape
            token: Token
            train: Eğitim modu

        Returns:
            Tensor: output_dim boyutlu vektör
        """
        word_vector = self.words.lookup(tape, self.word_id_for(token.normalized, train))
        if self.use_char:
            char_vector = char_compose(tape, token.normalized, self.vocab, self.chars, self.composer)
            embedding = tape.concat(char_vector, word_vector)
        else:
            embedding = word_vector
        return self.dropout.apply(tape, embedding, train)

    def sentence_embeddings(self, tape, sentence, train=False):
        return [self.token_embedding(tape, token, train) for token in sentence]


def token_embedding(tape, representer, token, train=False):
    """İşlevsel arayüz: WordRepresenter.token_embedding"""
    return representer.token_embedding(tape, token, train)
