#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Test Düzenekleri
Testlerde ortak kullanılan küçük boyutlu ayarlar, örnek cümleler ve türev
denetimi yardımcıları.
"""

import numpy as np
import pytest

from core.mathcore import Tape, gradient_relative_error, numerical_gradient
from data.corpus import Sentence, TagScheme, tag_inventory
from data.synthetic import generate_corpus
from data.vocabulary import build_vocab
from utils.config import load_config, model_settings

SMALL_OVERRIDES = {
    "embeddings.word_dim": 4,
    "embeddings.char_dim": 3,
    "embeddings.char_hidden_dim": 2,
    "embeddings.singleton_unk_prob": 0.0,
    "network.hidden_dim": 3,
    "network.tagger_hidden_dim": 3,
    "network.stack_hidden_dim": 3,
    "network.stack_layers": 2,
    "network.action_dim": 2,
    "network.label_dim": 2,
    "network.chunk_dim": 3,
    "network.state_hidden_dim": 4,
    "training.dropout": 0.0,
}


def small_settings(model="lstm-crf", **extra):
    """Hızlı testler için küçük boyutlu düz model ayarları"""
    overrides = dict(SMALL_OVERRIDES)
    overrides["model"] = model
    settings = model_settings(load_config(overrides=overrides))
    settings.update(extra)
    return settings


def mars_sentence(scheme=TagScheme.IOBES):
    """"Mark Watney visited Mars" örnek cümlesi"""
    tags = {
        TagScheme.IOBES: ["B-PER", "E-PER", "O", "S-LOC"],
        TagScheme.IOB2: ["B-PER", "I-PER", "O", "B-LOC"],
        TagScheme.IOB1: ["I-PER", "I-PER", "O", "I-LOC"],
    }[scheme]
    return Sentence.from_pairs(zip(["Mark", "Watney", "visited", "Mars"], tags))


def vocab_for(sentences, scheme=TagScheme.IOBES):
    """Derlemdeki varlık türlerinden tam etiket envanterli sözlük"""
    labels = {chunk.label for sentence in sentences for chunk in sentence.gold_chunks(scheme)}
    return build_vocab(sentences, tags=tag_inventory(labels, scheme))


def check_model_gradients(model, sentence, tolerance=1e-4):
    """Tüm parametrelerde analitik ve sayısal türevlerin en büyük göreli hatası"""
    model.params.zero_grad()
    tape = Tape(model.params)
    loss = model.loss(tape, sentence, train=False)
    analytic = {name: grad.copy() for name, grad in tape.backward(loss).items()}
    model.params.zero_grad()

    worst = 0.0
    for name, param in model.params.items():
        numeric = numerical_gradient(lambda: model.loss_value(sentence), param)
        error = gradient_relative_error(analytic[name], numeric)
        assert error < tolerance, f"{name}: göreli hata {error:.2e}"
        worst = max(worst, error)
    return worst


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def sentence():
    return mars_sentence()


@pytest.fixture
def synthetic_corpus():
    return generate_corpus(12, seed=3, scheme=TagScheme.IOBES)
