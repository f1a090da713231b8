#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Sözlük testleri
"""

import pytest

from data.corpus import Sentence, parse_conll
from data.vocabulary import Vocabulary, build_vocab
from utils.errors import DomainError

TEXT = "the O\nMars B-LOC\n\nthe O\nthe O\nU2 B-ORG\n"


@pytest.fixture
def vocab():
    return build_vocab(parse_conll(TEXT))


def test_unk_is_zero(vocab):
    assert vocab.id_to_word[0] == "<UNK>"
    assert vocab.word_id("Venus") == 0
    assert vocab.char_id("ß") == 0


def test_singletons(vocab):
    assert vocab.is_singleton("Mars")
    assert not vocab.is_singleton("the")


def test_normalized_forms(vocab):
    assert vocab.word_id("U0") != 0
    assert vocab.word_id("U2") == 0


def test_frequency_order(vocab):
    assert vocab.id_to_word[1] == "the"


def test_tags_outside_first(vocab):
    assert vocab.id_to_tag[0] == "O"
    assert vocab.labels == ["LOC", "ORG"]
    with pytest.raises(DomainError):
        vocab.tag_id("B-PER")


def test_min_word_freq():
    vocab = build_vocab(parse_conll(TEXT), min_word_freq=2)
    assert vocab.word_id("Mars") == 0
    assert vocab.word_id("the") == 1


def test_dict_round_trip(vocab):
    restored = Vocabulary.from_dict(vocab.to_dict())
    assert restored.id_to_word == vocab.id_to_word
    assert restored.id_to_char == vocab.id_to_char
    assert restored.id_to_tag == vocab.id_to_tag
    assert restored.singletons == vocab.singletons


def test_fixed_inventory():
    sentence = Sentence.from_pairs([("Mars", "S-LOC")])
    vocab = build_vocab([sentence], tags=["O", "S-LOC", "S-PER"])
    assert vocab.tag_id("S-PER") == 2


def test_empty_corpus():
    with pytest.raises(DomainError):
        build_vocab([])
