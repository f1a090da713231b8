#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Sentetik derlem üreteci testleri
"""

import numpy as np
import pytest

from data.corpus import TagScheme, is_valid_tags, tags_to_chunks
from data.synthetic import generate_corpus, generate_sentence


def test_same_seed_same_corpus():
    first = generate_corpus(10, seed=4)
    second = generate_corpus(10, seed=4)
    assert [s.surfaces for s in first] == [s.surfaces for s in second]
    assert [s.gold_tags for s in first] == [s.gold_tags for s in second]


def test_different_seeds_differ():
    first = generate_corpus(10, seed=4)
    second = generate_corpus(10, seed=5)
    assert [s.surfaces for s in first] != [s.surfaces for s in second]


@pytest.mark.parametrize("scheme", [TagScheme.IOB1, TagScheme.IOB2, TagScheme.IOBES])
def test_valid_tags(scheme):
    for sentence in generate_corpus(30, seed=0, scheme=scheme):
        assert is_valid_tags(sentence.gold_tags, scheme)


def test_labels():
    labels = set()
    for sentence in generate_corpus(100, seed=0):
        labels.update(chunk.label for chunk in tags_to_chunks(sentence.gold_tags, TagScheme.IOB2))
    assert labels == {"PER", "LOC", "ORG"}


def test_chunks_cover_words():
    rng = np.random.default_rng(0)
    for _ in range(50):
        words, chunks = generate_sentence(rng)
        for chunk in chunks:
            assert 0 <= chunk.start <= chunk.end < len(words)


def test_normalize_digits():
    sentences = generate_corpus(200, seed=0)
    digits = [token for sentence in sentences for token in sentence if any(c.isdigit() for c in token.surface)]
    assert digits
    assert all(set(c for c in token.normalized if c.isdigit()) == {"0"} for token in digits)
