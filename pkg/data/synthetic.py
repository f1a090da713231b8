#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Sentetik Derlem Üreteci
Kalıplar ve ad listelerinden PER/LOC/ORG öbekli İngilizce cümleler üretir.
Gerçek derlemler olmadan uçtan uca eğitim ve değerlendirme denemeleri için.
"""

import logging

import numpy as np

from data.corpus import LabeledChunk, Sentence, TagScheme, Token, chunks_to_tags

# Modül için logger
logger = logging.getLogger(__name__)

FIRST_NAMES = [
    "John", "Mary", "Peter", "Anna", "David", "Laura", "Michael", "Sarah", "James", "Emma",
    "Robert", "Julia", "Thomas", "Clara", "Daniel", "Sophie", "Mark", "Helen", "Paul", "Alice",
    "George", "Maria", "Henry", "Nora", "Oliver", "Grace", "Victor", "Irene", "Simon", "Lucy",
]
LAST_NAMES = [
    "Smith", "Watney", "Johnson", "Brown", "Miller", "Davis", "Wilson", "Moore", "Taylor", "Clark",
    "Lewis", "Walker", "Young", "Allen", "King", "Wright", "Scott", "Green", "Baker", "Adams",
    "Nelson", "Carter", "Mitchell", "Roberts", "Turner", "Phillips", "Campbell", "Parker", "Evans", "Collins",
]
LOCATIONS = [
    ["Mars"], ["London"], ["Paris"], ["Berlin"], ["Madrid"], ["Rome"], ["Vienna"], ["Prague"],
    ["Tokyo"], ["Cairo"], ["Lisbon"], ["Dublin"], ["Oslo"], ["Athens"], ["Warsaw"], ["Brussels"],
    ["Germany"], ["France"], ["Spain"], ["Italy"], ["Brazil"], ["Canada"], ["Egypt"], ["Norway"],
    ["New", "York"], ["Los", "Angeles"], ["Hong", "Kong"], ["South", "Africa"], ["New", "Zealand"],
    ["Buenos", "Aires"], ["Rio", "de", "Janeiro"], ["United", "States"],
]
ORG_STEMS = [
    "Acme", "Globex", "Initech", "Umbrella", "Stark", "Wayne", "Vertex", "Nimbus", "Orion", "Helix",
    "Apex", "Zenith", "Summit", "Pioneer", "Atlas", "Falcon", "Nova", "Quantum", "Sterling", "Titan",
]
ORG_SUFFIXES = ["Corp", "Industries", "Bank", "Group", "Airlines", "Motors", "Systems", "Holdings"]
ORG_STANDALONE = [["NASA"], ["Reuters"], ["UNESCO"], ["Interpol"], ["FIFA"], ["United", "Nations"]]

# {PER}, {LOC}, {ORG} yer tutucuları; diğer sözcükler olduğu gibi kalır
TEMPLATES = [
    "{PER} visited {LOC} .",
    "{PER} works for {ORG} in {LOC} .",
    "{ORG} announced that {PER} will leave the company .",
    "In 1995 {PER} moved from {LOC} to {LOC} .",
    "{PER} met {PER} at the {ORG} office .",
    "Shares of {ORG} rose 3.5 percent on Monday .",
    "The meeting in {LOC} was chaired by {PER} .",
    "{ORG} opened a new factory near {LOC} last year .",
    "According to {ORG} , the storm hit {LOC} on Tuesday .",
    "{PER} said the deal with {ORG} was signed in {LOC} .",
    "Officials from {LOC} and {LOC} agreed on a new treaty .",
    "{PER} , a spokesman for {ORG} , declined to comment .",
    "The weather was cold and the streets were quiet .",
    "Prices fell 12 percent in the second quarter .",
    "{PER} won the final against {PER} in {LOC} .",
    "{ORG} hired {PER} as chief executive .",
    "Police in {LOC} arrested two men on Friday .",
    "The report by {ORG} was published in {LOC} .",
    "{PER} flew to {LOC} to meet investors from {ORG} .",
    "Nobody expected the market to recover so quickly .",
]


def _person(rng):
    first = FIRST_NAMES[rng.integers(len(FIRST_NAMES))]
    if rng.random() < 0.8:
        return [first, LAST_NAMES[rng.integers(len(LAST_NAMES))]]
    return [first]


def _location(rng):
    return list(LOCATIONS[rng.integers(len(LOCATIONS))])


def _organization(rng):
    if rng.random() < 0.3:
        return list(ORG_STANDALONE[rng.integers(len(ORG_STANDALONE))])
    return [ORG_STEMS[rng.integers(len(ORG_STEMS))], ORG_SUFFIXES[rng.integers(len(ORG_SUFFIXES))]]


FILLERS = {"PER": _person, "LOC": _location, "ORG": _organization}


def generate_sentence(rng):
    """Rastgele kalıptan sözcük listesi ve öbekler

    Returns:
        tuple: (sözcük listesi, LabeledChunk listesi)
    """
    template = TEMPLATES[rng.integers(len(TEMPLATES))]
    words = []
    chunks = []
    for piece in template.split():
        if piece.startswith("{") and piece.endswith("}"):
            label = piece[1:-1]
            span = FILLERS[label](rng)
            chunks.append(LabeledChunk(len(words), len(words) + len(span) - 1, label))
            words.extend(span)
        else:
            words.append(piece)
    return words, chunks


def generate_corpus(n_sentences, seed, scheme=TagScheme.IOB2, normalize=True):
    """Sentetik altın etiketli derlem

    Args:
        n_sentences: Cümle sayısı
        seed: Üreteç tohumu (aynı tohum aynı derlemi verir)
        scheme: Altın etiketlerin şeması
        normalize: Rakam normalleştirmesi

    Returns:
        list: Sentence listesi
    """
    rng = np.random.default_rng(seed)
    sentences = []
    for _ in range(n_sentences):
        words, chunks = generate_sentence(rng)
        tags = chunks_to_tags(chunks, len(words), scheme)
        sentences.append(Sentence([Token(word, tag, normalize=normalize) for word, tag in zip(words, tags)]))
    logger.debug(f"Sentetik derlem üretildi: {n_sentences} cümle (tohum {seed})")
    return sentences
