#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Sözlük Modülü
Sözcük, karakter ve etiket kimlik eşlemeleri; tekil (singleton) takibi.
"""

import logging
from collections import Counter

from data.corpus import split_tag, OUTSIDE
from utils.errors import DomainError

# Modül için logger
logger = logging.getLogger(__name__)

UNK_WORD = "<UNK>"
UNK_CHAR = "<UNK>"


class Vocabulary:
    """Sözcük/karakter/etiket sözlüğü

    Kimlikler 0'dan başlayarak sıkıdır; 0 numara her zaman UNK'dir (sözcük ve
    karakter için).
    """

    def __init__(self, words, chars, tags, counts=None):
        """Sözlük başlatıcı

        Args:
            words: UNK hariç sözcük listesi (kimlik sırasıyla)
            chars: UNK hariç karakter listesi
            tags: Etiket listesi
            counts: {sözcük: eğitim sıklığı}
        """
        self.id_to_word = [UNK_WORD] + [w for w in words if w != UNK_WORD]
        self.id_to_char = [UNK_CHAR] + [c for c in chars if c != UNK_CHAR]
        self.id_to_tag = list(tags)
        self.word_to_id = {w: i for i, w in enumerate(self.id_to_word)}
        self.char_to_id = {c: i for i, c in enumerate(self.id_to_char)}
        self.tag_to_id = {t: i for i, t in enumerate(self.id_to_tag)}
        self.counts = dict(counts or {})
        self.singletons = {w for w, c in self.counts.items() if c == 1 and w in self.word_to_id}

    @property
    def unk_word_id(self):
        return 0

    @property
    def unk_char_id(self):
        return 0

    @property
    def labels(self):
        """Etiket kümesindeki varlık türleri (sıralı)"""
        found = set()
        for tag in self.id_to_tag:
            prefix, label = split_tag(tag)
            if prefix != OUTSIDE:
                found.add(label)
        return sorted(found)

    def word_id(self, word):
        return self.word_to_id.get(word, 0)

    def char_id(self, char):
        return self.char_to_id.get(char, 0)

    def tag_id(self, tag):
        """Etiket kimliği

        Raises:
            DomainError: Sözlükte olmayan etiket
        """
        try:
            return self.tag_to_id[tag]
        except KeyError:
            raise DomainError(f"Bilinmeyen etiket: {tag}")

    def is_singleton(self, word):
        return word in self.singletons

    def num_words(self):
        return len(self.id_to_word)

    def num_chars(self):
        return len(self.id_to_char)

    def num_tags(self):
        return len(self.id_to_tag)

    def to_dict(self):
        """Sözlüğü sözlük (dict) olarak döndür

        Returns:
            dict: Serileştirilebilir sözlük verisi
        """
        return {
            "words": self.id_to_word[1:],
            "chars": self.id_to_char[1:],
            "tags": self.id_to_tag,
            "counts": {w: self.counts[w] for w in sorted(self.counts)},
        }

    @classmethod
    def from_dict(cls, data):
        """Sözlük verisinden nesne oluştur"""
        return cls(
            words=data.get("words", []),
            chars=data.get("chars", []),
            tags=data.get("tags", []),
            counts=data.get("counts", {}),
        )

    def __repr__(self):
        return (f"Vocabulary(words={self.num_words()}, chars={self.num_chars()}, "
                f"tags={self.num_tags()}, singletons={len(self.singletons)})")


def build_vocab(sentences, min_word_freq=1, tags=None):
    """Eğitim cümlelerinden sözlük kur

    Args:
        sentences: Sentence listesi (boş olamaz)
        min_word_freq: Bu sıklığın altındaki sözcükler UNK'ye eşlenir
        tags: Sabit etiket envanteri (None ise derlemdeki etiketler)

    Returns:
        Vocabulary: Normalize sözcük biçimleri üzerinde sözlük
    """
    if not sentences:
        raise DomainError("Sözlük kurmak için en az bir cümle gerekir")

    word_counts = Counter()
    char_set = set()
    tag_set = set()
    for sentence in sentences:
        for token in sentence:
            word_counts[token.normalized] += 1
            char_set.update(token.normalized)
            if token.gold_tag is not None:
                tag_set.add(token.gold_tag)

    kept = [w for w, c in word_counts.items() if c >= min_word_freq]
    # Sıklığa göre azalan, eşitlikte alfabetik
    kept.sort(key=lambda w: (-word_counts[w], w))
    if tags is None:
        tags = sorted(tag_set, key=lambda t: (t != OUTSIDE, t))

    vocab = Vocabulary(kept, sorted(char_set), tags, {w: word_counts[w] for w in kept})
    logger.info(f"Sözlük oluşturuldu: {vocab}")
    return vocab
