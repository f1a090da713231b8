#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Önceden Eğitilmiş Gömme Yükleyici
Metin biçimli sözcük vektörü dosyalarını (isteğe bağlı "sayı boyut" başlığı)
sözlüğe göre arama tablosuna aktarır.
"""

import logging
from pathlib import Path

import numpy as np
from tqdm import tqdm

from utils.errors import ParseError

# Modül için logger
logger = logging.getLogger(__name__)


def _parse_header(parts):
    """İki tamsayıdan oluşan satır başlık mıdır"""
    if len(parts) != 2:
        return None
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        return None


def read_vectors(path, dim, wanted, verbose=False):
    """Dosyadan yalnızca istenen sözcüklerin vektörlerini oku

    Args:
        path: Gömme dosyası yolu
        dim: Beklenen boyut
        wanted: Aranan sözcük kümesi
        verbose: İlerleme çubuğu gösterilsin mi

    Returns:
        dict: {sözcük: numpy vektörü}

    Raises:
        FileNotFoundError: Dosya yok
        ParseError: Bozuk sayı, tutarsız boyut veya başlık/boyut uyuşmazlığı
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Gömme dosyası bulunamadı: {path}")

    vectors = {}
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(tqdm(f, desc="Gömmeler", disable=not verbose), 1):
            parts = line.rstrip().split()
            if not parts:
                continue
            if line_number == 1:
                header = _parse_header(parts)
                if header is not None:
                    if header[1] != dim:
                        raise ParseError(
                            f"Dosya boyutu {header[1]}, yapılandırılan boyut {dim}",
                            line_number=line_number)
                    continue
            word, values = parts[0], parts[1:]
            if len(values) != dim:
                raise ParseError(f"{word!r} için {len(values)} değer var, {dim} bekleniyor",
                                 line_number=line_number)
            try:
                vector = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError:
                raise ParseError(f"{word!r} satırında geçersiz sayı", line_number=line_number)
            if word in wanted and word not in vectors:
                vectors[word] = vector
    return vectors


def load_pretrained(path, vocab, table, verbose=False):
    """Sözlükteki sözcükler için dosyadaki vektörleri tabloya yaz

    Önce büyük/küçük harf duyarlı eşleşme aranır, bulunamazsa sözcüğün küçük
    harfli biçimi denenir. Bulunamayan satırlar rastgele başlatılmış kalır ve
    table.random_rows içinde işaretlidir.

    Args:
        path: Gömme dosyası yolu
        vocab: Vocabulary
        table: WordEmbeddingTable (boyutu dosya boyutuyla aynı olmalı)
        verbose: İlerleme çubuğu

    Returns:
        WordEmbeddingTable: Güncellenmiş tablo (eğitimde ince ayar yapılır)
    """
    lowered = {}
    for word, word_id in vocab.word_to_id.items():
        if word_id == vocab.unk_word_id:
            continue
        lowered.setdefault(word.lower(), []).append(word_id)
    wanted = set(vocab.word_to_id) | set(lowered)
    vectors = read_vectors(path, table.dim, wanted, verbose=verbose)

    exact = 0
    fallback = 0
    for word, word_id in vocab.word_to_id.items():
        if word_id == vocab.unk_word_id:
            continue
        if word in vectors:
            table.set_row(word_id, vectors[word])
            exact += 1
        elif word.lower() in vectors:
            table.set_row(word_id, vectors[word.lower()])
            fallback += 1

    total = vocab.num_words() - 1
    logger.info(f"Önceden eğitilmiş gömmeler yüklendi: {exact} birebir, {fallback} küçük harf eşleşmesi, "
                f"{total - exact - fallback} rastgele (toplam {total})")
    return table
