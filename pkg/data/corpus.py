#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Derlem Modülü
CoNLL sütun biçimli derlemleri okuma/yazma, etiketleme şeması dönüşümleri
ve öbek (chunk) çıkarımı.
"""

import logging
import unicodedata
from collections import namedtuple
from enum import Enum
from pathlib import Path

import numpy as np

from utils.errors import DomainError, ParseError, SchemeValidationError

# Modül için logger
logger = logging.getLogger(__name__)

DOCSTART = "-DOCSTART-"
OUTSIDE = "O"

# 0 tabanlı, iki ucu dahil öbek: (start, end, label)
LabeledChunk = namedtuple("LabeledChunk", ["start", "end", "label"])


class TagScheme(Enum):
    """Desteklenen etiketleme şemaları"""

    IOB1 = "iob1"
    IOB2 = "iob2"
    IOBES = "iobes"

    @classmethod
    def parse(cls, value):
        """Metin veya TagScheme değerinden şema üret

        Raises:
            DomainError: Bilinmeyen şema adı
        """
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f"Bilinmeyen etiketleme şeması: {value}")

    @property
    def prefixes(self):
        if self is TagScheme.IOBES:
            return ("B", "I", "E", "S")
        return ("B", "I")


def normalize_digits(text):
    """Her Unicode ondalık rakamı '0' ile değiştir

    Args:
        text: Girdi metni

    Returns:
        str: Rakamları sıfırlanmış metin (diğer karakterler aynen korunur)
    """
    return "".join("0" if unicodedata.category(ch) == "Nd" else ch for ch in text)


class Token:
    """Tek bir sözcük: yüzey biçimi, normalize biçimi ve etiketleri"""

    def __init__(self, surface, gold_tag=None, normalize=True):
        """Sözcük başlatıcı

        Args:
            surface: Metindeki biçim
            gold_tag: Altın etiket (yoksa None)
            normalize: Rakamlar sıfıra çevrilsin mi
        """
        self.surface = surface
        self.normalized = normalize_digits(surface) if normalize else surface
        self.gold_tag = gold_tag
        self.predicted_tag = None

    def __repr__(self):
        return f"Token({self.surface!r}, {self.gold_tag!r})"


class Sentence:
    """Sözcük dizisi; eğitim ve çözümlemenin temel birimi"""

    def __init__(self, tokens):
        if not tokens:
            raise DomainError("Cümle en az bir sözcük içermelidir")
        self.tokens = list(tokens)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, index):
        return self.tokens[index]

    @property
    def words(self):
        """Normalize edilmiş sözcük biçimleri"""
        return [token.normalized for token in self.tokens]

    @property
    def surfaces(self):
        return [token.surface for token in self.tokens]

    @property
    def gold_tags(self):
        return [token.gold_tag for token in self.tokens]

    @property
    def predicted_tags(self):
        return [token.predicted_tag for token in self.tokens]

    def has_gold(self):
        return all(token.gold_tag is not None for token in self.tokens)

    def gold_chunks(self, scheme):
        """Altın etiketlerden öbek listesi"""
        return tags_to_chunks(self.gold_tags, scheme)

    @classmethod
    def from_pairs(cls, pairs, normalize=True):
        """[(sözcük, etiket), ...] listesinden cümle oluştur"""
        return cls([Token(word, tag, normalize=normalize) for word, tag in pairs])

    def __repr__(self):
        return f"Sentence({' '.join(self.surfaces)!r})"


# Etiket ayrıştırma ve şema doğrulama

def split_tag(tag):
    """'B-PER' → ('B', 'PER'); 'O' → ('O', None)

    Raises:
        SchemeValidationError: Biçimsiz etiket
    """
    if tag == OUTSIDE:
        return OUTSIDE, None
    prefix, sep, label = tag.partition("-")
    if not sep or not label or prefix not in ("B", "I", "E", "S"):
        raise SchemeValidationError(f"Biçimsiz etiket: {tag!r}")
    return prefix, label


def _pair_is_valid(prev, cur, scheme):
    """prev (None ise cümle başı) ardından cur gelebilir mi"""
    prev_prefix, prev_label = split_tag(prev) if prev is not None else (OUTSIDE, None)
    cur_prefix, cur_label = split_tag(cur)
    if scheme is TagScheme.IOB1:
        if cur_prefix == "B":
            return prev_prefix in ("B", "I") and prev_label == cur_label
        return True
    if scheme is TagScheme.IOB2:
        if cur_prefix == "I":
            return prev_prefix in ("B", "I") and prev_label == cur_label
        return True
    # IOBES: B/I'den sonra aynı etiketli I/E gelmeli, I/E yalnızca B/I'den sonra gelir
    prev_opens = prev_prefix in ("B", "I")
    cur_continues = cur_prefix in ("I", "E")
    if prev_opens or cur_continues:
        return prev_opens and cur_continues and prev_label == cur_label
    return True


def _can_end(tag, scheme):
    if scheme is TagScheme.IOBES:
        return split_tag(tag)[0] not in ("B", "I")
    return True


def validate_tags(tags, scheme):
    """Etiket dizisini şema dilbilgisine göre doğrula

    Args:
        tags: Etiket listesi
        scheme: TagScheme

    Raises:
        SchemeValidationError: İlk hatalı indeksi taşır
    """
    scheme = TagScheme.parse(scheme)
    prev = None
    for i, tag in enumerate(tags):
        try:
            prefix, _ = split_tag(tag)
        except SchemeValidationError as e:
            raise SchemeValidationError(str(e), index=i)
        if prefix != OUTSIDE and prefix not in scheme.prefixes:
            raise SchemeValidationError(f"{scheme.value} şemasında geçersiz etiket: {tag}", index=i)
        if not _pair_is_valid(prev, tag, scheme):
            raise SchemeValidationError(
                f"{scheme.value} şemasında {prev!r} ardından {tag!r} gelemez", index=i)
        prev = tag
    if tags and not _can_end(tags[-1], scheme):
        raise SchemeValidationError(
            f"{scheme.value} şemasında cümle {tags[-1]!r} ile bitemez", index=len(tags) - 1)


def is_valid_tags(tags, scheme):
    try:
        validate_tags(tags, scheme)
    except SchemeValidationError:
        return False
    return True


def validate_chunks(chunks, length):
    """Öbeklerin sıralı, çakışmasız ve cümle sınırları içinde olduğunu doğrula

    Raises:
        SchemeValidationError: İlk hatalı öbeğin listedeki indeksi ile
    """
    previous_end = -1
    for i, chunk in enumerate(chunks):
        start, end, label = chunk
        if not (0 <= start <= end < length):
            raise SchemeValidationError(f"Öbek sınır dışı: {tuple(chunk)} (uzunluk {length})", index=i)
        if start <= previous_end:
            raise SchemeValidationError(f"Öbekler çakışıyor veya sırasız: {tuple(chunk)}", index=i)
        if not label:
            raise SchemeValidationError("Öbek etiketi boş olamaz", index=i)
        previous_end = end


def tags_to_chunks(tags, scheme, strict=True):
    """Etiket dizisinden öbek listesi çıkar

    Hoşgörülü okuyucu (strict=False) şemaya aykırı I/E etiketlerini öbek
    başlangıcı sayar; conlleval ile aynı davranış.

    Args:
        tags: Etiket listesi
        scheme: TagScheme
        strict: True ise önce şema doğrulaması yapılır

    Returns:
        list: LabeledChunk listesi (sıralı)
    """
    scheme = TagScheme.parse(scheme)
    if strict:
        validate_tags(tags, scheme)

    chunks = []
    start = None
    label = None
    for i, tag in enumerate(tags):
        prefix, tag_label = split_tag(tag)
        if prefix == OUTSIDE:
            if start is not None:
                chunks.append(LabeledChunk(start, i - 1, label))
                start = None
            continue
        continues = start is not None and prefix in ("I", "E") and tag_label == label
        if not continues:
            if start is not None:
                chunks.append(LabeledChunk(start, i - 1, label))
            start, label = i, tag_label
        if prefix in ("E", "S"):
            chunks.append(LabeledChunk(start, i, label))
            start = None
    if start is not None:
        chunks.append(LabeledChunk(start, len(tags) - 1, label))
    return chunks


def chunks_to_tags(chunks, length, scheme):
    """Öbek listesinden etiket dizisi üret

    Args:
        chunks: LabeledChunk (veya üçlü) listesi
        length: Cümle uzunluğu
        scheme: Hedef TagScheme

    Returns:
        list: Etiket listesi
    """
    scheme = TagScheme.parse(scheme)
    validate_chunks(chunks, length)
    tags = [OUTSIDE] * length
    previous = None
    for start, end, label in chunks:
        if scheme is TagScheme.IOBES:
            if start == end:
                tags[start] = f"S-{label}"
            else:
                tags[start] = f"B-{label}"
                for i in range(start + 1, end):
                    tags[i] = f"I-{label}"
                tags[end] = f"E-{label}"
        elif scheme is TagScheme.IOB2:
            tags[start] = f"B-{label}"
            for i in range(start + 1, end + 1):
                tags[i] = f"I-{label}"
        else:
            # IOB1: B yalnızca aynı türden bitişik öbeği ayırmak için
            adjacent = previous is not None and previous[1] == start - 1 and previous[2] == label
            tags[start] = f"B-{label}" if adjacent else f"I-{label}"
            for i in range(start + 1, end + 1):
                tags[i] = f"I-{label}"
        previous = (start, end, label)
    return tags


def convert_scheme(tags, source, target):
    """Etiket dizisini bir şemadan diğerine çevir (öbek kümesi korunur)

    Raises:
        SchemeValidationError: Girdi kaynak şemada geçersiz
    """
    source = TagScheme.parse(source)
    target = TagScheme.parse(target)
    chunks = tags_to_chunks(tags, source, strict=True)
    return chunks_to_tags(chunks, len(tags), target)


def tag_inventory(labels, scheme):
    """Varlık türlerinden şemanın tüm etiketlerini üret ('O' başta)"""
    scheme = TagScheme.parse(scheme)
    tags = [OUTSIDE]
    for label in sorted(labels):
        tags.extend(f"{prefix}-{label}" for prefix in scheme.prefixes)
    return tags


def allowed_transitions(tags, scheme):
    """Kısıtlı çözümleme için izinli geçiş maskesi

    Args:
        tags: k etiketlik liste (indeks sırası modeldeki gibi)
        scheme: TagScheme

    Returns:
        numpy.ndarray: (k+2)×(k+2) bool matris; k başlangıç, k+1 bitiş indeksi
    """
    scheme = TagScheme.parse(scheme)
    k = len(tags)
    start, end = k, k + 1
    mask = np.zeros((k + 2, k + 2), dtype=bool)
    for j, cur in enumerate(tags):
        mask[start, j] = _pair_is_valid(None, cur, scheme)
        mask[j, end] = _can_end(cur, scheme)
        for i, prev in enumerate(tags):
            mask[i, j] = _pair_is_valid(prev, cur, scheme)
    return mask


# CoNLL okuma/yazma

def _resolve_column(index, width):
    resolved = index if index >= 0 else width + index
    return resolved if 0 <= resolved < width else None


def parse_conll(text, token_column=0, tag_column=-1, normalize=True):
    """CoNLL sütun metnini cümlelere ayrıştır

    Args:
        text: Dosya içeriği (LF veya CRLF satır sonları)
        token_column: Sözcük sütunu
        tag_column: Etiket sütunu (None ise etiket okunmaz)
        normalize: Rakamlar sıfıra çevrilsin mi

    Returns:
        list: Sentence listesi (-DOCSTART- satırları atlanır)

    Raises:
        ParseError: İstenen sütun sayısından az sütunlu satır
    """
    sentences = []
    current = []

    def flush():
        if current:
            sentences.append(Sentence(list(current)))
            current.clear()

    for line_number, line in enumerate(text.splitlines(), 1):
        columns = line.split()
        if not columns:
            flush()
            continue
        if columns[0] == DOCSTART:
            flush()
            continue
        word_idx = _resolve_column(token_column, len(columns))
        tag_idx = None
        if tag_column is not None:
            tag_idx = _resolve_column(tag_column, len(columns))
        if word_idx is None or (tag_column is not None and (tag_idx is None or tag_idx == word_idx)):
            raise ParseError(f"Beklenenden az sütun ({len(columns)}): {line.strip()!r}",
                             line_number=line_number)
        tag = columns[tag_idx] if tag_idx is not None else None
        current.append(Token(columns[word_idx], tag, normalize=normalize))
    flush()
    return sentences


def write_conll(sentences, use_predicted=False):
    """Cümleleri CoNLL metnine yaz ('sözcük etiket' satırları)

    Args:
        sentences: Sentence listesi
        use_predicted: True ise tahmin edilen etiketler yazılır

    Returns:
        str: CoNLL metni
    """
    lines = []
    for sentence in sentences:
        for token in sentence:
            tag = token.predicted_tag if use_predicted else token.gold_tag
            lines.append(token.surface if tag is None else f"{token.surface} {tag}")
        lines.append("")
    return "\n".join(lines) + ("\n" if lines else "")


def read_conll_file(path, token_column=0, tag_column=-1, normalize=True):
    """CoNLL dosyasını oku (UTF-8)

    Raises:
        FileNotFoundError: Dosya bulunamadı
        ParseError: Biçim hatası
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Dosya bulunamadı: {path}")
    with open(path, "r", encoding="utf-8") as f:
        sentences = parse_conll(f.read(), token_column, tag_column, normalize)
    logger.info(f"{len(sentences)} cümle okundu: {path}")
    return sentences


def load_corpus(path, input_scheme, target_scheme, normalize=True, token_column=0, tag_column=-1):
    """Etiketli derlemi oku, kaynak şemada doğrula ve hedef şemaya çevir

    Altın veride şema hatası onarılmaz; ilk hatalı cümle ve indeks bildirilir.

    Returns:
        list: Etiketleri hedef şemada olan Sentence listesi
    """
    input_scheme = TagScheme.parse(input_scheme)
    target_scheme = TagScheme.parse(target_scheme)
    sentences = read_conll_file(path, token_column, tag_column, normalize)
    for number, sentence in enumerate(sentences):
        try:
            converted = convert_scheme(sentence.gold_tags, input_scheme, target_scheme)
        except SchemeValidationError as e:
            error = SchemeValidationError(f"{path}, cümle {number}: {e}")
            error.index = e.index
            raise error
        for token, tag in zip(sentence, converted):
            token.gold_tag = tag
    return sentences


def write_conll_file(path, sentences, use_predicted=False):
    """Cümleleri CoNLL dosyasına yaz (UTF-8)"""
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(write_conll(sentences, use_predicted))
    logger.info(f"{len(sentences)} cümle yazıldı: {path}")
