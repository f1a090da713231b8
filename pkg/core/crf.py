#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Doğrusal Zincir CRF Modülü
Dizi skoru, bölüşüm fonksiyonu (ileri özyineleme), negatif log-olabilirlik
ve Viterbi çözümlemesi.

P n×k salım (emission) matrisidir. A (k+2)×(k+2) geçiş matrisidir; k indeksi
başlangıç, k+1 indeksi bitiş etiketidir. Başlangıca giren ve bitişten çıkan
geçişler hiçbir zaman kullanılmaz.
"""

import itertools
import logging

import numpy as np

from core.mathcore import Tape, Tensor
from utils.errors import DomainError, ShapeError

# Modül için logger
logger = logging.getLogger(__name__)

MAX_ENUMERATION = 10 ** 6


def _values(x):
    return x.value if hasattr(x, "value") else np.asarray(x, dtype=np.float64)


def _check_shapes(P, A):
    if P.ndim != 2 or P.shape[0] < 1:
        raise DomainError(f"Salım matrisi n×k (n ≥ 1) olmalı: {P.shape}")
    k = P.shape[1]
    if A.shape != (k + 2, k + 2):
        raise ShapeError(f"Geçiş matrisi {(k + 2, k + 2)} olmalı: {A.shape}")
    return P.shape[0], k


def _check_tags(tags, n, k):
    if len(tags) != n:
        raise DomainError(f"Etiket dizisi uzunluğu {len(tags)}, cümle uzunluğu {n}")
    for i, tag in enumerate(tags):
        if not 0 <= tag < k:
            raise DomainError(f"{i}. konumda etiket aralık dışı: {tag} (k={k})")


class CRFLayer:
    """Geçiş matrisi A'yı taşıyan CRF katmanı (sıfırla başlatılır)"""

    def __init__(self, params, name, num_tags):
        self.num_tags = num_tags
        self.start = num_tags
        self.end = num_tags + 1
        self.transitions = params.zeros(name, (num_tags + 2, num_tags + 2))

    def score(self, tape, P, tags):
        return sequence_score(tape, P, self.transitions, tags)

    def log_partition(self, tape, P):
        return log_partition(tape, P, self.transitions)

    def nll(self, tape, P, gold):
        return nll_loss(tape, P, self.transitions, gold)

    def decode(self, P, mask=None):
        return viterbi_decode(P, self.transitions, mask=mask)


def sequence_score(tape, P, A, tags):
    """s(X, y) = Σ A_{y_i, y_{i+1}} + Σ P_{i, y_i} (başlangıç ve bitiş dahil)

    Args:
        tape: Tape
        P: n×k salım tensörü
        A: (k+2)×(k+2) geçiş tensörü
        tags: n uzunluklu etiket indeksleri

    Returns:
        Tensor: Skaler skor
    """
    n, k = _check_shapes(P.value, A.value)
    tags = [int(t) for t in tags]
    _check_tags(tags, n, k)
    emissions = tape.index(P, (np.arange(n), np.array(tags)))
    prev = np.array([k] + tags)
    nxt = np.array(tags + [k + 1])
    transitions = tape.index(A, (prev, nxt))
    return tape.add(tape.sum(emissions), tape.sum(transitions))


def log_partition(tape, P, A):
    """Tüm k^n etiket dizisi üzerinden logadd (şemaya aykırı olanlar dahil)

    İleri özyineleme, O(n·k²).
    """
    n, k = _check_shapes(P.value, A.value)
    inner = tape.index(A, (slice(0, k), slice(0, k)))
    alpha = tape.add(tape.index(A, (k, slice(0, k))), tape.index(P, 0))
    for t in range(1, n):
        scores = tape.add(tape.outer_add(alpha, tape.index(P, t)), inner)
        alpha = tape.logsumexp(scores, axis=0)
    closing = tape.add(alpha, tape.index(A, (slice(0, k), k + 1)))
    return tape.logsumexp(closing)


def nll_loss(tape, P, A, gold):
    """−log p(y|X) = logadd − s(X, y)"""
    return tape.sub(log_partition(tape, P, A), sequence_score(tape, P, A, gold))


def viterbi_decode(P, A, mask=None):
    """En yüksek skorlu etiket dizisi

    Eşitlikte her geri işaretçi kararında en küçük etiket indeksi seçilir.

    Args:
        P: n×k salım (Tensor veya numpy)
        A: (k+2)×(k+2) geçiş (Tensor veya numpy)
        mask: İsteğe bağlı izinli geçiş maskesi (bool, A ile aynı şekil)

    Returns:
        tuple: (etiket indeksleri listesi, skor)
    """
    P = _values(P)
    A = _values(A)
    n, k = _check_shapes(P, A)
    if mask is not None:
        A = np.where(mask, A, -np.inf)
    start, end = k, k + 1

    delta = A[start, :k] + P[0]
    backpointers = []
    for t in range(1, n):
        candidates = delta[:, None] + A[:k, :k]
        best = np.argmax(candidates, axis=0)
        backpointers.append(best)
        delta = candidates[best, np.arange(k)] + P[t]
    final = delta + A[:k, end]
    last = int(np.argmax(final))
    score = float(final[last])

    path = [last]
    for best in reversed(backpointers):
        path.append(int(best[path[-1]]))
    path.reverse()
    return path, score


def score_values(P, A, tags):
    """Teypsiz, doğrudan toplamla dizi skoru"""
    P = _values(P)
    A = _values(A)
    n, k = _check_shapes(P, A)
    total = A[k, tags[0]] + A[tags[-1], k + 1]
    for i, tag in enumerate(tags):
        total += P[i, tag]
        if i + 1 < n:
            total += A[tag, tags[i + 1]]
    return float(total)


def enumerate_sequences(P, A):
    """Tüm etiket dizilerini ve skorlarını üret (küçük örnekler için)

    Raises:
        DomainError: k^n çok büyük
    """
    P = _values(P)
    A = _values(A)
    n, k = _check_shapes(P, A)
    if k ** n > MAX_ENUMERATION:
        raise DomainError(f"Sayım için örnek çok büyük: k^n = {k ** n}")
    for tags in itertools.product(range(k), repeat=n):
        yield list(tags), score_values(P, A, tags)


def marginal_check(P, A):
    """Σ_y exp(s(y) − logZ); doğru normalleştirmede 1'dir"""
    P = _values(P)
    A = _values(A)
    log_z = log_partition(Tape(record=False), Tensor(P), Tensor(A)).item()
    return float(sum(np.exp(score - log_z) for _, score in enumerate_sequences(P, A)))
