#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Değerlendirme Modülü
Varlık düzeyinde kesinlik, duyarlılık ve F1 (tam aralık ve etiket eşleşmesi,
CoNLL ortak görev anlamında).
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from data.corpus import tags_to_chunks
from utils.errors import UsageError

# Modül için logger
logger = logging.getLogger(__name__)

OVERALL = "overall"


def _percent(numerator, denominator):
    if denominator == 0:
        return 0.0
    return 100.0 * numerator / denominator


def _f1(precision, recall):
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


class LabelScore:
    """Tek etiket (veya toplam) için sayımlar"""

    def __init__(self, true_positives=0, predicted=0, gold=0):
        self.true_positives = true_positives
        self.predicted = predicted
        self.gold = gold

    @property
    def precision(self):
        return round(_percent(self.true_positives, self.predicted), 2)

    @property
    def recall(self):
        return round(_percent(self.true_positives, self.gold), 2)

    @property
    def f1(self):
        precision = _percent(self.true_positives, self.predicted)
        recall = _percent(self.true_positives, self.gold)
        return round(_f1(precision, recall), 2)

    def to_dict(self):
        return {
            "true_positives": self.true_positives,
            "predicted": self.predicted,
            "gold": self.gold,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


class EvalReport:
    """Etiket başına ve toplam değerlendirme raporu

    Toplam sayımlar etiket sayımlarının toplamıdır.
    """

    def __init__(self, true_positives, predicted, gold):
        """Rapor başlatıcı

        Args:
            true_positives: Counter {etiket: doğru tahmin}
            predicted: Counter {etiket: tahmin sayısı}
            gold: Counter {etiket: altın sayısı}
        """
        labels = sorted(set(true_positives) | set(predicted) | set(gold))
        self.labels = {
            label: LabelScore(true_positives[label], predicted[label], gold[label])
            for label in labels
        }
        self.overall = LabelScore(sum(true_positives.values()), sum(predicted.values()),
                                  sum(gold.values()))
        self.sentences = 0

    @property
    def precision(self):
        return self.overall.precision

    @property
    def recall(self):
        return self.overall.recall

    @property
    def f1(self):
        return self.overall.f1

    def to_dict(self):
        """Raporu sözlük olarak döndür"""
        return {
            "sentences": self.sentences,
            OVERALL: self.overall.to_dict(),
            "labels": {label: score.to_dict() for label, score in self.labels.items()},
        }

    def format_table(self):
        """Hizalı metin tablosu (son satır toplam)"""
        rows = [(label, score) for label, score in self.labels.items()] + [(OVERALL, self.overall)]
        width = max([len("etiket")] + [len(label) for label, _ in rows])
        header = (f"{'etiket':<{width}}  {'dogru':>6}  {'tahmin':>6}  {'altin':>6}  "
                  f"{'kesinlik':>8}  {'duyarlilik':>10}  {'F1':>6}")
        lines = [header]
        for label, score in rows:
            lines.append(f"{label:<{width}}  {score.true_positives:>6}  {score.predicted:>6}  "
                         f"{score.gold:>6}  {score.precision:>8.2f}  {score.recall:>10.2f}  "
                         f"{score.f1:>6.2f}")
        return "\n".join(lines) + "\n"

    def format_kv(self):
        """Satır başına bir 'anahtar=değer' kaydı (test düzenekleri için)"""
        lines = [f"sentences={self.sentences}"]
        rows = [(OVERALL, self.overall)] + [(f"label.{label}", score) for label, score in self.labels.items()]
        for prefix, score in rows:
            lines.append(f"{prefix}.true_positives={score.true_positives}")
            lines.append(f"{prefix}.predicted={score.predicted}")
            lines.append(f"{prefix}.gold={score.gold}")
            lines.append(f"{prefix}.precision={score.precision:.2f}")
            lines.append(f"{prefix}.recall={score.recall:.2f}")
            lines.append(f"{prefix}.f1={score.f1:.2f}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"EvalReport(P={self.precision:.2f}, R={self.recall:.2f}, F1={self.f1:.2f})"


def evaluate(pred, gold):
    """Öbek listelerini cümle cümle karşılaştır

    Bir tahmin, aynı cümlede (başlangıç, bitiş, etiket) üçlüsü aynı olan bir
    altın öbek varsa doğrudur; her altın öbek en fazla bir kez eşleşir.

    Args:
        pred: Cümle başına öbek listeleri
        gold: Cümle başına öbek listeleri

    Returns:
        EvalReport: Değerlendirme raporu

    Raises:
        UsageError: Liste uzunlukları farklı
    """
    if len(pred) != len(gold):
        raise UsageError(f"Tahmin ({len(pred)}) ve altın ({len(gold)}) cümle sayıları farklı")

    true_positives = Counter()
    predicted = Counter()
    gold_counts = Counter()
    for pred_chunks, gold_chunks in zip(pred, gold):
        remaining = Counter(tuple(chunk) for chunk in gold_chunks)
        for chunk in pred_chunks:
            chunk = tuple(chunk)
            predicted[chunk[2]] += 1
            if remaining[chunk] > 0:
                remaining[chunk] -= 1
                true_positives[chunk[2]] += 1
        for chunk in gold_chunks:
            gold_counts[chunk[2]] += 1

    report = EvalReport(true_positives, predicted, gold_counts)
    report.sentences = len(gold)
    logger.debug(f"Değerlendirme: {report}")
    return report


def evaluate_tags(pred_tags, gold_tags, scheme):
    """Etiket dizilerinden değerlendirme

    Args:
        pred_tags: Cümle başına tahmin etiket listeleri
        gold_tags: Cümle başına altın etiket listeleri
        scheme: TagScheme (iki taraf da şemada geçerli olmalı)

    Raises:
        UsageError: Cümle sayısı veya bir cümlenin uzunluğu farklı
        SchemeValidationError: Geçersiz etiket dizisi
    """
    if len(pred_tags) != len(gold_tags):
        raise UsageError(f"Tahmin ({len(pred_tags)}) ve altın ({len(gold_tags)}) cümle sayıları farklı")
    for i, (pred, gold) in enumerate(zip(pred_tags, gold_tags)):
        if len(pred) != len(gold):
            raise UsageError(f"{i}. cümlede uzunluklar farklı: {len(pred)} != {len(gold)}")
    pred_chunks = [tags_to_chunks(tags, scheme) for tags in pred_tags]
    gold_chunks = [tags_to_chunks(tags, scheme) for tags in gold_tags]
    return evaluate(pred_chunks, gold_chunks)


def evaluate_model(model, sentences, workers=1):
    """Modeli altın etiketli cümleler üzerinde değerlendir"""
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pred = list(pool.map(model.predict_chunks, sentences))
    else:
        pred = [model.predict_chunks(sentence) for sentence in sentences]
    gold = [sentence.gold_chunks(model.scheme) for sentence in sentences]
    return evaluate(pred, gold)
