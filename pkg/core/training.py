#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Eğitim Modülü
Örnek başına SGD, küresel norm ile türev kırpma, dönem yönetimi ve geliştirme
kümesindeki F1'e göre en iyi kontrol noktasının seçimi.
"""

import json
import logging
import math

import numpy as np
from tqdm import tqdm

from core.evaluation import evaluate_model
from core.mathcore import Tape
from utils.errors import UsageError

# Modül için logger
logger = logging.getLogger(__name__)


class SGDConfig:
    """SGD ayarları"""

    def __init__(self, learning_rate=0.01, clip_threshold=5.0, epochs=100, shuffle_seed=1):
        """Ayar başlatıcı

        Raises:
            UsageError: Öğrenme oranı, kırpma eşiği veya dönem sayısı pozitif değil
        """
        if not learning_rate > 0:
            raise UsageError(f"Öğrenme oranı pozitif olmalı: {learning_rate}")
        if not clip_threshold > 0:
            raise UsageError(f"Kırpma eşiği pozitif olmalı: {clip_threshold}")
        if int(epochs) < 1:
            raise UsageError(f"Dönem sayısı pozitif olmalı: {epochs}")
        self.learning_rate = float(learning_rate)
        self.clip_threshold = float(clip_threshold)
        self.epochs = int(epochs)
        self.shuffle_seed = shuffle_seed

    @classmethod
    def from_config(cls, config):
        """Yapılandırmanın 'training' bölümünden ayar oluştur"""
        training = config["training"]
        seed = training.get("shuffle_seed")
        return cls(
            learning_rate=training["learning_rate"],
            clip_threshold=training["clip_threshold"],
            epochs=training["epochs"],
            shuffle_seed=config["seed"] if seed is None else seed,
        )

    def to_dict(self):
        return {
            "learning_rate": self.learning_rate,
            "clip_threshold": self.clip_threshold,
            "epochs": self.epochs,
            "shuffle_seed": self.shuffle_seed,
        }


def global_norm(grads):
    """Türevlerin birleşik L2 normu"""
    return math.sqrt(sum(float(np.sum(g * g)) for g in grads.values()))


def clip_gradients(grads, threshold):
    """Küresel norm eşiği aşarsa tüm türevleri threshold/norm ile ölçekle

    Args:
        grads: {ad: numpy dizisi} (yerinde ölçeklenir)
        threshold: Pozitif eşik

    Returns:
        dict: Aynı türev sözlüğü
    """
    if not threshold > 0:
        raise UsageError(f"Kırpma eşiği pozitif olmalı: {threshold}")
    norm = global_norm(grads)
    if norm > threshold:
        factor = threshold / norm
        for g in grads.values():
            g *= factor
    return grads


def sgd_step(params, grads, learning_rate):
    """p ← p − lr·g, ardından türevler sıfırlanır"""
    for name, param in params.items():
        grad = grads.get(name)
        if grad is not None:
            param.value -= learning_rate * grad
    params.zero_grad()
    return params


class EpochRecord:
    """Tek dönemin özeti"""

    def __init__(self, epoch, loss, precision, recall, f1):
        self.epoch = epoch
        self.loss = loss
        self.precision = precision
        self.recall = recall
        self.f1 = f1

    def to_dict(self):
        return {
            "epoch": self.epoch,
            "loss": self.loss,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


class TrainReport:
    """Dönem kayıtları ve en iyi kontrol noktası"""

    def __init__(self):
        self.epochs = []
        self.best_epoch = None
        self.best_f1 = None

    def add(self, record):
        self.epochs.append(record)
        if self.best_f1 is None or record.f1 > self.best_f1:
            self.best_f1 = record.f1
            self.best_epoch = record.epoch
            return True
        return False

    @property
    def losses(self):
        return [record.loss for record in self.epochs]

    def to_dict(self):
        return {
            "epochs": [record.to_dict() for record in self.epochs],
            "best_epoch": self.best_epoch,
            "best_f1": self.best_f1,
        }

    def to_jsonl(self):
        """Dönem başına bir JSON satırı ve en sonda özet satırı"""
        lines = [json.dumps(record.to_dict(), sort_keys=True) for record in self.epochs]
        lines.append(json.dumps({"best_epoch": self.best_epoch, "best_f1": self.best_f1}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def save(self, path):
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_jsonl())
        logger.info(f"Eğitim raporu kaydedildi: {path}")


class Trainer:
    """Örnek başına SGD eğitim döngüsü"""

    def __init__(self, sgd_config, progress=False, on_best=None):
        """Eğitici başlatıcı

        Args:
            sgd_config: SGDConfig
            progress: tqdm ilerleme çubuğu gösterilsin mi
            on_best: En iyi dönemde çağrılır: on_best(model, record)
        """
        self.config = sgd_config
        self.progress = progress
        self.on_best = on_best

    def train_example(self, model, sentence):
        """Tek örnek üzerinde kayıp, geri yayılım, kırpma ve güncelleme"""
        tape = Tape(model.params)
        loss = model.loss(tape, sentence, train=True)
        grads = tape.backward(loss)
        clip_gradients(grads, self.config.clip_threshold)
        sgd_step(model.params, grads, self.config.learning_rate)
        return loss.item()

    def train(self, model, train_set, dev_set=None):
        """Modeli eğit; sonunda en iyi dönemin parametreleri geri yüklenir

        Args:
            model: EntityModel
            train_set: Altın etiketli Sentence listesi (boş olamaz)
            dev_set: Geliştirme kümesi (None ise eğitim kümesiyle seçilir)

        Returns:
            TrainReport: Dönem kayıtları

        Raises:
            UsageError: Eğitim kümesi boş
        """
        if not train_set:
            raise UsageError("Eğitim kümesi boş")
        if not dev_set:
            logger.warning("Geliştirme kümesi verilmedi, kontrol noktası eğitim kümesiyle seçilecek")
            dev_set = train_set

        rng = np.random.default_rng(self.config.shuffle_seed)
        report = TrainReport()
        best_state = None
        logger.info(f"Eğitim başlıyor: {model.model_type}, {len(train_set)} cümle, "
                    f"{self.config.epochs} dönem")

        for epoch in range(1, self.config.epochs + 1):
            order = rng.permutation(len(train_set))
            total = 0.0
            bar = tqdm(order, desc=f"Dönem {epoch}", unit="cümle", leave=False, disable=not self.progress)
            for index in bar:
                total += self.train_example(model, train_set[int(index)])
            mean_loss = total / len(train_set)

            scores = evaluate_model(model, dev_set)
            record = EpochRecord(epoch, mean_loss, scores.precision, scores.recall, scores.f1)
            improved = report.add(record)
            logger.info(f"Dönem {epoch}: kayıp={mean_loss:.4f} P={scores.precision:.2f} "
                        f"R={scores.recall:.2f} F1={scores.f1:.2f}{' (en iyi)' if improved else ''}")
            if improved:
                best_state = model.params.state_dict()
                if self.on_best is not None:
                    self.on_best(model, record)

        model.params.load_state_dict(best_state)
        logger.info(f"Eğitim tamamlandı: en iyi dönem {report.best_epoch}, F1={report.best_f1:.2f}")
        return report


def train(model, train_set, dev_set, config, progress=False, on_best=None):
    """İşlevsel arayüz: yapılandırmadan SGDConfig kurup eğit"""
    trainer = Trainer(SGDConfig.from_config(config), progress=progress, on_best=on_best)
    return trainer.train(model, train_set, dev_set)
