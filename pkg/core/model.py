#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Ortak Model Sınıfı
İki modelin (LSTM-CRF ve Stack-LSTM) eğitim, çözümleme ve arşivleme için
paylaştığı arayüz.
"""

import importlib
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from core.mathcore import ParameterCollection, Tape
from data.corpus import TagScheme, chunks_to_tags
from utils.errors import UsageError

# Modül için logger
logger = logging.getLogger(__name__)

# Model türü → tanımlandığı modül ve sınıf adı
MODEL_CLASSES = {
    "lstm-crf": ("core.crf_tagger", "CRFTagger"),
    "stack-lstm": ("core.transition_chunker", "StackLSTMChunker"),
}


class EntityModel:
    """Varlık tanıma modelleri için temel sınıf

    Alt sınıflar loss() ve predict_chunks() yöntemlerini tanımlar.
    """

    model_type = None
    registry = {}

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls.model_type:
            EntityModel.registry[cls.model_type] = cls

    def __init__(self, vocab, settings):
        """Model başlatıcı

        Args:
            vocab: Vocabulary
            settings: Düz model ayarları (utils.config.model_settings)
        """
        self.vocab = vocab
        self.settings = dict(settings)
        self.scheme = TagScheme.parse(settings["scheme"])
        self.params = ParameterCollection()
        # Başlatma, dropout maskeleri ve UNK değişimi aynı üreteçten beslenir
        self.rng = np.random.default_rng(settings["seed"])

    def loss(self, tape, sentence, train=True):
        """Tek cümle için skaler kayıp düğümü"""
        raise NotImplementedError

    def predict_chunks(self, sentence):
        """Dondurulmuş parametrelerle öbek tahmini"""
        raise NotImplementedError

    def predict_tags(self, sentence):
        """Model şemasında geçerli tahmin etiketleri"""
        chunks = self.predict_chunks(sentence)
        return chunks_to_tags(chunks, len(sentence), self.scheme)

    def loss_value(self, sentence):
        """Dropout'suz, kayıtsız kayıp değeri"""
        return self.loss(Tape(self.params, record=False), sentence, train=False).item()

    def tag_sentences(self, sentences, workers=1):
        """Cümlelerin predicted_tag alanlarını doldur (sıra korunur)

        Args:
            sentences: Sentence listesi
            workers: İş parçacığı sayısı (parametreler dondurulmuş olmalı)

        Returns:
            list: Her cümle için tahmin edilen etiket listesi
        """
        if workers > 1 and len(sentences) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                predictions = list(pool.map(self.predict_tags, sentences))
        else:
            predictions = [self.predict_tags(sentence) for sentence in sentences]
        for sentence, tags in zip(sentences, predictions):
            for token, tag in zip(sentence, tags):
                token.predicted_tag = tag
        return predictions

    def __repr__(self):
        return f"{self.__class__.__name__}(tags={self.vocab.num_tags()}, params={len(self.params)})"


def model_class(model_type):
    """Model türünün sınıfı; tanımlandığı modül gerekirse burada yüklenir

    Raises:
        UsageError: Bilinmeyen model türü
    """
    if model_type not in EntityModel.registry and model_type in MODEL_CLASSES:
        module_name, class_name = MODEL_CLASSES[model_type]
        cls = getattr(importlib.import_module(module_name), class_name)
        EntityModel.registry.setdefault(model_type, cls)
    try:
        return EntityModel.registry[model_type]
    except KeyError:
        raise UsageError(f"Bilinmeyen model türü: {model_type}")


def build_model(vocab, settings):
    """Ayarlardaki model türüne göre model oluştur

    Raises:
        UsageError: Bilinmeyen model türü
    """
    model = model_class(settings["model"])(vocab, settings)
    logger.info(f"Model oluşturuldu: {model}")
    return model
