#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - LSTM-CRF Etiketleyici Modülü
Sözcük temsilleri → BiLSTM bağlamı c_i → gizli katman → k etiket skoru (P),
üzerinde doğrusal zincir CRF.
"""

import logging

import numpy as np

from core.crf import CRFLayer
from core.mathcore import Tape
from core.model import EntityModel
from core.rnn import BiLSTM, bilstm_encode
from core.wordrep import WordRepresenter
from data.corpus import allowed_transitions, tags_to_chunks
from utils.errors import DomainError

# Modül için logger
logger = logging.getLogger(__name__)


class CRFTagger(EntityModel):
    """BiLSTM + CRF dizi etiketleyici"""

    model_type = "lstm-crf"

    def __init__(self, vocab, settings):
        """Etiketleyici başlatıcı

        Args:
            vocab: Vocabulary (id_to_tag modelin etiket envanteridir)
            settings: Düz model ayarları; hidden_dim, tagger_hidden_dim,
                use_crf, constrained_decoding ve sözcük temsili anahtarları
        """
        super().__init__(vocab, settings)
        self.tags = list(vocab.id_to_tag)
        if not self.tags:
            raise DomainError("Etiket envanteri boş")
        k = len(self.tags)
        cell_options = {"full_peephole": settings["full_peephole"], "random_bias": settings["random_bias"]}

        self.wordrep = WordRepresenter(self.params, vocab, settings, self.rng)
        self.bilstm = BiLSTM(self.params, "tagger.lstm", self.wordrep.output_dim,
                             settings["hidden_dim"], self.rng, **cell_options)

        projection_input = self.bilstm.output_dim
        self.hidden_dim = int(settings["tagger_hidden_dim"])
        if self.hidden_dim > 0:
            self.W_hidden = self.params.uniform("tagger.hidden.W", (self.hidden_dim, projection_input), self.rng)
            self.b_hidden = self.params.zeros("tagger.hidden.b", (self.hidden_dim,))
            projection_input = self.hidden_dim
        self.W_out = self.params.uniform("tagger.output.W", (k, projection_input), self.rng)
        self.b_out = self.params.zeros("tagger.output.b", (k,))

        self.use_crf = bool(settings["use_crf"])
        self.crf = CRFLayer(self.params, "tagger.crf.transitions", k) if self.use_crf else None
        self.mask = None
        if self.use_crf and settings["constrained_decoding"]:
            self.mask = allowed_transitions(self.tags, self.scheme)

        logger.debug(f"LSTM-CRF oluşturuldu: {k} etiket, {len(self.params)} parametre")

    def emissions(self, tape, sentence, train=False):
        """Salım matrisi P (n×k)

        Args:
            tape: Tape
            sentence: Boş olmayan Sentence
            train: Dropout ve UNK değişimi uygulansın mı

        Returns:
            Tensor: n×k skor matrisi
        """
        inputs = self.wordrep.sentence_embeddings(tape, sentence, train)
        contexts = bilstm_encode(tape, self.bilstm, inputs)
        rows = []
        for context in contexts:
            features = context
            if self.hidden_dim > 0:
                features = tape.tanh(tape.add(tape.matvec(self.W_hidden, context), self.b_hidden))
            rows.append(tape.add(tape.matvec(self.W_out, features), self.b_out))
        return tape.stack(rows)

    def gold_ids(self, sentence):
        if not sentence.has_gold():
            raise DomainError("Cümlede altın etiket yok")
        return [self.vocab.tag_id(tag) for tag in sentence.gold_tags]

    def loss(self, tape, sentence, train=True):
        """−log p(y|X); CRF kapalıyken konum başına softmax kayıplarının toplamı"""
        gold = self.gold_ids(sentence)
        P = self.emissions(tape, sentence, train)
        if self.use_crf:
            return self.crf.nll(tape, P, gold)
        terms = []
        for i, tag in enumerate(gold):
            log_probs = tape.log_softmax(tape.index(P, i))
            terms.append(tape.index(log_probs, tag))
        return tape.scale(tape.add(*terms), -1.0)

    def decode_ids(self, sentence):
        """Ham çözümleme (etiket indeksleri); şemaya aykırı olabilir"""
        P = self.emissions(Tape(self.params, record=False), sentence, train=False)
        if self.use_crf:
            path, _ = self.crf.decode(P, mask=self.mask)
            return path
        return [int(i) for i in np.argmax(P.value, axis=1)]

    def decode_tags(self, sentence):
        return [self.tags[i] for i in self.decode_ids(sentence)]

    def predict_chunks(self, sentence):
        """Çözümlenen etiketlerden hoşgörülü okuyucuyla öbekler"""
        return tags_to_chunks(self.decode_tags(sentence), self.scheme, strict=False)
