#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Geçiş Sistemi Modülü
SHIFT / OUT / REDUCE(y) durum makinesi, geçerli eylemler ve başvuru (oracle)
eylem dizileri. Bu modül yalnızca sembolik durumu yönetir; sinir ağı özetleri
core.transition_chunker içindedir.

    SHIFT     arabellek başındaki sözcüğü yığına taşır
    OUT       arabellek başındaki sözcüğü doğrudan çıktıya taşır (yığın boşken)
    REDUCE(y) yığının tamamını tek öbek olarak y etiketiyle çıktıya taşır
"""

import logging
from collections import namedtuple

from data.corpus import LabeledChunk, validate_chunks
from utils.errors import ContractViolation, DomainError

# Modül için logger
logger = logging.getLogger(__name__)

SHIFT = "SHIFT"
OUT = "OUT"
REDUCE = "REDUCE"


class Action(namedtuple("Action", ["kind", "label"])):
    """Geçiş eylemi; label yalnızca REDUCE için doludur"""

    __slots__ = ()

    def __str__(self):
        if self.kind == REDUCE:
            return f"REDUCE({self.label})"
        return self.kind

    @classmethod
    def parse(cls, text):
        """'SHIFT', 'OUT' veya 'REDUCE(PER)' biçiminden eylem oluştur"""
        text = text.strip()
        if text in (SHIFT, OUT):
            return cls(text, None)
        if text.startswith(f"{REDUCE}(") and text.endswith(")") and len(text) > len(REDUCE) + 2:
            return cls(REDUCE, text[len(REDUCE) + 1:-1])
        raise DomainError(f"Geçersiz eylem: {text!r}")


SHIFT_ACTION = Action(SHIFT, None)
OUT_ACTION = Action(OUT, None)


def reduce_action(label):
    return Action(REDUCE, label)


class ParserState:
    """Çözümleyicinin sembolik durumu

    Arabellek sağdan sola yüklenir; listenin sonu sıradaki sözcüktür. Çıktı
    öğeleri (başlangıç, bitiş) aralıklarıdır; OUT ile gelen sözcük tek
    sözcüklük aralıktır.
    """

    def __init__(self, length):
        if length < 1:
            raise DomainError(f"Cümle uzunluğu en az 1 olmalı: {length}")
        self.length = length
        self.buffer = list(range(length - 1, -1, -1))
        self.stack = []
        self.output = []
        self.emitted = []
        self.history = []

    @property
    def output_words(self):
        return sum(end - start + 1 for start, end in self.output)

    def word_count(self):
        """Çıktı, yığın ve arabellekteki toplam sözcük sayısı (her zaman n)"""
        return self.output_words + len(self.stack) + len(self.buffer)

    def is_terminal(self):
        return not self.stack and not self.buffer

    def __repr__(self):
        return (f"ParserState(output={self.output}, stack={self.stack}, "
                f"buffer={list(reversed(self.buffer))})")


class TransitionSystem:
    """Sabit etiket envanterli geçiş sistemi

    Eylem envanteri sırası: SHIFT, OUT, sonra alfabetik REDUCE etiketleri.
    Bu sıra argmax eşitliklerini de belirler.
    """

    def __init__(self, labels):
        labels = sorted(set(labels))
        if any(not label for label in labels):
            raise DomainError("Varlık etiketi boş olamaz")
        self.labels = labels
        self.actions = [SHIFT_ACTION, OUT_ACTION] + [reduce_action(label) for label in labels]
        self.action_to_id = {action: i for i, action in enumerate(self.actions)}

    @property
    def num_actions(self):
        return len(self.actions)

    def action_id(self, action):
        try:
            return self.action_to_id[action]
        except KeyError:
            raise DomainError(f"Eylem envanterde yok: {action}")

    def initial_state(self, length):
        return ParserState(length)

    def valid_actions(self, state):
        """Durumda uygulanabilir eylemler (envanter sırasıyla)

        SHIFT arabellek doluyken ve envanterde en az bir etiket varken, OUT
        arabellek doluyken ve yığın boşken, REDUCE(y) yığın doluyken geçerlidir.
        Etiketsiz envanterde yığın hiç dolmaz; her sözcük OUT ile çıkar.
        """
        valid = []
        if state.buffer:
            if self.labels:
                valid.append(SHIFT_ACTION)
            if not state.stack:
                valid.append(OUT_ACTION)
        if state.stack:
            valid.extend(self.actions[2:])
        return valid

    def valid_action_ids(self, state):
        return [self.action_to_id[action] for action in self.valid_actions(state)]

    def is_valid(self, state, action):
        if action.kind == SHIFT:
            return bool(state.buffer) and bool(self.labels)
        if action.kind == OUT:
            return bool(state.buffer) and not state.stack
        if action.kind == REDUCE:
            return bool(state.stack) and action.label in self.labels
        return False

    def apply(self, state, action):
        """Eylemi durum üzerinde uygula (yerinde) ve durumu döndür

        Raises:
            ContractViolation: Eylem bu durumda geçersiz
        """
        if not self.is_valid(state, action):
            raise ContractViolation(f"{action} bu durumda uygulanamaz: {state!r}")
        if action.kind == SHIFT:
            state.stack.append(state.buffer.pop())
        elif action.kind == OUT:
            word = state.buffer.pop()
            state.output.append((word, word))
        else:
            start, end = state.stack[0], state.stack[-1]
            state.stack.clear()
            state.output.append((start, end))
            state.emitted.append(LabeledChunk(start, end, action.label))
        state.history.append(action)
        return state

    def is_terminal(self, state):
        return state.is_terminal()

    def oracle_actions(self, length, chunks):
        """Altın öbekleri yeniden üreten başvuru eylem dizisi

        Args:
            length: Cümle uzunluğu n
            chunks: Sıralı, çakışmasız LabeledChunk listesi

        Returns:
            list: n ile 2n arasında uzunlukta eylem listesi

        Raises:
            SchemeValidationError: Öbekler çakışıyor, sırasız veya sınır dışı
            DomainError: Etiket envanterde yok
        """
        validate_chunks(chunks, length)
        starts = {}
        for start, end, label in chunks:
            if label not in self.labels:
                raise DomainError(f"Öbek etiketi envanterde yok: {label}")
            starts[start] = (end, label)

        actions = []
        i = 0
        while i < length:
            if i in starts:
                end, label = starts[i]
                actions.extend([SHIFT_ACTION] * (end - i + 1))
                actions.append(reduce_action(label))
                i = end + 1
            else:
                actions.append(OUT_ACTION)
                i += 1
        return actions

    def replay(self, length, actions):
        """Eylemleri başlangıç durumundan uygula"""
        state = self.initial_state(length)
        for action in actions:
            self.apply(state, action)
        return state


def oracle_actions(sentence, gold_chunks, labels=None):
    """İşlevsel arayüz: cümle (veya sözcük listesi) için başvuru eylemleri"""
    if labels is None:
        labels = {chunk[2] for chunk in gold_chunks}
    return TransitionSystem(labels).oracle_actions(len(sentence), gold_chunks)
