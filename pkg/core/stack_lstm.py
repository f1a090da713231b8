#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Stack-LSTM Modülü
Yığın işaretçili LSTM: push yeni bir adım ekler, pop işaretçiyi bir önceki
duruma geri çeker. Özet her zaman işaretçinin gösterdiği en üst katman
gizli durumudur.
"""

import logging

from core.rnn import StackedLSTM
from utils.errors import ContractViolation

# Modül için logger
logger = logging.getLogger(__name__)


class StackLSTM:
    """Stack-LSTM parametreleri (katmanlı LSTM + boş yığın koruyucu girdisi)

    Değişken yığın içeriği her çözümleme için ayrı bir StackCursor'da tutulur;
    parametreler dondurulmuşken birden fazla iş parçacığı aynı nesneyi
    kullanabilir.
    """

    def __init__(self, params, prefix, input_dim, hidden_dim, layers, rng, **cell_options):
        self.lstm = StackedLSTM(params, f"{prefix}.lstm", input_dim, hidden_dim, layers, rng, **cell_options)
        # Boş yığının özeti bu öğrenilen girdiden üretilir
        self.guard = params.uniform(f"{prefix}.guard", (input_dim,), rng)
        self.input_dim = input_dim
        self.hidden_dim = hidden_dim

    def start(self, tape):
        """Boş yığınla yeni bir imleç"""
        return StackCursor(self, tape)


class StackCursor:
    """Tek bir çözümlemenin yığın içeriği"""

    def __init__(self, stack, tape):
        self.stack = stack
        self.tape = tape
        guard_state = stack.lstm.step(tape, stack.guard, stack.lstm.initial_state(tape))
        self._states = [guard_state]
        self._items = []

    def push(self, x, item=None):
        """x girdisiyle bir adım ilerle; item yığın öğesi olarak saklanır"""
        self._states.append(self.stack.lstm.step(self.tape, x, self._states[-1]))
        self._items.append(item)

    def pop(self):
        """En üst öğeyi çıkar; özet push öncesine döner

        Raises:
            ContractViolation: Yığın boş
        """
        if not self._items:
            raise ContractViolation("Boş yığından pop yapılamaz")
        self._states.pop()
        return self._items.pop()

    def summary(self):
        return self.stack.lstm.output(self._states[-1])

    @property
    def items(self):
        return list(self._items)

    def __len__(self):
        return len(self._items)

    def __bool__(self):
        return bool(self._items)
