#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
SHIFT / OUT / REDUCE geçiş sistemi testleri
"""

import numpy as np
import pytest

from core.transitions import (OUT_ACTION, SHIFT_ACTION, Action, ParserState, TransitionSystem,
                              oracle_actions, reduce_action)
from data.corpus import LabeledChunk
from utils.errors import ContractViolation, DomainError, SchemeValidationError

LABELS = ["LOC", "ORG", "PER"]
MARS = ["Mark", "Watney", "visited", "Mars"]
MARS_CHUNKS = [LabeledChunk(0, 1, "PER"), LabeledChunk(3, 3, "LOC")]


@pytest.fixture
def system():
    return TransitionSystem(LABELS)


def random_chunks(rng, length):
    chunks = []
    i = 0
    while i < length:
        if rng.random() < 0.4:
            end = min(length - 1, i + int(rng.integers(4)))
            chunks.append(LabeledChunk(i, end, LABELS[int(rng.integers(len(LABELS)))]))
            i = end + 1
        else:
            i += 1
    return chunks


class TestInventory:
    def test_order(self, system):
        assert [str(a) for a in system.actions] == ["SHIFT", "OUT", "REDUCE(LOC)", "REDUCE(ORG)", "REDUCE(PER)"]

    def test_parse(self):
        assert Action.parse("REDUCE(PER)") == reduce_action("PER")
        assert Action.parse("OUT") == OUT_ACTION
        with pytest.raises(DomainError):
            Action.parse("REDUCE()")

    def test_unknown_action(self, system):
        with pytest.raises(DomainError):
            system.action_id(reduce_action("MISC"))


class TestValidActions:
    def test_single_word_initial_state(self, system):
        assert system.valid_actions(system.initial_state(1)) == [SHIFT_ACTION, OUT_ACTION]

    def test_mars_before_reduce(self, system):
        state = system.replay(4, [SHIFT_ACTION, SHIFT_ACTION])
        assert state.stack == [0, 1]
        assert list(reversed(state.buffer)) == [2, 3]
        valid = system.valid_actions(state)
        assert SHIFT_ACTION in valid
        assert OUT_ACTION not in valid
        assert reduce_action("PER") in valid
        assert reduce_action("LOC") in valid

    def test_terminal_state(self, system):
        state = system.replay(2, [OUT_ACTION, OUT_ACTION])
        assert state.is_terminal()
        assert system.valid_actions(state) == []

    def test_empty_sentence(self, system):
        with pytest.raises(DomainError):
            system.initial_state(0)

    def test_without_labels_only_out(self):
        system = TransitionSystem([])
        state = system.initial_state(3)
        while not state.is_terminal():
            assert system.valid_actions(state) == [OUT_ACTION]
            system.apply(state, OUT_ACTION)
        assert state.output == [(0, 0), (1, 1), (2, 2)]
        assert system.oracle_actions(3, []) == [OUT_ACTION] * 3

    def test_without_labels_shift_rejected(self):
        system = TransitionSystem([])
        with pytest.raises(ContractViolation):
            system.apply(system.initial_state(2), SHIFT_ACTION)


class TestApply:
    def test_all_out(self, system):
        state = system.replay(3, [OUT_ACTION] * 3)
        assert system.is_terminal(state)
        assert state.emitted == []
        assert state.output == [(0, 0), (1, 1), (2, 2)]

    def test_invalid_action(self, system):
        state = system.initial_state(2)
        with pytest.raises(ContractViolation):
            system.apply(state, reduce_action("PER"))
        system.apply(state, SHIFT_ACTION)
        with pytest.raises(ContractViolation):
            system.apply(state, OUT_ACTION)

    def test_reduce_empties_stack(self, system):
        state = system.replay(4, [SHIFT_ACTION, SHIFT_ACTION, reduce_action("PER")])
        assert state.stack == []
        assert state.emitted == [LabeledChunk(0, 1, "PER")]

    @pytest.mark.parametrize("seed", range(20))
    def test_random_walk_conserves_words(self, system, seed):
        rng = np.random.default_rng(seed)
        length = int(rng.integers(1, 13))
        state = system.initial_state(length)
        steps = 0
        while not state.is_terminal():
            valid = system.valid_actions(state)
            system.apply(state, valid[int(rng.integers(len(valid)))])
            assert state.word_count() == length
            steps += 1
        assert length <= steps <= 2 * length
        covered = sorted(i for start, end in state.output for i in range(start, end + 1))
        assert covered == list(range(length))


class TestOracle:
    def test_mars_sentence(self):
        actions = oracle_actions(MARS, MARS_CHUNKS, LABELS)
        assert [str(a) for a in actions] == ["SHIFT", "SHIFT", "REDUCE(PER)", "OUT", "SHIFT", "REDUCE(LOC)"]

    def test_no_chunks(self, system):
        assert system.oracle_actions(3, []) == [OUT_ACTION] * 3

    def test_overlapping_chunks(self, system):
        with pytest.raises(SchemeValidationError):
            system.oracle_actions(4, [LabeledChunk(0, 1, "PER"), LabeledChunk(1, 2, "LOC")])

    def test_label_outside_inventory(self, system):
        with pytest.raises(DomainError):
            system.oracle_actions(2, [LabeledChunk(0, 0, "MISC")])

    @pytest.mark.parametrize("seed", range(30))
    def test_round_trip(self, system, seed):
        rng = np.random.default_rng(seed)
        length = int(rng.integers(1, 13))
        chunks = random_chunks(rng, length)
        actions = system.oracle_actions(length, chunks)
        assert length <= len(actions) <= 2 * length
        state = system.replay(length, actions)
        assert state.is_terminal()
        assert state.emitted == chunks

    def test_parser_state_repr(self):
        assert "buffer=[0, 1]" in repr(ParserState(2))


@pytest.mark.slow
def test_bulk_oracle_round_trip(system):
    rng = np.random.default_rng(2024)
    for _ in range(10000):
        length = int(rng.integers(1, 13))
        chunks = random_chunks(rng, length)
        actions = system.oracle_actions(length, chunks)
        assert length <= len(actions) <= 2 * length
        assert system.replay(length, actions).emitted == chunks
