#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Model arşivi testleri
"""

import json
import zipfile

import numpy as np
import pytest

from conftest import small_settings, vocab_for
from core.model import build_model
from data.model_archive import load_model, read_metadata, save_model
from utils.errors import ArchiveError


@pytest.fixture(params=["lstm-crf", "stack-lstm"])
def model(request, sentence):
    return build_model(vocab_for([sentence]), small_settings(request.param))


def test_round_trip(tmp_path, model, sentence):
    path = tmp_path / "model.zip"
    save_model(model, path)
    restored = load_model(path, expected_type=model.model_type)

    assert type(restored) is type(model)
    assert restored.vocab.to_dict() == model.vocab.to_dict()
    for name, value in model.params.state_dict().items():
        np.testing.assert_array_equal(restored.params[name].value, value)
    assert restored.predict_tags(sentence) == model.predict_tags(sentence)
    assert restored.loss_value(sentence) == model.loss_value(sentence)


def test_byte_identical(tmp_path, model):
    first, second = tmp_path / "a.zip", tmp_path / "b.zip"
    save_model(model, first)
    save_model(model, second)
    assert first.read_bytes() == second.read_bytes()


def test_same_seed_same_archive(tmp_path, sentence):
    paths = []
    for name in ("a.zip", "b.zip"):
        model = build_model(vocab_for([sentence]), small_settings(seed=7))
        paths.append(save_model(model, tmp_path / name))
    with open(paths[0], "rb") as a, open(paths[1], "rb") as b:
        assert a.read() == b.read()


def test_metadata(tmp_path, model):
    path = tmp_path / "model.zip"
    save_model(model, path)
    metadata = read_metadata(path)
    assert metadata["model_type"] == model.model_type
    assert set(metadata["parameters"]) == set(model.params.names())


def test_type_mismatch(tmp_path, model):
    path = tmp_path / "model.zip"
    save_model(model, path)
    other = "stack-lstm" if model.model_type == "lstm-crf" else "lstm-crf"
    with pytest.raises(ArchiveError):
        load_model(path, expected_type=other)


def test_not_a_zip(tmp_path):
    path = tmp_path / "model.zip"
    path.write_bytes(b"not an archive")
    with pytest.raises(ArchiveError):
        load_model(path)


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_model(tmp_path / "yok.zip")


def test_unsupported_version(tmp_path, model):
    path = tmp_path / "model.zip"
    save_model(model, path)
    with zipfile.ZipFile(path) as zipf:
        entries = {name: zipf.read(name) for name in zipf.namelist()}
    metadata = json.loads(entries["metadata.json"])
    metadata["format_version"] = 99
    entries["metadata.json"] = json.dumps(metadata).encode("utf-8")
    with zipfile.ZipFile(path, "w") as zipf:
        for name, data in entries.items():
            zipf.writestr(name, data)
    with pytest.raises(ArchiveError):
        load_model(path)


def test_missing_parameter(tmp_path, model):
    path = tmp_path / "model.zip"
    save_model(model, path)
    with zipfile.ZipFile(path) as zipf:
        entries = {name: zipf.read(name) for name in zipf.namelist()}
    removed = next(name for name in entries if name.startswith("params/"))
    del entries[removed]
    with zipfile.ZipFile(path, "w") as zipf:
        for name, data in entries.items():
            zipf.writestr(name, data)
    with pytest.raises(ArchiveError):
        load_model(path)


def test_load_requires_metadata_entry(tmp_path, model):
    source, stripped = tmp_path / "model.zip", tmp_path / "stripped.zip"
    save_model(model, source)
    with zipfile.ZipFile(source) as zin, zipfile.ZipFile(stripped, "w") as zout:
        for name in zin.namelist():
            if name != "metadata.json":
                zout.writestr(name, zin.read(name))
    with pytest.raises(ArchiveError, match="metadata.json"):
        read_metadata(stripped)
    with pytest.raises(ArchiveError, match="metadata.json"):
        load_model(stripped)
