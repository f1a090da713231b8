#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Model Arşivi Modülü
Modelin ayarları, sözlüğü ve tüm parametreleri tek bir ZIP arşivinde.

Arşiv içeriği:
    metadata.json       biçim sürümü, model türü, parametre adı → şekil
    config.json         düz model ayarları
    vocabulary.json     sözcük/karakter/etiket sözlüğü
    params/<ad>.f8      satır öncelikli, little-endian float64 değerler

Girdiler sıralı yazılır, zaman damgası sabittir ve JSON anahtarları sıralıdır;
aynı model bayt bayt aynı arşivi üretir.
"""

import json
import logging
import zipfile
from pathlib import Path

import numpy as np

from core.model import build_model
from data.vocabulary import Vocabulary
from utils.errors import ArchiveError

# Modül için logger
logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
PARAM_DTYPE = "<f8"
FIXED_TIMESTAMP = (1980, 1, 1, 0, 0, 0)

METADATA_ENTRY = "metadata.json"
CONFIG_ENTRY = "config.json"
VOCABULARY_ENTRY = "vocabulary.json"
PARAM_PREFIX = "params/"


def _json_bytes(data):
    return (json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def _param_entry(name):
    return f"{PARAM_PREFIX}{name}.f8"


def save_model(model, path):
    """Modeli arşive yaz

    Args:
        model: EntityModel
        path: Arşiv dosyası yolu (varsa üzerine yazılır)

    Returns:
        str: Yazılan arşivin yolu
    """
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)

    metadata = {
        "format_version": FORMAT_VERSION,
        "model_type": model.model_type,
        "parameters": {name: list(param.value.shape) for name, param in model.params.items()},
    }
    entries = {
        METADATA_ENTRY: _json_bytes(metadata),
        CONFIG_ENTRY: _json_bytes(model.settings),
        VOCABULARY_ENTRY: _json_bytes(model.vocab.to_dict()),
    }
    for name, param in model.params.items():
        entries[_param_entry(name)] = np.ascontiguousarray(param.value, dtype=PARAM_DTYPE).tobytes()

    try:
        with zipfile.ZipFile(path, "w", zipfile.ZIP_DEFLATED) as zipf:
            for entry in sorted(entries):
                info = zipfile.ZipInfo(entry, date_time=FIXED_TIMESTAMP)
                info.compress_type = zipfile.ZIP_DEFLATED
                info.external_attr = 0o644 << 16
                zipf.writestr(info, entries[entry])
    except OSError as e:
        logger.error(f"Model arşivi yazılırken hata: {e}")
        raise

    logger.info(f"Model arşivi kaydedildi: {path} ({len(model.params)} parametre)")
    return str(path)


def _read_json(zipf, entry):
    try:
        return json.loads(zipf.read(entry).decode("utf-8"))
    except KeyError:
        raise ArchiveError(f"Arşivde {entry} eksik")
    except ValueError as e:
        raise ArchiveError(f"{entry} okunamadı: {e}")


def read_metadata(path):
    """Yalnızca arşivin üst bilgisini oku"""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Model arşivi bulunamadı: {path}")
    try:
        with zipfile.ZipFile(path, "r") as zipf:
            return _read_json(zipf, METADATA_ENTRY)
    except zipfile.BadZipFile:
        raise ArchiveError(f"Geçerli bir model arşivi değil: {path}")


def load_model(path, expected_type=None):
    """Arşivden modeli yeniden kur

    Args:
        path: Arşiv dosyası yolu
        expected_type: Beklenen model türü (None ise denetlenmez)

    Returns:
        EntityModel: Parametreleri yüklenmiş model

    Raises:
        FileNotFoundError: Arşiv yok
        ArchiveError: Bozuk arşiv, sürüm veya model türü uyuşmazlığı
    """
    path = Path(path)
    metadata = read_metadata(path)
    if metadata.get("format_version") != FORMAT_VERSION:
        raise ArchiveError(f"Desteklenmeyen arşiv sürümü: {metadata.get('format_version')}")
    model_type = metadata.get("model_type")
    if expected_type is not None and model_type != expected_type:
        raise ArchiveError(f"Arşivdeki model türü {model_type}, beklenen {expected_type}")

    try:
        with zipfile.ZipFile(path, "r") as zipf:
            settings = _read_json(zipf, CONFIG_ENTRY)
            if settings.get("model") != model_type:
                raise ArchiveError(f"Ayarlardaki model türü ({settings.get('model')}) üst bilgiyle uyuşmuyor")
            # Parametreler arşivden gelir; gömme dosyası yeniden okunmaz
            settings["pretrained"] = None
            vocab = Vocabulary.from_dict(_read_json(zipf, VOCABULARY_ENTRY))
            model = build_model(vocab, settings)

            shapes = metadata.get("parameters", {})
            if set(shapes) != set(model.params.names()):
                raise ArchiveError("Arşivdeki parametre adları model yapısıyla uyuşmuyor")
            state = {}
            for name, shape in shapes.items():
                try:
                    raw = zipf.read(_param_entry(name))
                except KeyError:
                    raise ArchiveError(f"Arşivde parametre eksik: {name}")
                values = np.frombuffer(raw, dtype=PARAM_DTYPE)
                if values.size != int(np.prod(shape)):
                    raise ArchiveError(f"{name} için değer sayısı şekille uyuşmuyor: {values.size}")
                state[name] = values.astype(np.float64).reshape(shape)
    except zipfile.BadZipFile:
        raise ArchiveError(f"Geçerli bir model arşivi değil: {path}")

    model.params.load_state_dict(state)
    logger.info(f"Model arşivi yüklendi: {path} ({model_type})")
    return model
