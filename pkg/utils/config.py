#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Yapılandırma Modülü
Varsayılan ayarlar, YAML/JSON veya anahtar=değer yapılandırma dosyası okuma ve komut satırı
değerleriyle birleştirme.

Öncelik sırası: varsayılanlar < yapılandırma dosyası < komut satırı.
"""

import copy
import logging
from pathlib import Path

import yaml

from utils.errors import ConfigError

# Modül için logger
logger = logging.getLogger(__name__)

MODEL_TYPES = ("lstm-crf", "stack-lstm")
MODEL_SCHEMES = ("iob2", "iobes")
INPUT_SCHEMES = ("iob1", "iob2", "iobes")

# Varsayılan ayarlar (İngilizce deney ayarları)
DEFAULT_CONFIG = {
    "model": "lstm-crf",
    "language": "en",
    "scheme": "iobes",
    "input_scheme": "iob1",
    "normalize_digits": None,  # None: dile göre (en → açık)
    "seed": 1,
    "log_level": "INFO",
    "log_file": None,
    "embeddings": {
        "word_dim": 100,
        "char_dim": 25,
        "char_hidden_dim": 25,
        "use_char": True,
        "pretrained": None,
        "singleton_unk_prob": 0.5,
        "min_word_freq": 1,
    },
    "network": {
        "hidden_dim": 100,
        "tagger_hidden_dim": 100,  # 0: gizli katmansız doğrusal izdüşüm
        "use_crf": True,
        "constrained_decoding": False,
        "full_peephole": False,
        "random_bias": False,
        "stack_hidden_dim": 100,
        "stack_layers": 2,
        "action_dim": 16,
        "label_dim": 16,
        "chunk_dim": 20,
        "state_hidden_dim": 100,
    },
    "training": {
        "learning_rate": 0.01,
        "clip_threshold": 5.0,
        "epochs": 100,
        "dropout": None,  # None: modele ve dile göre
        "shuffle_seed": None,  # None: seed kullanılır
        "progress": True,
    },
    "paths": {
        "train": None,
        "dev": None,
        "test": None,
        "output": None,
    },
    "tagging": {
        "workers": 1,
    },
}

SECTIONS = tuple(key for key, value in DEFAULT_CONFIG.items() if isinstance(value, dict))


def default_config():
    """Varsayılan ayarların bağımsız kopyası"""
    return copy.deepcopy(DEFAULT_CONFIG)


def _leaf_index():
    """Bölüm içi anahtar adı → bölüm adı (anahtarlar bölümler arası benzersizdir)"""
    index = {}
    for section in SECTIONS:
        for key in DEFAULT_CONFIG[section]:
            index[key] = section
    return index


def _check_type(key, value, default):
    """Değerin varsayılanla uyumlu türde olduğunu doğrula"""
    if value is None or default is None:
        return value
    if isinstance(default, bool):
        if not isinstance(value, bool):
            raise ConfigError(f"'{key}' için true/false bekleniyor: {value!r}", key=key)
        return value
    if isinstance(default, int):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"'{key}' için tamsayı bekleniyor: {value!r}", key=key)
        return value
    if isinstance(default, float):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"'{key}' için sayı bekleniyor: {value!r}", key=key)
        return float(value)
    if isinstance(default, str) and not isinstance(value, str):
        raise ConfigError(f"'{key}' için metin bekleniyor: {value!r}", key=key)
    return value


def set_value(config, key, value):
    """Tek bir ayarı yaz

    Anahtar üst düzey ad ("seed"), noktalı yol ("training.epochs") veya bölüm
    içi ad ("epochs") olabilir.

    Raises:
        ConfigError: Bilinmeyen anahtar veya uyumsuz tür
    """
    if "." in key:
        section, _, leaf = key.partition(".")
        if section not in SECTIONS or leaf not in DEFAULT_CONFIG[section]:
            raise ConfigError(f"Bilinmeyen yapılandırma anahtarı: {key}", key=key)
        config[section][leaf] = _check_type(key, value, DEFAULT_CONFIG[section][leaf])
        return config
    if key in DEFAULT_CONFIG and key not in SECTIONS:
        config[key] = _check_type(key, value, DEFAULT_CONFIG[key])
        return config
    section = _leaf_index().get(key)
    if section is None:
        raise ConfigError(f"Bilinmeyen yapılandırma anahtarı: {key}", key=key)
    config[section][key] = _check_type(key, value, DEFAULT_CONFIG[section][key])
    return config


def merge(config, overrides):
    """Değerleri yapılandırmaya işle (iç içe bölümler veya düz anahtarlar)

    Args:
        config: Hedef yapılandırma (yerinde güncellenir)
        overrides: {anahtar: değer}; None değerler komut satırında verilmemiş
            sayılmaz, doğrudan yazılır

    Returns:
        dict: Güncellenmiş yapılandırma
    """
    for key, value in overrides.items():
        if key in SECTIONS:
            if not isinstance(value, dict):
                raise ConfigError(f"'{key}' bölümü eşleme olmalı", key=key)
            for leaf, leaf_value in value.items():
                set_value(config, f"{key}.{leaf}", leaf_value)
        else:
            set_value(config, key, value)
    return config


def validate(config):
    """Seçmeli değerlerin geçerliliğini denetle"""
    if config["model"] not in MODEL_TYPES:
        raise ConfigError(f"Bilinmeyen model türü: {config['model']} (seçenekler: {', '.join(MODEL_TYPES)})",
                          key="model")
    if config["scheme"].lower() not in MODEL_SCHEMES:
        raise ConfigError(f"Model şeması iob2 veya iobes olmalı: {config['scheme']}", key="scheme")
    if config["input_scheme"].lower() not in INPUT_SCHEMES:
        raise ConfigError(f"Geçersiz giriş şeması: {config['input_scheme']}", key="input_scheme")
    dropout = config["training"]["dropout"]
    if dropout is not None and not 0.0 <= dropout < 1.0:
        raise ConfigError(f"Dropout [0, 1) aralığında olmalı: {dropout}", key="dropout")
    if config["tagging"]["workers"] < 1:
        raise ConfigError("workers en az 1 olmalı", key="workers")
    return config


def _scalar(raw):
    """Satır biçimli değeri türüne çevir (true/false, null, tamsayı, sayı, metin)"""
    raw = raw.strip()
    if not raw:
        return None
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError:
        return raw
    if isinstance(value, str):
        for convert in (int, float):
            try:
                return convert(value)
            except ValueError:
                pass
    return value


def _is_key_value_text(text):
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    return bool(lines) and all("=" in line for line in lines)


def parse_key_values(text, source="<metin>"):
    """'anahtar=değer' satırlarını düz sözlüğe çevir

    Boş satırlar ve # ile başlayan satırlar atlanır; aynı anahtar tekrar
    ederse son değer geçerlidir.

    Raises:
        ConfigError: '=' içermeyen veya anahtarsız satır
    """
    data = {}
    for line_number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, raw = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"{source} satır {line_number}: 'anahtar=değer' bekleniyor: {line!r}")
        data[key] = _scalar(raw)
    return data


def _parse_config_text(text, source):
    """YAML/JSON eşlemesi veya anahtar=değer satırları"""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        if _is_key_value_text(text):
            return parse_key_values(text, source)
        raise ConfigError(f"Yapılandırma dosyası okunamadı ({source}): {e}")
    if data is None:
        return {}
    if isinstance(data, dict):
        return data
    if _is_key_value_text(text):
        return parse_key_values(text, source)
    raise ConfigError(f"Yapılandırma dosyası anahtar/değer eşlemesi olmalı: {source}")


def load_config(path=None, overrides=None):
    """Yapılandırmayı oluştur

    Args:
        path: İsteğe bağlı YAML/JSON veya anahtar=değer satırlı dosya
        overrides: Komut satırından gelen değerler (None olanlar atlanır)

    Returns:
        dict: Tam yapılandırma

    Raises:
        ConfigError: Bilinmeyen anahtar, uyumsuz tür veya bozuk dosya
        FileNotFoundError: Dosya yok
    """
    config = default_config()
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Yapılandırma dosyası bulunamadı: {path}")
        data = _parse_config_text(path.read_text(encoding="utf-8"), path)
        merge(config, data)
        logger.debug(f"Yapılandırma dosyası yüklendi: {path}")
    if overrides:
        merge(config, {key: value for key, value in overrides.items() if value is not None})
    return validate(config)


def resolve_dropout(config):
    """Açık değer yoksa: LSTM-CRF 0.5, Stack-LSTM İngilizce 0.2, diğer diller 0.3"""
    dropout = config["training"]["dropout"]
    if dropout is not None:
        return float(dropout)
    if config["model"] == "lstm-crf":
        return 0.5
    return 0.2 if config["language"] == "en" else 0.3


def resolve_normalize_digits(config):
    """Açık değer yoksa yalnızca İngilizce için rakamlar 0'a çevrilir"""
    value = config["normalize_digits"]
    if value is not None:
        return bool(value)
    return config["language"] == "en"


def model_settings(config):
    """Modellerin kullandığı düz ayar sözlüğü"""
    settings = {}
    settings.update(config["embeddings"])
    settings.update(config["network"])
    settings["dropout"] = resolve_dropout(config)
    settings["normalize_digits"] = resolve_normalize_digits(config)
    settings["seed"] = config["seed"]
    settings["model"] = config["model"]
    settings["scheme"] = config["scheme"].lower()
    return settings
