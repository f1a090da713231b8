#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Loglama Modülü
Araç takımı genelinde loglama işlemlerini yönetir.

Konsol çıktısı stderr'e yazılır; stdout etiketleme ve değerlendirme
çıktılarına ayrılmıştır.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

from colorama import Fore, Style
from colorama import init as colorama_init

ROOT_LOGGER = "varlik_tanima"
# Modüller logging.getLogger(__name__) kullanır; bu paketlerin logger'ları da yapılandırılır
PACKAGE_LOGGERS = ("core", "data", "utils", "main", "__main__")

LEVEL_COLORS = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.MAGENTA + Style.BRIGHT,
}

LOG_FORMAT = "[%(asctime)s] %(levelname)s [%(name)s.%(funcName)s:%(lineno)d] %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class ColorFormatter(logging.Formatter):
    """Seviye adını renklendiren biçimlendirici"""

    def format(self, record):
        color = LEVEL_COLORS.get(record.levelno)
        if not color:
            return super().format(record)
        original = record.levelname
        record.levelname = f"{color}{original}{Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def setup_logger(log_level="INFO", log_file=None, console=True, max_size=5*1024*1024, backup_count=5):
    """Logger kurulumu

    Args:
        log_level: Log seviyesi (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Log dosyası yolu (None ise yalnızca konsol)
        console: stderr'e log yazdırılsın mı
        max_size: Maksimum log dosyası boyutu (byte)
        backup_count: Tutulacak eski log dosyası sayısı

    Returns:
        logging.Logger: Yapılandırılmış ana logger nesnesi
    """
    level = getattr(logging, str(log_level).upper(), logging.INFO)
    handlers = []

    if console:
        stream = sys.stderr
        console_handler = logging.StreamHandler(stream)
        if stream.isatty():
            colorama_init()
            console_handler.setFormatter(ColorFormatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        else:
            console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        handlers.append(console_handler)

    if log_file:
        # Log dizini oluştur
        log_dir = os.path.dirname(str(log_file))
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)

        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=max_size,
            backupCount=backup_count,
            encoding='utf-8'
        )
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        handlers.append(file_handler)

    for name in (ROOT_LOGGER,) + PACKAGE_LOGGERS:
        logger = logging.getLogger(name)
        logger.setLevel(level)
        # Önceki handler'ları temizle
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
        for handler in handlers:
            logger.addHandler(handler)

    return logging.getLogger(ROOT_LOGGER)


def get_logger(name=None):
    """Ana logger'ı veya alt logger'ı al

    Args:
        name: Alt logger adı (None ise ana logger döndürülür)

    Returns:
        logging.Logger: Logger nesnesi
    """
    if name:
        return logging.getLogger(f"{ROOT_LOGGER}.{name}")
    return logging.getLogger(ROOT_LOGGER)


def log_uncaught_exceptions(ex_cls, ex, tb):
    """Yakalanmamış hataları logla

    Args:
        ex_cls: Hata sınıfı
        ex: Hata nesnesi
        tb: Traceback nesnesi
    """
    logger = get_logger("uncaught")
    logger.critical(f"Yakalanmamış hata: {ex_cls.__name__}: {ex}", exc_info=(ex_cls, ex, tb))


def get_logger_with_context(module_name):
    """Modül adı bağlamında logger oluştur

    Args:
        module_name: Modül adı (__name__)

    Returns:
        logging.Logger: Logger nesnesi
    """
    if module_name.startswith(f"{ROOT_LOGGER}."):
        context = module_name[len(ROOT_LOGGER) + 1:]
    else:
        context = module_name
    return get_logger(context)
