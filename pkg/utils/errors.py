#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Hata Sınıfları
Araç takımı genelinde kullanılan hata türleri.

Tüm hatalar ValueError'dan türer; böylece ``except ValueError`` ile yakalayan
çağıranlar çalışmaya devam eder.
"""


class ToolkitError(ValueError):
    """Araç takımının temel hata sınıfı"""


class ShapeError(ToolkitError):
    """Tensör boyutları uyuşmuyor"""


class DomainError(ToolkitError):
    """Girdi, işlemin tanım kümesinin dışında (boş dizi, aralık dışı indeks vb.)"""


class UsageError(ToolkitError):
    """API veya komut yanlış kullanıldı"""


class ContractViolation(ToolkitError):
    """Ön koşulu sağlanmayan bir işlem istendi (ör. geçersiz geçiş eylemi)"""


class ArchiveError(ToolkitError):
    """Model arşivi okunamadı veya beklenen türde değil"""


class ParseError(ToolkitError):
    """Dosya ayrıştırma hatası

    Args:
        message: Hata mesajı
        line_number: Hatalı satır numarası (1'den başlar, bilinmiyorsa None)
    """

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"satır {line_number}: {message}"
        super().__init__(message)


class SchemeValidationError(ToolkitError):
    """Etiket dizisi veya öbek listesi şemaya uymuyor

    Args:
        message: Hata mesajı
        index: İlk hatalı konumun indeksi (0'dan başlar)
    """

    def __init__(self, message, index=None):
        self.index = index
        if index is not None:
            message = f"indeks {index}: {message}"
        super().__init__(message)


class ConfigError(ToolkitError):
    """Geçersiz yapılandırma anahtarı veya değeri

    Args:
        message: Hata mesajı
        key: Sorunlu anahtar adı
    """

    def __init__(self, message, key=None):
        self.key = key
        super().__init__(message)
