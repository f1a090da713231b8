#!/usr/bin/env python3
"""
Varlık Tanıma Araç Takımı
LSTM-CRF ve Stack-LSTM tabanlı, dile bağımlı kaynak gerektirmeyen varlık tanıma.
"""

from setuptools import setup
import os

# Uzun açıklama için README dosyasını oku
here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

# Gerekli paketleri requirements.txt'den oku
with open(os.path.join(here, 'requirements.txt'), encoding='utf-8') as f:
    required = [line.split('#')[0].strip() for line in f.read().splitlines()]
    # Yorum satırlarını ve boş satırları temizle
    required = [line for line in required if line]

setup(
    name="varlik_tanima",
    version="1.0.0",
    description="Karakter ve sözcük temsilli sinir ağı varlık tanıma araç takımı",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
        "Topic :: Text Processing :: Linguistic",
        "Operating System :: OS Independent",
    ],
    keywords="varlık tanıma, ner, lstm, crf, stack-lstm, conll",
    packages=["core", "data", "utils"],
    py_modules=["main"],
    install_requires=required,
    extras_require={
        "test": ["pytest>=7.0.0"],
    },
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "varlik-tanima=main:main",
        ],
    },
    zip_safe=False,
)
