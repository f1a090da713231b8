#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Ana Uygulama Modülü
LSTM-CRF ve Stack-LSTM varlık tanıma modellerini eğiten, etiketleyen ve
değerlendiren komut satırı arayüzü.

Komutlar:
    train   Derlemden model eğit, en iyi kontrol noktasını arşive yaz
    tag     Arşivlenmiş modelle CoNLL girdisini etiketle (stdout)
    eval    Tahmin ve altın dosyalarını varlık düzeyinde karşılaştır (stdout)
    synth   Sentetik PER/LOC/ORG derlemi üret

Çıkış kodları: 0 başarı, 1 çalışma hatası, 2 kullanım/yapılandırma hatası.
"""

import argparse
import sys
from pathlib import Path

from core.evaluation import evaluate_model, evaluate_tags
from core.model import build_model
from core.training import SGDConfig, Trainer
from data.corpus import (TagScheme, convert_scheme, load_corpus, parse_conll,
                         read_conll_file, tag_inventory, write_conll, write_conll_file)
from data.model_archive import load_model, save_model
from data.report_export import export_report_csv, export_report_excel
from data.synthetic import generate_corpus
from data.vocabulary import build_vocab
from utils.config import MODEL_TYPES, load_config, model_settings, resolve_normalize_digits
from utils.errors import ConfigError, ToolkitError, UsageError
from utils.logger import get_logger_with_context, log_uncaught_exceptions, setup_logger

logger = get_logger_with_context(__name__)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

# Komut satırı seçeneği → yapılandırma anahtarı
FLAG_KEYS = {
    "model": "model",
    "language": "language",
    "scheme": "scheme",
    "input_scheme": "input_scheme",
    "seed": "seed",
    "log_level": "log_level",
    "log_file": "log_file",
    "word_dim": "embeddings.word_dim",
    "char_dim": "embeddings.char_dim",
    "char_hidden_dim": "embeddings.char_hidden_dim",
    "use_char": "embeddings.use_char",
    "pretrained": "embeddings.pretrained",
    "hidden_dim": "network.hidden_dim",
    "tagger_hidden_dim": "network.tagger_hidden_dim",
    "use_crf": "network.use_crf",
    "constrained_decoding": "network.constrained_decoding",
    "learning_rate": "training.learning_rate",
    "clip_threshold": "training.clip_threshold",
    "epochs": "training.epochs",
    "dropout": "training.dropout",
    "progress": "training.progress",
    "train": "paths.train",
    "dev": "paths.dev",
    "test": "paths.test",
    "out": "paths.output",
    "workers": "tagging.workers",
}


def _add_common_options(parser):
    parser.add_argument("--config", help="YAML/JSON yapılandırma dosyası")
    parser.add_argument("--seed", type=int, help="Rastgelelik tohumu")
    parser.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ERROR")
    parser.add_argument("--log-file", dest="log_file", help="Dönen log dosyası")


def build_parser():
    """Komut satırı ayrıştırıcısı"""
    parser = argparse.ArgumentParser(prog="varlik-tanima", description="Sinir ağı tabanlı varlık tanıma")
    commands = parser.add_subparsers(dest="command")

    train = commands.add_parser("train", help="Model eğit")
    _add_common_options(train)
    train.add_argument("--model", choices=MODEL_TYPES, help="Model türü")
    train.add_argument("--language", help="Dil kodu (en, de, es, nl ...)")
    train.add_argument("--scheme", help="Model etiket şeması (iob2, iobes)")
    train.add_argument("--input-scheme", dest="input_scheme", help="Derlem şeması (iob1, iob2, iobes)")
    train.add_argument("--train", help="Eğitim derlemi (CoNLL)")
    train.add_argument("--dev", help="Geliştirme derlemi (CoNLL)")
    train.add_argument("--test", help="Test derlemi (CoNLL)")
    train.add_argument("--out", help="Model arşivi yolu")
    train.add_argument("--epochs", type=int)
    train.add_argument("--learning-rate", dest="learning_rate", type=float)
    train.add_argument("--clip", dest="clip_threshold", type=float)
    train.add_argument("--dropout", type=float)
    train.add_argument("--word-dim", dest="word_dim", type=int)
    train.add_argument("--char-dim", dest="char_dim", type=int)
    train.add_argument("--char-hidden-dim", dest="char_hidden_dim", type=int)
    train.add_argument("--hidden-dim", dest="hidden_dim", type=int)
    train.add_argument("--tagger-hidden-dim", dest="tagger_hidden_dim", type=int)
    train.add_argument("--pretrained", help="Önceden eğitilmiş gömme dosyası")
    train.add_argument("--char", dest="use_char", action=argparse.BooleanOptionalAction, default=None,
                       help="Karakter temsili kullanılsın mı")
    train.add_argument("--crf", dest="use_crf", action=argparse.BooleanOptionalAction, default=None,
                       help="LSTM-CRF'de CRF katmanı kullanılsın mı")
    train.add_argument("--constrained-decoding", dest="constrained_decoding",
                       action=argparse.BooleanOptionalAction, default=None)
    train.add_argument("--progress", action=argparse.BooleanOptionalAction, default=None)

    tag = commands.add_parser("tag", help="Arşivlenmiş modelle etiketle")
    _add_common_options(tag)
    tag.add_argument("model_path", help="Model arşivi")
    tag.add_argument("input", help="CoNLL girdi dosyası ('-' ise stdin)")
    tag.add_argument("--model", choices=MODEL_TYPES, help="Beklenen model türü")
    tag.add_argument("--output", help="Çıktı dosyası (varsayılan stdout)")
    tag.add_argument("--workers", type=int, help="Paralel çözümleme iş parçacığı sayısı")

    ev = commands.add_parser("eval", help="Tahminleri altın etiketlerle karşılaştır")
    _add_common_options(ev)
    ev.add_argument("pred_file", help="Tahmin CoNLL dosyası (son sütun etiket)")
    ev.add_argument("gold_file", help="Altın CoNLL dosyası (son sütun etiket)")
    ev.add_argument("--scheme", dest="eval_scheme", help="Tahminlerin şeması")
    ev.add_argument("--gold-scheme", dest="gold_scheme", help="Altın dosyanın şeması (varsayılan --scheme)")
    ev.add_argument("--format", dest="output_format", choices=("table", "kv", "both"), default="both")
    ev.add_argument("--xlsx", help="Raporu Excel dosyasına da yaz")
    ev.add_argument("--csv", help="Raporu CSV dosyasına da yaz")

    synth = commands.add_parser("synth", help="Sentetik derlem üret")
    _add_common_options(synth)
    synth.add_argument("--sentences", type=int, default=200)
    synth.add_argument("--scheme", dest="output_scheme", help="Çıktı şeması (varsayılan input_scheme)")
    synth.add_argument("--out", required=True, help="Çıktı CoNLL dosyası")

    return parser


def _overrides(args):
    values = {}
    for dest, key in FLAG_KEYS.items():
        value = getattr(args, dest, None)
        if value is not None:
            values[key] = value
    return values


def _configure(args):
    config = load_config(args.config, _overrides(args))
    setup_logger(log_level=config["log_level"], log_file=config["log_file"])
    return config


def cmd_train(args):
    """Eğitim: en iyi kontrol noktası ve dönem raporu"""
    config = _configure(args)
    paths = config["paths"]
    if not paths["train"]:
        raise UsageError("Eğitim derlemi verilmedi (--train)")
    scheme = TagScheme.parse(config["scheme"])
    input_scheme = TagScheme.parse(config["input_scheme"])
    normalize = resolve_normalize_digits(config)

    train_set = load_corpus(paths["train"], input_scheme, scheme, normalize)
    if not train_set:
        raise UsageError(f"Eğitim derlemi boş: {paths['train']}")
    dev_set = load_corpus(paths["dev"], input_scheme, scheme, normalize) if paths["dev"] else None

    labels = {chunk.label for sentence in train_set for chunk in sentence.gold_chunks(scheme)}
    vocab = build_vocab(train_set, config["embeddings"]["min_word_freq"], tags=tag_inventory(labels, scheme))
    model = build_model(vocab, model_settings(config))

    output = paths["output"]

    def save_best(best_model, record):
        if output:
            save_model(best_model, output)

    progress = config["training"]["progress"] and sys.stderr.isatty()
    trainer = Trainer(SGDConfig.from_config(config), progress=progress, on_best=save_best)
    report = trainer.train(model, train_set, dev_set)

    if output:
        report.save(f"{output}.report.jsonl")
    print(f"best_epoch={report.best_epoch}")
    print(f"best_f1={report.best_f1:.2f}")

    if paths["test"]:
        test_set = load_corpus(paths["test"], input_scheme, scheme, normalize)
        test_report = evaluate_model(model, test_set)
        sys.stdout.write(test_report.format_table())
    return EXIT_OK


def _read_input(path, normalize):
    if path == "-":
        return parse_conll(sys.stdin.read(), tag_column=None, normalize=normalize)
    return read_conll_file(path, tag_column=None, normalize=normalize)


def cmd_tag(args):
    """Etiketleme: girdi sözcükleri ve model şemasında tahmin etiketleri"""
    config = _configure(args)
    model = load_model(args.model_path, expected_type=args.model)
    sentences = _read_input(args.input, model.settings["normalize_digits"])
    model.tag_sentences(sentences, workers=config["tagging"]["workers"])
    text = write_conll(sentences, use_predicted=True)
    if args.output:
        write_conll_file(args.output, sentences, use_predicted=True)
    else:
        sys.stdout.write(text)
    logger.info(f"{len(sentences)} cümle etiketlendi")
    return EXIT_OK


def _check_alignment(pred, gold):
    """İlk uyuşmayan cümlenin indeksiyle UsageError"""
    for index, (p, g) in enumerate(zip(pred, gold)):
        if p.surfaces != g.surfaces:
            raise UsageError(f"Dosyalar {index}. cümlede hizalı değil")
    if len(pred) != len(gold):
        index = min(len(pred), len(gold))
        raise UsageError(f"Cümle sayıları farklı ({len(pred)} != {len(gold)}); "
                         f"dosyalar {index}. cümlede hizalı değil")


def cmd_eval(args):
    """Değerlendirme: metin tablosu ve anahtar=değer satırları"""
    config = _configure(args)
    scheme = TagScheme.parse(args.eval_scheme or config["scheme"])
    gold_scheme = TagScheme.parse(args.gold_scheme) if args.gold_scheme else scheme

    pred = read_conll_file(args.pred_file, normalize=False)
    gold = read_conll_file(args.gold_file, normalize=False)
    _check_alignment(pred, gold)
    gold_tags = [convert_scheme(s.gold_tags, gold_scheme, scheme) for s in gold]
    report = evaluate_tags([s.gold_tags for s in pred], gold_tags, scheme)

    if args.output_format in ("table", "both"):
        sys.stdout.write(report.format_table())
    if args.output_format == "both":
        sys.stdout.write("\n")
    if args.output_format in ("kv", "both"):
        sys.stdout.write(report.format_kv())
    if args.xlsx:
        export_report_excel(report, args.xlsx)
    if args.csv:
        export_report_csv(report, args.csv)
    return EXIT_OK


def cmd_synth(args):
    """Sentetik derlemi dosyaya yaz"""
    config = _configure(args)
    scheme = TagScheme.parse(args.output_scheme or config["input_scheme"])
    if args.sentences < 1:
        raise UsageError(f"Cümle sayısı pozitif olmalı: {args.sentences}")
    sentences = generate_corpus(args.sentences, config["seed"], scheme=scheme, normalize=False)
    write_conll_file(args.out, sentences)
    return EXIT_OK


COMMANDS = {
    "train": cmd_train,
    "tag": cmd_tag,
    "eval": cmd_eval,
    "synth": cmd_synth,
}


def main(argv=None):
    """Komut satırı giriş noktası

    Returns:
        int: Çıkış kodu
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except (ConfigError, UsageError) as e:
        logger.error(str(e))
        print(f"hata: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        logger.error(str(e))
        print(f"hata: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ToolkitError, OSError) as e:
        logger.error(f"{args.command} başarısız: {e}")
        print(f"hata: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.excepthook = log_uncaught_exceptions
    sys.exit(main())
