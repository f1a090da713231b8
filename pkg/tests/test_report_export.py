#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Değerlendirme raporu dışa aktarım testleri
"""

import csv

import openpyxl

from core.evaluation import evaluate
from data.corpus import LabeledChunk
from data.report_export import HEADERS, SHEET_NAME, export_report_csv, export_report_excel, report_rows

PER = LabeledChunk(0, 1, "PER")
LOC = LabeledChunk(3, 3, "LOC")


def sample_report():
    return evaluate([[PER]], [[PER, LOC]])


def test_report_rows():
    rows = report_rows(sample_report())
    assert [row[0] for row in rows] == ["LOC", "PER", "overall"]
    assert rows[-1] == ["overall", 1, 1, 2, 100.0, 50.0, 66.67]


def test_excel(tmp_path):
    path = tmp_path / "rapor.xlsx"
    assert export_report_excel(sample_report(), path) == str(path)

    wb = openpyxl.load_workbook(path)
    ws = wb[SHEET_NAME]
    assert [cell.value for cell in ws[1]] == HEADERS
    assert ws.max_row == 4
    assert ws.cell(row=4, column=1).value == "overall"
    assert ws.cell(row=4, column=1).font.bold
    assert ws.cell(row=4, column=7).value == 66.67


def test_csv(tmp_path):
    path = tmp_path / "rapor.csv"
    export_report_csv(sample_report(), path)
    with open(path, newline="", encoding="utf-8") as f:
        rows = list(csv.reader(f))
    assert rows[0] == HEADERS
    assert rows[1][0] == "LOC"
    assert rows[-1] == ["overall", "1", "1", "2", "100.0", "50.0", "66.67"]
