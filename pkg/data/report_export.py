#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Varlık Tanıma Araç Takımı - Rapor Dışa Aktarım Modülü
Değerlendirme raporunun Excel ve CSV biçimlerinde dışa aktarımı.
"""

import csv
import logging

import openpyxl
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side

from core.evaluation import OVERALL

# Modül için logger
logger = logging.getLogger(__name__)

HEADERS = ["Etiket", "Doğru", "Tahmin", "Altın", "Kesinlik (%)", "Duyarlılık (%)", "F1 (%)"]
SHEET_NAME = "Değerlendirme"


def report_rows(report):
    """Etiket satırları ve en sonda toplam satırı"""
    rows = []
    for label, score in list(report.labels.items()) + [(OVERALL, report.overall)]:
        rows.append([label, score.true_positives, score.predicted, score.gold,
                     score.precision, score.recall, score.f1])
    return rows


def export_report_excel(report, file_path):
    """Raporu biçimli başlıklı bir Excel çalışma kitabına yaz

    Args:
        report: EvalReport
        file_path: Kaydedilecek .xlsx yolu

    Returns:
        str: Yazılan dosyanın yolu
    """
    wb = openpyxl.Workbook()
    ws = wb.active
    ws.title = SHEET_NAME

    # Stil tanımları
    header_font = Font(bold=True, color="FFFFFF")
    header_fill = PatternFill(start_color="4472C4", end_color="4472C4", fill_type="solid")
    thin_border = Side(border_style="thin", color="000000")
    border = Border(left=thin_border, right=thin_border, top=thin_border, bottom=thin_border)

    for col_idx, header in enumerate(HEADERS, 1):
        cell = ws.cell(row=1, column=col_idx, value=header)
        cell.font = header_font
        cell.fill = header_fill
        cell.border = border
        cell.alignment = Alignment(horizontal="center", vertical="center")

    rows = report_rows(report)
    for row_idx, row_data in enumerate(rows, 2):
        for col_idx, value in enumerate(row_data, 1):
            cell = ws.cell(row=row_idx, column=col_idx, value=value)
            cell.border = border
            if isinstance(value, float):
                cell.number_format = "0.00"
                cell.alignment = Alignment(horizontal="right")
            elif isinstance(value, int):
                cell.alignment = Alignment(horizontal="right")
        if row_data[0] == OVERALL:
            for col_idx in range(1, len(HEADERS) + 1):
                ws.cell(row=row_idx, column=col_idx).font = Font(bold=True)

    # Sütun genişliklerini içeriğe göre ayarla
    for col in ws.columns:
        longest = max(len(str(cell.value)) for cell in col if cell.value is not None)
        ws.column_dimensions[col[0].column_letter].width = max(longest + 2, 10)

    try:
        wb.save(file_path)
    except OSError as e:
        logger.error(f"Excel dışa aktarımında hata: {e}")
        raise
    logger.info(f"Değerlendirme raporu Excel formatında dışa aktarıldı: {file_path}")
    return str(file_path)


def export_report_csv(report, file_path):
    """Raporu CSV dosyasına yaz (başlık satırı ve etiket satırları)"""
    with open(file_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(HEADERS)
        writer.writerows(report_rows(report))
    logger.info(f"Değerlendirme raporu CSV formatında dışa aktarıldı: {file_path}")
    return str(file_path)
