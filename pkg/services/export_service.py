import io
import csv
import json

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4, landscape
from reportlab.platypus import SimpleDocTemplate, Table, TableStyle, Paragraph, Spacer
from reportlab.lib.styles import getSampleStyleSheet
from openpyxl import Workbook
from openpyxl.styles import Font, PatternFill

from models import ImbalanceReport, ComparisonMatrix, ComparisonColumn, SeriesPoint
from services.metrics_service import MetricsService
from utils import format_number, format_count, format_flag, format_ratio
from utils.errors import EmptySeries, NonMonotonicAxis, EmptyComparison, InvalidParameter
from utils.i18n import get_text

SCHEMA_VERSION = 1


class ExportService:
    TEXT_FORMATS = ('markdown', 'csv', 'json')
    BINARY_FORMATS = ('pdf', 'xlsx')

    @staticmethod
    def generate_csv(data, headers, bom=False):
        """
        Generates a CSV string from a list of lists.
        :param data: List of lists (rows)
        :param headers: List of strings (header row)
        :param bom: prefix a UTF-8 BOM for Excel
        :return: str
        """
        output = io.StringIO()
        writer = csv.writer(output, lineterminator='\n')

        writer.writerow(headers)
        for row in data:
            writer.writerow(row)

        text = output.getvalue()
        return '\ufeff' + text if bom else text

    @staticmethod
    def generate_pdf(data, headers, title, subtitle=None):
        """
        Generates PDF bytes from a list of lists.
        :param data: List of lists (rows)
        :param headers: List of strings (header row)
        :param title: Title of the document
        :return: bytes (PDF content)
        """
        buffer = io.BytesIO()
        # invariant=1 keeps the bytes stable between runs (no creation date/id)
        doc = SimpleDocTemplate(buffer, pagesize=landscape(A4), invariant=1)
        elements = []
        styles = getSampleStyleSheet()

        elements.append(Paragraph("TraceSampler SGI-TS", styles['Title']))
        elements.append(Paragraph(title, styles['Heading2']))
        if subtitle:
            elements.append(Paragraph(subtitle, styles['Normal']))
        elements.append(Spacer(1, 20))

        cleaned_data = []
        for row in data:
            cleaned_row = [str(cell) if cell is not None else "" for cell in row]
            cleaned_data.append(cleaned_row)

        t = Table([headers] + cleaned_data, repeatRows=1)

        style = TableStyle([
            ('BACKGROUND', (0, 0), (-1, 0), colors.Color(0.2, 0.4, 0.6)), # Dark Blue Header
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
            ('ALIGN', (1, 0), (-1, -1), 'RIGHT'),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, 0), 9),
            ('BOTTOMPADDING', (0, 0), (-1, 0), 8),
            ('BACKGROUND', (0, 1), (-1, -1), colors.whitesmoke),
            ('GRID', (0, 0), (-1, -1), 0.5, colors.grey),
            ('FONTNAME', (0, 1), (-1, -1), 'Helvetica'),
            ('FONTSIZE', (0, 1), (-1, -1), 8),
            ('VALIGN', (0, 0), (-1, -1), 'MIDDLE'),
        ])
        t.setStyle(style)

        elements.append(t)
        doc.build(elements)
        buffer.seek(0)
        return buffer.getvalue()

    @staticmethod
    def generate_xlsx(data, headers, title):
        wb = Workbook()
        ws = wb.active
        ws.title = title[:31]
        ws.append(headers)
        for cell in ws[1]:
            cell.font = Font(bold=True, color='FFFFFF')
            cell.fill = PatternFill('solid', fgColor='336699')
        for row in data:
            ws.append(row)
        buffer = io.BytesIO()
        wb.save(buffer)
        return buffer.getvalue()

    # --- Report / matrix tables ---

    @staticmethod
    def _report_headers(report, lang):
        if report.spec is None:
            return [get_text('report.protocol', lang), get_text('report.packets', lang),
                    get_text('report.percent', lang), get_text('report.probability', lang)]
        return [get_text('report.protocol', lang), get_text('report.packets', lang),
                get_text('report.sampled', lang), get_text('report.sampled_percent', lang),
                get_text('report.probability', lang)]

    @staticmethod
    def _report_rows(report, decimals):
        # P(s) is a share of 1 where percentages are shares of 100
        prob_decimals = decimals + 2
        rows = []
        for share in report.per_class:
            row = [share.label, format_count(share.source_count)]
            if report.spec is not None:
                row.append(format_count(share.sampled_count))
            row.append(format_number(share.sampled_percent, decimals))
            row.append(format_number(share.selection_probability, prob_decimals))
            rows.append(row)
        return rows

    @staticmethod
    def _matrix_rows(matrix, decimals):
        rows = []
        for i, label in enumerate(matrix.row_labels):
            rows.append([label] + [format_number(col.shares[i], decimals) for col in matrix.columns])
        return rows

    @staticmethod
    def _markdown_table(headers, rows, footer=None):
        lines = ['| ' + ' | '.join(headers) + ' |',
                 '|' + '|'.join(['---'] + ['---:'] * (len(headers) - 1)) + '|']
        for row in rows:
            lines.append('| ' + ' | '.join(row) + ' |')
        for row in footer or []:
            lines.append('| ' + ' | '.join(row) + ' |')
        return lines

    @staticmethod
    def _report_markdown(report, decimals, lang, seed):
        title = get_text('report.title_analysis' if report.spec is None else 'report.title_sample', lang)
        sampler = get_text('report.identity', lang) if report.spec is None else report.spec.describe()
        shown_seed = report.seed if report.seed is not None else seed
        lines = [
            f"# {title}",
            '',
            f"- {get_text('report.sampler', lang)}: {sampler}",
            f"- {get_text('report.seed', lang)}: {'' if shown_seed is None else shown_seed}",
            f"- {get_text('report.population', lang)}: {report.source.total}",
            f"- {get_text('report.classes', lang)}: {report.source.class_count}",
            '',
        ]
        lines.extend(ExportService._markdown_table(
            ExportService._report_headers(report, lang), ExportService._report_rows(report, decimals)))
        missing = ', '.join(report.missing_classes)
        lines.extend([
            '',
            f"- {get_text('report.total', lang)}: {report.total_sampled}",
            f"- {get_text('report.size_percent', lang)}: {format_number(report.size_percent, decimals)}",
            f"- {get_text('report.missing', lang)}: {report.missing_count}" + (f" ({missing})" if missing else ''),
            f"- {get_text('report.imbalance_ratio', lang)}: {format_ratio(report.imbalance_ratio, decimals)}",
        ])
        if report.synthetic_count:
            lines.append(f"- {get_text('report.synthetic', lang)}: {report.synthetic_count}")
        return '\n'.join(lines) + '\n'

    @staticmethod
    def _matrix_markdown(matrix, decimals, lang, seed):
        headers = [get_text('report.protocol', lang)] + [col.heading for col in matrix.columns]
        footer = [[get_text('report.missing', lang)] + [str(col.missing_count) for col in matrix.columns]]
        lines = [f"# {get_text('report.title_comparison', lang)}", '']
        if seed is not None:
            lines.extend([f"- {get_text('report.seed', lang)}: {seed}", ''])
        lines.extend(ExportService._markdown_table(headers, ExportService._matrix_rows(matrix, decimals), footer))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def report_to_dict(report, seed=None):
        return {
            'schema_version': SCHEMA_VERSION,
            'seed': report.seed if report.seed is not None else seed,
            'source': report.source.to_dict(),
            'spec': report.spec.to_dict() if report.spec is not None else None,
            'per_class': [share.to_dict() for share in report.per_class],
            'totals': {
                'total_sampled': report.total_sampled,
                'size_percent': report.size_percent,
                'class_count': report.source.class_count,
                'missing_count': report.missing_count,
                'imbalance_ratio': report.imbalance_ratio,
                'synthetic_count': report.synthetic_count
            },
            'missing': list(report.missing_classes)
        }

    @staticmethod
    def matrix_to_dict(matrix, seed=None):
        return {
            'schema_version': SCHEMA_VERSION,
            'seed': seed,
            'source': matrix.source.to_dict() if matrix.source is not None else None,
            'rows': list(matrix.row_labels),
            'columns': [
                {
                    'spec': col.spec.to_dict(),
                    'size': col.size,
                    'missing_count': col.missing_count,
                    'shares': list(col.shares)
                }
                for col in matrix.columns
            ]
        }

    @staticmethod
    def _table(obj, decimals, lang):
        """(headers, rows) of a report or matrix for csv/pdf/xlsx."""
        if isinstance(obj, ImbalanceReport):
            headers = ['label', 'source_count', 'sampled_count', 'sampled_percent', 'selection_probability']
            rows = [[s.label, format_count(s.source_count), format_count(s.sampled_count),
                     format_number(s.sampled_percent, decimals), format_number(s.selection_probability, decimals + 2)]
                    for s in obj.per_class]
            return headers, rows
        headers = ['label'] + [col.heading for col in obj.columns]
        rows = ExportService._matrix_rows(obj, decimals)
        rows.append(['missing_count'] + [str(col.missing_count) for col in obj.columns])
        return headers, rows

    @staticmethod
    def render_table(obj, fmt='markdown', decimals=None, lang='en', seed=None, bom=False):
        """Deterministic text rendering of an ImbalanceReport or ComparisonMatrix."""
        if not isinstance(obj, (ImbalanceReport, ComparisonMatrix)):
            raise InvalidParameter(f"Objet non affichable: {type(obj).__name__}")
        if decimals is None:
            decimals = obj.decimals if isinstance(obj, ImbalanceReport) else 3

        if fmt == 'markdown':
            if isinstance(obj, ImbalanceReport):
                return ExportService._report_markdown(obj, decimals, lang, seed)
            return ExportService._matrix_markdown(obj, decimals, lang, seed)
        if fmt == 'csv':
            headers, rows = ExportService._table(obj, decimals, lang)
            return ExportService.generate_csv(rows, headers, bom=bom)
        if fmt == 'json':
            data = ExportService.report_to_dict(obj, seed) if isinstance(obj, ImbalanceReport) \
                else ExportService.matrix_to_dict(obj, seed)
            return json.dumps(data, indent=2, ensure_ascii=False) + '\n'
        raise InvalidParameter(f"Format texte inconnu: '{fmt}'")

    @staticmethod
    def render_binary(obj, fmt, decimals=3, lang='en'):
        headers, rows = ExportService._table(obj, decimals, lang)
        if isinstance(obj, ImbalanceReport):
            title = get_text('report.title_analysis' if obj.spec is None else 'report.title_sample', lang)
            subtitle = get_text('report.identity', lang) if obj.spec is None else obj.spec.describe()
        else:
            title = get_text('report.title_comparison', lang)
            subtitle = None
        if fmt == 'pdf':
            return ExportService.generate_pdf(rows, headers, title, subtitle)
        if fmt == 'xlsx':
            return ExportService.generate_xlsx(rows, headers, 'report')
        raise InvalidParameter(f"Format binaire inconnu: '{fmt}'")

    @staticmethod
    def parse_report_json(text):
        return json.loads(text)

    # --- Comparison / series / samples ---

    @staticmethod
    def build_comparison(source_histogram, samples):
        """One column per sample, rows in source-histogram order."""
        if not samples:
            raise EmptyComparison("Une comparaison demande au moins une exécution")
        columns = []
        for sample in samples:
            report = MetricsService.class_report(source_histogram, sample)
            columns.append(ComparisonColumn(
                spec=sample.spec,
                size=sample.size,
                shares=tuple(share.sampled_percent for share in report.per_class),
                missing_count=report.missing_count
            ))
        return ComparisonMatrix(row_labels=source_histogram.labels, columns=tuple(columns), source=source_histogram)

    @staticmethod
    def missing_series_export(series, decimals=6, bands=False):
        """x, observed, expected as CSV; blanks where a value does not apply."""
        points = [p if isinstance(p, SeriesPoint) else SeriesPoint(*p) for p in series]
        if not points:
            raise EmptySeries("La série est vide")
        for previous, current in zip(points, points[1:]):
            if current.x <= previous.x:
                raise NonMonotonicAxis(f"Axe non strictement croissant: {previous.x} puis {current.x}")

        headers = ['x', 'observed', 'expected'] + (['low', 'high'] if bands else [])
        rows = []
        for p in points:
            row = [str(p.x), format_number(p.observed, decimals), format_number(p.expected, decimals)]
            if bands:
                row += [format_count(p.low), format_count(p.high)]
            rows.append(row)
        return ExportService.generate_csv(rows, headers)

    @staticmethod
    def render_sample_csv(sample, bom=False):
        rows = [[str(e.source_position), e.label, format_flag(e.synthetic)] for e in sample.entries]
        return ExportService.generate_csv(rows, ['source_position', 'label', 'synthetic'], bom=bom)
