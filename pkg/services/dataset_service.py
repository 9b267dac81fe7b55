"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Logic and implementation for dataset_service.py
"""

import codecs
import csv
import io
import json
import logging
import os

import numpy as np

from models import PacketRecord, TraceDataset, ClassHistogram, DatasetSplit
from utils.errors import (MissingLabelColumn, EmptyLabel, MalformedRow, EmptyDataset, ZeroTotal,
                          HistogramSpecError, InvalidParameter)
from utils.rng import make_rng, class_rng

logger = logging.getLogger(__name__)


class DatasetService:
    # Wireshark "Export Packet Dissections > As CSV" layout
    WIRESHARK_COLUMNS = ('No.', 'Time', 'Source', 'Destination', 'Protocol', 'Length', 'Info')
    ARRANGEMENTS = ('shuffled', 'grouped')
    FORMATS = ('csv', 'ndjson')

    @staticmethod
    def decode_text(data, error=MalformedRow):
        """UTF-8, with or without the BOM written by Excel and --excel-bom."""
        data = bytes(data)
        offset = len(codecs.BOM_UTF8) if data.startswith(codecs.BOM_UTF8) else 0
        try:
            return data[offset:].decode('utf-8')
        except UnicodeDecodeError as e:
            position = offset + e.start
            line = data.count(b'\n', 0, position) + 1
            raise error(f"Octet invalide 0x{data[position]:02x} (position {position}), UTF-8 attendu", line=line)

    @staticmethod
    def read_text(path, error=MalformedRow):
        with open(path, 'rb') as f:
            return DatasetService.decode_text(f.read(), error)

    @staticmethod
    def _as_text(stream):
        if isinstance(stream, str):
            return io.StringIO(stream.removeprefix('\ufeff'), newline='')
        if isinstance(stream, io.TextIOBase):
            return stream
        data = stream if isinstance(stream, (bytes, bytearray)) else stream.read()
        return io.StringIO(DatasetService.decode_text(data), newline='')

    @staticmethod
    def parse_records(stream, fmt='csv', label_column='Protocol'):
        """
        Reads labeled packet records from a CSV or NDJSON stream.
        Positions are assigned 1..P in file order, every non-label column
        is kept as an attribute.
        """
        if fmt not in DatasetService.FORMATS:
            raise InvalidParameter(f"Format d'entrée inconnu: '{fmt}'")
        text = DatasetService._as_text(stream)
        if fmt == 'csv':
            dataset = DatasetService._parse_csv(text, label_column)
        else:
            dataset = DatasetService._parse_ndjson(text, label_column)
        logger.info("Parsed %d records (%s, label column '%s')", dataset.population, fmt, label_column)
        return dataset

    @staticmethod
    def _parse_csv(text, label_column):
        reader = csv.reader(text)
        try:
            header = next(reader, None)
        except csv.Error as e:
            raise MalformedRow(f"En-tête CSV illisible: {e}", line=1)
        if header is None:
            raise EmptyDataset("Le fichier ne contient aucune ligne")

        header = [h.strip() for h in header]
        if label_column not in header:
            raise MissingLabelColumn(f"Colonne de label '{label_column}' absente de l'en-tête: {header}", line=1)
        label_index = header.index(label_column)
        other = [(i, name) for i, name in enumerate(header) if i != label_index]

        records = []
        while True:
            try:
                row = next(reader)
            except StopIteration:
                break
            except csv.Error as e:
                raise MalformedRow(f"Ligne CSV illisible: {e}", line=reader.line_num)
            if not row:
                continue
            line = reader.line_num
            if len(row) != len(header):
                raise MalformedRow(f"{len(row)} colonnes au lieu de {len(header)}", line=line)
            position = len(records) + 1
            label = row[label_index].strip()
            if not label:
                raise EmptyLabel(f"Label vide à l'enregistrement {position}", line=line)
            attributes = tuple((name, row[i]) for i, name in other)
            records.append(PacketRecord(position=position, label=label, attributes=attributes))

        if not records:
            raise EmptyDataset("Le fichier ne contient aucune ligne de données")
        return TraceDataset(records=tuple(records), label_column=label_column, columns=tuple(header))

    @staticmethod
    def _stringify(value):
        if isinstance(value, str):
            return value
        return json.dumps(value, sort_keys=True, ensure_ascii=False)

    @staticmethod
    def _parse_ndjson(text, label_column):
        records = []
        columns = [label_column]
        for line_number, line in enumerate(text, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise MalformedRow(f"JSON invalide: {e.msg}", line=line_number)
            if not isinstance(obj, dict):
                raise MalformedRow("Chaque ligne doit être un objet JSON", line=line_number)
            if label_column not in obj:
                raise MissingLabelColumn(f"Champ de label '{label_column}' absent", line=line_number)

            position = len(records) + 1
            raw = obj[label_column]
            label = '' if raw is None else DatasetService._stringify(raw).strip()
            if not label:
                raise EmptyLabel(f"Label vide à l'enregistrement {position}", line=line_number)
            attributes = []
            for key, value in obj.items():
                if key == label_column:
                    continue
                if key not in columns:
                    columns.append(key)
                attributes.append((key, '' if value is None else DatasetService._stringify(value)))
            records.append(PacketRecord(position=position, label=label, attributes=tuple(attributes)))

        if not records:
            raise EmptyDataset("Le fichier ne contient aucune ligne de données")
        return TraceDataset(records=tuple(records), label_column=label_column, columns=tuple(columns))

    @staticmethod
    def infer_format(path):
        ext = os.path.splitext(path)[1].lower()
        if ext in ('.ndjson', '.jsonl'):
            return 'ndjson'
        return 'csv'

    @staticmethod
    def read_dataset(path, fmt=None, label_column='Protocol'):
        fmt = fmt or DatasetService.infer_format(path)
        return DatasetService.parse_records(DatasetService.read_text(path), fmt=fmt, label_column=label_column)

    @staticmethod
    def histogram(dataset):
        """Counts per exact label, ordered by first appearance."""
        if dataset.population == 0:
            raise EmptyDataset("Impossible de calculer l'histogramme d'un jeu vide")
        counts = {}
        for label in dataset.labels:
            counts[label] = counts.get(label, 0) + 1
        return ClassHistogram(entries=tuple(counts.items()))

    @staticmethod
    def synthesize(spec, seed=0, arrangement='shuffled'):
        """
        Builds a dataset with exactly the counts of `spec`.
        grouped: classes emitted contiguously in histogram order.
        shuffled: one seeded uniform permutation of the grouped layout.
        """
        if arrangement not in DatasetService.ARRANGEMENTS:
            raise InvalidParameter(f"Arrangement inconnu: '{arrangement}'")
        if spec.total < 1:
            raise ZeroTotal("L'histogramme ne contient aucune instance")

        codes = np.repeat(np.arange(spec.class_count), [count for _, count in spec.entries])
        if arrangement == 'shuffled':
            codes = codes[make_rng(seed).permutation(codes.size)]

        labels = spec.labels
        records = tuple(
            PacketRecord(position=position, label=labels[code],
                         attributes=DatasetService._placeholder_attributes(position))
            for position, code in enumerate(codes.tolist(), start=1)
        )
        logger.info("Synthesized %d records over %d classes (seed=%s, %s)",
                    len(records), spec.class_count, seed, arrangement)
        return TraceDataset(records=records, label_column='Protocol', columns=DatasetService.WIRESHARK_COLUMNS)

    @staticmethod
    def _placeholder_attributes(position):
        return (
            ('No.', str(position)),
            ('Time', f"{(position - 1) / 1000:.6f}"),
            ('Source', ''),
            ('Destination', ''),
            ('Length', ''),
            ('Info', ''),
        )

    @staticmethod
    def write_dataset_csv(dataset, stream):
        """Writes the dataset back in its own column layout."""
        columns = dataset.columns or ('No.', dataset.label_column)
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(columns)
        for record in dataset.records:
            attributes = dict(record.attributes)
            if 'No.' not in attributes:
                attributes['No.'] = str(record.position)
            attributes[dataset.label_column] = record.label
            writer.writerow([attributes.get(column, '') for column in columns])

    @staticmethod
    def dataset_to_csv(dataset):
        output = io.StringIO()
        DatasetService.write_dataset_csv(dataset, output)
        return output.getvalue()

    @staticmethod
    def load_histogram_spec(text):
        """Parses 'label,count' lines. '#' starts a comment."""
        entries = []
        seen = set()
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if ',' not in line:
                raise HistogramSpecError(f"Ligne attendue 'label,count', reçu '{raw.strip()}'", line=line_number)
            label, count_text = line.rsplit(',', 1)
            label = label.strip()
            if not label:
                raise HistogramSpecError("Label vide", line=line_number)
            try:
                count = int(count_text.strip())
            except ValueError:
                raise HistogramSpecError(f"Effectif invalide '{count_text.strip()}'", line=line_number)
            if count < 1:
                raise HistogramSpecError(f"Effectif de '{label}' doit être >= 1, reçu {count}", line=line_number)
            if label in seen:
                raise HistogramSpecError(f"Label '{label}' en double", line=line_number)
            seen.add(label)
            entries.append((label, count))
        if not entries:
            raise ZeroTotal("L'histogramme ne contient aucune classe")
        return ClassHistogram(entries=tuple(entries))

    @staticmethod
    def read_histogram_spec(path):
        return DatasetService.load_histogram_spec(DatasetService.read_text(path, HistogramSpecError))

    @staticmethod
    def dump_histogram_spec(histogram):
        lines = [f"# {histogram.class_count} classes, {histogram.total} records"]
        lines.extend(f"{label},{count}" for label, count in histogram.entries)
        return '\n'.join(lines) + '\n'

    @staticmethod
    def train_test_split(dataset, test_fraction, seed=0):
        """
        Per-class holdout. A class of n_i >= 2 records sends
        round-half-up(n_i * test_fraction), clamped to [1, n_i - 1], to the
        test side; singleton classes stay in training.
        """
        if not 0 < test_fraction < 1:
            raise InvalidParameter(f"La fraction de test doit être dans ]0, 1[, reçu {test_fraction}")
        if dataset.population == 0:
            raise EmptyDataset("Impossible de séparer un jeu vide")

        strata = DatasetService.strata(dataset)
        test_positions = set()
        for index, (label, positions) in enumerate(strata):
            size = len(positions)
            if size < 2:
                continue
            quota = int(size * test_fraction + 0.5)
            quota = min(max(quota, 1), size - 1)
            chosen = class_rng(seed, index).choice(size, size=quota, replace=False)
            test_positions.update(positions[i] for i in chosen.tolist())

        train, test = [], []
        for record in dataset.records:
            (test if record.position in test_positions else train).append(record)
        return DatasetSplit(
            train=DatasetService._renumber(dataset, train),
            test=DatasetService._renumber(dataset, test),
            test_fraction=test_fraction,
            seed=seed
        )

    @staticmethod
    def _renumber(dataset, records):
        """Positions restart at 1; a No. column follows the new position."""
        renumbered = tuple(
            PacketRecord(position=i, label=r.label,
                         attributes=tuple((name, str(i) if name == 'No.' else value) for name, value in r.attributes))
            for i, r in enumerate(records, start=1)
        )
        return TraceDataset(records=renumbered, label_column=dataset.label_column, columns=dataset.columns)

    @staticmethod
    def strata(dataset):
        """[(label, [positions...]), ...] in first-appearance order, positions ascending."""
        groups = {}
        for record in dataset.records:
            groups.setdefault(record.label, []).append(record.position)
        return list(groups.items())
