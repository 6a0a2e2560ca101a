import json
import os
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..base.errors import DatasetError, SmilesParseError
from ..molgraph import parse_smiles


__all__ = (
    'COLUMNS',
    'DatasetRecord',
    'ingest',
    'load_dataset',
    'write_records',
)


COLUMNS = ('smiles', 'name', 'label', 'target')
FORMATS = ('csv', 'json')


@dataclass(frozen=True)
class DatasetRecord:
    """
    One molecule of a dataset.

    Parameters
    ----------
    smiles : str

        The molecule.

    name : str

        Display name, defaults to the SMILES string.

    label : {0, 1}, optional

        Class label, for classification.

    target : float, optional

        Real-valued target (e.g. a boiling point in Kelvin), for regression.

    """
    smiles: str
    name: str = ''
    label: int = None
    target: float = None

    def to_dict(self):
        return {
            'smiles': self.smiles,
            'name': self.name,
            'label': self.label,
            'target': self.target}


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, float) and np.isnan(value):
        return ''
    return str(value).strip()


def _parse_label(text):
    if text == '':
        return None
    try:
        value = float(text)
    except ValueError:
        value = None
    if value not in (0.0, 1.0):
        raise ValueError("label must be 0 or 1, got: {!r}".format(text))
    return int(value)


def _parse_target(text):
    if text == '':
        return None
    try:
        value = float(text)
    except ValueError:
        raise ValueError("target must be a number, got: {!r}".format(text))
    if not np.isfinite(value):
        raise ValueError("target must be finite, got: {!r}".format(text))
    return value


def _detect_format(path, format):
    fmt = format or os.path.splitext(str(path))[1].lstrip('.')
    fmt = str(fmt).lower()
    if fmt not in FORMATS:
        raise DatasetError(
            "unknown dataset format {!r}, expected one of: {}"
            .format(fmt, ', '.join(FORMATS)))
    return fmt


def _read_frame(path, fmt):
    try:
        if fmt == 'csv':
            return pd.read_csv(
                path, dtype=str, keep_default_na=False,
                skip_blank_lines=True)
        with open(path) as f:
            rows = json.load(f)
    except FileNotFoundError:
        raise DatasetError("no such dataset file: {}".format(path))
    except (ValueError, pd.errors.ParserError) as e:
        raise DatasetError("malformed {} file {}: {}".format(fmt, path, e))
    if isinstance(rows, dict):
        rows = rows.get('records')
    if not isinstance(rows, list) or \
            not all(isinstance(r, dict) for r in rows):
        raise DatasetError(
            "a JSON dataset must be a list of objects (or an object with a "
            "'records' list): {}".format(path))
    return pd.DataFrame(rows)


def ingest(path, format=None, require_values=True):
    """
    Load and validate a dataset file.

    Every row is validated (including a full SMILES parse) before anything is
    returned; if any row is bad, a single :class:`DatasetError` lists all of
    them with their line numbers.

    Parameters
    ----------
    path : str

        A CSV file with header ``smiles,name,label,target`` or a JSON list of
        objects with the same keys. Only ``smiles`` is mandatory as a column.

    format : {'csv', 'json'}, optional

        Defaults to the file extension.

    require_values : bool, optional

        Whether every row must have a label or a target. Datasets that are
        only compared, never trained on, can set this to false.

    Returns
    -------
    records : list of DatasetRecord

    Raises
    ------
    DatasetError

        If the file can't be read, or if any row is invalid.

    """
    fmt = _detect_format(path, format)
    frame = _read_frame(path, fmt)
    if 'smiles' not in frame.columns:
        raise DatasetError("{}: missing 'smiles' column".format(path))
    unknown = [c for c in frame.columns if c not in COLUMNS]
    if unknown:
        raise DatasetError("{}: unexpected column(s): {}".format(
            path, ', '.join(map(str, unknown))))

    # CSV line 1 is the header; JSON rows are counted from 1
    offset = 2 if fmt == 'csv' else 1
    records, errors = [], []
    for i, row in enumerate(frame.to_dict('records')):
        line = i + offset
        smiles = _cell(row.get('smiles'))
        try:
            if not smiles:
                raise ValueError("empty SMILES")
            parse_smiles(smiles)
            label = _parse_label(_cell(row.get('label')))
            target = _parse_target(_cell(row.get('target')))
        except (SmilesParseError, ValueError) as e:
            errors.append((line, str(e)))
            continue
        if require_values and label is None and target is None:
            errors.append((line, "neither label nor target given"))
            continue
        name = _cell(row.get('name')) or smiles
        records.append(DatasetRecord(smiles, name, label, target))

    if errors:
        raise DatasetError(
            "{} invalid row(s) in {}".format(len(errors), path), errors)
    if not records:
        raise DatasetError("{}: no records".format(path))
    return records


def write_records(records, path=None, format='csv'):
    """
    Write records in the format read by :func:`ingest`.

    Returns the text if ``path`` is omitted.

    """
    frame = pd.DataFrame(
        [r.to_dict() for r in records], columns=list(COLUMNS))
    frame['label'] = frame['label'].astype('Int64')
    if format == 'csv':
        return frame.to_csv(path, index=False, float_format='%.12g')
    text = json.dumps([r.to_dict() for r in records], indent=2)
    if path is None:
        return text
    with open(path, 'w') as f:
        f.write(text + '\n')


def load_dataset(ref, require_values=True):
    """
    Load a dataset by fixture name (see :func:`list_fixtures`) or by path.

    A fixture name may carry its ``.csv`` suffix. An existing file of the
    same name takes precedence over the fixture.

    """
    from .fixtures import list_fixtures, load_fixture
    name = str(ref)
    if os.path.isfile(name):
        return ingest(name, require_values=require_values)
    stem, ext = os.path.splitext(name)
    if ext == '.csv' and stem in list_fixtures():
        name = stem
    if name in list_fixtures():
        return load_fixture(name, require_values=require_values)
    return ingest(name, require_values=require_values)
