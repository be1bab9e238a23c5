"""CSV ingestion for the estimators.

Accepted format: UTF-8, comma separator, decimal point, one header row of
column names, numeric cells only.
"""

import csv
from pathlib import Path

import numpy as np

from ..errors import ConfigError
from ..estimators import Dataset


def read_csv_dataset(path, x_cols, y_cols) -> Dataset:
    """Load named predictor and response columns from a numeric CSV file."""
    path = Path(path)
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None:
                raise ConfigError(f"{path}: empty file")
            rows = list(reader)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    index = {name.strip(): i for i, name in enumerate(header)}
    for name in list(x_cols) + list(y_cols):
        if name not in index:
            raise ConfigError(f"{path}: no column named {name!r} (have {sorted(index)})")
    try:
        data = np.array([[float(cell) for cell in row] for row in rows if row], dtype=float)
    except ValueError as exc:
        raise ConfigError(f"{path}: non-numeric cell ({exc})") from exc
    if data.size == 0:
        raise ConfigError(f"{path}: no data rows")
    x = data[:, [index[c] for c in x_cols]]
    y = data[:, [index[c] for c in y_cols]]
    return Dataset(X=x, Y=y)
