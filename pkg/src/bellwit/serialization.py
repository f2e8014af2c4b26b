"""Reading and writing the file formats.

JSON is written with sorted keys and Python's shortest round-trip float repr, so identical
inputs give byte identical files. CSV numbers use 17 significant digits.
"""

import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Type, TypeVar, Union

import pandas as pd
from loguru import logger
from pydantic import BaseModel, ValidationError

from bellwit import exceptions
from bellwit.bell_tensor import BellTensor
from bellwit.correlation_tensor import CorrelationTensor
from bellwit.measurement_angles import MeasurementAngles


CSV_FLOAT_FORMAT = "%.17g"

ModelT = TypeVar("ModelT", bound=BaseModel)


def dumps(obj: Union[BaseModel, Dict[str, Any], List[Any]]) -> str:
    if isinstance(obj, BaseModel):
        obj = obj.model_dump(mode="json")

    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


def table_to_csv(table: pd.DataFrame) -> str:
    buffer = io.StringIO()
    table.to_csv(buffer, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")

    return buffer.getvalue()


def table_to_records(table: pd.DataFrame) -> List[Dict[str, Any]]:
    """Rows as plain Python dicts, integer columns as ``int`` and the rest as ``float``.
    """
    columns = {
        name: [int(v) for v in table[name]] if pd.api.types.is_integer_dtype(table[name])
        else [float(v) for v in table[name]]
        for name in table.columns
    }

    return [
        {name: columns[name][i] for name in table.columns}
        for i in range(len(table))
    ]


def record_to_csv(obj: BaseModel) -> str:
    """One header line and one row for a flat model. Nested values are written as JSON.
    """
    record = {
        key: json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value
        for key, value in obj.model_dump(mode="json").items()
    }

    return table_to_csv(pd.DataFrame([record], columns=sorted(record)))


def write_text(text: str, path: Optional[Union[str, Path]] = None) -> None:
    """Write to ``path``, or to stdout when ``path`` is ``None``.

    Raises
    ------
    bellwit.exceptions.InvalidDataError
        The file could not be written.
    """
    if path is None:
        print(text, end="")
        return

    try:
        Path(path).write_text(text)
    except OSError as error:
        raise exceptions.InvalidDataError(f"Could not write '{path}': {error}")

    logger.debug(f"Wrote {path}")


def read_model(path: Union[str, Path], model: Type[ModelT]) -> ModelT:
    """Read a JSON file and validate it as ``model``.

    Raises
    ------
    bellwit.exceptions.InvalidDataError
        The file can not be read, is not JSON, or violates an invariant of ``model``.
        The message names the failed invariant.
    """
    try:
        data = json.loads(Path(path).read_text())
    except OSError as error:
        raise exceptions.InvalidDataError(f"Could not read '{path}': {error}")
    except json.JSONDecodeError as error:
        raise exceptions.InvalidDataError(f"'{path}' is not valid JSON: {error}")

    try:
        obj = model.model_validate(data)
    except ValidationError as error:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in e['loc']) or model.__name__}: {e['msg']}"
            for e in error.errors()
        )
        raise exceptions.InvalidDataError(f"'{path}' is not a valid {model.__name__}: {problems}")

    logger.debug(f"Read {model.__name__} from {path}")

    return obj


def read_tensor(path: Union[str, Path]) -> BellTensor:
    return read_model(path, BellTensor)


def read_correlations(path: Union[str, Path]) -> CorrelationTensor:
    return read_model(path, CorrelationTensor)


def read_angles(path: Union[str, Path]) -> MeasurementAngles:
    return read_model(path, MeasurementAngles)
