#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""The PyArrow extension types and tables to represent sampled complex fields."""

import json
from pathlib import Path
from typing import Any, Dict, Mapping, Type, TypeVar, Union

import numpy as np
import pyarrow as pa
import pyarrow.csv as pacsv
import pyarrow.feather as feather

_METADATA_KEY = b"solitonlab"


class ComplexArray(pa.ExtensionArray):  # type: ignore[misc]
    """This class defines the PyArrow representation of complex sample arrays."""

    def to_complex(self) -> np.ndarray:
        """Convert the array to a numpy complex array.

        Returns:
            The complex128 numpy array.

        """
        pairs = self.storage.flatten().to_numpy(zero_copy_only=False)
        return pairs.reshape(-1, 2) @ np.array([1.0, 1.0j])


class ComplexType(pa.ExtensionType):  # type: ignore[misc]
    """This class defines the PyArrow representation of complex128 samples.

    The storage is a fixed size list of two float64 values (real and imaginary part),
    which Arrow lays out as little-endian 64-bit float pairs.

    """

    _T = TypeVar("_T", bound="ComplexType")

    _NAME = "solitonlab.complex128"

    def __init__(self) -> None:
        pa.ExtensionType.__init__(self, pa.list_(pa.float64(), 2), self._NAME)

    def __arrow_ext_serialize__(self) -> bytes:
        return json.dumps({"name": self._NAME}).encode("utf-8")

    @classmethod
    def __arrow_ext_deserialize__(
        cls: Type[_T], storage_type: pa.DataType, serialized: bytes
    ) -> _T:
        return cls()

    def __arrow_ext_class__(self) -> Type[ComplexArray]:  # pylint: disable=no-self-use
        return ComplexArray


COMPLEX128 = ComplexType()
pa.register_extension_type(COMPLEX128)


def complex_array(values: np.ndarray) -> ComplexArray:
    """Create a complex extension array from numpy samples.

    Arguments:
        values: The complex samples, flattened in C order.

    Returns:
        The :class:`ComplexArray`.

    """
    flat = np.ascontiguousarray(np.asarray(values, dtype=np.complex128).ravel())
    pairs = pa.array(flat.view(np.float64), type=pa.float64())
    storage = pa.FixedSizeListArray.from_arrays(pairs, 2)
    return pa.ExtensionArray.from_storage(COMPLEX128, storage)


def attach_metadata(table: pa.Table, metadata: Mapping[str, Any]) -> pa.Table:
    """Attach json metadata to the schema of a table.

    Arguments:
        table: The table.
        metadata: The json-able metadata.

    Returns:
        The table with replaced schema metadata.

    """
    encoded = json.dumps(metadata, sort_keys=True).encode("utf-8")
    return table.replace_schema_metadata({_METADATA_KEY: encoded})


def read_metadata(table: pa.Table) -> Dict[str, Any]:
    """Read the json metadata attached by :func:`attach_metadata`.

    Arguments:
        table: The table.

    Returns:
        The metadata dict, empty when nothing was attached.

    """
    metadata = table.schema.metadata or {}
    if _METADATA_KEY not in metadata:
        return {}
    return json.loads(metadata[_METADATA_KEY].decode("utf-8"))  # type: ignore[no-any-return]


def write_feather(table: pa.Table, path: Union[str, Path]) -> None:
    """Write a table as an uncompressed Feather (Arrow IPC) file.

    Arguments:
        table: The table.
        path: The output path.

    """
    feather.write_feather(table, str(path), compression="uncompressed")


def read_feather(path: Union[str, Path]) -> pa.Table:
    """Read a Feather (Arrow IPC) file.

    Arguments:
        path: The input path.

    Returns:
        The table with its schema metadata.

    """
    return feather.read_table(str(path))


def write_csv(columns: Mapping[str, np.ndarray], path: Union[str, Path]) -> None:
    """Write real-valued columns as a CSV file.

    Arguments:
        columns: Column name to 1D real array, in output order.
        path: The output path.

    """
    table = pa.table({name: pa.array(np.asarray(values)) for name, values in columns.items()})
    pacsv.write_csv(table, str(path))


def read_csv(path: Union[str, Path]) -> Dict[str, np.ndarray]:
    """Read a CSV file into numpy columns.

    Arguments:
        path: The input path.

    Returns:
        Column name to numpy array, in file order.

    """
    table = pacsv.read_csv(str(path))
    return {name: table.column(name).to_numpy() for name in table.column_names}


def complex_column(table: pa.Table, name: str) -> np.ndarray:
    """Read a complex extension column of a table.

    Arguments:
        table: The table.
        name: The column name.

    Returns:
        The complex128 numpy array.

    """
    chunks = table.column(name).chunks
    if not chunks:
        return np.zeros(0, dtype=np.complex128)
    return np.concatenate([chunk.to_complex() for chunk in chunks])
