#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""Compact reprs for grids, profiles, reports and the arrays they hold."""

from enum import Enum, auto
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, Mapping, Sequence, Type, TypeVar, Union

import numpy as np

MAX_REPR_ITEMS = 8


class ReprType(Enum):
    """How a :class:`ReprMixin` subclass is printed.

    ``INSTANCE`` lists the ``_repr_attrs``, ``SEQUENCE`` and ``MAPPING`` print the items.

    """

    INSTANCE = auto()
    SEQUENCE = auto()
    MAPPING = auto()


class ReprMixin:
    """Attribute-listing repr for domain objects.

    Subclasses name the attributes to print in ``_repr_attrs``. Arrays print as their
    shape and dtype, and nesting deeper than ``_repr_maxlevel`` is folded.

    """

    _repr_type = ReprType.INSTANCE
    _repr_attrs: Iterable[str] = ()
    _repr_maxlevel = 1

    def __repr__(self) -> str:
        return _format(self, self._repr_maxlevel, True)

    def __str__(self) -> str:
        return _format(self, self._repr_maxlevel, False)

    def _repr_head(self) -> str:
        return type(self).__name__


_Printer = Callable[[Any, int, bool], str]
_PrinterKey = Union[Type[Any], ReprType]

_PRINTERS: Dict[_PrinterKey, _Printer] = {}


class _PrinterRegister:
    """Register the decorated function as the printer of a type or repr type.

    Arguments:
        key: The type or :class:`ReprType` dispatched to the printer.

    """

    _P = TypeVar("_P", bound=_Printer)

    def __init__(self, key: _PrinterKey) -> None:
        self._key = key

    def __call__(self, printer: _P) -> _P:
        _PRINTERS[self._key] = printer
        return printer


def _format(obj: Any, level: int, folding: bool) -> str:
    # pylint: disable=protected-access
    key = obj._repr_type if isinstance(obj, ReprMixin) else type(obj)
    printer = _PRINTERS.get(key)
    if printer is None:
        return repr(obj)
    return printer(obj, level, folding)


def _items(texts: Sequence[str], total: int) -> str:
    if total > MAX_REPR_ITEMS:
        return ", ".join([*texts, f"...({total})"])
    return ", ".join(texts)


@_PrinterRegister(ReprType.INSTANCE)
def _print_instance(obj: ReprMixin, level: int, folding: bool) -> str:
    # pylint: disable=protected-access
    names = [name for name in obj._repr_attrs if hasattr(obj, name)]
    if not names:
        return obj._repr_head()
    if folding and level <= 0:
        return f"{obj._repr_head()}(...)"

    lines = [f"  {name}: {_format(getattr(obj, name), level - 1, folding)}" for name in names]
    body = ",\n".join(lines)
    return f"{obj._repr_head()}(\n{body}\n)"


@_PrinterRegister(ReprType.SEQUENCE)
def _print_sequence(obj: Any, level: int, folding: bool) -> str:
    # pylint: disable=protected-access
    return f"{obj._repr_head()} {_print_list(list(obj), level, folding)}"


@_PrinterRegister(ReprType.MAPPING)
def _print_mapping(obj: Any, level: int, folding: bool) -> str:
    # pylint: disable=protected-access
    return f"{obj._repr_head()} {_print_dict(dict(obj), level, folding)}"


@_PrinterRegister(list)
@_PrinterRegister(tuple)
def _print_list(obj: Sequence[Any], level: int, folding: bool) -> str:
    if not obj:
        return "[]"
    if folding and level <= 0:
        return "[...]"

    texts = [_format(item, level - 1, folding) for item in obj[:MAX_REPR_ITEMS]]
    return f"[{_items(texts, len(obj))}]"


@_PrinterRegister(dict)
def _print_dict(obj: Mapping[Any, Any], level: int, folding: bool) -> str:
    if not obj:
        return "{}"
    if folding and level <= 0:
        return "{...}"

    pairs = list(obj.items())[:MAX_REPR_ITEMS]
    texts = [f"{key!r}: {_format(value, level - 1, folding)}" for key, value in pairs]
    return f"{{{_items(texts, len(obj))}}}"


@_PrinterRegister(np.ndarray)
def _print_ndarray(obj: np.ndarray, _: int, __: bool) -> str:
    return f"array(shape={obj.shape}, dtype={obj.dtype})"


@_PrinterRegister(Fraction)
def _print_fraction(obj: Fraction, _: int, __: bool) -> str:
    return str(obj)


@_PrinterRegister(float)
def _print_float(obj: float, _: int, __: bool) -> str:
    return f"{obj:.12g}"
