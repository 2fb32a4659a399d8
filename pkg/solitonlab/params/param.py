#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Typed pipeline parameters and their binding to config sections."""


from inspect import Parameter
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Tuple

import solitonlab.params.ptype as PTYPE
from solitonlab.exception import ConfigError
from solitonlab.utility import ReprMixin, ReprType

_Factory = Tuple[Any, Optional[Iterable[Any]], PTYPE.PType]


def param(
    default: Any = Parameter.empty,
    options: Optional[Iterable[Any]] = None,
    ptype: PTYPE.PType = PTYPE.Any,
) -> _Factory:
    """Declare a pipeline parameter for :meth:`Params.from_factories`.

    Arguments:
        default: The value used when the config section omits the key, none for a required key.
        options: The allowed values, any value of the type when not given.
        ptype: The type that checks and dumps values.

    Returns:
        The declaration, named by the keyword it is passed with.

    """
    return default, options, ptype


class Param(Parameter):
    """One named, typed pipeline parameter.

    Arguments:
        name: The key in the pipeline section.
        default: The value used when the key is omitted.
        options: The allowed values.
        ptype: The type that checks and dumps values.

    """

    def __init__(
        self,
        name: str,
        default: Any = Parameter.empty,
        options: Optional[Iterable[Any]] = None,
        ptype: PTYPE.PType = PTYPE.Any,
    ) -> None:
        super().__init__(name, Parameter.KEYWORD_ONLY, default=default)
        self.options = frozenset(options) if options else None
        self.ptype = ptype

    @property
    def required(self) -> bool:
        """Return whether the config section must give this key.

        Returns:
            ``True`` when the parameter has no default.

        """
        return self.default is Parameter.empty

    def check(self, arg: Any) -> Any:
        """Convert a raw config value and check it against the options.

        Arguments:
            arg: The raw value.

        Returns:
            The converted value.

        Raises:
            ValueError: When the value is not one of the options.

        """
        value = self.ptype.check(arg)
        if self.options is not None and value not in self.options:
            allowed = ", ".join(sorted(map(str, self.options)))
            raise ValueError(f"{value!r} is not one of {allowed}")
        return value

    def dump(self, arg: Any) -> Any:
        """Convert a checked value back into a json-able value.

        Arguments:
            arg: The checked value.

        Returns:
            The json-able value.

        """
        return self.ptype.dump(arg)


class Params(Mapping[str, Param], ReprMixin):
    """The ordered parameters of one pipeline.

    Arguments:
        values: The parameters by name.

    """

    _repr_type = ReprType.MAPPING

    def __init__(self, values: Optional[Mapping[str, Param]] = None) -> None:
        self._params: Dict[str, Param] = dict(values) if values else {}

    def __getitem__(self, key: str) -> Param:
        return self._params[key]

    def __iter__(self) -> Iterator[str]:
        return iter(self._params)

    def __len__(self) -> int:
        return len(self._params)

    @classmethod
    def from_factories(cls, **factories: _Factory) -> "Params":
        """Build the parameters from :func:`param` declarations, in keyword order.

        Arguments:
            factories: The declarations keyed by parameter name.

        Returns:
            The parameters.

        """
        params = cls()
        for name, (default, options, ptype) in factories.items():
            params.add(Param(name, default, options, ptype))
        return params

    def add(self, value: Param) -> None:
        """Append one parameter.

        Arguments:
            value: The parameter.

        Raises:
            KeyError: When a parameter with the same name exists.

        """
        if value.name in self._params:
            raise KeyError(f"Parameter '{value.name}' is declared twice")
        self._params[value.name] = value

    def bind(self, arguments: Mapping[str, Any]) -> Dict[str, Any]:
        """Check a config section against the parameters and fill in defaults.

        Defaults are taken as they are and are not checked.

        Arguments:
            arguments: The raw section, usually parsed from YAML.

        Returns:
            The checked values of every parameter.

        Raises:
            ConfigError: When a key is unknown, missing or invalid.

        """
        for key in sorted(arguments):
            if key not in self._params:
                raise ConfigError("unknown key", key=key)

        bound: Dict[str, Any] = {}
        for name, parameter in self._params.items():
            if name in arguments:
                try:
                    bound[name] = parameter.check(arguments[name])
                except (TypeError, ValueError) as error:
                    raise ConfigError(str(error), key=name) from None
            elif parameter.required:
                raise ConfigError("missing required key", key=name)
            else:
                bound[name] = parameter.default
        return bound

    def dump(self, arguments: Mapping[str, Any]) -> Dict[str, Any]:
        """Convert bound values into the json-able echo of a report.

        Arguments:
            arguments: The values returned by :meth:`bind`.

        Returns:
            The json-able values.

        """
        return {name: self._params[name].dump(value) for name, value in arguments.items()}
