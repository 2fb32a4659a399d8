#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Run configs: YAML files with one section per pipeline, plus key=value overrides."""

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Optional, Union

import yaml

from solitonlab.cli.pipelines import PIPELINES
from solitonlab.exception import ConfigError
from solitonlab.params import ptype
from solitonlab.utility import ReprMixin

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv")
DEFAULT_OUTPUT = "solitonlab-output"
DEFAULT_SEED = 0

_GLOBAL_KEYS = ("pipeline", "output", "seed", "format")

_PathLike = Union[str, Path]


class RunConfig(ReprMixin):
    """This class defines one resolved run: a pipeline, its raw arguments and the outputs.

    Arguments:
        pipeline: The pipeline tag.
        arguments: The raw pipeline arguments, checked later by the pipeline parameters.
        output: The output directory.
        seed: The seed of the randomized suites.
        output_format: The tabular export format, "json" or "csv".

    """

    _repr_attrs = ("pipeline", "arguments", "output", "seed", "output_format")

    def __init__(  # pylint: disable=too-many-arguments
        self,
        pipeline: str,
        arguments: Dict[str, Any],
        output: _PathLike = DEFAULT_OUTPUT,
        seed: int = DEFAULT_SEED,
        output_format: str = "json",
    ) -> None:
        if pipeline not in PIPELINES:
            raise ConfigError(f"unknown pipeline '{pipeline}'", key="pipeline")
        if output_format not in FORMATS:
            raise ConfigError(f"format must be one of {list(FORMATS)}", key="format")
        try:
            seed = ptype.Integer.check(seed)
        except TypeError as error:
            raise ConfigError(str(error), key="seed") from None
        if seed < 0:
            raise ConfigError("the seed must be nonnegative", key="seed")

        self.pipeline = pipeline
        self.arguments = arguments
        self.output = Path(output)
        self.seed = seed
        self.output_format = output_format

    @classmethod
    def from_pyobj(cls, contents: Mapping[str, Any]) -> "RunConfig":
        """Create a :class:`RunConfig` from a parsed config document.

        Arguments:
            contents: A python dict of the form::

                    {
                        "pipeline": <str>,
                        "output": <str>,                # optional
                        "seed": <int>,                  # optional
                        "format": "json" or "csv",      # optional
                        <pipeline>: {<key>: <value>, ...},
                        ...
                    }

        Returns:
            The run config.

        Raises:
            ConfigError: When a key is unknown or a section is not a mapping.

        """
        for key in contents:
            if key not in _GLOBAL_KEYS and key not in PIPELINES:
                raise ConfigError("unknown key", key=str(key))

        pipeline = contents.get("pipeline")
        if pipeline is None:
            raise ConfigError("no pipeline selected", key="pipeline")
        if not isinstance(pipeline, str):
            raise ConfigError("the pipeline must be a string", key="pipeline")

        section = contents.get(pipeline) or {}
        if not isinstance(section, Mapping):
            raise ConfigError("a pipeline section must be a mapping", key=pipeline)

        return cls(
            pipeline,
            dict(section),
            contents.get("output", DEFAULT_OUTPUT),
            contents.get("seed", DEFAULT_SEED),
            contents.get("format", "json"),
        )


def parse_value(text: str) -> Any:
    """Parse a command line value with YAML scalar rules.

    Arguments:
        text: The raw value, e.g. ``3``, ``9/5`` or ``[1, 0.1, 0.2, 0.02]``.

    Returns:
        The parsed value.

    Raises:
        ConfigError: When the value is not valid YAML.

    """
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as error:
        raise ConfigError(f"cannot parse '{text}': {error}") from None


def parse_overrides(items: Iterable[str]) -> Dict[str, Any]:
    """Parse ``key=value`` overrides.

    Arguments:
        items: The raw override strings.

    Returns:
        The parsed overrides, later items win.

    Raises:
        ConfigError: When an item has no "=" or an empty key.

    """
    overrides: Dict[str, Any] = {}
    for item in items:
        key, separator, value = item.partition("=")
        key = key.strip()
        if not separator or not key:
            raise ConfigError(f"expected key=value, got '{item}'")
        overrides[key] = parse_value(value)

    return overrides


def read_config_file(path: _PathLike) -> Dict[str, Any]:
    """Read a YAML run config file.

    Arguments:
        path: The config file path.

    Returns:
        The parsed document, empty for an empty file.

    Raises:
        ConfigError: When the file cannot be read or is not a YAML mapping.

    """
    try:
        with open(path, encoding="utf-8") as fp:
            contents = yaml.safe_load(fp)
    except OSError as error:
        raise ConfigError(f"cannot read config file: {error}") from None
    except yaml.YAMLError as error:
        raise ConfigError(f"malformed config file {path}: {error}") from None

    if contents is None:
        return {}
    if not isinstance(contents, dict):
        raise ConfigError(f"config file {path} must hold a mapping")
    return contents


def load_config(  # pylint: disable=too-many-arguments
    path: Optional[_PathLike] = None,
    pipeline: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    output: Optional[_PathLike] = None,
    seed: Optional[int] = None,
    output_format: Optional[str] = None,
) -> RunConfig:
    """Resolve a run config from a file and command line values.

    Command line values win over the file; overrides are merged into the section of the
    selected pipeline.

    Arguments:
        path: The YAML config file.
        pipeline: The pipeline selected on the command line.
        overrides: The parsed key=value overrides.
        output: The output directory from the command line.
        seed: The seed from the command line.
        output_format: The export format from the command line.

    Returns:
        The run config.

    """
    contents = read_config_file(path) if path is not None else {}
    if pipeline is not None:
        contents["pipeline"] = pipeline
    for key, value in (("output", output), ("seed", seed), ("format", output_format)):
        if value is not None:
            contents[key] = value

    config = RunConfig.from_pyobj(contents)
    if overrides:
        config.arguments.update(overrides)

    logger.debug("Resolved run config %s", config)
    return config
