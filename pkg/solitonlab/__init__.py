#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""A numerical laboratory for compact-spectrum and multifrequency solitary waves."""

from solitonlab.__version__ import __version__
from solitonlab.utility import config

__all__ = ["__version__", "config"]
