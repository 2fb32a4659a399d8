#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""solitonlab version info."""

__version__ = "0.1.0.dev"
