#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""Generic setup script."""

import setuptools

setuptools.setup()
