#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#

"""Entry point of ``python -m solitonlab``."""

import sys

from solitonlab.cli.main import main

sys.exit(main())
