#!/usr/bin/env python3
#
# Copyright 2026 solitonlab contributors. Licensed under MIT License.
#
"""Pipeline parameter declarations and checks."""

from solitonlab.params import ptype
from solitonlab.params.param import Param, Params, param

__all__ = ["Param", "Params", "param", "ptype"]
