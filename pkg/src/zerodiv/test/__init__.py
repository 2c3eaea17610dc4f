# -*- test-case-name: zerodiv.test -*-
# Copyright (c) 2024. See LICENSE for details.

"""
Tests for L{zerodiv}.
"""
