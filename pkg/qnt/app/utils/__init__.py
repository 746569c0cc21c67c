"""
Formatting and parsing utilities for emitted artifacts
"""
