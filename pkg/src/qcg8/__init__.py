"""Girth-8 QC-LDPC codes with column weight 7 and 8."""

__version__ = "0.1.0"
