"""Exact symbolic workbench for the Racah and Bannai-Ito operator algebras."""

__version__ = "0.1.0"
