"""Exact verification engine for smooth projective horospherical varieties of Picard number one."""

__version__ = "0.1.0"
