"""Chromatic quasisymmetric functions of unit interval graphs and the
tableau growth process computing their e-expansion coefficients."""

__version__ = "0.1.0"
