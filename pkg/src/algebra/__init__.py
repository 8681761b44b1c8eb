"""Exact rational polynomial and power-series algebra."""
