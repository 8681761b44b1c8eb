"""Decomposition theorem multiplicities and the intersection E-polynomial assembly."""
