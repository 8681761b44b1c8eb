"""Closed-form invariants of rank-2 moduli spaces."""
