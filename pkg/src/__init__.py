"""Exact invariants of rank-2 character varieties and Higgs moduli spaces."""
