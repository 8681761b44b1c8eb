"""Output formats for invariant results and tables."""
