"""E-polynomials of singular strata and their resolutions."""
