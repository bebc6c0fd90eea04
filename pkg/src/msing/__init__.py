"""Exact computer algebra for matrix-family singularities.

Submodules:

- algebra: multivariate polynomials over the rationals, determinants,
  Pfaffians, resultants, univariate root finding.
- families: square / symmetric / skew-symmetric matrix families, the
  verification catalog, quasi-homogeneous weight solving, file format.
- tangent: equivalence tangent spaces and Tjurina numbers.
- quotient: graded and truncated quotient dimensions, Milnor numbers,
  boundary algebras, discriminantal Milnor numbers.
- critical: link quadratic forms, critical-point reductions, critical
  values, odd-function and curve models, covering-degree indices.
- skew: numeric skew linear algebra (Pfaffian, skew eigenvalues,
  quaternionic reality checks).
- lattice: cycle lattices, reflection operators, double covers.
- cli: the `msing` command-line front end.
"""

__version__ = "0.1.0"
