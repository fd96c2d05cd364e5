"""q-special functions, orthogonal polynomials and their weights."""
