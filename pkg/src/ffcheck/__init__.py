"""Exhaustive checks for primitive-element witnesses in F_{p^2}, with the
character-sum bounds that justify the search range and a toolkit for
discriminants over F_p[T] and Frobenius cycle-type sampling."""

__version__ = "0.1.0"
