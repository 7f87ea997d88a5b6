"""
Shared models, exact polynomials and helpers
"""
