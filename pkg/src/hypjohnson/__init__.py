"""Exact verification of the hyperelliptic Johnson homomorphism calculus.

Free Lie algebra on a symplectic space, the theta ideal, degree -2
derivations and their projection onto V = Lambda^2 H / <theta>, Dehn twist
images, Collino monodromy and the span of Weierstrass classes.
"""

__version__ = "0.1.0"
