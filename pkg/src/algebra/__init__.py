"""
src.algebra

Exact polynomial arithmetic in four variables over the rationals and over
Laurent polynomials in the stabiliser parameters, plus the small amount of
rational linear algebra the orbit equality tests need.
"""
