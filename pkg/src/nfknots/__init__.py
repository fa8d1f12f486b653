"""nfknots: exact 3-braid algebra, lens-space surgery arithmetic, link
polynomial invariants, and certified braid classifications.

Subpackages and modules:
  braid3     words in the 3-strand braid group and rho: B_3 -> SL(2,Z)
  sl2z       2x2 integer matrices; reconstructing words from matrices
  lens       lens spaces, modular inverses, 2-bridge braid-index tests
  surgery    Dehn surgery on unknots and torus knots
  diagrams   PD codes, diagram builders, named-knot catalog
  invariants Jones / Alexander / HOMFLY / determinant, Burau matrices
  hfk        bigraded dimension tables and thin-profile enumeration
  classify   braid enumerations and certificates
  verify     the acceptance suite
"""

__version__ = "0.1.0"
