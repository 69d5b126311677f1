"""Difference-of-squares factoring toolkit for numbers of the form 4n^2 + 1
and for Fermat numbers 2^(2^n) + 1.

Subpackages:

* ``arith``          exact integer helpers (square roots, residues, primality)
* ``quadform``       candidate enumeration and residue filters for N = 4n^2+1
* ``fermat_generic`` plain difference-of-squares factoring for any odd N
* ``fermat_numbers`` Lucas-form divisor search and centered search for F_n
* ``audit``          brute-force oracle and claim-verification harness
* ``bench``          candidate-count / wall-time comparison of strategies
* ``cli``            command-line front end
"""

__version__ = "0.1.0"
