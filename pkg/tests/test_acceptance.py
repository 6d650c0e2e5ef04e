"""Acceptance suite: every promised identity, exact, one line per criterion.

All comparisons are zero-tolerance equalities in rational or symbolic
arithmetic.  Each criterion delegates to the corresponding verification
suite (shared with the command line's ``verify``) and prints one PASS/FAIL
line; run with ``pytest tests/test_acceptance.py -v -s`` to see them.
"""

import pytest

from qweyl.suites import ALL_SUITES, DEFAULT_SEED

CRITERIA = [
    ("01", "pbw-associativity",
     "product normal forms are association-independent (>=200 triples)"),
    ("02", "z-relations-quantum",
     "all eleven commutation families with the z family, n=1..4"),
    ("03", "semiclassical-consistency",
     "table bracket of limits equals the (t-1)-limit bracket (>=200 pairs)"),
    ("04", "bracket-closed-forms",
     "limit brackets of generator pairs match the closed coefficient table, n<=4"),
    ("05", "jacobi",
     "jacobiator vanishes on >=100 random triples"),
    ("06", "z-relations-poisson",
     "full Poisson bracket table with the z family, n=1..4"),
    ("07", "torus-derivative-link",
     "stratum bracket forms equal commutation exponents dotted with mu, n=1..4"),
    ("08", "center-lattices",
     "quantized and Poisson center lattices coincide and match the box oracle, n<=3"),
    ("09", "admissible-counts",
     "enumerator equals brute-force filter; counts 2/6/20/68 for n=1..4"),
    ("10", "interpolation",
     "interpolation residuals are exactly zero; (2,3,1) gives t^2 - t + 1"),
    ("11", "specialization",
     "specialization is multiplicative at >=5 rational sample points"),
    ("12", "rescaling-relations",
     "rescaled defining relations normalize to zero, n<=3"),
    ("13", "quantum-plane",
     "demo relation xy = eta1 yx and limit bracket {x,y} = xy"),
    ("14", "torus-relations-ideal",
     "torus commutation relations reduce into the stratum ideal, n<=3"),
]


@pytest.mark.parametrize("number,name,blurb", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_acceptance(number, name, blurb):
    result = ALL_SUITES[name]() if name in ("admissible-counts", "quantum-plane") \
        else ALL_SUITES[name](DEFAULT_SEED)
    status = "PASS" if result.passed else "FAIL"
    print(f"ACCEPTANCE {number} {name}: {status} "
          f"({result.checks} checks; {result.detail}) -- {blurb}")
    assert result.passed, f"criterion {number} ({name}): {result.detail}"
