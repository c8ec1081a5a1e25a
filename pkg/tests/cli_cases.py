"""Command lines with their expected exit status, shared by the CLI tests."""

from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def fx(name):
    return str(FIXTURES / name)


CASES = [
    (["check", fx("perfect5.lie")], 0),
    (["check", "gl2", "--field", "F5"], 0),
    (["check", fx("not_lie.lie")], 1),
    (["check", fx("malformed.lie")], 2),
    (["der", "perfect5"], 0),
    (["der", "sl2", "--format", "machine"], 0),
    (["twder", "gl2", "--scan", "0,1,-1,2,3"], 0),
    (["twder", "gl2", "--lambda", "0,1,0,0"], 1),
    (["twder", "gl2", "--lambda", "1,0"], 2),
    (["codim1", "gl2", "--lambda", "0,0,0,0", "--D", fx("gl2_q0.matrix")], 0),
    (["codim1", "gl2", "--lambda", "1,0,0,1", "--D", fx("gl2_identity.matrix")], 1),
    (["product", "--kind", "twisted", fx("heisenberg.datum")], 0),
    (["product", fx("heisenberg.datum")], 0),
    (["product", fx("nonlie.datum")], 1),
    (["product", "--kind", "twisted", fx("nonlie.datum")], 2),
    (["extract", "perfect5", "--gdim", "3"], 0),
    (["extract", "heisenberg3", "--gdim", "2"], 1),
    (["equiv-twder", "gl2", fx("gl2_zero.pair"), fx("gl2_inner.pair")], 0),
    (["equiv-twder", "gl2", fx("gl2_zero.pair"), fx("gl2_identity.pair")], 1),
    (["equiv-twder", "gl2", fx("gl2_zero.pair"), fx("missing.pair")], 2),
    (["classify-codim1", "gl2"], 0),
    (["classify-codim1", "abelian:1", "--field", "F3", "--format", "machine"], 0),
    (["enumerate", "--p", "3", "--g", "abelian:1", "--dimv", "1"], 0),
    (["enumerate", "--p", "2", "--g", "abelian:2", "--dimv", "1", "--workers", "2"], 0),
    (["enumerate", "--p", "4", "--g", "abelian:1", "--dimv", "1"], 2),
    (["enumerate", "--p", "3", "--g", "abelian:2", "--dimv", "2"], 2),
    (["catalog", "perfect5"], 0),
    (["catalog", "so3"], 2),
    (["frobnicate"], 2),
    (["der"], 2),
    (["der", "sl2", "--bogus"], 2),
]
