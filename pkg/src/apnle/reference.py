"""Bundled reference tables for n in {6, 7, 8}.

KNOWN_CLASSES holds the published classification of tuple classes (B, A) of
prime-order linear self-equivalences realizable by permutations, one
representative per extended-power-similarity class.  Matrices are written as
';'-separated direct-sum blocks, top-left first: `I<k>` is a k-dimensional
identity block, anything else is the companion matrix of the given
polynomial.

EXPECTED_VERDICTS holds the known admissibility analysis per class:
  dim     rejected by the invariant-subspace dimension filter
  quad    rejected by the quadrinomial filter
  search  exhaustive search closed the class with no APN permutation
  yes     admissible (APN permutations exist)
  open    neither filter applies and no exhaustive search has closed it

KNOWN_SOLUTIONS maps admissible classes to their known solutions, as
monomial exponents over the default field, or the literal "dillon".
"""

SCHEMA_CLASSES = "apnle/classes-v1"
SCHEMA_VERDICTS = "apnle/verdicts-v1"
SCHEMA_GROUPS = "apnle/groups-v1"
SCHEMA_REPORT = "apnle/search-report-v1"

KNOWN_CLASSES = {
    6: [
        ("X^6+X^5+X^4+X^3+X+1", "X^6+X^3+X^2+1"),
        ("X^6+X^5+X^4+X^3+X+1", "X^6+X^5+X^3+X^2+X+1"),
        ("X^6+X^5+X^4+X^3+X+1", "X^6+X^5+X^4+1"),
        ("X^6+X^5+X^4+X^3+X+1", "X^6+X^5+X^4+X^3+X+1"),
        ("X^6+X^5+X^4+X^3+X^2+X+1", "X^6+X^5+X^4+X^3+X^2+X+1"),
        ("I1; X^5+1", "I1; X^5+1"),
        ("I2; X^4+X^3+X^2+1", "I2; X^4+X^2+X+1"),
        ("I2; X^4+X^3+X^2+1", "I2; X^4+X^3+X^2+1"),
        ("X^3+1; X^3+1", "X^3+1; X^3+1"),
        ("X^3+X^2+1; X^3+X^2+1", "X^6+X^5+X^4+X^3+X^2+X+1"),
        ("X^3+X^2+1; X^3+X^2+1", "X^3+X+1; X^3+X+1"),
        ("X^3+X^2+1; X^3+X^2+1", "X^3+X^2+1; X^3+X^2+1"),
        ("I3; X^3+1", "I3; X^3+1"),
        ("X^2+1; X^2+1; X^2+1", "X^2+1; X^2+1; X^2+1"),
        ("X^2+X+1; X^2+X+1; X^2+X+1", "X^2+X+1; X^2+X+1; X^2+X+1"),
        ("I2; X^2+1; X^2+1", "I2; X^2+1; X^2+1"),
        ("I4; X^2+1", "I4; X^2+1"),
    ],
    7: [
        ("X^7+1", "X^7+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^3+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^5+X^3+X+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^5+X^4+X^3+X^2+X+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^6+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^6+X^4+X+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^6+X^5+X^2+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^6+X^5+X^3+X^2+X+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^6+X^5+X^4+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^6+X^5+X^4+X^2+X+1"),
        ("X^7+X^6+X^5+X^4+X^3+X^2+1", "X^7+X^6+X^5+X^4+X^3+X^2+1"),
        ("I1; X^6+X^5+X^4+X^3+X+1", "I1; X^6+X^3+X^2+1"),
        ("I1; X^6+X^5+X^4+X^3+X+1", "I1; X^6+X^5+X^3+X^2+X+1"),
        ("I1; X^6+X^5+X^4+X^3+X+1", "I1; X^6+X^5+X^4+1"),
        ("I1; X^6+X^5+X^4+X^3+X+1", "I1; X^6+X^5+X^4+X^3+X+1"),
        ("I2; X^5+1", "I2; X^5+1"),
        ("X^3+X+1; X^4+X^3+X^2+1", "X^7+1"),
        ("X^3+X+1; X^4+X^3+X^2+1", "X^3+X^2+1; X^4+X^2+X+1"),
        ("X^3+X+1; X^4+X^3+X^2+1", "X^3+X+1; X^4+X^3+X^2+1"),
        ("I3; X^4+X^3+X^2+1", "I3; X^4+X^2+X+1"),
        ("I3; X^4+X^3+X^2+1", "I3; X^4+X^3+X^2+1"),
        ("I1; X^3+1; X^3+1", "I1; X^3+1; X^3+1"),
        ("X^2+X+1; X^2+X+1; X^3+1", "X^2+X+1; X^2+X+1; X^3+1"),
        ("I4; X^3+1", "I4; X^3+1"),
        ("I1; X^2+1; X^2+1; X^2+1", "I1; X^2+1; X^2+1; X^2+1"),
        ("I3; X^2+1; X^2+1", "I3; X^2+1; X^2+1"),
        ("I5; X^2+1", "I5; X^2+1"),
    ],
    8: [
        ("X^8+X^7+X^6+X^4+X^2+X+1", "X^8+X^5+X^4+X^3+1"),
        ("X^8+X^7+X^6+X^4+X^2+X+1", "X^8+X^7+X^6+X^4+X^2+X+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^6+X^4+X^3+X^2+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^6+X^5+X^4+X^2+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^6+X^5+X^4+X^3+X^2+X+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^7+X^4+X^3+X+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^7+X^5+X^2+X+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^7+X^5+X^4+X+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^7+X^6+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^7+X^6+X^3+X+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^7+X^6+X^5+X^3+1"),
        ("X^8+X^7+X^6+X^5+X^4+X^3+X^2+1", "X^8+X^7+X^6+X^5+X^4+X^3+X^2+1"),
        ("I1; X^7+1", "I1; X^7+1"),
        ("I2; X^6+X^5+X^4+X^3+X+1", "I2; X^6+X^3+X^2+1"),
        ("I2; X^6+X^5+X^4+X^3+X+1", "I2; X^6+X^5+X^3+X^2+X+1"),
        ("I2; X^6+X^5+X^4+X^3+X+1", "I2; X^6+X^5+X^4+1"),
        ("I2; X^6+X^5+X^4+X^3+X+1", "I2; X^6+X^5+X^4+X^3+X+1"),
        ("I3; X^5+1", "I3; X^5+1"),
        ("X^4+X^3+X^2+1; X^4+X^3+X^2+1", "I1; X^7+1"),
        ("X^4+X^3+X^2+1; X^4+X^3+X^2+1", "X^4+X^2+X+1; X^4+X^2+X+1"),
        ("X^4+X^3+X^2+1; X^4+X^3+X^2+1", "X^4+X^3+X^2+1; X^4+X^3+X^2+1"),
        ("X^4+X^3+X^2+X+1; X^4+X^3+X^2+X+1", "X^4+X^3+X^2+X+1; X^4+X^3+X^2+X+1"),
        ("I4; X^4+X^3+X^2+1", "I4; X^4+X^2+X+1"),
        ("I4; X^4+X^3+X^2+1", "I4; X^4+X^3+X^2+1"),
        ("X^2+X+1; X^3+1; X^3+1", "X^2+X+1; X^3+1; X^3+1"),
        ("I2; X^3+1; X^3+1", "I2; X^3+1; X^3+1"),
        ("I5; X^3+1", "I5; X^3+1"),
        ("X^2+1; X^2+1; X^2+1; X^2+1", "X^2+1; X^2+1; X^2+1; X^2+1"),
        ("X^2+X+1; X^2+X+1; X^2+X+1; X^2+X+1",
         "X^2+X+1; X^2+X+1; X^2+X+1; X^2+X+1"),
        ("I2; X^2+1; X^2+1; X^2+1", "I2; X^2+1; X^2+1; X^2+1"),
        ("I4; X^2+1; X^2+1", "I4; X^2+1; X^2+1"),
        ("I6; X^2+1", "I6; X^2+1"),
    ],
}

EXPECTED_VERDICTS = {
    6: {
        1: "search", 2: "search", 3: "search", 4: "quad", 5: "yes",
        6: "dim", 7: "search", 8: "quad", 9: "dim", 10: "search",
        11: "search", 12: "quad", 13: "dim", 14: "search", 15: "search",
        16: "dim", 17: "dim",
    },
    7: {
        1: "yes", 2: "quad", 3: "quad", 4: "yes", 5: "yes", 6: "quad",
        7: "yes", 8: "yes", 9: "yes", 10: "yes", 11: "quad", 12: "dim",
        13: "dim", 14: "dim", 15: "dim", 16: "open", 17: "search",
        18: "search", 19: "quad", 20: "dim", 21: "dim", 22: "open",
        23: "open", 24: "search", 25: "dim", 26: "search", 27: "dim",
    },
    8: {
        1: "search", 2: "search", 3: "quad", 4: "search", 5: "search",
        6: "search", 7: "quad", 8: "search", 9: "search", 10: "search",
        11: "quad", 12: "quad", 13: "dim", 14: "search", 15: "search",
        16: "search", 17: "quad", 18: "dim", 19: "dim", 20: "dim",
        21: "dim", 22: "open", 23: "search", 24: "quad", 25: "dim",
        26: "dim", 27: "search", 28: "dim", 29: "search", 30: "open",
        31: "search", 32: "dim",
    },
}

# admissible classes and their known solutions (monomial exponents over the
# default field of the dimension, or "dillon")
KNOWN_SOLUTIONS = {
    (6, 5): ["dillon"],
    (7, 1): [5, 9, 63, 78, 85, 88],
    (7, 4): [63],
    (7, 5): [9],
    (7, 7): [5],
    (7, 8): [78],
    (7, 9): [85],
    (7, 10): [88],
}

# classes where neither filter applies and exhaustion is out of desk reach
OPEN_CLASSES = {7: (16, 22, 23), 8: (22, 30)}

# known APN monomial permutation exponents per odd dimension (class
# representatives; used as labeled fixtures for solution grouping)
KNOWN_APN_MONOMIAL_PERMUTATIONS = {
    3: (3,),
    5: (3, 5, 7, 11, 15),
    7: (5, 9, 63, 78, 85, 88),
}
