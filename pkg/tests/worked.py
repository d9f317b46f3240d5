"""Worked examples shared by several test modules."""

from cisres.representations import BoolMatrix, SylPair, TermExponent


def mat(*rows):
    return BoolMatrix(tuple(tuple(int(c) for c in r) for r in rows))


def pair(s1, s2):
    return SylPair(mat(*s1), mat(*s2))


# term a^(3,3,3,2,2) b^(2,2,2,1)
TERM_54 = TermExponent((3, 3, 3, 2, 2), (2, 2, 2, 1))

RES_INPUT = mat("1011", "1101", "1101", "0011", "0110")
FLUSHED_OUT = mat("0000", "0000", "0000", "1110", "1111")

SORT_INPUT = pair(("0111", "0111", "1110", "0011", "0110"),
                  ("0000", "0100", "1010", "0000", "1111"))
SORT_OUTPUT = pair(("0111", "0111", "1101", "0011", "0110"),
                   ("0000", "0100", "0010", "1000", "1111"))
FLUSH_OUTPUT = pair(("1011", "1101", "1101", "0011", "0110"),
                    ("0000", "0000", "0000", "1110", "1111"))

SORT_SWAPS = ["SWAP S1 (3,3) <-> (3,4)", "SWAP S2 (3,1) <-> (4,1)"]
FLUSH_SWAPS = [
    "SWAP S2 (2,2) <-> (3,2)",
    "SWAP S2 (3,2) <-> (4,2)",
    "SWAP S1 (1,1) <-> (1,2)",
    "SWAP S2 (3,3) <-> (4,3)",
    "SWAP S1 (2,1) <-> (2,3)",
]
# state after the first flush round
FLUSH_ROUND1 = pair(("1011", "0111", "1101", "0011", "0110"),
                    ("0000", "0000", "0010", "1100", "1111"))

# a^(2,1,1) b^(1,1)
SMALL_TERM = TermExponent((2, 1, 1), (1, 1))
SMALL_RES = [mat("11", "10", "01"), mat("11", "01", "10")]
SMALL_SYL = [
    pair(("11", "01", "01"), ("00", "10", "01")),
    pair(("11", "01", "01"), ("00", "01", "10")),
    pair(("11", "01", "01"), ("00", "11", "00")),
    pair(("11", "10", "01"), ("00", "00", "11")),
    pair(("11", "01", "10"), ("00", "00", "11")),
    pair(("11", "10", "10"), ("00", "00", "11")),
]

NOTATION_M = mat("111", "101", "011", "010")

# (instance tag, params, alphas, betas, expected R = S)
SECTION_EXAMPLES = [
    ("tropical", {}, "1,3", "2,4", "13"),
    ("powerset", {"universe": "1..5"}, "[1,2],[3,4]", "[2,3],[4,5]", "∅"),
    ("cofinite", {}, "R\\{0,1},R\\{0,2}", "R\\{0,-1},R\\{0,-2}", "R\\{0}"),
    ("polygon", {}, "<(0,0)>,<(0,0),(1,0)>", "<(0,0)>,<(0,0),(0,1)>",
     "<(0,0),(2,0),(2,1),(1,2),(0,2)>"),
    ("sequences", {"inner": "boolean", "length": 16}, "s1,s2", "s3,s4", "s14"),
]
