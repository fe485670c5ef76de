"""Small plans and golden tables shared by the test modules."""

# inline bimatrices: rows separated by commas, B_G | B_H
EDGE_ON_SPHERE = "(11|2)"
LOOP_ON_SPHERE = "(2|11)"
DIGON = "(11,11|11,11)"
ONE_EDGE_TWO_FACES = "(11|11)"
PATH_ON_SPHERE = "(110,101|2,2)"
EDGE_AND_LOOP = "(11,20|20,11)"
ODD_INCIDENCE = "(11,02|11,20)"
LOOPS_AND_BRIDGE = "(20,11,02|110,020,011)"
LOOP_ON_PROJECTIVE_PLANE = "(2|2)"
TWO_LOOPS_ONE_FACE = "(2,2|2,2)"

# verdicts: geographic, chi
PLAN_VERDICTS = {
    EDGE_ON_SPHERE: (True, 2),
    LOOP_ON_SPHERE: (True, 2),
    DIGON: (True, 2),
    ONE_EDGE_TWO_FACES: (False, 3),
    PATH_ON_SPHERE: (True, 2),
    EDGE_AND_LOOP: (True, 2),
    ODD_INCIDENCE: (False, 2),
    LOOPS_AND_BRIDGE: (True, 2),
    LOOP_ON_PROJECTIVE_PLANE: (True, 1),
    TWO_LOOPS_ONE_FACE: (True, 0),
}

# a plan all of whose vertex and face graphs are 4-cycles
SIMPLE_TORUS_PLAN = """\
1100|1100
1100|0011
1010|1001
1010|0110
0101|0110
0101|1001
0011|1100
0011|0011
"""

# the eight word classes for one vertex with two loops and one face,
# with the surface each glues to and whether it is valid for the plan
TWO_LOOP_WORDS = {
    "a b ~a ~b": ("S_1", True),
    "a b ~b ~a": ("S_0", False),
    "a a b ~b": ("C_1", False),
    "a ~a b b": ("C_1", False),
    "a b a b": ("C_1", False),
    "a a b b": ("C_2", True),
    "a b ~a b": ("C_2", True),
    "a b a ~b": ("C_2", True),
}

# two pentagons gluing to a two-vertex map on C_3
TWO_PENTAGONS = "a b c ~a ~b\nc d e e ~d\n"

# printed non-realizable tables, column by column (pairs written d;t)
GOLDEN_TABLES = {
    "prop-5.1": [
        "3,1;2,2", "4,2;2,2,2", "5,1;2,2,2", "5,3;2,2,2,2", "6,2;2,2,2,2", "7,1;2,2,2,2",
        "6,4;2,2,2,2,2", "7,3;2,2,2,2,2", "8,2;2,2,2,2,2", "9,1;2,2,2,2,2",
    ],
    "prop-5.2": [
        "3,1;2,2", "3,2,1;3,3", "3,2,2,1;4,4", "3,2,2,2,1;5,5", "3,2,2,2,2,1;6,6", "3,2,2,2,2,2,1;7,7",
    ],
    "prop-5.3": [
        "5,1,1,1;4,4", "5,1,1,1;6,2", "6,1,1,1,1;6,4", "6,1,1,1,1;8,2", "7,1,1,1;4,4,2",
        "7,1,1,1;6,2,2", "8,1,1,1,1;4,4,4", "8,1,1,1,1;6,4,2", "8,1,1,1,1;8,2,2",
    ],
    "prop-5.4": [
        "3,3;3,2,1", "3,3,2;4,2,2", "3,3,2;4,3,1", "3,3,2,2;5,3,2", "3,3,2,2;5,4,1",
        "3,3,2,2,2;6,3,3", "3,3,2,2,2;6,4,2", "3,3,2,2,2;6,5,1",
    ],
    "prop-5.5": [
        "2,2,2;4,2", "4,1,1;4,2", "3,3,2;4,2,2", "5,2,1;4,2,2", "6,1,1;4,2,2", "4,3,3;4,2,2,2",
        "4,4,2;4,2,2,2", "6,2,2;4,2,2,2", "6,3,1;4,2,2,2", "7,2,1;4,2,2,2", "8,1,1;4,2,2,2",
    ],
    "prop-5.6": [
        "2,2,2,2;6,2", "5,1,1,1;6,2", "3,3,3,1;6,2,2", "4,2,2,2;6,2,2", "6,2,1,1;6,2,2", "7,1,1,1;6,2,2",
    ],
    "prop-5.7": [
        "3,2,2,1;4,4", "5,1,1,1;4,4", "3,3,3,1;4,4,2", "4,2,2,2;4,4,2", "6,2,1,1;4,4,2",
        "7,1,1,1;4,4,2", "4,4,3,1;4,4,2,2", "5,3,2,2;4,4,2,2", "7,2,2,1;4,4,2,2",
        "7,3,1,1;4,4,2,2", "8,2,1,1;4,4,2,2", "9,1,1,1;4,4,2,2",
    ],
    "prop-5.8": [
        "3,3,1,1;5,3", "4,4,1,1;5,3,2", "5,5,1,1;5,3,2,2", "6,6,1,1;5,3,2,2,2",
        "7,7,1,1;5,3,2,2,2,2", "8,8,1,1;5,3,2,2,2,2,2",
    ],
    "prop-5.9": [
        "2,2,2;4,2", "4,2,2;5,2,1", "4,4,2;6,2,1,1", "6,2,2;6,2,1,1", "4,4,4;7,2,1,1,1",
        "6,4,2;7,2,1,1,1", "8,2,2;7,2,1,1,1", "6,4,4;8,2,1,1,1,1", "6,6,2;8,2,1,1,1,1",
        "8,4,2;8,2,1,1,1,1",
    ],
}

# pairs the stated conditions of prop-5.7 admit but the printed table leaves out;
# each has a geographic witness
PROP_57_REALIZABLE_EXTRAS = ["4,3,2,1;4,4,2", "5,3,3,1;4,4,2,2", "5,4,2,1;4,4,2,2"]

# rows of the multiplicity table for the (k, a, n) = (3, 4, 4) construction;
# columns are the named pieces of the witness graph
MULTIPLICITY_COLUMNS = ["P1", "P2", "P3", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"]
MULTIPLICITY_ROWS = [
    [1, 0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 2, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
]

SPORADIC_NON_REALIZABLE = ["3,3,3,3;7,4,1", "3,3,3,3;5,4,3"]

# geographic plans found by the search for prop-5.7 pairs the stated conditions admit
PROP_57_WITNESSES = {
    "4,3,2,1;4,4,2": "(0101,1100,1100,1010,1010|200,110,110,011,011)",
    "5,3,3,1;4,4,2,2": "(1100,1100,1100,1010,1010,0011|1010,1001,0011,1100,1100,0200)",
    "5,4,2,1;4,4,2,2": "(1100,1100,1100,1010,1010,0101|1010,1100,0110,1001,1001,0200)",
    "6,4,3,1;4,4,2,2,2": "(1100,1100,1100,1100,1010,1010,0011|10100,10010,00101,00011,11000,11000,02000)",
    "6,5,2,1;4,4,2,2,2": "(1100,1100,1100,1100,1010,1010,0101|10100,11000,01010,00110,10001,10001,02000)",
}
