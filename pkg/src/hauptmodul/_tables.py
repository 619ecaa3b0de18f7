"""Displayed matrices and coefficient rows, transcribed verbatim.

Six-dimensional entries use the shorthand "a-b" for zeta^a - zeta^b, where
the exponent 0 stands for 1.  Each of those matrices carries an overall
factor -1/sqrt(13).  Entries of the fourteen-dimensional blocks name the
constants q1..q12, r0..r4, rinf with an optional integer multiplier; the
block matrix carries an overall factor -1/(13 sqrt(13)).
"""

SIX = {
    "ST": (
        "6-8 8-1 12-4 11-1 4-0 11-12",
        "4-10 2-7 7-9 8-4 8-9 10-0",
        "11-3 10-12 5-11 12-0 7-10 7-3",
        "12-2 0-9 1-2 7-5 5-12 1-9",
        "9-5 4-5 0-3 9-3 11-6 6-4",
        "0-1 3-6 10-6 2-10 3-1 8-2",
    ),
    "ST_INV": (
        "5-7 3-9 10-2 11-1 8-4 12-0",
        "12-5 6-11 1-3 4-0 8-9 7-10",
        "9-1 4-6 2-8 11-12 10-0 7-3",
        "12-2 9-5 0-1 8-6 10-4 3-11",
        "0-9 4-5 3-6 1-8 7-2 12-10",
        "1-2 0-3 10-6 4-12 9-7 11-5",
    ),
    "Q3": (
        "11-1 12-8 0-1 6-4 4-11 0-8",
        "0-9 8-9 4-7 0-7 2-10 10-8",
        "10-11 0-3 7-3 12-7 0-11 5-12",
        "9-7 2-9 5-0 2-12 1-5 0-12",
        "6-0 3-11 5-3 0-4 5-4 9-6",
        "6-1 2-0 1-8 3-2 0-10 6-10",
    ),
    "P4": (
        "7-0 2-7 6-8 2-11 5-6 8-11",
        "2-7 11-0 5-11 7-8 5-8 6-2",
        "6-8 5-11 8-0 2-5 11-7 6-7",
        "2-11 7-8 2-5 6-0 11-6 7-5",
        "5-6 5-8 11-7 11-6 2-0 8-2",
        "8-11 6-2 6-7 7-5 8-2 5-0",
    ),
    "Q3P4": (
        "7-5 2-9 10-5 6-3 3-7 10-9",
        "12-6 11-6 5-3 12-3 2-1 1-11",
        "6-1 4-2 8-2 9-8 4-1 5-9",
        "10-7 6-10 4-3 6-8 11-4 3-8",
        "10-1 12-11 2-12 1-7 2-7 8-10",
        "5-4 12-9 4-8 7-12 9-11 5-11",
    ),
    "Q3P4_SQ": (
        "8-6 7-1 12-7 6-3 12-3 9-8",
        "4-11 7-2 11-9 3-7 2-1 4-1",
        "8-3 10-8 11-5 10-9 1-11 5-9",
        "10-7 10-1 5-4 5-7 6-12 1-6",
        "6-10 12-11 12-9 9-2 6-11 2-4",
        "4-3 2-12 4-8 5-10 3-5 2-8",
    ),
    "S": (
        "12-1 10-3 4-9 5-8 2-11 6-7",
        "10-3 4-9 12-1 2-11 6-7 5-8",
        "4-9 12-1 10-3 6-7 5-8 2-11",
        "5-8 2-11 6-7 1-12 3-10 9-4",
        "2-11 6-7 5-8 3-10 9-4 1-12",
        "6-7 5-8 2-11 9-4 1-12 3-10",
    ),
    "Q5P2": (
        "8-5 4-8 2-1 4-6 9-2 1-6",
        "5-9 7-6 10-7 9-2 10-2 3-5",
        "12-11 6-3 11-2 1-6 3-5 12-5",
        "7-9 11-4 7-12 5-8 9-5 11-12",
        "11-4 11-3 8-10 8-4 6-7 3-6",
        "7-12 8-10 8-1 1-2 7-10 2-11",
    ),
    "P2Q6P8": (
        "8-5 12-3 4-3 2-4 12-5 10-2",
        "10-1 7-6 4-1 12-5 5-10 4-6",
        "10-9 12-9 11-2 10-2 4-6 6-12",
        "9-11 8-1 11-3 5-8 1-10 9-10",
        "8-1 3-8 7-9 3-12 6-7 9-12",
        "11-3 7-9 1-7 3-4 1-4 2-11",
    ),
    "Q5P2_P2Q6P8_Q5P2": (
        "7-6 8-5 11-2 4-9 12-1 10-3",
        "8-5 11-2 7-6 12-1 10-3 4-9",
        "11-2 7-6 8-5 10-3 4-9 12-1",
        "4-9 12-1 10-3 6-7 5-8 2-11",
        "12-1 10-3 4-9 5-8 2-11 6-7",
        "10-3 4-9 12-1 2-11 6-7 5-8",
    ),
}

SIGNED_PERM = {
    "H": (
        (0, 0, 0, 0, 0, 1),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (0, 0, -1, 0, 0, 0),
        (-1, 0, 0, 0, 0, 0),
        (0, -1, 0, 0, 0, 0),
    ),
    "H2": (
        (0, -1, 0, 0, 0, 0),
        (0, 0, -1, 0, 0, 0),
        (-1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, -1, 0),
        (0, 0, 0, 0, 0, -1),
        (0, 0, 0, -1, 0, 0),
    ),
    "H3": (
        (0, 0, 0, -1, 0, 0),
        (0, 0, 0, 0, -1, 0),
        (0, 0, 0, 0, 0, -1),
        (1, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
    ),
}

M3 = ("1-12 3-10 9-4", "3-10 9-4 1-12", "9-4 1-12 3-10")
N3 = ("5-8 2-11 6-7", "2-11 6-7 5-8", "6-7 5-8 2-11")

# first row of 13 (ST)^2, spelled out in the power basis (exponent: coeff)
ST_SQ_ROW1_EXPANDED = (
    {1: -2, 2: -2, 3: 2, 9: -2, 10: 2, 11: 2, 5: -1, 7: 1},
    {2: -2, 4: -2, 5: 2, 7: -2, 8: 2, 10: 2, 3: -1, 9: 1},
    {0: -2, 3: 2, 5: 2, 7: -2, 9: -2, 12: 2, 2: 1, 10: -1},
    {0: 2, 4: 2, 5: 2, 7: -2, 8: -2, 12: -2, 11: 1, 1: -1},
    {0: 2, 1: 2, 3: 2, 9: -2, 11: -2, 12: -2, 8: 1, 4: -1},
    {1: 2, 2: -2, 4: 2, 8: -2, 10: 2, 11: -2, 12: 1, 0: -1},
)
# the same entries as -sqrt(13) * (zeta^a - zeta^b)
ST_SQ_ROW1_FACTORED = "5-7 3-9 10-2 11-1 8-4 12-0"

H_WORD = (("Q", 5), ("P", 2), ("P", 2), ("Q", 6), ("P", 8), ("Q", 5), ("P", 2), ("P", 3), ("Q", 1))

H_SL2 = ((4428249, -10547030), (-11594791, 27616019))

BASIS14 = ("D0", "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D11", "D12", "Dinf")

# rows of the block matrix [[S1, S2], [S3, S4]]
S14_BLOCK = (
    "r0 r1 r2 r1 r3 r2 r2 r4 r4 r1 r3 r4 r3 rinf",
    "13r1 q1 q2 q3 q4 q5 q6 q7 q8 q9 q10 q11 q12 -13r3",
    "26r2 2q2 -q4 2q6 2q8 -q10 -q12 q1 q3 2q5 2q7 q9 2q11 -26r4",
    "13r1 q3 q6 q9 q12 q2 q5 q8 q11 q1 q4 q7 q10 -13r3",
    "13r3 q4 q8 q12 -q3 q7 q11 -q2 -q6 q10 -q1 -q5 -q9 13r1",
    "26r2 2q5 -q10 2q2 2q7 -q12 -q4 q9 q1 2q6 2q11 q3 2q8 -26r4",
    "26r2 2q6 -q12 2q5 2q11 -q4 -q10 q3 q9 2q2 2q8 q1 2q7 -26r4",
    "26r4 2q7 q1 2q8 -2q2 q9 q3 q10 q4 2q11 -2q5 q12 -2q6 26r2",
    "26r4 2q8 q3 2q11 -2q6 q1 q9 q4 q12 2q7 -2q2 q10 -2q5 26r2",
    "13r1 q9 q5 q1 q10 q6 q2 q11 q7 q3 q12 q8 q4 -13r3",
    "13r3 q10 q7 q4 -q1 q11 q8 -q5 -q2 q12 -q9 -q6 -q3 13r1",
    "26r4 2q11 q9 2q7 -2q5 q3 q1 q12 q10 2q8 -2q6 q4 -2q2 26r2",
    "13r3 q12 q11 q10 -q9 q8 q7 -q6 -q5 q4 -q3 -q2 -q1 13r1",
    "rinf -r3 -r4 -r3 r1 -r4 -r4 r2 r2 -r3 r1 r2 r1 -r0",
)

# the same rows as written out equation by equation for S(D_1)..S(D_12)
S14_EQUATIONS = {
    "D1": "13r1 q1 q2 q3 q4 q5 q6 q7 q8 q9 q10 q11 q12 -13r3",
    "D2": "26r2 2q2 -q4 2q6 2q8 -q10 -q12 q1 q3 2q5 2q7 q9 2q11 -26r4",
    "D3": "13r1 q3 q6 q9 q12 q2 q5 q8 q11 q1 q4 q7 q10 -13r3",
    "D4": "13r3 q4 q8 q12 -q3 q7 q11 -q2 -q6 q10 -q1 -q5 -q9 13r1",
    "D5": "26r2 2q5 -q10 2q2 2q7 -q12 -q4 q9 q1 2q6 2q11 q3 2q8 -26r4",
    "D6": "26r2 2q6 -q12 2q5 2q11 -q4 -q10 q3 q9 2q2 2q8 q1 2q7 -26r4",
    "D7": "26r4 2q7 q1 2q8 -2q2 q9 q3 q10 q4 2q11 -2q5 q12 -2q6 26r2",
    "D8": "26r4 2q8 q3 2q11 -2q6 q1 q9 q4 q12 2q7 -2q2 q10 -2q5 26r2",
    "D9": "13r1 q9 q5 q1 q10 q6 q2 q1 q7 q8 q12 q8 q4 -13r3",
    "D10": "13r3 q10 q7 q4 -q1 q11 q8 -q5 -q2 q12 -q9 -q6 -q3 13r1",
    "D11": "26r4 2q11 q9 2q7 -2q5 q3 q1 q12 q10 2q8 -2q6 q4 -2q2 26r2",
    "D12": "13r3 q12 q11 q10 -q9 q8 q7 -q6 -q5 q4 -q3 -q2 -q1 13r1",
}

# -13 sqrt(13) S T^nu (D_0): constant name and zeta exponent multiplier per basis element
D0_ROW_NU = (("r0", 0), ("r1", 1), ("r2", 2), ("r1", 3), ("r3", 4), ("r2", 5), ("r2", 6),
             ("r4", 7), ("r4", 8), ("r1", 9), ("r3", 10), ("r4", 11), ("r3", 12), ("rinf", 0))
DINF_ROW = "rinf -r3 -r4 -r3 r1 -r4 -r4 r2 r2 -r3 r1 r2 r1 -r0"



# Forms as (coefficient, exponent vector) lists; G rows index D0..D12 and Dinf (13).
A_FORMS = {
    '0': [(1, (1, 0, 0, 1, 0, 0)), (1, (0, 1, 0, 0, 1, 0)), (1, (0, 0, 1, 0, 0, 1))],
    '1': [(1, (2, 0, 0, 0, 0, 0)), (-2, (0, 0, 1, 1, 0, 0))],
    '2': [(-1, (0, 0, 0, 0, 2, 0)), (-2, (0, 1, 0, 1, 0, 0))],
    '3': [(1, (0, 2, 0, 0, 0, 0)), (-2, (1, 0, 0, 0, 1, 0))],
    '4': [(1, (0, 0, 2, 0, 0, 0)), (-2, (0, 1, 0, 0, 0, 1))],
    '5': [(-1, (0, 0, 0, 2, 0, 0)), (-2, (1, 0, 0, 0, 0, 1))],
    '6': [(-1, (0, 0, 0, 0, 0, 2)), (-2, (0, 0, 1, 0, 1, 0))],
}

D_FORMS = {
    '0': [(1, (1, 1, 1, 0, 0, 0))],
    '1': [(2, (0, 1, 2, 0, 0, 0)), (1, (0, 2, 0, 0, 0, 1)), (-1, (0, 0, 0, 2, 1, 0)), (1, (1, 0, 0, 0, 1, 1))],
    '2': [(-1, (0, 0, 0, 0, 0, 3)), (1, (0, 2, 0, 1, 0, 0)), (-2, (0, 1, 0, 0, 2, 0)), (1, (1, 0, 0, 1, 1, 0)), (3, (0, 0, 1, 0, 1, 1))],
    '3': [(2, (1, 2, 0, 0, 0, 0)), (1, (2, 0, 0, 0, 1, 0)), (-1, (0, 0, 0, 1, 0, 2)), (1, (0, 0, 1, 1, 1, 0))],
    '4': [(-1, (0, 2, 1, 0, 0, 0)), (1, (1, 0, 0, 0, 0, 2)), (-2, (0, 0, 0, 2, 0, 1)), (-1, (1, 0, 1, 0, 1, 0))],
    '5': [(-1, (0, 0, 0, 3, 0, 0)), (1, (0, 0, 2, 0, 1, 0)), (-2, (0, 0, 1, 0, 0, 2)), (1, (0, 1, 0, 0, 1, 1)), (3, (1, 0, 0, 1, 0, 1))],
    '6': [(-1, (0, 0, 0, 0, 3, 0)), (1, (2, 0, 0, 0, 0, 1)), (-2, (1, 0, 0, 2, 0, 0)), (1, (0, 0, 1, 1, 0, 1)), (3, (0, 1, 0, 1, 1, 0))],
    '7': [(-1, (0, 3, 0, 0, 0, 0)), (1, (0, 0, 1, 2, 0, 0)), (-1, (1, 0, 1, 0, 0, 1)), (-3, (1, 1, 0, 0, 1, 0)), (2, (2, 0, 0, 1, 0, 0))],
    '8': [(-1, (3, 0, 0, 0, 0, 0)), (1, (0, 1, 0, 0, 0, 2)), (-1, (0, 1, 1, 0, 1, 0)), (-3, (1, 0, 1, 1, 0, 0)), (2, (0, 0, 2, 0, 0, 1))],
    '9': [(2, (2, 0, 1, 0, 0, 0)), (1, (0, 0, 2, 1, 0, 0)), (-1, (0, 0, 0, 0, 2, 1)), (1, (0, 1, 0, 1, 0, 1))],
    '10': [(-1, (1, 0, 2, 0, 0, 0)), (1, (0, 1, 0, 2, 0, 0)), (-2, (0, 0, 0, 1, 2, 0)), (-1, (1, 1, 0, 0, 0, 1))],
    '11': [(-1, (0, 0, 3, 0, 0, 0)), (1, (1, 0, 0, 0, 2, 0)), (-1, (1, 1, 0, 1, 0, 0)), (-3, (0, 1, 1, 0, 0, 1)), (2, (0, 2, 0, 0, 1, 0))],
    '12': [(-1, (2, 1, 0, 0, 0, 0)), (1, (0, 0, 1, 0, 2, 0)), (-2, (0, 0, 0, 0, 1, 2)), (-1, (0, 1, 1, 1, 0, 0))],
    'inf': [(1, (0, 0, 0, 1, 1, 1))],
}


G_FORMS = {
    '0': [(1, (0, 0)), (1, (13, 13))],
    '1': [(-1, (7, 7)), (2, (0, 1)), (10, (13, 1)), (2, (2, 12)), (-2, (3, 11)), (-4, (4, 10)), (-2, (9, 5))],
    '2': [(-2, (1, 1)), (-4, (0, 2)), (6, (13, 2)), (-2, (4, 11)), (2, (5, 10)), (-2, (6, 9)), (-2, (7, 8))],
    '3': [(-1, (8, 8)), (2, (0, 3)), (10, (13, 3)), (2, (6, 10)), (-2, (9, 7)), (-4, (12, 4)), (-2, (1, 2))],
    '4': [(-1, (2, 2)), (10, (0, 4)), (-2, (13, 4)), (2, (5, 12)), (-2, (9, 8)), (-4, (1, 3)), (-2, (10, 7))],
    '5': [(-2, (9, 9)), (-4, (0, 5)), (6, (13, 5)), (-2, (10, 8)), (2, (6, 12)), (-2, (2, 3)), (-2, (11, 7))],
    '6': [(-2, (3, 3)), (-4, (0, 6)), (6, (13, 6)), (-2, (12, 7)), (2, (2, 4)), (-2, (5, 1)), (-2, (8, 11))],
    '7': [(-2, (10, 10)), (6, (0, 7)), (4, (13, 7)), (-2, (1, 6)), (-2, (2, 5)), (-2, (8, 12)), (-2, (9, 11))],
    '8': [(-2, (4, 4)), (6, (0, 8)), (4, (13, 8)), (-2, (3, 5)), (-2, (6, 2)), (-2, (11, 10)), (-2, (1, 7))],
    '9': [(-1, (11, 11)), (2, (0, 9)), (10, (13, 9)), (2, (5, 4)), (-2, (1, 8)), (-4, (10, 12)), (-2, (3, 6))],
    '10': [(-1, (5, 5)), (10, (0, 10)), (-2, (13, 10)), (2, (6, 4)), (-2, (3, 7)), (-4, (9, 1)), (-2, (12, 11))],
    '11': [(-2, (12, 12)), (6, (0, 11)), (4, (13, 11)), (-2, (9, 2)), (-2, (5, 6)), (-2, (7, 4)), (-2, (3, 8))],
    '12': [(-1, (6, 6)), (10, (0, 12)), (-2, (13, 12)), (2, (2, 10)), (-2, (1, 11)), (-4, (3, 9)), (-2, (4, 8))],
}
