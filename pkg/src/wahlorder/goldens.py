"""Golden cell renderings of the reference order matrices for n = 2..5.

Stored in the canonical cell format of order.format_cell (descending
t-powers).  The (2, 1) display is Example-style and uses a sign
normalization differing from the general cell formulas: substituting
a_1 -> -a_1 and a_2 -> -a_2 into it yields the formula output, which is the
documented reconciliation tested against build_order.
"""

GOLDEN_MATRICES = {
    (3, 1): [
        ["-t^2 a_6 + a_0", "t a_4 + a_1", "t^2 a_8 + t a_5"],
        ["-t^3 a_8", "a_0", "t^2 a_7"],
        ["-t a_1", "-t a_2", "-t^2 a_6 - t a_3 + a_0"],
    ],
    (3, 2): [
        ["a_0", "t^2 a_7 + t a_4", "t^2 a_8"],
        ["-t^2 a_5", "-t^2 a_6 + a_0", "t a_4"],
        ["-t a_1", "-t^2 a_5 - t a_2", "-t^2 a_6 - t a_3 + a_0"],
    ],
    (4, 1): [
        ["-t^3 a_12 - t^2 a_8 + a_0", "t a_5 + a_1", "t a_6 + a_2",
         "t^3 a_15 + t^2 a_11 + t a_7"],
        ["-t^4 a_15 - t^3 a_11", "-t^3 a_12 + a_0", "t^2 a_9 + t a_5 + a_1",
         "t^3 a_14 + t^2 a_10"],
        ["-t^4 a_14", "-t^4 a_15", "a_0", "t^3 a_13"],
        ["-t a_1", "-t a_2", "-t a_3", "-t^3 a_12 - t^2 a_8 - t a_4 + a_0"],
    ],
    (4, 3): [
        ["a_0", "t^3 a_13 + t^2 a_9 + t a_5", "t^3 a_14 + t^2 a_10", "t^3 a_15"],
        ["-t^3 a_11", "-t^3 a_12 + a_0", "t^2 a_9 + t a_5", "t^2 a_10"],
        ["-t^2 a_6", "-t^3 a_11 - t^2 a_7", "-t^3 a_12 - t^2 a_8 + a_0", "t a_5"],
        ["-t a_1", "-t^2 a_6 - t a_2", "-t^3 a_11 - t^2 a_7 - t a_3",
         "-t^3 a_12 - t^2 a_8 - t a_4 + a_0"],
    ],
    (5, 1): [
        ["-t^4 a_20 - t^3 a_15 - t^2 a_10 + a_0", "t a_6 + a_1", "t a_7 + a_2",
         "t a_8 + a_3", "t^4 a_24 + t^3 a_19 + t^2 a_14 + t a_9"],
        ["-t^5 a_24 - t^4 a_19 - t^3 a_14", "-t^4 a_20 - t^3 a_15 + a_0",
         "t^2 a_11 + t a_6 + a_1", "t^2 a_12 + t a_7 + a_2",
         "t^4 a_23 + t^3 a_18 + t^2 a_13"],
        ["-t^5 a_23 - t^4 a_18", "-t^5 a_24 - t^4 a_19", "-t^4 a_20 + a_0",
         "t^3 a_16 + t^2 a_11 + t a_6 + a_1", "t^4 a_22 + t^3 a_17"],
        ["-t^5 a_22", "-t^5 a_23", "-t^5 a_24", "a_0", "t^4 a_21"],
        ["-t a_1", "-t a_2", "-t a_3", "-t a_4",
         "-t^4 a_20 - t^3 a_15 - t^2 a_10 - t a_5 + a_0"],
    ],
    (5, 2): [
        ["-t^4 a_20 - t^3 a_15 + a_0", "t^2 a_11 + t a_6 + a_1",
         "t^3 a_17 + t^2 a_12 + t a_7", "t^3 a_18 + t^2 a_13 + t a_8",
         "t^4 a_24 + t^3 a_19 + t^2 a_14"],
        ["-t^5 a_24", "a_0", "t^4 a_21 + t^3 a_16", "t^4 a_22 + t^3 a_17",
         "t^4 a_23"],
        ["-t^2 a_8", "-t^2 a_9", "-t^4 a_20 - t^3 a_15 - t^2 a_10 + a_0",
         "t a_6 + a_1", "t a_7"],
        ["-t^4 a_17", "-t^4 a_18", "-t^5 a_24 - t^4 a_19", "-t^4 a_20 + a_0",
         "t^3 a_16"],
        ["-t a_1", "-t a_2", "-t^2 a_8 - t a_3", "-t^2 a_9 - t a_4",
         "-t^4 a_20 - t^3 a_15 - t^2 a_10 - t a_5 + a_0"],
    ],
    (5, 3): [
        ["-t^4 a_20 + a_0", "t^3 a_16 + t^2 a_11", "t^3 a_17 + t^2 a_12",
         "t^4 a_23 + t^3 a_18 + t^2 a_13", "t^4 a_24 + t^3 a_19"],
        ["-t^3 a_14 - t^2 a_9", "-t^4 a_20 - t^3 a_15 - t^2 a_10 + a_0",
         "t a_6 + a_1", "t^2 a_12 + t a_7 + a_2", "t^2 a_13 + t a_8"],
        ["-t^5 a_23", "-t^5 a_24", "a_0", "t^4 a_21 + t^3 a_16 + t^2 a_11",
         "t^4 a_22"],
        ["-t^3 a_12", "-t^3 a_13", "-t^3 a_14", "-t^4 a_20 - t^3 a_15 + a_0",
         "t^2 a_11"],
        ["-t a_1", "-t a_2", "-t a_3", "-t^3 a_14 - t^2 a_9 - t a_4",
         "-t^4 a_20 - t^3 a_15 - t^2 a_10 - t a_5 + a_0"],
    ],
    (5, 4): [
        ["a_0", "t^4 a_21 + t^3 a_16 + t^2 a_11 + t a_6",
         "t^4 a_22 + t^3 a_17 + t^2 a_12", "t^4 a_23 + t^3 a_18", "t^4 a_24"],
        ["-t^4 a_19", "-t^4 a_20 + a_0", "t^3 a_16 + t^2 a_11 + t a_6",
         "t^3 a_17 + t^2 a_12", "t^3 a_18"],
        ["-t^3 a_13", "-t^4 a_19 - t^3 a_14", "-t^4 a_20 - t^3 a_15 + a_0",
         "t^2 a_11 + t a_6", "t^2 a_12"],
        ["-t^2 a_7", "-t^3 a_13 - t^2 a_8", "-t^4 a_19 - t^3 a_14 - t^2 a_9",
         "-t^4 a_20 - t^3 a_15 - t^2 a_10 + a_0", "t a_6"],
        ["-t a_1", "-t^2 a_7 - t a_2", "-t^3 a_13 - t^2 a_8 - t a_3",
         "-t^4 a_19 - t^3 a_14 - t^2 a_9 - t a_4",
         "-t^4 a_20 - t^3 a_15 - t^2 a_10 - t a_5 + a_0"],
    ],
}

# Example-style display for n = 2, q = 1.
EXAMPLE_2_1 = [
    ["a_0", "t a_3"],
    ["t a_1", "t a_2 + a_0"],
]

# Formula output = EXAMPLE_2_1 with a_1 -> -a_1, a_2 -> -a_2.
EXAMPLE_2_1_SIGN_FLIPS = {1: -1, 2: -1}
