"""Data transcribed from the reference tables, with a checksummed registry."""

import hashlib
import json
from dataclasses import dataclass
from typing import Any

EXAMPLE_CUBIC_MATRIX = [[-2, 24, 16, 27, 14, 1], [-25, 3, 28, 13, 5, 7], [-26, -4, 1, -14, 9, 6]]

EXAMPLE_CUBIC_TRIANGLES = [
    ["E4", "F24", "G2"], ["E4", "F34", "G3"], ["E5", "F15", "G1"], ["E5", "F25", "G2"],
    ["E6", "F16", "G1"], ["E6", "F36", "G3"], ["F14", "F25", "F36"], ["F14", "F26", "F35"],
    ["F15", "F26", "F34"], ["F16", "F24", "F35"],
]

EXAMPLE_CUBIC_QUADRILATERALS = [
    ["E1", "E5", "G3", "G4"], ["E1", "E5", "G3", "G6"], ["E1", "E6", "F16", "G5"],
    ["E1", "E6", "G2", "G4"], ["E1", "E6", "G2", "G5"], ["E1", "E6", "G3", "G4"],
    ["E1", "F12", "F14", "F36"], ["E1", "F12", "F14", "G1"], ["E1", "F12", "F15", "F36"],
    ["E1", "F13", "F14", "G1"], ["E1", "F13", "F16", "F25"], ["E1", "F15", "F36", "G6"],
    ["E1", "F16", "F25", "G5"], ["E2", "E4", "G1", "G5"], ["E2", "E4", "G1", "G6"],
    ["E2", "E4", "G3", "G6"], ["E2", "E5", "F25", "G4"], ["E2", "E5", "G1", "G6"],
    ["E2", "E5", "G3", "G4"], ["E2", "E5", "G3", "G6"], ["E2", "F12", "F25", "F34"],
    ["E2", "F12", "F26", "F34"], ["E2", "F12", "F26", "G2"], ["E2", "F15", "F23", "F24"],
    ["E2", "F15", "F24", "G5"], ["E2", "F23", "F26", "G2"], ["E2", "F25", "F34", "G4"],
    ["E3", "E4", "G1", "G5"], ["E3", "E4", "G1", "G6"], ["E3", "E4", "G2", "G5"],
    ["E3", "F24", "F36", "G4"], ["E4", "F14", "F23", "F45"], ["E3", "F13", "F24", "F36"],
    ["E3", "F13", "F35", "G3"], ["E3", "F16", "F23", "F34"], ["E3", "F16", "F23", "F35"],
    ["E3", "F16", "F34", "G6"], ["E3", "F23", "F35", "G3"], ["E3", "E6", "G2", "G4"],
    ["E3", "E6", "G2", "G5"], ["E4", "F14", "F23", "F46"], ["E4", "F14", "F45", "G4"],
    ["E4", "F14", "F46", "G4"], ["E4", "F24", "F45", "G4"], ["E4", "F34", "F46", "G4"],
    ["E5", "F12", "F35", "F45"], ["E5", "F12", "F35", "F56"], ["E5", "F12", "F45", "G2"],
    ["E5", "F15", "F56", "G5"], ["E5", "F35", "F45", "G5"], ["E5", "F35", "F56", "G5"],
    ["E6", "F13", "F26", "F46"], ["E6", "F13", "F26", "F56"], ["E6", "F13", "F56", "G1"],
    ["E6", "F26", "F46", "G6"], ["E6", "F26", "F56", "G6"], ["E6", "F36", "F46", "G6"],
    ["F12", "F14", "F56", "G1"], ["F12", "F15", "F36", "F46"],
    ["F12", "F25", "F34", "F46"], ["F12", "F26", "F35", "F45"],
    ["F12", "F26", "F45", "G2"], ["F13", "F14", "F26", "F56"], ["F13", "F14", "F56", "G1"],
    ["F13", "F16", "F24", "F45"], ["F13", "F16", "F25", "F45"],
    ["F13", "F24", "F36", "F45"], ["F13", "F25", "F36", "F45"],
    ["F13", "F35", "F46", "G3"], ["F14", "F23", "F35", "F46"], ["F14", "F25", "F46", "G4"],
    ["F15", "F23", "F24", "F56"], ["F15", "F23", "F34", "F56"],
    ["F15", "F24", "F56", "G5"], ["F15", "F26", "F46", "G6"], ["F15", "F36", "F46", "G6"],
    ["F16", "F23", "F34", "F56"], ["F16", "F25", "F45", "G5"], ["F16", "F34", "F56", "G6"],
    ["F23", "F26", "F45", "G2"], ["F23", "F35", "F46", "G3"], ["F24", "F35", "F56", "G5"],
    ["F24", "F36", "F45", "G4"], ["F25", "F34", "F46", "G4"], ["E3", "F24", "G2", "G4"],
    ["E2", "F34", "G3", "G4"], ["E2", "F15", "G1", "G5"], ["E1", "F25", "G2", "G5"],
    ["E3", "F16", "G1", "G6"], ["E1", "F36", "G3", "G6"],
]

EXAMPLE_CUBIC_PENTAGONS = [
    ["E1", "E5", "F12", "F15", "G1"], ["E1", "E5", "F15", "G1", "G6"],
    ["E1", "E5", "F25", "G2", "G4"], ["E1", "E6", "F13", "F16", "G1"],
    ["E1", "F13", "F14", "F25", "F36"], ["E2", "E4", "F23", "F24", "G2"],
    ["E2", "E4", "F24", "G2", "G5"], ["E2", "E5", "F12", "F25", "G2"],
    ["E2", "F15", "F23", "F26", "F34"], ["E3", "E4", "F23", "F34", "G3"],
    ["E3", "E4", "F34", "G3", "G6"], ["E3", "E6", "F13", "F36", "G3"],
    ["E3", "E6", "F16", "G1", "G5"], ["E3", "E6", "F36", "G3", "G4"],
    ["E3", "F13", "F16", "F24", "F35"], ["E4", "F23", "F24", "F45", "G2"],
    ["E4", "F23", "F34", "F46", "G3"], ["E5", "F12", "F15", "F56", "G1"],
    ["E5", "F25", "F45", "G2", "G5"], ["E6", "F13", "F36", "F46", "G3"],
    ["E6", "F16", "F56", "G1", "G6"], ["F12", "F14", "F25", "F36", "F46"],
    ["F12", "F14", "F26", "F35", "F56"], ["F12", "F15", "F26", "F34", "F46"],
    ["F13", "F14", "F26", "F35", "F46"], ["F14", "F23", "F26", "F35", "F45"],
    ["F14", "F25", "F36", "F45", "G4"], ["F15", "F26", "F34", "F56", "G6"],
    ["F16", "F23", "F24", "F35", "F56"], ["F16", "F24", "F35", "F45", "G5"],
]

# Triangle-avoiding double-six (two rows) and the pentagon count of each entry.
EXAMPLE_DOUBLE_SIX = [["E1", "E2", "E3", "F45", "F46", "F56"], ["F23", "F13", "F12", "G6", "G5", "G4"]]
EXAMPLE_DOUBLE_SIX_PENTAGONS = [[5, 4, 6, 5, 5, 5], [7, 6, 6, 4, 4, 3]]

# E6 pezzotope vertices: ten A1 labels (root d_i+d_j+d_k) and five A2x3 systems.
E6_A1_VERTICES = {
    1: "125", 2: "126", 3: "134", 4: "136", 5: "145", 6: "234", 7: "235", 8: "246",
    9: "356", 10: "456",
}

E6_A2X3_VERTICES = {
    11: ["12", "134", "234", "56", "125", "126", "34", "356", "456"],
    12: ["13", "125", "235", "46", "134", "136", "25", "246", "456"],
    13: ["14", "126", "246", "35", "134", "145", "26", "235", "356"],
    14: ["15", "136", "356", "24", "125", "145", "36", "234", "246"],
    15: ["16", "145", "456", "23", "126", "136", "45", "234", "235"],
}

# E7 pezzotope vertices; a single digit i denotes the root sum(d) - d_i.
E7_A1_VERTICES = {
    1: "124", 2: "126", 3: "134", 4: "135", 5: "157", 6: "235", 7: "237", 8: "367",
    9: "456", 10: "457",
}

E7_SYSTEM_VERTICES = {
    11: ["12", "135", "235"], 12: ["14", "157", "457"], 13: ["23", "124", "134"],
    14: ["26", "237", "367"], 15: ["37", "135", "157"], 16: ["45", "134", "135"],
    17: ["46", "124", "126"], 18: ["57", "235", "237"], 19: ["67", "456", "457"],
    20: ["1", "237", "456"], 21: ["3", "126", "457"], 22: ["5", "124", "367"],
    23: ["124", "367", "5", "347", "46", "126", "135", "235", "12", "257", "37", "157"],
    24: ["124", "134", "23", "136", "46", "126", "237", "235", "57", "467", "1", "456"],
    25: ["124", "134", "23", "267", "5", "367", "457", "157", "14", "156", "67", "456"],
    26: ["135", "157", "37", "147", "45", "134", "237", "456", "1", "245", "26", "367"],
    27: ["135", "235", "12", "234", "45", "134", "457", "456", "67", "127", "3", "126"],
    28: ["237", "235", "57", "356", "26", "367", "457", "157", "14", "246", "3", "126"],
    29: ["126", "124", "46", "567", "3", "457", "235", "135", "12", "137", "57", "237"],
    30: ["134", "124", "23", "125", "45", "135", "456", "237", "1", "236", "67", "457"],
    31: ["157", "135", "37", "345", "14", "457", "367", "124", "5", "146", "26", "237"],
    32: ["126", "124", "134", "135", "235", "237", "456", "457", "567", "46", "136", "23", "125", "45", "234", "12", "137", "57", "467", "1", "236", "67", "127", "3", "13", "56", "2", "47"],
    33: ["126", "457", "157", "135", "235", "237", "367", "124", "567", "3", "246", "14", "345", "37", "257", "12", "137", "57", "356", "26", "146", "5", "347", "46", "35", "24", "7", "16"],
    34: ["134", "135", "157", "457", "237", "456", "367", "124", "125", "45", "147", "37", "345", "14", "156", "67", "236", "1", "245", "26", "146", "5", "267", "23", "15", "36", "4", "27"],
}

# Perfect u-equations: u_i + prod(u_j for j in support) = 1.
E6_U_SUPPORTS = {
    1: [2, 5, 7, 13, 15], 2: [1, 4, 8, 12, 14], 3: [4, 5, 6, 14, 15], 4: [2, 3, 9, 11, 13],
    5: [1, 3, 10, 11, 12], 6: [3, 7, 8, 12, 13], 7: [1, 6, 9, 11, 14],
    8: [2, 6, 10, 11, 15], 9: [4, 7, 10, 12, 15], 10: [5, 8, 9, 13, 14],
    11: [4, 5, 7, 8, 12, 13, 14, 15], 12: [2, 5, 6, 9, 11, 13, 14, 15],
    13: [1, 4, 6, 10, 11, 12, 14, 15], 14: [2, 3, 7, 10, 11, 12, 13, 15],
    15: [1, 3, 8, 9, 11, 12, 13, 14],
}

E7_U_SUPPORTS = {
    1: [2, 3, 21, 22, 23, 24, 28, 30, 32], 2: [1, 8, 19, 20, 25, 26, 27, 29, 31, 33],
    3: [1, 4, 6, 11, 13, 14, 16, 18, 25, 33], 4: [3, 5, 7, 8, 12, 17, 19, 21, 29],
    5: [4, 6, 9, 13, 20, 26, 28, 30, 31, 32],
    6: [3, 5, 8, 10, 12, 14, 17, 19, 21, 22, 24, 25, 26, 27, 28, 29, 34],
    7: [4, 10, 14, 22, 24, 25, 26, 27, 28, 34],
    8: [2, 4, 6, 11, 13, 14, 16, 18, 21, 22, 23, 24, 25, 28, 30, 32, 33],
    9: [5, 11, 14, 16, 19, 21, 22, 23, 24, 25, 27, 29, 33],
    10: [6, 7, 15, 16, 23, 29, 30, 31, 33],
    11: [3, 8, 9, 15, 17, 22, 26, 27, 28, 29, 30, 31, 34],
    12: [4, 6, 14, 15, 16, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 33, 34],
    13: [3, 5, 8, 14, 15, 16, 17, 19, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 33, 34],
    14: [3, 6, 7, 8, 9, 12, 13, 17, 19, 20, 21, 26, 28, 29, 30, 31, 32],
    15: [10, 11, 12, 13, 19, 20, 21, 24, 25, 32],
    16: [3, 8, 9, 10, 12, 13, 17, 19, 20, 21, 22, 24, 25, 26, 27, 28, 29, 30, 31, 32, 34],
    17: [4, 6, 11, 13, 14, 16, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33],
    18: [3, 8, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33],
    19: [2, 4, 6, 9, 13, 14, 15, 16, 17, 18, 22, 26, 28, 30, 31, 32, 34],
    20: [2, 5, 14, 15, 16, 17, 18, 22, 34],
    21: [1, 4, 6, 8, 9, 13, 14, 15, 16, 17, 18, 22, 25, 26, 27, 28, 29, 30, 31, 33, 34],
    22: [1, 6, 7, 8, 9, 11, 12, 13, 16, 17, 18, 19, 20, 21, 25, 26, 29, 30, 31, 32, 33],
    23: [1, 8, 9, 10, 12, 13, 17, 18, 26, 34],
    24: [1, 6, 7, 8, 9, 12, 13, 15, 16, 17, 18, 26, 29, 30, 31, 33, 34],
    25: [2, 3, 6, 7, 8, 9, 12, 13, 15, 16, 17, 18, 21, 22, 26, 28, 29, 30, 31, 32, 34],
    26: [2, 5, 6, 7, 11, 12, 13, 14, 16, 17, 18, 19, 21, 22, 23, 24, 25, 29, 30, 32, 33],
    27: [2, 6, 7, 9, 11, 12, 13, 16, 17, 18, 21, 30, 32],
    28: [1, 5, 6, 7, 8, 11, 12, 13, 14, 16, 17, 18, 19, 21, 25, 29, 33],
    29: [2, 4, 6, 9, 10, 11, 12, 13, 14, 16, 17, 18, 21, 22, 24, 25, 26, 28, 30, 32, 34],
    30: [1, 5, 8, 10, 11, 12, 13, 14, 16, 17, 18, 19, 21, 22, 24, 25, 26, 27, 29, 33, 34],
    31: [2, 5, 10, 11, 12, 13, 14, 16, 17, 18, 19, 21, 22, 24, 25, 32, 34],
    32: [1, 5, 8, 14, 15, 16, 17, 18, 19, 22, 25, 26, 27, 29, 31, 33, 34],
    33: [2, 3, 8, 9, 10, 12, 13, 17, 18, 21, 22, 24, 26, 28, 30, 32, 34],
    34: [6, 7, 11, 12, 13, 16, 19, 20, 21, 23, 24, 25, 29, 30, 31, 32, 33],
}

# Quadratic Stanley-Reisner generators s_i*s_j of the E7 clique complex.
E7_SR_PAIRS = [
    [1, 2], [1, 21], [1, 22], [1, 23], [1, 24], [1, 28], [1, 3], [1, 30], [1, 32],
    [10, 15], [10, 16], [10, 23], [10, 29], [10, 30], [10, 31], [10, 33], [11, 15],
    [11, 17], [11, 22], [11, 26], [11, 27], [11, 28], [11, 29], [11, 30], [11, 31],
    [11, 34], [12, 14], [12, 15], [12, 16], [12, 22], [12, 23], [12, 24], [12, 25],
    [12, 26], [12, 27], [12, 28], [12, 29], [12, 30], [12, 31], [12, 33], [12, 34],
    [13, 14], [13, 15], [13, 16], [13, 17], [13, 19], [13, 21], [13, 22], [13, 23],
    [13, 24], [13, 25], [13, 26], [13, 27], [13, 28], [13, 29], [13, 30], [13, 31],
    [13, 33], [13, 34], [14, 17], [14, 19], [14, 20], [14, 21], [14, 26], [14, 28],
    [14, 29], [14, 30], [14, 31], [14, 32], [15, 19], [15, 20], [15, 21], [15, 24],
    [15, 25], [15, 32], [16, 17], [16, 19], [16, 20], [16, 21], [16, 22], [16, 24],
    [16, 25], [16, 26], [16, 27], [16, 28], [16, 29], [16, 30], [16, 31], [16, 32],
    [16, 34], [17, 19], [17, 20], [17, 21], [17, 22], [17, 23], [17, 24], [17, 25],
    [17, 26], [17, 27], [17, 28], [17, 29], [17, 30], [17, 31], [17, 32], [17, 33],
    [18, 19], [18, 20], [18, 21], [18, 22], [18, 23], [18, 24], [18, 25], [18, 26],
    [18, 27], [18, 28], [18, 29], [18, 30], [18, 31], [18, 32], [18, 33], [19, 22],
    [19, 26], [19, 28], [19, 30], [19, 31], [19, 32], [19, 34], [2, 19], [2, 20], [2, 25],
    [2, 26], [2, 27], [2, 29], [2, 31], [2, 33], [2, 8], [20, 22], [20, 34], [21, 22],
    [21, 25], [21, 26], [21, 27], [21, 28], [21, 29], [21, 30], [21, 31], [21, 33],
    [21, 34], [22, 25], [22, 26], [22, 29], [22, 30], [22, 31], [22, 32], [22, 33],
    [23, 26], [23, 34], [24, 26], [24, 29], [24, 30], [24, 31], [24, 33], [24, 34],
    [25, 26], [25, 28], [25, 29], [25, 30], [25, 31], [25, 32], [25, 34], [26, 29],
    [26, 30], [26, 32], [26, 33], [27, 30], [27, 32], [28, 29], [28, 33], [29, 30],
    [29, 32], [29, 34], [3, 11], [3, 13], [3, 14], [3, 16], [3, 18], [3, 25], [3, 33],
    [3, 4], [3, 6], [30, 33], [30, 34], [31, 32], [31, 34], [32, 33], [32, 34], [33, 34],
    [4, 12], [4, 17], [4, 19], [4, 21], [4, 29], [4, 5], [4, 7], [4, 8], [5, 13], [5, 20],
    [5, 26], [5, 28], [5, 30], [5, 31], [5, 32], [5, 6], [5, 9], [6, 10], [6, 12], [6, 14],
    [6, 17], [6, 19], [6, 21], [6, 22], [6, 24], [6, 25], [6, 26], [6, 27], [6, 28],
    [6, 29], [6, 34], [6, 8], [7, 10], [7, 14], [7, 22], [7, 24], [7, 25], [7, 26],
    [7, 27], [7, 28], [7, 34], [8, 11], [8, 13], [8, 14], [8, 16], [8, 18], [8, 21],
    [8, 22], [8, 23], [8, 24], [8, 25], [8, 28], [8, 30], [8, 32], [8, 33], [9, 11],
    [9, 14], [9, 16], [9, 19], [9, 21], [9, 22], [9, 23], [9, 24], [9, 25], [9, 27],
    [9, 29], [9, 33],
]

# E6 amplitude: each quadruple (a, b, c, d) is a term 1/(s_a s_b s_c s_d).
E6_AMPLITUDE_TERMS = [
    [1, 3, 8, 9], [1, 3, 8, 12], [1, 3, 9, 11], [1, 3, 10, 11], [1, 3, 10, 12],
    [1, 4, 6, 10], [1, 4, 6, 14], [1, 4, 8, 12], [1, 4, 8, 14], [1, 4, 10, 12],
    [1, 6, 9, 11], [1, 6, 9, 14], [1, 6, 10, 11], [1, 8, 9, 14], [2, 3, 7, 10],
    [2, 3, 7, 13], [2, 3, 9, 11], [2, 3, 9, 13], [2, 3, 10, 11], [2, 5, 6, 9],
    [2, 5, 6, 15], [2, 5, 7, 13], [2, 5, 7, 15], [2, 5, 9, 13], [2, 6, 9, 11],
    [2, 6, 10, 11], [2, 6, 10, 15], [2, 7, 10, 15], [3, 7, 8, 12], [3, 7, 8, 13],
    [3, 7, 10, 12], [3, 8, 9, 13], [4, 5, 6, 14], [4, 5, 6, 15], [4, 5, 7, 8],
    [4, 5, 7, 15], [4, 5, 8, 14], [4, 6, 10, 15], [4, 7, 8, 12], [4, 7, 10, 12],
    [4, 7, 10, 15], [5, 6, 9, 14], [5, 7, 8, 13], [5, 8, 9, 13], [5, 8, 9, 14],
]

# Six-particle biadjoint amplitude; entries are s_ij or s_ijk labels.
M6_TERMS = [
    ["12", "34", "56"], ["12", "56", "123"], ["23", "56", "123"], ["23", "56", "234"],
    ["34", "56", "234"], ["16", "23", "45"], ["12", "34", "345"], ["12", "45", "123"],
    ["12", "45", "345"], ["16", "23", "234"], ["16", "34", "234"], ["16", "34", "345"],
    ["16", "45", "345"], ["23", "45", "123"],
]

# Convex realization of the dual E6 complex: columns are the 15 vertices.
FIRSCHING_MATRIX = [
    [4, -4, 2, 2, -4, -4, 0, 2, -4, 2, -1, 4, -2, 0, -2],
    [0, -4, -4, 2, 4, 2, -4, 2, 2, -4, -1, -1, 0, 4, 0],
    [0, 0, 4, -4, 0, -4, 0, 4, 4, -4, 0, 0, 4, 0, -4],
    [0, 0, 0, 4, 3, -4, 4, 4, -4, 0, -3, 3, 1, 0, 1],
]

# u-coordinates as Pluecker ratios (numerator labels, denominator labels); "-q" is minus the conic.
E6_U_PLUCKER = {
    1: [["-q"], ["126", "135", "234", "456"]],
    2: [["134", "156", "235", "246"], ["135", "146", "234", "256"]],
    3: [["134", "356"], ["135", "346"]], 4: [["136", "145"], ["135", "146"]],
    5: [["125", "136", "246", "345"], ["126", "135", "245", "346"]],
    6: [["136", "235"], ["135", "236"]],
    7: [["123", "145", "246", "356"], ["124", "135", "236", "456"]],
    8: [["125", "356"], ["135", "256"]], 9: [["125", "134"], ["124", "135"]],
    10: [["145", "235"], ["135", "245"]], 11: [["135", "234"], ["134", "235"]],
    12: [["135", "456"], ["145", "356"]],
    13: [["124", "135", "256", "346"], ["125", "134", "246", "356"]],
    14: [["126", "135"], ["125", "136"]],
    15: [["135", "146", "236", "245"], ["136", "145", "235", "246"]],
}

# u-coordinates as ratios of four root forms: (label, sign), sign -1 meaning d_j - d_i for i < j.
E6_U_DFORMS = {
    1: [[["36", -1], ["25", 1], ["14", 1], ["123456", 1]], [["456", 1], ["234", 1], ["135", 1], ["126", 1]]],
    2: [[["134", 1], ["156", 1], ["235", 1], ["246", 1]], [["256", 1], ["234", 1], ["146", 1], ["135", 1]]],
    3: [[["14", 1], ["134", 1], ["56", 1], ["356", 1]], [["46", 1], ["346", 1], ["15", 1], ["135", 1]]],
    4: [[["36", 1], ["136", 1], ["45", 1], ["145", 1]], [["46", 1], ["146", 1], ["35", 1], ["135", 1]]],
    5: [[["125", 1], ["136", 1], ["246", 1], ["345", 1]], [["346", 1], ["245", 1], ["135", 1], ["126", 1]]],
    6: [[["16", 1], ["136", 1], ["25", 1], ["235", 1]], [["26", 1], ["236", 1], ["15", 1], ["135", 1]]],
    7: [[["123", 1], ["145", 1], ["246", 1], ["356", 1]], [["456", 1], ["236", 1], ["135", 1], ["124", 1]]],
    8: [[["12", 1], ["125", 1], ["36", 1], ["356", 1]], [["26", 1], ["256", 1], ["13", 1], ["135", 1]]],
    9: [[["25", 1], ["125", 1], ["34", 1], ["134", 1]], [["35", 1], ["135", 1], ["24", 1], ["124", 1]]],
    10: [[["14", 1], ["145", 1], ["23", 1], ["235", 1]], [["24", 1], ["245", 1], ["13", 1], ["135", 1]]],
    11: [[["15", 1], ["135", 1], ["24", 1], ["234", 1]], [["25", 1], ["235", 1], ["14", 1], ["134", 1]]],
    12: [[["13", 1], ["135", 1], ["46", 1], ["456", 1]], [["36", 1], ["356", 1], ["14", 1], ["145", 1]]],
    13: [[["124", 1], ["135", 1], ["256", 1], ["346", 1]], [["356", 1], ["246", 1], ["134", 1], ["125", 1]]],
    14: [[["26", 1], ["126", 1], ["35", 1], ["135", 1]], [["36", 1], ["136", 1], ["25", 1], ["125", 1]]],
    15: [[["135", 1], ["146", 1], ["236", 1], ["245", 1]], [["246", 1], ["235", 1], ["145", 1], ["136", 1]]],
}

# Cremona involution on d-coordinates: d -> M d / 3.
CREMONA_D6 = [
    [1, 0, -1, 1, 1, -2],
    [1, 3, 2, 1, 1, 1],
    [-2, 0, -1, -2, -2, -2],
    [1, 0, -1, 1, -2, 1],
    [1, 0, -1, -2, 1, 1],
    [-2, 0, -1, 1, 1, 1],
]
CREMONA_D7 = [
    [1, 0, -1, 1, 1, -2, 0],
    [1, 3, 2, 1, 1, 1, 0],
    [-2, 0, -1, -2, -2, -2, 0],
    [1, 0, -1, 1, -2, 1, 0],
    [1, 0, -1, -2, 1, 1, 0],
    [-2, 0, -1, 1, 1, 1, 0],
    [1, 0, 2, 1, 1, 1, 3],
]

# Line transpositions of the Cremona involution centred at points 1, 2, 3.
CREMONA_LINE_SWAPS = {
    6: [["E1", "F23"], ["E2", "F13"], ["E3", "F12"], ["G4", "F56"], ["G5", "F46"], ["G6", "F45"]],
    7: [["E1", "F23"], ["E2", "F13"], ["E3", "F12"], ["G12", "H3"], ["G13", "H2"], ["G23", "H1"],
        ["F45", "G67"], ["F46", "G57"], ["F47", "G56"], ["F56", "G47"], ["F57", "G46"], ["F67", "G45"]],
}

# M0,5: u-equation supports, realized sign patterns, amplitude terms.
M05_U_SUPPORTS = {1: [2, 5], 2: [1, 3], 3: [2, 4], 4: [3, 5], 5: [1, 4]}
M05_U_SIGNS = ["+++++", "-++++", "+-+++", "++-++", "+++-+", "++++-",
               "-----", "+-+-+", "++-+-", "-++-+", "+-++-", "-+-++"]
# Each term is a pair of linear forms in (s1, ..., s5).
M05_AMPLITUDE_TERMS = [
    [[1, 0, 0, 0, 0], [0, 0, 0, 1, 0]],
    [[0, 0, 0, 1, 0], [0, 0, 1, 1, 1]],
    [[0, 0, 1, 1, 1], [0, 0, 0, 0, 1]],
    [[0, 0, 0, 0, 1], [1, 1, 0, 0, 1]],
    [[1, 1, 0, 0, 1], [1, 0, 0, 0, 0]],
]

# Four dlog arguments of the E6 canonical form, as u-exponent maps.
OMEGA_DLOG_ARGS = [
    {10: 1, 5: -1, 8: -1, 9: -1, 13: -1, 14: -1},
    {9: 1, 11: 1, 4: -1, 7: -1, 12: -1, 15: -1},
    {4: 1, 6: 1, 14: 1, 15: 1, 3: -1, 13: -1},
    {1: 1, 4: 1, 8: 1, 12: 1, 14: 1, 2: -1},
]
# Chart for the canonical-form check; entries are constants or chart variables.
OMEGA_CHART = [["1", "1", "0", "1", "1", "0"], ["x1", "0", "1", "x3", "1", "0"], ["x2", "0", "0", "x4", "1", "1"]]
# Closed-form coefficient: numerator and denominator factors as {exponent tuple: coefficient}.
OMEGA_CLOSED_NUMERATOR = [{(0, 1, 0, 0): 1, (0, 0, 0, 0): -1}]
OMEGA_CLOSED_DENOMINATOR = [
    {(1, 0, 0, 0): 1, (0, 0, 0, 0): -1},
    {(0, 1, 0, 0): 1},
    {(0, 0, 0, 1): 1, (0, 0, 0, 0): -1},
    {(1, 1, 1, 0): 1, (1, 1, 0, 1): -1, (1, 0, 1, 1): -1, (0, 1, 1, 1): 1, (1, 0, 0, 1): 1, (0, 1, 1, 0): -1},
]

# Mandelstam samples: s_ijk (and t) as combinations of s_1..s_15.
MANDELSTAM_SAMPLES = {
    "123": {7: 1},
    "124": {7: -1, 9: 1, 13: 1},
    "125": {5: 1, 8: 1, 9: 1, 13: -1, 14: -1},
    "456": {1: -1, 7: -1, 12: 1},
    "t": {1: 1},
}
# Relation among the s_ijk: sum over listed triples plus 2t vanishes.
MANDELSTAM_RELATION = ["125", "135", "145", "156", "235", "245", "256", "345", "356", "456"]

# Gr(3,6) rays named in the scattering-fan identification, keyed by amplitude variable.
GR36_NAMED_RAYS = {
    2: "e156", 3: "f1234", 4: "f1236", 5: "e345", 6: "f2345", 7: "e123", 8: "f3456", 9: "f1256",
    10: "f1456", 11: "e234+e156", 12: "e123+e456", 13: "g12,34,56", 14: "e126+e345", 15: "g16,45,23",
}
# The five g-rays passing the E6 chirotope filter.
GR36_CHIROTOPE_G_RAYS = ["g12,56,34", "g13,46,25", "g14,35,26", "g15,24,36", "g16,23,45"]
# Extra Gr(3,7) rays and the non-edge pairs whose sums still pass.
GR37_EXTRA_RAYS = ["e126+e457", "e124+e367", "e237+e456"]
GR37_EXTRANEOUS_PAIRS = [[1, 23], [2, 20], [10, 15], [13, 17], [21, 25], [26, 29]]
GR37_PASSING_PAIRS = 303
GR37_PASSING_RAYS = 31
# Chirotope integrands: numerator and denominator Pluecker labels ("q" is the conic).
CHIROTOPE_INTEGRANDS = {
    6: [["q"], ["125", "126", "134", "136", "145", "234", "235", "246", "356", "456"]],
    7: [["123", "145", "357"], ["124", "126", "134", "135", "157", "235", "237", "367", "456", "457"]],
}

# Facet classes of the E7 complex: member vertices and dual f-vector.
E7_FACET_TYPES = [
    [[9, 11, 27], [132, 330, 300, 120, 20]],
    [[6, 8, 12, 14, 18, 19, 24, 28, 31, 32, 33, 34], [84, 210, 196, 84, 16]],
    [[13, 16, 17, 21, 22, 25, 26, 29, 30], [50, 125, 120, 55, 12]],
    [[2, 3, 5, 7, 15, 23], [158, 395, 358, 142, 23]],
    [[1, 4, 10, 20], [168, 420, 380, 150, 24]],
]
# Edge groups of the E7 graph by vertex-kind pair.
E7_EDGE_GROUPS = {
    "A1-A1": 33, "A2-A2": 24, "A1-A2:inclusion": 24, "A1-A2:separate": 60,
    "A1-A3x2:exceptional": 6, "A1-A3x2:inclusion": 54, "A1-A7": 24, "A2-A3x2": 36,
    "A2-A7": 24, "A3x2-A7": 12,
}
E6_F_VECTOR = [45, 90, 60, 15]
E7_F_VECTOR = [579, 1737, 2000, 1105, 297, 34]
E7_DUAL_BETTI = [579, 1737, 2000, 1105, 297, 34, 1]

# Counting constants.
WEYL_ORDERS = {6: 51840, 7: 2903040}
CHAR_POLY_ROOTS = {6: [1, 4, 5, 7, 8, 11], 7: [1, 5, 7, 9, 11, 13, 17]}
ARRANGEMENT_ML_DEGREES = {6: 5040, 7: 368640}
LINE_COUNTS = {4: 10, 5: 16, 6: 27, 7: 56}
LINE_DEGREES = {4: 3, 5: 5, 6: 10, 7: 28}
INCIDENCE_TOTALS = {4: 30, 5: 80, 6: 270, 7: 1624}
POLYGON_COUNTS = {4: 12, 5: 36, 6: 130, 7: 806}
SIGN_VECTOR_COUNTS = {6: 260, 7: 1596}
REGION_COUNTS = {6: 432, 7: 60480}
DIAGRAM_AUTOMORPHISMS = {6: 120, 7: 24}
INCIDENCE_RANKS = {6: 16, 7: 36}
SUBSYSTEM_COUNTS = {"A2x3": 40, "A1x7": 135}
CHI_X3N = {6: 26, 7: 1272, 8: 188112}
CHI_Y3N = {5: 2, 6: 32, 7: 3600, 8: 4884387}
CHI_SURFACES = {5: 16, 6: 90}
CHI_CONIC_STRATUM_A = -312
CHI_CONIC_STRATUM_B = 24
CHI_TOP_STRATUM = -16
ML_DEGREES = {"y35": 2, "s5": 16, "s6": 90, "y36": 32, "y37": 3600, "aE6": 5040,
              "yoshida": 2880, "gopel": 86400, "y38": 4884387}
ECKARDT_STRATA = {1: 45, 2: 270, 3: 240, 4: 720, 6: 540, 9: 40, 10: 216, 18: 40}
ECKARDT_EXAMPLE = "(16)(25)(34)"
NEWTON_POLYTOPE_F_VECTOR = [62, 124, 81, 19]


@dataclass(frozen=True)
class Fixture:
    name: str
    anchor: str
    data: Any
    version: int = 1

    def checksum(self) -> str:
        blob = json.dumps(_jsonable(self.data), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


_ANCHORS = {
    "EXAMPLE_CUBIC_MATRIX": "example cubic: point matrix",
    "EXAMPLE_CUBIC_TRIANGLES": "example cubic: triangle list",
    "EXAMPLE_CUBIC_QUADRILATERALS": "example cubic: quadrilateral list",
    "EXAMPLE_CUBIC_PENTAGONS": "example cubic: pentagon list",
    "EXAMPLE_DOUBLE_SIX": "example cubic: triangle-free double-six",
    "EXAMPLE_DOUBLE_SIX_PENTAGONS": "example cubic: pentagon counts of the double-six",
    "E6_A1_VERTICES": "E6 vertex catalog: A1 labels",
    "E6_A2X3_VERTICES": "E6 vertex catalog: A2x3 systems",
    "E7_A1_VERTICES": "E7 vertex catalog: A1 labels",
    "E7_SYSTEM_VERTICES": "E7 vertex catalog: A2, A3x2 and A7 systems",
    "E6_U_SUPPORTS": "E6 perfect u-equations",
    "E7_U_SUPPORTS": "E7 u-equations",
    "E7_SR_PAIRS": "E7 Stanley-Reisner generators",
    "E6_AMPLITUDE_TERMS": "E6 facet amplitude",
    "M6_TERMS": "six-point biadjoint amplitude",
    "FIRSCHING_MATRIX": "E6 convex realization matrix",
    "E6_U_PLUCKER": "E6 u-coordinates in Pluecker form",
    "E6_U_DFORMS": "E6 u-coordinates as products of root forms",
    "CREMONA_D6": "Cremona action on d-coordinates, n=6",
    "CREMONA_D7": "Cremona action on d-coordinates, n=7",
    "CREMONA_LINE_SWAPS": "Cremona line transpositions",
    "M05_U_SUPPORTS": "M05 u-equations",
    "M05_U_SIGNS": "M05 realized u-sign patterns",
    "M05_AMPLITUDE_TERMS": "M05 amplitude",
    "OMEGA_DLOG_ARGS": "E6 canonical form: dlog arguments",
    "OMEGA_CHART": "E6 canonical form: chart matrix",
    "MANDELSTAM_SAMPLES": "n=6 Mandelstam samples",
    "GR36_NAMED_RAYS": "Gr(3,6) rays named by amplitude variable",
    "GR36_CHIROTOPE_G_RAYS": "Gr(3,6) g-rays passing the E6 chirotope",
    "GR37_EXTRA_RAYS": "Gr(3,7) added rays",
    "GR37_EXTRANEOUS_PAIRS": "Gr(3,7) extraneous pairs",
    "CHIROTOPE_INTEGRANDS": "chirotopal integrands",
    "E7_FACET_TYPES": "E7 facet types",
    "E7_EDGE_GROUPS": "E7 edge groups",
    "ECKARDT_STRATA": "Y(3,6) strata counts by Eckardt type",
}

REGISTRY: dict[str, Fixture] = {
    name: Fixture(name, anchor, globals()[name]) for name, anchor in _ANCHORS.items()
}

# Frozen at transcription time; a mismatch means a fixture was edited.
CHECKSUMS: dict[str, str] = {
    "EXAMPLE_CUBIC_MATRIX": "49ad9dbfb6c1fa6f9f0af12fe4b259d71de0132aeff3c0bda68279b6f0b8e4fd",
    "EXAMPLE_CUBIC_TRIANGLES": "57a41ea5704e9d56425d20af565bc2de1f87e7c9ca1b78bf1ec5b19175d44b95",
    "EXAMPLE_CUBIC_QUADRILATERALS": "bbb97339b4bfe2f0792eed5917bc9848cc03496681aa664c006f3ccc4db74559",
    "EXAMPLE_CUBIC_PENTAGONS": "d7ddd7ccec5cdcc37293667a501ed1653b643669dc37fbffb1444ba260bbe319",
    "EXAMPLE_DOUBLE_SIX": "f87186c55557de101e8e3a61415e601dee98822f34cd1c71a695ee4a35d17584",
    "EXAMPLE_DOUBLE_SIX_PENTAGONS": "994d0d2d58c751733dd5db2d5b97d46f3bb2ebfa57ff5c5e22724693aa06f7f8",
    "E6_A1_VERTICES": "5113f8a270265fe4b51150e035d1f0c35862ff11f744f6eda9bf003537fd45c8",
    "E6_A2X3_VERTICES": "862b9d45d889cffc87dd3134c499d05f0ae090e98a5e533bb96411f69b0d4901",
    "E7_A1_VERTICES": "1e46c0f359ab4f57326db7a858074b53499482c79706e150ab53d61994cf6891",
    "E7_SYSTEM_VERTICES": "0c6d6e57c62b5a6d143e114532d6d12b92ff43da6dfc2ed480b5dc0e84d57057",
    "E6_U_SUPPORTS": "530d1217f412b5772c3851dfc893e1da90638e87e4a9781eb098e48f2c5ae0c6",
    "E7_U_SUPPORTS": "b0b11f2fdc871b6b6518af927c78c81ec6feb34dd27de678d66335df0bd69a3e",
    "E7_SR_PAIRS": "6a59b7ba62d16f622f6e5a736f31c6e6c561acb9d749a428f07c6c08ac550397",
    "E6_AMPLITUDE_TERMS": "cd3918aaf2fd34d72d0d8b42d30920b4e8c8c35791e6d33c9c707331436ad806",
    "M6_TERMS": "1dfc3ac0a7638afdb2d9b7f54584a5e6e653487647058e85a9dadf62923e6b3b",
    "FIRSCHING_MATRIX": "818c8bdd89f97b15a36383ec24c6f17d8dd0f24f80c968fb9bedc7b501a46f33",
    "E6_U_PLUCKER": "2d200687bb939fc442d2b2f38c07ec395a956badc16649f8351d39036767d466",
    "E6_U_DFORMS": "9274f19d3fa87ba5c2929573eccfe4fddd42ecfee3eb0af8cc6844128ffe9695",
    "CREMONA_D6": "484df3bb2e2d2384d7a9261eecf83243349a088bdc6672ace6b507cfda3186ac",
    "CREMONA_D7": "603e8166ae297729b7483095850620c89927093ec2433f4e3562b24a1d1c8963",
    "CREMONA_LINE_SWAPS": "9266f65dc1e1799f0ead916703b9c8b89478cc1cfcab6e77bf250b299d64ff93",
    "M05_U_SUPPORTS": "556dd1000f76cc289e7a7cf9be36549c673128938d91b576d4162a779915871b",
    "M05_U_SIGNS": "453e9886e49688b23617cf217b1fcb1596fa51fc91aaef789d019c9fdba390f7",
    "M05_AMPLITUDE_TERMS": "4ff10197b5d1b3e32b43f589ad84d18169b5e1a622e95c3ad45e9a34da5f959c",
    "OMEGA_DLOG_ARGS": "7b4f76a8152319c2348ebd94854085817f4a729565d16651860dbc685d01376d",
    "OMEGA_CHART": "fc79893596728d9dc07b4add1dd8009ddb06c16da347b126c5e9d59adbeba308",
    "MANDELSTAM_SAMPLES": "fa051ed0fb415e97179d47679f3ff9e78eca0fccbc3db7ab2a774ed6e4bfa4fe",
    "GR36_NAMED_RAYS": "e262a5333c7093fc0fc6988fbbed9f83470b047378dd22068c83924542c486c1",
    "GR36_CHIROTOPE_G_RAYS": "67f12448bf7a5133b4916b23e6d88fdcb67981240a98165ba6a02afe66b00e6b",
    "GR37_EXTRA_RAYS": "7302482653293a376cfd3edd93d8bb88d6d8133202c85cd56d10ef04152b167c",
    "GR37_EXTRANEOUS_PAIRS": "1c219249c9da158824c34f6f00492e4832adfa8dfa9650af1e56279c80d4a973",
    "CHIROTOPE_INTEGRANDS": "b3600accbd970ab2c9c43caecbd5671832ac1011dd6aac92e8c43526b8f66a81",
    "E7_FACET_TYPES": "4969c0ec8dccafc2aa93e971aa7e954b834ffe5b6aa0d6e46fbd4e170f9674c4",
    "E7_EDGE_GROUPS": "8eeaf2ee811abfc195c20be6ce8d5a461f558348ad2aeacbc65f8beae1d0efb4",
    "ECKARDT_STRATA": "cc454c7691805bf59368536b8c67af7ccda57d740ce9288b9078102ca44c8e81",
}


def verify_checksums() -> dict[str, bool]:
    return {name: fx.checksum() == CHECKSUMS.get(name) for name, fx in REGISTRY.items()}
