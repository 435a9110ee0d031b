//! Literal tile data.
//!
//! Formula tiles are kept exactly as they are printed, one printed row per
//! line. The three- and five-row families are printed transposed (one printed
//! row per tile column); the `transposed` flag on each template says so.
//! Everything else is printed in tile orientation.

use crate::array::Matrix;

pub(crate) type Printed = &'static [&'static [&'static str]];

/// `H(3,3)` over `Z_19`.
pub fn h33() -> Matrix {
    Matrix::from_rows(&[[-8, -2, -9], [7, -3, -4], [1, 5, -6]])
}

/// Integer `H(3,4)` over `Z_25`.
pub fn h34() -> Matrix {
    Matrix::from_rows(&[[1, 2, 3, -6], [8, -12, -7, 11], [-9, 10, 4, -5]])
}

/// The 4x4 shiftable base block as it is usually printed. Its columns sum to
/// `[-8, 8, 8, -8]`, so it is not a Heffter array; see [`h44`].
pub fn h44_printed() -> Matrix {
    Matrix::from_rows(&[
        [1, -2, -3, 4],
        [-5, 6, 7, -8],
        [9, -10, -11, 12],
        [-13, 14, 15, -16],
    ])
}

/// Shiftable integer `H_s(4,4)`: the printed block with its last two rows negated.
pub fn h44() -> Matrix {
    Matrix::from_rows(&[
        [1, -2, -3, 4],
        [-5, 6, 7, -8],
        [-9, 10, 11, -12],
        [13, -14, -15, 16],
    ])
}

/// Shiftable integer `H_s(4,6)`.
pub fn h46() -> Matrix {
    Matrix::from_rows(&[
        [1, -2, 3, -4, 11, -9],
        [-7, 8, -12, 10, -5, 6],
        [-13, 14, -15, 16, -23, 21],
        [19, -20, 24, -22, 17, -18],
    ])
}

/// Shiftable integer `H_s(6,6)`.
pub fn h66() -> Matrix {
    Matrix::from_rows(&[
        [-1, 5, 2, -7, -9, 10],
        [3, -4, -6, 8, 11, -12],
        [-21, 22, -13, 17, 14, -19],
        [23, -24, 15, -16, -18, 20],
        [26, -31, -33, 34, -25, 29],
        [-30, 32, 35, -36, 27, -28],
    ])
}

/// Integer `H(5,4)`.
pub fn h54() -> Matrix {
    Matrix::from_rows(&[
        [7, -16, -10, 19],
        [-12, 15, 17, -20],
        [-2, 9, -18, 11],
        [6, 5, 3, -14],
        [1, -13, 8, 4],
    ])
}

/// `H(5,5)` over `Z_51`.
pub fn h55() -> Matrix {
    Matrix::from_rows(&[
        [1, 5, 6, 7, -19],
        [2, 8, 12, 15, 14],
        [3, 9, -21, 22, -13],
        [4, 11, -25, -24, -17],
        [-10, 18, -23, -20, -16],
    ])
}

/// `H(5,6)` over `Z_61`.
pub fn h56() -> Matrix {
    Matrix::from_rows(&[
        [1, -8, -7, 15, 26, -27],
        [-2, 20, -11, 24, -25, -6],
        [29, -19, 17, -4, -10, -13],
        [30, -9, -21, -23, -5, 28],
        [3, 16, 22, -12, 14, 18],
    ])
}

// 8x3 as printed
pub(crate) const THREE_0_A: Printed = &[
    &["-12k - 13", "4k + 4", "8k + 9"],
    &["-10k - 11", "-8k - 7", "18k + 18"],
    &["4k + 6", "18k + 17", "-22k - 23"],
    &["4k + 3", "18k + 19", "-22k - 22"],
    &["10k + 10", "4k + 5", "-14k - 15"],
    &["-4k - 8", "-18k - 16", "22k + 24"],
    &["12k + 14", "-2", "-12k - 12"],
    &["-1", "-20k - 20", "20k + 21"],
];

// 8x3 as printed
pub(crate) const THREE_0_AR: Printed = &[
    &["8k + 2r + 10", "8k - 4r + 5", "-16k + 2r - 15"],
    &["-8k + 4r - 8", "-16k - 2r - 16", "24k - 2r + 24"],
    &["14k - 2r + 14", "-4k + 4r - 2", "-10k - 2r - 12"],
    &["-4k + 4r - 1", "-18k - 2r - 20", "22k - 2r + 21"],
    &["-8k - 2r - 11", "-8k + 4r - 3", "16k - 2r + 14"],
    &["8k - 4r + 6", "16k + 2r + 17", "-24k + 2r - 23"],
    &["-14k + 2r - 13", "4k - 4r", "10k + 2r + 13"],
    &["4k - 4r - 1", "18k + 2r + 21", "-22k + 2r - 20"],
];

// 9x3 as printed
pub(crate) const THREE_1_A: Printed = &[
    &["8k + 7", "8k + 10", "-16k - 17"],
    &["10k + 12", "8k + 9", "-18k - 21"],
    &["16k + 18", "-12k - 14", "-4k - 4"],
    &["4k + 6", "-22k - 26", "18k + 20"],
    &["4k + 3", "18k + 22", "-22k - 25"],
    &["-4k - 5", "14k + 16", "-10k - 11"],
    &["-12k - 13", "-2", "12k + 15"],
    &["-22k - 27", "4k + 8", "18k + 19"],
    &["-1", "-20k - 23", "20k + 24"],
];

// 8x3 as printed
pub(crate) const THREE_1_AR: Printed = &[
    &["-8k + 4r - 5", "16k - 2r + 16", "-8k - 2r - 11"],
    &["-10k - 2r - 13", "-4k + 4r - 2", "14k - 2r + 15"],
    &["-24k + 2r - 27", "8k - 4r + 8", "16k + 2r + 19"],
    &["-4k + 4r - 1", "-18k - 2r - 23", "22k - 2r + 24"],
    &["8k - 4r + 3", "-16k + 2r - 15", "8k + 2r + 12"],
    &["10k + 2r + 14", "4k - 4r", "-14k + 2r - 14"],
    &["24k - 2r + 26", "-8k + 4r - 6", "-16k - 2r - 20"],
    &["4k - 4r - 1", "18k + 2r + 24", "-22k + 2r - 23"],
];

// 10x3 as printed
pub(crate) const THREE_2_A: Printed = &[
    &["24k + 30", "24k + 29", "2"],
    &["16k + 21", "-8k - 11", "-8k - 10"],
    &["10k + 13", "-10k - 14", "1"],
    &["8k + 8", "12k + 16", "-20k - 24"],
    &["4k + 5", "16k + 20", "-20k - 25"],
    &["8k + 9", "12k + 17", "-20k - 26"],
    &["-4k - 7", "14k + 19", "-10k - 12"],
    &["12k + 15", "3", "-12k - 18"],
    &["-20k - 27", "4", "20k + 23"],
    &["-4k - 6", "-18k - 22", "22k + 28"],
];

// 8x3 as printed
pub(crate) const THREE_2_AR: Printed = &[
    &["-8k + 4r - 7", "16k - 2r + 19", "-8k - 2r - 12"],
    &["10k + 2r + 15", "4k - 4r + 3", "-14k + 2r - 18"],
    &["-22k + 2r - 27", "4k - 4r + 4", "18k + 2r + 23"],
    &["-8k + 4r - 6", "-16k - 2r - 22", "24k - 2r + 28"],
    &["8k - 4r + 5", "-16k + 2r - 18", "8k + 2r + 13"],
    &["-10k - 2r - 16", "-4k + 4r - 1", "14k - 2r + 17"],
    &["22k - 2r + 26", "-4k + 4r - 2", "-18k - 2r - 24"],
    &["8k - 4r + 4", "16k + 2r + 23", "-24k + 2r - 27"],
];

// 11x3 as printed
pub(crate) const THREE_3_A: Printed = &[
    &["24k + 33", "24k + 32", "2"],
    &["8k + 11", "-16k - 23", "8k + 12"],
    &["8k + 13", "-12k - 18", "4k + 5"],
    &["4k + 6", "10k + 15", "-14k - 21"],
    &["1", "20k + 27", "-20k - 28"],
    &["-12k - 17", "-8k - 9", "20k + 26"],
    &["8k + 10", "14k + 20", "-22k - 30"],
    &["-14k - 22", "4k + 8", "10k + 14"],
    &["22k + 31", "-4k - 7", "-18k - 24"],
    &["4", "-20k - 29", "20k + 25"],
    &["-3", "-12k - 16", "12k + 19"],
];

// 8x3 as printed
pub(crate) const THREE_3_AR: Printed = &[
    &["-16k + 2r - 22", "8k - 4r + 8", "8k + 2r + 14"],
    &["24k - 2r + 31", "-8k + 4r - 7", "-16k - 2r - 24"],
    &["4k - 4r + 4", "-22k + 2r - 29", "18k + 2r + 25"],
    &["-4k + 4r - 3", "-10k - 2r - 16", "14k - 2r + 19"],
    &["16k - 2r + 21", "-8k + 4r - 6", "-8k - 2r - 15"],
    &["-24k + 2r - 30", "8k - 4r + 5", "16k + 2r + 25"],
    &["-4k + 4r - 2", "22k - 2r + 28", "-18k - 2r - 26"],
    &["4k - 4r + 1", "10k + 2r + 17", "-14k + 2r - 18"],
];

// 12x3 as printed
pub(crate) const THREE_4_A: Printed = &[
    &["8k + 13", "4k + 6", "-12k - 19"],
    &["10k + 16", "8k + 11", "-18k - 27"],
    &["22k + 34", "-4k - 8", "-18k - 26"],
    &["-4k - 5", "22k + 33", "-18k - 28"],
    &["4k + 7", "-14k - 22", "10k + 15"],
    &["-22k - 35", "4k + 10", "18k + 25"],
    &["-12k - 18", "-2", "12k + 20"],
    &["-1", "-20k - 30", "20k + 31"],
    &["-14k - 23", "10k + 14", "4k + 9"],
    &["-4k - 12", "-18k - 24", "22k + 36"],
    &["12k + 21", "-12k - 17", "-4"],
    &["3", "20k + 29", "-20k - 32"],
];

// 8x3 as printed
pub(crate) const THREE_4_AR: Printed = &[
    &["-16k + 2r - 23", "8k + 2r + 14", "8k - 4r + 9"],
    &["-8k + 4r - 12", "-16k - 2r - 24", "24k - 2r + 36"],
    &["14k - 2r + 21", "-10k - 2r - 17", "-4k + 4r - 4"],
    &["4k - 4r + 3", "18k + 2r + 29", "-22k + 2r - 32"],
    &["16k - 2r + 22", "-8k - 2r - 15", "-8k + 4r - 7"],
    &["8k - 4r + 10", "16k + 2r + 25", "-24k + 2r - 35"],
    &["-14k + 2r - 20", "10k + 2r + 18", "4k - 4r + 2"],
    &["-4k + 4r - 1", "-18k - 2r - 30", "22k - 2r + 31"],
];

// 5x3 as printed
pub(crate) const THREE_5_A: Printed = &[
    &["8k + 6", "-16k - 9", "8k + 3"],
    &["10k + 7", "8k + 5", "-18k - 12"],
    &["-16k - 10", "4k + 2", "12k + 8"],
    &["-4k - 4", "-18k - 11", "22k + 15"],
    &["4k + 1", "18k + 13", "-22k - 14"],
];

// 8x3 as printed
pub(crate) const THREE_5_AR: Printed = &[
    &["-8k + 4r - 1", "16k - 2r + 8", "-8k - 2r - 7"],
    &["-14k + 2r - 8", "4k - 4r", "10k + 2r + 8"],
    &["16k + 2r + 11", "8k - 4r + 4", "-24k + 2r - 15"],
    &["4k - 4r - 1", "18k + 2r + 14", "-22k + 2r - 13"],
    &["8k - 4r - 1", "-16k + 2r - 7", "8k + 2r + 8"],
    &["14k - 2r + 7", "-4k + 4r + 2", "-10k - 2r - 9"],
    &["-16k - 2r - 12", "-8k + 4r - 2", "24k - 2r + 14"],
    &["-4k + 4r + 3", "-18k - 2r - 15", "22k - 2r + 12"],
];

// 6x3 as printed
pub(crate) const THREE_6_A: Printed = &[
    &["24k + 18", "2", "24k + 17"],
    &["-16k - 13", "8k + 6", "8k + 7"],
    &["-1", "-10k - 8", "10k + 9"],
    &["8k + 4", "-20k - 14", "12k + 10"],
    &["-4k - 3", "-16k - 12", "20k + 15"],
    &["-8k - 5", "-12k - 11", "20k + 16"],
];

// 8x3 as printed
pub(crate) const THREE_6_AR: Printed = &[
    &["-8k + 4r - 3", "16k - 2r + 11", "-8k - 2r - 8"],
    &["-4k + 4r - 1", "-10k - 2r - 10", "14k - 2r + 11"],
    &["-4k + 4r - 2", "22k - 2r + 16", "-18k - 2r - 14"],
    &["8k - 4r + 2", "16k + 2r + 14", "-24k + 2r - 16"],
    &["8k - 4r + 1", "-16k + 2r - 10", "8k + 2r + 9"],
    &["4k - 4r - 1", "10k + 2r + 11", "-14k + 2r - 10"],
    &["4k - 4r", "-22k + 2r - 15", "18k + 2r + 15"],
    &["-8k + 4r", "-16k - 2r - 15", "24k - 2r + 15"],
];

// 7x3 as printed
pub(crate) const THREE_7_A: Printed = &[
    &["24k + 21", "2", "24k + 20"],
    &["16k + 15", "-8k - 8", "-8k - 7"],
    &["4k + 3", "-12k - 12", "8k + 9"],
    &["-4k - 4", "14k + 14", "-10k - 10"],
    &["-20k - 18", "1", "20k + 17"],
    &["-12k - 11", "20k + 16", "-8k - 5"],
    &["-8k - 6", "-14k - 13", "22k + 19"],
];

// 8x3 as printed
pub(crate) const THREE_7_AR: Printed = &[
    &["-16k + 2r - 14", "8k + 2r + 10", "8k - 4r + 4"],
    &["-8k + 4r - 3", "-16k - 2r - 16", "24k - 2r + 19"],
    &["-18k - 2r - 16", "22k - 2r + 18", "-4k + 4r - 2"],
    &["4k - 4r + 1", "10k + 2r + 11", "-14k + 2r - 12"],
    &["16k - 2r + 13", "-8k - 2r - 11", "-8k + 4r - 2"],
    &["8k - 4r + 1", "16k + 2r + 17", "-24k + 2r - 18"],
    &["18k + 2r + 17", "-22k + 2r - 17", "4k - 4r"],
    &["-4k + 4r + 1", "-10k - 2r - 12", "14k - 2r + 11"],
];

// 8x5 as printed
pub(crate) const FIVE_0_A: Printed = &[
    &["8k + 10", "8k + 11", "1", "-2", "-16k - 20"],
    &["-4k - 5", "-8k - 12", "24k + 28", "12k + 16", "-24k - 27"],
    &["-12k - 15", "24k + 30", "-8k - 9", "-24k - 29", "20k + 23"],
    &["-8k - 8", "-24k - 31", "22k + 25", "-14k - 18", "24k + 32"],
    &["-8k - 13", "-24k - 33", "-8k - 7", "16k + 19", "24k + 34"],
    &["-24k - 35", "24k + 36", "-10k - 14", "-4k - 4", "14k + 17"],
    &["24k + 26", "24k + 38", "-16k - 21", "-8k - 6", "-24k - 37"],
    &["24k + 40", "-24k - 39", "-4k - 3", "22k + 24", "-18k - 22"],
];

// 8x5 as printed
pub(crate) const FIVE_0_AR: Printed = &[
    &[
        "8k - 4r + 5",
        "8k + 2r + 14",
        "-16k + 2r - 18",
        "24k + 2r + 41",
        "-24k - 2r - 42",
    ],
    &[
        "-4k + 4r - 2",
        "-10k - 2r - 15",
        "14k - 2r + 16",
        "-26k - 2r - 41",
        "26k + 2r + 42",
    ],
    &[
        "8k - 4r + 4",
        "16k + 2r + 22",
        "-24k + 2r - 25",
        "28k + 2r + 41",
        "-28k - 2r - 42",
    ],
    &[
        "-4k + 4r - 1",
        "-18k - 2r - 23",
        "22k - 2r + 23",
        "-30k - 2r - 41",
        "30k + 2r + 42",
    ],
    &[
        "-8k + 4r - 3",
        "-8k - 2r - 15",
        "16k - 2r + 17",
        "-32k - 2r - 41",
        "32k + 2r + 42",
    ],
    &[
        "4k - 4r",
        "10k + 2r + 16",
        "-14k + 2r - 15",
        "34k + 2r + 41",
        "-34k - 2r - 42",
    ],
    &[
        "-8k + 4r - 2",
        "-16k - 2r - 23",
        "24k - 2r + 24",
        "-36k - 2r - 41",
        "36k + 2r + 42",
    ],
    &[
        "4k - 4r - 1",
        "18k + 2r + 24",
        "-22k + 2r - 22",
        "38k + 2r + 41",
        "-38k - 2r - 42",
    ],
];

// 9x5 as printed
pub(crate) const FIVE_1_A: Printed = &[
    &["1", "-2", "3", "40k + 45", "40k + 44"],
    &["-8k - 11", "-12k - 14", "-24k - 28", "24k + 29", "20k + 24"],
    &["-8k - 10", "-10k - 13", "18k + 22", "-24k - 30", "24k + 31"],
    &["24k + 33", "-18k - 20", "-24k - 32", "-4k - 7", "22k + 26"],
    &["-24k - 34", "24k + 27", "-8k - 9", "-16k - 19", "24k + 35"],
    &["-4k - 5", "24k + 37", "-18k - 21", "-24k - 36", "22k + 25"],
    &["20k + 23", "24k + 39", "-12k - 16", "-8k - 8", "-24k - 38"],
    &["-24k - 40", "-8k - 12", "-8k - 6", "24k + 41", "16k + 17"],
    &["24k + 43", "-24k - 42", "-4k - 4", "-12k - 15", "16k + 18"],
];

// 8x5 as printed
pub(crate) const FIVE_1_AR: Printed = &[
    &[
        "8k - 4r + 7",
        "16k + 2r + 20",
        "-24k + 2r - 26",
        "24k + 2r + 44",
        "-24k - 2r - 45",
    ],
    &[
        "-4k + 4r - 2",
        "-18k - 2r - 23",
        "22k - 2r + 24",
        "-26k - 2r - 44",
        "26k + 2r + 45",
    ],
    &[
        "4k - 4r + 3",
        "10k + 2r + 14",
        "-14k + 2r - 16",
        "28k + 2r + 44",
        "-28k - 2r - 45",
    ],
    &[
        "-8k + 4r - 4",
        "-8k - 2r - 13",
        "16k - 2r + 16",
        "-30k - 2r - 44",
        "30k + 2r + 45",
    ],
    &[
        "-8k + 4r - 5",
        "-16k - 2r - 21",
        "24k - 2r + 25",
        "-32k - 2r - 44",
        "32k + 2r + 45",
    ],
    &[
        "4k - 4r",
        "18k + 2r + 24",
        "-22k + 2r - 23",
        "34k + 2r + 44",
        "-34k - 2r - 45",
    ],
    &[
        "-4k + 4r - 1",
        "-10k - 2r - 15",
        "14k - 2r + 15",
        "-36k - 2r - 44",
        "36k + 2r + 45",
    ],
    &[
        "8k - 4r + 2",
        "8k + 2r + 14",
        "-16k + 2r - 15",
        "38k + 2r + 44",
        "-38k - 2r - 45",
    ],
];

// 10x5 as printed
pub(crate) const FIVE_2_A: Printed = &[
    &["1", "-2", "3", "40k + 49", "40k + 50"],
    &["-8k - 12", "-12k - 15", "24k + 32", "-24k - 31", "20k + 26"],
    &["-8k - 11", "-14k - 19", "22k + 29", "-24k - 33", "24k + 34"],
    &["-12k - 16", "20k + 25", "-24k - 35", "-8k - 10", "24k + 36"],
    &["24k + 38", "20k + 27", "-4k - 7", "-24k - 37", "-16k - 21"],
    &["24k + 40", "-14k - 18", "-4k - 6", "18k + 23", "-24k - 39"],
    &["16k + 20", "24k + 42", "-24k - 41", "-8k - 13", "-8k - 8"],
    &["-8k - 9", "-24k - 43", "24k + 44", "-16k - 22", "24k + 30"],
    &["-4k - 4", "-24k - 45", "-10k - 14", "24k + 46", "14k + 17"],
    &["-24k - 47", "24k + 48", "-4k - 5", "22k + 28", "-18k - 24"],
];

// 8x5 as printed
pub(crate) const FIVE_2_AR: Printed = &[
    &[
        "8k - 4r + 6",
        "8k + 2r + 14",
        "-16k + 2r - 19",
        "24k + 2r + 49",
        "-24k - 2r - 50",
    ],
    &[
        "-8k + 4r - 7",
        "-16k - 2r - 23",
        "24k - 2r + 29",
        "-26k - 2r - 49",
        "26k + 2r + 50",
    ],
    &[
        "4k - 4r + 2",
        "10k + 2r + 15",
        "-14k + 2r - 16",
        "28k + 2r + 49",
        "-28k - 2r - 50",
    ],
    &[
        "-4k + 4r - 3",
        "-18k - 2r - 25",
        "22k - 2r + 27",
        "-30k - 2r - 49",
        "30k + 2r + 50",
    ],
    &[
        "-8k + 4r - 4",
        "-8k - 2r - 15",
        "16k - 2r + 18",
        "-32k - 2r - 49",
        "32k + 2r + 50",
    ],
    &[
        "8k - 4r + 5",
        "16k + 2r + 24",
        "-24k + 2r - 28",
        "34k + 2r + 49",
        "-34k - 2r - 50",
    ],
    &[
        "-4k + 4r",
        "-10k - 2r - 16",
        "14k - 2r + 15",
        "-36k - 2r - 49",
        "36k + 2r + 50",
    ],
    &[
        "4k - 4r + 1",
        "18k + 2r + 26",
        "-22k + 2r - 26",
        "38k + 2r + 49",
        "-38k - 2r - 50",
    ],
];

// 11x5 as printed
pub(crate) const FIVE_3_A: Printed = &[
    &["8k + 13", "10k + 16", "-18k - 28", "-2", "1"],
    &["-4k - 7", "-12k - 19", "16k + 25", "-24k - 36", "24k + 37"],
    &["-8k - 12", "-12k - 20", "-24k - 38", "20k + 31", "24k + 39"],
    &["-4k - 5", "22k + 33", "-24k - 40", "24k + 41", "-18k - 29"],
    &["-16k - 26", "-8k - 10", "24k + 35", "24k + 43", "-24k - 42"],
    &["-4k - 6", "24k + 45", "-10k - 17", "-24k - 44", "14k + 22"],
    &["16k + 24", "-24k - 46", "24k + 47", "-8k - 14", "-8k - 11"],
    &["22k + 32", "-24k - 48", "-18k - 30", "-4k - 3", "24k + 49"],
    &["-24k - 50", "-16k - 27", "24k + 34", "24k + 51", "-8k - 8"],
    &["-10k - 18", "24k + 53", "14k + 21", "-24k - 52", "-4k - 4"],
    &["24k + 55", "16k + 23", "-8k - 9", "-8k - 15", "-24k - 54"],
];

// 8x5 as printed
pub(crate) const FIVE_3_AR: Printed = &[
    &[
        "4k - 4r + 1",
        "18k + 2r + 31",
        "-22k + 2r - 31",
        "24k + 2r + 56",
        "-24k - 2r - 57",
    ],
    &[
        "-8k + 4r - 6",
        "-16k - 2r - 28",
        "24k - 2r + 33",
        "-26k - 2r - 56",
        "26k + 2r + 57",
    ],
    &[
        "4k - 4r + 2",
        "10k + 2r + 19",
        "-14k + 2r - 20",
        "28k + 2r + 56",
        "-28k - 2r - 57",
    ],
    &[
        "-8k + 4r - 7",
        "-8k - 2r - 16",
        "16k - 2r + 22",
        "-30k - 2r - 56",
        "30k + 2r + 57",
    ],
    &[
        "-4k + 4r + 1",
        "-18k - 2r - 32",
        "22k - 2r + 30",
        "-32k - 2r - 56",
        "32k + 2r + 57",
    ],
    &[
        "8k - 4r + 4",
        "16k + 2r + 29",
        "-24k + 2r - 32",
        "34k + 2r + 56",
        "-34k - 2r - 57",
    ],
    &[
        "-4k + 4r",
        "-10k - 2r - 20",
        "14k - 2r + 19",
        "-36k - 2r - 56",
        "36k + 2r + 57",
    ],
    &[
        "8k - 4r + 5",
        "8k + 2r + 17",
        "-16k + 2r - 21",
        "38k + 2r + 56",
        "-38k - 2r - 57",
    ],
];

// 12x5 as printed
pub(crate) const FIVE_4_A: Printed = &[
    &["8k + 14", "8k + 15", "-16k - 28", "1", "-2"],
    &["-4k - 7", "-8k - 16", "12k + 22", "-24k - 39", "24k + 40"],
    &["-8k - 13", "-12k - 21", "-24k - 41", "24k + 42", "20k + 33"],
    &["-8k - 12", "-14k - 25", "22k + 36", "24k + 44", "-24k - 43"],
    &["-8k - 17", "16k + 27", "-24k - 45", "-8k - 11", "24k + 46"],
    &["14k + 24", "-10k - 19", "24k + 48", "-24k - 47", "-4k - 6"],
    &["-24k - 49", "24k + 50", "24k + 38", "-16k - 29", "-8k - 10"],
    &["-24k - 51", "-4k - 5", "24k + 52", "22k + 35", "-18k - 31"],
    &["-8k - 9", "24k + 54", "-24k - 53", "-8k - 18", "16k + 26"],
    &["14k + 23", "24k + 56", "-24k - 55", "-4k - 4", "-10k - 20"],
    &["24k + 37", "-24k - 57", "24k + 58", "-8k - 8", "-16k - 30"],
    &["24k + 60", "-24k - 59", "-18k - 32", "22k + 34", "-4k - 3"],
];

// 8x5 as printed
pub(crate) const FIVE_4_AR: Printed = &[
    &[
        "8k - 4r + 7",
        "8k + 2r + 19",
        "-16k + 2r - 25",
        "24k + 2r + 61",
        "-24k - 2r - 62",
    ],
    &[
        "-4k + 4r - 2",
        "-10k - 2r - 21",
        "14k - 2r + 22",
        "-26k - 2r - 61",
        "26k + 2r + 62",
    ],
    &[
        "8k - 4r + 6",
        "16k + 2r + 31",
        "-24k + 2r - 36",
        "28k + 2r + 61",
        "-28k - 2r - 62",
    ],
    &[
        "-4k + 4r - 1",
        "-18k - 2r - 33",
        "22k - 2r + 33",
        "-30k - 2r - 61",
        "30k + 2r + 62",
    ],
    &[
        "-8k + 4r - 5",
        "-8k - 2r - 20",
        "16k - 2r + 24",
        "-32k - 2r - 61",
        "32k + 2r + 62",
    ],
    &[
        "4k - 4r",
        "10k + 2r + 22",
        "-14k + 2r - 21",
        "34k + 2r + 61",
        "-34k - 2r - 62",
    ],
    &[
        "-8k + 4r - 4",
        "-16k - 2r - 32",
        "24k - 2r + 35",
        "-36k - 2r - 61",
        "36k + 2r + 62",
    ],
    &[
        "4k - 4r - 1",
        "18k + 2r + 34",
        "-22k + 2r - 32",
        "38k + 2r + 61",
        "-38k - 2r - 62",
    ],
];

// 13x5 as printed
pub(crate) const FIVE_5_A: Printed = &[
    &["1", "-2", "3", "40k + 65", "40k + 64"],
    &["-8k - 15", "-12k - 20", "20k + 34", "-24k - 40", "24k + 41"],
    &["-8k - 14", "-10k - 18", "18k + 31", "-24k - 42", "24k + 43"],
    &["-4k - 9", "-18k - 29", "-24k - 44", "24k + 45", "22k + 37"],
    &["-8k - 13", "-16k - 27", "24k + 47", "24k + 39", "-24k - 46"],
    &["-4k - 7", "-18k - 30", "24k + 49", "-24k - 48", "22k + 36"],
    &["20k + 33", "-24k - 50", "-8k - 12", "-12k - 22", "24k + 51"],
    &["16k + 25", "-24k - 52", "-8k - 16", "-8k - 10", "24k + 53"],
    &["24k + 55", "-4k - 6", "-12k - 21", "-24k - 54", "16k + 26"],
    &["24k + 57", "-24k - 56", "-16k - 28", "-8k - 11", "24k + 38"],
    &["-18k - 32", "22k + 35", "-24k - 58", "24k + 59", "-4k - 4"],
    &["-10k - 19", "24k + 61", "14k + 23", "-4k - 5", "-24k - 60"],
    &["-24k - 62", "24k + 63", "-8k - 8", "16k + 24", "-8k - 17"],
];

// 8x5 as printed
pub(crate) const FIVE_5_AR: Printed = &[
    &[
        "8k - 4r + 9",
        "16k + 2r + 29",
        "-24k + 2r - 37",
        "24k + 2r + 64",
        "-24k - 2r - 65",
    ],
    &[
        "-4k + 4r - 2",
        "-18k - 2r - 33",
        "22k - 2r + 34",
        "-26k - 2r - 64",
        "26k + 2r + 65",
    ],
    &[
        "4k - 4r + 3",
        "10k + 2r + 20",
        "-14k + 2r - 22",
        "28k + 2r + 64",
        "-28k - 2r - 65",
    ],
    &[
        "-8k + 4r - 6",
        "-8k - 2r - 18",
        "16k - 2r + 23",
        "-30k - 2r - 64",
        "30k + 2r + 65",
    ],
    &[
        "-8k + 4r - 7",
        "-16k - 2r - 30",
        "24k - 2r + 36",
        "-32k - 2r - 64",
        "32k + 2r + 65",
    ],
    &[
        "4k - 4r",
        "18k + 2r + 34",
        "-22k + 2r - 33",
        "34k + 2r + 64",
        "-34k - 2r - 65",
    ],
    &[
        "-4k + 4r - 1",
        "-10k - 2r - 21",
        "14k - 2r + 21",
        "-36k - 2r - 64",
        "36k + 2r + 65",
    ],
    &[
        "8k - 4r + 4",
        "8k + 2r + 19",
        "-16k + 2r - 22",
        "38k + 2r + 64",
        "-38k - 2r - 65",
    ],
];

// 14x5 as printed
pub(crate) const FIVE_6_A: Printed = &[
    &["1", "-2", "3", "40k + 70", "40k + 69"],
    &["-8k - 16", "-12k - 21", "20k + 36", "24k + 44", "-24k - 43"],
    &["-8k - 15", "-14k - 26", "22k + 40", "-24k - 45", "24k + 46"],
    &["-8k - 14", "-12k - 22", "20k + 35", "-24k - 47", "24k + 48"],
    &["-4k - 9", "-16k - 29", "20k + 37", "-24k - 49", "24k + 50"],
    &["-4k - 8", "-14k - 25", "18k + 32", "-24k - 51", "24k + 52"],
    &["-8k - 12", "-8k - 17", "16k + 28", "-24k - 53", "24k + 54"],
    &["-8k - 13", "-16k - 30", "24k + 56", "24k + 42", "-24k - 55"],
    &["-4k - 6", "-24k - 57", "-10k - 19", "24k + 58", "14k + 24"],
    &["-4k - 7", "24k + 60", "-24k - 59", "-18k - 33", "22k + 39"],
    &["-8k - 10", "16k + 27", "24k + 62", "-8k - 18", "-24k - 61"],
    &["-16k - 31", "-24k - 63", "-8k - 11", "24k + 64", "24k + 41"],
    &["24k + 66", "-4k - 4", "-24k - 65", "14k + 23", "-10k - 20"],
    &["-24k - 67", "24k + 68", "-18k - 34", "-4k - 5", "22k + 38"],
];

// 8x5 as printed
pub(crate) const FIVE_6_AR: Printed = &[
    &[
        "8k - 4r + 8",
        "8k + 2r + 19",
        "-16k + 2r - 26",
        "24k + 2r + 69",
        "-24k - 2r - 70",
    ],
    &[
        "-8k + 4r - 9",
        "-16k - 2r - 32",
        "24k - 2r + 40",
        "-26k - 2r - 69",
        "26k + 2r + 70",
    ],
    &[
        "4k - 4r + 2",
        "10k + 2r + 21",
        "-14k + 2r - 22",
        "28k + 2r + 69",
        "-28k - 2r - 70",
    ],
    &[
        "-4k + 4r - 3",
        "-18k - 2r - 35",
        "22k - 2r + 37",
        "-30k - 2r - 69",
        "30k + 2r + 70",
    ],
    &[
        "-8k + 4r - 6",
        "-8k - 2r - 20",
        "16k - 2r + 25",
        "-32k - 2r - 69",
        "32k + 2r + 70",
    ],
    &[
        "8k - 4r + 7",
        "16k + 2r + 33",
        "-24k + 2r - 39",
        "34k + 2r + 69",
        "-34k - 2r - 70",
    ],
    &[
        "-4k + 4r",
        "-10k - 2r - 22",
        "14k - 2r + 21",
        "-36k - 2r - 69",
        "36k + 2r + 70",
    ],
    &[
        "4k - 4r + 1",
        "18k + 2r + 36",
        "-22k + 2r - 36",
        "38k + 2r + 69",
        "-38k - 2r - 70",
    ],
];

// 7x5 as printed
pub(crate) const FIVE_7_A: Printed = &[
    &["8k + 9", "10k + 11", "-18k - 19", "1", "-2"],
    &["-4k - 5", "16k + 17", "-12k - 13", "-24k - 24", "24k + 25"],
    &["24k + 27", "-24k - 26", "-8k - 8", "20k + 21", "-12k - 14"],
    &["-4k - 3", "22k + 22", "24k + 29", "-18k - 20", "-24k - 28"],
    &["-24k - 31", "-24k - 23", "8k + 6", "16k + 18", "24k + 30"],
    &["-24k - 32", "24k + 33", "14k + 15", "-10k - 12", "-4k - 4"],
    &["24k + 35", "-24k - 34", "-8k - 10", "16k + 16", "-8k - 7"],
];

// 8x5 as printed
pub(crate) const FIVE_7_AR: Printed = &[
    &[
        "4k - 4r + 1",
        "18k + 2r + 21",
        "-22k + 2r - 21",
        "24k + 2r + 36",
        "-24k - 2r - 37",
    ],
    &[
        "-8k + 4r - 4",
        "-16k - 2r - 19",
        "24k - 2r + 22",
        "-26k - 2r - 36",
        "26k + 2r + 37",
    ],
    &[
        "4k - 4r + 2",
        "10k + 2r + 13",
        "-14k + 2r - 14",
        "28k + 2r + 36",
        "-28k - 2r - 37",
    ],
    &[
        "-8k + 4r - 5",
        "-8k - 2r - 11",
        "16k - 2r + 15",
        "-30k - 2r - 36",
        "30k + 2r + 37",
    ],
    &[
        "-4k + 4r + 1",
        "-18k - 2r - 22",
        "22k - 2r + 20",
        "-32k - 2r - 36",
        "32k + 2r + 37",
    ],
    &[
        "8k - 4r + 2",
        "16k + 2r + 20",
        "-24k + 2r - 21",
        "34k + 2r + 36",
        "-34k - 2r - 37",
    ],
    &[
        "-4k + 4r",
        "-10k - 2r - 14",
        "14k - 2r + 13",
        "-36k - 2r - 36",
        "36k + 2r + 37",
    ],
    &[
        "8k - 4r + 3",
        "8k + 2r + 12",
        "-16k + 2r - 14",
        "38k + 2r + 36",
        "-38k - 2r - 37",
    ],
];

// 9x6 as printed
pub(crate) const ODD_1MOD4_CORNER: Printed = &[
    &["x - 10", "-x + 9", "5", "x - 3", "x - 4", "4"],
    &["-x + 6", "x - 8", "-x + 16", "x - 19", "-x + 20", "x - 15"],
    &["6", "-x + 23", "-x + 7", "-1", "x - 21", "x - 14"],
    &["x", "x - 22", "x - 11", "-x + 18", "-x + 2", "-x + 13"],
    &["x - 1", "-2", "x - 17", "-x + 5", "3", "-x + 12"],
    &[
        "x - 47", "-x + 46", "x - 45", "-x + 44", "x - 37", "-x + 39",
    ],
    &[
        "-x + 41", "x - 40", "-x + 36", "x - 38", "-x + 43", "x - 42",
    ],
    &[
        "-x + 35", "x - 34", "-x + 33", "x - 32", "-x + 25", "x - 27",
    ],
    &[
        "x - 29", "-x + 28", "x - 24", "-x + 26", "x - 31", "-x + 30",
    ],
];

// 9x4 as printed
pub(crate) const ODD_1MOD4_FAMILY: Printed = &[
    &["4r + 7", "-4r - 8", "-4r - 9", "4r + 10"],
    &["6k - 2r", "-10k + 2r + 4", "-6k + 2r + 1", "10k - 2r - 5"],
    &[
        "-6k - 2r - 1",
        "10k + 2r - 3",
        "6k + 2r + 2",
        "-10k - 2r + 2",
    ],
    &[
        "12k + 24r - 5",
        "-12k - 24r + 3",
        "-12k - 24r + 1",
        "12k + 24r + 1",
    ],
    &[
        "-12k - 24r + 4",
        "12k + 24r - 2",
        "12k + 24r",
        "-12k - 24r - 2",
    ],
    &[
        "12k + 24r + 3",
        "-12k - 24r - 4",
        "-12k - 24r - 7",
        "12k + 24r + 8",
    ],
    &[
        "-12k - 24r - 5",
        "12k + 24r + 6",
        "12k + 24r + 9",
        "-12k - 24r - 10",
    ],
    &[
        "12k + 24r + 11",
        "-12k - 24r - 12",
        "12k + 24r + 18",
        "-12k - 24r - 17",
    ],
    &[
        "-12k - 24r - 14",
        "12k + 24r + 16",
        "-12k - 24r - 15",
        "12k + 24r + 13",
    ],
];

// 7x6 as printed
pub(crate) const ODD_3MOD4_CORNER: Printed = &[
    &["2", "x - 2", "x - 4", "3", "x - 5", "-x + 7"],
    &["x - 1", "-x + 8", "-x + 3", "x - 9", "-5", "4"],
    &["x", "-6", "1", "-x + 6", "-x + 10", "x - 11"],
    &[
        "x - 35", "-x + 34", "x - 33", "-x + 32", "x - 25", "-x + 27",
    ],
    &[
        "-x + 29", "x - 28", "-x + 24", "x - 26", "-x + 31", "x - 30",
    ],
    &[
        "-x + 23", "x - 22", "-x + 21", "x - 20", "-x + 13", "x - 15",
    ],
    &[
        "x - 17", "-x + 16", "x - 12", "-x + 14", "x - 19", "-x + 18",
    ],
];

// 7x4 as printed
pub(crate) const ODD_3MOD4_FAMILY: Printed = &[
    &["4r + 7", "-4r - 8", "-4r - 9", "4r + 10"],
    &["6k - 2r", "-10k + 2r + 4", "-6k + 2r + 1", "10k - 2r - 5"],
    &[
        "-6k - 2r - 1",
        "10k + 2r - 3",
        "6k + 2r + 2",
        "-10k - 2r + 2",
    ],
    &[
        "12k + 16r - 5",
        "-12k - 16r + 4",
        "12k + 16r + 2",
        "-12k - 16r - 1",
    ],
    &[
        "-12k - 16r + 3",
        "12k + 16r - 1",
        "-12k - 16r",
        "12k + 16r - 2",
    ],
    &[
        "12k + 16r + 3",
        "-12k - 16r - 4",
        "-12k - 16r - 5",
        "12k + 16r + 6",
    ],
    &[
        "-12k - 16r - 7",
        "12k + 16r + 8",
        "12k + 16r + 9",
        "-12k - 16r - 10",
    ],
];

// 9x9 as printed
pub(crate) const L11_CORNER: Printed = &[
    &[
        "x - 17", "x - 8", "-x + 3", "-x + 15", "7", "8", "-9", "-10", "11",
    ],
    &[
        "x - 7",
        "5",
        "x - 6",
        "-x + 10",
        "x - 1",
        "6y - 5",
        "-10y + 13",
        "-6y + 6",
        "10y - 14",
    ],
    &[
        "4",
        "x - 5",
        "-x",
        "x - 12",
        "-x + 13",
        "-6y + 4",
        "10y - 12",
        "6y - 3",
        "-10y + 11",
    ],
    &[
        "-x + 9",
        "3",
        "-x + 4",
        "x - 14",
        "x - 2",
        "12y - 16",
        "-12y + 15",
        "-12y + 12",
        "12y - 11",
    ],
    &[
        "-x + 11",
        "6",
        "-2",
        "1",
        "x - 16",
        "-12y + 14",
        "12y - 13",
        "12y - 10",
        "-12y + 9",
    ],
    &[
        "12",
        "6y - 7",
        "-6y + 2",
        "12y - 8",
        "-12y + 6",
        "12y + 8",
        "-12y - 15",
        "12y + 3",
        "-12y - 1",
    ],
    &[
        "-13",
        "-10y + 15",
        "10y - 10",
        "-12y + 7",
        "12y - 5",
        "-12y - 10",
        "12y + 14",
        "12y + 13",
        "-12y - 11",
    ],
    &[
        "-14", "-6y + 8", "6y - 1", "-12y + 4", "12y - 2", "12y + 9", "-12y", "-12y - 6", "12y + 2",
    ],
    &[
        "15",
        "10y - 16",
        "-10y + 9",
        "12y - 3",
        "-12y + 1",
        "-12y - 12",
        "12y + 7",
        "-12y - 5",
        "12y + 4",
    ],
];

// 9x4 as printed
pub(crate) const L11_BORDER: Printed = &[
    &["4r + 16", "-4r - 17", "-4r - 18", "4r + 19"],
    &[
        "6s + 6k - 2r - 9",
        "-10s - 10k + 2r + 17",
        "-6s - 6k + 2r + 10",
        "10s + 10k - 2r - 18",
    ],
    &[
        "-6s - 6k - 2r",
        "10s + 10k + 2r - 8",
        "6s + 6k + 2r + 1",
        "-10s - 10k - 2r + 7",
    ],
    &[
        "12s + 12k + 24r + 16",
        "-12s - 12k - 24r - 17",
        "-12s - 12k - 24r - 20",
        "12s + 12k + 24r + 21",
    ],
    &[
        "-12s - 12k - 24r - 18",
        "12s + 12k + 24r + 19",
        "12s + 12k + 24r + 22",
        "-12s - 12k - 24r - 23",
    ],
    &[
        "12s + 12k + 24r + 24",
        "-12s - 12k - 24r - 25",
        "-12s - 12k - 24r - 28",
        "12s + 12k + 24r + 29",
    ],
    &[
        "-12s - 12k - 24r - 26",
        "12s + 12k + 24r + 27",
        "12s + 12k + 24r + 30",
        "-12s - 12k - 24r - 31",
    ],
    &[
        "12s + 12k + 24r + 32",
        "-12s - 12k - 24r - 33",
        "12s + 12k + 24r + 39",
        "-12s - 12k - 24r - 38",
    ],
    &[
        "-12s - 12k - 24r - 35",
        "12s + 12k + 24r + 37",
        "-12s - 12k - 24r - 36",
        "12s + 12k + 24r + 34",
    ],
];

// 7x7 as printed
pub(crate) const L33_CORNER: Printed = &[
    &["x - 3", "x - 1", "5", "6", "-7", "-8", "9"],
    &[
        "x", "-x + 2", "-2", "6y + 5", "-10y - 5", "-6y - 4", "10y + 4",
    ],
    &["4", "-1", "-3", "-6y - 6", "10y + 6", "6y + 7", "-10y - 7"],
    &[
        "10",
        "6y + 3",
        "-6y - 8",
        "12y + 14",
        "-12y - 21",
        "12y + 9",
        "-12y - 7",
    ],
    &[
        "-11",
        "-10y - 3",
        "10y + 8",
        "-12y - 16",
        "12y + 20",
        "12y + 19",
        "-12y - 17",
    ],
    &[
        "-12",
        "-6y - 2",
        "6y + 9",
        "12y + 15",
        "-12y - 6",
        "-12y - 12",
        "12y + 8",
    ],
    &[
        "13",
        "10y + 2",
        "-10y - 9",
        "-12y - 18",
        "12y + 13",
        "-12y - 11",
        "12y + 10",
    ],
];

// 7x4 as printed
pub(crate) const L33_BORDER: Printed = &[
    &["4r + 14", "-4r - 15", "-4r - 16", "4r + 17"],
    &[
        "6s + 6k - 2r + 1",
        "-10s - 10k + 2r - 1",
        "-6s - 6k + 2r",
        "10s + 10k - 2r",
    ],
    &[
        "-6s - 6k - 2r - 10",
        "10s + 10k + 2r + 10",
        "6s + 6k + 2r + 11",
        "-10s - 10k - 2r - 11",
    ],
    &[
        "12s + 12k + 16r + 22",
        "-12s - 12k - 16r - 23",
        "12s + 12k + 16r + 29",
        "-12s - 12k - 16r - 28",
    ],
    &[
        "-12s - 12k - 16r - 25",
        "12s + 12k + 16r + 27",
        "-12s - 12k - 16r - 26",
        "12s + 12k + 16r + 24",
    ],
    &[
        "12s + 12k + 16r + 30",
        "-12s - 12k - 16r - 31",
        "-12s - 12k - 16r - 34",
        "12s + 12k + 16r + 35",
    ],
    &[
        "-12s - 12k - 16r - 32",
        "12s + 12k + 16r + 33",
        "12s + 12k + 16r + 36",
        "-12s - 12k - 16r - 37",
    ],
];

// 9x7 as printed
pub(crate) const L13_CORNER: Printed = &[
    &["x - 7", "3", "-x + 4", "8", "-9", "-10", "11"],
    &[
        "-x + 3", "x - 1", "-2", "6y + 1", "-10y + 3", "-6y", "10y - 4",
    ],
    &[
        "x - 5", "-x", "5", "-6y - 2", "10y - 2", "6y + 3", "-10y + 1",
    ],
    &[
        "-x + 2", "4", "x - 6", "12y - 4", "-12y + 3", "-12y", "12y + 1",
    ],
    &[
        "7", "-6", "-1", "-12y + 2", "12y - 1", "12y + 2", "-12y - 3",
    ],
    &[
        "12",
        "6y - 1",
        "-6y - 4",
        "12y + 17",
        "12y + 4",
        "-12y - 10",
        "-12y - 18",
    ],
    &[
        "-13",
        "-10y + 5",
        "10y",
        "-12y - 13",
        "12y + 19",
        "-12y - 12",
        "12y + 14",
    ],
    &[
        "-14", "-6y + 2", "6y + 5", "12y + 6", "-12y - 8", "12y + 16", "-12y - 7",
    ],
    &[
        "15",
        "10y - 6",
        "-10y - 1",
        "-12y - 15",
        "-12y - 9",
        "12y + 11",
        "12y + 5",
    ],
];

// 9x4 as printed
pub(crate) const L13_TOP: Printed = &[
    &["4r + 16", "-4r - 17", "-4r - 18", "4r + 19"],
    &[
        "6s + 6k - 2r - 3",
        "-10s - 10k + 2r + 7",
        "-6s - 6k + 2r + 4",
        "10s + 10k - 2r - 8",
    ],
    &[
        "-6s - 6k - 2r - 6",
        "10s + 10k + 2r + 2",
        "6s + 6k + 2r + 7",
        "-10s - 10k - 2r - 3",
    ],
    &[
        "12s + 12k + 24r + 20",
        "-12s - 12k - 24r - 21",
        "-12s - 12k - 24r - 24",
        "12s + 12k + 24r + 25",
    ],
    &[
        "-12s - 12k - 24r - 22",
        "12s + 12k + 24r + 23",
        "12s + 12k + 24r + 26",
        "-12s - 12k - 24r - 27",
    ],
    &[
        "12s + 12k + 24r + 28",
        "-12s - 12k - 24r - 29",
        "-12s - 12k - 24r - 32",
        "12s + 12k + 24r + 33",
    ],
    &[
        "-12s - 12k - 24r - 30",
        "12s + 12k + 24r + 31",
        "12s + 12k + 24r + 34",
        "-12s - 12k - 24r - 35",
    ],
    &[
        "12s + 12k + 24r + 36",
        "-12s - 12k - 24r - 37",
        "12s + 12k + 24r + 43",
        "-12s - 12k - 24r - 42",
    ],
    &[
        "-12s - 12k - 24r - 39",
        "12s + 12k + 24r + 41",
        "-12s - 12k - 24r - 40",
        "12s + 12k + 24r + 38",
    ],
];

// 7x4 as printed
pub(crate) const L13_LEFT: Printed = &[
    &[
        "4k + 4r + 12",
        "-4k - 4r - 13",
        "-4k - 4r - 14",
        "4k + 4r + 15",
    ],
    &[
        "6s + 4k - 2r - 1",
        "-10s - 8k + 2r + 5",
        "-6s - 4k + 2r + 2",
        "10s + 8k - 2r - 6",
    ],
    &[
        "-6s - 8k - 2r - 4",
        "10s + 12k + 2r",
        "6s + 8k + 2r + 5",
        "-10s - 12k - 2r - 1",
    ],
    &[
        "12s + 36k + 16r - 4",
        "-12s - 36k - 16r + 3",
        "12s + 36k + 16r + 3",
        "-12s - 36k - 16r - 2",
    ],
    &[
        "-12s - 36k - 16r + 1",
        "12s + 36k + 16r + 1",
        "-12s - 36k - 16r",
        "12s + 36k + 16r - 2",
    ],
    &[
        "12s + 36k + 16r + 4",
        "-12s - 36k - 16r - 5",
        "-12s - 36k - 16r - 6",
        "12s + 36k + 16r + 7",
    ],
    &[
        "-12s - 36k - 16r - 8",
        "12s + 36k + 16r + 9",
        "12s + 36k + 16r + 10",
        "-12s - 36k - 16r - 11",
    ],
];
