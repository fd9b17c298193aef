//! Published distribution tables, transcribed in their printed factored
//! form `scale · x^shift · (inner)`.

use std::sync::OnceLock;

use crate::algebra::{rational, Poly};
use crate::family::AlternatingFamily;
use crate::pattern::QuadrantPattern;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RowIndex {
    /// Row `n` holds length `2n`.
    Even,
    /// Row `n` holds length `2n + 1`.
    OddPlus,
    /// Row `n` holds length `2n - 1`.
    OddMinus,
}

impl RowIndex {
    pub fn len(self, n: usize) -> usize {
        match self {
            RowIndex::Even => 2 * n,
            RowIndex::OddPlus => 2 * n + 1,
            RowIndex::OddMinus => 2 * n - 1,
        }
    }
}

#[derive(Copy, Clone, Debug)]
pub struct PrintedRow {
    pub n: usize,
    pub scale: i64,
    pub shift: usize,
    pub inner: &'static [i64],
}

impl PrintedRow {
    pub fn poly(&self) -> Poly {
        Poly::from_ints(self.inner).shift(self.shift).scale(&rational(self.scale))
    }
}

#[derive(Clone, Debug)]
pub struct PrintedTable {
    pub family: AlternatingFamily,
    pub pattern: QuadrantPattern,
    pub index: RowIndex,
    pub rows: &'static [PrintedRow],
}

impl PrintedTable {
    /// `(length, polynomial)` for every printed row.
    pub fn entries(&self) -> Vec<(usize, Poly)> {
        self.rows.iter().map(|r| (self.index.len(r.n), r.poly())).collect()
    }

    pub fn name(&self) -> String {
        format!("{}^({})", self.family, self.pattern)
    }
}

const fn row(n: usize, scale: i64, shift: usize, inner: &'static [i64]) -> PrintedRow {
    PrintedRow { n, scale, shift, inner }
}

const A_1E: &[PrintedRow] = &[
    row(0, 1, 0, &[1]),
    row(1, 1, 1, &[1]),
    row(2, 1, 1, &[2, 3]),
    row(3, 1, 1, &[16, 30, 15]),
    row(4, 1, 1, &[272, 588, 420, 105]),
    row(5, 1, 1, &[7936, 18960, 16380, 6300, 945]),
    row(6, 1, 1, &[353792, 911328, 893640, 429660, 103950, 10395]),
];

const B_1E: &[PrintedRow] = &[
    row(0, 1, 0, &[1]),
    row(1, 1, 1, &[2]),
    row(2, 1, 1, &[7, 9]),
    row(3, 1, 1, &[77, 135, 60]),
    row(4, 1, 1, &[1657, 3444, 2310, 525]),
    row(5, 1, 1, &[58457, 135945, 112770, 40950, 5670]),
    row(6, 1, 1, &[3056557, 7715664, 7347945, 3395700, 777625, 72765]),
];

const C_1E: &[PrintedRow] = &[
    row(0, 1, 0, &[1]),
    row(1, 1, 0, &[1]),
    row(2, 1, 1, &[2, 3]),
    row(3, 1, 1, &[7, 35, 19]),
    row(4, 1, 1, &[77, 581, 571, 156]),
    row(5, 1, 1, &[1657, 16428, 21066, 9738, 1587]),
    row(6, 1, 1, &[58457, 712579, 1079747, 652452, 180240, 19290]),
];

const D_1E: &[PrintedRow] = &[
    row(0, 1, 0, &[1]),
    row(1, 1, 1, &[1, 1]),
    row(2, 1, 1, &[2, 9, 5]),
    row(3, 1, 1, &[16, 110, 113, 33]),
    row(4, 1, 1, &[272, 2492, 3288, 1605, 279]),
    row(5, 1, 1, &[7936, 90384, 139756, 87456, 25365, 2895]),
    row(6, 1, 1, &[353792, 4803040, 8323816, 6110100, 2297778, 444045, 35685]),
];

const A_10: &[PrintedRow] = &[
    row(0, 1, 0, &[1]),
    row(1, 1, 1, &[1]),
    row(2, 1, 2, &[3, 2]),
    row(3, 1, 3, &[15, 30, 16]),
    row(4, 1, 4, &[105, 420, 588, 272]),
    row(5, 1, 5, &[945, 6300, 16380, 18960, 7936]),
    row(6, 1, 6, &[10395, 103950, 429660, 893640, 911328, 353792]),
];

const B_10: &[PrintedRow] = &[
    row(1, 1, 0, &[1]),
    row(2, 2, 1, &[1]),
    row(3, 8, 2, &[1, 1]),
    row(4, 16, 3, &[3, 8, 6]),
    row(5, 128, 4, &[3, 15, 27, 17]),
    row(6, 256, 5, &[15, 120, 381, 556, 310]),
    row(7, 1024, 6, &[45, 525, 2562, 6420, 8146, 4146]),
];

const C_10: &[PrintedRow] = &[
    row(0, 1, 0, &[1]),
    row(1, 1, 0, &[1]),
    row(2, 1, 1, &[2, 3]),
    row(3, 1, 2, &[8, 28, 25]),
    row(4, 1, 3, &[48, 296, 614, 427]),
    row(5, 1, 4, &[384, 3648, 13104, 20920, 12465]),
    row(6, 1, 5, &[3840, 51840, 282336, 769072, 1039946, 555731]),
];

const D_10: &[PrintedRow] = &[
    row(1, 1, 0, &[1]),
    row(2, 1, 1, &[1, 1]),
    row(3, 1, 2, &[3, 8, 5]),
    row(4, 1, 3, &[15, 75, 121, 61]),
    row(5, 1, 4, &[105, 840, 2478, 3128, 1385]),
    row(6, 1, 5, &[945, 11025, 51030, 115350, 124921, 50521]),
    row(7, 1, 6, &[10395, 166320, 1105335, 3859680, 7365633, 7158128, 2702765]),
];

fn one_zero_zero_zero() -> QuadrantPattern {
    "1,0,0,0".parse().expect("valid pattern")
}

/// The four `MMP(1,0,∅,0)` tables, in family order A, B, C, D.
pub fn empty_quadrant_tables() -> &'static [PrintedTable] {
    static TABLES: OnceLock<Vec<PrintedTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        use AlternatingFamily::*;
        let p = QuadrantPattern::one_zero_empty_zero();
        vec![
            PrintedTable { family: A, pattern: p, index: RowIndex::Even, rows: A_1E },
            PrintedTable { family: B, pattern: p, index: RowIndex::OddPlus, rows: B_1E },
            PrintedTable { family: C, pattern: p, index: RowIndex::Even, rows: C_1E },
            PrintedTable { family: D, pattern: p, index: RowIndex::OddPlus, rows: D_1E },
        ]
    })
}

/// The four `MMP(1,0,0,0)` tables, in family order A, B, C, D.
pub fn one_zero_tables() -> &'static [PrintedTable] {
    static TABLES: OnceLock<Vec<PrintedTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        use AlternatingFamily::*;
        let p = one_zero_zero_zero();
        vec![
            PrintedTable { family: A, pattern: p, index: RowIndex::Even, rows: A_10 },
            PrintedTable { family: B, pattern: p, index: RowIndex::OddMinus, rows: B_10 },
            PrintedTable { family: C, pattern: p, index: RowIndex::Even, rows: C_10 },
            PrintedTable { family: D, pattern: p, index: RowIndex::OddMinus, rows: D_10 },
        ]
    })
}
