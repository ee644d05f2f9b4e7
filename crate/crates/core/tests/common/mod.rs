//! Published golden values, transcribed verbatim.
#![allow(dead_code)]

use wreathgen::BigCount;

pub fn big(s: &str) -> BigCount {
    s.parse().expect("decimal literal")
}

/// `w_nk` for `n = 0..=5`, `k = 0..=C(n,2)`.
pub const WNK: [&[u64]; 6] = [
    &[1],
    &[1],
    &[0, 1],
    &[2, 6, 6, 1],
    &[24, 108, 186, 152, 60, 12, 1],
    &[544, 3400, 9090, 13660, 12820, 7944, 3350, 960, 180, 20, 1],
];

/// `Σ_k w_nk` for `n = 0..=8`.
pub const SUM_WNK: [u64; 9] = [
    1,
    1,
    1,
    15,
    543,
    51969,
    13639329,
    10259025615,
    22709334063807,
];

/// `|E(T(X,P))|`, rows `m = 0..=5`, columns `n = 0..=5`.
pub const IDEMPOTENTS_TXP: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["1", "1", "3", "10", "41", "196"],
    ["1", "3", "21", "256", "4913", "134496"],
    ["1", "10", "189", "9028", "917705", "172425016"],
    ["1", "41", "2073", "401560", "233777121", "349447639616"],
    ["1", "196", "26553", "21212980", "74070192121", "977698734939376"],
];

/// `|S|`, rows `m = 0..=5`, columns `n = 0..=5`.
pub const SIZE_S: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["1", "1", "3", "22", "233", "3006"],
    ["1", "3", "41", "1942", "185361", "28567286"],
    ["1", "22", "1371", "423991", "364970873", "668031464841"],
    ["1", "233", "59473", "123528568", "999379708193", "22206894087218296"],
    [
        "1",
        "3006",
        "3077363",
        "43123619167",
        "3304719161323273",
        "895805227489703588401",
    ],
];

/// `rank(S)`, rows `m = 1..=10`, columns `n = 1..=10`.
pub const RANK_S: [[u64; 10]; 10] = [
    [0, 2, 3, 6, 10, 15, 21, 28, 36, 45],
    [2, 6, 12, 36, 140, 750, 5082, 40376, 362952, 3628890],
    [3, 12, 27, 90, 390, 2205, 15183, 121044, 1088748, 10886535],
    [6, 20, 48, 168, 760, 4380, 30324, 242032, 2177424, 21772980],
    [10, 30, 75, 270, 1250, 7275, 50505, 403340, 3628980, 36288225],
    [15, 42, 108, 396, 1860, 10890, 75726, 604968, 5443416, 54432270],
    [21, 56, 147, 546, 2590, 15225, 105987, 846916, 7620732, 76205115],
    [28, 72, 192, 720, 3440, 20280, 141288, 1129184, 10160928, 101606760],
    [36, 90, 243, 918, 4410, 26055, 181629, 1451772, 13064004, 130637205],
    [45, 110, 300, 1140, 5500, 32550, 227010, 1814680, 16329960, 163296450],
];

/// Number of minimal idempotent generating sets, rows `m = 1..=4`,
/// columns `n = 1..=4`. `None` marks the entry shown only in rounded form.
pub const MIN_GENSETS: [[Option<&str>; 4]; 4] = [
    [Some("1"), Some("1"), Some("2"), Some("24")],
    [Some("1"), Some("2"), Some("248"), Some("9663675264")],
    [
        Some("2"),
        Some("46"),
        Some("2094128"),
        Some("65281994259188583864812544"),
    ],
    [Some("24"), Some("3608"), Some("1099477716608"), None],
];

/// The rounded display of the `(4, 4)` entry.
pub const MIN_GENSETS_4_4_ROUNDED: &str = "7.398852038987696e48";
