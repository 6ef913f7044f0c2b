//! Basis blades of Cl(3,0) and the geometric-product sign table.
//!
//! Blades are stored in the fixed order
//! `1, e1, e2, e3, e12, e23, e31, e123`. Internally each blade is a bitmask
//! over the generators (`e1 = 0b001`, `e2 = 0b010`, `e3 = 0b100`) together
//! with the sign relating the stored blade to the ascending-order product of
//! its generators; only `e31 = -e1 e3` carries a minus sign.

/// Number of basis blades.
pub const BLADE_COUNT: usize = 8;

pub const SCALAR: usize = 0;
pub const E1: usize = 1;
pub const E2: usize = 2;
pub const E3: usize = 3;
pub const E12: usize = 4;
pub const E23: usize = 5;
pub const E31: usize = 6;
pub const E123: usize = 7;

/// Blade labels in storage order, as used in diagnostic rendering.
pub const BLADE_NAMES: [&str; BLADE_COUNT] = ["1", "e1", "e2", "e3", "e12", "e23", "e31", "e123"];

/// Grade of each stored blade.
pub const BLADE_GRADES: [u8; BLADE_COUNT] = [0, 1, 1, 1, 2, 2, 2, 3];

/// Storage slot of the dual bivector `I e_j` for `j = x, y, z`.
///
/// `I e1 = e23`, `I e2 = e31`, `I e3 = e12`.
pub const DUAL_SLOTS: [usize; 3] = [E23, E31, E12];

const BLADE_MASKS: [u8; BLADE_COUNT] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b110, 0b101, 0b111];
const BLADE_SIGNS: [i8; BLADE_COUNT] = [1, 1, 1, 1, 1, 1, -1, 1];

/// One entry of the product table: `blade[i] * blade[j] = sign * blade[target]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductEntry {
    pub sign: i8,
    pub target: u8,
}

/// `GP_TABLE[i][j]` is the product of stored blades `i` and `j`.
pub const GP_TABLE: [[ProductEntry; BLADE_COUNT]; BLADE_COUNT] = build_table();

const fn slot_of_mask(mask: u8) -> usize {
    let mut i = 0;
    while i < BLADE_COUNT {
        if BLADE_MASKS[i] == mask {
            return i;
        }
        i += 1;
    }
    panic!("mask outside Cl(3,0)");
}

/// Sign picked up by sorting the generators of `a * b` into ascending order.
const fn reorder_sign(a: u8, b: u8) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

const fn build_table() -> [[ProductEntry; BLADE_COUNT]; BLADE_COUNT] {
    let mut table = [[ProductEntry { sign: 0, target: 0 }; BLADE_COUNT]; BLADE_COUNT];
    let mut i = 0;
    while i < BLADE_COUNT {
        let mut j = 0;
        while j < BLADE_COUNT {
            let mask = BLADE_MASKS[i] ^ BLADE_MASKS[j];
            let target = slot_of_mask(mask);
            // Euclidean signature: every repeated generator squares to +1.
            let sign =
                BLADE_SIGNS[i] * BLADE_SIGNS[j] * reorder_sign(BLADE_MASKS[i], BLADE_MASKS[j]) * BLADE_SIGNS[target];
            table[i][j] = ProductEntry { sign, target: target as u8 };
            j += 1;
        }
        i += 1;
    }
    table
}
