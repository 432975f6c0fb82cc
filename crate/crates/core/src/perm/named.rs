//! The four automorphisms of K3,3 that generate every group in the M3
//! classification. Sides are {1,2,3} and {4,5,6}.

use super::Permutation;

fn k33_perm(text: &str) -> Permutation {
    Permutation::parse(text, 6).expect("valid K3,3 automorphism")
}

/// `(1 2 3)(4 5 6)`: rotates both sides the same way.
pub fn twin_rotation() -> Permutation {
    k33_perm("(1 2 3)(4 5 6)")
}

/// `(1 2 3)(4 6 5)`: rotates the sides in opposite directions.
pub fn counter_rotation() -> Permutation {
    k33_perm("(1 2 3)(4 6 5)")
}

/// `(1 4)(2 5)(3 6)`: exchanges the two sides.
pub fn side_swap() -> Permutation {
    k33_perm("(1 4)(2 5)(3 6)")
}

/// `(1 2)(4 5)`: swaps one pair on each side, fixing the rung 3-6.
pub fn paired_flip() -> Permutation {
    k33_perm("(1 2)(4 5)")
}
