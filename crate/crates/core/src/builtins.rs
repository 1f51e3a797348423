//! Named builtin matrices with documented default orientations, so the
//! standard small cases are one-liners at the CLI.
//!
//! The default orientation directs every Coxeter edge from the larger to the
//! smaller vertex index; for a path type that means `n -> ... -> 2 -> 1`,
//! with the highest index as the source.

use crate::cartan::CartanMatrix;
use crate::dynkin::catalog_cartan;
use crate::quiver::ValuedQuiver;

/// Builtin names accepted by [`builtin`], case-insensitive.
pub const BUILTIN_NAMES: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "E6", "E7", "E8", "F4", "G2",
    "AFF2", "AFF3",
];

/// Resolves a builtin name to its Cartan matrix and default orientation.
///
/// `AFF2` is the rank-2 affine matrix `[[2,-2],[-2,2]]`; `AFF3` is the rank-3
/// affine triangle (every edge single-valued). Both are infinite type and
/// exist so unbounded behavior can be exercised from the command line.
pub fn builtin(name: &str) -> Option<(CartanMatrix, ValuedQuiver)> {
    let key = name.trim().to_ascii_uppercase();
    let cartan = match key.as_str() {
        "AFF2" | "AFFINE2" => {
            CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).expect("valid builtin")
        }
        "AFF3" | "AFFINE3" => CartanMatrix::new(vec![
            vec![2, -1, -1],
            vec![-1, 2, -1],
            vec![-1, -1, 2],
        ])
        .expect("valid builtin"),
        _ => catalog_cartan(&key)?,
    };
    let quiver = ValuedQuiver::default_orientation(&cartan);
    Some((cartan, quiver))
}
