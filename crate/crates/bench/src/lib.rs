//! Shared input builders for the criterion benchmarks.

use cluster_core::{CartanMatrix, ExchangeMatrix, LaurentPoly, ValuedQuiver};

/// A dense-ish rank-3 Laurent polynomial with `width^3` terms spread over
/// negative and positive exponents.
pub fn grid_poly(width: i64) -> LaurentPoly {
    let mut terms = Vec::new();
    let mut coeff = 1i64;
    for x in -width..width {
        for y in -width..width {
            for z in -width..width {
                coeff = coeff.wrapping_mul(31).wrapping_add(7) % 1000 + 1;
                terms.push((vec![x, y, z], coeff));
            }
        }
    }
    LaurentPoly::from_terms(3, terms)
}

pub fn path_exchange(n: usize) -> ExchangeMatrix {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for i in 0..n.saturating_sub(1) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    let cartan = CartanMatrix::new(a).expect("path Cartan");
    ValuedQuiver::default_orientation(&cartan).exchange_matrix()
}
