//! Dynkin diagram recognition by exact graph matching against the finite
//! catalogs A, B, C, D, E6-E8, F4, G2.
//!
//! Definiteness decides *whether* a Cartan matrix is of finite type (see
//! [`CartanMatrix::definiteness`]); this module only produces the labels, one
//! per connected component, by permutation matching of principal submatrices.

use std::fmt;

use itertools::Itertools;

use crate::cartan::CartanMatrix;

/// Decomposition of a finite-type Cartan matrix into labeled components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinType {
    components: Vec<DynkinComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinComponent {
    /// Label such as `"A3"` or `"G2"`.
    pub label: String,
    /// Vertices of the component, 0-based, ascending.
    pub vertices: Vec<usize>,
}

impl DynkinType {
    pub fn components(&self) -> &[DynkinComponent] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.components.iter().map(|c| c.label.as_str()).collect();
        write!(f, "{}", labels.join(" x "))
    }
}

pub(crate) fn classify(a: &CartanMatrix) -> Option<DynkinType> {
    let mut components = Vec::new();
    for comp in a.components() {
        let sub = a.principal_submatrix(&comp);
        let label = component_label(&sub)?;
        components.push(DynkinComponent {
            label,
            vertices: comp,
        });
    }
    components.sort_by(|x, y| x.label.cmp(&y.label).then(x.vertices.cmp(&y.vertices)));
    Some(DynkinType { components })
}

fn component_label(sub: &CartanMatrix) -> Option<String> {
    let n = sub.n();
    let mut candidates: Vec<String> = vec![format!("A{n}")];
    if n >= 2 {
        candidates.push(format!("B{n}"));
    }
    if n >= 3 {
        candidates.push(format!("C{n}"));
    }
    if n >= 4 {
        candidates.push(format!("D{n}"));
    }
    if (6..=8).contains(&n) {
        candidates.push(format!("E{n}"));
    }
    if n == 4 {
        candidates.push("F4".to_string());
    }
    if n == 2 {
        candidates.push("G2".to_string());
    }
    candidates.into_iter().find(|label| {
        catalog_cartan(label)
            .map(|cat| isomorphic(sub, &cat))
            .unwrap_or(false)
    })
}

/// Builds the standard Cartan matrix for a label like `"B3"`; `None` for
/// labels outside the finite catalog.
pub fn catalog_cartan(label: &str) -> Option<CartanMatrix> {
    let label = label.trim().to_ascii_uppercase();
    let (family, rank_str) = label.split_at(1);
    let n: usize = rank_str.parse().ok()?;
    if n == 0 {
        return None;
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        "A" => {
            for i in 0..n.saturating_sub(1) {
                edge(&mut a, i, i + 1, -1, -1);
            }
        }
        "B" if n >= 2 => {
            for i in 0..n - 1 {
                edge(&mut a, i, i + 1, -1, -1);
            }
            edge(&mut a, n - 2, n - 1, -1, -2);
        }
        "C" if n >= 3 => {
            for i in 0..n - 1 {
                edge(&mut a, i, i + 1, -1, -1);
            }
            edge(&mut a, n - 2, n - 1, -2, -1);
        }
        "D" if n >= 4 => {
            for i in 0..n - 2 {
                edge(&mut a, i, i + 1, -1, -1);
            }
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            edge(&mut a, n - 3, n - 1, -1, -1);
        }
        "E" if (6..=8).contains(&n) => {
            for i in 0..n - 2 {
                edge(&mut a, i, i + 1, -1, -1);
            }
            edge(&mut a, 2, n - 1, -1, -1);
        }
        "F" if n == 4 => {
            edge(&mut a, 0, 1, -1, -1);
            edge(&mut a, 1, 2, -2, -1);
            edge(&mut a, 2, 3, -1, -1);
        }
        "G" if n == 2 => {
            edge(&mut a, 0, 1, -1, -3);
        }
        _ => return None,
    }
    Some(CartanMatrix::new(a).expect("catalog matrices are valid"))
}

/// Simultaneous-permutation equality of two Cartan matrices.
fn isomorphic(x: &CartanMatrix, y: &CartanMatrix) -> bool {
    let n = x.n();
    if n != y.n() {
        return false;
    }
    let mut xdeg: Vec<usize> = (0..n).map(|i| x.neighbors(i).len()).collect();
    let mut ydeg: Vec<usize> = (0..n).map(|i| y.neighbors(i).len()).collect();
    xdeg.sort_unstable();
    ydeg.sort_unstable();
    if xdeg != ydeg {
        return false;
    }
    (0..n).permutations(n).any(|perm| {
        (0..n).all(|i| (0..n).all(|j| x.entry(i, j) == y.entry(perm[i], perm[j])))
    })
}

/// Labels of the irreducible finite types of rank at most `max_rank`, used to
/// drive the verification suites.
pub fn irreducible_finite_labels(max_rank: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(format!("A{n}"));
        if n >= 2 {
            out.push(format!("B{n}"));
        }
        if n >= 3 {
            out.push(format!("C{n}"));
        }
        if n >= 4 {
            out.push(format!("D{n}"));
        }
        if (6..=8).contains(&n) {
            out.push(format!("E{n}"));
        }
        if n == 4 {
            out.push("F4".to_string());
        }
        if n == 2 {
            out.push("G2".to_string());
        }
    }
    out
}
