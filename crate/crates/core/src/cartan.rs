//! Generalized Cartan matrices, skew-symmetrizable exchange matrices, and the
//! exact positive-definiteness test that recognizes finite type.
//!
//! A matched pair is an exchange matrix `B` together with its Cartan
//! counterpart `A(B)`: `a_ii = 2`, `a_ij = -|b_ij|` off the diagonal. All
//! definiteness checks run in exact integer/rational arithmetic; nothing here
//! is floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::dynkin::{self, DynkinType};
use crate::error::Error;

/// Positive integer diagonal `d` with `d_i a_ij = d_j a_ji`, scaled so the
/// entries have collective gcd 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetrizer {
    d: Vec<i64>,
}

impl Symmetrizer {
    pub fn entries(&self) -> &[i64] {
        &self.d
    }
}

/// A symmetrizable generalized Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    n: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

/// Sign of the symmetrized quadratic form, decided by exact minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

impl CartanMatrix {
    pub fn new(a: Vec<Vec<i64>>) -> Result<Self, Error> {
        let n = a.len();
        if a.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::NotCartan(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    return Err(Error::NotCartan(format!(
                        "off-diagonal entry ({i},{j}) is positive"
                    )));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::NotCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) do not vanish together"
                    )));
                }
            }
        }
        let d = symmetrizer_diagonal(&a)?;
        Ok(CartanMatrix { n, a, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn symmetrizer(&self) -> Symmetrizer {
        Symmetrizer { d: self.d.clone() }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.a[i][j] == self.a[j][i]))
    }

    /// Undirected edges of the Coxeter graph, as pairs `i < j`.
    pub fn coxeter_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.a[i][j] != 0 {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| j != i && self.a[i][j] != 0).collect()
    }

    /// Connected components of the Coxeter graph, each sorted ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Principal submatrix on the given (distinct) vertices.
    pub fn principal_submatrix(&self, vertices: &[usize]) -> CartanMatrix {
        let a = vertices
            .iter()
            .map(|&i| vertices.iter().map(|&j| self.a[i][j]).collect())
            .collect();
        CartanMatrix::new(a).expect("principal submatrix of a valid Cartan matrix")
    }

    /// The symmetric matrix `D * A` with integer entries.
    fn symmetrized(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| BigInt::from(self.d[i]) * BigInt::from(self.a[i][j]))
                    .collect()
            })
            .collect()
    }

    pub fn definiteness(&self) -> Definiteness {
        let s = self.symmetrized();
        if leading_minors_positive(&s) {
            return Definiteness::PositiveDefinite;
        }
        if all_principal_minors_nonnegative(&s) {
            Definiteness::PositiveSemidefinite
        } else {
            Definiteness::Indefinite
        }
    }

    /// Finite type means the symmetrized form is positive definite.
    pub fn is_finite_type(&self) -> bool {
        self.definiteness() == Definiteness::PositiveDefinite
    }

    /// Dynkin type decomposition, available exactly when finite.
    pub fn dynkin_type(&self) -> Option<DynkinType> {
        if !self.is_finite_type() {
            return None;
        }
        dynkin::classify(self)
    }
}

/// Solves `d_i a_ij = d_j a_ji` by propagating ratios along a spanning forest
/// of the Coxeter graph and verifying every non-tree edge; scaled to minimal
/// positive integers per component.
fn symmetrizer_diagonal(a: &[Vec<i64>]) -> Result<Vec<i64>, Error> {
    let n = a.len();
    let mut ratio: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if ratio[start].is_some() {
            continue;
        }
        let mut comp = vec![start];
        ratio[start] = Some(Ratio::one());
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if w == v || a[v][w] == 0 {
                    continue;
                }
                // d_w = d_v * a_vw / a_wv
                let propagated = ratio[v].unwrap() * Ratio::new(a[v][w], a[w][v]);
                match ratio[w] {
                    None => {
                        ratio[w] = Some(propagated);
                        comp.push(w);
                        stack.push(w);
                    }
                    Some(existing) => {
                        if existing != propagated {
                            return Err(Error::NotSymmetrizable);
                        }
                    }
                }
            }
        }
        // Scale this component to minimal positive integers.
        let lcm_den = comp
            .iter()
            .map(|&v| *ratio[v].unwrap().denom())
            .fold(1i64, |acc, x| acc.lcm(&x));
        let scaled: Vec<i64> = comp
            .iter()
            .map(|&v| {
                let r = ratio[v].unwrap() * Ratio::from_integer(lcm_den);
                debug_assert!(r.is_integer());
                r.to_integer()
            })
            .collect();
        let g = scaled.iter().fold(0i64, |acc, x| acc.gcd(x));
        for (&v, &s) in comp.iter().zip(&scaled) {
            ratio[v] = Some(Ratio::from_integer(s / g));
        }
    }
    let d: Vec<i64> = ratio
        .into_iter()
        .map(|r| r.unwrap().to_integer())
        .collect();
    if d.iter().any(|&x| x <= 0) {
        return Err(Error::NotSymmetrizable);
    }
    for i in 0..n {
        for j in 0..n {
            if d[i] * a[i][j] != d[j] * a[j][i] {
                return Err(Error::NotSymmetrizable);
            }
        }
    }
    Ok(d)
}

/// Bareiss fraction-free determinant.
fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

fn submatrix(m: &[Vec<BigInt>], rows: &[usize]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|&i| rows.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

fn leading_minors_positive(m: &[Vec<BigInt>]) -> bool {
    (1..=m.len()).all(|k| {
        let rows: Vec<usize> = (0..k).collect();
        determinant(&submatrix(m, &rows)).is_positive()
    })
}

fn all_principal_minors_nonnegative(m: &[Vec<BigInt>]) -> bool {
    let n = m.len();
    assert!(n <= 20, "semidefiniteness test limited to rank 20");
    for mask in 1u32..(1 << n) {
        let rows: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if determinant(&submatrix(m, &rows)).is_negative() {
            return false;
        }
    }
    true
}

/// A skew-symmetrizable exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    n: usize,
    b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(b: Vec<Vec<i64>>) -> Result<Self, Error> {
        let n = b.len();
        if b.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            if b[i][i] != 0 {
                return Err(Error::NotSkewSymmetrizable(format!(
                    "diagonal entry ({i},{i}) is nonzero"
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if (b[i][j] == 0) != (b[j][i] == 0) {
                    return Err(Error::NotSkewSymmetrizable(format!(
                        "entries ({i},{j}) and ({j},{i}) do not vanish together"
                    )));
                }
                if b[i][j] > 0 && b[j][i] > 0 {
                    return Err(Error::NotSkewSymmetrizable(format!(
                        "entries ({i},{j}) and ({j},{i}) are both positive"
                    )));
                }
            }
        }
        let counterpart: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 2 } else { -b[i][j].abs() })
                    .collect()
            })
            .collect();
        if symmetrizer_diagonal(&counterpart).is_err() {
            return Err(Error::NotSkewSymmetrizable(
                "Cartan counterpart is not symmetrizable".to_string(),
            ));
        }
        Ok(ExchangeMatrix { n, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// `a_ii = 2`, `a_ij = -|b_ij|` off the diagonal.
    pub fn cartan_counterpart(&self) -> CartanMatrix {
        let a = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if i == j { 2 } else { -self.b[i][j].abs() })
                    .collect()
            })
            .collect();
        CartanMatrix::new(a).expect("counterpart of a valid exchange matrix is symmetrizable")
    }

    /// Matrix mutation in direction `k`: entries in row or column `k` flip
    /// sign, every other entry picks up `(|b_ik| b_kj + b_ik |b_kj|) / 2`,
    /// which is always an even sum.
    pub fn mutate(&self, k: usize) -> ExchangeMatrix {
        assert!(k < self.n, "mutation index out of range");
        let b = &self.b;
        let mut out = vec![vec![0i64; self.n]; self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                out[x][y] = if x == k || y == k {
                    -b[x][y]
                } else {
                    let corr = b[x][k].abs() * b[k][y] + b[x][k] * b[k][y].abs();
                    assert!(corr % 2 == 0, "mutation correction term must be even");
                    b[x][y] + corr / 2
                };
            }
        }
        ExchangeMatrix { n: self.n, b: out }
    }

    pub fn negated(&self) -> ExchangeMatrix {
        ExchangeMatrix {
            n: self.n,
            b: self.b.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3_exchange() -> ExchangeMatrix {
        ExchangeMatrix::new(vec![vec![0, -1, 0], vec![1, 0, -1], vec![0, 1, 0]]).unwrap()
    }

    #[test]
    fn counterpart_of_path_exchange() {
        let a = a3_exchange().cartan_counterpart();
        assert_eq!(
            a.rows(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
    }

    #[test]
    fn counterpart_of_zero_matrix() {
        let b = ExchangeMatrix::new(vec![vec![0; 3]; 3]).unwrap();
        let a = b.cartan_counterpart();
        assert_eq!(a.rows(), &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]);
    }

    #[test]
    fn counterpart_of_b2_exchange() {
        let b = ExchangeMatrix::new(vec![vec![0, 1], vec![-2, 0]]).unwrap();
        let a = b.cartan_counterpart();
        assert_eq!(a.rows(), &[vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn mutation_of_path_matrix_at_first_vertex() {
        let b = a3_exchange().mutate(0);
        assert_eq!(b.rows(), &[vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]);
    }

    #[test]
    fn matrix_mutation_is_involutive() {
        let b = a3_exchange();
        for k in 0..3 {
            assert_eq!(b.mutate(k).mutate(k), b);
        }
    }

    #[test]
    fn symmetrizer_of_symmetric_matrix_is_ones() {
        let a = CartanMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(a.symmetrizer().entries(), &[1, 1, 1]);
    }

    #[test]
    fn symmetrizer_of_b2() {
        let a = CartanMatrix::new(vec![vec![2, -1], vec![-2, 2]]).unwrap();
        assert_eq!(a.symmetrizer().entries(), &[2, 1]);
    }

    #[test]
    fn finite_type_recognition() {
        let a3 = CartanMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert!(a3.is_finite_type());
        assert_eq!(a3.dynkin_type().unwrap().to_string(), "A3");

        let b2 = CartanMatrix::new(vec![vec![2, -1], vec![-2, 2]]).unwrap();
        assert!(b2.is_finite_type());
        assert_eq!(b2.dynkin_type().unwrap().to_string(), "B2");

        let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(!affine.is_finite_type());
        assert_eq!(affine.definiteness(), Definiteness::PositiveSemidefinite);
    }

    #[test]
    fn indefinite_matrix_detected() {
        let wild = CartanMatrix::new(vec![vec![2, -3], vec![-3, 2]]).unwrap();
        assert_eq!(wild.definiteness(), Definiteness::Indefinite);
    }

    #[test]
    fn rejects_inconsistent_cycle() {
        // Triangle whose edge ratios multiply to something other than 1.
        let a = CartanMatrix::new(vec![
            vec![2, -1, -1],
            vec![-2, 2, -1],
            vec![-1, -1, 2],
        ]);
        assert_eq!(a, Err(Error::NotSymmetrizable));
    }

    #[test]
    fn rejects_double_positive_pair() {
        let b = ExchangeMatrix::new(vec![vec![0, 1], vec![1, 0]]);
        assert!(matches!(b, Err(Error::NotSkewSymmetrizable(_))));
    }

    #[test]
    fn rejects_positive_off_diagonal_cartan() {
        let a = CartanMatrix::new(vec![vec![2, 1], vec![-1, 2]]);
        assert!(matches!(a, Err(Error::NotCartan(_))));
    }
}
