//! Valued quivers: a Cartan matrix's Coxeter graph together with an
//! orientation, plus the orientation/exchange-matrix dictionary, sinks,
//! sources, reflections and admissible sink sequences.

use std::collections::BTreeSet;

use crate::cartan::{CartanMatrix, ExchangeMatrix};
use crate::error::Error;

/// An orientation of the Coxeter graph of a Cartan matrix. Each undirected
/// edge `i - j` (where `a_ij != 0`) carries exactly one direction; the edge
/// valuation `(|a_ij|, |a_ji|)` is derived from the Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedQuiver {
    cartan: CartanMatrix,
    arrows: BTreeSet<(usize, usize)>,
}

impl ValuedQuiver {
    pub fn new(
        cartan: CartanMatrix,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let arrows: BTreeSet<(usize, usize)> = arrows.into_iter().collect();
        let edges = cartan.coxeter_edges();
        for &(s, t) in &arrows {
            if s >= cartan.n() || t >= cartan.n() {
                return Err(Error::InvalidOrientation(format!(
                    "arrow ({},{}) out of range",
                    s + 1,
                    t + 1
                )));
            }
            if s == t || cartan.entry(s, t) == 0 {
                return Err(Error::InvalidOrientation(format!(
                    "no Coxeter edge between {} and {}",
                    s + 1,
                    t + 1
                )));
            }
            if arrows.contains(&(t, s)) {
                return Err(Error::InvalidOrientation(format!(
                    "edge {}-{} carries both directions",
                    s + 1,
                    t + 1
                )));
            }
        }
        for &(i, j) in &edges {
            if !arrows.contains(&(i, j)) && !arrows.contains(&(j, i)) {
                return Err(Error::InvalidOrientation(format!(
                    "edge {}-{} is not oriented",
                    i + 1,
                    j + 1
                )));
            }
        }
        if arrows.len() != edges.len() {
            return Err(Error::InvalidOrientation(
                "orientation does not match the Coxeter graph".to_string(),
            ));
        }
        Ok(ValuedQuiver { cartan, arrows })
    }

    /// Arrow `i -> j` wherever `b_ij > 0`.
    pub fn from_exchange(b: &ExchangeMatrix) -> Self {
        let cartan = b.cartan_counterpart();
        let mut arrows = BTreeSet::new();
        for i in 0..b.n() {
            for j in 0..b.n() {
                if b.entry(i, j) > 0 {
                    arrows.insert((i, j));
                }
            }
        }
        ValuedQuiver { cartan, arrows }
    }

    /// Every edge directed from the larger towards the smaller index. This is
    /// the default orientation for the named builtins, so a path type becomes
    /// `n -> n-1 -> ... -> 1`.
    pub fn default_orientation(cartan: &CartanMatrix) -> Self {
        let arrows = cartan
            .coxeter_edges()
            .into_iter()
            .map(|(i, j)| (j, i))
            .collect();
        ValuedQuiver {
            cartan: cartan.clone(),
            arrows,
        }
    }

    /// The unique matrix with `b_ij = |a_ij|` on arrows `i -> j` and
    /// `b_ij = a_ij` on arrows `j -> i`; inverse of [`Self::from_exchange`].
    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        let n = self.cartan.n();
        let mut b = vec![vec![0i64; n]; n];
        for &(s, t) in &self.arrows {
            b[s][t] = self.cartan.entry(s, t).abs();
            b[t][s] = self.cartan.entry(t, s);
        }
        ExchangeMatrix::new(b).expect("orientation matrix is skew-symmetrizable")
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn n(&self) -> usize {
        self.cartan.n()
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().copied()
    }

    /// Valuation `(|a_ij|, |a_ji|)` of the edge between `i` and `j`.
    pub fn valuation(&self, i: usize, j: usize) -> (u64, u64) {
        (
            self.cartan.entry(i, j).unsigned_abs(),
            self.cartan.entry(j, i).unsigned_abs(),
        )
    }

    /// A sink has no arrows starting at it.
    pub fn is_sink(&self, k: usize) -> bool {
        !self.arrows.iter().any(|&(s, _)| s == k)
    }

    /// A source has no arrows ending at it.
    pub fn is_source(&self, k: usize) -> bool {
        !self.arrows.iter().any(|&(_, t)| t == k)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n()).filter(|&k| self.is_sink(k)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n()).filter(|&k| self.is_source(k)).collect()
    }

    /// Reverses every arrow incident to `k`.
    pub fn reflect(&self, k: usize) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == k || t == k { (t, s) } else { (s, t) })
            .collect();
        ValuedQuiver {
            cartan: self.cartan.clone(),
            arrows,
        }
    }

    pub fn has_oriented_cycle(&self) -> bool {
        self.admissible_sink_sequence().is_none()
    }

    /// An ordering `k_1, ..., k_n` of all vertices such that each `k_t` is a
    /// sink after reflecting at `k_1, ..., k_{t-1}`; exists iff the
    /// orientation is acyclic. Ties always break towards the smallest index,
    /// and reflecting along the full sequence returns the start orientation.
    pub fn admissible_sink_sequence(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut current = self.clone();
        let mut used = vec![false; n];
        let mut seq = Vec::with_capacity(n);
        for _ in 0..n {
            let k = (0..n).find(|&v| !used[v] && current.is_sink(v))?;
            used[k] = true;
            seq.push(k);
            current = current.reflect(k);
        }
        assert_eq!(
            current.arrows, self.arrows,
            "reflecting along an admissible sequence must restore the orientation"
        );
        Some(seq)
    }
}
