//! Finite root systems over a Cartan matrix, almost positive roots,
//! truncated reflections, and the combinatorial model of the
//! preprojective/preinjective component of the cluster category.
//!
//! Roots are exact integer coordinate vectors over the simple roots, with the
//! pairing `<alpha, alpha_i^vee> = sum_j coords_j * a_ij` read straight from
//! the Cartan matrix; no inner-product normalization is involved anywhere.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::cartan::CartanMatrix;
use crate::error::Error;
use crate::quiver::ValuedQuiver;

/// Element of the almost positive roots: a positive root given by its
/// coordinates, or a negated simple root.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlmostPositiveRoot {
    NegSimple(usize),
    Positive(Vec<i64>),
}

impl AlmostPositiveRoot {
    /// Coordinate vector over the simple roots; `-alpha_i` becomes the
    /// negated unit vector.
    pub fn coords(&self, rank: usize) -> Vec<i64> {
        match self {
            AlmostPositiveRoot::Positive(c) => c.clone(),
            AlmostPositiveRoot::NegSimple(i) => {
                let mut v = vec![0i64; rank];
                v[*i] = -1;
                v
            }
        }
    }
}

impl fmt::Display for AlmostPositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlmostPositiveRoot::Positive(c) => write!(f, "{c:?}"),
            AlmostPositiveRoot::NegSimple(i) => write!(f, "-alpha{}", i + 1),
        }
    }
}

/// A finite root system: the positive roots generated by closing the simple
/// roots under the simple reflections.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    /// Generates the positive roots; requires finite type.
    pub fn generate(cartan: &CartanMatrix) -> Result<Self, Error> {
        if !cartan.is_finite_type() {
            return Err(Error::NotFiniteType);
        }
        let n = cartan.n();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(alpha) = queue.pop_front() {
            for i in 0..n {
                let beta = reflect_coords(cartan, i, &alpha);
                if beta.iter().all(|&x| x >= 0) && seen.insert(beta.clone()) {
                    queue.push_back(beta);
                }
            }
        }
        let positive: Vec<Vec<i64>> = seen.into_iter().collect();
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(RootSystem {
            cartan: cartan.clone(),
            positive,
            index,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.n()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn is_positive_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    /// `<alpha, alpha_i^vee>` for `alpha` given by coordinates.
    pub fn pairing(&self, coords: &[i64], i: usize) -> i64 {
        coords
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.cartan.entry(i, j))
            .sum()
    }

    /// Simple reflection `s_i` on coordinate vectors.
    pub fn reflect(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        reflect_coords(&self.cartan, i, coords)
    }

    /// All almost positive roots: the negated simples first, then the
    /// positive roots in ascending lexicographic order.
    pub fn almost_positive(&self) -> Vec<AlmostPositiveRoot> {
        let mut out: Vec<AlmostPositiveRoot> = (0..self.rank())
            .map(AlmostPositiveRoot::NegSimple)
            .collect();
        out.extend(
            self.positive
                .iter()
                .map(|r| AlmostPositiveRoot::Positive(r.clone())),
        );
        out
    }

    /// Index of an almost positive root in the [`Self::almost_positive`]
    /// ordering.
    pub fn apr_index(&self, root: &AlmostPositiveRoot) -> usize {
        match root {
            AlmostPositiveRoot::NegSimple(i) => *i,
            AlmostPositiveRoot::Positive(c) => {
                self.rank() + *self.index.get(c).expect("not a positive root")
            }
        }
    }

    /// Truncated reflection: fixes `-alpha_j` for `j != i` and acts as `s_i`
    /// everywhere else (so `-alpha_i` maps to `alpha_i`, and `alpha_i` to
    /// `-alpha_i`). An involution on the almost positive roots.
    pub fn truncated_reflection(&self, i: usize, root: &AlmostPositiveRoot) -> AlmostPositiveRoot {
        match root {
            AlmostPositiveRoot::NegSimple(j) if *j != i => AlmostPositiveRoot::NegSimple(*j),
            AlmostPositiveRoot::NegSimple(_) => {
                let mut e = vec![0i64; self.rank()];
                e[i] = 1;
                AlmostPositiveRoot::Positive(e)
            }
            AlmostPositiveRoot::Positive(c) => {
                let r = self.reflect(i, c);
                if r.iter().all(|&x| x >= 0) {
                    assert!(self.is_positive_root(&r), "reflection left the root system");
                    AlmostPositiveRoot::Positive(r)
                } else {
                    // Only alpha_i reflects to a negative root.
                    let mut e = vec![0i64; self.rank()];
                    e[i] = 1;
                    assert_eq!(c, &e, "only the simple root at i may go negative");
                    AlmostPositiveRoot::NegSimple(i)
                }
            }
        }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.cartan.components()
    }

    pub fn subsystem(&self, vertices: &[usize]) -> RootSystem {
        RootSystem::generate(&self.cartan.principal_submatrix(vertices))
            .expect("component of a finite type is finite")
    }

    /// Coxeter number of an irreducible system: `2 |Phi+| / n`, cross-checked
    /// against the multiplicative order of a Coxeter element.
    pub fn coxeter_number(&self) -> u64 {
        assert_eq!(
            self.components().len(),
            1,
            "Coxeter number is per irreducible component"
        );
        let n = self.rank() as u64;
        let count = 2 * self.num_positive() as u64;
        assert_eq!(count % n, 0, "2|Phi+| must be divisible by the rank");
        let h = count / n;
        assert_eq!(
            h,
            self.coxeter_element_order(),
            "root count and Coxeter element order must agree"
        );
        h
    }

    /// Coxeter numbers per component, as `(vertices, h)` pairs.
    pub fn coxeter_numbers(&self) -> Vec<(Vec<usize>, u64)> {
        self.components()
            .into_iter()
            .map(|comp| {
                let h = self.subsystem(&comp).coxeter_number();
                (comp, h)
            })
            .collect()
    }

    /// Multiplicative order of `s_n ... s_1` acting on the root lattice.
    fn coxeter_element_order(&self) -> u64 {
        let n = self.rank();
        let apply = |coords: &[i64]| {
            let mut c = coords.to_vec();
            for i in 0..n {
                c = self.reflect(i, &c);
            }
            c
        };
        let simples: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0i64; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut current = simples.clone();
        let cap = 4 * self.num_positive() as u64 + 4;
        for m in 1..=cap {
            current = current.iter().map(|c| apply(c)).collect();
            if current == simples {
                return m;
            }
        }
        unreachable!("Coxeter element of a finite system has finite order");
    }

    /// Reduced word for the longest element, built by the descent algorithm:
    /// repeatedly apply the smallest `s_i` with `<x, alpha_i^vee> > 0` to a
    /// strictly dominant vector until it is antidominant.
    pub fn longest_element_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut x = vec![0i64; n];
        for r in &self.positive {
            for (xi, ri) in x.iter_mut().zip(r) {
                *xi += ri;
            }
        }
        let mut word = Vec::new();
        loop {
            match (0..n).find(|&i| self.pairing(&x, i) > 0) {
                Some(i) => {
                    x = self.reflect(i, &x);
                    word.push(i);
                }
                None => break,
            }
        }
        word
    }

    /// Whether the longest element acts as `-1`, i.e. `w0(alpha_i) = -alpha_i`
    /// for every simple root.
    pub fn longest_element_is_minus_id(&self) -> bool {
        let word = self.longest_element_word();
        let n = self.rank();
        (0..n).all(|i| {
            let mut c = vec![0i64; n];
            c[i] = 1;
            for &s in &word {
                c = self.reflect(s, &c);
            }
            c.iter().enumerate().all(|(j, &x)| x == if j == i { -1 } else { 0 })
        })
    }
}

fn reflect_coords(cartan: &CartanMatrix, i: usize, coords: &[i64]) -> Vec<i64> {
    let pairing: i64 = coords
        .iter()
        .enumerate()
        .map(|(j, &c)| c * cartan.entry(i, j))
        .sum();
    let mut out = coords.to_vec();
    out[i] -= pairing;
    out
}

/// An object of the preprojective/preinjective component, addressed as the
/// `power`-th Coxeter shift of the shifted projective at `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PiObject {
    pub power: i64,
    pub vertex: usize,
}

/// Object-level image under the reflection at a sink `k`: the shifted
/// projective chain at `k` moves up by one Coxeter step, everything else
/// keeps its address.
pub fn reflected_pi_object(k: usize, obj: &PiObject) -> PiObject {
    if obj.vertex == k {
        PiObject {
            power: obj.power + 1,
            vertex: k,
        }
    } else {
        *obj
    }
}

/// Root-level transcription of the reflection at a sink `k`:
/// `alpha_k <-> -alpha_k`, other negated simples fixed, every other positive
/// root reflected by `s_k`.
pub fn bgp_reflect(
    rs: &RootSystem,
    quiver: &ValuedQuiver,
    k: usize,
    root: &AlmostPositiveRoot,
) -> Result<AlmostPositiveRoot, Error> {
    if !quiver.is_sink(k) {
        return Err(Error::NotSink(k));
    }
    let n = rs.rank();
    let simple_k = {
        let mut e = vec![0i64; n];
        e[k] = 1;
        e
    };
    Ok(match root {
        AlmostPositiveRoot::Positive(c) if *c == simple_k => AlmostPositiveRoot::NegSimple(k),
        AlmostPositiveRoot::NegSimple(j) if *j == k => AlmostPositiveRoot::Positive(simple_k),
        AlmostPositiveRoot::NegSimple(j) => AlmostPositiveRoot::NegSimple(*j),
        AlmostPositiveRoot::Positive(c) => {
            let r = rs.reflect(k, c);
            assert!(
                r.iter().all(|&x| x >= 0),
                "reflection of a non-simple positive root stays positive"
            );
            AlmostPositiveRoot::Positive(r)
        }
    })
}

/// The composition of truncated reflections along the admissible sink
/// sequence of an orientation, precomputed as a permutation of the almost
/// positive roots. `sequence[0]` acts first; negative powers use the inverse
/// permutation.
#[derive(Clone, Debug)]
pub struct CoxeterSigma {
    aprs: Vec<AlmostPositiveRoot>,
    perm: Vec<usize>,
    inv: Vec<usize>,
    sequence: Vec<usize>,
}

impl CoxeterSigma {
    /// `None` when the orientation has an oriented cycle.
    pub fn new(rs: &RootSystem, quiver: &ValuedQuiver) -> Option<Self> {
        assert_eq!(rs.rank(), quiver.n(), "rank mismatch");
        let sequence = quiver.admissible_sink_sequence()?;
        let aprs = rs.almost_positive();
        let perm: Vec<usize> = aprs
            .iter()
            .map(|root| {
                let mut r = root.clone();
                for &k in &sequence {
                    r = rs.truncated_reflection(k, &r);
                }
                rs.apr_index(&r)
            })
            .collect();
        let mut inv = vec![0usize; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        Some(CoxeterSigma {
            aprs,
            perm,
            inv,
            sequence,
        })
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn domain(&self) -> &[AlmostPositiveRoot] {
        &self.aprs
    }

    pub fn apply_index(&self, idx: usize, power: i64) -> usize {
        let mut i = idx;
        for _ in 0..power.unsigned_abs() {
            i = if power >= 0 { self.perm[i] } else { self.inv[i] };
        }
        i
    }

    pub fn apply(&self, rs: &RootSystem, root: &AlmostPositiveRoot, power: i64) -> AlmostPositiveRoot {
        self.aprs[self.apply_index(rs.apr_index(root), power)].clone()
    }

    /// Permutation order: least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut order: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    /// The address-to-root correspondence: the object at `(power, vertex)`
    /// maps to `sigma^power(-alpha_vertex)`.
    pub fn gamma(&self, rs: &RootSystem, obj: &PiObject) -> AlmostPositiveRoot {
        self.apply(
            rs,
            &AlmostPositiveRoot::NegSimple(obj.vertex),
            obj.power,
        )
    }
}
