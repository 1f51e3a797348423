//! Seeds, the mutation operation, breadth-first exchange-graph exploration
//! and denominator vectors.
//!
//! Cluster entries are stored as Laurent polynomials in the initial
//! variables; every exchange relation is resolved by exact division, and a
//! failed division is a fatal invariant violation rather than an error value.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::cartan::ExchangeMatrix;
use crate::laurent::LaurentPoly;

/// A seed: an ordered cluster of Laurent polynomials plus an exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    cluster: Vec<LaurentPoly>,
    matrix: ExchangeMatrix,
}

impl Seed {
    /// The initial seed `((u_1, ..., u_n), B)`.
    pub fn initial(matrix: &ExchangeMatrix) -> Self {
        let n = matrix.n();
        Seed {
            cluster: (0..n).map(|i| LaurentPoly::var(n, i)).collect(),
            matrix: matrix.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.n()
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn variable(&self, k: usize) -> &LaurentPoly {
        &self.cluster[k]
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    /// Mutation in direction `k`: the new variable is
    /// `(prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}) / x_k`,
    /// read down column `k`, and the matrix mutates alongside. The division
    /// is exact for every seed mutation-reachable from an initial seed; a
    /// failure here is an implementation bug and panics.
    pub fn mutate(&self, k: usize) -> Seed {
        let n = self.rank();
        assert!(k < n, "mutation index out of range");
        let mut pos = LaurentPoly::one(n);
        let mut neg = LaurentPoly::one(n);
        for i in 0..n {
            let b = self.matrix.entry(i, k);
            if b > 0 {
                pos = pos.mul(&self.cluster[i].pow(b as u64));
            } else if b < 0 {
                neg = neg.mul(&self.cluster[i].pow((-b) as u64));
            }
        }
        let exchange = pos.add(&neg);
        let new_var = exchange
            .exact_div(&self.cluster[k])
            .expect("exchange relation must divide exactly");
        let mut cluster = self.cluster.clone();
        cluster[k] = new_var;
        Seed {
            cluster,
            matrix: self.matrix.mutate(k),
        }
    }

    /// Deduplication key: the sorted tuple of canonical variable strings.
    /// The matrix is deliberately ignored.
    pub fn canonical_key(&self) -> Vec<String> {
        let mut key: Vec<String> = self.cluster.iter().map(|x| x.canonical_string()).collect();
        key.sort();
        key
    }
}

/// Exploration budgets. Exceeding any of them stops the walk gracefully and
/// flags the result as incomplete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of mutations from the initial seed.
    pub max_depth: usize,
    /// Maximum number of distinct seeds visited.
    pub max_seeds: usize,
    /// Maximum number of distinct cluster variables collected.
    pub max_vars: usize,
    /// Maximum total term count over all distinct variables collected.
    pub max_terms: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_depth: 64,
            max_seeds: 100_000,
            max_vars: 10_000,
            max_terms: 1_000_000,
        }
    }
}

/// Result of an exchange-graph walk. `complete` is false exactly when some
/// budget stopped the exploration before the frontier emptied.
#[derive(Clone, Debug)]
pub struct Enumeration {
    variables: Vec<LaurentPoly>,
    strings: Vec<String>,
    first_depth: Vec<usize>,
    clusters: Vec<Vec<usize>>,
    complete: bool,
    seeds_seen: usize,
}

impl Enumeration {
    /// Distinct cluster variables, sorted by canonical string.
    pub fn variables(&self) -> &[LaurentPoly] {
        &self.variables
    }

    pub fn variable_strings(&self) -> &[String] {
        &self.strings
    }

    /// BFS depth at which each variable was first seen, aligned with
    /// [`Self::variables`].
    pub fn first_depths(&self) -> &[usize] {
        &self.first_depth
    }

    /// Clusters as sorted index lists into [`Self::variables`], sorted.
    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn seeds_seen(&self) -> usize {
        self.seeds_seen
    }

    pub fn len(&self) -> usize {
        self.variables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn contains(&self, poly: &LaurentPoly) -> bool {
        self.strings
            .binary_search(&poly.canonical_string())
            .is_ok()
    }

    /// Clusters as sorted sets of canonical strings.
    pub fn cluster_string_sets(&self) -> BTreeSet<Vec<String>> {
        self.clusters
            .iter()
            .map(|c| c.iter().map(|&i| self.strings[i].clone()).collect())
            .collect()
    }
}

/// Breadth-first exploration of the exchange graph from the initial seed of
/// `b`, deduplicating seeds by sorted canonical variable tuple. Terminates
/// naturally with the complete set of cluster variables for finite type, or
/// stops at the budgets with a partial set.
pub fn enumerate(b: &ExchangeMatrix, budgets: &Budgets) -> Enumeration {
    let mut vars: BTreeMap<String, (LaurentPoly, usize)> = BTreeMap::new();
    let mut clusters: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut complete = true;
    let mut seeds_seen = 0usize;
    let mut total_terms = 0usize;

    walk(b, budgets, |seed, depth, over_budget| {
        seeds_seen += 1;
        clusters.insert(seed.canonical_key());
        for x in seed.cluster() {
            let s = x.canonical_string();
            if !vars.contains_key(&s) {
                total_terms += x.num_terms();
                vars.insert(s, (x.clone(), depth));
            }
        }
        if vars.len() > budgets.max_vars || total_terms > budgets.max_terms {
            *over_budget = true;
        }
        true
    })
    .map(|truncated| {
        if truncated {
            complete = false;
        }
    })
    .unwrap_or(());

    let strings: Vec<String> = vars.keys().cloned().collect();
    let variables: Vec<LaurentPoly> = vars.values().map(|(p, _)| p.clone()).collect();
    let first_depth: Vec<usize> = vars.values().map(|(_, d)| *d).collect();
    let index: BTreeMap<&String, usize> = strings.iter().zip(0..).collect();
    let clusters: Vec<Vec<usize>> = clusters
        .into_iter()
        .map(|key| {
            let mut c: Vec<usize> = key.iter().map(|s| index[s]).collect();
            c.sort_unstable();
            c
        })
        .collect();

    Enumeration {
        variables,
        strings,
        first_depth,
        clusters,
        complete,
        seeds_seen,
    }
}

/// BFS depths at which each target variable first appears, exploring no
/// deeper than `max_depth` and stopping early once every target is found.
pub fn find_first_depths(
    b: &ExchangeMatrix,
    targets: &[LaurentPoly],
    max_depth: usize,
    budgets: &Budgets,
) -> Vec<Option<usize>> {
    let wanted: Vec<String> = targets.iter().map(|t| t.canonical_string()).collect();
    let mut found: Vec<Option<usize>> = vec![None; targets.len()];
    let mut missing = targets.len();
    let local = Budgets {
        max_depth,
        ..*budgets
    };
    let _ = walk(b, &local, |seed, depth, _| {
        for x in seed.cluster() {
            let s = x.canonical_string();
            for (i, w) in wanted.iter().enumerate() {
                if found[i].is_none() && *w == s {
                    found[i] = Some(depth);
                    missing -= 1;
                }
            }
        }
        missing > 0
    });
    found
}

/// Shared BFS driver. `visit` sees each distinct seed once (with its depth)
/// and returns false to stop early; it may set its third argument to flag a
/// caller-side budget trip. Returns `Some(truncated)` where `truncated`
/// records whether any budget cut the walk short, or `None` when `visit`
/// stopped it.
fn walk(
    b: &ExchangeMatrix,
    budgets: &Budgets,
    mut visit: impl FnMut(&Seed, usize, &mut bool) -> bool,
) -> Option<bool> {
    let mut seen: HashSet<Vec<String>> = HashSet::new();
    let mut queue: VecDeque<(Seed, usize)> = VecDeque::new();
    let initial = Seed::initial(b);
    seen.insert(initial.canonical_key());
    queue.push_back((initial, 0));
    let mut truncated = false;

    while let Some((seed, depth)) = queue.pop_front() {
        let mut over_budget = false;
        if !visit(&seed, depth, &mut over_budget) {
            return None;
        }
        if over_budget {
            return Some(true);
        }
        if depth == budgets.max_depth {
            // Unexpanded frontier: the enumeration may be incomplete.
            truncated = true;
            continue;
        }
        for k in 0..seed.rank() {
            let child = seed.mutate(k);
            let key = child.canonical_key();
            if seen.contains(&key) {
                continue;
            }
            if seen.len() >= budgets.max_seeds {
                return Some(true);
            }
            seen.insert(key);
            queue.push_back((child, depth + 1));
        }
    }
    Some(truncated)
}

/// Denominator vector of a cluster variable: `d_i` is the negated minimal
/// exponent of `u_i`, so the initial variable `u_i` gets `-e_i` and every
/// non-initial variable gets the exponent vector of its monomial denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DenominatorVector(pub Vec<i64>);

pub fn denominator_vector(f: &LaurentPoly) -> DenominatorVector {
    assert!(!f.is_zero(), "denominator vector of the zero polynomial");
    DenominatorVector(
        (0..f.rank())
            .map(|i| -f.min_exponent(i).expect("nonzero"))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ExponentVec;

    fn lp(rank: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(rank, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    fn a3_path() -> ExchangeMatrix {
        ExchangeMatrix::new(vec![vec![0, -1, 0], vec![1, 0, -1], vec![0, 1, 0]]).unwrap()
    }

    fn b2() -> ExchangeMatrix {
        ExchangeMatrix::new(vec![vec![0, -1], vec![2, 0]]).unwrap()
    }

    #[test]
    fn initial_seed_is_the_variable_tuple() {
        let s = Seed::initial(&a3_path());
        assert_eq!(s.cluster().len(), 3);
        for (i, x) in s.cluster().iter().enumerate() {
            assert_eq!(x, &LaurentPoly::var(3, i));
        }
        let b2seed = Seed::initial(&b2());
        assert_eq!(b2seed.cluster().len(), 2);
        let key = b2seed.canonical_key();
        assert_eq!(key.len(), 2);
        assert_ne!(key[0], key[1]);
    }

    #[test]
    fn first_mutation_of_path_seed() {
        let s = Seed::initial(&a3_path()).mutate(0);
        // (1 + u2) / u1
        assert_eq!(
            s.variable(0),
            &lp(3, &[(&[-1, 0, 0], 1), (&[-1, 1, 0], 1)])
        );
        assert_eq!(
            s.matrix().rows(),
            &[vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]
        );
    }

    #[test]
    fn mutation_is_involutive_on_seeds() {
        let mut s = Seed::initial(&a3_path());
        for k in [0usize, 2, 1, 0] {
            s = s.mutate(k);
        }
        for k in 0..3 {
            assert_eq!(s.mutate(k).mutate(k), s);
        }
    }

    #[test]
    fn path_type_enumeration_has_nine_variables() {
        let e = enumerate(&a3_path(), &Budgets::default());
        assert!(e.complete());
        assert_eq!(e.len(), 9);
        assert_eq!(e.clusters().len(), 14);
        for c in e.clusters() {
            assert_eq!(c.len(), 3);
        }
    }

    #[test]
    fn infinite_type_trips_the_budget() {
        let b = ExchangeMatrix::new(vec![vec![0, 2], vec![-2, 0]]).unwrap();
        let e = enumerate(
            &b,
            &Budgets {
                max_depth: 6,
                ..Budgets::default()
            },
        );
        assert!(!e.complete());
        assert!(e.len() > 2);
    }

    #[test]
    fn denominator_vectors_read_off_the_display() {
        let u1 = LaurentPoly::var(3, 0);
        assert_eq!(denominator_vector(&u1).0, vec![-1, 0, 0]);
        let p2 = lp(3, &[(&[0, -1, 0], 1), (&[-1, -1, 1], 1), (&[-1, 0, 1], 1)]);
        assert_eq!(denominator_vector(&p2).0, vec![1, 1, 0]);
        let p3 = lp(
            3,
            &[
                (&[0, -1, -1], 1),
                (&[-1, -1, 0], 1),
                (&[0, 0, -1], 1),
                (&[-1, 0, 0], 1),
            ],
        );
        assert_eq!(denominator_vector(&p3).0, vec![1, 1, 1]);
    }

    #[test]
    fn every_variable_lies_in_some_cluster() {
        let e = enumerate(&a3_path(), &Budgets::default());
        let mut covered = vec![false; e.len()];
        for c in e.clusters() {
            for &i in c {
                covered[i] = true;
            }
        }
        assert!(covered.into_iter().all(|x| x));
    }

    #[test]
    fn find_first_depths_locates_targets() {
        let target = lp(3, &[(&[-1, 0, 0], 1), (&[-1, 1, 0], 1)]);
        let missing = LaurentPoly::monomial(ExponentVec::new(vec![5, 5, 5]), 1);
        let depths = find_first_depths(
            &a3_path(),
            &[target, missing],
            4,
            &Budgets::default(),
        );
        assert_eq!(depths[0], Some(1));
        assert_eq!(depths[1], None);
    }
}
