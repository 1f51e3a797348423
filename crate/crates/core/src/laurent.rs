//! Sparse multivariate Laurent polynomials with exact integer coefficients.
//!
//! A polynomial of rank `n` lives in `Z[u1^±, ..., un^±]` and is stored as a
//! map from exponent vectors to nonzero `BigInt` coefficients. The term order
//! everywhere (division, printing) is lexicographic on exponent vectors, and
//! the canonical string emitted by [`LaurentPoly::canonical_string`] is a
//! bit-stable rendering: two polynomials are equal iff their strings agree.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is `Send + Sync` for free.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector of a Laurent monomial; compares lexicographically.
///
/// The length is the ambient rank and never changes after construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVec(Vec<i64>);

impl ExponentVec {
    pub fn new(exponents: Vec<i64>) -> Self {
        ExponentVec(exponents)
    }

    pub fn zeros(rank: usize) -> Self {
        ExponentVec(vec![0; rank])
    }

    /// The exponent vector of the variable `u_{i+1}`.
    pub fn unit(rank: usize, i: usize) -> Self {
        assert!(i < rank, "variable index {i} out of range for rank {rank}");
        let mut v = vec![0; rank];
        v[i] = 1;
        ExponentVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    fn checked_pair<'a>(&'a self, other: &'a Self) -> (&'a [i64], &'a [i64]) {
        assert_eq!(self.len(), other.len(), "exponent vector length mismatch");
        (&self.0, &other.0)
    }

    fn add(&self, other: &Self) -> Self {
        let (a, b) = self.checked_pair(other);
        ExponentVec(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let (a, b) = self.checked_pair(other);
        ExponentVec(a.iter().zip(b).map(|(x, y)| x - y).collect())
    }

    fn neg(&self) -> Self {
        ExponentVec(self.0.iter().map(|x| -x).collect())
    }
}

/// A sparse Laurent polynomial: finite map from exponent vectors to nonzero
/// integer coefficients. The zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<ExponentVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(rank);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(ExponentVec::zeros(rank), c);
        }
        p
    }

    /// The variable `u_{i+1}` as a polynomial.
    pub fn var(rank: usize, i: usize) -> Self {
        Self::monomial(ExponentVec::unit(rank, i), 1)
    }

    pub fn monomial(exponents: ExponentVec, coeff: impl Into<BigInt>) -> Self {
        let rank = exponents.len();
        let mut p = Self::zero(rank);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials and dropping zero coefficients.
    pub fn from_terms<C: Into<BigInt>>(
        rank: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, C)>,
    ) -> Self {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            assert_eq!(e.len(), rank, "term exponent length mismatch");
            p.add_term(ExponentVec::new(e), c.into());
        }
        p
    }

    fn add_term(&mut self, e: ExponentVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExponentVec::zeros(self.rank))
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVec, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVec) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn has_term(&self, e: &ExponentVec) -> bool {
        self.terms.contains_key(e)
    }

    fn assert_rank(&self, other: &Self) {
        assert_eq!(self.rank, other.rank, "rank mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_rank(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_rank(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_rank(other);
        let mut out = Self::zero(self.rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut out = Self::one(self.rank);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Multiplies by the monomial `coeff * u^exponents`.
    pub fn mul_monomial(&self, exponents: &ExponentVec, coeff: &BigInt) -> Self {
        assert_eq!(exponents.len(), self.rank, "rank mismatch");
        if coeff.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(exponents), c * coeff))
                .collect(),
        }
    }

    fn shift(&self, exponents: &ExponentVec) -> Self {
        self.mul_monomial(exponents, &BigInt::one())
    }

    /// Smallest exponent of `u_{i+1}` over all terms; `None` for the zero
    /// polynomial.
    pub fn min_exponent(&self, i: usize) -> Option<i64> {
        self.terms.keys().map(|e| e.get(i)).min()
    }

    pub fn max_exponent(&self, i: usize) -> Option<i64> {
        self.terms.keys().map(|e| e.get(i)).max()
    }

    /// Componentwise minimum of all exponent vectors; `None` for zero.
    pub fn min_exponents(&self) -> Option<ExponentVec> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        let min = it.fold(first.0, |mut acc, e| {
            for (a, b) in acc.iter_mut().zip(e.as_slice()) {
                if *b < *a {
                    *a = *b;
                }
            }
            acc
        });
        Some(ExponentVec(min))
    }

    /// Leading term under the lexicographic order.
    fn leading(&self) -> Option<(&ExponentVec, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns `q` with `q * g == self`, or `None` when no
    /// such Laurent polynomial with integer coefficients exists.
    ///
    /// Both operands are first normalized by their minimal-exponent monomial
    /// (monomials are units here), which reduces the problem to ordinary
    /// sparse polynomial division under the lexicographic order; any nonzero
    /// remainder or non-integral coefficient step reports `None`.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        self.assert_rank(g);
        assert!(!g.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.rank));
        }
        let f_min = self.min_exponents().expect("nonzero");
        let g_min = g.min_exponents().expect("nonzero");
        let f_hat = self.shift(&f_min.neg());
        let g_hat = g.shift(&g_min.neg());

        let (g_lead_e, g_lead_c) = g_hat.leading().expect("nonzero");
        let g_lead_e = g_lead_e.clone();
        let g_lead_c = g_lead_c.clone();

        let mut rem = f_hat;
        let mut quot = Self::zero(self.rank);
        while let Some((r_e, r_c)) = rem.leading() {
            let diff = r_e.sub(&g_lead_e);
            if diff.as_slice().iter().any(|&x| x < 0) {
                return None;
            }
            let (q, r) = num_integer::Integer::div_rem(r_c, &g_lead_c);
            if !r.is_zero() {
                return None;
            }
            let t_e = diff;
            rem = rem.sub(&g_hat.mul_monomial(&t_e, &q));
            quot.add_term(t_e, q);
        }
        Some(quot.shift(&f_min.sub(&g_min)))
    }

    /// Substitutes `u_{i+1} -> r` and attempts Laurent resolution.
    ///
    /// With `r = N/D` and `lo/hi` the extreme exponents of the variable in
    /// `self` (clamped to 0), the result is
    /// `sum_t c_t u^{t without i} N^{t_i - lo} D^{hi - t_i}` over
    /// `N^{-lo} D^{hi}`, which stays inside the Laurent ring for every sign
    /// pattern of exponents; [`RationalExpr::new`] then divides out whatever
    /// cancels.
    pub fn substitute(&self, i: usize, r: &RationalExpr) -> RationalExpr {
        assert!(i < self.rank, "variable index out of range");
        assert_eq!(self.rank, r.rank(), "rank mismatch");
        if self.is_zero() {
            return RationalExpr::from_poly(Self::zero(self.rank));
        }
        let lo = self.min_exponent(i).expect("nonzero").min(0);
        let hi = self.max_exponent(i).expect("nonzero").max(0);
        let width = (hi - lo) as usize;

        let mut num_pows = Vec::with_capacity(width + 1);
        let mut den_pows = Vec::with_capacity(width + 1);
        num_pows.push(Self::one(self.rank));
        den_pows.push(Self::one(self.rank));
        for p in 1..=width {
            num_pows.push(num_pows[p - 1].mul(r.num()));
            den_pows.push(den_pows[p - 1].mul(r.den()));
        }

        let mut acc = Self::zero(self.rank);
        for (e, c) in &self.terms {
            let k = e.get(i);
            let mut rest = e.clone();
            rest.0[i] = 0;
            let term = Self::monomial(rest, c.clone())
                .mul(&num_pows[(k - lo) as usize])
                .mul(&den_pows[(hi - k) as usize]);
            acc = acc.add(&term);
        }
        let den = num_pows[(-lo) as usize].mul(&den_pows[hi as usize]);
        RationalExpr::new(acc, den)
    }

    /// Canonical rendering: terms in descending lexicographic exponent order,
    /// joined by ` + ` / ` - `; factors `u<index>[^exp]` in ascending variable
    /// order; a coefficient of magnitude 1 is suppressed except on the
    /// constant term.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mut factors = String::new();
            for (j, &exp) in e.as_slice().iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !factors.is_empty() {
                    factors.push('*');
                }
                factors.push('u');
                factors.push_str(&(j + 1).to_string());
                if exp != 1 {
                    factors.push('^');
                    factors.push_str(&exp.to_string());
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&factors);
            } else {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&factors);
            }
        }
        out
    }

    /// Renders as `P(u)/u^d` with `d_i = max(0, -min exponent of u_i)`, the
    /// fraction form used for human-readable listings.
    pub fn fraction_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let d: Vec<i64> = (0..self.rank)
            .map(|i| (-self.min_exponent(i).expect("nonzero")).max(0))
            .collect();
        if d.iter().all(|&x| x == 0) {
            return self.canonical_string();
        }
        let num = self.shift(&ExponentVec::new(d.clone()));
        let mut den = String::new();
        for (j, &exp) in d.iter().enumerate() {
            if exp == 0 {
                continue;
            }
            if !den.is_empty() {
                den.push('*');
            }
            den.push('u');
            den.push_str(&(j + 1).to_string());
            if exp != 1 {
                den.push('^');
                den.push_str(&exp.to_string());
            }
        }
        format!("({})/({})", num.canonical_string(), den)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

/// Quotient of two Laurent polynomials.
///
/// The denominator is never zero. Whenever it divides the numerator exactly
/// the expression is normalized to denominator 1 (the resolved state), and a
/// shared monomial factor is always cancelled. Equality is cross-multiplication
/// equality, not representational identity.
#[derive(Clone, Debug)]
pub struct RationalExpr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalExpr {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert_eq!(num.rank(), den.rank(), "rank mismatch");
        assert!(!den.is_zero(), "zero denominator in rational expression");
        if num.is_zero() {
            let rank = num.rank();
            return RationalExpr {
                num,
                den: LaurentPoly::one(rank),
            };
        }
        // Cancel the common monomial content; monomials are units, so this
        // only changes the representative, not the value class.
        let num_min = num.min_exponents().expect("nonzero");
        let den_min = den.min_exponents().expect("nonzero");
        let common = ExponentVec::new(
            num_min
                .as_slice()
                .iter()
                .zip(den_min.as_slice())
                .map(|(a, b)| *a.min(b))
                .collect(),
        );
        let num = num.shift(&common.neg());
        let den = den.shift(&common.neg());
        match num.exact_div(&den) {
            Some(q) => {
                let rank = q.rank();
                RationalExpr {
                    num: q,
                    den: LaurentPoly::one(rank),
                }
            }
            None => RationalExpr { num, den },
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let rank = p.rank();
        RationalExpr {
            num: p,
            den: LaurentPoly::one(rank),
        }
    }

    /// The variable `u_{i+1}` as a rational expression.
    pub fn var(rank: usize, i: usize) -> Self {
        Self::from_poly(LaurentPoly::var(rank, i))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn into_laurent(self) -> Option<LaurentPoly> {
        self.is_laurent().then_some(self.num)
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalExpr::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.num.is_zero(), "division by a zero expression");
        RationalExpr::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Substitutes `u_{i+1} -> r` in numerator and denominator.
    pub fn substitute(&self, i: usize, r: &Self) -> Self {
        let num = self.num.substitute(i, r);
        let den = self.den.substitute(i, r);
        num.div(&den)
    }
}

impl PartialEq for RationalExpr {
    fn eq(&self, other: &Self) -> bool {
        self.rank() == other.rank() && self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalExpr {}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
