//! Exact arithmetic on characters of the rank-3 torus and finite signed
//! multisets of them.
//!
//! Characters are stored as exponent vectors in `Z^3` even though the acting
//! torus is `(C*)^3` modulo the diagonal; the quotient shows up as the
//! checkable condition that final tangent weights have degree 0, not in the
//! representation itself (the intermediate `σ`-sets are not degree-0).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A character of the torus `(C*)^3`: the exponent vector `(a, b, c)` of the
/// Laurent monomial `t0^a t1^b t2^c`.
///
/// The derived `Ord` is lexicographic on `(a, b, c)`, which fixes the
/// canonical ordering used by [`WeightMultiset`] and all serialized output.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(pub [i64; 3]);

/// The trivial character `1`.
pub const CHI0: Weight = Weight([0, 0, 0]);

impl Weight {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Weight([a, b, c])
    }

    /// Sum of exponents; a character of the quotient torus has degree 0.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// True iff all exponents are nonnegative, i.e. the weight is an honest
    /// monomial in `t0, t1, t2`.
    pub fn is_monomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Componentwise divisibility of monomials.
    pub fn divides(&self, other: &Weight) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Number of variables appearing with positive exponent.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
        ])
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl fmt::Display for Weight {
    /// Canonical text form: `t0^a*t1^b*t2^c` with zero exponents omitted,
    /// exponent 1 written without `^`, and the trivial character printed `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == CHI0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{i}")?;
            } else {
                write!(f, "t{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Error reported by the weight and one-parameter-subgroup parsers, with the
/// byte offset of the offending token.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl FromStr for Weight {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let err = |pos: usize, msg: &str| ParseError {
            position: pos,
            message: msg.to_string(),
        };
        let s = s.trim();
        if s.is_empty() {
            return Err(err(0, "empty weight"));
        }
        if s == "1" {
            return Ok(CHI0);
        }
        let mut exps = [None::<i64>; 3];
        let mut pos = 0usize;
        for factor in s.split('*') {
            let bytes = factor.as_bytes();
            if bytes.first() != Some(&b't') {
                return Err(err(pos, "expected factor of the form t0^a, t1^b or t2^c"));
            }
            let var = match bytes.get(1) {
                Some(b'0') => 0usize,
                Some(b'1') => 1,
                Some(b'2') => 2,
                _ => return Err(err(pos + 1, "expected variable index 0, 1 or 2")),
            };
            let exp = if bytes.len() == 2 {
                1
            } else {
                if bytes.get(2) != Some(&b'^') {
                    return Err(err(pos + 2, "expected '^' before exponent"));
                }
                factor[3..]
                    .parse::<i64>()
                    .map_err(|_| err(pos + 3, "expected integer exponent"))?
            };
            if exps[var].is_some() {
                return Err(err(pos, "duplicate variable in weight"));
            }
            exps[var] = Some(exp);
            pos += factor.len() + 1;
        }
        Ok(Weight([
            exps[0].unwrap_or(0),
            exps[1].unwrap_or(0),
            exps[2].unwrap_or(0),
        ]))
    }
}

/// A one-parameter subgroup `λ(t) = (t^{n0}, t^{n1}, t^{n2})` of the torus.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OneParamSubgroup(pub [i64; 3]);

impl OneParamSubgroup {
    pub const fn new(n0: i64, n1: i64, n2: i64) -> Self {
        OneParamSubgroup([n0, n1, n2])
    }

    /// The bilinear pairing `⟨λ, χ⟩ = n0·a + n1·b + n2·c`.
    pub fn pairing(&self, w: &Weight) -> i64 {
        self.0.iter().zip(w.0.iter()).map(|(n, a)| n * a).sum()
    }
}

impl std::ops::Neg for OneParamSubgroup {
    type Output = OneParamSubgroup;
    fn neg(self) -> OneParamSubgroup {
        OneParamSubgroup([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for OneParamSubgroup {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(ParseError {
                position: 0,
                message: "expected three comma-separated integers n0,n1,n2".into(),
            });
        }
        let mut out = [0i64; 3];
        let mut pos = 0usize;
        for (i, part) in parts.iter().enumerate() {
            out[i] = part.trim().parse::<i64>().map_err(|_| ParseError {
                position: pos,
                message: format!("expected integer, found {part:?}"),
            })?;
            pos += part.len() + 1;
        }
        Ok(OneParamSubgroup(out))
    }
}

/// Errors from multiset arithmetic and the `σ`-set constructors.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// Exact subtraction would produce a negative multiplicity at the witness
    /// weight. At a fixed point this signals an inconsistency between the
    /// ambient tableau and the symmetry tableau.
    #[error("subtraction underflow at weight {0}")]
    SubtractionUnderflow(Weight),
    /// The dropped weight is not an element of `σ^l`.
    #[error("{weight} is not a degree-{degree} monomial")]
    NotInSigma { degree: u32, weight: Weight },
    /// `σ^l_i` is only defined for `l ≥ 2`.
    #[error("sigma_i requires degree at least 2, got {0}")]
    SigmaAxisDegree(u32),
    /// Variable index out of range.
    #[error("variable axis must be 0, 1 or 2, got {0}")]
    BadAxis(usize),
}

/// A finite collection of weights with integer multiplicities.
///
/// Multiplicities may be negative (virtual representations, used by the
/// character-series engine); operations that require an honest multiset say
/// so and check it. Entries with multiplicity 0 are never stored, and the
/// backing map is ordered, so equality, hashing and serialization are
/// canonical.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, i64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(w: Weight) -> Self {
        let mut ms = Self::new();
        ms.insert(w, 1);
        ms
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut ms = Self::new();
        for w in iter {
            ms.insert(w, 1);
        }
        ms
    }

    /// Adds `mult` copies of `w`, removing the entry if it cancels to 0.
    pub fn insert(&mut self, w: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.entries.entry(w).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.entries.remove(&w);
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.entries.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Signed total multiplicity.
    pub fn size(&self) -> i64 {
        self.entries.values().sum()
    }

    /// True iff every multiplicity is positive.
    pub fn is_true_multiset(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    /// Pointwise lattice translation `{w} ↦ {w + shift}`.
    pub fn translate(&self, shift: Weight) -> Self {
        WeightMultiset {
            entries: self.entries.iter().map(|(w, &m)| (*w + shift, m)).collect(),
        }
    }

    /// The bar involution on multisets: `w ↦ -w`.
    pub fn negate_all(&self) -> Self {
        WeightMultiset {
            entries: self.entries.iter().map(|(w, &m)| (-*w, m)).collect(),
        }
    }

    /// Multiplies every multiplicity by `k` (`k = 0` empties the multiset).
    pub fn scale_multiplicity(&self, k: i64) -> Self {
        if k == 0 {
            return Self::new();
        }
        WeightMultiset {
            entries: self.entries.iter().map(|(w, &m)| (*w, m * k)).collect(),
        }
    }

    /// Multiset sum.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn extend_from(&mut self, other: &Self) {
        for (w, &m) in other.iter() {
            self.insert(*w, m);
        }
    }

    /// Removes `b` from `self`, requiring `b` to be an honest sub-multiset.
    pub fn subtract_exact(&self, b: &Self) -> Result<Self, LatticeError> {
        let mut out = self.clone();
        for (w, &m) in b.iter() {
            debug_assert!(m > 0, "subtrahend must be a true multiset");
            if out.multiplicity(w) < m {
                return Err(LatticeError::SubtractionUnderflow(*w));
            }
            out.insert(*w, -m);
        }
        Ok(out)
    }

    /// Counts weights (with multiplicity) pairing strictly positively with `λ`.
    ///
    /// Requires a true multiset.
    pub fn pair_count_positive(&self, lambda: &OneParamSubgroup) -> i64 {
        assert!(
            self.is_true_multiset(),
            "pair_count_positive needs a true multiset"
        );
        self.entries
            .iter()
            .filter(|(w, _)| lambda.pairing(w) > 0)
            .map(|(_, &m)| m)
            .sum()
    }

    /// Counts weights (with multiplicity) pairing strictly negatively with `λ`.
    pub fn pair_count_negative(&self, lambda: &OneParamSubgroup) -> i64 {
        assert!(
            self.is_true_multiset(),
            "pair_count_negative needs a true multiset"
        );
        self.entries
            .iter()
            .filter(|(w, _)| lambda.pairing(w) < 0)
            .map(|(_, &m)| m)
            .sum()
    }

    /// Weights orthogonal to `λ`, with multiplicity.
    pub fn pair_count_zero(&self, lambda: &OneParamSubgroup) -> i64 {
        self.entries
            .iter()
            .filter(|(w, _)| lambda.pairing(w) == 0)
            .map(|(_, &m)| m)
            .sum()
    }

    /// Expanded list with repetitions, in canonical order. Requires a true
    /// multiset.
    pub fn expanded(&self) -> Vec<Weight> {
        assert!(self.is_true_multiset());
        let mut out = Vec::with_capacity(self.size() as usize);
        for (w, &m) in self.iter() {
            for _ in 0..m {
                out.push(*w);
            }
        }
        out
    }
}

impl FromIterator<Weight> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        Self::from_weights(iter)
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, &m) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{m}*{w}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `σ^l`: all monomials of total degree `l`, each with multiplicity 1.
/// Has `(l+1)(l+2)/2` elements.
pub fn sigma(l: u32) -> WeightMultiset {
    let l = l as i64;
    let mut ms = WeightMultiset::new();
    for i in 0..=l {
        for j in 0..=(l - i) {
            ms.insert(Weight::new(i, j, l - i - j), 1);
        }
    }
    ms
}

/// `σ^0`: the six off-diagonal degree-0 ratios `t_i/t_j`, `i ≠ j`.
pub fn sigma0() -> WeightMultiset {
    WeightMultiset::from_weights([
        Weight::new(-1, 1, 0),
        Weight::new(-1, 0, 1),
        Weight::new(1, -1, 0),
        Weight::new(0, -1, 1),
        Weight::new(1, 0, -1),
        Weight::new(0, 1, -1),
    ])
}

/// `σ^l_{ijk}`: `σ^l` with one copy of `t0^i t1^j t2^k` removed.
pub fn sigma_drop(l: u32, w: Weight) -> Result<WeightMultiset, LatticeError> {
    if !w.is_monomial() || w.degree() != l as i64 {
        return Err(LatticeError::NotInSigma {
            degree: l,
            weight: w,
        });
    }
    sigma(l).subtract_exact(&WeightMultiset::singleton(w))
}

/// `σ^l_i = σ^l \ t_i σ^{l-1}` for `l ≥ 2`: the degree-`l` monomials with
/// exponent 0 on the given axis. Has `l + 1` elements.
pub fn sigma_i(l: u32, axis: usize) -> Result<WeightMultiset, LatticeError> {
    if l < 2 {
        return Err(LatticeError::SigmaAxisDegree(l));
    }
    if axis > 2 {
        return Err(LatticeError::BadAxis(axis));
    }
    Ok(WeightMultiset::from_weights(
        sigma(l).weights().filter(|w| w.0[axis] == 0).copied(),
    ))
}

/// Monomial ideal membership: true iff some generator divides `mon`.
///
/// All inputs must be genuine monomials (nonnegative exponents).
pub fn monomial_in_ideal(mon: &Weight, gens: &[Weight]) -> bool {
    assert!(mon.is_monomial() && gens.iter().all(Weight::is_monomial));
    gens.iter().any(|g| g.divides(mon))
}
