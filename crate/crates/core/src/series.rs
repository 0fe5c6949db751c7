//! The independent character-series engine: rational torus characters over
//! the rank-2 lattice and the Čech local-to-global formula
//!
//! ```text
//! χ(F,F) = Σ_α Q_α Q̄_α (1 - v_α^{-1})(1 - w_α^{-1})
//!        - Σ_{αβ} δ(v_{αβ}) Q_{αβ} Q̄_{αβ} (1 - w_{αβ}^{-1})
//! ```
//!
//! where `Q_α` is the character of the sections of `F` over the affine chart
//! `U_α`, `δ(v) = Σ_{n∈Z} v^n` is the genuine bilateral sum, and every
//! `1/(1 - t^d)` factor is expanded in nonnegative powers of the chart's own
//! coordinate character `d`. Each term is an infinite series but the total is
//! finite; the engine expands inside a truncation box and checks a clean
//! margin, so `Ext^1(F,F) = 1 - χ(F,F)` comes out as an honest multiset.
//!
//! This module works in the two-variable lattice `(t1, t2)`; a degree-0
//! three-variable weight `(a, b, c)` corresponds to `(b, c)` here.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

/// A character of the rank-2 torus: exponents of `t1^a t2^b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight2(pub [i64; 2]);

pub const ONE2: Weight2 = Weight2([0, 0]);

impl Weight2 {
    pub const fn new(a: i64, b: i64) -> Self {
        Weight2([a, b])
    }
}

impl std::ops::Add for Weight2 {
    type Output = Weight2;
    fn add(self, r: Weight2) -> Weight2 {
        Weight2([self.0[0] + r.0[0], self.0[1] + r.0[1]])
    }
}

impl std::ops::Neg for Weight2 {
    type Output = Weight2;
    fn neg(self) -> Weight2 {
        Weight2([-self.0[0], -self.0[1]])
    }
}

impl fmt::Display for Weight2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == ONE2 {
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
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A finite signed multiset of rank-2 weights: a Laurent polynomial with
/// integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Laurent2 {
    entries: BTreeMap<Weight2, i64>,
}

impl Laurent2 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ONE2, 1)
    }

    pub fn monomial(w: Weight2, coeff: i64) -> Self {
        let mut p = Self::new();
        p.insert(w, coeff);
        p
    }

    pub fn insert(&mut self, w: Weight2, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.entries.entry(w).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.entries.remove(&w);
        }
    }

    pub fn coefficient(&self, w: &Weight2) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight2, &i64)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.entries.values().all(|&c| c > 0)
    }

    pub fn add(&self, other: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (w, &c) in other.iter() {
            out.insert(*w, c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (w, &c) in other.iter() {
            out.insert(*w, -c);
        }
        out
    }

    pub fn mul(&self, other: &Laurent2) -> Laurent2 {
        let mut out = Laurent2::new();
        for (u, &a) in self.iter() {
            for (v, &b) in other.iter() {
                out.insert(*u + *v, a * b);
            }
        }
        out
    }

    pub fn translate(&self, shift: Weight2) -> Laurent2 {
        Laurent2 {
            entries: self.entries.iter().map(|(w, &c)| (*w + shift, c)).collect(),
        }
    }

    /// The bar involution `t ↦ t^{-1}`.
    pub fn bar(&self) -> Laurent2 {
        Laurent2 {
            entries: self.entries.iter().map(|(w, &c)| (-*w, c)).collect(),
        }
    }

    /// `1 - t^d` as a polynomial.
    pub fn one_minus(d: Weight2) -> Laurent2 {
        let mut p = Laurent2::one();
        p.insert(d, -1);
        p
    }

    fn max_abs_exponent(&self) -> i64 {
        self.entries
            .keys()
            .flat_map(|w| w.0.iter().map(|e| e.abs()))
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// A denominator factor is the trivial character or the factor set mixes
    /// opposite directions along a coordinate, so no expansion cone exists.
    #[error("denominator factor {0} cannot be expanded in the declared cone")]
    BadDenominator(Weight2),
    /// The truncated sum has support too close to the box boundary; the
    /// radius is too small for the data.
    #[error("truncation dirty: support at {0} within the safety margin")]
    TruncationDirty(Weight2),
    /// `1 - χ(F,F)` has a negative multiplicity, so the chart data does not
    /// describe a stable sheaf.
    #[error("not an effective representation: multiplicity {1} at {0}")]
    NotEffective(Weight2, i64),
    #[error("chart {chart} denominator {found} does not match the chart coordinates {expected}")]
    WrongChartDenominator {
        chart: usize,
        expected: String,
        found: String,
    },
    #[error("chart data json: {0}")]
    Json(String),
}

/// A signed Laurent multiset divided by a product of factors `1 - t^{d_i}`,
/// each expanded as `Σ_{n≥0} t^{n·d_i}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalChar {
    num: Laurent2,
    den: Vec<Weight2>,
}

impl RationalChar {
    pub fn new(num: Laurent2, den: Vec<Weight2>) -> Result<Self, SeriesError> {
        if let Some(&d) = den.iter().find(|&&d| d == ONE2) {
            return Err(SeriesError::BadDenominator(d));
        }
        Ok(RationalChar { num, den })
    }

    pub fn polynomial(num: Laurent2) -> Self {
        RationalChar {
            num,
            den: Vec::new(),
        }
    }

    pub fn num(&self) -> &Laurent2 {
        &self.num
    }

    pub fn den(&self) -> &[Weight2] {
        &self.den
    }

    /// The bar involution `Q(t) ↦ Q(t^{-1})`: every exponent vector in the
    /// numerator and denominator is negated, and each denominator factor is
    /// brought back to `1 - t^d` normal form through
    /// `1 - t^{-d} = -t^{-d}(1 - t^d)`, which keeps the factor list and
    /// moves the sign and shift into the numerator.
    pub fn bar(&self) -> RationalChar {
        let mut num = self.num.bar();
        let sign = if self.den.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        let total: Weight2 = self.den.iter().fold(ONE2, |acc, &d| acc + d);
        num = num.translate(total);
        if sign < 0 {
            num = Laurent2 {
                entries: num.entries.iter().map(|(w, &c)| (*w, -c)).collect(),
            };
        }
        RationalChar {
            num,
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Laurent2) -> RationalChar {
        RationalChar {
            num: self.num.mul(p),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalChar) -> RationalChar {
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        RationalChar {
            num: self.num.mul(&other.num),
            den,
        }
    }

    /// Equality as rational functions, by cross-multiplying the denominator
    /// products. Exact; no expansion involved.
    pub fn eq_as_rational(&self, other: &RationalChar) -> bool {
        let lhs = other
            .den
            .iter()
            .fold(self.num.clone(), |acc, &d| acc.mul(&Laurent2::one_minus(d)));
        let rhs = self.den.iter().fold(other.num.clone(), |acc, &d| {
            acc.mul(&Laurent2::one_minus(d))
        });
        lhs == rhs
    }

    /// Formal expansion inside the box `[-bound, bound]^2`: every factor
    /// `1/(1 - t^d)` is the one-sided sum `Σ_{n≥0} t^{nd}`.
    ///
    /// The factor directions must be sign-compatible per coordinate (they
    /// span a cone in a strict half-plane), so a term that leaves the padded
    /// working box can never re-enter; this makes the truncation exact.
    pub fn expand_in_box(&self, bound: i64) -> Result<Laurent2, SeriesError> {
        for axis in 0..2 {
            let has_pos = self.den.iter().any(|d| d.0[axis] > 0);
            let has_neg = self.den.iter().any(|d| d.0[axis] < 0);
            if has_pos && has_neg {
                return Err(SeriesError::BadDenominator(
                    *self.den.iter().find(|d| d.0[axis] != 0).unwrap(),
                ));
            }
        }
        let pad = bound + self.num.max_abs_exponent() + 2;
        let mut cur = self.num.clone();
        for &d in &self.den {
            if d == ONE2 {
                return Err(SeriesError::BadDenominator(d));
            }
            let mut next = Laurent2::new();
            for (&start, &coeff) in cur.iter() {
                let mut n = 0i64;
                loop {
                    let pt = start + Weight2([n * d.0[0], n * d.0[1]]);
                    if pt.0[0].abs() > pad || pt.0[1].abs() > pad {
                        break;
                    }
                    next.insert(pt, coeff);
                    n += 1;
                }
            }
            cur = next;
        }
        // final restriction to the requested box
        let mut out = Laurent2::new();
        for (&w, &c) in cur.iter() {
            if w.0[0].abs() <= bound && w.0[1].abs() <= bound {
                out.insert(w, c);
            }
        }
        Ok(out)
    }
}

/// Chart coordinate characters `(v_α, w_α)` of the standard affine cover.
pub fn chart_coords(alpha: usize, inverted: bool) -> (Weight2, Weight2) {
    let (v, w) = match alpha {
        0 => (Weight2::new(1, 0), Weight2::new(0, 1)),
        1 => (Weight2::new(-1, 0), Weight2::new(-1, 1)),
        2 => (Weight2::new(0, -1), Weight2::new(1, -1)),
        _ => panic!("chart index must be 0, 1 or 2"),
    };
    if inverted {
        (-v, -w)
    } else {
        (v, w)
    }
}

/// Coordinate characters `(v_{αβ}, w_{αβ})` of the double intersections, in
/// the order 01, 12, 20. `v_{αβ}` is the direction of the bilateral sum.
pub fn intersection_coords(index: usize, inverted: bool) -> (Weight2, Weight2) {
    let (v, w) = match index {
        0 => (Weight2::new(1, 0), Weight2::new(0, 1)),
        1 => (Weight2::new(-1, 1), Weight2::new(-1, 0)),
        2 => (Weight2::new(0, -1), Weight2::new(1, -1)),
        _ => panic!("intersection index must be 0, 1 or 2"),
    };
    if inverted {
        (-v, -w)
    } else {
        (v, w)
    }
}

/// Section characters of a fixed sheaf over the three charts and three
/// double intersections. `numerators[α]` is the numerator `P_α` of
/// `Q_α = P_α / ((1 - v_α)(1 - w_α))`; the intersections carry the finite
/// part `Q_{αβ}` of the character `δ(v_{αβ}) Q_{αβ}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartData {
    numerators: [Laurent2; 3],
    intersections: [Laurent2; 3],
    /// When set, the whole datum lives in the inverted torus convention and
    /// all chart characters are negated; produced by [`ChartData::bar`].
    inverted: bool,
}

impl ChartData {
    pub fn new(numerators: [Laurent2; 3], intersections: [Laurent2; 3]) -> Self {
        ChartData {
            numerators,
            intersections,
            inverted: false,
        }
    }

    /// The rational section character `Q_α` of chart `α`.
    pub fn chart(&self, alpha: usize) -> RationalChar {
        let (v, w) = chart_coords(alpha, self.inverted);
        RationalChar {
            num: self.numerators[alpha].clone(),
            den: vec![v, w],
        }
    }

    pub fn intersection(&self, index: usize) -> &Laurent2 {
        &self.intersections[index]
    }

    /// The inversion pullback: all section characters and all chart
    /// coordinates are barred together.
    pub fn bar(&self) -> ChartData {
        ChartData {
            numerators: [
                self.numerators[0].bar(),
                self.numerators[1].bar(),
                self.numerators[2].bar(),
            ],
            intersections: [
                self.intersections[0].bar(),
                self.intersections[1].bar(),
                self.intersections[2].bar(),
            ],
            inverted: !self.inverted,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let raw: RawChartData =
            serde_json::from_str(text).map_err(|e| SeriesError::Json(e.to_string()))?;
        if raw.charts.len() != 3 || raw.intersections.len() != 3 {
            return Err(SeriesError::Json(
                "expected exactly 3 charts and 3 intersections".into(),
            ));
        }
        let mut numerators: [Laurent2; 3] = Default::default();
        for (alpha, chart) in raw.charts.iter().enumerate() {
            let (v, w) = chart_coords(alpha, false);
            let found: Vec<Weight2> = chart.den.iter().map(|d| Weight2::new(d[0], d[1])).collect();
            if found != vec![v, w] {
                return Err(SeriesError::WrongChartDenominator {
                    chart: alpha,
                    expected: format!("(1-{v})(1-{w})"),
                    found: found
                        .iter()
                        .map(|d| format!("(1-{d})"))
                        .collect::<Vec<_>>()
                        .join(""),
                });
            }
            let mut num = Laurent2::new();
            for &[a, b, c] in &chart.num {
                num.insert(Weight2::new(a, b), c);
            }
            numerators[alpha] = num;
        }
        let mut intersections: [Laurent2; 3] = Default::default();
        for (i, terms) in raw.intersections.iter().enumerate() {
            let mut q = Laurent2::new();
            for &[a, b, c] in terms {
                q.insert(Weight2::new(a, b), c);
            }
            intersections[i] = q;
        }
        Ok(ChartData::new(numerators, intersections))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let chart_json = |alpha: usize| {
            let (v, w) = chart_coords(alpha, self.inverted);
            serde_json::json!({
                "num": self.numerators[alpha]
                    .iter()
                    .map(|(wt, &c)| vec![wt.0[0], wt.0[1], c])
                    .collect::<Vec<_>>(),
                "den": [v.0, w.0],
            })
        };
        serde_json::json!({
            "charts": [chart_json(0), chart_json(1), chart_json(2)],
            "intersections": self
                .intersections
                .iter()
                .map(|q| q.iter().map(|(wt, &c)| vec![wt.0[0], wt.0[1], c]).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

#[derive(Deserialize)]
struct RawChartData {
    charts: Vec<RawChart>,
    intersections: Vec<Vec<[i64; 3]>>,
}

#[derive(Deserialize)]
struct RawChart {
    num: Vec<[i64; 3]>,
    den: Vec<[i64; 2]>,
}

/// Default truncation radius; all data shipped here has support in
/// `[-3, 3]^2`, so the margin is generous and catches mistakes instead of
/// masking them.
pub const DEFAULT_TRUNCATION: i64 = 20;

/// The Čech local-to-global alternating sum `χ(F,F)` as a finite signed
/// multiset, expanded inside the box `[-n, n]^2`.
pub fn chi_ff(data: &ChartData, n: i64) -> Result<Laurent2, SeriesError> {
    assert!(n >= 1, "truncation radius must be at least 1");
    let mut total = Laurent2::new();
    for alpha in 0..3 {
        let (v, w) = chart_coords(alpha, data.inverted);
        let q = data.chart(alpha);
        let term = q
            .mul(&q.bar())
            .mul_poly(&Laurent2::one_minus(-v))
            .mul_poly(&Laurent2::one_minus(-w));
        total = total.add(&term.expand_in_box(n)?);
    }
    for index in 0..3 {
        let (v, w) = intersection_coords(index, data.inverted);
        let q = data.intersection(index);
        let finite = q.mul(&q.bar()).mul(&Laurent2::one_minus(-w));
        // δ(v): the genuine bilateral sum along v
        let reach = n + finite.max_abs_exponent() + 2;
        for (&start, &coeff) in finite.iter() {
            for sgn in [1i64, -1] {
                let mut k = if sgn > 0 { 0 } else { 1 };
                loop {
                    let pt = start + Weight2([sgn * k * v.0[0], sgn * k * v.0[1]]);
                    if pt.0[0].abs() > reach || pt.0[1].abs() > reach {
                        break;
                    }
                    if pt.0[0].abs() <= n && pt.0[1].abs() <= n {
                        total.insert(pt, -coeff);
                    }
                    k += 1;
                }
            }
        }
    }
    // clean-margin check: the finite total must sit well inside the box
    let margin = n / 2;
    for (w, _) in total.iter() {
        if w.0[0].abs() > margin || w.0[1].abs() > margin {
            return Err(SeriesError::TruncationDirty(*w));
        }
    }
    Ok(total)
}

/// `Ext^1(F,F) = 1 - χ(F,F)`, asserted to be a true multiset.
pub fn ext1(data: &ChartData, n: i64) -> Result<Laurent2, SeriesError> {
    let chi = chi_ff(data, n)?;
    let result = Laurent2::one().sub(&chi);
    if let Some((&w, &c)) = result.iter().find(|(_, &c)| c < 0) {
        return Err(SeriesError::NotEffective(w, c));
    }
    Ok(result)
}

/// Plus-cell dimension under the limiting subgroup `λ(t) = (t, t^l)` with
/// `l` large: counts weights `t1^a t2^b` with `b > 0`, or `b = 0` and
/// `a > 0`.
pub fn plus_cell_dim(rep: &Laurent2) -> i64 {
    rep.iter()
        .filter(|(w, _)| w.0[1] > 0 || (w.0[1] == 0 && w.0[0] > 0))
        .map(|(_, &c)| c)
        .sum()
}

/// Shipped chart data fixtures, parsed from the JSON files under
/// `fixtures/`.
pub mod fixtures {
    use super::ChartData;

    /// The fixed sheaf supported on all three invariant lines whose two
    /// asymptotic weight spaces are two-dimensional.
    pub fn three_line_sheaf() -> ChartData {
        ChartData::from_json(include_str!("../fixtures/three_line_sheaf.json"))
            .expect("fixture parses")
    }

    /// A fixed sheaf supported on one thickened line with a rank-2 top row;
    /// derived from its weight-space strips.
    pub fn one_line_sheaf() -> ChartData {
        ChartData::from_json(include_str!("../fixtures/one_line_sheaf.json"))
            .expect("fixture parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w2(a: i64, b: i64) -> Weight2 {
        Weight2::new(a, b)
    }

    /// The golden 17-weight decomposition of `Ext^1(F,F)` for the
    /// three-line fixture.
    pub fn golden_ext1() -> Laurent2 {
        let mut e = Laurent2::new();
        for (a, b, c) in [
            (-1, 2, 1),
            (0, 1, 1),
            (-1, 1, 1),
            (1, 0, 1),
            (-1, 0, 1),
            (2, -1, 2),
            (1, -1, 4),
            (0, -1, 4),
            (-1, -1, 2),
        ] {
            e.insert(w2(a, b), c);
        }
        e
    }

    #[test]
    fn bar_is_an_involution() {
        let q = RationalChar::new(
            Laurent2::monomial(w2(2, -1), 3).add(&Laurent2::monomial(w2(0, 1), -1)),
            vec![w2(1, 0), w2(-1, 1)],
        )
        .unwrap();
        assert_eq!(q.bar().bar(), q);
        let p = RationalChar::polynomial(Laurent2::one());
        assert_eq!(p.bar(), p);
    }

    #[test]
    fn bar_of_chart_zero_matches_display_form() {
        // Q0 = 2/(1-t1) + t2/(1-t2); its bar equals
        // 2/(1-t1^{-1}) + t2^{-1}/(1-t2^{-1}) as a rational function
        let data = fixtures::three_line_sheaf();
        let q0 = data.chart(0);
        let lhs = q0.bar();
        // build the right-hand side over the common denominator (1-v)(1-w)
        // from factors expressed with inverted coordinates
        let term1 = RationalChar::new(Laurent2::monomial(ONE2, 2), vec![w2(-1, 0)]).unwrap();
        let term2 = RationalChar::new(Laurent2::monomial(w2(0, -1), 1), vec![w2(0, -1)]).unwrap();
        // sum: a/(1-u) + b/(1-s) = (a(1-s) + b(1-u)) / ((1-u)(1-s))
        let num = term1
            .num()
            .mul(&Laurent2::one_minus(w2(0, -1)))
            .add(&term2.num().mul(&Laurent2::one_minus(w2(-1, 0))));
        let rhs = RationalChar::new(num, vec![w2(-1, 0), w2(0, -1)]).unwrap();
        assert!(lhs.eq_as_rational(&rhs));
    }

    #[test]
    fn zero_denominator_rejected() {
        let err = RationalChar::new(Laurent2::one(), vec![ONE2]);
        assert_eq!(err, Err(SeriesError::BadDenominator(ONE2)));
    }

    #[test]
    fn geometric_series_expansion() {
        // 1/(1-t1) inside |a|,|b| <= 3: 1 + t1 + t1^2 + t1^3
        let q = RationalChar::new(Laurent2::one(), vec![w2(1, 0)]).unwrap();
        let e = q.expand_in_box(3).unwrap();
        assert_eq!(e.size(), 4);
        assert_eq!(e.coefficient(&w2(2, 0)), 1);
        assert_eq!(e.coefficient(&w2(-1, 0)), 0);
    }

    #[test]
    fn golden_ext1_reproduced() {
        let data = fixtures::three_line_sheaf();
        let e = ext1(&data, DEFAULT_TRUNCATION).unwrap();
        assert_eq!(e, golden_ext1());
        assert_eq!(e.size(), 17);
        assert_eq!(e.coefficient(&ONE2), 0);
        assert_eq!(plus_cell_dim(&e), 4);
    }

    #[test]
    fn chi_contains_one_trivial_character() {
        let data = fixtures::three_line_sheaf();
        let chi = chi_ff(&data, DEFAULT_TRUNCATION).unwrap();
        assert_eq!(chi.coefficient(&ONE2), 1);
        assert_eq!(chi.size(), -16);
    }

    #[test]
    fn zero_data_gives_trivial_ext1() {
        let data = ChartData::new(Default::default(), Default::default());
        assert_eq!(chi_ff(&data, 8).unwrap(), Laurent2::new());
        assert_eq!(ext1(&data, 8).unwrap(), Laurent2::one());
    }

    #[test]
    fn stable_under_truncation_doubling() {
        let data = fixtures::three_line_sheaf();
        let a = chi_ff(&data, DEFAULT_TRUNCATION).unwrap();
        let b = chi_ff(&data, 2 * DEFAULT_TRUNCATION).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn truncation_dirty_when_box_too_small() {
        let data = fixtures::three_line_sheaf();
        // radius 2 leaves no clean margin around the support
        assert!(matches!(
            chi_ff(&data, 2),
            Err(SeriesError::TruncationDirty(_))
        ));
    }

    #[test]
    fn bar_data_matches_barred_output() {
        let data = fixtures::three_line_sheaf();
        let chi = chi_ff(&data, DEFAULT_TRUNCATION).unwrap();
        let chi_barred = chi_ff(&data.bar(), DEFAULT_TRUNCATION).unwrap();
        assert_eq!(chi_barred, chi.bar());
    }

    #[test]
    fn witness_fixture_is_effective_dimension_17() {
        let data = fixtures::one_line_sheaf();
        let e = ext1(&data, DEFAULT_TRUNCATION).unwrap();
        assert!(e.is_effective());
        assert_eq!(e.size(), 17);
    }

    #[test]
    fn not_effective_detected() {
        // doubling all section characters keeps chi finite and clean but
        // quadruples it, so 1 - chi picks up a negative trivial coefficient
        let data = fixtures::three_line_sheaf();
        let double = |p: &Laurent2| p.add(p);
        let doubled = ChartData::new(
            [
                double(data.chart(0).num()),
                double(data.chart(1).num()),
                double(data.chart(2).num()),
            ],
            [
                double(data.intersection(0)),
                double(data.intersection(1)),
                double(data.intersection(2)),
            ],
        );
        assert!(matches!(
            ext1(&doubled, DEFAULT_TRUNCATION),
            Err(SeriesError::NotEffective(ONE2, -3))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let data = fixtures::three_line_sheaf();
        let text = data.to_json().to_string();
        let reparsed = ChartData::from_json(&text).unwrap();
        assert_eq!(reparsed, data);
    }

    #[test]
    fn wrong_denominator_rejected() {
        let bad = r#"{"charts":[{"num":[[0,0,1]],"den":[[0,1],[1,0]]},
            {"num":[],"den":[[-1,0],[-1,1]]},{"num":[],"den":[[0,-1],[1,-1]]}],
            "intersections":[[],[],[]]}"#;
        assert!(matches!(
            ChartData::from_json(bad),
            Err(SeriesError::WrongChartDenominator { chart: 0, .. })
        ));
    }
}
