//! Genericity of one-parameter subgroups, attracting-cell dimension counts,
//! and assembly of the Poincaré polynomial, Betti numbers, Hodge table and
//! Euler characteristic from the fixed-locus data.
//!
//! A subgroup `λ` is generic when it pairs nonzero with every nonzero weight
//! occurring in a tangent space at a fixed locus; then the fixed locus of the
//! induced `C*`-action equals the torus-fixed locus and the homology basis
//! decomposition applies: each isolated point contributes `x^{2p}`, each
//! fixed line contributes `(1 + x^2) x^{2p}`, where `p` is the number of
//! tangent weights pairing strictly positively.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::charlattice::{OneParamSubgroup, Weight};
use crate::tangent::TangentRep;

/// Real dimension of the moduli space is 17, so top homological degree is 34.
pub const TOP_DEGREE: usize = 34;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("one-parameter subgroup {lambda} is orthogonal to tangent weight {witness}")]
    NonGenericLambda {
        lambda: OneParamSubgroup,
        witness: Weight,
    },
}

/// The set of distinct nonzero weights occurring across a family of tangent
/// representations.
pub fn tangent_weight_support<'a, I>(reps: I) -> BTreeSet<Weight>
where
    I: IntoIterator<Item = &'a TangentRep>,
{
    let mut out = BTreeSet::new();
    for rep in reps {
        for w in rep.weights.weights() {
            if *w != Weight::new(0, 0, 0) {
                out.insert(*w);
            }
        }
    }
    out
}

/// Returns a nonzero weight orthogonal to `λ`, if any. `None` means `λ` is
/// generic for this weight support.
pub fn orthogonal_witness(lambda: &OneParamSubgroup, support: &BTreeSet<Weight>) -> Option<Weight> {
    support.iter().find(|w| lambda.pairing(w) == 0).copied()
}

/// Direct genericity test against a weight support.
pub fn is_generic(lambda: &OneParamSubgroup, support: &BTreeSet<Weight>) -> bool {
    orthogonal_witness(lambda, support).is_none()
}

/// Closed-form genericity test: the exponents must be pairwise distinct and
/// avoid every relation `n_i = n_j/2 + n_k/2`, `n_i = n_j/3 + 2n_k/3`,
/// `n_i = n_j/4 + 3n_k/4` over ordered distinct index triples.
pub fn is_generic_closed_form(lambda: &OneParamSubgroup) -> bool {
    let n = lambda.0;
    if n[0] == n[1] || n[0] == n[2] || n[1] == n[2] {
        return false;
    }
    const TRIPLES: [(usize, usize, usize); 6] = [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ];
    for (i, j, k) in TRIPLES {
        if 2 * n[i] == n[j] + n[k] || 3 * n[i] == n[j] + 2 * n[k] || 4 * n[i] == n[j] + 3 * n[k] {
            return false;
        }
    }
    true
}

/// Number of tangent weights pairing strictly positively with `λ`: the rank
/// of the attracting sub-bundle, i.e. the plus-cell dimension.
pub fn p_count(rep: &TangentRep, lambda: &OneParamSubgroup) -> i64 {
    rep.weights.pair_count_positive(lambda)
}

/// Number of tangent weights pairing strictly negatively with `λ`.
pub fn n_count(rep: &TangentRep, lambda: &OneParamSubgroup) -> i64 {
    rep.weights.pair_count_negative(lambda)
}

/// Which cell decomposition to assemble the polynomial from. Both give the
/// same polynomial, which the acceptance suite asserts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cell {
    Plus,
    Minus,
}

/// Kind of fixed-locus component feeding the homology basis formula.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentKind {
    /// An isolated fixed point, contributing `x^{2p}`.
    IsolatedPoint,
    /// A fixed line `≅ P^1`, contributing `(1 + x^2) x^{2p}`.
    Line,
}

/// The Poincaré polynomial of the moduli space: coefficients `b_0 .. b_34`,
/// odd entries kept explicitly (they are all zero; the homology has no odd
/// classes and no torsion).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoincarePolynomial {
    coeffs: Vec<i64>,
}

impl PoincarePolynomial {
    pub fn from_coefficients(coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), TOP_DEGREE + 1);
        PoincarePolynomial { coeffs }
    }

    pub fn coefficient(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Betti number `b_k`.
    pub fn betti(&self, k: usize) -> i64 {
        self.coefficient(k)
    }

    /// Value at `x = 1`: the topological Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Poincaré duality on the smooth projective moduli space.
    pub fn is_palindromic(&self) -> bool {
        (0..=TOP_DEGREE).all(|k| self.coefficient(k) == self.coefficient(TOP_DEGREE - k))
    }

    /// Compact text form, e.g. `x34+2x32+...+1`: descending degrees, unit
    /// coefficients omitted, `x^k` written `xk`.
    pub fn text(&self) -> String {
        let mut parts = Vec::new();
        for k in (0..=TOP_DEGREE).rev() {
            let c = self.coefficient(k);
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && k != 0 {
                String::new()
            } else {
                c.to_string()
            };
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x{k}"),
            };
            parts.push(format!("{coeff}{var}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// Assembles the Poincaré polynomial from the fixed components' tangent
/// representations, after checking `λ` is generic for exactly these weights.
pub fn poincare(
    components: &[(ComponentKind, &TangentRep)],
    lambda: &OneParamSubgroup,
    cell: Cell,
) -> Result<PoincarePolynomial, HomologyError> {
    let support = tangent_weight_support(components.iter().map(|(_, rep)| *rep));
    if let Some(witness) = orthogonal_witness(lambda, &support) {
        return Err(HomologyError::NonGenericLambda {
            lambda: *lambda,
            witness,
        });
    }
    let mut coeffs = vec![0i64; TOP_DEGREE + 1];
    for (kind, rep) in components {
        let count = match cell {
            Cell::Plus => p_count(rep, lambda),
            Cell::Minus => n_count(rep, lambda),
        } as usize;
        match kind {
            ComponentKind::IsolatedPoint => coeffs[2 * count] += 1,
            ComponentKind::Line => {
                coeffs[2 * count] += 1;
                coeffs[2 * count + 2] += 1;
            }
        }
    }
    Ok(PoincarePolynomial::from_coefficients(coeffs))
}

/// Hodge numbers: the table is diagonal with `h^{pp} = b_{2p}`.
pub fn hodge(poly: &PoincarePolynomial) -> Vec<Vec<i64>> {
    (0..=17)
        .map(|p| {
            (0..=17)
                .map(|q| if p == q { poly.betti(2 * p) } else { 0 })
                .collect()
        })
        .collect()
}
