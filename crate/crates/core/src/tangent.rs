//! Torus weight decomposition of the 17-dimensional tangent space at every
//! fixed locus, computed two independent ways:
//!
//!  * the tableau route: solve the equivariance `t φ = β(t) φ α(t)` for the
//!    diagonal pair `(α, β)`, list the weights of the ambient space of
//!    presentations and of the symmetry algebra, and subtract;
//!  * the closed-form route: per-family weight tables parameterized by the
//!    quartic exponents of `det φ`.
//!
//! Their equality at all fixed loci is the central consistency check of the
//! crate and is enforced by the acceptance suite.

use thiserror::Error;

use crate::charlattice::{sigma, sigma0, sigma_i, LatticeError, Weight, WeightMultiset, CHI0};
use crate::fixedpoints::{
    BaseKind, FixedLine, FixedPoint, M0Base, MonomialMatrix, ResolutionShape, VarPerm,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TangentError {
    /// The linear system `weight(entry) = β_r + α_c` has no solution; the
    /// matrix is not equivariant.
    #[error("inconsistent equivariance constraint at entry ({0},{1})")]
    Inconsistent(usize, usize),
    /// The nonzero-entry graph is disconnected, so the gauge class is not
    /// unique.
    #[error("equivariance system underdetermined: disconnected entry graph")]
    Underdetermined,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// The diagonal torus actions on source and target making a monomial matrix
/// equivariant: `weight(entry at (r, c)) = beta[r] + alpha[c]`, normalized so
/// the last `alpha` entry is the trivial character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivariance {
    pub shape: ResolutionShape,
    pub alpha: Vec<Weight>,
    pub beta: Vec<Weight>,
}

impl Equivariance {
    /// Re-gauges by a scalar character: `α ↦ α - χ`, `β ↦ β + χ`. Tangent
    /// output is invariant under this.
    pub fn regauge(&self, chi: Weight) -> Equivariance {
        Equivariance {
            shape: self.shape,
            alpha: self.alpha.iter().map(|&a| a - chi).collect(),
            beta: self.beta.iter().map(|&b| b + chi).collect(),
        }
    }
}

/// Solves `weight(entry) = beta[row] + alpha[col]` over the nonzero entries,
/// in the gauge `alpha.last() = 1`. Unique by connectivity of the entry
/// graph.
pub fn solve_equivariance(matrix: &MonomialMatrix) -> Result<Equivariance, TangentError> {
    let shape = matrix.shape();
    let (nr, nc) = (shape.rows(), shape.cols());
    let mut alpha: Vec<Option<Weight>> = vec![None; nc];
    let mut beta: Vec<Option<Weight>> = vec![None; nr];
    alpha[nc - 1] = Some(CHI0);
    loop {
        let mut progressed = false;
        for &(r, c, w) in matrix.entries() {
            match (beta[r], alpha[c]) {
                (None, Some(a)) => {
                    beta[r] = Some(w - a);
                    progressed = true;
                }
                (Some(b), None) => {
                    alpha[c] = Some(w - b);
                    progressed = true;
                }
                (Some(b), Some(a)) => {
                    if b + a != w {
                        return Err(TangentError::Inconsistent(r, c));
                    }
                }
                (None, None) => {}
            }
        }
        if !progressed {
            break;
        }
    }
    if alpha.iter().any(Option::is_none) || beta.iter().any(Option::is_none) {
        return Err(TangentError::Underdetermined);
    }
    Ok(Equivariance {
        shape,
        alpha: alpha.into_iter().map(Option::unwrap).collect(),
        beta: beta.into_iter().map(Option::unwrap).collect(),
    })
}

/// Weights of the ambient space of presentation matrices: cell `(r, c)`
/// contributes `σ^d` translated by `-β_r - α_c`, where `d` is the forced
/// entry degree.
fn ambient_tableau(eq: &Equivariance) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for r in 0..eq.shape.rows() {
        for c in 0..eq.shape.cols() {
            let d = eq.shape.entry_degree(r, c);
            debug_assert!(d > 0);
            out.extend_from(&sigma(d as u32).translate(-(eq.beta[r] + eq.alpha[c])));
        }
    }
    out
}

/// Weights of the symmetry algebra `(End(source) ⊕ End(target))/C`: the
/// `(r, s)` component of `End(⊕ O(e_i))` contributes `σ^{e_r - e_s}`
/// translated by the corresponding `α`- or `β`-ratio, and one trivial
/// character is removed for the scalar quotient.
fn symmetry_tableau(eq: &Equivariance) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    let source = eq.shape.source_twists();
    let target = eq.shape.target_twists();
    for r in 0..source.len() {
        for s in 0..source.len() {
            let d = source[r] - source[s];
            if d >= 0 {
                out.extend_from(&sigma(d as u32).translate(eq.alpha[r] - eq.alpha[s]));
            }
        }
    }
    for r in 0..target.len() {
        for s in 0..target.len() {
            let d = target[r] - target[s];
            if d >= 0 {
                out.extend_from(&sigma(d as u32).translate(eq.beta[s] - eq.beta[r]));
            }
        }
    }
    out.insert(CHI0, -1);
    out
}

/// Ambient weights for a 3×3 presentation; 36 weights.
pub fn w_tableau_m0(eq: &Equivariance) -> WeightMultiset {
    assert_eq!(eq.shape, ResolutionShape::ThreeByThree);
    ambient_tableau(eq)
}

/// Symmetry-algebra weights for a 3×3 presentation; 19 weights.
pub fn g_tableau_m0(eq: &Equivariance) -> WeightMultiset {
    assert_eq!(eq.shape, ResolutionShape::ThreeByThree);
    symmetry_tableau(eq)
}

/// Ambient weights for a 2×2 presentation; 26 weights.
pub fn w_tableau_m1(eq: &Equivariance) -> WeightMultiset {
    assert_eq!(eq.shape, ResolutionShape::TwoByTwo);
    ambient_tableau(eq)
}

/// Symmetry-algebra weights for a 2×2 presentation; 11 weights.
pub fn g_tableau_m1(eq: &Equivariance) -> WeightMultiset {
    assert_eq!(eq.shape, ResolutionShape::TwoByTwo);
    symmetry_tableau(eq)
}

/// The two weights of the normal directions of `M1` inside the moduli space:
/// `α_1 β_1 / t0 t1 t2` and `α_1 β_2 / t0 t1 t2`. Gauge invariant.
pub fn normal_weights_m1(eq: &Equivariance) -> WeightMultiset {
    assert_eq!(eq.shape, ResolutionShape::TwoByTwo);
    let shift = Weight::new(-1, -1, -1);
    let mut out = WeightMultiset::new();
    out.insert(eq.alpha[0] + eq.beta[0] + shift, 1);
    out.insert(eq.alpha[0] + eq.beta[1] + shift, 1);
    out
}

/// The tangent weight decomposition at a fixed locus: 17 degree-0 weights;
/// the trivial character appears exactly once on the fixed lines (and their
/// closure points) and never at isolated points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentRep {
    pub weights: WeightMultiset,
    pub zero_multiplicity: i64,
}

impl TangentRep {
    fn from_weights(weights: WeightMultiset) -> Self {
        let zero_multiplicity = weights.multiplicity(&CHI0);
        TangentRep {
            weights,
            zero_multiplicity,
        }
    }

    pub fn dim(&self) -> i64 {
        self.weights.size()
    }
}

/// A fixed locus: an isolated (or closure) point, or a fixed line computed
/// at its representative matrix.
#[derive(Clone, Copy, Debug)]
pub enum Locus<'a> {
    Point(&'a FixedPoint),
    Line(&'a FixedLine),
}

impl<'a> Locus<'a> {
    pub fn matrix(&self) -> &'a MonomialMatrix {
        match self {
            Locus::Point(p) => &p.matrix,
            Locus::Line(l) => &l.matrix,
        }
    }

    pub fn id_string(&self) -> String {
        match self {
            Locus::Point(p) => p.id_string(),
            Locus::Line(l) => l.id_string(),
        }
    }
}

/// Tangent representation by the tableau route: ambient weights minus
/// symmetry weights, plus the two normal weights on the `M1` stratum.
pub fn tangent_rep(locus: Locus<'_>) -> Result<TangentRep, TangentError> {
    let eq = solve_equivariance(locus.matrix())?;
    let weights = match eq.shape {
        ResolutionShape::ThreeByThree => w_tableau_m0(&eq).subtract_exact(&g_tableau_m0(&eq))?,
        ResolutionShape::TwoByTwo => {
            let inner = w_tableau_m1(&eq).subtract_exact(&g_tableau_m1(&eq))?;
            inner.union(&normal_weights_m1(&eq))
        }
    };
    Ok(TangentRep::from_weights(weights))
}

/// A head list plus translated `σ`-blocks, the shared shape of all closed
/// forms: `head ∪ (t^{-q}·(blocks) \ {1})`.
fn closed_form(
    head: WeightMultiset,
    blocks: &[(Weight, WeightMultiset)],
    q: Weight,
) -> WeightMultiset {
    let mut braced = WeightMultiset::new();
    for (shift, block) in blocks {
        braced.extend_from(&block.translate(*shift));
    }
    let braced = braced
        .translate(-q)
        .subtract_exact(&WeightMultiset::singleton(CHI0))
        .expect("closed-form block always contains the trivial character once");
    head.union(&braced)
}

fn s2i(axis: usize) -> WeightMultiset {
    sigma_i(2, axis).expect("degree 2 is valid")
}

fn s3i(axis: usize) -> WeightMultiset {
    sigma_i(3, axis).expect("degree 3 is valid")
}

/// Closed form for the base `M0` families, in base-chart coordinates.
fn table_m0_base(base: M0Base, q: Weight) -> WeightMultiset {
    let w = Weight::new;
    match base {
        M0Base::ThreeSimplePoints => closed_form(
            sigma0(),
            &[
                (w(1, 1, 0), s2i(2)),
                (w(1, 0, 1), s2i(1)),
                (w(0, 1, 1), s2i(0)),
                (w(1, 1, 1), sigma(1)),
            ],
            q,
        ),
        M0Base::DoublePlusSimple => {
            let mut head = sigma0()
                .subtract_exact(&WeightMultiset::singleton(w(0, 1, -1)))
                .expect("σ^0 contains t1/t2");
            head.insert(w(0, -2, 2), 1);
            closed_form(
                head,
                &[
                    (w(1, 1, 0), s2i(2)),
                    (w(1, 0, 1), s2i(1)),
                    (w(0, 2, 0), s2i(0)),
                    (w(1, 1, 1), sigma(1)),
                ],
                q,
            )
        }
        M0Base::TriplePoint => {
            let mut head = WeightMultiset::new();
            head.insert(w(1, -1, 0), 2);
            head.insert(w(1, 0, -1), 2);
            head.insert(w(1, -2, 1), 1);
            head.insert(w(1, 1, -2), 1);
            closed_form(
                head,
                &[
                    (w(0, 1, 1), sigma(2)),
                    (w(0, 2, 0), s2i(2)),
                    (w(0, 0, 2), s2i(1)),
                ],
                q,
            )
        }
    }
}

/// Closed form for the base `M01` family (`L = X`), in base-chart
/// coordinates; also the closed form along the base fixed line.
fn table_m01_base(q: Weight) -> WeightMultiset {
    let w = Weight::new;
    let mut head = WeightMultiset::new();
    head.insert(w(-1, 1, 0), 2);
    head.insert(w(-1, 0, 1), 2);
    head.insert(w(-1, 2, -1), 1);
    head.insert(w(-1, -1, 2), 1);
    closed_form(
        head,
        &[
            (w(1, 1, 0), s2i(0)),
            (w(1, 0, 1), s2i(0)),
            (w(2, 0, 0), sigma(2)),
        ],
        q,
    )
}

/// Closed form for the base `M1` family (`p = p2`), parameterized by the
/// quartic exponents of `det φ`.
fn table_m1_base(q: Weight) -> WeightMultiset {
    let w = Weight::new;
    let mut head = WeightMultiset::new();
    head.insert(w(-1, 0, 1), 1);
    head.insert(w(0, -1, 1), 1);
    head.insert(q + w(-2, -1, -1), 1);
    head.insert(q + w(-1, -2, -1), 1);
    closed_form(
        head,
        &[
            (w(1, 0, 0), s3i(1)),
            (w(0, 1, 0), s3i(0)),
            (w(1, 1, 0), sigma(2)),
        ],
        q,
    )
}

fn permuted(rep: WeightMultiset, perm: VarPerm) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (w, &m) in rep.iter() {
        out.insert(perm.apply(*w), m);
    }
    out
}

/// Tangent representation by the closed-form route: the family's table row
/// evaluated at the base quartic exponents, then pushed through the family's
/// variable permutation.
pub fn table_rep(locus: Locus<'_>) -> TangentRep {
    let (base_rep, perm) = match locus {
        Locus::Point(p) => {
            let rep = match p.base {
                BaseKind::M0(base) => table_m0_base(base, p.base_quartic),
                BaseKind::M01 => table_m01_base(p.base_quartic),
                BaseKind::M1 => table_m1_base(p.base_quartic),
            };
            (rep, p.perm)
        }
        Locus::Line(l) => (table_m01_base(l.perm.inverse().apply(l.quartic)), l.perm),
    };
    TangentRep::from_weights(permuted(base_rep, perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlattice::OneParamSubgroup;
    use crate::fixedpoints::{self, Inventory, ResolutionShape, SWAP_XY};

    fn w(a: i64, b: i64, c: i64) -> Weight {
        Weight::new(a, b, c)
    }

    /// First matrix of the three-simple-points family with quartic
    /// X^{i+1} Y^j Z^{k+1}: α = (t1/t0, t2/t0, 1), β = (t0, t0, t0^{i+1}
    /// t1^{j-1} t2^k).
    #[test]
    fn solve_three_simple_points() {
        let m = MonomialMatrix::new(
            ResolutionShape::ThreeByThree,
            vec![
                (0, 0, w(0, 1, 0)),
                (0, 2, w(1, 0, 0)),
                (1, 1, w(0, 0, 1)),
                (1, 2, w(1, 0, 0)),
                (2, 0, w(1, 1, 0)), // X Y, i.e. (i,j,k) = (1,1,0)
            ],
        )
        .unwrap();
        let eq = solve_equivariance(&m).unwrap();
        assert_eq!(eq.alpha, vec![w(-1, 1, 0), w(-1, 0, 1), CHI0]);
        assert_eq!(eq.beta, vec![w(1, 0, 0), w(1, 0, 0), w(2, 0, 0)]);
    }

    /// First `M1` matrix kind: β = (t0, t1), α = (t0^{i-1} t1^j t2^k, 1).
    #[test]
    fn solve_m1_first_kind() {
        let m = MonomialMatrix::new(
            ResolutionShape::TwoByTwo,
            vec![(0, 0, w(2, 0, 1)), (0, 1, w(1, 0, 0)), (1, 1, w(0, 1, 0))],
        )
        .unwrap();
        let eq = solve_equivariance(&m).unwrap();
        assert_eq!(eq.beta, vec![w(1, 0, 0), w(0, 1, 0)]);
        assert_eq!(eq.alpha, vec![w(1, 0, 1), CHI0]);
    }

    /// The fixed-line family with deformation parameter present: β =
    /// (t1, t2, t1^2 t2 / t0), α = (t0/t1, t0/t2, 1).
    #[test]
    fn solve_line_family_with_parameter() {
        let m = MonomialMatrix::new(
            ResolutionShape::ThreeByThree,
            vec![
                (0, 0, w(1, 0, 0)),
                (0, 2, w(0, 1, 0)),
                (1, 1, w(1, 0, 0)),
                (1, 2, w(0, 0, 1)),
                (2, 0, w(0, 1, 1)),
                (2, 1, w(0, 2, 0)),
            ],
        )
        .unwrap();
        let eq = solve_equivariance(&m).unwrap();
        assert_eq!(eq.beta, vec![w(0, 1, 0), w(0, 0, 1), w(-1, 2, 1)]);
        assert_eq!(eq.alpha, vec![w(1, -1, 0), w(1, 0, -1), CHI0]);
    }

    #[test]
    fn trivial_equivariance_gives_raw_sigma_blocks() {
        let eq = Equivariance {
            shape: ResolutionShape::ThreeByThree,
            alpha: vec![CHI0; 3],
            beta: vec![CHI0; 3],
        };
        let mut expected = sigma(1).scale_multiplicity(6);
        expected.extend_from(&sigma(2).scale_multiplicity(3));
        assert_eq!(w_tableau_m0(&eq), expected);
    }

    #[test]
    fn inconsistent_matrix_rejected() {
        // degrees and connectivity fine, but the four constraints conflict
        let m = MonomialMatrix::new(
            ResolutionShape::TwoByTwo,
            vec![
                (0, 0, w(3, 0, 0)),
                (0, 1, w(1, 0, 0)),
                (1, 0, w(0, 3, 0)),
                (1, 1, w(0, 1, 0)),
            ],
        )
        .unwrap();
        assert!(matches!(
            solve_equivariance(&m),
            Err(TangentError::Inconsistent(_, _))
        ));
    }

    #[test]
    fn tableau_sizes() {
        let inv = Inventory::enumerate();
        for p in &inv.points {
            let eq = solve_equivariance(&p.matrix).unwrap();
            match eq.shape {
                ResolutionShape::ThreeByThree => {
                    assert_eq!(w_tableau_m0(&eq).size(), 36);
                    assert_eq!(g_tableau_m0(&eq).size(), 19);
                }
                ResolutionShape::TwoByTwo => {
                    assert_eq!(w_tableau_m1(&eq).size(), 26);
                    let g = g_tableau_m1(&eq).size();
                    assert_eq!(g, 11);
                }
            }
        }
    }

    /// The displayed specialization of the ambient and symmetry arrays for
    /// the first three-simple-points matrix with (i,j,k) = (1,1,0).
    #[test]
    fn example_arrays_reproduced() {
        let m = MonomialMatrix::new(
            ResolutionShape::ThreeByThree,
            vec![
                (0, 0, w(0, 1, 0)),
                (0, 2, w(1, 0, 0)),
                (1, 1, w(0, 0, 1)),
                (1, 2, w(1, 0, 0)),
                (2, 0, w(1, 1, 0)),
            ],
        )
        .unwrap();
        let eq = solve_equivariance(&m).unwrap();
        let (i, j, k) = (1i64, 1i64, 0i64);
        // ambient: rows 1-2 are t1^{-1}σ^1, t2^{-1}σ^1, t0^{-1}σ^1; row 3 is
        // t^{-(i,j,k)}σ^2, t0^{-i}t1^{1-j}t2^{-1-k}σ^2, t0^{-1-i}t1^{1-j}t2^{-k}σ^2
        let mut expected = WeightMultiset::new();
        for shift in [w(0, -1, 0), w(0, 0, -1), w(-1, 0, 0)] {
            expected.extend_from(&sigma(1).translate(shift));
            expected.extend_from(&sigma(1).translate(shift));
        }
        for shift in [w(-i, -j, -k), w(-i, 1 - j, -1 - k), w(-1 - i, 1 - j, -k)] {
            expected.extend_from(&sigma(2).translate(shift));
        }
        assert_eq!(w_tableau_m0(&eq), expected);

        // symmetry: the displayed array has the six α-ratios, seven trivial
        // characters (α-diagonal, β-diagonal, both β-ratios since β1 = β2,
        // minus the scalar quotient), and two copies of t0^{-i}t1^{1-j}t2^{-k}σ^1
        let mut expected = WeightMultiset::new();
        for ratio in [
            w(0, 1, -1),
            w(-1, 1, 0),
            w(0, -1, 1),
            w(-1, 0, 1),
            w(1, -1, 0),
            w(1, 0, -1),
        ] {
            expected.insert(ratio, 1);
        }
        expected.insert(CHI0, 3 + 3 + 2 - 1);
        let b3 = sigma(1).translate(w(-i, 1 - j, -k));
        expected.extend_from(&b3);
        expected.extend_from(&b3);
        assert_eq!(g_tableau_m0(&eq), expected);
    }

    #[test]
    fn normal_weights_examples() {
        // first kind, matrix parameters (i,j,k): weights t0^{i-1}t1^{j-1}t2^{k-1}
        // and t0^{i-2}t1^{j}t2^{k-1}
        let m = MonomialMatrix::new(
            ResolutionShape::TwoByTwo,
            vec![(0, 0, w(1, 0, 2)), (0, 1, w(1, 0, 0)), (1, 1, w(0, 1, 0))],
        )
        .unwrap();
        let eq = solve_equivariance(&m).unwrap();
        let n = normal_weights_m1(&eq);
        assert_eq!(n.multiplicity(&w(0, -1, 1)), 1); // (i,j,k) = (1,0,2)
        assert_eq!(n.multiplicity(&w(-1, 0, 1)), 1);
        // second kind with X^i Z^k = Z^3: t0^i t1^{-2} t2^{k-1}, t0^{i-1} t1^{-1} t2^{k-1}
        let m = MonomialMatrix::new(
            ResolutionShape::TwoByTwo,
            vec![(0, 1, w(1, 0, 0)), (1, 0, w(0, 0, 3)), (1, 1, w(0, 1, 0))],
        )
        .unwrap();
        let eq = solve_equivariance(&m).unwrap();
        let n = normal_weights_m1(&eq);
        assert_eq!(n.multiplicity(&w(0, -2, 2)), 1);
        assert_eq!(n.multiplicity(&w(-1, -1, 2)), 1);
        // gauge invariance of the normal weights
        let re = eq.regauge(w(3, -2, 5));
        assert_eq!(normal_weights_m1(&re), n);
    }

    #[test]
    fn tangent_equals_table_everywhere() {
        let inv = Inventory::enumerate();
        for p in &inv.points {
            let t = tangent_rep(Locus::Point(p)).unwrap();
            let tb = table_rep(Locus::Point(p));
            assert_eq!(t, tb, "{}", p.id_string());
            assert_eq!(t.dim(), 17);
            assert!(t.weights.weights().all(|w| w.degree() == 0));
            let expected_zero = if p.isolated { 0 } else { 1 };
            assert_eq!(t.zero_multiplicity, expected_zero, "{}", p.id_string());
        }
        for l in &inv.lines {
            let t = tangent_rep(Locus::Line(l)).unwrap();
            let tb = table_rep(Locus::Line(l));
            assert_eq!(t, tb, "{}", l.id_string());
            assert_eq!(t.dim(), 17);
            assert_eq!(t.zero_multiplicity, 1);
        }
    }

    /// The tangent representation is constant along each fixed line: the
    /// line's representative matrix and the closure point's matrix give the
    /// same multiset.
    #[test]
    fn line_rep_matches_closure_point_rep() {
        let inv = Inventory::enumerate();
        for l in &inv.lines {
            let closure = inv
                .points
                .iter()
                .find(|p| {
                    !p.isolated
                        && p.quartic == l.closure_point.quartic
                        && p.perm.apply_var(2) == l.closure_point.point
                })
                .expect("closure point present in inventory");
            let a = tangent_rep(Locus::Line(l)).unwrap();
            let b = tangent_rep(Locus::Point(closure)).unwrap();
            assert_eq!(a, b, "{}", l.id_string());
        }
    }

    #[test]
    fn gauge_invariance() {
        let inv = Inventory::enumerate();
        let p = &inv.points[37];
        let eq = solve_equivariance(&p.matrix).unwrap();
        // re-gauge so the first alpha entry is trivial instead of the last
        let re = eq.regauge(eq.alpha[0]);
        assert_eq!(re.alpha[0], CHI0);
        let a = w_tableau_m0(&eq)
            .subtract_exact(&g_tableau_m0(&eq))
            .unwrap();
        let b = w_tableau_m0(&re)
            .subtract_exact(&g_tableau_m0(&re))
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn permutation_equivariance() {
        let inv = Inventory::enumerate();
        for p in inv.points.iter().step_by(17) {
            let base_rep = tangent_rep(Locus::Point(p)).unwrap();
            let permuted_matrix = p.matrix.apply_perm(SWAP_XY);
            let eq = solve_equivariance(&permuted_matrix).unwrap();
            let permuted_rep = match eq.shape {
                ResolutionShape::ThreeByThree => w_tableau_m0(&eq)
                    .subtract_exact(&g_tableau_m0(&eq))
                    .unwrap(),
                ResolutionShape::TwoByTwo => w_tableau_m1(&eq)
                    .subtract_exact(&g_tableau_m1(&eq))
                    .unwrap()
                    .union(&normal_weights_m1(&eq)),
            };
            let mut expected = WeightMultiset::new();
            for (w, &m) in base_rep.weights.iter() {
                expected.insert(SWAP_XY.apply(*w), m);
            }
            assert_eq!(permuted_rep, expected);
        }
    }

    /// Row 1 of the closed-form table at any quartic: σ^0 together with the
    /// translated degree-2 blocks, with one trivial character removed.
    #[test]
    fn table_rows_spot_checks() {
        // triple-point family head: t0·(t1^{-1}, t1^{-1}, t2^{-1}, t2^{-1},
        // t1^{-2}t2, t1 t2^{-2})
        let rep = table_m0_base(M0Base::TriplePoint, w(0, 3, 1));
        for &(wt, m) in [
            (w(1, -1, 0), 2i64),
            (w(1, 0, -1), 2),
            (w(1, -2, 1), 1),
            (w(1, 1, -2), 1),
        ]
        .iter()
        {
            assert!(rep.multiplicity(&wt) >= m);
        }
        // M01 head: t0^{-1}·(t1, t1, t2, t2, t1^2 t2^{-1}, t1^{-1} t2^2)
        let rep = table_m01_base(w(4, 0, 0));
        assert!(rep.multiplicity(&w(-1, 1, 0)) >= 2);
        assert!(rep.multiplicity(&w(-1, -1, 2)) >= 1);
        assert_eq!(rep.size(), 17);
    }

    /// Plus-cell dimensions of the three-simple-points family at
    /// λ = (0, 1, 5), in table order.
    #[test]
    fn first_family_p_counts() {
        let lam = OneParamSubgroup::new(0, 1, 5);
        let pts = fixedpoints::enumerate_m0_points();
        let row: Vec<i64> = pts[..12]
            .iter()
            .map(|p| {
                tangent_rep(Locus::Point(p))
                    .unwrap()
                    .weights
                    .pair_count_positive(&lam)
            })
            .collect();
        assert_eq!(row, vec![14, 11, 12, 8, 4, 3, 13, 7, 5, 10, 9, 6]);
    }
}
