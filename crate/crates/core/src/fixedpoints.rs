//! Enumeration of the torus-fixed locus of the moduli space: 180 isolated
//! points (120 in `M0 \ M01`, 24 in `M01`, 36 in `M1`) and 6 fixed lines
//! isomorphic to `P^1`, each presented by a monomial matrix.
//!
//! Every family is stored once in a base chart; the permuted families are
//! obtained by applying the variable permutation to every matrix entry and to
//! the identifying data, so there is a single source of truth per family.
//! The enumeration order is canonical: within each family the quartics follow
//! a fixed list, so the localization index tables are reproduced positionally.

use std::fmt;

use thiserror::Error;

use crate::charlattice::Weight;

/// A permutation of the three homogeneous variables `X, Y, Z`; `map[i]` is
/// the image of variable `i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VarPerm(pub [usize; 3]);

pub const IDENT: VarPerm = VarPerm([0, 1, 2]);
pub const SWAP_XY: VarPerm = VarPerm([1, 0, 2]);
pub const SWAP_XZ: VarPerm = VarPerm([2, 1, 0]);
pub const SWAP_YZ: VarPerm = VarPerm([0, 2, 1]);
/// `X → Y → Z → X`.
pub const ROT_XYZ: VarPerm = VarPerm([1, 2, 0]);
/// `X → Z → Y → X`.
pub const ROT_XZY: VarPerm = VarPerm([2, 0, 1]);

impl VarPerm {
    /// Image of an exponent vector: the exponent of `x_{map[i]}` in the image
    /// is the exponent of `x_i` in the argument.
    pub fn apply(&self, w: Weight) -> Weight {
        let mut out = [0i64; 3];
        for i in 0..3 {
            out[self.0[i]] = w.0[i];
        }
        Weight(out)
    }

    pub fn apply_var(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn inverse(&self) -> VarPerm {
        let mut out = [0usize; 3];
        for i in 0..3 {
            out[self.0[i]] = i;
        }
        VarPerm(out)
    }
}

/// Which locally free resolution presents the sheaf.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ResolutionShape {
    /// `0 → 3 O(-2) → 2 O(-1) ⊕ O → F → 0`, a 3×3 matrix of forms.
    ThreeByThree,
    /// `0 → O(-3) ⊕ O(-1) → 2 O → F → 0`, a 2×2 matrix.
    TwoByTwo,
}

impl ResolutionShape {
    pub fn rows(&self) -> usize {
        match self {
            ResolutionShape::ThreeByThree => 3,
            ResolutionShape::TwoByTwo => 2,
        }
    }

    pub fn cols(&self) -> usize {
        self.rows()
    }

    /// Twists of the target bundle summands, one per row.
    pub fn target_twists(&self) -> &'static [i64] {
        match self {
            ResolutionShape::ThreeByThree => &[-1, -1, 0],
            ResolutionShape::TwoByTwo => &[0, 0],
        }
    }

    /// Twists of the source bundle summands, one per column.
    pub fn source_twists(&self) -> &'static [i64] {
        match self {
            ResolutionShape::ThreeByThree => &[-2, -2, -2],
            ResolutionShape::TwoByTwo => &[-3, -1],
        }
    }

    /// Forced degree of a nonzero entry at `(row, col)`.
    pub fn entry_degree(&self, row: usize, col: usize) -> i64 {
        self.target_twists()[row] - self.source_twists()[col]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("entry at ({row},{col}) has degree {found}, expected {expected}")]
    WrongDegree {
        row: usize,
        col: usize,
        expected: i64,
        found: i64,
    },
    #[error("entry at ({row},{col}) is not a monomial")]
    NotMonomial { row: usize, col: usize },
    #[error("duplicate entry at ({row},{col})")]
    DuplicateEntry { row: usize, col: usize },
    #[error("the nonzero-entry graph on rows and columns is disconnected")]
    Disconnected,
    #[error("the determinant is not a single monomial")]
    IndeterminateDeterminant,
}

/// A matrix whose entries are zero or a single monomial (signs are dropped;
/// determinants are monomials up to sign).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialMatrix {
    shape: ResolutionShape,
    entries: Vec<(usize, usize, Weight)>,
}

impl MonomialMatrix {
    pub fn new(
        shape: ResolutionShape,
        mut entries: Vec<(usize, usize, Weight)>,
    ) -> Result<Self, MatrixError> {
        entries.sort_by_key(|&(r, c, _)| (r, c));
        for window in entries.windows(2) {
            if window[0].0 == window[1].0 && window[0].1 == window[1].1 {
                return Err(MatrixError::DuplicateEntry {
                    row: window[0].0,
                    col: window[0].1,
                });
            }
        }
        for &(r, c, w) in &entries {
            if !w.is_monomial() {
                return Err(MatrixError::NotMonomial { row: r, col: c });
            }
            let expected = shape.entry_degree(r, c);
            if w.degree() != expected {
                return Err(MatrixError::WrongDegree {
                    row: r,
                    col: c,
                    expected,
                    found: w.degree(),
                });
            }
        }
        let m = MonomialMatrix { shape, entries };
        if !m.is_connected() {
            return Err(MatrixError::Disconnected);
        }
        Ok(m)
    }

    pub fn shape(&self) -> ResolutionShape {
        self.shape
    }

    pub fn entries(&self) -> &[(usize, usize, Weight)] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<Weight> {
        self.entries
            .iter()
            .find(|&&(r, c, _)| r == row && c == col)
            .map(|&(_, _, w)| w)
    }

    /// Connectivity of the bipartite graph on rows and columns with an edge
    /// per nonzero entry. This is exactly what makes the equivariance system
    /// determined up to one scalar gauge.
    pub fn is_connected(&self) -> bool {
        let nr = self.shape.rows();
        let nc = self.shape.cols();
        let n = nr + nc;
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(r, c, _) in &self.entries {
                let (a, b) = (r, nr + c);
                if v == a && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                } else if v == b && !seen[a] {
                    seen[a] = true;
                    stack.push(a);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The determinant as a monomial exponent vector (sign discarded). All
    /// matrices in the inventory have exactly one nonvanishing permutation
    /// product, so this is exact.
    pub fn det_monomial(&self) -> Result<Weight, MatrixError> {
        let n = self.shape.rows();
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut idx: Vec<usize> = (0..n).collect();
        permutations(&mut idx, 0, &mut perms);
        let mut found = None;
        for p in &perms {
            let mut total = Weight::new(0, 0, 0);
            let mut complete = true;
            for (r, &c) in p.iter().enumerate() {
                match self.entry(r, c) {
                    Some(w) => total = total + w,
                    None => {
                        complete = false;
                        break;
                    }
                }
            }
            if complete {
                if found.is_some() {
                    return Err(MatrixError::IndeterminateDeterminant);
                }
                found = Some(total);
            }
        }
        found.ok_or(MatrixError::IndeterminateDeterminant)
    }

    pub fn apply_perm(&self, p: VarPerm) -> MonomialMatrix {
        MonomialMatrix {
            shape: self.shape,
            entries: self
                .entries
                .iter()
                .map(|&(r, c, w)| (r, c, p.apply(w)))
                .collect(),
        }
    }

    /// Entry strings in `X, Y, Z` notation, row-major, `"0"` for empty cells.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        (0..self.shape.rows())
            .map(|r| {
                (0..self.shape.cols())
                    .map(|c| match self.entry(r, c) {
                        Some(w) => xyz_monomial(&w),
                        None => "0".to_string(),
                    })
                    .collect()
            })
            .collect()
    }
}

fn permutations(idx: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == idx.len() {
        out.push(idx.clone());
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permutations(idx, k + 1, out);
        idx.swap(k, i);
    }
}

/// Formats a monomial exponent vector in the homogeneous variables, e.g.
/// `X^3*Y` for `(3,1,0)`.
pub fn xyz_monomial(w: &Weight) -> String {
    assert!(w.is_monomial());
    let names = ["X", "Y", "Z"];
    let mut parts = Vec::new();
    for (i, &e) in w.0.iter().enumerate() {
        if e == 1 {
            parts.push(names[i].to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", names[i], e));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Stratum of the moduli space a fixed sheaf belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stratum {
    M0MinusM01,
    M01,
    M1,
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::M0MinusM01 => write!(f, "M0_minus_M01"),
            Stratum::M01 => write!(f, "M01"),
            Stratum::M1 => write!(f, "M1"),
        }
    }
}

/// The three base families of `M0 \ M01`, named by the shape of the length-3
/// scheme `S`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum M0Base {
    /// `S` = three simple points, `I_S = (XY, XZ, YZ)`.
    ThreeSimplePoints,
    /// `S` = double point plus a simple point, `I_S = (XY, XZ, Y^2)`.
    DoublePlusSimple,
    /// `S` = one triple point, `I_S = (YZ, Y^2, Z^2)`.
    TriplePoint,
}

/// Which base family and chart permutation a fixed locus comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseKind {
    M0(M0Base),
    /// Extension of a line by a cubic, base chart `L = {X = 0}`.
    M01,
    /// Kernel of `O_Q(1) → C_p`, base chart `p = p2`.
    M1,
}

/// A torus-fixed sheaf, isolated or not, with its monomial presentation.
#[derive(Clone, Debug)]
pub struct FixedPoint {
    pub stratum: Stratum,
    /// Family key, as printed in the weight tables (the ideal of `S`, the
    /// line `L`, or the ideal of `p`).
    pub family: &'static str,
    pub base: BaseKind,
    pub perm: VarPerm,
    /// Quartic exponents in the base chart.
    pub base_quartic: Weight,
    /// Quartic exponents `(i, j, k)` of `det φ`; `perm` applied to
    /// `base_quartic`.
    pub quartic: Weight,
    pub matrix: MonomialMatrix,
    /// False exactly for the six `M1` points absorbed by line closures.
    pub isolated: bool,
}

impl FixedPoint {
    /// Number of distinct variables in the quartic, i.e. how many of the
    /// three invariant lines support the sheaf.
    pub fn support_line_count(&self) -> usize {
        self.quartic.support_size()
    }

    pub fn id_string(&self) -> String {
        format!(
            "{} {} {}",
            self.stratum,
            self.family,
            xyz_monomial(&self.quartic)
        )
    }
}

/// Identifier of the closure point absorbed by a fixed line: the coordinate
/// point index `p ∈ {0, 1, 2}` and the quartic of the `M1` sheaf there.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClosurePoint {
    pub point: usize,
    pub quartic: Weight,
}

/// A fixed line `Λ ≅ P^1` of extension sheaves, presented by one
/// representative matrix of its affine chart.
#[derive(Clone, Debug)]
pub struct FixedLine {
    /// Index of the variable cutting out the line `L`.
    pub line: usize,
    /// Cubic exponents of `C` (so the quartic is `L·C`).
    pub cubic: Weight,
    pub quartic: Weight,
    pub perm: VarPerm,
    pub matrix: MonomialMatrix,
    pub closure_point: ClosurePoint,
}

impl FixedLine {
    pub fn id_string(&self) -> String {
        format!(
            "line ({}, {})",
            ["X", "Y", "Z"][self.line],
            xyz_monomial(&self.cubic)
        )
    }
}

const fn w(a: i64, b: i64, c: i64) -> Weight {
    Weight::new(a, b, c)
}

/// Quartic lists per family, in canonical (table) order.
#[rustfmt::skip]
pub const SLIST_THREE_SIMPLE: [Weight; 12] = [
    w(3, 1, 0), w(3, 0, 1), w(1, 3, 0), w(0, 3, 1), w(1, 0, 3), w(0, 1, 3),
    w(2, 2, 0), w(2, 0, 2), w(0, 2, 2), w(2, 1, 1), w(1, 2, 1), w(1, 1, 2),
];
#[rustfmt::skip]
pub const SLIST_DOUBLE_SIMPLE: [Weight; 12] = [
    w(0, 4, 0), w(3, 1, 0), w(3, 0, 1), w(1, 3, 0), w(0, 3, 1), w(1, 0, 3),
    w(2, 2, 0), w(2, 0, 2), w(0, 2, 2), w(2, 1, 1), w(1, 2, 1), w(1, 1, 2),
];
#[rustfmt::skip]
pub const SLIST_TRIPLE: [Weight; 12] = [
    w(0, 4, 0), w(0, 0, 4), w(1, 3, 0), w(0, 3, 1), w(1, 0, 3), w(0, 1, 3),
    w(2, 2, 0), w(2, 0, 2), w(0, 2, 2), w(2, 1, 1), w(1, 2, 1), w(1, 1, 2),
];
#[rustfmt::skip]
pub const SLIST_M01: [Weight; 8] = [
    w(4, 0, 0), w(3, 1, 0), w(3, 0, 1), w(2, 2, 0), w(2, 0, 2), w(2, 1, 1),
    w(1, 3, 0), w(1, 0, 3),
];
#[rustfmt::skip]
pub const SLIST_M1: [Weight; 12] = [
    w(4, 0, 0), w(0, 4, 0), w(3, 1, 0), w(3, 0, 1), w(1, 3, 0), w(0, 3, 1),
    w(1, 0, 3), w(0, 1, 3), w(2, 2, 0), w(2, 0, 2), w(0, 2, 2), w(1, 1, 2),
];
/// Base-chart quartics of the two `M1` sheaves at `p2` that are closures of
/// fixed lines rather than isolated fixed points.
pub const M1_CLOSURE_QUARTICS: [Weight; 2] = [w(1, 2, 1), w(2, 1, 1)];

/// The ten family rows of `M0 \ M01` in table order.
pub const M0_ROWS: [(&str, M0Base, VarPerm); 10] = [
    ("(XY, XZ, YZ)", M0Base::ThreeSimplePoints, IDENT),
    ("(XY, XZ, Y^2)", M0Base::DoublePlusSimple, IDENT),
    ("(YZ, XZ, Y^2)", M0Base::DoublePlusSimple, SWAP_XZ),
    ("(XY, XZ, Z^2)", M0Base::DoublePlusSimple, SWAP_YZ),
    ("(XY, YZ, Z^2)", M0Base::DoublePlusSimple, ROT_XYZ),
    ("(XY, YZ, X^2)", M0Base::DoublePlusSimple, SWAP_XY),
    ("(XZ, YZ, X^2)", M0Base::DoublePlusSimple, ROT_XZY),
    ("(YZ, Y^2, Z^2)", M0Base::TriplePoint, IDENT),
    ("(XZ, X^2, Z^2)", M0Base::TriplePoint, SWAP_XY),
    ("(XY, X^2, Y^2)", M0Base::TriplePoint, SWAP_XZ),
];

/// The three family rows of `M01` (isolated points), labeled by `L`.
pub const M01_ROWS: [(&str, VarPerm); 3] = [("X", IDENT), ("Y", SWAP_XY), ("Z", SWAP_XZ)];

/// The six fixed lines in canonical order: the base line `(X, Y^2 Z)` under
/// the identity, the two transpositions fixing its closure-point pattern,
/// then the reflected line `(X, Y Z^2)` family via the remaining
/// permutations.
pub const LINE_ROWS: [VarPerm; 6] = [IDENT, SWAP_XY, SWAP_XZ, SWAP_YZ, ROT_XYZ, ROT_XZY];

/// The three family rows of `M1`, labeled by the ideal of `p`.
pub const M1_ROWS: [(&str, VarPerm); 3] =
    [("(X, Y)", IDENT), ("(X, Z)", SWAP_YZ), ("(Y, Z)", SWAP_XZ)];

/// Ideal generators of the base families (for membership cross-checks).
pub fn base_ideal(base: M0Base) -> [Weight; 3] {
    match base {
        M0Base::ThreeSimplePoints => [w(1, 1, 0), w(1, 0, 1), w(0, 1, 1)],
        M0Base::DoublePlusSimple => [w(1, 1, 0), w(1, 0, 1), w(0, 2, 0)],
        M0Base::TriplePoint => [w(0, 1, 1), w(0, 2, 0), w(0, 0, 2)],
    }
}

const X: Weight = w(1, 0, 0);
const Y: Weight = w(0, 1, 0);
const Z: Weight = w(0, 0, 1);

/// Base-chart matrix of an `M0 \ M01` point. Each family has three matrix
/// shapes; the quartic determines the shape through which exponent slot can
/// realize it, and `det` of the result is the quartic up to sign.
fn base_m0_matrix(base: M0Base, q: Weight) -> MonomialMatrix {
    let [i, j, k] = q.0;
    let entries = match base {
        M0Base::ThreeSimplePoints => {
            let frame = [(0, 0, Y), (0, 2, X), (1, 1, Z), (1, 2, X)];
            let slot = if i >= 1 && k >= 1 {
                (2, 0, w(i - 1, j, k - 1))
            } else if k == 0 {
                (2, 1, w(i - 1, j - 1, 0))
            } else {
                (2, 2, w(0, j - 1, k - 1))
            };
            frame.iter().copied().chain([slot]).collect()
        }
        M0Base::DoublePlusSimple => {
            let frame = [(0, 0, X), (0, 2, Y), (1, 1, Y), (1, 2, Z)];
            let slot = if i >= 1 && j >= 1 {
                (2, 2, w(i - 1, j - 1, k))
            } else if j == 0 {
                (2, 1, w(i - 1, 0, k - 1))
            } else {
                (2, 0, w(0, j - 2, k))
            };
            frame.iter().copied().chain([slot]).collect()
        }
        M0Base::TriplePoint => {
            let frame = [(0, 0, Y), (0, 2, Z), (1, 1, Z), (1, 2, Y)];
            let slot = if j >= 1 && k >= 1 {
                (2, 2, w(i, j - 1, k - 1))
            } else if k == 0 {
                (2, 1, w(i, j - 2, 0))
            } else {
                (2, 0, w(i, 0, k - 2))
            };
            frame.iter().copied().chain([slot]).collect()
        }
    };
    MonomialMatrix::new(ResolutionShape::ThreeByThree, entries).expect("valid family matrix")
}

/// Base-chart matrix of an isolated `M01` point (`L = X`, quartic `X·C`).
fn base_m01_matrix(q: Weight) -> MonomialMatrix {
    let [i, j, k] = q.0;
    let frame = [(0, 0, X), (0, 2, Y), (1, 1, X), (1, 2, Z)];
    let slot = if i >= 2 {
        (2, 2, w(i - 2, j, k))
    } else if (j, k) == (3, 0) {
        (2, 0, w(0, 2, 0))
    } else {
        debug_assert_eq!((j, k), (0, 3));
        (2, 1, w(0, 0, 2))
    };
    let entries = frame.iter().copied().chain([slot]).collect();
    MonomialMatrix::new(ResolutionShape::ThreeByThree, entries).expect("valid family matrix")
}

/// Representative matrix of the base fixed line `(X, Y^2 Z)`: the member of
/// the affine family with vanishing deformation parameter.
fn base_line_matrix() -> MonomialMatrix {
    let entries = vec![
        (0, 0, X),
        (0, 2, Y),
        (1, 1, X),
        (1, 2, Z),
        (2, 0, w(0, 1, 1)),
    ];
    MonomialMatrix::new(ResolutionShape::ThreeByThree, entries).expect("valid line matrix")
}

/// Base-chart matrix of an `M1` point at `p2` with quartic `(i, j, k)`.
/// Quartics with `j ≥ 1` are realized by the first matrix kind, quartics
/// `X^i Z^k` (`i ≥ 1`) by the second.
fn base_m1_matrix(q: Weight) -> MonomialMatrix {
    let [i, j, k] = q.0;
    let entries = if j >= 1 {
        vec![(0, 0, w(i, j - 1, k)), (0, 1, X), (1, 1, Y)]
    } else {
        debug_assert!(i >= 1);
        vec![(0, 1, X), (1, 0, w(i - 1, 0, k)), (1, 1, Y)]
    };
    MonomialMatrix::new(ResolutionShape::TwoByTwo, entries).expect("valid family matrix")
}

/// The 120 fixed points of `M0 \ M01`: 10 configurations of `S`, each with
/// the 12 invariant quartics containing `S`.
pub fn enumerate_m0_points() -> Vec<FixedPoint> {
    let mut out = Vec::with_capacity(120);
    for (label, base, perm) in M0_ROWS {
        let slist: &[Weight] = match base {
            M0Base::ThreeSimplePoints => &SLIST_THREE_SIMPLE,
            M0Base::DoublePlusSimple => &SLIST_DOUBLE_SIMPLE,
            M0Base::TriplePoint => &SLIST_TRIPLE,
        };
        for &q in slist {
            out.push(FixedPoint {
                stratum: Stratum::M0MinusM01,
                family: label,
                base: BaseKind::M0(base),
                perm,
                base_quartic: q,
                quartic: perm.apply(q),
                matrix: base_m0_matrix(base, q).apply_perm(perm),
                isolated: true,
            });
        }
    }
    out
}

/// The 24 isolated fixed points of `M01`: 3 lines, 8 cubics each.
pub fn enumerate_m01_points() -> Vec<FixedPoint> {
    let mut out = Vec::with_capacity(24);
    for (label, perm) in M01_ROWS {
        for &q in &SLIST_M01 {
            out.push(FixedPoint {
                stratum: Stratum::M01,
                family: label,
                base: BaseKind::M01,
                perm,
                base_quartic: q,
                quartic: perm.apply(q),
                matrix: base_m01_matrix(q).apply_perm(perm),
                isolated: true,
            });
        }
    }
    out
}

/// The 6 fixed lines, each with its representative matrix and the closure
/// point completing the affine line to a `P^1`.
pub fn enumerate_lines() -> Vec<FixedLine> {
    let base_cubic = w(0, 2, 1);
    let base_quartic = w(1, 2, 1);
    LINE_ROWS
        .iter()
        .map(|&perm| FixedLine {
            line: perm.apply_var(0),
            cubic: perm.apply(base_cubic),
            quartic: perm.apply(base_quartic),
            perm,
            matrix: base_line_matrix().apply_perm(perm),
            closure_point: ClosurePoint {
                point: perm.apply_var(2),
                quartic: perm.apply(base_quartic),
            },
        })
        .collect()
}

/// The 42 `M1` fixed points (14 per coordinate point), with the six closure
/// points of the fixed lines flagged non-isolated. The 12 isolated quartics
/// per point come first, in table order; the 2 closure quartics follow.
pub fn enumerate_m1_points() -> Vec<FixedPoint> {
    let lines = enumerate_lines();
    let mut out = Vec::with_capacity(42);
    for (label, perm) in M1_ROWS {
        let point = perm.apply_var(2);
        for &q in SLIST_M1.iter().chain(M1_CLOSURE_QUARTICS.iter()) {
            let quartic = perm.apply(q);
            let is_closure = lines
                .iter()
                .any(|l| l.closure_point.point == point && l.closure_point.quartic == quartic);
            out.push(FixedPoint {
                stratum: Stratum::M1,
                family: label,
                base: BaseKind::M1,
                perm,
                base_quartic: q,
                quartic,
                matrix: base_m1_matrix(q).apply_perm(perm),
                isolated: !is_closure,
            });
        }
    }
    out
}

/// The complete fixed-locus inventory, in canonical order.
#[derive(Clone, Debug)]
pub struct Inventory {
    /// 120 + 24 + 42 points; `isolated` is false exactly for the 6 closure
    /// points inside the `M1` block.
    pub points: Vec<FixedPoint>,
    pub lines: Vec<FixedLine>,
}

impl Inventory {
    pub fn enumerate() -> Self {
        let mut points = enumerate_m0_points();
        points.extend(enumerate_m01_points());
        points.extend(enumerate_m1_points());
        Inventory {
            points,
            lines: enumerate_lines(),
        }
    }

    pub fn isolated_points(&self) -> impl Iterator<Item = &FixedPoint> {
        self.points.iter().filter(|p| p.isolated)
    }

    pub fn isolated_count(&self) -> usize {
        self.isolated_points().count()
    }

    pub fn stratum_count(&self, stratum: Stratum) -> usize {
        self.isolated_points()
            .filter(|p| p.stratum == stratum)
            .count()
    }
}
