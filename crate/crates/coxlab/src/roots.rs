//! Positive root systems for the finite Coxeter types, built by closure from
//! a simple system.
//!
//! Coordinates are taken in the simple-root basis: the simple roots are the
//! standard basis vectors and the inner product is carried by the Gram matrix
//! G with G_ij = -2cos(π/m_ij). This keeps every coordinate inside a single
//! quadratic field Q(√d) per type (d = 0 for A/D/E and I2(3), 2 for B/F and
//! I2(4), 3 for I2(6), 5 for H and I2(5)) while all roots keep ⟨σ,σ⟩ = 2.
//!
//! Dihedral types I2(m) with m ∉ {3,4,5,6} get no matrix model; the group
//! still acts on the m abstract positive roots by signed permutations, which
//! is all the combinatorial layers need.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::group::SignedPerm;
use crate::matrix::{gram_dot, QMatrix};
use crate::scalar::QScalar;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
    /// Dihedral order parameter; only meaningful for family I.
    pub m: usize,
}

impl SimpleType {
    pub fn admissible(&self) -> bool {
        match self.family {
            Family::A => self.rank >= 1,
            Family::B => self.rank >= 2,
            Family::D => self.rank >= 4,
            Family::E => self.rank == 6,
            Family::F => self.rank == 4,
            Family::H => self.rank == 3 || self.rank == 4,
            Family::I => self.rank == 2 && self.m >= 3,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::E => write!(f, "E{}", self.rank),
            Family::F => write!(f, "F{}", self.rank),
            Family::H => write!(f, "H{}", self.rank),
            Family::I => write!(f, "I2({})", self.m),
        }
    }
}

/// A possibly-reducible Coxeter type: a product of irreducible factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterType {
    pub factors: Vec<SimpleType>,
}

impl CoxeterType {
    pub fn parse(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split('x') {
            factors.push(parse_factor(part.trim()).ok_or_else(|| Error::BadType(s.into()))?);
        }
        if factors.is_empty() {
            return Err(Error::BadType(s.into()));
        }
        for f in &factors {
            if !f.admissible() {
                return Err(Error::BadType(format!("{s}: inadmissible factor {f}")));
            }
        }
        Ok(CoxeterType { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

fn parse_factor(s: &str) -> Option<SimpleType> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return None;
    }
    let family = match bytes[0] {
        b'A' => Family::A,
        b'B' | b'C' => Family::B,
        b'D' => Family::D,
        b'E' => Family::E,
        b'F' => Family::F,
        b'H' => Family::H,
        b'I' => {
            // I2(m)
            let rest = &s[1..];
            let rest = rest.strip_prefix('2')?;
            let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
            let m: usize = inner.parse().ok()?;
            return Some(SimpleType {
                family: Family::I,
                rank: 2,
                m,
            });
        }
        _ => return None,
    };
    let rank: usize = s[1..].parse().ok()?;
    Some(SimpleType { family, rank, m: 0 })
}

/// Coxeter matrix entries m_ij for one irreducible factor, as edges
/// (i, j, m) with i < j; nodes are 0..rank-1.
fn factor_edges(t: &SimpleType) -> Vec<(usize, usize, usize)> {
    let n = t.rank;
    match t.family {
        Family::A => (0..n.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect(),
        Family::B => {
            let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 3)).collect();
            e.last_mut().map(|last| last.2 = 4);
            e
        }
        Family::D => {
            let mut e: Vec<_> = (0..n - 3).map(|i| (i, i + 1, 3)).collect();
            e.push((n - 3, n - 2, 3));
            e.push((n - 3, n - 1, 3));
            e
        }
        Family::E => {
            // 0-1-2-3-4 chain with 5 attached to node 2.
            let mut e: Vec<_> = (0..4).map(|i| (i, i + 1, 3)).collect();
            e.push((2, 5, 3));
            e
        }
        Family::F => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
        Family::H => {
            let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 3)).collect();
            e[0].2 = 5;
            e
        }
        Family::I => vec![(0, 1, t.m)],
    }
}

/// Full Coxeter matrix of the product type.
pub fn coxeter_matrix(t: &CoxeterType) -> Vec<Vec<usize>> {
    let n = t.rank();
    let mut m = vec![vec![2usize; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut offset = 0;
    for f in &t.factors {
        for (i, j, mij) in factor_edges(f) {
            m[offset + i][offset + j] = mij;
            m[offset + j][offset + i] = mij;
        }
        offset += f.rank;
    }
    m
}

/// -2cos(π/m) as an exact element of a quadratic field, for the m that admit
/// one.
fn gram_entry(m: usize) -> Option<QScalar> {
    match m {
        1 => Some(QScalar::from_int(2)),
        2 => Some(QScalar::zero()),
        3 => Some(QScalar::from_int(-1)),
        4 => Some(-QScalar::sqrt_of(2)),
        // 2cos(π/5) = φ = (1+√5)/2
        5 => Some(-(QScalar::from_ratio(1, 2) + QScalar::sqrt_of(5) * QScalar::from_ratio(1, 2))),
        6 => Some(-QScalar::sqrt_of(3)),
        _ => None,
    }
}

pub struct MatrixModel {
    pub posroots: Vec<Vec<QScalar>>,
    pub gram: QMatrix,
    pub reflections: Vec<QMatrix>,
    index: HashMap<Vec<QScalar>, usize>,
}

pub enum Model {
    Matrix(MatrixModel),
    /// Abstract dihedral group I2(m): positive roots are the symbols
    /// 0..m-1 (normals of the m mirror lines in cyclic order).
    Dihedral { m: usize },
}

pub struct RootSystem {
    pub ctype: CoxeterType,
    pub rank: usize,
    pub field_d: u32,
    /// Positions of the simple roots inside the positive-root list; entry k
    /// is the k-th simple generator.
    pub simple_indices: Vec<usize>,
    /// Two-coloring of the Coxeter diagram, as positions 0..rank-1 of simple
    /// generators; within each block all pairs commute.
    pub bipartition: (Vec<usize>, Vec<usize>),
    /// For each positive root, its reflection as a signed permutation of the
    /// positive roots.
    pub refl_perms: Vec<SignedPerm>,
    pub model: Model,
}

impl RootSystem {
    pub fn build(ctype: &CoxeterType) -> Result<RootSystem> {
        let abstract_dihedral = ctype.factors.len() == 1
            && ctype.factors[0].family == Family::I
            && gram_entry(ctype.factors[0].m).is_none();
        if abstract_dihedral {
            return Ok(build_dihedral(ctype.clone(), ctype.factors[0].m));
        }
        build_matrix_model(ctype.clone())
    }

    pub fn num_positive_roots(&self) -> usize {
        self.refl_perms.len()
    }

    pub fn is_matrix_model(&self) -> bool {
        matches!(self.model, Model::Matrix(_))
    }

    pub fn matrix_model(&self) -> Result<&MatrixModel> {
        match &self.model {
            Model::Matrix(mm) => Ok(mm),
            Model::Dihedral { .. } => Err(Error::NoMatrixModel(self.ctype.to_string())),
        }
    }

    /// Coxeter number 2N/n of an irreducible system.
    pub fn coxeter_number(&self) -> usize {
        assert!(
            self.ctype.is_irreducible(),
            "coxeter_number of a reducible type; use cox_multiset"
        );
        2 * self.num_positive_roots() / self.rank
    }

    pub fn root_inner(&self, i: usize, j: usize) -> Result<QScalar> {
        let mm = self.matrix_model()?;
        Ok(gram_dot(&mm.gram, &mm.posroots[i], &mm.posroots[j]))
    }

    pub fn roots_orthogonal(&self, i: usize, j: usize) -> bool {
        match &self.model {
            Model::Matrix(mm) => gram_dot(&mm.gram, &mm.posroots[i], &mm.posroots[j]).is_zero(),
            Model::Dihedral { m } => m % 2 == 0 && (i + m - j) % m == m / 2,
        }
    }

    /// Locate a coordinate vector among ±Φ⁺; sign true means the positive
    /// representative.
    pub fn lookup_root(&self, v: &[QScalar]) -> Option<(usize, bool)> {
        let mm = match &self.model {
            Model::Matrix(mm) => mm,
            Model::Dihedral { .. } => return None,
        };
        if let Some(&i) = mm.index.get(v) {
            return Some((i, true));
        }
        let neg: Vec<QScalar> = v.iter().map(|x| -x.clone()).collect();
        mm.index.get(&neg).map(|&i| (i, false))
    }

    /// Connected components of the non-orthogonality graph on a root subset.
    pub fn decompose_components(&self, subset: &[usize]) -> ComponentDecomposition {
        let k = subset.len();
        let mut seen = vec![false; k];
        let mut components = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(subset[u]);
                for v in 0..k {
                    if !seen[v] && !self.roots_orthogonal(subset[u], subset[v]) {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            let rank = self.subset_rank(&comp);
            let count = comp.len();
            assert!(
                rank > 0 && (2 * count) % rank == 0,
                "component reflection count {count} not divisible by rank {rank}"
            );
            components.push(Component {
                roots: comp,
                rank,
                coxeter_number: 2 * count / rank,
            });
        }
        components.sort_by(|a, b| a.roots.cmp(&b.roots));
        ComponentDecomposition { components }
    }

    /// Dimension of the span of a set of positive roots.
    pub fn subset_rank(&self, subset: &[usize]) -> usize {
        match &self.model {
            Model::Matrix(mm) => {
                if subset.is_empty() {
                    return 0;
                }
                let rows: Vec<Vec<QScalar>> =
                    subset.iter().map(|&i| mm.posroots[i].clone()).collect();
                QMatrix::from_rows(rows).rank().expect("single-field roots")
            }
            Model::Dihedral { .. } => subset.len().min(2),
        }
    }

    /// Simple roots of a closed subsystem: σ is simple exactly when its
    /// reflection keeps every other positive root of the subset positive.
    pub fn simple_subsystem(&self, subset: &[usize]) -> Vec<usize> {
        match &self.model {
            Model::Matrix(_) => subset
                .iter()
                .copied()
                .filter(|&i| {
                    subset
                        .iter()
                        .all(|&j| j == i || self.refl_perms[i].apply(j).1)
                })
                .collect(),
            Model::Dihedral { .. } => {
                // Closed subsets of a dihedral system are arithmetic
                // progressions in the cyclic line order; two consecutive
                // members generate.
                let mut s: Vec<usize> = subset.to_vec();
                s.sort_unstable();
                s.truncate(2);
                s
            }
        }
    }

    /// The multiset of Coxeter numbers {h_i} of the subsystem spanned by the
    /// given roots: each component contributes its h, repeated rank times.
    pub fn cox_multiset(&self, subset: &[usize]) -> Vec<usize> {
        let decomp = self.decompose_components(subset);
        let mut out = Vec::new();
        for c in &decomp.components {
            out.extend(std::iter::repeat(c.coxeter_number).take(c.rank));
        }
        out.sort_unstable();
        out
    }

    pub fn all_root_indices(&self) -> Vec<usize> {
        (0..self.num_positive_roots()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub roots: Vec<usize>,
    pub rank: usize,
    pub coxeter_number: usize,
}

#[derive(Clone, Debug)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
}

impl ComponentDecomposition {
    pub fn total_rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }
}

fn build_matrix_model(ctype: CoxeterType) -> Result<RootSystem> {
    let n = ctype.rank();
    let cox = coxeter_matrix(&ctype);
    let mut gram = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let entry = gram_entry(cox[i][j])
                .ok_or_else(|| Error::NoMatrixModel(ctype.to_string()))?;
            gram.set(i, j, entry);
        }
    }
    let field_d = gram.check_field()?;

    // Closure over simple reflections: s_i(v) = v - (Gv)_i * e_i.
    let simples: Vec<Vec<QScalar>> = (0..n)
        .map(|i| {
            let mut e = vec![QScalar::zero(); n];
            e[i] = QScalar::one();
            e
        })
        .collect();
    let mut seen: HashSet<Vec<QScalar>> = simples.iter().cloned().collect();
    let mut queue: VecDeque<Vec<QScalar>> = simples.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        let gv = gram.mul_vec(&v);
        for i in 0..n {
            if gv[i].is_zero() {
                continue;
            }
            let mut w = v.clone();
            w[i] = w[i].clone() - gv[i].clone();
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut posroots: Vec<Vec<QScalar>> = seen
        .into_iter()
        .filter(|v| v.iter().all(|c| !c.is_negative()))
        .collect();
    posroots.sort_by_key(|v| {
        let height = v
            .iter()
            .fold(QScalar::zero(), |acc, c| acc + c.clone());
        (height, v.clone())
    });
    let index: HashMap<Vec<QScalar>, usize> = posroots
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let simple_indices: Vec<usize> = simples
        .iter()
        .map(|s| *index.get(s).expect("simple root lost in closure"))
        .collect();

    // Reflection matrices M_σ = I - σ (Gσ)ᵀ and their root permutations.
    let identity = QMatrix::identity(n);
    let mut reflections = Vec::with_capacity(posroots.len());
    let mut refl_perms = Vec::with_capacity(posroots.len());
    for sigma in &posroots {
        let gs = gram.mul_vec(sigma);
        let refl = identity.sub(&QMatrix::outer(sigma, &gs));
        let mut images = Vec::with_capacity(posroots.len());
        for rho in &posroots {
            let img = refl.mul_vec(rho);
            let (idx, sign) = index
                .get(&img)
                .map(|&i| (i, true))
                .or_else(|| {
                    let neg: Vec<QScalar> = img.iter().map(|x| -x.clone()).collect();
                    index.get(&neg).map(|&i| (i, false))
                })
                .expect("positive system not closed under reflection");
            images.push((idx, sign));
        }
        reflections.push(refl);
        refl_perms.push(SignedPerm::from_images(&images));
    }

    let bipartition = two_color(&cox, n);
    Ok(RootSystem {
        ctype,
        rank: n,
        field_d,
        simple_indices,
        bipartition,
        refl_perms,
        model: Model::Matrix(MatrixModel {
            posroots,
            gram,
            reflections,
            index,
        }),
    })
}

fn build_dihedral(ctype: CoxeterType, m: usize) -> RootSystem {
    // Reflection across line k sends root j to ±root (2k - j mod m); the
    // image is negative exactly when (2k - j) mod 2m lands in [0, m).
    let mut refl_perms = Vec::with_capacity(m);
    for k in 0..m {
        let images: Vec<(usize, bool)> = (0..m)
            .map(|j| {
                let i0 = (2 * k + 2 * m - j) % (2 * m);
                if i0 < m {
                    (i0, false)
                } else {
                    (i0 - m, true)
                }
            })
            .collect();
        refl_perms.push(SignedPerm::from_images(&images));
    }
    RootSystem {
        ctype,
        rank: 2,
        field_d: 0,
        simple_indices: vec![0, 1],
        bipartition: (vec![0], vec![1]),
        refl_perms,
        model: Model::Dihedral { m },
    }
}

fn two_color(cox: &[Vec<usize>], n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut color = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(0u8);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if v != u && cox[u][v] >= 3 && color[v].is_none() {
                    color[v] = Some(1 - color[u].unwrap());
                    queue.push_back(v);
                }
            }
        }
    }
    let mut blocks = (Vec::new(), Vec::new());
    for (i, c) in color.iter().enumerate() {
        match c.unwrap() {
            0 => blocks.0.push(i),
            _ => blocks.1.push(i),
        }
    }
    blocks
}
