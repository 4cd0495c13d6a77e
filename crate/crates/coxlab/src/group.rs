//! Group elements as signed permutations of the positive roots, full-group
//! enumeration, reflection length, Coxeter elements, and fundamental degrees.

use std::collections::{HashMap, VecDeque};

use nalgebra::DMatrix;

use crate::matrix::QMatrix;
use crate::roots::RootSystem;
use crate::{Error, Result};

/// A signed permutation: entry i holds ±(j+1) meaning root i maps to ±root j.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm(Vec<i32>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((0..n).map(|i| i as i32 + 1).collect())
    }

    pub fn from_images(images: &[(usize, bool)]) -> Self {
        SignedPerm(
            images
                .iter()
                .map(|&(j, pos)| {
                    let v = j as i32 + 1;
                    if pos {
                        v
                    } else {
                        -v
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of root i as (index, is_positive).
    pub fn apply(&self, i: usize) -> (usize, bool) {
        let v = self.0[i];
        (v.unsigned_abs() as usize - 1, v > 0)
    }

    /// Image root index, sign discarded.
    pub fn root_image(&self, i: usize) -> usize {
        self.0[i].unsigned_abs() as usize - 1
    }

    /// Composition as maps: (self ∘ inner)(σ) = self(inner(σ)).
    pub fn compose(&self, inner: &SignedPerm) -> SignedPerm {
        SignedPerm(
            inner
                .0
                .iter()
                .map(|&v| {
                    let j = v.unsigned_abs() as usize - 1;
                    let w = self.0[j];
                    if v > 0 {
                        w
                    } else {
                        -w
                    }
                })
                .collect(),
        )
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0i32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            let j = v.unsigned_abs() as usize - 1;
            let w = i as i32 + 1;
            out[j] = if v > 0 { w } else { -w };
        }
        SignedPerm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// The central element -1, if this is it: every root maps to its own
    /// negative.
    pub fn is_minus_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == -(i as i32 + 1))
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }
}

pub const DEFAULT_GROUP_CAP: usize = 60_000;

pub fn group_cap() -> usize {
    std::env::var("COXLAB_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_GROUP_CAP)
}

/// The fully enumerated group, indexed by canonical signed-permutation key.
pub struct GroupTable {
    pub elements: Vec<SignedPerm>,
    index: HashMap<SignedPerm, usize>,
    /// Element index of the reflection attached to each positive root.
    pub refl: Vec<usize>,
    /// Reflection length of every element.
    pub lengths: Vec<u8>,
    pub order: usize,
    pub rank: usize,
}

impl GroupTable {
    pub fn id(&self) -> usize {
        self.index[&SignedPerm::identity(self.elements[0].len())]
    }

    pub fn lookup(&self, p: &SignedPerm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[&p]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    pub fn length(&self, a: usize) -> usize {
        self.lengths[a] as usize
    }

    pub fn is_reflection(&self, a: usize) -> bool {
        self.lengths[a] == 1
    }
}

/// BFS closure over the simple generators.
pub fn enumerate_group(rs: &RootSystem, cap: usize) -> Result<GroupTable> {
    let gens: Vec<&SignedPerm> = rs.simple_indices.iter().map(|&i| &rs.refl_perms[i]).collect();
    let n = rs.num_positive_roots();
    let mut elements = vec![SignedPerm::identity(n)];
    let mut index = HashMap::new();
    index.insert(elements[0].clone(), 0usize);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in &gens {
            let next = g.compose(&current);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    let refl: Vec<usize> = rs
        .refl_perms
        .iter()
        .map(|p| *index.get(p).expect("reflection outside generated group"))
        .collect();
    let lengths = if rs.is_matrix_model() {
        elements
            .iter()
            .map(|p| reflection_length_matrix(rs, p).map(|l| l as u8))
            .collect::<Result<Vec<u8>>>()?
    } else {
        cayley_distances(&elements, &index, &refl)
    };
    Ok(GroupTable {
        order: elements.len(),
        rank: rs.rank,
        elements,
        index,
        refl,
        lengths,
    })
}

/// BFS distance from the identity in the Cayley graph over all reflections;
/// this is the definition of reflection length.
pub fn cayley_distances(
    elements: &[SignedPerm],
    index: &HashMap<SignedPerm, usize>,
    refl: &[usize],
) -> Vec<u8> {
    let mut dist = vec![u8::MAX; elements.len()];
    let id = index[&SignedPerm::identity(elements[0].len())];
    dist[id] = 0;
    let mut queue = VecDeque::from([id]);
    while let Some(u) = queue.pop_front() {
        for &r in refl {
            let p = elements[r].compose(&elements[u]);
            let v = index[&p];
            if dist[v] == u8::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    assert!(dist.iter().all(|&d| d != u8::MAX), "reflections do not generate");
    dist
}

/// The matrix of a group element in the simple-root basis. Column j is the
/// image of the j-th simple root, which the signed permutation gives directly.
pub fn matrix_of(rs: &RootSystem, w: &SignedPerm) -> Result<QMatrix> {
    let mm = rs.matrix_model()?;
    let n = rs.rank;
    let mut m = QMatrix::zeros(n, n);
    for (col, &si) in rs.simple_indices.iter().enumerate() {
        let (img, pos) = w.apply(si);
        for row in 0..n {
            let v = mm.posroots[img][row].clone();
            m.set(row, col, if pos { v } else { -v });
        }
    }
    Ok(m)
}

/// Reflection length as the codimension of the fixed space: rank(M - I).
pub fn reflection_length_matrix(rs: &RootSystem, w: &SignedPerm) -> Result<usize> {
    let m = matrix_of(rs, w)?;
    m.sub(&QMatrix::identity(rs.rank)).rank()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoxeterMode {
    /// Product ordered by the two-coloring of the diagram.
    Bipartite,
    /// Product in the fixed Cartan order of the simple generators.
    Standard,
}

/// A Coxeter element as a signed permutation; its order is the Coxeter number.
pub fn coxeter_element(rs: &RootSystem, mode: CoxeterMode) -> SignedPerm {
    let order: Vec<usize> = match mode {
        CoxeterMode::Bipartite => rs
            .bipartition
            .0
            .iter()
            .chain(rs.bipartition.1.iter())
            .copied()
            .collect(),
        CoxeterMode::Standard => (0..rs.rank).collect(),
    };
    let mut c = SignedPerm::identity(rs.num_positive_roots());
    for pos in order {
        c = c.compose(&rs.refl_perms[rs.simple_indices[pos]]);
    }
    c
}

/// A subgroup generated by the reflections of a closed root subset, with
/// reflection lengths (relative to those reflections) from Cayley BFS.
pub struct Subgroup {
    pub elements: Vec<SignedPerm>,
    pub index: HashMap<SignedPerm, usize>,
    pub lengths: Vec<u8>,
    /// Element index per generating root, aligned with the input subset.
    pub gen_elems: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }
}

pub fn subgroup_closure(rs: &RootSystem, roots: &[usize]) -> Subgroup {
    let n = rs.num_positive_roots();
    let mut elements = vec![SignedPerm::identity(n)];
    let mut index = HashMap::new();
    index.insert(elements[0].clone(), 0usize);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for &r in roots {
            let next = rs.refl_perms[r].compose(&current);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    let gen_elems: Vec<usize> = roots.iter().map(|&r| index[&rs.refl_perms[r]]).collect();
    let lengths = cayley_distances(&elements, &index, &gen_elems);
    Subgroup {
        elements,
        index,
        lengths,
        gen_elems,
    }
}

const DEGREE_TOLERANCE: f64 = 1e-6;

/// Fundamental degrees of each irreducible component of the subsystem
/// spanned by `subset` (the full system when `None`).
///
/// Floating point appears only here: eigenvalue arguments of a component
/// Coxeter element are rounded to the exponents m_j and the results are then
/// validated against exact identities (d_1 = 2, d_r = h, duality,
/// Σ(d_i - 1) = N). Any tolerance breach is a hard error.
pub fn degrees(rs: &RootSystem, subset: Option<&[usize]>) -> Result<Vec<(usize, Vec<usize>)>> {
    let all = rs.all_root_indices();
    let subset = subset.unwrap_or(&all);
    let decomp = rs.decompose_components(subset);
    let mut out = Vec::new();
    for (ci, comp) in decomp.components.iter().enumerate() {
        let h = comp.coxeter_number;
        let r = comp.rank;
        let n_refl = comp.roots.len();
        let ds = if rs.is_matrix_model() {
            let simples = rs.simple_subsystem(&comp.roots);
            let mut c = SignedPerm::identity(rs.num_positive_roots());
            for &s in &simples {
                c = c.compose(&rs.refl_perms[s]);
            }
            extract_degrees(rs, &c, h, r)?
        } else {
            // Abstract dihedral component: rotation by 2π/h has exponents 1
            // and h-1.
            match r {
                1 => vec![2],
                _ => vec![2, h],
            }
        };
        validate_degrees(&ds, h, r, n_refl)?;
        out.push((ci, ds));
    }
    Ok(out)
}

fn extract_degrees(rs: &RootSystem, c: &SignedPerm, h: usize, r: usize) -> Result<Vec<usize>> {
    let m = matrix_of(rs, c)?;
    let n = rs.rank;
    let fm = DMatrix::from_fn(n, n, |i, j| m.get(i, j).to_f64());
    let eig = fm.complex_eigenvalues();
    let mut exps = Vec::new();
    let mut fixed = 0usize;
    for lambda in eig.iter() {
        if (lambda.norm() - 1.0).abs() > DEGREE_TOLERANCE {
            return Err(Error::DegreeExtraction(format!(
                "eigenvalue off the unit circle: {lambda}"
            )));
        }
        let theta = lambda.arg().rem_euclid(2.0 * std::f64::consts::PI);
        let raw = h as f64 * theta / (2.0 * std::f64::consts::PI);
        let mj = raw.round();
        if (raw - mj).abs() > DEGREE_TOLERANCE {
            return Err(Error::DegreeExtraction(format!(
                "eigenvalue argument {raw} not within tolerance of an integer"
            )));
        }
        let mj = (mj as usize) % h;
        if mj == 0 {
            fixed += 1;
        } else {
            exps.push(mj);
        }
    }
    if fixed != n - r {
        return Err(Error::DegreeExtraction(format!(
            "expected {} fixed eigenvalues, found {fixed}",
            n - r
        )));
    }
    let mut ds: Vec<usize> = exps.into_iter().map(|m| m + 1).collect();
    ds.sort_unstable();
    Ok(ds)
}

fn validate_degrees(ds: &[usize], h: usize, r: usize, n_refl: usize) -> Result<()> {
    let fail = |msg: String| Err(Error::DegreeExtraction(msg));
    if ds.len() != r {
        return fail(format!("got {} degrees for rank {r}", ds.len()));
    }
    if ds[0] != 2 {
        return fail(format!("d_1 = {} != 2", ds[0]));
    }
    if ds[r - 1] != h {
        return fail(format!("d_n = {} != h = {h}", ds[r - 1]));
    }
    for i in 0..r {
        if ds[i] + ds[r - 1 - i] != h + 2 {
            return fail(format!("duality broken at index {i}"));
        }
    }
    let sum: usize = ds.iter().map(|d| d - 1).sum();
    if sum != n_refl {
        return fail(format!("sum of exponents {sum} != N = {n_refl}"));
    }
    Ok(())
}

/// Flattened multiset of degrees over all components, sorted.
pub fn degree_multiset(rs: &RootSystem, subset: Option<&[usize]>) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = degrees(rs, subset)?
        .into_iter()
        .flat_map(|(_, ds)| ds)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Orbits of reflections under conjugation by the bipartite Coxeter element,
/// as (orbit size, number of simple generators in the orbit) pairs.
///
/// Each orbit must have size h/2 with one simple, or size h with two.
pub fn bipartite_conjugation_orbits(rs: &RootSystem) -> Result<Vec<(usize, usize)>> {
    if !rs.ctype.is_irreducible() {
        return Err(Error::PropertyViolation(
            "bipartite orbit dichotomy is stated per irreducible type".into(),
        ));
    }
    let h = rs.coxeter_number();
    let c = coxeter_element(rs, CoxeterMode::Bipartite);
    let n_roots = rs.num_positive_roots();
    let simple_set: std::collections::HashSet<usize> =
        rs.simple_indices.iter().copied().collect();
    let mut seen = vec![false; n_roots];
    let mut orbits = Vec::new();
    for start in 0..n_roots {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            orbit.push(cur);
            cur = c.root_image(cur);
        }
        let n_simple = orbit.iter().filter(|i| simple_set.contains(i)).count();
        let size = orbit.len();
        let ok = (size == h / 2 && n_simple == 1 && h % 2 == 0) || (size == h && n_simple == 2);
        if !ok {
            return Err(Error::PropertyViolation(format!(
                "orbit of root {start}: size {size}, {n_simple} simples, h = {h}"
            )));
        }
        orbits.push((size, n_simple));
    }
    orbits.sort_unstable();
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CoxeterType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&CoxeterType::parse(s).unwrap()).unwrap()
    }

    fn table(s: &str) -> GroupTable {
        enumerate_group(&rs(s), DEFAULT_GROUP_CAP).unwrap()
    }

    #[test]
    fn group_orders() {
        let cases = [
            ("A1", 2, 1),
            ("A3", 24, 6),
            ("B2", 8, 4),
            ("B3", 48, 9),
            ("D4", 192, 12),
            ("H3", 120, 15),
            ("F4", 1152, 24),
            ("I2(7)", 14, 7),
            ("A2xA1", 12, 4),
        ];
        for (name, order, n_refl) in cases {
            let gt = table(name);
            assert_eq!(gt.order, order, "{name} order");
            let count = gt.lengths.iter().filter(|&&l| l == 1).count();
            assert_eq!(count, n_refl, "{name} reflection count");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let r = rs("F4");
        assert!(matches!(
            enumerate_group(&r, 100),
            Err(Error::GroupTooLarge(100))
        ));
    }

    #[test]
    fn reflection_lengths_match_cayley_bfs() {
        // Exhaustive two-oracle agreement on small groups.
        for name in ["A3", "B2", "B3", "I2(5)"] {
            let r = rs(name);
            let gt = table(name);
            let bfs = cayley_distances(&gt.elements, &gt.index, &gt.refl);
            for (i, p) in gt.elements.iter().enumerate() {
                assert_eq!(
                    reflection_length_matrix(&r, p).unwrap(),
                    bfs[i] as usize,
                    "{name} element {i}"
                );
            }
        }
    }

    #[test]
    fn coxeter_element_order_is_h() {
        for (name, h) in [("A2", 3), ("A3", 4), ("B3", 6), ("F4", 12), ("H3", 10), ("I2(9)", 9)] {
            let r = rs(name);
            assert_eq!(coxeter_element(&r, CoxeterMode::Bipartite).order(), h);
            assert_eq!(coxeter_element(&r, CoxeterMode::Standard).order(), h);
        }
    }

    #[test]
    fn random_simple_orderings_have_order_h() {
        // Any product of all simples in any order is a Coxeter element.
        let r = rs("B3");
        let perms3 = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for ord in perms3 {
            let mut c = SignedPerm::identity(r.num_positive_roots());
            for pos in ord {
                c = c.compose(&r.refl_perms[r.simple_indices[pos]]);
            }
            assert_eq!(c.order(), 6);
        }
    }

    #[test]
    fn coxeter_elements_conjugate_at_small_rank() {
        let gt = table("A3");
        let r = rs("A3");
        let c1 = gt.lookup(&coxeter_element(&r, CoxeterMode::Bipartite)).unwrap();
        let c2 = gt.lookup(&coxeter_element(&r, CoxeterMode::Standard)).unwrap();
        let conjugate = (0..gt.order).any(|w| {
            let wi = gt.inv(w);
            gt.mul(gt.mul(wi, c1), w) == c2
        });
        assert!(conjugate);
    }

    #[test]
    fn degrees_of_standard_types() {
        let cases = [
            ("A3", vec![2, 3, 4]),
            ("A4", vec![2, 3, 4, 5]),
            ("B2", vec![2, 4]),
            ("B4", vec![2, 4, 6, 8]),
            ("D4", vec![2, 4, 4, 6]),
            ("F4", vec![2, 6, 8, 12]),
            ("H3", vec![2, 6, 10]),
            ("I2(8)", vec![2, 8]),
        ];
        for (name, want) in cases {
            assert_eq!(degree_multiset(&rs(name), None).unwrap(), want, "{name}");
        }
    }

    #[test]
    fn degree_product_is_group_order() {
        for name in ["A3", "B3", "D4", "H3", "A2xB2"] {
            let gt = table(name);
            let prod: usize = degree_multiset(&rs(name), None).unwrap().iter().product();
            assert_eq!(prod, gt.order, "{name}");
        }
    }

    #[test]
    fn bipartite_orbit_dichotomy() {
        // A3: h = 4, 6 reflections, 3 simples -> one orbit (4, 2), one (2, 1)
        assert_eq!(
            bipartite_conjugation_orbits(&rs("A3")).unwrap(),
            vec![(2, 1), (4, 2)]
        );
        // B2: two orbits of size h/2 = 2, one simple each
        assert_eq!(
            bipartite_conjugation_orbits(&rs("B2")).unwrap(),
            vec![(2, 1), (2, 1)]
        );
        // A1: single orbit of size h/2 = 1
        assert_eq!(bipartite_conjugation_orbits(&rs("A1")).unwrap(), vec![(1, 1)]);
    }

    #[test]
    fn element_matrices_respect_composition() {
        let r = rs("B2");
        let gt = table("B2");
        for a in 0..gt.order {
            for b in 0..gt.order {
                let ab = gt.mul(a, b);
                let ma = matrix_of(&r, &gt.elements[a]).unwrap();
                let mb = matrix_of(&r, &gt.elements[b]).unwrap();
                let mab = matrix_of(&r, &gt.elements[ab]).unwrap();
                assert_eq!(ma.mul(&mb), mab);
            }
        }
    }

    #[test]
    fn matrices_preserve_gram_inner_product() {
        let r = rs("H3");
        let mm = r.matrix_model().unwrap();
        let c = coxeter_element(&r, CoxeterMode::Bipartite);
        let m = matrix_of(&r, &c).unwrap();
        // Mᵀ G M = G
        assert_eq!(m.transpose().mul(&mm.gram).mul(&m), mm.gram);
    }

    #[test]
    fn subgroup_closure_of_parabolic() {
        let r = rs("A3");
        // The parabolic on the first two simples is an A2.
        let roots: Vec<usize> = (0..r.num_positive_roots())
            .filter(|&i| {
                let mm = r.matrix_model().unwrap();
                mm.posroots[i][2].is_zero()
            })
            .collect();
        assert_eq!(roots.len(), 3);
        let sub = subgroup_closure(&r, &roots);
        assert_eq!(sub.order(), 6);
        assert_eq!(sub.lengths.iter().filter(|&&l| l == 1).count(), 3);
    }
}
