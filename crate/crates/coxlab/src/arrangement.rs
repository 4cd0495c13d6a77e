//! Intersection lattice of the reflection arrangement.
//!
//! A flat is stored as the closed set of positive roots vanishing on it, so
//! the partial order (reverse inclusion of subspaces, with the ambient space
//! V at the bottom) becomes plain set inclusion of root sets.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::group::{subgroup_closure, GroupTable};
use crate::poly::IntPolynomial;
use crate::roots::{Model, RootSystem};
use crate::Result;

#[derive(Clone, Debug)]
pub struct Flat {
    /// Sorted indices of the positive roots orthogonal to the flat.
    pub roots: Vec<usize>,
    pub dim: usize,
    pub codim: usize,
}

pub struct IntersectionLattice {
    pub flats: Vec<Flat>,
    index: HashMap<Vec<usize>, usize>,
    /// Ambient dimension (the reflection representation is essential).
    pub ambient_dim: usize,
    /// mobius[x] maps y (with x <= y) to mu(x, y).
    mobius: Vec<HashMap<usize, i64>>,
}

impl IntersectionLattice {
    pub fn build(rs: &RootSystem) -> IntersectionLattice {
        let n = rs.rank;
        let all_flats = enumerate_flats(rs);
        let mut flats: Vec<Flat> = all_flats
            .into_iter()
            .map(|roots| {
                let codim = rs.subset_rank(&roots);
                Flat {
                    roots,
                    dim: n - codim,
                    codim,
                }
            })
            .collect();
        flats.sort_by(|a, b| (a.codim, &a.roots).cmp(&(b.codim, &b.roots)));
        let index: HashMap<Vec<usize>, usize> = flats
            .iter()
            .enumerate()
            .map(|(i, f)| (f.roots.clone(), i))
            .collect();
        let mobius = mobius_all(&flats);
        IntersectionLattice {
            flats,
            index,
            ambient_dim: n,
            mobius,
        }
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn lookup(&self, roots: &[usize]) -> Option<usize> {
        self.index.get(roots).copied()
    }

    /// Index of the bottom flat V (empty root set).
    pub fn bottom(&self) -> usize {
        0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        is_subset(&self.flats[x].roots, &self.flats[y].roots)
    }

    pub fn mu(&self, x: usize, y: usize) -> i64 {
        self.mobius[x].get(&y).copied().unwrap_or(0)
    }

    pub fn flats_of_codim(&self, k: usize) -> Vec<usize> {
        (0..self.flats.len())
            .filter(|&i| self.flats[i].codim == k)
            .collect()
    }

    /// Characteristic polynomial of the restriction of the arrangement to
    /// the flat x: sum of mu(x, y) t^{dim y} over y >= x.
    pub fn restriction_char_poly(&self, x: usize) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.flats[x].dim + 1];
        for (&y, &m) in &self.mobius[x] {
            coeffs[self.flats[y].dim] += m;
        }
        IntPolynomial::new(coeffs)
    }

    /// Number of chambers of the restricted arrangement:
    /// (-1)^dim times its characteristic polynomial at -1.
    pub fn restriction_chambers(&self, x: usize) -> BigInt {
        let val = self.restriction_char_poly(x).eval(&BigInt::from(-1));
        if self.flats[x].dim % 2 == 0 {
            val
        } else {
            -val
        }
    }

    /// The coexponents b_i of the restriction: the roots of its
    /// characteristic polynomial, which must split over the integers.
    pub fn restriction_coexponents(&self, x: usize) -> Result<Vec<BigInt>> {
        self.restriction_char_poly(x).integer_roots()
    }

    /// Image flat under a group element: roots map through the signed
    /// permutation with signs dropped.
    pub fn act(&self, gt: &GroupTable, w: usize, x: usize) -> usize {
        let p = &gt.elements[w];
        let mut roots: Vec<usize> = self.flats[x]
            .roots
            .iter()
            .map(|&r| p.root_image(r))
            .collect();
        roots.sort_unstable();
        self.index[&roots]
    }

    /// Orbits of flats under the full group, each sorted, smallest member
    /// first.
    pub fn orbits(&self, gt: &GroupTable) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.flats.len()];
        let mut orbits = Vec::new();
        for start in 0..self.flats.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for w in 0..gt.order {
                    let y = self.act(gt, w, x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Order of the setwise stabilizer N(X) of a flat.
    pub fn stabilizer_order(&self, gt: &GroupTable, x: usize) -> usize {
        let target: HashSet<usize> = self.flats[x].roots.iter().copied().collect();
        gt.elements
            .iter()
            .filter(|p| {
                self.flats[x]
                    .roots
                    .iter()
                    .all(|&r| target.contains(&p.root_image(r)))
            })
            .count()
    }

    /// Order of the pointwise stabilizer W_X, the parabolic generated by the
    /// reflections fixing the flat.
    pub fn parabolic_order(&self, rs: &RootSystem, x: usize) -> usize {
        if self.flats[x].roots.is_empty() {
            return 1;
        }
        subgroup_closure(rs, &self.flats[x].roots).order()
    }

    /// Index [N(X) : W_X] of the parabolic in its setwise stabilizer.
    pub fn kreweras_index(&self, rs: &RootSystem, gt: &GroupTable, x: usize) -> usize {
        let nx = self.stabilizer_order(gt, x);
        let wx = self.parabolic_order(rs, x);
        assert_eq!(nx % wx, 0, "parabolic order does not divide stabilizer order");
        nx / wx
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let set: HashSet<usize> = b.iter().copied().collect();
    a.iter().all(|r| set.contains(r))
}

/// All closed root subsets arising as flats, by BFS: repeatedly extend a
/// flat's root set by one more root and close under span membership.
fn enumerate_flats(rs: &RootSystem) -> Vec<Vec<usize>> {
    if let Model::Dihedral { m } = &rs.model {
        let mut out = vec![Vec::new()];
        out.extend((0..*m).map(|i| vec![i]));
        out.push((0..*m).collect());
        return out;
    }
    let n_roots = rs.num_positive_roots();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let empty: Vec<usize> = Vec::new();
    seen.insert(empty.clone());
    let mut queue = VecDeque::from([empty]);
    let mut out = Vec::new();
    while let Some(current) = queue.pop_front() {
        out.push(current.clone());
        for add in 0..n_roots {
            if current.binary_search(&add).is_ok() {
                continue;
            }
            let mut gens = current.clone();
            gens.push(add);
            let k = rs.subset_rank(&gens);
            let closed: Vec<usize> = (0..n_roots)
                .filter(|&r| {
                    let mut probe = gens.clone();
                    probe.push(r);
                    rs.subset_rank(&probe) == k
                })
                .collect();
            if seen.insert(closed.clone()) {
                queue.push_back(closed);
            }
        }
    }
    out
}

/// mu(x, y) for every pair x <= y, by the defining recursion down each
/// interval.
fn mobius_all(flats: &[Flat]) -> Vec<HashMap<usize, i64>> {
    let f = flats.len();
    let mut mobius = vec![HashMap::new(); f];
    for x in 0..f {
        let above: Vec<usize> = (x..f)
            .filter(|&y| is_subset(&flats[x].roots, &flats[y].roots))
            .collect();
        let mut mu: HashMap<usize, i64> = HashMap::new();
        // flats are sorted by codim, so prefixes of `above` are down-closed
        for &y in &above {
            if y == x {
                mu.insert(y, 1);
                continue;
            }
            let mut s = 0i64;
            for &z in &above {
                if z == y {
                    break;
                }
                if is_subset(&flats[z].roots, &flats[y].roots) {
                    s += mu[&z];
                }
            }
            mu.insert(y, -s);
        }
        mobius[x] = mu;
    }
    mobius
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_group, DEFAULT_GROUP_CAP};
    use crate::roots::CoxeterType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&CoxeterType::parse(s).unwrap()).unwrap()
    }

    fn counts_by_codim(lat: &IntersectionLattice) -> Vec<usize> {
        (0..=lat.ambient_dim)
            .map(|k| lat.flats_of_codim(k).len())
            .collect()
    }

    #[test]
    fn a3_flat_census() {
        let r = rs("A3");
        let lat = IntersectionLattice::build(&r);
        assert_eq!(lat.len(), 15);
        assert_eq!(counts_by_codim(&lat), vec![1, 6, 7, 1]);
    }

    #[test]
    fn characteristic_polynomial_factors_into_exponents() {
        // chi_A(t) = prod (t - m_i) with m_i the exponents
        let cases = [
            ("A3", vec![1, 2, 3]),
            ("B3", vec![1, 3, 5]),
            ("H3", vec![1, 5, 9]),
            ("B2", vec![1, 3]),
            ("I2(7)", vec![1, 6]),
            ("A2xA1", vec![1, 1, 2]),
        ];
        for (name, exps) in cases {
            let r = rs(name);
            let lat = IntersectionLattice::build(&r);
            let chi = lat.restriction_char_poly(lat.bottom());
            let mut want = IntPolynomial::from_i64(&[1]);
            for e in &exps {
                want = want.mul(&IntPolynomial::from_i64(&[-e, 1]));
            }
            assert_eq!(chi, want, "{name}");
            let roots: Vec<i64> = chi
                .integer_roots()
                .unwrap()
                .iter()
                .map(|b| i64::try_from(b).unwrap())
                .collect();
            assert_eq!(roots, exps, "{name} coexponents");
        }
    }

    #[test]
    fn chamber_count_is_group_order() {
        for name in ["A3", "B3", "H3", "I2(9)", "A2xB2"] {
            let r = rs(name);
            let gt = enumerate_group(&r, DEFAULT_GROUP_CAP).unwrap();
            let lat = IntersectionLattice::build(&r);
            assert_eq!(
                lat.restriction_chambers(lat.bottom()),
                BigInt::from(gt.order),
                "{name}"
            );
        }
    }

    #[test]
    fn line_restrictions_have_two_chambers() {
        // Every line flat of A3 meets another hyperplane only at the origin.
        let r = rs("A3");
        let lat = IntersectionLattice::build(&r);
        for x in lat.flats_of_codim(2) {
            assert_eq!(lat.flats[x].dim, 1);
            assert_eq!(lat.restriction_chambers(x), BigInt::from(2));
        }
    }

    #[test]
    fn a3_orbits_and_kreweras_indices() {
        let r = rs("A3");
        let gt = enumerate_group(&r, DEFAULT_GROUP_CAP).unwrap();
        let lat = IntersectionLattice::build(&r);
        let orbits = lat.orbits(&gt);
        // V; 6 planes; 4 of type A2 and 3 of type A1xA1; origin
        assert_eq!(orbits.len(), 5);
        let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 3, 4, 6]);

        for x in 0..lat.len() {
            let f = &lat.flats[x];
            let expected_parabolic = match (f.codim, f.roots.len()) {
                (0, _) => 1,
                (1, _) => 2,
                (2, 3) => 6, // A2
                (2, 2) => 4, // A1 x A1
                (3, _) => 24,
                _ => unreachable!(),
            };
            assert_eq!(lat.parabolic_order(&r, x), expected_parabolic);
            // orbit-stabilizer: |orbit| * |N(X)| = |W|
            let orbit_len = orbits.iter().find(|o| o.contains(&x)).unwrap().len();
            assert_eq!(orbit_len * lat.stabilizer_order(&gt, x), gt.order);
        }
    }

    #[test]
    fn dihedral_lattice_shape() {
        let r = rs("I2(8)");
        let lat = IntersectionLattice::build(&r);
        assert_eq!(counts_by_codim(&lat), vec![1, 8, 1]);
        let gt = enumerate_group(&r, DEFAULT_GROUP_CAP).unwrap();
        // Lines fall into two orbits for even m, one for odd.
        assert_eq!(lat.orbits(&gt).len(), 4);
        let r7 = rs("I2(7)");
        let gt7 = enumerate_group(&r7, DEFAULT_GROUP_CAP).unwrap();
        let lat7 = IntersectionLattice::build(&r7);
        assert_eq!(lat7.orbits(&gt7).len(), 3);
    }

    #[test]
    fn mobius_alternating_sum_vanishes() {
        // sum over the whole lattice of mu(V, X) equals chi(1) = 0
        let r = rs("B3");
        let lat = IntersectionLattice::build(&r);
        let total: i64 = (0..lat.len()).map(|x| lat.mu(lat.bottom(), x)).sum();
        assert_eq!(total, 0);
    }
}
