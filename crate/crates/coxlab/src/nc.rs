//! The lattice of noncrossing partitions NC(W): the interval [1, c] in
//! absolute order, where c is a Coxeter element and u <= v means
//! l(u) + l(u⁻¹v) = l(v) for the reflection length l.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::group::{
    coxeter_element, subgroup_closure, CoxeterMode, GroupTable, SignedPerm,
};
use crate::roots::RootSystem;
use crate::{Error, Result};

/// The interval [1, c] of some group, with the order relation materialized.
pub struct NcPoset {
    /// Positions into the ambient element list (group table or subgroup).
    pub elems: Vec<usize>,
    /// Reflection length of each member, indexed like `elems`.
    pub lengths: Vec<u8>,
    /// leq[i][j]: elems[i] <= elems[j].
    leq: Vec<Vec<bool>>,
    /// l(c), the top rank.
    pub rank: usize,
}

impl NcPoset {
    /// `inv_mul(u, v)` must return the ambient id of u⁻¹v.
    pub fn build<F>(order: usize, len: &[u8], c: usize, inv_mul: F) -> NcPoset
    where
        F: Fn(usize, usize) -> usize,
    {
        let lc = len[c];
        let below = |u: usize, v: usize| len[u] + len[inv_mul(u, v)] == len[v];
        let mut elems: Vec<usize> = (0..order).filter(|&u| below(u, c)).collect();
        elems.sort_by_key(|&u| (len[u], u));
        let lengths: Vec<u8> = elems.iter().map(|&u| len[u]).collect();
        let k = elems.len();
        let mut leq = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                leq[i][j] = below(elems[i], elems[j]);
            }
        }
        NcPoset {
            elems,
            lengths,
            leq,
            rank: lc as usize,
        }
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.rank + 1];
        for &l in &self.lengths {
            out[l as usize] += 1;
        }
        out
    }

    /// Number of maximal chains 1 = w_0 < w_1 < ... < w_rank = c, counted by
    /// dynamic programming over the cover relation.
    pub fn max_chains(&self) -> BigInt {
        let k = self.size();
        let mut f = vec![BigInt::zero(); k];
        for i in 0..k {
            if self.lengths[i] == 0 {
                f[i] = BigInt::one();
            }
        }
        // elems are sorted by length, so one forward sweep suffices
        for j in 0..k {
            if self.lengths[j] == 0 {
                continue;
            }
            let mut acc = BigInt::zero();
            for i in 0..k {
                if self.lengths[i] + 1 == self.lengths[j] && self.leq[i][j] {
                    acc += &f[i];
                }
            }
            f[j] = acc;
        }
        let top = (0..k).find(|&i| self.lengths[i] as usize == self.rank);
        top.map(|i| f[i].clone()).unwrap_or_else(BigInt::zero)
    }

    /// Number of multichains w_1 <= ... <= w_k, i.e. 1ᵀ Q^{k-1} 1 for the
    /// incidence matrix Q of the order relation.
    pub fn zeta(&self, k: usize) -> BigInt {
        assert!(k >= 1, "zeta needs k >= 1");
        let n = self.size();
        let mut v = vec![BigInt::one(); n];
        for _ in 1..k {
            let mut next = vec![BigInt::zero(); n];
            for (i, row) in self.leq.iter().enumerate() {
                for j in 0..n {
                    if row[j] {
                        next[i] += &v[j];
                    }
                }
            }
            v = next;
        }
        v.iter().sum()
    }
}

/// NC(W) for the full group, using the bipartite Coxeter element.
pub fn nc_of_group(rs: &RootSystem, gt: &GroupTable) -> Result<NcPoset> {
    let c = coxeter_element(rs, CoxeterMode::Bipartite);
    let c_id = gt
        .lookup(&c)
        .ok_or_else(|| Error::PropertyViolation("coxeter element not in table".into()))?;
    let poset = NcPoset::build(gt.order, &gt.lengths, c_id, |u, v| {
        gt.mul(gt.inv(u), v)
    });
    if poset.rank != rs.rank {
        return Err(Error::PropertyViolation(format!(
            "coxeter element has reflection length {} != rank {}",
            poset.rank, rs.rank
        )));
    }
    Ok(poset)
}

/// NC(W_X) for the parabolic fixing a flat, built inside the subgroup
/// generated by the flat's reflections; the Coxeter element is the product
/// of the subsystem's simple reflections.
pub fn nc_of_parabolic(rs: &RootSystem, flat_roots: &[usize]) -> Result<NcPoset> {
    let sub = subgroup_closure(rs, flat_roots);
    let simples = rs.simple_subsystem(flat_roots);
    let mut c = SignedPerm::identity(rs.num_positive_roots());
    for &s in &simples {
        c = c.compose(&rs.refl_perms[s]);
    }
    let c_id = *sub
        .index
        .get(&c)
        .ok_or_else(|| Error::PropertyViolation("subsystem coxeter element escapes".into()))?;
    let poset = NcPoset::build(sub.order(), &sub.lengths, c_id, |u, v| {
        sub.mul(sub.inv(u), v)
    });
    let expected = rs.subset_rank(flat_roots);
    if poset.rank != expected {
        return Err(Error::PropertyViolation(format!(
            "parabolic coxeter element has length {} != codim {}",
            poset.rank, expected
        )));
    }
    Ok(poset)
}
