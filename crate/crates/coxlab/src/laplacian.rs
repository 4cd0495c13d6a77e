//! Laplacians attached to sets of reflections.
//!
//! For a subset R of the positive roots, L_R = Σ_{σ∈R} (I - s_σ) acting on
//! the reflection representation. For the full root set of an irreducible
//! group this is h·I. The pseudodeterminant (product of nonzero eigenvalues)
//! is read off as the lowest nonzero coefficient of det(tI + L).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arrangement::IntersectionLattice;
use crate::matrix::QMatrix;
use crate::poly::IntPolynomial;
use crate::roots::{Model, RootSystem};
use crate::{Error, Result};

/// L_R = Σ (I - s_σ) from the stored reflection matrices.
pub fn laplacian_from_reflections(rs: &RootSystem, subset: &[usize]) -> Result<QMatrix> {
    let mm = rs.matrix_model()?;
    let n = rs.rank;
    let id = QMatrix::identity(n);
    let mut l = QMatrix::zeros(n, n);
    for &i in subset {
        l = l.add(&id.sub(&mm.reflections[i]));
    }
    Ok(l)
}

/// The same Laplacian assembled from rank-one pieces: I - s_σ = σ(Gσ)ᵀ.
pub fn laplacian_from_roots(rs: &RootSystem, subset: &[usize]) -> Result<QMatrix> {
    let mm = rs.matrix_model()?;
    let n = rs.rank;
    let mut l = QMatrix::zeros(n, n);
    for &i in subset {
        let sigma = &mm.posroots[i];
        let gs = mm.gram.mul_vec(sigma);
        l = l.add(&QMatrix::outer(sigma, &gs));
    }
    Ok(l)
}

/// det(tI + L_R) for a closed root subset, with the abstract dihedral cases
/// supplied analytically: the full line set gives the scalar map m·I and a
/// single line gives one rank-one projector with eigenvalue 2.
pub fn char_poly(rs: &RootSystem, subset: &[usize]) -> Result<IntPolynomial> {
    match &rs.model {
        Model::Matrix(_) => laplacian_from_reflections(rs, subset)?.charpoly(),
        Model::Dihedral { m } => match subset.len() {
            0 => Ok(IntPolynomial::from_i64(&[0, 0, 1])),
            1 => Ok(IntPolynomial::from_i64(&[0, 2, 1])),
            k if k == *m => {
                let mi = *m as i64;
                Ok(IntPolynomial::from_i64(&[mi * mi, 2 * mi, 1]))
            }
            _ => Err(Error::PropertyViolation(format!(
                "no closed dihedral subset of size {}",
                subset.len()
            ))),
        },
    }
}

pub fn w_laplacian(rs: &RootSystem) -> Result<QMatrix> {
    laplacian_from_reflections(rs, &rs.all_root_indices())
}

/// Product of the nonzero eigenvalues: the lowest nonzero coefficient of
/// det(tI + L).
pub fn pdet(p: &IntPolynomial) -> BigInt {
    p.coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .unwrap_or_else(BigInt::zero)
}

pub fn flat_pdet(rs: &RootSystem, subset: &[usize]) -> Result<BigInt> {
    Ok(pdet(&char_poly(rs, subset)?))
}

/// Both sides of the flat expansion of det(tI + L_W): the left side is the
/// characteristic polynomial itself, the right collects pdet(L_X) t^{dim X}
/// over all flats X of the arrangement.
pub fn flat_expansion(
    rs: &RootSystem,
    lat: &IntersectionLattice,
) -> Result<(IntPolynomial, IntPolynomial)> {
    let lhs = char_poly(rs, &rs.all_root_indices())?;
    let mut coeffs = vec![BigInt::zero(); rs.rank + 1];
    for f in &lat.flats {
        coeffs[f.dim] += flat_pdet(rs, &f.roots)?;
    }
    Ok((lhs, IntPolynomial::new(coeffs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CoxeterType;
    use crate::scalar::QScalar;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&CoxeterType::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn full_laplacian_is_h_times_identity() {
        for (name, h) in [("A3", 4), ("B3", 6), ("H3", 10), ("I2(5)", 5), ("F4", 12)] {
            let r = rs(name);
            let l = w_laplacian(&r).unwrap();
            let want = QMatrix::identity(r.rank).scale(&QScalar::from_int(h));
            assert_eq!(l, want, "{name}");
        }
    }

    #[test]
    fn product_laplacian_is_blockwise_scalar() {
        let r = rs("A2xB2");
        let p = char_poly(&r, &r.all_root_indices()).unwrap();
        // (t+3)²(t+4)²
        let want = IntPolynomial::from_i64(&[3, 1])
            .mul(&IntPolynomial::from_i64(&[3, 1]))
            .mul(&IntPolynomial::from_i64(&[4, 1]))
            .mul(&IntPolynomial::from_i64(&[4, 1]));
        assert_eq!(p, want);
    }

    #[test]
    fn two_constructions_agree() {
        for name in ["A3", "B3", "H3", "D4"] {
            let r = rs(name);
            let all = r.all_root_indices();
            assert_eq!(
                laplacian_from_reflections(&r, &all).unwrap(),
                laplacian_from_roots(&r, &all).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn gram_self_adjointness() {
        // G L = Lᵀ G: L is self-adjoint for the invariant inner product.
        for name in ["B3", "H3", "F4"] {
            let r = rs(name);
            let mm = r.matrix_model().unwrap();
            let all = r.all_root_indices();
            let subsets: Vec<Vec<usize>> = vec![all.clone(), all[..4].to_vec(), vec![0]];
            for sub in subsets {
                let l = laplacian_from_reflections(&r, &sub).unwrap();
                assert_eq!(mm.gram.mul(&l), l.transpose().mul(&mm.gram), "{name}");
            }
        }
    }

    #[test]
    fn a3_charpoly_display() {
        let p = char_poly(&rs("A3"), &rs("A3").all_root_indices()).unwrap();
        assert_eq!(p.to_string(), "t^3 + 12 t^2 + 48 t + 64");
    }

    #[test]
    fn complete_graph_model_of_a3() {
        // The symmetric group S4 acting on 4 points gives the Laplacian of
        // the complete graph K4; its nonzero spectrum matches h·I on the
        // reflection representation.
        let mut k4 = QMatrix::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                k4.set(
                    i,
                    j,
                    QScalar::from_int(if i == j { 3 } else { -1 }),
                );
            }
        }
        let p = k4.charpoly().unwrap();
        // t(t+4)³
        let refl = char_poly(&rs("A3"), &rs("A3").all_root_indices()).unwrap();
        assert_eq!(p, refl.shift(1));
        assert_eq!(pdet(&p), BigInt::from(64));
    }

    #[test]
    fn flat_expansion_matches() {
        for name in ["A3", "B3", "H3", "B2", "I2(6)", "I2(7)", "A2xA1"] {
            let r = rs(name);
            let lat = IntersectionLattice::build(&r);
            let (lhs, rhs) = flat_expansion(&r, &lat).unwrap();
            assert_eq!(lhs, rhs, "{name}");
        }
    }

    #[test]
    fn pdet_of_parabolic_flats() {
        let r = rs("A3");
        let lat = IntersectionLattice::build(&r);
        // codim-2 flats: type A2 (3 roots, pdet 9) or A1xA1 (2 roots, pdet 4)
        let mut pdets: Vec<i64> = lat
            .flats_of_codim(2)
            .into_iter()
            .map(|x| {
                i64::try_from(&flat_pdet(&r, &lat.flats[x].roots).unwrap()).unwrap()
            })
            .collect();
        pdets.sort_unstable();
        assert_eq!(pdets, vec![4, 4, 4, 9, 9, 9, 9]);
    }
}
