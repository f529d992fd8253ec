//! Scalar abstraction: every numeric routine in this crate is generic over a
//! real scalar type, instantiated in practice as `f32` or `f64`.

use nalgebra::{Complex, DMatrix, DVector, RealField};
use num_traits::{FromPrimitive, ToPrimitive};
use rand_distr::{Distribution, StandardNormal};

/// Real scalar type usable for all estimation routines.
pub trait Scalar:
    RealField + FromPrimitive + ToPrimitive + Copy + Default + std::iter::Sum
{
    /// Shorthand for a constant given as `f64`.
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: RealField + FromPrimitive + ToPrimitive + Copy + Default + std::iter::Sum
{
}

pub fn probe<F: Scalar>(m: &DMatrix<F>) -> (F, F, DVector<Complex<F>>)
where
    StandardNormal: Distribution<F>,
{
    let sym = m * m.transpose();
    let chol = sym.clone().cholesky().expect("pd");
    let _inv = chol.inverse();
    let eig = sym.clone().symmetric_eigen();
    let lmin = eig.eigenvalues.iter().copied().fold(F::c(1e300), |a, b| a.min(b));
    let ce = m.clone().complex_eigenvalues();
    let det = sym.determinant();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let z: F = StandardNormal.sample(&mut rng);
    let _ = z.abs() + z.exp() + z.ln().max(F::zero()) + F::c(0.5).powi(2) + det.sqrt();
    (lmin, det, ce)
}

use rand::SeedableRng;
