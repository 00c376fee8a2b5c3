//! Random states, density matrices and unitaries for tests, examples and
//! exploration. All generators take the caller's RNG so runs can be seeded.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, RngExt};
use rand_distr::StandardNormal;

use crate::tensor::{CMatrix, CVector, DensityMatrix, StateVector};

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state over the given subsystem dimensions.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, dims: &[usize]) -> StateVector {
    let total: usize = dims.iter().product();
    let mut amps = CVector::from_fn(total, |_, _| gaussian_complex(rng));
    let norm = amps.norm();
    amps /= Complex64::new(norm, 0.0);
    StateVector::new(amps, dims.to_vec()).expect("normalized by construction")
}

/// Haar-random pure three-qubit state.
pub fn random_three_qubit<R: Rng + ?Sized>(rng: &mut R) -> crate::states::ThreeQubitState {
    crate::states::ThreeQubitState::from_state_vector(random_state(rng, &[2, 2, 2]))
        .expect("dims are [2, 2, 2]")
}

/// Full-rank random density matrix `G G^dagger / tr` with Gaussian `G`.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, dims: &[usize]) -> DensityMatrix {
    let total: usize = dims.iter().product();
    let g = CMatrix::from_fn(total, total, |_, _| gaussian_complex(rng));
    let mut rho = &g * g.adjoint();
    let trace = rho.trace().re;
    rho.scale_mut(1.0 / trace);
    DensityMatrix::new(rho, dims.to_vec()).expect("Gram matrix is a valid state")
}

/// Random product state `rho1 (x) rho2 (x) rho3` of mixed single qubits.
pub fn random_product_density<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let a = random_density(rng, &[2]);
    let b = random_density(rng, &[2]);
    let c = random_density(rng, &[2]);
    a.tensor(&b).tensor(&c)
}

/// Haar-random unitary via QR of a Gaussian matrix with phase-fixed `R`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let g = DMatrix::<Complex64>::from_fn(n, n, |_, _| gaussian_complex(rng));
    let qr = g.qr();
    let q = qr.q();
    let r = qr.r();
    let phases = CVector::from_fn(n, |k, _| {
        let d = r[(k, k)];
        if d.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            d / d.norm()
        }
    });
    let mut u = q;
    for col in 0..n {
        for row in 0..n {
            u[(row, col)] *= phases[col];
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{identity, max_abs_diff};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_density_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let rho = random_density(&mut rng, &[2, 2, 2]);
        assert!(rho.validate().is_ok());
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in [2, 3, 8] {
            let u = random_unitary(&mut rng, n);
            let gram = u.adjoint() * &u;
            assert!(max_abs_diff(&gram, &identity(n)) < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn random_state_is_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let psi = random_state(&mut rng, &[2, 2, 2]);
        assert!((psi.amps().norm() - 1.0).abs() < 1e-14);
    }
}
