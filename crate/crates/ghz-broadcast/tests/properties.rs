//! Structural invariants checked on randomized inputs: trace/permutation
//! algebra, isometry behavior, measure ranges and covariances, and the
//! agreement between the joint-state pipeline and the product-channel route.

use ghz_broadcast::cloning::{
    broadcast_local, broadcast_nonlocal, clone_channel_product, local_cloner_isometry,
    nonlocal_cloner_isometry,
};
use ghz_broadcast::entanglement::{full_report, PAIRS};
use ghz_broadcast::sample::{random_density, random_state, random_three_qubit};
use ghz_broadcast::states::{parse_state, serialize_state, ThreeQubitState};
use ghz_broadcast::tensor::{fidelity, max_abs_diff, StateVector};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn partial_trace_composes() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..20 {
        let rho = random_density(&mut rng, &[2, 2, 2]);
        let one_step = rho.partial_trace(&[1]).unwrap();
        // trace out qubit 2, then the relabeled third qubit
        let two_step = rho
            .partial_trace(&[1, 3])
            .unwrap()
            .partial_trace(&[1])
            .unwrap();
        assert!(max_abs_diff(one_step.mat(), two_step.mat()) <= 1e-12);
        assert!((one_step.trace() - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn isometries_preserve_norm_on_1000_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let local = local_cloner_isometry();
    let nonlocal = nonlocal_cloner_isometry(8).unwrap();
    for k in 0..1000 {
        let (out, label) = if k % 2 == 0 {
            (local.apply(&random_state(&mut rng, &[2])).unwrap(), "local")
        } else {
            (nonlocal.apply(&random_state(&mut rng, &[8])).unwrap(), "nonlocal")
        };
        let deviation = (out.amps().norm() - 1.0).abs();
        assert!(deviation <= 1e-12, "{label} cloner changed the norm by {deviation:e}");
    }
}

#[test]
fn permutation_preserves_the_eigenvalue_multiset() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let perms: [[usize; 3]; 5] = [
        [1, 3, 2],
        [2, 1, 3],
        [2, 3, 1],
        [3, 1, 2],
        [3, 2, 1],
    ];
    for _ in 0..20 {
        let rho = random_density(&mut rng, &[2, 2, 2]);
        let perm = perms[rng.random_range(0..perms.len())];
        let permuted = rho.permute_subsystems(&perm).unwrap();
        let mut a = rho.eigenvalues();
        let mut b = permuted.eigenvalues();
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        let worst = a
            .iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(worst <= 1e-10);
    }
}

#[test]
fn measures_stay_in_range_on_1000_random_density_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for _ in 0..1000 {
        let rho = random_density(&mut rng, &[2, 2, 2]);
        let report = full_report(&rho).expect("measures in range");
        assert!((0.0..=1.0).contains(&report.e3));
        assert!(report.e2.iter().all(|e| (0.0..=1.0).contains(e)));
    }
}

#[test]
fn relabeling_qubits_permutes_the_pair_measures() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let perms: [[usize; 3]; 5] = [
        [1, 3, 2],
        [2, 1, 3],
        [2, 3, 1],
        [3, 1, 2],
        [3, 2, 1],
    ];
    for k in 0..100 {
        let rho = random_density(&mut rng, &[2, 2, 2]);
        let perm = perms[k % perms.len()];
        let report = full_report(&rho).unwrap();
        let permuted_report = full_report(&rho.permute_subsystems(&perm).unwrap()).unwrap();
        assert!((report.e3 - permuted_report.e3).abs() <= 1e-9);
        for &(m, n) in &PAIRS {
            // output pair (m, n) holds input qubits (perm[m-1], perm[n-1])
            let expected = report.e2_pair(perm[m - 1], perm[n - 1]).unwrap();
            let got = permuted_report.e2_pair(m, n).unwrap();
            assert!((expected - got).abs() <= 1e-9);
        }
    }
}

#[test]
fn local_pipeline_agrees_with_the_channel_product_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for _ in 0..50 {
        let psi = random_three_qubit(&mut rng);
        let result = broadcast_local(&psi).unwrap();
        let via_channel = clone_channel_product(&psi.density()).unwrap();
        assert!(max_abs_diff(result.originals.mat(), via_channel.mat()) <= 1e-10);
        assert!(max_abs_diff(result.copies.mat(), via_channel.mat()) <= 1e-10);
    }
}

#[test]
fn swapping_originals_with_copies_leaves_both_pipelines_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for _ in 0..10 {
        let psi = random_three_qubit(&mut rng);
        for result in [broadcast_local(&psi).unwrap(), broadcast_nonlocal(&psi).unwrap()] {
            let swapped = result
                .six_qubit
                .permute_subsystems(&[2, 1, 4, 3, 6, 5])
                .unwrap();
            assert!(max_abs_diff(swapped.mat(), result.six_qubit.mat()) <= 1e-12);
        }
    }
}

#[test]
fn local_pipeline_commutes_with_input_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let perms: [[usize; 3]; 3] = [[2, 1, 3], [3, 1, 2], [1, 3, 2]];
    for k in 0..15 {
        let psi = random_three_qubit(&mut rng);
        let perm = perms[k % perms.len()];
        let permuted_input = ThreeQubitState::from_state_vector(
            psi.state_vector().permute_subsystems(&perm).unwrap(),
        )
        .unwrap();
        let direct = broadcast_local(&permuted_input).unwrap();
        let relabeled = broadcast_local(&psi)
            .unwrap()
            .originals
            .permute_subsystems(&perm)
            .unwrap();
        assert!(max_abs_diff(direct.originals.mat(), relabeled.mat()) <= 1e-10);
    }
}

#[test]
fn nonlocal_clone_fidelity_is_uniform_over_basis_states() {
    let cloner = nonlocal_cloner_isometry(8).unwrap();
    // c^2 + (N - 1) d^2 with N = 8
    let expected = 2.0 / 9.0 + 7.0 / 18.0;
    for i in 0..8 {
        let psi = StateVector::basis(vec![8], i).unwrap();
        let out = cloner.apply(&psi).unwrap();
        let clone = out.reduced_density(&[1]).unwrap();
        let f = fidelity(&psi, &clone).unwrap();
        assert!((f - expected).abs() <= 1e-12, "basis {i}: fidelity {f}");
    }
}

#[test]
fn state_files_round_trip_for_100_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for _ in 0..100 {
        let psi = random_three_qubit(&mut rng);
        let parsed = parse_state(&serialize_state(&psi)).unwrap();
        let worst = (0..8)
            .map(|k| (parsed.amp(k) - psi.amp(k)).norm())
            .fold(0.0, f64::max);
        assert!(worst <= 1e-15);
    }
}
