// Development scratch: Trotter error vs n for candidate per-V evolution
// times, and lowered controlled-V depth.
use hubbard_qetu::circuit::{circuit_unitary, depth_excluding_rz};
use hubbard_qetu::hubbard::{shift_coefficients, ModelParams};
use hubbard_qetu::oracle::{dense_expm, exact_spectrum, fock_hamiltonian, phase_aligned_distance};
use hubbard_qetu::swap_network::{build_controlled_v, TrotterPlan};
use nalgebra::DMatrix;
use num_complex::Complex64;

fn main() {
    let p = ModelParams::default();
    let h = fock_hamiltonian(p);
    let spec = exact_spectrum(&h).unwrap();
    let shift = shift_coefficients(spec.min_eigenvalue(), spec.max_eigenvalue(), 0.1).unwrap();
    let dim = h.nrows();

    for dt in [0.5f64, 1.0] {
        println!("dt = {dt}");
        for n in [1usize, 2, 4, 8, 16, 32] {
            let plan = TrotterPlan::new(n, dt, p, shift);
            let v = build_controlled_v(&plan).lowered().unwrap();
            let u = circuit_unitary(&v).unwrap();
            let hsh = &h * Complex64::new(shift.c1, 0.0)
                + DMatrix::identity(dim, dim) * Complex64::new(shift.c2, 0.0);
            let backward = dense_expm(&hsh, dt).unwrap();
            let mut target = DMatrix::<Complex64>::zeros(2 * dim, 2 * dim);
            for r in 0..dim {
                for c in 0..dim {
                    target[(r, c)] = backward[(c, r)].conj();
                    target[(r + dim, c + dim)] = backward[(r, c)];
                }
            }
            let err = phase_aligned_distance(&u, &target);
            let depth = depth_excluding_rz(&v).unwrap();
            println!("  n = {n:3}  l2err = {err:.6e}  depth = {depth}");
        }
    }
}
