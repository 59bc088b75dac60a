// Development scratch: prints model constants.
use hubbard_qetu::hubbard::{self, ModelParams, Spin};
use hubbard_qetu::oracle;
use num_complex::Complex64;

fn main() {
    let p = ModelParams::default();
    let h = oracle::fock_hamiltonian(p);
    let spec = oracle::exact_spectrum(&h).unwrap();
    let e = &spec.eigenvalues;
    println!("lambda0       = {:.12}", e[0]);
    println!("lambda1(raw)  = {:.12}", e[1]);
    println!("first_excited = {:.12}", spec.first_excited_energy(1e-9));
    println!("lambda_max    = {:.12}", spec.max_eigenvalue());
    println!("degeneracy of ground: {}", e.iter().filter(|&&x| (x - e[0]).abs() < 1e-9).count());

    // Initial state |1001>|--++> placed per canonical ordering, ancilla-free.
    // Build directly in the 8-qubit space: qubit q = canonical position q.
    let n = hubbard::NUM_MODES;
    let dim = 1usize << n;
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    // Single-qubit states per position.
    // spin-up sites 1..4 -> |1>,|0>,|0>,|1>; spin-down -> |->,|->,|+>,|+>
    let up_occ = [true, false, false, true];
    let dn_sign = [-1.0, -1.0, 1.0, 1.0]; // |-> = (|0> - |1>)/sqrt2
    // position -> (amp0, amp1)
    let mut one_q: Vec<(Complex64, Complex64)> = vec![(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)); n];
    for site in 1..=4 {
        let up_mode = hubbard::canonical_mode(site, Spin::Up);
        one_q[up_mode] = if up_occ[site - 1] {
            (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
        } else {
            (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
        };
        let dn_mode = hubbard::canonical_mode(site, Spin::Down);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        one_q[dn_mode] = (
            Complex64::new(s, 0.0),
            Complex64::new(s * dn_sign[site - 1], 0.0),
        );
    }
    for idx in 0..dim {
        let mut a = Complex64::new(1.0, 0.0);
        for q in 0..n {
            let bit = (idx >> (n - 1 - q)) & 1;
            a *= if bit == 0 { one_q[q].0 } else { one_q[q].1 };
        }
        amps[idx] = a;
    }
    let gs = spec.ground_state();
    let mut overlap = Complex64::new(0.0, 0.0);
    for idx in 0..dim {
        overlap += gs[idx].conj() * amps[idx];
    }
    println!("gamma         = {:.6}", overlap.norm());

    let eta = 0.1;
    let sh = hubbard::shift_coefficients(spec.min_eigenvalue(), spec.max_eigenvalue(), eta).unwrap();
    println!("c1 = {:.12}, c2 = {:.12}", sh.c1, sh.c2);
    let l0s = sh.c1 * e[0] + sh.c2;
    let l1s = sh.c1 * spec.first_excited_energy(1e-9) + sh.c2;
    println!("shifted lambda0 = {:.6}, lambda1 = {:.6}, gap = {:.6}", l0s, l1s, l1s - l0s);

    // Ground state number sector
    let nup = hubbard::number_operator(Spin::Up).to_matrix(n).unwrap();
    let ndn = hubbard::number_operator(Spin::Down).to_matrix(n).unwrap();
    let exp_up = (gs.adjoint() * &nup * &gs)[(0, 0)].re + 2.0; // -1/2 sum Z + 2
    let exp_dn = (gs.adjoint() * &ndn * &gs)[(0, 0)].re + 2.0;
    println!("ground sector N_up = {:.6}, N_dn = {:.6}", exp_up, exp_dn);
}
