// Development scratch: initial-state overlaps across the exact spectrum and
// comparison with the parity-dressed ("printed") Hamiltonian variant.
use hubbard_qetu::hubbard::{self, ModelParams, Spin};
use hubbard_qetu::oracle;
use hubbard_qetu::pauli::{Pauli, PauliString, PauliSum};
use num_complex::Complex64;

fn initial_state() -> Vec<Complex64> {
    let n = hubbard::NUM_MODES;
    let dim = 1usize << n;
    let up_occ = [true, false, false, true];
    let dn_sign = [-1.0, -1.0, 1.0, 1.0];
    let mut one_q = vec![(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)); n];
    for site in 1..=4 {
        let up = hubbard::canonical_mode(site, Spin::Up);
        one_q[up] = if up_occ[site - 1] {
            (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
        } else {
            (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
        };
        let dn = hubbard::canonical_mode(site, Spin::Down);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        one_q[dn] = (
            Complex64::new(s, 0.0),
            Complex64::new(s * dn_sign[site - 1], 0.0),
        );
    }
    (0..dim)
        .map(|idx| {
            let mut a = Complex64::new(1.0, 0.0);
            for q in 0..n {
                let bit = (idx >> (n - 1 - q)) & 1;
                a *= if bit == 0 { one_q[q].0 } else { one_q[q].1 };
            }
            a
        })
        .collect()
}

// Printed (parity-dressed) H3: every pair as a 4-qubit term with the
// cyclic-complement string.
fn printed_h3(p: ModelParams) -> PauliSum {
    let n = hubbard::NUM_MODES;
    let mode = |s, sp| hubbard::canonical_mode(s, sp);
    let mut sum = PauliSum::new();
    // (1u,2u) with Z on 1d,2d ; (3u,4u) with Z on 3d,4d ;
    // (1d,3d) with Z on 1u,3u ; (2d,4d) with Z on 2u,4u.
    let specs: [((usize, Spin), (usize, Spin), (usize, Spin), (usize, Spin)); 4] = [
        ((1, Spin::Up), (2, Spin::Up), (1, Spin::Down), (2, Spin::Down)),
        ((3, Spin::Up), (4, Spin::Up), (3, Spin::Down), (4, Spin::Down)),
        ((1, Spin::Down), (3, Spin::Down), (1, Spin::Up), (3, Spin::Up)),
        ((2, Spin::Down), (4, Spin::Down), (2, Spin::Up), (4, Spin::Up)),
    ];
    for (a, b, z1, z2) in specs {
        for end in [Pauli::X, Pauli::Y] {
            let ops = [
                (mode(a.0, a.1), end),
                (mode(b.0, b.1), end),
                (mode(z1.0, z1.1), Pauli::Z),
                (mode(z2.0, z2.1), Pauli::Z),
            ];
            sum.push(-p.t / 2.0, PauliString::from_ops(n, &ops));
        }
    }
    sum
}

fn report(label: &str, h: &nalgebra::DMatrix<Complex64>, psi: &[Complex64]) {
    let spec = oracle::exact_spectrum(h).unwrap();
    let e = &spec.eigenvalues;
    println!("== {label} ==");
    println!("lambda0 = {:.9}, lambda_max = {:.9}", e[0], e[e.len() - 1]);
    let mut shown = 0;
    for k in 0..e.len() {
        let col = spec.eigenvectors.column(k);
        let ov: Complex64 = col.iter().zip(psi).map(|(a, b)| a.conj() * b).sum();
        if ov.norm() > 1e-8 && shown < 10 {
            println!("  E[{k}] = {:+.9}  |<E|init>| = {:.6}", e[k], ov.norm());
            shown += 1;
        }
    }
}

fn main() {
    let p = ModelParams::default();
    let psi = initial_state();
    let n = hubbard::NUM_MODES;

    let h_exact = oracle::fock_hamiltonian(p);
    report("exact H", &h_exact, &psi);

    let (h1, h2, _h3) = hubbard::split_hamiltonian(p);
    let h_printed = h1.add(&h2).add(&printed_h3(p)).to_matrix(n).unwrap();
    report("printed H (dressed H3)", &h_printed, &psi);
}
