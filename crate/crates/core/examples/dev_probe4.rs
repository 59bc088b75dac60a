// Development scratch: full low-band overlap table for candidate initial
// states, against both the exact H and the parity-dressed printed H.
use hubbard_qetu::hubbard::{self, ModelParams, Spin};
use hubbard_qetu::oracle;
use hubbard_qetu::pauli::{Pauli, PauliString, PauliSum};
use num_complex::Complex64;

fn product_state(up_occ: [bool; 4], dn_plus: [bool; 4]) -> Vec<Complex64> {
    let n = hubbard::NUM_MODES;
    let dim = 1usize << n;
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
        let sign = if dn_plus[site - 1] { 1.0 } else { -1.0 };
        one_q[dn] = (Complex64::new(s, 0.0), Complex64::new(s * sign, 0.0));
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

fn printed_h3(p: ModelParams) -> PauliSum {
    let n = hubbard::NUM_MODES;
    let mode = |s, sp| hubbard::canonical_mode(s, sp);
    let mut sum = PauliSum::new();
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

fn table(label: &str, h: &nalgebra::DMatrix<Complex64>, psi: &[Complex64]) {
    let spec = oracle::exact_spectrum(h).unwrap();
    println!("-- {label}");
    let mut acc = 0.0;
    for k in 0..20 {
        let col = spec.eigenvectors.column(k);
        let ov: Complex64 = col.iter().zip(psi).map(|(a, b)| a.conj() * b).sum();
        acc += ov.norm_sqr();
        println!(
            "   k={k:2}  E = {:+.9}  |ov| = {:.6}  cum|ov|^2 = {:.4}",
            spec.eigenvalues[k],
            ov.norm(),
            acc
        );
    }
}

fn main() {
    let p = ModelParams::default();
    let h_exact = oracle::fock_hamiltonian(p);
    let (h1, h2, _) = hubbard::split_hamiltonian(p);
    let h_printed = h1
        .add(&h2)
        .add(&printed_h3(p))
        .to_matrix(hubbard::NUM_MODES)
        .unwrap();

    let a = product_state([true, false, false, true], [false, false, true, true]);
    let b = product_state([false, true, false, true], [false, false, true, true]);

    table("exact H, |1001>|--++>", &h_exact, &a);
    table("exact H, |0101>|--++>", &h_exact, &b);
    table("printed H, |1001>|--++>", &h_printed, &a);
    table("printed H, |0101>|--++>", &h_printed, &b);
}
