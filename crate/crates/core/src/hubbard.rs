//! The 2x2 Fermi-Hubbard model in Jordan-Wigner form: full Hamiltonian,
//! the H1/H2/H3 splitting used by the swap network, the control strings
//! K1/K2, and the affine spectral shift.
//!
//! The eight spin-orbitals are linearized along the lattice loop
//! `3u, 1u, 1d, 2d, 2u, 4u, 4d, 3d` (u = spin up, d = spin down); the JW
//! qubit index of a spin-orbital is its position in this list. With this
//! start of the loop every H2 hopping pair is JW-adjacent, so H2 carries no
//! Z-strings, onsite partners sit next to each other (cyclically), and the
//! interaction and H2 layers of the swap network act on disjoint staggers.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliSum};

/// Number of spin-orbitals (= system qubits).
pub const NUM_MODES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

/// One of the eight spin-orbitals of the 2x2 lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinOrbital {
    /// Lattice site, 1..=4. Sites 1,2 form the top row, 3,4 the bottom row;
    /// 1 sits above 3 and 2 above 4.
    pub site: usize,
    pub spin: Spin,
}

impl SpinOrbital {
    pub fn new(site: usize, spin: Spin) -> Self {
        assert!((1..=4).contains(&site), "site must be 1..=4");
        Self { site, spin }
    }
}

/// Canonical ordering of the spin-orbitals; index = JW qubit index.
pub const CANONICAL_ORDER: [SpinOrbital; NUM_MODES] = [
    SpinOrbital { site: 3, spin: Spin::Up },
    SpinOrbital { site: 1, spin: Spin::Up },
    SpinOrbital { site: 1, spin: Spin::Down },
    SpinOrbital { site: 2, spin: Spin::Down },
    SpinOrbital { site: 2, spin: Spin::Up },
    SpinOrbital { site: 4, spin: Spin::Up },
    SpinOrbital { site: 4, spin: Spin::Down },
    SpinOrbital { site: 3, spin: Spin::Down },
];

/// JW mode index of a spin-orbital under the canonical ordering.
pub fn canonical_mode(site: usize, spin: Spin) -> usize {
    CANONICAL_ORDER
        .iter()
        .position(|o| o.site == site && o.spin == spin)
        .expect("site must be 1..=4")
}

/// Model parameters of Eq. (1): onsite repulsion u and hopping energy t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub u: f64,
    pub t: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self { u: 1.0, t: 1.0 }
    }
}

/// Coefficients of the affine transformation H_sh = c1 H + c2 I that maps
/// the spectrum into [eta, pi - eta].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub eta: f64,
}

/// The four onsite pairs as (site, up-mode, down-mode).
pub fn onsite_pairs() -> [(usize, usize, usize); 4] {
    [1, 2, 3, 4].map(|site| {
        (
            site,
            canonical_mode(site, Spin::Up),
            canonical_mode(site, Spin::Down),
        )
    })
}

/// Hopping pairs of H2: vertical for spin up, horizontal for spin down.
/// All are JW-adjacent under the canonical ordering.
pub fn h2_hop_pairs() -> [(usize, usize, Spin); 4] {
    [
        (1, 3, Spin::Up),
        (2, 4, Spin::Up),
        (1, 2, Spin::Down),
        (3, 4, Spin::Down),
    ]
}

/// Hopping pairs of H3: horizontal for spin up, vertical for spin down.
pub fn h3_hop_pairs() -> [(usize, usize, Spin); 4] {
    [
        (1, 2, Spin::Up),
        (3, 4, Spin::Up),
        (1, 3, Spin::Down),
        (2, 4, Spin::Down),
    ]
}

/// JW image of a single hopping term a_i^dag a_j + a_j^dag a_i: two Pauli
/// strings (XX and YY) with the interior Z-string between the modes, each
/// with coefficient -t/2.
fn hop_terms(t: f64, site_i: usize, site_j: usize, spin: Spin) -> Vec<(f64, PauliString)> {
    let a = canonical_mode(site_i, spin);
    let b = canonical_mode(site_j, spin);
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let mut out = Vec::with_capacity(2);
    for end in [Pauli::X, Pauli::Y] {
        let mut ops = vec![(lo, end), (hi, end)];
        for k in lo + 1..hi {
            ops.push((k, Pauli::Z));
        }
        out.push((-t / 2.0, PauliString::from_ops(NUM_MODES, &ops)));
    }
    out
}

/// Onsite interaction H1 = (u/4) sum_j Z_{j,up} Z_{j,down} (symmetrized
/// convention; identity offsets dropped).
pub fn build_h1(p: ModelParams) -> PauliSum {
    let mut sum = PauliSum::new();
    for (_, up, dn) in onsite_pairs() {
        sum.push(
            p.u / 4.0,
            PauliString::from_ops(NUM_MODES, &[(up, Pauli::Z), (dn, Pauli::Z)]),
        );
    }
    sum
}

/// First half of the hopping term; JW-adjacent pairs, no Z-strings.
pub fn build_h2(p: ModelParams) -> PauliSum {
    let mut sum = PauliSum::new();
    for (i, j, spin) in h2_hop_pairs() {
        for term in hop_terms(p.t, i, j, spin) {
            sum.push(term.0, term.1);
        }
    }
    sum
}

/// Second half of the hopping term; carries the interior Z-strings of the
/// canonical ordering.
pub fn build_h3(p: ModelParams) -> PauliSum {
    let mut sum = PauliSum::new();
    for (i, j, spin) in h3_hop_pairs() {
        for term in hop_terms(p.t, i, j, spin) {
            sum.push(term.0, term.1);
        }
    }
    sum
}

/// Full JW Hamiltonian of Eq. (2): 4 onsite ZZ terms with coefficient u/4
/// and 16 hopping terms with coefficient -t/2.
pub fn build_jw_hamiltonian(p: ModelParams) -> PauliSum {
    build_h1(p).add(&build_h2(p)).add(&build_h3(p))
}

/// H = H1 + H2 + H3 as separate sums.
pub fn split_hamiltonian(p: ModelParams) -> (PauliSum, PauliSum, PauliSum) {
    (build_h1(p), build_h2(p), build_h3(p))
}

/// Modes carrying the control strings: spin-orbitals 2u, 3u, 1d, 4d.
pub fn control_modes() -> [usize; 4] {
    [
        canonical_mode(2, Spin::Up),
        canonical_mode(3, Spin::Up),
        canonical_mode(1, Spin::Down),
        canonical_mode(4, Spin::Down),
    ]
}

/// K1 = X_{2u} X_{3u} X_{1d} X_{4d}; anticommutes with every H1 term.
pub fn k1_string() -> PauliString {
    PauliString::from_ops(NUM_MODES, &control_modes().map(|m| (m, Pauli::X)))
}

/// K2 = Z_{2u} Z_{3u} Z_{1d} Z_{4d}; anticommutes with every H2 and H3 term.
pub fn k2_string() -> PauliString {
    PauliString::from_ops(NUM_MODES, &control_modes().map(|m| (m, Pauli::Z)))
}

/// Total-number operator for one spin sector, sum_i (I - Z_i)/2, dropping
/// the constant: returned as the Pauli part -(1/2) sum Z_i plus the count/2
/// offset is irrelevant for commutator checks.
pub fn number_operator(spin: Spin) -> PauliSum {
    let mut sum = PauliSum::new();
    for (mode, orb) in CANONICAL_ORDER.iter().enumerate() {
        if orb.spin == spin {
            sum.push(-0.5, PauliString::from_ops(NUM_MODES, &[(mode, Pauli::Z)]));
        }
    }
    sum
}

/// Affine shift c1 = (pi - 2 eta) / (lambda_max - lambda_min),
/// c2 = eta - c1 lambda_min.
pub fn shift_coefficients(lambda_min: f64, lambda_max: f64, eta: f64) -> Result<ShiftCoefficients> {
    if !(lambda_max > lambda_min) {
        return Err(Error::DegenerateSpectrum);
    }
    if !(eta > 0.0 && eta < PI / 2.0) {
        return Err(Error::EtaOutOfRange(eta));
    }
    let c1 = (PI - 2.0 * eta) / (lambda_max - lambda_min);
    Ok(ShiftCoefficients {
        c1,
        c2: eta - c1 * lambda_min,
        eta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{exact_spectrum, fock_hamiltonian};
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    fn max_abs(m: &DMatrix<Complex64>) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn onsite_only_term_structure() {
        let h = build_jw_hamiltonian(ModelParams { u: 1.0, t: 0.0 });
        let nontrivial: Vec<_> = h.terms().iter().filter(|(c, _)| *c != 0.0).collect();
        assert_eq!(nontrivial.len(), 4);
        for (c, s) in nontrivial {
            assert!((c - 0.25).abs() <= 1e-15);
            assert_eq!(s.weight(), 2);
            assert!(s.axes().iter().all(|&p| p == Pauli::I || p == Pauli::Z));
        }
    }

    #[test]
    fn hopping_only_term_structure() {
        let h = build_jw_hamiltonian(ModelParams { u: 0.0, t: 1.0 });
        let nontrivial: Vec<_> = h.terms().iter().filter(|(c, _)| *c != 0.0).collect();
        assert_eq!(nontrivial.len(), 16);
        for (c, _) in nontrivial {
            assert!((c + 0.5).abs() <= 1e-15);
        }
    }

    #[test]
    fn h2_is_two_local() {
        let h2 = build_h2(ModelParams::default());
        assert_eq!(h2.num_terms(), 8);
        for (_, s) in h2.terms() {
            assert_eq!(s.weight(), 2);
        }
    }

    #[test]
    fn jw_equals_fock_oracle() {
        let p = ModelParams { u: 1.0, t: 1.0 };
        let jw = build_jw_hamiltonian(p).to_matrix(NUM_MODES).unwrap();
        let fock = fock_hamiltonian(p);
        assert!(max_abs(&(jw - fock)) <= 1e-12);
    }

    #[test]
    fn split_sums_to_full() {
        let p = ModelParams { u: 0.7, t: 1.3 };
        let (h1, h2, h3) = split_hamiltonian(p);
        let sum = h1.to_matrix(NUM_MODES).unwrap()
            + h2.to_matrix(NUM_MODES).unwrap()
            + h3.to_matrix(NUM_MODES).unwrap();
        let full = build_jw_hamiltonian(p).to_matrix(NUM_MODES).unwrap();
        assert!(max_abs(&(sum - full)) <= 1e-12);
    }

    #[test]
    fn k2_anticommutes_with_all_hopping_terms() {
        let (_, h2, h3) = split_hamiltonian(ModelParams::default());
        let k2 = k2_string();
        for (_, s) in h2.terms().iter().chain(h3.terms()) {
            assert!(s.anticommutes(&k2).unwrap(), "K2 vs {s}");
        }
    }

    #[test]
    fn k1_anticommutes_with_onsite_and_k2_commutes() {
        let (h1, _, _) = split_hamiltonian(ModelParams::default());
        let k1 = k1_string();
        let k2 = k2_string();
        for (_, s) in h1.terms() {
            assert!(s.anticommutes(&k1).unwrap(), "K1 vs {s}");
            assert!(!s.anticommutes(&k2).unwrap(), "K2 must commute with {s}");
        }
    }

    #[test]
    fn number_conservation_per_spin() {
        let h = build_jw_hamiltonian(ModelParams::default())
            .to_matrix(NUM_MODES)
            .unwrap();
        for spin in [Spin::Up, Spin::Down] {
            let n = number_operator(spin).to_matrix(NUM_MODES).unwrap();
            let comm = &h * &n - &n * &h;
            assert!(max_abs(&comm) <= 1e-12);
        }
    }

    #[test]
    fn diagonal_spectrum_at_t_zero() {
        // With t = 0 each site contributes +-u/4, so eigenvalues sit on a
        // grid of u/4 multiples between -u and +u.
        let u = 0.8;
        let h = build_jw_hamiltonian(ModelParams { u, t: 0.0 })
            .to_matrix(NUM_MODES)
            .unwrap();
        let spec = exact_spectrum(&h).unwrap();
        for &e in &spec.eigenvalues {
            let k = e / (u / 4.0);
            assert!((k - k.round()).abs() <= 1e-10);
            assert!(e >= -u - 1e-12 && e <= u + 1e-12);
        }
    }

    #[test]
    fn shift_formula_trivial_cases() {
        let eta = 0.3;
        let s = shift_coefficients(0.0, PI - 2.0 * eta, eta).unwrap();
        assert!((s.c1 - 1.0).abs() <= 1e-14);
        assert!((s.c2 - eta).abs() <= 1e-14);

        let s = shift_coefficients(-1.0, 1.0, 0.1).unwrap();
        assert!((s.c1 - (PI - 0.2) / 2.0).abs() <= 1e-14);
        assert!((s.c2 - (0.1 + s.c1)).abs() <= 1e-14);
    }

    #[test]
    fn shift_rejects_bad_input() {
        assert!(shift_coefficients(1.0, 1.0, 0.1).is_err());
        assert!(shift_coefficients(0.0, 1.0, 0.0).is_err());
        assert!(shift_coefficients(0.0, 1.0, 1.6).is_err());
    }

    #[test]
    fn shifted_spectrum_lands_in_window() {
        let h = fock_hamiltonian(ModelParams::default());
        let spec = exact_spectrum(&h).unwrap();
        let eta = 0.1;
        let sh = shift_coefficients(spec.min_eigenvalue(), spec.max_eigenvalue(), eta).unwrap();
        for &e in &spec.eigenvalues {
            let m = sh.c1 * e + sh.c2;
            assert!(m >= eta - 1e-12 && m <= PI - eta + 1e-12);
        }
        let lo = sh.c1 * spec.min_eigenvalue() + sh.c2;
        assert!((lo - eta).abs() <= 1e-12);
    }

    #[test]
    fn shifted_ground_state_unchanged() {
        let h = fock_hamiltonian(ModelParams::default());
        let spec = exact_spectrum(&h).unwrap();
        let sh = shift_coefficients(spec.min_eigenvalue(), spec.max_eigenvalue(), 0.1).unwrap();
        let dim = h.nrows();
        let shifted =
            &h * Complex64::new(sh.c1, 0.0) + DMatrix::identity(dim, dim) * Complex64::new(sh.c2, 0.0);
        let spec2 = exact_spectrum(&shifted).unwrap();
        let overlap = spec.ground_state().dotc(&spec2.ground_state()).norm();
        assert!(overlap >= 1.0 - 1e-12);
    }
}
