//! Independent ground-truth computations: Fock-space Hamiltonian assembly,
//! exact diagonalization and dense matrix exponentials.
//!
//! Nothing in here goes through the Pauli/JW path, so the results serve as
//! oracles for the rest of the crate.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hubbard::{canonical_mode, ModelParams, Spin, NUM_MODES};

/// Full eigendecomposition of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector of `eigenvalues[k]`, phase fixed so the
    /// largest-magnitude component is real positive.
    pub eigenvectors: DMatrix<Complex64>,
}

impl Spectrum {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn ground_state(&self) -> DVector<Complex64> {
        self.eigenvectors.column(0).into_owned()
    }

    /// Smallest eigenvalue strictly above the ground energy (within `tol`
    /// degeneracy resolution).
    pub fn first_excited_energy(&self, tol: f64) -> f64 {
        let e0 = self.eigenvalues[0];
        self.eigenvalues
            .iter()
            .copied()
            .find(|&e| e > e0 + tol)
            .unwrap_or(e0)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }
}

fn hermiticity_defect(m: &DMatrix<Complex64>) -> f64 {
    (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Annihilation operator for `mode` in the occupation basis of [`NUM_MODES`]
/// modes, with the Jordan-Wigner sign (-1)^(number of occupied preceding
/// modes). Bit `m` of the basis index (big-endian, mode 0 = most significant)
/// is the occupation of mode `m`.
fn annihilation(mode: usize) -> DMatrix<Complex64> {
    let dim = 1usize << NUM_MODES;
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    let bit = 1usize << (NUM_MODES - 1 - mode);
    for ket in 0..dim {
        if ket & bit != 0 {
            let preceding = (0..mode)
                .filter(|&k| ket & (1usize << (NUM_MODES - 1 - k)) != 0)
                .count();
            let sign = if preceding % 2 == 0 { 1.0 } else { -1.0 };
            m[(ket & !bit, ket)] = Complex64::new(sign, 0.0);
        }
    }
    m
}

fn creation(mode: usize) -> DMatrix<Complex64> {
    annihilation(mode).adjoint()
}

/// 2x2 Fermi-Hubbard Hamiltonian assembled directly in the occupation basis,
/// using the symmetrized onsite convention u (n_up - 1/2)(n_dn - 1/2).
pub fn fock_hamiltonian(p: ModelParams) -> DMatrix<Complex64> {
    let dim = 1usize << NUM_MODES;
    let id = DMatrix::<Complex64>::identity(dim, dim);
    let mut h = DMatrix::<Complex64>::zeros(dim, dim);

    let number = |site: usize, spin: Spin| {
        let m = canonical_mode(site, spin);
        creation(m) * annihilation(m)
    };

    for site in 1..=4 {
        let n_up = number(site, Spin::Up);
        let n_dn = number(site, Spin::Down);
        let half = Complex64::new(0.5, 0.0);
        h += (&n_up - &id * half) * (&n_dn - &id * half) * Complex64::new(p.u, 0.0);
    }

    // Nearest-neighbor pairs of the 2x2 lattice: 1-2, 3-4 horizontal,
    // 1-3, 2-4 vertical.
    for &(i, j) in &[(1usize, 2usize), (3, 4), (1, 3), (2, 4)] {
        for spin in [Spin::Up, Spin::Down] {
            let mi = canonical_mode(i, spin);
            let mj = canonical_mode(j, spin);
            let hop = creation(mi) * annihilation(mj) + creation(mj) * annihilation(mi);
            h += hop * Complex64::new(-p.t, 0.0);
        }
    }
    h
}

/// Canonical anticommutator {a_i, a_j^dag} as a dense matrix (test support).
pub fn car_anticommutator(i: usize, j: usize) -> DMatrix<Complex64> {
    let ai = annihilation(i);
    let cj = creation(j);
    &ai * &cj + &cj * &ai
}

/// Full Hermitian eigendecomposition with deterministic eigenvector phases.
pub fn exact_spectrum(h: &DMatrix<Complex64>) -> Result<Spectrum> {
    if hermiticity_defect(h) > 1e-10 {
        return Err(Error::NonHermitian);
    }
    let se = h.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..se.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());

    let dim = h.nrows();
    let mut vectors = DMatrix::<Complex64>::zeros(dim, dim);
    let mut values = Vec::with_capacity(dim);
    for (col, &k) in order.iter().enumerate() {
        values.push(se.eigenvalues[k]);
        let v = se.eigenvectors.column(k);
        // Fix the phase: largest-magnitude component real positive.
        let mut best = 0usize;
        let mut best_norm = 0.0;
        for (r, z) in v.iter().enumerate() {
            if z.norm() > best_norm {
                best_norm = z.norm();
                best = r;
            }
        }
        let z = v[best];
        let rot = if z.norm() > 0.0 {
            z.conj() / z.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for r in 0..dim {
            vectors[(r, col)] = v[r] * rot;
        }
    }
    Ok(Spectrum {
        eigenvalues: values,
        eigenvectors: vectors,
    })
}

/// exp(-i tau H) through the eigendecomposition of Hermitian `H`.
pub fn dense_expm(h: &DMatrix<Complex64>, tau: f64) -> Result<DMatrix<Complex64>> {
    let spec = exact_spectrum(h)?;
    let dim = h.nrows();
    let q = &spec.eigenvectors;
    let mut middle = DMatrix::<Complex64>::zeros(dim, dim);
    for k in 0..dim {
        middle[(k, k)] = Complex64::from_polar(1.0, -tau * spec.eigenvalues[k]);
    }
    Ok(q * middle * q.adjoint())
}

/// Largest singular value of `m` (the spectral norm).
pub fn spectral_norm(m: &DMatrix<Complex64>) -> f64 {
    m.clone().svd(false, false).singular_values.max()
}

/// Spectral norm of `a - e^{i phi} b` minimized over the global phase, with
/// phi chosen by trace alignment (the Frobenius-optimal phase).
pub fn phase_aligned_distance(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> f64 {
    let tr: Complex64 = (0..a.nrows())
        .map(|i| {
            (0..a.ncols())
                .map(|j| b[(i, j)].conj() * a[(i, j)])
                .sum::<Complex64>()
        })
        .sum();
    let phi = if tr.norm() > 0.0 {
        tr / tr.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    spectral_norm(&(a - b * phi))
}
