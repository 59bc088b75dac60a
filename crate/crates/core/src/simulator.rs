//! Statevector and density-matrix simulation of lowered circuits, the
//! depolarizing + readout noise model, and shot sampling.
//!
//! Depolarizing convention: with probability p the state of the acted-on
//! qubits is replaced by the maximally mixed state. Rz gates are virtual
//! and incur no noise. Noise attaches after each gate.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::circuit::{apply_gate_amps, Circuit, Gate};
use crate::error::{Error, Result};
use crate::pauli::PauliSum;

/// Dense state vector over `n` qubits; qubit 0 is the most significant bit
/// of the amplitude index.
#[derive(Debug, Clone)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zero(n: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Self { n, amps }
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch(amps.len(), 1 << n));
        }
        Ok(Self { n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            for a in &mut self.amps {
                *a /= n;
            }
        }
    }

    /// Apply a fully lowered circuit in place.
    pub fn apply_circuit(&mut self, c: &Circuit) -> Result<()> {
        if c.num_qubits != self.n {
            return Err(Error::DimensionMismatch(c.num_qubits, self.n));
        }
        for (gate, targets) in &c.ops {
            if !gate.is_native() {
                return Err(Error::AbstractGate(gate.name().to_string()));
            }
            apply_gate_amps(&mut self.amps, self.n, gate, targets);
        }
        Ok(())
    }

    /// Probability of measuring `qubit` as 0, and the projected normalized
    /// state.
    pub fn project_qubit(&self, qubit: usize, outcome: u8) -> (f64, StateVector) {
        let bit = 1usize << (self.n - 1 - qubit);
        let mut prob = 0.0;
        let mut amps = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (idx, a) in self.amps.iter().enumerate() {
            let b = ((idx & bit) != 0) as u8;
            if b == outcome {
                prob += a.norm_sqr();
                amps[idx] = *a;
            }
        }
        if prob > 0.0 {
            let scale = prob.sqrt();
            for a in &mut amps {
                *a /= scale;
            }
        }
        (prob, StateVector { n: self.n, amps })
    }

    /// Drop one qubit from a state where that qubit is in a definite
    /// computational state (after projection).
    pub fn trace_out_qubit(&self, qubit: usize) -> StateVector {
        let bit = 1usize << (self.n - 1 - qubit);
        let low_mask = bit - 1;
        let mut amps = vec![Complex64::new(0.0, 0.0); self.amps.len() / 2];
        for (idx, a) in self.amps.iter().enumerate() {
            if idx & bit == 0 {
                let reduced = ((idx >> 1) & !low_mask) | (idx & low_mask);
                amps[reduced] += *a;
            }
        }
        let mut sv = StateVector {
            n: self.n - 1,
            amps,
        };
        sv.normalize();
        sv
    }

    /// Real part of <psi|O|psi> for a Hermitian Pauli sum.
    pub fn expectation(&self, obs: &PauliSum) -> Result<f64> {
        if !obs.is_hermitian() {
            return Err(Error::NonHermitian);
        }
        if obs.num_terms() > 0 && obs.num_qubits() != self.n {
            return Err(Error::DimensionMismatch(obs.num_qubits(), self.n));
        }
        let mut total = Complex64::new(0.0, 0.0);
        let mut scratch = self.amps.clone();
        for (coeff, string) in obs.terms() {
            scratch.copy_from_slice(&self.amps);
            apply_pauli_string(&mut scratch, self.n, string);
            let dot: Complex64 = self
                .amps
                .iter()
                .zip(&scratch)
                .map(|(a, b)| a.conj() * b)
                .sum();
            total += dot * Complex64::new(*coeff, 0.0);
        }
        debug_assert!(total.im.abs() <= 1e-10);
        Ok(total.re)
    }
}

fn apply_pauli_string(amps: &mut [Complex64], n: usize, string: &crate::pauli::PauliString) {
    use crate::pauli::Pauli;
    let mut flip = 0usize;
    for (q, &p) in string.axes().iter().enumerate() {
        if matches!(p, Pauli::X | Pauli::Y) {
            flip |= 1usize << (n - 1 - q);
        }
    }
    let phase = string.phase().value();
    let dim = amps.len();
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for idx in 0..dim {
        let mut a = amps[idx] * phase;
        for (q, &p) in string.axes().iter().enumerate() {
            let b = idx & (1usize << (n - 1 - q)) != 0;
            match p {
                Pauli::I | Pauli::X => {}
                Pauli::Y => {
                    a *= if b {
                        Complex64::new(0.0, -1.0)
                    } else {
                        Complex64::new(0.0, 1.0)
                    }
                }
                Pauli::Z => {
                    if b {
                        a = -a;
                    }
                }
            }
        }
        out[idx ^ flip] = a;
    }
    amps.copy_from_slice(&out);
}

/// Exact expectation helper (free function mirror of the method).
pub fn expectation(state: &StateVector, obs: &PauliSum) -> Result<f64> {
    state.expectation(obs)
}

/// Dense density matrix.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    n: usize,
    rho: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn from_state(sv: &StateVector) -> Self {
        let dim = sv.amps.len();
        let mut rho = DMatrix::<Complex64>::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                rho[(r, c)] = sv.amps[r] * sv.amps[c].conj();
            }
        }
        Self { n: sv.n, rho }
    }

    pub fn zero(n: usize) -> Self {
        let dim = 1usize << n;
        let mut rho = DMatrix::<Complex64>::zeros(dim, dim);
        rho[(0, 0)] = Complex64::new(1.0, 0.0);
        Self { n, rho }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.rho
    }

    pub fn trace(&self) -> f64 {
        (0..self.rho.nrows()).map(|i| self.rho[(i, i)].re).sum()
    }

    /// Diagonal as measurement probabilities.
    pub fn diagonal_probs(&self) -> Vec<f64> {
        (0..self.rho.nrows())
            .map(|i| self.rho[(i, i)].re.max(0.0))
            .collect()
    }

    /// Fidelity <psi|rho|psi> with a pure state.
    pub fn fidelity_with(&self, sv: &StateVector) -> f64 {
        let dim = self.rho.nrows();
        let mut acc = Complex64::new(0.0, 0.0);
        for r in 0..dim {
            for c in 0..dim {
                acc += sv.amps[r].conj() * self.rho[(r, c)] * sv.amps[c];
            }
        }
        acc.re
    }

    fn apply_unitary_gate(&mut self, gate: &Gate, targets: &[usize]) {
        let n = self.n;
        let dim = self.rho.nrows();
        // rho -> U rho U^dag: apply the kernel to every column, then to
        // every row of the conjugate.
        let cols: Vec<usize> = (0..dim).collect();
        let mut data: Vec<Vec<Complex64>> = cols
            .par_iter()
            .map(|&c| {
                let mut col: Vec<Complex64> = (0..dim).map(|r| self.rho[(r, c)]).collect();
                apply_gate_amps(&mut col, n, gate, targets);
                col
            })
            .collect();
        // rows of U rho: (U rho U+)[r,c] = sum_k (U rho)[r,k] conj(U[c,k])
        // equivalent to applying conj-kernel to each row vector.
        let rows: Vec<Vec<Complex64>> = (0..dim)
            .into_par_iter()
            .map(|r| {
                let mut row: Vec<Complex64> = (0..dim).map(|c| data[c][r].conj()).collect();
                apply_gate_amps(&mut row, n, gate, targets);
                row
            })
            .collect();
        for r in 0..dim {
            for c in 0..dim {
                self.rho[(r, c)] = rows[r][c].conj();
            }
        }
        data.clear();
    }

    /// Depolarizing channel on `targets`: rho -> (1-p) rho + p * (maximally
    /// mixed on targets (x) reduced rest), implemented in one pass.
    fn apply_depolarizing(&mut self, targets: &[usize], p: f64) {
        if p == 0.0 {
            return;
        }
        let n = self.n;
        let dim = self.rho.nrows();
        let k = targets.len();
        let bits: Vec<usize> = targets.iter().map(|&t| 1usize << (n - 1 - t)).collect();
        let sub = 1usize << k;
        let set_bits = |idx: usize, conf: usize| {
            let mut out = idx;
            for (j, &b) in bits.iter().enumerate() {
                if (conf >> (k - 1 - j)) & 1 == 1 {
                    out |= b;
                } else {
                    out &= !b;
                }
            }
            out
        };
        let mut out = DMatrix::<Complex64>::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                let mut v = self.rho[(r, c)] * Complex64::new(1.0 - p, 0.0);
                // mixed part contributes only when target bits agree
                let mut agree = true;
                for &b in &bits {
                    if (r & b != 0) != (c & b != 0) {
                        agree = false;
                        break;
                    }
                }
                if agree {
                    let mut tr = Complex64::new(0.0, 0.0);
                    for conf in 0..sub {
                        tr += self.rho[(set_bits(r, conf), set_bits(c, conf))];
                    }
                    v += tr * Complex64::new(p / sub as f64, 0.0);
                }
                out[(r, c)] = v;
            }
        }
        self.rho = out;
    }
}

/// Depolarizing + readout noise rates. The single-qubit and readout rates
/// default to the paper's ratios p1q = p2q / 10, pmeas = 10 p2q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    pub p2q: f64,
    pub p1q: f64,
    pub pmeas: f64,
}

impl NoiseModel {
    pub fn noiseless() -> Self {
        Self {
            p2q: 0.0,
            p1q: 0.0,
            pmeas: 0.0,
        }
    }

    pub fn from_p2q(p2q: f64) -> Self {
        let m = Self {
            p2q,
            p1q: p2q / 10.0,
            pmeas: 10.0 * p2q,
        };
        assert!(m.valid(), "noise probabilities out of [0, 1]");
        m
    }

    pub fn valid(&self) -> bool {
        [self.p2q, self.p1q, self.pmeas]
            .iter()
            .all(|p| (0.0..=1.0).contains(p))
    }

    pub fn is_noiseless(&self) -> bool {
        self.p2q == 0.0 && self.p1q == 0.0 && self.pmeas == 0.0
    }

    /// Gate rate by arity; Rz is virtual and noise-free.
    fn gate_rate(&self, gate: &Gate, arity: usize) -> f64 {
        if gate.is_rz() {
            0.0
        } else if arity == 1 {
            self.p1q
        } else {
            self.p2q
        }
    }
}

/// Exact noisy evolution of a lowered circuit as a density matrix.
pub fn run_density(c: &Circuit, noise: &NoiseModel) -> Result<DensityMatrix> {
    if c.num_qubits > 9 {
        return Err(Error::TooManyQubits {
            got: c.num_qubits,
            max: 9,
        });
    }
    let mut rho = DensityMatrix::zero(c.num_qubits);
    for (gate, targets) in &c.ops {
        if !gate.is_native() {
            return Err(Error::AbstractGate(gate.name().to_string()));
        }
        rho.apply_unitary_gate(gate, targets);
        let p = noise.gate_rate(gate, targets.len());
        if p > 0.0 {
            rho.apply_depolarizing(targets, p);
        }
    }
    Ok(rho)
}

/// Measured bitstring counts. Keys are basis indices with qubit 0 as the
/// most significant bit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Counts {
    pub num_qubits: usize,
    pub map: BTreeMap<usize, u64>,
    pub shots: u64,
}

impl Counts {
    pub fn bitstring(&self, idx: usize) -> String {
        (0..self.num_qubits)
            .map(|q| {
                if idx & (1 << (self.num_qubits - 1 - q)) != 0 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("bitstring,count\n");
        for (&idx, &n) in &self.map {
            out.push_str(&self.bitstring(idx));
            out.push(',');
            out.push_str(&n.to_string());
            out.push('\n');
        }
        out
    }
}

/// Which backend realizes the noisy sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseBackend {
    /// Evolve the exact density matrix once and sample its diagonal.
    Density,
    /// Stochastic Pauli-insertion trajectories, one shot per trajectory.
    Trajectory,
}

fn sample_index(probs: &[f64], rng: &mut impl Rng) -> usize {
    let r: f64 = rng.gen::<f64>() * probs.iter().sum::<f64>();
    let mut acc = 0.0;
    for (idx, &p) in probs.iter().enumerate() {
        acc += p;
        if r < acc {
            return idx;
        }
    }
    probs.len() - 1
}

fn readout_flip(idx: usize, n: usize, pmeas: f64, rng: &mut impl Rng) -> usize {
    if pmeas == 0.0 {
        return idx;
    }
    let mut out = idx;
    for q in 0..n {
        if rng.gen::<f64>() < pmeas {
            out ^= 1usize << (n - 1 - q);
        }
    }
    out
}

/// Substream RNG for trajectory `k` under a master seed; reproducible under
/// any parallel schedule.
fn substream(seed: u64, k: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    rng
}

fn run_trajectory(c: &Circuit, noise: &NoiseModel, rng: &mut ChaCha8Rng) -> StateVector {
    use crate::pauli::Pauli;
    let mut sv = StateVector::zero(c.num_qubits);
    for (gate, targets) in &c.ops {
        apply_gate_amps(&mut sv.amps, sv.n, gate, targets);
        let p = noise.gate_rate(gate, targets.len());
        if p > 0.0 && rng.gen::<f64>() < p {
            // Uniform Pauli on the acted qubits (identity included), which
            // reproduces the maximally-mixed replacement on average.
            for &t in targets {
                let letter = match rng.gen_range(0..4) {
                    0 => Pauli::I,
                    1 => Pauli::X,
                    2 => Pauli::Y,
                    _ => Pauli::Z,
                };
                let g = match letter {
                    Pauli::I => None,
                    Pauli::X => Some(Gate::X),
                    Pauli::Y => Some(Gate::Y),
                    Pauli::Z => Some(Gate::Rz(std::f64::consts::PI)),
                };
                if let Some(g) = g {
                    apply_gate_amps(&mut sv.amps, sv.n, &g, &[t]);
                }
            }
        }
    }
    sv
}

/// Sample measurement outcomes of all qubits of a lowered circuit.
/// Deterministic for a given `(circuit, shots, noise, seed)`.
pub fn sample(
    c: &Circuit,
    shots: u64,
    noise: &NoiseModel,
    backend: NoiseBackend,
    seed: u64,
) -> Result<Counts> {
    assert!(shots >= 1);
    let n = c.num_qubits;
    let mut map: BTreeMap<usize, u64> = BTreeMap::new();

    if noise.is_noiseless() || backend == NoiseBackend::Density {
        let probs = if noise.is_noiseless() {
            let mut sv = StateVector::zero(n);
            sv.apply_circuit(c)?;
            sv.amps.iter().map(|a| a.norm_sqr()).collect::<Vec<f64>>()
        } else {
            run_density(c, noise)?.diagonal_probs()
        };
        let mut rng = substream(seed, 0);
        for _ in 0..shots {
            let idx = sample_index(&probs, &mut rng);
            let idx = readout_flip(idx, n, noise.pmeas, &mut rng);
            *map.entry(idx).or_insert(0) += 1;
        }
    } else {
        // One shot per stochastic trajectory, parallel over substreams.
        let outcomes: Vec<usize> = (0..shots)
            .into_par_iter()
            .map(|k| {
                let mut rng = substream(seed, k + 1);
                let sv = run_trajectory(c, noise, &mut rng);
                let probs: Vec<f64> = sv.amps.iter().map(|a| a.norm_sqr()).collect();
                let idx = sample_index(&probs, &mut rng);
                readout_flip(idx, n, noise.pmeas, &mut rng)
            })
            .collect();
        for idx in outcomes {
            *map.entry(idx).or_insert(0) += 1;
        }
    }
    Ok(Counts {
        num_qubits: n,
        map,
        shots,
    })
}
