//! Circuit representation over the grid device's native gate set plus the
//! abstract gates the swap network and measurement layers are written in,
//! with lowering rules, dense unitary extraction and depth accounting.
//!
//! Qubit 0 is the leftmost Kronecker factor, i.e. the most significant bit
//! of a basis index.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::Pauli;

/// Gate kinds. The first group is native on the device (Table-I matrices);
/// the second group is abstract and must be lowered before simulation.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    // native
    X,
    Y,
    Rz(f64),
    SqrtX,
    SqrtY,
    CPhase(f64),
    /// iSWAP(theta, eta) with the Table-I matrix convention.
    ISwap(f64, f64),
    // abstract
    Rzz(f64),
    FSwap,
    /// Zero-controlled Pauli string: first target is the control, remaining
    /// targets carry `letters` in order. Applied when the control is |0>.
    ControlledPauliString(Vec<Pauli>),
    /// exp[i (theta/4) (XX + YY)]; equals ISwap(theta, 0) exactly.
    HoppingXY(f64),
    /// Basis change diagonalizing (XX + YY)/2 on a pair.
    BasisU,
    PrepPlus,
    PrepMinus,
    Cnot,
    Hadamard,
}

impl Gate {
    pub fn name(&self) -> &'static str {
        match self {
            Gate::X => "X",
            Gate::Y => "Y",
            Gate::Rz(_) => "RZ",
            Gate::SqrtX => "SX",
            Gate::SqrtY => "SY",
            Gate::CPhase(_) => "CPHASE",
            Gate::ISwap(_, _) => "ISWAP",
            Gate::Rzz(_) => "RZZ",
            Gate::FSwap => "FSWAP",
            Gate::ControlledPauliString(_) => "CPAULI",
            Gate::HoppingXY(_) => "HOP",
            Gate::BasisU => "BASISU",
            Gate::PrepPlus => "PREP+",
            Gate::PrepMinus => "PREP-",
            Gate::Cnot => "CNOT",
            Gate::Hadamard => "H",
        }
    }

    pub fn is_native(&self) -> bool {
        matches!(
            self,
            Gate::X | Gate::Y | Gate::Rz(_) | Gate::SqrtX | Gate::SqrtY | Gate::CPhase(_) | Gate::ISwap(_, _)
        )
    }

    pub fn is_rz(&self) -> bool {
        matches!(self, Gate::Rz(_))
    }

    fn arity(&self) -> usize {
        match self {
            Gate::X | Gate::Y | Gate::Rz(_) | Gate::SqrtX | Gate::SqrtY | Gate::Hadamard => 1,
            Gate::PrepPlus | Gate::PrepMinus => 1,
            Gate::CPhase(_) | Gate::ISwap(_, _) | Gate::Rzz(_) | Gate::FSwap => 2,
            Gate::HoppingXY(_) | Gate::BasisU | Gate::Cnot => 2,
            Gate::ControlledPauliString(letters) => 1 + letters.len(),
        }
    }

    /// Dense matrix over the gate's own qubits (2^arity dimensional).
    pub fn matrix(&self) -> DMatrix<Complex64> {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match self {
            Gate::X => Pauli::X.matrix(),
            Gate::Y => Pauli::Y.matrix(),
            Gate::Rz(lambda) => DMatrix::from_diagonal_element(2, 2, one).map_with_location(
                |r, _, v| {
                    if r == 0 {
                        v * Complex64::from_polar(1.0, -lambda / 2.0)
                    } else {
                        v * Complex64::from_polar(1.0, lambda / 2.0)
                    }
                },
            ),
            Gate::SqrtX => {
                let p = Complex64::new(0.5, 0.5);
                let m = Complex64::new(0.5, -0.5);
                DMatrix::from_row_slice(2, 2, &[p, m, m, p])
            }
            Gate::SqrtY => {
                let p = Complex64::new(0.5, 0.5);
                DMatrix::from_row_slice(2, 2, &[p, -p, p, p])
            }
            Gate::CPhase(lambda) => {
                let mut m = DMatrix::identity(4, 4);
                m[(3, 3)] = Complex64::from_polar(1.0, *lambda);
                m
            }
            Gate::ISwap(theta, eta) => {
                let c = Complex64::new((theta / 2.0).cos(), 0.0);
                let s = (theta / 2.0).sin();
                let mut m = DMatrix::identity(4, 4);
                m[(1, 1)] = c;
                m[(2, 2)] = c;
                m[(1, 2)] = i * Complex64::from_polar(s, *eta);
                m[(2, 1)] = i * Complex64::from_polar(s, -eta);
                m
            }
            Gate::Rzz(theta) => {
                let lo = Complex64::from_polar(1.0, -theta / 2.0);
                let hi = Complex64::from_polar(1.0, theta / 2.0);
                DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![lo, hi, hi, lo]))
            }
            Gate::FSwap => DMatrix::from_row_slice(
                4,
                4,
                &[
                    one, z, z, z, //
                    z, z, one, z, //
                    z, one, z, z, //
                    z, z, z, -one,
                ],
            ),
            Gate::HoppingXY(theta) => Gate::ISwap(*theta, 0.0).matrix(),
            Gate::BasisU => {
                let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                DMatrix::from_row_slice(
                    4,
                    4,
                    &[
                        one, z, z, z, //
                        z, s, s, z, //
                        z, s, -s, z, //
                        z, z, z, one,
                    ],
                )
            }
            Gate::PrepPlus => Gate::SqrtY.matrix(),
            Gate::PrepMinus => Gate::SqrtY.matrix() * Pauli::X.matrix(),
            Gate::Cnot => DMatrix::from_row_slice(
                4,
                4,
                &[
                    one, z, z, z, //
                    z, one, z, z, //
                    z, z, z, one, //
                    z, z, one, z,
                ],
            ),
            Gate::Hadamard => {
                let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                DMatrix::from_row_slice(2, 2, &[h, h, h, -h])
            }
            Gate::ControlledPauliString(letters) => {
                let k = letters.len();
                let dim = 1usize << (k + 1);
                let mut m = DMatrix::<Complex64>::zeros(dim, dim);
                for col in 0..dim {
                    let ctrl = (col >> k) & 1;
                    if ctrl == 1 {
                        m[(col, col)] = one;
                    } else {
                        let mut row = col;
                        let mut amp = one;
                        for (j, &p) in letters.iter().enumerate() {
                            let bit_pos = k - 1 - j;
                            let b = (col >> bit_pos) & 1;
                            match p {
                                Pauli::I => {}
                                Pauli::X => row ^= 1 << bit_pos,
                                Pauli::Y => {
                                    row ^= 1 << bit_pos;
                                    amp *= if b == 0 { i } else { -i };
                                }
                                Pauli::Z => {
                                    if b == 1 {
                                        amp = -amp;
                                    }
                                }
                            }
                        }
                        m[(row, col)] = amp;
                    }
                }
                m
            }
        }
    }
}

/// Ordered gate list over `num_qubits` indexed qubits.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Circuit {
    pub num_qubits: usize,
    pub ops: Vec<(Gate, Vec<usize>)>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            ops: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: Gate, targets: &[usize]) {
        assert_eq!(gate.arity(), targets.len(), "arity mismatch for {}", gate.name());
        for &t in targets {
            assert!(t < self.num_qubits, "target {t} out of range");
        }
        let mut seen = targets.to_vec();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), targets.len(), "duplicate targets");
        self.ops.push((gate, targets.to_vec()));
    }

    pub fn extend(&mut self, other: &Circuit) {
        assert_eq!(self.num_qubits, other.num_qubits);
        self.ops.extend(other.ops.iter().cloned());
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn is_native(&self) -> bool {
        self.ops.iter().all(|(g, _)| g.is_native())
    }

    /// Lower every abstract gate; native gates pass through.
    pub fn lowered(&self) -> Result<Circuit> {
        let mut out = Circuit::new(self.num_qubits);
        for (gate, targets) in &self.ops {
            if gate.is_native() {
                out.ops.push((gate.clone(), targets.clone()));
            } else {
                for (g, t) in decompose_to_native(gate, targets)? {
                    out.ops.push((g, t));
                }
            }
        }
        Ok(out)
    }

    /// Inverse at the abstract level: reversed ops with negated angles.
    /// Only kinds that appear before lowering are supported.
    pub fn inverse(&self) -> Result<Circuit> {
        let mut out = Circuit::new(self.num_qubits);
        for (gate, targets) in self.ops.iter().rev() {
            let inv = match gate {
                Gate::Rz(l) => Gate::Rz(-l),
                Gate::CPhase(l) => Gate::CPhase(-l),
                Gate::ISwap(th, eta) => Gate::ISwap(-th, *eta),
                Gate::Rzz(th) => Gate::Rzz(-th),
                Gate::HoppingXY(th) => Gate::HoppingXY(-th),
                Gate::X => Gate::X,
                Gate::Y => Gate::Y,
                Gate::FSwap => Gate::FSwap,
                Gate::BasisU => Gate::BasisU,
                Gate::Cnot => Gate::Cnot,
                Gate::Hadamard => Gate::Hadamard,
                Gate::ControlledPauliString(p) => Gate::ControlledPauliString(p.clone()),
                other => return Err(Error::NoLoweringRule(format!("inverse of {}", other.name()))),
            };
            out.ops.push((inv, targets.clone()));
        }
        Ok(out)
    }
}

/// Ry(theta) in natives: Rz(pi/2) . SqrtY . Rz(theta + pi) . SqrtY . Rz(pi/2)
/// up to a global phase (circuit order).
fn ry_native(theta: f64, q: usize) -> Vec<(Gate, Vec<usize>)> {
    vec![
        (Gate::Rz(FRAC_PI_2), vec![q]),
        (Gate::SqrtY, vec![q]),
        (Gate::Rz(theta + PI), vec![q]),
        (Gate::SqrtY, vec![q]),
        (Gate::Rz(FRAC_PI_2), vec![q]),
    ]
}

/// Hadamard in natives: Rz(pi) then SqrtY (up to global phase).
fn hadamard_native(q: usize) -> Vec<(Gate, Vec<usize>)> {
    vec![(Gate::Rz(PI), vec![q]), (Gate::SqrtY, vec![q])]
}

/// Zero-controlled single-qubit Pauli between `ctrl` and `tgt`.
fn controlled_letter_native(p: Pauli, ctrl: usize, tgt: usize) -> Result<Vec<(Gate, Vec<usize>)>> {
    match p {
        Pauli::Z => Ok(vec![
            (Gate::Rz(PI), vec![tgt]),
            (Gate::CPhase(PI), vec![ctrl, tgt]),
        ]),
        Pauli::X => Ok(vec![
            (Gate::Rz(PI), vec![ctrl]),
            (Gate::SqrtY, vec![tgt]),
            (Gate::CPhase(-PI), vec![ctrl, tgt]),
            (Gate::SqrtY, vec![tgt]),
            (Gate::Rz(PI), vec![tgt]),
        ]),
        _ => Err(Error::NoLoweringRule(format!("zero-controlled {p:?}"))),
    }
}

/// Lower one abstract gate to natives. The emitted sequence reproduces the
/// abstract matrix up to a global phase.
pub fn decompose_to_native(gate: &Gate, targets: &[usize]) -> Result<Vec<(Gate, Vec<usize>)>> {
    match gate {
        g if g.is_native() => Ok(vec![(g.clone(), targets.to_vec())]),
        Gate::Rzz(theta) => Ok(vec![
            (Gate::Rz(*theta), vec![targets[0]]),
            (Gate::Rz(*theta), vec![targets[1]]),
            (Gate::CPhase(-2.0 * theta), targets.to_vec()),
        ]),
        Gate::FSwap => Ok(vec![
            (Gate::ISwap(PI, 0.0), targets.to_vec()),
            (Gate::Rz(-FRAC_PI_2), vec![targets[0]]),
            (Gate::Rz(-FRAC_PI_2), vec![targets[1]]),
        ]),
        Gate::HoppingXY(theta) => Ok(vec![(Gate::ISwap(*theta, 0.0), targets.to_vec())]),
        Gate::Hadamard => Ok(hadamard_native(targets[0])),
        Gate::PrepPlus => Ok(vec![(Gate::SqrtY, vec![targets[0]])]),
        Gate::PrepMinus => Ok(vec![(Gate::X, vec![targets[0]]), (Gate::SqrtY, vec![targets[0]])]),
        Gate::Cnot => {
            let (c, t) = (targets[0], targets[1]);
            let mut seq = hadamard_native(t);
            seq.push((Gate::CPhase(PI), vec![c, t]));
            seq.extend(hadamard_native(t));
            Ok(seq)
        }
        Gate::BasisU => {
            // CNOT . controlled-H (control on the second qubit) . CNOT.
            let (a, b) = (targets[0], targets[1]);
            let mut seq = decompose_to_native(&Gate::Cnot, &[a, b])?;
            seq.extend(ry_native(-PI / 4.0, a));
            seq.push((Gate::CPhase(PI), vec![a, b]));
            seq.extend(ry_native(PI / 4.0, a));
            seq.extend(decompose_to_native(&Gate::Cnot, &[a, b])?);
            Ok(seq)
        }
        Gate::ControlledPauliString(letters) => {
            let ctrl = targets[0];
            let mut seq = Vec::new();
            for (j, &p) in letters.iter().enumerate() {
                if p != Pauli::I {
                    seq.extend(controlled_letter_native(p, ctrl, targets[1 + j])?);
                }
            }
            Ok(seq)
        }
        other => Err(Error::NoLoweringRule(other.name().to_string())),
    }
}

/// Apply `gate` on `targets` to a state vector of `n` qubits (qubit 0 is the
/// most significant bit). Generic dense kernel shared by the unitary
/// extractor and the simulator.
pub(crate) fn apply_gate_amps(amps: &mut [Complex64], n: usize, gate: &Gate, targets: &[usize]) {
    match targets.len() {
        1 => {
            let m = gate.matrix();
            let bit = 1usize << (n - 1 - targets[0]);
            let dim = amps.len();
            let mut base = 0usize;
            while base < dim {
                if base & bit == 0 {
                    let a = amps[base];
                    let b = amps[base | bit];
                    amps[base] = m[(0, 0)] * a + m[(0, 1)] * b;
                    amps[base | bit] = m[(1, 0)] * a + m[(1, 1)] * b;
                }
                base += 1;
            }
        }
        2 => {
            let m = gate.matrix();
            let b0 = 1usize << (n - 1 - targets[0]);
            let b1 = 1usize << (n - 1 - targets[1]);
            let dim = amps.len();
            for base in 0..dim {
                if base & b0 == 0 && base & b1 == 0 {
                    let i00 = base;
                    let i01 = base | b1;
                    let i10 = base | b0;
                    let i11 = base | b0 | b1;
                    let v = [amps[i00], amps[i01], amps[i10], amps[i11]];
                    for (r, &idx) in [i00, i01, i10, i11].iter().enumerate() {
                        amps[idx] =
                            m[(r, 0)] * v[0] + m[(r, 1)] * v[1] + m[(r, 2)] * v[2] + m[(r, 3)] * v[3];
                    }
                }
            }
        }
        _ => {
            // Zero-controlled Pauli string: permutation plus phase.
            let Gate::ControlledPauliString(letters) = gate else {
                unreachable!("only CPAULI has arity > 2");
            };
            let ctrl_bit = 1usize << (n - 1 - targets[0]);
            let mut flip = 0usize;
            for (j, &p) in letters.iter().enumerate() {
                if matches!(p, Pauli::X | Pauli::Y) {
                    flip |= 1usize << (n - 1 - targets[1 + j]);
                }
            }
            let dim = amps.len();
            let mut scratch = vec![Complex64::new(0.0, 0.0); dim];
            for idx in 0..dim {
                if idx & ctrl_bit != 0 {
                    scratch[idx] += amps[idx];
                    continue;
                }
                let mut amp = amps[idx];
                for (j, &p) in letters.iter().enumerate() {
                    let bit = 1usize << (n - 1 - targets[1 + j]);
                    let b = idx & bit != 0;
                    match p {
                        Pauli::I | Pauli::X => {}
                        Pauli::Y => {
                            amp *= if b {
                                Complex64::new(0.0, -1.0)
                            } else {
                                Complex64::new(0.0, 1.0)
                            }
                        }
                        Pauli::Z => {
                            if b {
                                amp = -amp;
                            }
                        }
                    }
                }
                scratch[idx ^ flip] += amp;
            }
            amps.copy_from_slice(&scratch);
        }
    }
}

/// Ordered product of the gate embeddings as a dense matrix.
pub fn circuit_unitary(c: &Circuit) -> Result<DMatrix<Complex64>> {
    if c.num_qubits > 10 {
        return Err(Error::TooManyQubits {
            got: c.num_qubits,
            max: 10,
        });
    }
    let dim = 1usize << c.num_qubits;
    let mut u = DMatrix::<Complex64>::identity(dim, dim);
    let mut col = vec![Complex64::new(0.0, 0.0); dim];
    for j in 0..dim {
        for r in 0..dim {
            col[r] = u[(r, j)];
        }
        for (gate, targets) in &c.ops {
            apply_gate_amps(&mut col, c.num_qubits, gate, targets);
        }
        for r in 0..dim {
            u[(r, j)] = col[r];
        }
    }
    Ok(u)
}

/// Greedy as-soon-as-possible layering depth; Rz gates occupy no layer and
/// do not block their qubit.
pub fn depth_excluding_rz(c: &Circuit) -> Result<usize> {
    let mut avail = vec![0usize; c.num_qubits];
    let mut depth = 0usize;
    for (gate, targets) in &c.ops {
        if !gate.is_native() {
            return Err(Error::AbstractGate(gate.name().to_string()));
        }
        if gate.is_rz() {
            continue;
        }
        let layer = targets.iter().map(|&t| avail[t]).max().unwrap_or(0);
        for &t in targets {
            avail[t] = layer + 1;
        }
        depth = depth.max(layer + 1);
    }
    Ok(depth)
}

/// True iff `u` equals `v` up to one global phase, with the phase extracted
/// from the largest-magnitude entry of `v`.
pub fn phase_equivalent(u: &DMatrix<Complex64>, v: &DMatrix<Complex64>, tol: f64) -> Result<bool> {
    if u.shape() != v.shape() {
        return Err(Error::DimensionMismatch(u.nrows(), v.nrows()));
    }
    let mut best = (0usize, 0usize);
    let mut best_norm = 0.0;
    for r in 0..v.nrows() {
        for c in 0..v.ncols() {
            if v[(r, c)].norm() > best_norm {
                best_norm = v[(r, c)].norm();
                best = (r, c);
            }
        }
    }
    if best_norm == 0.0 {
        return Ok(u.iter().map(|z| z.norm()).fold(0.0, f64::max) <= tol);
    }
    let ratio = u[best] / v[best];
    if ratio.norm() == 0.0 {
        return Ok(false);
    }
    let phi = ratio / ratio.norm();
    let defect = (u - v * phi).iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(defect <= tol)
}

/// One op per line: `GATE q0 [q1 ...] [param ...]`, angles with 17
/// significant digits. CPAULI lines carry the letter string as a token.
pub fn serialize(c: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "QUBITS {}", c.num_qubits);
    for (gate, targets) in &c.ops {
        let mut line = gate.name().to_string();
        for t in targets {
            let _ = write!(line, " {t}");
        }
        match gate {
            Gate::Rz(a) | Gate::Rzz(a) | Gate::HoppingXY(a) | Gate::CPhase(a) => {
                let _ = write!(line, " {a:.16e}");
            }
            Gate::ISwap(th, eta) => {
                let _ = write!(line, " {th:.16e} {eta:.16e}");
            }
            Gate::ControlledPauliString(letters) => {
                let s: String = letters
                    .iter()
                    .map(|p| match p {
                        Pauli::I => 'I',
                        Pauli::X => 'X',
                        Pauli::Y => 'Y',
                        Pauli::Z => 'Z',
                    })
                    .collect();
                let _ = write!(line, " {s}");
            }
            _ => {}
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gate_circuit(gate: Gate, targets: &[usize]) -> Circuit {
        let n = targets.iter().max().unwrap() + 1;
        let mut c = Circuit::new(n);
        c.push(gate, targets);
        c
    }

    fn lowering_matches(gate: Gate, tol: f64) {
        let arity = gate.arity();
        let targets: Vec<usize> = (0..arity).collect();
        let abstract_m = gate.matrix();
        let mut lowered = Circuit::new(arity);
        for (g, t) in decompose_to_native(&gate, &targets).unwrap() {
            lowered.push(g, &t);
        }
        let lowered_m = circuit_unitary(&lowered).unwrap();
        assert!(
            phase_equivalent(&lowered_m, &abstract_m, tol).unwrap(),
            "lowering of {} deviates",
            gate.name()
        );
    }

    #[test]
    fn fswap_lowering() {
        lowering_matches(Gate::FSwap, 1e-12);
    }

    #[test]
    fn rzz_lowerings() {
        for theta in [0.0, 0.3, -1.7, PI] {
            lowering_matches(Gate::Rzz(theta), 1e-12);
        }
    }

    #[test]
    fn rzz_zero_angle_is_identity() {
        let mut c = Circuit::new(2);
        for (g, t) in decompose_to_native(&Gate::Rzz(0.0), &[0, 1]).unwrap() {
            c.push(g, &t);
        }
        let u = circuit_unitary(&c).unwrap();
        let id = DMatrix::<Complex64>::identity(4, 4);
        assert!(phase_equivalent(&u, &id, 1e-12).unwrap());
    }

    #[test]
    fn controlled_pauli_lowerings() {
        lowering_matches(Gate::ControlledPauliString(vec![Pauli::Z]), 1e-12);
        lowering_matches(Gate::ControlledPauliString(vec![Pauli::X]), 1e-12);
        lowering_matches(Gate::ControlledPauliString(vec![Pauli::X, Pauli::X]), 1e-12);
        lowering_matches(Gate::ControlledPauliString(vec![Pauli::Z, Pauli::Z]), 1e-12);
    }

    #[test]
    fn remaining_lowerings() {
        lowering_matches(Gate::HoppingXY(0.42), 1e-12);
        lowering_matches(Gate::Hadamard, 1e-12);
        lowering_matches(Gate::Cnot, 1e-12);
        lowering_matches(Gate::BasisU, 1e-12);
        lowering_matches(Gate::PrepPlus, 1e-12);
        lowering_matches(Gate::PrepMinus, 1e-12);
    }

    #[test]
    fn zero_controlled_x_matrix() {
        // c0-X applies X exactly when the control reads |0>.
        let m = Gate::ControlledPauliString(vec![Pauli::X]).matrix();
        let one = Complex64::new(1.0, 0.0);
        let expect = DMatrix::from_row_slice(
            4,
            4,
            &[
                Complex64::new(0.0, 0.0), one, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0),
                one, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), one, Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), one,
            ],
        );
        assert_eq!(m, expect);
    }

    #[test]
    fn empty_circuit_unitary_is_identity() {
        let c = Circuit::new(2);
        let u = circuit_unitary(&c).unwrap();
        assert_eq!(u, DMatrix::identity(4, 4));
    }

    #[test]
    fn single_iswap_matches_table() {
        let c = gate_circuit(Gate::ISwap(PI, 0.0), &[0, 1]);
        let u = circuit_unitary(&c).unwrap();
        assert!((u - Gate::ISwap(PI, 0.0).matrix())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
            <= 1e-12);
    }

    #[test]
    fn sqrt_gates_square_to_paulis() {
        let sx = Gate::SqrtX.matrix();
        let sy = Gate::SqrtY.matrix();
        assert!(phase_equivalent(&(&sx * &sx), &Pauli::X.matrix(), 1e-12).unwrap());
        assert!(phase_equivalent(&(&sy * &sy), &Pauli::Y.matrix(), 1e-12).unwrap());
    }

    #[test]
    fn depth_counting() {
        let mut c = Circuit::new(2);
        c.push(Gate::Rz(0.1), &[0]);
        c.push(Gate::Rz(0.2), &[1]);
        assert_eq!(depth_excluding_rz(&c).unwrap(), 0);

        let mut c = Circuit::new(2);
        c.push(Gate::X, &[0]);
        c.push(Gate::X, &[0]);
        assert_eq!(depth_excluding_rz(&c).unwrap(), 2);

        let mut c = Circuit::new(2);
        c.push(Gate::X, &[0]);
        c.push(Gate::X, &[1]);
        assert_eq!(depth_excluding_rz(&c).unwrap(), 1);
    }

    #[test]
    fn depth_invariant_under_rz_insertion() {
        let mut c = Circuit::new(3);
        c.push(Gate::ISwap(0.3, 0.0), &[0, 1]);
        c.push(Gate::SqrtX, &[2]);
        c.push(Gate::CPhase(0.2), &[1, 2]);
        let base = depth_excluding_rz(&c).unwrap();
        let mut padded = Circuit::new(3);
        for (k, (g, t)) in c.ops.iter().enumerate() {
            padded.push(Gate::Rz(0.1 * k as f64), &[k % 3]);
            padded.push(g.clone(), t);
            padded.push(Gate::Rz(-0.2), &[(k + 1) % 3]);
        }
        assert_eq!(depth_excluding_rz(&padded).unwrap(), base);
    }

    #[test]
    fn depth_rejects_abstract() {
        let mut c = Circuit::new(2);
        c.push(Gate::FSwap, &[0, 1]);
        assert!(depth_excluding_rz(&c).is_err());
    }

    #[test]
    fn phase_equivalence_cases() {
        let id = DMatrix::<Complex64>::identity(2, 2);
        let rotated = &id * Complex64::from_polar(1.0, PI / 7.0);
        assert!(phase_equivalent(&rotated, &id, 1e-12).unwrap());
        assert!(!phase_equivalent(&Pauli::X.matrix(), &Pauli::Z.matrix(), 0.5).unwrap());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let mut c = Circuit::new(3);
        c.push(Gate::Rzz(0.37), &[0, 1]);
        c.push(Gate::HoppingXY(0.9), &[1, 2]);
        c.push(Gate::FSwap, &[0, 1]);
        c.push(Gate::ControlledPauliString(vec![Pauli::X, Pauli::Z]), &[0, 1, 2]);
        let mut whole = c.clone();
        whole.extend(&c.inverse().unwrap());
        let u = circuit_unitary(&whole.lowered().unwrap()).unwrap();
        let id = DMatrix::<Complex64>::identity(8, 8);
        assert!(phase_equivalent(&u, &id, 1e-10).unwrap());
    }

    #[test]
    fn serialization_format() {
        let mut c = Circuit::new(3);
        c.push(Gate::Rz(0.5), &[2]);
        c.push(Gate::ISwap(PI, 0.0), &[0, 1]);
        let s = serialize(&c);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "QUBITS 3");
        assert!(lines[1].starts_with("RZ 2 5.0000000000000000e-1"));
        assert!(lines[2].starts_with("ISWAP 0 1"));
    }
}
