//! Signed Pauli-string arithmetic and dense-matrix realization.
//!
//! Every Hamiltonian term, control string and test oracle in this crate is
//! expressed through [`PauliString`] and [`PauliSum`]. Qubit index 0 is the
//! leftmost Kronecker factor (big-endian tensor order); all modules share
//! this convention.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest qubit count for which we materialize dense matrices.
pub const DENSE_QUBIT_LIMIT: usize = 12;

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> DMatrix<Complex64> {
        let (a, b, c, d) = match self {
            Pauli::I => ((1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)),
            Pauli::X => ((0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)),
            Pauli::Y => ((0.0, 0.0), (0.0, -1.0), (0.0, 1.0), (0.0, 0.0)),
            Pauli::Z => ((1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)),
        };
        DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(a.0, a.1),
                Complex64::new(b.0, b.1),
                Complex64::new(c.0, c.1),
                Complex64::new(d.0, d.1),
            ],
        )
    }

    fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Product of two Pauli letters: (result, phase) with phase in {1, i, -1, -i}
/// represented as a power of i.
fn mul_letters(a: Pauli, b: Pauli) -> (Pauli, u8) {
    use Pauli::*;
    match (a, b) {
        (I, p) => (p, 0),
        (p, I) => (p, 0),
        (X, X) | (Y, Y) | (Z, Z) => (I, 0),
        (X, Y) => (Z, 1),
        (Y, X) => (Z, 3),
        (Y, Z) => (X, 1),
        (Z, Y) => (X, 3),
        (Z, X) => (Y, 1),
        (X, Z) => (Y, 3),
    }
}

/// Phase unit from {+1, -1, +i, -i}, stored as a power of i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn value(self) -> Complex64 {
        match self.0 & 3 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    pub fn is_real(self) -> bool {
        self.0 & 1 == 0
    }

    fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) & 3)
    }
}

/// Tensor product of single-qubit Paulis with a tracked unit phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString {
    axes: Vec<Pauli>,
    phase: Phase,
}

impl PauliString {
    /// Identity string on `n` qubits.
    pub fn identity(n: usize) -> Self {
        Self {
            axes: vec![Pauli::I; n],
            phase: Phase::ONE,
        }
    }

    /// String with the given letters placed at `(qubit, letter)` pairs,
    /// identity elsewhere.
    pub fn from_ops(n: usize, ops: &[(usize, Pauli)]) -> Self {
        let mut axes = vec![Pauli::I; n];
        for &(q, p) in ops {
            assert!(q < n, "qubit index {q} out of range for {n} qubits");
            axes[q] = p;
        }
        Self {
            axes,
            phase: Phase::ONE,
        }
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn num_qubits(&self) -> usize {
        self.axes.len()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn axes(&self) -> &[Pauli] {
        &self.axes
    }

    pub fn axis(&self, q: usize) -> Pauli {
        self.axes[q]
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.axes.iter().filter(|p| **p != Pauli::I).count()
    }

    /// Group product `self * other` with exact phase tracking.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::QubitCountMismatch(
                self.num_qubits(),
                other.num_qubits(),
            ));
        }
        let mut phase = self.phase.mul(other.phase);
        let axes = self
            .axes
            .iter()
            .zip(other.axes.iter())
            .map(|(&a, &b)| {
                let (p, k) = mul_letters(a, b);
                phase = phase.mul(Phase(k));
                p
            })
            .collect();
        Ok(PauliString { axes, phase })
    }

    /// True iff `self * other == -(other * self)`. Phases cancel, so only the
    /// count of positions with distinct non-identity letters matters.
    pub fn anticommutes(&self, other: &PauliString) -> Result<bool> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::QubitCountMismatch(
                self.num_qubits(),
                other.num_qubits(),
            ));
        }
        let odd = self
            .axes
            .iter()
            .zip(other.axes.iter())
            .filter(|(&a, &b)| a != Pauli::I && b != Pauli::I && a != b)
            .count();
        Ok(odd % 2 == 1)
    }

    /// Dense matrix including the phase.
    pub fn to_matrix(&self) -> Result<DMatrix<Complex64>> {
        let n = self.num_qubits();
        if n > DENSE_QUBIT_LIMIT {
            return Err(Error::TooManyQubits {
                got: n,
                max: DENSE_QUBIT_LIMIT,
            });
        }
        let mut m = DMatrix::from_element(1, 1, self.phase.value());
        for &p in &self.axes {
            m = m.kronecker(&p.matrix());
        }
        Ok(m)
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = match self.phase {
            Phase::ONE => "+",
            Phase::MINUS_ONE => "-",
            Phase::I => "+i",
            Phase::MINUS_I => "-i",
            _ => unreachable!(),
        };
        write!(f, "{}", sign)?;
        for p in &self.axes {
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

/// Weighted sum of Pauli strings. Hermitian iff every phase is real and every
/// coefficient finite real (coefficients are stored real by construction).
#[derive(Debug, Clone, Default)]
pub struct PauliSum {
    terms: Vec<(f64, PauliString)>,
}

impl PauliSum {
    pub fn new() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<(f64, PauliString)>) -> Self {
        let s = Self { terms };
        s.validate();
        s
    }

    fn validate(&self) {
        if let Some(n) = self.terms.first().map(|(_, p)| p.num_qubits()) {
            for (c, p) in &self.terms {
                assert!(c.is_finite(), "non-finite coefficient");
                assert_eq!(p.num_qubits(), n, "mixed qubit counts in PauliSum");
            }
        }
    }

    pub fn push(&mut self, coeff: f64, string: PauliString) {
        if let Some((_, first)) = self.terms.first() {
            assert_eq!(first.num_qubits(), string.num_qubits());
        }
        assert!(coeff.is_finite());
        self.terms.push((coeff, string));
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn num_qubits(&self) -> usize {
        self.terms.first().map(|(_, p)| p.num_qubits()).unwrap_or(0)
    }

    pub fn is_hermitian(&self) -> bool {
        self.terms.iter().all(|(_, p)| p.phase().is_real())
    }

    /// Sum of all terms as a dense matrix.
    pub fn to_matrix(&self, n: usize) -> Result<DMatrix<Complex64>> {
        if n > DENSE_QUBIT_LIMIT {
            return Err(Error::TooManyQubits {
                got: n,
                max: DENSE_QUBIT_LIMIT,
            });
        }
        let dim = 1usize << n;
        let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
        for (c, p) in &self.terms {
            if p.num_qubits() != n {
                return Err(Error::QubitCountMismatch(p.num_qubits(), n));
            }
            acc += p.to_matrix()? * Complex64::new(*c, 0.0);
        }
        Ok(acc)
    }

    /// Concatenate terms of two sums.
    pub fn add(&self, other: &PauliSum) -> PauliSum {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        PauliSum::from_terms(terms)
    }
}
