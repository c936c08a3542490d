//! Oracle construction and the two classifiers.
//!
//! A hidden f: {0,1}^n → {0,1} promised to be constant or balanced is
//! classified two ways: the one-query quantum circuit over [`crate::qsim`],
//! and the deterministic classical strategy that probes inputs in ascending
//! order with every evaluation counted.

use thiserror::Error;

use crate::qsim::{self, QsimError, Unitary, QUBIT_CAP};
use crate::TOL_CIRCUIT;

/// Combinatorial cap for balanced enumeration (C(16, 8) = 12870 at n = 4).
pub const ENUM_CAP: usize = 4;

#[derive(Debug, Error, PartialEq)]
pub enum DeutschError {
    #[error("table length {0} is not 2^{1}")]
    BadTableLength(usize, usize),
    #[error("function is neither constant nor balanced; promise violated")]
    PromiseViolation,
    #[error("enumeration requires n <= {0}, got {1}")]
    EnumerationCap(usize, usize),
    #[error("oracle needs {0} qubits, above the cap of {1}")]
    SizeCap(usize, usize),
    #[error("invalid oracle character {0:?}; expected '0' or '1'")]
    BadOracleChar(char),
    #[error("oracle length {0} is not a power of two")]
    BadOracleLength(usize),
    #[error(transparent)]
    Qsim(#[from] QsimError),
}

/// Explicit truth table of f: {0,1}^n → {0,1}; entry x is f(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    input_bits: usize,
    values: Vec<u8>,
}

impl FunctionTable {
    pub fn new(input_bits: usize, values: Vec<u8>) -> Result<Self, DeutschError> {
        if input_bits == 0 || values.len() != 1 << input_bits {
            return Err(DeutschError::BadTableLength(values.len(), input_bits));
        }
        debug_assert!(values.iter().all(|&v| v <= 1));
        Ok(Self { input_bits, values })
    }

    /// Parses the oracle text format: one line over {0,1}, length a power
    /// of two, entry x read as an n-bit big-endian integer. Surrounding
    /// whitespace is trimmed.
    pub fn parse(text: &str) -> Result<Self, DeutschError> {
        let text = text.trim();
        let mut values = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => values.push(0),
                '1' => values.push(1),
                other => return Err(DeutschError::BadOracleChar(other)),
            }
        }
        if values.len() < 2 || !values.len().is_power_of_two() {
            return Err(DeutschError::BadOracleLength(values.len()));
        }
        let n = values.len().trailing_zeros() as usize;
        Self::new(n, values)
    }

    pub fn input_bits(&self) -> usize {
        self.input_bits
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn eval(&self, x: usize) -> u8 {
        self.values[x]
    }

    /// The table with every output complemented (0 ↔ 1).
    pub fn complemented(&self) -> Self {
        Self {
            input_bits: self.input_bits,
            values: self.values.iter().map(|v| 1 - v).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Constant,
    Balanced,
    Neither,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Constant => write!(f, "constant"),
            Classification::Balanced => write!(f, "balanced"),
            Classification::Neither => write!(f, "neither"),
        }
    }
}

/// One oracle evaluation as seen by a classifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryRecord {
    /// A classical probe at one input, with the observed output bit.
    Classical { input: usize, output: u8 },
    /// One application of the oracle unitary to a superposed register.
    Superposed,
}

/// Count and transcript of oracle evaluations in one classification run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QueryLog {
    transcript: Vec<QueryRecord>,
}

impl QueryLog {
    pub fn queries(&self) -> usize {
        self.transcript.len()
    }

    pub fn transcript(&self) -> &[QueryRecord] {
        &self.transcript
    }
}

/// A black-box view of a table that logs every evaluation.
///
/// Confined to a single classification run; create a fresh one per run.
#[derive(Debug, Clone)]
pub struct BlackBox {
    table: FunctionTable,
    log: QueryLog,
}

impl BlackBox {
    pub fn new(table: FunctionTable) -> Self {
        Self {
            table,
            log: QueryLog::default(),
        }
    }

    pub fn input_bits(&self) -> usize {
        self.table.input_bits
    }

    pub fn query(&mut self, input: usize) -> u8 {
        let output = self.table.eval(input);
        self.log
            .transcript
            .push(QueryRecord::Classical { input, output });
        output
    }

    pub fn log(&self) -> &QueryLog {
        &self.log
    }
}

/// Constant / Balanced / Neither by direct inspection of the table.
pub fn classify_table(f: &FunctionTable) -> Classification {
    let ones: usize = f.values.iter().map(|&v| v as usize).sum();
    if ones == 0 || ones == f.values.len() {
        Classification::Constant
    } else if 2 * ones == f.values.len() {
        Classification::Balanced
    } else {
        Classification::Neither
    }
}

/// The f-controlled-NOT permutation unitary |x⟩|y⟩ ↦ |x⟩|y ⊕ f(x)⟩.
///
/// Acts on n + 1 qubits with the target bit last (least significant).
pub fn oracle_unitary(f: &FunctionTable) -> Result<Unitary, DeutschError> {
    let n = f.input_bits;
    if n + 1 > QUBIT_CAP {
        return Err(DeutschError::SizeCap(n + 1, QUBIT_CAP));
    }
    let dim = 1usize << (n + 1);
    let mut entries = vec![num_complex::Complex64::new(0.0, 0.0); dim * dim];
    for input in 0..dim {
        let x = input >> 1;
        let y = input & 1;
        let output = (x << 1) | (y ^ f.eval(x) as usize);
        entries[output * dim + input] = num_complex::Complex64::new(1.0, 0.0);
    }
    Ok(Unitary::new(dim, entries)?)
}

/// Runs the one-query quantum circuit and reads the verdict exactly.
///
/// Returns the classification, a log showing the single oracle
/// application, and the certainty (the marginal probability backing the
/// verdict, or its complement).
pub fn classify_quantum(
    f: &FunctionTable,
) -> Result<(Classification, QueryLog, f64), DeutschError> {
    if classify_table(f) == Classification::Neither {
        return Err(DeutschError::PromiseViolation);
    }
    let n = f.input_bits;
    let mut log = QueryLog::default();
    let state = circuit_final_state(f)?;
    log.transcript.push(QueryRecord::Superposed);

    let input_register: Vec<usize> = (0..n).collect();
    let p_all_zero = qsim::marginal_probability(&state, &input_register, 0)?;
    if (p_all_zero - 1.0).abs() < TOL_CIRCUIT {
        Ok((Classification::Constant, log, p_all_zero))
    } else if p_all_zero.abs() < TOL_CIRCUIT {
        Ok((Classification::Balanced, log, 1.0 - p_all_zero))
    } else {
        // Unreachable for promise tables; the promise check above guards it.
        Err(DeutschError::PromiseViolation)
    }
}

/// The register state after the full circuit, before readout.
///
/// |0⟩^n |1⟩, then H everywhere, one oracle call, H on the input register.
pub fn circuit_final_state(f: &FunctionTable) -> Result<crate::qsim::StateVector, DeutschError> {
    let n = f.input_bits;
    let oracle = oracle_unitary(f)?;
    let mut state = qsim::zero_state(n + 1)?;
    state = qsim::apply(&state, &qsim::pauli_x(), &[n])?;
    state = qsim::apply_all(&state, &qsim::hadamard())?;
    let all: Vec<usize> = (0..=n).collect();
    state = qsim::apply(&state, &oracle, &all)?;
    let h = qsim::hadamard();
    for q in 0..n {
        state = qsim::apply(&state, &h, &[q])?;
    }
    Ok(state)
}

/// Deterministic classical strategy: probe inputs 0, 1, 2, ... in order.
///
/// Answers Balanced as soon as two outputs differ and Constant after
/// 2^(n-1) + 1 identical outputs.
pub fn classify_classical(oracle: &mut BlackBox) -> (Classification, QueryLog) {
    let n = oracle.input_bits();
    let threshold = (1usize << (n - 1)) + 1;
    let first = oracle.query(0);
    for input in 1.. {
        if oracle.query(input) != first {
            return (Classification::Balanced, oracle.log().clone());
        }
        if input + 1 == threshold {
            break;
        }
    }
    (Classification::Constant, oracle.log().clone())
}

/// All tables of the requested class, each distinct.
///
/// Yields 2 tables for Constant and C(2^n, 2^(n-1)) for Balanced; Neither
/// yields everything else (full-sweep filter, so the same cap applies).
pub fn enumerate_functions(
    n: usize,
    which: Classification,
) -> Result<Vec<FunctionTable>, DeutschError> {
    if n == 0 || n > ENUM_CAP {
        return Err(DeutschError::EnumerationCap(ENUM_CAP, n));
    }
    let len = 1usize << n;
    let tables = match which {
        Classification::Constant => vec![
            FunctionTable::new(n, vec![0; len])?,
            FunctionTable::new(n, vec![1; len])?,
        ],
        _ => all_tables(n)?
            .into_iter()
            .filter(|t| classify_table(t) == which)
            .collect(),
    };
    Ok(tables)
}

/// Every one of the 2^(2^n) tables on n input bits, in mask order.
pub fn all_tables(n: usize) -> Result<Vec<FunctionTable>, DeutschError> {
    if n == 0 || n > ENUM_CAP {
        return Err(DeutschError::EnumerationCap(ENUM_CAP, n));
    }
    let len = 1usize << n;
    (0u32..1 << len)
        .map(|mask| {
            let values = (0..len).map(|x| ((mask >> x) & 1) as u8).collect();
            FunctionTable::new(n, values)
        })
        .collect()
}

/// Applies the oracle twice to a basis state and returns the landing index.
///
/// Always the identity: the XOR target makes the mapping reversible.
pub fn reverse_oracle_roundtrip(
    f: &FunctionTable,
    basis: usize,
) -> Result<usize, DeutschError> {
    let oracle = oracle_unitary(f)?;
    let dim = oracle.dim();
    assert!(basis < dim);
    let forward = |index: usize| {
        (0..dim)
            .find(|&out| oracle.entry(out, index).norm() > 0.5)
            .expect("permutation row")
    };
    Ok(forward(forward(basis)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TOL_ALGEBRA;
    use num_complex::Complex64;

    fn table(bits: &[u8]) -> FunctionTable {
        let n = bits.len().trailing_zeros() as usize;
        FunctionTable::new(n, bits.to_vec()).unwrap()
    }

    // Independent oracle: full Kronecker-product evolution of the circuit,
    // never touching qsim::apply.
    mod dense {
        use super::*;

        pub fn kron(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
            let (ra, ca) = (a.len(), a[0].len());
            let (rb, cb) = (b.len(), b[0].len());
            let mut out = vec![vec![Complex64::new(0.0, 0.0); ca * cb]; ra * rb];
            for i in 0..ra {
                for j in 0..ca {
                    for k in 0..rb {
                        for l in 0..cb {
                            out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                        }
                    }
                }
            }
            out
        }

        pub fn h2() -> Vec<Vec<Complex64>> {
            let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            vec![vec![h, h], vec![h, -h]]
        }

        pub fn id(n: usize) -> Vec<Vec<Complex64>> {
            let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = Complex64::new(1.0, 0.0);
            }
            m
        }

        #[allow(clippy::needless_range_loop)]
        pub fn oracle(f: &FunctionTable) -> Vec<Vec<Complex64>> {
            let dim = 1 << (f.input_bits() + 1);
            let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
            for input in 0..dim {
                let x = input >> 1;
                let out = (x << 1) | ((input & 1) ^ f.eval(x) as usize);
                m[out][input] = Complex64::new(1.0, 0.0);
            }
            m
        }

        pub fn matvec(m: &[Vec<Complex64>], v: &[Complex64]) -> Vec<Complex64> {
            m.iter()
                .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
                .collect()
        }

        /// Full-circuit evolution for n input bits; returns the final
        /// probability of the input register being all zero.
        pub fn run(f: &FunctionTable) -> f64 {
            let n = f.input_bits();
            let dim = 1 << (n + 1);
            // |0...0 1⟩
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[1] = Complex64::new(1.0, 0.0);
            let mut h_all = h2();
            for _ in 1..=n {
                h_all = kron(&h_all, &h2());
            }
            v = matvec(&h_all, &v);
            v = matvec(&oracle(f), &v);
            let mut h_front = h2();
            for _ in 1..n {
                h_front = kron(&h_front, &h2());
            }
            v = matvec(&kron(&h_front, &id(2)), &v);
            v[0].norm_sqr() + v[1].norm_sqr()
        }
    }

    #[test]
    fn classify_table_cases() {
        assert_eq!(classify_table(&table(&[0, 0])), Classification::Constant);
        assert_eq!(classify_table(&table(&[0, 1])), Classification::Balanced);
        assert_eq!(
            classify_table(&table(&[0, 0, 0, 1])),
            Classification::Neither
        );
    }

    #[test]
    fn oracle_unitary_cases() {
        // f = (0,1): |1⟩|0⟩ ↦ |1⟩|1⟩, index 2 ↦ 3; all four mapped by hand.
        let u = oracle_unitary(&table(&[0, 1])).unwrap();
        let expect = [(0, 0), (1, 1), (3, 2), (2, 3)];
        for (out, input) in expect {
            assert!((u.entry(out, input).re - 1.0).abs() < TOL_ALGEBRA);
        }

        // f = (0,0): identity.
        let u = oracle_unitary(&table(&[0, 0])).unwrap();
        for i in 0..4 {
            assert!((u.entry(i, i).re - 1.0).abs() < TOL_ALGEBRA);
        }

        // f = (1,1): X on the last qubit (0↔1, 2↔3).
        let u = oracle_unitary(&table(&[1, 1])).unwrap();
        for (out, input) in [(1, 0), (0, 1), (3, 2), (2, 3)] {
            assert!((u.entry(out, input).re - 1.0).abs() < TOL_ALGEBRA);
        }
    }

    #[test]
    fn quantum_classifier_one_bit() {
        let (c, log, certainty) = classify_quantum(&table(&[0, 0])).unwrap();
        assert_eq!(c, Classification::Constant);
        assert_eq!(log.queries(), 1);
        assert!((certainty - 1.0).abs() < TOL_CIRCUIT);

        let (c, log, certainty) = classify_quantum(&table(&[0, 1])).unwrap();
        assert_eq!(c, Classification::Balanced);
        assert_eq!(log.queries(), 1);
        assert!((certainty - 1.0).abs() < TOL_CIRCUIT);
    }

    #[test]
    fn quantum_classifier_matches_dense_oracle() {
        // Cross-check against the independent full-matrix evolution.
        for bits in [
            vec![0u8, 0, 1, 1],
            vec![0, 1, 0, 1],
            vec![1, 1, 1, 1],
            vec![0, 0, 0, 0],
            vec![1, 0, 0, 1],
        ] {
            let f = table(&bits);
            let p_dense = dense::run(&f);
            let (c, _, certainty) = classify_quantum(&f).unwrap();
            let expect = match classify_table(&f) {
                Classification::Constant => 1.0,
                Classification::Balanced => 0.0,
                Classification::Neither => unreachable!(),
            };
            assert!((p_dense - expect).abs() < TOL_CIRCUIT, "dense {p_dense}");
            assert_eq!(c, classify_table(&f));
            assert!((certainty - 1.0).abs() < TOL_CIRCUIT);
        }
    }

    #[test]
    fn quantum_classifier_rejects_neither() {
        assert_eq!(
            classify_quantum(&table(&[0, 0, 0, 1])),
            Err(DeutschError::PromiseViolation)
        );
    }

    #[test]
    fn classical_classifier_query_counts() {
        let mut bb = BlackBox::new(table(&[0, 0]));
        let (c, log) = classify_classical(&mut bb);
        assert_eq!(c, Classification::Constant);
        assert_eq!(log.queries(), 2);

        let mut bb = BlackBox::new(table(&[0, 1]));
        let (c, log) = classify_classical(&mut bb);
        assert_eq!(c, Classification::Balanced);
        assert_eq!(log.queries(), 2);

        let mut bb = BlackBox::new(table(&[1, 1, 1, 1, 1, 1, 1, 1]));
        let (c, log) = classify_classical(&mut bb);
        assert_eq!(c, Classification::Constant);
        assert_eq!(log.queries(), 5);
    }

    #[test]
    fn classical_transcript_records_every_probe() {
        let mut bb = BlackBox::new(table(&[1, 1, 0, 0]));
        let (_, log) = classify_classical(&mut bb);
        assert_eq!(
            log.transcript(),
            &[
                QueryRecord::Classical { input: 0, output: 1 },
                QueryRecord::Classical { input: 1, output: 1 },
                QueryRecord::Classical { input: 2, output: 0 },
            ]
        );
    }

    #[test]
    fn enumeration_counts() {
        let c1 = enumerate_functions(1, Classification::Constant).unwrap();
        assert_eq!(c1, vec![table(&[0, 0]), table(&[1, 1])]);
        let b1 = enumerate_functions(1, Classification::Balanced).unwrap();
        assert_eq!(b1.len(), 2);
        assert!(b1.contains(&table(&[0, 1])) && b1.contains(&table(&[1, 0])));
        assert_eq!(
            enumerate_functions(2, Classification::Balanced).unwrap().len(),
            6
        );
        assert_eq!(
            enumerate_functions(3, Classification::Balanced).unwrap().len(),
            70
        );
        assert_eq!(
            enumerate_functions(5, Classification::Balanced),
            Err(DeutschError::EnumerationCap(ENUM_CAP, 5))
        );
    }

    #[test]
    fn oracle_roundtrip_is_identity() {
        assert_eq!(reverse_oracle_roundtrip(&table(&[0, 1]), 2).unwrap(), 2);
        assert_eq!(reverse_oracle_roundtrip(&table(&[1, 1]), 0).unwrap(), 0);
        let f = table(&[0, 0, 1, 1]);
        for basis in 0..8 {
            assert_eq!(reverse_oracle_roundtrip(&f, basis).unwrap(), basis);
        }
    }

    #[test]
    fn oracle_text_format() {
        assert_eq!(FunctionTable::parse("01\n").unwrap(), table(&[0, 1]));
        assert_eq!(FunctionTable::parse("  0011 ").unwrap(), table(&[0, 0, 1, 1]));
        assert_eq!(
            FunctionTable::parse("0a"),
            Err(DeutschError::BadOracleChar('a'))
        );
        assert_eq!(
            FunctionTable::parse("010"),
            Err(DeutschError::BadOracleLength(3))
        );
        assert_eq!(
            FunctionTable::parse("0"),
            Err(DeutschError::BadOracleLength(1))
        );
    }

    #[test]
    fn complement_preserves_class_and_counts() {
        for n in 1..=3usize {
            for which in [Classification::Constant, Classification::Balanced] {
                for f in enumerate_functions(n, which).unwrap() {
                    let g = f.complemented();
                    assert_eq!(classify_table(&f), classify_table(&g));
                    let (cf, lf, _) = classify_quantum(&f).unwrap();
                    let (cg, lg, _) = classify_quantum(&g).unwrap();
                    assert_eq!(cf, cg);
                    assert_eq!(lf.queries(), lg.queries());
                    let (_, lf) = classify_classical(&mut BlackBox::new(f));
                    let (_, lg) = classify_classical(&mut BlackBox::new(g));
                    assert_eq!(lf.queries(), lg.queries());
                }
            }
        }
    }
}
