//! Parameter arrays: validation against the five classification conditions,
//! the dihedral-group action, affine rescaling, derived identities, and the
//! two built-in example families (Krawtchouk and q-Racah).
//!
//! A parameter array of diameter `d` is the sequence
//! `(theta_i, theta*_i, i = 0..d; varphi_j, phi_j, j = 1..d)` classifying a
//! Leonard system up to isomorphism. The split sequences are indexed from 1;
//! out-of-range indices read as zero.

use std::fmt;

use crate::field::{characteristic_guard, pow_i64, Field};

/// Errors from parameter-array operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrayError {
    /// The input array does not satisfy the classification conditions.
    InvalidInput,
    /// An affine rescaling factor was zero.
    ZeroScale,
    /// The field characteristic degenerates the requested family.
    BadCharacteristic,
    /// A q-Racah parameter constraint failed; the payload names the clause.
    ConstraintViolated(String),
    /// Sequence lengths are not (d+1, d+1, d, d), or fields are mixed.
    MalformedSequences,
}

impl fmt::Display for ArrayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrayError::InvalidInput => write!(f, "parameter array fails validation"),
            ArrayError::ZeroScale => write!(f, "affine rescaling requires nonzero scale factors"),
            ArrayError::BadCharacteristic => {
                write!(f, "field characteristic too small for this diameter")
            }
            ArrayError::ConstraintViolated(clause) => {
                write!(f, "parameter constraint violated: {clause}")
            }
            ArrayError::MalformedSequences => {
                write!(f, "sequence lengths must be d+1, d+1, d, d over one field")
            }
        }
    }
}

impl std::error::Error for ArrayError {}

/// The classifying data of a Leonard system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterArray<F> {
    theta: Vec<F>,
    theta_star: Vec<F>,
    varphi: Vec<F>,
    phi: Vec<F>,
}

/// One of the five classification conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    I,
    II,
    III,
    IV,
    V,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::I => "I",
            Condition::II => "II",
            Condition::III => "III",
            Condition::IV => "IV",
            Condition::V => "V",
        };
        write!(f, "{s}")
    }
}

/// A single validation failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub index: Option<usize>,
    pub detail: String,
}

/// Outcome of validation; `valid` iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Generators of the dihedral action on parameter arrays: the dual, the
/// first inversion and the second inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D4Gen {
    Star,
    Down,
    DDown,
}

impl<F: Field> ParameterArray<F> {
    /// Checked construction: lengths must be `d+1, d+1, d, d` and all
    /// entries must share one field. Validity is not checked here; call
    /// [`ParameterArray::validate`].
    pub fn new(
        theta: Vec<F>,
        theta_star: Vec<F>,
        varphi: Vec<F>,
        phi: Vec<F>,
    ) -> Result<Self, ArrayError> {
        if theta.is_empty()
            || theta_star.len() != theta.len()
            || varphi.len() + 1 != theta.len()
            || phi.len() + 1 != theta.len()
        {
            return Err(ArrayError::MalformedSequences);
        }
        let ctx = theta[0].ctx();
        let all = theta
            .iter()
            .chain(theta_star.iter())
            .chain(varphi.iter())
            .chain(phi.iter());
        for x in all {
            if x.ctx() != ctx {
                return Err(ArrayError::MalformedSequences);
            }
        }
        Ok(ParameterArray {
            theta,
            theta_star,
            varphi,
            phi,
        })
    }

    /// The diameter.
    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn ctx(&self) -> F::Ctx {
        self.theta[0].ctx()
    }

    pub fn theta(&self) -> &[F] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[F] {
        &self.theta_star
    }

    pub fn varphi(&self) -> &[F] {
        &self.varphi
    }

    pub fn phi(&self) -> &[F] {
        &self.phi
    }

    /// `varphi_i` with the boundary convention `varphi_0 = varphi_{d+1} = 0`.
    pub fn varphi_at(&self, i: usize) -> F {
        if (1..=self.d()).contains(&i) {
            self.varphi[i - 1].clone()
        } else {
            F::zero(&self.ctx())
        }
    }

    /// `phi_i` with the boundary convention `phi_0 = phi_{d+1} = 0`.
    pub fn phi_at(&self, i: usize) -> F {
        if (1..=self.d()).contains(&i) {
            self.phi[i - 1].clone()
        } else {
            F::zero(&self.ctx())
        }
    }

    /// Checks the five classification conditions and reports every failure.
    ///
    /// When `theta_0 = theta_d` the telescoping sums in conditions III and IV
    /// are undefined; those conditions (and V) are then reported as
    /// unevaluated rather than checked.
    #[allow(clippy::needless_range_loop)] // indexing tracks the formulas
    pub fn validate(&self) -> ValidationReport {
        let d = self.d();
        let mut violations = Vec::new();

        // (i): nonzero split sequences
        for i in 1..=d {
            if self.varphi[i - 1].is_zero() {
                violations.push(Violation {
                    condition: Condition::I,
                    index: Some(i),
                    detail: format!("varphi[{i}] = 0"),
                });
            }
            if self.phi[i - 1].is_zero() {
                violations.push(Violation {
                    condition: Condition::I,
                    index: Some(i),
                    detail: format!("phi[{i}] = 0"),
                });
            }
        }

        // (ii): distinct eigenvalues, distinct dual eigenvalues
        for i in 0..=d {
            for j in (i + 1)..=d {
                if self.theta[i] == self.theta[j] {
                    violations.push(Violation {
                        condition: Condition::II,
                        index: Some(i),
                        detail: format!("theta[{i}] = theta[{j}]"),
                    });
                }
                if self.theta_star[i] == self.theta_star[j] {
                    violations.push(Violation {
                        condition: Condition::II,
                        index: Some(i),
                        detail: format!("theta_star[{i}] = theta_star[{j}]"),
                    });
                }
            }
        }

        // (iii)/(iv): the split-sequence expansions
        if d >= 1 {
            match inversion_partial_sums(&self.theta) {
                None => {
                    for condition in [Condition::III, Condition::IV, Condition::V] {
                        violations.push(Violation {
                            condition,
                            index: None,
                            detail: "unevaluated: theta[0] = theta[d]".to_string(),
                        });
                    }
                    return ValidationReport { violations };
                }
                Some(sums) => {
                    for i in 1..=d {
                        let expect_varphi = self.phi_at(1) * sums[i].clone()
                            + (self.theta_star[i].clone() - self.theta_star[0].clone())
                                * (self.theta[i - 1].clone() - self.theta[d].clone());
                        if self.varphi[i - 1] != expect_varphi {
                            violations.push(Violation {
                                condition: Condition::III,
                                index: Some(i),
                                detail: format!(
                                    "varphi[{i}] = {}, expected {expect_varphi}",
                                    self.varphi[i - 1]
                                ),
                            });
                        }
                        let expect_phi = self.varphi_at(1) * sums[i].clone()
                            + (self.theta_star[i].clone() - self.theta_star[0].clone())
                                * (self.theta[d - i + 1].clone() - self.theta[0].clone());
                        if self.phi[i - 1] != expect_phi {
                            violations.push(Violation {
                                condition: Condition::IV,
                                index: Some(i),
                                detail: format!(
                                    "phi[{i}] = {}, expected {expect_phi}",
                                    self.phi[i - 1]
                                ),
                            });
                        }
                    }
                }
            }
        }

        // (v): the common-ratio condition, vacuous for d <= 2
        if d >= 3 {
            self.check_condition_v(&mut violations);
        }

        ValidationReport { violations }
    }

    /// For `2 <= i <= d-1` the fractions
    /// `(theta_{i-2} - theta_{i+1}) / (theta_{i-1} - theta_i)` and their
    /// starred analogues must all take one common value.
    fn check_condition_v(&self, violations: &mut Vec<Violation>) {
        let d = self.d();
        let fraction = |seq: &[F], i: usize| -> Option<F> {
            let den = seq[i - 1].clone() - seq[i].clone();
            if den.is_zero() {
                None
            } else {
                Some((seq[i - 2].clone() - seq[i + 1].clone()) / den)
            }
        };
        let mut reference: Option<F> = None;
        for i in 2..=(d - 1) {
            for (name, seq) in [("theta", &self.theta), ("theta_star", &self.theta_star)] {
                match fraction(seq, i) {
                    None => violations.push(Violation {
                        condition: Condition::V,
                        index: Some(i),
                        detail: format!("unevaluated: {name}[{}] = {name}[{i}]", i - 1),
                    }),
                    Some(v) => match &reference {
                        None => reference = Some(v),
                        Some(r) if *r != v => violations.push(Violation {
                            condition: Condition::V,
                            index: Some(i),
                            detail: format!("{name} ratio at i={i} is {v}, expected {r}"),
                        }),
                        Some(_) => {}
                    },
                }
            }
        }
    }

    fn require_valid(&self) -> Result<(), ArrayError> {
        if self.validate().valid() {
            Ok(())
        } else {
            Err(ArrayError::InvalidInput)
        }
    }

    /// The dual: swaps the eigenvalue data and reverses the second split
    /// sequence.
    fn star(&self) -> Self {
        ParameterArray {
            theta: self.theta_star.clone(),
            theta_star: self.theta.clone(),
            varphi: self.varphi.clone(),
            phi: self.phi.iter().rev().cloned().collect(),
        }
    }

    /// The first inversion: reverses the dual eigenvalue sequence and swaps
    /// the reversed split sequences.
    fn down(&self) -> Self {
        ParameterArray {
            theta: self.theta.clone(),
            theta_star: self.theta_star.iter().rev().cloned().collect(),
            varphi: self.phi.iter().rev().cloned().collect(),
            phi: self.varphi.iter().rev().cloned().collect(),
        }
    }

    /// The second inversion: reverses the eigenvalue sequence and swaps the
    /// split sequences.
    fn ddown(&self) -> Self {
        ParameterArray {
            theta: self.theta.iter().rev().cloned().collect(),
            theta_star: self.theta_star.clone(),
            varphi: self.phi.clone(),
            phi: self.varphi.clone(),
        }
    }

    /// Applies a word in the dihedral generators, composing left to right.
    /// The input must be valid; the result is again valid.
    pub fn d4_act(&self, word: &[D4Gen]) -> Result<Self, ArrayError> {
        self.require_valid()?;
        let mut out = self.clone();
        for gen in word {
            out = match gen {
                D4Gen::Star => out.star(),
                D4Gen::Down => out.down(),
                D4Gen::DDown => out.ddown(),
            };
        }
        Ok(out)
    }

    /// Affine rescaling
    /// `(alpha theta_i + beta, alpha* theta*_i + beta*; alpha alpha* varphi_j,
    /// alpha alpha* phi_j)`. Requires nonzero `alpha`, `alpha_star`.
    pub fn affine(
        &self,
        alpha: &F,
        beta: &F,
        alpha_star: &F,
        beta_star: &F,
    ) -> Result<Self, ArrayError> {
        if alpha.is_zero() || alpha_star.is_zero() {
            return Err(ArrayError::ZeroScale);
        }
        self.require_valid()?;
        let scale = alpha.clone() * alpha_star.clone();
        Ok(ParameterArray {
            theta: self
                .theta
                .iter()
                .map(|t| alpha.clone() * t.clone() + beta.clone())
                .collect(),
            theta_star: self
                .theta_star
                .iter()
                .map(|t| alpha_star.clone() * t.clone() + beta_star.clone())
                .collect(),
            varphi: self
                .varphi
                .iter()
                .map(|v| scale.clone() * v.clone())
                .collect(),
            phi: self.phi.iter().map(|v| scale.clone() * v.clone()).collect(),
        })
    }

    /// Self-check identities every valid array satisfies: the inversion
    /// ratio symmetry and the alternative split-sequence expansions in terms
    /// of `phi_d` and `varphi_d`. Requires a valid array with `d >= 1`.
    #[allow(clippy::needless_range_loop)] // indexing tracks the formulas
    pub fn derived_identities(&self) -> Result<bool, ArrayError> {
        self.require_valid()?;
        let d = self.d();
        if d < 1 {
            return Err(ArrayError::InvalidInput);
        }
        let sums = inversion_partial_sums(&self.theta).expect("theta[0] != theta[d] when valid");

        // ratio symmetry between the two eigenvalue sequences
        let span = self.theta[0].clone() - self.theta[d].clone();
        let star_span = self.theta_star[0].clone() - self.theta_star[d].clone();
        for i in 0..=d {
            let lhs = (self.theta[i].clone() - self.theta[d - i].clone()) / span.clone();
            let rhs =
                (self.theta_star[i].clone() - self.theta_star[d - i].clone()) / star_span.clone();
            if lhs != rhs {
                return Ok(false);
            }
        }

        // expansions anchored at the far ends of the split sequences
        for i in 1..=d {
            let varphi_expect = self.phi_at(d) * sums[i].clone()
                + (self.theta[i].clone() - self.theta[0].clone())
                    * (self.theta_star[i - 1].clone() - self.theta_star[d].clone());
            if self.varphi_at(i) != varphi_expect {
                return Ok(false);
            }
            let phi_expect = self.varphi_at(d) * sums[i].clone()
                + (self.theta[d - i].clone() - self.theta[d].clone())
                    * (self.theta_star[i - 1].clone() - self.theta_star[d].clone());
            if self.phi_at(i) != phi_expect {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Partial sums `S_i = sum_{h=0}^{i-1} (x_h - x_{d-h}) / (x_0 - x_d)` for
/// `0 <= i <= d`, or `None` when `x_0 = x_d`. `S_0 = 0` and `S_1 = 1`.
pub fn inversion_partial_sums<F: Field>(seq: &[F]) -> Option<Vec<F>> {
    let d = seq.len() - 1;
    let ctx = seq[0].ctx();
    let span = seq[0].clone() - seq[d].clone();
    if span.is_zero() && d > 0 {
        return None;
    }
    let mut sums = Vec::with_capacity(d + 1);
    let mut acc = F::zero(&ctx);
    sums.push(acc.clone());
    for h in 0..d {
        acc = acc + (seq[h].clone() - seq[d - h].clone()) / span.clone();
        sums.push(acc.clone());
    }
    Some(sums)
}

// ---------------------------------------------------------------------------
// Example families
// ---------------------------------------------------------------------------

/// The Krawtchouk family: `theta_i = theta*_i = d - 2i`,
/// `varphi_i = -2i(d-i+1)`, `phi_i = 2i(d-i+1)`.
///
/// Requires characteristic zero or an odd prime `p > 2d`; the bound is
/// strict enough that every split value and eigenvalue difference stays
/// nonzero, and the construction re-validates to make sure.
pub fn krawtchouk_array<F: Field>(d: usize, ctx: &F::Ctx) -> Result<ParameterArray<F>, ArrayError> {
    if !characteristic_guard(F::characteristic(ctx), 2 * d) {
        return Err(ArrayError::BadCharacteristic);
    }
    let int = |n: i64| F::from_i64(ctx, n);
    let d_i = d as i64;
    let theta: Vec<F> = (0..=d_i).map(|i| int(d_i - 2 * i)).collect();
    let varphi: Vec<F> = (1..=d_i).map(|i| int(-2 * i * (d_i - i + 1))).collect();
    let phi: Vec<F> = (1..=d_i).map(|i| int(2 * i * (d_i - i + 1))).collect();
    let array = ParameterArray::new(theta.clone(), theta, varphi, phi)
        .expect("lengths match by construction");
    if !array.validate().valid() {
        return Err(ArrayError::BadCharacteristic);
    }
    Ok(array)
}

/// Parameters of the q-Racah family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QRacahParams<F> {
    pub d: usize,
    pub q: F,
    pub s: F,
    pub s_star: F,
    pub r1: F,
    pub r2: F,
}

impl<F: Field> QRacahParams<F> {
    /// Checks the admissibility clauses and builds the array.
    pub fn array(&self) -> Result<ParameterArray<F>, ArrayError> {
        qracah_array(
            self.d,
            self.q.clone(),
            self.s.clone(),
            self.s_star.clone(),
            self.r1.clone(),
            self.r2.clone(),
        )
    }
}

/// The q-Racah family:
///
/// ```text
/// theta_i  = q^{-i} + s  q^{i+1}        theta*_i = q^{-i} + s* q^{i+1}
/// varphi_i = q^{1-2i} (1-q^i) (1-q^{i-d-1}) (1-r1 q^i) (1-r2 q^i)
/// phi_i    = q^{1-2i} (1-q^i) (1-q^{i-d-1}) (r1-s* q^i) (r2-s* q^i) / s*
/// ```
///
/// subject to `r1 r2 = s s* q^{d+1}`, none of `q^i, r1 q^i, r2 q^i,
/// s* q^i / r1, s* q^i / r2` equal to 1 for `1 <= i <= d`, and neither of
/// `s q^i, s* q^i` equal to 1 for `2 <= i <= 2d`.
pub fn qracah_array<F: Field>(
    d: usize,
    q: F,
    s: F,
    s_star: F,
    r1: F,
    r2: F,
) -> Result<ParameterArray<F>, ArrayError> {
    let clause = |text: &str| ArrayError::ConstraintViolated(text.to_string());
    for (name, value) in [("q", &q), ("s", &s), ("s*", &s_star), ("r1", &r1), ("r2", &r2)] {
        if value.is_zero() {
            return Err(clause(&format!("{name} must be nonzero")));
        }
    }
    let ctx = q.ctx();
    let one = F::one(&ctx);
    if r1.clone() * r2.clone()
        != s.clone() * s_star.clone() * pow_i64(&q, d as i64 + 1)
    {
        return Err(clause("r1 r2 = s s* q^(d+1)"));
    }
    let mut q_pow = one.clone();
    for i in 1..=d {
        q_pow = q_pow * q.clone();
        if q_pow == one {
            return Err(clause(&format!("q^{i} = 1")));
        }
        if r1.clone() * q_pow.clone() == one {
            return Err(clause(&format!("r1 q^{i} = 1")));
        }
        if r2.clone() * q_pow.clone() == one {
            return Err(clause(&format!("r2 q^{i} = 1")));
        }
        if s_star.clone() * q_pow.clone() == r1 {
            return Err(clause(&format!("s* q^{i} / r1 = 1")));
        }
        if s_star.clone() * q_pow.clone() == r2 {
            return Err(clause(&format!("s* q^{i} / r2 = 1")));
        }
    }
    let mut q_pow = q.clone();
    for i in 2..=(2 * d) {
        q_pow = q_pow * q.clone();
        if s.clone() * q_pow.clone() == one {
            return Err(clause(&format!("s q^{i} = 1")));
        }
        if s_star.clone() * q_pow.clone() == one {
            return Err(clause(&format!("s* q^{i} = 1")));
        }
    }

    let di = d as i64;
    let theta: Vec<F> = (0..=di)
        .map(|i| pow_i64(&q, -i) + s.clone() * pow_i64(&q, i + 1))
        .collect();
    let theta_star: Vec<F> = (0..=di)
        .map(|i| pow_i64(&q, -i) + s_star.clone() * pow_i64(&q, i + 1))
        .collect();
    let common = |i: i64| -> F {
        pow_i64(&q, 1 - 2 * i)
            * (one.clone() - pow_i64(&q, i))
            * (one.clone() - pow_i64(&q, i - di - 1))
    };
    let varphi: Vec<F> = (1..=di)
        .map(|i| {
            common(i)
                * (one.clone() - r1.clone() * pow_i64(&q, i))
                * (one.clone() - r2.clone() * pow_i64(&q, i))
        })
        .collect();
    let phi: Vec<F> = (1..=di)
        .map(|i| {
            common(i)
                * (r1.clone() - s_star.clone() * pow_i64(&q, i))
                * (r2.clone() - s_star.clone() * pow_i64(&q, i))
                / s_star.clone()
        })
        .collect();
    let array =
        ParameterArray::new(theta, theta_star, varphi, phi).expect("lengths match by construction");
    if !array.validate().valid() {
        return Err(clause("resulting sequence fails the classification conditions"));
    }
    Ok(array)
}
