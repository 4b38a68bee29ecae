//! Minimum distance of a stabilizer code from its normalizer matrix.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{run_bz, AdmissibilityFilter, EngineConfig, RunOutcome, TraceEntry};
use crate::error::{Error, Result, Violation};
use crate::gf2::{symplectic_dual_basis, words_for, BitMatrix, BitVector, Echelon, SymplecticLayout};
use crate::gf4::{to_gf4, F4Matrix};
use crate::prep::{diagonalize_f2, diagonalize_f4, information_sets, isometry_transform, second_gamma};

/// Largest `n + k` the brute-force oracle accepts.
pub const BRUTE_FORCE_LIMIT: usize = 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    #[serde(rename = "saved_1_gamma")]
    Saved1Gamma,
    #[serde(rename = "saved_2_gamma")]
    Saved2Gamma,
    SavedIsometry,
    BruteForce,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Saved1Gamma,
        Algorithm::Saved2Gamma,
        Algorithm::SavedIsometry,
        Algorithm::BruteForce,
    ];

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Saved1Gamma => "saved_1_gamma",
            Algorithm::Saved2Gamma => "saved_2_gamma",
            Algorithm::SavedIsometry => "saved_isometry",
            Algorithm::BruteForce => "brute_force",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1gamma" | "saved_1_gamma" => Ok(Algorithm::Saved1Gamma),
            "2gamma" | "saved_2_gamma" => Ok(Algorithm::Saved2Gamma),
            "isometry" | "saved_isometry" => Ok(Algorithm::SavedIsometry),
            "brute" | "brute_force" => Ok(Algorithm::BruteForce),
            other => Err(Error::InvalidArgument(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// A normalizer matrix `A` of shape `(n + k) x 2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerInstance {
    matrix: BitMatrix,
    n: usize,
    k: usize,
}

impl StabilizerInstance {
    /// Wraps `matrix` without validating it; `k` is `rows - n`, or 0 when the
    /// matrix has fewer than `n` rows.
    pub fn new(matrix: BitMatrix) -> Result<Self> {
        if !matrix.n_cols().is_multiple_of(2) {
            return Err(Error::Validation(Violation::OddColumns {
                cols: matrix.n_cols(),
            }));
        }
        let n = matrix.n_cols() / 2;
        let k = matrix.n_rows().saturating_sub(n);
        Ok(Self { matrix, n, k })
    }

    #[must_use]
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn k(&self) -> usize {
        self.k
    }
}

/// Checks the shape, rank, and `C ⊆ C^⊥s` where `C` is the symplectic dual of
/// the row space.
pub fn validate_normalizer(inst: &StabilizerInstance) -> std::result::Result<(), Violation> {
    let a = inst.matrix();
    let (rows, n) = (a.n_rows(), inst.n());
    if rows < n || rows > 2 * n || n == 0 {
        return Err(Violation::Shape { rows, n });
    }
    let ech = Echelon::new(a);
    if ech.rank() < rows {
        return Err(Violation::RankDeficient {
            rank: ech.rank(),
            rows,
        });
    }
    let dual = symplectic_dual_basis(a).map_err(|_| Violation::RankDeficient {
        rank: ech.rank(),
        rows,
    })?;
    match dual.rows().iter().find(|v| !ech.contains(v)) {
        Some(v) => Err(Violation::NotSelfOrthogonal { vector: v.clone() }),
        None => Ok(()),
    }
}

/// Run settings shared by all algorithms.
#[derive(Clone, Copy, Debug)]
pub struct ComputeOptions {
    pub workers: usize,
    pub validate: bool,
    /// Restrict to codewords outside `C` when `k > 0`.
    pub dual_filter: bool,
    /// Record `(g, L, U)` at every generation barrier.
    pub trace: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            validate: true,
            dual_filter: true,
            trace: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistanceReport {
    pub distance: usize,
    pub algorithm: Algorithm,
    pub generations: usize,
    pub candidates_enumerated: u64,
    pub elapsed_seconds: f64,
    pub workers: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds_trace: Option<Vec<TraceEntry>>,
    /// A codeword of weight `distance`, as `a|b` bits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codeword: Option<String>,
    /// The search ran out of generations instead of meeting `L >= U`.
    pub exhausted: bool,
    pub n: usize,
    pub k: usize,
}

fn prepare(inst: &StabilizerInstance, opts: &ComputeOptions) -> Result<AdmissibilityFilter> {
    if opts.workers == 0 {
        return Err(Error::InvalidArgument("workers must be positive".into()));
    }
    if opts.validate {
        validate_normalizer(inst).map_err(Error::Validation)?;
    }
    AdmissibilityFilter::new(inst.matrix(), opts.dual_filter)
}

fn format_codeword(v: &BitVector, n: usize) -> String {
    format!("{}|{}", v.slice(0, n), v.slice(n, 2 * n))
}

fn report(
    inst: &StabilizerInstance,
    algorithm: Algorithm,
    opts: &ComputeOptions,
    out: RunOutcome,
    started: Instant,
) -> DistanceReport {
    DistanceReport {
        distance: out.state.upper,
        algorithm,
        generations: out.state.generation,
        candidates_enumerated: out.state.candidates_enumerated,
        elapsed_seconds: started.elapsed().as_secs_f64(),
        workers: opts.workers,
        bounds_trace: opts.trace.then_some(out.trace),
        codeword: out.state.best.map(|b| format_codeword(&b, inst.n())),
        exhausted: out.exhausted,
        n: inst.n(),
        k: inst.k(),
    }
}

/// One prepared matrix: the paired-column diagonal form with appended sums.
pub fn saved_1_gamma(inst: &StabilizerInstance, opts: &ComputeOptions) -> Result<DistanceReport> {
    let started = Instant::now();
    let filter = prepare(inst, opts)?;
    let gamma = diagonalize_f2(inst.matrix())?;
    let cfg = EngineConfig {
        workers: opts.workers,
        even_weights: false,
    };
    let out = run_bz(std::slice::from_ref(&gamma), &filter, &cfg)?;
    Ok(report(inst, Algorithm::Saved1Gamma, opts, out, started))
}

/// Two prepared matrices over F4, the second pivoted on principal columns
/// first. Without principal columns the second matrix would repeat the first
/// and is left out.
pub fn saved_2_gamma(inst: &StabilizerInstance, opts: &ComputeOptions) -> Result<DistanceReport> {
    let started = Instant::now();
    let filter = prepare(inst, opts)?;
    let a4: F4Matrix = to_gf4(inst.matrix())?;
    let (b2, pc) = diagonalize_f4(&a4)?;
    let mut gammas = vec![b2];
    if !pc.is_empty() {
        let d2 = second_gamma(&gammas[0], &pc)?;
        gammas.push(d2);
    }
    let cfg = EngineConfig {
        workers: opts.workers,
        even_weights: false,
    };
    let out = run_bz(&gammas, &filter, &cfg)?;
    Ok(report(inst, Algorithm::Saved2Gamma, opts, out, started))
}

/// Hamming-weight search on the image under `(a, b) -> (a, b, a + b)`,
/// halved at the end.
pub fn saved_isometry(inst: &StabilizerInstance, opts: &ComputeOptions) -> Result<DistanceReport> {
    let started = Instant::now();
    let filter = prepare(inst, opts)?;
    let image = isometry_transform(inst.matrix())?;
    let gammas = information_sets(&image)?;
    if gammas.is_empty() {
        return Err(Error::NoAdmissibleCodeword);
    }
    let cfg = EngineConfig {
        workers: opts.workers,
        even_weights: true,
    };
    let mut out = run_bz(&gammas, &filter, &cfg)?;
    if out.state.upper % 2 != 0 {
        return Err(Error::Internal(format!(
            "odd Hamming weight {} on the isometry image",
            out.state.upper
        )));
    }
    let n = inst.n();
    out.state.upper /= 2;
    out.state.lower /= 2;
    out.state.best = out.state.best.map(|b| b.slice(0, 2 * n));
    for t in &mut out.trace {
        t.lower /= 2;
        t.upper = (t.upper / 2).min(n + 1);
    }
    Ok(report(inst, Algorithm::SavedIsometry, opts, out, started))
}

/// Exhaustive search over all nonzero row combinations in Gray-code order.
pub fn brute_force_distance(inst: &StabilizerInstance, opts: &ComputeOptions) -> Result<DistanceReport> {
    let started = Instant::now();
    let filter = prepare(inst, opts)?;
    let a = inst.matrix();
    let rows = a.n_rows();
    if rows > BRUTE_FORCE_LIMIT {
        return Err(Error::BudgetExceeded {
            rows,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let n = inst.n();
    let layouts = a
        .rows()
        .iter()
        .map(SymplecticLayout::from_vector)
        .collect::<Result<Vec<_>>>()?;
    let hw = words_for(n);
    let mut acc_a = vec![0u64; hw];
    let mut acc_b = vec![0u64; hw];
    let mut best: Option<(usize, BitVector)> = None;
    let mut best_w = usize::MAX;
    let total: u64 = (1u64 << rows) - 1;
    for i in 1..=total {
        // Gray code i ^ (i >> 1) differs from its predecessor in bit tz(i).
        let r = &layouts[i.trailing_zeros() as usize];
        let mut w = 0usize;
        for j in 0..hw {
            acc_a[j] ^= r.a_words()[j];
            acc_b[j] ^= r.b_words()[j];
            w += (acc_a[j] | acc_b[j]).count_ones() as usize;
        }
        if w == 0 || w >= best_w {
            continue;
        }
        let c = BitVector::from_words(n, acc_a.clone()).concat(&BitVector::from_words(n, acc_b.clone()));
        if filter.admissible(&c) {
            best_w = w;
            best = Some((w, c));
        }
    }
    let (distance, codeword) = best.ok_or(Error::NoAdmissibleCodeword)?;
    Ok(DistanceReport {
        distance,
        algorithm: Algorithm::BruteForce,
        generations: rows,
        candidates_enumerated: total,
        elapsed_seconds: started.elapsed().as_secs_f64(),
        workers: 1,
        bounds_trace: None,
        codeword: Some(format_codeword(&codeword, n)),
        exhausted: true,
        n,
        k: inst.k(),
    })
}

/// Algorithm used when none is requested: the isometry search, or two
/// prepared matrices when `k <= 2`.
#[must_use]
pub fn auto_algorithm(inst: &StabilizerInstance) -> Algorithm {
    if inst.k() <= 2 {
        Algorithm::Saved2Gamma
    } else {
        Algorithm::SavedIsometry
    }
}

pub fn compute(
    inst: &StabilizerInstance,
    algorithm: Option<Algorithm>,
    opts: &ComputeOptions,
) -> Result<DistanceReport> {
    match algorithm.unwrap_or_else(|| auto_algorithm(inst)) {
        Algorithm::Saved1Gamma => saved_1_gamma(inst, opts),
        Algorithm::Saved2Gamma => saved_2_gamma(inst, opts),
        Algorithm::SavedIsometry => saved_isometry(inst, opts),
        Algorithm::BruteForce => brute_force_distance(inst, opts),
    }
}

/// Random combination of the rows of `basis`.
fn random_combination(rng: &mut ChaCha8Rng, basis: &BitMatrix) -> BitVector {
    let mut v = BitVector::zeros(basis.n_cols());
    for r in basis.rows() {
        if rng.gen::<bool>() {
            v.xor_in_place(r);
        }
    }
    v
}

/// A random valid `[[n, k]]` instance, reproducible from `seed`.
///
/// Grows a self-orthogonal `C` of dimension `n - k` one vector at a time,
/// drawing each from the symplectic dual of the vectors so far, then returns
/// a random basis of `C^⊥s`.
pub fn random_stabilizer(n: usize, k: usize, seed: u64) -> Result<StabilizerInstance> {
    if n == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= n and k <= n, got n = {n}, k = {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = BitMatrix::new(2 * n);
    while c.n_rows() < n - k {
        let dual = symplectic_dual_basis(&c)?;
        let v = random_combination(&mut rng, &dual);
        if !v.is_zero() && !Echelon::new(&c).contains(&v) {
            c.push_row(v)?;
        }
    }
    let dual = symplectic_dual_basis(&c)?;
    let mut a = BitMatrix::new(2 * n);
    let mut ech = Echelon::new(&a);
    while a.n_rows() < n + k {
        let v = random_combination(&mut rng, &dual);
        if !v.is_zero() && !ech.contains(&v) {
            a.push_row(v)?;
            ech = Echelon::new(&a);
        }
    }
    StabilizerInstance::new(a)
}
