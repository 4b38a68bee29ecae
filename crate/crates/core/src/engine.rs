//! Modified Brouwer-Zimmermann enumeration.
//!
//! Generation `g` visits every sum of `g` rows taken from `g` distinct
//! packages, one member each, on every prepared matrix. The upper bound `U`
//! drops whenever an admissible candidate is lighter; the lower bound `L` is
//! raised only at generation barriers. The run stops once `L >= U`, or when
//! some matrix has been enumerated through all of its packages.
//!
//! Partial sums are kept on a stack, one level per chosen package, so each
//! candidate costs a single row XOR. A generation is split into tasks by its
//! leading package indices and run on a rayon pool; workers share `U` through
//! an atomic and publish improvements under a mutex.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{words_for, BitMatrix, BitVector, SymplecticLayout};
use crate::prep::{PackagedGamma, WeightMode};

/// Live bounds of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsState {
    pub lower: usize,
    pub upper: usize,
    /// Lightest admissible codeword found, in the prepared matrices' columns.
    pub best: Option<BitVector>,
    /// Last fully enumerated generation.
    pub generation: usize,
    pub candidates_enumerated: u64,
}

impl BoundsState {
    /// Fresh state with `U` at `sentinel` and `L = 0`.
    #[must_use]
    pub fn new(sentinel: usize) -> Self {
        Self {
            lower: 0,
            upper: sentinel,
            best: None,
            generation: 0,
            candidates_enumerated: 0,
        }
    }
}

/// One `(g, L, U)` sample taken at a generation barrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub g: usize,
    pub lower: usize,
    pub upper: usize,
}

/// Rejects candidates that lie in the stabilizer code `C`.
///
/// Candidates are combinations of normalizer rows, so they already lie in the
/// symplectic dual of `C`; such a vector is in `C` exactly when it has zero
/// symplectic product with every normalizer row.
#[derive(Clone, Debug)]
pub struct AdmissibilityFilter {
    rows: Vec<SymplecticLayout>,
    n: usize,
    k: usize,
    enabled: bool,
}

impl AdmissibilityFilter {
    /// Filter against the normalizer matrix `normalizer`. It is inactive when
    /// `enabled` is false or `k = rows - n` is zero.
    pub fn new(normalizer: &BitMatrix, enabled: bool) -> Result<Self> {
        if !normalizer.n_cols().is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!(
                "odd column count {}",
                normalizer.n_cols()
            )));
        }
        let n = normalizer.n_cols() / 2;
        let rows = normalizer
            .rows()
            .iter()
            .map(SymplecticLayout::from_vector)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            k: normalizer.n_rows().saturating_sub(n),
            n,
            rows,
            enabled,
        })
    }

    /// A filter that admits every nonzero codeword.
    #[must_use]
    pub fn disabled() -> Self {
        Self {
            rows: Vec::new(),
            n: 0,
            k: 0,
            enabled: false,
        }
    }

    #[must_use]
    pub fn is_active(&self) -> bool {
        self.enabled && self.k > 0
    }

    #[must_use]
    pub fn k(&self) -> usize {
        self.k
    }

    /// True iff `c` is outside `C`, or the filter is inactive. Vectors longer
    /// than `2n` are judged by their first `2n` coordinates.
    #[must_use]
    pub fn admissible(&self, c: &BitVector) -> bool {
        if !self.is_active() {
            return true;
        }
        let head = if c.len() == 2 * self.n {
            c.clone()
        } else {
            c.slice(0, 2 * self.n)
        };
        let head = SymplecticLayout::from_vector(&head).expect("even length");
        self.admissible_layout(&head)
    }

    #[inline]
    fn admissible_layout(&self, c: &SymplecticLayout) -> bool {
        !self.is_active() || self.rows.iter().any(|r| c.inner_product(r))
    }
}

/// Filter rows with halves swapped, in an engine row layout, so that the
/// symplectic product with a candidate is the parity of a word-wise AND.
struct EncodedFilter {
    rows: Vec<u64>,
    words: usize,
    active: bool,
}

impl EncodedFilter {
    fn new(filter: &AdmissibilityFilter, layout: &RowLayout) -> Self {
        let words = layout.words();
        let mut rows = Vec::new();
        if filter.is_active() {
            for r in &filter.rows {
                let swapped = r.b_half().concat(&r.a_half());
                let v = match *layout {
                    RowLayout::Plain { cols } => swapped.concat(&BitVector::zeros(cols - 2 * filter.n)),
                    RowLayout::Symplectic { .. } => swapped,
                };
                rows.extend(layout.encode(&v));
            }
        }
        Self {
            rows,
            words,
            active: filter.is_active(),
        }
    }

    #[inline]
    fn admissible(&self, c: &[u64]) -> bool {
        !self.active
            || self.rows.chunks_exact(self.words).any(|r| {
                r.iter().zip(c).fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones()) & 1 == 1
            })
    }
}

/// Word layout of engine rows.
#[derive(Clone, Copy, Debug)]
enum RowLayout {
    /// `a` words then `b` words, each half padded to whole words.
    Symplectic { n: usize, half_words: usize },
    Plain { cols: usize },
}

impl RowLayout {
    fn for_gamma(gamma: &PackagedGamma) -> Self {
        match gamma.mode() {
            WeightMode::Symplectic => {
                let n = gamma.half_len();
                RowLayout::Symplectic {
                    n,
                    half_words: words_for(n),
                }
            }
            WeightMode::Hamming => RowLayout::Plain {
                cols: gamma.matrix().n_cols(),
            },
        }
    }

    fn words(&self) -> usize {
        match *self {
            RowLayout::Symplectic { half_words, .. } => 2 * half_words,
            RowLayout::Plain { cols } => words_for(cols),
        }
    }

    fn encode(&self, v: &BitVector) -> Vec<u64> {
        match *self {
            RowLayout::Symplectic { n, .. } => {
                let mut w = v.slice(0, n).words().to_vec();
                w.extend_from_slice(v.slice(n, 2 * n).words());
                w
            }
            RowLayout::Plain { .. } => v.words().to_vec(),
        }
    }

    fn decode(&self, words: &[u64]) -> BitVector {
        match *self {
            RowLayout::Symplectic { n, half_words } => {
                let a = BitVector::from_words(n, words[..half_words].to_vec());
                let b = BitVector::from_words(n, words[half_words..].to_vec());
                a.concat(&b)
            }
            RowLayout::Plain { cols } => BitVector::from_words(cols, words.to_vec()),
        }
    }

    /// Weight of `x ^ y` without materializing it.
    #[inline(always)]
    fn weight_of_sum(&self, x: &[u64], y: &[u64]) -> usize {
        match *self {
            RowLayout::Symplectic { half_words, .. } => {
                let (xa, xb) = x.split_at(half_words);
                let (ya, yb) = y.split_at(half_words);
                let mut w = 0u32;
                for i in 0..half_words {
                    w += ((xa[i] ^ ya[i]) | (xb[i] ^ yb[i])).count_ones();
                }
                w as usize
            }
            RowLayout::Plain { .. } => {
                let mut w = 0u32;
                for (a, b) in x.iter().zip(y) {
                    w += (a ^ b).count_ones();
                }
                w as usize
            }
        }
    }
}

/// Package rows of one prepared matrix, flattened in enumeration order.
struct EncodedGamma {
    layout: RowLayout,
    words: usize,
    /// Member rows of all packages, package by package.
    rows: Vec<u64>,
    /// `(first member index, member count)` per package.
    packages: Vec<(usize, usize)>,
}

impl EncodedGamma {
    fn new(gamma: &PackagedGamma) -> Self {
        let layout = RowLayout::for_gamma(gamma);
        let words = layout.words();
        let mut rows = Vec::new();
        let mut packages = Vec::with_capacity(gamma.n_p());
        let mut next = 0;
        for p in gamma.packages() {
            packages.push((next, p.rows.len()));
            for &r in &p.rows {
                rows.extend(layout.encode(gamma.matrix().row(r)));
                next += 1;
            }
        }
        Self {
            layout,
            words,
            rows,
            packages,
        }
    }

    #[inline(always)]
    fn member(&self, idx: usize) -> &[u64] {
        &self.rows[idx * self.words..(idx + 1) * self.words]
    }

    fn n_p(&self) -> usize {
        self.packages.len()
    }
}

/// Depth-first walk over one generation, restricted to a fixed prefix of
/// package indices.
struct Walker<'a> {
    gamma: &'a EncodedGamma,
    g: usize,
    prefix: &'a [usize],
    /// Partial sums, level `d` at `[d * words, (d + 1) * words)`.
    stack: Vec<u64>,
    visited: u64,
}

impl<'a> Walker<'a> {
    fn new(gamma: &'a EncodedGamma, g: usize, prefix: &'a [usize]) -> Self {
        Self {
            gamma,
            g,
            prefix,
            stack: vec![0; (g + 1) * gamma.words],
            visited: 0,
        }
    }

    /// Calls `leaf(prev, member, weight)` for every candidate `prev ^ member`.
    fn run<F>(&mut self, leaf: &mut F)
    where
        F: FnMut(&[u64], &[u64], usize),
    {
        self.walk(0, 0, leaf);
    }

    fn walk<F>(&mut self, depth: usize, start: usize, leaf: &mut F)
    where
        F: FnMut(&[u64], &[u64], usize),
    {
        let gamma = self.gamma;
        let w = gamma.words;
        let remaining = self.g - depth;
        let (lo, hi) = match self.prefix.get(depth) {
            Some(&p) => (p, p),
            None => (start, gamma.n_p() - remaining),
        };
        if remaining == 1 {
            let prev = &self.stack[depth * w..(depth + 1) * w];
            for p in lo..=hi {
                let (first, count) = gamma.packages[p];
                for m in first..first + count {
                    let member = gamma.member(m);
                    let weight = gamma.layout.weight_of_sum(prev, member);
                    self.visited += 1;
                    leaf(prev, member, weight);
                }
            }
            return;
        }
        for p in lo..=hi {
            let (first, count) = gamma.packages[p];
            for m in first..first + count {
                let (below, above) = self.stack.split_at_mut((depth + 1) * w);
                let prev = &below[depth * w..];
                let next = &mut above[..w];
                for ((n, a), b) in next.iter_mut().zip(prev).zip(gamma.member(m)) {
                    *n = a ^ b;
                }
                self.walk(depth + 1, p + 1, leaf);
            }
        }
    }
}

/// Visits every candidate of generation `g` on `gamma`, in enumeration order.
///
/// Order: package-index subsets lexicographically, members of a package in
/// their stored order. Candidates are in the matrix's own columns.
pub fn visit_generation<F: FnMut(&BitVector)>(gamma: &PackagedGamma, g: usize, mut visit: F) -> Result<u64> {
    check_generation(gamma, g)?;
    let enc = EncodedGamma::new(gamma);
    let mut walker = Walker::new(&enc, g, &[]);
    let mut buf = vec![0u64; enc.words];
    walker.run(&mut |prev: &[u64], member: &[u64], _| {
        for ((o, a), b) in buf.iter_mut().zip(prev).zip(member) {
            *o = a ^ b;
        }
        visit(&enc.layout.decode(&buf));
    });
    Ok(walker.visited)
}

fn check_generation(gamma: &PackagedGamma, g: usize) -> Result<()> {
    if g == 0 || g > gamma.n_p() {
        return Err(Error::InvalidArgument(format!(
            "generation {g} outside 1..={}",
            gamma.n_p()
        )));
    }
    Ok(())
}

/// Shared incumbent: `U` as an atomic plus the matching codeword.
struct Incumbent {
    upper: AtomicUsize,
    best: Mutex<Option<Vec<u64>>>,
    visited: AtomicU64,
}

impl Incumbent {
    fn new(upper: usize, best: Option<Vec<u64>>) -> Self {
        Self {
            upper: AtomicUsize::new(upper),
            best: Mutex::new(best),
            visited: AtomicU64::new(0),
        }
    }

    fn offer(&self, weight: usize, words: Vec<u64>) {
        let mut best = self.best.lock().expect("incumbent lock poisoned");
        if weight < self.upper.load(Ordering::Acquire) {
            self.upper.store(weight, Ordering::Release);
            *best = Some(words);
        }
    }
}

/// Runs one task: a prefix of package indices, completed in every way.
fn run_task(enc: &EncodedGamma, g: usize, prefix: &[usize], filter: &EncodedFilter, inc: &Incumbent) {
    let mut walker = Walker::new(enc, g, prefix);
    let mut upper = inc.upper.load(Ordering::Relaxed);
    walker.run(&mut |prev: &[u64], member: &[u64], weight| {
        if weight >= upper {
            return;
        }
        // Refresh the stale copy before paying for the filter.
        upper = inc.upper.load(Ordering::Relaxed);
        if weight >= upper {
            return;
        }
        let words: Vec<u64> = prev.iter().zip(member).map(|(a, b)| a ^ b).collect();
        if filter.admissible(&words) {
            inc.offer(weight, words);
            upper = inc.upper.load(Ordering::Relaxed);
        }
    });
    inc.visited.fetch_add(walker.visited, Ordering::Relaxed);
}

/// Leading package-index tuples of length `depth` for generation `g`.
fn task_prefixes(n_p: usize, g: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if depth == 0 {
        out.push(Vec::new());
        return out;
    }
    // Tuple element j (0-based) is at most n_p - g + j.
    let mut cur = Vec::with_capacity(depth);
    fn rec(cur: &mut Vec<usize>, start: usize, n_p: usize, g: usize, depth: usize, out: &mut Vec<Vec<usize>>) {
        let j = cur.len();
        if j == depth {
            out.push(cur.clone());
            return;
        }
        for p in start..=n_p - g + j {
            cur.push(p);
            rec(cur, p + 1, n_p, g, depth, out);
            cur.pop();
        }
    }
    rec(&mut cur, 0, n_p, g, depth, &mut out);
    out
}

fn enumerate_encoded(
    enc: &EncodedGamma,
    g: usize,
    filter: &EncodedFilter,
    inc: &Incumbent,
    pool: Option<&rayon::ThreadPool>,
) {
    match pool {
        None => run_task(enc, g, &[], filter, inc),
        Some(pool) => {
            let depth = g.min(2);
            let tasks = task_prefixes(enc.n_p(), g, depth);
            pool.install(|| {
                tasks
                    .par_iter()
                    .for_each(|prefix| run_task(enc, g, prefix, filter, inc));
            });
        }
    }
}

/// Enumerates generation `g` of one matrix on the calling thread.
///
/// Lowers `state.upper` (and sets `state.best`) for every admissible
/// candidate lighter than the current bound, and counts the candidates.
/// `state.lower` and `state.generation` are left to the caller.
pub fn enumerate_generation(
    gamma: &PackagedGamma,
    g: usize,
    state: &mut BoundsState,
    filter: &AdmissibilityFilter,
) -> Result<()> {
    check_generation(gamma, g)?;
    let enc = EncodedGamma::new(gamma);
    let inc = Incumbent::new(state.upper, state.best.as_ref().map(|b| enc.layout.encode(b)));
    let filter = EncodedFilter::new(filter, &enc.layout);
    enumerate_encoded(&enc, g, &filter, &inc, None);
    state.upper = inc.upper.into_inner();
    state.best = inc
        .best
        .into_inner()
        .expect("incumbent lock poisoned")
        .map(|w| enc.layout.decode(&w));
    state.candidates_enumerated += inc.visited.into_inner();
    Ok(())
}

/// Lower bound on every codeword not yet visited once generation `g` is
/// complete on every matrix in `gammas`.
///
/// - one symplectic matrix: `g + 1`;
/// - two symplectic matrices, the second split on principal columns:
///   `g + 1 + max(0, g + 1 + n_pp - n_p)` with the counts of the second;
/// - Hamming mode: `sum_i max(0, g + 1 - rank_deficit_i)`.
#[must_use]
pub fn lower_bound(g: usize, gammas: &[PackagedGamma]) -> usize {
    let Some(first) = gammas.first() else {
        return 0;
    };
    match first.mode() {
        WeightMode::Symplectic => {
            let extra: usize = gammas[1..]
                .iter()
                .map(|d| (g + 1 + d.n_pp()).saturating_sub(d.n_p()))
                .sum();
            g + 1 + extra
        }
        WeightMode::Hamming => gammas
            .iter()
            .map(|gm| (g + 1).saturating_sub(gm.rank_deficit()))
            .sum(),
    }
}

/// Engine settings.
#[derive(Clone, Copy, Debug)]
pub struct EngineConfig {
    pub workers: usize,
    /// All codeword weights are even, so `L` may be rounded up to even.
    pub even_weights: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            workers: 1,
            even_weights: false,
        }
    }
}

/// Final state of a run plus the bound trace.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub state: BoundsState,
    pub trace: Vec<TraceEntry>,
    /// True when the run ended by exhausting some matrix rather than by `L >= U`.
    pub exhausted: bool,
}

/// Runs generations until `L >= U` or some matrix is fully enumerated.
///
/// The returned `state.upper` is the minimum weight of an admissible codeword
/// of the code generated by the matrices. The result does not depend on
/// `config.workers`.
pub fn run_bz(gammas: &[PackagedGamma], filter: &AdmissibilityFilter, config: &EngineConfig) -> Result<RunOutcome> {
    let first = gammas
        .first()
        .ok_or_else(|| Error::InvalidArgument("no generator matrix given".into()))?;
    let mode = first.mode();
    let cols = first.matrix().n_cols();
    if gammas.iter().any(|g| g.mode() != mode || g.matrix().n_cols() != cols) {
        return Err(Error::InvalidArgument(
            "generator matrices differ in mode or length".into(),
        ));
    }
    if mode == WeightMode::Symplectic && gammas.len() > 2 {
        return Err(Error::InvalidArgument(
            "symplectic mode takes one or two generator matrices".into(),
        ));
    }
    if filter.is_active() && cols < 2 * filter.n {
        return Err(Error::InvalidArgument(
            "codewords are shorter than the filter's normalizer rows".into(),
        ));
    }
    if config.workers == 0 {
        return Err(Error::InvalidArgument("workers must be positive".into()));
    }

    let sentinel = match mode {
        WeightMode::Symplectic => cols / 2 + 1,
        WeightMode::Hamming => cols + 1,
    };
    let encoded: Vec<EncodedGamma> = gammas.iter().map(EncodedGamma::new).collect();
    let filters: Vec<EncodedFilter> = encoded
        .iter()
        .map(|e| EncodedFilter::new(filter, &e.layout))
        .collect();
    let pool = if config.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.workers)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };
    let bound = |g: usize| {
        let l = lower_bound(g, gammas);
        if config.even_weights {
            l + (l & 1)
        } else {
            l
        }
    };

    let inc = Incumbent::new(sentinel, None);
    let horizon = gammas.iter().map(PackagedGamma::n_p).min().unwrap_or(0);
    let mut g = 0;
    let mut lower = bound(0);
    let mut trace = vec![TraceEntry {
        g,
        lower,
        upper: sentinel,
    }];
    while lower < inc.upper.load(Ordering::Acquire) && g < horizon {
        g += 1;
        for (enc, f) in encoded.iter().zip(&filters) {
            enumerate_encoded(enc, g, f, &inc, pool.as_ref());
        }
        lower = bound(g);
        trace.push(TraceEntry {
            g,
            lower,
            upper: inc.upper.load(Ordering::Acquire),
        });
    }

    let upper = inc.upper.into_inner();
    let exhausted = lower < upper;
    if upper == sentinel {
        return Err(Error::NoAdmissibleCodeword);
    }
    let layout = encoded[0].layout;
    let best = inc
        .best
        .into_inner()
        .expect("incumbent lock poisoned")
        .map(|w| layout.decode(&w));
    Ok(RunOutcome {
        state: BoundsState {
            lower,
            upper,
            best,
            generation: g,
            candidates_enumerated: inc.visited.into_inner(),
        },
        trace,
        exhausted,
    })
}
