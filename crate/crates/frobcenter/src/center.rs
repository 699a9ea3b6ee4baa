//! Main driver: pick a reference prime q, build the field
//! M = Q[T]/(reciprocal of g_q), analyze the normic divisors of every
//! other surviving prime over M, and minimize (d_p, r_p) to bound the
//! center of the geometric endomorphism algebra.

use crate::error::{Error, Result};
use crate::frobdata::{filter_S_prime, FrobeniusDatum, PrimeStatus};
use crate::normic::{normic_divisors, DEFAULT_SUBSET_CAP};
use crate::numberfield::{is_isomorphic, NumberField};
use crate::polyq::{IntPoly, RatPoly};

#[derive(Clone, Debug)]
pub struct CenterOptions {
    pub q_override: Option<u64>,
    pub iterate_q: bool,
    pub subset_cap: usize,
    /// Maximum worker threads for the per-prime analyses; `None` reads
    /// FROBCENTER_THREADS, defaulting to the number of primes.
    pub threads: Option<usize>,
}

impl Default for CenterOptions {
    fn default() -> Self {
        CenterOptions {
            q_override: None,
            iterate_q: false,
            subset_cap: DEFAULT_SUBSET_CAP,
            threads: None,
        }
    }
}

/// Per-prime result of the normic-divisor analysis over M.
#[derive(Clone, Debug)]
pub struct PrimeAnalysis {
    pub q_of_prime: u64,
    /// Coefficient fields of the normic divisors, deduplicated up to
    /// isomorphism, sorted by (degree, defining polynomial).
    pub normic_fields: Vec<NumberField>,
    pub d_p: usize,
    pub r_p: usize,
    pub dropped: bool,
}

#[derive(Clone, Debug)]
pub struct CenterReport {
    pub found: bool,
    pub q_used: Option<u64>,
    pub d_c: Option<usize>,
    pub candidate_fields: Vec<NumberField>,
    /// Admissibility verdict for every input datum, in input order.
    pub filter_results: Vec<(u64, PrimeStatus)>,
    /// Normic analyses for the surviving primes, ordered by prime.
    pub diagnostics: Vec<PrimeAnalysis>,
    pub warnings: Vec<String>,
}

fn cmp_fields(a: &NumberField, b: &NumberField) -> std::cmp::Ordering {
    let (da, db) = (a.degree(), b.degree());
    da.cmp(&db).then_with(|| {
        let (pa, pb) = (a.defining_poly(), b.defining_poly());
        for i in 0..=da {
            let o = pa.coeff(i).cmp(&pb.coeff(i));
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Analyze one prime: convert g_p (constant term 1) to its monic
/// reciprocal, enumerate normic divisors over M, and summarize the
/// coefficient fields up to isomorphism.
pub fn analyze_prime(
    m: &NumberField,
    q_of_prime: u64,
    g_p: &RatPoly,
    subset_cap: usize,
) -> Result<PrimeAnalysis> {
    let g_tilde = g_p.reciprocal_monic()?;
    let divisors = normic_divisors(&g_tilde, m, subset_cap)?;
    let mut fields: Vec<NumberField> = Vec::new();
    for d in &divisors {
        let mut known = false;
        for f in &fields {
            if is_isomorphic(f, &d.coeff_field)? {
                known = true;
                break;
            }
        }
        if !known {
            fields.push(d.coeff_field.clone());
        }
    }
    fields.sort_by(cmp_fields);
    let dropped = fields.is_empty();
    let d_p = fields.iter().map(|f| f.degree()).max().unwrap_or(0);
    let r_p = fields.iter().filter(|f| f.degree() == d_p).count();
    Ok(PrimeAnalysis { q_of_prime, normic_fields: fields, d_p, r_p, dropped })
}

fn thread_budget(opts: &CenterOptions, jobs: usize) -> usize {
    let env_cap = std::env::var("FROBCENTER_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1);
    opts.threads.or(env_cap).unwrap_or(jobs).clamp(1, jobs.max(1))
}

/// Run the analyses for several primes, optionally in parallel; output
/// order matches input order regardless of scheduling.
fn analyze_many(
    m: &NumberField,
    jobs: &[(u64, RatPoly)],
    subset_cap: usize,
    threads: usize,
) -> Vec<Result<PrimeAnalysis>> {
    if threads <= 1 || jobs.len() <= 1 {
        return jobs
            .iter()
            .map(|(q, g)| analyze_prime(m, *q, g, subset_cap))
            .collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<Result<PrimeAnalysis>>> = (0..jobs.len()).map(|_| None).collect();
    let slot_refs: Vec<std::sync::Mutex<&mut Option<Result<PrimeAnalysis>>>> =
        slots.iter_mut().map(std::sync::Mutex::new).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads.min(jobs.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= jobs.len() {
                    break;
                }
                let (q, g) = &jobs[i];
                let res = analyze_prime(m, *q, g, subset_cap);
                **slot_refs[i].lock().unwrap() = Some(res);
            });
        }
    });
    drop(slot_refs);
    slots.into_iter().map(|s| s.expect("every job ran")).collect()
}

struct SingleQOutcome {
    q: u64,
    found: bool,
    d_c: Option<usize>,
    candidates: Vec<NumberField>,
    diagnostics: Vec<PrimeAnalysis>,
    warnings: Vec<String>,
}

fn run_single_q(
    q: u64,
    g_q: &IntPoly,
    survivors: &[(u64, IntPoly)],
    opts: &CenterOptions,
) -> Result<SingleQOutcome> {
    let mut warnings = Vec::new();
    let g_tilde_q = g_q.reciprocal_monic()?.to_int_exact().ok_or_else(|| {
        Error::InvalidInput("g_q must have constant term 1".into())
    })?;
    let m = NumberField::new(g_tilde_q)?;
    let others: Vec<(u64, RatPoly)> = survivors
        .iter()
        .filter(|(p, _)| *p != q)
        .map(|(p, g)| (*p, g.to_rat()))
        .collect();
    let threads = thread_budget(opts, others.len());
    let mut diagnostics: Vec<PrimeAnalysis> = Vec::new();
    for ((p, _), res) in others.iter().zip(analyze_many(&m, &others, opts.subset_cap, threads)) {
        match res {
            Ok(a) => diagnostics.push(a),
            Err(Error::CombinatorialBlowup { found, cap }) => {
                warnings.push(format!(
                    "prime {}: {} irreducible factors exceed the subset cap {}; prime skipped",
                    p, found, cap
                ));
            }
            Err(e) => return Err(e),
        }
    }
    let alive: Vec<&PrimeAnalysis> = diagnostics.iter().filter(|a| !a.dropped).collect();
    if alive.is_empty() {
        // q is effectively the only usable prime: report its self-analysis
        // as the weaker bound deg M.
        let self_analysis = analyze_prime(&m, q, &g_q.to_rat(), opts.subset_cap)?;
        warnings.push(format!(
            "only the reference prime {} is usable; reporting its self-analysis (bound is the trivial d = {})",
            q, self_analysis.d_p
        ));
        let candidates: Vec<NumberField> = self_analysis
            .normic_fields
            .iter()
            .filter(|f| f.degree() == self_analysis.d_p)
            .cloned()
            .collect();
        let d_c = self_analysis.d_p;
        diagnostics.push(self_analysis);
        diagnostics.sort_by_key(|a| a.q_of_prime);
        return Ok(SingleQOutcome {
            q,
            found: true,
            d_c: Some(d_c),
            candidates,
            diagnostics,
            warnings,
        });
    }
    let best = alive
        .iter()
        .min_by_key(|a| (a.d_p, a.r_p, a.q_of_prime))
        .expect("nonempty");
    let candidates: Vec<NumberField> = best
        .normic_fields
        .iter()
        .filter(|f| f.degree() == best.d_p)
        .cloned()
        .collect();
    let d_c = best.d_p;
    diagnostics.sort_by_key(|a| a.q_of_prime);
    Ok(SingleQOutcome {
        q,
        found: true,
        d_c: Some(d_c),
        candidates,
        diagnostics,
        warnings,
    })
}

/// The full pipeline: filter the data, choose q (or iterate over all
/// choices), analyze every other surviving prime, and minimize (d_p, r_p).
/// All failure modes are encoded in the report.
pub fn compute_center(m: u32, data: &[FrobeniusDatum], opts: &CenterOptions) -> CenterReport {
    let filtered = filter_S_prime(data, m);
    let filter_results: Vec<(u64, PrimeStatus)> =
        filtered.iter().map(|(d, s)| (d.q, s.clone())).collect();
    let mut survivors: Vec<(u64, IntPoly)> = filtered
        .iter()
        .filter_map(|(d, s)| s.g_p.clone().map(|g| (d.q, g)))
        .collect();
    survivors.sort_by_key(|(q, _)| *q);
    survivors.dedup_by_key(|(q, _)| *q);
    let mut report = CenterReport {
        found: false,
        q_used: None,
        d_c: None,
        candidate_fields: vec![],
        filter_results,
        diagnostics: vec![],
        warnings: vec![],
    };
    if survivors.is_empty() {
        report.warnings.push("no prime survives the admissibility filter".into());
        return report;
    }
    let q_choices: Vec<u64> = if opts.iterate_q {
        survivors.iter().map(|(q, _)| *q).collect()
    } else if let Some(q) = opts.q_override {
        if !survivors.iter().any(|(p, _)| *p == q) {
            report
                .warnings
                .push(format!("requested q = {} does not survive the filter", q));
            return report;
        }
        vec![q]
    } else {
        vec![survivors[0].0]
    };
    let mut outcomes = Vec::new();
    for q in &q_choices {
        let g_q = &survivors.iter().find(|(p, _)| p == q).unwrap().1;
        match run_single_q(*q, g_q, &survivors, opts) {
            Ok(o) => outcomes.push(o),
            Err(e) => {
                report.warnings.push(format!("analysis with q = {} failed: {}", q, e));
                return report;
            }
        }
    }
    let primary = &outcomes[0];
    report.q_used = Some(primary.q);
    report.d_c = primary.d_c;
    report.candidate_fields = primary.candidates.clone();
    report.diagnostics = primary.diagnostics.clone();
    report.found = primary.found;
    for o in &outcomes {
        report.warnings.extend(o.warnings.iter().cloned());
    }
    if opts.iterate_q && outcomes.len() > 1 {
        // Intersect the candidate sets across all choices of q by
        // isomorphism-class matching.
        let mut common = primary.candidates.clone();
        for o in &outcomes[1..] {
            common.retain(|f| {
                o.candidates
                    .iter()
                    .any(|g| is_isomorphic(f, g).unwrap_or(false))
            });
        }
        if common.is_empty() {
            report.found = false;
            report.d_c = None;
            report.candidate_fields.clear();
            report
                .warnings
                .push("iterating over q left no common candidate field".into());
        } else {
            report.d_c = Some(common[0].degree());
            report.candidate_fields = common;
        }
    }
    report
}
