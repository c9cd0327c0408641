//! Parallel offline search joining keyspaces to capture targets.
//!
//! Work is dealt out in fixed-size index chunks from an atomic counter,
//! so any number of workers stays busy without a scheduler. Matches are
//! merged by *lowest candidate index*, and a worker only stops claiming
//! chunks once no remaining chunk could lower any target's best match —
//! which makes the reported (target, passphrase, index) tuples
//! independent of worker count and timing, at the price of a little
//! post-match drain work.
//!
//! The expensive step is PBKDF2 (4096 HMAC-SHA1 rounds per candidate
//! per ESSID). Targets are grouped by ESSID so each candidate is
//! stretched once per distinct network, then checked against every
//! target in the group with one cheap HMAC each.
//!
//! Every reported passphrase is re-verified from scratch before results
//! are returned.

use crate::crypto::{
    derive_pmk, handshake_matches, pmkid_matches, validate_passphrase, Essid, HandshakeMaterial,
    MacAddress,
};
use crate::formats::HashTarget;
use crate::keyspace::{Keyspace, KeyspaceError, KeyspaceKind};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("job has no targets")]
    NoTargets,
    #[error("job has no keyspaces")]
    NoKeyspaces,
    #[error("worker_count must be at least 1")]
    ZeroWorkers,
    #[error(transparent)]
    Keyspace(#[from] KeyspaceError),
}

/// When to stop searching a target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopPolicy {
    /// Stop work on a target once its lowest-index match is confirmed;
    /// skip later keyspaces entirely when every target is resolved.
    FirstMatchPerTarget,
    /// Enumerate every keyspace to the end regardless (useful for
    /// timing runs and exhaustiveness audits). Resolved targets keep
    /// their first match; remaining candidates are counted, and hashed
    /// only while some target still needs them.
    Exhaust,
}

/// One thing the engine can crack: a PMKID capture record, or explicit
/// 4-way-handshake material.
#[derive(Debug, Clone)]
pub enum CrackTarget {
    Pmkid(HashTarget),
    Handshake {
        material: HandshakeMaterial,
        essid: Essid,
    },
}

impl CrackTarget {
    pub fn essid(&self) -> &Essid {
        match self {
            CrackTarget::Pmkid(t) => &t.essid,
            CrackTarget::Handshake { essid, .. } => essid,
        }
    }

    /// AP MAC, for vendor attribution.
    pub fn mac_ap(&self) -> MacAddress {
        match self {
            CrackTarget::Pmkid(t) => t.mac_ap,
            CrackTarget::Handshake { material, .. } => material.mac_ap,
        }
    }

    /// 1-based capture line this target came from; 0 if synthesized.
    pub fn source_line(&self) -> usize {
        match self {
            CrackTarget::Pmkid(t) => t.source_line,
            CrackTarget::Handshake { .. } => 0,
        }
    }

    fn matches_pmk(&self, pmk: &crate::crypto::Pmk) -> bool {
        match self {
            CrackTarget::Pmkid(t) => pmkid_matches(pmk, t),
            CrackTarget::Handshake { material, .. } => handshake_matches(pmk, material),
        }
    }

    /// Full from-scratch verification of a candidate.
    pub fn verify(&self, candidate: &str) -> bool {
        match self {
            CrackTarget::Pmkid(t) => crate::crypto::verify_pmkid_candidate(candidate, t),
            CrackTarget::Handshake { material, essid } => {
                crate::crypto::verify_handshake_candidate(candidate, material, essid)
            }
        }
    }
}

impl From<HashTarget> for CrackTarget {
    fn from(target: HashTarget) -> Self {
        CrackTarget::Pmkid(target)
    }
}

pub const DEFAULT_CHUNK_SIZE: u64 = 4096;

#[derive(Debug, Clone)]
pub struct CrackJob {
    pub targets: Vec<CrackTarget>,
    /// Searched in order; order matters for which match wins when a
    /// passphrase occurs in several keyspaces.
    pub keyspaces: Vec<Keyspace>,
    pub worker_count: usize,
    pub stop_policy: StopPolicy,
    /// Candidates per dispatched chunk. Larger chunks cost less
    /// scheduling, smaller chunks give finer progress; the default is a
    /// good balance for PBKDF2-dominated work.
    pub chunk_size: u64,
    /// First candidate index to test in every keyspace (manual resume).
    pub start_offset: u128,
}

impl CrackJob {
    pub fn new(targets: Vec<CrackTarget>, keyspaces: Vec<Keyspace>) -> Self {
        CrackJob {
            targets,
            keyspaces,
            worker_count: 1,
            stop_policy: StopPolicy::FirstMatchPerTarget,
            chunk_size: DEFAULT_CHUNK_SIZE,
            start_offset: 0,
        }
    }

    pub fn with_workers(mut self, worker_count: usize) -> Self {
        self.worker_count = worker_count;
        self
    }

    pub fn with_stop_policy(mut self, policy: StopPolicy) -> Self {
        self.stop_policy = policy;
        self
    }

    pub fn with_chunk_size(mut self, chunk_size: u64) -> Self {
        self.chunk_size = chunk_size.max(1);
        self
    }

    pub fn with_start_offset(mut self, start_offset: u128) -> Self {
        self.start_offset = start_offset;
        self
    }
}

/// Outcome for one target after the whole job.
#[derive(Debug, Clone)]
pub struct CrackResult {
    /// Index into `job.targets`.
    pub target_index: usize,
    pub passphrase: Option<String>,
    /// Which keyspace produced the match.
    pub keyspace_kind: Option<KeyspaceKind>,
    /// Candidate index of the match within that keyspace — the lowest
    /// matching index, regardless of worker count.
    pub candidate_index: Option<u128>,
    /// Candidates drawn from keyspaces by the time this target settled.
    pub candidates_tried: u64,
    /// Candidates that failed passphrase preconditions and were never
    /// hashed.
    pub candidates_skipped: u64,
    pub elapsed_seconds: f64,
    /// candidates_tried / elapsed_seconds.
    pub throughput: f64,
}

/// Snapshot passed to the progress sink at least once per second while
/// a keyspace is being searched, and once at each keyspace boundary.
#[derive(Debug, Clone)]
pub struct Progress {
    pub candidates_tried: u64,
    pub candidates_skipped: u64,
    pub keyspace_ordinal: usize,
    pub keyspace_kind: KeyspaceKind,
    pub keyspace_cardinality: u128,
    /// Per-target: a match has been recorded (possibly not yet final).
    pub found: Vec<bool>,
}

/// Per-keyspace shared search state.
struct SearchState {
    /// Lowest-index match so far per target (within current keyspace).
    best: Vec<Option<(u128, String)>>,
}

struct KeyspaceRun<'a> {
    keyspace: &'a Keyspace,
    cardinality: u128,
    chunk_size: u128,
    start_offset: u128,
    /// ESSID groups over targets still unresolved at keyspace start:
    /// (essid, member target indices).
    groups: Vec<(&'a Essid, Vec<usize>)>,
    next_chunk: AtomicU64,
    tried: &'a AtomicU64,
    skipped: &'a AtomicU64,
    state: Mutex<SearchState>,
    exhaust: bool,
}

impl<'a> KeyspaceRun<'a> {
    /// Upper bound (exclusive) on candidate indices still worth
    /// claiming. While any group target lacks a match this is the whole
    /// keyspace; once every target has one, only indices below the
    /// worst (highest) current best can still lower a result.
    ///
    /// Chunks are claimed in ascending index order and processed whole,
    /// so a chunk can only go unprocessed if, at claim time, every
    /// target's best was at or below its start — and a best at index i
    /// means index i matched, which for the minimal match m_t forces
    /// best_t = m_t. Hence the chunk containing any target's true
    /// lowest match is always processed, and the merged minimum is
    /// worker-count-independent.
    fn claim_cutoff(&self) -> u128 {
        if self.exhaust {
            return u128::MAX;
        }
        let state = self.state.lock().unwrap();
        let mut cutoff = 0u128;
        for (_, members) in &self.groups {
            for &t in members {
                match &state.best[t] {
                    None => return u128::MAX,
                    Some((index, _)) => cutoff = cutoff.max(*index),
                }
            }
        }
        cutoff
    }

    fn worker_loop(&self, job: &CrackJob) {
        loop {
            let chunk_id = self.next_chunk.fetch_add(1, Ordering::Relaxed);
            let start = self.start_offset + u128::from(chunk_id) * self.chunk_size;
            if start >= self.cardinality || start >= self.claim_cutoff() {
                break;
            }
            let end = (start + self.chunk_size).min(self.cardinality);
            self.process_chunk(job, start, end);
        }
    }

    fn process_chunk(&self, job: &CrackJob, start: u128, end: u128) {
        // Snapshot which targets a chunk at this offset can still
        // improve: those without a match, or with one above `start`.
        let masks: Vec<Vec<usize>> = {
            let state = self.state.lock().unwrap();
            self.groups
                .iter()
                .map(|(_, members)| {
                    members
                        .iter()
                        .copied()
                        .filter(|&t| match &state.best[t] {
                            None => true,
                            Some((index, _)) => *index > start,
                        })
                        .collect()
                })
                .collect()
        };
        let any_active = masks.iter().any(|m| !m.is_empty());

        let mut local_matches: Vec<(usize, u128, String)> = Vec::new();
        for index in start..end {
            let Some(candidate) = self.keyspace.candidate(index) else {
                break;
            };
            self.tried.fetch_add(1, Ordering::Relaxed);
            if !any_active {
                // Exhaust mode with nothing left to improve: count the
                // enumeration but skip the hashing.
                continue;
            }
            if validate_passphrase(&candidate).is_err() {
                self.skipped.fetch_add(1, Ordering::Relaxed);
                continue;
            }
            for ((essid, _), mask) in self.groups.iter().zip(&masks) {
                if mask.is_empty() {
                    continue;
                }
                let pmk = derive_pmk(&candidate, essid).expect("candidate validated");
                for &t in mask {
                    if job.targets[t].matches_pmk(&pmk) {
                        local_matches.push((t, index, candidate.clone()));
                    }
                }
            }
        }

        if !local_matches.is_empty() {
            let mut state = self.state.lock().unwrap();
            for (t, index, candidate) in local_matches {
                let slot = &mut state.best[t];
                let better = match slot {
                    None => true,
                    Some((existing, _)) => index < *existing,
                };
                if better {
                    *slot = Some((index, candidate));
                }
            }
        }
    }
}

/// Run a crack job, reporting progress through `sink`.
///
/// Keyspaces are searched in order. Results come back one per target,
/// in target order; every reported passphrase has been re-verified
/// against its target from scratch.
pub fn run<S: FnMut(&Progress)>(
    job: &CrackJob,
    mut sink: S,
) -> Result<Vec<CrackResult>, EngineError> {
    if job.targets.is_empty() {
        return Err(EngineError::NoTargets);
    }
    if job.keyspaces.is_empty() {
        return Err(EngineError::NoKeyspaces);
    }
    if job.worker_count == 0 {
        return Err(EngineError::ZeroWorkers);
    }

    let started = Instant::now();
    let tried = AtomicU64::new(0);
    let skipped = AtomicU64::new(0);

    struct Resolution {
        keyspace_kind: KeyspaceKind,
        candidate_index: u128,
        passphrase: String,
        tried_at: u64,
        skipped_at: u64,
        elapsed: f64,
    }
    let mut resolved: Vec<Option<Resolution>> = (0..job.targets.len()).map(|_| None).collect();

    for (ordinal, keyspace) in job.keyspaces.iter().enumerate() {
        let all_resolved = resolved.iter().all(Option::is_some);
        if all_resolved && job.stop_policy == StopPolicy::FirstMatchPerTarget {
            break;
        }

        // Group unresolved targets by ESSID so each candidate costs one
        // PBKDF2 per distinct network name.
        let mut group_index: HashMap<&[u8], usize> = HashMap::new();
        let mut groups: Vec<(&Essid, Vec<usize>)> = Vec::new();
        for (t, target) in job.targets.iter().enumerate() {
            if resolved[t].is_some() {
                continue;
            }
            let essid = target.essid();
            let slot = *group_index.entry(essid.as_bytes()).or_insert_with(|| {
                groups.push((essid, Vec::new()));
                groups.len() - 1
            });
            groups[slot].1.push(t);
        }

        let run_state = KeyspaceRun {
            keyspace,
            cardinality: keyspace.cardinality(),
            chunk_size: u128::from(job.chunk_size.max(1)),
            start_offset: job.start_offset,
            groups,
            next_chunk: AtomicU64::new(0),
            tried: &tried,
            skipped: &skipped,
            state: Mutex::new(SearchState {
                best: (0..job.targets.len()).map(|_| None).collect(),
            }),
            exhaust: job.stop_policy == StopPolicy::Exhaust,
        };

        let progress_snapshot = |run_state: &KeyspaceRun, resolved: &[Option<Resolution>]| {
            let state = run_state.state.lock().unwrap();
            Progress {
                candidates_tried: tried.load(Ordering::Relaxed),
                candidates_skipped: skipped.load(Ordering::Relaxed),
                keyspace_ordinal: ordinal,
                keyspace_kind: keyspace.kind(),
                keyspace_cardinality: run_state.cardinality,
                found: resolved
                    .iter()
                    .zip(&state.best)
                    .map(|(r, b)| r.is_some() || b.is_some())
                    .collect(),
            }
        };

        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..job.worker_count)
                .map(|_| scope.spawn(|| run_state.worker_loop(job)))
                .collect();

            // This thread is the coordinator: it owns the progress
            // cadence while workers burn through chunks.
            let tick = Duration::from_secs(1);
            let mut last_tick = Instant::now();
            while !handles.iter().all(|h| h.is_finished()) {
                if last_tick.elapsed() >= tick {
                    sink(&progress_snapshot(&run_state, &resolved));
                    last_tick = Instant::now();
                }
                std::thread::sleep(Duration::from_millis(25));
            }
            for handle in handles {
                handle.join().expect("worker panicked");
            }
        });

        // Finalize: all claimable chunks are done, so per-target bests
        // are the true lowest-index matches for this keyspace.
        {
            let state = run_state.state.lock().unwrap();
            let elapsed = started.elapsed().as_secs_f64();
            let tried_now = tried.load(Ordering::Relaxed);
            let skipped_now = skipped.load(Ordering::Relaxed);
            for (t, best) in state.best.iter().enumerate() {
                if resolved[t].is_some() {
                    continue;
                }
                if let Some((index, passphrase)) = best {
                    resolved[t] = Some(Resolution {
                        keyspace_kind: keyspace.kind(),
                        candidate_index: *index,
                        passphrase: passphrase.clone(),
                        tried_at: tried_now,
                        skipped_at: skipped_now,
                        elapsed,
                    });
                }
            }
        }
        sink(&progress_snapshot(&run_state, &resolved));
    }

    let total_elapsed = started.elapsed().as_secs_f64();
    let total_tried = tried.load(Ordering::Relaxed);
    let total_skipped = skipped.load(Ordering::Relaxed);
    let results = resolved
        .into_iter()
        .enumerate()
        .map(|(target_index, resolution)| match resolution {
            Some(r) => {
                // Soundness gate: independently re-verify before
                // reporting.
                assert!(
                    job.targets[target_index].verify(&r.passphrase),
                    "match failed re-verification — engine defect"
                );
                CrackResult {
                    target_index,
                    passphrase: Some(r.passphrase),
                    keyspace_kind: Some(r.keyspace_kind),
                    candidate_index: Some(r.candidate_index),
                    candidates_tried: r.tried_at,
                    candidates_skipped: r.skipped_at,
                    elapsed_seconds: r.elapsed,
                    throughput: rate(r.tried_at, r.elapsed),
                }
            }
            None => CrackResult {
                target_index,
                passphrase: None,
                keyspace_kind: None,
                candidate_index: None,
                candidates_tried: total_tried,
                candidates_skipped: total_skipped,
                elapsed_seconds: total_elapsed,
                throughput: rate(total_tried, total_elapsed),
            },
        })
        .collect();
    Ok(results)
}

/// `run` without progress reporting.
pub fn run_silent(job: &CrackJob) -> Result<Vec<CrackResult>, EngineError> {
    run(job, |_| {})
}

fn rate(count: u64, seconds: f64) -> f64 {
    if seconds > 0.0 {
        count as f64 / seconds
    } else {
        0.0
    }
}

/// Measured candidate-verification throughput plus wall-time
/// projections for the two canonical search sizes.
#[derive(Debug, Clone)]
pub struct BenchmarkReport {
    pub worker_count: usize,
    pub duration_seconds: f64,
    /// Candidates/second with one worker.
    pub single_core_rate: f64,
    /// Candidates/second with `worker_count` workers.
    pub all_core_rate: f64,
    /// Projected seconds to sweep all 10^8 eight-digit strings.
    pub projected_digits8_seconds: f64,
    /// Projected seconds to sweep a 10^4 area-prefix phone block.
    pub projected_area_block_seconds: f64,
}

/// Measure PMKID-verification throughput against a synthetic target.
///
/// `duration_seconds` is the measurement window per phase (clamped to
/// at least 0.05 s); throughput work uses real PBKDF2 on real capture
/// shapes, so projections transfer directly to crack runs.
pub fn benchmark(duration_seconds: f64, worker_count: usize) -> Result<BenchmarkReport, EngineError> {
    if worker_count == 0 {
        return Err(EngineError::ZeroWorkers);
    }
    let window = duration_seconds.max(0.05);
    let single_core_rate = measure(window, 1);
    let all_core_rate = if worker_count == 1 {
        single_core_rate
    } else {
        measure(window, worker_count)
    };
    Ok(BenchmarkReport {
        worker_count,
        duration_seconds: window,
        single_core_rate,
        all_core_rate,
        projected_digits8_seconds: 1e8 / all_core_rate,
        projected_area_block_seconds: 1e4 / all_core_rate,
    })
}

fn measure(window: f64, workers: usize) -> f64 {
    let essid = Essid::from_text("BenchNet").expect("short name");
    let target = HashTarget::synthesize(
        "87654321",
        &essid,
        MacAddress::new([0x02, 0, 0, 0, 0, 1]),
        MacAddress::new([0x02, 0, 0, 0, 0, 2]),
    )
    .expect("valid passphrase");

    let deadline = Instant::now() + Duration::from_secs_f64(window);
    let total = AtomicU64::new(0);
    std::thread::scope(|scope| {
        for worker in 0..workers {
            let target = &target;
            let total = &total;
            scope.spawn(move || {
                // Disjoint candidate blocks per worker; none matches the
                // planted passphrase, so the loop never short-circuits.
                let mut value = worker as u64 * 10_000_000;
                let mut count = 0u64;
                loop {
                    for _ in 0..16 {
                        let candidate = format!("{value:08}");
                        std::hint::black_box(crate::crypto::verify_pmkid_candidate(
                            &candidate, target,
                        ));
                        value += 1;
                        count += 1;
                    }
                    if Instant::now() >= deadline {
                        break;
                    }
                }
                total.fetch_add(count, Ordering::Relaxed);
            });
        }
    });
    total.load(Ordering::Relaxed) as f64 / window
}
