//! Batch command-line front end: `pskaudit <command>`.
//!
//! Five non-interactive subcommands bind the library into audit
//! workflows:
//!
//! - `pmkid` — compute the capture line for known credentials;
//! - `crack` — recover passphrases for capture targets from an ordered
//!   list of keyspaces;
//! - `strength` — entropy and keyboard-trace reports;
//! - `classify` — label recovered passphrases and report
//!   distributions;
//! - `benchmark` — measure verification throughput and project search
//!   times.
//!
//! Primary output goes to stdout or `-o <path>`, as text or JSON;
//! diagnostics and progress go to stderr, so piped output stays clean.
//! No command ever prompts.
//!
//! Exit codes are a stable contract: `0` success, `1` a `--strict`
//! crack run that recovered nothing, `2` usage or input validation
//! failure.
//!
//! Recovered passphrases are printed masked. Unmasked output requires
//! *both* the `--unmasked` flag and `PSKAUDIT_ALLOW_UNMASKED=1` in the
//! environment — a deliberate double opt-in so a stray flag in a lab
//! script cannot leak secrets into logs.

use crate::classify::{self, ClassifyContext};
use crate::crypto::{Essid, MacAddress};
use crate::engine::{self, BenchmarkReport, CrackJob, CrackTarget, Progress, StopPolicy};
use crate::formats::{load_handshake_file, parse_capture_lines, HashTarget, OuiTable};
use crate::keyspace::{
    CaseMode, DateFormat, DateKeyspace, DefaultDictKeyspace, DigitsKeyspace, Keyspace, NricForm,
    NricKeyspace, PhoneKeyspace, PhonePrefixTable, RuleSet, WordlistKeyspace,
};
use crate::strength::{strength_report, KeyboardLayout};
use anyhow::{anyhow, bail, Context as _};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Environment variable that must be `1` before `--unmasked` takes
/// effect.
pub const UNMASK_ENV: &str = "PSKAUDIT_ALLOW_UNMASKED";

pub const EXIT_OK: i32 = 0;
pub const EXIT_STRICT_NO_RESULT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pskaudit",
    version,
    about = "WPA2-PSK passphrase audit toolkit",
    long_about = "Audit WPA2-PSK passphrase strength on networks you are authorized to assess:\n\
                  compute and crack PMKID/handshake targets, measure throughput, score\n\
                  passphrase strength, and classify recovered passphrases."
)]
struct Cli {
    /// Optional TOML config file providing default paths and settings.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output format for the primary report.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Write the primary report to a file instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the PMKID capture line for known credentials.
    Pmkid {
        #[arg(long)]
        passphrase: String,
        #[arg(long)]
        essid: String,
        /// Access point MAC (aa:bb:cc:dd:ee:ff, aa-bb-.., or bare hex).
        #[arg(long)]
        mac_ap: String,
        /// Station MAC.
        #[arg(long)]
        mac_sta: String,
    },
    /// Recover passphrases for capture targets from ordered keyspaces.
    Crack {
        /// Capture file of PMKID lines (legacy 4-field or modern
        /// WPA*01 form), one record per line.
        capture: Option<PathBuf>,
        /// Handshake record file (`key = value` form); repeatable.
        #[arg(long, value_name = "PATH")]
        handshake: Vec<PathBuf>,
        /// Keyspace spec, repeatable and searched in the order given:
        /// phone[:PREFIXES], digits:N[:skip=PREFIXES], date:Y1-Y2[:FMT],
        /// nric:FORM[:PREFIXES][:both], defaults[:PATH],
        /// wordlist:PATH[:RULES].
        #[arg(short, long = "keyspace", value_name = "SPEC")]
        keyspaces: Vec<String>,
        /// Worker thread count (default: available cores).
        #[arg(long)]
        workers: Option<usize>,
        /// Candidates per dispatched work chunk (tuning knob; the
        /// default suits long searches).
        #[arg(long, value_name = "N")]
        chunk_size: Option<u64>,
        /// Enumerate every keyspace to the end instead of stopping at
        /// first matches.
        #[arg(long)]
        exhaust: bool,
        /// Exit with code 1 if no target is recovered.
        #[arg(long)]
        strict: bool,
        /// Print recovered passphrases unmasked (also requires
        /// PSKAUDIT_ALLOW_UNMASKED=1).
        #[arg(long)]
        unmasked: bool,
        /// OUI vendor table (XX-XX-XX<TAB>vendor per line) for the
        /// vendor report.
        #[arg(long, value_name = "PATH")]
        oui: Option<PathBuf>,
    },
    /// Report entropy, keyboard-trace score, and band per passphrase.
    Strength {
        /// A single passphrase to assess.
        passphrase: Option<String>,
        /// File with one passphrase per line (assessed in order).
        #[arg(long, value_name = "PATH", conflicts_with = "passphrase")]
        file: Option<PathBuf>,
        /// Keyboard layout file overriding the built-in QWERTY grid.
        #[arg(long, value_name = "PATH")]
        layout: Option<PathBuf>,
    },
    /// Classify recovered passphrases; report distribution and regions.
    Classify {
        /// File with one recovered passphrase per line.
        recovered: PathBuf,
        /// Dictionary word file for the dictionary label.
        #[arg(long, value_name = "PATH")]
        dictionary: Option<PathBuf>,
        /// Phone prefix table (prefix<TAB>region per line).
        #[arg(long, value_name = "PATH")]
        prefix_table: Option<PathBuf>,
        /// Vendor defaults file, extending the built-in default table.
        #[arg(long, value_name = "PATH")]
        defaults: Option<PathBuf>,
        /// Print passphrases unmasked (also requires
        /// PSKAUDIT_ALLOW_UNMASKED=1).
        #[arg(long)]
        unmasked: bool,
    },
    /// Measure candidate throughput and project search wall times.
    Benchmark {
        /// Measurement window per phase, in seconds.
        #[arg(long, default_value_t = 1.0)]
        seconds: f64,
        /// Worker thread count (default: available cores).
        #[arg(long)]
        workers: Option<usize>,
    },
}

/// Optional config file (TOML). Every key is a default that the
/// matching command-line flag overrides.
#[derive(Debug, Clone, Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    /// OUI vendor table path.
    pub oui_table: Option<PathBuf>,
    /// Phone prefix table path.
    pub prefix_table: Option<PathBuf>,
    /// Vendor defaults file path.
    pub defaults_file: Option<PathBuf>,
    /// Keyboard layout file path.
    pub layout_file: Option<PathBuf>,
    /// Wordlists appended (rule-free) after the `--keyspace` list.
    #[serde(default)]
    pub wordlists: Vec<PathBuf>,
    /// Default worker count.
    pub worker_count: Option<usize>,
    /// Default output format: "text" or "json".
    pub format: Option<String>,
    /// `false` asks for unmasked output (still env-gated).
    pub masked: Option<bool>,
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: Config =
            toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
        if let Some(0) = config.worker_count {
            bail!("config worker_count must be at least 1");
        }
        if let Some(format) = config.format.as_deref() {
            if format != "text" && format != "json" {
                bail!("config format must be \"text\" or \"json\", got {format:?}");
            }
        }
        Ok(config)
    }
}

/// Entry point for the `pskaudit` binary: parse, dispatch, exit.
pub fn main() -> ! {
    // Clap already exits with code 2 (and its own message) on usage
    // errors, matching the exit-code contract.
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            EXIT_USAGE
        }
    };
    std::process::exit(code)
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let format = match cli.format {
        Some(f) => f,
        None => match config.format.as_deref() {
            Some("json") => OutputFormat::Json,
            _ => OutputFormat::Text,
        },
    };
    let mut out = open_output(&cli.output)?;

    match cli.command {
        Command::Pmkid {
            passphrase,
            essid,
            mac_ap,
            mac_sta,
        } => cmd_pmkid(&passphrase, &essid, &mac_ap, &mac_sta, format, &mut out),
        Command::Crack {
            capture,
            handshake,
            keyspaces,
            workers,
            chunk_size,
            exhaust,
            strict,
            unmasked,
            oui,
        } => {
            let options = CrackOptions {
                capture,
                handshake,
                keyspaces,
                workers,
                chunk_size,
                exhaust,
                strict,
                unmasked,
                oui,
            };
            cmd_crack(options, &config, format, &mut out)
        }
        Command::Strength {
            passphrase,
            file,
            layout,
        } => cmd_strength(passphrase, file, layout, &config, format, &mut out),
        Command::Classify {
            recovered,
            dictionary,
            prefix_table,
            defaults,
            unmasked,
        } => {
            let options = ClassifyOptions {
                recovered,
                dictionary,
                prefix_table,
                defaults,
                unmasked,
            };
            cmd_classify(options, &config, format, &mut out)
        }
        Command::Benchmark { seconds, workers } => {
            cmd_benchmark(seconds, workers, &config, format, &mut out)
        }
    }
}

fn open_output(path: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(
            fs::File::create(p).with_context(|| format!("creating output {}", p.display()))?,
        ),
        None => Box::new(std::io::stdout()),
    })
}

/// `true` when unmasked output is both requested and env-confirmed;
/// errors when requested without confirmation.
fn unmask_allowed(requested: bool) -> anyhow::Result<bool> {
    if !requested {
        return Ok(false);
    }
    match std::env::var(UNMASK_ENV) {
        Ok(v) if v == "1" => Ok(true),
        _ => bail!(
            "unmasked output requires {UNMASK_ENV}=1 in the environment \
             in addition to the flag"
        ),
    }
}

/// Masked form for report output; the fallback covers values shorter
/// than the 8-character masking minimum (defaults-table PINs etc.).
fn display_secret(passphrase: &str, unmasked: bool) -> String {
    if unmasked {
        return passphrase.to_string();
    }
    classify::mask(passphrase)
        .unwrap_or_else(|_| "x".repeat(passphrase.chars().count().max(4)))
}

fn default_workers(flag: Option<usize>, config: &Config) -> anyhow::Result<usize> {
    let count = flag
        .or(config.worker_count)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if count == 0 {
        bail!("--workers must be at least 1");
    }
    Ok(count)
}

// ---------------------------------------------------------------- pmkid

fn cmd_pmkid(
    passphrase: &str,
    essid: &str,
    mac_ap: &str,
    mac_sta: &str,
    format: OutputFormat,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let essid = Essid::from_text(essid).map_err(|e| anyhow!("essid: {e}"))?;
    let mac_ap = MacAddress::parse(mac_ap).map_err(|e| anyhow!("mac-ap: {e}"))?;
    let mac_sta = MacAddress::parse(mac_sta).map_err(|e| anyhow!("mac-sta: {e}"))?;
    let target = HashTarget::synthesize(passphrase, &essid, mac_ap, mac_sta)
        .map_err(|e| anyhow!("passphrase: {e}"))?;
    match format {
        OutputFormat::Text => writeln!(out, "{}", target.to_line())?,
        OutputFormat::Json => writeln!(
            out,
            "{}",
            json!({
                "line": target.to_line(),
                "pmkid": target.pmkid.to_string(),
                "essid": essid.display_lossy(),
                "mac_ap": mac_ap.to_string(),
                "mac_sta": mac_sta.to_string(),
            })
        )?,
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------- crack

struct CrackOptions {
    capture: Option<PathBuf>,
    handshake: Vec<PathBuf>,
    keyspaces: Vec<String>,
    workers: Option<usize>,
    chunk_size: Option<u64>,
    exhaust: bool,
    strict: bool,
    unmasked: bool,
    oui: Option<PathBuf>,
}

fn cmd_crack(
    options: CrackOptions,
    config: &Config,
    format: OutputFormat,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let unmasked = unmask_allowed(options.unmasked || config.masked == Some(false))?;

    // Targets: capture lines (errors reported per line, run continues)
    // plus any handshake record files.
    let mut targets: Vec<CrackTarget> = Vec::new();
    if let Some(path) = &options.capture {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading capture {}", path.display()))?;
        let parsed = parse_capture_lines(&text);
        for err in &parsed.errors {
            eprintln!("capture {}: {err}", path.display());
        }
        targets.extend(parsed.targets.into_iter().map(CrackTarget::Pmkid));
    }
    for path in &options.handshake {
        let (material, essid) = load_handshake_file(path)?;
        targets.push(CrackTarget::Handshake { material, essid });
    }
    if targets.is_empty() {
        bail!("no usable targets (give a capture file and/or --handshake files)");
    }

    // Keyspaces, in the order given, plus any config wordlists.
    let mut keyspaces: Vec<Keyspace> = Vec::new();
    for spec in &options.keyspaces {
        keyspaces.push(
            parse_keyspace_spec(spec, config)
                .with_context(|| format!("keyspace spec {spec:?}"))?,
        );
    }
    for path in &config.wordlists {
        keyspaces.push(WordlistKeyspace::from_path(path, RuleSet::none())?.into_keyspace());
    }
    if keyspaces.is_empty() {
        bail!("no keyspaces (give at least one --keyspace spec)");
    }
    let keyspace_count = keyspaces.len();
    for (i, ks) in keyspaces.iter().enumerate() {
        eprintln!(
            "keyspace {}/{}: {} — {} candidates",
            i + 1,
            keyspace_count,
            ks.describe(),
            ks.cardinality()
        );
    }

    let workers = default_workers(options.workers, config)?;
    let oui = load_oui(options.oui.as_deref().or(config.oui_table.as_deref()))?;

    let mut job = CrackJob::new(targets, keyspaces)
        .with_workers(workers)
        .with_stop_policy(if options.exhaust {
            StopPolicy::Exhaust
        } else {
            StopPolicy::FirstMatchPerTarget
        });
    if let Some(chunk) = options.chunk_size {
        if chunk == 0 {
            bail!("--chunk-size must be at least 1");
        }
        job = job.with_chunk_size(chunk);
    }
    let progress = |p: &Progress| {
        eprintln!(
            "progress: keyspace {}/{} ({}), {} tried, {}/{} found",
            p.keyspace_ordinal + 1,
            keyspace_count,
            p.keyspace_kind,
            p.candidates_tried,
            p.found.iter().filter(|f| **f).count(),
            p.found.len()
        );
    };
    let results = engine::run(&job, progress)?;

    // Vendor attribution over all targets, cracked or not.
    let mut vendor_counts: Vec<(String, usize)> = Vec::new();
    for target in &job.targets {
        let vendor = oui.vendor_of(target.mac_ap()).to_string();
        match vendor_counts.iter_mut().find(|(v, _)| *v == vendor) {
            Some((_, n)) => *n += 1,
            None => vendor_counts.push((vendor, 1)),
        }
    }
    vendor_counts.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));

    let recovered = results.iter().filter(|r| r.passphrase.is_some()).count();
    let total_tried = results.iter().map(|r| r.candidates_tried).max().unwrap_or(0);
    let total_skipped = results
        .iter()
        .map(|r| r.candidates_skipped)
        .max()
        .unwrap_or(0);
    let total_elapsed = results
        .iter()
        .map(|r| r.elapsed_seconds)
        .fold(0.0, f64::max);

    match format {
        OutputFormat::Text => {
            for result in &results {
                let target = &job.targets[result.target_index];
                let place = format!(
                    "essid \"{}\", ap {}",
                    target.essid().display_lossy(),
                    target.mac_ap()
                );
                match &result.passphrase {
                    Some(p) => writeln!(
                        out,
                        "target {}: FOUND {} (keyspace {}, index {}) — {}",
                        result.target_index + 1,
                        display_secret(p, unmasked),
                        result.keyspace_kind.expect("set when found"),
                        result.candidate_index.expect("set when found"),
                        place
                    )?,
                    None => writeln!(
                        out,
                        "target {}: not found — {}",
                        result.target_index + 1,
                        place
                    )?,
                }
            }
            writeln!(
                out,
                "summary: {}/{} recovered, {} tried, {} skipped, {} elapsed, {:.0} candidates/s",
                recovered,
                results.len(),
                total_tried,
                total_skipped,
                human_duration(total_elapsed),
                rate_or_zero(total_tried, total_elapsed),
            )?;
            writeln!(out, "vendors:")?;
            for (vendor, count) in &vendor_counts {
                writeln!(out, "  {vendor}: {count}")?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = results
                .iter()
                .map(|result| {
                    let target = &job.targets[result.target_index];
                    json!({
                        "target": result.target_index + 1,
                        "source_line": target.source_line(),
                        "essid": target.essid().display_lossy(),
                        "mac_ap": target.mac_ap().to_string(),
                        "found": result.passphrase.is_some(),
                        "passphrase": result
                            .passphrase
                            .as_deref()
                            .map(|p| display_secret(p, unmasked)),
                        "masked": !unmasked,
                        "keyspace": result.keyspace_kind.map(|k| k.as_str()),
                        "candidate_index": result.candidate_index.map(json_u128),
                        "candidates_tried": result.candidates_tried,
                        "elapsed_seconds": result.elapsed_seconds,
                        "throughput": result.throughput,
                    })
                })
                .collect();
            let vendors: Vec<serde_json::Value> = vendor_counts
                .iter()
                .map(|(vendor, count)| json!({"vendor": vendor, "count": count}))
                .collect();
            writeln!(
                out,
                "{}",
                json!({
                    "results": rows,
                    "summary": {
                        "targets": results.len(),
                        "recovered": recovered,
                        "candidates_tried": total_tried,
                        "candidates_skipped": total_skipped,
                        "elapsed_seconds": total_elapsed,
                        "workers": workers,
                    },
                    "vendors": vendors,
                })
            )?;
        }
    }

    if options.strict && recovered == 0 {
        return Ok(EXIT_STRICT_NO_RESULT);
    }
    Ok(EXIT_OK)
}

fn load_oui(path: Option<&Path>) -> anyhow::Result<OuiTable> {
    match path {
        Some(p) => {
            let text =
                fs::read_to_string(p).with_context(|| format!("reading OUI table {}", p.display()))?;
            let table = OuiTable::load(&text)?;
            if table.duplicate_count > 0 {
                eprintln!(
                    "OUI table {}: {} duplicate prefixes (last occurrence wins)",
                    p.display(),
                    table.duplicate_count
                );
            }
            Ok(table)
        }
        None => Ok(OuiTable::default()),
    }
}

// ----------------------------------------------------------- keyspaces

/// Parse one keyspace spec from the CLI mini-language.
///
/// Forms: `phone[:PREFIXES]`, `digits:N[:skip=PREFIXES]`,
/// `date:Y1-Y2[:FMT]`, `nric:FORM[:PREFIXES][:both]`,
/// `defaults[:PATH]`, `wordlist:PATH[:RULES]`. PREFIXES are
/// comma-separated; FMT is one of ddmmyyyy/yyyymmdd/mmddyyyy; FORM is
/// full, prefix-first, or checksum-last; RULES are `+`-joined rule
/// names (or `rules` for all).
pub fn parse_keyspace_spec(spec: &str, config: &Config) -> anyhow::Result<Keyspace> {
    let (kind, rest) = match spec.split_once(':') {
        Some((kind, rest)) => (kind, Some(rest)),
        None => (spec, None),
    };
    match kind {
        "phone" => {
            let prefixes: Vec<&str> = match rest {
                Some(r) if !r.is_empty() => r.split(',').collect(),
                // Bare `phone`: all four local leading digits.
                _ => vec!["3", "6", "8", "9"],
            };
            Ok(PhoneKeyspace::new(&prefixes)?.into_keyspace())
        }
        "digits" => {
            let rest = rest.ok_or_else(|| anyhow!("digits needs a length, e.g. digits:8"))?;
            let (len_text, skip) = match rest.split_once(':') {
                Some((len, skip_part)) => {
                    let skip = skip_part
                        .strip_prefix("skip=")
                        .ok_or_else(|| anyhow!("expected skip=PREFIXES after digits:N:"))?;
                    (len, Some(skip))
                }
                None => (rest, None),
            };
            let length: usize = len_text
                .parse()
                .map_err(|_| anyhow!("digit length {len_text:?} is not a number"))?;
            let keyspace = match skip {
                Some(skip) if !skip.is_empty() => {
                    let prefixes: Vec<&str> = skip.split(',').collect();
                    DigitsKeyspace::with_excluded_prefixes(length, &prefixes)?
                }
                _ => DigitsKeyspace::new(length)?,
            };
            Ok(keyspace.into_keyspace())
        }
        "date" => {
            let rest = rest.ok_or_else(|| anyhow!("date needs a year range, e.g. date:1900-2019"))?;
            let (range, format) = match rest.split_once(':') {
                Some((range, fmt)) => (range, Some(fmt)),
                None => (rest, None),
            };
            let (first, last) = range
                .split_once('-')
                .ok_or_else(|| anyhow!("year range must be Y1-Y2, got {range:?}"))?;
            let first: i32 = first
                .parse()
                .map_err(|_| anyhow!("first year {first:?} is not a number"))?;
            let last: i32 = last
                .parse()
                .map_err(|_| anyhow!("last year {last:?} is not a number"))?;
            let format = match format {
                None | Some("ddmmyyyy") => DateFormat::DayMonthYear,
                Some("yyyymmdd") => DateFormat::YearMonthDay,
                Some("mmddyyyy") => DateFormat::MonthDayYear,
                Some(other) => bail!("unknown date format {other:?}"),
            };
            Ok(DateKeyspace::with_format(first, last, format)?.into_keyspace())
        }
        "nric" => {
            let rest = rest.ok_or_else(|| {
                anyhow!("nric needs a form: nric:full, nric:prefix-first, or nric:checksum-last")
            })?;
            let mut parts = rest.split(':');
            let form = match parts.next() {
                Some("full") => NricForm::Full9,
                Some("prefix-first") => NricForm::PrefixFirst8,
                Some("checksum-last") => NricForm::ChecksumLast8,
                Some(other) => bail!("unknown nric form {other:?}"),
                None => unreachable!("split always yields one item"),
            };
            let mut prefixes: Vec<char> = vec!['S', 'T', 'F', 'G'];
            let mut case_mode = CaseMode::UpperOnly;
            for part in parts {
                if part == "both" {
                    case_mode = CaseMode::BothCases;
                } else if !part.is_empty() {
                    prefixes = part.chars().filter(|c| *c != ',').collect();
                }
            }
            Ok(NricKeyspace::new(form, &prefixes, case_mode)?.into_keyspace())
        }
        "defaults" => {
            let keyspace = match rest {
                Some(path) if !path.is_empty() => {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("reading defaults file {path}"))?;
                    DefaultDictKeyspace::with_vendor_file(&text)?
                }
                _ => match &config.defaults_file {
                    Some(path) => {
                        let text = fs::read_to_string(path).with_context(|| {
                            format!("reading defaults file {}", path.display())
                        })?;
                        DefaultDictKeyspace::with_vendor_file(&text)?
                    }
                    None => DefaultDictKeyspace::built_in(),
                },
            };
            Ok(keyspace.into_keyspace())
        }
        "wordlist" => {
            let rest =
                rest.ok_or_else(|| anyhow!("wordlist needs a path, e.g. wordlist:words.txt"))?;
            // The final `:`-segment is rules iff it parses as rules;
            // otherwise the whole rest is the path (which may itself
            // contain colons).
            let (path, rules) = match rest.rsplit_once(':') {
                Some((path, tail)) => match RuleSet::parse(tail) {
                    Some(rules) => (path, rules),
                    None => (rest, RuleSet::none()),
                },
                None => (rest, RuleSet::none()),
            };
            let keyspace = WordlistKeyspace::from_path(Path::new(path), rules)?;
            if keyspace.skipped > 0 {
                eprintln!(
                    "wordlist {path}: {} candidates skipped (length or character limits)",
                    keyspace.skipped
                );
            }
            Ok(keyspace.into_keyspace())
        }
        other => bail!(
            "unknown keyspace kind {other:?} (expected phone, digits, date, nric, \
             defaults, or wordlist)"
        ),
    }
}

// -------------------------------------------------------------- strength

fn cmd_strength(
    passphrase: Option<String>,
    file: Option<PathBuf>,
    layout_path: Option<PathBuf>,
    config: &Config,
    format: OutputFormat,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let inputs: Vec<String> = match (passphrase, file) {
        (Some(p), None) => vec![p],
        (None, Some(path)) => fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()))?
            .lines()
            .map(|l| l.trim_end_matches('\r').to_string())
            .filter(|l| !l.is_empty())
            .collect(),
        (None, None) => bail!("give a passphrase argument or --file"),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with forbids this"),
    };

    let custom_layout;
    let layout: &KeyboardLayout =
        match layout_path.as_deref().or(config.layout_file.as_deref()) {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading layout {}", path.display()))?;
                custom_layout = KeyboardLayout::parse(&text)?;
                &custom_layout
            }
            None => KeyboardLayout::qwerty(),
        };

    let mut rows: Vec<serde_json::Value> = Vec::new();
    if format == OutputFormat::Text {
        writeln!(
            out,
            "{:<28} {:>6} {:>5} {:>9} {:>7}  band",
            "passphrase", "length", "pool", "entropy", "score"
        )?;
    }
    for input in &inputs {
        match strength_report(input, layout) {
            Ok(report) => match format {
                OutputFormat::Text => writeln!(
                    out,
                    "{:<28} {:>6} {:>5} {:>9.2} {:>7.3}  {}",
                    input,
                    report.length,
                    report.inferred_alpha,
                    report.entropy_bits,
                    report.trace.score,
                    report.band
                )?,
                OutputFormat::Json => rows.push(json!({
                    "passphrase": input,
                    "length": report.length,
                    "pool": report.inferred_alpha,
                    "entropy_bits": report.entropy_bits,
                    "keyspace_count": report.keyspace_count.to_string(),
                    "score": report.trace.score,
                    "band": report.band.as_str(),
                    "left_path": report.trace.left_half_path_length,
                    "right_path": report.trace.right_half_path_length,
                    "layer_transitions": report.trace.layer_transitions,
                    "cross_half": report.trace.cross_half_count,
                })),
            },
            Err(err) => {
                eprintln!("strength: {input:?}: {err}");
                if format == OutputFormat::Json {
                    rows.push(json!({"passphrase": input, "error": err.to_string()}));
                }
            }
        }
    }
    if format == OutputFormat::Json {
        writeln!(out, "{}", json!({ "rows": rows }))?;
    }
    Ok(EXIT_OK)
}

// -------------------------------------------------------------- classify

struct ClassifyOptions {
    recovered: PathBuf,
    dictionary: Option<PathBuf>,
    prefix_table: Option<PathBuf>,
    defaults: Option<PathBuf>,
    unmasked: bool,
}

fn cmd_classify(
    options: ClassifyOptions,
    config: &Config,
    format: OutputFormat,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    let unmasked = unmask_allowed(options.unmasked || config.masked == Some(false))?;

    let mut context = ClassifyContext::new();
    if let Some(path) = options.defaults.as_deref().or(config.defaults_file.as_deref()) {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading defaults {}", path.display()))?;
        context = context.with_defaults(DefaultDictKeyspace::with_vendor_file(&text)?);
    }
    if let Some(path) = &options.dictionary {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading dictionary {}", path.display()))?;
        context = context.with_dictionary(text.lines().map(|l| l.trim()));
    }
    let prefix_table = match options
        .prefix_table
        .as_deref()
        .or(config.prefix_table.as_deref())
    {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading prefix table {}", path.display()))?;
            PhonePrefixTable::parse(&text)?
        }
        None => PhonePrefixTable::empty(),
    };
    context = context.with_phone_prefixes(prefix_table.clone());

    let text = fs::read_to_string(&options.recovered)
        .with_context(|| format!("reading {}", options.recovered.display()))?;
    let mut classified = Vec::new();
    let mut skipped: Vec<(usize, String, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        match classify::classify(line, &context) {
            Ok(c) => classified.push(c),
            Err(err) => {
                eprintln!("line {}: {err}", idx + 1);
                skipped.push((idx + 1, line.to_string(), err.to_string()));
            }
        }
    }

    let dist = classify::distribution(&classified);
    let regions = classify::geo_correlate(&classified, &prefix_table);

    match format {
        OutputFormat::Text => {
            writeln!(out, "classified ({} rows):", classified.len())?;
            for c in &classified {
                let shown = if unmasked { &c.passphrase } else { &c.masked };
                writeln!(out, "  {:<24} {:<22} {}", shown, c.label, c.evidence)?;
            }
            writeln!(out, "distribution (total {}):", dist.total)?;
            for share in &dist.shares {
                writeln!(
                    out,
                    "  {:<22} {:>6}  {:>6.2}%",
                    share.label, share.count, share.percent
                )?;
            }
            writeln!(out, "regions:")?;
            if regions.is_empty() {
                writeln!(out, "  (no phone-labeled passphrases)")?;
            }
            for (region, count) in &regions {
                writeln!(out, "  {region}: {count}")?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = classified
                .iter()
                .map(|c| {
                    let mut row = json!({
                        "masked": c.masked,
                        "label": c.label.as_str(),
                        "display": c.label.display_name(),
                        "evidence": c.evidence,
                    });
                    if unmasked {
                        row["passphrase"] = json!(c.passphrase);
                    }
                    row
                })
                .collect();
            let shares: Vec<serde_json::Value> = dist
                .shares
                .iter()
                .map(|s| {
                    json!({
                        "label": s.label.as_str(),
                        "display": s.label.display_name(),
                        "count": s.count,
                        "percent": s.percent,
                    })
                })
                .collect();
            let region_rows: Vec<serde_json::Value> = regions
                .iter()
                .map(|(region, count)| json!({"region": region, "count": count}))
                .collect();
            let skipped_rows: Vec<serde_json::Value> = skipped
                .iter()
                .map(|(line, _, reason)| json!({"line": line, "reason": reason}))
                .collect();
            writeln!(
                out,
                "{}",
                json!({
                    "rows": rows,
                    "skipped": skipped_rows,
                    "distribution": {"total": dist.total, "shares": shares},
                    "regions": region_rows,
                })
            )?;
        }
    }
    Ok(EXIT_OK)
}

// ------------------------------------------------------------- benchmark

fn cmd_benchmark(
    seconds: f64,
    workers: Option<usize>,
    config: &Config,
    format: OutputFormat,
    out: &mut dyn Write,
) -> anyhow::Result<i32> {
    if seconds <= 0.0 || seconds.is_nan() {
        bail!("--seconds must be positive");
    }
    let workers = default_workers(workers, config)?;
    eprintln!("benchmark: measuring for {seconds} s per phase, {workers} worker(s)...");
    let report: BenchmarkReport = engine::benchmark(seconds, workers)?;
    match format {
        OutputFormat::Text => {
            writeln!(out, "workers              : {}", report.worker_count)?;
            writeln!(
                out,
                "measurement window   : {:.2} s per phase",
                report.duration_seconds
            )?;
            writeln!(
                out,
                "single-core rate     : {:.0} candidates/s",
                report.single_core_rate
            )?;
            writeln!(
                out,
                "all-core rate        : {:.0} candidates/s",
                report.all_core_rate
            )?;
            writeln!(
                out,
                "projection, 10^4 candidates (area-prefixed phone block): {}",
                human_duration(report.projected_area_block_seconds)
            )?;
            writeln!(
                out,
                "projection, 10^8 candidates (full 8-digit sweep)       : {}",
                human_duration(report.projected_digits8_seconds)
            )?;
            writeln!(
                out,
                "comparison: knowing a 4-digit prefix shrinks the sweep 10000x, \
                 from {} to {}",
                human_duration(report.projected_digits8_seconds),
                human_duration(report.projected_area_block_seconds)
            )?;
        }
        OutputFormat::Json => writeln!(
            out,
            "{}",
            json!({
                "workers": report.worker_count,
                "window_seconds": report.duration_seconds,
                "single_core_rate": report.single_core_rate,
                "all_core_rate": report.all_core_rate,
                "projected_seconds": {
                    "area_prefix_1e4": report.projected_area_block_seconds,
                    "digits8_1e8": report.projected_digits8_seconds,
                },
            })
        )?,
    }
    Ok(EXIT_OK)
}

// --------------------------------------------------------------- helpers

fn rate_or_zero(count: u64, seconds: f64) -> f64 {
    if seconds > 0.0 {
        count as f64 / seconds
    } else {
        0.0
    }
}

fn json_u128(value: u128) -> serde_json::Value {
    match u64::try_from(value) {
        Ok(v) => json!(v),
        Err(_) => json!(value.to_string()),
    }
}

fn human_duration(seconds: f64) -> String {
    if seconds < 1.0 {
        format!("{:.2} s", seconds)
    } else if seconds < 60.0 {
        format!("{:.1} s", seconds)
    } else if seconds < 3600.0 {
        format!("{:.1} min", seconds / 60.0)
    } else if seconds < 86_400.0 {
        format!("{:.1} h", seconds / 3600.0)
    } else {
        format!("{:.1} days", seconds / 86_400.0)
    }
}
