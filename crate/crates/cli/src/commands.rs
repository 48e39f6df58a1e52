//! Subcommand implementations. Each returns the rendered output and an exit code.

use std::fmt::Write;
use std::time::Instant;

use hilden_core::abelian::{
    abelian_invariants, min_generators_lower_bound, smith_normal_form, AbelianInvariants,
    IntMatrix, Presentation,
};
use hilden_core::braid::{gamma, ActionOrder, CONVENTION};
use hilden_core::free_group::relative_conjugator;
use hilden_core::hilden::{
    convention_self_test, rewrite, verify_catalog, verify_generation, ConventionSelfTest,
    GenerationReport, HildenError, IdentityRecord, KMode, Verdict,
};
use hilden_core::lift::{is_liftable, parity_class, CoverConfig, ParityClass};
use serde::Serialize;
use thiserror::Error;

use crate::grammar::{parse_element, parse_word, ParseError};
use crate::render::render_svg;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

pub const SCOPE_NOTE: &str = "equality is decided in the mapping class group of the marked sphere \
(automorphisms of the free group up to inner automorphisms); handlebody extension is not checked";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        EXIT_USAGE
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub struct Output {
    pub body: String,
    pub code: u8,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn kmode(k: usize) -> Result<KMode, CliError> {
    KMode::from_k(k).ok_or_else(|| CliError::Usage(format!("k must be at least 2, got {k}")))
}

fn check_n(n: usize) -> Result<(), CliError> {
    if (1..=5).contains(&n) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "n must be between 1 and 5, got {n}"
        )))
    }
}

#[derive(Serialize)]
struct VerifyReport {
    n: usize,
    k: usize,
    kmode: KMode,
    convention: ActionOrder,
    self_test: ConventionSelfTest,
    identities: Vec<IdentityRecord>,
    generation: Option<GenerationReport>,
    all_pass: bool,
    first_failure: Option<String>,
    scope: &'static str,
    wall_time_ms: f64,
}

pub fn verify(n: usize, k: usize, format: Format) -> Result<Output, CliError> {
    check_n(n)?;
    let kmode = kmode(k)?;
    let start = Instant::now();
    let self_test = convention_self_test();
    let identities = verify_catalog(n, kmode).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut first_failure = identities
        .iter()
        .find(|r| !r.result.passed())
        .map(|r| format!("identity {}: {}", r.label, r.result));
    if !self_test.result.passed() && first_failure.is_none() {
        first_failure = Some(format!("convention self-test: {}", self_test.identity));
    }
    let generation = match verify_generation(n, kmode) {
        Ok(report) => Some(report),
        Err(e @ HildenError::GenerationFailed { .. }) => {
            first_failure.get_or_insert_with(|| e.to_string());
            None
        }
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };
    let report = VerifyReport {
        n,
        k,
        kmode,
        convention: CONVENTION,
        self_test,
        identities,
        generation,
        all_pass: first_failure.is_none(),
        first_failure,
        scope: SCOPE_NOTE,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    let code = if report.all_pass {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    let body = match format {
        Format::Json => json(&report),
        Format::Text => verify_text(&report),
    };
    Ok(Output { body, code })
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "verify n={} k={} ({}), {} strands, convention {}",
        r.n,
        r.k,
        r.kmode,
        2 * r.n + 2,
        r.convention
    )
    .unwrap();
    writeln!(
        s,
        "convention self-test: {} [{}], mirrored reading holds: {}",
        r.self_test.result,
        r.self_test.identity,
        if r.self_test.mirror_holds {
            "yes"
        } else {
            "no"
        }
    )
    .unwrap();
    let passed = r.identities.iter().filter(|i| i.result.passed()).count();
    writeln!(s, "identities: {}/{} PASS", passed, r.identities.len()).unwrap();
    for rec in &r.identities {
        writeln!(
            s,
            "  {:<4} {}  [{}]  {:.2} ms",
            rec.result, rec.label, rec.relation, rec.wall_time_ms
        )
        .unwrap();
    }
    match &r.generation {
        Some(g) => {
            let ok = g
                .records
                .iter()
                .filter(|x| x.result == Verdict::Pass)
                .count();
            writeln!(
                s,
                "generators over {{A = {}}}: {}/{} PASS",
                g.generators.join(", "),
                ok,
                g.records.len()
            )
            .unwrap();
            for rec in &g.records {
                writeln!(
                    s,
                    "  {:<4} {} = {}  [letters: {}, crossings: {}, liftable: {}]",
                    rec.result,
                    rec.target,
                    rec.rewrite,
                    rec.rewrite_letters,
                    rec.expanded_length,
                    if rec.liftable { "yes" } else { "no" }
                )
                .unwrap();
            }
            writeln!(
                s,
                "generating set size: {}; with the deck rotation: {}",
                g.generating_set_size, g.symmetric_handlebody_generators
            )
            .unwrap();
        }
        None => writeln!(s, "generators: not verified").unwrap(),
    }
    writeln!(s, "scope: {}", r.scope).unwrap();
    match &r.first_failure {
        None => writeln!(s, "result: PASS").unwrap(),
        Some(f) => writeln!(s, "result: FAIL ({f})").unwrap(),
    }
    s
}

#[derive(Serialize)]
struct RewriteReport {
    target: String,
    n: usize,
    kmode: KMode,
    rewrite: String,
    letters: u64,
    expanded: String,
    result: Verdict,
}

pub fn rewrite_cmd(target: &str, n: usize, k: usize, format: Format) -> Result<Output, CliError> {
    check_n(n)?;
    let kmode = kmode(k)?;
    let element = parse_element(target)
        .ok_or_else(|| CliError::Usage(format!("unknown generator `{target}`")))?;
    let word = rewrite(element, n, kmode).map_err(|e| CliError::Usage(e.to_string()))?;
    let expanded = word
        .expand(n, kmode)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let target_word = element
        .word(n)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let equal = gamma(&expanded)
        .out_equal(&gamma(&target_word))
        .expect("braid images");
    let report = RewriteReport {
        target: element.to_string(),
        n,
        kmode,
        rewrite: word.to_string(),
        letters: word.letter_count(),
        expanded: expanded.to_string(),
        result: if equal { Verdict::Pass } else { Verdict::Fail },
    };
    let body = match format {
        Format::Json => json(&report),
        Format::Text => format!(
            "{} = {}\n{}\n",
            report.target, report.rewrite, report.result
        ),
    };
    Ok(Output {
        body,
        code: if equal { EXIT_OK } else { EXIT_FAILURE },
    })
}

#[derive(Serialize)]
struct LiftReport {
    word: String,
    n: usize,
    k: usize,
    permutation: String,
    parity: ParityClass,
    liftable: bool,
}

pub fn lift(word: &str, n: usize, k: usize, format: Format) -> Result<Output, CliError> {
    let cfg = CoverConfig::new(n, k).map_err(|e| CliError::Usage(e.to_string()))?;
    let b = parse_word(word, cfg.points())?;
    let perm = b.perm();
    let parity = parity_class(&perm, &cfg).expect("degree matches");
    let liftable = is_liftable(&b, &cfg).expect("degree matches");
    let report = LiftReport {
        word: b.to_string(),
        n,
        k,
        permutation: perm.to_string(),
        parity,
        liftable,
    };
    let body = match format {
        Format::Json => json(&report),
        Format::Text => format!(
            "permutation: {}\nparity: {}\nliftable: {}\n",
            report.permutation,
            report.parity,
            if liftable { "yes" } else { "no" }
        ),
    };
    Ok(Output {
        body,
        code: EXIT_OK,
    })
}

#[derive(Serialize)]
struct WpReport {
    m: usize,
    word1: String,
    word2: String,
    convention: ActionOrder,
    equal: bool,
    /// `w` with `gamma(word1) = inn_w ∘ gamma(word2)`.
    conjugator: Option<String>,
    scope: &'static str,
}

pub fn wp(word1: &str, word2: &str, m: usize, format: Format) -> Result<Output, CliError> {
    if m < 2 {
        return Err(CliError::Usage(format!("need at least 2 strands, got {m}")));
    }
    let a = parse_word(word1, m)?;
    let b = parse_word(word2, m)?;
    let conj = relative_conjugator(&gamma(&a), &gamma(&b)).expect("braid images");
    let report = WpReport {
        m,
        word1: a.to_string(),
        word2: b.to_string(),
        convention: CONVENTION,
        equal: conj.is_some(),
        conjugator: conj.map(|w| w.to_string()),
        scope: SCOPE_NOTE,
    };
    let body = match format {
        Format::Json => json(&report),
        Format::Text => match &report.conjugator {
            Some(w) => format!("equal\nconjugator: {w}\n"),
            None => "unequal\n".to_owned(),
        },
    };
    Ok(Output {
        body,
        code: EXIT_OK,
    })
}

#[derive(Serialize)]
struct SnfReport {
    source: String,
    rows: usize,
    cols: usize,
    invariant_factors: Vec<String>,
    abelianization: Option<String>,
    betti: Option<usize>,
    torsion: Option<Vec<String>>,
    min_generators_lower_bound: Option<usize>,
}

pub enum SnfInput {
    Presentation(String),
    Matrix(String),
}

fn parse_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (line, l) in text.lines().enumerate() {
        let l = l.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let row = l
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("line {}: bad entry `{t}`", line + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    IntMatrix::from_rows(&rows).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn snf(input: SnfInput, source: &str, format: Format) -> Result<Output, CliError> {
    let (matrix, invariants): (IntMatrix, Option<AbelianInvariants>) = match input {
        SnfInput::Presentation(text) => {
            let p = Presentation::parse(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            (p.relation_matrix(), Some(abelian_invariants(&p)))
        }
        SnfInput::Matrix(text) => (parse_matrix(&text)?, None),
    };
    let factors = smith_normal_form(&matrix).invariant_factors();
    let report = SnfReport {
        source: source.to_owned(),
        rows: matrix.rows(),
        cols: matrix.cols(),
        invariant_factors: factors.iter().map(ToString::to_string).collect(),
        abelianization: invariants.as_ref().map(ToString::to_string),
        betti: invariants.as_ref().map(|i| i.betti),
        torsion: invariants
            .as_ref()
            .map(|i| i.torsion.iter().map(ToString::to_string).collect()),
        min_generators_lower_bound: invariants.as_ref().map(min_generators_lower_bound),
    };
    let body = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut s = format!(
                "invariant factors: {}\n",
                report.invariant_factors.join(" ")
            );
            if let (Some(ab), Some(lb)) =
                (&report.abelianization, report.min_generators_lower_bound)
            {
                writeln!(s, "abelianization: {ab}").unwrap();
                writeln!(s, "minimal generators: at least {lb}").unwrap();
            }
            s
        }
    };
    Ok(Output {
        body,
        code: EXIT_OK,
    })
}

pub fn render(word: &str, m: usize) -> Result<Output, CliError> {
    if m < 2 {
        return Err(CliError::Usage(format!("need at least 2 strands, got {m}")));
    }
    Ok(Output {
        body: render_svg(&parse_word(word, m)?),
        code: EXIT_OK,
    })
}
