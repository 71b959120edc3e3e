//! Command-line front end. [`run`] never prints; it returns the exit status and
//! captured output so the binary, tests and bindings share one code path.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use crate::ballot::{enumerate, f_shape, noncrossing_pairings, pairing_from_ballot, BinarySeq, SeqFilter};
use crate::combinat::binomial;
use crate::error::Error;
use crate::harmonics::{delta, harmonic_candidate_basis, harmonic_kernel, is_harmonic, smallest_lex_monomial};
use crate::ideal::{hilbert_series, quotient_basis, reduce_by, shift_identity_check, GFamily};
use crate::linalg::rank;
use crate::monomial::{Monomial, Sign};
use crate::parse::{parse_poly, to_json};
use crate::polynomial::{ExtPolynomial, MonomialProduct};
use crate::quasisym::{
    fundamental, generating_series_coefficients, is_quasisymmetric, product_coefficient,
    product_coefficient_bruteforce,
};
use crate::sym_coinv::{check_freeness, reduce_mod_j};
use crate::Rational;

/// Overrides [`DEFAULT_MAX_N`].
pub const CAP_ENV: &str = "EXTQSYM_MAX_N";
pub const DEFAULT_MAX_N: usize = 16;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Parser)]
#[command(name = "extqsym", version, about = "Quasisymmetric invariants and coinvariants of the exterior algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Ballot,
    NonBallot,
    MinimalGb,
}

impl From<FilterArg> for SeqFilter {
    fn from(f: FilterArg) -> SeqFilter {
        match f {
            FilterArg::All => SeqFilter::All,
            FilterArg::Ballot => SeqFilter::Ballot,
            FilterArg::NonBallot => SeqFilter::NonBallot,
            FilterArg::MinimalGb => SeqFilter::MinimalGb,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Graded dimensions of R_n / I_n.
    Hilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Ballot monomials spanning R_n / I_n.
    QuotientBasis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// The Δ_{C(α)} basis of the harmonics and the kernel dimensions.
    Harmonics {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// G_α for all non-ballot α, or the minimal subset.
    Gbasis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        json: bool,
    },
    /// A single G_α.
    Gpoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        json: bool,
    },
    /// Normal form modulo I_n with its G-decomposition.
    Reduce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
    /// a_{r,s}, or the triangle of them up to a total degree.
    ProductCoeff {
        #[arg(long, required_unless_present = "table")]
        r: Option<usize>,
        #[arg(long, required_unless_present = "table")]
        s: Option<usize>,
        #[arg(long)]
        brute_force: bool,
        #[arg(long, conflicts_with_all = ["r", "s"])]
        table: Option<usize>,
    },
    /// Binary sequences of length n.
    Ballot {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "ballot")]
        filter: FilterArg,
        #[arg(long)]
        count_by_ones: bool,
    },
    /// dim R_n / ⟨F_1⟩ and the freeness check.
    SymCoinv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Cross-checks every invariant up to n_max.
    Verify {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

type CmdResult = std::result::Result<String, Failure>;

/// The cap on `n`, from [`CAP_ENV`] when set.
pub fn max_n() -> Result<usize, Error> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse { pos: 0, msg: format!("{CAP_ENV}={v:?} is not a nonnegative integer") }),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_cap(n: usize) -> Result<(), Error> {
    let cap = max_n()?;
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

pub fn status_for(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Parse { .. }
        | Error::Precondition(_)
        | Error::IndexOutOfRange { .. }
        | Error::DimensionMismatch { .. } => EXIT_PARSE,
    }
}

pub fn run(command: &Command) -> Outcome {
    match catch_unwind(AssertUnwindSafe(|| dispatch(command))) {
        Ok(Ok(stdout)) => Outcome { status: EXIT_OK, stdout, stderr: String::new() },
        Ok(Err(Failure::Lib(e))) => Outcome { status: status_for(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
        Ok(Err(Failure::Check(out))) => {
            Outcome { status: EXIT_FAILED_CHECK, stdout: out, stderr: "error: verification failed\n".into() }
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            Outcome { status: EXIT_INTERNAL, stdout: String::new(), stderr: format!("internal error: {msg}\n") }
        }
    }
}

/// Parses `args` (program name first) and runs the command. Clap usage errors
/// exit with status 2; `--help` and `--version` exit with 0.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { status: EXIT_PARSE, stdout: String::new(), stderr: text }
            } else {
                Outcome { status: EXIT_OK, stdout: text, stderr: String::new() }
            }
        }
    }
}

fn parse_alpha(n: usize, alpha: &str) -> Result<BinarySeq, Error> {
    let seq: BinarySeq = alpha.parse()?;
    if seq.len() != n {
        return Err(Error::Precondition(format!("alpha has length {} but n = {n}", seq.len())));
    }
    Ok(seq)
}

fn json_line(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn dispatch(command: &Command) -> CmdResult {
    match command {
        Command::Hilbert { n, json } => {
            check_cap(*n)?;
            let h = hilbert_series(*n)?;
            Ok(if *json { json_line(json!({ "n": n, "hilbert": h })) } else { format!("{}\n", join(&h)) })
        }
        Command::QuotientBasis { n, json } => {
            check_cap(*n)?;
            let basis = quotient_basis(*n)?;
            if *json {
                let subsets: Vec<Vec<usize>> = basis.iter().map(|m| m.indices().collect()).collect();
                return Ok(json_line(json!({ "n": n, "basis": subsets })));
            }
            Ok(basis.iter().map(|m| format!("{m}\n")).collect())
        }
        Command::Harmonics { n, degree, verify, json } => harmonics_cmd(*n, *degree, *verify, *json),
        Command::Gbasis { n, minimal, json } => {
            check_cap(*n)?;
            let mut family = GFamily::new(*n)?;
            let basis = if *minimal { family.minimal_groebner()? } else { family.ideal_basis()? };
            if *json {
                let items: Vec<_> =
                    basis.iter().map(|(a, g)| json!({ "alpha": a.to_string(), "poly": to_json(g) })).collect();
                return Ok(json_line(json!({ "n": n, "minimal": minimal, "basis": items })));
            }
            Ok(basis.iter().map(|(a, g)| format!("{a}: {g}\n")).collect())
        }
        Command::Gpoly { n, alpha, json } => {
            check_cap(*n)?;
            let a = parse_alpha(*n, alpha)?;
            let g = GFamily::new(*n)?.g(&a)?.clone();
            Ok(if *json {
                json_line(json!({ "alpha": a.to_string(), "poly": to_json(&g) }))
            } else {
                format!("{g}\n")
            })
        }
        Command::Reduce { n, poly, json } => {
            check_cap(*n)?;
            let p = parse_poly(*n, poly)?;
            let mut family = GFamily::new(*n)?;
            let r = family.normal_form(&p)?;
            if *json {
                let dec: Vec<_> = r
                    .decomposition
                    .iter()
                    .map(|(a, c)| json!({ "alpha": a.to_string(), "coeff": c.to_string() }))
                    .collect();
                return Ok(json_line(json!({
                    "input": to_json(&r.input),
                    "normal_form": to_json(&r.normal_form),
                    "in_ideal": r.in_ideal(),
                    "decomposition": dec,
                })));
            }
            let mut out = format!("normal form: {}\nin ideal: {}\n", r.normal_form, r.in_ideal());
            for (a, c) in &r.decomposition {
                writeln!(out, "  {c} * G_{a}").unwrap();
            }
            Ok(out)
        }
        Command::ProductCoeff { r, s, brute_force, table } => {
            if let Some(d) = table {
                let mut out = String::new();
                for r in 0..=*d {
                    let row: Vec<String> = if *brute_force {
                        (0..=d - r)
                            .map(|s| product_coefficient_bruteforce(r, s).map(|v| v.to_string()))
                            .collect::<Result<_, _>>()?
                    } else {
                        (0..=d - r).map(|s| product_coefficient(r, s).to_string()).collect()
                    };
                    writeln!(out, "{}", row.join(" ")).unwrap();
                }
                return Ok(out);
            }
            let (r, s) = (r.expect("clap requires r"), s.expect("clap requires s"));
            Ok(if *brute_force {
                format!("{}\n", product_coefficient_bruteforce(r, s)?)
            } else {
                format!("{}\n", product_coefficient(r, s))
            })
        }
        Command::Ballot { n, filter, count_by_ones } => {
            check_cap(*n)?;
            let seqs = enumerate(*n, (*filter).into())?;
            if *count_by_ones {
                let mut counts = vec![0usize; n + 1];
                for a in &seqs {
                    counts[a.ones()] += 1;
                }
                while counts.len() > 1 && counts.last() == Some(&0) {
                    counts.pop();
                }
                return Ok(format!("{}\n", join(&counts)));
            }
            Ok(seqs.iter().map(|a| format!("{a}\n")).collect())
        }
        Command::SymCoinv { n, verify } => {
            check_cap(*n)?;
            let report = check_freeness(*n)?;
            let mut out = format!("dim R_{n}/J_{n} = {}\nfree: {}\n", report.quotient_dim, report.holds());
            let mut ok = report.holds();
            if *verify {
                writeln!(out, "ker dim = {} (F_1 R_n in kernel: {})", report.ideal_dim, report.ideal_in_kernel).unwrap();
                writeln!(out, "tensor rank = {} of {}", report.tensor_rank, 1u64 << n).unwrap();
                let m = check_reduce_mod_j_multiplicative(*n, 20, &mut StdRng::seed_from_u64(0));
                writeln!(out, "{}", m.line()).unwrap();
                ok &= m.passed;
            }
            if ok {
                Ok(out)
            } else {
                Err(Failure::Check(out))
            }
        }
        Command::Verify { n_max, seed } => {
            check_cap(*n_max)?;
            let report = verify_suite_seeded(*n_max, *seed, mul_kernel);
            let out: String = report.checks.iter().map(|c| format!("{}\n", c.line())).collect();
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Check(out))
            }
        }
    }
}

fn harmonics_cmd(n: usize, degree: Option<usize>, verify: bool, json: bool) -> CmdResult {
    check_cap(n)?;
    if let Some(k) = degree {
        if k > n {
            return Err(Error::Precondition(format!("degree {k} exceeds n = {n}")).into());
        }
    }
    let basis = harmonic_candidate_basis(n)?;
    let degrees: Vec<usize> = match degree {
        Some(k) => vec![k],
        None => (0..=n / 2).collect(),
    };
    let mut dims = Vec::with_capacity(degrees.len());
    let mut ok = true;
    let mut notes = String::new();
    for &k in &degrees {
        let kernel = harmonic_kernel(n, k)?;
        dims.push(kernel.len());
        if verify {
            let cand: Vec<ExtPolynomial> = basis.degree(k).map(|(_, p)| p.clone()).collect();
            let harmonic = cand.iter().all(is_harmonic);
            let independent = rank(&cand) == cand.len();
            let spans = cand.len() == kernel.len() && rank(cand.iter().chain(&kernel)) == kernel.len();
            let pass = harmonic && independent && spans;
            ok &= pass;
            writeln!(
                notes,
                "degree {k}: harmonic={harmonic} independent={independent} spans_kernel={spans} -> {}",
                if pass { "ok" } else { "FAIL" }
            )
            .unwrap();
        }
    }
    let selected: Vec<_> =
        basis.elements().iter().filter(|(a, _)| degree.is_none_or(|k| a.ones() == k)).collect();
    let out = if json {
        let items: Vec<_> = selected
            .iter()
            .map(|(a, p)| json!({ "alpha": a.to_string(), "pairing": pairing_from_ballot(a).map(|c| c.to_string()).unwrap_or_default(), "poly": to_json(p) }))
            .collect();
        let mut v = json!({ "n": n, "degrees": degrees, "kernel_dims": dims, "basis": items });
        if verify {
            v["verified"] = json!(ok);
        }
        json_line(v)
    } else {
        let mut out = String::new();
        for (a, p) in &selected {
            writeln!(out, "{a}: {p}").unwrap();
        }
        writeln!(out, "kernel dims (degrees {}): {}", join(&degrees), join(&dims)).unwrap();
        out.push_str(&notes);
        out
    };
    if ok {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Counterexample or summary.
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, failure: Option<String>, summary: String) -> CheckResult {
        match failure {
            None => CheckResult { name: name.into(), passed: true, detail: summary },
            Some(f) => CheckResult { name: name.into(), passed: false, detail: f },
        }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn mul_kernel(a: &Monomial, b: &Monomial) -> Option<(Sign, Monomial)> {
    a.mul(b).expect("same ambient n")
}

pub fn verify_suite(n_max: usize) -> VerifyReport {
    verify_suite_seeded(n_max, 0, mul_kernel)
}

/// [`verify_suite`] with every product in the multiplication checks routed
/// through `kernel`, for mutation testing.
pub fn verify_suite_with_kernel(n_max: usize, kernel: MonomialProduct) -> VerifyReport {
    verify_suite_seeded(n_max, 0, kernel)
}

pub fn random_poly(rng: &mut impl Rng, n: usize, max_terms: usize) -> ExtPolynomial {
    let count = rng.gen_range(0..=max_terms);
    let terms = (0..count).map(|_| {
        let bits = if n == 0 { 0 } else { rng.gen::<u64>() & (u64::MAX >> (64 - n)) };
        let c = Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=3).into());
        (Monomial::from_bits(n, bits).expect("masked to n bits"), c)
    });
    ExtPolynomial::from_terms(n, terms).expect("terms share n")
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, f: impl FnMut(T) -> Option<String>) -> Option<String> {
    items.into_iter().find_map(f)
}

pub fn verify_suite_seeded(n_max: usize, seed: u64, kernel: MonomialProduct) -> VerifyReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let ns = 0..=n_max;
    let mut checks = Vec::new();
    let mul = |p: &ExtPolynomial, q: &ExtPolynomial| p.mul_with(q, kernel).expect("same n");

    let fail = first_failure(ns.clone(), |n| {
        for _ in 0..10 {
            let (a, b, c) = (random_poly(&mut rng, n, 4), random_poly(&mut rng, n, 4), random_poly(&mut rng, n, 4));
            if mul(&mul(&a, &b), &c) != mul(&a, &mul(&b, &c)) {
                return Some(format!("n={n}: ({a})({b})({c}) not associative"));
            }
        }
        None
    });
    checks.push(CheckResult::new("mul_associative", fail, format!("random triples, n <= {n_max}")));

    let fail = first_failure(ns.clone(), |n| {
        for _ in 0..10 {
            let (p, q) = (random_poly(&mut rng, n, 4), random_poly(&mut rng, n, 4));
            let (i, j) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
            let (pi, qj) = (p.homogeneous_part(i), q.homogeneous_part(j));
            let lhs = mul(&pi, &qj);
            let rhs = mul(&qj, &pi);
            let rhs = if i * j % 2 == 1 { -&rhs } else { rhs };
            if lhs != rhs {
                return Some(format!("n={n}: degrees {i},{j}: ({pi})({qj})"));
            }
        }
        None
    });
    checks.push(CheckResult::new("graded_commutative", fail, format!("random homogeneous pairs, n <= {n_max}")));

    let fail = first_failure(ns.clone(), |n| {
        let f: Vec<ExtPolynomial> = (0..=n).map(|r| fundamental(n, r).expect("n within cap")).collect();
        for r in 0..=n {
            for s in 0..=n - r {
                let a = product_coefficient(r, s);
                let lhs = mul(&f[r], &f[s]);
                let rhs = f[r + s].scale(&Rational::from_integer(a.clone()));
                if lhs != rhs {
                    return Some(format!("n={n}: F_{r} F_{s} != {a} F_{}, a_{{{r},{s}}} mismatch", r + s));
                }
                match product_coefficient_bruteforce(r, s) {
                    Ok(b) if a == b.into() => {}
                    other => return Some(format!("a_{{{r},{s}}} = {a} but brute force gives {other:?}")),
                }
            }
        }
        None
    });
    checks.push(CheckResult::new("product_rule", fail, format!("F_r F_s = a_rs F_(r+s), r + s <= n <= {n_max}")));

    let fail = first_failure(ns.clone(), |n| {
        let table = generating_series_coefficients(n);
        first_failure(0..=n, |r| {
            first_failure(0..=n - r, |s| {
                (table[r][s] != product_coefficient(r, s))
                    .then(|| format!("series coefficient ({r},{s}) = {}", table[r][s]))
            })
        })
    });
    checks.push(CheckResult::new("generating_series", fail, format!("total degree <= {n_max}")));

    let fail = first_failure(ns.clone(), |n| {
        first_failure(0..=n, |r| {
            let f = fundamental(n, r).expect("n within cap");
            (!is_quasisymmetric(&f)).then(|| format!("F_{r} in R_{n} not quasisymmetric"))
        })
    });
    checks.push(CheckResult::new("fundamental_quasisymmetric", fail, format!("n <= {n_max}")));

    let fail = first_failure(ns.clone(), |n| {
        for _ in 0..10 {
            let p = random_poly(&mut rng, n, 5);
            for i in 1..=n {
                for j in 1..=n {
                    let a = p.partial(i).and_then(|x| x.partial(j)).expect("index in range");
                    let b = p.partial(j).and_then(|x| x.partial(i)).expect("index in range");
                    if a != -&b {
                        return Some(format!("n={n}: d{i} d{j} ({p})"));
                    }
                }
            }
            let ip = ExtPolynomial::inner_product(&p, &p).expect("same n");
            let dot = ExtPolynomial::coefficient_dot(&p, &p).expect("same n");
            if ip != dot {
                return Some(format!("n={n}: <p,p> = {ip} but coefficient dot = {dot} for {p}"));
            }
            if p.bar().bar() != p {
                return Some(format!("n={n}: bar not an involution on {p}"));
            }
        }
        None
    });
    checks.push(CheckResult::new("derivations_and_pairing", fail, format!("random polynomials, n <= {n_max}")));

    let fail = first_failure(ns.clone(), |n| {
        let counts = match enumerate(n, SeqFilter::Ballot) {
            Ok(seqs) => seqs.iter().fold(vec![0u64; n / 2 + 1], |mut acc, a| {
                acc[a.ones()] += 1;
                acc
            }),
            Err(e) => return Some(e.to_string()),
        };
        let h = hilbert_series(n).expect("n within cap");
        let total: u64 = h.iter().sum();
        if total != binomial(n as u64, (n / 2) as u64).expect("small") {
            return Some(format!("n={n}: Hilbert series {h:?} does not sum to the central binomial"));
        }
        first_failure(0..=n / 2, |k| {
            let f = f_shape(n, k).expect("k <= n");
            (counts[k] != f || h[k] != f).then(|| format!("n={n}, k={k}: ballot {} hilbert {} f {f}", counts[k], h[k]))
        })
    });
    checks.push(CheckResult::new("ballot_counts", fail, format!("n <= {n_max}")));

    let fail = first_failure(ns.clone(), |n| {
        for c in noncrossing_pairings(n).expect("n within cap") {
            if !is_harmonic(&delta(&c, n).expect("indices in range")) {
                return Some(format!("Delta_{c} in R_{n} not harmonic"));
            }
        }
        let basis = harmonic_candidate_basis(n).expect("n within cap");
        for (a, p) in basis.elements() {
            if smallest_lex_monomial(p) != Some(a.to_monomial()) {
                return Some(format!("Delta for {a} has smallest monomial {:?}", smallest_lex_monomial(p)));
            }
        }
        first_failure(0..=n / 2, |k| {
            let ker = harmonic_kernel(n, k).expect("k <= n");
            let cand: Vec<ExtPolynomial> = basis.degree(k).map(|(_, p)| p.clone()).collect();
            (cand.len() != ker.len() || rank(cand.iter().chain(&ker)) != ker.len() || rank(&cand) != cand.len())
                .then(|| format!("n={n}, k={k}: {} candidates vs kernel dim {}", cand.len(), ker.len()))
        })
    });
    checks.push(CheckResult::new("harmonics", fail, format!("n <= {n_max}")));

    let fail = first_failure(ns.clone(), |n| {
        let mut family = GFamily::new(n).expect("n within cap");
        for r in 1..=n {
            let f = fundamental(n, r).expect("n within cap");
            if !family.in_ideal(&f).expect("same n") {
                return Some(format!("F_{r} not in I_{n}"));
            }
        }
        let basis = family.ideal_basis().expect("n within cap");
        if rank(basis.iter().map(|(_, g)| g)) + quotient_basis(n).expect("n within cap").len() != 1 << n {
            return Some(format!("n={n}: rank(A_n) + #ballot != 2^n"));
        }
        for (a, g) in &basis {
            for i in 1..=n {
                let prod = g.left_mul_monomial(&Monomial::var(n, i).expect("in range")).expect("same n");
                if !family.in_ideal(&prod).expect("same n") {
                    return Some(format!("t{i} G_{a} not in I_{n}"));
                }
            }
        }
        let minimal = family.minimal_groebner().expect("n within cap");
        for _ in 0..20 {
            let p = random_poly(&mut rng, n, 6);
            let nf = family.normal_form(&p).expect("same n");
            if nf.reconstruct(&mut family).expect("same n") != p {
                return Some(format!("decomposition of {p} does not reconstruct it"));
            }
            if family.normal_form(&nf.normal_form).expect("same n").normal_form != nf.normal_form {
                return Some(format!("normal form of {p} is not idempotent"));
            }
            if reduce_by(&p, &minimal).expect("same n").is_zero() != nf.in_ideal() {
                return Some(format!("minimal basis and normal form disagree on {p}"));
            }
        }
        None
    });
    checks.push(CheckResult::new("ideal_structure", fail, format!("n <= {n_max}")));

    let fail = first_failure(1..=n_max, |n| {
        first_failure(enumerate(n - 1, SeqFilter::All).expect("n within cap"), |a| {
            (!shift_identity_check(&a).expect("n within cap")).then(|| format!("shift identity fails for {a}"))
        })
    });
    checks.push(CheckResult::new("shift_identities", fail, format!("n <= {n_max}")));

    let fail = first_failure(1..=n_max, |n| {
        let r = check_freeness(n).expect("n within cap");
        if !r.holds() {
            return Some(format!("{r:?}"));
        }
        let m = check_reduce_mod_j_multiplicative(n, 10, &mut rng);
        (!m.passed).then_some(m.detail)
    });
    checks.push(CheckResult::new("sym_coinvariants", fail, format!("1 <= n <= {n_max}")));

    VerifyReport { n_max, checks }
}

fn check_reduce_mod_j_multiplicative(n: usize, trials: usize, rng: &mut impl Rng) -> CheckResult {
    let fail = (0..trials).find_map(|_| {
        let (p, q) = (random_poly(rng, n, 5), random_poly(rng, n, 5));
        let lhs = reduce_mod_j(&(&p * &q)).ok()?;
        let rhs = &reduce_mod_j(&p).ok()? * &reduce_mod_j(&q).ok()?;
        (lhs != rhs).then(|| format!("n={n}: reduce(pq) != reduce(p) reduce(q) for p = {p}, q = {q}"))
    });
    CheckResult::new("reduce_mod_j_multiplicative", fail, format!("{trials} random pairs in R_{n}"))
}
