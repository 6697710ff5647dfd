//! Command-line front end for the colored composition poset.
//!
//! Exit status: 0 on success, 1 on domain errors or failed
//! verification sweeps, 2 on usage errors. Output is byte-deterministic
//! for fixed inputs: everything iterates in canonical order.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use colcomp::composition::{count_compositions, enumerate_compositions};
use colcomp::descent::{
    chain_of_permutation, color_composition, colored_descent_composition,
    descent_set_of_composition, permutation_of_chain,
};
use colcomp::permutation::{count_permutations, enumerate_permutations};
use colcomp::poset::{dot_label, down_covers, hasse_dot, interval, maximal_chains, up_covers};
use colcomp::qsym::{fundamental_polynomial, verify_pieri, verify_shuffle_product};
use colcomp::shelling::{
    label_chain, lex_first_chain, lower_mobius_table, mobius_closed_form, mobius_recursive,
    mobius_series, mobius_via_labels, support_series_coefficients, truncated_mobius,
    truncated_mobius_formula, LabeledChain,
};
use colcomp::{ColoredComposition, ColoredPermutation};

#[derive(Parser)]
#[command(
    name = "colcomp",
    version,
    about = "The poset of m-colored integer compositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Dot,
    Count,
}

#[derive(Args)]
struct FormatArg {
    /// Output format; COLCOMP_FORMAT sets the default, the flag wins.
    #[arg(long, value_enum, env = "COLCOMP_FORMAT", default_value = "text")]
    format: OutFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Labels,
    Recursion,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Counts,
    Covers,
    Bijection,
    Pieri,
    Shuffle,
    Cl,
    Mobius,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List all m-colored compositions of n in canonical order.
    Enumerate {
        #[arg(long)]
        m: u8,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Covers of a composition, upward by default.
    Covers {
        #[arg(long)]
        m: u8,
        /// Composition in canonical text, e.g. "2c0,1c1".
        #[arg(long)]
        comp: String,
        /// List down-covers instead of up-covers.
        #[arg(long)]
        down: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// DOT digraph of all compositions of weight <= n with cover edges.
    Hasse {
        #[arg(long)]
        m: u8,
        #[arg(long)]
        n: u32,
        /// Only `dot` is supported here.
        #[arg(long, value_enum, env = "COLCOMP_FORMAT", default_value = "dot")]
        format: OutFormat,
    },
    /// Maximal chains of the interval [from, to], top first.
    Chains {
        #[arg(long)]
        m: u8,
        /// Interval bottom; empty for the empty composition.
        #[arg(long, default_value = "")]
        from: String,
        /// Interval top.
        #[arg(long)]
        to: String,
        /// Attach urn-model labels to each chain.
        #[arg(long)]
        labeled: bool,
        /// Emit only the lexicographically first chain with its label.
        #[arg(long)]
        lex_first: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// The saturated chain of a colored permutation, top first.
    PermToChain {
        #[arg(long)]
        m: u8,
        /// Permutation in canonical text, e.g. "2c1,1c0,3c1".
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Rebuild the permutation of a chain (JSON array, top first, on stdin).
    ChainToPerm {
        #[command(flatten)]
        format: FormatArg,
    },
    /// Descent statistics of a colored permutation.
    Descents {
        #[arg(long)]
        m: u8,
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Möbius function of [from, to], or rank-sum series with --series.
    Mobius {
        #[arg(long)]
        m: u8,
        /// Interval bottom; empty for the empty composition.
        #[arg(long, default_value = "")]
        from: String,
        /// Interval top; required unless --series is given.
        #[arg(long)]
        to: Option<String>,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Emit signed and unsigned rank sums up to --n instead.
        #[arg(long)]
        series: bool,
        /// Maximum rank for --series.
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Colored quasisymmetric polynomials and their identities.
    #[command(subcommand)]
    Qsym(QsymCommand),
    /// Exhaustive property sweeps; nonzero exit on the first failure.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        m: u8,
        /// Rank bound for the sweeps.
        #[arg(long, default_value_t = 4)]
        n: u32,
        /// Guard for factorial-scale enumerations.
        #[arg(long, default_value_t = 10_000_000)]
        max_size: u64,
    },
}

#[derive(Subcommand)]
enum QsymCommand {
    /// Dump a fundamental polynomial as canonical JSON.
    Fundamental {
        #[arg(long)]
        m: u8,
        #[arg(long)]
        comp: String,
        /// Position truncation N.
        #[arg(long)]
        positions: u32,
    },
    /// Check the Pieri expansion at one composition.
    Pieri {
        #[arg(long)]
        m: u8,
        #[arg(long)]
        comp: String,
        /// Position truncation; defaults to weight + 1.
        #[arg(long)]
        positions: Option<u32>,
    },
    /// Check the shuffle product for two permutations.
    Shuffle {
        #[arg(long)]
        m: u8,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        /// Position truncation; defaults to |u| + |v|.
        #[arg(long)]
        positions: Option<u32>,
    },
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<colcomp::Error> for Failure {
    fn from(err: colcomp::Error) -> Self {
        Failure::Domain(err.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(err: serde_json::Error) -> Self {
        Failure::Domain(format!("invalid JSON: {err}"))
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
    }
}

fn human(comp: &ColoredComposition) -> String {
    dot_label(comp)
}

fn reject_format(format: OutFormat, allowed: &[OutFormat]) -> CliResult {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "format {format:?} is not supported by this command"
        )))
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Enumerate { m, n, format } => enumerate(m, n, format.format),
        Command::Covers {
            m,
            comp,
            down,
            format,
        } => covers(m, &comp, down, format.format),
        Command::Hasse { m, n, format } => {
            reject_format(format, &[OutFormat::Dot])?;
            print!("{}", hasse_dot(m, n)?);
            Ok(())
        }
        Command::Chains {
            m,
            from,
            to,
            labeled,
            lex_first,
            format,
        } => chains(m, &from, &to, labeled, lex_first, format.format),
        Command::PermToChain { m, perm, format } => perm_to_chain(m, &perm, format.format),
        Command::ChainToPerm { format } => chain_to_perm(format.format),
        Command::Descents { m, perm, format } => descents(m, &perm, format.format),
        Command::Mobius {
            m,
            from,
            to,
            method,
            series,
            n,
            format,
        } => mobius(m, &from, to.as_deref(), method, series, n, format.format),
        Command::Qsym(sub) => qsym(sub),
        Command::Verify {
            suite,
            m,
            n,
            max_size,
        } => verify(suite, m, n, max_size),
    }
}

fn enumerate(m: u8, n: u32, format: OutFormat) -> CliResult {
    reject_format(
        format,
        &[OutFormat::Text, OutFormat::Json, OutFormat::Count],
    )?;
    match format {
        OutFormat::Count => println!("{}", count_compositions(m, n)?),
        OutFormat::Text => {
            for comp in enumerate_compositions(m, n)? {
                println!("{}", human(&comp));
            }
        }
        OutFormat::Json => println!("{}", serde_json::to_string(&enumerate_compositions(m, n)?)?),
        OutFormat::Dot => unreachable!("rejected above"),
    }
    Ok(())
}

fn covers(m: u8, comp: &str, down: bool, format: OutFormat) -> CliResult {
    reject_format(
        format,
        &[OutFormat::Text, OutFormat::Json, OutFormat::Count],
    )?;
    let alpha = ColoredComposition::parse(comp, m)?;
    let covers: Vec<ColoredComposition> = if down {
        down_covers(&alpha).into_iter().collect()
    } else {
        up_covers(&alpha).into_iter().collect()
    };
    match format {
        OutFormat::Count => println!("{}", covers.len()),
        OutFormat::Text => {
            for comp in &covers {
                println!("{}", human(comp));
            }
        }
        OutFormat::Json => println!("{}", serde_json::to_string(&covers)?),
        OutFormat::Dot => unreachable!("rejected above"),
    }
    Ok(())
}

fn chain_text(chain: &[ColoredComposition]) -> String {
    chain.iter().map(human).collect::<Vec<_>>().join(" > ")
}

fn labeled_text(lc: &LabeledChain) -> String {
    let labels = lc
        .labels()
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{} | {}", chain_text(lc.chain()), labels)
}

fn chains(
    m: u8,
    from: &str,
    to: &str,
    labeled: bool,
    lex_first: bool,
    format: OutFormat,
) -> CliResult {
    reject_format(
        format,
        &[OutFormat::Text, OutFormat::Json, OutFormat::Count],
    )?;
    let bottom = ColoredComposition::parse(from, m)?;
    let top = ColoredComposition::parse(to, m)?;
    if lex_first {
        let lc = lex_first_chain(&bottom, &top)?;
        match format {
            OutFormat::Count => println!("1"),
            OutFormat::Text => println!("{}", labeled_text(&lc)),
            OutFormat::Json => println!("{}", serde_json::to_string(&lc)?),
            OutFormat::Dot => unreachable!("rejected above"),
        }
        return Ok(());
    }
    let iv = interval(&bottom, &top)?;
    let chains = maximal_chains(&iv);
    match format {
        OutFormat::Count => println!("{}", chains.len()),
        OutFormat::Text => {
            for chain in &chains {
                if labeled {
                    println!("{}", labeled_text(&label_chain(chain)?));
                } else {
                    println!("{}", chain_text(chain));
                }
            }
        }
        OutFormat::Json => {
            if labeled {
                let all: Vec<LabeledChain> = chains
                    .iter()
                    .map(|chain| label_chain(chain))
                    .collect::<Result<_, _>>()?;
                println!("{}", serde_json::to_string(&all)?);
            } else {
                println!("{}", serde_json::to_string(&chains)?);
            }
        }
        OutFormat::Dot => unreachable!("rejected above"),
    }
    Ok(())
}

fn perm_to_chain(m: u8, perm: &str, format: OutFormat) -> CliResult {
    reject_format(format, &[OutFormat::Text, OutFormat::Json])?;
    let u = ColoredPermutation::parse(perm, m)?;
    let mut chain = chain_of_permutation(&u);
    chain.reverse(); // wire order is top first
    match format {
        OutFormat::Text => println!("{}", chain_text(&chain)),
        OutFormat::Json => println!("{}", serde_json::to_string(&chain)?),
        _ => unreachable!("rejected above"),
    }
    Ok(())
}

fn chain_to_perm(format: OutFormat) -> CliResult {
    reject_format(format, &[OutFormat::Text, OutFormat::Json])?;
    let mut input = String::new();
    std::io::stdin()
        .read_to_string(&mut input)
        .map_err(|err| Failure::Domain(format!("cannot read stdin: {err}")))?;
    let mut chain: Vec<ColoredComposition> = serde_json::from_str(&input)?;
    chain.reverse(); // wire order is top first
    let u = permutation_of_chain(&chain)?;
    match format {
        OutFormat::Text => println!("{u}"),
        OutFormat::Json => println!("{}", serde_json::to_string(&u)?),
        _ => unreachable!("rejected above"),
    }
    Ok(())
}

fn descents(m: u8, perm: &str, format: OutFormat) -> CliResult {
    reject_format(format, &[OutFormat::Text, OutFormat::Json])?;
    let u = ColoredPermutation::parse(perm, m)?;
    let refined = colored_descent_composition(&u);
    match format {
        OutFormat::Text => println!("{refined}"),
        OutFormat::Json => {
            #[derive(serde::Serialize)]
            struct DescentPayload {
                colored_descent_composition: ColoredComposition,
                color_composition: ColoredComposition,
                descent_set: std::collections::BTreeSet<u32>,
            }
            let sizes: Vec<u32> = refined.parts().iter().map(|p| p.size).collect();
            let payload = DescentPayload {
                descent_set: descent_set_of_composition(&sizes),
                color_composition: color_composition(&u),
                colored_descent_composition: refined,
            };
            println!("{}", serde_json::to_string(&payload)?);
        }
        _ => unreachable!("rejected above"),
    }
    Ok(())
}

fn mobius(
    m: u8,
    from: &str,
    to: Option<&str>,
    method: Method,
    series: bool,
    n: Option<u32>,
    format: OutFormat,
) -> CliResult {
    reject_format(format, &[OutFormat::Text, OutFormat::Json])?;
    if series {
        let n = n.ok_or_else(|| Failure::Usage("--series needs --n".to_string()))?;
        let series = mobius_series(m, n)?;
        match format {
            OutFormat::Text => {
                let fmt_i = |v: &Vec<i64>| {
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let fmt_u = |v: &Vec<u64>| {
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                println!("signed: {}", fmt_i(&series.signed));
                println!("unsigned: {}", fmt_u(&series.unsigned));
            }
            OutFormat::Json => println!("{}", serde_json::to_string(&series)?),
            _ => unreachable!("rejected above"),
        }
        return Ok(());
    }
    let to = to.ok_or_else(|| Failure::Usage("--to is required without --series".to_string()))?;
    let bottom = ColoredComposition::parse(from, m)?;
    let top = ColoredComposition::parse(to, m)?;
    let use_closed = matches!(method, Method::Closed | Method::All);
    if use_closed && !bottom.is_empty() {
        return Err(Failure::Domain(
            "the closed form applies to intervals starting at the empty composition".to_string(),
        ));
    }
    let mut values: Vec<(&str, i64)> = Vec::new();
    if use_closed {
        if !colcomp::less_or_equal(&bottom, &top)? {
            return Err(Failure::Domain(format!(
                "{:?} is not <= {:?} in the poset",
                bottom.to_string(),
                top.to_string()
            )));
        }
        values.push(("closed", mobius_closed_form(&top)));
    }
    if matches!(method, Method::Labels | Method::All) {
        values.push(("labels", mobius_via_labels(&bottom, &top)?));
    }
    if matches!(method, Method::Recursion | Method::All) {
        values.push(("recursion", mobius_recursive(&bottom, &top)?));
    }
    match format {
        OutFormat::Text => {
            let line = values
                .iter()
                .map(|(_, v)| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            println!("{line}");
        }
        OutFormat::Json => {
            let map: serde_json::Map<String, serde_json::Value> = values
                .iter()
                .map(|(name, v)| (name.to_string(), serde_json::json!(v)))
                .collect();
            println!("{}", serde_json::Value::Object(map));
        }
        _ => unreachable!("rejected above"),
    }
    Ok(())
}

fn qsym(command: QsymCommand) -> CliResult {
    match command {
        QsymCommand::Fundamental { m, comp, positions } => {
            let alpha = ColoredComposition::parse(&comp, m)?;
            let poly = fundamental_polynomial(&alpha, positions)?;
            println!("{}", serde_json::to_string(&poly)?);
            Ok(())
        }
        QsymCommand::Pieri { m, comp, positions } => {
            let alpha = ColoredComposition::parse(&comp, m)?;
            let positions = positions.unwrap_or(alpha.weight() + 1);
            match verify_pieri(&alpha, positions)? {
                None => {
                    println!("ok pieri: {} at N={positions}", human(&alpha));
                    Ok(())
                }
                Some(mismatch) => Err(Failure::Domain(format!(
                    "pieri mismatch at {}: left {} vs right {}",
                    human(&alpha),
                    mismatch.left,
                    mismatch.right
                ))),
            }
        }
        QsymCommand::Shuffle { m, u, v, positions } => {
            let u = ColoredPermutation::parse(&u, m)?;
            let v = ColoredPermutation::parse(&v, m)?;
            let positions = positions.unwrap_or((u.len() + v.len()) as u32);
            match verify_shuffle_product(&u, &v, positions)? {
                None => {
                    println!("ok shuffle: {u} with {v} at N={positions}");
                    Ok(())
                }
                Some(mismatch) => Err(Failure::Domain(format!(
                    "shuffle mismatch for {u} and {v}: left {} vs right {}",
                    mismatch.left, mismatch.right
                ))),
            }
        }
    }
}

fn verify(suite: Suite, m: u8, n: u32, max_size: u64) -> CliResult {
    let run_suite = |wanted: Suite| suite == wanted || suite == Suite::All;
    if run_suite(Suite::Counts) {
        verify_counts(m, n)?;
    }
    if run_suite(Suite::Covers) {
        verify_covers(m, n)?;
    }
    if run_suite(Suite::Bijection) {
        verify_bijection(m, n, max_size)?;
    }
    if run_suite(Suite::Pieri) {
        verify_pieri_sweep(m, n)?;
    }
    if run_suite(Suite::Shuffle) {
        verify_shuffle_sweep(m, n, max_size)?;
    }
    if run_suite(Suite::Cl) {
        verify_cl(m, n)?;
    }
    if run_suite(Suite::Mobius) {
        verify_mobius(m, n)?;
    }
    Ok(())
}

fn fail(message: String) -> Failure {
    Failure::Domain(message)
}

fn verify_counts(m: u8, n_max: u32) -> CliResult {
    for n in 0..=n_max {
        let enumerated = enumerate_compositions(m, n)?.len() as u64;
        let counted = count_compositions(m, n)?;
        if enumerated != counted {
            return Err(fail(format!(
                "FAIL counts: m={m} n={n}: enumerated {enumerated} != counted {counted}"
            )));
        }
    }
    println!("ok counts: enumeration matches m(m+1)^(n-1) for m={m}, n<={n_max}");
    Ok(())
}

fn verify_covers(m: u8, n_max: u32) -> CliResult {
    for n in 0..=n_max {
        for alpha in enumerate_compositions(m, n)? {
            let ups = up_covers(&alpha);
            if ups.len() as u64 != u64::from(m) * u64::from(n + 1) {
                return Err(fail(format!(
                    "FAIL covers: {alpha} has {} up-covers, expected {}",
                    ups.len(),
                    u64::from(m) * u64::from(n + 1)
                )));
            }
            for beta in ups {
                if !down_covers(&beta).contains(&alpha) {
                    return Err(fail(format!(
                        "FAIL covers: {beta} does not down-cover {alpha}"
                    )));
                }
            }
        }
    }
    println!("ok covers: degree m(n+1) and up/down duality for m={m}, n<={n_max}");
    Ok(())
}

fn verify_bijection(m: u8, n_max: u32, max_size: u64) -> CliResult {
    for n in 0..=n_max {
        let perms = enumerate_permutations(m, n, max_size)?;
        let mut image = std::collections::BTreeSet::new();
        for u in &perms {
            let chain = chain_of_permutation(u);
            let back = permutation_of_chain(&chain)
                .map_err(|err| fail(format!("FAIL bijection: inverse failed at {u}: {err}")))?;
            if back != *u {
                return Err(fail(format!(
                    "FAIL bijection: inverse of chain of {u} is {back}"
                )));
            }
            if !image.insert(chain) {
                return Err(fail(format!("FAIL bijection: chain of {u} is not unique")));
            }
        }
        let expected = count_permutations(m, n)?;
        if image.len() as u64 != expected {
            return Err(fail(format!(
                "FAIL bijection: {} distinct chains, expected {expected}",
                image.len()
            )));
        }
    }
    println!("ok bijection: chains invert to permutations for m={m}, n<={n_max}");
    Ok(())
}

fn verify_pieri_sweep(m: u8, n_max: u32) -> CliResult {
    for n in 0..=n_max {
        for alpha in enumerate_compositions(m, n)? {
            if let Some(mismatch) = verify_pieri(&alpha, n + 1)? {
                return Err(fail(format!(
                    "FAIL pieri: {alpha}: coefficient {} vs {}",
                    mismatch.left, mismatch.right
                )));
            }
        }
    }
    println!("ok pieri: degree-1 product expands over up-covers for m={m}, ranks<={n_max}");
    Ok(())
}

fn verify_shuffle_sweep(m: u8, total_max: u32, max_size: u64) -> CliResult {
    for nu in 0..=total_max {
        for nv in 0..=(total_max - nu) {
            let positions = (nu + nv).max(1);
            for u in enumerate_permutations(m, nu, max_size)? {
                for v in enumerate_permutations(m, nv, max_size)? {
                    if let Some(mismatch) = verify_shuffle_product(&u, &v, positions)? {
                        return Err(fail(format!(
                            "FAIL shuffle: u={u} v={v}: coefficient {} vs {}",
                            mismatch.left, mismatch.right
                        )));
                    }
                }
            }
        }
    }
    println!("ok shuffle: product formula for m={m}, |u|+|v|<={total_max}");
    Ok(())
}

fn verify_cl(m: u8, n_max: u32) -> CliResult {
    let empty = ColoredComposition::empty(m)?;
    for n in 0..=n_max {
        for top in enumerate_compositions(m, n)? {
            let whole = interval(&empty, &top)?;
            for bottom in whole.elements() {
                let iv = interval(bottom, &top)?;
                let labeled: Vec<LabeledChain> = maximal_chains(&iv)
                    .iter()
                    .map(|chain| label_chain(chain))
                    .collect::<Result<_, _>>()?;
                let increasing: Vec<&LabeledChain> = labeled
                    .iter()
                    .filter(|lc| lc.is_weakly_increasing())
                    .collect();
                if increasing.len() != 1 {
                    return Err(fail(format!(
                        "FAIL cl: [{bottom}, {top}] has {} weakly increasing chains",
                        increasing.len()
                    )));
                }
                let first = lex_first_chain(bottom, &top)?;
                if increasing[0] != &first {
                    return Err(fail(format!(
                        "FAIL cl: greedy chain is not the increasing chain on [{bottom}, {top}]"
                    )));
                }
                let least = labeled
                    .iter()
                    .map(|lc| lc.labels().to_vec())
                    .min()
                    .expect("interval has chains");
                if first.labels() != &least[..] {
                    return Err(fail(format!(
                        "FAIL cl: greedy label is not lex-least on [{bottom}, {top}]"
                    )));
                }
            }
        }
    }
    println!("ok cl: unique increasing chain = greedy = lex-least for m={m}, ranks<={n_max}");
    Ok(())
}

fn verify_mobius(m: u8, n_max: u32) -> CliResult {
    let empty = ColoredComposition::empty(m)?;
    let table = lower_mobius_table(m, n_max)?;
    for n in 0..=n_max {
        for top in enumerate_compositions(m, n)? {
            let closed = mobius_closed_form(&top);
            if table[&top] != closed {
                return Err(fail(format!(
                    "FAIL mobius: recursion {} vs closed {} at {top}",
                    table[&top], closed
                )));
            }
            let labels = mobius_via_labels(&empty, &top)?;
            if labels != closed {
                return Err(fail(format!(
                    "FAIL mobius: labels {labels} vs closed {closed} at {top}"
                )));
            }
            let whole = interval(&empty, &top)?;
            for bottom in whole.elements() {
                let via_labels = mobius_via_labels(bottom, &top)?;
                let via_recursion = mobius_recursive(bottom, &top)?;
                if via_labels != via_recursion {
                    return Err(fail(format!(
                        "FAIL mobius: labels {via_labels} vs recursion {via_recursion} on [{bottom}, {top}]"
                    )));
                }
            }
        }
    }
    for n in 1..=n_max.min(4) {
        let recursive = truncated_mobius(m, n)?;
        let formula = truncated_mobius_formula(m, n)?;
        if recursive != formula {
            return Err(fail(format!(
                "FAIL mobius: truncated poset {recursive} vs formula {formula} at n={n}"
            )));
        }
    }
    if m >= 2 {
        let series = mobius_series(m, n_max)?;
        let displayed = support_series_coefficients(m, n_max)?;
        if series.unsigned != displayed {
            return Err(fail(
                "FAIL mobius: unsigned series differs from (1+t)/(1-(m-1)t)".to_string(),
            ));
        }
    }
    println!("ok mobius: three routes agree for m={m}, ranks<={n_max}; truncated poset and series check out");
    Ok(())
}
