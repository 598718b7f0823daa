//! `hgauss`: build, inspect and check modular data and their higher Gauss sums.

mod catalog;
mod parse;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use hgauss_core::constructors::{
    abelian_double, condense_pointed, double_gauss_sum, kac_peterson, pointed, GroupSpec, LieDatum, LieType,
    MetricGroup,
};
use hgauss_core::invariants::{self, gauss_report, Options, Verdict, Xi};
use hgauss_core::moddata::PremodularData;
use hgauss_core::reproduce::{reproduce, EXAMPLES};
use hgauss_core::witt::{signature, witt_obstruction, WittOutcome};
use hgauss_core::fixtures;
use serde::Serialize;

use catalog::Catalog;

#[derive(Parser)]
#[command(name = "hgauss", version, about = "Higher Gauss sums and central charges of modular data")]
struct Cli {
    /// Starting precision for numeric sign decisions (results stay exact).
    #[arg(long, global = true, default_value_t = 128)]
    precision_bits: u32,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Catalog directory for built files.
    #[arg(long, global = true, default_value = "catalog")]
    catalog: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a category file into the catalog.
    #[command(subcommand)]
    Build(Build),
    /// Table of tau_n and xi_n.
    Invariants {
        #[arg(long)]
        category: PathBuf,
        #[arg(long, default_value = "1..12")]
        n_range: String,
        /// Also evaluate n sharing a factor with the T-order.
        #[arg(long)]
        allow_noncoprime: bool,
    },
    /// Run one of the theorem suites.
    Verify(Verify),
    /// Condense a metric group by an isotropic subgroup.
    Condense {
        #[arg(long)]
        metric_group: PathBuf,
        /// Generator of H, e.g. "(1,0)"; repeat for more.
        #[arg(long = "H", value_name = "ELEMENT")]
        h: Vec<String>,
        /// Write the quotient metric group here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Deligne product of two categories.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Reverse braiding.
    Rev {
        a: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// Fusion rules from the Verlinde formula.
    Fusion { a: PathBuf },
    /// Compare higher central charges of two pseudounitary categories.
    WittCompare { a: PathBuf, b: PathBuf },
    /// xi_n for all n coprime to the T-order.
    WittSignature { a: PathBuf },
    /// Rerun a worked example: one of ty-table, so5-xi-table, g2-witt,
    /// wpt2-generators, h27, zp-gauss, lens, or all.
    Reproduce { id: String },
    /// Validate category files; with no arguments, the whole catalog.
    Validate { files: Vec<PathBuf> },
}

#[derive(Subcommand)]
enum Build {
    /// Pointed category C(G, q) from generator data or a metric group file.
    Pointed {
        /// Cyclic orders, e.g. "4,4".
        #[arg(long, value_delimiter = ',')]
        orders: Vec<u64>,
        /// q on each generator, e.g. "zeta5^1".
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        q: Vec<String>,
        /// b on a generator pair as "i,j,ROOT"; repeat for more.
        #[arg(long, allow_hyphen_values = true)]
        b: Vec<String>,
        #[arg(long, conflicts_with_all = ["orders", "q", "b"])]
        metric_group: Option<PathBuf>,
        /// Also write the metric group JSON here.
        #[arg(long)]
        save_metric: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Kac-Peterson modular data of a rank <= 2 Lie algebra.
    KacPeterson {
        #[arg(long = "type")]
        lie_type: LieType,
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Drinfeld double of an abelian group, as a pointed category.
    AbelianDouble {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Gauss sums of the double of a finite group from counting only.
    Double {
        /// S3, D8, Q8 or a group JSON file.
        #[arg(long)]
        group: String,
        #[command(flatten)]
        out: Output,
    },
    /// A bundled data set: ds3.
    Fixture {
        id: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Category name; also used for the file name.
    #[arg(long)]
    name: Option<String>,
    /// File name inside the catalog.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct Verify {
    #[arg(long, value_parser = ["galois", "anomaly", "center", "condense", "first-second"])]
    suite: String,
    #[arg(long)]
    category: Option<PathBuf>,
    #[arg(long)]
    metric_group: Option<PathBuf>,
    #[arg(long = "H", value_name = "ELEMENT")]
    h: Vec<String>,
    /// Values of a for the Galois suite.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    a: Vec<i64>,
    /// Report non-coprime n instead of rejecting them.
    #[arg(long)]
    allow_noncoprime: bool,
}

/// Something a command wants to report, in either format.
struct Report {
    text: String,
    json: serde_json::Value,
    pass: bool,
}

impl Report {
    fn new(text: String, json: impl Serialize, pass: bool) -> Result<Self> {
        Ok(Report { text, json: serde_json::to_value(json)?, pass })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("json value"));
            } else {
                print!("{}", report.text);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Report> {
    let bits = cli.precision_bits;
    let mut cat = Catalog::open(&cli.catalog)?;
    match &cli.command {
        Command::Build(b) => build(&mut cat, b),
        Command::Invariants { category, n_range, allow_noncoprime } => {
            let data = cat.load(category)?;
            invariants_table(&data, parse::n_range(n_range)?, *allow_noncoprime, bits)
        }
        Command::Verify(v) => verify(&cat, v, bits),
        Command::Condense { metric_group, h, out } => {
            let mg = load_metric(&cat, metric_group)?;
            let gens = h.iter().map(|s| parse::element(s)).collect::<Result<Vec<_>>>()?;
            let q = condense_pointed(&mg, &gens)?;
            let json = serde_json::to_string_pretty(&q)? + "\n";
            let mut text = format!(
                "|G| = {}, |H| = {}, |H^perp/H| = {}, orders {:?}\n",
                mg.order(),
                mg.subgroup(&gens).len(),
                q.order(),
                q.orders()
            );
            match out {
                Some(p) => {
                    fs::write(p, &json).with_context(|| format!("writing {}", p.display()))?;
                    text.push_str(&format!("wrote {}\n", p.display()));
                }
                None => text.push_str(&json),
            }
            Report::new(text, &q, true)
        }
        Command::Product { a, b, name } => {
            let p = cat.load(a)?.deligne_product(&cat.load(b)?);
            let p = match name {
                Some(n) => p.with_name(n),
                None => p,
            };
            store(&mut cat, &p, None)
        }
        Command::Rev { a, name } => {
            let r = cat.load(a)?.reverse();
            let r = match name {
                Some(n) => r.with_name(n),
                None => r,
            };
            store(&mut cat, &r, None)
        }
        Command::Fusion { a } => fusion(&cat.load(a)?),
        Command::WittCompare { a, b } => {
            let v = witt_obstruction(&cat.load(a)?, &cat.load(b)?, bits)?;
            let text = match &v.outcome {
                WittOutcome::Distinguished { n, xi_a, xi_b } => format!(
                    "{} vs {}: distinguished at n = {n} ({xi_a} vs {xi_b}); not Witt equivalent\n",
                    v.a, v.b
                ),
                WittOutcome::Inconclusive => {
                    format!("{} vs {}: inconclusive after {} values of n ({})\n", v.a, v.b, v.compared, v.note)
                }
            };
            Report::new(text, &v, true)
        }
        Command::WittSignature { a } => {
            let s = signature(&cat.load(a)?, bits)?;
            let mut text = format!("{} (T-order {})\n", s.name, s.t_order);
            for (n, z) in &s.entries {
                text.push_str(&format!("  xi_{n} = {z}\n"));
            }
            Report::new(text, &s.entries, true)
        }
        Command::Reproduce { id } => run_reproduce(id, bits),
        Command::Validate { files } => validate(&cat, files),
    }
}

fn load_metric(cat: &Catalog, path: &Path) -> Result<MetricGroup> {
    let (path, text) = cat.read(path)?;
    let mut mg: MetricGroup =
        serde_json::from_str(&text).with_context(|| format!("parsing metric group {}", path.display()))?;
    mg.prepare().with_context(|| format!("invalid metric group {}", path.display()))?;
    Ok(mg)
}

fn store(cat: &mut Catalog, data: &PremodularData, file: Option<&str>) -> Result<Report> {
    let file = match file {
        Some(f) => f.to_string(),
        None => format!("{}.json", parse::file_stem(data.name())),
    };
    let path = cat.write_category(data, &file)?;
    let text = format!("wrote {} ({}, rank {})\n", path.display(), data.name(), data.rank());
    let json = serde_json::json!({"file": path, "name": data.name(), "rank": data.rank()});
    Report::new(text, json, true)
}

fn named(data: PremodularData, out: &Output) -> PremodularData {
    match &out.name {
        Some(n) => data.with_name(n),
        None => data,
    }
}

fn build(cat: &mut Catalog, b: &Build) -> Result<Report> {
    let (data, out) = match b {
        Build::Pointed { orders, q, b, metric_group, save_metric, out } => {
            let mg = match metric_group {
                Some(p) => load_metric(cat, p)?,
                None => {
                    if orders.is_empty() || orders.len() != q.len() {
                        bail!("need one --q value per entry of --orders");
                    }
                    let q = q.iter().map(|s| parse::root_of_unity(s)).collect::<Result<Vec<_>>>()?;
                    let b = b.iter().map(|s| parse::b_entry(s)).collect::<Result<Vec<_>>>()?;
                    MetricGroup::new(orders.clone(), q, b)?
                }
            };
            if let Some(p) = save_metric {
                fs::write(p, serde_json::to_string_pretty(&mg)? + "\n")
                    .with_context(|| format!("writing {}", p.display()))?;
            }
            (pointed(&mg), out)
        }
        Build::KacPeterson { lie_type, level, out } => (kac_peterson(&LieDatum::new(*lie_type, *level)?)?, out),
        Build::AbelianDouble { orders, out } => {
            let d = pointed(&abelian_double(orders)?);
            let name = format!("Z(Vec_{})", orders.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x"));
            (d.with_name(name), out)
        }
        Build::Double { group, out } => return build_double(cat, group, out),
        Build::Fixture { id, out } => match id.to_ascii_lowercase().as_str() {
            "ds3" | "d(s3)" => (fixtures::drinfeld_double_s3(), out),
            other => bail!("unknown fixture {other:?}; available: ds3"),
        },
    };
    store(cat, &named(data, out), out.out.as_deref())
}

#[derive(Serialize)]
struct CountingEntry {
    name: String,
    group: String,
    order: usize,
    note: String,
    /// `[n, tau_n]` for `1 <= n <= 2|G|`.
    tau: Vec<(i64, u64)>,
}

fn build_double(cat: &mut Catalog, group: &str, out: &Output) -> Result<Report> {
    let (g, label) = match fixtures::group(group) {
        Some(g) => (g?, group.to_ascii_uppercase()),
        None => {
            let (path, text) = cat.read(Path::new(group))?;
            let spec: GroupSpec =
                serde_json::from_str(&text).with_context(|| format!("parsing group {}", path.display()))?;
            let stem = path.file_stem().map_or("G".into(), |s| s.to_string_lossy().into_owned());
            (spec.build()?, stem)
        }
    };
    let name = out.name.clone().unwrap_or_else(|| format!("D({label})"));
    let entry = CountingEntry {
        name: name.clone(),
        group: label.clone(),
        order: g.order(),
        note: "counting oracle only: modular data of a nonabelian double is not constructed; \
               tau_n = |G| #{x : x^n = e}"
            .into(),
        tau: (1..=2 * g.order() as i64).map(|n| (n, double_gauss_sum(&g, n))).collect(),
    };
    let text = serde_json::to_string_pretty(&entry)? + "\n";
    let file = out.out.clone().unwrap_or_else(|| format!("{}.counting.json", parse::file_stem(&name)));
    let path = cat.write_counting(&name, &file, &format!("double group={label}"), &text)?;
    let mut msg = format!("wrote {} ({name}, counting only)\n", path.display());
    for (n, t) in &entry.tau {
        msg.push_str(&format!("  tau_{n} = {t}\n"));
    }
    Report::new(msg, &entry, true)
}

#[derive(Serialize)]
struct InvariantsRow {
    n: i64,
    coprime: bool,
    report: Option<invariants::GaussReport>,
}

fn show_xi(xi: &Xi) -> String {
    match xi {
        Xi::ExactRoot { root } => root.to_string(),
        Xi::NonRootExact { alpha_minpoly, .. } => format!("not a root of unity; alpha_n has min-poly {alpha_minpoly}"),
        Xi::Undefined => "undefined (tau_n = 0)".into(),
    }
}

fn invariants_table(data: &PremodularData, (lo, hi): (i64, i64), allow: bool, bits: u32) -> Result<Report> {
    let t = data.t_order();
    let mut text = format!("{}: rank {}, T-order {}, dim {}\n", data.name(), data.rank(), t, data.global_dim());
    let mut rows = Vec::new();
    for n in lo..=hi {
        let coprime = hgauss_core::arith::gcd_signed(n, t) == 1;
        if !coprime && !allow {
            text.push_str(&format!("n = {n}: skipped, not coprime to {t} (use --allow-noncoprime)\n"));
            rows.push(InvariantsRow { n, coprime, report: None });
            continue;
        }
        let r = gauss_report(data, n, bits)?;
        text.push_str(&format!("n = {n}: tau = {}, |tau|^2 = {}, xi = {}\n", r.tau, r.abs_sq, show_xi(&r.xi)));
        rows.push(InvariantsRow { n, coprime, report: Some(r) });
    }
    let reports: Vec<_> = rows.into_iter().filter_map(|r| r.report).collect();
    Report::new(text, &reports, true)
}

fn verdict_text(v: &Verdict) -> String {
    let failed = v.failures().count();
    let mut text = format!(
        "{} on {}: {} ({} cases, {} failed)\n",
        v.check,
        v.category,
        if v.pass { "PASS" } else { "FAIL" },
        v.cases.len(),
        failed
    );
    for c in v.failures() {
        let a = c.a.map(|a| format!(" a = {a}")).unwrap_or_default();
        text.push_str(&format!("  n = {}{a}: {}\n", c.n, c.notes.join("; ")));
        if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
            text.push_str(&format!("    lhs = {l}\n    rhs = {r}\n"));
        }
    }
    for n in &v.notes {
        text.push_str(&format!("  note: {n}\n"));
    }
    text
}

fn verify(cat: &Catalog, v: &Verify, bits: u32) -> Result<Report> {
    let opts = Options { bits, allow_noncoprime: v.allow_noncoprime };
    let category = || -> Result<PremodularData> {
        let p = v.category.as_ref().ok_or_else(|| anyhow!("--category is required for suite {}", v.suite))?;
        cat.load(p)
    };
    let verdict = match v.suite.as_str() {
        "galois" => invariants::verify_galois_theorem(&category()?, &v.a, &opts)?,
        "anomaly" => invariants::verify_anomaly_galois(&category()?, &opts)?,
        "center" => invariants::verify_center(&category()?, &opts)?,
        "first-second" => invariants::verify_first_second(&category()?)?,
        "condense" => {
            let p = v.metric_group.as_ref().ok_or_else(|| anyhow!("--metric-group is required for suite condense"))?;
            let mg = load_metric(cat, p)?;
            let gens = v.h.iter().map(|s| parse::element(s)).collect::<Result<Vec<_>>>()?;
            invariants::verify_condensation(&mg, &gens, &opts)?
        }
        other => bail!("unknown suite {other}"),
    };
    Report::new(verdict_text(&verdict), &verdict, verdict.pass)
}

fn fusion(data: &PremodularData) -> Result<Report> {
    let f = data.verlinde_fusion()?;
    let labels = data.labels();
    let mut text = String::new();
    for i in 0..data.rank() {
        for j in i..data.rank() {
            let terms: Vec<String> = f
                .decompose(i, j)
                .into_iter()
                .map(|(k, m)| if m == 1 { labels[k].clone() } else { format!("{m} {}", labels[k]) })
                .collect();
            text.push_str(&format!("{} x {} = {}\n", labels[i], labels[j], terms.join(" + ")));
        }
    }
    let json = serde_json::json!({"labels": labels, "N": f.to_nested()});
    Report::new(text, json, true)
}

fn run_reproduce(id: &str, bits: u32) -> Result<Report> {
    let ids: Vec<&str> = if id == "all" { EXAMPLES.to_vec() } else { vec![id] };
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut pass = true;
    for id in ids {
        let r = reproduce(id, bits)?;
        text.push_str(&format!("{}: {}\n", r.id, if r.pass { "PASS" } else { "FAIL" }));
        for l in &r.lines {
            text.push_str(&format!(
                "  [{}] {}: expected {}, computed {}\n",
                if l.pass { "ok" } else { "MISMATCH" },
                l.item,
                l.expected,
                l.computed
            ));
        }
        pass &= r.pass;
        reports.push(r);
    }
    Report::new(text, &reports, pass)
}

#[derive(Serialize)]
struct Validation {
    file: PathBuf,
    valid: bool,
    problems: Vec<String>,
}

fn validate(cat: &Catalog, files: &[PathBuf]) -> Result<Report> {
    let targets: Vec<(PathBuf, bool)> = if files.is_empty() {
        if cat.entries().is_empty() {
            bail!("catalog {} has no entries", cat.dir().display());
        }
        cat.entries().iter().map(|e| (cat.dir().join(&e.file), e.kind == "category")).collect()
    } else {
        files.iter().map(|f| (f.clone(), true)).collect()
    };
    let mut out = Vec::new();
    for (file, is_category) in targets {
        let mut problems = Vec::new();
        match cat.read(&file) {
            Err(e) => problems.push(format!("{e:#}")),
            Ok((_, text)) if is_category => {
                if let Err(e) = PremodularData::from_json(&text) {
                    problems.push(e.to_string());
                }
            }
            Ok(_) => {}
        }
        out.push(Validation { file, valid: problems.is_empty(), problems });
    }
    let mut text = String::new();
    for v in &out {
        if v.valid {
            text.push_str(&format!("{}: ok\n", v.file.display()));
        } else {
            text.push_str(&format!("{}: INVALID\n", v.file.display()));
            for p in &v.problems {
                text.push_str(&format!("  {p}\n"));
            }
        }
    }
    let pass = out.iter().all(|v| v.valid);
    Report::new(text, &out, pass)
}
