//! qpos: two-sided bounds on the modulus of quasipositivity of knots.
//!
//! Exit codes: 0 success, 1 domain error (bad object, budget exceeded,
//! failed check), 2 usage error. Output is written in full only after a
//! verb succeeds, so failures never leave partial output behind.

mod checks;
mod input;
mod render;

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use input::Object;
use qpos::batch::map_indexed;
use qpos::bounds::{
    family_generate, family_report, q_report, BoundEntry, FamilySpec, QBoundsInput,
    QBoundsReport, DEFAULT_SEED,
};
use qpos::braid::{braid_as_plat, closed_braid_diagram, BraidWord};
use qpos::diagram::{FramedDiagram, LinkDiagram};
use qpos::fence::{band_rep_to_fence, fence_to_diagram, fence_to_positive_plat, plat_to_fence, ChargedFence};
use qpos::skein::SkeinEngine;

/// Environment variable read when --cache-entries is not given.
const CACHE_ENV: &str = "QPOS_CACHE_ENTRIES";

#[derive(Parser)]
#[command(
    name = "qpos",
    version,
    about = "Bounds on the modulus of quasipositivity of knots",
    long_about = "Computes constructive lower bounds (positive braids, plats, fences) and \
                  polynomial upper bounds (R, mod-2 Kauffman sections, framed polynomial) \
                  for the modulus of quasipositivity, plus conversions, invariants, and \
                  renderings of the underlying objects."
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Convert between braid, bands, plat, fence, and diagram forms
    ///
    /// Braid, bands, plat, and diagram all present a link (the closure,
    /// for braids and bands), and conversions among them preserve it. A
    /// fence presents a surface whose core is the link of interest:
    /// fence <-> bands converts between the two pictures of that same
    /// surface, while braid -> fence and fence -> plat preserve the link
    /// as the fence core.
    #[command(verbatim_doc_comment)]
    Convert {
        #[command(flatten)]
        io: InputArgs,
        /// Target form
        #[arg(long, value_enum)]
        to: Target,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute a polynomial invariant of the presented link
    Invariant {
        /// Which polynomial: P, R, F (mod-2 Kauffman), G0, G1, framed
        #[arg(long, value_enum, ignore_case = true)]
        kind: Kind,
        #[command(flatten)]
        io: InputArgs,
        #[command(flatten)]
        fam: FamilyArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Collect lower and upper bounds for q and reconcile them
    Qbounds {
        #[command(flatten)]
        io: InputArgs,
        #[command(flatten)]
        fam: FamilyArgs,
        /// Also try the framed-polynomial upper bound (costly: it cables
        /// the diagram)
        #[arg(long)]
        framed: bool,
        /// Treat the knot as slice and warn when a bound contradicts that
        #[arg(long)]
        slice: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Generate family members, optionally with their q bounds
    Family {
        #[command(flatten)]
        fam: FamilyArgs,
        /// Report q bounds for each member instead of presentations
        #[arg(long)]
        qbounds: bool,
        /// With --qbounds, also try the framed-polynomial upper bound
        #[arg(long)]
        framed: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the seeded property suite and report pass/fail per property
    Check {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Render a braid, plat, bands, or fence as SVG
    Render {
        #[command(flatten)]
        io: InputArgs,
        #[command(flatten)]
        fam: FamilyArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Read the object from a file, or '-' for standard input
    #[arg(long)]
    input: Option<String>,
    /// The object text itself
    #[arg(long)]
    text: Option<String>,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Output format (defaults: json for reports, plain text for
    /// invariants and conversions, svg for render)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Seed for the randomized property corpora
    #[arg(long)]
    seed: Option<u64>,
    /// Cap on memo-table entries per invariant, 0 disables caching
    /// (QPOS_CACHE_ENTRIES supplies a default)
    #[arg(long)]
    cache_entries: Option<usize>,
    /// Crossing budget for skein recursion; the default refuses diagrams
    /// above 14 crossings for P and 10 for the mod-2 Kauffman polynomial
    #[arg(long)]
    budget_crossings: Option<usize>,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family name: torus2, pretzel, torus-braid, positive-braid
    #[arg(long)]
    family: Option<String>,
    /// torus2 parameter: a single k or an inclusive range a..b
    #[arg(short = 'k', long = "k", allow_hyphen_values = true, value_name = "K")]
    k: Option<String>,
    /// Pretzel tangle sizes r s t
    #[arg(long, num_args = 3, value_names = ["R", "S", "T"])]
    pretzel: Option<Vec<usize>>,
    /// Torus braid o{m,n}: strand count m, word repetitions n
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    torus_braid: Option<Vec<usize>>,
    /// Positive braid letters, e.g. "1 2 1 2"
    #[arg(long, value_name = "LETTERS")]
    positive_braid: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Svg,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Target {
    Braid,
    Bands,
    Plat,
    Fence,
    Diagram,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    P,
    R,
    F,
    G0,
    G1,
    Framed,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::P => "P",
            Kind::R => "R",
            Kind::F => "F",
            Kind::G0 => "G0",
            Kind::G1 => "G1",
            Kind::Framed => "framed",
        }
    }
}

enum CliError {
    Usage(String),
    Domain(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn domain(msg: impl ToString) -> CliError {
    CliError::Domain(msg.to_string())
}

struct RunOutput {
    stdout: String,
    failed: bool,
}

fn ok(stdout: String) -> Result<RunOutput, CliError> {
    Ok(RunOutput { stdout, failed: false })
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.failed {
                std::process::exit(1);
            }
        }
        Err(CliError::Domain(m)) => {
            eprintln!("error: {m}");
            std::process::exit(1);
        }
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<RunOutput, CliError> {
    match cli.verb {
        Verb::Convert { io, to, common } => convert_cmd(&io, to, &common),
        Verb::Invariant { kind, io, fam, common } => invariant_cmd(kind, &io, &fam, &common),
        Verb::Qbounds { io, fam, framed, slice, common } => {
            qbounds_cmd(&io, &fam, framed, slice, &common)
        }
        Verb::Family { fam, qbounds, framed, common } => {
            family_cmd(&fam, qbounds, framed, &common)
        }
        Verb::Check { common } => check_cmd(&common),
        Verb::Render { io, fam, common } => render_cmd(&io, &fam, &common),
    }
}

// ----------------------------------------------------------------------
// Shared plumbing
// ----------------------------------------------------------------------

impl InputArgs {
    fn load(&self) -> Result<Option<String>, CliError> {
        match (&self.input, &self.text) {
            (Some(_), Some(_)) => Err(usage("give either --input or --text, not both")),
            (Some(p), None) if p == "-" => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Domain(format!("cannot read standard input: {e}")))?;
                Ok(Some(buf))
            }
            (Some(p), None) => std::fs::read_to_string(p)
                .map(Some)
                .map_err(|e| CliError::Domain(format!("cannot read {p}: {e}"))),
            (None, Some(t)) => Ok(Some(t.clone())),
            (None, None) => Ok(None),
        }
    }
}

fn make_engine(c: &CommonArgs) -> SkeinEngine {
    let mut eng = SkeinEngine::new();
    if let Some(b) = c.budget_crossings {
        eng = eng.with_budgets(b, b);
    }
    let cache = c
        .cache_entries
        .or_else(|| std::env::var(CACHE_ENV).ok().and_then(|v| v.parse().ok()));
    if let Some(n) = cache {
        eng = eng.with_cache_entries(n);
    }
    eng
}

fn family_specs(f: &FamilyArgs) -> Result<Option<Vec<FamilySpec>>, CliError> {
    let mut picks: Vec<&str> = Vec::new();
    if f.k.is_some() {
        picks.push("torus2");
    }
    if f.pretzel.is_some() {
        picks.push("pretzel");
    }
    if f.torus_braid.is_some() {
        picks.push("torus-braid");
    }
    if f.positive_braid.is_some() {
        picks.push("positive-braid");
    }
    let name: String = match (&f.family, picks.as_slice()) {
        (None, []) => return Ok(None),
        (None, [one]) => (*one).into(),
        (None, _) => return Err(usage("parameters for more than one family were given")),
        (Some(n), _) => {
            let valid = ["torus2", "pretzel", "torus-braid", "positive-braid"];
            if !valid.contains(&n.as_str()) {
                return Err(usage(format!(
                    "unknown family {n:?} (expected torus2, pretzel, torus-braid, positive-braid)"
                )));
            }
            if let Some(p) = picks.iter().find(|p| **p != n.as_str()) {
                return Err(usage(format!("--family {n} conflicts with {p} parameters")));
            }
            n.clone()
        }
    };
    let specs = match name.as_str() {
        "torus2" => {
            let kspec = f.k.as_ref().ok_or_else(|| usage("torus2 needs -k"))?;
            parse_k_range(kspec)?
                .into_iter()
                .map(|k| FamilySpec::Torus2 { k })
                .collect()
        }
        "pretzel" => {
            let p = f
                .pretzel
                .as_ref()
                .ok_or_else(|| usage("pretzel needs --pretzel R S T"))?;
            vec![FamilySpec::Pretzel { r: p[0], s: p[1], t: p[2] }]
        }
        "torus-braid" => {
            let v = f
                .torus_braid
                .as_ref()
                .ok_or_else(|| usage("torus-braid needs --torus-braid M N"))?;
            vec![FamilySpec::TorusBraid { m: v[0], n: v[1] }]
        }
        _ => {
            let text = f
                .positive_braid
                .as_ref()
                .ok_or_else(|| usage("positive-braid needs --positive-braid \"letters\""))?;
            let mut letters = Vec::new();
            for tok in text.split_whitespace() {
                let v: i32 = tok
                    .parse()
                    .map_err(|_| usage(format!("bad braid letter {tok:?}")))?;
                if v <= 0 {
                    return Err(usage(format!("positive braid letters must be positive, got {v}")));
                }
                letters.push(v);
            }
            let n = letters.iter().map(|&l| l as usize + 1).max().unwrap_or(1);
            let word = BraidWord::new(n, letters).map_err(domain)?;
            vec![FamilySpec::PositiveBraid { word }]
        }
    };
    Ok(Some(specs))
}

fn parse_k_range(s: &str) -> Result<Vec<i64>, CliError> {
    let parse_one = |t: &str| -> Result<i64, CliError> {
        t.trim()
            .parse()
            .map_err(|_| usage(format!("bad torus2 parameter {t:?}")))
    };
    if let Some((a, b)) = s.split_once("..") {
        let a = parse_one(a)?;
        let b = parse_one(b)?;
        if a > b {
            return Err(usage(format!("empty range {s:?}")));
        }
        if b - a > 1000 {
            return Err(usage(format!("range {s:?} is too large")));
        }
        Ok((a..=b).collect())
    } else {
        Ok(vec![parse_one(s)?])
    }
}

fn object_label(o: &Object) -> String {
    match o {
        Object::Braid(w) => format!(
            "braid closure {:?} (n={})",
            w.letters(),
            w.strands()
        ),
        Object::Bands(b) => format!(
            "band closure of {} bands (n={})",
            b.bands().len(),
            b.strands()
        ),
        Object::Plat(p) => format!(
            "plat of {} letters (n={})",
            p.word.letters().len(),
            p.word.strands()
        ),
        Object::Fence(cf) => format!(
            "fence with {} posts, {} wires",
            cf.fence.posts().len(),
            cf.fence.wires().len()
        ),
        Object::Diagram(d) => format!("diagram with {} crossings", d.n_crossings()),
    }
}

fn diagram_of(o: &Object) -> Result<LinkDiagram, CliError> {
    match o {
        Object::Braid(w) => Ok(closed_braid_diagram(w)),
        Object::Bands(b) => Ok(closed_braid_diagram(&b.expanded_word())),
        Object::Plat(p) => Ok(p.diagram()),
        Object::Fence(cf) => fence_to_diagram(&cf.fence).map_err(domain),
        Object::Diagram(d) => Ok(d.clone()),
    }
}

fn parse_input_object(text: &str) -> Result<Object, CliError> {
    input::parse_object(text).map_err(CliError::Domain)
}

fn charged_all_plus(f: qpos::fence::Fence) -> ChargedFence {
    let charges = vec![1; f.wires().len()];
    ChargedFence::new(f, charges).expect("one charge per wire")
}

// ----------------------------------------------------------------------
// convert
// ----------------------------------------------------------------------

fn convert_cmd(io: &InputArgs, to: Target, common: &CommonArgs) -> Result<RunOutput, CliError> {
    let text = io
        .load()?
        .ok_or_else(|| usage("convert needs --input or --text"))?;
    let obj = parse_input_object(&text)?;
    let out = convert(obj, to)?;
    match common.format {
        None => ok(object_text(&out)?),
        Some(Format::Json) => ok(object_json(&out)?),
        Some(_) => Err(usage("convert emits object text or json")),
    }
}

fn convert(obj: Object, to: Target) -> Result<Object, CliError> {
    use Object::*;
    let unsupported = |from: &Object, to: &str| {
        CliError::Domain(format!("cannot convert a {} to a {to}", from.kind()))
    };
    Ok(match to {
        Target::Braid => match obj {
            Braid(w) => Braid(w),
            Bands(b) => Braid(b.expanded_word()),
            o @ (Plat(_) | Fence(_) | Diagram(_)) => return Err(unsupported(&o, "braid")),
        },
        Target::Bands => match obj {
            Braid(w) => Bands(word_as_bands(&w)?),
            Bands(b) => Bands(b),
            Fence(cf) => Bands(qpos::fence::fence_to_band_rep(&cf).map_err(domain)?),
            o @ (Plat(_) | Diagram(_)) => return Err(unsupported(&o, "bands")),
        },
        Target::Plat => match obj {
            Braid(w) => Plat(braid_as_plat(&w)),
            Bands(b) => Plat(braid_as_plat(&b.expanded_word())),
            Plat(p) => Plat(p),
            Fence(cf) => {
                if cf.charges().iter().any(|&c| c < 0) {
                    return Err(CliError::Domain(
                        "only an all-positive fence has a positive plat form".into(),
                    ));
                }
                Plat(fence_to_positive_plat(&cf.fence).map_err(domain)?)
            }
            o @ Diagram(_) => return Err(unsupported(&o, "plat")),
        },
        Target::Fence => match obj {
            Braid(w) => Fence(charged_all_plus(
                plat_to_fence(&braid_as_plat(&w)).map_err(domain)?,
            )),
            Bands(b) => Fence(band_rep_to_fence(&b).map_err(domain)?),
            Plat(p) => Fence(charged_all_plus(plat_to_fence(&p).map_err(domain)?)),
            Fence(cf) => Fence(cf),
            o @ Diagram(_) => return Err(unsupported(&o, "fence")),
        },
        Target::Diagram => Diagram(diagram_of(&obj)?),
    })
}

fn word_as_bands(w: &BraidWord) -> Result<qpos::braid::BandRepresentation, CliError> {
    let n = w.strands();
    let bands: Result<Vec<_>, _> = w
        .letters()
        .iter()
        .map(|&l| {
            let i = l.unsigned_abs() as usize;
            qpos::braid::Band::new(i, i + 1, if l > 0 { 1 } else { -1 }, n)
        })
        .collect();
    qpos::braid::BandRepresentation::new(n, bands.map_err(domain)?).map_err(domain)
}

fn ensure_nl(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn object_text(o: &Object) -> Result<String, CliError> {
    match o {
        Object::Braid(w) => Ok(ensure_nl(w.to_text())),
        Object::Bands(b) => Ok(ensure_nl(b.to_text())),
        Object::Plat(p) => Ok(ensure_nl(p.to_text())),
        Object::Fence(cf) => Ok(ensure_nl(cf.to_json_string())),
        Object::Diagram(d) => d.to_pd_string().map(ensure_nl).map_err(domain),
    }
}

fn object_json(o: &Object) -> Result<String, CliError> {
    match o {
        Object::Braid(w) => Ok(ensure_nl(w.to_json_string())),
        Object::Bands(b) => Ok(ensure_nl(b.to_json_string())),
        Object::Plat(p) => Ok(ensure_nl(p.to_json_string())),
        Object::Fence(cf) => Ok(ensure_nl(cf.to_json_string())),
        Object::Diagram(d) => {
            let pd = d.to_pd_string().map_err(domain)?;
            Ok(ensure_nl(
                serde_json::json!({ "type": "diagram", "pd": pd }).to_string(),
            ))
        }
    }
}

// ----------------------------------------------------------------------
// invariant
// ----------------------------------------------------------------------

fn invariant_cmd(
    kind: Kind,
    io: &InputArgs,
    fam: &FamilyArgs,
    common: &CommonArgs,
) -> Result<RunOutput, CliError> {
    let eng = make_engine(common);
    let members = resolve_diagrams(io, fam)?;
    let rows: Vec<Result<(String, String, serde_json::Value), CliError>> =
        map_indexed(members, |_, (label, d)| {
            // every supported invariant is an ambient-isotopy invariant, so
            // reducing first lets the budget measure intrinsic complexity
            let d = d.simplify().diagram;
            compute_invariant(&eng, kind, &d).map(|(text, poly)| (label, text, poly))
        });
    let rows: Vec<(String, String, serde_json::Value)> =
        rows.into_iter().collect::<Result<_, _>>()?;

    match common.format {
        None => {
            if rows.len() == 1 {
                ok(format!("{}\n", rows[0].1))
            } else {
                let mut s = String::new();
                for (label, text, _) in &rows {
                    writeln!(s, "{label}\t{text}").unwrap();
                }
                ok(s)
            }
        }
        Some(Format::Json) => {
            let vals: Vec<serde_json::Value> = rows
                .iter()
                .map(|(label, text, poly)| {
                    serde_json::json!({
                        "knot": label,
                        "kind": kind.as_str(),
                        "value": text,
                        "poly": poly,
                    })
                })
                .collect();
            let body = if vals.len() == 1 {
                vals[0].to_string()
            } else {
                serde_json::Value::Array(vals).to_string()
            };
            ok(body + "\n")
        }
        Some(Format::Tsv) => {
            let mut s = String::new();
            for (label, text, _) in &rows {
                writeln!(s, "{label}\t{}\t{text}", kind.as_str()).unwrap();
            }
            ok(s)
        }
        Some(Format::Svg) => Err(usage("invariant emits text, json, or tsv")),
    }
}

fn compute_invariant(
    eng: &SkeinEngine,
    kind: Kind,
    d: &LinkDiagram,
) -> Result<(String, serde_json::Value), CliError> {
    let poly_json = |s: String| -> serde_json::Value {
        serde_json::from_str(&s).expect("library JSON is well-formed")
    };
    match kind {
        Kind::P => {
            let p = eng.homfly_p(d).map_err(domain)?;
            Ok((p.to_string(), poly_json(p.to_json_string())))
        }
        Kind::R => {
            let r = eng.r_poly(d).map_err(domain)?;
            Ok((r.to_string(), poly_json(r.to_json_string())))
        }
        Kind::F => {
            let f = eng.kauffman_mod2(d).map_err(domain)?;
            Ok((f.to_string(), poly_json(f.to_json_string())))
        }
        Kind::G0 | Kind::G1 => {
            let k = if kind == Kind::G0 { 0 } else { 1 };
            let g = eng.g_poly(d, k).map_err(domain)?;
            Ok((g.to_string(), poly_json(g.to_json_string())))
        }
        Kind::Framed => {
            let fd = FramedDiagram::zero_framed(d.clone());
            let p = eng.framed_polynomial(&fd).map_err(domain)?;
            Ok((p.to_string(), poly_json(p.to_json_string())))
        }
    }
}

fn resolve_diagrams(
    io: &InputArgs,
    fam: &FamilyArgs,
) -> Result<Vec<(String, LinkDiagram)>, CliError> {
    match (io.load()?, family_specs(fam)?) {
        (Some(_), Some(_)) => Err(usage("give an input object or a family, not both")),
        (None, None) => Err(usage("no input: give --input, --text, or a family")),
        (Some(text), None) => {
            let obj = parse_input_object(&text)?;
            let d = diagram_of(&obj)?;
            Ok(vec![(object_label(&obj), d)])
        }
        (None, Some(specs)) => {
            let outs: Vec<Result<(String, LinkDiagram), CliError>> =
                map_indexed(specs, |_, spec| {
                    family_generate(&spec)
                        .map(|f| (f.description, f.diagram))
                        .map_err(domain)
                });
            outs.into_iter().collect()
        }
    }
}

// ----------------------------------------------------------------------
// qbounds and family
// ----------------------------------------------------------------------

fn qbounds_cmd(
    io: &InputArgs,
    fam: &FamilyArgs,
    framed: bool,
    slice: bool,
    common: &CommonArgs,
) -> Result<RunOutput, CliError> {
    let eng = make_engine(common);
    let reports = match (io.load()?, family_specs(fam)?) {
        (Some(_), Some(_)) => return Err(usage("give an input object or a family, not both")),
        (None, None) => return Err(usage("no input: give --input, --text, or a family")),
        (Some(text), None) => {
            let obj = parse_input_object(&text)?;
            vec![report_for_object(&eng, &obj, framed, slice)]
        }
        (None, Some(specs)) => family_reports(&eng, specs, framed)?,
    };
    render_reports(&reports, common.format)
}

fn family_reports(
    eng: &SkeinEngine,
    specs: Vec<FamilySpec>,
    framed: bool,
) -> Result<Vec<QBoundsReport>, CliError> {
    let outs: Vec<Result<QBoundsReport, CliError>> = map_indexed(specs, |_, spec| {
        family_generate(&spec)
            .map(|f| family_report(eng, &f, framed))
            .map_err(domain)
    });
    outs.into_iter().collect()
}

fn report_for_object(
    eng: &SkeinEngine,
    obj: &Object,
    framed: bool,
    slice: bool,
) -> QBoundsReport {
    let mut input = QBoundsInput {
        knot: object_label(obj),
        use_framed: framed,
        slice: if slice { Some(true) } else { None },
        ..Default::default()
    };
    match obj {
        Object::Braid(w) => {
            input.diagram = Some(closed_braid_diagram(w));
            if w.letters().iter().all(|&l| l > 0) {
                input.positive_braids.push(w.clone());
                if let Ok(f) = plat_to_fence(&braid_as_plat(w)) {
                    input.fences.push(f);
                }
            }
        }
        Object::Bands(b) => {
            // the subject is the closure of the expanded word; the fence of
            // a band representation presents its surface, whose core is a
            // different link, so no fence bound applies here
            let w = b.expanded_word();
            input.diagram = Some(closed_braid_diagram(&w));
            if w.letters().iter().all(|&l| l > 0) {
                input.positive_braids.push(w);
            }
        }
        Object::Plat(p) => {
            input.diagram = Some(p.diagram());
            if let Ok(f) = plat_to_fence(p) {
                input.fences.push(f);
            }
        }
        Object::Fence(cf) => {
            input.diagram = fence_to_diagram(&cf.fence).ok();
            if cf.charges().iter().all(|&c| c > 0) {
                input.fences.push(cf.fence.clone());
            }
        }
        Object::Diagram(d) => input.diagram = Some(d.clone()),
    }
    q_report(eng, &input)
}

fn join_entries(entries: &[BoundEntry]) -> String {
    if entries.is_empty() {
        return "-".into();
    }
    entries
        .iter()
        .map(|e| format!("{} ({})", e.value, e.by))
        .collect::<Vec<_>>()
        .join("; ")
}

fn render_reports(
    reports: &[QBoundsReport],
    fmt: Option<Format>,
) -> Result<RunOutput, CliError> {
    match fmt.unwrap_or(Format::Json) {
        Format::Json => {
            let body = if reports.len() == 1 {
                reports[0].to_json_string()
            } else {
                serde_json::to_string(reports).expect("reports serialize")
            };
            ok(body + "\n")
        }
        Format::Tsv => {
            let mut s = String::new();
            for r in reports {
                writeln!(
                    s,
                    "{}\t{}\t{}\t{}",
                    r.knot,
                    join_entries(&r.lower),
                    join_entries(&r.upper),
                    r.exact.map_or_else(|| "-".into(), |v| v.to_string()),
                )
                .unwrap();
            }
            ok(s)
        }
        Format::Svg => Err(usage("qbounds emits json or tsv")),
    }
}

fn family_cmd(
    fam: &FamilyArgs,
    qbounds: bool,
    framed: bool,
    common: &CommonArgs,
) -> Result<RunOutput, CliError> {
    let specs = family_specs(fam)?
        .ok_or_else(|| usage("family needs a family selection (--family, -k, --pretzel, --torus-braid, or --positive-braid)"))?;
    let eng = make_engine(common);
    if qbounds {
        let reports = family_reports(&eng, specs, framed)?;
        return render_reports(&reports, common.format);
    }
    let outs: Vec<Result<serde_json::Value, CliError>> = map_indexed(specs, |_, spec| {
        let f = family_generate(&spec).map_err(domain)?;
        let pd = f.diagram.oriented().to_pd_string().map_err(domain)?;
        let fence_json: serde_json::Value =
            serde_json::from_str(&f.fence.to_json_string()).expect("fence JSON is well-formed");
        Ok(serde_json::json!({
            "description": f.description,
            "crossings": f.diagram.n_crossings(),
            "braid": f.braid.as_ref().map(|w| w.to_text()),
            "plat": f.plat.as_ref().map(|p| p.to_text()),
            "fence": fence_json,
            "pd": pd,
        }))
    });
    let members: Vec<serde_json::Value> = outs.into_iter().collect::<Result<_, _>>()?;
    match common.format {
        None | Some(Format::Json) => {
            let body = if members.len() == 1 {
                members[0].to_string()
            } else {
                serde_json::Value::Array(members).to_string()
            };
            ok(body + "\n")
        }
        Some(Format::Tsv) => {
            let mut s = String::new();
            for m in &members {
                let desc = m["description"].as_str().unwrap_or("");
                let crossings = &m["crossings"];
                let pres = m["braid"]
                    .as_str()
                    .or_else(|| m["plat"].as_str())
                    .unwrap_or("fence")
                    .replace('\n', " / ");
                writeln!(s, "{desc}\t{crossings}\t{pres}").unwrap();
            }
            ok(s)
        }
        Some(Format::Svg) => Err(usage("family emits json or tsv")),
    }
}

// ----------------------------------------------------------------------
// check
// ----------------------------------------------------------------------

fn check_cmd(common: &CommonArgs) -> Result<RunOutput, CliError> {
    let eng = make_engine(common);
    let seed = common.seed.unwrap_or(DEFAULT_SEED);
    let results = checks::run_suite(seed, &eng);
    let failed = results.iter().any(|r| !r.pass);
    let stdout = match common.format {
        None => {
            let mut s = String::new();
            for r in &results {
                if r.pass {
                    writeln!(s, "PASS {} ({} cases)", r.name, r.cases).unwrap();
                } else {
                    writeln!(s, "FAIL {}: {}", r.name, r.detail).unwrap();
                }
            }
            s
        }
        Some(Format::Json) => {
            let vals: Vec<serde_json::Value> = results
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "property": r.name,
                        "cases": r.cases,
                        "pass": r.pass,
                        "detail": r.detail,
                    })
                })
                .collect();
            serde_json::Value::Array(vals).to_string() + "\n"
        }
        Some(Format::Tsv) => {
            let mut s = String::new();
            for r in &results {
                writeln!(
                    s,
                    "{}\t{}\t{}\t{}",
                    r.name,
                    if r.pass { "pass" } else { "fail" },
                    r.cases,
                    r.detail
                )
                .unwrap();
            }
            s
        }
        Some(Format::Svg) => return Err(usage("check emits text, json, or tsv")),
    };
    Ok(RunOutput { stdout, failed })
}

// ----------------------------------------------------------------------
// render
// ----------------------------------------------------------------------

fn render_cmd(io: &InputArgs, fam: &FamilyArgs, common: &CommonArgs) -> Result<RunOutput, CliError> {
    if matches!(common.format, Some(Format::Json) | Some(Format::Tsv)) {
        return Err(usage("render emits svg"));
    }
    let obj = match (io.load()?, family_specs(fam)?) {
        (Some(_), Some(_)) => return Err(usage("give an input object or a family, not both")),
        (None, None) => return Err(usage("no input: give --input, --text, or a family")),
        (Some(text), None) => parse_input_object(&text)?,
        (None, Some(specs)) => {
            if specs.len() != 1 {
                return Err(usage("render takes a single family member"));
            }
            let f = family_generate(&specs[0]).map_err(domain)?;
            if let Some(w) = f.braid {
                Object::Braid(w)
            } else if let Some(p) = f.plat {
                Object::Plat(p)
            } else {
                Object::Fence(charged_all_plus(f.fence))
            }
        }
    };
    let svg = match &obj {
        Object::Braid(w) => render::braid_svg(w, None),
        Object::Plat(p) => render::braid_svg(&p.word, Some(&p.plan)),
        Object::Bands(b) => render::fence_svg(&band_rep_to_fence(b).map_err(domain)?),
        Object::Fence(cf) => render::fence_svg(cf),
        Object::Diagram(_) => {
            return Err(CliError::Domain(
                "unsupported object kind for render: diagram (render a braid, plat, bands, or fence)"
                    .into(),
            ))
        }
    };
    ok(svg)
}
