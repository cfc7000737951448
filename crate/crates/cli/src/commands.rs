use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use transport2d::bundled::{tetrahedron, tetrahedron_connection, TETRAHEDRON_FILES};
use transport2d::complex::ComplexError;
use transport2d::scheme::SchemeFileError;
use transport2d::sweep::{
    curvature_scheme, ConnectionError, DefectRecord, DefectReport, SchemeComparison, SweepError,
    SweepTrace,
};
use transport2d::*;

use crate::words::split_letters;
use crate::{checks, Cli, Command, Format, Inputs};

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    /// Well-formed input, but the answer is a failure; `output` is still
    /// printed.
    #[error("{message}")]
    Domain { message: String, output: Option<String> },
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Domain { .. } => 1,
            Failure::Usage(_) | Failure::Io { .. } => 2,
        }
    }

    fn domain(e: impl ToString) -> Self {
        Failure::Domain { message: e.to_string(), output: None }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io { path: path.display().to_string(), message: e.to_string() })
}

fn from_complex_error(path: &Path, e: ComplexError) -> Failure {
    match e {
        ComplexError::Parse { .. } => Failure::Io { path: path.display().to_string(), message: e.to_string() },
        other => Failure::domain(format!("{}: {other}", path.display())),
    }
}

fn load(inputs: &Inputs) -> Result<(Arc<SimplicialComplex>, Connection2), Failure> {
    match (&inputs.complex, &inputs.connection) {
        (None, None) => Ok((tetrahedron(), tetrahedron_connection())),
        (Some(kp), Some(cp)) => {
            let k = Arc::new(load_complex(&read(kp)?).map_err(|e| from_complex_error(kp, e))?);
            let c = Connection2::parse(&read(cp)?, k.clone()).map_err(|e| match e {
                ConnectionError::Parse { .. } => Failure::Io { path: cp.display().to_string(), message: e.to_string() },
                other => Failure::domain(format!("{}: {other}", cp.display())),
            })?;
            Ok((k, c))
        }
        _ => Err(Failure::Usage("--complex and --connection go together".into())),
    }
}

fn load_scheme(path: &Path) -> Result<SweepScheme, Failure> {
    SweepScheme::parse(&read(path)?).map_err(|e| match e {
        SchemeFileError::Parse { .. } => Failure::Io { path: path.display().to_string(), message: e.to_string() },
        other => Failure::Usage(format!("{}: {other}", path.display())),
    })
}

fn parse_word(c: &mut Connection2, text: &str, over: &EdgePath) -> Result<Section, Failure> {
    let letters = split_letters(text)
        .map_err(Failure::Usage)?
        .iter()
        .map(|t| c.parse_letter(t))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("word: {e}")))?;
    Section::new(over.clone(), letters).map_err(|e| Failure::Usage(format!("word over {over}: {e}")))
}

fn vertex(name: &str) -> Result<Vertex, Failure> {
    Vertex::new(name).map_err(|e| Failure::Usage(e.to_string()))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn warn_flags(c: &Connection2) {
    for f in c.flags() {
        eprintln!("warning: {f}");
    }
}

pub fn run(cli: &Cli) -> Result<String, Failure> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Validate { complex } => validate(complex, json),
        Command::Holonomy { inputs, path } => {
            let (_, c) = load(inputs)?;
            let p = EdgePath::parse_vertices(path).map_err(|e| Failure::Usage(format!("path: {e}")))?;
            let h = holonomy(c.base(), &p).map_err(Failure::domain)?;
            Ok(if json { pretty(&json!({ "path": p, "holonomy": h.to_string() })) } else { format!("{h}\n") })
        }
        Command::Sweep { inputs, scheme, word } => {
            let (_, mut c) = load(inputs)?;
            warn_flags(&c);
            let scheme = load_scheme(scheme)?;
            let s0 = parse_word(&mut c, word, &scheme.start)?;
            let trace = run_scheme(&s0, &scheme, &c).map_err(Failure::domain)?;
            sweep_output(&trace, json)
        }
        Command::Compare { inputs, schemes, word } => {
            let [first, second] = schemes.as_slice() else {
                return Err(Failure::Usage(format!("compare takes two --scheme files, got {}", schemes.len())));
            };
            let (_, mut c) = load(inputs)?;
            warn_flags(&c);
            let (first, second) = (load_scheme(first)?, load_scheme(second)?);
            let s0 = parse_word(&mut c, word, &first.start)?;
            let cmp = compare_schemes(&first, &second, &s0, &c).map_err(Failure::domain)?;
            Ok(compare_output(&cmp, json))
        }
        Command::Curvature { inputs, a, b, c: apex, d, word } => {
            let (_, mut conn) = load(inputs)?;
            let [a, b, apex, d] = [a, b, apex, d].map(|v| vertex(v));
            let (a, b, apex, d) = (a?, b?, apex?, d?);
            let scheme = curvature_scheme(&a, &b, &apex, &d).map_err(|e| Failure::Usage(e.to_string()))?;
            let s0 = match word {
                Some(w) => parse_word(&mut conn, w, &scheme.start)?,
                None => Section::trivial(scheme.start.clone(), conn.group()),
            };
            let report = curvature_square(&a, &b, &apex, &d, &s0, &conn).map_err(Failure::domain)?;
            Ok(defect_output(&report, json))
        }
        Command::Center { group } => {
            let g: GroupDescriptor =
                serde_json::from_str(group).map_err(|e| Failure::Usage(format!("group descriptor: {e}")))?;
            let z = center_obstruction_check(&g).map_err(Failure::domain)?;
            let names: Vec<String> = z.iter().map(ToString::to_string).collect();
            Ok(if json { pretty(&json!(names)) } else { names.join("\n") + "\n" })
        }
        Command::Check { cases } => {
            let results = checks::run(cli.seed, *cases);
            let failed = results.iter().filter(|r| r.failures > 0).count();
            let out = if json {
                pretty(&json!({ "seed": cli.seed, "checks": results.iter().map(checks::CheckResult::to_json).collect::<Vec<_>>() }))
            } else {
                let mut s = String::new();
                for r in &results {
                    writeln!(s, "{r}").unwrap();
                }
                s
            };
            if failed > 0 {
                return Err(Failure::Domain { message: format!("{failed} checks failed"), output: Some(out) });
            }
            Ok(out)
        }
        Command::Examples { out } => {
            fs::create_dir_all(out).map_err(|e| Failure::Io { path: out.display().to_string(), message: e.to_string() })?;
            let mut written = Vec::new();
            for (name, text) in TETRAHEDRON_FILES {
                let p = out.join(name);
                fs::write(&p, text).map_err(|e| Failure::Io { path: p.display().to_string(), message: e.to_string() })?;
                written.push(p.display().to_string());
            }
            Ok(if json { pretty(&json!(written)) } else { written.join("\n") + "\n" })
        }
    }
}

fn validate(path: &Path, json: bool) -> Result<String, Failure> {
    let k = SimplicialComplex::parse(&read(path)?).map_err(|e| from_complex_error(path, e))?;
    let diagnostics = k.validate(k.declares_pure_dim2());
    let out = if json {
        let ds: Vec<Value> =
            diagnostics.iter().map(|d| json!({ "rule": d.rule(), "message": d.to_string() })).collect();
        pretty(&json!({
            "valid": diagnostics.is_empty(),
            "vertices": k.vertices().len(),
            "edges": k.edges().len(),
            "triangles": k.triangles().len(),
            "diagnostics": ds,
        }))
    } else if diagnostics.is_empty() {
        format!("ok: {} vertices, {} edges, {} triangles\n", k.vertices().len(), k.edges().len(), k.triangles().len())
    } else {
        diagnostics.iter().map(|d| format!("{}: {d}\n", d.rule())).collect()
    };
    if diagnostics.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Domain { message: format!("{} diagnostics", diagnostics.len()), output: Some(out) })
    }
}

fn trace_json(trace: &SweepTrace) -> Value {
    serde_json::to_value(trace.records()).expect("records serialize")
}

fn sweep_output(trace: &SweepTrace, json: bool) -> Result<String, Failure> {
    let start = trace.initial();
    let end = trace.final_section();
    let report = if start.path() == end.path() {
        Some(two_holonomy(start, end).map_err(|e: SweepError| Failure::domain(e))?)
    } else {
        None
    };
    Ok(if json {
        pretty(&json!({
            "trace": trace_json(trace),
            "defects": report.as_ref().map(DefectRecord::from_report),
        }))
    } else {
        let mut s = trace.to_string();
        if let Some(r) = report {
            writeln!(s, "defects: {r}").unwrap();
        }
        s
    })
}

fn compare_output(cmp: &SchemeComparison, json: bool) -> String {
    let quotient: Vec<String> = cmp.quotient.iter().map(ToString::to_string).collect();
    let gauge = match &cmp.verdict {
        Verdict::GaugeEquivalent(n) => Some(n),
        _ => None,
    };
    if json {
        let gauge = gauge.map(|n| {
            n.values().iter().map(|(v, x)| (v.to_string(), Value::String(x.to_string()))).collect::<serde_json::Map<_, _>>()
        });
        pretty(&json!({
            "verdict": cmp.verdict.to_string(),
            "quotient": quotient,
            "gauge": gauge,
            "first": trace_json(&cmp.first),
            "second": trace_json(&cmp.second),
        }))
    } else {
        let mut s = format!("verdict: {}\nquotient: ({})\n", cmp.verdict, quotient.join(", "));
        if let Some(n) = gauge {
            let parts: Vec<String> = n.values().iter().map(|(v, x)| format!("{v}={x}")).collect();
            writeln!(s, "gauge: {}", parts.join(", ")).unwrap();
        }
        s
    }
}

fn defect_output(r: &DefectReport, json: bool) -> String {
    if json {
        pretty(&serde_json::to_value(DefectRecord::from_report(r)).expect("records serialize"))
    } else {
        format!("{r}\n")
    }
}
