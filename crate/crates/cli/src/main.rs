use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fw_core::algebra::Mode;
use fw_core::engine::{assemble_hamiltonian, GTreatment, Model, ModelSpec, PipelineResult, SeriesByOrder};
use fw_core::fixtures::FixtureSet;
use fw_core::report::{DerivationReport, PipelineDocument, SeriesDocument};
use fw_core::verify::{run_suite, Pipelines, Suite, ALL_SUITES};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "fwt", version, about = "Exact Foldy-Wouthuysen expansions of the Dirac and Dirac-Pauli Hamiltonians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Dirac,
    DiracPauli,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Homogeneous,
    Inhomogeneous,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GArg {
    #[value(name = "2")]
    Two,
    Symbolic,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Report,
    Fixtures,
    Series,
}

#[derive(clap::Args)]
struct SpecArgs {
    #[arg(long, value_enum, default_value = "dirac")]
    model: ModelArg,
    /// Highest power of 1/c in the Hamiltonian (even, at most 14; 2 for inhomogeneous fields)
    #[arg(long, default_value_t = 12)]
    order: usize,
    #[arg(long, value_enum, default_value = "homogeneous")]
    mode: ModeArg,
    /// Defaults to 2 for dirac and symbolic for dirac-pauli
    #[arg(long, value_enum)]
    g: Option<GArg>,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the transformed Hamiltonian order by order
    Derive {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Also print X, A, G and S
        #[arg(long)]
        show_internals: bool,
    },
    /// Run verification suites
    Verify {
        /// Comma-separated suite names; all suites when omitted
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Write a JSON document
    Export {
        /// Output file, or `-` for stdout
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        what: WhatArg,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Verify(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Verify(_) => EXIT_VERIFY,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verify(m) | Failure::Io(m) => m,
        }
    }
}

impl SpecArgs {
    fn to_spec(&self) -> Result<ModelSpec, Failure> {
        let model = match self.model {
            ModelArg::Dirac => Model::Dirac,
            ModelArg::DiracPauli => Model::DiracPauli,
        };
        let g = match (self.g, model) {
            (Some(GArg::Two), _) | (None, Model::Dirac) => GTreatment::Two,
            (Some(GArg::Symbolic), _) | (None, Model::DiracPauli) => GTreatment::Symbolic,
        };
        let mode = match self.mode {
            ModeArg::Homogeneous => Mode::Homogeneous,
            ModeArg::Inhomogeneous => Mode::Inhomogeneous,
        };
        let base = match model {
            Model::Dirac => ModelSpec::dirac(self.order),
            Model::DiracPauli => ModelSpec::dirac_pauli(self.order),
        };
        let spec = ModelSpec { g, mode, ..base };
        if self.order > 14 {
            return Err(Failure::Usage(format!("order {} exceeds 14", self.order)));
        }
        if mode == Mode::Inhomogeneous && spec.anomalous() {
            return Err(Failure::Usage("inhomogeneous fields are only supported with g = 2".into()));
        }
        spec.validate().map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(spec)
    }
}

fn run_pipeline(spec: &ModelSpec) -> Result<PipelineResult, Failure> {
    assemble_hamiltonian(spec).map_err(|e| Failure::Usage(e.to_string()))
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Homogeneous => "homogeneous",
        Mode::Inhomogeneous => "inhomogeneous",
    }
}

fn describe(spec: &ModelSpec) -> String {
    let model = match spec.model {
        Model::Dirac => "dirac",
        Model::DiracPauli => "dirac-pauli",
    };
    let g = match spec.g {
        GTreatment::Two => "g = 2",
        GTreatment::Symbolic => "symbolic g, kappa = g/2 - 1",
    };
    format!("{model}, {} fields, {g}, through order {}", mode_name(spec.mode), spec.max_order)
}

fn render_series(out: &mut String, name: &str, latex_name: &str, s: &SeriesByOrder, format: FormatArg) {
    for k in 0..=s.max_order {
        let Some(e) = s.entry(k) else { continue };
        match format {
            FormatArg::Latex => out.push_str(&format!("{latex_name}^{{({k})}} &= {} \\\\\n", e.to_physical_latex())),
            _ => out.push_str(&format!("{name}^({k}) = {}\n", e.to_text())),
        }
    }
}

fn derive(spec: &ModelSpec, format: FormatArg, show_internals: bool) -> Result<String, Failure> {
    let r = run_pipeline(spec)?;
    if let FormatArg::Json = format {
        return Ok(PipelineDocument::from_result(&r).to_json() + "\n");
    }
    let mut out = String::new();
    match format {
        FormatArg::Latex => {
            out.push_str(&format!("% {}\n", describe(spec)));
            out.push_str("% H_FW = m c^2 + \\sum_l H^{(l)} c^{-l}, T = \\pi^2/2m, \\mu = q\\hbar\\sigma/2mc\n");
            out.push_str("\\begin{align*}\n");
        }
        _ => {
            out.push_str(&format!("# {}\n", describe(spec)));
            out.push_str("# H_FW = m c^2 + sum_l H^(l) c^-l; s = Pauli vector, pi = kinetic momentum\n");
        }
    }
    if show_internals {
        render_series(&mut out, "X", "X", &r.x, format);
        render_series(&mut out, "A", "A", &r.a, format);
        render_series(&mut out, "G", "G", &r.g, format);
        render_series(&mut out, "S", "S", &r.s, format);
    }
    render_series(&mut out, "H", r"H_{\mathrm{FW}}", &r.h, format);
    if let FormatArg::Latex = format {
        out.push_str("\\end{align*}\n");
    }
    Ok(out)
}

fn load_fixtures() -> Result<FixtureSet, Failure> {
    FixtureSet::load().map_err(|e| Failure::Io(e.to_string()))
}

fn verify(names: &[String], seed: u64, format: FormatArg) -> Result<(String, bool), Failure> {
    let suites: Vec<Suite> = if names.is_empty() {
        ALL_SUITES.to_vec()
    } else {
        let mut v = Vec::new();
        for n in names {
            let s: Suite = n.parse().map_err(Failure::Usage)?;
            if !v.contains(&s) {
                v.push(s);
            }
        }
        v
    };
    let fixtures = load_fixtures()?;
    let pipelines = Pipelines::compute().map_err(|e| Failure::Verify(e.to_string()))?;
    let mut reports = Vec::new();
    for s in suites {
        reports.push(run_suite(s, &pipelines, &fixtures, seed).map_err(|e| Failure::Verify(e.to_string()))?);
    }
    let passed = reports.iter().all(|r| r.passed);
    let out = match format {
        FormatArg::Json => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
        _ => {
            let mut s: String = reports.iter().map(|r| r.to_text()).collect();
            let n = reports.iter().filter(|r| r.passed).count();
            s.push_str(&format!("{} of {} suites passed\n", n, reports.len()));
            s
        }
    };
    Ok((out, passed))
}

fn export(what: WhatArg, spec: &ModelSpec, seed: u64) -> Result<String, Failure> {
    Ok(match what {
        WhatArg::Fixtures => FixtureSet::embedded().to_json(),
        WhatArg::Series => SeriesDocument::from_result(&run_pipeline(spec)?).to_json(),
        WhatArg::Report => {
            let fixtures = load_fixtures()?;
            DerivationReport::build(spec, seed, &fixtures).map_err(|e| Failure::Usage(e.to_string()))?.to_json()
        }
    } + "\n")
}

fn write_out(path: &PathBuf, body: &str) -> Result<(), Failure> {
    if path.as_os_str() == "-" {
        return emit(body);
    }
    std::fs::write(path, body).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn emit(body: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(body.as_bytes()).and_then(|_| out.flush()).map_err(|e| Failure::Io(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Derive { spec, format, show_internals } => emit(&derive(&spec.to_spec()?, format, show_internals)?),
        Command::Verify { suite, seed, format } => {
            let (out, passed) = verify(&suite, seed, format)?;
            emit(&out)?;
            if passed {
                Ok(())
            } else {
                Err(Failure::Verify("verification failed".into()))
            }
        }
        Command::Export { out, what, spec, seed } => {
            let spec = spec.to_spec()?;
            write_out(&out, &export(what, &spec, seed)?)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("fwt: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
