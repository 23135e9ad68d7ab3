//! `ihoe`: command-line front end for `ihoe-core`.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on a
//! usage or input error.

mod element;
mod input;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ihoe_core::center::{delta_z_check, hopf_center, is_central, CentralityCheck, DeltaZReport};
use ihoe_core::error::Error as CoreError;
use ihoe_core::filtration::{assign_degrees, graded_commutative_report};
use ihoe_core::findim::{
    classify_fiber, nonazumaya_locus, quotient_fiber, restricted_quotient, simple_census, FiberReport,
    FinDimRepr,
};
use ihoe_core::gf::{CoeffRepr, FieldSpec};
use ihoe_core::hopf::Side;
use ihoe_core::ihoe2::{canonical_form, iso_scalars, IsoOutcome};
use ihoe_core::orealg::{PbwElement, TermRepr};
use ihoe_core::primcoh::{pp_dims, verify_classes, ClassCheck};
use ihoe_core::tensoralg::{TensorElement, TensorTermRepr};
use serde::{Deserialize, Serialize};

use element::{parse_element, parse_scalar};
use input::{Document, Loaded};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            // a cross-check inside the library disagreed
            CliError::Core(CoreError::Inconsistent(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ihoe", version, about = "Computations in iterated Hopf Ore extensions")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    opts: Options,
}

#[derive(clap::Args, Debug)]
struct Options {
    /// Total degree cap for normal forms (for primcoh: the table degree).
    #[arg(long, global = true)]
    cap: Option<u32>,
    /// Random samples for randomized checks.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Work over the extension of this degree of the input field.
    #[arg(long, global = true, default_value_t = 1)]
    field_ext: u32,
    /// Scalar: an integer or a JSON coordinate list such as [0,1].
    #[arg(long, global = true, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    beta: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Validate a document and print it as explicit Ore and Hopf data.
    Define { file: PathBuf },
    Mul { file: PathBuf, a: String, b: String },
    Delta { file: PathBuf, a: String },
    Antipode { file: PathBuf, a: String },
    /// Check the four Hopf axioms.
    CheckHopf {
        file: PathBuf,
        /// Degree of the sampled monomials in the antipode check.
        #[arg(long, default_value_t = 4)]
        sample_degree: u32,
    },
    /// Basis of primitives among monomials up to a total degree.
    Primitives {
        file: PathBuf,
        /// Defaults to p^2.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Centrality of z (or of a given element) and the shape of Δ(z).
    Center { file: PathBuf, element: Option<String> },
    HopfCenter { file: PathBuf },
    /// The fiber algebra over (α, β) as structure constants.
    Fiber { file: PathBuf },
    ClassifyFiber { file: PathBuf },
    Locus { file: PathBuf },
    Restricted { file: PathBuf },
    Iso { a: PathBuf, b: PathBuf },
    Canon { file: PathBuf },
    Grade { file: PathBuf },
    /// Primitive cohomology table of k[X] up to --cap (default 16).
    Primcoh {
        p: u32,
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Also check the named 2-cocycle families.
        #[arg(long)]
        classes: bool,
    },
    /// Winding automorphism of a character; values default to (α, β).
    Winding {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        /// Character values as a JSON list, one per generator.
        #[arg(long)]
        chi: Option<String>,
        /// Largest order to search.
        #[arg(long, default_value_t = 1024)]
        order_cap: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ElementReport {
    pub display: String,
    pub terms: Vec<TermRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TensorReport {
    pub display: String,
    pub terms: Vec<TensorTermRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckHopfReport {
    pub pass: bool,
    #[serde(flatten)]
    pub report: ihoe_core::hopf::HopfReport,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CenterReport {
    pub z: ElementReport,
    pub z_central: CentralityCheck,
    pub delta_z: DeltaZReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<CentralityCheck>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FiberAlgebraReport {
    pub alpha: CoeffRepr,
    pub beta: CoeffRepr,
    pub dim: usize,
    pub algebra: FinDimRepr,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub classification: FiberReport,
    pub simple_dims: Vec<usize>,
    pub sum_of_squares: usize,
    pub algebra_dim: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IsoReport {
    pub isomorphic: bool,
    pub support_mismatch: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<CoeffRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<CoeffRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub searched_degree: Option<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PrimcohReport {
    pub p: u32,
    pub n: u32,
    pub cap: u32,
    pub dims: BTreeMap<u32, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassCheck>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WindingReport {
    pub side: Side,
    pub character: Vec<CoeffRepr>,
    pub images: Vec<ElementReport>,
    /// Absent when the order exceeds the search cap.
    pub order: Option<u64>,
}

fn element_report(l: &Loaded, h: &PbwElement) -> ElementReport {
    let f = l.hopf.field();
    ElementReport {
        display: h.display(f),
        terms: h.to_repr(f),
    }
}

fn tensor_report(l: &Loaded, t: &TensorElement) -> TensorReport {
    let f = l.hopf.field();
    TensorReport {
        display: t.display(f),
        terms: t.to_repr(f),
    }
}

/// What a verb produced: a JSON report and whether its checks passed.
struct Output {
    json: String,
    pass: bool,
}

fn emit<T: Serialize>(report: &T, pass: bool) -> Result<Output, CliError> {
    let json = serde_json::to_string_pretty(report).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Output { json, pass })
}

impl Options {
    fn load(&self, file: &PathBuf) -> Result<Loaded, CliError> {
        Document::read(file)?.load(self.cap, self.field_ext)
    }

    fn scalar(&self, l: &Loaded, name: &str, value: &Option<String>) -> Result<ihoe_core::gf::FieldElt, CliError> {
        let s = value
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("--{name} is required")))?;
        Ok(l.hopf.field().parse_coeff(&parse_scalar(s)?)?)
    }
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let o = &cli.opts;
    match &cli.verb {
        Verb::Define { file } => {
            let l = o.load(file)?;
            emit(&Document::from_hopf(&l.hopf), true)
        }
        Verb::Mul { file, a, b } => {
            let l = o.load(file)?;
            let base = l.hopf.base();
            let x = parse_element(base, a)?;
            let y = parse_element(base, b)?;
            let prod = ihoe_core::orealg::Algebra::mul(base.as_ref(), &x, &y)?;
            emit(&element_report(&l, &prod), true)
        }
        Verb::Delta { file, a } => {
            let l = o.load(file)?;
            let x = parse_element(l.hopf.base(), a)?;
            emit(&tensor_report(&l, &l.hopf.coproduct(&x)?), true)
        }
        Verb::Antipode { file, a } => {
            let l = o.load(file)?;
            let x = parse_element(l.hopf.base(), a)?;
            emit(&element_report(&l, &l.hopf.antipode(&x)?), true)
        }
        Verb::CheckHopf { file, sample_degree } => {
            let l = o.load(file)?;
            let report = l.hopf.verify_hopf(*sample_degree, o.samples, o.seed)?;
            let pass = report.all_pass();
            emit(&CheckHopfReport { pass, report }, pass)
        }
        Verb::Primitives { file, degree } => {
            let l = o.load(file)?;
            let p = l.hopf.field().p();
            let basis = l.hopf.primitives_up_to(degree.unwrap_or(p * p))?;
            let basis: Vec<_> = basis.iter().map(|h| element_report(&l, h)).collect();
            emit(&basis, true)
        }
        Verb::Center { file, element } => {
            let l = o.load(file)?;
            let h = l.ihoe()?;
            let z = h.z()?;
            let z_central = is_central(h.base(), &z)?;
            let delta_z = delta_z_check(h)?;
            let element = match element {
                Some(s) => Some(is_central(h.base(), &parse_element(h.base(), s)?)?),
                None => None,
            };
            let pass = z_central.central && delta_z.pass;
            let report = CenterReport {
                z: element_report(&l, &z),
                z_central,
                delta_z,
                element,
            };
            emit(&report, pass)
        }
        Verb::HopfCenter { file } => {
            let l = o.load(file)?;
            emit(&hopf_center(l.ihoe()?)?, true)
        }
        Verb::Fiber { file } => {
            let l = o.load(file)?;
            let (alpha, beta) = (o.scalar(&l, "alpha", &o.alpha)?, o.scalar(&l, "beta", &o.beta)?);
            let q = quotient_fiber(l.ihoe()?, alpha, beta)?;
            let f = l.hopf.field();
            let report = FiberAlgebraReport {
                alpha: f.coeff_repr(alpha),
                beta: f.coeff_repr(beta),
                dim: q.algebra().dim(),
                algebra: q.algebra().to_repr(),
            };
            emit(&report, true)
        }
        Verb::ClassifyFiber { file } => {
            let l = o.load(file)?;
            let (alpha, beta) = (o.scalar(&l, "alpha", &o.alpha)?, o.scalar(&l, "beta", &o.beta)?);
            let c = classify_fiber(l.ihoe()?, alpha, beta)?;
            let census = simple_census(&c.algebra, &c)?;
            let report = ClassifyReport {
                classification: c.report(),
                simple_dims: census.dims,
                sum_of_squares: census.sum_of_squares,
                algebra_dim: census.algebra_dim,
            };
            emit(&report, true)
        }
        Verb::Locus { file } => {
            let l = o.load(file)?;
            let params = l.ihoe()?.params();
            emit(&nonazumaya_locus(params, params.field())?, true)
        }
        Verb::Restricted { file } => {
            let l = o.load(file)?;
            let r = restricted_quotient(l.ihoe()?)?;
            emit(&r.report(), r.pass())
        }
        Verb::Iso { a, b } => {
            let p = Document::read(a)?.params(o.field_ext)?;
            let q = Document::read(b)?.params(o.field_ext)?;
            let report = match iso_scalars(&p, &q)? {
                IsoOutcome::Isomorphic(w) => IsoReport {
                    isomorphic: true,
                    support_mismatch: false,
                    field: Some(w.field.spec()),
                    alpha: Some(w.field.coeff_repr(w.alpha)),
                    beta: Some(w.field.coeff_repr(w.beta)),
                    extension_degree: Some(w.extension_degree),
                    searched_degree: None,
                },
                IsoOutcome::SupportMismatch => IsoReport {
                    isomorphic: false,
                    support_mismatch: true,
                    field: None,
                    alpha: None,
                    beta: None,
                    extension_degree: None,
                    searched_degree: None,
                },
                IsoOutcome::NotFound { searched_degree } => IsoReport {
                    isomorphic: false,
                    support_mismatch: false,
                    field: None,
                    alpha: None,
                    beta: None,
                    extension_degree: None,
                    searched_degree: Some(searched_degree),
                },
            };
            let pass = report.isomorphic;
            emit(&report, pass)
        }
        Verb::Canon { file } => {
            let p = Document::read(file)?.params(o.field_ext)?;
            emit(&Document::from_params(&canonical_form(&p)?), true)
        }
        Verb::Grade { file } => {
            let l = o.load(file)?;
            let a = assign_degrees(&l.hopf)?;
            let report = graded_commutative_report(&l.hopf, &a, o.samples, o.seed)?;
            let pass = report.pass;
            emit(&report, pass)
        }
        Verb::Primcoh { p, n, classes } => {
            let cap = o.cap.unwrap_or(16);
            let dims = pp_dims(*p, *n, cap)?;
            let classes = if *classes { Some(verify_classes(*p, cap)?) } else { None };
            let pass = classes.as_ref().is_none_or(|c| c.iter().all(ClassCheck::pass));
            emit(
                &PrimcohReport {
                    p: *p,
                    n: *n,
                    cap,
                    dims,
                    classes,
                },
                pass,
            )
        }
        Verb::Winding {
            file,
            side,
            chi,
            order_cap,
        } => {
            let l = o.load(file)?;
            let f = l.hopf.field();
            let values = match chi {
                Some(s) => {
                    let reprs: Vec<CoeffRepr> =
                        serde_json::from_str(s).map_err(|e| CliError::Usage(format!("--chi: {e}")))?;
                    reprs.iter().map(|c| f.parse_coeff(c)).collect::<Result<Vec<_>, _>>()?
                }
                None => vec![o.scalar(&l, "alpha", &o.alpha)?, o.scalar(&l, "beta", &o.beta)?],
            };
            let character = l.hopf.character(values.clone())?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let w = l.hopf.winding(&character, side, *order_cap)?;
            let report = WindingReport {
                side,
                character: values.iter().map(|&v| f.coeff_repr(v)).collect(),
                images: w.images.iter().map(|h| element_report(&l, h)).collect(),
                order: w.order,
            };
            emit(&report, true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout().lock(), "{}", out.json);
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
