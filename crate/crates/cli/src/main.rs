//! `einfty`: command-line access to the operad kernel.
//!
//! Elements are given as literals in the same notation the tool prints,
//! e.g. `einfty --kind surjection boundary "(1,2,1,3)"`, or as JSON
//! documents (detected by a leading `{`). A missing element argument is read
//! from standard input.
//!
//! Exit status: 0 on success, 2 when the input cannot be read as the
//! requested kind, 3 when a well-formed request is outside the domain of the
//! operation.

mod element;
mod error;
mod literal;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use einfty::{
    act_cubical, act_simplicial, psi_be, psi_surj, steenrod_chain, BarrattEcclesElement, ChainContext, ChainElement,
    Convention, SteenrodRequest, Torsion,
};

use element::{Element, Kind};
use error::CliError;

#[derive(Parser)]
#[command(name = "einfty", version, about = "Exact computations in the surjection and Barratt–Eccles operads")]
struct Cli {
    /// Kind of the element literals.
    #[arg(long, global = true, value_enum)]
    kind: Option<Kind>,
    /// Coefficient ring: 0 for the integers, n for ℤ/n.
    #[arg(long, global = true, default_value_t = 0)]
    torsion: u64,
    /// Sign convention for surjections [default: berger-fresse, mcclure-smith for `act`].
    #[arg(long, global = true, value_enum)]
    convention: Option<ConventionArg>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    BergerFresse,
    McclureSmith,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::BergerFresse => Convention::BergerFresse,
            ConventionArg::McclureSmith => Convention::McClureSmith,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ContextArg {
    Simplicial,
    Cubical,
}

impl From<ContextArg> for ChainContext {
    fn from(c: ContextArg) -> Self {
        match c {
            ContextArg::Simplicial => ChainContext::Simplicial,
            ContextArg::Cubical => ChainContext::Cubical,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Operad {
    Surjection,
    BarrattEccles,
}

#[derive(Subcommand)]
enum Command {
    /// Parse elements and print them back in the chosen format, one per line.
    Render {
        #[arg(allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Boundary of an operad element or a chain.
    Boundary {
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Partial composition `left ∘_i right`.
    Compose {
        #[arg(long)]
        position: usize,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Product in the group ring of a symmetric group.
    Product {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Left action of a group-ring element (a perm-ring literal).
    Permute {
        #[arg(long, allow_hyphen_values = true)]
        by: String,
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Alexander–Whitney diagonal of a Barratt–Eccles element.
    Diagonal {
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Complexity of a surjection or Barratt–Eccles element.
    Complexity {
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Table reduction of a Barratt–Eccles element to the surjection operad.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Re-express a surjection element in another sign convention.
    Convert {
        #[arg(long, value_enum)]
        to: ConventionArg,
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Action of a surjection element on the top cell of a standard simplex or cube.
    Act {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = ContextArg::Simplicial)]
        context: ContextArg,
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Steenrod–Adem structure ψ_r(e_i).
    Psi {
        #[arg(long, value_enum)]
        operad: Operad,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 'i')]
        i: usize,
    },
    /// Chain representing P_s (or βP_s) on a cocycle of degree q.
    Steenrod {
        #[arg(long)]
        prime: u64,
        #[arg(short = 's', allow_negative_numbers = true)]
        s: i64,
        #[arg(short = 'q', allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        bockstein: bool,
        #[arg(long, value_enum, default_value_t = ContextArg::Simplicial)]
        context: ContextArg,
    },
}

enum Output {
    Element(Element),
    Many(Vec<Element>),
    Number(usize),
}

struct Session {
    kind: Option<Kind>,
    torsion: Torsion,
    convention: Option<Convention>,
}

impl Session {
    fn read(&self, src: Option<String>, default: Convention) -> Result<Element, CliError> {
        let src = match src {
            Some(s) if s != "-" => s,
            _ => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            }
        };
        element::read(&src, self.kind, self.torsion, self.convention.unwrap_or(default))
    }

    fn read_default(&self, src: Option<String>) -> Result<Element, CliError> {
        self.read(src, Convention::BergerFresse)
    }
}

fn unsupported(op: &str, e: &Element) -> CliError {
    CliError::Domain(format!("{op} is not defined for {} elements", e.kind_name()))
}

fn mismatch(a: &Element, b: &Element) -> CliError {
    CliError::Shape(format!("cannot combine {} with {}", a.kind_name(), b.kind_name()))
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let session = Session { kind: cli.kind, torsion: Torsion(cli.torsion), convention: cli.convention.map(Into::into) };
    let out = match cli.command {
        Command::Render { elements } if elements.is_empty() => session.read_default(None)?,
        Command::Render { elements } => {
            let parsed = elements.into_iter().map(|e| session.read_default(Some(e))).collect::<Result<_, _>>()?;
            return Ok(Output::Many(parsed));
        }
        Command::Boundary { element } => match session.read_default(element)? {
            Element::Surjection(e) => Element::Surjection(e.boundary()),
            Element::BarrattEccles(e) => Element::BarrattEccles(e.boundary()),
            Element::Simplicial(e) => Element::Simplicial(e.boundary()),
            Element::Cubical(e) => Element::Cubical(e.boundary()),
            other => return Err(unsupported("the boundary", &other)),
        },
        Command::Compose { position, left, right } => {
            match (session.read_default(Some(left))?, session.read_default(Some(right))?) {
                (Element::Surjection(a), Element::Surjection(b)) => Element::Surjection(a.compose(&b, position)?),
                (Element::BarrattEccles(a), Element::BarrattEccles(b)) => {
                    Element::BarrattEccles(a.compose(&b, position)?)
                }
                (Element::PermRing(a), Element::PermRing(b)) => Element::PermRing(a.compose(&b, position)?),
                (a, b) if a.kind_name() == b.kind_name() => return Err(unsupported("composition", &a)),
                (a, b) => return Err(mismatch(&a, &b)),
            }
        }
        Command::Product { left, right } => {
            match (session.read_default(Some(left))?, session.read_default(Some(right))?) {
                (Element::PermRing(a), Element::PermRing(b)) => Element::PermRing(a.product(&b)?),
                (a, b) if a.kind_name() == b.kind_name() => return Err(unsupported("the group-ring product", &a)),
                (a, b) => return Err(mismatch(&a, &b)),
            }
        }
        Command::Permute { by, element } => {
            let ring = Session { kind: Some(Kind::PermRing), ..session };
            let Element::PermRing(pi) = ring.read_default(Some(by))? else {
                return Err(CliError::Shape("--by must be a perm-ring element".into()));
            };
            match (Session { kind: cli.kind, ..ring }).read_default(element)? {
                Element::Surjection(e) => Element::Surjection(e.act_by(&pi)?),
                Element::BarrattEccles(e) => Element::BarrattEccles(e.act_by(&pi)?),
                Element::PermRing(e) => Element::PermRing(pi.product(&e)?),
                other => return Err(unsupported("the symmetric action", &other)),
            }
        }
        Command::Diagonal { element } => match session.read_default(element)? {
            Element::BarrattEccles(e) => Element::Tensor(e.diagonal()),
            other => return Err(unsupported("the diagonal", &other)),
        },
        Command::Complexity { element } => match session.read_default(element)? {
            Element::Surjection(e) => return Ok(Output::Number(e.complexity())),
            Element::BarrattEccles(e) => return Ok(Output::Number(e.complexity())),
            other => return Err(unsupported("complexity", &other)),
        },
        Command::Reduce { element } => match session.read_default(element)? {
            Element::BarrattEccles(e) => Element::Surjection(e.table_reduction()),
            other => return Err(unsupported("table reduction", &other)),
        },
        Command::Convert { to, element } => match session.read_default(element)? {
            Element::Surjection(e) => Element::Surjection(e.with_convention(to.into())),
            other => return Err(unsupported("a convention change", &other)),
        },
        Command::Act { dim, context, element } => match session.read(element, Convention::McClureSmith)? {
            Element::Surjection(e) => match context {
                ContextArg::Simplicial => Element::Simplicial(act_simplicial(&e, dim)),
                ContextArg::Cubical => Element::Cubical(act_cubical(&e, dim)),
            },
            other => return Err(unsupported("the action on chains", &other)),
        },
        Command::Psi { operad, r, i } => {
            if r == 0 {
                return Err(CliError::Domain("ψ needs a positive arity".into()));
            }
            match operad {
                Operad::Surjection => {
                    let mut e = psi_surj(r, i).set_torsion(session.torsion);
                    if let Some(c) = session.convention {
                        e = e.with_convention(c);
                    }
                    Element::Surjection(e)
                }
                Operad::BarrattEccles => {
                    let e = psi_be(r, i);
                    let terms = e.module().iter().map(|(k, c)| (k.clone(), *c));
                    Element::BarrattEccles(BarrattEcclesElement::new(terms, session.torsion)?)
                }
            }
        }
        Command::Steenrod { prime, s, q, bockstein, context } => {
            let req = SteenrodRequest { prime, s, q, bockstein, context: context.into() };
            match steenrod_chain(&req)? {
                ChainElement::Simplicial(e) => Element::Simplicial(e),
                ChainElement::Cubical(e) => Element::Cubical(e),
            }
        }
    };
    Ok(Output::Element(out))
}

fn render_element(e: &Element, format: Format) -> String {
    match format {
        Format::Text => e.text(),
        Format::Latex => e.latex(),
        Format::Json => serde_json::to_string(&e.to_json()).expect("serializable"),
    }
}

fn render(out: &Output, format: Format) -> String {
    match (out, format) {
        (Output::Number(n), Format::Json) => serde_json::json!({ "complexity": n }).to_string(),
        (Output::Number(n), _) => n.to_string(),
        (Output::Element(e), _) => render_element(e, format),
        (Output::Many(items), _) => items.iter().map(|e| render_element(e, format)).collect::<Vec<_>>().join("\n"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            println!("{}", render(&out, format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
