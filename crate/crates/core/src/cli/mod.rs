//! Command implementations behind the `hopfcalc` binary.

pub mod document;
pub mod parser;

use thiserror::Error;

use crate::coalgebra::{check_coassociativity, check_cofiltered, check_cograded, check_counicity, check_degree_drop};
use crate::error::Error;
use crate::hopf::{antipode, check_bialgebra, verify_antipode, Algorithm, Bialgebra, EndoMap};
use crate::instances::{BrokenShuffle, ConnesKreimer, Perturbation, Polynomial, QuasiShuffle, Shuffle};
use crate::report::Check;

pub use document::{ReportDocument, ResultPayload};
pub use parser::{parse_coalgebra_expression, parse_expression, ParseError, Syntax};

use document::{summarize, summarize_filtration, AlgorithmValue, ElementJson, TensorJson};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Compute(#[from] Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgorithmChoice {
    One(Algorithm),
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Antipode { expression: String, algorithm: AlgorithmChoice },
    Coproduct { expression: String, reduced: bool, iterate: usize },
    Filtration { expression: String },
    Verify { checks: Vec<Check> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Antipode { .. } => "antipode",
            Command::Coproduct { .. } => "coproduct",
            Command::Filtration { .. } => "filtration",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Which instance to run against, with its enumeration parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceChoice {
    Poly,
    Shuffle { alphabet_size: u8 },
    QuasiShuffle { max_weight: u32 },
    ConnesKreimer,
    Broken { alphabet_size: u8 },
}

impl InstanceChoice {
    pub const NAMES: [&'static str; 5] = ["poly", "shuffle", "quasishuffle", "ck", "broken"];
}

pub fn run(choice: InstanceChoice, command: &Command, max_degree: usize) -> Result<ReportDocument, CliError> {
    match choice {
        InstanceChoice::Poly => run_on(&Polynomial, command, max_degree),
        InstanceChoice::Shuffle { alphabet_size } => run_on(&Shuffle::new(alphabet_size), command, max_degree),
        InstanceChoice::QuasiShuffle { max_weight } => run_on(&QuasiShuffle::new(max_weight), command, max_degree),
        InstanceChoice::ConnesKreimer => run_on(&ConnesKreimer::new(), command, max_degree),
        InstanceChoice::Broken { alphabet_size } => {
            run_on(&BrokenShuffle::new(alphabet_size, Perturbation::DoubledMiddleTerm), command, max_degree)
        }
    }
}

pub fn run_on<H: Bialgebra + Syntax>(h: &H, command: &Command, max_degree: usize) -> Result<ReportDocument, CliError> {
    let result = match command {
        Command::Antipode { expression, algorithm } => {
            let input = parse_expression(expression, h)?;
            let algorithms: Vec<Algorithm> = match algorithm {
                AlgorithmChoice::One(a) => vec![*a],
                AlgorithmChoice::All => Algorithm::ALL.to_vec(),
            };
            let values =
                algorithms.iter().map(|&a| antipode(h, &input, a).map(|v| (a, v))).collect::<Result<Vec<_>, _>>()?;
            let agreement = (values.len() > 1).then(|| values.windows(2).all(|w| w[0].1 == w[1].1));
            ResultPayload::Element {
                input: ElementJson::from(&input),
                values: values
                    .iter()
                    .map(|(a, v)| AlgorithmValue { algorithm: *a, value: ElementJson::from(v) })
                    .collect(),
                agreement,
            }
        }
        Command::Coproduct { expression, reduced, iterate } => {
            let input = parse_coalgebra_expression(expression, h)?;
            let value = if *reduced {
                h.iterated_reduced_coproduct(&input, *iterate)?
            } else {
                h.iterated_coproduct(&input, *iterate)?
            };
            ResultPayload::Tensor {
                input: ElementJson::from(&input),
                reduced: *reduced,
                iterate: *iterate,
                value: TensorJson::from(&value),
            }
        }
        Command::Filtration { expression } => {
            let input = parse_coalgebra_expression(expression, h)?;
            let chain = h.reduced_coproduct_chain(&input)?;
            ResultPayload::Index {
                input: ElementJson::from(&input),
                index: chain.len(),
                chain: chain.iter().map(|t| t.len()).collect(),
            }
        }
        Command::Verify { checks } => {
            let mut doc = ReportDocument::new(
                h.name(),
                command.name(),
                max_degree,
                ResultPayload::Report { passed: true, checks: vec![] },
            );
            let mut summaries = vec![];
            for &check in checks {
                let (summary, violations) = run_check(h, check, max_degree);
                summaries.push(summary);
                doc.violations.extend(violations);
            }
            doc.result = ResultPayload::Report { passed: summaries.iter().all(|s| s.passed), checks: summaries };
            return Ok(doc);
        }
    };
    Ok(ReportDocument::new(h.name(), command.name(), max_degree, result))
}

fn run_check<H: Bialgebra>(
    h: &H,
    check: Check,
    bound: usize,
) -> (document::CheckSummary, Vec<document::ViolationJson>) {
    match check {
        Check::Coassociativity => summarize(&check_coassociativity(h, bound)),
        Check::Counicity => summarize(&check_counicity(h, bound)),
        Check::Cograded => summarize_filtration(check, &check_cograded(h, bound), h.enumerate_basis(bound).len()),
        Check::Cofiltered => summarize_filtration(check, &check_cofiltered(h, bound), h.enumerate_basis(bound).len()),
        Check::DegreeDrop => summarize(&check_degree_drop(h, bound)),
        Check::Bialgebra => summarize(&check_bialgebra(h, bound)),
        Check::Antipode => summarize(&verify_antipode(h, &EndoMap::antipode(h, Algorithm::Series), bound)),
    }
}
