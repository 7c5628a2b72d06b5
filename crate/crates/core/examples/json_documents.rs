// Spec and solution documents as read by the command-line tool.

use lcw::equation::{validate_conditions, TheoremProfile};
use lcw::json::{from_json_str, SolutionDoc, SpecDoc};
use lcw::separation::{bivariate_expand, separate_minimal};

const SPEC: &str = r#"{
  "d": 1,
  "pairs": [
    {"c": [[1]]},
    {"b": [[2]], "c": [["-1/2"]]}
  ],
  "profile": "thm2.1"
}"#;

const SOLUTION: &str = r#"{
  "f": [
    "x1^2",
    {"dim": 1, "terms": [{"frequency": [{"re": 1, "im": 0}], "monomial": [1], "coefficient": [{"c": {"re": 3, "im": 0}}]}]}
  ]
}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec_doc: SpecDoc = from_json_str(SPEC)?;
    let spec = spec_doc.to_spec()?;
    let profile = spec_doc.profile()?.unwrap_or(TheoremProfile::Thm21);
    println!("{profile}: {}", validate_conditions(&spec, profile).pass);

    let sol = from_json_str::<SolutionDoc>(SOLUTION)?.to_solution(spec.d())?;
    let sep = separate_minimal(&bivariate_expand(&spec, &sol)?);
    println!("n = {}", sep.n());

    let back = serde_json::to_string_pretty(&SpecDoc::from_spec(&spec, Some(profile)))?;
    println!("{back}");
    println!("{}", serde_json::to_string(&SolutionDoc::from_solution(&sol))?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
