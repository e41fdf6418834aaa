//! The work behind each CLI subcommand. Every command returns the text to
//! print on stdout; `main` maps the error class to the exit code
//! (invalid input → 2, violated internal invariant → 3).

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use maxplus_core::{
    check, extremal_bruteforce, find_witness, verify_decomposition, Error, MaxPlusMatrix,
    MaxPlusVector, OracleVerdict, Result, TangentDigraph,
};
use serde_json::{json, Value};

use crate::bench;
use crate::gen::{generate, GenParams};
use crate::instance::{parse_instance, parse_vector_text, write_instance};

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

/// Loads a matrix and its vector. The vector may sit in the instance file
/// (after a blank line) or in a separate file — exactly one of the two.
pub fn load_instance(
    instance: &Path,
    vector: Option<&Path>,
) -> Result<(MaxPlusMatrix, MaxPlusVector)> {
    let text = read_file(instance)?;
    let (a, embedded) = parse_instance(&text)?;
    let x = match (embedded, vector) {
        (Some(_), Some(_)) => {
            return Err(Error::invalid(
                "the vector appears both in the instance file and via --vector; pick one",
            ))
        }
        (Some(x), None) => x,
        (None, Some(path)) => parse_vector_text(&read_file(path)?, a.n())?,
        (None, None) => {
            return Err(Error::invalid(
                "no vector given: append it to the instance file after a blank line, \
                 or pass --vector FILE",
            ))
        }
    };
    Ok((a, x))
}

/// `check` (and its `witness` alias): prints the verdict as JSON.
pub fn cmd_check(instance: &Path, vector: Option<&Path>, with_witness: bool) -> Result<String> {
    let (a, x) = load_instance(instance, vector)?;
    let verdict = check(&a, &x)?;
    let witness = if with_witness {
        let pair = find_witness(&a, &x, &verdict)?;
        if let Some(pair) = &pair {
            // The pair came from this very process; it failing to verify
            // is a bug, not bad input.
            verify_decomposition(&a, &x, pair)
                .map_err(|e| Error::invariant(format!("produced witness fails to verify: {e}")))?;
        }
        pair
    } else {
        None
    };
    Ok(pretty(&verdict.to_json(witness.as_ref())))
}

/// `classify`: one line per support node, or DOT / JSON renderings.
pub fn cmd_classify(
    instance: &Path,
    vector: Option<&Path>,
    dot: bool,
    as_json: bool,
) -> Result<String> {
    if dot && as_json {
        return Err(Error::invalid("pick at most one of --dot and --json"));
    }
    let (a, x) = load_instance(instance, vector)?;
    let g = TangentDigraph::build(&a, &x)?;
    if dot {
        return Ok(g.to_dot());
    }
    if as_json {
        let nodes = g
            .nodes()
            .iter()
            .map(|&i| {
                Ok(json!({
                    "node": i + 1,
                    "class": g.classify_node(i)?.label(),
                    "in_degree": g.in_degree(i),
                    "out_degree": g.out_degree(i),
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(pretty(&json!({
            "nodes": nodes,
            "weakly_connected": g.is_weakly_connected(),
        })));
    }
    let mut out = String::from("node  class        in  out\n");
    for &i in g.nodes() {
        let class = g.classify_node(i)?;
        let _ = writeln!(
            out,
            "{:>4}  {:<11} {:>3} {:>4}",
            i + 1,
            class.label(),
            g.in_degree(i),
            g.out_degree(i)
        );
    }
    let components = g.weak_components().len();
    let _ = writeln!(
        out,
        "weakly connected: {}",
        if components == 1 {
            "yes".to_string()
        } else {
            format!("no ({components} components)")
        }
    );
    Ok(out)
}

/// `oracle`: exhaustive cross-check against the graph procedure. Small
/// supports only; disagreement is an internal error (exit 3).
pub fn cmd_oracle(instance: &Path, vector: Option<&Path>) -> Result<String> {
    let (a, x) = load_instance(instance, vector)?;
    let fast = check(&a, &x)?;
    let slow = extremal_bruteforce(&a, &x)?;
    if slow.is_extremal() != fast.is_extremal {
        return Err(Error::invariant(format!(
            "the exhaustive search says {} but the graph procedure says {}",
            verdict_word(slow.is_extremal()),
            verdict_word(fast.is_extremal),
        )));
    }
    let witness = match &slow {
        OracleVerdict::Extremal => Value::Null,
        OracleVerdict::NotExtremal(pair) => pair.to_json(),
    };
    Ok(pretty(&json!({
        "extremal": slow.is_extremal(),
        "agrees_with_check": true,
        "witness": witness,
    })))
}

fn verdict_word(extremal: bool) -> &'static str {
    if extremal {
        "extremal"
    } else {
        "non-extremal"
    }
}

/// `gen`: prints a random instance in the canonical text format.
pub fn cmd_gen(params: &GenParams) -> Result<String> {
    let (a, x) = generate(params)?;
    Ok(write_instance(&a, Some(&x)))
}

/// `bench`: times the decision procedure across sizes.
pub fn cmd_bench(
    sizes: &[usize],
    seed: u64,
    reps: usize,
    density: f64,
    as_json: bool,
) -> Result<String> {
    let rows = bench::run(sizes, seed, reps, density)?;
    if as_json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "median_secs": r.median_secs,
                    "slope": r.slope,
                })
            })
            .collect();
        Ok(pretty(&json!({ "rows": rows })))
    } else {
        Ok(bench::format_table(&rows))
    }
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON rendering cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    const MATRIX: &str = "5\n\
        -5 0 -inf -inf -inf\n\
        0 -inf -inf -inf -inf\n\
        0 -inf -inf -inf -inf\n\
        -inf -inf -3 -inf 0\n\
        -inf -inf -inf 0 -inf\n";

    #[test]
    fn vector_must_come_from_exactly_one_place() {
        let with_vec = write_temp(&format!("{MATRIX}\n0 0 0 -3 -inf\n"));
        let without = write_temp(MATRIX);
        let vec_file = write_temp("0 0 0 -3 -inf\n");

        assert!(load_instance(with_vec.path(), None).is_ok());
        assert!(load_instance(without.path(), Some(vec_file.path())).is_ok());
        assert!(load_instance(without.path(), None).is_err());
        assert!(load_instance(with_vec.path(), Some(vec_file.path())).is_err());
    }

    #[test]
    fn check_emits_the_verdict_json() {
        let f = write_temp(&format!("{MATRIX}\n0 0 0 -3 -inf\n"));
        let out = cmd_check(f.path(), None, false).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["extremal"], Value::Bool(true));
        assert_eq!(v["condition"], Value::Null);
    }

    #[test]
    fn witness_request_attaches_a_pair() {
        let f = write_temp(&format!("{MATRIX}\n0 0 0 0 0\n"));
        let out = cmd_check(f.path(), None, true).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["extremal"], Value::Bool(false));
        assert_eq!(v["condition"], "ISOLATED_SUBSET");
        assert!(v["witness"]["x1"].is_array());
    }

    #[test]
    fn classify_tabulates_all_support_nodes() {
        let f = write_temp(&format!("{MATRIX}\n0 0 0 -3 -inf\n"));
        let out = cmd_classify(f.path(), None, false, false).unwrap();
        assert!(out.contains("I-variable"));
        assert!(out.lines().count() >= 5);
        let dot = cmd_classify(f.path(), None, true, false).unwrap();
        assert!(dot.starts_with("digraph"));
        assert!(cmd_classify(f.path(), None, true, true).is_err());
    }

    #[test]
    fn oracle_agrees_on_the_reference_instance() {
        let f = write_temp(&format!("{MATRIX}\n0 0 0 0 0\n"));
        let out = cmd_oracle(f.path(), None).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["extremal"], Value::Bool(false));
        assert_eq!(v["agrees_with_check"], Value::Bool(true));
        assert!(v["witness"]["x1"].is_array());
    }

    #[test]
    fn gen_output_feeds_back_into_check() {
        let params = GenParams {
            n: 4,
            density: 0.5,
            min: -5,
            max: 5,
            seed: 11,
        };
        let text = cmd_gen(&params).unwrap();
        let f = write_temp(&text);
        let out = cmd_check(f.path(), None, true).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["extremal"].is_boolean());
    }

    #[test]
    fn missing_files_are_input_errors() {
        let err = cmd_check(Path::new("/nonexistent/instance.txt"), None, false).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }
}
