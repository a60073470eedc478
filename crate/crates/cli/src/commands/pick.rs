//! Pick decomposition trees of primitive rank-2 classes.

use serde_json::{json, Value};
use stabkit::knum::{nonempty_tree, KClassKu, KuBasis, PickTree};

use super::Output;
use crate::error::{CliError, CliResult};

fn node_json(t: &PickTree) -> Value {
    match t {
        PickTree::Leaf { v, orbit } => json!({ "v": [v.a, v.b], "orbit": orbit.tag() }),
        PickTree::Node {
            v,
            chi_plus_minus,
            minus,
            plus,
        } => json!({
            "v": [v.a, v.b],
            "chi_plus_minus": chi_plus_minus,
            "minus": node_json(minus),
            "plus": node_json(plus),
        }),
    }
}

fn node_text(t: &PickTree, prefix: &str, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match t {
        PickTree::Leaf { v, orbit } => {
            out.push_str(&format!("{pad}{prefix}{v}  leaf {}\n", orbit.tag()))
        }
        PickTree::Node {
            v,
            chi_plus_minus,
            minus,
            plus,
        } => {
            out.push_str(&format!(
                "{pad}{prefix}{v}  chi(v+, v-) = {chi_plus_minus}\n"
            ));
            node_text(minus, "v- ", depth + 1, out);
            node_text(plus, "v+ ", depth + 1, out);
        }
    }
}

pub fn run(a: i64, b: i64, basis: &str) -> CliResult<Output> {
    let basis = match basis {
        "kappa" => KuBasis::Kappa,
        "kappabar" => KuBasis::KappaBar,
        _ => {
            return Err(CliError::Usage(format!(
                "unknown basis '{basis}' (expected kappa or kappabar)"
            )))
        }
    };
    let tree = nonempty_tree(&KClassKu { basis, a, b })?;
    let mut text = String::new();
    node_text(&tree, "", 0, &mut text);
    let leaves: Vec<Value> = tree
        .leaves()
        .iter()
        .map(|(v, o)| json!({ "v": [v.a, v.b], "orbit": o.tag() }))
        .collect();
    let json = json!({ "basis": basis.name(), "depth": tree.depth(), "tree": node_json(&tree), "leaves": leaves });
    Ok(Output { text, json })
}
