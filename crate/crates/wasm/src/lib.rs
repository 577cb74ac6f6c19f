//! Browser bindings for the interactive demo in `www/`.
//!
//! Graphs cross the boundary as edge-list text and results come back as
//! JSON strings. The `*_json` functions hold the logic and are plain Rust so
//! they can be tested natively; the `#[wasm_bindgen]` exports wrap them.

use lamplight::graph::{generate, parse_graph, random_connected, write_graph, Format, GraphKind};
use lamplight::report::lamp_states;
use lamplight::{solve_report, Graph, Problem};
use serde::Serialize;
use wasm_bindgen::prelude::*;

const NULLITY_CAP: usize = 16;

fn parse(text: &str) -> Result<Graph, String> {
    parse_graph(text, Format::detect(text)).map_err(|e| e.to_string())
}

fn problem(name: &str) -> Result<Problem, String> {
    name.parse().map_err(|e: lamplight::Error| e.to_string())
}

/// Edge-list text for a named family: `path`, `cycle`, `star`, `complete`,
/// `tree`, `random` (connected, about `n` extra edges) or `grid` (2 x n/2).
pub fn generate_text(kind: &str, n: usize, seed: u64) -> Result<String, String> {
    let g = match kind {
        "path" => generate(GraphKind::Path(n)),
        "cycle" => generate(GraphKind::Cycle(n)),
        "star" => generate(GraphKind::Star(n)),
        "complete" => generate(GraphKind::Complete(n)),
        "tree" => generate(GraphKind::RandomTree { n, seed }),
        "random" => random_connected(n, n / 2, seed),
        "grid" => {
            let w = n.div_ceil(2);
            let mut edges: Vec<(usize, usize)> = (0..w).map(|i| (i, i + w)).collect();
            for i in 1..w {
                edges.push((i - 1, i));
                edges.push((w + i - 1, w + i));
            }
            Graph::from_edges(2 * w, edges)
        }
        other => return Err(format!("unknown graph family '{other}'")),
    }
    .map_err(|e| e.to_string())?;
    Ok(write_graph(&g, Format::EdgeList))
}

/// Solution report for `problem` (`vv`, `ve`, `ev`, `ee`) as JSON.
pub fn solve_json(graph: &str, problem_name: &str, minimum: bool) -> Result<String, String> {
    let g = parse(graph)?;
    let report = solve_report(&g, problem(problem_name)?, minimum, NULLITY_CAP)
        .map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&report).expect("report serialises"))
}

#[derive(Serialize)]
struct LampView {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Lamps live on vertices for `vv`/`ev`, on edges for `ve`/`ee`.
    lamps_on_edges: bool,
    lit: Vec<bool>,
    all_lit: bool,
}

/// Lamp states after pressing the given vertex or edge ids, as JSON.
pub fn press_json(graph: &str, problem_name: &str, presses: &[usize]) -> Result<String, String> {
    let g = parse(graph)?;
    let p = problem(problem_name)?;
    let lit = lamp_states(&g, p, presses).map_err(|e| e.to_string())?;
    let view = LampView {
        n: g.n(),
        edges: g.edges().to_vec(),
        lamps_on_edges: matches!(p, Problem::Ve | Problem::Ee),
        all_lit: lit.iter().all(|&b| b),
        lit,
    };
    Ok(serde_json::to_string(&view).expect("view serialises"))
}

#[wasm_bindgen]
pub fn generate_graph(kind: &str, n: usize, seed: u64) -> Result<String, JsError> {
    generate_text(kind, n, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve(graph: &str, problem: &str, minimum: bool) -> Result<String, JsError> {
    solve_json(graph, problem, minimum).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn press(graph: &str, problem: &str, presses: Vec<usize>) -> Result<String, JsError> {
    press_json(graph, problem, &presses).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn generated_graphs_parse() {
        for kind in [
            "path", "cycle", "star", "complete", "tree", "random", "grid",
        ] {
            let text = generate_text(kind, 6, 1).unwrap();
            assert_eq!(parse(&text).unwrap().n(), 6, "{kind}");
        }
        assert!(generate_text("wheel", 6, 1).is_err());
        assert!(generate_text("cycle", 2, 1).is_err());
    }

    #[test]
    fn solving_then_pressing_lights_everything() {
        let g = generate_text("grid", 8, 0).unwrap();
        for p in ["vv", "ve", "ev", "ee"] {
            let report: Value = serde_json::from_str(&solve_json(&g, p, true).unwrap()).unwrap();
            assert_eq!(report["feasible"], true, "{p}");
            let witness: Vec<usize> = serde_json::from_value(report["witness"].clone()).unwrap();
            let view: Value = serde_json::from_str(&press_json(&g, p, &witness).unwrap()).unwrap();
            assert_eq!(view["all_lit"], true, "{p}");
        }
    }

    #[test]
    fn minimum_on_c4() {
        let g = generate_text("cycle", 4, 0).unwrap();
        let report: Value = serde_json::from_str(&solve_json(&g, "ev", true).unwrap()).unwrap();
        assert_eq!(report["size"], 2);
        assert_eq!(report["optimal"], true);
    }

    #[test]
    fn pressing_nothing_lights_nothing() {
        let g = generate_text("path", 3, 0).unwrap();
        let view: Value = serde_json::from_str(&press_json(&g, "ve", &[]).unwrap()).unwrap();
        assert_eq!(view["lamps_on_edges"], true);
        assert_eq!(view["lit"], serde_json::json!([false, false]));
        assert!(press_json(&g, "ev", &[7]).is_err());
        assert!(solve_json("garbage", "ev", false).is_err());
        assert!(solve_json(&g, "xy", false).is_err());
    }
}
