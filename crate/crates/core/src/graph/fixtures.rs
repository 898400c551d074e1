//! Built-in fixtures, mostly small cubic cages.

use super::{analyze, parse_lcf, Extent, Graph, GraphError};

/// Named fixtures accepted by [`builtin`], plus representative members of
/// the parameterised families `C{n}` and `complete{m}`.
pub const BUILTIN_NAMES: &[&str] =
    &["K4", "petersen", "heawood", "mcgee", "tutte_coxeter", "dodecahedron", "C3", "C5", "complete5"];

struct Expected {
    vertices: usize,
    k: usize,
    girth: Extent,
    diameter: usize,
}

fn lcf(spec: &str) -> Graph {
    parse_lcf(spec).expect("fixture LCF is valid")
}

fn complete(m: usize) -> Graph {
    let edges = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)));
    Graph::from_edges(m, edges).expect("complete graph")
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle graph")
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen")
}

/// Looks up a fixture by name (case-insensitive): `K4`, `C{n}` (n >= 3),
/// `complete{m}` / `K{m}`, `petersen`, `heawood`, `mcgee`,
/// `tutte_coxeter`, `dodecahedron`.
///
/// Every fixture is checked against its known report before it is returned.
pub fn builtin(name: &str) -> Result<Graph, GraphError> {
    let lower = name.trim().to_ascii_lowercase();
    let unknown = || GraphError::UnknownBuiltin(name.to_string());
    let param = |prefix: &str| lower.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());

    let (graph, expected) = match lower.as_str() {
        "petersen" => (petersen(), Expected { vertices: 10, k: 3, girth: Extent::Finite(5), diameter: 2 }),
        "heawood" => (lcf("[5,-5]^7"), Expected { vertices: 14, k: 3, girth: Extent::Finite(6), diameter: 3 }),
        "mcgee" => (lcf("[12,7,-7]^8"), Expected { vertices: 24, k: 3, girth: Extent::Finite(7), diameter: 4 }),
        "tutte_coxeter" | "tutte-coxeter" => (
            lcf("[-13,-9,7,-7,9,13]^5"),
            Expected { vertices: 30, k: 3, girth: Extent::Finite(8), diameter: 4 },
        ),
        "dodecahedron" => (
            lcf("[10,7,4,-4,-7,10,-4,7,-7,4]^2"),
            Expected { vertices: 20, k: 3, girth: Extent::Finite(5), diameter: 5 },
        ),
        _ => {
            if let Some(m) = param("complete").or_else(|| param("k")) {
                if m == 0 {
                    return Err(unknown());
                }
                let girth = if m >= 3 { Extent::Finite(3) } else { Extent::Infinite };
                (complete(m), Expected { vertices: m, k: m - 1, girth, diameter: usize::from(m > 1) })
            } else if let Some(n) = param("c") {
                if n < 3 {
                    return Err(unknown());
                }
                (cycle(n), Expected { vertices: n, k: 2, girth: Extent::Finite(n), diameter: n / 2 })
            } else {
                return Err(unknown());
            }
        }
    };

    let report = analyze(&graph);
    assert_eq!(report.vertices, expected.vertices, "{name}: vertex count");
    assert_eq!(report.regularity_k, Some(expected.k), "{name}: degree");
    assert_eq!(report.girth, expected.girth, "{name}: girth");
    assert_eq!(report.diameter, Extent::Finite(expected.diameter), "{name}: diameter");
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        for name in BUILTIN_NAMES {
            builtin(name).unwrap();
        }
        assert_eq!(builtin("K4").unwrap().edge_count(), 6);
        assert_eq!(builtin("petersen").unwrap().edge_count(), 15);
        assert_eq!(builtin("Tutte-Coxeter").unwrap().arc_count(), 90);
        assert_eq!(builtin("C12").unwrap().vertex_count(), 12);
        assert_eq!(builtin("complete2").unwrap().edge_count(), 1);
    }

    #[test]
    fn theorem_gates() {
        // girth > 2(n - 1)
        assert!(analyze(&builtin("petersen").unwrap()).girth.exceeds(2 * (3 - 1)));
        assert!(analyze(&builtin("mcgee").unwrap()).girth.exceeds(2 * (4 - 1)));
        assert!(analyze(&builtin("K4").unwrap()).girth.exceeds(2));
        assert!(!analyze(&builtin("K4").unwrap()).girth.exceeds(4));
    }

    #[test]
    fn unknown_names() {
        for bad in ["", "C2", "complete0", "cube", "K"] {
            assert!(matches!(builtin(bad), Err(GraphError::UnknownBuiltin(_))), "{bad}");
        }
    }
}
