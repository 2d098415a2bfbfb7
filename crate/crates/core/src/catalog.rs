//! Named constructors for the specific graphs used throughout: the four
//! small counterexamples, N6, D8, the final-contradiction gadget, and the
//! parametrized families. Figure graphs are transcribed edge-for-edge from
//! the figure sources; a transcription test pins counts and degrees.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("bad parameters for {0}: {1}")]
    BadParams(String, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn fig1a() -> Graph {
    Graph::new(
        12,
        &[
            (0, 1), (2, 1), (3, 1), (0, 3), (2, 3), (2, 0),
            (4, 2), (5, 2), (6, 2), (4, 0), (5, 0), (6, 0),
            (4, 1), (5, 1), (6, 1), (4, 3), (5, 3), (6, 3),
            (8, 7), (9, 7), (10, 7), (11, 7), (9, 8), (10, 8),
            (11, 8), (10, 9), (11, 9), (11, 10),
            (4, 7), (4, 11), (6, 9), (6, 10), (5, 8), (5, 9),
        ],
    )
    .expect("fixed edge list")
}

pub fn fig1b() -> Graph {
    Graph::new(
        14,
        &[
            (0, 4), (1, 4), (2, 4), (3, 4), (0, 3), (1, 3), (2, 3),
            (0, 2), (1, 2), (0, 1),
            (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9),
            (7, 8), (7, 9), (8, 9),
            (0, 10), (1, 10), (2, 10), (3, 10), (4, 10),
            (5, 11), (6, 11), (7, 11), (8, 11), (9, 11),
            (5, 12), (6, 12), (7, 12), (8, 12), (9, 12),
            (5, 13), (6, 13), (7, 13), (8, 13), (9, 13),
            (11, 10), (11, 4), (12, 0), (12, 1), (13, 3), (13, 2),
        ],
    )
    .expect("fixed edge list")
}

pub fn fig1c() -> Graph {
    Graph::new(
        13,
        &[
            (1, 0), (3, 2), (4, 2), (4, 3), (6, 5), (8, 7), (9, 7),
            (9, 8), (11, 10), (12, 10), (12, 11),
            (2, 0), (3, 0), (4, 0), (2, 1), (3, 1), (4, 1),
            (2, 5), (3, 5), (4, 5), (2, 6), (3, 6), (4, 6),
            (5, 7), (6, 7), (5, 9), (6, 9), (5, 8), (6, 8),
            (10, 8), (11, 8), (12, 8), (10, 7), (11, 7), (12, 7),
            (10, 9), (11, 9), (12, 9),
            (10, 1), (11, 1), (12, 1), (10, 0), (11, 0), (12, 0),
        ],
    )
    .expect("fixed edge list")
}

pub fn fig1d() -> Graph {
    Graph::new(
        15,
        &[
            (2, 1), (2, 0), (1, 0), (4, 3), (5, 3), (5, 4),
            (7, 6), (8, 6), (8, 7), (10, 9), (11, 9), (11, 10),
            (13, 12), (14, 12), (14, 13),
            (3, 0), (4, 0), (5, 0), (3, 2), (4, 2), (5, 2),
            (3, 1), (4, 1), (5, 1),
            (3, 6), (4, 6), (5, 6), (3, 7), (4, 7), (5, 7),
            (3, 8), (4, 8), (5, 8),
            (6, 9), (7, 9), (8, 9), (6, 11), (7, 11), (8, 11),
            (6, 10), (7, 10), (8, 10),
            (12, 10), (13, 10), (14, 10), (12, 9), (13, 9), (14, 9),
            (12, 11), (13, 11), (14, 11),
            (12, 2), (13, 2), (14, 2), (12, 1), (13, 1), (14, 1),
            (12, 0), (13, 0), (14, 0),
        ],
    )
    .expect("fixed edge list")
}

/// N6: a C5 on x1..x5 (vertices 0..4) plus y (vertex 5) adjacent to
/// x1, x2, x3, x4 but not x5.
pub fn n6() -> Graph {
    Graph::new(
        6,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 0), (5, 1), (5, 2), (5, 3),
        ],
    )
    .expect("fixed edge list")
}

/// D8, vertex order x1..x5 (0..4), w (5), y3 (6), y4 (7). As drawn, w is
/// adjacent to all of x1..x5 and to y4; y3 sees x2,x3,x4; y4 sees x3,x4,x5.
pub fn d8() -> Graph {
    Graph::new(
        8,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 0), (5, 1), (5, 2), (5, 3), (5, 4), (5, 7),
            (6, 1), (6, 2), (6, 3),
            (7, 2), (7, 3), (7, 4),
        ],
    )
    .expect("fixed edge list")
}

/// The final-contradiction gadget: K2 joined to this 6-vertex graph is
/// d1-choosable. Vertex order x1, y3, v, x3, y1, z.
pub fn fig4() -> Graph {
    Graph::new(
        6,
        &[
            (0, 2), (1, 2), (3, 1), (3, 2),
            (4, 0), (4, 2), (5, 3), (5, 1),
        ],
    )
    .expect("fixed edge list")
}

/// Chair: K_{1,3} with one edge subdivided. Center 0, leaves 1,2; 3-4 the
/// subdivided arm.
pub fn chair() -> Graph {
    Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).expect("fixed edge list")
}

pub fn antichair() -> Graph {
    chair().complement()
}

/// Paw: triangle with a pendant edge.
pub fn paw() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).expect("fixed edge list")
}

pub fn diamond() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("fixed edge list")
}

/// E2^n: join of n copies of E2, i.e. K_{2n} minus a perfect matching.
pub fn e2n(n: usize) -> Result<Graph, CatalogError> {
    if n < 1 || 2 * n > 32 {
        return Err(CatalogError::BadParams("E2n".into(), format!("n = {n}")));
    }
    let mut g = Graph::complete(2 * n);
    for i in 0..n {
        g = g.without_edge(2 * i, 2 * i + 1);
    }
    Ok(g)
}

/// G_t = K_t * C5.
pub fn g_t(t: usize) -> Result<Graph, CatalogError> {
    if t < 1 || t + 5 > 32 {
        return Err(CatalogError::BadParams("G_t".into(), format!("t = {t}")));
    }
    Ok(Graph::complete(t).join(&Graph::cycle(5))?)
}

pub fn thick_c5(sizes: &[usize]) -> Result<Graph, CatalogError> {
    if sizes.len() != 5 {
        return Err(CatalogError::BadParams(
            "thickC5".into(),
            format!("need 5 sizes, got {}", sizes.len()),
        ));
    }
    Ok(Graph::cycle(5).thicken(sizes)?)
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub provenance: &'static str,
    pub params: &'static str,
}

pub fn catalog_list() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry { name: "fig1a", provenance: "counterexample with max degree 6", params: "" },
        CatalogEntry { name: "fig1b", provenance: "counterexample with max degree 7", params: "" },
        CatalogEntry { name: "fig1c", provenance: "counterexample with max degree 7, claw-free", params: "" },
        CatalogEntry { name: "fig1d", provenance: "counterexample with max degree 8, line graph of tripled C5", params: "" },
        CatalogEntry { name: "N6", provenance: "C5 plus a vertex seeing four of its vertices", params: "" },
        CatalogEntry { name: "D8", provenance: "8-vertex obstruction around a C5", params: "" },
        CatalogEntry { name: "fig4", provenance: "gadget whose join with K2 is d1-choosable", params: "" },
        CatalogEntry { name: "chair", provenance: "K_{1,3} with one edge subdivided", params: "" },
        CatalogEntry { name: "antichair", provenance: "complement of the chair", params: "" },
        CatalogEntry { name: "paw", provenance: "triangle with a pendant edge", params: "" },
        CatalogEntry { name: "diamond", provenance: "K4 minus an edge", params: "" },
        CatalogEntry { name: "E2n", provenance: "join of n copies of E2", params: "n" },
        CatalogEntry { name: "G_t", provenance: "K_t joined to C5", params: "t" },
        CatalogEntry { name: "thickC5", provenance: "thickening of C5", params: "s1,s2,s3,s4,s5" },
        CatalogEntry { name: "C5", provenance: "5-cycle", params: "" },
        CatalogEntry { name: "C", provenance: "cycle", params: "n" },
        CatalogEntry { name: "P", provenance: "path", params: "n" },
        CatalogEntry { name: "K", provenance: "complete graph", params: "n" },
        CatalogEntry { name: "E", provenance: "edgeless graph", params: "n" },
    ]
}

fn parse_params(name: &str, params: Option<&str>) -> Result<Vec<usize>, CatalogError> {
    match params {
        None => Ok(vec![]),
        Some(p) => p
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| CatalogError::BadParams(name.into(), p.into()))
            })
            .collect(),
    }
}

fn one_param(name: &str, params: Option<&str>) -> Result<usize, CatalogError> {
    let ps = parse_params(name, params)?;
    if ps.len() != 1 {
        return Err(CatalogError::BadParams(
            name.into(),
            params.unwrap_or("").into(),
        ));
    }
    Ok(ps[0])
}

fn sized(name: &str, n: usize, build: impl Fn(usize) -> Graph) -> Result<Graph, CatalogError> {
    if n < 1 || n > 32 {
        return Err(CatalogError::BadParams(name.into(), format!("n = {n}")));
    }
    Ok(build(n))
}

pub fn catalog_get(name: &str, params: Option<&str>) -> Result<Graph, CatalogError> {
    let no_params = |g: Graph| -> Result<Graph, CatalogError> {
        if params.is_some() {
            Err(CatalogError::BadParams(
                name.into(),
                params.unwrap().into(),
            ))
        } else {
            Ok(g)
        }
    };
    match name {
        "fig1a" => no_params(fig1a()),
        "fig1b" => no_params(fig1b()),
        "fig1c" => no_params(fig1c()),
        "fig1d" => no_params(fig1d()),
        "N6" => no_params(n6()),
        "D8" => no_params(d8()),
        "fig4" => no_params(fig4()),
        "chair" => no_params(chair()),
        "antichair" => no_params(antichair()),
        "paw" => no_params(paw()),
        "diamond" => no_params(diamond()),
        "C5" => no_params(Graph::cycle(5)),
        "E2n" => e2n(one_param(name, params)?),
        "G_t" => g_t(one_param(name, params)?),
        "thickC5" => thick_c5(&parse_params(name, params)?),
        "C" => {
            let n = one_param(name, params)?;
            if n < 3 {
                return Err(CatalogError::BadParams(name.into(), format!("n = {n}")));
            }
            sized(name, n, Graph::cycle)
        }
        "P" => sized(name, one_param(name, params)?, Graph::path),
        "K" => sized(name, one_param(name, params)?, Graph::complete),
        "E" => sized(name, one_param(name, params)?, Graph::empty),
        _ => Err(CatalogError::UnknownName(name.into())),
    }
}

/// Resolve a graph argument: "@name", "@name:p1,p2", or a file path.
pub fn resolve_graph_arg(arg: &str) -> Result<Graph, String> {
    if let Some(spec) = arg.strip_prefix('@') {
        let (name, params) = match spec.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (spec, None),
        };
        catalog_get(name, params).map_err(|e| e.to_string())
    } else {
        let text = std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
        Graph::parse(&text).map_err(|e| e.to_string())
    }
}
