//! Complete graphs, Turán graphs and blow-ups of coloured complete graphs.

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};

pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Class sizes of the Turán graph `T_p(n)`: the `n mod p` classes of size
/// `ceil(n/p)` come first, then the classes of size `floor(n/p)`.
pub fn turan_class_sizes(n: usize, p: usize) -> Result<Vec<usize>> {
    if p == 0 {
        return Err(Error::InvalidInput("Turán graph needs at least one part".into()));
    }
    Ok((0..p).map(|j| n / p + usize::from(j < n % p)).collect())
}

/// Class of vertex `v` in `T_p(n)`: vertices are dealt round-robin.
#[inline]
pub fn turan_class_of(v: usize, p: usize) -> usize {
    v % p
}

/// The complete `p`-partite graph on `n` vertices with balanced classes.
/// Vertex `v` lies in class `v mod p`; `p >= n` gives `K_n`.
pub fn turan_graph(n: usize, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::InvalidInput("Turán graph needs at least one part".into()));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if turan_class_of(u, p) != turan_class_of(v, p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Edge count of `T_p(n)`: `C(n,2)` minus the pairs inside each class.
pub fn turan_number(n: usize, p: usize) -> Result<usize> {
    let inside: usize = turan_class_sizes(n, p)?.into_iter().map(pair_count).sum();
    Ok(pair_count(n) - inside)
}

/// Blow-up of a coloured complete graph: base vertex `j` becomes an
/// independent set of `sizes[j]` consecutive vertices, and every edge between
/// classes `j != l` takes the base colour of `jl`.
pub fn blow_up(base: &EdgeColouring, sizes: &[usize]) -> Result<EdgeColouring> {
    let m = base.graph().n();
    if sizes.len() != m {
        return Err(Error::InvalidInput(format!(
            "{} class sizes given for a base on {m} vertices",
            sizes.len()
        )));
    }
    let class_of: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(j, &s)| std::iter::repeat_n(j, s))
        .collect();
    blow_up_with_classes(base, &class_of)
}

/// Blow-up onto the labelling of [`turan_graph`]: vertex `v` of the result
/// lies in class `v mod m`, so the underlying graph equals `T_m(n)` exactly.
pub fn turan_blow_up(base: &EdgeColouring, n: usize) -> Result<EdgeColouring> {
    let m = base.graph().n();
    if m == 0 {
        return Err(Error::InvalidInput("base colouring has no vertices".into()));
    }
    let class_of: Vec<usize> = (0..n).map(|v| turan_class_of(v, m)).collect();
    blow_up_with_classes(base, &class_of)
}

/// General blow-up: `class_of[v]` is the base vertex that `v` replaces.
pub fn blow_up_with_classes(base: &EdgeColouring, class_of: &[usize]) -> Result<EdgeColouring> {
    let m = base.graph().n();
    if !base.graph().is_complete() {
        return Err(Error::InvalidInput("blow-up base must be a complete graph".into()));
    }
    if let Some(&j) = class_of.iter().find(|&&j| j >= m) {
        return Err(Error::InvalidInput(format!("class {j} does not exist in a base of {m} vertices")));
    }
    let n = class_of.len();
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if class_of[u] != class_of[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    EdgeColouring::from_fn(g, base.k(), |u, v| {
        base.colour(class_of[u], class_of[v]).expect("base is complete")
    })
}
