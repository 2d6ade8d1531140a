//! Edge colourings and clique profiles.
//!
//! Colourings serialize to a line format: a header `n k`, then one `u v c`
//! line per edge with `1 <= c <= k`. Lines starting with `#` are comments.

use std::fmt;
use std::io::Read;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{pair_index, Edge, Graph};
use crate::ramsey::ramsey_known;

/// A total assignment of colours `1..=k` to the edges of a graph.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    graph: Graph,
    k: usize,
    edges: Vec<Edge>,
    /// Colour of `edges[i]`.
    colours: Vec<u8>,
    /// Pair index -> position in `edges`, for O(1) colour lookup.
    position: Vec<u32>,
}

const NO_EDGE: u32 = u32::MAX;

impl EdgeColouring {
    /// `colours[i]` is the colour of the `i`-th edge of `graph` in
    /// lexicographic order.
    pub fn new(graph: Graph, k: usize, colours: Vec<usize>) -> Result<Self> {
        if k == 0 || k > u8::MAX as usize {
            return Err(Error::InvalidInput(format!("colour count {k} must be in 1..=255")));
        }
        let edges = graph.edges();
        if colours.len() != edges.len() {
            return Err(Error::InvalidInput(format!(
                "{} colours given for {} edges",
                colours.len(),
                edges.len()
            )));
        }
        if let Some((i, &c)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            let (u, v) = edges[i];
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) has colour {c}, outside 1..={k}"
            )));
        }
        let n = graph.n();
        let mut position = vec![NO_EDGE; n * n.saturating_sub(1) / 2];
        for (i, &(u, v)) in edges.iter().enumerate() {
            position[pair_index(n, u, v)] = i as u32;
        }
        Ok(EdgeColouring {
            graph,
            k,
            edges,
            colours: colours.into_iter().map(|c| c as u8).collect(),
            position,
        })
    }

    /// Colours every edge with `colour_of(u, v)`.
    pub fn from_fn(graph: Graph, k: usize, mut colour_of: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let colours = graph.edges().into_iter().map(|(u, v)| colour_of(u, v)).collect();
        EdgeColouring::new(graph, k, colours)
    }

    pub fn uniform(graph: Graph, k: usize, colour: usize) -> Result<Self> {
        EdgeColouring::from_fn(graph, k, |_, _| colour)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Edges in lexicographic order, aligned with [`Self::colours`].
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colours(&self) -> impl Iterator<Item = usize> + '_ {
        self.colours.iter().map(|&c| c as usize)
    }

    /// Colour of the edge `uv`, if it is an edge.
    pub fn colour(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        if u == v || v >= self.graph.n() {
            return None;
        }
        match self.position[pair_index(self.graph.n(), u, v)] {
            NO_EDGE => None,
            p => Some(self.colours[p as usize] as usize),
        }
    }

    /// The spanning subgraph formed by the edges of colour `i`.
    pub fn colour_class(&self, i: usize) -> Result<Graph> {
        if i == 0 || i > self.k {
            return Err(Error::InvalidInput(format!(
                "colour {i} outside 1..={}",
                self.k
            )));
        }
        let mut g = Graph::empty(self.graph.n())?;
        for (&(u, v), &c) in self.edges.iter().zip(&self.colours) {
            if c as usize == i {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// All colour classes, index `i - 1` holding colour `i`.
    pub fn colour_classes(&self) -> Vec<Graph> {
        (1..=self.k)
            .map(|i| self.colour_class(i).expect("colour in range"))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.graph.n(), self.k);
        for (&(u, v), &c) in self.edges.iter().zip(&self.colours) {
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        out
    }

    pub fn read_text<R: Read>(mut reader: R) -> Result<Self> {
        let mut text = String::new();
        reader
            .read_to_string(&mut text)
            .map_err(|e| Error::parse("input", e.to_string()))?;
        text.parse()
    }
}

impl FromStr for EdgeColouring {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse("line 1", "missing 'n k' header"))?;
        let nums = parse_fields(hline, header, 2)?;
        let (n, k) = (nums[0], nums[1]);
        if k == 0 {
            return Err(Error::parse(format!("line {hline}"), "colour count must be at least 1"));
        }

        let mut graph = Graph::empty(n)?;
        let mut assigned: Vec<(Edge, usize)> = Vec::new();
        for (lineno, line) in lines {
            let at = || format!("line {lineno}");
            let f = parse_fields(lineno, line, 3)?;
            let (u, v, c) = (f[0], f[1], f[2]);
            if u >= n || v >= n || u == v {
                return Err(Error::parse(at(), format!("invalid edge ({u}, {v}) for {n} vertices")));
            }
            if c == 0 || c > k {
                return Err(Error::parse(at(), format!("colour {c} outside 1..={k}")));
            }
            let e = (u.min(v), u.max(v));
            if graph.has_edge(e.0, e.1) {
                return Err(Error::parse(at(), format!("edge ({}, {}) listed twice", e.0, e.1)));
            }
            graph.add_edge(e.0, e.1)?;
            assigned.push((e, c));
        }
        assigned.sort_unstable();
        let colours = assigned.into_iter().map(|(_, c)| c).collect();
        EdgeColouring::new(graph, k, colours)
    }
}

fn parse_fields(lineno: usize, line: &str, count: usize) -> Result<Vec<usize>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != count {
        return Err(Error::parse(
            format!("line {lineno}"),
            format!("expected {count} integers, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .enumerate()
        .map(|(col, f)| {
            f.parse::<usize>().map_err(|_| {
                Error::parse(
                    format!("line {lineno}, field {}", col + 1),
                    format!("not a non-negative integer: {f:?}"),
                )
            })
        })
        .collect()
}

impl fmt::Debug for EdgeColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColouring(n={}, k={}, ", self.graph.n(), self.k)?;
        f.debug_list()
            .entries(self.edges.iter().zip(&self.colours).map(|(&(u, v), &c)| (u, v, c)))
            .finish()?;
        write!(f, ")")
    }
}

/// Clique sizes `(r_1, ..., r_k)`, one per colour, nondecreasing and each at
/// least 3, together with the tabulated Ramsey number when one is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueProfile {
    sizes: Vec<usize>,
    ramsey: Option<u64>,
}

impl CliqueProfile {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidInput("profile needs at least one clique size".into()));
        }
        if let Some(&r) = sizes.iter().find(|&&r| r < 3) {
            return Err(Error::InvalidInput(format!("clique size {r} is below 3")));
        }
        if sizes.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidInput(format!(
                "profile {sizes:?} is not nondecreasing"
            )));
        }
        let ramsey = ramsey_known(&sizes);
        Ok(CliqueProfile { sizes, ramsey })
    }

    /// Sorts the sizes first. Only appropriate where colours are
    /// interchangeable, such as Ramsey lookups.
    pub fn normalized(mut sizes: Vec<usize>) -> Result<Self> {
        sizes.sort_unstable();
        CliqueProfile::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    /// Clique size for colour `i` (1-based).
    pub fn size_for(&self, colour: usize) -> usize {
        self.sizes[colour - 1]
    }

    pub fn ramsey(&self) -> Option<u64> {
        self.ramsey
    }
}

impl FromStr for CliqueProfile {
    type Err = Error;

    /// Parses `r1,r2,...,rk`.
    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .enumerate()
            .map(|(i, f)| {
                f.trim().parse::<usize>().map_err(|_| {
                    Error::parse(format!("profile entry {}", i + 1), format!("not an integer: {f:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CliqueProfile::new(sizes)
    }
}

impl fmt::Display for CliqueProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
