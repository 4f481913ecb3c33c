//! Simple graphs, lexicographic blow-ups and group distance magic
//! labelings: constructors for the blow-up families, a generic verifier,
//! and the two degree/involution obstructions.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::zsp::zsp;

/// Simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Rejects loops, repeated edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Graph(format!(
                    "edge {u}-{v} leaves the vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Graph(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Graph(format!("edge {u}-{} appears twice", w[0])));
            }
        }
        Ok(Graph { adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (0..n)
                .map(|u| (0..n).filter(|&v| v != u).collect())
                .collect(),
        }
    }

    /// The cycle `0-1-..-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Graph(format!("a cycle needs 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are simple")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(a + b, &edges).expect("bipartite edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|n| n.len() == r).then_some(r)
    }

    pub fn all_degrees_even(&self) -> bool {
        self.adj.iter().all(|n| n.len() % 2 == 0)
    }

    pub fn all_degrees_odd(&self) -> bool {
        self.adj.iter().all(|n| n.len() % 2 == 1)
    }

    /// Proper 2-colouring by BFS, the least vertex of each component getting
    /// `false`; `None` if the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        self.components_colored().map(|comps| {
            let mut side = vec![false; self.vertex_count()];
            for comp in comps {
                for (v, s) in comp {
                    side[v] = s;
                }
            }
            side
        })
    }

    /// A proper 2-colouring with equally many vertices on each side, flipping
    /// whole components as needed. Prefers flipping later components.
    pub fn balanced_bipartition(&self) -> Option<Vec<bool>> {
        let comps = self.components_colored()?;
        let n = self.vertex_count();
        if n % 2 == 1 {
            return None;
        }
        let half = n / 2;
        // reach[i][s]: the first i components can put exactly s vertices on side false.
        let mut reach = vec![vec![false; half + 1]; comps.len() + 1];
        reach[0][0] = true;
        for (i, comp) in comps.iter().enumerate() {
            let a = comp.iter().filter(|(_, s)| !s).count();
            let b = comp.len() - a;
            for s in 0..=half {
                if reach[i][s] {
                    for t in [s + a, s + b] {
                        if t <= half {
                            reach[i + 1][t] = true;
                        }
                    }
                }
            }
        }
        if !reach[comps.len()][half] {
            return None;
        }
        let mut side = vec![false; n];
        let mut s = half;
        for (i, comp) in comps.iter().enumerate().rev() {
            let a = comp.iter().filter(|(_, s)| !s).count();
            let flip = !(s >= a && reach[i][s - a]);
            s -= if flip { comp.len() - a } else { a };
            for &(v, c) in comp {
                side[v] = c ^ flip;
            }
        }
        Some(side)
    }

    fn components_colored(&self) -> Option<Vec<Vec<(usize, bool)>>> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut comp = vec![(start, false)];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            comp.push((v, !cu));
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
            comps.push(comp);
        }
        Some(comps)
    }
}

impl fmt::Display for Graph {
    /// `p <n>` followed by one `e u v` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p {}", self.vertex_count())?;
        for (u, v) in self.edges() {
            writeln!(f, "e {u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Blank lines and lines starting with `#` or `c` are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') || t.starts_with('c') {
                continue;
            }
            let mut words = t.split_whitespace();
            let tag = words.next().unwrap_or_default();
            let nums = words
                .map(|w| {
                    w.parse::<usize>()
                        .map_err(|_| Error::format(line, format!("`{w}` is not a vertex number")))
                })
                .collect::<Result<Vec<_>>>()?;
            match (tag, nums.as_slice()) {
                ("p", &[count]) if n.is_none() => n = Some(count),
                ("p", &[_]) => return Err(Error::format(line, "second `p` line")),
                ("e", &[u, v]) if n.is_some() => edges.push((u, v)),
                ("e", &[_, _]) => return Err(Error::format(line, "edge before the `p` line")),
                _ => {
                    return Err(Error::format(
                        line,
                        format!("expected `p <n>` or `e <u> <v>`, got `{t}`"),
                    ))
                }
            }
        }
        let n = n.ok_or_else(|| Error::format(0, "missing `p <n>` line"))?;
        Graph::from_edges(n, &edges)
    }
}

/// `g ∘ h`: vertex `(u, v)` sits at index `u * |h| + v`, and `(u, v) ~ (x, y)`
/// iff `u ~ x` in `g`, or `u = x` and `v ~ y` in `h`.
pub fn lex_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.vertex_count();
    let mut adj = Vec::with_capacity(g.vertex_count() * m);
    for u in 0..g.vertex_count() {
        for v in 0..m {
            // Neighbour lists come out sorted: fibres before and after u
            // bracket the in-fibre neighbours.
            let mut nbrs = Vec::with_capacity(g.degree(u) * m + h.degree(v));
            let (before, after): (Vec<usize>, Vec<usize>) =
                g.neighbors(u).iter().partition(|&&x| x < u);
            nbrs.extend(before.iter().flat_map(|&x| (0..m).map(move |y| x * m + y)));
            nbrs.extend(h.neighbors(v).iter().map(|&y| u * m + y));
            nbrs.extend(after.iter().flat_map(|&x| (0..m).map(move |y| x * m + y)));
            adj.push(nbrs);
        }
    }
    Graph { adj }
}

/// A bijection from the vertices `0..n` onto a group of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    spec: GroupSpec,
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(spec: &GroupSpec, assignment: &[GroupElement]) -> Result<Self> {
        let labels = assignment
            .iter()
            .map(|e| spec.index_of(e))
            .collect::<Result<Vec<_>>>()?;
        Labeling::from_indices(spec, labels)
    }

    pub fn from_indices(spec: &GroupSpec, labels: Vec<usize>) -> Result<Self> {
        let n = spec.order();
        if labels.len() != n {
            return Err(Error::Parameter(format!(
                "{} labels for a group of order {n}",
                labels.len()
            )));
        }
        let mut seen = vec![false; n];
        for (v, &l) in labels.iter().enumerate() {
            if l >= n || seen[l] {
                return Err(Error::Parameter(format!(
                    "label of vertex {v} is out of range or repeated"
                )));
            }
            seen[l] = true;
        }
        Ok(Labeling {
            spec: spec.clone(),
            labels,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn label(&self, v: usize) -> GroupElement {
        self.spec.element_at(self.labels[v])
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// A constructed graph together with its labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labeling: Labeling,
}

/// Necessary conditions that rule out every labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// Odd-regular graph, group with exactly one involution.
    OddRegularSingleInvolution,
    /// Order `2 mod 4` and every degree odd, for any group.
    OddDegreesOrderTwoModFour,
}

impl Obstruction {
    pub fn name(self) -> &'static str {
        match self {
            Obstruction::OddRegularSingleInvolution => "odd-regular-single-involution",
            Obstruction::OddDegreesOrderTwoModFour => "odd-degrees-order-2-mod-4",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            Obstruction::OddRegularSingleInvolution,
            Obstruction::OddDegreesOrderTwoModFour,
        ]
        .into_iter()
        .find(|o| o.name() == name)
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Magic(GroupElement),
    /// Two vertices whose weights differ, with those weights.
    NotMagic {
        u: usize,
        v: usize,
        weight_u: GroupElement,
        weight_v: GroupElement,
    },
    Impossible(Obstruction),
    Unknown,
}

impl Verdict {
    pub fn is_magic(&self) -> bool {
        matches!(self, Verdict::Magic(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Magic(mu) => write!(f, "magic {mu}"),
            Verdict::NotMagic {
                u,
                v,
                weight_u,
                weight_v,
            } => write!(f, "not magic: w({u}) = {weight_u}, w({v}) = {weight_v}"),
            Verdict::Impossible(o) => write!(f, "impossible ({o})"),
            Verdict::Unknown => write!(f, "unknown"),
        }
    }
}

fn require_order(g: &Graph, spec: &GroupSpec) -> Result<()> {
    if g.vertex_count() != spec.order() {
        return Err(Error::Parameter(format!(
            "graph has {} vertices but {spec} has order {}",
            g.vertex_count(),
            spec.order()
        )));
    }
    Ok(())
}

/// Weight of every vertex as an element index: the sum of its
/// neighbours' labels (the identity for isolated vertices).
pub fn weights(g: &Graph, l: &Labeling) -> Result<Vec<usize>> {
    require_order(g, &l.spec)?;
    Ok((0..g.vertex_count())
        .map(|x| {
            g.neighbors(x)
                .iter()
                .fold(0, |s, &y| l.spec.add_idx(s, l.labels[y]))
        })
        .collect())
}

pub fn verify_labeling(g: &Graph, l: &Labeling) -> Result<Verdict> {
    let w = weights(g, l)?;
    let spec = &l.spec;
    Ok(match w.iter().position(|&x| x != w[0]) {
        None if w.is_empty() => Verdict::Magic(spec.identity()),
        None => Verdict::Magic(spec.element_at(w[0])),
        Some(v) => Verdict::NotMagic {
            u: 0,
            v,
            weight_u: spec.element_at(w[0]),
            weight_v: spec.element_at(w[v]),
        },
    })
}

/// `Impossible` when a known necessary condition fails, else `Unknown`.
pub fn obstruction_check(g: &Graph, spec: &GroupSpec) -> Result<Verdict> {
    require_order(g, spec)?;
    let n = g.vertex_count();
    if n % 4 == 2 && g.all_degrees_odd() {
        return Ok(Verdict::Impossible(Obstruction::OddDegreesOrderTwoModFour));
    }
    if g.regular_degree().is_some_and(|r| r % 2 == 1) && spec.involution_count() == 1 {
        return Ok(Verdict::Impossible(Obstruction::OddRegularSingleInvolution));
    }
    Ok(Verdict::Unknown)
}

fn certified(graph: Graph, labeling: Labeling, mu: &GroupElement) -> Result<LabeledGraph> {
    match verify_labeling(&graph, &labeling)? {
        Verdict::Magic(m) if &m == mu => Ok(LabeledGraph { graph, labeling }),
        other => Err(Error::Internal(format!(
            "labeling over {} should be magic {mu}, verifier says {other}",
            labeling.spec
        ))),
    }
}

fn require_blowup_order(g: &Graph, n: usize, spec: &GroupSpec) -> Result<()> {
    if spec.order() != n * g.vertex_count() {
        return Err(Error::Parameter(format!(
            "{spec} has order {}, the blow-up has {} x {n} vertices",
            spec.order(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Labels `g ∘ K̄n` by giving the fibre over vertex `i` the `i`-th block of
/// an `n`-zero-sum partition; every weight is then the identity, whatever
/// the shape of `g`.
pub fn blowup_label(g: &Graph, n: usize, spec: &GroupSpec) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(Error::Parameter(format!(
            "fibre size must be at least 3, got {n}"
        )));
    }
    require_blowup_order(g, n, spec)?;
    let partition = zsp(spec, n)?;
    let labels = partition
        .index_blocks(spec)?
        .into_iter()
        .flatten()
        .collect();
    let graph = lex_product(g, &Graph::empty(n));
    certified(
        graph,
        Labeling::from_indices(spec, labels)?,
        &spec.identity(),
    )
}

/// Labels `g ∘ K̄n2` (`g` regular, `n2` even) with pairs `{x, s - x}`, where
/// `s` is the least element outside `2Γ`; each fibre gets `n2/2` pairs, so
/// every weight is `r (n2/2) s`.
pub fn blowup_even_label(g: &Graph, n2: usize, spec: &GroupSpec) -> Result<LabeledGraph> {
    let r = g
        .regular_degree()
        .ok_or_else(|| Error::Parameter("base graph is not regular".into()))?;
    if n2 < 2 || n2 % 2 == 1 {
        return Err(Error::Parameter(format!(
            "fibre size must be even and at least 2, got {n2}"
        )));
    }
    require_blowup_order(g, n2, spec)?;
    let order = spec.order();
    let mut doubled = vec![false; order];
    for x in 0..order {
        doubled[spec.add_idx(x, x)] = true;
    }
    let s = doubled
        .iter()
        .position(|&d| !d)
        .ok_or_else(|| Error::Internal(format!("{spec} has even order but 2Γ = Γ")))?;
    let mut used = vec![false; order];
    let mut labels = Vec::with_capacity(order);
    for x in 0..order {
        if !used[x] {
            let y = spec.sub_idx(s, x);
            used[x] = true;
            used[y] = true;
            labels.push(x);
            labels.push(y);
        }
    }
    let mu = spec.scale_idx((r * n2 / 2) as i64, s);
    let graph = lex_product(g, &Graph::empty(n2));
    certified(
        graph,
        Labeling::from_indices(spec, labels)?,
        &spec.element_at(mu),
    )
}

/// Labels `g ∘ K̄n` for a balanced bipartite `g` with even degrees and
/// `|g| = 2 mod 4`. Such a group splits as `Z2 x Λ` (its Sylow 2-subgroup
/// is `Z2`), which covers every group of that order. With `A_i` the blocks
/// of an `n`-zero-sum partition of `Λ`, the fibres over the `i`-th vertex
/// of each side get `(0, A_i)` and `(1, A_i)`; even degrees cancel the `Z2`
/// coordinate, so every weight is the identity.
pub fn eulerian_bipartite_label(g: &Graph, n: usize, spec: &GroupSpec) -> Result<LabeledGraph> {
    let t = g.vertex_count();
    if t % 4 != 2 {
        return Err(Error::Parameter(format!(
            "base graph has {t} vertices, need 2 mod 4"
        )));
    }
    if !g.all_degrees_even() {
        return Err(Error::Parameter(
            "base graph has a vertex of odd degree".into(),
        ));
    }
    let side = g
        .balanced_bipartition()
        .ok_or_else(|| Error::Parameter("base graph has no bipartition with equal sides".into()))?;
    if n < 3 || n % 2 == 0 {
        return Err(Error::Parameter(format!(
            "fibre size must be odd and at least 3, got {n}"
        )));
    }
    require_blowup_order(g, n, spec)?;
    let canon = spec.canonical();
    if canon.factors().first() != Some(&2) || canon.factors()[1..].iter().any(|f| f % 2 == 0) {
        return Err(Error::Internal(format!(
            "{spec} does not split as Z2 x odd"
        )));
    }
    let lambda = GroupSpec::new(canon.factors()[1..].to_vec())?;
    let blocks = zsp(&lambda, n)?.index_blocks(&lambda)?;
    let to_given = spec.canonical_isomorphism();
    let half = lambda.order();
    let mut labels = vec![0; spec.order()];
    let mut next = [0usize; 2];
    for u in 0..t {
        let s = side[u] as usize;
        let block = &blocks[next[s]];
        next[s] += 1;
        for (x, &lam) in block.iter().enumerate() {
            labels[u * n + x] = to_given[s * half + lam];
        }
    }
    let graph = lex_product(g, &Graph::empty(n));
    certified(
        graph,
        Labeling::from_indices(spec, labels)?,
        &spec.identity(),
    )
}

fn require_regular_bipartite(g: &Graph, n: usize) -> Result<usize> {
    let r = g
        .regular_degree()
        .ok_or_else(|| Error::Parameter("base graph is not regular".into()))?;
    if g.two_coloring().is_none() {
        return Err(Error::Parameter("base graph is not bipartite".into()));
    }
    if g.vertex_count() % 4 != 2 {
        return Err(Error::Parameter(format!(
            "base graph has {} vertices, need 2 mod 4",
            g.vertex_count()
        )));
    }
    if n < 2 {
        return Err(Error::Parameter(format!(
            "fibre size must be at least 2, got {n}"
        )));
    }
    Ok(r)
}

/// For an `r`-regular bipartite `g` with `|g| = 2 mod 4`: `g ∘ K̄n` is
/// group distance magic iff `rn` is even.
pub fn bipartite_blowup_exists(g: &Graph, n: usize) -> Result<bool> {
    let r = require_regular_bipartite(g, n)?;
    Ok(r * n % 2 == 0)
}

/// A labeling of `g ∘ K̄n` by `spec` witnessing [`bipartite_blowup_exists`],
/// or the obstruction when `rn` is odd.
pub fn bipartite_blowup_witness(g: &Graph, n: usize, spec: &GroupSpec) -> Result<LabeledGraph> {
    let r = require_regular_bipartite(g, n)?;
    if n % 2 == 0 {
        blowup_even_label(g, n, spec)
    } else if r % 2 == 0 {
        eulerian_bipartite_label(g, n, spec)
    } else {
        Err(Error::Nonexistence(format!(
            "every vertex of the blow-up has odd degree {} and its order is 2 mod 4",
            r * n
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn graph_construction_rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let g = Graph::from_edges(3, &[(2, 0), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn graph_file_round_trip() {
        let g = Graph::complete_bipartite(3, 3);
        let text = g.to_string();
        assert!(text.starts_with("p 6\ne 0 3\n"));
        assert_eq!(text.parse::<Graph>().unwrap(), g);
        let err = "p 3\ne 0 x\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
        assert!("e 0 1\n".parse::<Graph>().is_err());
        assert_eq!(
            "# comment\np 2\n\ne 0 1\n".parse::<Graph>().unwrap(),
            Graph::complete(2)
        );
    }

    #[test]
    fn lex_products() {
        let c4 = lex_product(&Graph::complete(2), &Graph::empty(2));
        assert_eq!(c4.regular_degree(), Some(2));
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.two_coloring().is_some());

        let k3333 = lex_product(&Graph::complete(4), &Graph::empty(3));
        assert_eq!(k3333.vertex_count(), 12);
        assert_eq!(k3333.regular_degree(), Some(9));
        assert!(!k3333.has_edge(0, 2));
        assert!(k3333.has_edge(0, 3));

        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(lex_product(&c3, &Graph::empty(1)), c3);

        let g = Graph::path(3);
        let h = Graph::cycle(4).unwrap();
        let p = lex_product(&g, &h);
        for u in 0..3 {
            for v in 0..4 {
                assert_eq!(p.degree(u * 4 + v), 4 * g.degree(u) + h.degree(v));
                assert!(p.neighbors(u * 4 + v).windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn bipartitions() {
        assert!(Graph::cycle(5).unwrap().two_coloring().is_none());
        // Two paths of 3 vertices: sides 2+1 each, balanced only by flipping one.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let side = g.balanced_bipartition().unwrap();
        assert_eq!(side.iter().filter(|&&s| s).count(), 3);
        for (u, v) in g.edges() {
            assert_ne!(side[u], side[v]);
        }
        assert!(Graph::complete_bipartite(1, 3)
            .balanced_bipartition()
            .is_none());
    }

    #[test]
    fn verifier_examples() {
        let z4 = spec("Z4");
        let c4 = Graph::cycle(4).unwrap();
        let l = Labeling::from_indices(&z4, vec![0, 1, 3, 2]).unwrap();
        assert_eq!(
            verify_labeling(&c4, &l).unwrap(),
            Verdict::Magic(z4.element_at(3))
        );
        // In cyclic order the opposite pairs sum to 1+3 = 0 and 0+2 = 2.
        let l = Labeling::from_indices(&z4, vec![0, 1, 2, 3]).unwrap();
        assert!(matches!(
            verify_labeling(&c4, &l).unwrap(),
            Verdict::NotMagic { u: 0, v: 1, .. }
        ));

        let z3 = spec("Z3");
        let l = Labeling::from_indices(&z3, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            verify_labeling(&Graph::path(3), &l).unwrap(),
            Verdict::NotMagic { u: 0, v: 1, .. }
        ));
        assert!(verify_labeling(&Graph::path(4), &l).is_err());
        assert!(Labeling::from_indices(&z3, vec![0, 1, 1]).is_err());
    }

    #[test]
    fn blowups() {
        let out = blowup_label(&Graph::complete(4), 3, &spec("Z2xZ2xZ3")).unwrap();
        assert_eq!(
            verify_labeling(&out.graph, &out.labeling).unwrap(),
            Verdict::Magic(spec("Z2xZ2xZ3").identity())
        );
        assert!(blowup_label(&Graph::cycle(3).unwrap(), 3, &spec("Z9")).is_ok());
        assert!(blowup_label(&Graph::path(4), 3, &spec("Z3xZ2xZ2")).is_ok());
        assert!(blowup_label(&Graph::complete(4), 3, &spec("Z12"))
            .unwrap_err()
            .is_nonexistence());
        assert!(matches!(
            blowup_label(&Graph::complete(4), 3, &spec("Z10")),
            Err(Error::Parameter(_))
        ));

        for (g, s) in [
            (Graph::complete(2), "Z4"),
            (Graph::cycle(4).unwrap(), "Z8"),
            (Graph::complete(3), "Z6"),
        ] {
            assert!(blowup_even_label(&g, 2, &spec(s)).is_ok(), "{s}");
        }
        assert!(blowup_even_label(&Graph::complete(3), 4, &spec("Z2xZ2xZ3")).is_ok());
        assert!(blowup_even_label(&Graph::path(3), 2, &spec("Z6")).is_err());

        let c6 = Graph::cycle(6).unwrap();
        for s in ["Z18", "Z3xZ6", "Z2xZ9", "Z2xZ3xZ3"] {
            assert!(eulerian_bipartite_label(&c6, 3, &spec(s)).is_ok(), "{s}");
        }
        assert!(matches!(
            eulerian_bipartite_label(&Graph::cycle(4).unwrap(), 3, &spec("Z12")),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn obstructions() {
        let z6 = spec("Z6");
        assert_eq!(
            obstruction_check(&Graph::complete_bipartite(3, 3), &z6).unwrap(),
            Verdict::Impossible(Obstruction::OddDegreesOrderTwoModFour)
        );
        let k = lex_product(&Graph::complete(4), &Graph::empty(3));
        assert_eq!(
            obstruction_check(&k, &spec("Z12")).unwrap(),
            Verdict::Impossible(Obstruction::OddRegularSingleInvolution)
        );
        assert_eq!(
            obstruction_check(&Graph::cycle(4).unwrap(), &spec("Z4")).unwrap(),
            Verdict::Unknown
        );
        assert_eq!(
            Obstruction::from_name("odd-degrees-order-2-mod-4"),
            Some(Obstruction::OddDegreesOrderTwoModFour)
        );
    }

    #[test]
    fn bipartite_blowups() {
        let c6 = Graph::cycle(6).unwrap();
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(bipartite_blowup_exists(&c6, 3).unwrap());
        assert!(!bipartite_blowup_exists(&k33, 3).unwrap());
        assert!(bipartite_blowup_exists(&k33, 2).unwrap());
        assert!(bipartite_blowup_exists(&Graph::cycle(4).unwrap(), 2).is_err());
        assert!(bipartite_blowup_witness(&c6, 3, &spec("Z18")).is_ok());
        assert!(bipartite_blowup_witness(&k33, 2, &spec("Z12")).is_ok());
        assert!(bipartite_blowup_witness(&k33, 3, &spec("Z18"))
            .unwrap_err()
            .is_nonexistence());
    }
}
