//! Exhaustive backtracking searches used as ground truth for small
//! instances. Every search is deterministic, counts its nodes against a
//! budget, and re-verifies any witness it returns.
//!
//! A report with `found == false` and `exhausted == true` is a proof that no
//! witness exists; `exhausted == false` only means the budget ran out.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::{verify_labeling, Graph, Labeling, Verdict};
use crate::group::{GroupElement, GroupSpec};
use crate::kotzig::{
    verify_group_kotzig, verify_int_kotzig, GroupKotzigArray, IntKotzigArray, KotzigArray,
};
use crate::zsp::{verify_triple_bijection, verify_zsp, TripleBijection, ZeroSumPartition};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport<W> {
    pub found: bool,
    pub witness: Option<W>,
    pub nodes: u64,
    /// The search ran to completion rather than stopping at the budget.
    pub exhausted: bool,
}

impl<W> SearchReport<W> {
    /// True when the report proves that no witness exists.
    pub fn proves_nonexistence(&self) -> bool {
        !self.found && self.exhausted
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> SearchReport<V> {
        SearchReport {
            found: self.found,
            witness: self.witness.map(f),
            nodes: self.nodes,
            exhausted: self.exhausted,
        }
    }
}

struct Counter {
    nodes: u64,
    budget: u64,
    hit: bool,
}

impl Counter {
    fn new(budget: u64) -> Self {
        Counter {
            nodes: 0,
            budget,
            hit: false,
        }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.hit = true;
        }
        !self.hit
    }

    fn report<W>(&self, witness: Option<W>) -> SearchReport<W> {
        SearchReport {
            found: witness.is_some(),
            witness,
            nodes: self.nodes,
            exhausted: !self.hit,
        }
    }
}

fn rejected(what: &str, reason: impl fmt::Display) -> Error {
    Error::Internal(format!("search produced an invalid {what}: {reason}"))
}

/// Block-by-block search over subsets whose least free element anchors the
/// next block; the elements of a block are chosen increasing and the last
/// one is forced by the zero-sum condition. `sizes` maps block size to how
/// many blocks of that size remain.
struct BlockSearch<'a> {
    spec: &'a GroupSpec,
    used: Vec<bool>,
    sizes: BTreeMap<usize, usize>,
    blocks: Vec<Vec<usize>>,
    counter: Counter,
}

impl BlockSearch<'_> {
    fn next_block(&mut self) -> bool {
        let Some(anchor) = self.used.iter().position(|&u| !u) else {
            return true;
        };
        let sizes: Vec<usize> = self
            .sizes
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&s, _)| s)
            .collect();
        for size in sizes {
            *self.sizes.get_mut(&size).unwrap() -= 1;
            self.used[anchor] = true;
            let mut block = vec![anchor];
            let found = self.fill(&mut block, anchor, anchor + 1, size - 1);
            self.used[anchor] = false;
            *self.sizes.get_mut(&size).unwrap() += 1;
            if found || self.counter.hit {
                return found;
            }
        }
        false
    }

    fn fill(&mut self, block: &mut Vec<usize>, sum: usize, min: usize, remaining: usize) -> bool {
        if !self.counter.tick() {
            return false;
        }
        let spec = self.spec;
        let close = |this: &mut Self, block: &mut Vec<usize>, last: Option<usize>| {
            if let Some(x) = last {
                this.used[x] = true;
                block.push(x);
            }
            this.blocks.push(block.clone());
            let found = this.next_block();
            if !found {
                this.blocks.pop();
                if let Some(x) = last {
                    block.pop();
                    this.used[x] = false;
                }
            }
            found
        };
        match remaining {
            0 => sum == 0 && close(self, block, None),
            1 => {
                let x = spec.neg_idx(sum);
                x >= min && !self.used[x] && close(self, block, Some(x))
            }
            _ => {
                for x in min..self.used.len() {
                    if self.used[x] {
                        continue;
                    }
                    self.used[x] = true;
                    block.push(x);
                    if self.fill(block, spec.add_idx(sum, x), x + 1, remaining - 1) {
                        return true;
                    }
                    block.pop();
                    self.used[x] = false;
                    if self.counter.hit {
                        return false;
                    }
                }
                false
            }
        }
    }
}

fn run_blocks(
    spec: &GroupSpec,
    exclude_identity: bool,
    sizes: BTreeMap<usize, usize>,
    budget: u64,
) -> (Counter, Option<Vec<Vec<usize>>>) {
    let mut used = vec![false; spec.order()];
    if exclude_identity && !used.is_empty() {
        used[0] = true;
    }
    let mut s = BlockSearch {
        spec,
        used,
        sizes,
        blocks: Vec::new(),
        counter: Counter::new(budget),
    };
    let found = s.next_block();
    (s.counter, found.then_some(s.blocks))
}

/// Exhaustive search for an `m`-zero-sum partition.
pub fn search_zsp(
    spec: &GroupSpec,
    m: usize,
    budget: u64,
) -> Result<SearchReport<ZeroSumPartition>> {
    if m == 0 || spec.order() % m != 0 {
        return Err(Error::Divisibility {
            m,
            order: spec.order(),
        });
    }
    let sizes = BTreeMap::from([(m, spec.order() / m)]);
    let (counter, blocks) = run_blocks(spec, false, sizes, budget);
    let witness = blocks.map(|b| ZeroSumPartition::from_indices(spec, m, b));
    if let Some(p) = &witness {
        verify_zsp(spec, p, m).map_err(|v| rejected("partition", v))?;
    }
    Ok(counter.report(witness))
}

/// A partition of the non-identity elements into zero-sum blocks of
/// prescribed, possibly unequal, sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnequalPartition {
    pub blocks: Vec<Vec<GroupElement>>,
}

/// Checks that `partition` splits the non-identity elements into zero-sum
/// blocks whose sizes form the multiset `parts`.
pub fn verify_unequal_partition(
    spec: &GroupSpec,
    parts: &[usize],
    partition: &UnequalPartition,
) -> std::result::Result<(), String> {
    let mut want: Vec<usize> = parts.to_vec();
    let mut got: Vec<usize> = partition.blocks.iter().map(Vec::len).collect();
    want.sort_unstable();
    got.sort_unstable();
    if want != got {
        return Err(format!("block sizes {got:?}, expected {want:?}"));
    }
    let mut seen = vec![false; spec.order()];
    seen[0] = true;
    for (b, block) in partition.blocks.iter().enumerate() {
        let mut sum = 0;
        for e in block {
            let i = spec
                .index_of(e)
                .map_err(|_| format!("block {b}: {e} is not an element"))?;
            if seen[i] {
                return Err(format!("block {b}: {e} is the identity or repeated"));
            }
            seen[i] = true;
            sum = spec.add_idx(sum, i);
        }
        if sum != 0 {
            return Err(format!("block {b} sums to {}", spec.element_at(sum)));
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(i) => Err(format!("{} is not covered", spec.element_at(i))),
        None => Ok(()),
    }
}

/// Searches for a partition of `Γ - {0}` into zero-sum blocks with sizes
/// `parts` (order irrelevant), for groups of even order with at least three
/// involutions.
pub fn conjecture_scan(
    spec: &GroupSpec,
    parts: &[usize],
    budget: u64,
) -> Result<SearchReport<UnequalPartition>> {
    let n = spec.order();
    if n % 2 == 1 || spec.involution_count() < 3 {
        return Err(Error::Parameter(format!(
            "{spec} needs even order and at least three involutions"
        )));
    }
    if parts.iter().any(|&p| p < 3) || parts.iter().sum::<usize>() != n - 1 {
        return Err(Error::Parameter(format!(
            "parts {parts:?} must be at least 3 and sum to {}",
            n - 1
        )));
    }
    let mut sizes = BTreeMap::new();
    for &p in parts {
        *sizes.entry(p).or_insert(0) += 1;
    }
    let (counter, blocks) = run_blocks(spec, true, sizes, budget);
    let witness = blocks.map(|bs| UnequalPartition {
        blocks: bs
            .into_iter()
            .map(|b| b.into_iter().map(|i| spec.element_at(i)).collect())
            .collect(),
    });
    if let Some(w) = &witness {
        verify_unequal_partition(spec, parts, w).map_err(|v| rejected("partition", v))?;
    }
    Ok(counter.report(witness))
}

/// Partitions of `total` into parts `>= 3`, each non-increasing, in
/// lexicographically decreasing order.
pub fn partitions_min3(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (3..=max.min(rest)).rev() {
            if rest - p == 0 || rest - p >= 3 {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if total >= 3 {
        go(total, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of distinct orderings (compositions) of a multiset of parts.
pub fn composition_count(parts: &[usize]) -> u128 {
    let mut counts = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0u128) += 1;
    }
    let fact = |k: u128| (1..=k).product::<u128>();
    counts
        .values()
        .fold(fact(parts.len() as u128), |acc, &c| acc / fact(c))
}

/// One instance of the scan: every composition with this multiset of parts
/// is answered by the same search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRecord {
    pub spec: GroupSpec,
    pub parts: Vec<usize>,
    pub compositions: u128,
    pub report: SearchReport<UnequalPartition>,
}

/// Runs [`conjecture_scan`] over every qualifying group of order at most
/// `max_order` and every multiset of parts.
pub fn scan(max_order: usize, budget: u64) -> Result<Vec<ScanRecord>> {
    let mut out = Vec::new();
    for spec in GroupSpec::all_up_to(max_order) {
        if spec.order() % 2 == 1 || spec.involution_count() < 3 {
            continue;
        }
        for parts in partitions_min3(spec.order() - 1) {
            let report = conjecture_scan(&spec, &parts, budget)?;
            out.push(ScanRecord {
                compositions: composition_count(&parts),
                spec: spec.clone(),
                parts,
                report,
            });
        }
    }
    Ok(out)
}

/// Largest order accepted by [`search_triple_bijection`] (value sets are
/// kept as 64-bit masks).
pub const TRIPLE_SEARCH_MAX_ORDER: usize = 64;

/// Triple-bijection search over `phi` in enumeration order, `psi` forced.
/// Two normalisations keep the enumeration-least solution reachable:
/// `phi(0) = 0` (translating `phi` by `c` and `psi` by `-c` preserves
/// solutions) and `phi(1) <= psi(1)` (swapping `phi` and `psi` does too,
/// and makes a solution with `phi(1) > psi(1)` lexicographically smaller).
struct TripleSearch {
    n: usize,
    /// `forced[g * n + p] = -(g + p)`.
    forced: Vec<usize>,
    phi: Vec<usize>,
    free_phi: u64,
    free_psi: u64,
    counter: Counter,
}

impl TripleSearch {
    fn psi_of(&self, g: usize, p: usize) -> usize {
        self.forced[g * self.n + p]
    }

    /// Every unassigned `g` still has a value, and every free `phi`/`psi`
    /// value can still be hit.
    fn viable(&self, from: usize) -> bool {
        let mut phi_hit = 0u64;
        let mut psi_hit = 0u64;
        for g in from..self.n {
            let mut any = false;
            let mut ps = self.free_phi;
            while ps != 0 {
                let p = ps.trailing_zeros() as usize;
                ps &= ps - 1;
                let q = self.psi_of(g, p);
                if self.free_psi >> q & 1 == 1 {
                    any = true;
                    phi_hit |= 1 << p;
                    psi_hit |= 1 << q;
                }
            }
            if !any {
                return false;
            }
        }
        phi_hit == self.free_phi && psi_hit == self.free_psi
    }

    fn extend(&mut self, g: usize) -> bool {
        let n = self.n;
        if g == n {
            return true;
        }
        let candidates = if g == 0 { 0..1 } else { 0..n };
        for p in candidates {
            if self.free_phi >> p & 1 == 0 {
                continue;
            }
            let q = self.psi_of(g, p);
            if self.free_psi >> q & 1 == 0 || (g == 1 && p > q) {
                continue;
            }
            if !self.counter.tick() {
                return false;
            }
            self.phi[g] = p;
            self.free_phi &= !(1 << p);
            self.free_psi &= !(1 << q);
            if self.viable(g + 1) && self.extend(g + 1) {
                return true;
            }
            self.free_phi |= 1 << p;
            self.free_psi |= 1 << q;
            if self.counter.hit {
                return false;
            }
        }
        false
    }
}

/// Exhaustive search for a triple bijection, returning the
/// enumeration-least one with `phi(0) = 0`.
pub fn search_triple_bijection(
    spec: &GroupSpec,
    budget: u64,
) -> Result<SearchReport<TripleBijection>> {
    let n = spec.order();
    if n > TRIPLE_SEARCH_MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "triple bijection search is limited to order {TRIPLE_SEARCH_MAX_ORDER}, got {n}"
        )));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = TripleSearch {
        n,
        forced: (0..n * n)
            .map(|i| spec.neg_idx(spec.add_idx(i / n, i % n)))
            .collect(),
        phi: vec![0; n],
        free_phi: full,
        free_psi: full,
        counter: Counter::new(budget),
    };
    let witness = s.extend(0).then(|| {
        let psi = (0..n).map(|g| s.psi_of(g, s.phi[g])).collect();
        TripleBijection::from_indices(s.phi.clone(), psi)
    });
    if let Some(tb) = &witness {
        verify_triple_bijection(spec, tb).map_err(|v| rejected("triple bijection", v))?;
    }
    Ok(s.counter.report(witness))
}

/// What a Kotzig array is built over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KotzigTarget {
    Group(GroupSpec),
    /// Integers `0..k`.
    Int(usize),
}

impl KotzigTarget {
    fn width(&self) -> usize {
        match self {
            KotzigTarget::Group(s) => s.order(),
            KotzigTarget::Int(k) => *k,
        }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        match self {
            KotzigTarget::Group(s) => s.add_idx(a, b),
            KotzigTarget::Int(_) => a + b,
        }
    }

    /// The entry completing a column with partial sum `partial` to `mu`.
    fn complete(&self, mu: usize, partial: usize) -> Option<usize> {
        match self {
            KotzigTarget::Group(s) => Some(s.sub_idx(mu, partial)),
            KotzigTarget::Int(k) => mu.checked_sub(partial).filter(|x| x < k),
        }
    }
}

/// Row-major search with the first row fixed to `0..k` (columns may be
/// permuted freely) and the last row forced by the column sum.
struct KotzigSearch<'a> {
    target: &'a KotzigTarget,
    mu: usize,
    grid: Vec<Vec<usize>>,
    used: Vec<Vec<bool>>,
    partial: Vec<usize>,
    counter: Counter,
}

impl KotzigSearch<'_> {
    fn place(&mut self, r: usize, c: usize) -> bool {
        let (j, k) = (self.grid.len(), self.target.width());
        if c == k {
            return r + 1 == j - 1 || self.place(r + 1, 0);
        }
        let forcing = r + 2 == j;
        for x in 0..k {
            if self.used[r][x] {
                continue;
            }
            let partial = self.target.add(self.partial[c], x);
            let last = if forcing {
                match self.target.complete(self.mu, partial) {
                    Some(y) if !self.used[j - 1][y] => Some(y),
                    _ => continue,
                }
            } else {
                None
            };
            if !self.counter.tick() {
                return false;
            }
            let saved = self.partial[c];
            self.grid[r][c] = x;
            self.used[r][x] = true;
            self.partial[c] = partial;
            if let Some(y) = last {
                self.grid[j - 1][c] = y;
                self.used[j - 1][y] = true;
            }
            if self.place(r, c + 1) {
                return true;
            }
            if let Some(y) = last {
                self.used[j - 1][y] = false;
            }
            self.partial[c] = saved;
            self.used[r][x] = false;
            if self.counter.hit {
                return false;
            }
        }
        false
    }

    /// `j = 2`: the second row is forced entirely.
    fn forced_pair(&mut self) -> bool {
        let k = self.target.width();
        for c in 0..k {
            if !self.counter.tick() {
                return false;
            }
            match self.target.complete(self.mu, self.partial[c]) {
                Some(y) if !self.used[1][y] => {
                    self.grid[1][c] = y;
                    self.used[1][y] = true;
                }
                _ => return false,
            }
        }
        true
    }
}

/// Searches for a `j x k` Kotzig array. Group arrays are sought with column
/// sum zero (adding `-mu` to one row normalises any solution); integer
/// arrays branch over every possible column sum.
pub fn search_kotzig(
    target: &KotzigTarget,
    j: usize,
    budget: u64,
) -> Result<SearchReport<KotzigArray>> {
    let k = target.width();
    if j < 2 || k == 0 {
        return Err(Error::Parameter(format!(
            "search needs at least two rows and one column, got {j}x{k}"
        )));
    }
    let mus: Vec<usize> = match target {
        KotzigTarget::Group(_) => vec![0],
        KotzigTarget::Int(_) => (0..=j * (k - 1)).collect(),
    };
    let mut counter = Counter::new(budget);
    let mut grid = None;
    for mu in mus {
        let mut s = KotzigSearch {
            target,
            mu,
            grid: vec![vec![0; k]; j],
            used: vec![vec![false; k]; j],
            partial: (0..k).collect(),
            counter: Counter {
                nodes: counter.nodes,
                budget,
                hit: false,
            },
        };
        s.grid[0] = (0..k).collect();
        s.used[0] = vec![true; k];
        let found = if j == 2 {
            s.forced_pair()
        } else {
            s.place(1, 0)
        };
        counter = s.counter;
        if found {
            grid = Some(s.grid);
            break;
        }
        if counter.hit {
            break;
        }
    }
    let witness = grid.map(|g| match target {
        KotzigTarget::Group(spec) => KotzigArray::Group(GroupKotzigArray {
            spec: spec.clone(),
            grid: g
                .into_iter()
                .map(|r| r.into_iter().map(|i| spec.element_at(i)).collect())
                .collect(),
        }),
        KotzigTarget::Int(k) => KotzigArray::Int(IntKotzigArray { k: *k, grid: g }),
    });
    match &witness {
        Some(KotzigArray::Group(a)) => {
            verify_group_kotzig(a).map_err(|v| rejected("Kotzig array", v))?;
        }
        Some(KotzigArray::Int(a)) => {
            verify_int_kotzig(a).map_err(|v| rejected("Kotzig array", v))?;
        }
        None => {}
    }
    Ok(counter.report(witness))
}

/// Assigns labels to vertices `0, 1, ..` in order; as soon as every
/// neighbour of a vertex is labelled its weight is compared with the first
/// completed weight.
struct LabelSearch<'a> {
    g: &'a Graph,
    spec: &'a GroupSpec,
    labels: Vec<usize>,
    used: Vec<bool>,
    /// `closing[t]`: vertices whose last neighbour (in vertex order) is `t`.
    closing: Vec<Vec<usize>>,
    mu: Option<usize>,
    counter: Counter,
}

impl LabelSearch<'_> {
    fn weight(&self, x: usize) -> usize {
        self.g
            .neighbors(x)
            .iter()
            .fold(0, |s, &y| self.spec.add_idx(s, self.labels[y]))
    }

    fn extend(&mut self, v: usize) -> bool {
        let n = self.labels.len();
        if v == n {
            return true;
        }
        for l in 0..n {
            if self.used[l] {
                continue;
            }
            if !self.counter.tick() {
                return false;
            }
            self.labels[v] = l;
            self.used[l] = true;
            let saved_mu = self.mu;
            let mut ok = true;
            for i in 0..self.closing[v].len() {
                let w = self.weight(self.closing[v][i]);
                match self.mu {
                    None => self.mu = Some(w),
                    Some(m) if m != w => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                }
            }
            if ok && self.extend(v + 1) {
                return true;
            }
            self.mu = saved_mu;
            self.used[l] = false;
            if self.counter.hit {
                return false;
            }
        }
        false
    }
}

/// Exhaustive search for a distance magic labeling of `g` by `spec`.
pub fn search_labeling(g: &Graph, spec: &GroupSpec, budget: u64) -> Result<SearchReport<Labeling>> {
    let n = g.vertex_count();
    if n != spec.order() {
        return Err(Error::Parameter(format!(
            "graph has {n} vertices but {spec} has order {}",
            spec.order()
        )));
    }
    let mut closing = vec![Vec::new(); n];
    let mut mu = None;
    for x in 0..n {
        match g.neighbors(x).last() {
            Some(&t) => closing[t].push(x),
            // An isolated vertex has weight zero whatever the labels.
            None => mu = Some(0),
        }
    }
    let mut s = LabelSearch {
        g,
        spec,
        labels: vec![0; n],
        used: vec![false; n],
        closing,
        mu,
        counter: Counter::new(budget),
    };
    let witness = if s.extend(0) {
        Some(Labeling::from_indices(spec, s.labels.clone())?)
    } else {
        None
    };
    if let Some(l) = &witness {
        match verify_labeling(g, l)? {
            Verdict::Magic(_) => {}
            other => return Err(rejected("labeling", other)),
        }
    }
    Ok(s.counter.report(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::lex_product;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn zsp_search_examples() {
        let r = search_zsp(&spec("Z6"), 3, DEFAULT_BUDGET).unwrap();
        assert!(r.proves_nonexistence());
        assert!(search_zsp(&spec("Z9"), 3, DEFAULT_BUDGET).unwrap().found);
        let r = search_zsp(&spec("Z2xZ2"), 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.witness.unwrap().blocks.len(), 1);
        assert!(search_zsp(&spec("Z5"), 2, DEFAULT_BUDGET).is_err());
        assert!(search_zsp(&spec("Z6"), 2, DEFAULT_BUDGET)
            .unwrap()
            .proves_nonexistence());
    }

    #[test]
    fn budget_is_reported() {
        let r = search_zsp(&spec("Z16"), 4, 10).unwrap();
        assert!(!r.found && !r.exhausted);
        assert_eq!(r.nodes, 11);
    }

    #[test]
    fn triple_search_examples() {
        assert!(search_triple_bijection(&spec("Z4"), DEFAULT_BUDGET)
            .unwrap()
            .proves_nonexistence());
        assert!(
            search_triple_bijection(&spec("Z2xZ2"), DEFAULT_BUDGET)
                .unwrap()
                .found
        );
        let r = search_triple_bijection(&spec("Z3"), DEFAULT_BUDGET).unwrap();
        let tb = r.witness.unwrap();
        assert_eq!(tb.phi(), &[0, 1, 2]);
        assert_eq!(tb.psi(), &[0, 1, 2]);
    }

    #[test]
    fn kotzig_search_examples() {
        let z4 = KotzigTarget::Group(spec("Z4"));
        assert!(search_kotzig(&z4, 3, DEFAULT_BUDGET)
            .unwrap()
            .proves_nonexistence());
        assert!(search_kotzig(&z4, 2, DEFAULT_BUDGET).unwrap().found);
        assert!(
            search_kotzig(&KotzigTarget::Int(3), 3, DEFAULT_BUDGET)
                .unwrap()
                .found
        );
        assert!(search_kotzig(&KotzigTarget::Int(4), 3, DEFAULT_BUDGET)
            .unwrap()
            .proves_nonexistence());
        assert!(
            search_kotzig(&KotzigTarget::Group(spec("Z3")), 4, DEFAULT_BUDGET)
                .unwrap()
                .found
        );
    }

    #[test]
    fn labeling_search_examples() {
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(search_labeling(&k33, &spec("Z6"), DEFAULT_BUDGET)
            .unwrap()
            .proves_nonexistence());
        assert!(
            search_labeling(&Graph::cycle(4).unwrap(), &spec("Z4"), DEFAULT_BUDGET)
                .unwrap()
                .found
        );
        assert!(
            search_labeling(&Graph::complete(2), &spec("Z2"), DEFAULT_BUDGET)
                .unwrap()
                .proves_nonexistence()
        );
        let r = search_labeling(&Graph::empty(3), &spec("Z3"), DEFAULT_BUDGET).unwrap();
        assert!(r.found);
        let k = lex_product(&Graph::complete(2), &Graph::empty(2));
        assert!(
            search_labeling(&k, &spec("Z2xZ2"), DEFAULT_BUDGET)
                .unwrap()
                .found
        );
    }

    #[test]
    fn conjecture_examples() {
        let g = spec("Z2xZ2xZ3");
        for parts in [[3, 4, 4], [3, 3, 5]] {
            assert!(conjecture_scan(&g, &parts, DEFAULT_BUDGET).unwrap().found);
        }
        let r = conjecture_scan(&spec("Z2xZ2"), &[3], DEFAULT_BUDGET).unwrap();
        assert_eq!(r.witness.unwrap().blocks[0].len(), 3);
        assert!(conjecture_scan(&g, &[3, 7], DEFAULT_BUDGET).is_err());
        assert!(conjecture_scan(&spec("Z6"), &[5], DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn partitions_and_compositions() {
        assert_eq!(
            partitions_min3(9),
            vec![vec![9], vec![6, 3], vec![5, 4], vec![3, 3, 3]]
        );
        assert!(partitions_min3(2).is_empty());
        assert_eq!(composition_count(&[6, 3]), 2);
        assert_eq!(composition_count(&[4, 4, 3]), 3);
        // Compositions of 9 into parts >= 3: 9, 6+3, 3+6, 5+4, 4+5, 3+3+3.
        let total: u128 = partitions_min3(9)
            .iter()
            .map(|p| composition_count(p))
            .sum();
        assert_eq!(total, 6);
    }
}
