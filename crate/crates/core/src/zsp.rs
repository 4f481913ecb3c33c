//! Zero-sum machinery: involution quadruples, triple bijections and
//! partitions of a group into equal-size zero-sum blocks.
//!
//! Every constructor here validates its output with the matching verifier
//! before returning it.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

/// Largest order for which the backtracking fallback of
/// [`triple_bijection`] is attempted.
pub const TRIPLE_SEARCH_MAX_ORDER: usize = 256;

/// Rank-two 2-groups up to this order are solved by search; larger ones
/// are reduced through the two quotient steps.
pub const RANK_TWO_SEARCH_MAX_ORDER: usize = 16;

const TRIPLE_SEARCH_NODE_LIMIT: u64 = 200_000_000;
const TRIPLE_PICK_NODE_LIMIT: u64 = 5_000_000;

/// Two permutations `phi`, `psi` of the element indices of a group with
/// `g + phi(g) + psi(g) = 0` for every `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleBijection {
    phi: Vec<usize>,
    psi: Vec<usize>,
}

impl TripleBijection {
    /// Wraps raw index tables without checking them; see
    /// [`verify_triple_bijection`].
    pub fn from_indices(phi: Vec<usize>, psi: Vec<usize>) -> Self {
        TripleBijection { phi, psi }
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    /// `(g, phi(g), psi(g))` for every element in enumeration order.
    pub fn rows(&self, spec: &GroupSpec) -> Vec<[GroupElement; 3]> {
        (0..self.phi.len())
            .map(|g| {
                [
                    spec.element_at(g),
                    spec.element_at(self.phi[g]),
                    spec.element_at(self.psi[g]),
                ]
            })
            .collect()
    }

    /// Rebuilds the bijection from `(g, phi(g), psi(g))` rows in any order.
    pub fn from_rows(spec: &GroupSpec, rows: &[[GroupElement; 3]]) -> Result<Self> {
        let n = spec.order();
        let mut phi = vec![usize::MAX; n];
        let mut psi = vec![usize::MAX; n];
        for row in rows {
            let g = spec.index_of(&row[0])?;
            if phi[g] != usize::MAX {
                return Err(Error::Parameter(format!("element {} listed twice", row[0])));
            }
            phi[g] = spec.index_of(&row[1])?;
            psi[g] = spec.index_of(&row[2])?;
        }
        if let Some(g) = phi.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Parameter(format!(
                "no row for element {}",
                spec.element_at(g)
            )));
        }
        Ok(TripleBijection { phi, psi })
    }

    /// Carries the bijection along an isomorphism given as an index map
    /// `map[source index] = target index`.
    fn transport(&self, map: &[usize]) -> TripleBijection {
        let n = map.len();
        let mut phi = vec![0; n];
        let mut psi = vec![0; n];
        for (i, &mi) in map.iter().enumerate() {
            phi[mi] = map[self.phi[i]];
            psi[mi] = map[self.psi[i]];
        }
        TripleBijection { phi, psi }
    }

    /// Componentwise product over `first x second`, with the first factor
    /// in the leading coordinates.
    fn product(first: &TripleBijection, second: &TripleBijection) -> TripleBijection {
        let n2 = second.len();
        let n = first.len() * n2;
        let mut phi = Vec::with_capacity(n);
        let mut psi = Vec::with_capacity(n);
        for i in 0..first.len() {
            for j in 0..n2 {
                phi.push(first.phi[i] * n2 + second.phi[j]);
                psi.push(first.psi[i] * n2 + second.psi[j]);
            }
        }
        TripleBijection { phi, psi }
    }
}

/// First reason a candidate triple bijection is invalid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BijectionViolation {
    WrongLength {
        expected: usize,
        phi: usize,
        psi: usize,
    },
    NotPermutation {
        map: &'static str,
        element: GroupElement,
    },
    NonZeroSum {
        element: GroupElement,
        sum: GroupElement,
    },
}

impl fmt::Display for BijectionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionViolation::WrongLength { expected, phi, psi } => write!(
                f,
                "expected {expected} entries, phi has {phi} and psi has {psi}"
            ),
            BijectionViolation::NotPermutation { map, element } => {
                write!(f, "{map} hits {element} twice")
            }
            BijectionViolation::NonZeroSum { element, sum } => {
                write!(f, "g + phi(g) + psi(g) = {sum} at g = {element}")
            }
        }
    }
}

pub fn verify_triple_bijection(
    spec: &GroupSpec,
    tb: &TripleBijection,
) -> std::result::Result<(), BijectionViolation> {
    let n = spec.order();
    if tb.phi.len() != n || tb.psi.len() != n {
        return Err(BijectionViolation::WrongLength {
            expected: n,
            phi: tb.phi.len(),
            psi: tb.psi.len(),
        });
    }
    for (name, map) in [("phi", &tb.phi), ("psi", &tb.psi)] {
        let mut seen = vec![false; n];
        for &v in map.iter() {
            if v >= n {
                return Err(BijectionViolation::WrongLength {
                    expected: n,
                    phi: tb.phi.len(),
                    psi: tb.psi.len(),
                });
            }
            if seen[v] {
                return Err(BijectionViolation::NotPermutation {
                    map: name,
                    element: spec.element_at(v),
                });
            }
            seen[v] = true;
        }
    }
    for g in 0..n {
        let s = spec.add_idx(spec.add_idx(g, tb.phi[g]), tb.psi[g]);
        if s != 0 {
            return Err(BijectionViolation::NonZeroSum {
                element: spec.element_at(g),
                sum: spec.element_at(s),
            });
        }
    }
    Ok(())
}

/// How [`triple_bijection_via`] builds its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleStrategy {
    /// Closed forms and reductions first, search last.
    Auto,
    /// Odd order: `phi = id`, `psi(g) = -2g`.
    OddClosedForm,
    /// Split into two factors that both admit triple bijections.
    Product,
    /// One of the tables for `Z2xZ2xZ2`, `Z2xZ2xZ4`, `Z2xZ2xZ8`.
    BaseTable,
    /// `Z_{2^a} x Z_{2^b} x Z_{2^c}` with `b, c >= 2` (or `Z_{2^b} x Z_{2^c}`),
    /// through a quotient isomorphic to `Z2xZ2`.
    KleinQuotient,
    /// `Z2 x Z2 x Z_{2^c}` (or `Z2 x Z_{2^c}`) with `c >= 4`, through a
    /// quotient isomorphic to `Z8`.
    CyclicEightQuotient,
    /// Backtracking; returns the enumeration-least solution.
    Search,
}

/// A triple bijection for any group of odd order or with more than one
/// involution.
pub fn triple_bijection(spec: &GroupSpec) -> Result<TripleBijection> {
    triple_bijection_via(spec, TripleStrategy::Auto)
}

pub fn triple_bijection_via(spec: &GroupSpec, strategy: TripleStrategy) -> Result<TripleBijection> {
    if !spec.in_class_g() {
        return Err(Error::Nonexistence(format!(
            "{spec} has exactly one involution, so the three rows would sum to it instead of the identity"
        )));
    }
    let tb = match strategy {
        TripleStrategy::OddClosedForm => odd_closed_form(spec)?,
        TripleStrategy::Search => search_least(spec)?,
        TripleStrategy::Auto if spec.order() % 2 == 1 => odd_closed_form(spec)?,
        _ => {
            let canonical = spec.canonical();
            let inner = canonical_strategy(&canonical, strategy)?;
            inner.transport(&spec.canonical_isomorphism())
        }
    };
    verify_triple_bijection(spec, &tb)
        .map_err(|v| Error::Internal(format!("{strategy:?} on {spec}: {v}")))?;
    Ok(tb)
}

fn odd_closed_form(spec: &GroupSpec) -> Result<TripleBijection> {
    if spec.order() % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "the odd closed form needs odd order, {spec} has order {}",
            spec.order()
        )));
    }
    let n = spec.order();
    Ok(TripleBijection {
        phi: (0..n).collect(),
        psi: (0..n).map(|g| spec.scale_idx(-2, g)).collect(),
    })
}

/// Dispatch on a canonical presentation (2-power factors first, ascending).
fn canonical_strategy(canonical: &GroupSpec, strategy: TripleStrategy) -> Result<TripleBijection> {
    let factors = canonical.factors();
    let twos = factors.iter().take_while(|&&f| f % 2 == 0).count();
    match strategy {
        TripleStrategy::Auto => {
            if twos == 0 {
                odd_closed_form(canonical)
            } else if twos < factors.len() {
                product_split(factors, twos)
            } else {
                two_group(factors)
            }
        }
        TripleStrategy::Product => {
            let split = if twos > 0 && twos < factors.len() {
                twos
            } else if twos >= 4 {
                if twos == 4 {
                    2
                } else {
                    3
                }
            } else if twos == 0 && factors.len() >= 2 {
                1
            } else {
                return Err(Error::Unsupported(format!(
                    "{canonical} is not a product of two groups that both admit triple bijections"
                )));
            };
            product_split(factors, split)
        }
        TripleStrategy::BaseTable => base_table(factors).ok_or_else(|| {
            Error::Unsupported(format!(
                "no base table for {canonical}; tables cover Z2xZ2xZ2, Z2xZ2xZ4, Z2xZ2xZ8"
            ))
        }),
        TripleStrategy::KleinQuotient => {
            let n = factors.len();
            if twos == n && (n == 2 || n == 3) && factors[n - 2] >= 4 {
                klein_quotient(factors)
            } else {
                Err(Error::Unsupported(format!(
                    "{canonical} is not Z_2^a x Z_2^b x Z_2^c with b, c >= 2"
                )))
            }
        }
        TripleStrategy::CyclicEightQuotient => {
            let n = factors.len();
            if twos == n && (n == 2 || n == 3) && factors[n - 2] == 2 && factors[n - 1] >= 16 {
                cyclic_eight_quotient(factors)
            } else {
                Err(Error::Unsupported(format!(
                    "{canonical} is not Z2 x Z2 x Z_2^c with c >= 4"
                )))
            }
        }
        TripleStrategy::OddClosedForm | TripleStrategy::Search => unreachable!(),
    }
}

fn spec_of(factors: &[usize]) -> GroupSpec {
    GroupSpec::new(factors.to_vec()).expect("factors of a valid group")
}

fn product_split(factors: &[usize], at: usize) -> Result<TripleBijection> {
    let first = triple_bijection(&spec_of(&factors[..at]))?;
    let second = triple_bijection(&spec_of(&factors[at..]))?;
    Ok(TripleBijection::product(&first, &second))
}

/// A 2-group of rank at least two, factors given in any order.
fn two_group(factors: &[usize]) -> Result<TripleBijection> {
    let mut sorted = factors.to_vec();
    sorted.sort_unstable();
    if sorted != factors {
        let tb = two_group(&sorted)?;
        return Ok(tb.transport(&coordinate_permutation(&sorted, factors)));
    }
    match factors.len() {
        0 | 1 => Err(Error::Nonexistence(format!(
            "{} has at most one involution",
            spec_of(factors)
        ))),
        2 if spec_of(factors).order() <= RANK_TWO_SEARCH_MAX_ORDER => {
            search_least(&spec_of(factors))
        }
        2 if factors[0] >= 4 => klein_quotient(factors),
        2 => cyclic_eight_quotient(factors),
        3 => {
            if let Some(tb) = base_table(factors) {
                Ok(tb)
            } else if factors[1] >= 4 {
                klein_quotient(factors)
            } else {
                cyclic_eight_quotient(factors)
            }
        }
        4 => product_split(factors, 2),
        _ => product_split(factors, 3),
    }
}

/// Index map from the presentation `from` to `to`, where `to` lists the
/// same factor orders in another arrangement.
fn coordinate_permutation(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut taken = vec![false; to.len()];
    let slots: Vec<usize> = from
        .iter()
        .map(|f| {
            let j = (0..to.len())
                .find(|&j| !taken[j] && to[j] == *f)
                .expect("same multiset of factors");
            taken[j] = true;
            j
        })
        .collect();
    let src = spec_of(from);
    let dst = spec_of(to);
    (0..src.order())
        .map(|i| {
            let c = src.decode(i);
            let mut d = vec![0; to.len()];
            for (k, &j) in slots.iter().enumerate() {
                d[j] = c[k];
            }
            dst.encode(&d)
        })
        .collect()
}

/// The `Z2xZ2xZ2` table, columns `(g, phi(g), psi(g))`.
pub const TABLE_Z2_Z2_Z2: [[[usize; 3]; 3]; 8] = [
    [[0, 0, 0], [0, 0, 1], [0, 0, 1]],
    [[0, 0, 1], [1, 1, 1], [1, 1, 0]],
    [[0, 1, 0], [0, 1, 0], [0, 0, 0]],
    [[0, 1, 1], [1, 0, 0], [1, 1, 1]],
    [[1, 0, 0], [0, 0, 0], [1, 0, 0]],
    [[1, 0, 1], [1, 1, 0], [0, 1, 1]],
    [[1, 1, 0], [0, 1, 1], [1, 0, 1]],
    [[1, 1, 1], [1, 0, 1], [0, 1, 0]],
];

/// The `Z2xZ2xZ4` table, columns `(g, phi(g), psi(g))` in printed order.
pub const TABLE_Z2_Z2_Z4: [[[usize; 3]; 3]; 16] = [
    [[0, 0, 0], [0, 1, 0], [0, 1, 0]],
    [[0, 1, 0], [1, 1, 2], [1, 0, 2]],
    [[1, 0, 0], [1, 0, 1], [0, 0, 3]],
    [[1, 1, 0], [0, 0, 3], [1, 1, 1]],
    [[0, 0, 1], [1, 0, 3], [1, 0, 0]],
    [[0, 1, 1], [0, 0, 1], [0, 1, 2]],
    [[1, 0, 1], [0, 1, 3], [1, 1, 0]],
    [[1, 1, 1], [1, 1, 1], [0, 0, 2]],
    [[0, 0, 2], [0, 0, 2], [0, 0, 0]],
    [[0, 1, 2], [1, 0, 0], [1, 1, 2]],
    [[1, 0, 2], [1, 1, 3], [0, 1, 3]],
    [[1, 1, 2], [0, 1, 1], [1, 0, 1]],
    [[0, 0, 3], [0, 0, 0], [0, 0, 1]],
    [[0, 1, 3], [1, 0, 2], [1, 1, 3]],
    [[1, 0, 3], [1, 1, 0], [0, 1, 1]],
    [[1, 1, 3], [0, 1, 2], [1, 0, 3]],
];

/// The `Z2xZ2xZ8` table for third coordinate 0 or 4.
///
/// The row for `(0,1,4)` has `psi = (1,1,0)`; it is the only value that keeps
/// `psi` a permutation and the row sum zero.
pub const TABLE_Z2_Z2_Z8_EVEN: [[[usize; 3]; 3]; 8] = [
    [[0, 0, 0], [0, 1, 0], [0, 1, 0]],
    [[0, 1, 0], [1, 1, 4], [1, 0, 4]],
    [[1, 0, 0], [1, 0, 0], [0, 0, 0]],
    [[1, 1, 0], [0, 0, 4], [1, 1, 4]],
    [[0, 0, 4], [0, 0, 0], [0, 0, 4]],
    [[0, 1, 4], [1, 0, 4], [1, 1, 0]],
    [[1, 0, 4], [1, 1, 0], [0, 1, 4]],
    [[1, 1, 4], [0, 1, 4], [1, 0, 0]],
];

/// Third coordinates `(a, b, c)` for `Z2xZ2xZ8` elements `(i, j, a)` with
/// `a` outside `{0, 4}`.
pub const Z2_Z2_Z8_TRIPLES: [[usize; 3]; 6] = [
    [2, 3, 3],
    [7, 2, 7],
    [5, 6, 5],
    [6, 1, 1],
    [1, 5, 2],
    [3, 7, 6],
];

/// First two coordinates `(g, phi(g), psi(g))` used with each triple above.
pub const Z2_Z2_Z8_PATTERN: [[[usize; 2]; 3]; 4] = [
    [[0, 0], [0, 0], [0, 0]],
    [[0, 1], [1, 0], [1, 1]],
    [[1, 0], [1, 1], [0, 1]],
    [[1, 1], [0, 1], [1, 0]],
];

/// All `(g, phi(g), psi(g))` rows of the `Z2xZ2xZ8` table.
pub fn z2_z2_z8_rows() -> Vec<[[usize; 3]; 3]> {
    let mut rows = TABLE_Z2_Z2_Z8_EVEN.to_vec();
    for [a, b, c] in Z2_Z2_Z8_TRIPLES {
        for [g, p, q] in Z2_Z2_Z8_PATTERN {
            rows.push([[g[0], g[1], a], [p[0], p[1], b], [q[0], q[1], c]]);
        }
    }
    rows
}

fn table_rows(factors: &[usize]) -> Option<Vec<[[usize; 3]; 3]>> {
    match factors {
        [2, 2, 2] => Some(TABLE_Z2_Z2_Z2.to_vec()),
        [2, 2, 4] => Some(TABLE_Z2_Z2_Z4.to_vec()),
        [2, 2, 8] => Some(z2_z2_z8_rows()),
        _ => None,
    }
}

fn base_table(factors: &[usize]) -> Option<TripleBijection> {
    let rows = table_rows(factors)?;
    let spec = spec_of(factors);
    let mut phi = vec![usize::MAX; spec.order()];
    let mut psi = vec![usize::MAX; spec.order()];
    for [g, p, q] in rows {
        let g = spec.encode(&g);
        phi[g] = spec.encode(&p);
        psi[g] = spec.encode(&q);
    }
    Some(TripleBijection { phi, psi })
}

/// A subgroup given by an abstract presentation and its embedding into a
/// larger group, with the triple bijection of the subgroup.
struct Embedded {
    into: Vec<usize>,
    back: Vec<usize>,
    tb: TripleBijection,
    phi_inv: Vec<usize>,
    psi_inv: Vec<usize>,
}

impl Embedded {
    /// `multipliers[k]` scales coordinate `k` of the subgroup into `outer`.
    fn new(outer: &GroupSpec, sub_factors: &[usize], multipliers: &[usize]) -> Result<Self> {
        let sub = spec_of(sub_factors);
        let tb = triple_bijection(&sub)?;
        let mut back = vec![usize::MAX; outer.order()];
        let into: Vec<usize> = (0..sub.order())
            .map(|i| {
                let c: Vec<usize> = sub
                    .decode(i)
                    .iter()
                    .zip(multipliers)
                    .map(|(&x, &m)| x * m)
                    .collect();
                outer.encode(&c)
            })
            .collect();
        for (i, &o) in into.iter().enumerate() {
            back[o] = i;
        }
        let mut phi_inv = vec![0; sub.order()];
        let mut psi_inv = vec![0; sub.order()];
        for i in 0..sub.order() {
            phi_inv[tb.phi[i]] = i;
            psi_inv[tb.psi[i]] = i;
        }
        Ok(Embedded {
            into,
            back,
            tb,
            phi_inv,
            psi_inv,
        })
    }

    fn phi(&self, b: usize) -> usize {
        self.into[self.tb.phi[b]]
    }

    fn psi(&self, b: usize) -> usize {
        self.into[self.tb.psi[b]]
    }
}

/// Unit vector in coordinate `k` scaled by `v`, as signed coordinates.
fn unit(rank: usize, k: usize, v: i64) -> Vec<i64> {
    let mut c = vec![0; rank];
    c[k] = v;
    c
}

/// Induction step through `Gamma / Gamma0 = Z2 x Z2`. The last two factors
/// have order at least 4 and `Gamma0` halves them (`<1> x <2> x <2>`, or
/// `<2> x <2>` for rank two). Cosets are represented by `{0, c, d, -c-d}`
/// with `c`, `d` the unit vectors of the last two coordinates; each
/// `{c + b, d + phi0(b), -c-d + psi0(b)}` is a zero-sum triple.
fn klein_quotient(factors: &[usize]) -> Result<TripleBijection> {
    let spec = spec_of(factors);
    let r = factors.len();
    let lead = r - 2;
    let sub_factors: Vec<usize> = factors
        .iter()
        .enumerate()
        .map(|(k, &f)| if k < lead { f } else { f / 2 })
        .collect();
    let multipliers: Vec<usize> = (0..r).map(|k| if k < lead { 1 } else { 2 }).collect();
    let sub = Embedded::new(&spec, &sub_factors, &multipliers)?;
    let el = |v: Vec<i64>| spec.element(&v);
    let mut gens = Vec::with_capacity(r);
    for k in 0..r {
        gens.push(el(unit(r, k, multipliers[k] as i64))?);
    }
    let mut minus_cd = vec![0; r];
    minus_cd[lead] = -1;
    minus_cd[lead + 1] = -1;
    let dec = spec.quotient_with_representatives(
        &gens,
        &[
            spec.identity(),
            el(unit(r, lead, 1))?,
            el(unit(r, lead + 1, 1))?,
            el(minus_cd)?,
        ],
    )?;
    if dec.quotient_spec().factors() != [2, 2] {
        return Err(Error::Internal(format!(
            "quotient of {spec} is {}, expected Z2xZ2",
            dec.quotient_spec()
        )));
    }
    let reps = dec.representative_indices();
    let (c, d, e) = (reps[1], reps[2], reps[3]);
    let n = spec.order();
    let mut phi = vec![0; n];
    let mut psi = vec![0; n];
    for a in 0..n {
        let (p, q) = match dec.coset_of(a) {
            0 => {
                let b = sub.back[a];
                (sub.phi(b), sub.psi(b))
            }
            1 => {
                // a = c + b
                let b = sub.back[spec.sub_idx(a, c)];
                (spec.add_idx(d, sub.phi(b)), spec.add_idx(e, sub.psi(b)))
            }
            2 => {
                // a = d + phi0(b)
                let b = sub.phi_inv[sub.back[spec.sub_idx(a, d)]];
                (spec.add_idx(e, sub.psi(b)), spec.add_idx(c, sub.into[b]))
            }
            _ => {
                // a = -c-d + psi0(b)
                let b = sub.psi_inv[sub.back[spec.sub_idx(a, e)]];
                (spec.add_idx(c, sub.into[b]), spec.add_idx(d, sub.phi(b)))
            }
        };
        phi[a] = p;
        psi[a] = q;
    }
    Ok(TripleBijection { phi, psi })
}

/// Induction step for `(Z2)^s x Z_{2^k}`, `s` in {1, 2}, `k >= 4`, through
/// `Gamma / Gamma0 = Z8` with `Gamma0` scaling the last factor by 8. The
/// cosets of `Gamma0` and `(..,4) + Gamma0` form `Gamma1` (last factor
/// scaled by 4); the other six cosets, represented by
/// `c, d, -c-d, -c, -d, c+d` with `c = (..,1)`, `d = (..,2)`, are covered
/// by zero-sum triples built from `Gamma0`.
fn cyclic_eight_quotient(factors: &[usize]) -> Result<TripleBijection> {
    let spec = spec_of(factors);
    let r = factors.len();
    let last = r - 1;
    let top = factors[last];
    let scaled = |div: usize| -> (Vec<usize>, Vec<usize>) {
        let mut f = factors.to_vec();
        f[last] = top / div;
        let mut m = vec![1; r];
        m[last] = div;
        (f, m)
    };
    let (f0, m0) = scaled(8);
    let (f1, m1) = scaled(4);
    let sub0 = Embedded::new(&spec, &f0, &m0)?;
    let sub1 = Embedded::new(&spec, &f1, &m1)?;
    let el = |k: i64| spec.element(&unit(r, last, k));
    let mut gens = Vec::with_capacity(r);
    for k in 0..r {
        gens.push(spec.element(&unit(r, k, m0[k] as i64))?);
    }
    let dec = spec.quotient_with_representatives(
        &gens,
        &[
            el(0)?,
            el(4)?,
            el(1)?,
            el(2)?,
            el(-3)?,
            el(-1)?,
            el(-2)?,
            el(3)?,
        ],
    )?;
    if dec.quotient_spec().factors() != [8] {
        return Err(Error::Internal(format!(
            "quotient of {spec} is {}, expected Z8",
            dec.quotient_spec()
        )));
    }
    let rep = dec.representative_indices();
    let (c, d, cd_neg, c_neg, d_neg, cd) = (rep[2], rep[3], rep[4], rep[5], rep[6], rep[7]);
    let n = spec.order();
    let mut phi = vec![usize::MAX; n];
    let mut psi = vec![usize::MAX; n];
    for a in 0..n {
        if dec.coset_of(a) <= 1 {
            let b = sub1.back[a];
            phi[a] = sub1.phi(b);
            psi[a] = sub1.psi(b);
        }
    }
    for b in 0..sub0.into.len() {
        for (x, y, z) in [(c, d, cd_neg), (c_neg, d_neg, cd)] {
            let t = [
                spec.add_idx(x, sub0.into[b]),
                spec.add_idx(y, sub0.phi(b)),
                spec.add_idx(z, sub0.psi(b)),
            ];
            for k in 0..3 {
                phi[t[k]] = t[(k + 1) % 3];
                psi[t[k]] = t[(k + 2) % 3];
            }
        }
    }
    Ok(TripleBijection { phi, psi })
}

/// Enumeration-least triple bijection by depth-first search over `phi`,
/// with `psi(g) = -g - phi(g)` forced. After every assignment each
/// unassigned element must still have a free `(phi, psi)` option and every
/// free value must still be reachable; this only cuts dead subtrees, so the
/// first solution found is still the least one.
fn search_least(spec: &GroupSpec) -> Result<TripleBijection> {
    let n = spec.order();
    if n > TRIPLE_SEARCH_MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "triple bijection search is capped at order {TRIPLE_SEARCH_MAX_ORDER}, {spec} has order {n}"
        )));
    }
    let mut search = TripleSearch {
        n,
        forced: (0..n)
            .map(|g| (0..n).map(|v| spec.neg_idx(spec.add_idx(g, v))).collect())
            .collect(),
        phi: vec![0; n],
        used_phi: vec![false; n],
        used_psi: vec![false; n],
        nodes: 0,
    };
    match search.extend(0) {
        Some(true) => {
            let psi = (0..n).map(|g| search.forced[g][search.phi[g]]).collect();
            Ok(TripleBijection {
                phi: search.phi,
                psi,
            })
        }
        Some(false) => Err(Error::Nonexistence(format!(
            "exhaustive search found no triple bijection for {spec}"
        ))),
        None => Err(Error::Unsupported(format!(
            "triple bijection search on {spec} exceeded {TRIPLE_SEARCH_NODE_LIMIT} nodes"
        ))),
    }
}

struct TripleSearch {
    n: usize,
    forced: Vec<Vec<usize>>,
    phi: Vec<usize>,
    used_phi: Vec<bool>,
    used_psi: Vec<bool>,
    nodes: u64,
}

impl TripleSearch {
    /// `None` when the node limit is hit.
    fn extend(&mut self, g: usize) -> Option<bool> {
        if g == self.n {
            return Some(true);
        }
        for v in 0..self.n {
            let w = self.forced[g][v];
            if self.used_phi[v] || self.used_psi[w] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > TRIPLE_SEARCH_NODE_LIMIT {
                return None;
            }
            self.phi[g] = v;
            self.used_phi[v] = true;
            self.used_psi[w] = true;
            if self.consistent(g + 1) && self.extend(g + 1)? {
                return Some(true);
            }
            self.used_phi[v] = false;
            self.used_psi[w] = false;
        }
        Some(false)
    }

    fn consistent(&self, from: usize) -> bool {
        let mut phi_hit = self.used_phi.clone();
        let mut psi_hit = self.used_psi.clone();
        for h in from..self.n {
            let mut any = false;
            for v in 0..self.n {
                let w = self.forced[h][v];
                if !self.used_phi[v] && !self.used_psi[w] {
                    any = true;
                    phi_hit[v] = true;
                    psi_hit[w] = true;
                }
            }
            if !any {
                return false;
            }
        }
        phi_hit.iter().all(|&x| x) && psi_hit.iter().all(|&x| x)
    }
}

/// A partition of a group into blocks of equal size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSumPartition {
    pub block_size: usize,
    pub blocks: Vec<Vec<GroupElement>>,
}

impl ZeroSumPartition {
    /// Blocks given as element indices; each block is sorted.
    pub(crate) fn from_indices(
        spec: &GroupSpec,
        block_size: usize,
        blocks: Vec<Vec<usize>>,
    ) -> Self {
        ZeroSumPartition {
            block_size,
            blocks: blocks
                .into_iter()
                .map(|mut b| {
                    b.sort_unstable();
                    b.into_iter().map(|i| spec.element_at(i)).collect()
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks as element indices.
    pub fn index_blocks(&self, spec: &GroupSpec) -> Result<Vec<Vec<usize>>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|e| spec.index_of(e)).collect())
            .collect()
    }
}

/// First reason a candidate partition is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZspViolation {
    DeclaredSize {
        declared: usize,
        expected: usize,
    },
    WrongSize {
        block: usize,
        size: usize,
        expected: usize,
    },
    InvalidElement {
        block: usize,
        element: GroupElement,
    },
    Repeated {
        block: usize,
        element: GroupElement,
    },
    NonZeroSum {
        block: usize,
        sum: GroupElement,
    },
    Uncovered {
        element: GroupElement,
    },
}

impl fmt::Display for ZspViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZspViolation::DeclaredSize { declared, expected } => {
                write!(
                    f,
                    "partition declares block size {declared}, expected {expected}"
                )
            }
            ZspViolation::WrongSize {
                block,
                size,
                expected,
            } => write!(f, "block {block} has {size} elements, expected {expected}"),
            ZspViolation::InvalidElement { block, element } => {
                write!(
                    f,
                    "block {block} contains {element}, which is not a group element"
                )
            }
            ZspViolation::Repeated { block, element } => {
                write!(f, "block {block} repeats {element}")
            }
            ZspViolation::NonZeroSum { block, sum } => write!(f, "block {block} sums to {sum}"),
            ZspViolation::Uncovered { element } => write!(f, "{element} is not covered"),
        }
    }
}

/// Checks that `partition` splits the group into disjoint zero-sum blocks
/// of size `m`, reporting the first problem found.
pub fn verify_zsp(
    spec: &GroupSpec,
    partition: &ZeroSumPartition,
    m: usize,
) -> std::result::Result<(), ZspViolation> {
    if partition.block_size != m {
        return Err(ZspViolation::DeclaredSize {
            declared: partition.block_size,
            expected: m,
        });
    }
    let mut seen = vec![false; spec.order()];
    for (block, elems) in partition.blocks.iter().enumerate() {
        if elems.len() != m {
            return Err(ZspViolation::WrongSize {
                block,
                size: elems.len(),
                expected: m,
            });
        }
        let mut sum = 0;
        for e in elems {
            let i = spec.index_of(e).map_err(|_| ZspViolation::InvalidElement {
                block,
                element: e.clone(),
            })?;
            if seen[i] {
                return Err(ZspViolation::Repeated {
                    block,
                    element: e.clone(),
                });
            }
            seen[i] = true;
            sum = spec.add_idx(sum, i);
        }
        if sum != 0 {
            return Err(ZspViolation::NonZeroSum {
                block,
                sum: spec.element_at(sum),
            });
        }
    }
    if let Some(i) = seen.iter().position(|&s| !s) {
        return Err(ZspViolation::Uncovered {
            element: spec.element_at(i),
        });
    }
    Ok(())
}

fn certified(spec: &GroupSpec, m: usize, blocks: Vec<Vec<usize>>) -> Result<ZeroSumPartition> {
    let partition = ZeroSumPartition::from_indices(spec, m, blocks);
    verify_zsp(spec, &partition, m)
        .map_err(|v| Error::Internal(format!("{m}-partition of {spec}: {v}")))?;
    Ok(partition)
}

/// Splits the 2-torsion subgroup `{x : 2x = 0}` (of order `2^p`, `p >= 2`)
/// into `2^(p-2)` zero-sum quadruples by doubling: start from
/// `{0, e1, e2, e1+e2}` on the last two even factors, then for every
/// further even factor keep each block and add a copy shifted by its
/// involution.
pub fn involution_quadruples(spec: &GroupSpec) -> Result<ZeroSumPartition> {
    let blocks = quadruple_indices(spec)?;
    certified_subset(spec, blocks)
}

fn certified_subset(spec: &GroupSpec, blocks: Vec<Vec<usize>>) -> Result<ZeroSumPartition> {
    for b in &blocks {
        let s = b.iter().fold(0, |acc, &x| spec.add_idx(acc, x));
        if s != 0 {
            return Err(Error::Internal(format!(
                "quadruple of {spec} sums to {}",
                spec.element_at(s)
            )));
        }
    }
    Ok(ZeroSumPartition::from_indices(spec, 4, blocks))
}

fn quadruple_indices(spec: &GroupSpec) -> Result<Vec<Vec<usize>>> {
    let factors = spec.factors();
    let basis: Vec<usize> = factors
        .iter()
        .enumerate()
        .filter(|(_, &f)| f % 2 == 0)
        .map(|(k, &f)| {
            let mut c = vec![0; factors.len()];
            c[k] = f / 2;
            spec.encode(&c)
        })
        .collect();
    let p = basis.len();
    if p < 2 {
        return Err(Error::Unsupported(format!(
            "{spec} has {} involution(s); quadruples need at least three",
            spec.involution_count()
        )));
    }
    let (e1, e2) = (basis[p - 2], basis[p - 1]);
    let mut blocks = vec![vec![0, e2, e1, spec.add_idx(e1, e2)]];
    for &e in basis[..p - 2].iter().rev() {
        let shifted: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| b.iter().map(|&x| spec.add_idx(x, e)).collect())
            .collect();
        blocks.extend(shifted);
    }
    Ok(blocks)
}

fn require_class_g(spec: &GroupSpec) -> Result<()> {
    if spec.in_class_g() {
        Ok(())
    } else {
        Err(Error::Nonexistence(format!(
            "{spec} has exactly one involution {}, which is the sum of all elements, so no zero-sum partition exists",
            spec.sum_all()
        )))
    }
}

fn require_divides(spec: &GroupSpec, m: usize) -> Result<()> {
    if m == 0 || spec.order() % m != 0 {
        Err(Error::Divisibility {
            m,
            order: spec.order(),
        })
    } else {
        Ok(())
    }
}

/// Partition into zero-sum blocks of even size `m2 >= 4`, assembled from
/// the involution quadruples and the inverse pairs `{g, -g}` of the other
/// elements.
pub fn zsp_even(spec: &GroupSpec, m2: usize) -> Result<ZeroSumPartition> {
    if m2 % 2 != 0 || m2 < 4 {
        return Err(Error::Parameter(format!(
            "even block size must be an even number at least 4, got {m2}"
        )));
    }
    require_divides(spec, m2)?;
    require_class_g(spec)?;
    let mut quads = quadruple_indices(spec)?.into_iter();
    let n = spec.order();
    let mut pairs = (0..n)
        .filter(|&g| {
            let h = spec.neg_idx(g);
            g < h
        })
        .map(|g| [g, spec.neg_idx(g)]);
    let mut blocks = Vec::with_capacity(n / m2);
    // Blocks of size 2 mod 4 need at least one pair, so quadruples stop
    // while two slots remain.
    let reserve = if m2 % 4 == 0 { 0 } else { 2 };
    for _ in 0..n / m2 {
        let mut block = Vec::with_capacity(m2);
        while m2 - block.len() >= 4 + reserve {
            match quads.next() {
                Some(q) => block.extend(q),
                None => break,
            }
        }
        while block.len() < m2 {
            let pair = pairs
                .next()
                .ok_or_else(|| Error::Internal(format!("ran out of inverse pairs in {spec}")))?;
            block.extend(pair);
        }
        blocks.push(block);
    }
    if quads.next().is_some() || pairs.next().is_some() {
        return Err(Error::Internal(format!(
            "greedy assembly of {m2}-blocks left elements of {spec} unused"
        )));
    }
    certified(spec, m2, blocks)
}

/// Partition into zero-sum blocks of odd size `m >= 3`.
///
/// Odd-order groups use [`odd_order_blocks`]. Even-order groups split as
/// `Gamma0 x Lambda` with `Gamma0` the 2-part; every block `A` of an
/// `m`-partition of `Lambda` lifts to `|Gamma0|` blocks, one per `w` in
/// `Gamma0`:
/// `(phi(w), a1), (psi(w), a2), (gamma^-1(w), ah)` for `h >= 3`, where
/// `gamma(w) = (m - 2) w` is invertible on the 2-group `Gamma0`.
pub fn zsp_odd(spec: &GroupSpec, m: usize) -> Result<ZeroSumPartition> {
    if m % 2 == 0 || m < 3 {
        return Err(Error::Parameter(format!(
            "odd block size must be an odd number at least 3, got {m}"
        )));
    }
    require_divides(spec, m)?;
    require_class_g(spec)?;
    if spec.order() % 2 == 1 {
        let blocks = odd_order_blocks(spec, m)?;
        return certified(spec, m, blocks);
    }

    let canonical = spec.canonical();
    let twos = canonical
        .factors()
        .iter()
        .take_while(|&&f| f % 2 == 0)
        .count();
    let two_part = spec_of(&canonical.factors()[..twos]);
    let odd_part = spec_of(&canonical.factors()[twos..]);
    let tb = triple_bijection(&two_part)?;
    let base = odd_order_blocks(&odd_part, m)?;

    let n0 = two_part.order();
    let nl = odd_part.order();
    let mut gamma_inv = vec![0; n0];
    for w in 0..n0 {
        gamma_inv[two_part.scale_idx(m as i64 - 2, w)] = w;
    }
    let to_spec = spec.canonical_isomorphism();
    let lift = |w: usize, a: usize| to_spec[w * nl + a];
    let mut blocks = Vec::with_capacity(spec.order() / m);
    for w in 0..n0 {
        for a in &base {
            let mut block = Vec::with_capacity(m);
            block.push(lift(tb.phi[w], a[0]));
            block.push(lift(tb.psi[w], a[1]));
            for &ah in &a[2..] {
                block.push(lift(gamma_inv[w], ah));
            }
            blocks.push(block);
        }
    }
    certified(spec, m, blocks)
}

/// Odd-order `m`-partition, `m` odd: the identity's block is `{0}` plus
/// `(m-1)/2` inverse pairs; every other block is one zero-sum triple plus
/// `(m-3)/2` inverse pairs. Triples are chosen in mirror pairs `T`, `-T` so
/// that the leftover elements still split into inverse pairs.
pub fn odd_order_blocks(spec: &GroupSpec, m: usize) -> Result<Vec<Vec<usize>>> {
    let n = spec.order();
    if n % 2 == 0 || m % 2 == 0 || m == 0 || n % m != 0 {
        return Err(Error::Parameter(format!(
            "odd-order construction needs odd m dividing the odd order, got m = {m} for {spec}"
        )));
    }
    let t = n / m;
    let mut used = vec![false; n];
    used[0] = true;
    let mut triples = Vec::new();
    let mut nodes = 0;
    if !pick_mirror_triples(spec, (t - 1) / 2, &mut used, &mut triples, &mut nodes) {
        return exhaustive_blocks(spec, m)
            .ok_or_else(|| Error::Internal(format!("no {m}-partition found for {spec}")));
    }
    let mut pairs = (1..n)
        .filter(|&g| !used[g] && g < spec.neg_idx(g))
        .map(|g| [g, spec.neg_idx(g)]);
    let mut blocks = Vec::with_capacity(t);
    let mut first = vec![0];
    for _ in 0..(m - 1) / 2 {
        first.extend(pairs.next().expect("pair count matches block sizes"));
    }
    blocks.push(first);
    for tri in triples {
        let mut block = tri.to_vec();
        for _ in 0..(m - 3) / 2 {
            block.extend(pairs.next().expect("pair count matches block sizes"));
        }
        blocks.push(block);
    }
    Ok(blocks)
}

/// Chooses `need` disjoint triples `{a, b, -a-b}` of nonzero elements with
/// their negatives; the least free element is either used as an anchor or
/// set aside for the inverse pairs.
fn pick_mirror_triples(
    spec: &GroupSpec,
    need: usize,
    used: &mut [bool],
    out: &mut Vec<[usize; 3]>,
    nodes: &mut u64,
) -> bool {
    if need == 0 {
        return true;
    }
    *nodes += 1;
    if *nodes > TRIPLE_PICK_NODE_LIMIT {
        return false;
    }
    let n = spec.order();
    let Some(a) = (1..n).find(|&g| !used[g]) else {
        return false;
    };
    let na = spec.neg_idx(a);
    for b in a + 1..n {
        if used[b] || b == na {
            continue;
        }
        let c = spec.neg_idx(spec.add_idx(a, b));
        if c == a || c == b || used[c] {
            continue;
        }
        let (nb, nc) = (spec.neg_idx(b), spec.neg_idx(c));
        if used[nb] || used[nc] {
            continue;
        }
        let members = [a, b, c, na, nb, nc];
        for &x in &members {
            used[x] = true;
        }
        out.push([a, b, c]);
        out.push([na, nb, nc]);
        if pick_mirror_triples(spec, need - 1, used, out, nodes) {
            return true;
        }
        out.truncate(out.len() - 2);
        for &x in &members {
            used[x] = false;
        }
    }
    // Leave a and -a for the inverse pairs.
    used[a] = true;
    used[na] = true;
    let ok = pick_mirror_triples(spec, need, used, out, nodes);
    used[a] = false;
    used[na] = false;
    ok
}

/// Plain backtracking for an `m`-partition, used only if the triple
/// selection above fails.
fn exhaustive_blocks(spec: &GroupSpec, m: usize) -> Option<Vec<Vec<usize>>> {
    fn extend(
        spec: &GroupSpec,
        m: usize,
        used: &mut [bool],
        block: &mut Vec<usize>,
        sum: usize,
        blocks: &mut Vec<Vec<usize>>,
    ) -> bool {
        let n = spec.order();
        if block.is_empty() {
            let Some(anchor) = (0..n).find(|&g| !used[g]) else {
                return true;
            };
            used[anchor] = true;
            block.push(anchor);
            let ok = extend(spec, m, used, block, anchor, blocks);
            block.pop();
            used[anchor] = false;
            return ok;
        }
        if block.len() == m - 1 {
            let last = spec.neg_idx(sum);
            if last > *block.last().unwrap() && !used[last] {
                used[last] = true;
                block.push(last);
                blocks.push(block.clone());
                let mut next = Vec::with_capacity(m);
                if extend(spec, m, used, &mut next, 0, blocks) {
                    return true;
                }
                blocks.pop();
                block.pop();
                used[last] = false;
            }
            return false;
        }
        for x in *block.last().unwrap() + 1..n {
            if used[x] {
                continue;
            }
            used[x] = true;
            block.push(x);
            if extend(spec, m, used, block, spec.add_idx(sum, x), blocks) {
                return true;
            }
            block.pop();
            used[x] = false;
        }
        false
    }
    let mut used = vec![false; spec.order()];
    let mut blocks = Vec::new();
    if m == 1 {
        return (spec.order() == 1).then(|| vec![vec![0]]);
    }
    extend(spec, m, &mut used, &mut Vec::new(), 0, &mut blocks).then_some(blocks)
}

/// An `m`-zero-sum partition of `spec`, or the reason none exists.
pub fn zsp(spec: &GroupSpec, m: usize) -> Result<ZeroSumPartition> {
    if m == 0 {
        return Err(Error::Parameter("block size must be positive".into()));
    }
    require_divides(spec, m)?;
    if m == 1 {
        if spec.order() == 1 {
            return certified(spec, 1, vec![vec![0]]);
        }
        return Err(Error::Impossible(
            "a singleton block {g} sums to zero only for g = 0".into(),
        ));
    }
    if m == 2 {
        return Err(Error::Impossible(
            "the block containing the identity would need a second element equal to the identity"
                .into(),
        ));
    }
    if spec.order() % 2 == 1 {
        let blocks = odd_order_blocks(spec, m)?;
        return certified(spec, m, blocks);
    }
    require_class_g(spec)?;
    if m % 2 == 0 {
        zsp_even(spec, m)
    } else {
        zsp_odd(spec, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn el(v: &[usize]) -> GroupElement {
        GroupElement::new(v.to_vec())
    }

    #[test]
    fn quadruples_of_small_groups() {
        let g = spec("Z2xZ2");
        let q = involution_quadruples(&g).unwrap();
        assert_eq!(
            q.blocks,
            vec![vec![el(&[0, 0]), el(&[0, 1]), el(&[1, 0]), el(&[1, 1])]]
        );

        let g = spec("Z2xZ2xZ2");
        let q = involution_quadruples(&g).unwrap();
        assert_eq!(q.len(), 2);
        assert!(q.blocks[0].iter().all(|e| e.coords()[0] == 0));
        assert!(q.blocks[1].iter().all(|e| e.coords()[0] == 1));

        let g = spec("Z2xZ2xZ2xZ2");
        assert_eq!(involution_quadruples(&g).unwrap().len(), 4);

        let g = spec("Z4xZ6xZ3");
        let q = involution_quadruples(&g).unwrap();
        assert_eq!(q.blocks[0][1], el(&[0, 3, 0]));
    }

    #[test]
    fn quadruples_need_three_involutions() {
        assert!(matches!(
            involution_quadruples(&spec("Z8")),
            Err(Error::Unsupported(_))
        ));
        assert!(involution_quadruples(&spec("Z9")).is_err());
    }

    #[test]
    fn base_table_z2_z2_z2_entry() {
        let g = spec("Z2xZ2xZ2");
        let tb = triple_bijection_via(&g, TripleStrategy::BaseTable).unwrap();
        let i = g.index_of(&el(&[0, 0, 1])).unwrap();
        assert_eq!(g.element_at(tb.phi()[i]), el(&[1, 1, 1]));
        assert_eq!(g.element_at(tb.psi()[i]), el(&[1, 1, 0]));
    }

    #[test]
    fn odd_closed_form() {
        let g = spec("Z5");
        let tb = triple_bijection(&g).unwrap();
        assert_eq!(tb.phi()[1], 1);
        assert_eq!(tb.psi()[1], 3);
    }

    #[test]
    fn klein_four_found_by_search() {
        let g = spec("Z2xZ2");
        let tb = triple_bijection(&g).unwrap();
        assert!(verify_triple_bijection(&g, &tb).is_ok());
    }

    #[test]
    fn single_involution_has_no_triple_bijection() {
        for s in ["Z2", "Z4", "Z6", "Z12"] {
            assert!(triple_bijection(&spec(s)).unwrap_err().is_nonexistence());
        }
    }

    #[test]
    fn every_strategy_that_applies_verifies() {
        let cases: &[(&str, TripleStrategy)] = &[
            ("Z2xZ2xZ4", TripleStrategy::BaseTable),
            ("Z2xZ2xZ8", TripleStrategy::BaseTable),
            ("Z4xZ2xZ2", TripleStrategy::BaseTable),
            ("Z2xZ4xZ4", TripleStrategy::KleinQuotient),
            ("Z4xZ4xZ4", TripleStrategy::KleinQuotient),
            ("Z2xZ4xZ8", TripleStrategy::KleinQuotient),
            ("Z2xZ2xZ16", TripleStrategy::CyclicEightQuotient),
            ("Z2xZ2xZ32", TripleStrategy::CyclicEightQuotient),
            ("Z8xZ8", TripleStrategy::KleinQuotient),
            ("Z4xZ16", TripleStrategy::KleinQuotient),
            ("Z2xZ16", TripleStrategy::CyclicEightQuotient),
            ("Z2xZ64", TripleStrategy::CyclicEightQuotient),
            ("Z2xZ6", TripleStrategy::Product),
            ("Z2xZ2xZ2xZ2", TripleStrategy::Product),
            ("Z3xZ3", TripleStrategy::Product),
            ("Z2xZ6", TripleStrategy::Search),
            ("Z15", TripleStrategy::OddClosedForm),
        ];
        for &(s, strategy) in cases {
            let g = spec(s);
            let tb = triple_bijection_via(&g, strategy)
                .unwrap_or_else(|e| panic!("{s} via {strategy:?}: {e}"));
            assert_eq!(verify_triple_bijection(&g, &tb), Ok(()), "{s}");
        }
    }

    #[test]
    fn strategies_reject_groups_they_do_not_cover() {
        let g = spec("Z2xZ2xZ2");
        assert!(triple_bijection_via(&g, TripleStrategy::Product).is_err());
        assert!(triple_bijection_via(&g, TripleStrategy::KleinQuotient).is_err());
        assert!(triple_bijection_via(&spec("Z2xZ2xZ16"), TripleStrategy::BaseTable).is_err());
        assert!(triple_bijection_via(&spec("Z2xZ2"), TripleStrategy::OddClosedForm).is_err());
    }

    #[test]
    fn verifier_reports_bad_bijections() {
        let g = spec("Z3");
        let bad = TripleBijection::from_indices(vec![0, 1, 2], vec![0, 2, 1]);
        assert_eq!(
            verify_triple_bijection(&g, &bad),
            Err(BijectionViolation::NonZeroSum {
                element: el(&[1]),
                sum: el(&[1]),
            })
        );
        let bad = TripleBijection::from_indices(vec![0, 0, 2], vec![0, 1, 2]);
        assert!(matches!(
            verify_triple_bijection(&g, &bad),
            Err(BijectionViolation::NotPermutation { map: "phi", .. })
        ));
    }

    #[test]
    fn zsp_examples() {
        let g = spec("Z2xZ2");
        let p = zsp_even(&g, 4).unwrap();
        assert_eq!(p.len(), 1);

        let g = spec("Z2xZ2xZ3");
        let p = zsp_even(&g, 6).unwrap();
        assert_eq!(p.len(), 2);
        let p = zsp_odd(&g, 3).unwrap();
        assert_eq!(p.len(), 4);
        let p = zsp(&g, 4).unwrap();
        assert_eq!(p.len(), 3);

        let p = zsp(&spec("Z7"), 7).unwrap();
        assert_eq!(p.blocks, vec![spec("Z7").elements().collect::<Vec<_>>()]);

        let p = zsp_odd(&spec("Z9"), 3).unwrap();
        assert_eq!(verify_zsp(&spec("Z9"), &p, 3), Ok(()));
    }

    #[test]
    fn zsp_errors() {
        assert!(zsp_even(&spec("Z8"), 4).unwrap_err().is_nonexistence());
        assert!(zsp_odd(&spec("Z6"), 3).unwrap_err().is_nonexistence());
        assert!(matches!(zsp(&spec("Z4"), 2), Err(Error::Impossible(_))));
        assert!(matches!(
            zsp(&spec("Z9"), 2),
            Err(Error::Divisibility { .. })
        ));
        assert!(matches!(
            zsp(&spec("Z12"), 5),
            Err(Error::Divisibility { .. })
        ));
        assert!(matches!(
            zsp_even(&spec("Z2xZ2xZ3"), 3),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(zsp_odd(&spec("Z9"), 1), Err(Error::Parameter(_))));
        assert!(matches!(zsp(&spec("Z5"), 1), Err(Error::Impossible(_))));
        assert!(zsp(&spec("Z12"), 3).unwrap_err().is_nonexistence());
    }

    #[test]
    fn verify_zsp_examples() {
        let g = spec("Z9");
        let p = |blocks: &[&[usize]], m| ZeroSumPartition {
            block_size: m,
            blocks: blocks
                .iter()
                .map(|b| b.iter().map(|&x| el(&[x])).collect())
                .collect(),
        };
        assert_eq!(
            verify_zsp(&g, &p(&[&[0, 1, 8], &[2, 3, 4], &[5, 6, 7]], 3), 3),
            Ok(())
        );
        assert_eq!(
            verify_zsp(&g, &p(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8]], 3), 3),
            Err(ZspViolation::NonZeroSum {
                block: 0,
                sum: el(&[3])
            })
        );
        let z4 = spec("Z4");
        let p4 = ZeroSumPartition {
            block_size: 2,
            blocks: vec![vec![el(&[0]), el(&[1])], vec![el(&[2]), el(&[3])]],
        };
        assert_eq!(
            verify_zsp(&z4, &p4, 2),
            Err(ZspViolation::NonZeroSum {
                block: 0,
                sum: el(&[1])
            })
        );
        assert!(matches!(
            verify_zsp(&g, &p(&[&[0, 1, 8], &[1, 3, 5]], 3), 3),
            Err(ZspViolation::Repeated { block: 1, .. })
        ));
        assert!(matches!(
            verify_zsp(&g, &p(&[&[0, 1, 8]], 3), 3),
            Err(ZspViolation::Uncovered { .. })
        ));
        assert!(matches!(
            verify_zsp(&g, &p(&[&[0, 1, 8, 4]], 4), 3),
            Err(ZspViolation::DeclaredSize { .. })
        ));
    }

    #[test]
    fn odd_blocks_fallback_search_agrees() {
        let g = spec("Z3xZ9");
        let blocks = exhaustive_blocks(&g, 9).unwrap();
        let p = ZeroSumPartition::from_indices(&g, 9, blocks);
        assert_eq!(verify_zsp(&g, &p, 9), Ok(()));
        assert!(exhaustive_blocks(&spec("Z6"), 3).is_none());
    }
}
