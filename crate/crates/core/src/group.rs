//! Finite Abelian groups presented as direct products of cyclic groups.
//!
//! A [`GroupSpec`] is an explicit list of cyclic factor orders, for example
//! `Z2xZ2xZ4`. Elements are residue vectors over that presentation and are
//! enumerated in mixed-radix order (last coordinate fastest), so element
//! `i` of the enumeration and its coordinate vector can be converted back and
//! forth with [`GroupSpec::element_at`] and [`GroupSpec::index_of`].
//!
//! Most of the crate works with element *indices* rather than coordinate
//! vectors; the `*_idx` methods are the index-level arithmetic.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest group order accepted by [`GroupSpec::new`].
pub const DEFAULT_ORDER_BOUND: usize = 1 << 20;

/// A group element as a residue vector, one coordinate per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<usize>,
}

impl GroupElement {
    pub fn new(coords: Vec<usize>) -> Self {
        GroupElement { coords }
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Parses `(a,b,c)`; a bare integer is accepted for cyclic groups.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = match s.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or_else(|| Error::SpecParse {
                token: s.to_string(),
                reason: "unbalanced parenthesis in element tuple".into(),
            })?,
            None => s,
        };
        if inner.trim().is_empty() {
            return Ok(GroupElement::new(Vec::new()));
        }
        let coords = inner
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::SpecParse {
                    token: t.to_string(),
                    reason: "expected a non-negative integer coordinate".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupElement::new(coords))
    }
}

/// A prime power `prime^exponent`, one component of the canonical decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub prime: usize,
    pub exponent: u32,
}

impl PrimePower {
    pub fn value(&self) -> usize {
        self.prime.pow(self.exponent)
    }
}

/// Factors `n` into prime powers, ascending by prime.
pub fn prime_powers(mut n: usize) -> Vec<PrimePower> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push(PrimePower {
                prime: p,
                exponent: e,
            });
        }
        p += 1;
    }
    if n > 1 {
        out.push(PrimePower {
            prime: n,
            exponent: 1,
        });
    }
    out
}

/// A finite Abelian group given by the orders of its cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<usize>,
    order: usize,
}

impl GroupSpec {
    /// Builds a presentation; every factor must be at least 2 and the order
    /// must not exceed [`DEFAULT_ORDER_BOUND`].
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        Self::with_bound(factors, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(factors: Vec<usize>, bound: usize) -> Result<Self> {
        let mut order: u128 = 1;
        for &f in &factors {
            if f < 2 {
                return Err(Error::InvalidFactor(f));
            }
            order = order.saturating_mul(f as u128);
        }
        if order > bound as u128 {
            return Err(Error::OrderTooLarge { order, bound });
        }
        Ok(GroupSpec {
            factors,
            order: order as usize,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The group with a single element (empty factor list).
    pub fn trivial() -> Self {
        GroupSpec {
            factors: Vec::new(),
            order: 1,
        }
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(vec![0; self.factors.len()])
    }

    /// Builds an element from signed coordinates, reducing each one.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        self.check_arity(coords.len())?;
        Ok(GroupElement::new(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &f)| c.rem_euclid(f as i64) as usize)
                .collect(),
        ))
    }

    fn check_arity(&self, found: usize) -> Result<()> {
        if found != self.factors.len() {
            return Err(Error::Arity {
                expected: self.factors.len(),
                found,
            });
        }
        Ok(())
    }

    /// Checks arity and that every coordinate is reduced.
    pub fn check(&self, e: &GroupElement) -> Result<()> {
        self.check_arity(e.arity())?;
        for (index, (&value, &modulus)) in e.coords.iter().zip(&self.factors).enumerate() {
            if value >= modulus {
                return Err(Error::CoordinateOutOfRange {
                    index,
                    value,
                    modulus,
                });
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(GroupElement::new(
            a.coords
                .iter()
                .zip(&b.coords)
                .zip(&self.factors)
                .map(|((&x, &y), &f)| (x + y) % f)
                .collect(),
        ))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement::new(
            a.coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &f)| (f - x) % f)
                .collect(),
        ))
    }

    /// `k·a`, with `k` possibly negative.
    pub fn scale(&self, k: i64, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement::new(
            a.coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &f)| {
                    let f = f as i128;
                    ((k as i128 * x as i128).rem_euclid(f)) as usize
                })
                .collect(),
        ))
    }

    /// The element at position `index` of the mixed-radix enumeration.
    ///
    /// Panics if `index >= order`.
    pub fn element_at(&self, index: usize) -> GroupElement {
        assert!(index < self.order, "element index {index} out of range");
        let mut coords = vec![0; self.factors.len()];
        let mut rest = index;
        for (c, &f) in coords.iter_mut().zip(&self.factors).rev() {
            *c = rest % f;
            rest /= f;
        }
        GroupElement::new(coords)
    }

    pub fn index_of(&self, e: &GroupElement) -> Result<usize> {
        self.check(e)?;
        Ok(e.coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, &f)| acc * f + c))
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for &f in self.factors.iter().rev() {
            out += ((a % f + b % f) % f) * place;
            place *= f;
            a /= f;
            b /= f;
        }
        out
    }

    pub fn neg_idx(&self, a: usize) -> usize {
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for &f in self.factors.iter().rev() {
            out += ((f - a % f) % f) * place;
            place *= f;
            a /= f;
        }
        out
    }

    pub fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn scale_idx(&self, k: i64, a: usize) -> usize {
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for &f in self.factors.iter().rev() {
            let d = (k as i128 * (a % f) as i128).rem_euclid(f as i128) as usize;
            out += d * place;
            place *= f;
            a /= f;
        }
        out
    }

    /// Index of the element with the given (already reduced) coordinates.
    pub(crate) fn encode(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, &f)| acc * f + c)
    }

    pub(crate) fn decode(&self, index: usize) -> Vec<usize> {
        self.element_at(index).coords
    }

    /// Prime-power components of every factor, sorted by prime then exponent.
    pub fn canonical_form(&self) -> Vec<PrimePower> {
        let mut out: Vec<PrimePower> = self.factors.iter().flat_map(|&f| prime_powers(f)).collect();
        out.sort();
        out
    }

    /// The canonical presentation: one cyclic factor per prime-power component.
    pub fn canonical(&self) -> GroupSpec {
        let factors: Vec<usize> = self
            .canonical_form()
            .iter()
            .map(PrimePower::value)
            .collect();
        GroupSpec {
            order: self.order,
            factors,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical().factors == self.factors
    }

    pub fn is_isomorphic(&self, other: &GroupSpec) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// Number of canonical components of even order (the 2-rank).
    pub fn two_rank(&self) -> usize {
        self.factors.iter().filter(|&&f| f % 2 == 0).count()
    }

    pub fn involution_count(&self) -> usize {
        (1usize << self.two_rank()) - 1
    }

    /// The elements of order exactly 2, in enumeration order.
    pub fn involutions(&self) -> InvolutionSet {
        let mut all = self.two_torsion_indices();
        all.retain(|&i| i != 0);
        InvolutionSet {
            elements: all.into_iter().map(|i| self.element_at(i)).collect(),
            includes_identity: false,
        }
    }

    /// Indices of `{x : 2x = 0}` in enumeration order, identity included.
    pub(crate) fn two_torsion_indices(&self) -> Vec<usize> {
        let mut out = vec![0usize];
        let mut place = 1;
        for &f in self.factors.iter().rev() {
            if f % 2 == 0 {
                let step = (f / 2) * place;
                let extra: Vec<usize> = out.iter().map(|&x| x + step).collect();
                out.extend(extra);
            }
            place *= f;
        }
        out.sort_unstable();
        out
    }

    /// Sum of all group elements: the unique involution if there is exactly
    /// one, the identity otherwise.
    pub fn sum_all(&self) -> GroupElement {
        if self.two_rank() == 1 {
            self.involutions().elements.remove(0)
        } else {
            self.identity()
        }
    }

    /// The same sum computed by folding over every element.
    pub fn sum_all_literal(&self) -> GroupElement {
        let s = (0..self.order).fold(0, |acc, i| self.add_idx(acc, i));
        self.element_at(s)
    }

    /// Odd order, or more than one involution.
    pub fn in_class_g(&self) -> bool {
        self.order % 2 == 1 || self.two_rank() >= 2
    }

    /// Subgroup generated by `generators`, as sorted element indices.
    pub fn subgroup_closure(&self, generators: &[GroupElement]) -> Result<Vec<usize>> {
        let gens = generators
            .iter()
            .map(|g| self.index_of(g))
            .collect::<Result<Vec<_>>>()?;
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.add_idx(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok((0..self.order).filter(|&i| member[i]).collect())
    }

    /// Coset decomposition over the subgroup generated by `generators`, with
    /// the enumeration-least element of each coset as its representative.
    pub fn quotient(&self, generators: &[GroupElement]) -> Result<CosetDecomposition> {
        let subgroup = self.subgroup_closure(generators)?;
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            for &h in &subgroup {
                coset_of[self.add_idx(x, h)] = id;
            }
            reps.push(x);
        }
        let quotient = self.quotient_structure(&reps, &coset_of);
        Ok(CosetDecomposition {
            spec: self.clone(),
            subgroup,
            representatives: reps,
            coset_of,
            quotient,
        })
    }

    /// Like [`GroupSpec::quotient`] but with caller-chosen representatives,
    /// listed in any order; the identity must represent the trivial coset.
    pub fn quotient_with_representatives(
        &self,
        generators: &[GroupElement],
        representatives: &[GroupElement],
    ) -> Result<CosetDecomposition> {
        let mut dec = self.quotient(generators)?;
        let reps = representatives
            .iter()
            .map(|r| self.index_of(r))
            .collect::<Result<Vec<_>>>()?;
        if reps.len() != dec.representatives.len() {
            return Err(Error::NotATransversal(format!(
                "{} representatives for {} cosets",
                reps.len(),
                dec.representatives.len()
            )));
        }
        let mut hit = vec![false; reps.len()];
        for &r in &reps {
            let c = dec.coset_of[r];
            if hit[c] {
                return Err(Error::NotATransversal(format!(
                    "{} lies in an already represented coset",
                    self.element_at(r)
                )));
            }
            hit[c] = true;
        }
        if dec.coset_of[reps[0]] != 0 || reps.iter().any(|&r| dec.coset_of[r] == 0 && r != 0) {
            return Err(Error::NotATransversal(
                "the trivial coset must be represented by the identity, listed first".into(),
            ));
        }
        // Renumber cosets so that coset i is represented by reps[i].
        let mut relabel = vec![0; reps.len()];
        for (i, &r) in reps.iter().enumerate() {
            relabel[dec.coset_of[r]] = i;
        }
        for c in dec.coset_of.iter_mut() {
            *c = relabel[*c];
        }
        dec.representatives = reps;
        Ok(dec)
    }

    /// Isomorphism type of the quotient by `subgroup`, read off from the
    /// number of cosets killed by each prime power.
    fn quotient_structure(&self, reps: &[usize], coset_of: &[usize]) -> GroupSpec {
        let size = reps.len();
        let mut components = Vec::new();
        for pp in prime_powers(size) {
            let p = pp.prime;
            // ranks[k] = log_p #{cosets x : p^k x in H}
            let mut ranks = vec![0u32];
            let mut k = 1;
            loop {
                let pk = p.pow(k) as i64;
                let killed = reps
                    .iter()
                    .filter(|&&r| coset_of[self.scale_idx(pk, r)] == 0)
                    .count();
                let mut e = 0;
                let mut c = killed;
                while c > 1 {
                    c /= p;
                    e += 1;
                }
                ranks.push(e);
                if e == pp.exponent {
                    break;
                }
                k += 1;
            }
            for k in 1..ranks.len() {
                let at_least_k = ranks[k] - ranks[k - 1];
                let at_least_next = if k + 1 < ranks.len() {
                    ranks[k + 1] - ranks[k]
                } else {
                    0
                };
                for _ in 0..(at_least_k - at_least_next) {
                    components.push(PrimePower {
                        prime: p,
                        exponent: k as u32,
                    });
                }
            }
        }
        components.sort();
        GroupSpec {
            factors: components.iter().map(PrimePower::value).collect(),
            order: size,
        }
    }

    /// Index map from the canonical presentation to this one:
    /// `map[i]` is the index here of canonical element `i`.
    pub fn canonical_isomorphism(&self) -> Vec<usize> {
        let mut parts: Vec<(PrimePower, usize)> = self
            .factors
            .iter()
            .enumerate()
            .flat_map(|(i, &f)| prime_powers(f).into_iter().map(move |pp| (pp, i)))
            .collect();
        parts.sort();
        let canonical = self.canonical();
        let mut map = vec![0; self.order];
        for x in 0..self.order {
            let coords = self.decode(x);
            let image: Vec<usize> = parts
                .iter()
                .map(|(pp, i)| coords[*i] % pp.value())
                .collect();
            map[canonical.encode(&image)] = x;
        }
        map
    }

    /// Every isomorphism class of Abelian groups of order `n`, in canonical
    /// presentation.
    pub fn all_of_order(n: usize) -> Vec<GroupSpec> {
        if n == 1 {
            return vec![GroupSpec::trivial()];
        }
        let mut classes: Vec<Vec<usize>> = vec![Vec::new()];
        for pp in prime_powers(n) {
            let mut next = Vec::new();
            for part in integer_partitions(pp.exponent) {
                let mut comps: Vec<usize> = part.iter().map(|&e| pp.prime.pow(e)).collect();
                comps.sort_unstable();
                for prefix in &classes {
                    let mut f = prefix.clone();
                    f.extend(&comps);
                    next.push(f);
                }
            }
            classes = next;
        }
        classes
            .into_iter()
            .map(|f| GroupSpec::new(f).expect("prime powers are valid factors"))
            .collect()
    }

    /// Every isomorphism class of order `2..=max_order`.
    pub fn all_up_to(max_order: usize) -> Vec<GroupSpec> {
        (2..=max_order).flat_map(GroupSpec::all_of_order).collect()
    }
}

fn integer_partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `Z<n>` tokens joined by `x`, case-insensitively; `1` is the
    /// trivial group.
    fn from_str(s: &str) -> Result<Self> {
        if s == "1" {
            return Ok(GroupSpec::trivial());
        }
        if s.is_empty() {
            return Err(Error::SpecParse {
                token: String::new(),
                reason: "empty group spec".into(),
            });
        }
        let lower = s.to_ascii_lowercase();
        let mut factors = Vec::new();
        for token in lower.split('x') {
            let digits = token.strip_prefix('z').ok_or_else(|| Error::SpecParse {
                token: token.to_string(),
                reason: "expected `Z<n>`".into(),
            })?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::SpecParse {
                    token: token.to_string(),
                    reason: "expected a decimal factor order after `Z`".into(),
                });
            }
            let n: usize = digits.parse().map_err(|_| Error::SpecParse {
                token: token.to_string(),
                reason: "factor order out of range".into(),
            })?;
            if n < 2 {
                return Err(Error::SpecParse {
                    token: token.to_string(),
                    reason: "factor order must be at least 2".into(),
                });
            }
            factors.push(n);
        }
        GroupSpec::new(factors)
    }
}

/// The involutions of a group, optionally together with the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionSet {
    pub elements: Vec<GroupElement>,
    pub includes_identity: bool,
}

impl InvolutionSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The 2-torsion subgroup `I = I* ∪ {identity}`, identity first.
    pub fn with_identity(mut self, spec: &GroupSpec) -> Self {
        if !self.includes_identity {
            self.elements.insert(0, spec.identity());
            self.includes_identity = true;
        }
        self
    }
}

/// Cosets of a subgroup, with one representative per coset.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    spec: GroupSpec,
    subgroup: Vec<usize>,
    representatives: Vec<usize>,
    coset_of: Vec<usize>,
    quotient: GroupSpec,
}

impl CosetDecomposition {
    pub fn subgroup(&self) -> Vec<GroupElement> {
        self.subgroup
            .iter()
            .map(|&i| self.spec.element_at(i))
            .collect()
    }

    pub fn representatives(&self) -> Vec<GroupElement> {
        self.representatives
            .iter()
            .map(|&i| self.spec.element_at(i))
            .collect()
    }

    /// Isomorphism type of the quotient, in canonical presentation.
    pub fn quotient_spec(&self) -> &GroupSpec {
        &self.quotient
    }

    pub fn subgroup_indices(&self) -> &[usize] {
        &self.subgroup
    }

    pub fn representative_indices(&self) -> &[usize] {
        &self.representatives
    }

    /// Coset number of an element index; coset `i` is represented by
    /// `representatives()[i]`.
    pub fn coset_of(&self, index: usize) -> usize {
        self.coset_of[index]
    }

    pub fn contains(&self, index: usize) -> bool {
        self.coset_of[index] == 0
    }
}
