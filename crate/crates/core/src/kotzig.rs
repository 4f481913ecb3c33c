//! Kotzig arrays: `j x k` grids whose rows are permutations and whose
//! columns all have the same sum, over a finite Abelian group or over the
//! integers `{0, .., k-1}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::zsp::triple_bijection;

/// Largest odd `k` for which the integer `3 x k` base block is searched.
pub const INT_BASE_MAX_K: usize = 99;

/// Rows are permutations of the group; columns share a common sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupKotzigArray {
    pub spec: GroupSpec,
    pub grid: Vec<Vec<GroupElement>>,
}

impl GroupKotzigArray {
    pub fn rows(&self) -> usize {
        self.grid.len()
    }

    pub fn cols(&self) -> usize {
        self.spec.order()
    }

    fn from_index_rows(spec: &GroupSpec, rows: Vec<Vec<usize>>) -> Self {
        GroupKotzigArray {
            spec: spec.clone(),
            grid: rows
                .into_iter()
                .map(|r| r.into_iter().map(|i| spec.element_at(i)).collect())
                .collect(),
        }
    }
}

/// Rows are permutations of `{0, .., k-1}`; columns share a common sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntKotzigArray {
    pub k: usize,
    pub grid: Vec<Vec<usize>>,
}

impl IntKotzigArray {
    pub fn rows(&self) -> usize {
        self.grid.len()
    }

    pub fn cols(&self) -> usize {
        self.k
    }
}

/// Either flavour, for callers that handle both (certificates, the CLI).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KotzigArray {
    Group(GroupKotzigArray),
    Int(IntKotzigArray),
}

/// First reason a grid is not a Kotzig array. Entries are rendered as text
/// so that both flavours share one type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KotzigViolation {
    NoRows,
    RowLength {
        row: usize,
        len: usize,
        expected: usize,
    },
    InvalidEntry {
        row: usize,
        col: usize,
        entry: String,
    },
    Repeated {
        row: usize,
        col: usize,
        entry: String,
    },
    ColumnSum {
        col: usize,
        sum: String,
        expected: String,
    },
}

impl fmt::Display for KotzigViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KotzigViolation::NoRows => write!(f, "array has no rows"),
            KotzigViolation::RowLength { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            KotzigViolation::InvalidEntry { row, col, entry } => {
                write!(f, "entry {entry} at ({row},{col}) is out of range")
            }
            KotzigViolation::Repeated { row, col, entry } => {
                write!(f, "row {row} repeats {entry} at column {col}")
            }
            KotzigViolation::ColumnSum { col, sum, expected } => {
                write!(f, "column {col} sums to {sum}, column 0 sums to {expected}")
            }
        }
    }
}

/// Checks a group array; on success returns the common column sum.
pub fn verify_group_kotzig(
    array: &GroupKotzigArray,
) -> std::result::Result<GroupElement, KotzigViolation> {
    let spec = &array.spec;
    let n = spec.order();
    let mut rows = Vec::with_capacity(array.grid.len());
    for (r, row) in array.grid.iter().enumerate() {
        if row.len() != n {
            return Err(KotzigViolation::RowLength {
                row: r,
                len: row.len(),
                expected: n,
            });
        }
        let idx = row
            .iter()
            .enumerate()
            .map(|(c, e)| {
                spec.index_of(e).map_err(|_| KotzigViolation::InvalidEntry {
                    row: r,
                    col: c,
                    entry: e.to_string(),
                })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        rows.push(idx);
    }
    let sum = check_rows(&rows, n, |a, b| spec.add_idx(a, b))
        .map_err(|v| v.render(|i| spec.element_at(i).to_string()))?;
    Ok(spec.element_at(sum))
}

/// Checks an integer array; on success returns the common column sum,
/// which is necessarily `j(k-1)/2`.
pub fn verify_int_kotzig(array: &IntKotzigArray) -> std::result::Result<usize, KotzigViolation> {
    for (r, row) in array.grid.iter().enumerate() {
        if row.len() != array.k {
            return Err(KotzigViolation::RowLength {
                row: r,
                len: row.len(),
                expected: array.k,
            });
        }
        if let Some(c) = row.iter().position(|&x| x >= array.k) {
            return Err(KotzigViolation::InvalidEntry {
                row: r,
                col: c,
                entry: row[c].to_string(),
            });
        }
    }
    check_rows(&array.grid, array.k, |a, b| a + b).map_err(|v| v.render(|i| i.to_string()))
}

pub fn verify_kotzig(array: &KotzigArray) -> std::result::Result<(), KotzigViolation> {
    match array {
        KotzigArray::Group(a) => verify_group_kotzig(a).map(|_| ()),
        KotzigArray::Int(a) => verify_int_kotzig(a).map(|_| ()),
    }
}

/// Violation over indices, rendered by the caller.
enum RawViolation {
    NoRows,
    Repeated {
        row: usize,
        col: usize,
        entry: usize,
    },
    ColumnSum {
        col: usize,
        sum: usize,
        expected: usize,
    },
}

impl RawViolation {
    fn render(self, show: impl Fn(usize) -> String) -> KotzigViolation {
        match self {
            RawViolation::NoRows => KotzigViolation::NoRows,
            RawViolation::Repeated { row, col, entry } => KotzigViolation::Repeated {
                row,
                col,
                entry: show(entry),
            },
            RawViolation::ColumnSum { col, sum, expected } => KotzigViolation::ColumnSum {
                col,
                sum: show(sum),
                expected: show(expected),
            },
        }
    }
}

/// Rows are already length-checked and in range.
fn check_rows(
    rows: &[Vec<usize>],
    n: usize,
    add: impl Fn(usize, usize) -> usize,
) -> std::result::Result<usize, RawViolation> {
    if rows.is_empty() {
        return Err(RawViolation::NoRows);
    }
    for (r, row) in rows.iter().enumerate() {
        let mut seen = vec![false; n];
        for (c, &x) in row.iter().enumerate() {
            if seen[x] {
                return Err(RawViolation::Repeated {
                    row: r,
                    col: c,
                    entry: x,
                });
            }
            seen[x] = true;
        }
    }
    let col_sum = |c: usize| rows[1..].iter().fold(rows[0][c], |s, row| add(s, row[c]));
    let expected = if n == 0 { 0 } else { col_sum(0) };
    for c in 1..n {
        let sum = col_sum(c);
        if sum != expected {
            return Err(RawViolation::ColumnSum {
                col: c,
                sum,
                expected,
            });
        }
    }
    Ok(expected)
}

fn certified_group(array: GroupKotzigArray) -> Result<GroupKotzigArray> {
    let mu = verify_group_kotzig(&array).map_err(|v| {
        Error::Internal(format!(
            "{}x{} array over {}: {v}",
            array.rows(),
            array.cols(),
            array.spec
        ))
    })?;
    if mu != array.spec.identity() {
        return Err(Error::Internal(format!(
            "array over {} has column sum {mu}",
            array.spec
        )));
    }
    Ok(array)
}

fn pair_rows(spec: &GroupSpec) -> [Vec<usize>; 2] {
    let n = spec.order();
    [(0..n).collect(), (0..n).map(|g| spec.neg_idx(g)).collect()]
}

/// Rows `g` and `-g` in enumeration order.
pub fn build_group_kotzig_2(spec: &GroupSpec) -> GroupKotzigArray {
    GroupKotzigArray::from_index_rows(spec, pair_rows(spec).to_vec())
}

/// Rows `g`, `phi(g)`, `psi(g)` from a triple bijection; the group must
/// be of odd order or have more than one involution.
pub fn build_group_kotzig_3(spec: &GroupSpec) -> Result<GroupKotzigArray> {
    certified_group(GroupKotzigArray::from_index_rows(spec, triple_rows(spec)?))
}

fn triple_rows(spec: &GroupSpec) -> Result<Vec<Vec<usize>>> {
    let tb = triple_bijection(spec)?;
    Ok(vec![
        (0..spec.order()).collect(),
        tb.phi().to_vec(),
        tb.psi().to_vec(),
    ])
}

/// A `j x |spec|` array with column sum zero: `j/2` stacked pairs for even
/// `j`, otherwise a triple block followed by `(j-3)/2` pairs.
pub fn build_group_kotzig(spec: &GroupSpec, j: usize) -> Result<GroupKotzigArray> {
    match j {
        0 => return Err(Error::Parameter("an array needs at least one row".into())),
        1 if spec.order() == 1 => {
            return Ok(GroupKotzigArray::from_index_rows(spec, vec![vec![0]]))
        }
        1 => {
            return Err(Error::Impossible(format!(
                "a single row is a permutation of {spec}, so its columns take {} distinct values",
                spec.order()
            )))
        }
        _ => {}
    }
    let mut rows = Vec::with_capacity(j);
    if j % 2 == 1 {
        if !spec.in_class_g() {
            return Err(Error::Nonexistence(format!(
                "{spec} has exactly one involution i; the whole array sums to j*i = i, \
                 but constant columns give k*mu = 0"
            )));
        }
        rows.extend(triple_rows(spec)?);
    }
    while rows.len() < j {
        rows.extend(pair_rows(spec));
    }
    certified_group(GroupKotzigArray::from_index_rows(spec, rows))
}

type IntBase = Arc<[Vec<usize>; 3]>;

fn int_base_cache() -> &'static Mutex<HashMap<usize, IntBase>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntBase>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A `j x k` integer Kotzig array; exists iff `j >= 2` and `j(k-1)` is even.
pub fn build_int_kotzig(j: usize, k: usize) -> Result<IntKotzigArray> {
    if k == 0 {
        return Err(Error::Parameter("k must be positive".into()));
    }
    match j {
        0 => return Err(Error::Parameter("an array needs at least one row".into())),
        1 if k == 1 => {
            return Ok(IntKotzigArray {
                k,
                grid: vec![vec![0]],
            })
        }
        1 => {
            return Err(Error::Impossible(format!(
                "a single row of {k} distinct values cannot have constant columns"
            )))
        }
        _ => {}
    }
    if j * (k - 1) % 2 == 1 {
        return Err(Error::Nonexistence(format!(
            "the column sum would be j(k-1)/2 = {j}*{}/2, which is not an integer",
            k - 1
        )));
    }
    let id: Vec<usize> = (0..k).collect();
    let rev: Vec<usize> = (0..k).rev().collect();
    let mut grid = Vec::with_capacity(j);
    if j % 2 == 1 {
        grid.extend(int_base(k)?.iter().cloned());
    }
    while grid.len() < j {
        grid.push(id.clone());
        grid.push(rev.clone());
    }
    let array = IntKotzigArray { k, grid };
    let sum = verify_int_kotzig(&array)
        .map_err(|v| Error::Internal(format!("{j}x{k} integer array: {v}")))?;
    debug_assert_eq!(sum, j * (k - 1) / 2);
    Ok(array)
}

/// `3 x k` base block for odd `k`, searched once and cached.
fn int_base(k: usize) -> Result<IntBase> {
    if k > INT_BASE_MAX_K {
        return Err(Error::Unsupported(format!(
            "odd row counts are built for k <= {INT_BASE_MAX_K}, got {k}"
        )));
    }
    if let Some(b) = int_base_cache().lock().expect("cache poisoned").get(&k) {
        return Ok(b.clone());
    }
    // Searched outside the lock; a racing thread computes the same block.
    let (second, third) =
        int_base_search(k).ok_or_else(|| Error::Internal(format!("no 3x{k} base block found")))?;
    let base: IntBase = Arc::new([(0..k).collect(), second, third]);
    let mut cache = int_base_cache().lock().expect("cache poisoned");
    Ok(cache.entry(k).or_insert(base).clone())
}

/// With the first row fixed to `0..k`, fills rows two and three so that
/// column `c` holds `(c, y, S - c - y)`, `S = 3(k-1)/2`. Columns go left
/// to right; candidates for `y` are tried cyclically from `c + (k-1)/2`,
/// an order under which the first branch already succeeds, so the search
/// stays linear-ish while remaining complete.
fn int_base_search(k: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    fn solve(
        c: usize,
        k: usize,
        s: usize,
        second: &mut Vec<usize>,
        used2: &mut [bool],
        used3: &mut [bool],
    ) -> bool {
        if c == k {
            return true;
        }
        let rest = s - c;
        for step in 0..k {
            let y = (c + k / 2 + step) % k;
            if used2[y] || y > rest || rest - y >= k || used3[rest - y] {
                continue;
            }
            used2[y] = true;
            used3[rest - y] = true;
            second.push(y);
            if solve(c + 1, k, s, second, used2, used3) {
                return true;
            }
            second.pop();
            used2[y] = false;
            used3[rest - y] = false;
        }
        false
    }

    let s = 3 * (k - 1) / 2;
    let mut second = Vec::with_capacity(k);
    if !solve(
        0,
        k,
        s,
        &mut second,
        &mut vec![false; k],
        &mut vec![false; k],
    ) {
        return None;
    }
    let third = (0..k).map(|c| s - c - second[c]).collect();
    Some((second, third))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn idx_rows(a: &GroupKotzigArray) -> Vec<Vec<usize>> {
        a.grid
            .iter()
            .map(|r| r.iter().map(|e| a.spec.index_of(e).unwrap()).collect())
            .collect()
    }

    #[test]
    fn pairs_of_small_groups() {
        let a = build_group_kotzig_2(&spec("Z3"));
        assert_eq!(idx_rows(&a), vec![vec![0, 1, 2], vec![0, 2, 1]]);
        assert_eq!(verify_group_kotzig(&a), Ok(spec("Z3").identity()));

        let a = build_group_kotzig_2(&spec("Z4"));
        assert_eq!(idx_rows(&a), vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]]);

        let a = build_group_kotzig_2(&spec("Z2xZ2"));
        assert_eq!(a.grid[0], a.grid[1]);
        assert!(verify_group_kotzig(&a).is_ok());
    }

    #[test]
    fn triple_rows_sum_to_zero() {
        for s in ["Z5", "Z2xZ2xZ2", "Z3xZ3", "Z2xZ2xZ3"] {
            let a = build_group_kotzig_3(&spec(s)).unwrap();
            assert_eq!(a.rows(), 3);
            assert_eq!(verify_group_kotzig(&a), Ok(a.spec.identity()));
        }
        let a = build_group_kotzig_3(&spec("Z5")).unwrap();
        assert_eq!(idx_rows(&a)[2], vec![0, 3, 1, 4, 2]);
        assert!(build_group_kotzig_3(&spec("Z6"))
            .unwrap_err()
            .is_nonexistence());
    }

    #[test]
    fn glued_arrays() {
        let a = build_group_kotzig(&spec("Z4"), 4).unwrap();
        assert_eq!((a.rows(), a.cols()), (4, 4));
        let a = build_group_kotzig(&spec("Z2xZ2xZ3"), 5).unwrap();
        assert_eq!((a.rows(), a.cols()), (5, 12));
        assert!(build_group_kotzig(&spec("Z4"), 3)
            .unwrap_err()
            .is_nonexistence());
        assert!(matches!(
            build_group_kotzig(&spec("Z3"), 1),
            Err(Error::Impossible(_))
        ));
        assert_eq!(
            build_group_kotzig(&GroupSpec::trivial(), 1).unwrap().rows(),
            1
        );
    }

    #[test]
    fn verifier_reports_first_violation() {
        let g = spec("Z3");
        let row: Vec<GroupElement> = g.elements().collect();
        let bad = GroupKotzigArray {
            spec: g.clone(),
            grid: vec![row.clone(), row.clone()],
        };
        assert_eq!(
            verify_group_kotzig(&bad),
            Err(KotzigViolation::ColumnSum {
                col: 1,
                sum: "(2)".into(),
                expected: "(0)".into()
            })
        );
        let mut rep = row.clone();
        rep[2] = rep[1].clone();
        let bad = GroupKotzigArray {
            spec: g,
            grid: vec![row, rep],
        };
        assert!(matches!(
            verify_group_kotzig(&bad),
            Err(KotzigViolation::Repeated { row: 1, col: 2, .. })
        ));
        let bad = IntKotzigArray {
            k: 3,
            grid: vec![vec![0, 1, 3]],
        };
        assert!(matches!(
            verify_int_kotzig(&bad),
            Err(KotzigViolation::InvalidEntry { row: 0, col: 2, .. })
        ));
    }

    #[test]
    fn integer_arrays() {
        let a = build_int_kotzig(2, 4).unwrap();
        assert_eq!(a.grid, vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]]);
        assert_eq!(verify_int_kotzig(&a), Ok(3));
        let a = build_int_kotzig(3, 3).unwrap();
        assert_eq!(verify_int_kotzig(&a), Ok(3));
        assert!(build_int_kotzig(3, 4).unwrap_err().is_nonexistence());
        assert!(matches!(build_int_kotzig(1, 4), Err(Error::Impossible(_))));
        for k in (1..=INT_BASE_MAX_K).step_by(2) {
            for j in [3, 5] {
                let a = build_int_kotzig(j, k).unwrap();
                assert_eq!(verify_int_kotzig(&a), Ok(j * (k - 1) / 2));
            }
        }
        assert!(matches!(
            build_int_kotzig(3, 101),
            Err(Error::Unsupported(_))
        ));
    }
}
