//! Degree sequences and the two laying-off operations.
//!
//! Indices passed to and returned from this module are 1-based positions in
//! the sequence, matching vertex labels `v_1..v_n`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Nonincreasing list of nonnegative integers.
///
/// Only monotonicity is enforced here. `d_1 <= n - 1` is a graphicality
/// condition and is checked by the operations that need it.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if let Some(pos) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonincreasing(pos + 2));
        }
        Ok(Self(values))
    }

    /// Sorts into nonincreasing order. The flag reports whether the input
    /// had to be reordered.
    pub fn from_unsorted(mut values: Vec<usize>) -> (Self, bool) {
        let reordered = values.windows(2).any(|w| w[0] < w[1]);
        values.sort_unstable_by(|a, b| b.cmp(a));
        (Self(values), reordered)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Outcome of laying off `d_i` with order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayoffResult {
    /// Remaining `n - 1` entries, re-indexed consecutively.
    pub reduced: DegreeSequence,
    /// Original indices that were decremented (`S ∪ T`), sorted.
    pub affected: Vec<usize>,
    pub removed_index: usize,
    /// Smallest value among the `d_i` largest other entries; `None` when
    /// `d_i = 0`.
    pub threshold: Option<usize>,
}

fn check_layoff(values: &[usize], i: usize) -> Result<usize> {
    let n = values.len();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    let d = values[i - 1];
    if d > n - 1 {
        return Err(Error::LayoffTooLarge {
            degree: d,
            available: n - 1,
        });
    }
    Ok(d)
}

/// Kleitman–Wang: remove `d_i` and subtract one from the `d_i` remaining
/// entries with the lowest indices. The output need not be monotone.
pub fn lay_off(seq: &DegreeSequence, i: usize) -> Result<Vec<usize>> {
    lay_off_slice(seq.values(), i)
}

pub(crate) fn lay_off_slice(values: &[usize], i: usize) -> Result<Vec<usize>> {
    let d = check_layoff(values, i)?;
    let mut out = Vec::with_capacity(values.len() - 1);
    let mut remaining = d;
    for (j, &x) in values.iter().enumerate() {
        if j + 1 == i {
            continue;
        }
        if remaining > 0 {
            if x == 0 {
                return Err(Error::LayoffNegative(j + 1));
            }
            out.push(x - 1);
            remaining -= 1;
        } else {
            out.push(x);
        }
    }
    Ok(out)
}

/// Hartke–Seacrest: remove `d_i`, then with `s` the smallest of the `d_i`
/// largest other entries, decrement every other entry above `s` (the set
/// `S`) and the `d_i - |S|` largest indices holding exactly `s` (the set
/// `T`). The output stays nonincreasing.
pub fn lay_off_with_order(seq: &DegreeSequence, i: usize) -> Result<LayoffResult> {
    lay_off_with_order_slice(seq.values(), i)
}

pub(crate) fn lay_off_with_order_slice(values: &[usize], i: usize) -> Result<LayoffResult> {
    let d = check_layoff(values, i)?;
    let others: Vec<usize> = (1..=values.len()).filter(|&j| j != i).collect();
    if d == 0 {
        let reduced = others.iter().map(|&j| values[j - 1]).collect();
        return Ok(LayoffResult {
            reduced: DegreeSequence::new(reduced)?,
            affected: Vec::new(),
            removed_index: i,
            threshold: None,
        });
    }
    // `others` is in index order and the input is nonincreasing, so the
    // d largest other entries are the first d of them.
    let s = values[others[d - 1] - 1];
    let mut affected: Vec<usize> = others
        .iter()
        .copied()
        .filter(|&j| values[j - 1] > s)
        .collect();
    let need = d - affected.len();
    let ties: Vec<usize> = others
        .iter()
        .copied()
        .filter(|&j| values[j - 1] == s)
        .collect();
    affected.extend_from_slice(&ties[ties.len() - need..]);
    if s == 0 && need > 0 {
        return Err(Error::LayoffNegative(ties[ties.len() - need]));
    }
    let mut reduced: Vec<usize> = Vec::with_capacity(others.len());
    let mut hit = affected.iter().peekable();
    for &j in &others {
        let mut x = values[j - 1];
        if hit.peek() == Some(&&j) {
            hit.next();
            x -= 1;
        }
        reduced.push(x);
    }
    let reduced = DegreeSequence::new(reduced).map_err(|_| {
        Error::InvariantBreach(format!(
            "laying off position {i} with order from {values:?} lost monotonicity"
        ))
    })?;
    Ok(LayoffResult {
        reduced,
        affected,
        removed_index: i,
        threshold: Some(s),
    })
}

/// Graphicality by repeatedly laying off the first entry with order.
/// The empty sequence and all-zero sequences are graphic.
pub fn is_graphic(seq: &DegreeSequence) -> bool {
    let mut current = seq.values().to_vec();
    loop {
        match current.first() {
            None | Some(0) => return true,
            Some(_) => match lay_off_with_order_slice(&current, 1) {
                Ok(r) => current = r.reduced.into_vec(),
                Err(_) => return false,
            },
        }
    }
}
