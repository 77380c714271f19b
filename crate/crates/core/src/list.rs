//! List assignments: one duplicate-free ordered color set per vertex.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type Color = u64;
pub type Vertex = usize;

/// Map vertex -> finite ordered set of permissible colors.
///
/// Lists are kept sorted and duplicate-free; "choose any" steps are
/// lexicographic so that every filter is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<Color>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    /// Identical list {0, .., k-1} for every vertex: the hard case for
    /// choosability and the default test input.
    pub fn uniform(n: usize, k: usize) -> Self {
        let l: Vec<Color> = (0..k as Color).collect();
        ListAssignment {
            lists: vec![l; n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, v: Vertex) -> &[Color] {
        &self.lists[v]
    }

    pub fn set(&mut self, v: Vertex, mut colors: Vec<Color>) {
        colors.sort_unstable();
        colors.dedup();
        self.lists[v] = colors;
    }

    pub fn remove_colors(&mut self, v: Vertex, forbidden: &[Color]) {
        self.lists[v].retain(|c| !forbidden.contains(c));
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_color(&self) -> Option<Color> {
        self.lists.iter().filter_map(|l| l.last()).max().copied()
    }

    /// The lexicographically smallest `count` colors of L(v) \ forbidden.
    pub fn take(
        &self,
        v: Vertex,
        count: usize,
        forbidden: &[Color],
        stage: &str,
    ) -> Result<Vec<Color>> {
        let mut out = Vec::with_capacity(count);
        for &c in &self.lists[v] {
            if out.len() == count {
                break;
            }
            if !forbidden.contains(&c) {
                out.push(c);
            }
        }
        if out.len() < count {
            let available = self.lists[v]
                .iter()
                .filter(|c| !forbidden.contains(c))
                .count();
            return Err(Error::InsufficientColors {
                vertex: v,
                stage: stage.to_string(),
                required: count,
                available,
            });
        }
        Ok(out)
    }

    /// Truncate L(v) to its `count` smallest colors, erroring when short.
    pub fn truncate_to(&mut self, v: Vertex, count: usize, stage: &str) -> Result<()> {
        if self.lists[v].len() < count {
            return Err(Error::InsufficientColors {
                vertex: v,
                stage: stage.to_string(),
                required: count,
                available: self.lists[v].len(),
            });
        }
        self.lists[v].truncate(count);
        Ok(())
    }

    /// True when M(v) ⊆ L(v) for every vertex. Every filter stage must
    /// relate its output to its input this way.
    pub fn is_subset_of(&self, other: &ListAssignment) -> bool {
        self.lists.len() == other.lists.len()
            && self
                .lists
                .iter()
                .zip(&other.lists)
                .all(|(m, l)| m.iter().all(|c| l.binary_search(c).is_ok()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &[Color])> {
        self.lists.iter().enumerate().map(|(v, l)| (v, l.as_slice()))
    }
}

pub fn intersects(a: &[Color], b: &[Color]) -> bool {
    common_color(a, b).is_some()
}

/// First color present in both sorted lists.
pub fn common_color(a: &[Color], b: &[Color]) -> Option<Color> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

#[derive(Serialize, Deserialize)]
pub struct ListsJson {
    pub lists: BTreeMap<String, Vec<Color>>,
}

impl ListAssignment {
    pub fn to_json(&self) -> ListsJson {
        ListsJson {
            lists: self
                .lists
                .iter()
                .enumerate()
                .map(|(v, l)| (v.to_string(), l.clone()))
                .collect(),
        }
    }

    pub fn from_json(json: &ListsJson, n: usize) -> Result<Self> {
        let mut lists = vec![Vec::new(); n];
        for (k, colors) in &json.lists {
            let v: usize = k
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad vertex key {k:?}")))?;
            if v >= n {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} out of range 0..{n}"
                )));
            }
            lists[v] = colors.clone();
        }
        Ok(ListAssignment::new(lists))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn take_is_lexicographic() {
        let l = ListAssignment::new(vec![(1..=10).collect()]);
        assert_eq!(l.take(0, 3, &[2], "t").unwrap(), vec![1, 3, 4]);
        assert_eq!(l.take(0, 0, &[], "t").unwrap(), Vec::<Color>::new());
    }

    #[test]
    fn take_reports_shortage() {
        let l = ListAssignment::new(vec![vec![1, 2]]);
        match l.take(0, 3, &[], "stage-x").unwrap_err() {
            Error::InsufficientColors {
                vertex,
                required,
                available,
                stage,
            } => {
                assert_eq!((vertex, required, available), (0, 3, 2));
                assert_eq!(stage, "stage-x");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn subset_audit() {
        let l = ListAssignment::new(vec![vec![1, 2, 3], vec![4, 5]]);
        let m = ListAssignment::new(vec![vec![2], vec![4, 5]]);
        assert!(m.is_subset_of(&l));
        assert!(!l.is_subset_of(&m));
    }

    #[test]
    fn intersection_on_sorted_lists() {
        assert!(intersects(&[1, 3, 5], &[2, 3]));
        assert!(!intersects(&[1, 3, 5], &[2, 4, 6]));
        assert_eq!(common_color(&[1, 3, 5], &[5]), Some(5));
    }
}
