//! Bitableaux: fillings that weakly increase along rows and columns, with
//! weak letters at most once per column and strict letters at most once per
//! row.

use super::multiset::Letters;
use crate::combinat::Partition;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Bitableau {
    pub rows: Vec<Vec<i64>>,
}

impl Bitableau {
    pub fn new() -> Self {
        Bitableau { rows: Vec::new() }
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn content(&self) -> BTreeMap<i64, usize> {
        let mut c = BTreeMap::new();
        for row in &self.rows {
            for &v in row {
                *c.entry(v).or_insert(0) += 1;
            }
        }
        c
    }

    pub fn transpose(&self) -> Bitableau {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for row in &self.rows {
            for (c, &v) in row.iter().enumerate() {
                if rows.len() <= c {
                    rows.push(Vec::new());
                }
                rows[c].push(v);
            }
        }
        Bitableau { rows }
    }

    /// Validity with respect to a weak set: rows and columns weakly
    /// increase; weak letters at most once per column, strict letters at
    /// most once per row.
    pub fn is_valid(&self, w: &Letters) -> bool {
        // shape is a partition
        if !self
            .rows
            .windows(2)
            .all(|ab| ab[0].len() >= ab[1].len())
        {
            return false;
        }
        for row in &self.rows {
            if !row.windows(2).all(|ab| ab[0] <= ab[1]) {
                return false;
            }
            // strict letters at most once per row
            let mut seen = alloc::collections::BTreeSet::new();
            for &v in row {
                if !w.contains(&v) && !seen.insert(v) {
                    return false;
                }
            }
        }
        let width = self.rows.first().map_or(0, |r| r.len());
        for c in 0..width {
            let col: Vec<i64> = self
                .rows
                .iter()
                .filter(|r| r.len() > c)
                .map(|r| r[c])
                .collect();
            if !col.windows(2).all(|ab| ab[0] <= ab[1]) {
                return false;
            }
            let mut seen = alloc::collections::BTreeSet::new();
            for &v in &col {
                if w.contains(&v) && !seen.insert(v) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validity_rules() {
        let w: Letters = [1].into_iter().collect();
        // weak letter may repeat along a row but not a column
        let t = Bitableau {
            rows: alloc::vec![alloc::vec![1, 1]],
        };
        assert!(t.is_valid(&w));
        let t = Bitableau {
            rows: alloc::vec![alloc::vec![1], alloc::vec![1]],
        };
        assert!(!t.is_valid(&w));
        // strict letter: the other way around
        let w2: Letters = Letters::new();
        let t = Bitableau {
            rows: alloc::vec![alloc::vec![1, 1]],
        };
        assert!(!t.is_valid(&w2));
        let t = Bitableau {
            rows: alloc::vec![alloc::vec![1], alloc::vec![1]],
        };
        assert!(t.is_valid(&w2));
    }
}
