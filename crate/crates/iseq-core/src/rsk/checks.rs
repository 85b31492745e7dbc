//! Exhaustive certification of the correspondence: bijectivity, content,
//! shape/Greene, transpose equivariance, and the symmetric fixed-point
//! statistic.

use super::bitableau::Bitableau;
use super::knuth::{knuth_correspondence, knuth_inverse};
use super::multiset::{greene_cols, greene_rows, lis_general, Letters, WeightedMultiset};
use crate::opuc::Check;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

/// All compatible multisets over [1..k] x [1..k] with total multiplicity at
/// most `max_total` (compatibility depends on the sector assignment, so the
/// bound used here is per-cell multiplicity <= max_total with the total
/// capped; the compatibility filter happens at use sites).
pub fn all_multisets(k: i64, max_total: usize) -> Vec<WeightedMultiset> {
    let cells: Vec<(i64, i64)> = (1..=k)
        .flat_map(|i| (1..=k).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    fn rec(
        cells: &[(i64, i64)],
        idx: usize,
        remaining: usize,
        cur: &mut WeightedMultiset,
        out: &mut Vec<WeightedMultiset>,
    ) {
        if idx == cells.len() {
            out.push(cur.clone());
            return;
        }
        for mult in 0..=remaining {
            let mut next = cur.clone();
            next.add(cells[idx].0, cells[idx].1, mult);
            rec(cells, idx + 1, remaining - mult, &mut next, out);
        }
    }
    rec(&cells, 0, max_total, &mut WeightedMultiset::new(), &mut out);
    out
}

fn multiset_contents(m: &WeightedMultiset) -> (BTreeMap<i64, usize>, BTreeMap<i64, usize>) {
    let mut first = BTreeMap::new();
    let mut second = BTreeMap::new();
    for (&(i, j), &k) in m.entries() {
        *first.entry(i).or_insert(0) += k;
        *second.entry(j).or_insert(0) += k;
    }
    (first, second)
}

fn check_one(
    m: &WeightedMultiset,
    w1: &Letters,
    w2: &Letters,
    all: &Letters,
) -> Result<(Bitableau, Bitableau), alloc::string::String> {
    let (p, q) = knuth_correspondence(m, w1, w2);
    if !p.is_valid(w1) {
        return Err(format!("P invalid for {:?}", m));
    }
    if !q.is_valid(w2) {
        return Err(format!("Q invalid for {:?}", m));
    }
    if p.shape() != q.shape() {
        return Err(format!("shape mismatch for {:?}", m));
    }
    // content
    let (cf, cs) = multiset_contents(m);
    if p.content() != cf || q.content() != cs {
        return Err(format!("content mismatch for {:?}", m));
    }
    // round trip
    let back = knuth_inverse(&p, &q, w1, w2);
    if &back != m {
        return Err(format!("round trip failed for {:?}", m));
    }
    // Greene: partial row sums and partial column sums
    let shape = p.shape();
    let conj = shape.conjugate();
    let kmax = shape.len().max(shape.part(0));
    for k in 1..=kmax {
        let rows: usize = (0..k).map(|i| shape.part(i)).sum();
        if rows != greene_rows(m, w1, w2, k, all, all) {
            return Err(format!("Greene rows k={} for {:?}", k, m));
        }
        let cols: usize = (0..k).map(|i| conj.part(i)).sum();
        if cols != greene_cols(m, w1, w2, k) {
            return Err(format!("Greene cols k={} for {:?}", k, m));
        }
    }
    if shape.part(0) != lis_general(m, w1, w2) {
        return Err(format!("first row is not the lis for {:?}", m));
    }
    Ok((p, q))
}

/// The full exhaustive suite over [1..k]^2, all sector assignments, total
/// multiplicity <= max_total.
pub fn exhaustive_suite(k: i64, max_total: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let all: Letters = (1..=k).collect();
    let multisets = all_multisets(k, max_total);
    let subsets: Vec<Letters> = {
        let items: Vec<i64> = (1..=k).collect();
        (0..(1usize << items.len()))
            .map(|mask| {
                items
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask & (1 << b) != 0)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect()
    };
    let mut cases = 0usize;
    let mut transpose_cases = 0usize;
    let mut fixed_cases = 0usize;
    for w1 in &subsets {
        for w2 in &subsets {
            for m in &multisets {
                if !m.is_compatible(w1, w2) {
                    continue;
                }
                let (p, q) = match check_one(m, w1, w2, &all) {
                    Ok(pq) => pq,
                    Err(e) => {
                        checks.push(Check::new(e, false));
                        return checks;
                    }
                };
                cases += 1;
                // transpose equivariance
                let mt = m.transpose();
                if mt.is_compatible(w2, w1) {
                    let (pt, qt) = knuth_correspondence(&mt, w2, w1);
                    if pt != q || qt != p {
                        checks.push(Check::new(format!("transpose failed for {:?}", m), false));
                        return checks;
                    }
                    transpose_cases += 1;
                }
                // symmetric case: equal tableaux and the odd-column count
                if w1 == w2 && m.is_symmetric() {
                    if p != q {
                        checks.push(Check::new(format!("P != Q for symmetric {:?}", m), false));
                        return checks;
                    }
                    let odd_cols = p.shape().conjugate().odd_parts();
                    let expected: usize = (1..=k)
                        .map(|x| {
                            let mult = m.mult(x, x);
                            if w1.contains(&x) {
                                mult
                            } else {
                                mult % 2
                            }
                        })
                        .sum();
                    if odd_cols != expected {
                        checks.push(Check::new(
                            format!("fixed-point statistic failed for {:?}", m),
                            false,
                        ));
                        return checks;
                    }
                    fixed_cases += 1;
                }
            }
        }
    }
    checks.push(Check::new(
        format!(
            "bijectivity/content/Greene on {} cases, transpose on {}, fixed points on {}",
            cases, transpose_cases, fixed_cases
        ),
        true,
    ));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opuc::all_pass;

    #[test]
    fn exhaustive_two_letters() {
        let checks = exhaustive_suite(2, 4);
        assert!(all_pass(&checks), "{:?}", checks);
    }

    #[test]
    fn spot_three_letters() {
        // a smaller-budget run over the three-letter alphabet; the full
        // acceptance suite runs total multiplicity 5
        let checks = exhaustive_suite(3, 3);
        assert!(all_pass(&checks), "{:?}", checks);
    }
}
