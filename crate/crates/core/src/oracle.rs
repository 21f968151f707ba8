//! Slow brute-force oracles that share no code path with the fast ones.

use crate::error::{Error, Result};
use crate::mask::{all_subsets, SubsetMask};
use crate::semilattice::TopologizedSemilattice;
use crate::topology::FiniteTopology;

pub const RELATION_ORACLE_MAX_N: usize = 5;
pub const FAMILY_ORACLE_MAX_N: usize = 4;
pub const TABLE_ORACLE_MAX_N: usize = 3;

fn cap(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::CapacityExceeded {
            what,
            size: n,
            cap: max,
        });
    }
    Ok(())
}

/// Counts reflexive transitive relations on `n` points (antisymmetric ones
/// only, if asked) by testing every reflexive relation.
pub fn relation_count(n: usize, antisymmetric: bool) -> Result<u64> {
    cap("relation oracle carrier", n, RELATION_ORACLE_MAX_N)?;
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut count = 0u64;
    let mut rel = vec![[false; RELATION_ORACLE_MAX_N]; n];
    for code in 0u64..(1u64 << off.len()) {
        for (i, row) in rel.iter_mut().enumerate() {
            *row = [false; RELATION_ORACLE_MAX_N];
            row[i] = true;
        }
        for (b, &(i, j)) in off.iter().enumerate() {
            if code >> b & 1 == 1 {
                rel[i][j] = true;
            }
        }
        let transitive =
            (0..n).all(|i| (0..n).all(|j| !rel[i][j] || (0..n).all(|k| !rel[j][k] || rel[i][k])));
        let anti = !antisymmetric || off.iter().all(|&(i, j)| !(rel[i][j] && rel[j][i]));
        if transitive && anti {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts topologies on `n` points by testing every family of subsets
/// against the axioms directly.
pub fn family_filter_count(n: usize) -> Result<u64> {
    cap("family oracle carrier", n, FAMILY_ORACLE_MAX_N)?;
    let subsets = 1usize << n;
    let full = subsets - 1;
    let mut count = 0u64;
    for family in 0u64..(1u64 << subsets) {
        let has = |s: usize| family >> s & 1 == 1;
        if !has(0) || !has(full) {
            continue;
        }
        let closed = (0..subsets)
            .all(|a| !has(a) || (0..subsets).all(|b| !has(b) || (has(a | b) && has(a & b))));
        if closed {
            count += 1;
        }
    }
    Ok(count)
}

/// Counts semilattice tables on `n` points by testing all `n^(n²)` tables.
pub fn semilattice_table_count(n: usize) -> Result<u64> {
    cap("table oracle carrier", n, TABLE_ORACLE_MAX_N)?;
    let cells = n * n;
    let total = (n as u64).pow(cells as u32);
    let mut count = 0u64;
    let mut t = vec![0usize; cells];
    for mut code in 0..total.max(1) {
        if n == 0 {
            count += 1;
            break;
        }
        for c in t.iter_mut() {
            *c = (code % n as u64) as usize;
            code /= n as u64;
        }
        let op = |a: usize, b: usize| t[a * n + b];
        let ok = (0..n).all(|a| op(a, a) == a)
            && (0..n).all(|a| (0..n).all(|b| op(a, b) == op(b, a)))
            && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(a, op(b, c)))));
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// Topology generated by a subbasis, by literal closure: all finite
/// intersections first, then all unions.
pub fn generate_literal(n: usize, subbasis: &[SubsetMask]) -> Result<FiniteTopology> {
    let full = SubsetMask::full(n);
    let mut basis: Vec<SubsetMask> = vec![full];
    basis.extend_from_slice(subbasis);
    loop {
        let mut grown = basis.clone();
        for &a in &basis {
            for &b in &basis {
                let c = a.intersection(b);
                if !grown.contains(&c) {
                    grown.push(c);
                }
            }
        }
        if grown.len() == basis.len() {
            break;
        }
        basis = grown;
    }
    let opens: Vec<SubsetMask> = all_subsets(n)
        .filter(|&u| {
            let covered = basis
                .iter()
                .filter(|b| b.is_subset(u))
                .fold(SubsetMask::EMPTY, |acc, &b| acc.union(b));
            covered == u
        })
        .collect();
    FiniteTopology::from_opens(n, &opens)
}

/// The topology has a base of open subsemilattices: the family of all open
/// subsemilattices is tested for the base property at every point of every
/// open set.
pub fn lawson_literal(ts: &TopologizedSemilattice) -> bool {
    let t = ts.topology();
    let candidates: Vec<SubsetMask> = t
        .opens()
        .iter()
        .copied()
        .filter(|&u| ts.semilattice().is_subsemilattice(u))
        .collect();
    t.opens().iter().all(|&u| {
        u.iter()
            .all(|x| candidates.iter().any(|&b| b.contains(x) && b.is_subset(u)))
    })
}

/// Interior as the union of all open subsets.
pub fn interior_literal(t: &FiniteTopology, a: SubsetMask) -> SubsetMask {
    t.opens()
        .iter()
        .filter(|u| u.is_subset(a))
        .fold(SubsetMask::EMPTY, |acc, &u| acc.union(u))
}

/// Closure as the intersection of all closed supersets.
pub fn closure_literal(t: &FiniteTopology, a: SubsetMask) -> SubsetMask {
    t.closed_sets()
        .filter(|f| a.is_subset(*f))
        .fold(t.full(), |acc, f| acc.intersection(f))
}
