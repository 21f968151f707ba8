//! Labeled generators. Every list is sorted by the structure's encoding.

use std::sync::{Arc, OnceLock};

use crate::mask::{all_subsets, SubsetMask};
use crate::morphisms::{
    is_homomorphism, is_multimorphism, Multimorphism, SemilatticeHom, ValueMode,
};
use crate::order::FinitePoset;
use crate::semilattice::{Semilattice, TopologizedSemilattice};
use crate::topology::FiniteTopology;

/// Largest carrier the cached single-structure generators accept.
pub const GENERATOR_MAX_N: usize = 6;

type Rows = Vec<SubsetMask>;

/// Labeled preorders on `n` points as rows `above[x] = {y : x ⊑ y}`.
///
/// Point `k` is added to every preorder on `{0, .., k-1}` by choosing an
/// up-set `U` of points above it and a down-set `D` of points below it,
/// with every point of `D` below every point of `U`. With `antisymmetric`
/// the two sets must also be disjoint.
fn relations(n: usize, antisymmetric: bool) -> Vec<Rows> {
    let mut current: Vec<Rows> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for above in &current {
            let below: Rows = (0..k)
                .map(|y| {
                    (0..k)
                        .filter(|&x| above[x].contains(y))
                        .fold(SubsetMask::EMPTY, SubsetMask::with)
                })
                .collect();
            let ups: Vec<SubsetMask> = all_subsets(k)
                .filter(|u| u.iter().all(|x| above[x].is_subset(*u)))
                .collect();
            let downs: Vec<SubsetMask> = all_subsets(k)
                .filter(|d| d.iter().all(|x| below[x].is_subset(*d)))
                .collect();
            for &d in &downs {
                for &u in &ups {
                    if antisymmetric && d.intersects(u) {
                        continue;
                    }
                    if !d.iter().all(|x| u.is_subset(above[x])) {
                        continue;
                    }
                    let mut rows: Rows = above
                        .iter()
                        .enumerate()
                        .map(|(x, &r)| if d.contains(x) { r.with(k) } else { r })
                        .collect();
                    rows.push(u.with(k));
                    next.push(rows);
                }
            }
        }
        current = next;
    }
    current.sort_unstable();
    current
}

pub fn preorder_rows(n: usize) -> Vec<Rows> {
    relations(n, false)
}

pub fn poset_rows(n: usize) -> Vec<Rows> {
    relations(n, true)
}

macro_rules! cached {
    ($name:ident, $ty:ty, $build:expr) => {
        pub fn $name(n: usize) -> Arc<Vec<$ty>> {
            assert!(n <= GENERATOR_MAX_N, "generator cap is {GENERATOR_MAX_N}");
            static CACHE: [OnceLock<Arc<Vec<$ty>>>; GENERATOR_MAX_N + 1] =
                [const { OnceLock::new() }; GENERATOR_MAX_N + 1];
            CACHE[n].get_or_init(|| Arc::new($build(n))).clone()
        }
    };
}

cached!(topologies, Arc<FiniteTopology>, |n| {
    preorder_rows(n)
        .into_iter()
        .map(|rows| Arc::new(FiniteTopology::from_min_nbhds(n, rows)))
        .collect::<Vec<_>>()
});

cached!(posets, FinitePoset, |n| {
    poset_rows(n)
        .into_iter()
        .map(FinitePoset::from_up_sets_unchecked)
        .collect::<Vec<_>>()
});

cached!(semilattices, Semilattice, |n| {
    let mut out: Vec<Semilattice> = posets(n)
        .iter()
        .filter_map(Semilattice::from_poset)
        .collect();
    out.sort_unstable_by(|a, b| a.table_bytes().cmp(b.table_bytes()));
    out
});

/// All labeled topologized semilattices, semilattice-major.
pub fn topo_semilattices(n: usize) -> Vec<Arc<TopologizedSemilattice>> {
    let tops = topologies(n);
    semilattices(n)
        .iter()
        .flat_map(|sl| {
            tops.iter().map(move |t| {
                Arc::new(TopologizedSemilattice::new(sl.clone(), t.clone()).expect("same size"))
            })
        })
        .collect()
}

/// Every map `{0..n_x} → {0..n_y}` in lexicographic order.
pub(crate) fn all_maps(n_x: usize, n_y: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (n_y as u64).pow(n_x as u32);
    (0..total).map(move |mut code| {
        let mut map = vec![0; n_x];
        for slot in map.iter_mut().rev() {
            *slot = (code % n_y as u64) as usize;
            code /= n_y as u64;
        }
        map
    })
}

pub fn homomorphisms(sx: &Semilattice, sy: &Semilattice) -> Vec<SemilatticeHom> {
    if sy.n() == 0 {
        return if sx.n() == 0 {
            vec![SemilatticeHom::new(Vec::new(), 0).expect("empty map")]
        } else {
            Vec::new()
        };
    }
    all_maps(sx.n(), sy.n())
        .map(|m| SemilatticeHom::new(m, sy.n()).expect("in range"))
        .filter(|h| is_homomorphism(h, sx, sy))
        .collect()
}

/// Multimorphisms in lexicographic order of their value masks.
pub fn multimorphisms(sx: &Semilattice, sy: &Semilattice, mode: ValueMode) -> Vec<Multimorphism> {
    let values: Vec<SubsetMask> = all_subsets(sy.n())
        .filter(|v| mode == ValueMode::AllowEmpty || !v.is_empty())
        .collect();
    if values.is_empty() {
        return if sx.n() == 0 {
            vec![Multimorphism::new(Vec::new(), sy.n()).expect("empty map")]
        } else {
            Vec::new()
        };
    }
    all_maps(sx.n(), values.len())
        .map(|m| {
            Multimorphism::new(m.into_iter().map(|i| values[i]).collect(), sy.n())
                .expect("in range")
        })
        .filter(|phi| is_multimorphism(phi, sx, sy))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preorder_and_poset_counts() {
        let pre: Vec<usize> = (0..=5).map(|n| preorder_rows(n).len()).collect();
        assert_eq!(pre, vec![1, 1, 4, 29, 355, 6942]);
        let po: Vec<usize> = (0..=5).map(|n| poset_rows(n).len()).collect();
        assert_eq!(po, vec![1, 1, 3, 19, 219, 4231]);
    }

    #[test]
    fn semilattice_counts() {
        let counts: Vec<usize> = (0..=3).map(|n| semilattices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 9]);
    }

    #[test]
    fn lists_are_sorted_and_distinct() {
        let t = topologies(3);
        assert!(t.windows(2).all(|w| w[0].min_nbhds() < w[1].min_nbhds()));
        let s = semilattices(3);
        assert!(s
            .windows(2)
            .all(|w| w[0].table_bytes() < w[1].table_bytes()));
    }

    #[test]
    fn maps_in_lexicographic_order() {
        let maps: Vec<Vec<usize>> = all_maps(2, 2).collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn constant_idempotents_are_homomorphisms() {
        let sl = &semilattices(3)[0];
        let homs = homomorphisms(sl, sl);
        for e in 0..3 {
            assert!(homs.iter().any(|h| h.map() == [e, e, e]));
        }
        let all = multimorphisms(sl, sl, ValueMode::AllowEmpty);
        assert!(all
            .iter()
            .any(|phi| phi.values().iter().all(|v| v.is_empty())));
        assert!(multimorphisms(sl, sl, ValueMode::Nonempty)
            .iter()
            .all(Multimorphism::is_nonempty_valued));
    }
}
