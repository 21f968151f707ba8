//! Canonical forms: the lexicographically least encoding over all
//! relabelings of the carrier (and of the codomain, for morphism pairs).

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::structure::{Relabel, Structure};

pub const CANONICAL_MAX_N: usize = 8;

pub(crate) struct Perm {
    pub fwd: Vec<usize>,
    pub inv: Vec<usize>,
}

impl Perm {
    fn relabel(&self) -> Relabel<'_> {
        Relabel {
            fwd: &self.fwd,
            inv: &self.inv,
        }
    }
}

/// All permutations of `n` points in lexicographic order of `fwd`.
pub(crate) fn permutations(n: usize) -> &'static [Perm] {
    static CACHE: [OnceLock<Vec<Perm>>; CANONICAL_MAX_N + 1] =
        [const { OnceLock::new() }; CANONICAL_MAX_N + 1];
    CACHE[n].get_or_init(|| {
        let mut out = Vec::new();
        let mut fwd: Vec<usize> = (0..n).collect();
        loop {
            let mut inv = vec![0; n];
            for (x, &y) in fwd.iter().enumerate() {
                inv[y] = x;
            }
            out.push(Perm {
                fwd: fwd.clone(),
                inv,
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| fwd[i - 1] < fwd[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| fwd[j] > fwd[i - 1]).expect("pivot");
            fwd.swap(i - 1, j);
            fwd[i..].reverse();
        }
        out
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

fn check_cap(s: &Structure) -> Result<()> {
    let n = s.n().max(s.n_y().unwrap_or(0));
    if n > CANONICAL_MAX_N {
        return Err(Error::CapacityExceeded {
            what: "canonical form carrier",
            size: n,
            cap: CANONICAL_MAX_N,
        });
    }
    Ok(())
}

/// Least encoding and the relabeling pair attaining it.
fn minimum(s: &Structure) -> (Vec<u8>, &'static Perm, &'static Perm) {
    let px = permutations(s.n());
    let py = permutations(s.n_y().unwrap_or(0));
    let mut best: Option<(Vec<u8>, &Perm, &Perm)> = None;
    let mut buf = Vec::new();
    for a in px {
        for b in py {
            s.encode_into(&a.relabel(), &b.relabel(), &mut buf);
            if best.as_ref().is_none_or(|(enc, _, _)| buf < *enc) {
                best = Some((buf.clone(), a, b));
            }
        }
    }
    best.expect("at least the identity")
}

pub fn canonical_form(s: &Structure) -> Result<CanonicalForm> {
    check_cap(s)?;
    Ok(CanonicalForm(minimum(s).0))
}

/// The relabeling of `s` whose encoding is its canonical form.
pub fn canonical_representative(s: &Structure) -> Result<Structure> {
    check_cap(s)?;
    let (_, a, b) = minimum(s);
    Ok(s.permuted(&a.fwd, &b.fwd))
}

/// Relabelings `(px, py)` that leave the encoding unchanged.
pub fn automorphisms(s: &Structure) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    check_cap(s)?;
    let own = s.encode();
    let mut buf = Vec::new();
    let mut out = Vec::new();
    for a in permutations(s.n()) {
        for b in permutations(s.n_y().unwrap_or(0)) {
            s.encode_into(&a.relabel(), &b.relabel(), &mut buf);
            if buf == own {
                out.push((a.fwd.clone(), b.fwd.clone()));
            }
        }
    }
    Ok(out)
}

/// True if no relabeling has a smaller encoding.
pub fn is_canonical(s: &Structure) -> Result<bool> {
    check_cap(s)?;
    let px: Vec<&Perm> = permutations(s.n()).iter().collect();
    let py: Vec<&Perm> = permutations(s.n_y().unwrap_or(0)).iter().collect();
    Ok(is_least_under(s, &px, &py))
}

/// True if no relabeling drawn from `px × py` has a smaller encoding.
pub(crate) fn is_least_under(s: &Structure, px: &[&Perm], py: &[&Perm]) -> bool {
    let own = s.encode();
    let mut buf = Vec::new();
    px.iter().all(|a| {
        py.iter().all(|b| {
            s.encode_into(&a.relabel(), &b.relabel(), &mut buf);
            buf >= own
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::SubsetMask;
    use crate::topology::FiniteTopology;
    use std::sync::Arc;

    fn top(n: usize, opens: &[u16]) -> Structure {
        let opens: Vec<SubsetMask> = opens.iter().map(|&b| SubsetMask::from_bits(b)).collect();
        Structure::Topology(Arc::new(FiniteTopology::from_opens(n, &opens).unwrap()))
    }

    #[test]
    fn permutation_counts_and_order() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(4).len(), 24);
        let p = permutations(3);
        assert_eq!(p[1].fwd, vec![0, 2, 1]);
        assert!(p.windows(2).all(|w| w[0].fwd < w[1].fwd));
        for q in p {
            for x in 0..3 {
                assert_eq!(q.inv[q.fwd[x]], x);
            }
        }
    }

    #[test]
    fn sierpinski_relabelings_agree() {
        let a = top(2, &[0, 0b01, 0b11]);
        let b = top(2, &[0, 0b10, 0b11]);
        let d = top(2, &[0, 0b01, 0b10, 0b11]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&d).unwrap());
    }

    #[test]
    fn representative_is_fixed_point() {
        let a = top(3, &[0, 0b100, 0b110, 0b111]);
        let rep = canonical_representative(&a).unwrap();
        assert!(is_canonical(&rep).unwrap());
        assert_eq!(rep.encode(), canonical_form(&a).unwrap().bytes());
        assert_eq!(canonical_representative(&rep).unwrap(), rep);
    }

    #[test]
    fn automorphisms_of_discrete() {
        let d = top(3, &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(automorphisms(&d).unwrap().len(), 6);
    }
}
