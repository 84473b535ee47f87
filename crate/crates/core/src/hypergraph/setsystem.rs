use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::util::{from_mask, to_mask};

use super::canon::{self, CanonConfig, CanonicalKey};

/// A family of nonempty subsets of `[s]`, each of size at most `r_cap`.
///
/// Members are stored as bitmasks (vertex `i` is bit `i - 1`), which makes
/// ascending numeric order coincide with colex order. Ground sets are limited
/// to 64 elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    s: usize,
    r_cap: usize,
    edges: Vec<u64>,
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetSystem")
            .field("s", &self.s)
            .field("r_cap", &self.r_cap)
            .field("edges", &self.members())
            .finish()
    }
}

impl serde::Serialize for SetSystem {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("SetSystem", 3)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("r", &self.r_cap)?;
        st.serialize_field("members", &self.members())?;
        st.end()
    }
}

impl SetSystem {
    pub fn new<I, E>(s: usize, r_cap: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        if s > 64 {
            return Err(Error::TooLarge(format!("ground set of size {s} exceeds 64")));
        }
        let mut masks = Vec::new();
        for e in edges {
            let e = e.as_ref();
            if let Some(&v) = e.iter().find(|&&v| v == 0 || v as usize > s) {
                return Err(Error::VertexOutOfRange { vertex: v, n: s });
            }
            let m = to_mask(e);
            if m.count_ones() as usize != e.len() {
                return Err(Error::InvalidEdge { edge: e.to_vec(), reason: "repeated element".into() });
            }
            masks.push(m);
        }
        Self::from_masks(s, r_cap, masks)
    }

    pub fn from_masks(s: usize, r_cap: usize, mut masks: Vec<u64>) -> Result<Self> {
        if s > 64 {
            return Err(Error::TooLarge(format!("ground set of size {s} exceeds 64")));
        }
        let ground = if s == 64 { u64::MAX } else { (1u64 << s) - 1 };
        for &m in &masks {
            if m == 0 {
                return Err(Error::InvalidEdge { edge: vec![], reason: "empty member".into() });
            }
            if m & !ground != 0 {
                return Err(Error::VertexOutOfRange { vertex: 64 - m.leading_zeros(), n: s });
            }
            if m.count_ones() as usize > r_cap {
                return Err(Error::InvalidEdge { edge: from_mask(m), reason: format!("more than {r_cap} elements") });
            }
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Self { s, r_cap, edges: masks })
    }

    pub fn empty(s: usize, r_cap: usize) -> Self {
        Self { s, r_cap, edges: Vec::new() }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn r_cap(&self) -> usize {
        self.r_cap
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Member bitmasks in colex order.
    pub fn masks(&self) -> &[u64] {
        &self.edges
    }

    /// Members as ascending vertex lists, colex order.
    pub fn members(&self) -> Vec<Vec<u32>> {
        self.edges.iter().map(|&m| from_mask(m)).collect()
    }

    pub fn contains(&self, set: &[u32]) -> bool {
        self.contains_mask(to_mask(set))
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.edges.binary_search(&mask).is_ok()
    }

    pub fn ground_mask(&self) -> u64 {
        if self.s == 64 {
            u64::MAX
        } else {
            (1u64 << self.s) - 1
        }
    }

    pub fn is_intersecting(&self) -> bool {
        let e = &self.edges;
        (0..e.len()).all(|i| e[i..].iter().all(|&b| e[i] & b != 0))
    }

    /// Every pair of members shares at least `t` elements.
    pub fn is_t_intersecting(&self, t: u32) -> bool {
        let e = &self.edges;
        (0..e.len()).all(|i| e[i + 1..].iter().all(|&b| (e[i] & b).count_ones() >= t))
    }

    /// Smallest element common to all members; the empty system is
    /// vacuously principal at 1.
    pub fn common_vertex(&self) -> Option<u32> {
        if self.edges.is_empty() {
            return Some(1);
        }
        let common = self.edges.iter().fold(u64::MAX, |acc, &m| acc & m);
        (common != 0).then(|| common.trailing_zeros() + 1)
    }

    /// Principal in the ground-set convention: `1` lies in every member.
    pub fn is_principal_at_one(&self) -> bool {
        self.edges.iter().all(|&m| m & 1 != 0)
    }

    /// Union of all members.
    pub fn support_mask(&self) -> u64 {
        self.edges.iter().fold(0, |acc, &m| acc | m)
    }

    /// The same members viewed over a different ground set size.
    pub fn with_ground(&self, s: usize) -> Result<SetSystem> {
        SetSystem::from_masks(s, self.r_cap, self.edges.clone())
    }

    pub fn with_r_cap(&self, r_cap: usize) -> Result<SetSystem> {
        SetSystem::from_masks(self.s, r_cap, self.edges.clone())
    }

    /// Applies `perm[i - 1] = image of i`.
    pub fn relabel(&self, perm: &[u32]) -> Result<SetSystem> {
        if perm.len() != self.s {
            return Err(Error::DimensionMismatch { expected: self.s, got: perm.len() });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p == 0 || p as usize > self.s || seen & (1 << (p - 1)) != 0 {
                return Err(invalid("relabeling is not a permutation of [s]"));
            }
            seen |= 1 << (p - 1);
        }
        let masks = self
            .edges
            .iter()
            .map(|&m| {
                let mut out = 0u64;
                let mut rest = m;
                while rest != 0 {
                    let b = rest.trailing_zeros() as usize;
                    out |= 1 << (perm[b] - 1);
                    rest &= rest - 1;
                }
                out
            })
            .collect();
        SetSystem::from_masks(self.s, self.r_cap, masks)
    }

    pub fn canonical_key(&self) -> Result<CanonicalKey> {
        self.canonical_key_with(&CanonConfig::default())
    }

    pub fn canonical_key_with(&self, cfg: &CanonConfig) -> Result<CanonicalKey> {
        canon::canonical_key(self.s, &self.edges, cfg)
    }

    pub fn is_isomorphic(&self, other: &SetSystem) -> Result<bool> {
        Ok(self.canonical_key()? == other.canonical_key()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_validates() {
        let g = SetSystem::new(4, 3, [vec![2, 3], vec![1], vec![3, 2]]).unwrap();
        assert_eq!(g.members(), vec![vec![1], vec![2, 3]]);
        assert!(SetSystem::new(3, 2, [vec![1, 2, 3]]).is_err());
        assert!(SetSystem::new(3, 2, [vec![4]]).is_err());
        assert!(SetSystem::from_masks(3, 2, vec![0]).is_err());
    }

    #[test]
    fn predicates() {
        let tri = SetSystem::new(3, 2, [[1, 2], [1, 3], [2, 3]]).unwrap();
        assert!(tri.is_intersecting());
        assert_eq!(tri.common_vertex(), None);
        assert!(!tri.is_principal_at_one());
        let st = SetSystem::new(4, 3, [vec![1], vec![1, 4]]).unwrap();
        assert_eq!(st.common_vertex(), Some(1));
        assert!(st.is_principal_at_one());
        let st2 = SetSystem::new(4, 3, [vec![2, 3], vec![2, 4]]).unwrap();
        assert_eq!(st2.common_vertex(), Some(2));
        assert!(!st2.is_principal_at_one());
        assert!(!SetSystem::new(2, 1, [[1], [2]]).unwrap().is_intersecting());
        assert!(SetSystem::empty(3, 2).is_intersecting());
        assert!(SetSystem::new(5, 3, [[1, 2, 3], [1, 2, 4], [2, 3, 4]]).unwrap().is_t_intersecting(2));
    }

    #[test]
    fn relabel_round_trip() {
        let g = SetSystem::new(4, 3, [vec![1, 2], vec![2, 3, 4]]).unwrap();
        let h = g.relabel(&[4, 3, 2, 1]).unwrap();
        assert_eq!(h.members(), vec![vec![1, 2, 3], vec![3, 4]]);
        assert_eq!(h.relabel(&[4, 3, 2, 1]).unwrap(), g);
    }
}
