use crate::error::{invalid, Result};
use crate::hypergraph::SetSystem;

/// The shift `R_ij`: every member containing `j` but not `i` is moved to
/// `e - j + i`, unless that set is already a member.
pub fn compress(g: &SetSystem, i: u32, j: u32) -> Result<SetSystem> {
    if !(1 <= i && i < j && j as usize <= g.s()) {
        return Err(invalid(format!("compression needs 1 <= i < j <= s, got i = {i}, j = {j}, s = {}", g.s())));
    }
    let (bi, bj) = (1u64 << (i - 1), 1u64 << (j - 1));
    let masks = g
        .masks()
        .iter()
        .map(|&e| {
            if e & bj != 0 && e & bi == 0 {
                let moved = (e & !bj) | bi;
                if !g.contains_mask(moved) {
                    return moved;
                }
            }
            e
        })
        .collect();
    SetSystem::from_masks(g.s(), g.r_cap(), masks)
}

/// Closed under every shift `j -> i` with `i < j`.
pub fn is_left_compressed(g: &SetSystem) -> bool {
    g.masks().iter().all(|&e| {
        let outside = !e & g.ground_mask();
        let mut inside = e;
        while inside != 0 {
            let j = inside.trailing_zeros();
            inside &= inside - 1;
            // every i < j not in e
            let mut below = outside & ((1u64 << j) - 1);
            while below != 0 {
                let i = below.trailing_zeros();
                below &= below - 1;
                if !g.contains_mask((e & !(1 << j)) | (1 << i)) {
                    return false;
                }
            }
        }
        true
    })
}

/// Applies all shifts repeatedly until none changes the system.
pub fn compress_to_fixpoint(g: &SetSystem) -> SetSystem {
    let mut cur = g.clone();
    loop {
        let mut changed = false;
        for j in 2..=cur.s() as u32 {
            for i in 1..j {
                let next = compress(&cur, i, j).expect("valid shift");
                if next != cur {
                    cur = next;
                    changed = true;
                }
            }
        }
        if !changed {
            return cur;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moves_when_target_is_free() {
        let g = SetSystem::new(3, 2, [[2, 3]]).unwrap();
        assert_eq!(compress(&g, 1, 2).unwrap().members(), vec![vec![1, 3]]);
    }

    #[test]
    fn blocked_when_target_present() {
        let g = SetSystem::new(3, 2, [[1, 3], [2, 3]]).unwrap();
        assert_eq!(compress(&g, 1, 2).unwrap(), g);
    }

    #[test]
    fn rejects_bad_indices() {
        let g = SetSystem::new(3, 2, [[1, 3]]).unwrap();
        assert!(compress(&g, 2, 2).is_err());
        assert!(compress(&g, 3, 1).is_err());
        assert!(compress(&g, 1, 4).is_err());
    }

    #[test]
    fn left_compressed_examples() {
        let all_pairs = SetSystem::new(4, 2, crate::util::k_subsets(4, 2)).unwrap();
        assert!(is_left_compressed(&all_pairs));
        assert!(!is_left_compressed(&SetSystem::new(2, 1, [[2]]).unwrap()));
        assert!(is_left_compressed(&SetSystem::new(2, 1, [[1]]).unwrap()));
    }

    #[test]
    fn fixpoint_is_left_compressed() {
        let g = SetSystem::new(5, 3, [vec![2, 4], vec![4, 5], vec![2, 5], vec![3, 4, 5]]).unwrap();
        let c = compress_to_fixpoint(&g);
        assert!(is_left_compressed(&c));
        assert_eq!(c.len(), g.len());
        assert!(c.is_intersecting());
    }
}
