use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::PolyMatrix;
use crate::arith::BiPoly;
use crate::error::{Error, Result};

/// Finds permutations `p, q` with `b[i][j] == a[p[i]][q[j]]`.
/// Identity permutations are tried first.
pub fn match_up_to_permutation(
    a: &PolyMatrix,
    b: &PolyMatrix,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let ha = hashes(a);
    let hb = hashes(b);
    let sig = |h: &Vec<Vec<u64>>, r: usize| {
        let mut s = h[r].clone();
        s.sort_unstable();
        s
    };
    let row_sig_a: Vec<Vec<u64>> = (0..a.rows()).map(|r| sig(&ha, r)).collect();
    let row_sig_b: Vec<Vec<u64>> = (0..b.rows()).map(|r| sig(&hb, r)).collect();

    let mut search = Search {
        a,
        b,
        ha,
        hb,
        row_sig_a,
        row_sig_b,
        perm: Vec::new(),
        used: vec![false; a.rows()],
    };
    let start_a = vec![0u64; a.cols()];
    let start_b = vec![0u64; b.cols()];
    Ok(search.extend(&start_a, &start_b))
}

fn hashes(m: &PolyMatrix) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(hash_of).collect())
        .collect()
}

fn hash_of(p: &BiPoly) -> u64 {
    let mut h = DefaultHasher::new();
    p.hash(&mut h);
    h.finish()
}

fn mix(acc: u64, v: u64) -> u64 {
    acc.rotate_left(17) ^ v.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

struct Search<'m> {
    a: &'m PolyMatrix,
    b: &'m PolyMatrix,
    ha: Vec<Vec<u64>>,
    hb: Vec<Vec<u64>>,
    row_sig_a: Vec<Vec<u64>>,
    row_sig_b: Vec<Vec<u64>>,
    perm: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// `cols_a[c]` and `cols_b[c]` hash the column prefixes fixed so far.
    fn extend(&mut self, cols_a: &[u64], cols_b: &[u64]) -> Option<(Vec<usize>, Vec<usize>)> {
        let k = self.perm.len();
        if k == self.b.rows() {
            return self.match_columns().map(|q| (self.perm.clone(), q));
        }
        let next_b: Vec<u64> = cols_b
            .iter()
            .zip(&self.hb[k])
            .map(|(&acc, &v)| mix(acc, v))
            .collect();
        let mut sorted_b = next_b.clone();
        sorted_b.sort_unstable();
        for r in 0..self.a.rows() {
            if self.used[r] || self.row_sig_a[r] != self.row_sig_b[k] {
                continue;
            }
            let next_a: Vec<u64> = cols_a
                .iter()
                .zip(&self.ha[r])
                .map(|(&acc, &v)| mix(acc, v))
                .collect();
            let mut sorted_a = next_a.clone();
            sorted_a.sort_unstable();
            if sorted_a != sorted_b {
                continue;
            }
            self.used[r] = true;
            self.perm.push(r);
            if let Some(found) = self.extend(&next_a, &next_b) {
                return Some(found);
            }
            self.perm.pop();
            self.used[r] = false;
        }
        None
    }

    fn match_columns(&self) -> Option<Vec<usize>> {
        let mut taken = vec![false; self.a.cols()];
        let mut q = Vec::with_capacity(self.b.cols());
        for j in 0..self.b.cols() {
            let c = (0..self.a.cols()).find(|&c| {
                !taken[c]
                    && self
                        .perm
                        .iter()
                        .enumerate()
                        .all(|(i, &r)| self.a.get(r, c) == self.b.get(i, j))
            })?;
            taken[c] = true;
            q.push(c);
        }
        Some(q)
    }
}
