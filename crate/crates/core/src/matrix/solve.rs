use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{mat_det, PolyMatrix};
use crate::arith::{q, q_frac, BiPoly, Context, Monomial, Q};
use crate::error::{Error, Result};

const MAX_UNKNOWNS: usize = 200_000;

/// The unique `Psi` with `Phi * Psi = F * I`, searched among matrices whose
/// entries have total degree at most `degree_bound`. Also checks
/// `Psi * Phi = F * I`.
pub fn solve_psi(ctx: &Context, phi: &PolyMatrix, degree_bound: u32) -> Result<PolyMatrix> {
    if !phi.is_square() {
        return Err(Error::NotSquare {
            rows: phi.rows(),
            cols: phi.cols(),
        });
    }
    let d = phi.rows();
    let monos: Vec<Monomial> = (0..=degree_bound)
        .flat_map(|deg| (0..=deg).rev().map(move |i| Monomial::new(i, deg - i)))
        .collect();
    if d.saturating_mul(monos.len()) > MAX_UNKNOWNS {
        return Err(Error::TooLarge(format!(
            "{} unknowns per column",
            d * monos.len()
        )));
    }
    if !is_nonsingular(phi)? {
        return Err(Error::Singular);
    }

    let mut psi = PolyMatrix::zeros(d, d);
    for j in 0..d {
        let column = solve_column(ctx, phi, j, &monos, degree_bound)?;
        for (i, p) in column.into_iter().enumerate() {
            psi.set(i, j, p);
        }
    }

    let f_id = PolyMatrix::scalar(d, ctx.f());
    if phi.mul(&psi)? != f_id || psi.mul(phi)? != f_id {
        return Err(Error::Verification(
            "solved partner does not satisfy both product identities".into(),
        ));
    }
    Ok(psi)
}

/// Exact test; cheap evaluations settle almost every case before the
/// symbolic determinant is needed.
fn is_nonsingular(phi: &PolyMatrix) -> Result<bool> {
    let points = [
        (q_frac(7, 3), q_frac(-5, 11)),
        (q(13), q(17)),
        (q_frac(-19, 23), q_frac(29, 31)),
    ];
    for (x, y) in &points {
        if !phi.eval(x, y).det()?.is_zero() {
            return Ok(true);
        }
    }
    Ok(!mat_det(phi)?.is_zero())
}

fn solve_column(
    ctx: &Context,
    phi: &PolyMatrix,
    j: usize,
    monos: &[Monomial],
    degree_bound: u32,
) -> Result<Vec<BiPoly>> {
    let d = phi.rows();
    let nm = monos.len();
    let mut sys = SparseSystem::default();
    let mut key_to_eq: HashMap<(usize, Monomial), usize> = HashMap::new();
    for r in 0..d {
        for i in 0..d {
            let a = phi.get(r, i);
            for (tm, tc) in a.terms() {
                for (k, m) in monos.iter().enumerate() {
                    let key = (r, Monomial::new(tm.x + m.x, tm.y + m.y));
                    let e = *key_to_eq.entry(key).or_insert_with(|| sys.push_empty());
                    sys.add(e, i * nm + k, tc);
                }
            }
        }
    }
    for (fm, fc) in ctx.f().terms() {
        match key_to_eq.get(&(j, fm)) {
            Some(&e) => sys.rhs[e] = fc.clone(),
            None => return Err(Error::NoPolynomialSolution(degree_bound)),
        }
    }
    let values = sys.solve().map_err(|fail| match fail {
        SolveFailure::Inconsistent => Error::NoPolynomialSolution(degree_bound),
        SolveFailure::Underdetermined => Error::Singular,
    })?;
    let mut column = vec![BiPoly::zero(); d];
    for (var, val) in values {
        let (i, k) = (var / nm, var % nm);
        let m = monos[k];
        column[i] = &column[i] + &BiPoly::monomial(val, m.x, m.y);
    }
    Ok(column)
}

enum SolveFailure {
    Inconsistent,
    Underdetermined,
}

/// Sparse linear system over Q. Only the connected components that touch a
/// nonzero right-hand side are solved; every other unknown is zero.
#[derive(Default)]
struct SparseSystem {
    rows: Vec<BTreeMap<usize, Q>>,
    rhs: Vec<Q>,
}

impl SparseSystem {
    fn push_empty(&mut self) -> usize {
        self.rows.push(BTreeMap::new());
        self.rhs.push(Q::zero());
        self.rows.len() - 1
    }

    fn add(&mut self, eq: usize, var: usize, c: &Q) {
        let row = &mut self.rows[eq];
        let v = row.entry(var).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            row.remove(&var);
        }
    }

    fn solve(self) -> std::result::Result<Vec<(usize, Q)>, SolveFailure> {
        let mut uf = UnionFind::default();
        for row in &self.rows {
            let mut vars = row.keys();
            if let Some(&first) = vars.next() {
                uf.touch(first);
                for &v in vars {
                    uf.union(first, v);
                }
            }
        }
        let mut active = std::collections::HashSet::new();
        for (row, rhs) in self.rows.iter().zip(&self.rhs) {
            if rhs.is_zero() {
                continue;
            }
            match row.keys().next() {
                Some(&v) => {
                    active.insert(uf.find(v));
                }
                None => return Err(SolveFailure::Inconsistent),
            }
        }

        let mut pivots: Vec<(usize, BTreeMap<usize, Q>, Q)> = Vec::new();
        let mut pivot_of: HashMap<usize, usize> = HashMap::new();
        let mut active_vars = std::collections::BTreeSet::new();
        for (mut row, mut rhs) in self.rows.into_iter().zip(self.rhs) {
            let Some(&v0) = row.keys().next() else {
                continue;
            };
            if !active.contains(&uf.find(v0)) {
                continue;
            }
            active_vars.extend(row.keys().copied());
            let hits: Vec<(usize, Q)> = row
                .iter()
                .filter(|(v, _)| pivot_of.contains_key(v))
                .map(|(v, c)| (pivot_of[v], c.clone()))
                .collect();
            for (p, c) in hits {
                let (_, prow, prhs) = &pivots[p];
                for (v, pc) in prow {
                    let e = row.entry(*v).or_insert_with(Q::zero);
                    *e -= &c * pc;
                    if e.is_zero() {
                        row.remove(v);
                    }
                }
                rhs -= &c * prhs;
            }
            let Some((&pv, pc)) = row.iter().next() else {
                if rhs.is_zero() {
                    continue;
                }
                return Err(SolveFailure::Inconsistent);
            };
            let inv = Q::one() / pc;
            for c in row.values_mut() {
                *c *= &inv;
            }
            rhs *= &inv;
            for (_, prow, prhs) in pivots.iter_mut() {
                if let Some(c) = prow.get(&pv).cloned() {
                    for (v, rc) in &row {
                        let e = prow.entry(*v).or_insert_with(Q::zero);
                        *e -= &c * rc;
                        if e.is_zero() {
                            prow.remove(v);
                        }
                    }
                    *prhs -= &c * &rhs;
                }
            }
            pivot_of.insert(pv, pivots.len());
            pivots.push((pv, row, rhs));
        }

        if active_vars.len() != pivots.len() || pivots.iter().any(|(_, r, _)| r.len() != 1) {
            return Err(SolveFailure::Underdetermined);
        }
        Ok(pivots
            .into_iter()
            .filter(|(_, _, rhs)| !rhs.is_zero())
            .map(|(v, _, rhs)| (v, rhs))
            .collect())
    }
}

#[derive(Default)]
struct UnionFind {
    parent: HashMap<usize, usize>,
}

impl UnionFind {
    fn touch(&mut self, v: usize) {
        self.parent.entry(v).or_insert(v);
    }

    fn find(&mut self, v: usize) -> usize {
        self.touch(v);
        let mut root = v;
        while self.parent[&root] != root {
            root = self.parent[&root];
        }
        let mut cur = v;
        while cur != root {
            let next = self.parent[&cur];
            self.parent.insert(cur, root);
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent.insert(ra.max(rb), ra.min(rb));
        }
    }
}
