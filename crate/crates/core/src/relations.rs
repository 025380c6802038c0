//! From an Ext block matrix to a presentation of the module by generators
//! and relations, then to a minimal relation matrix by eliminating every
//! generator that occurs with a unit coefficient.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{BiPoly, Context, Q};
use crate::error::{Error, Result};
use crate::families::ExtBlockMatrix;
use crate::matrix::PolyMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Species {
    U,
    V,
}

/// `u` generators come from rows (stripes 3, 4, 34), `v` generators from
/// columns (stripes 1, 2, 12). `index` is 0-based within the stripe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub species: Species,
    pub stripe: u8,
    pub index: usize,
}

const U_STRIPES: [u8; 3] = [3, 4, 34];
const V_STRIPES: [u8; 3] = [1, 2, 12];

impl Generator {
    pub fn u(stripe: u8, index: usize) -> Self {
        debug_assert!(U_STRIPES.contains(&stripe));
        Generator {
            species: Species::U,
            stripe,
            index,
        }
    }

    pub fn v(stripe: u8, index: usize) -> Self {
        debug_assert!(V_STRIPES.contains(&stripe));
        Generator {
            species: Species::V,
            stripe,
            index,
        }
    }

    fn stripe_rank(&self) -> usize {
        let list = match self.species {
            Species::U => &U_STRIPES,
            Species::V => &V_STRIPES,
        };
        list.iter().position(|&s| s == self.stripe).unwrap_or(3)
    }

    fn key(&self) -> (u8, usize, usize) {
        let sp = match self.species {
            Species::U => 0,
            Species::V => 1,
        };
        (sp, self.stripe_rank(), self.index)
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.species {
            Species::U => 'u',
            Species::V => 'v',
        };
        write!(f, "{s}{}_{}", self.stripe, self.index + 1)
    }
}

/// One relation `sum coeffs[g] * g = 0`; `origin` is the generator whose
/// defining relation this was.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub origin: Generator,
    pub coeffs: BTreeMap<Generator, BiPoly>,
}

impl Relation {
    pub fn coeff(&self, g: &Generator) -> BiPoly {
        self.coeffs.get(g).cloned().unwrap_or_else(BiPoly::zero)
    }

    fn add(&mut self, g: Generator, p: &BiPoly) {
        if p.is_zero() {
            return;
        }
        let cur = self.coeffs.remove(&g).unwrap_or_else(BiPoly::zero);
        let sum = &cur + p;
        if !sum.is_zero() {
            self.coeffs.insert(g, sum);
        }
    }

    /// `z-factor * (inner) = 0`, pulling out the largest common z-monomial.
    pub fn render(&self, ctx: &Context, order: &[Generator]) -> String {
        // v terms first, as in z_s v = sum x u.
        let mut coeffs: Vec<(Generator, BiPoly)> = [Species::V, Species::U]
            .iter()
            .flat_map(|sp| order.iter().filter(move |g| g.species == *sp))
            .filter_map(|g| self.coeffs.get(g).map(|p| (*g, p.clone())))
            .collect();
        if coeffs.is_empty() {
            return "0 = 0".to_string();
        }
        let mut factor = [0u32; 4];
        for (i, slot) in factor.iter_mut().enumerate() {
            let z = ctx.z(i + 1);
            loop {
                let divided: Option<Vec<BiPoly>> =
                    coeffs.iter().map(|(_, p)| p.exact_div(z).ok()).collect();
                match divided {
                    Some(ps) => {
                        for ((_, p), d) in coeffs.iter_mut().zip(ps) {
                            *p = d;
                        }
                        *slot += 1;
                    }
                    None => break,
                }
            }
        }
        let mut inner = String::new();
        for (k, (g, p)) in coeffs.iter().enumerate() {
            let c = ctx.render(p);
            let term = match c.as_str() {
                "1" => g.to_string(),
                "-1" => format!("-{g}"),
                _ if c.contains(' ') => format!("({c})*{g}"),
                _ => format!("{c}*{g}"),
            };
            if k == 0 {
                inner.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                inner.push_str(&format!(" - {rest}"));
            } else {
                inner.push_str(&format!(" + {term}"));
            }
        }
        if factor == [0; 4] {
            return format!("{inner} = 0");
        }
        let f = crate::arith::ZMonomial {
            unit: Q::from_integer(1.into()),
            z: factor,
        };
        if coeffs.len() == 1 && !inner.starts_with('-') {
            format!("{f}*{inner} = 0")
        } else {
            format!("{f}*({inner}) = 0")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// One relation per line.
    pub fn dump(&self, ctx: &Context) -> String {
        let mut out = String::new();
        for r in &self.relations {
            out.push_str(&r.render(ctx, &self.generators));
            out.push('\n');
        }
        out
    }

    pub fn is_minimal(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.coeffs.values().all(BiPoly::in_max_ideal))
    }
}

fn u_ideal(ctx: &Context, stripe: u8) -> BiPoly {
    match stripe {
        3 => ctx.z(3).clone(),
        4 => ctx.z(4).clone(),
        _ => ctx.z(3) * ctx.z(4),
    }
}

fn v_ideal(ctx: &Context, stripe: u8) -> BiPoly {
    match stripe {
        1 => ctx.z(1).clone(),
        2 => ctx.z(2).clone(),
        _ => ctx.z(1) * ctx.z(2),
    }
}

/// One `u` per row and one `v` per column of `x`, with relations
/// `z_(r) u = 0` and `z_(s) v_j - sum_i x[i][j] u_i = 0`.
pub fn presentation_from_ext(x: &ExtBlockMatrix, ctx: &Context) -> Presentation {
    let us: Vec<Generator> = (0..x.rows())
        .map(|r| {
            let (s, i) = x.row_position(r);
            Generator::u(U_STRIPES[s], i)
        })
        .collect();
    let vs: Vec<Generator> = (0..x.cols())
        .map(|c| {
            let (s, i) = x.col_position(c);
            Generator::v(V_STRIPES[s], i)
        })
        .collect();
    let mut relations = Vec::new();
    for u in &us {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(*u, u_ideal(ctx, u.stripe));
        relations.push(Relation { origin: *u, coeffs });
    }
    for (c, v) in vs.iter().enumerate() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(*v, v_ideal(ctx, v.stripe));
        for (r, u) in us.iter().enumerate() {
            let e = x.get(r, c);
            if !e.is_zero() {
                coeffs.insert(*u, BiPoly::constant(-e));
            }
        }
        relations.push(Relation { origin: *v, coeffs });
    }
    Presentation {
        generators: us.into_iter().chain(vs).collect(),
        relations,
    }
}

/// One elimination: `pivot` solved from the relation of `origin`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    pub pivot: Generator,
    pub origin: Generator,
    pub coefficient: Q,
}

impl fmt::Display for EliminationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "eliminate {} using the relation of {} (coefficient {})",
            self.pivot,
            self.origin,
            crate::arith::format_rational(&self.coefficient)
        )
    }
}

enum PivotRule {
    Default,
    Seeded(Box<ChaCha8Rng>),
}

/// Which of the two paired stripes goes first: the smaller one, ties to the
/// second label (stripe 2 before 1, stripe 4 before 3). Depends only on
/// stripe sizes, so interchanging two stripes interchanges the choices.
#[derive(Clone, Copy, Debug)]
struct StripeRank {
    v_first: u8,
    u_first: u8,
}

impl StripeRank {
    fn of(gens: &[Generator]) -> Self {
        let count = |sp: Species, st: u8| {
            gens.iter()
                .filter(|g| g.species == sp && g.stripe == st)
                .count()
        };
        let pick = |a: u8, b: u8, sp: Species| if count(sp, a) < count(sp, b) { a } else { b };
        StripeRank {
            v_first: pick(1, 2, Species::V),
            u_first: pick(3, 4, Species::U),
        }
    }

    /// v-relation processing rank: first paired stripe, the other, then 12.
    fn v_rank(self, g: &Generator) -> (usize, usize) {
        let s = match g.stripe {
            s if s == self.v_first => 0,
            1 | 2 => 1,
            _ => 2,
        };
        (s, g.index)
    }

    /// u-pivot preference: first paired stripe, the other, then 34, highest
    /// index first.
    fn u_preference(self, g: &Generator) -> (usize, std::cmp::Reverse<usize>) {
        let s = match g.stripe {
            s if s == self.u_first => 0,
            3 | 4 => 1,
            _ => 2,
        };
        (s, std::cmp::Reverse(g.index))
    }
}

/// Eliminates unit-coefficient generators with the default pivot rule and
/// puts the survivors in the default order.
pub fn eliminate_units(p: &Presentation) -> Result<Presentation> {
    eliminate_traced(p).map(|(q, _)| q)
}

pub fn eliminate_traced(p: &Presentation) -> Result<(Presentation, Vec<EliminationStep>)> {
    eliminate(p, PivotRule::Default)
}

/// Same elimination with relation order and pivot choice drawn from `seed`.
pub fn eliminate_units_seeded(p: &Presentation, seed: u64) -> Result<Presentation> {
    eliminate(p, PivotRule::Seeded(Box::new(ChaCha8Rng::seed_from_u64(seed)))).map(|(q, _)| q)
}

fn eliminate(p: &Presentation, mut rule: PivotRule) -> Result<(Presentation, Vec<EliminationStep>)> {
    let mut gens = p.generators.clone();
    let mut rels = p.relations.clone();
    let mut steps = Vec::new();
    let rank = StripeRank::of(&gens);

    for r in &rels {
        for (g, c) in &r.coeffs {
            if g.species == Species::V {
                assert!(
                    c.in_max_ideal(),
                    "v-generator {g} carries a unit coefficient; the matrix is not first level"
                );
            }
        }
    }

    let mut v_order: Vec<Generator> = rels
        .iter()
        .filter(|r| r.origin.species == Species::V)
        .map(|r| r.origin)
        .collect();
    match &mut rule {
        PivotRule::Default => v_order.sort_by_key(|g| rank.v_rank(g)),
        PivotRule::Seeded(rng) => v_order.shuffle(rng),
    }

    loop {
        let mut chosen = None;
        for origin in &v_order {
            let Some(ri) = rels.iter().position(|r| r.origin == *origin) else {
                continue;
            };
            let mut units: Vec<Generator> = rels[ri]
                .coeffs
                .iter()
                .filter(|(g, c)| g.species == Species::U && !c.is_zero() && c.is_constant())
                .map(|(g, _)| *g)
                .collect();
            if units.is_empty() {
                continue;
            }
            let pivot = match &mut rule {
                PivotRule::Default => *units.iter().min_by_key(|g| rank.u_preference(g)).unwrap(),
                PivotRule::Seeded(rng) => {
                    units.sort();
                    units[rng.gen_range(0..units.len())]
                }
            };
            chosen = Some((ri, pivot));
            break;
        }
        let Some((ri, pivot)) = chosen else {
            break;
        };
        let rel = rels.remove(ri);
        let c = rel.coeff(&pivot).constant_term();
        let inv = -(Q::from_integer(1.into()) / &c);
        // pivot = sum over the other generators of expr[g] * g.
        let expr: Vec<(Generator, BiPoly)> = rel
            .coeffs
            .iter()
            .filter(|(g, _)| **g != pivot)
            .map(|(g, p)| (*g, p.scale(&inv)))
            .collect();
        for other in rels.iter_mut() {
            if let Some(a) = other.coeffs.remove(&pivot) {
                for (g, e) in &expr {
                    other.add(*g, &(&a * e));
                }
            }
        }
        gens.retain(|g| *g != pivot);
        steps.push(EliminationStep {
            pivot,
            origin: rel.origin,
            coefficient: c,
        });
    }

    if gens.len() != rels.len() {
        return Err(Error::NonSquareResult {
            rows: rels.len(),
            cols: gens.len(),
        });
    }
    let reduced = Presentation {
        generators: gens,
        relations: rels,
    };
    debug_assert!(reduced.is_minimal());
    Ok((canonical_order(reduced), steps))
}

/// Orders relations and generators so the relation matrix is as close to
/// lower triangular as possible: repeatedly take the first relation with a
/// single nonzero among the remaining generators.
fn canonical_order(p: Presentation) -> Presentation {
    let mut gens = p.generators;
    gens.sort();
    let mut rels = p.relations;
    rels.sort_by_key(|r| r.origin);

    let mut rows: Vec<usize> = (0..rels.len()).collect();
    let mut cols: Vec<usize> = (0..gens.len()).collect();
    let mut out_rows = Vec::with_capacity(rows.len());
    let mut out_cols = Vec::with_capacity(cols.len());
    while !rows.is_empty() {
        let nz = |r: usize, cols: &[usize]| -> Vec<usize> {
            cols.iter()
                .copied()
                .filter(|&c| rels[r].coeffs.contains_key(&gens[c]))
                .collect()
        };
        let single = rows.iter().position(|&r| nz(r, &cols).len() == 1);
        let (pr, c) = match single {
            Some(pr) => (pr, nz(rows[pr], &cols)[0]),
            None => match rows.iter().position(|&r| !nz(r, &cols).is_empty()) {
                Some(pr) => (pr, nz(rows[pr], &cols)[0]),
                None => (0, cols[0]),
            },
        };
        out_rows.push(rows.remove(pr));
        cols.retain(|&x| x != c);
        out_cols.push(c);
    }
    Presentation {
        generators: out_cols.into_iter().map(|c| gens[c]).collect(),
        relations: {
            let mut slots: Vec<Option<Relation>> = rels.into_iter().map(Some).collect();
            out_rows
                .into_iter()
                .map(|r| slots[r].take().expect("each relation placed once"))
                .collect()
        },
    }
}

/// Rows are relations in stored order; column `j` is generator
/// `ordering[j]` (stored order when `None`).
pub fn relation_matrix(p: &Presentation, ordering: Option<&[usize]>) -> Result<PolyMatrix> {
    let n = p.generators.len();
    let order: Vec<usize> = match ordering {
        None => (0..n).collect(),
        Some(o) => {
            let mut seen = vec![false; n];
            if o.len() != n || o.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::BadOrdering(format!(
                    "{o:?} is not a permutation of 0..{n}"
                )));
            }
            o.to_vec()
        }
    };
    let mut m = PolyMatrix::zeros(p.relations.len(), n);
    for (r, rel) in p.relations.iter().enumerate() {
        for (c, &gi) in order.iter().enumerate() {
            m.set(r, c, rel.coeff(&p.generators[gi]));
        }
    }
    Ok(m)
}

/// Relation matrix of the module attached to `x`, in the default order.
pub fn derive_phi(x: &ExtBlockMatrix, ctx: &Context) -> Result<PolyMatrix> {
    let p = eliminate_units(&presentation_from_ext(x, ctx))?;
    relation_matrix(&p, None)
}
