//! Buchberger's algorithm under degree-reverse-lexicographic order, with
//! normal forms, Krull dimension and radical membership.

use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::poly::{Monomial, SparsePoly, Var};

/// Size guards for desk-scale computations.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_vars: usize,
    /// Bound on the sum of the generator degrees.
    pub degree_budget: u32,
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        let max_vars = std::env::var("NILCENT_MAX_VARS").ok().and_then(|v| v.parse().ok()).unwrap_or(16);
        Limits { max_vars, degree_budget: 40, max_pairs: 50_000, max_basis: 2_000, max_terms: 200_000 }
    }
}

/// An ideal over a declared variable universe.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    pub vars: BTreeSet<Var>,
    pub gens: Vec<SparsePoly>,
}

impl Ideal {
    pub fn new(gens: Vec<SparsePoly>) -> Self {
        let vars = gens.iter().flat_map(|g| g.vars()).collect();
        Ideal { vars, gens }
    }

    pub fn with_vars(gens: Vec<SparsePoly>, vars: impl IntoIterator<Item = Var>) -> Self {
        let mut all: BTreeSet<Var> = vars.into_iter().collect();
        all.extend(gens.iter().flat_map(|g| g.vars()));
        Ideal { vars: all, gens }
    }

    /// One generator per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                gens.push(SparsePoly::parse(line)?);
            }
        }
        Ok(Ideal::new(gens))
    }

    pub fn to_text(&self) -> String {
        self.gens.iter().map(|g| format!("{g}\n")).collect()
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ideal: Ideal,
    /// Reduced, monic, sorted by leading monomial.
    pub basis: Vec<SparsePoly>,
}

fn lead(p: &SparsePoly) -> &Monomial {
    p.leading_term().expect("nonzero polynomial").0
}

/// Fully reduces `p` by `basis`.
fn reduce(p: &SparsePoly, basis: &[SparsePoly], limits: &Limits) -> Result<SparsePoly> {
    let mut p = p.clone();
    let mut rem = SparsePoly::zero();
    while let Some((m, c)) = p.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        match basis.iter().find(|g| lead(g).divides(&m)) {
            Some(g) => {
                let (gm, gc) = g.leading_term().unwrap();
                let factor = m.div(gm).unwrap();
                p.add_scaled(&(-c / gc), &g.mul_monomial(&factor, &Q::one()));
            }
            None => {
                p.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
        if p.len() + rem.len() > limits.max_terms {
            return Err(Error::SizeGuardExceeded(format!("reduction exceeded {} terms", limits.max_terms)));
        }
    }
    Ok(rem)
}

fn spoly(f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let a = f.mul_monomial(&l.div(fm).unwrap(), &(Q::one() / fc));
    let b = g.mul_monomial(&l.div(gm).unwrap(), &(Q::one() / gc));
    a.sub(&b)
}

pub fn groebner(ideal: &Ideal) -> Result<GroebnerBasis> {
    groebner_with_limits(ideal, &Limits::default())
}

pub fn groebner_with_limits(ideal: &Ideal, limits: &Limits) -> Result<GroebnerBasis> {
    if ideal.vars.len() > limits.max_vars {
        return Err(Error::SizeGuardExceeded(format!(
            "{} variables exceed the limit of {}",
            ideal.vars.len(),
            limits.max_vars
        )));
    }
    let budget: u32 = ideal.gens.iter().filter_map(|g| g.total_degree()).sum();
    if budget > limits.degree_budget {
        return Err(Error::SizeGuardExceeded(format!(
            "generator degree sum {budget} exceeds the budget of {}",
            limits.degree_budget
        )));
    }
    let mut g: Vec<SparsePoly> = Vec::new();
    for p in &ideal.gens {
        let r = reduce(p, &g, limits)?;
        if !r.is_zero() {
            g.push(r.monic());
        }
    }
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let mut processed = 0usize;
    while !pending.is_empty() {
        // normal strategy: smallest lcm first
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| lead(&g[a.0]).lcm(lead(&g[a.1])).cmp(&lead(&g[b.0]).lcm(lead(&g[b.1]))).then(a.cmp(b)))
            .unwrap();
        pending.remove(&(i, j));
        processed += 1;
        if processed > limits.max_pairs {
            return Err(Error::SizeGuardExceeded(format!("more than {} S-pairs", limits.max_pairs)));
        }
        let (li, lj) = (lead(&g[i]), lead(&g[j]));
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && lead(&g[k]).divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let h = reduce(&spoly(&g[i], &g[j]), &g, limits)?;
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let n = g.len();
        for k in 0..n {
            pending.insert((k, n));
        }
        g.push(h);
        if g.len() > limits.max_basis {
            return Err(Error::SizeGuardExceeded(format!("basis exceeded {} elements", limits.max_basis)));
        }
    }
    // minimal, then reduced
    let mut minimal: Vec<SparsePoly> = Vec::new();
    for (idx, p) in g.iter().enumerate() {
        let lp = lead(p);
        let redundant =
            g.iter().enumerate().any(|(o, q)| o != idx && lead(q).divides(lp) && (lead(q) != lp || o < idx));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (idx, p) in minimal.iter().enumerate() {
        let others: Vec<SparsePoly> =
            minimal.iter().enumerate().filter(|(o, _)| *o != idx).map(|(_, q)| q.clone()).collect();
        let (m, c) = p.leading_term().unwrap();
        let tail = p.sub(&SparsePoly::term(c.clone(), m.clone()));
        let mut r = reduce(&tail, &others, limits)?;
        r.add_term(m.clone(), c.clone());
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| lead(a).cmp(lead(b)));
    Ok(GroebnerBasis { ideal: ideal.clone(), basis: reduced })
}

impl GroebnerBasis {
    pub fn normal_form(&self, p: &SparsePoly) -> SparsePoly {
        reduce(p, &self.basis, &Limits { max_terms: usize::MAX, ..Limits::default() }).expect("unbounded reduction")
    }

    pub fn contains(&self, p: &SparsePoly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_whole_ring(&self) -> bool {
        self.basis.iter().any(|g| lead(g).is_one())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| lead(g).clone()).collect()
    }

    /// Krull dimension of the quotient ring over the declared variables, via
    /// the largest set of variables containing no leading monomial; `-1` for
    /// the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_whole_ring() {
            return -1;
        }
        let vars: Vec<Var> = self.ideal.vars.iter().copied().collect();
        let index: HashMap<Var, usize> = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let supports: Vec<u64> =
            self.basis.iter().map(|g| lead(g).vars().fold(0u64, |acc, v| acc | 1 << index[&v])).collect();
        let n = vars.len();
        let mut best = 0;
        for set in 0u64..(1u64 << n) {
            let size = set.count_ones() as usize;
            if size > best && supports.iter().all(|s| s & !set != 0) {
                best = size;
            }
        }
        best as i64
    }
}

/// Whether `p` vanishes on the zero set of the ideal, by testing
/// `1 in I + (1 - t p)` for a fresh variable `t`.
pub fn radical_membership(p: &SparsePoly, ideal: &Ideal) -> Result<bool> {
    radical_membership_with_limits(p, ideal, &Limits::default())
}

pub fn radical_membership_with_limits(p: &SparsePoly, ideal: &Ideal, limits: &Limits) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    let used: BTreeSet<Var> = ideal.vars.iter().copied().chain(p.vars()).collect();
    let t = (0..).map(|i| Var::sym('t', i)).find(|v| !used.contains(v)).unwrap();
    let mut gens = ideal.gens.clone();
    gens.push(SparsePoly::one().sub(&SparsePoly::var(t).mul(p)));
    let ext = Ideal::with_vars(gens, used.into_iter().chain([t]));
    let limits = Limits {
        max_vars: limits.max_vars + 1,
        degree_budget: limits.degree_budget + p.total_degree().unwrap_or(0) + 1,
        ..*limits
    };
    Ok(groebner_with_limits(&ext, &limits)?.is_whole_ring())
}

/// Ideal membership by linear algebra in the space of polynomials of degree at
/// most `degree`: `p in I` iff `p` lies in the span of `m * g` with
/// `deg(m g) <= degree`. Exact for homogeneous ideals and homogeneous `p` of
/// that degree; used as an independent check on small cases.
pub fn truncated_membership(p: &SparsePoly, gens: &[SparsePoly], vars: &[Var], degree: u32) -> bool {
    let monos = monomials_up_to(vars, degree);
    let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let to_vec = |q: &SparsePoly| -> Option<Vec<Q>> {
        let mut v = vec![Q::zero(); monos.len()];
        for (m, c) in q.terms() {
            v[*index.get(m)?] = c.clone();
        }
        Some(v)
    };
    let mut span = Vec::new();
    for g in gens {
        let Some(dg) = g.total_degree() else { continue };
        for m in &monos {
            if m.degree() + dg <= degree {
                if let Some(v) = to_vec(&g.mul_monomial(m, &Q::one())) {
                    span.push(v);
                }
            }
        }
    }
    match to_vec(p) {
        Some(target) => crate::linalg::express_in_span(&span, &target).is_some(),
        None => false,
    }
}

fn monomials_up_to(vars: &[Var], degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![Monomial::one()];
    for _ in 0..degree {
        let mut next = BTreeSet::new();
        for m in &frontier {
            for v in vars {
                next.insert(m.mul(&Monomial::var(*v)));
            }
        }
        frontier = next.into_iter().collect();
        out.extend(frontier.iter().cloned());
    }
    out
}
