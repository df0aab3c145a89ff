//! Symmetric invariants of `g_e`: restrictions of characteristic-polynomial
//! coefficients to the Slodowy slice, the explicit monomial formula, and the
//! affine-slice fingerprint `psi`.

use num_traits::{One, Zero};
use rand::Rng;
use std::collections::HashMap;

use crate::analysis::{expected_rank, random_functional};
use crate::centralizer::{label_in_range, CentralizerAlgebra};
use crate::charpoly::{pfaffian, principal_minor_sums, PolyMatrix};
use crate::error::{Error, Result};
use crate::linalg::{self, kernel_basis, Matrix, Q};
use crate::model::{AlgebraKind, Partition};
use crate::poly::{SparsePoly, Var, VarLabel};

/// `e + g_f`, parametrised by the coordinates of `g_e^*`.
#[derive(Clone, Debug)]
pub struct SlodowySlice {
    pub gf_basis: Vec<Matrix>,
    /// `trace(xi_a * dual_basis[b]) = delta_ab`.
    pub dual_basis: Vec<Matrix>,
    /// `E + sum_a t_a dual_basis[a]`, `t_a` the variable of `xi_a`.
    pub generic: PolyMatrix,
}

pub fn build_slice(alg: &CentralizerAlgebra) -> Result<SlodowySlice> {
    let model = alg.model();
    let n = model.dim();
    let ambient: Vec<Matrix> = match alg.kind() {
        AlgebraKind::Gl => (0..n * n)
            .map(|k| {
                let mut m = Matrix::zeros(n, n);
                m[(k / n, k % n)] = Q::one();
                m
            })
            .collect(),
        _ => model.ambient_basis(),
    };
    let f = model.f();
    let mut cols = Matrix::zeros(n * n, ambient.len());
    for (k, b) in ambient.iter().enumerate() {
        for (r, v) in f.commutator(b).flatten().into_iter().enumerate() {
            cols[(r, k)] = v;
        }
    }
    let gf_basis: Vec<Matrix> = kernel_basis(&cols)
        .into_iter()
        .map(|c| {
            let mut m = Matrix::zeros(n, n);
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_zero() {
                    m.add_scaled(ck, &ambient[k]);
                }
            }
            m
        })
        .collect();
    let dim = alg.dim();
    if gf_basis.len() != dim {
        return Err(Error::DegeneratePairing);
    }
    let gens: Vec<&Matrix> = alg.generators().iter().map(|g| &g.matrix).collect();
    let gram = Matrix::from_rows(gens.iter().map(|x| gf_basis.iter().map(|y| x.mul(y).trace()).collect()).collect());
    let inv = linalg::inverse(&gram).ok_or(Error::DegeneratePairing)?;
    let dual_basis: Vec<Matrix> = (0..dim)
        .map(|b| {
            let mut m = Matrix::zeros(n, n);
            for (c, y) in gf_basis.iter().enumerate() {
                if !inv[(c, b)].is_zero() {
                    m.add_scaled(&inv[(c, b)], y);
                }
            }
            m
        })
        .collect();
    let e = model.e();
    let mut generic: PolyMatrix =
        (0..n).map(|r| (0..n).map(|c| SparsePoly::constant(e[(r, c)].clone())).collect()).collect();
    for (a, eta) in dual_basis.iter().enumerate() {
        let v = alg.var(a);
        for r in 0..n {
            for c in 0..n {
                if !eta[(r, c)].is_zero() {
                    generic[r][c].add_term(crate::poly::Monomial::var(v), eta[(r, c)].clone());
                }
            }
        }
    }
    Ok(SlodowySlice { gf_basis, dual_basis, generic })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Slice,
    Monomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Invariant {
    /// Index of the ambient invariant: `Delta_ell` for `gl`, `Delta_{2 ell}`
    /// (or the Pfaffian for the last one in even orthogonal type) otherwise.
    pub ell: usize,
    pub degree: usize,
    pub poly: SparsePoly,
}

#[derive(Clone, Debug)]
pub struct InvariantSet {
    pub method: Method,
    pub items: Vec<Invariant>,
}

impl InvariantSet {
    pub fn polys(&self) -> Vec<SparsePoly> {
        self.items.iter().map(|i| i.poly.clone()).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.items.iter().map(|i| i.degree).collect()
    }
}

/// The ambient invariants whose restrictions generate: `(label, source)` where
/// the source is an index into the principal-minor sums, or `None` for the
/// Pfaffian.
fn ambient_sources(alg: &CentralizerAlgebra) -> Vec<(usize, Option<usize>)> {
    let n = alg.partition().n();
    match alg.kind() {
        AlgebraKind::Gl => (1..=n).map(|l| (l, Some(l))).collect(),
        AlgebraKind::Sp => (1..=n / 2).map(|i| (i, Some(2 * i))).collect(),
        AlgebraKind::So => {
            let r = n / 2;
            (1..=r).map(|i| if n.is_multiple_of(2) && i == r { (i, None) } else { (i, Some(2 * i)) }).collect()
        }
    }
}

fn skew_matrix(alg: &CentralizerAlgebra, m: &PolyMatrix) -> Result<PolyMatrix> {
    let j = alg.model().form().ok_or(Error::WrongKind)?;
    let n = m.len();
    Ok((0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut acc = SparsePoly::zero();
                    for k in 0..n {
                        if !j[(r, k)].is_zero() && !m[k][c].is_zero() {
                            acc.add_assign(&m[k][c].scale(&j[(r, k)]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect())
}

fn ambient_values(alg: &CentralizerAlgebra, slice: &SlodowySlice, max_degree: u32) -> Result<Vec<SparsePoly>> {
    let sources = ambient_sources(alg);
    let sums = principal_minor_sums(&slice.generic, max_degree);
    let mut out = Vec::with_capacity(sources.len());
    for (_, src) in sources {
        out.push(match src {
            Some(l) => sums[l].clone(),
            None => pfaffian(&skew_matrix(alg, &slice.generic)?, max_degree)?,
        });
    }
    Ok(out)
}

/// Lowest-degree components of the restricted invariants, found by degree
/// truncation with increasing cut-off.
pub fn restricted_invariants(alg: &CentralizerAlgebra, slice: &SlodowySlice) -> Result<InvariantSet> {
    let sources = ambient_sources(alg);
    let n = alg.partition().n() as u32;
    let mut found: Vec<Option<SparsePoly>> = vec![None; sources.len()];
    let mut cut = 1;
    loop {
        let vals = ambient_values(alg, slice, cut)?;
        for (slot, v) in found.iter_mut().zip(vals) {
            if slot.is_none() && !v.is_zero() {
                *slot = Some(v.lowest_component());
            }
        }
        if found.iter().all(Option::is_some) || cut >= n {
            break;
        }
        cut = (cut * 2).min(n);
    }
    let mut items = Vec::new();
    for ((ell, _), p) in sources.into_iter().zip(found) {
        let poly = p.ok_or_else(|| Error::Invalid(format!("invariant {ell} restricts to zero")))?;
        items.push(Invariant { ell, degree: poly.total_degree().unwrap_or(0) as usize, poly });
    }
    Ok(InvariantSet { method: Method::Slice, items })
}

/// Same as [`restricted_invariants`] but by full expansion, without truncation.
pub fn restricted_invariants_untruncated(alg: &CentralizerAlgebra, slice: &SlodowySlice) -> Result<InvariantSet> {
    let sources = ambient_sources(alg);
    let vals = ambient_values(alg, slice, u32::MAX)?;
    let mut items = Vec::new();
    for ((ell, _), v) in sources.into_iter().zip(vals) {
        if v.is_zero() {
            return Err(Error::Invalid(format!("invariant {ell} restricts to zero")));
        }
        let poly = v.lowest_component();
        items.push(Invariant { ell, degree: poly.total_degree().unwrap_or(0) as usize, poly });
    }
    Ok(InvariantSet { method: Method::Slice, items })
}

pub fn restricted_invariant(alg: &CentralizerAlgebra, slice: &SlodowySlice, ell: usize) -> Result<Invariant> {
    let count = ambient_sources(alg).len();
    if ell == 0 || ell > count {
        return Err(Error::IndexOutOfRange { index: ell, lo: 1, hi: count });
    }
    Ok(restricted_invariants(alg, slice)?.items.swap_remove(ell - 1))
}

/// `min { m : ell <= lambda_1 + ... + lambda_m }`.
pub fn expected_degree(p: &Partition, ell: usize) -> usize {
    let mut acc = 0;
    for (m, part) in p.parts().iter().enumerate() {
        acc += part;
        if ell <= acc {
            return m + 1;
        }
    }
    p.len()
}

fn subsets(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, m, cur, out);
            cur.pop();
        }
    }
    rec(0, k, m, &mut cur, &mut out);
    out
}

/// All permutations of `0..m` with their signs.
fn permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..m).collect();
    fn rec(k: usize, sign: i64, perm: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == perm.len() {
            out.push((perm.clone(), sign));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, if i == k { sign } else { -sign }, perm, out);
            perm.swap(k, i);
        }
    }
    rec(0, 1, &mut perm, &mut out);
    out
}

/// Compositions of `total` into `parts` nonnegative summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `sum (sgn sigma) prod_{i in I} factor(i, sigma(i), s(i))` over `|I| = m`,
/// permutations `sigma` of `I` and `s` with `sum s = total`.
fn signed_sum<F>(p: &Partition, m: usize, total: usize, factor: F) -> SparsePoly
where
    F: Fn(usize, usize, usize) -> Option<VarLabel>,
{
    let mut acc = SparsePoly::zero();
    let perms = permutations(m);
    let comps = compositions(total, m);
    for set in subsets(p.len(), m) {
        for (perm, sign) in &perms {
            for comp in &comps {
                let mut mono = Vec::with_capacity(m);
                let mut ok = true;
                for (t, &i) in set.iter().enumerate() {
                    match factor(i, set[perm[t]], comp[t]) {
                        Some(l) => mono.push(Var::Xi(l)),
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    let mono = mono
                        .into_iter()
                        .fold(crate::poly::Monomial::one(), |a, v| a.mul(&crate::poly::Monomial::var(v)));
                    acc.add_term(mono, linalg::q(*sign));
                }
            }
        }
    }
    acc
}

/// The explicit signed sum of monomials `xi_{i}^{sigma(i), s(i)}` with
/// `sum s = ell - m` (type A).
pub fn monomial_invariant(p: &Partition, ell: usize, m: usize) -> SparsePoly {
    if m == 0 || m > p.len() || ell < m {
        return SparsePoly::zero();
    }
    signed_sum(p, m, ell - m, |i, j, s| label_in_range(p, i + 1, j + 1, s).then(|| VarLabel::new(i + 1, j + 1, s)))
}

/// The element `e_{i,j;r}` of the rectangular-diagonal basis, written as
/// `xi_j^{i, r + d_i - d_j}` (1-based block indices).
pub fn bb_translate(p: &Partition, i: usize, j: usize, r: usize) -> Result<VarLabel> {
    let k = p.len();
    for x in [i, j] {
        if x == 0 || x > k {
            return Err(Error::IndexOutOfRange { index: x, lo: 1, hi: k });
        }
    }
    let (li, lj) = (p.parts()[i - 1], p.parts()[j - 1]);
    let lo = lj - li.min(lj);
    if r < lo || r >= lj {
        return Err(Error::IndexOutOfRange { index: r, lo, hi: lj - 1 });
    }
    let s = r + p.d(i - 1) - p.d(j - 1);
    Ok(VarLabel::new(j, i, s))
}

/// Commutative symbol of the central element built from the
/// `e_{sigma(i), i; r}` with `sum r = ell - m`.
pub fn bb_symbol(p: &Partition, ell: usize, m: usize) -> SparsePoly {
    if m == 0 || m > p.len() || ell < m {
        return SparsePoly::zero();
    }
    signed_sum(p, m, ell - m, |i, j, r| bb_translate(p, j + 1, i + 1, r).ok())
}

/// Restriction to `eta + V`: `xi_{i+1}^{i,d_i} -> 1`, `xi_1^{i,s}` free,
/// all other coordinates zero.
pub fn psi_restriction(p: &Partition, poly: &SparsePoly) -> SparsePoly {
    let mut sub: HashMap<Var, SparsePoly> = HashMap::new();
    for v in poly.vars() {
        let Var::Xi(l) = v else { continue };
        let keep = l.i == 1;
        let one = l.i >= 2 && l.j + 1 == l.i && l.s as usize == p.d(l.j as usize - 1);
        if one {
            sub.insert(v, SparsePoly::one());
        } else if !keep {
            sub.insert(v, SparsePoly::zero());
        }
    }
    poly.substitute(&sub)
}

/// The single variable `xi_1^{m,s}`, `s = ell - (d_1 + ... + d_{m-1}) - m`,
/// expected as the `psi` image of the degree-`m` invariant.
pub fn psi_expected(p: &Partition, ell: usize, m: usize) -> Option<VarLabel> {
    let used: usize = (0..m - 1).map(|i| p.d(i)).sum::<usize>() + m;
    let s = ell.checked_sub(used)?;
    Some(VarLabel::new(1, m, s))
}

/// Whether every term of `poly` has the given weight under the `ad h` grading.
pub fn hweight_homogeneous(alg: &CentralizerAlgebra, poly: &SparsePoly, weight: i64) -> bool {
    poly.terms().all(|(mono, _)| {
        let w: Option<i64> =
            mono.pairs().iter().map(|(v, e)| alg.index_of_var(*v).map(|a| alg.hweights()[a] * *e as i64)).sum();
        w == Some(weight)
    })
}

/// Zero set of the linear invariants: each linear invariant is solved for a
/// pivot variable and substituted into the others.
#[derive(Clone, Debug)]
pub struct LinearElimination {
    pub pivots: Vec<Var>,
    pub substitution: HashMap<Var, SparsePoly>,
}

impl LinearElimination {
    pub fn new(linear: &[SparsePoly]) -> Result<Self> {
        let mut pivots = Vec::new();
        let mut substitution: HashMap<Var, SparsePoly> = HashMap::new();
        for p in linear {
            let p = p.substitute(&substitution);
            if p.is_zero() {
                continue;
            }
            if p.total_degree() != Some(1) || !p.is_homogeneous() {
                return Err(Error::Invalid("expected homogeneous linear invariants".into()));
            }
            // leading variable in the monomial order
            let (lead, c) = p.leading_term().ok_or(Error::Inconsistent)?;
            let v = lead.vars().next().ok_or(Error::Inconsistent)?;
            let solved = p.sub(&SparsePoly::term(c.clone(), lead.clone())).scale(&(-Q::one() / c));
            for val in substitution.values_mut() {
                let mut one = HashMap::new();
                one.insert(v, solved.clone());
                *val = val.substitute(&one);
            }
            substitution.insert(v, solved);
            pivots.push(v);
        }
        Ok(LinearElimination { pivots, substitution })
    }

    pub fn restrict(&self, p: &SparsePoly) -> SparsePoly {
        p.substitute(&self.substitution)
    }
}

#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub jacobian_rank: usize,
    pub count: usize,
    pub degree_sum: usize,
    /// `(dim g_e + rk g) / 2`.
    pub expected_degree_sum: usize,
}

impl IndependenceReport {
    pub fn independent(&self) -> bool {
        self.jacobian_rank == self.count
    }
}

pub fn independence_check<R: Rng>(alg: &CentralizerAlgebra, polys: &[SparsePoly], rng: &mut R) -> IndependenceReport {
    let mut best = 0;
    for _ in 0..3 {
        let point = alg.point(&random_functional(alg, rng, 1000));
        let rows: Vec<Vec<Q>> =
            polys.iter().map(|p| (0..alg.dim()).map(|a| p.derivative(alg.var(a)).eval(&point)).collect()).collect();
        best = best.max(linalg::rank_of_rows(alg.dim(), rows));
        if best == polys.len() {
            break;
        }
    }
    IndependenceReport {
        jacobian_rank: best,
        count: polys.len(),
        degree_sum: polys.iter().map(|p| p.total_degree().unwrap_or(0) as usize).sum(),
        expected_degree_sum: (alg.dim() + expected_rank(alg)) / 2,
    }
}

/// Agreement of the monomial formula with the slice restriction for one `ell`.
#[derive(Clone, Debug)]
pub struct TripleCheck {
    pub ell: usize,
    pub degree: usize,
    pub expected_degree: usize,
    /// `monomial = scalar * slice`.
    pub scalar: Option<Q>,
    pub symbol_matches: bool,
    pub poisson_central: bool,
    pub psi_image: SparsePoly,
    pub psi_ok: bool,
    pub hweight_ok: bool,
}

impl TripleCheck {
    pub fn holds(&self) -> bool {
        self.degree == self.expected_degree
            && self.scalar.as_ref().is_some_and(|c| !c.is_zero())
            && self.symbol_matches
            && self.poisson_central
            && self.psi_ok
            && self.hweight_ok
    }
}

pub fn triple_checks(alg: &CentralizerAlgebra, set: &InvariantSet) -> Vec<TripleCheck> {
    let p = alg.partition();
    set.items
        .iter()
        .map(|inv| {
            let mono = monomial_invariant(p, inv.ell, inv.degree);
            let scalar = mono.proportionality(&inv.poly);
            let psi_image = psi_restriction(p, &inv.poly);
            let psi_ok = match psi_expected(p, inv.ell, inv.degree) {
                Some(l) => psi_image.proportionality(&SparsePoly::var(Var::Xi(l))).is_some_and(|c| !c.is_zero()),
                None => false,
            };
            TripleCheck {
                ell: inv.ell,
                degree: inv.degree,
                expected_degree: expected_degree(p, inv.ell),
                scalar,
                symbol_matches: bb_symbol(p, inv.ell, inv.degree) == mono,
                poisson_central: alg.is_poisson_central(&inv.poly),
                psi_image,
                psi_ok,
                hweight_ok: hweight_homogeneous(alg, &inv.poly, 2 * (inv.ell as i64 - inv.degree as i64)),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(parts: &[usize], kind: AlgebraKind) -> CentralizerAlgebra {
        CentralizerAlgebra::new(Partition::new(parts.to_vec()).unwrap(), kind).unwrap()
    }

    fn xi(i: usize, j: usize, s: usize) -> SparsePoly {
        SparsePoly::var(Var::xi(i, j, s))
    }

    #[test]
    fn slice_dual_basis_is_exact() {
        for (parts, kind) in
            [(vec![4, 2], AlgebraKind::Gl), (vec![4, 2], AlgebraKind::Sp), (vec![3, 1, 1], AlgebraKind::So)]
        {
            let a = alg(&parts, kind);
            let s = build_slice(&a).unwrap();
            for (i, g) in a.generators().iter().enumerate() {
                for (j, d) in s.dual_basis.iter().enumerate() {
                    assert_eq!(g.matrix.mul(d).trace(), if i == j { q(1) } else { q(0) });
                }
            }
            let zero = HashMap::new();
            assert_eq!(&crate::charpoly::eval_matrix(&s.generic, &zero), a.model().e());
        }
    }

    #[test]
    fn gl_4_2_invariants() {
        let a = alg(&[4, 2], AlgebraKind::Gl);
        let s = build_slice(&a).unwrap();
        let set = restricted_invariants(&a, &s).unwrap();
        assert_eq!(set.degrees(), vec![1, 1, 1, 1, 2, 2]);
        let p = a.partition();
        let f5 = monomial_invariant(p, 5, 2);
        let want5 = xi(1, 1, 3)
            .mul(&xi(2, 2, 0))
            .add(&xi(1, 1, 2).mul(&xi(2, 2, 1)))
            .sub(&xi(1, 2, 0).mul(&xi(2, 1, 3)))
            .sub(&xi(1, 2, 1).mul(&xi(2, 1, 2)));
        assert_eq!(f5, want5);
        for c in triple_checks(&a, &set) {
            assert!(c.holds(), "{c:?}");
        }
        let linear: Vec<SparsePoly> = set.items.iter().filter(|i| i.degree == 1).map(|i| i.poly.clone()).collect();
        let elim = LinearElimination::new(&linear).unwrap();
        let h5 = elim.restrict(&set.items[4].poly);
        let h6 = elim.restrict(&set.items[5].poly);
        let want_h5 = xi(1, 2, 1).mul(&xi(2, 1, 2)).add(&xi(1, 2, 0).mul(&xi(2, 1, 3)));
        assert!(h5.proportionality(&want_h5).is_some());
        assert!(h6.proportionality(&xi(1, 2, 1).mul(&xi(2, 1, 3))).is_some());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let ind = independence_check(&a, &set.polys(), &mut rng);
        assert!(ind.independent());
        assert_eq!((ind.degree_sum, ind.expected_degree_sum), (8, 8));
    }

    #[test]
    fn truncated_and_full_expansion_agree() {
        for n in 1..=5 {
            for p in Partition::all(n) {
                for kind in [AlgebraKind::Gl, AlgebraKind::So, AlgebraKind::Sp] {
                    if !p.is_admissible(kind) {
                        continue;
                    }
                    let a = CentralizerAlgebra::new(p.clone(), kind).unwrap();
                    let s = build_slice(&a).unwrap();
                    let x = restricted_invariants(&a, &s).unwrap();
                    let y = restricted_invariants_untruncated(&a, &s).unwrap();
                    assert_eq!(x.items, y.items, "{kind} {p}");
                    for inv in &x.items {
                        assert!(a.is_poisson_central(&inv.poly), "{kind} {p} {}", inv.ell);
                    }
                }
            }
        }
    }

    #[test]
    fn classical_examples() {
        let a = alg(&[4, 2], AlgebraKind::Sp);
        let s = build_slice(&a).unwrap();
        let set = restricted_invariants(&a, &s).unwrap();
        assert_eq!(set.items.len(), 3);
        assert_eq!(set.degrees().iter().sum::<usize>(), 4);
        let a = alg(&[3, 3], AlgebraKind::So);
        let set = restricted_invariants(&a, &build_slice(&a).unwrap()).unwrap();
        assert_eq!(set.items.len(), 3);
        for inv in &set.items {
            assert!(a.is_poisson_central(&inv.poly));
        }
    }

    #[test]
    fn bb_translation_ranges() {
        let p = Partition::new(vec![4, 2]).unwrap();
        assert_eq!(bb_translate(&p, 1, 2, 1).unwrap(), VarLabel::new(2, 1, 3));
        assert_eq!(bb_translate(&p, 2, 1, 2).unwrap(), VarLabel::new(1, 2, 0));
        assert_eq!(bb_translate(&p, 2, 2, 1).unwrap(), VarLabel::new(2, 2, 1));
        assert!(bb_translate(&p, 2, 1, 1).is_err());
        assert!(bb_translate(&p, 3, 1, 0).is_err());
    }

    #[test]
    fn regular_block_invariants_are_single_variables() {
        let a = alg(&[5], AlgebraKind::Gl);
        let set = restricted_invariants(&a, &build_slice(&a).unwrap()).unwrap();
        for inv in &set.items {
            assert!(inv.poly.proportionality(&xi(1, 1, inv.ell - 1)).is_some());
        }
    }
}
