//! Centres, indices, regular functionals and commuting pairs in `g_e`.

use num_traits::{One, Zero};
use rand::Rng;
use std::collections::BTreeMap;

use crate::centralizer::{label_in_range, CentralizerAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, kernel_basis, q, Matrix, Q};
use crate::model::AlgebraKind;
use crate::poly::{SparsePoly, Var, VarLabel};

pub fn random_int<R: Rng>(rng: &mut R, bound: i64) -> Q {
    q(rng.gen_range(-bound..=bound))
}

pub fn random_nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> Q {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return q(x);
        }
    }
}

/// A functional with integer values drawn uniformly from `[-bound, bound]`.
pub fn random_functional<R: Rng>(alg: &CentralizerAlgebra, rng: &mut R, bound: i64) -> Vec<Q> {
    (0..alg.dim()).map(|_| random_int(rng, bound)).collect()
}

/// Rank of the ambient algebra (`gl_n` counted with rank `n`).
pub fn expected_rank(alg: &CentralizerAlgebra) -> usize {
    alg.kind().rank(alg.partition().n())
}

/// Basis of `g_e` expressed in generator coordinates of the subspace of
/// elements commuting with everything.
pub fn centre_basis(alg: &CentralizerAlgebra) -> Vec<Vec<Q>> {
    let n = alg.dim();
    let mut basis: Vec<Vec<Q>> = (0..n)
        .map(|a| {
            let mut v = vec![Q::zero(); n];
            v[a] = Q::one();
            v
        })
        .collect();
    for b in 0..n {
        if basis.is_empty() {
            break;
        }
        // columns: [z_r, xi_b] for the current basis z_r
        let mut m = Matrix::zeros(n, basis.len());
        let mut any = false;
        for (r, z) in basis.iter().enumerate() {
            for (a, za) in z.iter().enumerate() {
                if za.is_zero() {
                    continue;
                }
                for (c, v) in alg.bracket_basis(a, b) {
                    m[(*c, r)] += za * v;
                    any = true;
                }
            }
        }
        if !any || m.is_zero() {
            continue;
        }
        let ker = kernel_basis(&m);
        basis = ker
            .iter()
            .map(|w| {
                let mut v = vec![Q::zero(); n];
                for (r, wr) in w.iter().enumerate() {
                    if !wr.is_zero() {
                        for (a, za) in basis[r].iter().enumerate() {
                            if !za.is_zero() {
                                v[a] += wr * za;
                            }
                        }
                    }
                }
                v
            })
            .collect();
    }
    basis
}

/// `d_i` with the conventions `d_i = -1` past the last block.
fn d_signed(alg: &CentralizerAlgebra, i: usize) -> i64 {
    if i < alg.partition().len() {
        alg.partition().d(i) as i64
    } else {
        -1
    }
}

/// Whether the orthogonal centre contains the extra element
/// `xi_1^{2,d_2} - xi_2^{1,d_1}`.
pub fn has_extra_central_element(alg: &CentralizerAlgebra) -> bool {
    alg.kind() == AlgebraKind::So
        && alg.partition().len() >= 2
        && d_signed(alg, 1) > d_signed(alg, 2)
        && d_signed(alg, 0) % 2 == 0
        && d_signed(alg, 1) % 2 == 0
}

/// Closed-form dimension of the centre.
pub fn expected_centre_dim(alg: &CentralizerAlgebra) -> usize {
    let d1 = alg.partition().d(0);
    match alg.kind() {
        AlgebraKind::Gl => d1 + 1,
        _ => d1.div_ceil(2) + usize::from(has_extra_central_element(alg)),
    }
}

/// Coordinates of the powers `e^s` (`0 <= s <= d_1`) that lie in `g_e`.
pub fn e_powers(alg: &CentralizerAlgebra) -> Vec<Vec<Q>> {
    let e = alg.model().e();
    (0..=alg.partition().d(0))
        .filter_map(|s| {
            let x = e.pow(s as u32);
            if alg.model().preserves_form(&x) {
                alg.coordinates(&x)
            } else {
                None
            }
        })
        .collect()
}

pub fn extra_central_element(alg: &CentralizerAlgebra) -> Option<Vec<Q>> {
    if !has_extra_central_element(alg) {
        return None;
    }
    let p = alg.partition();
    let terms = [(VarLabel::new(1, 2, p.d(1)), Q::one()), (VarLabel::new(2, 1, p.d(0)), -Q::one())];
    alg.coordinates_of_labels(&terms)
}

#[derive(Clone, Debug)]
pub struct CentreReport {
    pub dim: usize,
    pub expected: usize,
    /// Powers of `e` lie in the centre.
    pub powers_central: bool,
    /// The centre is spanned by the powers of `e` and, when present, the extra element.
    pub spanned_by_formula: bool,
}

pub fn centre_report(alg: &CentralizerAlgebra) -> CentreReport {
    let centre = centre_basis(alg);
    let in_centre = |v: &Vec<Q>| linalg::express_in_span(&centre, v).is_some();
    let mut gens = e_powers(alg);
    let powers_central = gens.iter().all(in_centre);
    if has_extra_central_element(alg) {
        match extra_central_element(alg) {
            Some(x) => gens.push(x),
            None => gens.push(vec![Q::zero(); alg.dim()]),
        }
    }
    let spans = linalg::rank_of_rows(alg.dim(), gens.clone()) == centre.len() && gens.iter().all(in_centre);
    CentreReport { dim: centre.len(), expected: expected_centre_dim(alg), powers_central, spanned_by_formula: spans }
}

pub fn stabiliser(alg: &CentralizerAlgebra, alpha: &[Q]) -> Vec<Vec<Q>> {
    kernel_basis(&alg.kirillov_form(alpha))
}

pub fn corank(alg: &CentralizerAlgebra, alpha: &[Q]) -> usize {
    alg.dim() - linalg::rank(&alg.kirillov_form(alpha))
}

/// Minimum corank of `B_alpha` over random integer functionals.
pub fn index_estimate<R: Rng>(alg: &CentralizerAlgebra, samples: usize, bound: i64, rng: &mut R) -> usize {
    (0..samples.max(1)).map(|_| corank(alg, &random_functional(alg, rng, bound))).min().unwrap_or(0)
}

/// Dimension of the centraliser of `x` inside `g_e`.
pub fn centraliser_dim(alg: &CentralizerAlgebra, x: &[Q]) -> usize {
    alg.dim() - linalg::rank(&alg.ad_matrix(x))
}

/// Functional values on `gl`-labels, dropping labels outside the basis.
fn dual_sum(alg: &CentralizerAlgebra, terms: &[(VarLabel, Q)]) -> Vec<Q> {
    let mut out = vec![Q::zero(); alg.dim()];
    for (l, c) in terms {
        if let Some(a) = alg.index_of(*l) {
            out[a] += c;
        }
    }
    out
}

/// The torus action `rho(t)` on `g_e^*`: the coordinate of `(xi_i^{j,s})^*`
/// is scaled by `t^{i-j+1}`.
pub fn rho_action(alg: &CentralizerAlgebra, t: &Q, alpha: &[Q]) -> Result<Vec<Q>> {
    alpha
        .iter()
        .zip(alg.rhoweights())
        .map(|(c, w)| {
            let w = w.ok_or(Error::WrongKind)?;
            let tp = if w >= 0 { pow_q(t, w as u32) } else { Q::one() / pow_q(t, (-w) as u32) };
            Ok(c * tp)
        })
        .collect()
}

fn pow_q(t: &Q, k: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..k {
        acc *= t;
    }
    acc
}

#[derive(Clone, Debug)]
pub struct RegularityCertificate {
    pub alpha: Vec<Q>,
    pub beta: Vec<Q>,
    pub gamma: Vec<Q>,
    /// The stabiliser of `alpha` is spanned by the `xi_i^{i,s}`.
    pub alpha_stabiliser_ok: bool,
    pub alpha_corank: usize,
    pub beta_corank: usize,
    pub gamma_corank: usize,
    /// The explicit `eta_{i,s}` span the stabiliser of `gamma`.
    pub gamma_stabiliser_ok: bool,
    /// Number of sampled points `gamma + x alpha + y beta` with corank `n`.
    pub regular_points: usize,
    pub points: usize,
    pub scaling_ok: bool,
}

impl RegularityCertificate {
    pub fn holds(&self, n: usize) -> bool {
        self.plane_regular(n) && self.gamma_stabiliser_ok
    }

    /// Everything except the claimed shape of the stabiliser of `gamma`.
    pub fn plane_regular(&self, n: usize) -> bool {
        self.alpha_stabiliser_ok
            && self.alpha_corank == n
            && self.beta_corank == n
            && self.gamma_corank == n
            && self.regular_points == self.points
            && self.scaling_ok
    }
}

/// Certificate that the non-regular set of `g_e^*` has codimension at least 3
/// in type A.
pub fn regularity_certificate<R: Rng>(
    alg: &CentralizerAlgebra,
    points: usize,
    scalings: usize,
    rng: &mut R,
) -> Result<RegularityCertificate> {
    if alg.kind() != AlgebraKind::Gl {
        return Err(Error::Invalid("regularity certificate is implemented for gl only".into()));
    }
    let p = alg.partition().clone();
    let k = p.len();
    let n = p.n();
    // distinct nonzero a_i
    let mut a_vals: Vec<Q> = Vec::new();
    while a_vals.len() < k {
        let x = random_nonzero_int(rng, 1000);
        if !a_vals.contains(&x) {
            a_vals.push(x);
        }
    }
    let alpha =
        dual_sum(alg, &(0..k).map(|i| (VarLabel::new(i + 1, i + 1, p.d(i)), a_vals[i].clone())).collect::<Vec<_>>());
    let beta = dual_sum(
        alg,
        &(0..k.saturating_sub(1)).map(|i| (VarLabel::new(i + 2, i + 1, p.d(i)), Q::one())).collect::<Vec<_>>(),
    );
    let gamma = dual_sum(
        alg,
        &(0..k.saturating_sub(1)).map(|i| (VarLabel::new(i + 1, i + 2, p.d(i + 1)), Q::one())).collect::<Vec<_>>(),
    );

    let diag: Vec<Vec<Q>> = alg
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.i == l.j)
        .map(|(a, _)| {
            let mut v = vec![Q::zero(); alg.dim()];
            v[a] = Q::one();
            v
        })
        .collect();
    let stab_alpha = stabiliser(alg, &alpha);
    let alpha_stabiliser_ok = same_span(alg.dim(), &stab_alpha, &diag);

    let alpha_corank = stab_alpha.len();
    let beta_corank = corank(alg, &beta);
    let gamma_corank = corank(alg, &gamma);
    let mut etas = Vec::new();
    for i in 1..=k {
        for s in p.d(0) - p.d(i - 1)..=p.d(0) {
            let mut terms = Vec::new();
            for r in 0..=(k - i) {
                let (src, dst) = (i + r, 1 + r);
                if label_in_range(&p, src, dst, s) {
                    terms.push((VarLabel::new(src, dst, s), Q::one()));
                }
            }
            etas.push(dual_sum(alg, &terms));
        }
    }
    let form_gamma = alg.kirillov_form(&gamma);
    let etas_in_kernel = etas.iter().all(|v| linalg::is_zero_vec(&form_gamma.mul_vec(v)));
    let gamma_stabiliser_ok =
        etas.len() == n && etas_in_kernel && linalg::rank_of_rows(alg.dim(), etas.clone()) == gamma_corank;

    let mut regular_points = 0;
    for _ in 0..points {
        let (x, y) = (random_int(rng, 1000), random_int(rng, 1000));
        let pt: Vec<Q> = (0..alg.dim()).map(|a| &gamma[a] + &x * &alpha[a] + &y * &beta[a]).collect();
        if corank(alg, &pt) == n {
            regular_points += 1;
        }
    }

    let mut scaling_ok = true;
    for _ in 0..scalings {
        let t = random_nonzero_int(rng, 50) / q(rng.gen_range(1..=50));
        let (x, y) = (random_int(rng, 100), random_int(rng, 100));
        let pt: Vec<Q> = (0..alg.dim()).map(|a| &gamma[a] + &x * &alpha[a] + &y * &beta[a]).collect();
        let lhs = rho_action(alg, &t, &pt)?;
        let t2 = &t * &t;
        let rhs: Vec<Q> = (0..alg.dim()).map(|a| &gamma[a] + &x * &t * &alpha[a] + &y * &t2 * &beta[a]).collect();
        scaling_ok &= lhs == rhs && corank(alg, &lhs) == corank(alg, &pt);
    }

    Ok(RegularityCertificate {
        alpha,
        beta,
        gamma,
        alpha_stabiliser_ok,
        alpha_corank,
        beta_corank,
        gamma_corank,
        gamma_stabiliser_ok,
        regular_points,
        points,
        scaling_ok,
    })
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(dim: usize, a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let ra = linalg::rank_of_rows(dim, a.to_vec());
    let rb = linalg::rank_of_rows(dim, b.to_vec());
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && linalg::rank_of_rows(dim, both) == ra
}

#[derive(Clone, Debug)]
pub struct CommutingPair {
    pub x: Vec<Q>,
    pub nilpotent: bool,
    pub centraliser_dim: usize,
    pub expected: usize,
}

/// The element `x = sum_i xi_i^{i+1,0}` (symmetrised for the orthogonal and
/// symplectic cases) and the dimension of its centraliser in `g_e`.
pub fn commuting_pair(alg: &CentralizerAlgebra) -> CommutingPair {
    let k = alg.partition().len();
    let mut x = vec![Q::zero(); alg.dim()];
    for i in 1..k {
        let target = VarLabel::new(i, i + 1, 0);
        for (a, g) in alg.generators().iter().enumerate() {
            if g.label == target {
                x[a] += Q::one();
            } else if let Some((lp, sign)) = g.partner {
                if lp == target {
                    x[a] += q(sign as i64);
                }
            }
        }
    }
    let m = alg.element(&x);
    CommutingPair {
        nilpotent: alg.model().is_nilpotent(&m),
        centraliser_dim: centraliser_dim(alg, &x),
        expected: expected_rank(alg),
        x,
    }
}

/// A functional vanishing on `[x, g_e]`, drawn at random from that annihilator.
pub fn functional_killing_orbit<R: Rng>(alg: &CentralizerAlgebra, x: &[Q], rng: &mut R) -> Vec<Q> {
    let ad = alg.ad_matrix(x);
    // alpha must satisfy alpha . (column b) = 0 for every column
    let ann = kernel_basis(&ad.transpose());
    let mut alpha = vec![Q::zero(); alg.dim()];
    for v in &ann {
        let c = random_int(rng, 100);
        for (a, va) in v.iter().enumerate() {
            alpha[a] += &c * va;
        }
    }
    alpha
}

/// `d_a^m p` for every `m` below the degree of `p`, for each `p`.
pub fn shift_family(hs: &[SparsePoly], direction: &BTreeMap<Var, Q>) -> Vec<SparsePoly> {
    let mut out = Vec::new();
    for h in hs {
        let mut cur = h.clone();
        while !cur.is_zero() && cur.total_degree().unwrap_or(0) > 0 {
            out.push(cur.clone());
            cur = cur.directional_derivative(direction);
        }
    }
    out
}

pub fn pairwise_poisson_commute(alg: &CentralizerAlgebra, family: &[SparsePoly]) -> bool {
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if !alg.poisson(&family[i], &family[j]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Rank of the Jacobian of `polys` at a random integer point: the number of
/// algebraically independent elements, certified from below.
pub fn jacobian_rank<R: Rng>(alg: &CentralizerAlgebra, polys: &[SparsePoly], rng: &mut R) -> usize {
    let point = alg.point(&random_functional(alg, rng, 1000));
    let rows: Vec<Vec<Q>> =
        polys.iter().map(|p| (0..alg.dim()).map(|a| p.derivative(alg.var(a)).eval(&point)).collect()).collect();
    linalg::rank_of_rows(alg.dim(), rows)
}

/// Direction `d_a` built from functional values.
pub fn direction(alg: &CentralizerAlgebra, a: &[Q]) -> BTreeMap<Var, Q> {
    a.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (alg.var(i), c.clone())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrangeOutcome {
    HoldsOnSamples,
    FailsWithWitness { alpha: Vec<Q>, x: Vec<Q> },
}

/// Samples regular functionals `alpha` and elements `x` of their stabilisers,
/// looking for an `x` that is regular in `g_e`.
pub fn strange_condition<R: Rng>(alg: &CentralizerAlgebra, samples: usize, rng: &mut R) -> StrangeOutcome {
    let index = index_estimate(alg, 20, 1000, rng);
    let min_centraliser =
        (0..20).map(|_| centraliser_dim(alg, &random_functional(alg, rng, 1000))).min().unwrap_or(alg.dim());
    for _ in 0..samples {
        let alpha = random_functional(alg, rng, 1000);
        let stab = stabiliser(alg, &alpha);
        if stab.len() != index {
            continue;
        }
        let mut x = vec![Q::zero(); alg.dim()];
        for v in &stab {
            let c = random_int(rng, 1000);
            for (a, va) in v.iter().enumerate() {
                x[a] += &c * va;
            }
        }
        if centraliser_dim(alg, &x) == min_centraliser {
            return StrangeOutcome::FailsWithWitness { alpha, x };
        }
    }
    StrangeOutcome::HoldsOnSamples
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Partition;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(parts: &[usize], kind: AlgebraKind) -> CentralizerAlgebra {
        CentralizerAlgebra::new(Partition::new(parts.to_vec()).unwrap(), kind).unwrap()
    }

    #[test]
    fn centre_examples() {
        assert_eq!(centre_basis(&alg(&[4, 2], AlgebraKind::Sp)).len(), 2);
        assert_eq!(centre_basis(&alg(&[3, 1], AlgebraKind::So)).len(), 2);
        assert_eq!(centre_basis(&alg(&[5], AlgebraKind::Gl)).len(), 5);
        let r = centre_report(&alg(&[5, 3], AlgebraKind::So));
        assert_eq!((r.dim, r.expected), (3, 3));
        assert!(r.spanned_by_formula);
    }

    #[test]
    fn index_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(index_estimate(&alg(&[4, 2], AlgebraKind::Sp), 20, 1000, &mut rng), 3);
        assert_eq!(index_estimate(&alg(&[5], AlgebraKind::Gl), 20, 1000, &mut rng), 5);
    }

    #[test]
    fn generic_diagonal_functional_stabiliser() {
        let a = alg(&[4, 2], AlgebraKind::Gl);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = regularity_certificate(&a, 5, 3, &mut rng).unwrap();
        assert!(c.alpha_stabiliser_ok);
        assert_eq!(stabiliser(&a, &c.alpha).len(), 6);
        assert!(c.holds(6));
    }

    #[test]
    fn degenerate_orbit_witness() {
        let a = alg(&[3, 2, 2], AlgebraKind::So);
        let x = a.coordinates_of_labels(&[(VarLabel::new(2, 2, 0), q(1)), (VarLabel::new(3, 3, 0), q(-1))]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let alpha = functional_killing_orbit(&a, &x, &mut rng);
        let stab = stabiliser(&a, &alpha);
        assert!(linalg::express_in_span(&stab, &x).is_some());
        assert!(stab.len() >= 4);
    }

    #[test]
    fn strange_condition_outcomes() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(matches!(
            strange_condition(&alg(&[4], AlgebraKind::Gl), 5, &mut rng),
            StrangeOutcome::FailsWithWitness { .. }
        ));
        assert_eq!(strange_condition(&alg(&[4, 2], AlgebraKind::Sp), 10, &mut rng), StrangeOutcome::HoldsOnSamples);
    }
}
