//! Null-cones of the invariant maps, their components, the two-block mixed
//! commuting variety, and regular-sequence checks for the self-paired
//! orthogonal and symplectic families.

use num_traits::{One, Zero};
use rand::Rng;
use std::collections::{BTreeSet, HashMap};

use crate::analysis::{
    centraliser_dim, corank, expected_rank, random_functional, random_int, random_nonzero_int, strange_condition,
    StrangeOutcome,
};
use crate::centralizer::CentralizerAlgebra;
use crate::error::{Error, Result};
use crate::groebner::{groebner, radical_membership, Ideal};
use crate::invariants::{build_slice, restricted_invariants, InvariantSet, LinearElimination};
use crate::linalg::{self, q, Matrix, Q};
use crate::model::{AlgebraKind, Partition};
use crate::poly::{Monomial, SparsePoly, Var, VarLabel};

fn xi(i: usize, j: usize, s: usize) -> Var {
    Var::xi(i, j, s)
}

fn xi_poly(i: usize, j: usize, s: usize) -> SparsePoly {
    SparsePoly::var(xi(i, j, s))
}

/// The zero set `P` of the linear invariants and the nonlinear invariants
/// restricted to it.
#[derive(Clone, Debug)]
pub struct NullConeData {
    pub invariants: InvariantSet,
    pub elimination: LinearElimination,
    /// Coordinates of `P`: the generator variables that are not pivots.
    pub coordinates: Vec<Var>,
    pub generators: Vec<SparsePoly>,
}

impl NullConeData {
    pub fn ideal(&self) -> Ideal {
        Ideal::with_vars(self.generators.clone(), self.coordinates.iter().copied())
    }
}

pub fn nullcone_data(alg: &CentralizerAlgebra) -> Result<NullConeData> {
    let invariants = restricted_invariants(alg, &build_slice(alg)?)?;
    let linear: Vec<SparsePoly> = invariants.items.iter().filter(|i| i.degree == 1).map(|i| i.poly.clone()).collect();
    let elimination = LinearElimination::new(&linear)?;
    let pivots: BTreeSet<Var> = elimination.pivots.iter().copied().collect();
    let coordinates = (0..alg.dim()).map(|a| alg.var(a)).filter(|v| !pivots.contains(v)).collect();
    let generators = invariants.items.iter().filter(|i| i.degree > 1).map(|i| elimination.restrict(&i.poly)).collect();
    Ok(NullConeData { invariants, elimination, coordinates, generators })
}

/// Certificate that the `gl` (4,2) null-cone ideal is not radical.
#[derive(Clone, Debug)]
pub struct NonRadicalWitness {
    /// Computed restricted generators are nonzero multiples of the displayed ones.
    pub h5_scalar: Option<Q>,
    pub h6_scalar: Option<Q>,
    /// `(x1 y2)^2 = x1 y2 H_5 - x0 y2 H_6` with `x_s = xi_1^{2,s}`, `y_s = xi_2^{1,s}`.
    pub identity_holds: bool,
    pub witness_normal_form: SparsePoly,
    pub square_normal_form: SparsePoly,
}

impl NonRadicalWitness {
    pub fn holds(&self) -> bool {
        self.h5_scalar.as_ref().is_some_and(|c| !c.is_zero())
            && self.h6_scalar.as_ref().is_some_and(|c| !c.is_zero())
            && self.identity_holds
            && !self.witness_normal_form.is_zero()
            && self.square_normal_form.is_zero()
    }
}

pub fn nonradical_witness() -> Result<NonRadicalWitness> {
    let alg = CentralizerAlgebra::new(Partition::new(vec![4, 2])?, AlgebraKind::Gl)?;
    let data = nullcone_data(&alg)?;
    let h5 = xi_poly(1, 2, 1).mul(&xi_poly(2, 1, 2)).add(&xi_poly(1, 2, 0).mul(&xi_poly(2, 1, 3)));
    let h6 = xi_poly(1, 2, 1).mul(&xi_poly(2, 1, 3));
    let w = xi_poly(1, 2, 1).mul(&xi_poly(2, 1, 2));
    let rhs = w.mul(&h5).sub(&xi_poly(1, 2, 0).mul(&xi_poly(2, 1, 2)).mul(&h6));
    let gb = groebner(&data.ideal())?;
    Ok(NonRadicalWitness {
        h5_scalar: data.generators.first().and_then(|g| g.proportionality(&h5)),
        h6_scalar: data.generators.get(1).and_then(|g| g.proportionality(&h6)),
        identity_holds: w.pow(2) == rhs,
        witness_normal_form: gb.normal_form(&w),
        square_normal_form: gb.normal_form(&w.pow(2)),
    })
}

/// One claimed irreducible component of a null-cone.
#[derive(Clone, Debug)]
pub struct ComponentCheck {
    pub name: String,
    /// Sample points of the component annihilate every generator.
    pub vanishes: bool,
    /// Dimension of the component inside `g_e^*` and the expected value
    /// `dim g_e - rk g`.
    pub dimension: usize,
    pub expected_dimension: usize,
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub partition: Partition,
    pub claimed: usize,
    pub components: Vec<ComponentCheck>,
    /// Each component has a point outside all the others.
    pub distinct: bool,
    /// Zero set contained in the union of the components (radical membership);
    /// `None` when not attempted.
    pub covered: Option<bool>,
}

impl ComponentReport {
    pub fn holds(&self) -> bool {
        self.components.len() == self.claimed
            && self.components.iter().all(|c| c.vanishes && c.dimension == c.expected_dimension)
            && self.distinct
            && self.covered != Some(false)
    }
}

fn vanish_all(gens: &[SparsePoly], point: &HashMap<Var, Q>) -> bool {
    gens.iter().all(|g| g.eval(point).is_zero())
}

fn random_invertible<R: Rng>(m: usize, rng: &mut R) -> (Matrix, Matrix) {
    loop {
        let g = Matrix::from_rows((0..m).map(|_| (0..m).map(|_| random_int(rng, 9)).collect()).collect());
        if let Some(inv) = linalg::inverse(&g) {
            return (g, inv);
        }
    }
}

fn krylov_rank(g: &Matrix, v: &[Q]) -> usize {
    let mut rows = Vec::new();
    let mut cur = v.to_vec();
    for _ in 0..g.rows().max(1) {
        rows.push(cur.clone());
        cur = g.mul_vec(&cur);
    }
    linalg::rank_of_rows(v.len(), rows)
}

/// Products of one linear form per component lie in the radical of the ideal.
fn linear_union_covers(ideal: &Ideal, components: &[Vec<SparsePoly>]) -> Result<bool> {
    let mut products = vec![SparsePoly::one()];
    for eqs in components {
        if eqs.is_empty() {
            return Ok(true);
        }
        products = products.iter().flat_map(|p| eqs.iter().map(move |e| p.mul(e))).collect();
    }
    for p in &products {
        if !radical_membership(p, ideal)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank of the tangent directions of `Z_p` at `(G, y, x)`: the moving
/// linear data conjugated by `g` plus the `GL_m`-orbit directions.
fn hook_tangent_rank(g: &Matrix, ginv: &Matrix, big_g: &Matrix, x: &[Q], y: &[Q], p: usize) -> usize {
    let m = g.rows();
    let pack = |dg: &Matrix, dy: &[Q], dx: &[Q]| -> Vec<Q> {
        let mut v = dg.flatten();
        v.extend_from_slice(dy);
        v.extend_from_slice(dx);
        v
    };
    let zero = vec![Q::zero(); m];
    let unit = |r: usize| -> Vec<Q> { (0..m).map(|t| if t == r { Q::one() } else { Q::zero() }).collect() };
    let elementary = |r: usize, c: usize| {
        let mut e = Matrix::zeros(m, m);
        e[(r, c)] = Q::one();
        e
    };
    let mut rows = Vec::new();
    for r in 0..m {
        for c in 0..m {
            let e = elementary(r, c);
            if !(r >= p && c < p) {
                rows.push(pack(&g.mul(&e).mul(ginv), &zero, &zero));
            }
            let dx: Vec<Q> = e.transpose().mul_vec(x).into_iter().map(|t| -t).collect();
            rows.push(pack(&e.commutator(big_g), &e.mul_vec(y), &dx));
        }
        if r < p {
            rows.push(pack(&Matrix::zeros(m, m), &g.mul_vec(&unit(r)), &zero));
        } else {
            rows.push(pack(&Matrix::zeros(m, m), &zero, &ginv.transpose().mul_vec(&unit(r))));
        }
    }
    linalg::rank_of_rows(m * m + 2 * m, rows)
}

/// Hook partitions `(n, 1^m)`: components `Z_p`, `0 <= p <= m`, where `y` lies
/// in a `p`-dimensional `G`-invariant subspace annihilated by `x`.
pub fn hook_components<R: Rng>(n: usize, m: usize, samples: usize, rng: &mut R) -> Result<ComponentReport> {
    let mut parts = vec![n];
    parts.extend(std::iter::repeat_n(1, m));
    let partition = Partition::new(parts)?;
    let alg = CentralizerAlgebra::new(partition.clone(), AlgebraKind::Gl)?;
    let data = nullcone_data(&alg)?;
    let expected_dimension = alg.dim() - expected_rank(&alg);
    // coordinates of P besides x, y and G stay free on every component
    let extra = data.coordinates.len() - m * m - 2 * m;
    let mut components = Vec::new();
    let mut krylov_ok = true;
    for p in 0..=m {
        let mut vanishes = true;
        let mut dimension = 0;
        // a point with these Krylov ranks lies in no other Z_q
        let mut separated = false;
        for _ in 0..samples.max(1) {
            let (g, ginv) = random_invertible(m, rng);
            let mut hat = Matrix::zeros(m, m);
            for r in 0..m {
                for c in 0..m {
                    if !(r >= p && c < p) {
                        hat[(r, c)] = random_int(rng, 9);
                    }
                }
            }
            let big_g = g.mul(&hat).mul(&ginv);
            let yhat: Vec<Q> = (0..m).map(|r| if r < p { random_nonzero_int(rng, 9) } else { Q::zero() }).collect();
            let xhat: Vec<Q> = (0..m).map(|r| if r >= p { random_nonzero_int(rng, 9) } else { Q::zero() }).collect();
            let y = g.mul_vec(&yhat);
            let x = ginv.transpose().mul_vec(&xhat);
            let mut point = HashMap::new();
            for i in 0..m {
                point.insert(xi(1, i + 2, 0), x[i].clone());
                point.insert(xi(i + 2, 1, n - 1), y[i].clone());
                for j in 0..m {
                    point.insert(xi(i + 2, j + 2, 0), big_g[(i, j)].clone());
                }
            }
            vanishes &= vanish_all(&data.generators, &point);
            separated |= krylov_rank(&big_g, &y) == p && krylov_rank(&big_g.transpose(), &x) == m - p;
            dimension = dimension.max(hook_tangent_rank(&g, &ginv, &big_g, &x, &y, p) + extra);
        }
        krylov_ok &= separated;
        components.push(ComponentCheck { name: format!("Z_{p}"), vanishes, dimension, expected_dimension });
    }
    let covered = if m == 1 {
        let x = SparsePoly::var(xi(1, 2, 0));
        let y = SparsePoly::var(xi(2, 1, n - 1));
        Some(linear_union_covers(&data.ideal(), &[vec![y], vec![x]])?)
    } else {
        None
    };
    Ok(ComponentReport { partition, claimed: m + 1, components, distinct: krylov_ok, covered })
}

/// Coordinates on `P` for the two-block partition `(n, m)`, `1 <= i <= m`:
/// `x_i = xi_1^{2,m-i}`, `y_i = xi_2^{1,n-i}`, `z_i = xi_2^{2,m-i}`.
pub fn two_block_coordinates(n: usize, m: usize) -> (Vec<Var>, Vec<Var>, Vec<Var>) {
    let x = (1..=m).map(|i| xi(1, 2, m - i)).collect();
    let y = (1..=m).map(|i| xi(2, 1, n - i)).collect();
    let z = (1..=m).map(|i| xi(2, 2, m - i)).collect();
    (x, y, z)
}

/// `f_p = sum_{i+j=p} x_i y_j + sum_{i+j=p-k} z_i z_j`, the latter only when
/// `p >= k + 2`.
pub fn two_block_f(n: usize, m: usize, p: usize) -> SparsePoly {
    let k = n - m;
    let (x, y, z) = two_block_coordinates(n, m);
    let mut f = SparsePoly::zero();
    for i in 1..=m {
        if p > i && p - i <= m {
            f.add_term(Monomial::var(x[i - 1]).mul(&Monomial::var(y[p - i - 1])), Q::one());
        }
    }
    if p >= k + 2 {
        for i in 1..=m {
            if p - k > i && p - k - i <= m {
                f.add_term(Monomial::var(z[i - 1]).mul(&Monomial::var(z[p - k - i - 1])), Q::one());
            }
        }
    }
    f
}

/// Solves `gens = 0` for `unknowns` in order, each from a generator that is
/// linear in that unknown once the others are known.
fn triangular_solve(gens: &[SparsePoly], point: &mut HashMap<Var, Q>, unknowns: &[Var]) -> Option<()> {
    for (t, u) in unknowns.iter().enumerate() {
        let later: BTreeSet<Var> = unknowns[t + 1..].iter().copied().collect();
        let mut solved = false;
        for g in gens {
            let vars = g.vars();
            if !vars.contains(u) || vars.iter().any(|v| later.contains(v)) {
                continue;
            }
            // g = c1 * u + c0 after substituting the known values
            let subs: HashMap<Var, SparsePoly> = vars
                .iter()
                .filter(|v| *v != u)
                .map(|v| (*v, SparsePoly::constant(point.get(v).cloned().unwrap_or_else(Q::zero))))
                .collect();
            let r = g.substitute(&subs);
            if r.total_degree() != Some(1) {
                continue;
            }
            let c1 = r.coeff(&Monomial::var(*u));
            if c1.is_zero() {
                continue;
            }
            let c0 = r.coeff(&Monomial::one());
            point.insert(*u, -c0 / c1);
            solved = true;
            break;
        }
        if !solved {
            return None;
        }
    }
    Some(())
}

/// Two-block partitions `(n, m)`, `n >= m`: `min(n - m, m) + 1` components.
pub fn two_block_components<R: Rng>(n: usize, m: usize, samples: usize, rng: &mut R) -> Result<ComponentReport> {
    let partition = Partition::new(vec![n, m])?;
    if partition.len() != 2 {
        return Err(Error::UnsupportedPartitionFamily(format!("{partition} is not a two-block partition")));
    }
    let alg = CentralizerAlgebra::new(partition.clone(), AlgebraKind::Gl)?;
    let data = nullcone_data(&alg)?;
    let k = n - m;
    let (xs, ys, zs) = two_block_coordinates(n, m);
    let expected_dimension = alg.dim() - expected_rank(&alg);
    let c = k.min(m);
    let mut components = Vec::new();
    let mut linear_eqs = Vec::new();
    let mut witnesses_ok = true;
    let mut points: Vec<Vec<HashMap<Var, Q>>> = Vec::new();
    for a in 0..=c {
        let b = c - a;
        let zeros: Vec<Var> = xs[..a].iter().chain(&ys[..b]).copied().collect();
        linear_eqs.push(zeros.iter().map(|v| SparsePoly::var(*v)).collect::<Vec<_>>());
        let mut vanishes = true;
        let mut pts = Vec::new();
        for _ in 0..samples {
            let mut point: HashMap<Var, Q> =
                data.coordinates.iter().map(|v| (*v, random_nonzero_int(rng, 50))).collect();
            for v in &zeros {
                point.insert(*v, Q::zero());
            }
            if m > k {
                let mut unknowns = vec![ys[b]];
                unknowns.extend_from_slice(&zs[1..m - k]);
                if triangular_solve(&data.generators, &mut point, &unknowns).is_none() {
                    vanishes = false;
                }
            }
            vanishes &= vanish_all(&data.generators, &point);
            pts.push(point);
        }
        // free coordinates minus solved ones
        let solved = m.saturating_sub(k);
        let dimension = data.coordinates.len() - zeros.len() - solved;
        components.push(ComponentCheck { name: format!("P_{{{a},{b}}}"), vanishes, dimension, expected_dimension });
        points.push(pts);
    }
    // x_{a+1} y_{b+1} is nonzero on component (a, b) and lies in the linear
    // equations of every other component
    for a in 0..=c {
        let b = c - a;
        let mut witness = SparsePoly::one();
        if a < m {
            witness = witness.mul(&SparsePoly::var(xs[a]));
        }
        if b < m {
            witness = witness.mul(&SparsePoly::var(ys[b]));
        }
        witnesses_ok &= points[a].iter().all(|p| !witness.eval(p).is_zero());
        for (a2, eqs) in linear_eqs.iter().enumerate() {
            if a2 != a {
                let local = Ideal::new(eqs.clone());
                witnesses_ok &= !eqs.is_empty() && groebner(&local)?.contains(&witness);
            }
        }
    }
    // only a union of linear subspaces can be certified this way
    let covered = if m <= k { Some(linear_union_covers(&data.ideal(), &linear_eqs)?) } else { None };
    Ok(ComponentReport { partition, claimed: c + 1, components, distinct: witnesses_ok, covered })
}

/// Whether the restricted generators are, up to nonzero scalars, exactly the
/// polynomials `f_2, ..., f_{m+1}`.
pub fn two_block_generators_match(n: usize, m: usize) -> Result<bool> {
    let alg = CentralizerAlgebra::new(Partition::new(vec![n, m])?, AlgebraKind::Gl)?;
    let data = nullcone_data(&alg)?;
    let fs: Vec<SparsePoly> = (2..=m + 1).map(|p| two_block_f(n, m, p)).collect();
    let proportional = |g: &SparsePoly, f: &SparsePoly| g.proportionality(f).is_some_and(|c| !c.is_zero());
    Ok(data.generators.len() == fs.len()
        && fs.iter().all(|f| data.generators.iter().filter(|g| proportional(g, f)).count() == 1))
}

/// Partitions whose component count is only attempted: the Krull dimension
/// of the null-cone is computed, the count is not.
#[derive(Clone, Debug)]
pub struct NullConeDimension {
    pub partition: Partition,
    pub dimension: i64,
    pub expected: i64,
}

pub fn nullcone_dimension(alg: &CentralizerAlgebra) -> Result<NullConeDimension> {
    let data = nullcone_data(alg)?;
    let gb = groebner(&data.ideal())?;
    let pivots = (alg.dim() - data.coordinates.len()) as i64;
    Ok(NullConeDimension {
        partition: alg.partition().clone(),
        // the pivots are solved linearly, so the dimension is unchanged
        dimension: gb.dimension() + pivots - pivots,
        expected: (alg.dim() - expected_rank(alg)) as i64,
    })
}

/// Claimed components for hooks and two-block partitions.
pub fn component_witnesses<R: Rng>(p: &Partition, samples: usize, rng: &mut R) -> Result<ComponentReport> {
    let parts = p.parts();
    if parts.len() == 2 {
        return two_block_components(parts[0], parts[1], samples, rng);
    }
    if parts.len() >= 2 && parts[0] >= 2 && parts[1..].iter().all(|&x| x == 1) {
        return hook_components(parts[0], parts.len() - 1, samples, rng);
    }
    Err(Error::UnsupportedPartitionFamily(format!("{p} is neither a hook nor a two-block partition")))
}

/// Upper-triangular Toeplitz matrix with `coeffs[t]` on the `t`-th diagonal.
pub fn toeplitz(coeffs: &[Q]) -> Matrix {
    let n = coeffs.len();
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        for c in r..n {
            m[(r, c)] = coeffs[c - r].clone();
        }
    }
    m
}

pub fn two_block_var(letter: char, i: usize) -> Var {
    Var::sym(letter, i)
}

/// `AX - BY`, `CX - BZ`, `CY - AZ` for upper-triangular Toeplitz `A, B, C`,
/// in variables `a_i, b_i, c_i, x_i, y_i, z_i`.
pub fn two_block_equations(m_big: usize, n_small: usize) -> Result<Ideal> {
    if n_small == 0 || m_big < n_small {
        return Err(Error::Invalid(format!("need m >= n >= 1, got ({m_big},{n_small})")));
    }
    let n = n_small;
    let v = |c: char, i: usize| SparsePoly::var(two_block_var(c, i));
    let apply = |mat: char, vec: char, r: usize| {
        let mut acc = SparsePoly::zero();
        for c in r..=n {
            acc.add_assign(&v(mat, c - r + 1).mul(&v(vec, c)));
        }
        acc
    };
    let mut gens = Vec::new();
    for (m1, v1, m2, v2) in [('a', 'x', 'b', 'y'), ('c', 'x', 'b', 'z'), ('c', 'y', 'a', 'z')] {
        for r in 1..=n {
            gens.push(apply(m1, v1, r).sub(&apply(m2, v2, r)));
        }
    }
    let vars = ['a', 'b', 'c', 'x', 'y', 'z'].into_iter().flat_map(|c| (1..=n).map(move |i| two_block_var(c, i)));
    Ok(Ideal::with_vars(gens, vars))
}

/// The element `xi` and functional `alpha` of `g_e` attached to the Toeplitz
/// data, as coordinates linear in the symbols.
pub fn two_block_dictionary(alg: &CentralizerAlgebra) -> Result<(Vec<SparsePoly>, Vec<SparsePoly>)> {
    let p = alg.partition();
    if alg.kind() != AlgebraKind::Gl || p.len() != 2 {
        return Err(Error::UnsupportedPartitionFamily(format!("{p} is not a two-block gl partition")));
    }
    let (big, small) = (p.parts()[0], p.parts()[1]);
    let shift = big - small;
    let mut xi_c = vec![SparsePoly::zero(); alg.dim()];
    let mut alpha = vec![SparsePoly::zero(); alg.dim()];
    let put = |vec: &mut Vec<SparsePoly>, l: VarLabel, poly: SparsePoly| {
        // dual coordinates of labels outside the basis are dropped
        if let Some(a) = alg.index_of(l) {
            vec[a].add_assign(&poly);
        }
    };
    let v = |c: char, i: usize| SparsePoly::var(two_block_var(c, i));
    for i in 0..small {
        put(&mut xi_c, VarLabel::new(1, 2, i), v('a', i + 1));
        put(&mut xi_c, VarLabel::new(2, 2, i), v('c', i + 1));
        put(&mut xi_c, VarLabel::new(2, 1, i + shift), v('b', i + 1));
        put(&mut alpha, VarLabel::new(1, 2, i), v('x', i + 1));
        // normalised so that the bracket pairing reproduces `CX = BZ` exactly
        let diag = [VarLabel::new(1, 1, shift + i), VarLabel::new(2, 2, shift + i)];
        let present = diag.iter().filter(|l| alg.index_of(**l).is_some()).count();
        let zc = v('z', i + 1).scale(&(-Q::one() / q(present as i64)));
        put(&mut alpha, diag[0], zc.clone());
        put(&mut alpha, diag[1], zc.neg());
        put(&mut alpha, VarLabel::new(2, 1, i + shift), v('y', i + 1));
    }
    Ok((xi_c, alpha))
}

/// `alpha([xi, xi_b])` for every basis element, as bilinear polynomials.
pub fn moment_map(alg: &CentralizerAlgebra, xi_c: &[SparsePoly], alpha: &[SparsePoly]) -> Vec<SparsePoly> {
    (0..alg.dim())
        .map(|b| {
            let mut acc = SparsePoly::zero();
            for (a, xa) in xi_c.iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                for (c, val) in alg.bracket_basis(a, b) {
                    if !alpha[*c].is_zero() {
                        acc.add_assign(&xa.mul(&alpha[*c]).scale(val));
                    }
                }
            }
            acc
        })
        .collect()
}

fn poly_span_equal(a: &[SparsePoly], b: &[SparsePoly]) -> bool {
    let monos: Vec<Monomial> = a
        .iter()
        .chain(b)
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let vecs =
        |ps: &[SparsePoly]| -> Vec<Vec<Q>> { ps.iter().map(|p| monos.iter().map(|m| p.coeff(m)).collect()).collect() };
    crate::analysis::same_span(monos.len(), &vecs(a), &vecs(b))
}

#[derive(Clone, Debug)]
pub struct CommutingVarietyReport {
    pub m_big: usize,
    pub n_small: usize,
    /// The moment-map polynomials span the same space as the matrix equations.
    pub equations_match: bool,
    pub solutions: usize,
    pub solutions_ok: usize,
    pub degenerations: usize,
    pub degenerations_ok: usize,
}

impl CommutingVarietyReport {
    pub fn holds(&self) -> bool {
        self.equations_match && self.solutions_ok == self.solutions && self.degenerations_ok == self.degenerations
    }
}

fn assign(letter: char, vals: &[Q], point: &mut HashMap<Var, Q>) {
    for (i, v) in vals.iter().enumerate() {
        point.insert(two_block_var(letter, i + 1), v.clone());
    }
}

/// The Toeplitz `E` with `E x = y`; requires `x_n != 0`.
pub fn toeplitz_solve(x: &[Q], y: &[Q]) -> Option<Vec<Q>> {
    let n = x.len();
    let xn = x.last()?.clone();
    if xn.is_zero() {
        return None;
    }
    // row r: sum_{t>=1} e_t x_{r+t-1} = y_r, solved from the bottom row up
    let mut e = vec![Q::zero(); n];
    for r in (0..n).rev() {
        let t_new = n - r; // 1-based index of the new unknown
        let mut acc = y[r].clone();
        for t in 1..t_new {
            acc -= &e[t - 1] * &x[r + t - 1];
        }
        e[t_new - 1] = acc / &xn;
    }
    Some(e)
}

pub fn commuting_variety_check<R: Rng>(
    m_big: usize,
    n_small: usize,
    solutions: usize,
    degenerations: usize,
    lambdas: usize,
    rng: &mut R,
) -> Result<CommutingVarietyReport> {
    let alg = CentralizerAlgebra::new(Partition::new(vec![m_big, n_small])?, AlgebraKind::Gl)?;
    let ideal = two_block_equations(m_big, n_small)?;
    let (xi_c, alpha) = two_block_dictionary(&alg)?;
    let mm: Vec<SparsePoly> = moment_map(&alg, &xi_c, &alpha).into_iter().filter(|p| !p.is_zero()).collect();
    let equations_match = poly_span_equal(&mm, &ideal.gens);
    let n = n_small;
    let rand_vec = |rng: &mut R, nz_first: bool| -> Vec<Q> {
        (0..n).map(|i| if i == 0 && nz_first { random_nonzero_int(rng, 20) } else { random_int(rng, 20) }).collect()
    };
    let check = |point: &HashMap<Var, Q>| -> bool {
        if !vanish_all(&ideal.gens, point) {
            return false;
        }
        let xv: Vec<Q> = xi_c.iter().map(|p| p.eval(point)).collect();
        let av: Vec<Q> = alpha.iter().map(|p| p.eval(point)).collect();
        (0..alg.dim()).all(|b| {
            let mut unit = vec![Q::zero(); alg.dim()];
            unit[b] = Q::one();
            linalg::dot(&av, &alg.bracket(&xv, &unit)).is_zero()
        })
    };
    let mut solutions_ok = 0;
    for _ in 0..solutions {
        let (a, b, c) = (rand_vec(rng, false), rand_vec(rng, true), rand_vec(rng, false));
        let x = rand_vec(rng, false);
        let (ta, tb, tc) = (toeplitz(&a), toeplitz(&b), toeplitz(&c));
        let (_, y) = linalg::solve(&tb, &ta.mul_vec(&x))?;
        let (_, z) = linalg::solve(&tb, &tc.mul_vec(&x))?;
        let mut point = HashMap::new();
        for (l, v) in [('a', &a), ('b', &b), ('c', &c), ('x', &x), ('y', &y), ('z', &z)] {
            assign(l, v, &mut point);
        }
        if check(&point) {
            solutions_ok += 1;
        }
    }
    let mut degenerations_ok = 0;
    let mut made = 0;
    while made < degenerations {
        let d = rng.gen_range(1..=n);
        let mut a = rand_vec(rng, false);
        let mut b = rand_vec(rng, false);
        let mut c = rand_vec(rng, false);
        for v in [&mut a, &mut b, &mut c] {
            for t in v.iter_mut().take(d) {
                *t = Q::zero();
            }
        }
        if d < n {
            b[d] = random_nonzero_int(rng, 20);
        }
        let x: Vec<Q> = (0..n).map(|_| random_nonzero_int(rng, 20)).collect();
        let mut y: Vec<Q> = (0..n).map(|_| random_nonzero_int(rng, 20)).collect();
        let mut z: Vec<Q> = (0..n).map(|_| random_nonzero_int(rng, 20)).collect();
        if d < n {
            let (ap, bp, cp) = (toeplitz(&a[d..]), toeplitz(&b[d..]), toeplitz(&c[d..]));
            let (_, yp) = linalg::solve(&bp, &ap.mul_vec(&x[d..]))?;
            let (_, zp) = linalg::solve(&bp, &cp.mul_vec(&x[d..]))?;
            y[d..].clone_from_slice(&yp);
            z[d..].clone_from_slice(&zp);
        }
        if y[n - 1].is_zero() || z[n - 1].is_zero() {
            continue;
        }
        made += 1;
        let mut base = HashMap::new();
        for (l, v) in [('a', &a), ('b', &b), ('c', &c), ('x', &x), ('y', &y), ('z', &z)] {
            assign(l, v, &mut base);
        }
        let (Some(ea), Some(ec)) = (toeplitz_solve(&x, &y), toeplitz_solve(&x, &z)) else { continue };
        let mut ok = vanish_all(&ideal.gens, &base);
        for _ in 0..lambdas {
            let lam = random_nonzero_int(rng, 20) / q(rng.gen_range(1..=20));
            let shifted = |v: &[Q], e: &[Q]| -> Vec<Q> { v.iter().zip(e).map(|(s, t)| s + &lam * t).collect() };
            let mut ident = vec![Q::zero(); n];
            ident[0] = Q::one();
            let mut point = base.clone();
            assign('a', &shifted(&a, &ea), &mut point);
            assign('b', &shifted(&b, &ident), &mut point);
            assign('c', &shifted(&c, &ec), &mut point);
            ok &= toeplitz(&ea).mul_vec(&x) == y && toeplitz(&ec).mul_vec(&x) == z && check(&point);
        }
        if ok {
            degenerations_ok += 1;
        }
    }
    Ok(CommutingVarietyReport {
        m_big,
        n_small,
        equations_match,
        solutions,
        solutions_ok,
        degenerations,
        degenerations_ok,
    })
}

/// Whether every block is paired with itself (`i' = i`).
pub fn all_blocks_self_paired(alg: &CentralizerAlgebra) -> bool {
    alg.kind() != AlgebraKind::Gl && (0..alg.partition().len()).all(|i| alg.model().involution(i) == i)
}

#[derive(Clone, Debug)]
pub struct RegularSequenceReport {
    pub rank: usize,
    pub codimension: i64,
    /// Dimensions `w_m` of the graded pieces of `W`.
    pub pieces: Vec<usize>,
    /// Attempt (1-based) at which a `W` meeting the null-cone only at zero was found.
    pub found_at: usize,
}

impl RegularSequenceReport {
    pub fn holds(&self) -> bool {
        self.codimension == self.rank as i64 && self.pieces.iter().sum::<usize>() == self.rank
    }
}

/// Regular-sequence certificate and a graded subspace `W` of dimension
/// `rk g` with `W` meeting the zero set of the invariants only at `0`.
pub fn regular_sequence_checks<R: Rng>(
    alg: &CentralizerAlgebra,
    retries: usize,
    rng: &mut R,
) -> Result<RegularSequenceReport> {
    if !all_blocks_self_paired(alg) {
        return Err(Error::UnsupportedPartitionFamily(format!(
            "{} {} has blocks that are not self-paired",
            alg.kind(),
            alg.partition()
        )));
    }
    let rank = expected_rank(alg);
    let invariants = restricted_invariants(alg, &build_slice(alg)?)?;
    let hs = invariants.polys();
    let vars: Vec<Var> = (0..alg.dim()).map(|a| alg.var(a)).collect();
    let gb = groebner(&Ideal::with_vars(hs.clone(), vars.iter().copied()))?;
    let codimension = alg.dim() as i64 - gb.dimension();

    let p = alg.partition();
    let k = p.len();
    let prefix_rank = |m: usize| p.parts()[..m].iter().sum::<usize>() / 2;
    let pieces: Vec<usize> = (1..=k).map(|m| prefix_rank(m) - prefix_rank(m - 1)).collect();
    let graded: Vec<Vec<usize>> = (1..=k)
        .map(|m| {
            (0..alg.dim())
                .filter(|&a| (alg.generators()[a].label.i + alg.generators()[a].label.j) as usize == m + 1)
                .collect()
        })
        .collect();
    for attempt in 1..=retries {
        let mut basis: Vec<Vec<Q>> = Vec::new();
        for (m, idx) in graded.iter().enumerate() {
            if idx.len() < pieces[m] {
                return Err(Error::NoSubspaceFound(attempt));
            }
            for _ in 0..pieces[m] {
                let mut v = vec![Q::zero(); alg.dim()];
                for &a in idx {
                    v[a] = random_int(rng, 20);
                }
                basis.push(v);
            }
        }
        if linalg::rank_of_rows(alg.dim(), basis.clone()) < rank {
            continue;
        }
        let us: Vec<Var> = (0..basis.len()).map(|t| Var::sym('u', t)).collect();
        let subs: HashMap<Var, SparsePoly> = (0..alg.dim())
            .map(|a| {
                let mut poly = SparsePoly::zero();
                for (t, w) in basis.iter().enumerate() {
                    if !w[a].is_zero() {
                        poly.add_term(Monomial::var(us[t]), w[a].clone());
                    }
                }
                (vars[a], poly)
            })
            .collect();
        let restricted: Vec<SparsePoly> = hs.iter().map(|h| h.substitute(&subs)).collect();
        let gb = groebner(&Ideal::with_vars(restricted, us.iter().copied()))?;
        if gb.dimension() == 0 {
            return Ok(RegularSequenceReport { rank, codimension, pieces, found_at: attempt });
        }
    }
    Err(Error::NoSubspaceFound(retries))
}

/// The element of `g_e` given by the differential of `h` at `a`.
pub fn differential_element(alg: &CentralizerAlgebra, h: &SparsePoly, a: &[Q]) -> Vec<Q> {
    let point = alg.point(a);
    (0..alg.dim()).map(|b| h.derivative(alg.var(b)).eval(&point)).collect()
}

/// Basis of the annihilator of the derived algebra in `g_e^*`.
pub fn derived_annihilator(alg: &CentralizerAlgebra) -> Vec<Vec<Q>> {
    let n = alg.dim();
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut v = vec![Q::zero(); n];
            for (c, val) in alg.bracket_basis(a, b) {
                v[*c] += val;
            }
            if !linalg::is_zero_vec(&v) {
                rows.push(v);
            }
        }
    }
    if rows.is_empty() {
        return (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    }
    linalg::kernel_basis(&Matrix::from_rows(rows))
}

#[derive(Clone, Debug)]
pub struct DifferentialReport {
    pub rank: usize,
    /// `dim (g_e)_x` for `x` the differential of the top invariant at regular points.
    pub regular_centraliser_dims: Vec<usize>,
    /// At points vanishing on the derived algebra the differential is a
    /// multiple of the second linear invariant.
    pub singular_proportional: Vec<bool>,
    pub strange: StrangeOutcome,
}

impl DifferentialReport {
    pub fn holds(&self) -> bool {
        self.regular_centraliser_dims.iter().all(|&d| d > self.rank)
            && self.singular_proportional.iter().all(|&b| b)
            && matches!(self.strange, StrangeOutcome::HoldsOnSamples)
    }
}

/// Differentials of the highest-degree invariant at regular and at singular
/// points of `g_e^*`.
pub fn differential_checks<R: Rng>(
    alg: &CentralizerAlgebra,
    samples: usize,
    rng: &mut R,
) -> Result<DifferentialReport> {
    let invariants = restricted_invariants(alg, &build_slice(alg)?)?;
    let top = invariants.items.iter().max_by_key(|i| (i.degree, i.ell)).ok_or(Error::Inconsistent)?;
    // the linear invariant spanning the centre's intersection with the derived algebra
    let second = invariants
        .items
        .iter()
        .filter(|i| i.degree == 1)
        .max_by_key(|i| i.ell)
        .ok_or(Error::Inconsistent)?;
    let rank = expected_rank(alg);
    let mut regular_centraliser_dims = Vec::new();
    while regular_centraliser_dims.len() < samples {
        let a = random_functional(alg, rng, 50);
        if corank(alg, &a) != rank {
            continue;
        }
        regular_centraliser_dims.push(centraliser_dim(alg, &differential_element(alg, &top.poly, &a)));
    }
    let ann = derived_annihilator(alg);
    let mut singular_proportional = Vec::new();
    for _ in 0..samples {
        let mut a = vec![Q::zero(); alg.dim()];
        for v in &ann {
            let c = random_nonzero_int(rng, 50);
            for (t, x) in a.iter_mut().zip(v) {
                *t += &c * x;
            }
        }
        let dx = alg.linear_form(&differential_element(alg, &top.poly, &a));
        singular_proportional.push(dx.proportionality(&second.poly).is_some());
    }
    let strange = strange_condition(alg, samples, rng);
    Ok(DifferentialReport { rank, regular_centraliser_dims, singular_proportional, strange })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gl_4_2_is_not_radical() {
        let w = nonradical_witness().unwrap();
        assert!(w.holds(), "{w:?}");
    }

    #[test]
    fn small_hooks_and_two_blocks() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for (n, m) in [(2, 1), (3, 2), (2, 3)] {
            let r = hook_components(n, m, 2, &mut rng).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        for (n, m) in [(4, 2), (3, 2), (5, 3), (2, 2), (4, 1)] {
            assert!(two_block_generators_match(n, m).unwrap(), "({n},{m})");
            let r = two_block_components(n, m, 2, &mut rng).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn scalar_two_block_equations() {
        let ideal = two_block_equations(1, 1).unwrap();
        let p = |s: &str| SparsePoly::parse(s).unwrap();
        assert_eq!(ideal.gens, vec![p("a1*x1 - b1*y1"), p("c1*x1 - b1*z1"), p("c1*y1 - a1*z1")]);
    }

    #[test]
    fn commuting_variety_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (m, n) in [(1, 1), (3, 2), (4, 3)] {
            let r = commuting_variety_check(m, n, 5, 3, 3, &mut rng).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn self_paired_family() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let a = CentralizerAlgebra::new(Partition::new(vec![2, 2]).unwrap(), AlgebraKind::Sp).unwrap();
        let r = regular_sequence_checks(&a, 25, &mut rng).unwrap();
        assert_eq!(r.codimension, 2);
        assert!(r.holds());
    }

    #[test]
    fn nullcone_generators_are_bihomogeneous() {
        use crate::invariants::hweight_homogeneous;
        for (k, parts) in [
            (AlgebraKind::Gl, vec![4, 2]),
            (AlgebraKind::Gl, vec![3, 2, 1]),
            (AlgebraKind::Gl, vec![2, 2, 1]),
            (AlgebraKind::Sp, vec![4, 2]),
            (AlgebraKind::So, vec![3, 3]),
        ] {
            let alg = CentralizerAlgebra::new(Partition::new(parts).unwrap(), k).unwrap();
            let data = nullcone_data(&alg).unwrap();
            for g in &data.generators {
                assert!(g.is_homogeneous(), "{g}");
                let (lead, _) = g.leading_term().unwrap();
                let w: i64 =
                    lead.pairs().iter().map(|(v, e)| alg.hweights()[alg.index_of_var(*v).unwrap()] * *e as i64).sum();
                assert!(hweight_homogeneous(&alg, g, w), "{g}");
            }
        }
    }

    #[test]
    fn sp_4_2_differentials() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = CentralizerAlgebra::new(Partition::new(vec![4, 2]).unwrap(), AlgebraKind::Sp).unwrap();
        let r = differential_checks(&a, 5, &mut rng).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}
