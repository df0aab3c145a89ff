//! The centraliser `g_e` of the nilpotent element in the model space: its
//! basis, structure constants and the Lie-Poisson bracket on `S(g_e)`.

use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Q};
use crate::model::{AlgebraKind, ModelSpace, Partition};
use crate::poly::{Monomial, SparsePoly, Var, VarLabel};

/// A basis vector of `g_e`: `xi_L` for `gl`, or `xi_L + sign * xi_L'` for the
/// orthogonal and symplectic cases.
#[derive(Clone, Debug)]
pub struct Generator {
    pub label: VarLabel,
    pub partner: Option<(VarLabel, i32)>,
    pub matrix: Matrix,
}

impl Generator {
    /// The `gl`-labels of the generator with their coefficients.
    pub fn label_terms(&self) -> Vec<(VarLabel, Q)> {
        let mut out = vec![(self.label, Q::one())];
        if let Some((l, s)) = self.partner {
            out.push((l, q(s as i64)));
        }
        out
    }
}

pub type Sparse = Vec<(usize, Q)>;

#[derive(Clone, Debug)]
pub struct CentralizerAlgebra {
    model: ModelSpace,
    gens: Vec<Generator>,
    index: HashMap<VarLabel, usize>,
    structure: Vec<Vec<Sparse>>,
    hweights: Vec<i64>,
    rhoweights: Vec<Option<i64>>,
}

/// Labels `(i, j, s)` of the `gl`-centraliser basis, in lexicographic order.
pub fn gl_labels(p: &Partition) -> Vec<VarLabel> {
    let k = p.len();
    let mut out = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let lo = p.d(j).saturating_sub(p.d(i));
            for s in lo..=p.d(j) {
                out.push(VarLabel::new(i + 1, j + 1, s));
            }
        }
    }
    out
}

/// Whether `(i, j, s)` names an element of the `gl`-centraliser.
pub fn label_in_range(p: &Partition, i: usize, j: usize, s: usize) -> bool {
    i >= 1 && j >= 1 && i <= p.len() && j <= p.len() && s <= p.d(j - 1) && s + p.d(i - 1) >= p.d(j - 1)
}

/// Matrix of `xi_i^{j,s}`: `e^r w_i -> e^{r+s} w_j`.
pub fn label_matrix(m: &ModelSpace, l: VarLabel) -> Matrix {
    let (i, j, s) = (l.bi(), l.bj(), l.shift());
    let mut x = m.zero_matrix();
    for r in 0..=m.d(i) {
        if r + s > m.d(j) {
            break;
        }
        x[(m.pos(j, r + s), m.pos(i, r))] = Q::one();
    }
    x
}

/// Coefficient of `xi_i^{j,s}` in an element of the `gl`-centraliser:
/// the coefficient of `e^s w_j` in `X w_i`.
pub fn label_coordinate(m: &ModelSpace, x: &Matrix, l: VarLabel) -> Q {
    x[(m.pos(l.bj(), l.shift()), m.pos(l.bi(), 0))].clone()
}

/// Commutator of two `gl`-labels from the closed formula
/// `[xi_i^{j,s}, xi_a^{b,r}] = d_{b,i} xi_a^{j,r+s} - d_{a,j} xi_i^{b,r+s}`,
/// dropping terms whose shift leaves the block.
pub fn formula_bracket(p: &Partition, x: VarLabel, y: VarLabel) -> Vec<(VarLabel, Q)> {
    let mut out = Vec::new();
    let s = x.shift() + y.shift();
    if y.j == x.i && s <= p.d(x.bj()) {
        out.push((VarLabel::new(y.i as usize, x.j as usize, s), Q::one()));
    }
    if y.i == x.j && s <= p.d(y.bj()) {
        out.push((VarLabel::new(x.i as usize, y.j as usize, s), -Q::one()));
    }
    let mut merged: BTreeMap<VarLabel, Q> = BTreeMap::new();
    for (l, c) in out {
        *merged.entry(l).or_insert_with(Q::zero) += c;
    }
    merged.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl CentralizerAlgebra {
    pub fn new(partition: Partition, kind: AlgebraKind) -> Result<Self> {
        Self::from_model(ModelSpace::new(partition, kind)?)
    }

    pub fn from_model(model: ModelSpace) -> Result<Self> {
        let p = model.partition().clone();
        let mut gens = Vec::new();
        let labels = gl_labels(&p);
        match model.kind() {
            AlgebraKind::Gl => {
                for l in labels {
                    gens.push(Generator { label: l, partner: None, matrix: label_matrix(&model, l) });
                }
            }
            _ => {
                let label_set: std::collections::BTreeSet<VarLabel> = labels.iter().copied().collect();
                for &l in &labels {
                    let x = label_matrix(&model, l);
                    let y = model.sigma(&x).expect("form present");
                    let image: Vec<(VarLabel, Q)> = labels
                        .iter()
                        .map(|&m| (m, label_coordinate(&model, &y, m)))
                        .filter(|(_, c)| !c.is_zero())
                        .collect();
                    if image.len() != 1 || !label_set.contains(&image[0].0) {
                        return Err(Error::Invalid(format!("involution does not permute labels at {l}")));
                    }
                    let (lp, c) = image[0].clone();
                    let sign: i32 = if c == Q::one() {
                        1
                    } else if c == -Q::one() {
                        -1
                    } else {
                        return Err(Error::Invalid(format!("involution scales {l} by {c}")));
                    };
                    if lp == l {
                        if sign == 1 {
                            gens.push(Generator { label: l, partner: None, matrix: x });
                        }
                    } else if l < lp {
                        let matrix = x.add(&y);
                        gens.push(Generator { label: l, partner: Some((lp, sign)), matrix });
                    }
                }
            }
        }
        let index = gens.iter().enumerate().map(|(a, g)| (g.label, a)).collect();
        let hweights = gens
            .iter()
            .map(|g| {
                let l = g.label;
                2 * l.shift() as i64 + p.d(l.bi()) as i64 - p.d(l.bj()) as i64
            })
            .collect();
        let rhoweights = gens
            .iter()
            .map(|g| {
                let w = |l: VarLabel| l.i as i64 - l.j as i64 + 1;
                match g.partner {
                    None => Some(w(g.label)),
                    Some((lp, _)) => (w(lp) == w(g.label)).then(|| w(g.label)),
                }
            })
            .collect();
        let mut alg = CentralizerAlgebra { model, gens, index, structure: Vec::new(), hweights, rhoweights };
        alg.structure = alg.compute_structure()?;
        Ok(alg)
    }

    fn compute_structure(&self) -> Result<Vec<Vec<Sparse>>> {
        let n = self.dim();
        let mut table = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in a + 1..n {
                let c = self.gens[a].matrix.commutator(&self.gens[b].matrix);
                let coords = self
                    .coordinates(&c)
                    .ok_or_else(|| Error::Invalid(format!("bracket of generators {a},{b} leaves g_e")))?;
                let sparse: Sparse = coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                table[b][a] = sparse.iter().map(|(i, x)| (*i, -x.clone())).collect();
                table[a][b] = sparse;
            }
        }
        Ok(table)
    }

    pub fn model(&self) -> &ModelSpace {
        &self.model
    }

    pub fn partition(&self) -> &Partition {
        self.model.partition()
    }

    pub fn kind(&self) -> AlgebraKind {
        self.model.kind()
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn labels(&self) -> Vec<VarLabel> {
        self.gens.iter().map(|g| g.label).collect()
    }

    pub fn var(&self, a: usize) -> Var {
        Var::Xi(self.gens[a].label)
    }

    pub fn index_of(&self, l: VarLabel) -> Option<usize> {
        self.index.get(&l).copied()
    }

    pub fn index_of_var(&self, v: Var) -> Option<usize> {
        match v {
            Var::Xi(l) => self.index_of(l),
            Var::Sym(..) => None,
        }
    }

    /// `ad h` eigenvalue of each generator.
    pub fn hweights(&self) -> &[i64] {
        &self.hweights
    }

    /// Exponent of `t` in the torus action on the dual vector of each generator;
    /// `None` when the generator is not homogeneous for that action.
    pub fn rhoweights(&self) -> &[Option<i64>] {
        &self.rhoweights
    }

    /// Sparse expansion of `[xi_a, xi_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &Sparse {
        &self.structure[a][b]
    }

    pub fn structure_table(&self) -> &Vec<Vec<Sparse>> {
        &self.structure
    }

    /// Coordinates of a matrix in `g_e`, or `None` if it does not lie in `g_e`.
    pub fn coordinates(&self, x: &Matrix) -> Option<Vec<Q>> {
        let coords: Vec<Q> = self.gens.iter().map(|g| label_coordinate(&self.model, x, g.label)).collect();
        (self.element(&coords) == *x).then_some(coords)
    }

    /// Coordinates of a combination of `gl`-labels, if it lies in `g_e`.
    pub fn coordinates_of_labels(&self, terms: &[(VarLabel, Q)]) -> Option<Vec<Q>> {
        let mut want: BTreeMap<VarLabel, Q> = BTreeMap::new();
        for (l, c) in terms {
            *want.entry(*l).or_insert_with(Q::zero) += c;
        }
        want.retain(|_, c| !c.is_zero());
        let coords: Vec<Q> = self.gens.iter().map(|g| want.get(&g.label).cloned().unwrap_or_else(Q::zero)).collect();
        let mut back: BTreeMap<VarLabel, Q> = BTreeMap::new();
        for (g, c) in self.gens.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (l, x) in g.label_terms() {
                *back.entry(l).or_insert_with(Q::zero) += c * x;
            }
        }
        back.retain(|_, c| !c.is_zero());
        (back == want).then_some(coords)
    }

    pub fn element(&self, coords: &[Q]) -> Matrix {
        let mut x = self.model.zero_matrix();
        for (g, c) in self.gens.iter().zip(coords) {
            x.add_scaled(c, &g.matrix);
        }
        x
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let f = xa * yb;
                for (c, v) in &self.structure[a][b] {
                    out[*c] += &f * v;
                }
            }
        }
        out
    }

    /// Matrix of `ad x` on `g_e`: column `b` holds the coordinates of `[x, xi_b]`.
    pub fn ad_matrix(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..n {
                for (c, v) in &self.structure[a][b] {
                    m[(*c, b)] += xa * v;
                }
            }
        }
        m
    }

    /// The skew form `B_alpha(a, b) = alpha([xi_a, xi_b])`.
    pub fn kirillov_form(&self, alpha: &[Q]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for a in 0..n {
            for b in a + 1..n {
                let mut acc = Q::zero();
                for (c, v) in &self.structure[a][b] {
                    if !alpha[*c].is_zero() {
                        acc += v * &alpha[*c];
                    }
                }
                if !acc.is_zero() {
                    m[(b, a)] = -acc.clone();
                    m[(a, b)] = acc;
                }
            }
        }
        m
    }

    /// `[xi_a, xi_b]` as a linear polynomial in the generator variables.
    pub fn bracket_poly(&self, a: usize, b: usize) -> SparsePoly {
        SparsePoly::from_terms(self.structure[a][b].iter().map(|(c, v)| (Monomial::var(self.var(*c)), v.clone())))
    }

    /// Lie-Poisson bracket `{p, q} = sum_{a,b} d_a p d_b q [xi_a, xi_b]`.
    pub fn poisson(&self, p: &SparsePoly, q2: &SparsePoly) -> SparsePoly {
        let dp = self.partials(p);
        let dq = self.partials(q2);
        let mut out = SparsePoly::zero();
        for (a, pa) in &dp {
            for (b, qb) in &dq {
                if self.structure[*a][*b].is_empty() {
                    continue;
                }
                let prod = pa.mul(qb);
                out.add_assign(&prod.mul(&self.bracket_poly(*a, *b)));
            }
        }
        out
    }

    /// `{p, xi_b}`.
    pub fn poisson_with_generator(&self, p: &SparsePoly, b: usize) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (a, pa) in self.partials(p) {
            if self.structure[a][b].is_empty() {
                continue;
            }
            out.add_assign(&pa.mul(&self.bracket_poly(a, b)));
        }
        out
    }

    pub fn is_poisson_central(&self, p: &SparsePoly) -> bool {
        use num_traits::ToPrimitive;
        use rayon::prelude::*;
        // (monomial with one factor removed, coefficient) per generator index
        let mut cofactors: Vec<Vec<(Monomial, Q)>> = vec![Vec::new(); self.dim()];
        for (m, c) in p.terms() {
            for (v, e) in m.pairs() {
                let Some(a) = self.index_of_var(*v) else { return false };
                let rest = m.div(&Monomial::var(*v)).expect("divisible");
                cofactors[a].push((rest, c * q(*e as i64)));
            }
        }
        let small = |x: &Q| if x.is_integer() { x.to_integer().to_i64() } else { None };
        let fast = cofactors.iter().flatten().all(|(_, c)| small(c).is_some())
            && self.structure.iter().flatten().flatten().all(|(_, v)| small(v).is_some());
        let int_cofactors: Vec<Vec<(Monomial, i64)>> = if fast {
            cofactors.iter().map(|t| t.iter().map(|(m, c)| (m.clone(), small(c).unwrap())).collect()).collect()
        } else {
            Vec::new()
        };
        (0..self.dim()).into_par_iter().all(|b| {
            if fast {
                let mut acc: HashMap<Monomial, i128> = HashMap::new();
                for (a, terms) in int_cofactors.iter().enumerate() {
                    for (c, val) in &self.structure[a][b] {
                        let x = Monomial::var(self.var(*c));
                        let val = small(val).unwrap() as i128;
                        for (rest, coeff) in terms {
                            *acc.entry(rest.mul(&x)).or_insert(0) += *coeff as i128 * val;
                        }
                    }
                }
                acc.values().all(|v| *v == 0)
            } else {
                let mut acc: HashMap<Monomial, Q> = HashMap::new();
                for (a, terms) in cofactors.iter().enumerate() {
                    for (c, val) in &self.structure[a][b] {
                        let x = Monomial::var(self.var(*c));
                        for (rest, coeff) in terms {
                            *acc.entry(rest.mul(&x)).or_insert_with(Q::zero) += coeff * val;
                        }
                    }
                }
                acc.values().all(Zero::is_zero)
            }
        })
    }

    fn partials(&self, p: &SparsePoly) -> Vec<(usize, SparsePoly)> {
        p.vars()
            .into_iter()
            .map(|v| {
                let a = self.index_of_var(v).expect("polynomial variable outside g_e");
                (a, p.derivative(v))
            })
            .collect()
    }

    /// Expands a `gl`-label bracket bilinearly over generators and returns
    /// the coordinates, cross-checking membership in `g_e`.
    pub fn formula_bracket_coords(&self, a: usize, b: usize) -> Option<Vec<Q>> {
        let p = self.partition();
        let mut acc: Vec<(VarLabel, Q)> = Vec::new();
        for (la, ca) in self.gens[a].label_terms() {
            for (lb, cb) in self.gens[b].label_terms() {
                for (l, c) in formula_bracket(p, la, lb) {
                    acc.push((l, &ca * &cb * c));
                }
            }
        }
        self.coordinates_of_labels(&acc)
    }

    /// Indices `(a, b)` where the closed-form bracket disagrees with the
    /// matrix commutator.
    pub fn formula_mismatches(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let mut from_table = vec![Q::zero(); n];
                for (c, v) in &self.structure[a][b] {
                    from_table[*c] = v.clone();
                }
                if self.formula_bracket_coords(a, b).as_ref() != Some(&from_table) {
                    bad.push((a, b));
                }
            }
        }
        bad
    }

    /// Checks the Jacobi identity on the given triples of generator indices.
    pub fn jacobi_holds(&self, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> bool {
        let n = self.dim();
        let unit = |a: usize| {
            let mut v = vec![Q::zero(); n];
            v[a] = Q::one();
            v
        };
        triples.into_iter().all(|(a, b, c)| {
            let (x, y, z) = (unit(a), unit(b), unit(c));
            let t1 = self.bracket(&self.bracket(&x, &y), &z);
            let t2 = self.bracket(&self.bracket(&y, &z), &x);
            let t3 = self.bracket(&self.bracket(&z, &x), &y);
            t1.iter().zip(&t2).zip(&t3).all(|((p, q2), r)| (p + q2 + r).is_zero())
        })
    }

    /// A functional given by its values on the listed `gl`-labels; labels that
    /// are not generators of `g_e` are rejected.
    pub fn functional(&self, values: &[(VarLabel, Q)]) -> Result<Vec<Q>> {
        let mut out = vec![Q::zero(); self.dim()];
        for (l, c) in values {
            let a = self
                .index_of(*l)
                .ok_or_else(|| Error::Invalid(format!("{l} is not a basis label of this centraliser")))?;
            out[a] += c;
        }
        Ok(out)
    }

    /// The polynomial `sum_a x_a xi_a` for a coordinate vector `x`.
    pub fn linear_form(&self, x: &[Q]) -> SparsePoly {
        SparsePoly::from_terms(
            x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(a, c)| (Monomial::var(self.var(a)), c.clone())),
        )
    }

    /// Point of `g_e^*` as a variable assignment for evaluating polynomials.
    pub fn point(&self, alpha: &[Q]) -> HashMap<Var, Q> {
        alpha.iter().enumerate().map(|(a, c)| (self.var(a), c.clone())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kernel_basis;

    fn all_algebras(max_n: usize) -> Vec<CentralizerAlgebra> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for p in Partition::all(n) {
                for kind in [AlgebraKind::Gl, AlgebraKind::So, AlgebraKind::Sp] {
                    if let Ok(a) = CentralizerAlgebra::new(p.clone(), kind) {
                        out.push(a);
                    }
                }
            }
        }
        out
    }

    /// `dim g_e` from the kernel of `ad e` on the ambient algebra.
    fn kernel_dim(m: &ModelSpace) -> usize {
        let basis = m.ambient_basis();
        let n2 = m.dim() * m.dim();
        let mut a = Matrix::zeros(n2, basis.len());
        for (c, x) in basis.iter().enumerate() {
            for (r, v) in m.e().commutator(x).flatten().into_iter().enumerate() {
                a[(r, c)] = v;
            }
        }
        kernel_basis(&a).len()
    }

    #[test]
    fn dimension_matches_kernel_of_ad_e() {
        for alg in all_algebras(6) {
            assert_eq!(alg.dim(), kernel_dim(alg.model()), "{} {}", alg.kind(), alg.partition());
            if alg.kind() == AlgebraKind::Gl {
                let p = alg.partition().parts();
                let expect: usize = p.iter().flat_map(|a| p.iter().map(move |b| a.min(b))).sum();
                assert_eq!(alg.dim(), expect);
            }
        }
    }

    #[test]
    fn generators_commute_with_e_and_preserve_form() {
        for alg in all_algebras(7) {
            for g in alg.generators() {
                assert!(g.matrix.commutator(alg.model().e()).is_zero());
                assert!(alg.model().preserves_form(&g.matrix));
            }
        }
    }

    #[test]
    fn closed_form_bracket_matches_matrices() {
        for alg in all_algebras(6) {
            assert!(alg.formula_mismatches().is_empty(), "{} {}", alg.kind(), alg.partition());
        }
    }

    #[test]
    fn partner_sign_matches_epsilon() {
        for alg in all_algebras(7) {
            let m = alg.model();
            for g in alg.generators() {
                let Some((lp, sign)) = g.partner else { continue };
                // g = xi_i^{j, d_j - s} + eps(i,j,s) xi_{j'}^{i', d_i - s}
                let (i, j) = (g.label.bi(), g.label.bj());
                let s = m.d(j) - g.label.shift();
                assert_eq!(lp, VarLabel::new(m.involution(j) + 1, m.involution(i) + 1, m.d(i) - s));
                assert_eq!(sign, m.epsilon_sign(i, j, s).unwrap(), "{} {}", alg.kind(), alg.partition());
            }
        }
    }

    #[test]
    fn hweights_are_ad_h_eigenvalues() {
        for alg in all_algebras(6) {
            for (g, w) in alg.generators().iter().zip(alg.hweights()) {
                let c = alg.model().h().commutator(&g.matrix);
                assert_eq!(c, g.matrix.scale(&q(*w)));
            }
        }
    }

    #[test]
    fn jacobi_on_small_algebras() {
        for alg in all_algebras(5) {
            let n = alg.dim();
            let triples = (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
            assert!(alg.jacobi_holds(triples));
        }
    }

    #[test]
    fn symplectic_four_two_brackets() {
        let alg = CentralizerAlgebra::new(Partition::new(vec![4, 2]).unwrap(), AlgebraKind::Sp).unwrap();
        assert_eq!(alg.dim(), 5);
        let lab = |i, j, s| VarLabel::new(i, j, s);
        let names: Vec<String> = alg.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["xi[1,1,1]", "xi[1,1,3]", "xi[1,2,0]", "xi[1,2,1]", "xi[2,2,1]"]);
        let a11 = alg.index_of(lab(1, 1, 1)).unwrap();
        let a13 = alg.index_of(lab(1, 1, 3)).unwrap();
        let x = alg.index_of(lab(1, 2, 0)).unwrap();
        let eta = alg.index_of(lab(1, 2, 1)).unwrap();
        let a22 = alg.index_of(lab(2, 2, 1)).unwrap();
        assert_eq!(alg.generators()[x].partner, Some((lab(2, 1, 2), -1)));
        assert_eq!(alg.generators()[eta].partner, Some((lab(2, 1, 3), 1)));
        let mut nonzero = Vec::new();
        for a in 0..5 {
            for b in 0..5 {
                if !alg.bracket_basis(a, b).is_empty() {
                    nonzero.push((a, b));
                }
            }
        }
        assert_eq!(alg.bracket_basis(x, a11), &vec![(eta, q(1))]);
        assert_eq!(alg.bracket_basis(a22, x), &vec![(eta, q(1))]);
        assert_eq!(alg.bracket_basis(eta, x), &vec![(a13, q(2))]);
        assert_eq!(nonzero.len(), 6);
    }
}
