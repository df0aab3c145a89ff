//! The model space of a nilpotent element: Jordan blocks, the invariant form
//! and the standard sl2-triple.

use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{inverse, q, Matrix, Q};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraKind {
    Gl,
    So,
    Sp,
}

impl AlgebraKind {
    /// Symmetry sign of the form: `+1` orthogonal, `-1` symplectic.
    pub fn epsilon(self) -> Option<i32> {
        match self {
            AlgebraKind::Gl => None,
            AlgebraKind::So => Some(1),
            AlgebraKind::Sp => Some(-1),
        }
    }

    pub fn is_classical_form(self) -> bool {
        self != AlgebraKind::Gl
    }

    /// Rank of the ambient algebra on an `n`-dimensional space (`gl_n` has rank `n`).
    pub fn rank(self, n: usize) -> usize {
        match self {
            AlgebraKind::Gl => n,
            AlgebraKind::So | AlgebraKind::Sp => n / 2,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Gl => "gl",
            AlgebraKind::So => "so",
            AlgebraKind::Sp => "sp",
        })
    }
}

/// A partition with parts in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d_i = lambda_i - 1` for the 0-based block `i`.
    pub fn d(&self, i: usize) -> usize {
        self.0[i] - 1
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse("parts must be positive".into()));
        }
        Self::new(parts)
    }

    /// Every partition of `n`, largest parts first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn is_admissible(&self, kind: AlgebraKind) -> bool {
        admissibility(self, kind).is_ok()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

fn admissibility(p: &Partition, kind: AlgebraKind) -> Result<()> {
    let bad_parity = match kind {
        AlgebraKind::Gl => return Ok(()),
        AlgebraKind::So => 0,
        AlgebraKind::Sp => 1,
    };
    for &part in p.parts() {
        let mult = p.parts().iter().filter(|&&x| x == part).count();
        if part % 2 == bad_parity && mult % 2 == 1 {
            return Err(Error::InadmissiblePartition {
                parts: p.parts().to_vec(),
                kind: kind.to_string(),
                reason: format!("part {part} occurs an odd number of times"),
            });
        }
    }
    Ok(())
}

/// Jordan-block model `V = sum V[i]`, `V[i] = span{e^s w_i : 0 <= s <= d_i}`.
///
/// Coordinates are ordered block by block, and inside a block by `s`.
#[derive(Clone, Debug)]
pub struct ModelSpace {
    partition: Partition,
    kind: AlgebraKind,
    offsets: Vec<usize>,
    e: Matrix,
    h: Matrix,
    f: Matrix,
    form: Option<Matrix>,
    form_inv: Option<Matrix>,
    involution: Vec<usize>,
    signs: Vec<i32>,
}

impl ModelSpace {
    pub fn new(partition: Partition, kind: AlgebraKind) -> Result<Self> {
        admissibility(&partition, kind)?;
        let k = partition.len();
        let n = partition.n();
        let mut offsets = Vec::with_capacity(k);
        let mut acc = 0;
        for &p in partition.parts() {
            offsets.push(acc);
            acc += p;
        }
        let mut e = Matrix::zeros(n, n);
        let mut h = Matrix::zeros(n, n);
        let mut f = Matrix::zeros(n, n);
        for i in 0..k {
            let d = partition.d(i);
            for s in 0..=d {
                let p = offsets[i] + s;
                h[(p, p)] = q(2 * s as i64 - d as i64);
                if s < d {
                    e[(p + 1, p)] = Q::one();
                }
                if s > 0 {
                    f[(p - 1, p)] = q((s * (d - s + 1)) as i64);
                }
            }
        }
        let mut involution: Vec<usize> = (0..k).collect();
        let mut signs = vec![1i32; k];
        let (form, form_inv) = match kind.epsilon() {
            None => (None, None),
            Some(eps) => {
                let mut i = 0;
                while i < k {
                    let d = partition.d(i);
                    let self_paired = (if d.is_multiple_of(2) { 1 } else { -1 }) * eps == 1;
                    if !self_paired {
                        involution[i] = i + 1;
                        involution[i + 1] = i;
                        signs[i + 1] = -1;
                        i += 2;
                    } else {
                        i += 1;
                    }
                }
                let mut j = Matrix::zeros(n, n);
                for i in 0..k {
                    let ip = involution[i];
                    let d = partition.d(i);
                    for a in 0..=d {
                        let b = d - a;
                        let sign = if a % 2 == 0 { signs[i] } else { -signs[i] };
                        j[(offsets[i] + a, offsets[ip] + b)] = q(sign as i64);
                    }
                }
                let inv = inverse(&j).expect("invariant form is nondegenerate");
                (Some(j), Some(inv))
            }
        };
        Ok(ModelSpace { partition, kind, offsets, e, h, f, form, form_inv, involution, signs })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.partition.n()
    }

    pub fn blocks(&self) -> usize {
        self.partition.len()
    }

    pub fn d(&self, i: usize) -> usize {
        self.partition.d(i)
    }

    /// Coordinate index of `e^s w_i`.
    pub fn pos(&self, i: usize, s: usize) -> usize {
        debug_assert!(s <= self.d(i));
        self.offsets[i] + s
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    pub fn h(&self) -> &Matrix {
        &self.h
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn form(&self) -> Option<&Matrix> {
        self.form.as_ref()
    }

    /// The block paired with block `i` by the form (identity for `gl`).
    pub fn involution(&self, i: usize) -> usize {
        self.involution[i]
    }

    /// `c_i = (w_i, e^{d_i} w_{i'})`.
    pub fn block_sign(&self, i: usize) -> i32 {
        self.signs[i]
    }

    /// The sign `eps(i,j,s)` defined by
    /// `(e^{d_j - s} w_j, e^s w_{j'}) = -eps(i,j,s) (w_i, e^{d_i} w_{i'})`.
    pub fn epsilon_sign(&self, i: usize, j: usize, s: usize) -> Result<i32> {
        if self.form.is_none() {
            return Err(Error::WrongKind);
        }
        let k = self.blocks();
        if i >= k || j >= k {
            return Err(Error::IndexOutOfRange { index: i.max(j) + 1, lo: 1, hi: k });
        }
        if s > self.d(j) {
            return Err(Error::IndexOutOfRange { index: s, lo: 0, hi: self.d(j) });
        }
        let parity = if (self.d(j) - s).is_multiple_of(2) { 1 } else { -1 };
        Ok(-parity * self.signs[i] * self.signs[j])
    }

    /// `(u, v)` for coordinate vectors.
    pub fn pair(&self, u: &[Q], v: &[Q]) -> Option<Q> {
        let j = self.form.as_ref()?;
        Some(crate::linalg::dot(u, &j.mul_vec(v)))
    }

    /// The involution `X -> -J^{-1} X^T J` whose fixed points form the
    /// orthogonal or symplectic algebra.
    pub fn sigma(&self, x: &Matrix) -> Option<Matrix> {
        let j = self.form.as_ref()?;
        let ji = self.form_inv.as_ref()?;
        Some(ji.mul(&x.transpose()).mul(j).scale(&-Q::one()))
    }

    /// Whether `X` preserves the form infinitesimally (always true for `gl`).
    pub fn preserves_form(&self, x: &Matrix) -> bool {
        match &self.form {
            None => true,
            Some(j) => x.transpose().mul(j).add(&j.mul(x)).is_zero(),
        }
    }

    /// Basis of the ambient algebra (`gl(V)` or the fixed points of the involution).
    pub fn ambient_basis(&self) -> Vec<Matrix> {
        let n = self.dim();
        let mut out = Vec::new();
        match (&self.form, &self.form_inv, self.kind.epsilon()) {
            (Some(_), Some(ji), Some(eps)) => {
                // X = J^{-1} S with S^T = -eps S.
                for a in 0..n {
                    for b in a..n {
                        if a == b && eps == 1 {
                            continue;
                        }
                        let mut s = Matrix::zeros(n, n);
                        s[(a, b)] = Q::one();
                        if a != b {
                            s[(b, a)] = q(-eps as i64);
                        }
                        out.push(ji.mul(&s));
                    }
                }
            }
            _ => {
                for a in 0..n {
                    for b in 0..n {
                        let mut m = Matrix::zeros(n, n);
                        m[(a, b)] = Q::one();
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    pub fn is_nilpotent(&self, x: &Matrix) -> bool {
        x.pow(self.dim() as u32).is_zero()
    }

    pub fn zero_matrix(&self) -> Matrix {
        Matrix::zeros(self.dim(), self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn models(max_n: usize) -> Vec<ModelSpace> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for p in Partition::all(n) {
                for kind in [AlgebraKind::Gl, AlgebraKind::So, AlgebraKind::Sp] {
                    if let Ok(m) = ModelSpace::new(p.clone(), kind) {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn admissibility_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert!(ModelSpace::new(p(&[4, 2]), AlgebraKind::Sp).is_ok());
        assert!(ModelSpace::new(p(&[3, 2, 2]), AlgebraKind::So).is_ok());
        assert!(matches!(ModelSpace::new(p(&[3, 2]), AlgebraKind::So), Err(Error::InadmissiblePartition { .. })));
        assert!(matches!(ModelSpace::new(p(&[3, 1]), AlgebraKind::Sp), Err(Error::InadmissiblePartition { .. })));
        assert_eq!(Partition::new(vec![]), Err(Error::EmptyPartition));
    }

    #[test]
    fn sl2_triple_relations() {
        for m in models(8) {
            let (e, h, f) = (m.e(), m.h(), m.f());
            assert_eq!(h.commutator(e), e.scale(&q(2)));
            assert_eq!(h.commutator(f), f.scale(&q(-2)));
            assert_eq!(e.commutator(f), *h);
            assert!(m.preserves_form(e), "{}", m.partition());
            assert!(m.preserves_form(h));
            assert!(m.preserves_form(f));
        }
    }

    #[test]
    fn form_symmetry_and_invariance() {
        for m in models(8) {
            let Some(j) = m.form() else { continue };
            let eps = m.kind().epsilon().unwrap();
            assert_eq!(j.transpose(), j.scale(&q(eps as i64)));
            assert!(m.e().transpose().mul(j).add(&j.mul(m.e())).is_zero());
            for i in 0..m.blocks() {
                let ip = m.involution(i);
                assert_eq!(m.involution(ip), i);
                assert_eq!(m.d(i), m.d(ip));
                assert!(ip == i || ip == i + 1 || ip + 1 == i);
                assert_eq!(j[(m.pos(i, 0), m.pos(ip, m.d(i)))], q(m.block_sign(i) as i64));
                if i <= ip {
                    assert_eq!(m.block_sign(i), 1);
                }
            }
            for i in 0..m.blocks() {
                for t in 0..m.blocks() {
                    for a in 0..=m.d(i) {
                        for b in 0..=m.d(t) {
                            for s in 1..=m.d(t).saturating_sub(b).min(m.d(i).saturating_sub(a)) {
                                // (w, e^s v) = (-1)^s (e^s w, v)
                                let lhs = j[(m.pos(i, a), m.pos(t, b + s))].clone();
                                let rhs = j[(m.pos(i, a + s), m.pos(t, b))].clone();
                                let sign = if s % 2 == 0 { q(1) } else { q(-1) };
                                assert_eq!(lhs, sign * rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn epsilon_sign_errors() {
        let p = Partition::new(vec![4, 2]).unwrap();
        let gl = ModelSpace::new(p.clone(), AlgebraKind::Gl).unwrap();
        assert_eq!(gl.epsilon_sign(0, 1, 0), Err(Error::WrongKind));
        let sp = ModelSpace::new(p, AlgebraKind::Sp).unwrap();
        assert!(matches!(sp.epsilon_sign(0, 1, 5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn symplectic_epsilon_product() {
        for m in models(9) {
            if m.kind() != AlgebraKind::Sp || m.d(0) % 2 == 0 {
                continue;
            }
            for i in 0..m.blocks() {
                for s in 0..=m.d(i) {
                    let a = m.epsilon_sign(i, 0, s).unwrap();
                    let b = m.epsilon_sign(0, i, m.d(i) - s).unwrap();
                    assert_eq!(a * b, -1);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn parse_round_trip(parts in proptest::collection::vec(1usize..6, 1..5)) {
            let p = Partition::new(parts).unwrap();
            let text: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
            prop_assert_eq!(Partition::parse(&text.join(",")).unwrap(), p);
        }
    }
}
