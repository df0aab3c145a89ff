//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by monomials under the graded reverse
//! lexicographic order, so the leading term is the last entry.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, parse_q, q, Q};

/// The centraliser basis vector `xi_i^{j,s}`, blocks numbered from 1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VarLabel {
    pub i: u8,
    pub j: u8,
    pub s: u8,
}

impl VarLabel {
    pub fn new(i: usize, j: usize, s: usize) -> Self {
        VarLabel { i: i as u8, j: j as u8, s: s as u8 }
    }

    /// 0-based source block.
    pub fn bi(&self) -> usize {
        self.i as usize - 1
    }

    /// 0-based target block.
    pub fn bj(&self) -> usize {
        self.j as usize - 1
    }

    pub fn shift(&self) -> usize {
        self.s as usize
    }
}

impl fmt::Display for VarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi[{},{},{}]", self.i, self.j, self.s)
    }
}

/// A polynomial variable: a centraliser coordinate or an auxiliary symbol
/// such as `a3` or `t0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Xi(VarLabel),
    Sym(u8, u16),
}

impl Var {
    pub fn xi(i: usize, j: usize, s: usize) -> Self {
        Var::Xi(VarLabel::new(i, j, s))
    }

    pub fn sym(letter: char, index: usize) -> Self {
        assert!(letter.is_ascii_lowercase());
        Var::Sym(letter as u8, index as u16)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Xi(l) => l.fmt(f),
            Var::Sym(c, i) => write!(f, "{}{}", *c as char, i),
        }
    }
}

/// Exponent vector stored sparsely as `(variable, exponent)` pairs sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 8]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, k: u32) -> Self {
        let mut m = SmallVec::new();
        if k > 0 {
            m.push((v, k));
        }
        Monomial(m)
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.sort_by_key(|a| a.0);
        let mut out: SmallVec<[(Var, u32); 8]> = SmallVec::new();
        for (v, k) in pairs {
            if k == 0 {
                continue;
            }
            match out.last_mut() {
                Some((w, e)) if *w == v => *e += k,
                _ => out.push((v, k)),
            }
        }
        Monomial(out)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.binary_search_by(|p| p.0.cmp(&v)).map_or(0, |i| self.0[i].1)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::new();
        let mut j = 0;
        let b = &other.0;
        for &(v, e) in self.0.iter() {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                if b[j].1 > e {
                    return None;
                }
                if e > b[j].1 {
                    out.push((v, e - b[j].1));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        (j == b.len()).then_some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut pairs: Vec<(Var, u32)> = self.0.to_vec();
        for &(v, e) in other.0.iter() {
            match pairs.iter_mut().find(|p| p.0 == v) {
                Some(p) => p.1 = p.1.max(e),
                None => pairs.push((v, e)),
            }
        }
        Monomial::from_pairs(pairs)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().all(|p| other.exponent(p.0) == 0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|p| p.0)
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order; variables earlier in the label
    /// order are the larger ones.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 || j > 0 {
            let va = (i > 0).then(|| a[i - 1]);
            let vb = (j > 0).then(|| b[j - 1]);
            match (va, vb) {
                (Some((x, ex)), Some((y, ey))) => match x.cmp(&y) {
                    Ordering::Equal => {
                        if ex != ey {
                            return ey.cmp(&ex);
                        }
                        i -= 1;
                        j -= 1;
                    }
                    // `x` is the later variable and `b` lacks it
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                },
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (None, None) => break,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.0.iter().map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") }).collect();
        f.write_str(&parts.join(" * "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, Q>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Q::one(), Monomial::var(v))
    }

    pub fn term(c: Q, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    pub fn homogeneous_component(&self, d: u32) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// The nonzero component of smallest total degree.
    pub fn lowest_component(&self) -> SparsePoly {
        match self.min_degree() {
            Some(d) => self.homogeneous_component(d),
            None => SparsePoly::zero(),
        }
    }

    pub fn truncate(&self, max_degree: u32) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars().collect::<Vec<_>>()).collect()
    }

    pub fn scale(&self, c: &Q) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn neg(&self) -> SparsePoly {
        self.scale(&-Q::one())
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &SparsePoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Q, other: &SparsePoly) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product with every term of degree above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &SparsePoly, max_degree: u32) -> SparsePoly {
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &other.terms {
                if da + mb.degree() > max_degree {
                    continue;
                }
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += c,
                }
            }
        }
        SparsePoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(x, y)| (x.mul(m), y * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut acc = SparsePoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let rest = m.div(&Monomial::var(v)).expect("divisible");
            out.add_term(rest, c * q(e as i64));
        }
        out
    }

    /// Directional derivative `sum_v a(v) d/dv`.
    pub fn directional_derivative(&self, direction: &BTreeMap<Var, Q>) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (v, a) in direction {
            if !a.is_zero() {
                out.add_scaled(a, &self.derivative(*v));
            }
        }
        out
    }

    /// Evaluates at a point; variables missing from `point` are treated as zero.
    pub fn eval(&self, point: &HashMap<Var, Q>) -> Q {
        let mut acc = Q::zero();
        'terms: for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                match point.get(&v) {
                    Some(x) if !x.is_zero() => {
                        for _ in 0..e {
                            t *= x;
                        }
                    }
                    _ => continue 'terms,
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces the listed variables by polynomials; others are kept.
    pub fn substitute(&self, subs: &HashMap<Var, SparsePoly>) -> SparsePoly {
        let mut out = SparsePoly::zero();
        let mut cache: HashMap<(Var, u32), SparsePoly> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = SparsePoly::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in m.pairs() {
                match subs.get(&v) {
                    Some(p) => {
                        let pw = cache.entry((v, e)).or_insert_with(|| p.pow(e)).clone();
                        t = t.mul(&pw);
                        if t.is_zero() {
                            break;
                        }
                    }
                    None => kept.push((v, e)),
                }
            }
            if t.is_zero() {
                continue;
            }
            let km = Monomial::from_pairs(kept);
            out.add_assign(&t.mul_monomial(&km, &Q::one()));
        }
        out
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> SparsePoly {
        SparsePoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (f(v), e)).collect()), c.clone())),
        )
    }

    /// Returns `c` with `self = c * other`, if such a nonzero scalar exists.
    pub fn proportionality(&self, other: &SparsePoly) -> Option<Q> {
        if self.is_zero() || other.is_zero() || self.len() != other.len() {
            return None;
        }
        let (m0, c0) = other.terms.iter().next()?;
        let ratio = self.terms.get(m0)? / c0;
        (self == &other.scale(&ratio)).then_some(ratio)
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> SparsePoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&(Q::one() / c)),
            None => SparsePoly::zero(),
        }
    }

    pub fn parse(s: &str) -> Result<SparsePoly> {
        let mut p = Parser { s: s.as_bytes(), i: 0 };
        let out = p.expr()?;
        p.ws();
        if p.i != p.s.len() {
            return Err(Error::Parse(format!("unexpected input at byte {}: {:?}", p.i, &s[p.i..])));
        }
        Ok(out)
    }
}

impl fmt::Display for SparsePoly {
    /// Terms are written from the leading term down, e.g.
    /// `2/3 * xi[1,2,0]^2 - xi[2,2,1] + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&fmt_q(&a))?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} * {m}", fmt_q(&a))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at byte {}", self.i)))
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut acc = SparsePoly::zero();
        let mut sign = Q::one();
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                sign = -sign;
            }
            Some(b'+') => self.i += 1,
            _ => {}
        }
        loop {
            let t = self.product()?;
            acc.add_scaled(&sign, &t);
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    sign = Q::one();
                }
                Some(b'-') => {
                    self.i += 1;
                    sign = -Q::one();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<SparsePoly> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.i += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<SparsePoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            self.ws();
            let k = self.integer()?;
            return Ok(base.pow(k as u32));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return self.err("expected integer");
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse("integer overflow".into()))
    }

    fn atom(&mut self) -> Result<SparsePoly> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.i += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.i += 1;
                Ok(self.atom()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && (self.s[self.i].is_ascii_digit() || self.s[self.i] == b'/') {
                    self.i += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                parse_q(text).map(SparsePoly::constant).ok_or_else(|| Error::Parse(format!("bad number {text:?}")))
            }
            Some(b'x') if self.s[self.i..].starts_with(b"xi[") => {
                self.i += 3;
                let mut idx = [0u64; 3];
                for (k, slot) in idx.iter_mut().enumerate() {
                    self.ws();
                    *slot = self.integer()?;
                    self.ws();
                    let want = if k < 2 { b',' } else { b']' };
                    if self.s.get(self.i) != Some(&want) {
                        return self.err("malformed xi[i,j,s]");
                    }
                    self.i += 1;
                }
                if idx[0] == 0 || idx[1] == 0 || idx.iter().any(|&x| x > 255) {
                    return self.err("xi indices out of range");
                }
                Ok(SparsePoly::var(Var::xi(idx[0] as usize, idx[1] as usize, idx[2] as usize)))
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.i += 1;
                let k = self.integer()?;
                if k > u16::MAX as u64 {
                    return self.err("symbol index too large");
                }
                Ok(SparsePoly::var(Var::sym(c as char, k as usize)))
            }
            _ => self.err("unexpected token"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qf;
    use proptest::prelude::*;

    fn x(i: usize, j: usize, s: usize) -> SparsePoly {
        SparsePoly::var(Var::xi(i, j, s))
    }

    fn arb_var() -> impl Strategy<Value = Var> {
        prop_oneof![
            (1usize..3, 1usize..3, 0usize..3).prop_map(|(i, j, s)| Var::xi(i, j, s)),
            (0usize..3).prop_map(|k| Var::sym('a', k)),
        ]
    }

    fn arb_poly() -> impl Strategy<Value = SparsePoly> {
        proptest::collection::vec(((-5i64..=5, 1i64..=3), proptest::collection::vec((arb_var(), 1u32..3), 0..3)), 0..5)
            .prop_map(|ts| {
                SparsePoly::from_terms(ts.into_iter().map(|((n, d), ps)| (Monomial::from_pairs(ps), qf(n, d))))
            })
    }

    #[test]
    fn degrevlex_examples() {
        // x1 > x2 > x3 with labels xi[1,1,0] < xi[1,1,1] < xi[1,1,2]
        let v = |s| Var::xi(1, 1, s);
        let m = |e: [u32; 3]| Monomial::from_pairs(vec![(v(0), e[0]), (v(1), e[1]), (v(2), e[2])]);
        assert!(m([1, 0, 0]) > m([0, 1, 0]));
        assert!(m([0, 1, 0]) > m([0, 0, 1]));
        assert!(m([0, 2, 0]) > m([1, 0, 1]));
        assert!(m([1, 1, 0]) < m([2, 0, 0]));
        assert!(m([0, 0, 2]) > m([1, 0, 0]));
        assert!(m([2, 0, 0]) > m([1, 1, 0]));
    }

    #[test]
    fn display_and_parse() {
        let p = x(1, 2, 1).mul(&x(2, 1, 3)).scale(&qf(-3, 2)).add(&x(1, 1, 0)).add(&SparsePoly::constant(q(5)));
        let text = p.to_string();
        assert_eq!(SparsePoly::parse(&text).unwrap(), p);
        let q2 = SparsePoly::parse("  -3/2*xi[ 1 , 2 , 1 ] *xi[2,1,3]+xi[1,1,0]+ 5 ").unwrap();
        assert_eq!(q2, p);
        assert_eq!(SparsePoly::parse("(a1 + a2)^2 - a1^2 - 2*a1*a2").unwrap(), SparsePoly::parse("a2^2").unwrap());
        assert!(SparsePoly::parse("xi[0,1,1]").is_err());
        assert!(SparsePoly::parse("1 +").is_err());
    }

    #[test]
    fn lowest_component_and_truncation() {
        let p = SparsePoly::parse("xi[1,1,0]^2 + xi[1,1,1] + xi[1,2,0]^3").unwrap();
        assert_eq!(p.lowest_component(), x(1, 1, 1));
        assert_eq!(p.truncate(2).total_degree(), Some(2));
        assert!(!p.is_homogeneous());
    }

    proptest! {
        #[test]
        fn text_round_trip(p in arb_poly()) {
            prop_assert_eq!(SparsePoly::parse(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn leibniz_rule(a in arb_poly(), b in arb_poly(), v in arb_var()) {
            let lhs = a.mul(&b).derivative(v);
            let rhs = a.derivative(v).mul(&b).add(&a.mul(&b.derivative(v)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn truncated_product_is_truncation(a in arb_poly(), b in arb_poly(), d in 0u32..5) {
            prop_assert_eq!(a.mul_truncated(&b, d), a.mul(&b).truncate(d));
        }

        #[test]
        fn eval_is_a_ring_map(a in arb_poly(), b in arb_poly(), vals in proptest::collection::vec(-3i64..4, 12)) {
            let mut pt = HashMap::new();
            let mut k = 0;
            for i in 1..3 { for j in 1..3 { for s in 0..3 {
                pt.insert(Var::xi(i, j, s), q(vals[k % vals.len()])); k += 1;
            }}}
            for t in 0..3 { pt.insert(Var::sym('a', t), q(vals[(k + t) % vals.len()])); }
            prop_assert_eq!(a.mul(&b).eval(&pt), a.eval(&pt) * b.eval(&pt));
            prop_assert_eq!(a.add(&b).eval(&pt), a.eval(&pt) + b.eval(&pt));
        }

        #[test]
        fn monomial_order_is_total_and_multiplicative(
            a in proptest::collection::vec((arb_var(), 1u32..3), 0..3),
            b in proptest::collection::vec((arb_var(), 1u32..3), 0..3),
            c in proptest::collection::vec((arb_var(), 1u32..3), 0..3),
        ) {
            let (a, b, c) = (Monomial::from_pairs(a), Monomial::from_pairs(b), Monomial::from_pairs(c));
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
            prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
            prop_assert!(a <= a.mul(&c));
            prop_assert_eq!(a.mul(&c).div(&c), Some(a.clone()));
        }
    }
}
