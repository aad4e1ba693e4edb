//! The ring `Q[x_1..x_n, y_1..y_n, θ_1..θ_n]` with commuting `x`, `y` and
//! anticommuting `θ`.
//!
//! Monomials keep their `θ` factors in increasing index order; the sign of
//! any reordering lives in the coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::combinatorics::Permutation;
use crate::exactalg::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperRingError {
    #[error("generator p_{{{r},{s}}} out of range for n = {n}")]
    GeneratorRange { n: usize, r: usize, s: usize },
    #[error("cannot parse tri-degree from {0:?}")]
    Parse(String),
    #[error("permutation acts on {perm} letters, ring has {ring}")]
    DegreeMismatch { perm: usize, ring: usize },
}

/// Degree in the `x`, `y` and `θ` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TriDegree {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl TriDegree {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        TriDegree { a, b, c }
    }

    /// Componentwise `self - other`, if nonnegative.
    pub fn checked_sub(&self, other: &TriDegree) -> Option<TriDegree> {
        Some(TriDegree {
            a: self.a.checked_sub(other.a)?,
            b: self.b.checked_sub(other.b)?,
            c: self.c.checked_sub(other.c)?,
        })
    }

    /// Degree in the commuting variables.
    pub fn band(&self) -> usize {
        self.a + self.b
    }
}

impl fmt::Display for TriDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl FromStr for TriDegree {
    type Err = SuperRingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| SuperRingError::Parse(s.to_string()))?;
        match v[..] {
            [a, b, c] => Ok(TriDegree { a, b, c }),
            _ => Err(SuperRingError::Parse(s.to_string())),
        }
    }
}

impl serde::Serialize for TriDegree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for TriDegree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A monomial `x^α y^β θ_S` in normal form.
///
/// The derived order (lexicographic on `x`, then `y`, then the θ bitmask) is
/// compatible with multiplication by `x_i` and `y_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    x: Vec<u16>,
    y: Vec<u16>,
    theta: u32,
}

/// Which family a single variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    Theta(usize),
}

impl Var {
    pub fn degree(&self) -> TriDegree {
        match self {
            Var::X(_) => TriDegree::new(1, 0, 0),
            Var::Y(_) => TriDegree::new(0, 1, 0),
            Var::Theta(_) => TriDegree::new(0, 0, 1),
        }
    }

    /// All `3n` variables: `x_1..x_n, y_1..y_n, θ_1..θ_n` (0-based indices).
    pub fn all(n: usize) -> Vec<Var> {
        (0..n)
            .map(Var::X)
            .chain((0..n).map(Var::Y))
            .chain((0..n).map(Var::Theta))
            .collect()
    }
}

fn parity(count: u32) -> i64 {
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

impl SuperMonomial {
    pub fn one(n: usize) -> Self {
        SuperMonomial {
            x: vec![0; n],
            y: vec![0; n],
            theta: 0,
        }
    }

    /// `theta` lists 0-based indices in any order; the sign of sorting them
    /// is returned with the monomial, or `None` if an index repeats.
    pub fn new(x: Vec<u16>, y: Vec<u16>, theta: &[usize]) -> Option<(i64, Self)> {
        assert_eq!(x.len(), y.len());
        let mut mono = SuperMonomial { x, y, theta: 0 };
        let mut sign = 1;
        for &i in theta {
            let (s, m) = mono.mul_theta_right(i)?;
            sign *= s;
            mono = m;
        }
        Some((sign, mono))
    }

    pub fn var(n: usize, v: Var) -> Self {
        let mut m = Self::one(n);
        match v {
            Var::X(i) => m.x[i] = 1,
            Var::Y(i) => m.y[i] = 1,
            Var::Theta(i) => m.theta = 1 << i,
        }
        m
    }

    fn mul_theta_right(&self, i: usize) -> Option<(i64, Self)> {
        let bit = 1u32 << i;
        if self.theta & bit != 0 {
            return None;
        }
        let above = (self.theta >> (i + 1)).count_ones();
        let mut m = self.clone();
        m.theta |= bit;
        Some((parity(above), m))
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn xexp(&self) -> &[u16] {
        &self.x
    }

    pub fn yexp(&self) -> &[u16] {
        &self.y
    }

    /// θ indices (0-based), increasing.
    pub fn theta(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.theta & (1 << i) != 0).collect()
    }

    pub fn theta_mask(&self) -> u32 {
        self.theta
    }

    pub fn degree(&self) -> TriDegree {
        TriDegree {
            a: self.x.iter().map(|&e| e as usize).sum(),
            b: self.y.iter().map(|&e| e as usize).sum(),
            c: self.theta.count_ones() as usize,
        }
    }

    /// `self * other` as `(sign, monomial)`, or `None` when a θ repeats.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(i64, SuperMonomial)> {
        if self.theta & other.theta != 0 {
            return None;
        }
        // each θ_j of `other` must pass every θ_i of `self` with i > j
        let mut swaps = 0;
        let mut rest = other.theta;
        while rest != 0 {
            let j = rest.trailing_zeros();
            swaps += (self.theta >> (j + 1)).count_ones();
            rest &= rest - 1;
        }
        Some((
            parity(swaps),
            SuperMonomial {
                x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
                y: self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect(),
                theta: self.theta | other.theta,
            },
        ))
    }

    /// Left multiplication by a variable.
    pub fn mul_var(&self, v: Var) -> Option<(i64, SuperMonomial)> {
        match v {
            Var::X(i) => {
                let mut m = self.clone();
                m.x[i] += 1;
                Some((1, m))
            }
            Var::Y(i) => {
                let mut m = self.clone();
                m.y[i] += 1;
                Some((1, m))
            }
            Var::Theta(i) => {
                let bit = 1u32 << i;
                if self.theta & bit != 0 {
                    return None;
                }
                let below = (self.theta & (bit - 1)).count_ones();
                let mut m = self.clone();
                m.theta |= bit;
                Some((parity(below), m))
            }
        }
    }

    /// `self / v` for a commuting variable dividing `self`.
    pub fn div_commuting(&self, v: Var) -> Option<SuperMonomial> {
        let mut m = self.clone();
        match v {
            Var::X(i) if m.x[i] > 0 => m.x[i] -= 1,
            Var::Y(i) if m.y[i] > 0 => m.y[i] -= 1,
            _ => return None,
        }
        Some(m)
    }

    /// Image under the index permutation, with the sign of re-sorting θ.
    pub fn permute(&self, sigma: &Permutation) -> (i64, SuperMonomial) {
        let n = self.n();
        let mut x = vec![0; n];
        let mut y = vec![0; n];
        for i in 0..n {
            x[sigma.apply(i)] = self.x[i];
            y[sigma.apply(i)] = self.y[i];
        }
        let images: Vec<usize> = self.theta().iter().map(|&i| sigma.apply(i)).collect();
        let inversions = images
            .iter()
            .enumerate()
            .map(|(k, a)| images[k + 1..].iter().filter(|b| *b < a).count() as u32)
            .sum();
        let theta = images.iter().fold(0u32, |acc, &i| acc | (1 << i));
        (parity(inversions), SuperMonomial { x, y, theta })
    }
}

impl fmt::Display for SuperMonomial {
    /// `x1^2*y3*t12`, where `t12` is `θ_1 θ_2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, exps) in [("x", &self.x), ("y", &self.y)] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{name}{}", i + 1)),
                    _ => factors.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        if self.theta != 0 {
            let idx: String = self.theta().iter().map(|i| (i + 1).to_string()).collect();
            factors.push(format!("t{idx}"));
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// An element of the ring, as a sparse map from normal-form monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperPolynomial<T> {
    n: usize,
    terms: BTreeMap<SuperMonomial, T>,
}

impl<T: Scalar> SuperPolynomial<T> {
    pub fn zero(n: usize) -> Self {
        SuperPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(m: SuperMonomial, c: T) -> Self {
        let mut p = Self::zero(m.n());
        p.add_term(m, c);
        p
    }

    pub fn var(n: usize, v: Var) -> Self {
        Self::from_monomial(SuperMonomial::var(n, v), T::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: T) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    /// The common tri-degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<TriDegree> {
        let mut it = self.terms.keys().map(SuperMonomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((s, m)) = a.mul(b) {
                    out.add_term(m, T::from_int(s) * ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// Left multiplication by a single monomial.
    pub fn mul_monomial_left(&self, m: &SuperMonomial) -> Self {
        let mut out = Self::zero(self.n);
        for (b, cb) in &self.terms {
            if let Some((s, p)) = m.mul(b) {
                out.add_term(p, T::from_int(s) * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for SuperPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = num_traits::Signed::abs(c);
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for SuperPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperPolynomial({self})")
    }
}

/// `(sign, product)`, or `None` when the product vanishes.
pub fn mono_mul(u: &SuperMonomial, v: &SuperMonomial) -> Option<(i64, SuperMonomial)> {
    u.mul(v)
}

/// Simultaneous permutation of the indices of `x`, `y` and `θ`.
pub fn apply_perm<T: Scalar>(
    sigma: &Permutation,
    f: &SuperPolynomial<T>,
) -> Result<SuperPolynomial<T>, SuperRingError> {
    if sigma.degree() != f.n() {
        return Err(SuperRingError::DegreeMismatch {
            perm: sigma.degree(),
            ring: f.n(),
        });
    }
    let mut out = SuperPolynomial::zero(f.n());
    for (m, c) in f.terms() {
        let (s, pm) = m.permute(sigma);
        out.add_term(pm, T::from_int(s) * c.clone());
    }
    Ok(out)
}

/// `p_{r,s} = Σ_i x_i^r y_i^s`, for `0 < r+s <= n`.
pub fn gen_p<T: Scalar>(n: usize, r: usize, s: usize) -> Result<SuperPolynomial<T>, SuperRingError> {
    if r + s == 0 || r + s > n {
        return Err(SuperRingError::GeneratorRange { n, r, s });
    }
    Ok(power_sum(n, r, s, false))
}

/// `p̃_{r,s} = Σ_i x_i^r y_i^s θ_i`, for `0 <= r+s < n`.
pub fn gen_ptilde<T: Scalar>(n: usize, r: usize, s: usize) -> Result<SuperPolynomial<T>, SuperRingError> {
    if r + s >= n {
        return Err(SuperRingError::GeneratorRange { n, r, s });
    }
    Ok(power_sum(n, r, s, true))
}

fn power_sum<T: Scalar>(n: usize, r: usize, s: usize, with_theta: bool) -> SuperPolynomial<T> {
    let mut p = SuperPolynomial::zero(n);
    for i in 0..n {
        let mut m = SuperMonomial::one(n);
        m.x[i] = r as u16;
        m.y[i] = s as u16;
        if with_theta {
            m.theta = 1 << i;
        }
        p.add_term(m, T::one());
    }
    p
}

/// One ideal generator with its label.
#[derive(Clone)]
pub struct Generator<T> {
    pub tilde: bool,
    pub r: usize,
    pub s: usize,
    pub degree: TriDegree,
    pub poly: SuperPolynomial<T>,
}

/// All generators: the `p_{r,s}` then the `p̃_{r,s}`, each in `(r+s, r)`
/// order.
pub fn generators<T: Scalar>(n: usize) -> Vec<Generator<T>> {
    let mut out = Vec::new();
    for total in 1..=n {
        for r in 0..=total {
            let s = total - r;
            out.push(Generator {
                tilde: false,
                r,
                s,
                degree: TriDegree::new(r, s, 0),
                poly: power_sum(n, r, s, false),
            });
        }
    }
    for total in 0..n {
        for r in 0..=total {
            let s = total - r;
            out.push(Generator {
                tilde: true,
                r,
                s,
                degree: TriDegree::new(r, s, 1),
                poly: power_sum(n, r, s, true),
            });
        }
    }
    out
}

/// Exponent vectors of length `n` summing to `total`, lexicographically
/// increasing.
fn compositions(n: usize, total: usize) -> Vec<Vec<u16>> {
    fn go(i: usize, n: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == n {
            cur.push(left as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e as u16);
            go(i + 1, n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, n, total, &mut Vec::new(), &mut out);
    out
}

/// All monomials of tri-degree `d`, in increasing monomial order.
pub fn enumerate_monomials(n: usize, d: TriDegree) -> Vec<SuperMonomial> {
    if d.c > n {
        return Vec::new();
    }
    let xs = compositions(n, d.a);
    let ys = compositions(n, d.b);
    let thetas: Vec<u32> = {
        let mut v: Vec<u32> = (0u32..(1u32 << n))
            .filter(|m| m.count_ones() as usize == d.c)
            .collect();
        v.sort_unstable();
        v
    };
    let mut out = Vec::with_capacity(xs.len() * ys.len() * thetas.len());
    for x in &xs {
        for y in &ys {
            for &theta in &thetas {
                out.push(SuperMonomial {
                    x: x.clone(),
                    y: y.clone(),
                    theta,
                });
            }
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim R_n^{(a,b,c)}`.
pub fn component_dim(n: usize, d: TriDegree) -> usize {
    if n == 0 {
        return usize::from(d == TriDegree::default());
    }
    binomial(d.a + n - 1, n - 1) * binomial(d.b + n - 1, n - 1) * binomial(n, d.c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    type Q = BigRational;
    type SP = SuperPolynomial<Q>;

    fn theta(n: usize, idx: &[usize]) -> SuperMonomial {
        SuperMonomial::new(vec![0; n], vec![0; n], idx).unwrap().1
    }

    #[test]
    fn grassmann_signs() {
        let t1 = theta(2, &[0]);
        let t2 = theta(2, &[1]);
        assert_eq!(mono_mul(&t1, &t2), Some((1, theta(2, &[0, 1]))));
        assert_eq!(mono_mul(&t2, &t1), Some((-1, theta(2, &[0, 1]))));
        assert_eq!(mono_mul(&t1, &t1), None);
        assert_eq!(SuperMonomial::new(vec![0; 3], vec![0; 3], &[2, 0, 1]).unwrap().0, 1);
        assert_eq!(SuperMonomial::new(vec![0; 3], vec![0; 3], &[1, 0, 2]).unwrap().0, -1);
    }

    #[test]
    fn permutation_action_examples() {
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        let f = SP::from_monomial(theta(2, &[0, 1]), Q::one());
        assert_eq!(apply_perm(&swap, &f).unwrap(), f.scale(&Q::from_int(-1)));

        let x1y2 = SuperMonomial::new(vec![1, 0], vec![0, 1], &[]).unwrap().1;
        let x2y1 = SuperMonomial::new(vec![0, 1], vec![1, 0], &[]).unwrap().1;
        assert_eq!(
            apply_perm(&swap, &SP::from_monomial(x1y2, Q::one())).unwrap(),
            SP::from_monomial(x2y1, Q::one())
        );
        let bad = Permutation::identity(3);
        assert!(apply_perm(&bad, &f).is_err());
    }

    #[test]
    fn generator_examples() {
        let p11: SP = gen_p(2, 1, 1).unwrap();
        assert_eq!(p11.to_string(), "x2*y2 + x1*y1");
        let pt: SP = gen_ptilde(2, 0, 0).unwrap();
        assert_eq!(pt.len(), 2);
        assert_eq!(pt.degree(), Some(TriDegree::new(0, 0, 1)));
        let p02: SP = gen_p(3, 0, 2).unwrap();
        assert_eq!(p02.degree(), Some(TriDegree::new(0, 2, 0)));
        assert!(gen_p::<Q>(2, 0, 0).is_err());
        assert!(gen_p::<Q>(2, 2, 1).is_err());
        assert!(gen_ptilde::<Q>(2, 1, 1).is_err());
        for n in 1..=5 {
            let gens: Vec<Generator<Q>> = generators(n);
            let plain = gens.iter().filter(|g| !g.tilde).count();
            assert_eq!(plain, (n + 1) * (n + 2) / 2 - 1);
            assert_eq!(gens.len() - plain, n * (n + 1) / 2);
        }
    }

    #[test]
    fn monomial_enumeration() {
        let m = enumerate_monomials(2, TriDegree::new(1, 0, 1));
        assert_eq!(m.len(), 4);
        assert!(m.windows(2).all(|w| w[0] < w[1]));
        let m = enumerate_monomials(2, TriDegree::new(0, 0, 2));
        assert_eq!(m, vec![theta(2, &[0, 1])]);
        assert!(enumerate_monomials(3, TriDegree::new(0, 0, 4)).is_empty());
        for n in 1..=4 {
            for a in 0..3 {
                for b in 0..3 {
                    for c in 0..=n {
                        let d = TriDegree::new(a, b, c);
                        assert_eq!(enumerate_monomials(n, d).len(), component_dim(n, d));
                    }
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        let m = SuperMonomial::new(vec![2, 0, 0], vec![0, 0, 1], &[0, 1]).unwrap().1;
        assert_eq!(m.to_string(), "x1^2*y3*t12");
        assert_eq!(SuperMonomial::one(2).to_string(), "1");
        assert_eq!("1,0,2".parse::<TriDegree>().unwrap(), TriDegree::new(1, 0, 2));
        assert!("1,0".parse::<TriDegree>().is_err());
    }

    #[test]
    fn generators_are_invariant() {
        fn all_perms(n: usize) -> Vec<Permutation> {
            fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
                if cur.len() == used.len() {
                    out.push(Permutation::from_one_line(cur).unwrap());
                    return;
                }
                for i in 0..used.len() {
                    if !used[i] {
                        used[i] = true;
                        cur.push(i + 1);
                        go(cur, used, out);
                        cur.pop();
                        used[i] = false;
                    }
                }
            }
            let mut out = Vec::new();
            go(&mut Vec::new(), &mut vec![false; n], &mut out);
            out
        }
        for n in 1..=4 {
            let perms = all_perms(n);
            for g in generators::<Q>(n) {
                for s in &perms {
                    assert_eq!(apply_perm(s, &g.poly).unwrap(), g.poly);
                }
            }
        }
    }

    fn random_poly(n: usize) -> impl Strategy<Value = SP> {
        let mono = (
            proptest::collection::vec(0u16..2, n),
            proptest::collection::vec(0u16..2, n),
            proptest::collection::vec(0usize..n, 0..3),
            -2i64..3,
        );
        proptest::collection::vec(mono, 0..4).prop_map(move |terms| {
            let mut p = SP::zero(n);
            for (x, y, th, c) in terms {
                if let Some((s, m)) = SuperMonomial::new(x, y, &th) {
                    p.add_term(m, Q::from_int(s * c));
                }
            }
            p
        })
    }

    fn theta_homogeneous(n: usize) -> impl Strategy<Value = (SP, usize)> {
        (0..=n.min(2)).prop_flat_map(move |c| {
            proptest::collection::vec(
                (
                    proptest::collection::vec(0u16..2, n),
                    proptest::sample::subsequence((0..n).collect::<Vec<_>>(), c),
                    -2i64..3,
                ),
                0..3,
            )
            .prop_map(move |terms| {
                let mut p = SP::zero(n);
                for (x, th, k) in terms {
                    let (s, m) = SuperMonomial::new(x, vec![0; n], &th).unwrap();
                    p.add_term(m, Q::from_int(s * k));
                }
                (p, c)
            })
        })
    }

    fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_one_line(&v).unwrap())
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(a in random_poly(3), b in random_poly(3), c in random_poly(3)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn supercommutativity((f, cf) in theta_homogeneous(4), (g, cg) in theta_homogeneous(4)) {
            let sign = if (cf * cg) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(f.mul(&g), g.mul(&f).scale(&Q::from_int(sign)));
        }

        #[test]
        fn action_is_a_ring_homomorphism(a in random_poly(3), b in random_poly(3), s in perm(3), t in perm(3)) {
            let sa = apply_perm(&s, &a).unwrap();
            let sb = apply_perm(&s, &b).unwrap();
            prop_assert_eq!(apply_perm(&s, &a.mul(&b)).unwrap(), sa.mul(&sb));
            let st = s.compose(&t);
            prop_assert_eq!(apply_perm(&st, &a).unwrap(), apply_perm(&s, &apply_perm(&t, &a).unwrap()).unwrap());
        }
    }
}
