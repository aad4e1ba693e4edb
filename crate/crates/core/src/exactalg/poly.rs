//! Sparse polynomials in `q`, `t`, `z` with exact coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::{ExactAlgError, Scalar};

/// Exponent of a monomial `q^q t^t z^z`.
///
/// Ordered graded lexicographically with `q > t > z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Exponent {
    pub q: u32,
    pub t: u32,
    pub z: u32,
}

impl Exponent {
    pub const ONE: Exponent = Exponent { q: 0, t: 0, z: 0 };

    pub fn new(q: u32, t: u32, z: u32) -> Self {
        Exponent { q, t, z }
    }

    pub fn qt(q: u32, t: u32) -> Self {
        Exponent { q, t, z: 0 }
    }

    pub fn degree(&self) -> u32 {
        self.q + self.t + self.z
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.q <= other.q && self.t <= other.t && self.z <= other.z
    }

    fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        Some(Exponent {
            q: self.q.checked_sub(other.q)?,
            t: self.t.checked_sub(other.t)?,
            z: self.z.checked_sub(other.z)?,
        })
    }
}

impl Add for Exponent {
    type Output = Exponent;

    fn add(self, o: Exponent) -> Exponent {
        Exponent {
            q: self.q + o.q,
            t: self.t + o.t,
            z: self.z + o.z,
        }
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.q, self.t, self.z).cmp(&(other.degree(), other.q, other.t, other.z))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `q, t, z`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QtzPoly<T> {
    terms: BTreeMap<Exponent, T>,
}

impl<T: Scalar> QtzPoly<T> {
    pub fn zero() -> Self {
        QtzPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(Exponent::ONE, c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(T::from_int(c))
    }

    pub fn monomial(e: Exponent, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        QtzPoly { terms }
    }

    /// `q^a t^b z^c` with coefficient 1.
    pub fn mono(a: u32, b: u32, c: u32) -> Self {
        Self::monomial(Exponent::new(a, b, c), T::one())
    }

    pub fn q() -> Self {
        Self::mono(1, 0, 0)
    }

    pub fn t() -> Self {
        Self::mono(0, 1, 0)
    }

    pub fn z() -> Self {
        Self::mono(0, 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, T)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(Exponent::ONE).is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exponent) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    /// Largest term in the graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Exponent, &T)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(e, _)| e.degree())
    }

    pub fn max_z_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.z).max()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QtzPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, e: Exponent, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QtzPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k + e, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Part of the polynomial whose z-degree equals `c`, with z removed.
    pub fn z_slice(&self, c: u32) -> Self {
        QtzPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.z == c)
                .map(|(e, v)| (Exponent::qt(e.q, e.t), v.clone()))
                .collect(),
        }
    }

    /// Substitutes each variable that is `Some(value)`.
    pub fn specialize(&self, q: Option<&T>, t: Option<&T>, z: Option<&T>) -> Self {
        fn pw<T: Scalar>(v: &T, k: u32) -> T {
            num_traits::pow(v.clone(), k as usize)
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut c = c.clone();
            let mut ne = *e;
            if let Some(v) = q {
                c *= pw(v, e.q);
                ne.q = 0;
            }
            if let Some(v) = t {
                c *= pw(v, e.t);
                ne.t = 0;
            }
            if let Some(v) = z {
                c *= pw(v, e.z);
                ne.z = 0;
            }
            out.add_term(ne, c);
        }
        out
    }

    /// Value with every variable set to the given numbers.
    pub fn evaluate(&self, q: &T, t: &T, z: &T) -> T {
        self.specialize(Some(q), Some(t), Some(z)).coeff(Exponent::ONE)
    }

    /// Swaps `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        QtzPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::new(e.t, e.q, e.z), c.clone()))
                .collect(),
        }
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Positive content (gcd of coefficients in the scalar's sense).
    pub fn content(&self) -> T {
        self.terms
            .values()
            .fold(T::zero(), |acc, c| acc.content_gcd(c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / den`; fails when `den` does not divide `self`.
    pub fn divide_exact(&self, den: &QtzPoly<T>) -> Result<QtzPoly<T>, ExactAlgError> {
        let (lead_e, lead_c) = den.leading_term().ok_or(ExactAlgError::DivisionByZero)?;
        let (lead_e, lead_c) = (*lead_e, lead_c.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((e, c)) = rem.leading_term() {
            let Some(shift) = e.checked_sub(&lead_e) else {
                return Err(ExactAlgError::NotDivisible);
            };
            let factor = c.clone() / lead_c.clone();
            for (de, dc) in den.terms() {
                rem.add_term(*de + shift, -(dc.clone() * factor.clone()));
            }
            quot.add_term(shift, factor);
        }
        Ok(quot)
    }

    /// Terms in report order: by z-degree, then q-degree, then t-degree.
    fn report_order(&self) -> Vec<(&Exponent, &T)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(e, _)| (e.z, e.q, e.t));
        v
    }
}

impl<T: Scalar> Default for QtzPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> From<T> for QtzPoly<T> {
    fn from(c: T) -> Self {
        Self::constant(c)
    }
}

impl<'a, T: Scalar> Add<&'a QtzPoly<T>> for &'a QtzPoly<T> {
    type Output = QtzPoly<T>;

    fn add(self, rhs: &QtzPoly<T>) -> QtzPoly<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Scalar> Add for QtzPoly<T> {
    type Output = QtzPoly<T>;

    fn add(mut self, rhs: QtzPoly<T>) -> QtzPoly<T> {
        self += &rhs;
        self
    }
}

impl<T: Scalar> AddAssign<&QtzPoly<T>> for QtzPoly<T> {
    fn add_assign(&mut self, rhs: &QtzPoly<T>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<T: Scalar> SubAssign<&QtzPoly<T>> for QtzPoly<T> {
    fn sub_assign(&mut self, rhs: &QtzPoly<T>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'a, T: Scalar> Sub<&'a QtzPoly<T>> for &'a QtzPoly<T> {
    type Output = QtzPoly<T>;

    fn sub(self, rhs: &QtzPoly<T>) -> QtzPoly<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Scalar> Sub for QtzPoly<T> {
    type Output = QtzPoly<T>;

    fn sub(mut self, rhs: QtzPoly<T>) -> QtzPoly<T> {
        self -= &rhs;
        self
    }
}

impl<T: Scalar> Neg for QtzPoly<T> {
    type Output = QtzPoly<T>;

    fn neg(self) -> QtzPoly<T> {
        QtzPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<T: Scalar> Neg for &QtzPoly<T> {
    type Output = QtzPoly<T>;

    fn neg(self) -> QtzPoly<T> {
        -self.clone()
    }
}

impl<'a, T: Scalar> Mul<&'a QtzPoly<T>> for &'a QtzPoly<T> {
    type Output = QtzPoly<T>;

    fn mul(self, rhs: &QtzPoly<T>) -> QtzPoly<T> {
        let mut out = QtzPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(*ea + *eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Mul for QtzPoly<T> {
    type Output = QtzPoly<T>;

    fn mul(self, rhs: QtzPoly<T>) -> QtzPoly<T> {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exponent) -> fmt::Result {
    let mut first = true;
    for (name, k) in [("z", e.z), ("q", e.q), ("t", e.t)] {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{k}")?;
        }
    }
    Ok(())
}

impl<T: Scalar> fmt::Display for QtzPoly<T> {
    /// `1 + q*t + 2*z*q^2`; negative terms print as ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.report_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == Exponent::ONE {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for QtzPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtzPoly({self})")
    }
}

impl<T: Scalar> FromStr for QtzPoly<T> {
    type Err = ExactAlgError;

    /// Parses the report text form; accepts factors in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ExactAlgError::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(err());
        }
        // split into signed terms on + and -
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut neg = false;
        let mut pending_sign = false;
        let mut cur = String::new();
        for ch in s.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '+' | '-' => {
                    if cur.is_empty() {
                        if pending_sign || !terms.is_empty() {
                            return Err(err());
                        }
                    } else {
                        terms.push((neg, std::mem::take(&mut cur)));
                    }
                    neg = ch == '-';
                    pending_sign = true;
                }
                _ => {
                    cur.push(ch);
                    pending_sign = false;
                }
            }
        }
        if cur.is_empty() {
            return Err(err());
        }
        terms.push((neg, cur));

        let mut out = QtzPoly::zero();
        for (neg, term) in terms {
            let mut coeff = T::one();
            let mut e = Exponent::ONE;
            for factor in term.split('*') {
                let (base, pow) = match factor.split_once('^') {
                    Some((b, p)) => (b, p.parse::<u32>().map_err(|_| err())?),
                    None => (factor, 1),
                };
                match base {
                    "q" => e.q += pow,
                    "t" => e.t += pow,
                    "z" => e.z += pow,
                    _ => {
                        let c = T::parse_scalar(base).ok_or_else(err)?;
                        coeff *= num_traits::pow(c, pow as usize);
                    }
                }
            }
            out.add_term(e, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}
