//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are identified by name. A monomial stores only the variables with
//! a positive exponent, sorted by name, so two polynomials built over different
//! variable lists combine without any explicit context unification and equality
//! is plain structural equality of the canonical term maps. Terms are ordered by
//! graded lexicographic order, with the variable order given by name.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{format_abs, Rational};
use crate::error::{Error, Result};

/// A power product. Invariant: sorted by variable name, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Arc<str>, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(Arc::from(name), exp)])
        }
    }

    /// Builds a monomial from arbitrary `(name, exponent)` pairs.
    pub fn from_pairs<'a, I: IntoIterator<Item = (&'a str, u32)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<&str, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial(
            acc.into_iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| (Arc::from(v), e))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.0.iter().find(|(v, _)| &**v == var).map(|(_, e)| *e).unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(v, e)| (&**v, *e))
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Splits into the part in `vars` and the remaining part.
    fn partition(&self, vars: &BTreeSet<&str>) -> (Monomial, Monomial) {
        let (inside, outside): (Vec<_>, Vec<_>) = self.0.iter().cloned().partition(|(v, _)| vars.contains(&**v));
        (Monomial(inside), Monomial(outside))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = &self.0[i];
            let (vb, eb) = &other.0[j];
            match va.cmp(vb) {
                // `self` has a positive exponent on an earlier variable.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ea.cmp(eb) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                },
            }
        }
        (self.0.len() - i).cmp(&(other.0.len() - j))
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
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(super::rational::int(n))
    }

    pub fn var(name: &str) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(name, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds from arbitrary, possibly repeated or zero, terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// True iff the canonical form has no terms. Exact over the rationals.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    /// Variables occurring with a positive exponent, sorted by name.
    pub fn vars(&self) -> Vec<String> {
        let set: BTreeSet<&str> = self.terms.keys().flat_map(|m| m.factors().map(|(v, _)| v)).collect();
        set.into_iter().map(str::to_owned).collect()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest total degree in the given variables alone.
    pub fn degree_in(&self, vars: &[&str]) -> u32 {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|v| m.exponent(v)).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Formal partial derivative. Unknown variables give zero.
    pub fn derivative(&self, var: &str) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let reduced = Monomial(
                m.0.iter()
                    .filter_map(|(v, k)| {
                        if &**v == var {
                            (k > &1).then(|| (v.clone(), k - 1))
                        } else {
                            Some((v.clone(), *k))
                        }
                    })
                    .collect(),
            );
            out.add_term(reduced, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Exact value at a point that assigns every variable of `self`.
    pub fn evaluate(&self, point: &HashMap<String, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, e) in m.factors() {
                let x = point.get(v).ok_or_else(|| Error::UnboundVariable(v.to_owned()))?;
                value *= num_traits::pow(x.clone(), e as usize);
            }
            total += value;
        }
        Ok(total)
    }

    /// Replaces each mapped variable by a polynomial; unmapped variables stay.
    pub fn substitute(&self, map: &HashMap<String, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for (v, e) in m.factors() {
                let factor = match map.get(v) {
                    Some(p) => p.pow(e),
                    None => Polynomial::term(Rational::one(), Monomial::var(v, e)),
                };
                acc = &acc * &factor;
            }
            out += acc;
        }
        out
    }

    /// Renames variables; names not in the map are kept.
    pub fn rename(&self, map: &HashMap<String, String>) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_pairs(
                    m.factors()
                        .map(|(v, e)| (map.get(v).map(String::as_str).unwrap_or(v), e)),
                ),
                c.clone(),
            )
        }))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Re-canonicalizes the term map. The representation is canonical after
    /// every operation, so this is the identity on well-formed values.
    pub fn normalize(&self) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    /// Writes `self = sum_m m * c_m` where each `m` is a monomial in `vars` and
    /// each `c_m` is free of `vars`.
    pub fn split_by(&self, vars: &[&str]) -> BTreeMap<Monomial, Polynomial> {
        let set: BTreeSet<&str> = vars.iter().copied().collect();
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.partition(&set);
            out.entry(inside).or_default().add_term(outside, c.clone());
        }
        out
    }

    /// Whether any variable of `vars` occurs.
    pub fn involves_any(&self, vars: &[&str]) -> bool {
        self.terms.keys().any(|m| vars.iter().any(|v| m.exponent(v) > 0))
    }

    /// Renders the polynomial times a label, e.g. `e3`, `-2*e1`, `(x + 1)*e2`.
    pub fn render_times(&self, label: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        if self.num_terms() == 1 {
            let (m, c) = self.terms().next().unwrap();
            let sign = if c.is_negative() { "-" } else { "" };
            let mag = format_abs(c);
            let mut parts = Vec::new();
            if mag != "1" {
                parts.push(mag);
            }
            if !m.is_one() {
                parts.push(m.to_string());
            }
            parts.push(label.to_owned());
            return format!("{sign}{}", parts.join("*"));
        }
        format!("({self})*{label}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = format_abs(c);
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::int(n)
    }
}

impl<'a> Add<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        *self -= &rhs;
    }
}

impl<'a> Mul<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

/// Renders `sum_l c_l * label_l`, skipping zero coefficients; `0` if empty.
pub fn render_combination<'a, I>(items: I) -> String
where
    I: IntoIterator<Item = (&'a str, &'a Polynomial)>,
{
    let mut out = String::new();
    for (label, c) in items {
        if c.is_zero() {
            continue;
        }
        let term = c.render_times(label);
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `sum_i a_i * b_i`.
pub fn dot(a: &[Polynomial], b: &[Polynomial]) -> Polynomial {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::{int, rat};

    fn x() -> Polynomial {
        Polynomial::var("x")
    }
    fn y() -> Polynomial {
        Polynomial::var("y")
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((&x() + &(-x())).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &Polynomial::one()) * &(&x() - &Polynomial::one());
        let expected = &x().pow(2) - &Polynomial::one();
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "x^2 - 1");
    }

    #[test]
    fn rational_coefficients_multiply() {
        let p = &x().scale(&rat(2, 3)) * &y().scale(&int(3));
        assert_eq!(p, (&x() * &y()).scale(&int(2)));
    }

    #[test]
    fn derivatives() {
        let p = &x().pow(2) * &y();
        assert_eq!(p.derivative("x"), (&x() * &y()).scale(&int(2)));
        assert!(Polynomial::int(7).derivative("x").is_zero());
        assert!(x().derivative("y").is_zero());
    }

    #[test]
    fn evaluation() {
        let p = &x().pow(2) - &y();
        let point: HashMap<String, Rational> = [("x".to_string(), int(2)), ("y".to_string(), int(1))].into();
        assert_eq!(p.evaluate(&point).unwrap(), int(3));
        assert_eq!(Polynomial::zero().evaluate(&HashMap::new()).unwrap(), int(0));
        let half = x().scale(&rat(1, 2));
        let at: HashMap<String, Rational> = [("x".to_string(), rat(1, 3))].into();
        assert_eq!(half.evaluate(&at).unwrap(), rat(1, 6));
        assert!(matches!(p.evaluate(&HashMap::new()), Err(Error::UnboundVariable(_))));
    }

    #[test]
    fn identically_zero() {
        assert!((&x() - &x()).is_zero());
        assert!((&(&x() * &y()) - &(&y() * &x())).is_zero());
        assert!(!(&x().pow(2) - &x()).is_zero());
    }

    #[test]
    fn grlex_rendering() {
        let z = Polynomial::var("z");
        let p = &(&x().pow(2) * &y()).scale(&rat(2, 3)) - &z;
        assert_eq!(p.to_string(), "2/3*x^2*y - z");
        let q = &(&y().pow(2) + &(&x() * &z)) + &x();
        // degree-2 terms first, x*z before y^2 lexicographically
        assert_eq!(q.to_string(), "x*z + y^2 + x");
    }

    #[test]
    fn render_times_label() {
        assert_eq!(Polynomial::one().render_times("e3"), "e3");
        assert_eq!(Polynomial::int(-2).render_times("e1"), "-2*e1");
        assert_eq!((&x() + &Polynomial::one()).render_times("e2"), "(x + 1)*e2");
    }

    #[test]
    fn split_and_substitute() {
        let p = &(&x() * &Polynomial::var("e1")).scale(&int(2)) - &Polynomial::var("e2");
        let parts = p.split_by(&["e1", "e2"]);
        assert_eq!(parts[&Monomial::var("e1", 1)], x().scale(&int(2)));
        assert_eq!(parts[&Monomial::var("e2", 1)], Polynomial::int(-1));
        let map: HashMap<String, Polynomial> = [("x".to_string(), &y() + &Polynomial::one())].into();
        assert_eq!((&x() * &x()).substitute(&map), (&y() + &Polynomial::one()).pow(2));
    }
}
