//! Antisymmetric tensors over a frame: sections of exterior powers.
//!
//! The same type carries forms (sections of the exterior algebra of the dual)
//! and multivectors; which one is meant depends on the operation applied.

use std::collections::BTreeMap;

use crate::symbolic::poly::render_combination;
use crate::symbolic::Polynomial;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiSection {
    degree: usize,
    rank: usize,
    /// Keys strictly increasing; no zero values.
    coeffs: BTreeMap<Vec<usize>, Polynomial>,
}

/// Sorts `indices` returning the permutation sign, or `None` on a repeat.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = indices.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

/// All strictly increasing `k`-tuples from `0..n`.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

impl MultiSection {
    pub fn zero(degree: usize, rank: usize) -> Self {
        MultiSection {
            degree,
            rank,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn function(f: Polynomial, rank: usize) -> Self {
        let mut m = MultiSection::zero(0, rank);
        m.set(&[], f);
        m
    }

    pub fn from_section(x: &[Polynomial]) -> Self {
        let mut m = MultiSection::zero(1, x.len());
        for (i, c) in x.iter().enumerate() {
            m.set(&[i], c.clone());
        }
        m
    }

    /// The wedge of frame elements `indices` with coefficient 1.
    pub fn frame(indices: &[usize], rank: usize) -> Self {
        let mut m = MultiSection::zero(indices.len(), rank);
        m.set(indices, Polynomial::one());
        m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient at an arbitrary index tuple, with the antisymmetry sign.
    pub fn component(&self, indices: &[usize]) -> Polynomial {
        assert_eq!(indices.len(), self.degree, "wrong number of indices");
        match sort_with_sign(indices) {
            None => Polynomial::zero(),
            Some((key, sign)) => match self.coeffs.get(&key) {
                None => Polynomial::zero(),
                Some(c) if sign > 0 => c.clone(),
                Some(c) => -c,
            },
        }
    }

    /// Sets the coefficient at `indices` (and implicitly all permutations).
    pub fn set(&mut self, indices: &[usize], value: Polynomial) {
        assert_eq!(indices.len(), self.degree, "wrong number of indices");
        assert!(indices.iter().all(|&i| i < self.rank), "index out of range");
        let Some((key, sign)) = sort_with_sign(indices) else {
            assert!(value.is_zero(), "nonzero value on a repeated index");
            return;
        };
        let value = if sign > 0 { value } else { -value };
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
    }

    pub fn add_at(&mut self, indices: &[usize], value: &Polynomial) {
        let cur = self.component(indices);
        self.set(indices, &cur + value);
    }

    /// Nonzero components on strictly increasing index tuples.
    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &Polynomial)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// The coefficient list of a degree-1 element.
    pub fn to_section(&self) -> Vec<Polynomial> {
        assert_eq!(self.degree, 1);
        (0..self.rank).map(|i| self.component(&[i])).collect()
    }

    /// The function of a degree-0 element.
    pub fn to_function(&self) -> Polynomial {
        assert_eq!(self.degree, 0);
        self.component(&[])
    }

    pub fn add(&self, other: &MultiSection) -> MultiSection {
        assert_eq!((self.degree, self.rank), (other.degree, other.rank), "degree mismatch");
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_at(k, v);
        }
        out
    }

    pub fn sub(&self, other: &MultiSection) -> MultiSection {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiSection {
        self.scale(&Polynomial::int(-1))
    }

    pub fn scale(&self, f: &Polynomial) -> MultiSection {
        let mut out = MultiSection::zero(self.degree, self.rank);
        for (k, v) in self.iter() {
            out.set(k, v * f);
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> MultiSection {
        let mut out = MultiSection::zero(self.degree, self.rank);
        for (k, v) in self.iter() {
            out.set(k, f(v));
        }
        out
    }

    pub fn wedge(&self, other: &MultiSection) -> MultiSection {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = MultiSection::zero(self.degree + other.degree, self.rank);
        if self.degree + other.degree > self.rank {
            return out;
        }
        for (a, p) in self.iter() {
            for (b, q) in other.iter() {
                let joined: Vec<usize> = a.iter().chain(b).copied().collect();
                if sort_with_sign(&joined).is_some() {
                    out.add_at(&joined, &(p * q));
                }
            }
        }
        out
    }

    /// Contraction with a section in the first slot. Degree 0 maps to zero.
    pub fn interior(&self, x: &[Polynomial]) -> MultiSection {
        assert_eq!(x.len(), self.rank, "rank mismatch");
        if self.degree == 0 {
            return MultiSection::zero(0, self.rank);
        }
        let mut out = MultiSection::zero(self.degree - 1, self.rank);
        for (k, v) in self.iter() {
            for (pos, &i) in k.iter().enumerate() {
                if x[i].is_zero() {
                    continue;
                }
                let mut rest = k.to_vec();
                rest.remove(pos);
                let term = &x[i] * v;
                let term = if pos % 2 == 0 { term } else { -term };
                out.add_at(&rest, &term);
            }
        }
        out
    }

    /// Value of a form on `degree` sections.
    pub fn evaluate(&self, args: &[Vec<Polynomial>]) -> Polynomial {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let mut cur = self.clone();
        for x in args {
            cur = cur.interior(x);
        }
        cur.to_function()
    }

    /// Renders as a combination of wedge monomials of `labels`.
    pub fn render(&self, labels: &[String]) -> String {
        let names: Vec<(String, &Polynomial)> = self
            .iter()
            .map(|(k, v)| {
                let name = if k.is_empty() {
                    "1".to_string()
                } else {
                    k.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join("^")
                };
                (name, v)
            })
            .collect();
        if self.degree == 0 {
            return self.to_function().to_string();
        }
        render_combination(names.iter().map(|(n, v)| (n.as_str(), *v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetric_lookup() {
        let mut m = MultiSection::zero(2, 3);
        m.set(&[2, 0], Polynomial::int(5));
        assert_eq!(m.component(&[0, 2]), Polynomial::int(-5));
        assert_eq!(m.component(&[1, 1]), Polynomial::zero());
    }

    #[test]
    fn wedge_and_interior() {
        let a = MultiSection::frame(&[0], 2);
        let b = MultiSection::frame(&[1], 2);
        let ab = a.wedge(&b);
        assert_eq!(ab, b.wedge(&a).neg());
        let e1 = vec![Polynomial::one(), Polynomial::zero()];
        let e2 = vec![Polynomial::zero(), Polynomial::one()];
        assert_eq!(ab.evaluate(&[e1.clone(), e2.clone()]), Polynomial::one());
        assert_eq!(ab.evaluate(&[e2, e1]), Polynomial::int(-1));
    }

    #[test]
    fn tuple_enumeration() {
        assert_eq!(increasing_tuples(4, 2).len(), 6);
        assert_eq!(increasing_tuples(2, 3).len(), 0);
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
    }
}
