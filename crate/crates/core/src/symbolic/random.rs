//! Seeded sampling of rationals and polynomials for randomized identity layers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::{Monomial, Polynomial};
use super::rational::{rat, Rational};

pub type Sampler = ChaCha8Rng;

pub fn sampler(seed: u64) -> Sampler {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in [-4, 4] and denominator in [1, 3].
pub fn small_rational(rng: &mut Sampler) -> Rational {
    rat(rng.random_range(-4..=4), rng.random_range(1..=3))
}

/// Random polynomial in `vars` of total degree at most `max_degree`.
pub fn polynomial(rng: &mut Sampler, vars: &[String], max_degree: u32, max_terms: usize) -> Polynomial {
    let n_terms = rng.random_range(0..=max_terms);
    let mut terms = Vec::with_capacity(n_terms);
    for _ in 0..n_terms {
        let deg = if vars.is_empty() {
            0
        } else {
            rng.random_range(0..=max_degree)
        };
        let mut pairs = Vec::new();
        for _ in 0..deg {
            pairs.push((vars[rng.random_range(0..vars.len())].as_str(), 1));
        }
        terms.push((Monomial::from_pairs(pairs), small_rational(rng)));
    }
    Polynomial::from_terms(terms)
}

/// Random vector of `len` polynomials.
pub fn poly_vector(rng: &mut Sampler, vars: &[String], len: usize, max_degree: u32) -> Vec<Polynomial> {
    (0..len).map(|_| polynomial(rng, vars, max_degree, 3)).collect()
}

/// Random rational point assigning every name in `vars`.
pub fn point(rng: &mut Sampler, vars: &[String]) -> std::collections::HashMap<String, Rational> {
    vars.iter().map(|v| (v.clone(), small_rational(rng))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let vars = vec!["x".to_string(), "y".to_string()];
        let a = polynomial(&mut sampler(7), &vars, 3, 4);
        let b = polynomial(&mut sampler(7), &vars, 3, 4);
        assert_eq!(a, b);
        assert!(a.degree() <= 3);
    }
}
