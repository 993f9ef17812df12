//! Representations of a Lie algebroid on a vector bundle by covariant
//! differential operators.

use crate::algebroid::LieAlgebroid;
use crate::error::{Error, Result};
use crate::report::{CheckOptions, CheckReport};
use crate::symbolic::poly::render_combination;
use crate::symbolic::random::{poly_vector, polynomial, sampler};
use crate::symbolic::{PolyMatrix, Polynomial};

/// `rho_{e_i}(f_alpha) = sum_beta R_i[beta, alpha] f_beta`: column `alpha`
/// of `matrices[i]` is the image of the carrier frame element `alpha`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    actor: LieAlgebroid,
    carrier_labels: Vec<String>,
    matrices: Vec<PolyMatrix>,
}

const DUAL_SUFFIX: &str = "_dual";

/// Label of the dual frame element; dualizing twice restores the label.
pub fn dual_label(label: &str) -> String {
    match label.strip_suffix(DUAL_SUFFIX) {
        Some(base) => base.to_string(),
        None => format!("{label}{DUAL_SUFFIX}"),
    }
}

impl Representation {
    pub fn new(actor: LieAlgebroid, carrier_labels: Vec<String>, matrices: Vec<PolyMatrix>) -> Result<Self> {
        let m = carrier_labels.len();
        if matrices.len() != actor.rank() {
            return Err(Error::Dimension(format!(
                "representation needs {} matrices, got {}",
                actor.rank(),
                matrices.len()
            )));
        }
        if let Some(i) = matrices.iter().position(|r| r.rows() != m || r.cols() != m) {
            return Err(Error::Dimension(format!(
                "matrix for {} must be {m}x{m}",
                actor.labels()[i]
            )));
        }
        Ok(Representation {
            actor,
            carrier_labels,
            matrices,
        })
    }

    pub fn zero(actor: LieAlgebroid, carrier_labels: Vec<String>) -> Self {
        let m = carrier_labels.len();
        let matrices = vec![PolyMatrix::zeros(m, m); actor.rank()];
        Representation {
            actor,
            carrier_labels,
            matrices,
        }
    }

    pub fn actor(&self) -> &LieAlgebroid {
        &self.actor
    }

    pub fn carrier_rank(&self) -> usize {
        self.carrier_labels.len()
    }

    pub fn carrier_labels(&self) -> &[String] {
        &self.carrier_labels
    }

    pub fn matrix(&self, i: usize) -> &PolyMatrix {
        &self.matrices[i]
    }

    pub fn matrices(&self) -> &[PolyMatrix] {
        &self.matrices
    }

    /// Copy with the matrix of actor frame element `i` replaced.
    pub fn with_matrix(&self, i: usize, m: PolyMatrix) -> Self {
        assert_eq!((m.rows(), m.cols()), (self.carrier_rank(), self.carrier_rank()));
        let mut out = self.clone();
        out.matrices[i] = m;
        out
    }

    /// `rho_X(V)` for a section `X` of the actor and `V` of the carrier.
    pub fn act(&self, x: &[Polynomial], v: &[Polynomial]) -> Vec<Polynomial> {
        let m = self.carrier_rank();
        let mut out = vec![Polynomial::zero(); m];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let rv = self.matrices[i].apply(v);
            for (o, r) in out.iter_mut().zip(&rv) {
                *o += xi * r;
            }
        }
        for (o, vb) in out.iter_mut().zip(v) {
            *o += self.actor.apply_anchor(x, vb);
        }
        out
    }

    /// `rho_{e_i}(f_alpha)`.
    pub fn act_frame(&self, i: usize, alpha: usize) -> Vec<Polynomial> {
        (0..self.carrier_rank())
            .map(|beta| self.matrices[i][(beta, alpha)].clone())
            .collect()
    }

    /// Flatness residual for the actor frame pair `(i, j)`:
    /// `[R_i, R_j] + a_i(R_j) - a_j(R_i) - sum_k C^k_ij R_k`.
    pub fn curvature(&self, i: usize, j: usize) -> PolyMatrix {
        let a = &self.actor;
        let mut res = self.matrices[i].commutator(&self.matrices[j]);
        res = res.add(&self.matrices[j].map(|p| a.frame_derivation(i, p)));
        res = res.sub(&self.matrices[i].map(|p| a.frame_derivation(j, p)));
        for (k, c) in a.structure(i, j).iter().enumerate() {
            if !c.is_zero() {
                res = res.sub(&self.matrices[k].scale(c));
            }
        }
        res
    }

    pub fn render_carrier(&self, v: &[Polynomial]) -> String {
        render_combination(self.carrier_labels.iter().map(String::as_str).zip(v))
    }

    /// Flatness on frame pairs, plus Leibniz and module linearity on random
    /// sections.
    pub fn check(&self, opts: &CheckOptions) -> CheckReport {
        let mut report = CheckReport::new("representation").with_seed(opts.seed);
        let n = self.actor.rank();
        let m = self.carrier_rank();
        for i in 0..n {
            for j in i + 1..n {
                let res = self.curvature(i, j);
                for beta in 0..m {
                    for alpha in 0..m {
                        let r = &res[(beta, alpha)];
                        if !r.is_zero() {
                            report.push(
                                format!("F({},{})[{},{}]", i + 1, j + 1, beta + 1, alpha + 1),
                                r.to_string(),
                            );
                        }
                    }
                }
            }
        }
        let vars = self.actor.base_vars().to_vec();
        let mut rng = sampler(opts.seed);
        for s in 0..opts.samples {
            let x = poly_vector(&mut rng, &vars, n, opts.max_degree);
            let v = poly_vector(&mut rng, &vars, m, opts.max_degree);
            let f = polynomial(&mut rng, &vars, opts.max_degree, 3);
            let fv: Vec<Polynomial> = v.iter().map(|c| &f * c).collect();
            let lhs = self.act(&x, &fv);
            let rv = self.act(&x, &v);
            let af = self.actor.apply_anchor(&x, &f);
            let leibniz: Vec<Polynomial> = (0..m).map(|b| &(&lhs[b] - &(&f * &rv[b])) - &(&af * &v[b])).collect();
            if leibniz.iter().any(|r| !r.is_zero()) {
                report.push(format!("leibniz[sample {s}]"), self.render_carrier(&leibniz));
            }
            let fx: Vec<Polynomial> = x.iter().map(|c| &f * c).collect();
            let lin: Vec<Polynomial> = self.act(&fx, &v).iter().zip(&rv).map(|(a, b)| a - &(&f * b)).collect();
            if lin.iter().any(|r| !r.is_zero()) {
                report.push(format!("linearity[sample {s}]"), self.render_carrier(&lin));
            }
        }
        report
    }

    /// The contragredient representation on the dual carrier, `R*_i = -R_i^T`.
    pub fn dual(&self) -> Representation {
        Representation {
            actor: self.actor.clone(),
            carrier_labels: self.carrier_labels.iter().map(|l| dual_label(l)).collect(),
            matrices: self.matrices.iter().map(|r| r.transpose().neg()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::random::poly_vector;

    fn aff1() -> LieAlgebroid {
        LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![Polynomial::zero(), Polynomial::one()])
    }

    fn labels(n: usize) -> Vec<String> {
        crate::algebroid::default_labels("f", n)
    }

    #[test]
    fn aff1_on_plane() {
        let r = Representation::new(
            aff1(),
            labels(2),
            vec![
                PolyMatrix::from_ints(&[&[1, 0], &[0, 0]]),
                PolyMatrix::from_ints(&[&[0, 1], &[0, 0]]),
            ],
        )
        .unwrap();
        assert!(r.check(&CheckOptions::default()).passed);
        let bad = r.with_matrix(1, PolyMatrix::identity(2));
        let rep = bad.check(&CheckOptions::default());
        assert!(!rep.passed);
        assert_eq!(bad.curvature(0, 1), PolyMatrix::identity(2).neg());
        assert_eq!(rep.witnesses[0].identity, "F(1,2)[1,1]");
        assert_eq!(rep.witnesses[0].residual, "-1");
    }

    #[test]
    fn zero_representation_flat() {
        let r = Representation::zero(LieAlgebroid::new(&[], 2), labels(3));
        assert!(r.check(&CheckOptions::default()).passed);
        assert!(r.dual().matrices().iter().all(PolyMatrix::is_zero));
    }

    #[test]
    fn dual_on_point() {
        let r = Representation::new(LieAlgebroid::new(&[], 1), labels(1), vec![PolyMatrix::identity(1)]).unwrap();
        assert_eq!(r.dual().act_frame(0, 0), vec![Polynomial::int(-1)]);
        assert_eq!(r.dual().dual(), r);
    }

    #[test]
    fn dual_over_line_pairs_correctly() {
        let x = Polynomial::var("x");
        let line = LieAlgebroid::tangent(&["x"]);
        let r = Representation::new(line, labels(1), vec![PolyMatrix::from_rows(vec![vec![x.clone()]])]).unwrap();
        let d = r.dual();
        assert_eq!(d.matrix(0)[(0, 0)], -&x);
        // <rho*_X psi, Y> = a(X)<psi, Y> - <psi, rho_X Y> on random sections
        let vars = vec!["x".to_string()];
        let mut rng = sampler(3);
        for _ in 0..20 {
            let xs = poly_vector(&mut rng, &vars, 1, 2);
            let psi = poly_vector(&mut rng, &vars, 1, 2);
            let y = poly_vector(&mut rng, &vars, 1, 2);
            let lhs = &d.act(&xs, &psi)[0] * &y[0];
            let rhs = &r.actor().apply_anchor(&xs, &(&psi[0] * &y[0])) - &(&psi[0] * &r.act(&xs, &y)[0]);
            assert_eq!(lhs, rhs);
        }
    }
}
