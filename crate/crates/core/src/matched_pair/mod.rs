//! Matched pairs of Lie algebroids, their direct-sum doubles, and vacant
//! double Lie algebroids.

mod representation;
mod vacant;

pub use representation::{dual_label, Representation};
pub use vacant::{build_vacant_double, check_vacant_conditions, extract_from_vacant, fresh_vars, VacantDouble};

use crate::algebroid::{field_commutator, render_field, LieAlgebroid, Section};
use crate::error::{Error, Result};
use crate::report::{CheckOptions, CheckReport};
use crate::symbolic::random::{poly_vector, sampler};
use crate::symbolic::{PolyMatrix, Polynomial};

/// Candidate matched-pair data: two algebroids on one base and mutual
/// representations. Nothing beyond shapes is checked on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchedPairData {
    pub a: LieAlgebroid,
    pub b: LieAlgebroid,
    /// Representation of `a` on the bundle of `b`.
    pub rho: Representation,
    /// Representation of `b` on the bundle of `a`.
    pub sigma: Representation,
}

/// Matched-pair data that has passed `check_matched_pair`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchedPair(MatchedPairData);

impl std::ops::Deref for MatchedPair {
    type Target = MatchedPairData;
    fn deref(&self) -> &MatchedPairData {
        &self.0
    }
}

impl MatchedPair {
    pub fn data(&self) -> &MatchedPairData {
        &self.0
    }

    pub fn into_data(self) -> MatchedPairData {
        self.0
    }

    /// The algebroid on `A ⊕ B`.
    pub fn double_sum(&self) -> LieAlgebroid {
        self.0.double_sum_unchecked()
    }
}

impl MatchedPairData {
    pub fn new(a: LieAlgebroid, b: LieAlgebroid, rho: Representation, sigma: Representation) -> Result<Self> {
        if a.base_vars() != b.base_vars() {
            return Err(Error::Dimension("A and B must share a base".into()));
        }
        if rho.actor() != &a || rho.carrier_rank() != b.rank() {
            return Err(Error::Dimension("rho must be a representation of A on B".into()));
        }
        if sigma.actor() != &b || sigma.carrier_rank() != a.rank() {
            return Err(Error::Dimension("sigma must be a representation of B on A".into()));
        }
        Ok(MatchedPairData { a, b, rho, sigma })
    }

    /// Pair with both representations replaced; shapes must agree.
    pub fn with_reps(&self, rho: Representation, sigma: Representation) -> Result<Self> {
        MatchedPairData::new(self.a.clone(), self.b.clone(), rho, sigma)
    }

    /// Runs `check_matched_pair` and wraps the data if it passes.
    pub fn verify(self, opts: &CheckOptions) -> std::result::Result<MatchedPair, CheckReport> {
        let report = check_matched_pair(&self, opts);
        if report.passed {
            Ok(MatchedPair(self))
        } else {
            Err(report)
        }
    }

    fn sigma_act(&self, y: &[Polynomial], x: &[Polynomial]) -> Section {
        self.sigma.act(y, x)
    }

    fn rho_act(&self, x: &[Polynomial], y: &[Polynomial]) -> Section {
        self.rho.act(x, y)
    }

    /// RHS minus LHS of the derivation equation for `rho` over `[Y1, Y2]`.
    pub fn rho_equation(&self, x: &[Polynomial], y1: &[Polynomial], y2: &[Polynomial]) -> Section {
        let b = &self.b;
        let lhs = self.rho_act(x, &b.bracket(y1, y2));
        let t1 = b.bracket(&self.rho_act(x, y1), y2);
        let t2 = b.bracket(y1, &self.rho_act(x, y2));
        let t3 = self.rho_act(&self.sigma_act(y2, x), y1);
        let t4 = self.rho_act(&self.sigma_act(y1, x), y2);
        (0..b.rank())
            .map(|k| &(&(&(&t1[k] + &t2[k]) + &t3[k]) - &t4[k]) - &lhs[k])
            .collect()
    }

    /// RHS minus LHS of the derivation equation for `sigma` over `[X1, X2]`.
    pub fn sigma_equation(&self, y: &[Polynomial], x1: &[Polynomial], x2: &[Polynomial]) -> Section {
        let a = &self.a;
        let lhs = self.sigma_act(y, &a.bracket(x1, x2));
        let t1 = a.bracket(&self.sigma_act(y, x1), x2);
        let t2 = a.bracket(x1, &self.sigma_act(y, x2));
        let t3 = self.sigma_act(&self.rho_act(x2, y), x1);
        let t4 = self.sigma_act(&self.rho_act(x1, y), x2);
        (0..a.rank())
            .map(|k| &(&(&(&t1[k] + &t2[k]) + &t3[k]) - &t4[k]) - &lhs[k])
            .collect()
    }

    /// RHS minus LHS of `a(sigma_Y X) - b(rho_X Y) = [b(Y), a(X)]`.
    pub fn anchor_equation(&self, x: &[Polynomial], y: &[Polynomial]) -> Vec<Polynomial> {
        let vars = self.a.base_vars();
        let lhs_a = self.a.anchor_field(&self.sigma_act(y, x));
        let lhs_b = self.b.anchor_field(&self.rho_act(x, y));
        let rhs = field_commutator(vars, &self.b.anchor_field(y), &self.a.anchor_field(x));
        (0..vars.len())
            .map(|nu| &rhs[nu] - &(&lhs_a[nu] - &lhs_b[nu]))
            .collect()
    }

    /// The bracket of `A ⊕ B` with mixed terms `[X, Y] = -sigma_Y(X) ⊕ rho_X(Y)`,
    /// built whether or not the matched-pair equations hold.
    pub fn double_sum_unchecked(&self) -> LieAlgebroid {
        let (a, b) = (&self.a, &self.b);
        let (n, m) = (a.rank(), b.rank());
        let mut labels: Vec<String> = a.labels().to_vec();
        for l in b.labels() {
            let mut name = l.clone();
            while labels.contains(&name) {
                name.push_str("_b");
            }
            labels.push(name);
        }
        let mut anchor: Vec<Vec<Polynomial>> = (0..n).map(|i| a.anchor_of(i).to_vec()).collect();
        anchor.extend((0..m).map(|al| b.anchor_of(al).to_vec()));
        let mut structure = vec![vec![vec![Polynomial::zero(); n + m]; n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[i][j][k] = a.structure_function(i, j, k).clone();
                }
            }
        }
        for al in 0..m {
            for be in 0..m {
                for ga in 0..m {
                    structure[n + al][n + be][n + ga] = b.structure_function(al, be, ga).clone();
                }
            }
        }
        for i in 0..n {
            for al in 0..m {
                let sig = self.sigma.act_frame(al, i);
                let rh = self.rho.act_frame(i, al);
                for j in 0..n {
                    structure[i][n + al][j] = -&sig[j];
                    structure[n + al][i][j] = sig[j].clone();
                }
                for be in 0..m {
                    structure[i][n + al][n + be] = rh[be].clone();
                    structure[n + al][i][n + be] = -&rh[be];
                }
            }
        }
        LieAlgebroid::from_parts(a.base_vars().to_vec(), labels, anchor, structure)
            .expect("mixed brackets are filled antisymmetrically")
    }
}

/// The three matched-pair equations on frames and on random sections, with
/// the axioms of both algebroids and both representations as prerequisites.
pub fn check_matched_pair(mp: &MatchedPairData, opts: &CheckOptions) -> CheckReport {
    let mut report = CheckReport::new("matched-pair").with_seed(opts.seed);
    for (name, pre) in [
        ("precondition A axioms", mp.a.check_axioms()),
        ("precondition B axioms", mp.b.check_axioms()),
        ("precondition rho", mp.rho.check(opts)),
        ("precondition sigma", mp.sigma.check(opts)),
    ] {
        for w in &pre.witnesses {
            report.push(format!("{name}: {}", w.identity), w.residual.clone());
        }
    }
    let (a, b) = (&mp.a, &mp.b);
    let (n, m) = (a.rank(), b.rank());
    let vars = a.base_vars();
    let a_lab = |i: usize| &a.labels()[i];
    let b_lab = |i: usize| &b.labels()[i];
    for i in 0..n {
        for al in 0..m {
            for be in al + 1..m {
                let r = mp.rho_equation(&a.frame(i), &b.frame(al), &b.frame(be));
                if r.iter().any(|p| !p.is_zero()) {
                    report.push(
                        format!("rho-derivation({};{},{})", a_lab(i), b_lab(al), b_lab(be)),
                        b.render_section(&r),
                    );
                }
            }
        }
    }
    for al in 0..m {
        for i in 0..n {
            for j in i + 1..n {
                let r = mp.sigma_equation(&b.frame(al), &a.frame(i), &a.frame(j));
                if r.iter().any(|p| !p.is_zero()) {
                    report.push(
                        format!("sigma-derivation({};{},{})", b_lab(al), a_lab(i), a_lab(j)),
                        a.render_section(&r),
                    );
                }
            }
        }
    }
    for i in 0..n {
        for al in 0..m {
            let r = mp.anchor_equation(&a.frame(i), &b.frame(al));
            if r.iter().any(|p| !p.is_zero()) {
                report.push(format!("anchor({},{})", a_lab(i), b_lab(al)), render_field(vars, &r));
            }
        }
    }

    let mut rng = sampler(opts.seed);
    let (mut rho_bad, mut sigma_bad, mut anchor_bad) = (false, false, false);
    for s in 0..opts.samples {
        let x1 = poly_vector(&mut rng, vars, n, opts.max_degree);
        let x2 = poly_vector(&mut rng, vars, n, opts.max_degree);
        let y1 = poly_vector(&mut rng, vars, m, opts.max_degree);
        let y2 = poly_vector(&mut rng, vars, m, opts.max_degree);
        if !rho_bad {
            let r = mp.rho_equation(&x1, &y1, &y2);
            if r.iter().any(|p| !p.is_zero()) {
                rho_bad = true;
                report.push(format!("rho-derivation[sample {s}]"), b.render_section(&r));
            }
        }
        if !sigma_bad {
            let r = mp.sigma_equation(&y1, &x1, &x2);
            if r.iter().any(|p| !p.is_zero()) {
                sigma_bad = true;
                report.push(format!("sigma-derivation[sample {s}]"), a.render_section(&r));
            }
        }
        if !anchor_bad {
            let r = mp.anchor_equation(&x1, &y1);
            if r.iter().any(|p| !p.is_zero()) {
                anchor_bad = true;
                report.push(format!("anchor[sample {s}]"), render_field(vars, &r));
            }
        }
    }
    report
}

/// Reads `rho` and `sigma` off the mixed brackets of an algebroid on `A ⊕ B`
/// split by the given frame indices.
pub fn extract_matched_pair(d: &LieAlgebroid, a_idx: &[usize], b_idx: &[usize]) -> Result<MatchedPairData> {
    let total = a_idx.len() + b_idx.len();
    let mut seen = vec![false; d.rank()];
    for &i in a_idx.iter().chain(b_idx) {
        if i >= d.rank() || seen[i] {
            return Err(Error::Dimension("split must partition the frame".into()));
        }
        seen[i] = true;
    }
    if total != d.rank() {
        return Err(Error::Dimension("split must partition the frame".into()));
    }
    let closed = |idx: &[usize], other: &[usize]| {
        idx.iter().all(|&i| {
            idx.iter()
                .all(|&j| other.iter().all(|&k| d.structure_function(i, j, k).is_zero()))
        })
    };
    if !closed(a_idx, b_idx) {
        return Err(Error::NotClosed("A".into()));
    }
    if !closed(b_idx, a_idx) {
        return Err(Error::NotClosed("B".into()));
    }
    let base: Vec<&str> = d.base_vars().iter().map(String::as_str).collect();
    let sub = |idx: &[usize]| {
        let labels: Vec<String> = idx.iter().map(|&i| d.labels()[i].clone()).collect();
        let anchor = idx.iter().map(|&i| d.anchor_of(i).to_vec()).collect();
        let structure = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .map(|&j| idx.iter().map(|&k| d.structure_function(i, j, k).clone()).collect())
                    .collect()
            })
            .collect();
        LieAlgebroid::from_parts(base.iter().map(|s| s.to_string()).collect(), labels, anchor, structure)
    };
    let a = sub(a_idx)?;
    let b = sub(b_idx)?;
    let (n, m) = (a_idx.len(), b_idx.len());
    let rho_mats = (0..n)
        .map(|i| {
            let mut r = PolyMatrix::zeros(m, m);
            for al in 0..m {
                for be in 0..m {
                    r[(be, al)] = d.structure_function(a_idx[i], b_idx[al], b_idx[be]).clone();
                }
            }
            r
        })
        .collect();
    let sigma_mats = (0..m)
        .map(|al| {
            let mut s = PolyMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    s[(j, i)] = -d.structure_function(a_idx[i], b_idx[al], a_idx[j]);
                }
            }
            s
        })
        .collect();
    let rho = Representation::new(a.clone(), b.labels().to_vec(), rho_mats)?;
    let sigma = Representation::new(b.clone(), a.labels().to_vec(), sigma_mats)?;
    MatchedPairData::new(a, b, rho, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: i64) -> Polynomial {
        Polynomial::int(n)
    }

    fn lie(rank: usize, labels: &[&str]) -> LieAlgebroid {
        LieAlgebroid::new(&[], rank).with_labels(labels)
    }

    /// A = <X>, B = <Y> at a point, rho_X(Y) = Y, sigma = 0.
    fn xy_pair() -> MatchedPairData {
        let a = lie(1, &["X"]);
        let b = lie(1, &["Y"]);
        let rho = Representation::new(a.clone(), vec!["Y".into()], vec![PolyMatrix::identity(1)]).unwrap();
        let sigma = Representation::zero(b.clone(), vec!["X".into()]);
        MatchedPairData::new(a, b, rho, sigma).unwrap()
    }

    #[test]
    fn xy_pair_passes_and_doubles_to_aff1() {
        let mp = xy_pair().verify(&CheckOptions::default()).unwrap();
        let d = mp.double_sum();
        assert_eq!(d.structure(0, 1), &[p(0), p(1)]);
        assert!(d.check_axioms().passed);
    }

    #[test]
    fn aff1_with_bad_sigma_fails_second_equation() {
        let a = LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![p(0), p(1)]);
        let b = lie(1, &["f"]);
        let rho = Representation::zero(a.clone(), vec!["f".into()]);
        let sigma = Representation::new(
            b.clone(),
            a.labels().to_vec(),
            vec![PolyMatrix::from_ints(&[&[1, 0], &[0, 0]])],
        )
        .unwrap();
        let mp = MatchedPairData::new(a, b, rho, sigma).unwrap();
        let r = check_matched_pair(&mp, &CheckOptions::default());
        assert!(!r.passed);
        let w = r
            .witnesses
            .iter()
            .find(|w| w.identity.starts_with("sigma-derivation("))
            .unwrap();
        assert_eq!(w.identity, "sigma-derivation(f;e1,e2)");
        assert_eq!(w.residual, "e2");
    }

    #[test]
    fn trivial_pair_passes() {
        let a = LieAlgebroid::new(&[], 2);
        let b = lie(2, &["f1", "f2"]);
        let rho = Representation::zero(a.clone(), b.labels().to_vec());
        let sigma = Representation::zero(b.clone(), a.labels().to_vec());
        let mp = MatchedPairData::new(a, b, rho, sigma).unwrap();
        let mp = mp.verify(&CheckOptions::default()).unwrap();
        assert!(mp.double_sum().check_axioms().passed);
    }

    #[test]
    fn extraction_examples() {
        let aff = LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![p(0), p(1)]);
        let mp = extract_matched_pair(&aff, &[0], &[1]).unwrap();
        assert!(mp.sigma.matrix(0).is_zero());
        assert_eq!(mp.rho.matrix(0), &PolyMatrix::identity(1));
        let sl2 = lie(3, &["H", "E", "F"])
            .with_bracket(0, 1, vec![p(0), p(2), p(0)])
            .with_bracket(0, 2, vec![p(0), p(0), p(-2)])
            .with_bracket(1, 2, vec![p(1), p(0), p(0)]);
        let err = extract_matched_pair(&sl2, &[0], &[1, 2]).unwrap_err();
        assert_eq!(err.to_string(), "B is not closed under the bracket");
        let ab = LieAlgebroid::new(&[], 3);
        let mp = extract_matched_pair(&ab, &[0, 2], &[1]).unwrap();
        assert!(mp.rho.matrices().iter().all(PolyMatrix::is_zero));
    }

    #[test]
    fn round_trip() {
        let mp = xy_pair();
        let d = mp.double_sum_unchecked();
        let back = extract_matched_pair(&d, &[0], &[1]).unwrap();
        assert_eq!(back, mp);
    }
}
