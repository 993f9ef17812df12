//! Lie bialgebroids: the semi-direct pair of a matched pair, the derivation
//! criterion, the induced base Poisson structure, and Manin doubles.

use crate::algebroid::{increasing_tuples, LieAlgebroid, MultiSection, Section};
use crate::error::{Error, Result};
use crate::matched_pair::{dual_label, MatchedPair, MatchedPairData};
use crate::poisson::PoissonAlgebra;
use crate::report::{CheckOptions, CheckReport};
use crate::symbolic::random::{poly_vector, sampler};
use crate::symbolic::{int, Polynomial, Rational};

/// Sign of the pairing between `A ⊕ B*` and `A* ⊕ B`:
/// `<X + psi, phi + Y> = <phi, X> ∓ <psi, Y>`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PairingSign {
    #[default]
    Minus,
    Plus,
}

/// The algebroid on `A ⊕ B*` with anchor `a(X)` and bracket
/// `[X1,X2] ⊕ (rho*_{X1} psi2 - rho*_{X2} psi1)`.
pub fn semidirect_e(mp: &MatchedPair) -> LieAlgebroid {
    semidirect_e_unchecked(mp.data())
}

/// As `semidirect_e`, for data that may fail the matched-pair equations.
pub fn semidirect_e_unchecked(mp: &MatchedPairData) -> LieAlgebroid {
    let (a, b) = (&mp.a, &mp.b);
    let (n, m) = (a.rank(), b.rank());
    let rho_star = mp.rho.dual();
    let mut labels: Vec<String> = a.labels().to_vec();
    labels.extend(b.labels().iter().map(|l| dual_label(l)));
    let mut anchor: Vec<Vec<Polynomial>> = (0..n).map(|i| a.anchor_of(i).to_vec()).collect();
    anchor.extend(vec![vec![Polynomial::zero(); a.base_dim()]; m]);
    let mut s = vec![vec![vec![Polynomial::zero(); n + m]; n + m]; n + m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                s[i][j][k] = a.structure_function(i, j, k).clone();
            }
        }
        for al in 0..m {
            let img = rho_star.act_frame(i, al);
            for ga in 0..m {
                s[i][n + al][n + ga] = img[ga].clone();
                s[n + al][i][n + ga] = -&img[ga];
            }
        }
    }
    LieAlgebroid::from_parts(a.base_vars().to_vec(), labels, anchor, s).expect("filled antisymmetrically")
}

/// The algebroid on `A* ⊕ B` with anchor `-b(Y)` and bracket
/// `(sigma*_{Y2} phi1 - sigma*_{Y1} phi2) ⊕ [Y2, Y1]`, written in the frame
/// dual to the frame of `semidirect_e` under the pairing of the given sign.
pub fn semidirect_estar(mp: &MatchedPair, sign: PairingSign) -> LieAlgebroid {
    semidirect_estar_unchecked(mp.data(), sign)
}

/// As `semidirect_estar`, for data that may fail the matched-pair equations.
pub fn semidirect_estar_unchecked(mp: &MatchedPairData, sign: PairingSign) -> LieAlgebroid {
    let (a, b) = (&mp.a, &mp.b);
    let (n, m) = (a.rank(), b.rank());
    let sigma_star = mp.sigma.dual();
    let mut labels: Vec<String> = a.labels().iter().map(|l| dual_label(l)).collect();
    labels.extend(b.labels().iter().cloned());
    let mut anchor = vec![vec![Polynomial::zero(); a.base_dim()]; n];
    anchor.extend((0..m).map(|al| b.anchor_of(al).iter().map(|c| -c).collect()));
    let mut s = vec![vec![vec![Polynomial::zero(); n + m]; n + m]; n + m];
    for al in 0..m {
        for be in 0..m {
            for ga in 0..m {
                s[n + al][n + be][n + ga] = -b.structure_function(al, be, ga);
            }
        }
        for i in 0..n {
            let img = sigma_star.act_frame(al, i);
            for j in 0..n {
                s[i][n + al][j] = img[j].clone();
                s[n + al][i][j] = -&img[j];
            }
        }
    }
    let natural =
        LieAlgebroid::from_parts(a.base_vars().to_vec(), labels, anchor, s).expect("filled antisymmetrically");
    match sign {
        PairingSign::Plus => natural,
        PairingSign::Minus => {
            let scales: Vec<Rational> = (0..n).map(|_| int(1)).chain((0..m).map(|_| int(-1))).collect();
            natural.rescale_frame(&scales)
        }
    }
}

/// A pair of algebroids on dual bundles over one base, frame `i` of `estar`
/// dual to frame `i` of `e`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieBialgebroid {
    pub e: LieAlgebroid,
    pub estar: LieAlgebroid,
}

impl LieBialgebroid {
    pub fn new(e: LieAlgebroid, estar: LieAlgebroid) -> Result<Self> {
        if e.rank() != estar.rank() || e.base_vars() != estar.base_vars() {
            return Err(Error::FramesNotInDuality);
        }
        Ok(LieBialgebroid { e, estar })
    }

    /// The semi-direct pair of a verified matched pair.
    pub fn from_matched_pair(mp: &MatchedPair) -> Self {
        LieBialgebroid {
            e: semidirect_e(mp),
            estar: semidirect_estar(mp, PairingSign::Minus),
        }
    }

    fn d_e(&self, w: &MultiSection) -> MultiSection {
        self.e.differential(w).expect("degree within rank")
    }

    /// `d^E[u, v] - [d^E u, v] - [u, d^E v]` for sections of `E*`.
    pub fn derivation_defect(&self, u: &[Polynomial], v: &[Polynomial]) -> MultiSection {
        let (u, v) = (MultiSection::from_section(u), MultiSection::from_section(v));
        let lhs = self.d_e(&self.estar.schouten(&u, &v));
        let r1 = self.estar.schouten(&self.d_e(&u), &v);
        let r2 = self.estar.schouten(&u, &self.d_e(&v));
        lhs.sub(&r1).sub(&r2)
    }

    /// `d^E(e_*(u) f) - [d^E u, f] - [u, d^E f]`.
    pub fn function_defect(&self, u: &[Polynomial], f: &Polynomial) -> MultiSection {
        let n = self.e.rank();
        let fm = MultiSection::function(f.clone(), n);
        let um = MultiSection::from_section(u);
        let lhs = self.d_e(&MultiSection::function(self.estar.apply_anchor(u, f), n));
        let r1 = self.estar.schouten(&self.d_e(&um), &fm);
        let r2 = self.estar.schouten(&um, &self.d_e(&fm));
        lhs.sub(&r1).sub(&r2)
    }

    /// `L_{d^E f} T + [d^{E*} f, T]` for a section `T` of `E`.
    pub fn lied_defect(&self, f: &Polynomial, t: &[Polynomial]) -> Section {
        let def = self.e.differential_of_function(f).to_section();
        let lie = self
            .estar
            .lie_derivative(&def, &MultiSection::from_section(t))
            .expect("degree 1")
            .to_section();
        let dstar = self.estar.differential_of_function(f).to_section();
        let br = self.e.bracket(&dstar, t);
        lie.iter().zip(&br).map(|(a, b)| a + b).collect()
    }
}

/// The derivation criterion on frame pairs of `E*`, its function form on
/// frames and coordinates, the Lie derivative identity on frames and
/// coordinates, and the derivation criterion on random sections.
pub fn check_bialgebroid(bi: &LieBialgebroid, opts: &CheckOptions) -> CheckReport {
    let mut report = CheckReport::new("bialgebroid").with_seed(opts.seed);
    for (name, pre) in [
        ("precondition E axioms", bi.e.check_axioms()),
        ("precondition E* axioms", bi.estar.check_axioms()),
    ] {
        for w in &pre.witnesses {
            report.push(format!("{name}: {}", w.identity), w.residual.clone());
        }
    }
    let n = bi.e.rank();
    let sl = bi.estar.labels();
    for pair in increasing_tuples(n, 2) {
        let (a, b) = (pair[0], pair[1]);
        let r = bi.derivation_defect(&bi.estar.frame(a), &bi.estar.frame(b));
        if !r.is_zero() {
            report.push(format!("full({},{})", sl[a], sl[b]), r.render(sl));
        }
    }
    let vars = bi.e.base_vars().to_vec();
    for a in 0..n {
        for x in &vars {
            let r = bi.function_defect(&bi.estar.frame(a), &Polynomial::var(x));
            if !r.is_zero() {
                report.push(format!("full({};{x})", sl[a]), r.render(sl));
            }
        }
    }
    for x in &vars {
        for a in 0..n {
            let r = bi.lied_defect(&Polynomial::var(x), &bi.e.frame(a));
            if r.iter().any(|p| !p.is_zero()) {
                report.push(format!("lied({x};{})", bi.e.labels()[a]), bi.e.render_section(&r));
            }
        }
    }
    let mut rng = sampler(opts.seed);
    for s in 0..opts.samples {
        let u = poly_vector(&mut rng, &vars, n, opts.max_degree);
        let v = poly_vector(&mut rng, &vars, n, opts.max_degree);
        let r = bi.derivation_defect(&u, &v);
        if !r.is_zero() {
            report.push(format!("full[sample {s}]"), r.render(sl));
            break;
        }
    }
    report
}

/// The bivector `pi^{mu nu} = sum_i e(e_i)^mu e_*(eps^i)^nu` on the base.
pub fn base_poisson(bi: &LieBialgebroid) -> Result<PoissonAlgebra> {
    let d = bi.e.base_dim();
    let pi = (0..d)
        .map(|mu| {
            (0..d)
                .map(|nu| {
                    (0..bi.e.rank())
                        .map(|i| &bi.e.anchor_of(i)[mu] * &bi.estar.anchor_of(i)[nu])
                        .sum()
                })
                .collect()
        })
        .collect();
    PoissonAlgebra::new(bi.e.base_vars().to_vec(), pi)
}

/// Compares the Lie derivative `L_{phi ⊕ Y}(X ⊕ psi)` of the semi-direct
/// pair with its closed form `-sigma_Y(X) ⊕ psibar`, where
/// `<psibar, Y'> = -b(Y)<psi, Y'> + <sigma*_{Y'} phi, X> + <psi, [Y, Y']>`.
pub fn check_lied_lemma(
    mp: &MatchedPair,
    phi: &[Polynomial],
    y: &[Polynomial],
    x: &[Polynomial],
    psi: &[Polynomial],
) -> CheckReport {
    let mut report = CheckReport::new("lied-lemma");
    let bi = LieBialgebroid::from_matched_pair(mp);
    let (a, b) = (&mp.a, &mp.b);
    let (n, m) = (a.rank(), b.rank());
    // In the dual frame (eps^i, -f_alpha) the section phi ⊕ Y has components (phi, -Y).
    let u: Vec<Polynomial> = phi.iter().cloned().chain(y.iter().map(|c| -c)).collect();
    let t: Vec<Polynomial> = x.iter().chain(psi).cloned().collect();
    let computed = bi
        .estar
        .lie_derivative(&u, &MultiSection::from_section(&t))
        .expect("degree 1")
        .to_section();
    let sigma_star = mp.sigma.dual();
    let mut closed: Vec<Polynomial> = mp.sigma.act(y, x).iter().map(|c| -c).collect();
    for al in 0..m {
        let fa = b.frame(al);
        let mut v = -b.apply_anchor(y, &psi[al]);
        let s = sigma_star.act(&fa, phi);
        v += crate::symbolic::poly::dot(&s, x);
        v += crate::symbolic::poly::dot(psi, &b.bracket(y, &fa));
        closed.push(v);
    }
    let residual: Vec<Polynomial> = computed.iter().zip(&closed).map(|(c, k)| c - k).collect();
    if residual.iter().any(|r| !r.is_zero()) {
        report.push(format!("lied-lemma(n={n},m={m})"), bi.e.render_section(&residual));
    }
    report
}

/// The Lie algebra on `g ⊕ g*` with mixed bracket
/// `[e_i, eps^j] = -sum_k c^j_{ik} eps^k + sum_k gamma^{jk}_i e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManinDouble {
    pub g: LieAlgebroid,
    pub gstar: LieAlgebroid,
    pub double: LieAlgebroid,
}

pub fn manin_double(g: &LieAlgebroid, gstar: &LieAlgebroid) -> Result<ManinDouble> {
    if g.base_dim() != 0 || gstar.base_dim() != 0 {
        return Err(Error::Dimension("Manin doubles need point-base Lie algebras".into()));
    }
    if g.rank() != gstar.rank() {
        return Err(Error::FramesNotInDuality);
    }
    let n = g.rank();
    let mut labels: Vec<String> = g.labels().to_vec();
    labels.extend(gstar.labels().iter().cloned());
    let mut s = vec![vec![vec![Polynomial::zero(); 2 * n]; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                s[i][j][k] = g.structure_function(i, j, k).clone();
                s[n + i][n + j][n + k] = gstar.structure_function(i, j, k).clone();
                let eps = -g.structure_function(i, k, j);
                let e = gstar.structure_function(j, k, i).clone();
                s[i][n + j][n + k] = eps.clone();
                s[n + j][i][n + k] = -&eps;
                s[i][n + j][k] = e.clone();
                s[n + j][i][k] = -&e;
            }
        }
    }
    let double = LieAlgebroid::from_parts(vec![], labels, vec![vec![]; 2 * n], s)?;
    Ok(ManinDouble {
        g: g.clone(),
        gstar: gstar.clone(),
        double,
    })
}

impl ManinDouble {
    pub fn half_rank(&self) -> usize {
        self.g.rank()
    }

    /// `<X + phi, Y + psi> = psi(X) + phi(Y)` on frame elements.
    pub fn pairing(&self, a: usize, b: usize) -> Rational {
        let n = self.half_rank();
        if (a < n) != (b < n) && a % n == b % n {
            int(1)
        } else {
            int(0)
        }
    }

    fn bracket_const(&self, a: usize, b: usize, k: usize) -> Rational {
        self.double
            .structure_function(a, b, k)
            .constant_value()
            .expect("point base")
    }

    /// Invariance on all basis triples, isotropy and closure of both halves,
    /// and the Jacobi identity of the double.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new("manin");
        let n = self.half_rank();
        let labels = self.double.labels();
        for a in 0..2 * n {
            for b in 0..2 * n {
                for c in 0..2 * n {
                    let mut v = Rational::from_integer(0.into());
                    for k in 0..2 * n {
                        v += self.bracket_const(a, b, k) * self.pairing(k, c);
                        v += self.bracket_const(a, c, k) * self.pairing(b, k);
                    }
                    if v != int(0) {
                        report.push(
                            format!("invariance({},{},{})", labels[a], labels[b], labels[c]),
                            crate::symbolic::rational::format_rational(&v),
                        );
                    }
                }
            }
        }
        for (name, range) in [("g", 0..n), ("g*", n..2 * n)] {
            for a in range.clone() {
                for b in range.clone() {
                    if self.pairing(a, b) != int(0) {
                        report.push(format!("isotropy {name}({},{})", labels[a], labels[b]), "1");
                    }
                    for k in 0..2 * n {
                        if !range.contains(&k) && self.bracket_const(a, b, k) != int(0) {
                            report.push(
                                format!("closure {name}({},{})", labels[a], labels[b]),
                                self.double.render_section(self.double.structure(a, b)),
                            );
                            break;
                        }
                    }
                }
            }
        }
        for w in self.double.check_axioms().witnesses {
            report.push(w.identity, w.residual);
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matched_pair::Representation;
    use crate::symbolic::PolyMatrix;

    fn p(n: i64) -> Polynomial {
        Polynomial::int(n)
    }

    fn aff1() -> LieAlgebroid {
        LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![p(0), p(1)])
    }

    fn xy_pair() -> MatchedPair {
        let a = LieAlgebroid::new(&[], 1).with_labels(&["X"]);
        let b = LieAlgebroid::new(&[], 1).with_labels(&["Y"]);
        let rho = Representation::new(a.clone(), vec!["Y".into()], vec![PolyMatrix::identity(1)]).unwrap();
        let sigma = Representation::zero(b.clone(), vec!["X".into()]);
        MatchedPairData::new(a, b, rho, sigma)
            .unwrap()
            .verify(&CheckOptions::default())
            .unwrap()
    }

    #[test]
    fn semidirect_xy() {
        let mp = xy_pair();
        let e = semidirect_e(&mp);
        assert_eq!(e.structure(0, 1), &[p(0), p(-1)]);
        let bi = LieBialgebroid::from_matched_pair(&mp);
        assert!(check_bialgebroid(&bi, &CheckOptions::default()).passed);
        assert!(base_poisson(&bi).unwrap().is_zero());
        let zero = vec![p(0)];
        assert!(check_lied_lemma(&mp, &zero, &[p(1)], &[p(1)], &zero).passed);
    }

    #[test]
    fn abelian_bialgebroid() {
        let bi = LieBialgebroid::new(LieAlgebroid::new(&[], 2), LieAlgebroid::new(&[], 2)).unwrap();
        assert!(check_bialgebroid(&bi, &CheckOptions::default()).passed);
        let err = LieBialgebroid::new(LieAlgebroid::new(&[], 2), LieAlgebroid::new(&[], 3)).unwrap_err();
        assert_eq!(err.to_string(), "frames not in duality");
    }

    #[test]
    fn manin_examples() {
        let n = manin_double(&aff1(), &LieAlgebroid::new(&[], 2)).unwrap();
        // [e1, eps2] = -eps2
        assert_eq!(n.double.structure(0, 3), &[p(0), p(0), p(0), p(-1)]);
        assert!(n.check().passed);
        // every cobracket on aff(1) is a cocycle, so this double is still Lie
        let other = LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![p(1), p(0)]);
        assert!(manin_double(&aff1(), &other).unwrap().check().passed);
        let sl2 = LieAlgebroid::new(&[], 3)
            .with_bracket(0, 1, vec![p(0), p(2), p(0)])
            .with_bracket(0, 2, vec![p(0), p(0), p(-2)])
            .with_bracket(1, 2, vec![p(1), p(0), p(0)]);
        let bad = LieAlgebroid::new(&[], 3).with_bracket(0, 1, vec![p(0), p(1), p(0)]);
        let r = manin_double(&sl2, &bad).unwrap().check();
        assert!(!r.passed);
        assert!(r.witnesses.iter().all(|w| w.identity.starts_with("J(")));
    }
}
