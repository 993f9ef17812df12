//! Lie algebroids in frame presentation over a polynomial base.

pub(crate) mod action;
mod multisection;

pub use action::{action_algebroid, ActionAlgebroid};
pub use multisection::{increasing_tuples, sort_with_sign, MultiSection};

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::symbolic::poly::render_combination;
use crate::symbolic::{Polynomial, Rational};

/// Coefficients of a section in the frame.
pub type Section = Vec<Polynomial>;

/// Components of a vector field on the base, one per base variable.
pub type VectorField = Vec<Polynomial>;

/// Lie algebroid given by an anchor and structure functions on a frame.
///
/// `anchor[i][mu]` is the `mu`-th component of the anchor of frame element `i`
/// and `structure[i][j][k]` the `k`-th coefficient of `[e_i, e_j]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebroid {
    base_vars: Vec<String>,
    labels: Vec<String>,
    anchor: Vec<Vec<Polynomial>>,
    structure: Vec<Vec<Vec<Polynomial>>>,
}

/// Default frame labels `e1, ..., en`.
pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl LieAlgebroid {
    /// Rank `rank` over `base_vars` with zero anchor and zero bracket.
    pub fn new(base_vars: &[&str], rank: usize) -> Self {
        let d = base_vars.len();
        LieAlgebroid {
            base_vars: base_vars.iter().map(|s| s.to_string()).collect(),
            labels: default_labels("e", rank),
            anchor: vec![vec![Polynomial::zero(); d]; rank],
            structure: vec![vec![vec![Polynomial::zero(); rank]; rank]; rank],
        }
    }

    /// Validated constructor. `structure` must be antisymmetric.
    pub fn from_parts(
        base_vars: Vec<String>,
        labels: Vec<String>,
        anchor: Vec<Vec<Polynomial>>,
        structure: Vec<Vec<Vec<Polynomial>>>,
    ) -> Result<Self> {
        let n = labels.len();
        let d = base_vars.len();
        if anchor.len() != n || anchor.iter().any(|row| row.len() != d) {
            return Err(Error::Dimension(format!("anchor must be {n}x{d}")));
        }
        if structure.len() != n
            || structure
                .iter()
                .any(|row| row.len() != n || row.iter().any(|c| c.len() != n))
        {
            return Err(Error::Dimension(format!("structure table must be {n}x{n}x{n}")));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if structure[i][j][k] != -&structure[j][i][k] {
                        return Err(Error::Antisymmetry(i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        Ok(LieAlgebroid {
            base_vars,
            labels,
            anchor,
            structure,
        })
    }

    /// The tangent algebroid of affine space with coordinates `vars`.
    pub fn tangent(vars: &[&str]) -> Self {
        let mut a = LieAlgebroid::new(vars, vars.len());
        a.labels = vars.iter().map(|v| format!("d_{v}")).collect();
        for i in 0..vars.len() {
            a.anchor[i][i] = Polynomial::one();
        }
        a
    }

    pub fn with_labels(mut self, labels: &[&str]) -> Self {
        assert_eq!(labels.len(), self.rank(), "label count must equal rank");
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    /// Sets the anchor of frame element `i` (0-based).
    pub fn with_anchor(mut self, i: usize, field: Vec<Polynomial>) -> Self {
        self.set_anchor(i, field);
        self
    }

    /// Sets `[e_i, e_j]` (0-based) and its antisymmetric partner.
    pub fn with_bracket(mut self, i: usize, j: usize, coeffs: Vec<Polynomial>) -> Self {
        self.set_bracket(i, j, coeffs);
        self
    }

    pub fn set_anchor(&mut self, i: usize, field: Vec<Polynomial>) {
        assert_eq!(field.len(), self.base_dim(), "anchor length must equal base dimension");
        self.anchor[i] = field;
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: Vec<Polynomial>) {
        assert_eq!(coeffs.len(), self.rank(), "bracket length must equal rank");
        assert!(
            i != j || coeffs.iter().all(Polynomial::is_zero),
            "[e_i, e_i] must vanish"
        );
        self.structure[j][i] = coeffs.iter().map(|c| -c).collect();
        self.structure[i][j] = coeffs;
    }

    pub fn base_vars(&self) -> &[String] {
        &self.base_vars
    }

    pub fn base_dim(&self) -> usize {
        self.base_vars.len()
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn anchor_of(&self, i: usize) -> &[Polynomial] {
        &self.anchor[i]
    }

    /// Coefficients of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Polynomial] {
        &self.structure[i][j]
    }

    pub fn structure_function(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        &self.structure[i][j][k]
    }

    pub fn frame(&self, i: usize) -> Section {
        let mut s = vec![Polynomial::zero(); self.rank()];
        s[i] = Polynomial::one();
        s
    }

    pub fn zero_section(&self) -> Section {
        vec![Polynomial::zero(); self.rank()]
    }

    /// `a(e_i)(f)`.
    pub fn frame_derivation(&self, i: usize, f: &Polynomial) -> Polynomial {
        apply_field(&self.base_vars, &self.anchor[i], f)
    }

    /// The vector field `a(X)`.
    pub fn anchor_field(&self, x: &[Polynomial]) -> VectorField {
        let mut out = vec![Polynomial::zero(); self.base_dim()];
        for (xi, row) in x.iter().zip(&self.anchor) {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(row) {
                *o += xi * a;
            }
        }
        out
    }

    /// `a(X)(f)`.
    pub fn apply_anchor(&self, x: &[Polynomial], f: &Polynomial) -> Polynomial {
        apply_field(&self.base_vars, &self.anchor_field(x), f)
    }

    /// Leibniz extension of the frame bracket to arbitrary sections.
    pub fn bracket(&self, x: &[Polynomial], y: &[Polynomial]) -> Section {
        let n = self.rank();
        let mut out = vec![Polynomial::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let f = &x[i] * &y[j];
                for (o, c) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        let ax = self.anchor_field(x);
        let ay = self.anchor_field(y);
        for k in 0..n {
            out[k] += apply_field(&self.base_vars, &ax, &y[k]);
            out[k] -= apply_field(&self.base_vars, &ay, &x[k]);
        }
        out
    }

    /// Coefficients of the Jacobiator of three frame elements.
    pub fn frame_jacobiator(&self, i: usize, j: usize, k: usize) -> Section {
        let n = self.rank();
        let mut out = vec![Polynomial::zero(); n];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for l in 0..n {
                for m in 0..n {
                    let s = &self.structure[b][c][m];
                    if !s.is_zero() {
                        out[l] += s * &self.structure[a][m][l];
                    }
                }
                out[l] += self.frame_derivation(a, &self.structure[b][c][l]);
            }
        }
        out
    }

    /// Jacobiator of arbitrary sections, computed through `bracket`.
    pub fn jacobiator(&self, x: &[Polynomial], y: &[Polynomial], z: &[Polynomial]) -> Section {
        let a = self.bracket(x, &self.bracket(y, z));
        let b = self.bracket(y, &self.bracket(z, x));
        let c = self.bracket(z, &self.bracket(x, y));
        (0..self.rank()).map(|l| &(&a[l] + &b[l]) + &c[l]).collect()
    }

    /// Jacobi identity on frame triples and the anchor morphism property on
    /// frame pairs, as exact polynomial identities.
    pub fn check_axioms(&self) -> CheckReport {
        let mut report = CheckReport::new("algebroid");
        let n = self.rank();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let jac = self.frame_jacobiator(i, j, k);
                    for (l, r) in jac.iter().enumerate() {
                        if !r.is_zero() {
                            report.push(
                                format!("J({},{},{})[l={}]", i + 1, j + 1, k + 1, l + 1),
                                r.render_times(&self.labels[l]),
                            );
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.anchor_field(&self.structure[i][j]);
                let rhs = field_commutator(&self.base_vars, &self.anchor[i], &self.anchor[j]);
                for (nu, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
                    let res = l - r;
                    if !res.is_zero() {
                        report.push(
                            format!("M({},{})[{}]", i + 1, j + 1, self.base_vars[nu]),
                            res.render_times(&format!("d/d{}", self.base_vars[nu])),
                        );
                    }
                }
            }
        }
        report
    }

    /// The coboundary operator on forms.
    pub fn differential(&self, w: &MultiSection) -> Result<MultiSection> {
        let n = self.rank();
        let p = w.degree();
        if p > n || w.rank() != n {
            return Err(Error::DegreeExceedsRank);
        }
        let mut out = MultiSection::zero(p + 1, n);
        for idx in increasing_tuples(n, p + 1) {
            let mut val = Polynomial::zero();
            for a in 0..=p {
                let mut rest = idx.clone();
                rest.remove(a);
                let term = self.frame_derivation(idx[a], &w.component(&rest));
                if a % 2 == 0 {
                    val += term;
                } else {
                    val -= term;
                }
            }
            for a in 0..=p {
                for b in a + 1..=p {
                    let mut rest = idx.clone();
                    rest.remove(b);
                    rest.remove(a);
                    let mut term = Polynomial::zero();
                    for (k, c) in self.structure[idx[a]][idx[b]].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut args = vec![k];
                        args.extend_from_slice(&rest);
                        term += c * &w.component(&args);
                    }
                    if (a + b) % 2 == 0 {
                        val += term;
                    } else {
                        val -= term;
                    }
                }
            }
            out.set(&idx, val);
        }
        Ok(out)
    }

    /// The differential of a function, as a 1-form.
    pub fn differential_of_function(&self, f: &Polynomial) -> MultiSection {
        self.differential(&MultiSection::function(f.clone(), self.rank()))
            .expect("degree 0 never exceeds rank")
    }

    /// `L_X = d i_X + i_X d` on forms.
    pub fn lie_derivative(&self, x: &[Polynomial], t: &MultiSection) -> Result<MultiSection> {
        let dt = self.differential(t)?;
        let first = dt.interior(x);
        if t.degree() == 0 {
            return Ok(first);
        }
        Ok(first.add(&self.differential(&t.interior(x))?))
    }

    /// Graded bracket of multisections; `[f, g]` is zero.
    pub fn schouten(&self, p: &MultiSection, q: &MultiSection) -> MultiSection {
        let n = self.rank();
        let (dp, dq) = (p.degree(), q.degree());
        match (dp, dq) {
            (0, 0) => MultiSection::zero(0, n),
            (1, 0) => MultiSection::function(self.apply_anchor(&p.to_section(), &q.to_function()), n),
            (0, 1) => MultiSection::function(-self.apply_anchor(&q.to_section(), &p.to_function()), n),
            (1, 1) => MultiSection::from_section(&self.bracket(&p.to_section(), &q.to_section())),
            _ if dq >= 2 => {
                // Q = sum g e_j ^ e_J'; expand by the graded Leibniz rule.
                let mut out = MultiSection::zero(dp + dq - 1, n);
                for (idx, g) in q.iter() {
                    let mut head = MultiSection::zero(1, n);
                    head.set(&[idx[0]], g.clone());
                    let tail = MultiSection::frame(&idx[1..], n);
                    let left = self.schouten(p, &head).wedge(&tail);
                    let right = head.wedge(&self.schouten(p, &tail));
                    out = if dp % 2 == 1 {
                        out.add(&left).add(&right)
                    } else {
                        out.add(&left).sub(&right)
                    };
                }
                out
            }
            _ => graded_swap_sign(dp, dq, self.schouten(q, p)),
        }
    }

    /// Rescales the frame to `e'_i = s_i e_i` with nonzero constants `s_i`.
    pub fn rescale_frame(&self, scales: &[Rational]) -> LieAlgebroid {
        let n = self.rank();
        assert_eq!(scales.len(), n);
        let mut out = self.clone();
        for i in 0..n {
            out.anchor[i] = self.anchor[i].iter().map(|a| a.scale(&scales[i])).collect();
            for j in 0..n {
                for k in 0..n {
                    let f = &scales[i] * &scales[j] / &scales[k];
                    out.structure[i][j][k] = self.structure[i][j][k].scale(&f);
                }
            }
        }
        out
    }

    /// Renders a section as a combination of frame labels.
    pub fn render_section(&self, x: &[Polynomial]) -> String {
        render_combination(self.labels.iter().map(String::as_str).zip(x))
    }

    /// Renames the frame.
    pub fn relabeled(&self, labels: Vec<String>) -> LieAlgebroid {
        assert_eq!(labels.len(), self.rank());
        let mut out = self.clone();
        out.labels = labels;
        out
    }
}

/// `[P, Q] = -(-1)^{(p-1)(q-1)} [Q, P]` applied to a computed `[Q, P]`.
fn graded_swap_sign(dp: usize, dq: usize, swapped: MultiSection) -> MultiSection {
    let odd = (dp as i64 - 1) * (dq as i64 - 1) % 2 != 0;
    if odd {
        swapped
    } else {
        swapped.neg()
    }
}

/// `V(f)` for a vector field with components over `vars`.
pub fn apply_field(vars: &[String], v: &[Polynomial], f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (var, c) in vars.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let d = f.derivative(var);
        if !d.is_zero() {
            out += c * &d;
        }
    }
    out
}

/// Commutator `[V, W]` of vector fields.
pub fn field_commutator(vars: &[String], v: &[Polynomial], w: &[Polynomial]) -> VectorField {
    (0..vars.len())
        .map(|nu| &apply_field(vars, v, &w[nu]) - &apply_field(vars, w, &v[nu]))
        .collect()
}

/// Renders a vector field as a combination of `d/dx` symbols.
pub fn render_field(vars: &[String], v: &[Polynomial]) -> String {
    let names: Vec<String> = vars.iter().map(|x| format!("d/d{x}")).collect();
    render_combination(names.iter().map(String::as_str).zip(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::int;

    fn p(n: i64) -> Polynomial {
        Polynomial::int(n)
    }

    fn sl2() -> LieAlgebroid {
        LieAlgebroid::new(&[], 3)
            .with_labels(&["H", "E", "F"])
            .with_bracket(0, 1, vec![p(0), p(2), p(0)])
            .with_bracket(0, 2, vec![p(0), p(0), p(-2)])
            .with_bracket(1, 2, vec![p(1), p(0), p(0)])
    }

    fn aff1() -> LieAlgebroid {
        LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![p(0), p(1)])
    }

    #[test]
    fn abelian_and_sl2_pass() {
        assert!(LieAlgebroid::new(&[], 2).check_axioms().passed);
        assert!(sl2().check_axioms().passed);
    }

    #[test]
    fn broken_rank3_reports_jacobiator() {
        let a = LieAlgebroid::new(&[], 3)
            .with_bracket(0, 1, vec![p(0), p(0), p(1)])
            .with_bracket(0, 2, vec![p(1), p(0), p(0)]);
        let r = a.check_axioms();
        assert!(!r.passed);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].identity, "J(1,2,3)[l=3]");
        assert_eq!(r.witnesses[0].residual, "e3");
    }

    #[test]
    fn antisymmetry_enforced() {
        let mut s = vec![vec![vec![Polynomial::zero(); 2]; 2]; 2];
        s[0][1][1] = p(1);
        let err = LieAlgebroid::from_parts(vec![], vec!["a".into(), "b".into()], vec![vec![]; 2], s).unwrap_err();
        assert_eq!(err.to_string(), "antisymmetry violated at (1,2,2)");
    }

    #[test]
    fn brackets_and_anchor() {
        let line = LieAlgebroid::tangent(&["x"]);
        let x = Polynomial::var("x");
        assert_eq!(line.bracket(std::slice::from_ref(&x), &[p(1)]), vec![p(-1)]);
        assert_eq!(line.apply_anchor(&[p(1)], &x.pow(2)), x.scale(&int(2)));
        assert_eq!(line.apply_anchor(std::slice::from_ref(&x), &x), x);
        let g = sl2();
        let hpe = vec![p(1), p(1), p(0)];
        assert_eq!(g.bracket(&hpe, &g.frame(2)), vec![p(1), p(0), p(-2)]);
        assert!(g.bracket(&hpe, &hpe).iter().all(Polynomial::is_zero));
        assert!(g.apply_anchor(&hpe, &p(3)).is_zero());
    }

    #[test]
    fn differential_examples() {
        let a = aff1();
        let eps2 = MultiSection::frame(&[1], 2);
        let d = a.differential(&eps2).unwrap();
        assert_eq!(d.evaluate(&[a.frame(0), a.frame(1)]), p(-1));
        assert!(a.differential_of_function(&p(5)).is_zero());
        let line = LieAlgebroid::tangent(&["x"]);
        assert_eq!(
            line.differential_of_function(&Polynomial::var("x")).to_section(),
            vec![p(1)]
        );
        let top = MultiSection::zero(3, 2);
        assert_eq!(a.differential(&top).unwrap_err(), Error::DegreeExceedsRank);
    }

    #[test]
    fn schouten_examples() {
        let g = sl2();
        let h = MultiSection::frame(&[0], 3);
        let ef = MultiSection::frame(&[1, 2], 3);
        assert!(g.schouten(&h, &ef).is_zero());
        let f = MultiSection::function(p(4), 3);
        assert!(g.schouten(&h, &f).is_zero());
        assert!(g.schouten(&f, &f).is_zero());
    }

    #[test]
    fn lie_derivative_examples() {
        let line = LieAlgebroid::tangent(&["x"]);
        let x = MultiSection::function(Polynomial::var("x"), 1);
        assert_eq!(line.lie_derivative(&[p(1)], &x).unwrap().to_function(), p(1));
        let a = aff1();
        let eps2 = MultiSection::frame(&[1], 2);
        assert_eq!(a.lie_derivative(&a.frame(0), &eps2).unwrap(), eps2.neg());
    }

    #[test]
    fn rescaling_preserves_axioms() {
        let g = sl2().rescale_frame(&[int(-1), int(2), int(1)]);
        assert!(g.check_axioms().passed);
        assert_eq!(g.structure(0, 1), &[p(0), p(-2), p(0)]);
    }
}
