//! Vacant double Lie algebroids on the fiber product of two bundles.

use super::{MatchedPair, MatchedPairData, Representation};
use crate::algebroid::action::is_linear_field;
use crate::algebroid::{action_algebroid, render_field, LieAlgebroid, VectorField};
use crate::error::Result;
use crate::report::CheckReport;
use crate::symbolic::{Monomial, PolyMatrix, Polynomial};

/// The two action algebroid structures on the fiber product of `A` and `B`.
///
/// `vertical` lives on the total space of `A` (coordinates `base ∪ y_vars`)
/// with the frame of `B`; `horizontal` lives on the total space of `B`
/// (coordinates `base ∪ v_vars`) with the frame of `A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VacantDouble {
    pub a: LieAlgebroid,
    pub b: LieAlgebroid,
    pub vertical: LieAlgebroid,
    pub horizontal: LieAlgebroid,
    pub y_vars: Vec<String>,
    pub v_vars: Vec<String>,
}

/// `count` variable names `prefix1, prefix2, ...`, primed with `_` until none
/// collides with `taken`.
pub fn fresh_vars(prefix: &str, count: usize, taken: &[String]) -> Vec<String> {
    let mut p = prefix.to_string();
    loop {
        let names: Vec<String> = (1..=count).map(|i| format!("{p}{i}")).collect();
        if names.iter().all(|n| !taken.contains(n)) {
            return names;
        }
        p.push('_');
    }
}

/// Linear vector field `sum_mu anchor^mu d/dx^mu - sum R[i, j] w^j d/dw^i`.
fn linear_field(anchor: &[Polynomial], m: &PolyMatrix, fiber: &[String]) -> VectorField {
    let mut field = anchor.to_vec();
    for i in 0..m.rows() {
        let mut c = Polynomial::zero();
        for (j, w) in fiber.iter().enumerate() {
            c -= &m[(i, j)] * &Polynomial::var(w);
        }
        field.push(c);
    }
    field
}

/// Inverse of `linear_field` on the fiber part: the coefficient matrix of the
/// degree-one terms, with the sign restored.
fn read_matrix(field: &[Polynomial], d: usize, fiber: &[String]) -> PolyMatrix {
    let k = fiber.len();
    let names: Vec<&str> = fiber.iter().map(String::as_str).collect();
    let mut m = PolyMatrix::zeros(k, k);
    for i in 0..k {
        let parts = field[d + i].split_by(&names);
        for (j, w) in fiber.iter().enumerate() {
            if let Some(c) = parts.get(&Monomial::var(w, 1)) {
                m[(i, j)] = -c;
            }
        }
    }
    m
}

/// Builds both action structures from a verified matched pair.
pub fn build_vacant_double(mp: &MatchedPair) -> Result<VacantDouble> {
    let (a, b) = (&mp.a, &mp.b);
    let base = a.base_vars().to_vec();
    let y_vars = fresh_vars("y", a.rank(), &base);
    let v_vars = fresh_vars("v", b.rank(), &base);
    let eta: Vec<VectorField> = (0..b.rank())
        .map(|al| linear_field(b.anchor_of(al), mp.sigma.matrix(al), &y_vars))
        .collect();
    let xi: Vec<VectorField> = (0..a.rank())
        .map(|i| linear_field(a.anchor_of(i), mp.rho.matrix(i), &v_vars))
        .collect();
    let vertical = action_algebroid(b, &y_vars, &eta)?.algebroid;
    let horizontal = action_algebroid(a, &v_vars, &xi)?.algebroid;
    Ok(VacantDouble {
        a: a.clone(),
        b: b.clone(),
        vertical,
        horizontal,
        y_vars,
        v_vars,
    })
}

/// Recovers `(rho, sigma)` from the two action anchors.
pub fn extract_from_vacant(v: &VacantDouble) -> Result<(Representation, Representation)> {
    let d = v.a.base_dim();
    let sigma_mats = (0..v.b.rank())
        .map(|al| read_matrix(v.vertical.anchor_of(al), d, &v.y_vars))
        .collect();
    let rho_mats = (0..v.a.rank())
        .map(|i| read_matrix(v.horizontal.anchor_of(i), d, &v.v_vars))
        .collect();
    let rho = Representation::new(v.a.clone(), v.b.labels().to_vec(), rho_mats)?;
    let sigma = Representation::new(v.b.clone(), v.a.labels().to_vec(), sigma_mats)?;
    Ok((rho, sigma))
}

fn check_side(report: &mut CheckReport, tag: &str, side: &LieAlgebroid, total: &LieAlgebroid, fiber: &[String]) {
    let d = side.base_dim();
    let names: Vec<&str> = fiber.iter().map(String::as_str).collect();
    if total.rank() != side.rank() || total.base_dim() != d + fiber.len() {
        report.push(
            format!("{tag}: shape"),
            "frame or coordinates do not match the side bundle",
        );
        return;
    }
    for i in 0..side.rank() {
        let field = total.anchor_of(i);
        if !is_linear_field(field, d, &names) || field[..d] != *side.anchor_of(i) {
            report.push(
                format!("(a) {tag} anchor {} linear", side.labels()[i]),
                render_field(total.base_vars(), field),
            );
        }
    }
    for i in 0..side.rank() {
        for j in i + 1..side.rank() {
            for k in 0..side.rank() {
                let c = total.structure_function(i, j, k);
                if c.involves_any(&names) || c != side.structure_function(i, j, k) {
                    report.push(
                        format!("(b) {tag} bracket ({},{})[{}]", i + 1, j + 1, k + 1),
                        c.to_string(),
                    );
                }
            }
        }
    }
    let axioms = total.check_axioms();
    for w in &axioms.witnesses {
        report.push(format!("(b) {tag} {}", w.identity), w.residual.clone());
    }
}

/// Linearity of both actions, the pullback form of both brackets together
/// with the algebroid axioms, and the anchor equation of the recovered pair.
pub fn check_vacant_conditions(v: &VacantDouble) -> CheckReport {
    let mut report = CheckReport::new("vacant");
    check_side(&mut report, "vertical", &v.b, &v.vertical, &v.y_vars);
    check_side(&mut report, "horizontal", &v.a, &v.horizontal, &v.v_vars);
    if !report.passed {
        return report;
    }
    match extract_from_vacant(v).and_then(|(rho, sigma)| MatchedPairData::new(v.a.clone(), v.b.clone(), rho, sigma)) {
        Ok(mp) => {
            for i in 0..v.a.rank() {
                for al in 0..v.b.rank() {
                    let r = mp.anchor_equation(&v.a.frame(i), &v.b.frame(al));
                    if r.iter().any(|p| !p.is_zero()) {
                        report.push(
                            format!("(c) anchor({},{})", v.a.labels()[i], v.b.labels()[al]),
                            render_field(v.a.base_vars(), &r),
                        );
                    }
                }
            }
        }
        Err(e) => report.push("(c) extraction", e.to_string()),
    }
    report
}
