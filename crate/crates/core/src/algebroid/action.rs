//! Action (pullback) Lie algebroids over the total space of a vector bundle.

use super::{field_commutator, render_field, LieAlgebroid, VectorField};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::symbolic::Polynomial;

/// The pullback algebroid together with the verdict on the action bracket.
#[derive(Clone, Debug)]
pub struct ActionAlgebroid {
    pub algebroid: LieAlgebroid,
    pub action_report: CheckReport,
}

/// Splits a field on `base ∪ fiber` into its base and fiber parts and checks
/// that it is linear: base part fiber-independent, fiber part homogeneous of
/// degree one in the fiber variables.
pub(crate) fn is_linear_field(field: &[Polynomial], d: usize, fiber: &[&str]) -> bool {
    let base_ok = field[..d].iter().all(|c| !c.involves_any(fiber));
    let fiber_ok = field[d..]
        .iter()
        .all(|c| c.split_by(fiber).keys().all(|m| m.degree() == 1));
    base_ok && fiber_ok
}

/// Builds the algebroid on the pullback of `b` to the total space of a bundle
/// with fiber coordinates `fiber_vars`, with anchor given by `action`.
///
/// Each `action[alpha]` lists components over the base variables of `b`
/// followed by the fiber variables.
pub fn action_algebroid(b: &LieAlgebroid, fiber_vars: &[String], action: &[VectorField]) -> Result<ActionAlgebroid> {
    let d = b.base_dim();
    let m = fiber_vars.len();
    if action.len() != b.rank() || action.iter().any(|v| v.len() != d + m) {
        return Err(Error::Dimension(format!(
            "action must list {} vector fields with {} components",
            b.rank(),
            d + m
        )));
    }
    if fiber_vars.iter().any(|v| b.base_vars().contains(v)) {
        return Err(Error::Dimension("fiber variable collides with a base variable".into()));
    }
    let fiber: Vec<&str> = fiber_vars.iter().map(String::as_str).collect();
    for (alpha, field) in action.iter().enumerate() {
        if !is_linear_field(field, d, &fiber) || field[..d] != *b.anchor_of(alpha) {
            return Err(Error::ActionNotLinear);
        }
    }

    let vars: Vec<String> = b.base_vars().iter().chain(fiber_vars).cloned().collect();
    let mut report = CheckReport::new("action");
    for alpha in 0..b.rank() {
        for beta in alpha + 1..b.rank() {
            let lhs = field_commutator(&vars, &action[alpha], &action[beta]);
            let mut residual = lhs;
            for (gamma, c) in b.structure(alpha, beta).iter().enumerate() {
                for (r, v) in residual.iter_mut().zip(&action[gamma]) {
                    *r -= c * v;
                }
            }
            if residual.iter().any(|r| !r.is_zero()) {
                report.push(
                    format!("action[{},{}]", alpha + 1, beta + 1),
                    render_field(&vars, &residual),
                );
            }
        }
    }

    let n = b.rank();
    let structure = (0..n)
        .map(|i| (0..n).map(|j| b.structure(i, j).to_vec()).collect())
        .collect();
    let algebroid = LieAlgebroid::from_parts(vars, b.labels().to_vec(), action.to_vec(), structure)?;
    Ok(ActionAlgebroid {
        algebroid,
        action_report: report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Polynomial {
        Polynomial::var(name)
    }

    #[test]
    fn point_action_on_line() {
        let b = LieAlgebroid::new(&[], 1).with_labels(&["Y"]);
        let out = action_algebroid(&b, &["y".to_string()], &[vec![-v("y")]]).unwrap();
        assert!(out.action_report.passed);
        assert_eq!(out.algebroid.anchor_of(0), &[-v("y")]);
        assert!(out.algebroid.check_axioms().passed);
    }

    #[test]
    fn zero_action_pulls_back_bracket() {
        let b = LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![Polynomial::zero(), Polynomial::one()]);
        let zero = vec![Polynomial::zero()];
        let out = action_algebroid(&b, &["y".to_string()], &[zero.clone(), zero]).unwrap();
        assert!(out.action_report.passed);
        assert_eq!(out.algebroid.structure(0, 1), b.structure(0, 1));
    }

    #[test]
    fn flat_connection_over_line() {
        let b = LieAlgebroid::tangent(&["x"]);
        let out = action_algebroid(&b, &["y".to_string()], &[vec![Polynomial::one(), Polynomial::zero()]]).unwrap();
        assert!(out.action_report.passed);
        assert!(out.algebroid.check_axioms().passed);
    }

    #[test]
    fn quadratic_action_rejected() {
        let b = LieAlgebroid::new(&[], 1);
        let err = action_algebroid(&b, &["y".to_string()], &[vec![v("y").pow(2)]]).unwrap_err();
        assert_eq!(err.to_string(), "action not linear over base");
    }

    #[test]
    fn bracket_mismatch_reported() {
        let b = LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![Polynomial::zero(), Polynomial::one()]);
        let out = action_algebroid(&b, &["y".to_string()], &[vec![v("y")], vec![v("y")]]).unwrap();
        assert!(!out.action_report.passed);
        assert_eq!(out.action_report.witnesses[0].residual, "-y*d/dy");
    }
}
