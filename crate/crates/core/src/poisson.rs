//! Polynomial Poisson algebras.

use crate::algebroid::LieAlgebroid;
use crate::error::{Error, Result};
use crate::matched_pair::fresh_vars;
use crate::report::CheckReport;
use crate::symbolic::Polynomial;

/// Coordinates and an antisymmetric bivector `pi[a][b] = {x^a, x^b}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoissonAlgebra {
    vars: Vec<String>,
    pi: Vec<Vec<Polynomial>>,
}

impl PoissonAlgebra {
    pub fn new(vars: Vec<String>, pi: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = vars.len();
        if pi.len() != n || pi.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("bivector must be {n}x{n}")));
        }
        for a in 0..n {
            for b in 0..n {
                if pi[a][b] != -&pi[b][a] {
                    return Err(Error::NotPoisson(format!(
                        "bivector not antisymmetric at ({},{})",
                        vars[a], vars[b]
                    )));
                }
            }
        }
        Ok(PoissonAlgebra { vars, pi })
    }

    /// Zero bivector on `vars`.
    pub fn zero(vars: &[&str]) -> Self {
        let n = vars.len();
        PoissonAlgebra {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            pi: vec![vec![Polynomial::zero(); n]; n],
        }
    }

    /// Sets `{x^a, x^b} = value` and its antisymmetric partner.
    pub fn with_pair(mut self, a: &str, b: &str, value: Polynomial) -> Self {
        let i = self.index(a).expect("unknown coordinate");
        let j = self.index(b).expect("unknown coordinate");
        assert!(i != j || value.is_zero());
        self.pi[j][i] = -&value;
        self.pi[i][j] = value;
        self
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index(&self, var: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == var)
    }

    pub fn pi(&self, a: usize, b: usize) -> &Polynomial {
        &self.pi[a][b]
    }

    pub fn is_zero(&self) -> bool {
        self.pi.iter().flatten().all(Polynomial::is_zero)
    }

    /// `{f, g} = sum pi^{ab} d_a f d_b g`.
    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let df: Vec<Polynomial> = self.vars.iter().map(|v| f.derivative(v)).collect();
        let dg: Vec<Polynomial> = self.vars.iter().map(|v| g.derivative(v)).collect();
        let mut out = Polynomial::zero();
        for a in 0..self.vars.len() {
            if df[a].is_zero() {
                continue;
            }
            for b in 0..self.vars.len() {
                if dg[b].is_zero() || self.pi[a][b].is_zero() {
                    continue;
                }
                out += &(&self.pi[a][b] * &df[a]) * &dg[b];
            }
        }
        out
    }

    /// Jacobi identity on all coordinate triples.
    pub fn check_jacobi(&self) -> CheckReport {
        let mut report = CheckReport::new("poisson");
        let n = self.vars.len();
        let x: Vec<Polynomial> = self.vars.iter().map(|v| Polynomial::var(v)).collect();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let r = &(&self.bracket(&x[a], &self.pi[b][c]) + &self.bracket(&x[b], &self.pi[c][a]))
                        + &self.bracket(&x[c], &self.pi[a][b]);
                    if !r.is_zero() {
                        report.push(
                            format!("Jac({},{},{})", self.vars[a], self.vars[b], self.vars[c]),
                            r.to_string(),
                        );
                    }
                }
            }
        }
        report
    }
}

/// The linear Poisson structure on the dual of `a`, with fiber coordinates
/// `u_<label>` standing for the linear functions of the frame.
pub fn linear_dual_poisson(a: &LieAlgebroid) -> PoissonAlgebra {
    let base = a.base_vars().to_vec();
    let n = a.rank();
    let d = base.len();
    let fiber = fiber_names(a, &base);
    let vars: Vec<String> = base.iter().chain(&fiber).cloned().collect();
    let mut pi = vec![vec![Polynomial::zero(); d + n]; d + n];
    for i in 0..n {
        for j in 0..n {
            let mut c = Polynomial::zero();
            for (k, s) in a.structure(i, j).iter().enumerate() {
                c += s * &Polynomial::var(&fiber[k]);
            }
            pi[d + i][d + j] = c;
        }
        for mu in 0..d {
            pi[d + i][mu] = a.anchor_of(i)[mu].clone();
            pi[mu][d + i] = -&a.anchor_of(i)[mu];
        }
    }
    PoissonAlgebra { vars, pi }
}

fn fiber_names(a: &LieAlgebroid, taken: &[String]) -> Vec<String> {
    let names: Vec<String> = a.labels().iter().map(|l| format!("u_{l}")).collect();
    if names.iter().all(|n| !taken.contains(n)) {
        names
    } else {
        fresh_vars("u", a.rank(), taken)
    }
}

/// The cotangent algebroid: frame `dx^a`, anchor `pi^#`, Koszul bracket.
pub fn cotangent_algebroid(p: &PoissonAlgebra) -> Result<LieAlgebroid> {
    let jac = p.check_jacobi();
    if !jac.passed {
        return Err(Error::NotPoisson(format!(
            "Jacobi fails at {}",
            jac.witnesses[0].identity
        )));
    }
    let n = p.vars.len();
    let labels = p.vars.iter().map(|v| format!("d{v}")).collect();
    let anchor = p.pi.clone();
    let structure = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| p.vars.iter().map(|v| p.pi[a][b].derivative(v)).collect())
                .collect()
        })
        .collect();
    LieAlgebroid::from_parts(p.vars.clone(), labels, anchor, structure)
}

/// Name of the fiber coordinate paired with `var` in the tangent lift.
pub fn lift_name(var: &str) -> String {
    format!("{var}_dot")
}

/// The tangent lift on coordinates `(x, x_dot)`, determined by
/// `{x^a, x^b} = 0`, `{x_dot^a, x^b} = pi^{ab}`,
/// `{x_dot^a, x_dot^b} = sum_c x_dot^c d_c pi^{ab}`.
pub fn tangent_lift_poisson(p: &PoissonAlgebra) -> PoissonAlgebra {
    let n = p.vars.len();
    let dots: Vec<String> = p.vars.iter().map(|v| lift_name(v)).collect();
    let vars: Vec<String> = p.vars.iter().chain(&dots).cloned().collect();
    let complete = |f: &Polynomial| -> Polynomial {
        p.vars
            .iter()
            .zip(&dots)
            .map(|(x, xd)| &Polynomial::var(xd) * &f.derivative(x))
            .sum()
    };
    let mut pi = vec![vec![Polynomial::zero(); 2 * n]; 2 * n];
    for a in 0..n {
        for b in 0..n {
            pi[n + a][b] = p.pi[a][b].clone();
            pi[n + a][n + b] = complete(&p.pi[a][b]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            pi[b][n + a] = -&pi[n + a][b];
        }
    }
    PoissonAlgebra { vars, pi }
}

/// Polynomial map between Poisson algebras: `components[b]` is the pullback
/// of the target coordinate `b`, a polynomial in the source coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMap {
    pub source: PoissonAlgebra,
    pub target: PoissonAlgebra,
    pub components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(source: PoissonAlgebra, target: PoissonAlgebra, components: Vec<Polynomial>) -> Result<Self> {
        if components.len() != target.vars.len() {
            return Err(Error::Dimension("one component per target coordinate".into()));
        }
        Ok(PolyMap {
            source,
            target,
            components,
        })
    }

    pub fn identity(p: &PoissonAlgebra) -> Self {
        PolyMap {
            source: p.clone(),
            target: p.clone(),
            components: p.vars.iter().map(|v| Polynomial::var(v)).collect(),
        }
    }

    /// Pullback of a target function.
    pub fn pull(&self, f: &Polynomial) -> Polynomial {
        let map = self
            .target
            .vars
            .iter()
            .cloned()
            .zip(self.components.iter().cloned())
            .collect();
        f.substitute(&map)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PolyMap) -> PolyMap {
        PolyMap {
            source: self.source.clone(),
            target: other.target.clone(),
            components: other.components.iter().map(|c| self.pull(c)).collect(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapSign {
    Poisson,
    Anti,
}

/// `{f∘m, g∘m} = ±{f, g}∘m` for all target coordinate pairs.
pub fn check_poisson_map(m: &PolyMap, sign: MapSign) -> CheckReport {
    let mut report = CheckReport::new(match sign {
        MapSign::Poisson => "poisson-map",
        MapSign::Anti => "anti-poisson-map",
    });
    let t = &m.target;
    for a in 0..t.vars.len() {
        for b in a + 1..t.vars.len() {
            let lhs = m.source.bracket(&m.components[a], &m.components[b]);
            let rhs = m.pull(&t.pi[a][b]);
            let r = match sign {
                MapSign::Poisson => &lhs - &rhs,
                MapSign::Anti => &lhs + &rhs,
            };
            if !r.is_zero() {
                report.push(format!("map({},{})", t.vars[a], t.vars[b]), r.to_string());
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Polynomial {
        Polynomial::var(s)
    }

    fn plane() -> PoissonAlgebra {
        PoissonAlgebra::zero(&["x", "y"]).with_pair("x", "y", Polynomial::one())
    }

    fn sl2_linear() -> PoissonAlgebra {
        PoissonAlgebra::zero(&["h", "e", "f"])
            .with_pair("h", "e", v("e").scale(&crate::symbolic::int(2)))
            .with_pair("h", "f", v("f").scale(&crate::symbolic::int(-2)))
            .with_pair("e", "f", v("h"))
    }

    #[test]
    fn brackets() {
        let p = plane();
        assert_eq!(p.bracket(&v("x"), &v("y")), Polynomial::one());
        let f = &v("x").pow(2) + &v("y");
        assert!(p.bracket(&f, &f).is_zero());
        assert!(PoissonAlgebra::zero(&["x", "y"]).bracket(&v("x"), &v("y")).is_zero());
    }

    #[test]
    fn jacobi() {
        assert!(plane().check_jacobi().passed);
        assert!(sl2_linear().check_jacobi().passed);
        let bad = PoissonAlgebra::zero(&["x1", "x2", "x3"])
            .with_pair("x1", "x2", v("x3"))
            .with_pair("x1", "x3", v("x1"));
        assert!(!bad.check_jacobi().passed);
    }

    #[test]
    fn antisymmetry_required() {
        let pi = vec![
            vec![Polynomial::zero(), Polynomial::one()],
            vec![Polynomial::one(), Polynomial::zero()],
        ];
        assert!(PoissonAlgebra::new(vec!["x".into(), "y".into()], pi).is_err());
    }

    #[test]
    fn linear_duals() {
        let line = LieAlgebroid::tangent(&["x"]).with_labels(&["e"]);
        let p = linear_dual_poisson(&line);
        assert_eq!(p.bracket(&v("u_e"), &v("x")), Polynomial::one());
        let ab = linear_dual_poisson(&LieAlgebroid::new(&[], 2));
        assert!(ab.is_zero());
    }

    #[test]
    fn cotangent() {
        let t = cotangent_algebroid(&plane()).unwrap();
        assert!(t.structure(0, 1).iter().all(Polynomial::is_zero));
        assert_eq!(t.anchor_of(0), &[Polynomial::zero(), Polynomial::one()]);
        assert!(cotangent_algebroid(&sl2_linear()).unwrap().check_axioms().passed);
    }

    #[test]
    fn lift_and_maps() {
        let lift = tangent_lift_poisson(&plane());
        assert_eq!(lift.bracket(&v("x"), &v("y_dot")), Polynomial::one());
        assert!(lift.check_jacobi().passed);
        let p = plane();
        assert!(check_poisson_map(&PolyMap::identity(&p), MapSign::Poisson).passed);
        let swap = PolyMap::new(p.clone(), p.clone(), vec![v("y"), v("x")]).unwrap();
        assert!(check_poisson_map(&swap, MapSign::Anti).passed);
        assert!(!check_poisson_map(&swap, MapSign::Poisson).passed);
    }
}
