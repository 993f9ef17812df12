//! Decomposed double vector bundles at a single fiber: `H ⊕ V ⊕ K`.
//!
//! Elements are written `(h; v; k)`. Elements of the vertical dual are
//! `(h; kappa; phi)` and of the horizontal dual `(v; kappa; psi)`: side
//! first, then the `K*` coordinate, then the core.

use std::fmt;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::symbolic::poly::dot;
use crate::symbolic::rational::{format_rational, one, zero};
use crate::symbolic::{Polynomial, Rational, RationalMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DvbSign {
    #[default]
    Plus,
    Minus,
}

impl DvbSign {
    pub fn factor(self) -> Rational {
        match self {
            DvbSign::Plus => one(),
            DvbSign::Minus => -one(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Addition in the fibers of `q_V`: equal `h`.
    Vertical,
    /// Addition in the fibers of `q_H`: equal `v`.
    Horizontal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecomposedDvb {
    pub dim_h: usize,
    pub dim_v: usize,
    pub dim_k: usize,
    pub sign: DvbSign,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DvbElement {
    pub h: Vec<Rational>,
    pub v: Vec<Rational>,
    pub k: Vec<Rational>,
}

/// Element of the vertical dual, a functional on the `q_V`-fiber over `h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualElementV {
    pub h: Vec<Rational>,
    pub kappa: Vec<Rational>,
    pub phi: Vec<Rational>,
}

/// Element of the horizontal dual, a functional on the `q_H`-fiber over `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualElementH {
    pub v: Vec<Rational>,
    pub kappa: Vec<Rational>,
    pub psi: Vec<Rational>,
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale_vec(t: &Rational, a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| t * x).collect()
}

fn rdot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut e = vec![zero(); n];
    e[i] = one();
    e
}

fn fmt_block(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

impl DvbElement {
    pub fn from_ints(h: &[i64], v: &[i64], k: &[i64]) -> Self {
        DvbElement {
            h: ints(h),
            v: ints(v),
            k: ints(k),
        }
    }
}

impl DualElementV {
    pub fn from_ints(h: &[i64], kappa: &[i64], phi: &[i64]) -> Self {
        DualElementV {
            h: ints(h),
            kappa: ints(kappa),
            phi: ints(phi),
        }
    }
}

impl DualElementH {
    pub fn from_ints(v: &[i64], kappa: &[i64], psi: &[i64]) -> Self {
        DualElementH {
            v: ints(v),
            kappa: ints(kappa),
            psi: ints(psi),
        }
    }
}

impl fmt::Display for DvbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}; {})",
            fmt_block(&self.h),
            fmt_block(&self.v),
            fmt_block(&self.k)
        )
    }
}

impl fmt::Display for DualElementV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}; {})",
            fmt_block(&self.h),
            fmt_block(&self.kappa),
            fmt_block(&self.phi)
        )
    }
}

impl fmt::Display for DualElementH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}; {})",
            fmt_block(&self.v),
            fmt_block(&self.kappa),
            fmt_block(&self.psi)
        )
    }
}

/// Fiberwise linear maps between iterated duals over a fixed `kappa`.
///
/// `z_v` acts on `(h, phi~)` coordinates of the dual of the horizontal dual
/// and returns `(h, phi)`; `z_h` acts on `(v, psi)` and returns `(v, psi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZMaps {
    pub z_v: RationalMatrix,
    pub z_h: RationalMatrix,
}

impl DecomposedDvb {
    pub fn new(dim_h: usize, dim_v: usize, dim_k: usize) -> Self {
        DecomposedDvb {
            dim_h,
            dim_v,
            dim_k,
            sign: DvbSign::Plus,
        }
    }

    pub fn with_sign(mut self, sign: DvbSign) -> Self {
        self.sign = sign;
        self
    }

    fn shape(&self, what: &str, got: [usize; 3], want: [usize; 3]) -> Result<()> {
        if got == want {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "{what} has block sizes {got:?}, expected {want:?}"
            )))
        }
    }

    pub fn validate(&self, x: &DvbElement) -> Result<()> {
        self.shape(
            "element",
            [x.h.len(), x.v.len(), x.k.len()],
            [self.dim_h, self.dim_v, self.dim_k],
        )
    }

    pub fn validate_v(&self, p: &DualElementV) -> Result<()> {
        self.shape(
            "vertical dual element",
            [p.h.len(), p.kappa.len(), p.phi.len()],
            [self.dim_h, self.dim_k, self.dim_v],
        )
    }

    pub fn validate_h(&self, p: &DualElementH) -> Result<()> {
        self.shape(
            "horizontal dual element",
            [p.v.len(), p.kappa.len(), p.psi.len()],
            [self.dim_v, self.dim_k, self.dim_h],
        )
    }

    pub fn zero_element(&self) -> DvbElement {
        DvbElement {
            h: vec![zero(); self.dim_h],
            v: vec![zero(); self.dim_v],
            k: vec![zero(); self.dim_k],
        }
    }

    /// The core element `k` embedded as `(0; 0; k)`.
    pub fn core(&self, k: Vec<Rational>) -> DvbElement {
        DvbElement {
            k,
            ..self.zero_element()
        }
    }

    pub fn add(&self, dir: Direction, a: &DvbElement, b: &DvbElement) -> Result<DvbElement> {
        self.validate(a)?;
        self.validate(b)?;
        match dir {
            Direction::Vertical if a.h == b.h => Ok(DvbElement {
                h: a.h.clone(),
                v: add_vec(&a.v, &b.v),
                k: add_vec(&a.k, &b.k),
            }),
            Direction::Horizontal if a.v == b.v => Ok(DvbElement {
                h: add_vec(&a.h, &b.h),
                v: a.v.clone(),
                k: add_vec(&a.k, &b.k),
            }),
            _ => Err(Error::IncompatibleAddition),
        }
    }

    pub fn scale(&self, dir: Direction, t: &Rational, a: &DvbElement) -> DvbElement {
        match dir {
            Direction::Vertical => DvbElement {
                h: a.h.clone(),
                v: scale_vec(t, &a.v),
                k: scale_vec(t, &a.k),
            },
            Direction::Horizontal => DvbElement {
                h: scale_vec(t, &a.h),
                v: a.v.clone(),
                k: scale_vec(t, &a.k),
            },
        }
    }

    /// `<Phi, xi> = phi.v + kappa.k` for `xi` over the same `h`.
    pub fn eval_v(&self, p: &DualElementV, x: &DvbElement) -> Result<Rational> {
        self.validate_v(p)?;
        self.validate(x)?;
        if p.h != x.h {
            return Err(Error::NotComposable);
        }
        Ok(rdot(&p.phi, &x.v) + rdot(&p.kappa, &x.k))
    }

    /// `<Psi, xi> = psi.h + kappa.k` for `xi` over the same `v`.
    pub fn eval_h(&self, p: &DualElementH, x: &DvbElement) -> Result<Rational> {
        self.validate_h(p)?;
        self.validate(x)?;
        if p.v != x.v {
            return Err(Error::NotComposable);
        }
        Ok(rdot(&p.psi, &x.h) + rdot(&p.kappa, &x.k))
    }

    /// Projection of the vertical dual onto `K*`, read off by evaluating on
    /// `0_h + core(e_i)` for the standard basis of `K`.
    pub fn dual_project(&self, p: &DualElementV) -> Result<Vec<Rational>> {
        (0..self.dim_k)
            .map(|i| {
                let x = DvbElement {
                    h: p.h.clone(),
                    ..self.core(unit(self.dim_k, i))
                };
                self.eval_v(p, &x)
            })
            .collect()
    }

    pub fn dual_project_h(&self, p: &DualElementH) -> Result<Vec<Rational>> {
        (0..self.dim_k)
            .map(|i| {
                let x = DvbElement {
                    v: p.v.clone(),
                    ..self.core(unit(self.dim_k, i))
                };
                self.eval_h(p, &x)
            })
            .collect()
    }

    /// Addition in the vertical dual over `A^H` (equal `h`).
    pub fn add_v_over_side(&self, a: &DualElementV, b: &DualElementV) -> Result<DualElementV> {
        self.validate_v(a)?;
        self.validate_v(b)?;
        if a.h != b.h {
            return Err(Error::IncompatibleAddition);
        }
        Ok(DualElementV {
            h: a.h.clone(),
            kappa: add_vec(&a.kappa, &b.kappa),
            phi: add_vec(&a.phi, &b.phi),
        })
    }

    /// Addition in the vertical dual over `K*` (equal `kappa`).
    pub fn add_v_over_kstar(&self, a: &DualElementV, b: &DualElementV) -> Result<DualElementV> {
        self.validate_v(a)?;
        self.validate_v(b)?;
        if a.kappa != b.kappa {
            return Err(Error::IncompatibleAddition);
        }
        Ok(DualElementV {
            h: add_vec(&a.h, &b.h),
            kappa: a.kappa.clone(),
            phi: add_vec(&a.phi, &b.phi),
        })
    }

    /// Addition in the horizontal dual over `K*` (equal `kappa`).
    pub fn add_h_over_kstar(&self, a: &DualElementH, b: &DualElementH) -> Result<DualElementH> {
        self.validate_h(a)?;
        self.validate_h(b)?;
        if a.kappa != b.kappa {
            return Err(Error::IncompatibleAddition);
        }
        Ok(DualElementH {
            v: add_vec(&a.v, &b.v),
            kappa: a.kappa.clone(),
            psi: add_vec(&a.psi, &b.psi),
        })
    }

    /// Pairing of the two duals over `K*`: `<Psi, xi> - <Phi, xi>`, negated
    /// under the minus sign. Any `xi` over `(h_Phi, v_Psi)` may be used.
    pub fn pair_duals(&self, p: &DualElementV, q: &DualElementH, x: &DvbElement) -> Result<Rational> {
        self.validate_v(p)?;
        self.validate_h(q)?;
        self.validate(x)?;
        if p.kappa != q.kappa || x.h != p.h || x.v != q.v {
            return Err(Error::NotComposable);
        }
        let raw = self.eval_h(q, x)? - self.eval_v(p, x)?;
        Ok(self.sign.factor() * raw)
    }

    /// Gram matrix of `pair_duals` over a fixed `kappa`. Rows index the
    /// vertical dual fiber `(h, phi)`, columns the horizontal one `(v, psi)`.
    pub fn pairing_gram(&self) -> RationalMatrix {
        let (nh, nv) = (self.dim_h, self.dim_v);
        let s = self.sign.factor();
        let mut g = RationalMatrix::zeros(nh + nv, nv + nh);
        for i in 0..nh {
            g[(i, nv + i)] = s.clone();
        }
        for j in 0..nv {
            g[(nh + j, j)] = -s.clone();
        }
        g
    }

    /// Canonical pairing of the dual of the horizontal dual with the
    /// horizontal dual: rows `(h, phi~)`, columns `(v, psi)`.
    fn canonical_v(&self) -> RationalMatrix {
        let (nh, nv) = (self.dim_h, self.dim_v);
        let mut c = RationalMatrix::zeros(nh + nv, nv + nh);
        for i in 0..nh {
            c[(i, nv + i)] = one();
        }
        for j in 0..nv {
            c[(nh + j, j)] = one();
        }
        c
    }

    /// Canonical pairing of the dual of the vertical dual with the vertical
    /// dual: rows `(v, psi)`, columns `(h, phi)`.
    fn canonical_h(&self) -> RationalMatrix {
        self.canonical_v().transpose()
    }

    /// Both maps, solved from `pair_duals` against the canonical pairings.
    pub fn z_maps(&self) -> ZMaps {
        let g = self.pairing_gram();
        let g_inv = g.inverse().expect("duals pairing is nondegenerate");
        ZMaps {
            z_v: g_inv.transpose().mul(&self.canonical_v().transpose()),
            z_h: g_inv.mul(&self.canonical_h().transpose()),
        }
    }

    /// `Z_V^dagger`-style dual of `z_h` over `K*`, expressed in the
    /// coordinates of `z_v`.
    pub fn dual_of_z_h(&self, z: &ZMaps) -> RationalMatrix {
        let ch_inv = self.canonical_h().inverse().expect("canonical pairing is invertible");
        ch_inv.mul(&z.z_h.transpose()).mul(&self.canonical_v().transpose())
    }

    /// `Z_V (h; kappa; phi~)`, with the result read in the vertical dual.
    pub fn z_v(&self, t: &DualElementV) -> DualElementV {
        let z = self.z_maps().z_v;
        let x: Vec<Rational> = t.h.iter().chain(&t.phi).cloned().collect();
        let y = z.apply(&x);
        DualElementV {
            h: y[..self.dim_h].to_vec(),
            kappa: t.kappa.clone(),
            phi: y[self.dim_h..].to_vec(),
        }
    }

    /// `Z_H (v; kappa; psi)`, with the result read in the horizontal dual.
    pub fn z_h(&self, t: &DualElementH) -> DualElementH {
        let z = self.z_maps().z_h;
        let x: Vec<Rational> = t.v.iter().chain(&t.psi).cloned().collect();
        let y = z.apply(&x);
        DualElementH {
            v: y[..self.dim_v].to_vec(),
            kappa: t.kappa.clone(),
            psi: y[self.dim_v..].to_vec(),
        }
    }

    /// Rank of the duals pairing over each `kappa`, which must be
    /// `dim_h + dim_v`.
    pub fn check_pairing_nondegenerate(&self) -> CheckReport {
        let mut report = CheckReport::new("nondegenerate");
        let rank = self.pairing_gram().rank();
        let full = self.dim_h + self.dim_v;
        report.set_metric("rank", rank as i64);
        if rank != full {
            report.push("rank", format!("{rank} < {full}"));
        }
        report
    }

    /// `Z_V = Z_H^dagger`, `Z_V` fixes sides and negates the core, `Z_H`
    /// negates the side `A^V` and fixes the core (roles exchange under the
    /// minus sign).
    pub fn check_z_maps(&self) -> CheckReport {
        let mut report = CheckReport::new("zmaps");
        let z = self.z_maps();
        let dual = self.dual_of_z_h(&z);
        if dual != z.z_v {
            report.push("Z_V = Z_H^dagger", format!("{:?} vs {:?}", z.z_v, dual));
        }
        let (nh, nv) = (self.dim_h, self.dim_v);
        let s = self.sign.factor();
        let expect_v = block_diag(nh, &s, nv, &-s.clone());
        let expect_h = block_diag(nv, &-s.clone(), nh, &s);
        if z.z_v != expect_v {
            report.push("Z_V sides and core", format!("{:?}", z.z_v));
        }
        if z.z_h != expect_h {
            report.push("Z_H sides and core", format!("{:?}", z.z_h));
        }
        match z.z_v.inverse() {
            Some(inv) if inv.mul(&z.z_v) == RationalMatrix::identity(nh + nv) => {}
            _ => report.push("Z_V invertible", format!("{:?}", z.z_v)),
        }
        report
    }
}

fn block_diag(n1: usize, a: &Rational, n2: usize, b: &Rational) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n1 + n2, n1 + n2);
    for i in 0..n1 {
        m[(i, i)] = a.clone();
    }
    for i in 0..n2 {
        m[(n1 + i, n1 + i)] = b.clone();
    }
    m
}

/// A point of `T*A`: base fiber point `y` in `A`, fiber covector `phi` in
/// `A*`, core part `p` in `T*M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotangentA {
    pub y: Vec<Polynomial>,
    pub phi: Vec<Polynomial>,
    pub p: Vec<Polynomial>,
}

/// A point of `T*(A*)`: `phi` in `A*`, fiber covector `y` in `A`, core `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotangentDual {
    pub phi: Vec<Polynomial>,
    pub y: Vec<Polynomial>,
    pub p: Vec<Polynomial>,
}

/// A point of `TA`: `y` in `A`, `xdot` in `TM`, core `ydot` in `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentA {
    pub y: Vec<Polynomial>,
    pub xdot: Vec<Polynomial>,
    pub ydot: Vec<Polynomial>,
}

/// A point of `T(A*)`: `phi` in `A*`, `xdot` in `TM`, core `phidot` in `A*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentDual {
    pub phi: Vec<Polynomial>,
    pub xdot: Vec<Polynomial>,
    pub phidot: Vec<Polynomial>,
}

/// A point of the horizontal dual of `TA` over `TM`: side `xdot`, `kappa`
/// in `A*` pairing with the core, `psi` in `A*` pairing with `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HorizontalDualTA {
    pub xdot: Vec<Polynomial>,
    pub kappa: Vec<Polynomial>,
    pub psi: Vec<Polynomial>,
}

/// The tangent and cotangent doubles of a bundle of rank `n` over a base of
/// dimension `d`, at one fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CotangentModel {
    pub n: usize,
    pub d: usize,
}

impl CotangentModel {
    pub fn new(n: usize, d: usize) -> Self {
        CotangentModel { n, d }
    }

    /// `R: T*(A*) -> T*A`, `(phi, y, p') -> (y, phi, -p')`.
    pub fn r(&self, f: &CotangentDual) -> CotangentA {
        CotangentA {
            y: f.y.clone(),
            phi: f.phi.clone(),
            p: f.p.iter().map(|c| -c).collect(),
        }
    }

    pub fn i(&self, x: &TangentDual) -> HorizontalDualTA {
        HorizontalDualTA {
            xdot: x.xdot.clone(),
            kappa: x.phi.clone(),
            psi: x.phidot.clone(),
        }
    }

    /// Tangent pairing of `T(A*)` and `TA` over `TM`.
    pub fn tangent_pairing(&self, x: &TangentDual, xi: &TangentA) -> Result<Polynomial> {
        if x.xdot != xi.xdot {
            return Err(Error::NotComposable);
        }
        Ok(dot(&x.phidot, &xi.y) + dot(&x.phi, &xi.ydot))
    }

    /// `<I(X), xi>` as a horizontal dual functional on `TA`.
    pub fn eval_horizontal(&self, p: &HorizontalDualTA, xi: &TangentA) -> Result<Polynomial> {
        if p.xdot != xi.xdot {
            return Err(Error::NotComposable);
        }
        Ok(dot(&p.psi, &xi.y) + dot(&p.kappa, &xi.ydot))
    }

    /// Standard pairing of `T*(A*)` with `T(A*)` over `A*`.
    pub fn pair_cotangent_dual(&self, f: &CotangentDual, x: &TangentDual) -> Result<Polynomial> {
        if f.phi != x.phi {
            return Err(Error::NotComposable);
        }
        Ok(dot(&f.y, &x.phidot) + dot(&f.p, &x.xdot))
    }

    /// Standard pairing of `T*A` with `TA` over `A`.
    pub fn pair_cotangent(&self, f: &CotangentA, xi: &TangentA) -> Result<Polynomial> {
        if f.y != xi.y {
            return Err(Error::NotComposable);
        }
        Ok(dot(&f.phi, &xi.ydot) + dot(&f.p, &xi.xdot))
    }

    /// `<F, X> + <R(F), xi> - <<X, xi>>`.
    pub fn vue_residual(&self, f: &CotangentDual, x: &TangentDual, xi: &TangentA) -> Result<Polynomial> {
        let lhs = self.pair_cotangent_dual(f, x)? + self.pair_cotangent(&self.r(f), xi)?;
        Ok(lhs - self.tangent_pairing(x, xi)?)
    }

    /// Generic points with one variable per free coordinate.
    pub fn generic_points(&self) -> (CotangentDual, TangentDual, TangentA) {
        let vars =
            |p: &str, m: usize| -> Vec<Polynomial> { (1..=m).map(|i| Polynomial::var(&format!("{p}{i}"))).collect() };
        let (phi, y, xdot) = (vars("phi", self.n), vars("y", self.n), vars("xdot", self.d));
        let f = CotangentDual {
            phi: phi.clone(),
            y: y.clone(),
            p: vars("p", self.d),
        };
        let x = TangentDual {
            phi,
            xdot: xdot.clone(),
            phidot: vars("phidot", self.n),
        };
        let xi = TangentA {
            y,
            xdot,
            ydot: vars("ydot", self.n),
        };
        (f, x, xi)
    }

    /// The identity on generic points: residual polynomial must vanish.
    pub fn check_vue(&self) -> CheckReport {
        let mut report = CheckReport::new("vue");
        let (f, x, xi) = self.generic_points();
        match self.vue_residual(&f, &x, &xi) {
            Ok(r) if r.is_zero() => {}
            Ok(r) => report.push(format!("vue(n={},d={})", self.n, self.d), r.to_string()),
            Err(e) => report.push(format!("vue(n={},d={})", self.n, self.d), e.to_string()),
        }
        let core_in = CotangentDual {
            phi: vec![Polynomial::zero(); self.n],
            y: vec![Polynomial::zero(); self.n],
            p: f.p.clone(),
        };
        let core_out = self.r(&core_in);
        let negated: Vec<Polynomial> = f.p.iter().map(|c| -c).collect();
        if core_out.p != negated || core_out.y.iter().chain(&core_out.phi).any(|c| !c.is_zero()) {
            report.push("R on core", format!("{:?}", core_out.p));
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::int;

    fn d111() -> DecomposedDvb {
        DecomposedDvb::new(1, 1, 1)
    }

    #[test]
    fn additions() {
        let d = d111();
        let a = DvbElement::from_ints(&[1], &[2], &[3]);
        let sum = d
            .add(Direction::Vertical, &a, &DvbElement::from_ints(&[1], &[4], &[5]))
            .unwrap();
        assert_eq!(sum, DvbElement::from_ints(&[1], &[6], &[8]));
        let sum = d
            .add(Direction::Horizontal, &a, &DvbElement::from_ints(&[4], &[2], &[5]))
            .unwrap();
        assert_eq!(sum, DvbElement::from_ints(&[5], &[2], &[8]));
        let err = d.add(Direction::Vertical, &a, &DvbElement::from_ints(&[2], &[4], &[5]));
        assert_eq!(err.unwrap_err().to_string(), "incompatible elements for this addition");
        assert_eq!(sum.to_string(), "(5; 2; 8)");
    }

    #[test]
    fn projection() {
        let d = d111();
        let p = DualElementV::from_ints(&[2], &[3], &[5]);
        assert_eq!(d.dual_project(&p).unwrap(), vec![int(3)]);
        let d2 = DecomposedDvb::new(1, 1, 2);
        let p = DualElementV::from_ints(&[0], &[1, -1], &[4]);
        assert_eq!(d2.dual_project(&p).unwrap(), vec![int(1), int(-1)]);
    }

    #[test]
    fn pairing_example() {
        let d = d111();
        let p = DualElementV::from_ints(&[2], &[3], &[5]);
        let q = DualElementH::from_ints(&[7], &[3], &[11]);
        for k in [0, 1, 9] {
            let x = DvbElement::from_ints(&[2], &[7], &[k]);
            assert_eq!(d.pair_duals(&p, &q, &x).unwrap(), int(-13));
            assert_eq!(d.with_sign(DvbSign::Minus).pair_duals(&p, &q, &x).unwrap(), int(13));
        }
        let q2 = DualElementH::from_ints(&[7], &[4], &[11]);
        let err = d.pair_duals(&p, &q2, &DvbElement::from_ints(&[2], &[7], &[0]));
        assert_eq!(err.unwrap_err().to_string(), "elements not composable over K*");
    }

    #[test]
    fn z_map_examples() {
        let d = d111();
        assert_eq!(
            d.z_v(&DualElementV::from_ints(&[1], &[2], &[3])),
            DualElementV::from_ints(&[1], &[2], &[-3])
        );
        assert_eq!(
            d.z_h(&DualElementH::from_ints(&[4], &[2], &[3])),
            DualElementH::from_ints(&[-4], &[2], &[3])
        );
        assert!(d.check_z_maps().passed);
        assert!(d.with_sign(DvbSign::Minus).check_z_maps().passed);
    }

    #[test]
    fn nondegenerate_ranks() {
        let r = d111().check_pairing_nondegenerate();
        assert!(r.passed);
        assert_eq!(r.metric("rank"), Some(2));
        assert_eq!(
            DecomposedDvb::new(2, 3, 1).check_pairing_nondegenerate().metric("rank"),
            Some(5)
        );
        assert_eq!(
            DecomposedDvb::new(0, 0, 2).check_pairing_nondegenerate().metric("rank"),
            Some(0)
        );
    }

    #[test]
    fn vue_example() {
        let m = CotangentModel::new(1, 1);
        let c = |x: i64| vec![Polynomial::int(x)];
        let f = CotangentDual {
            phi: c(2),
            y: c(3),
            p: c(5),
        };
        let x = TangentDual {
            phi: c(2),
            xdot: c(7),
            phidot: c(11),
        };
        let xi = TangentA {
            y: c(3),
            xdot: c(7),
            ydot: c(13),
        };
        assert_eq!(m.pair_cotangent_dual(&f, &x).unwrap(), Polynomial::int(68));
        assert_eq!(m.pair_cotangent(&m.r(&f), &xi).unwrap(), Polynomial::int(-9));
        assert_eq!(m.tangent_pairing(&x, &xi).unwrap(), Polynomial::int(59));
        assert_eq!(m.eval_horizontal(&m.i(&x), &xi).unwrap(), Polynomial::int(59));
        assert!(m.check_vue().passed);
        assert!(CotangentModel::new(0, 2).check_vue().passed);
    }
}
