//! Conversion between declarations and the objects they describe.

use std::collections::HashSet;

use super::parser::{error_at, Decl, Entry, EntryBody, Kind, ModelFile};
use crate::algebroid::{default_labels, LieAlgebroid};
use crate::bialgebroid::{semidirect_e_unchecked, semidirect_estar_unchecked, LieBialgebroid, PairingSign};
use crate::double_vb::{DecomposedDvb, DvbSign};
use crate::error::{Error, Result};
use crate::matched_pair::{MatchedPairData, Representation};
use crate::poisson::{cotangent_algebroid, PoissonAlgebra};
use crate::symbolic::{Monomial, PolyMatrix, Polynomial};

const ANCHOR_PREFIX: &str = "d_";

fn words(e: &Entry) -> Result<&[String]> {
    match &e.body {
        EntryBody::Words(w) => Ok(w),
        EntryBody::Assign { .. } => Err(error_at(
            e.pos,
            format!("`{}` takes words, not an assignment", e.key),
            &[],
        )),
    }
}

fn single(e: &Entry) -> Result<&str> {
    match words(e)? {
        [w] => Ok(w),
        _ => Err(error_at(e.pos, format!("`{}` takes exactly one word", e.key), &[])),
    }
}

fn count(e: &Entry) -> Result<usize> {
    single(e)?
        .parse()
        .map_err(|_| error_at(e.pos, format!("`{}` needs a nonnegative integer", e.key), &[]))
}

fn assign(e: &Entry) -> Result<(&[String], &Polynomial)> {
    match &e.body {
        EntryBody::Assign { index, value } => Ok((index, value)),
        EntryBody::Words(_) => Err(error_at(e.pos, format!("`{}` needs `[...] = expression`", e.key), &[])),
    }
}

/// 1-based frame index to 0-based.
fn frame_index(e: &Entry, s: &str, n: usize) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
        _ => Err(error_at(e.pos, format!("index `{s}` out of range 1..{n}"), &[])),
    }
}

fn arity(e: &Entry, index: &[String], n: usize) -> Result<()> {
    if index.len() == n {
        Ok(())
    } else {
        Err(error_at(e.pos, format!("`{}` takes {n} indices", e.key), &[]))
    }
}

fn distinct(e: &Entry, names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    match names.iter().find(|n| !seen.insert(n.as_str())) {
        Some(n) => Err(error_at(e.pos, format!("`{n}` listed twice"), &[])),
        None => Ok(()),
    }
}

fn check_keys(d: &Decl, allowed: &[&str]) -> Result<()> {
    match d.entries.iter().find(|e| !allowed.contains(&e.key.as_str())) {
        Some(e) => Err(error_at(
            e.pos,
            format!("unknown key `{}` in {}", e.key, d.kind),
            allowed,
        )),
        None => Ok(()),
    }
}

fn find<'a>(d: &'a Decl, key: &str) -> Option<&'a Entry> {
    d.entries.iter().rev().find(|e| e.key == key)
}

fn required<'a>(d: &'a Decl, key: &str) -> Result<&'a Entry> {
    find(d, key).ok_or_else(|| error_at(d.pos, format!("{} `{}` is missing `{key}`", d.kind, d.name), &[key]))
}

/// Coefficients of `value` along `basis`; the coefficients may only involve
/// `coeff_vars`.
fn combination(e: &Entry, value: &Polynomial, basis: &[String], coeff_vars: &[String]) -> Result<Vec<Polynomial>> {
    let names: Vec<&str> = basis.iter().map(String::as_str).collect();
    let mut out = vec![Polynomial::zero(); basis.len()];
    for (m, c) in value.split_by(&names) {
        let slot = (m.degree() == 1)
            .then(|| basis.iter().position(|b| m == Monomial::var(b, 1)))
            .flatten();
        let Some(slot) = slot else {
            return Err(error_at(
                e.pos,
                format!("`{}` must be linear in {}", value, basis.join(", ")),
                &[],
            ));
        };
        if let Some(v) = c.vars().into_iter().find(|v| !coeff_vars.contains(v)) {
            return Err(error_at(e.pos, format!("unbound variable `{v}`"), &[]));
        }
        out[slot] = c;
    }
    Ok(out)
}

fn linear_value(basis: &[String], coeffs: &[Polynomial]) -> Polynomial {
    basis.iter().zip(coeffs).map(|(b, c)| c * &Polynomial::var(b)).sum()
}

fn anchor_basis(base: &[String]) -> Vec<String> {
    base.iter().map(|v| format!("{ANCHOR_PREFIX}{v}")).collect()
}

fn one_based(i: usize) -> String {
    (i + 1).to_string()
}

/// Typed view of a model file.
pub struct Model<'a> {
    pub file: &'a ModelFile,
}

impl<'a> Model<'a> {
    pub fn new(file: &'a ModelFile) -> Self {
        Model { file }
    }

    pub fn decl(&self, name: &str, kind: Kind) -> Result<&'a Decl> {
        let d = self.file.get(name).ok_or_else(|| Error::UnknownTarget(name.into()))?;
        if d.kind != kind {
            return Err(Error::WrongKind {
                name: name.into(),
                found: d.kind.to_string(),
                wanted: kind.to_string(),
            });
        }
        Ok(d)
    }

    pub fn algebroid(&self, name: &str) -> Result<LieAlgebroid> {
        let d = self.decl(name, Kind::Algebroid)?;
        check_keys(d, &["base", "rank", "labels", "anchor", "bracket"])?;
        let base: Vec<String> = match find(d, "base") {
            Some(e) => {
                let w = words(e)?.to_vec();
                distinct(e, &w)?;
                w
            }
            None => Vec::new(),
        };
        let labels = match (find(d, "rank"), find(d, "labels")) {
            (_, Some(e)) => {
                let w = words(e)?.to_vec();
                distinct(e, &w)?;
                if let Some(r) = find(d, "rank") {
                    if count(r)? != w.len() {
                        return Err(error_at(r.pos, "rank disagrees with labels", &[]));
                    }
                }
                if let Some(l) = w.iter().find(|l| base.contains(l)) {
                    return Err(error_at(e.pos, format!("label `{l}` is also a base variable"), &[]));
                }
                w
            }
            (Some(r), None) => default_labels("e", count(r)?),
            (None, None) => {
                return Err(error_at(
                    d.pos,
                    format!("algebroid `{name}` needs `rank` or `labels`"),
                    &["rank", "labels"],
                ))
            }
        };
        let n = labels.len();
        let base_refs: Vec<&str> = base.iter().map(String::as_str).collect();
        let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let mut a = LieAlgebroid::new(&base_refs, n).with_labels(&label_refs);
        let dirs = anchor_basis(&base);
        let mut anchored = HashSet::new();
        let mut bracketed = HashSet::new();
        for e in &d.entries {
            match e.key.as_str() {
                "anchor" => {
                    let (index, value) = assign(e)?;
                    arity(e, index, 1)?;
                    let i = frame_index(e, &index[0], n)?;
                    if !anchored.insert(i) {
                        return Err(error_at(e.pos, format!("anchor [{}] given twice", i + 1), &[]));
                    }
                    a.set_anchor(i, combination(e, value, &dirs, &base)?);
                }
                "bracket" => {
                    let (index, value) = assign(e)?;
                    arity(e, index, 2)?;
                    let i = frame_index(e, &index[0], n)?;
                    let j = frame_index(e, &index[1], n)?;
                    if i == j {
                        return Err(error_at(e.pos, "bracket of an element with itself is zero", &[]));
                    }
                    if !bracketed.insert((i.min(j), i.max(j))) {
                        return Err(error_at(
                            e.pos,
                            format!("bracket [{},{}] given twice", i + 1, j + 1),
                            &[],
                        ));
                    }
                    a.set_bracket(i, j, combination(e, value, &labels, &base)?);
                }
                _ => {}
            }
        }
        Ok(a)
    }

    pub fn rep(&self, name: &str) -> Result<Representation> {
        let d = self.decl(name, Kind::Rep)?;
        check_keys(d, &["actor", "carrier", "act"])?;
        let actor = self.algebroid(single(required(d, "actor")?)?)?;
        let ce = required(d, "carrier")?;
        let carrier = words(ce)?.to_vec();
        distinct(ce, &carrier)?;
        let mats = matrices(d, "act", actor.rank(), &carrier, actor.base_vars())?;
        Representation::new(actor, carrier, mats)
    }

    pub fn matched_pair(&self, name: &str) -> Result<MatchedPairData> {
        let d = self.decl(name, Kind::MatchedPair)?;
        check_keys(d, &["a", "b", "rho", "sigma"])?;
        let a = self.algebroid(single(required(d, "a")?)?)?;
        let b = self.algebroid(single(required(d, "b")?)?)?;
        let rho = matrices(d, "rho", a.rank(), b.labels(), a.base_vars())?;
        let sigma = matrices(d, "sigma", b.rank(), a.labels(), b.base_vars())?;
        let rho = Representation::new(a.clone(), b.labels().to_vec(), rho)?;
        let sigma = Representation::new(b.clone(), a.labels().to_vec(), sigma)?;
        MatchedPairData::new(a, b, rho, sigma)
    }

    pub fn poisson(&self, name: &str) -> Result<PoissonAlgebra> {
        let d = self.decl(name, Kind::Poisson)?;
        check_keys(d, &["vars", "pi"])?;
        let ve = required(d, "vars")?;
        let vars = words(ve)?.to_vec();
        distinct(ve, &vars)?;
        let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        let mut p = PoissonAlgebra::zero(&refs);
        let mut seen = HashSet::new();
        for e in d.entries.iter().filter(|e| e.key == "pi") {
            let (index, value) = assign(e)?;
            arity(e, index, 2)?;
            for v in index {
                if !vars.contains(v) {
                    return Err(error_at(e.pos, format!("`{v}` is not a coordinate"), &[]));
                }
            }
            let mut key = [index[0].clone(), index[1].clone()];
            key.sort();
            if index[0] == index[1] || !seen.insert(key) {
                return Err(error_at(
                    e.pos,
                    "pi entries must be distinct pairs of distinct coordinates",
                    &[],
                ));
            }
            if let Some(v) = value.vars().into_iter().find(|v| !vars.contains(v)) {
                return Err(error_at(e.pos, format!("unbound variable `{v}`"), &[]));
            }
            p = p.with_pair(&index[0], &index[1], value.clone());
        }
        Ok(p)
    }

    pub fn dvb(&self, name: &str) -> Result<DecomposedDvb> {
        let d = self.decl(name, Kind::Dvb)?;
        check_keys(d, &["dimH", "dimV", "dimK", "sign"])?;
        let dim = |k: &str| find(d, k).map(count).transpose().map(|c| c.unwrap_or(0));
        let sign = match find(d, "sign") {
            None => DvbSign::Plus,
            Some(e) => match single(e)? {
                "+" => DvbSign::Plus,
                "-" => DvbSign::Minus,
                other => return Err(error_at(e.pos, format!("unknown sign `{other}`"), &["+", "-"])),
            },
        };
        Ok(DecomposedDvb::new(dim("dimH")?, dim("dimV")?, dim("dimK")?).with_sign(sign))
    }

    pub fn manin(&self, name: &str) -> Result<(LieAlgebroid, LieAlgebroid)> {
        let d = self.decl(name, Kind::Manin)?;
        check_keys(d, &["g", "gstar"])?;
        let g = self.algebroid(single(required(d, "g")?)?)?;
        let gs = self.algebroid(single(required(d, "gstar")?)?)?;
        Ok((g, gs))
    }

    /// `e`/`estar` given directly, the semidirect pair of `pair`, or the
    /// tangent/cotangent pair of `poisson`.
    pub fn bialgebroid(&self, name: &str) -> Result<LieBialgebroid> {
        let d = self.decl(name, Kind::Bialgebroid)?;
        check_keys(d, &["e", "estar", "pair", "sign", "poisson"])?;
        if let Some(e) = find(d, "pair") {
            let mp = self.matched_pair(single(e)?)?;
            let sign = match find(d, "sign") {
                None => PairingSign::Minus,
                Some(s) => match single(s)? {
                    "-" => PairingSign::Minus,
                    "+" => PairingSign::Plus,
                    other => return Err(error_at(s.pos, format!("unknown sign `{other}`"), &["+", "-"])),
                },
            };
            return LieBialgebroid::new(semidirect_e_unchecked(&mp), semidirect_estar_unchecked(&mp, sign));
        }
        if let Some(e) = find(d, "poisson") {
            let p = self.poisson(single(e)?)?;
            let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
            return LieBialgebroid::new(LieAlgebroid::tangent(&vars), cotangent_algebroid(&p)?);
        }
        let e = self.algebroid(single(required(d, "e")?)?)?;
        let es = self.algebroid(single(required(d, "estar")?)?)?;
        LieBialgebroid::new(e, es)
    }
}

fn matrices(d: &Decl, key: &str, n: usize, carrier: &[String], base: &[String]) -> Result<Vec<PolyMatrix>> {
    let m = carrier.len();
    let mut mats = vec![PolyMatrix::zeros(m, m); n];
    let mut seen = HashSet::new();
    for e in d.entries.iter().filter(|e| e.key == key) {
        let (index, value) = assign(e)?;
        arity(e, index, 2)?;
        let i = frame_index(e, &index[0], n)?;
        let al = frame_index(e, &index[1], m)?;
        if !seen.insert((i, al)) {
            return Err(error_at(
                e.pos,
                format!("{key} [{},{}] given twice", i + 1, al + 1),
                &[],
            ));
        }
        for (be, c) in combination(e, value, carrier, base)?.into_iter().enumerate() {
            mats[i][(be, al)] = c;
        }
    }
    Ok(mats)
}

fn matrix_entries(key: &str, mats: &[PolyMatrix], carrier: &[String]) -> Vec<Entry> {
    let mut out = Vec::new();
    for (i, r) in mats.iter().enumerate() {
        for al in 0..r.cols() {
            let col: Vec<Polynomial> = (0..r.rows()).map(|be| r[(be, al)].clone()).collect();
            if col.iter().any(|c| !c.is_zero()) {
                out.push(Entry::assign(
                    key,
                    vec![one_based(i), one_based(al)],
                    linear_value(carrier, &col),
                ));
            }
        }
    }
    out
}

pub fn algebroid_decl(name: &str, a: &LieAlgebroid) -> Decl {
    let mut entries = vec![Entry::words("base", a.base_vars().to_vec())];
    if a.labels() == default_labels("e", a.rank()) {
        entries.push(Entry::words("rank", vec![a.rank().to_string()]));
    } else {
        entries.push(Entry::words("labels", a.labels().to_vec()));
    }
    let dirs = anchor_basis(a.base_vars());
    for i in 0..a.rank() {
        let v = linear_value(&dirs, a.anchor_of(i));
        if !v.is_zero() {
            entries.push(Entry::assign("anchor", vec![one_based(i)], v));
        }
    }
    for i in 0..a.rank() {
        for j in i + 1..a.rank() {
            let v = linear_value(a.labels(), a.structure(i, j));
            if !v.is_zero() {
                entries.push(Entry::assign("bracket", vec![one_based(i), one_based(j)], v));
            }
        }
    }
    Decl::new(Kind::Algebroid, name, entries)
}

pub fn rep_decl(name: &str, actor: &str, r: &Representation) -> Decl {
    let mut entries = vec![
        Entry::words("actor", vec![actor.into()]),
        Entry::words("carrier", r.carrier_labels().to_vec()),
    ];
    entries.extend(matrix_entries("act", r.matrices(), r.carrier_labels()));
    Decl::new(Kind::Rep, name, entries)
}

pub fn matched_pair_decl(name: &str, a: &str, b: &str, mp: &MatchedPairData) -> Decl {
    let mut entries = vec![Entry::words("a", vec![a.into()]), Entry::words("b", vec![b.into()])];
    entries.extend(matrix_entries("rho", mp.rho.matrices(), mp.b.labels()));
    entries.extend(matrix_entries("sigma", mp.sigma.matrices(), mp.a.labels()));
    Decl::new(Kind::MatchedPair, name, entries)
}

pub fn poisson_decl(name: &str, p: &PoissonAlgebra) -> Decl {
    let mut entries = vec![Entry::words("vars", p.vars().to_vec())];
    let n = p.vars().len();
    for a in 0..n {
        for b in a + 1..n {
            if !p.pi(a, b).is_zero() {
                entries.push(Entry::assign(
                    "pi",
                    vec![p.vars()[a].clone(), p.vars()[b].clone()],
                    p.pi(a, b).clone(),
                ));
            }
        }
    }
    Decl::new(Kind::Poisson, name, entries)
}

pub fn dvb_decl(name: &str, d: &DecomposedDvb) -> Decl {
    let sign = match d.sign {
        DvbSign::Plus => "+",
        DvbSign::Minus => "-",
    };
    Decl::new(
        Kind::Dvb,
        name,
        vec![
            Entry::words("dimH", vec![d.dim_h.to_string()]),
            Entry::words("dimV", vec![d.dim_v.to_string()]),
            Entry::words("dimK", vec![d.dim_k.to_string()]),
            Entry::words("sign", vec![sign.into()]),
        ],
    )
}

pub fn bialgebroid_decl(name: &str, e: &str, estar: &str) -> Decl {
    Decl::new(
        Kind::Bialgebroid,
        name,
        vec![
            Entry::words("e", vec![e.into()]),
            Entry::words("estar", vec![estar.into()]),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse_model;
    use super::*;

    #[test]
    fn point_aff1_matches_programmatic() {
        let m = parse_model("algebroid A { base; rank 2; bracket [1,2] = e2; }").unwrap();
        let a = Model::new(&m).algebroid("A").unwrap();
        let built = LieAlgebroid::new(&[], 2).with_bracket(0, 1, vec![Polynomial::zero(), Polynomial::one()]);
        assert_eq!(a, built);
    }

    #[test]
    fn anchors_and_labels() {
        let m = parse_model(
            "algebroid L { base x; labels u v; anchor [1] = -x*d_x; anchor [2] = d_x; bracket [1,2] = v; }",
        )
        .unwrap();
        let a = Model::new(&m).algebroid("L").unwrap();
        assert_eq!(a.anchor_of(0), &[-Polynomial::var("x")]);
        assert!(a.check_axioms().passed);
        let back = algebroid_decl("L", &a);
        assert_eq!(&back, m.get("L").unwrap());
    }

    #[test]
    fn kind_errors() {
        let m = parse_model("dvb D { dimH 1; }").unwrap();
        let model = Model::new(&m);
        assert_eq!(model.algebroid("Q").unwrap_err(), Error::UnknownTarget("Q".into()));
        assert_eq!(
            model.algebroid("D").unwrap_err().to_string(),
            "`D` is declared as dvb, expected algebroid"
        );
    }

    #[test]
    fn nonlinear_bracket_rejected() {
        let m = parse_model("algebroid A {\n rank 2;\n bracket [1,2] = e1*e2; }").unwrap();
        let err = Model::new(&m).algebroid("A").unwrap_err().to_string();
        assert!(err.starts_with("3:2: `e1*e2` must be linear"), "{err}");
        let m = parse_model("algebroid A { rank 2; bracket [1,2] = z*e1; }").unwrap();
        let err = Model::new(&m).algebroid("A").unwrap_err().to_string();
        assert!(err.ends_with("unbound variable `z`"), "{err}");
    }
}
