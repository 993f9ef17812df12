use std::fmt::Write;

use super::parser::ModelFile;
use super::resolve::{algebroid_decl, bialgebroid_decl, Model};
use crate::bialgebroid::{check_bialgebroid, manin_double, semidirect_e, semidirect_estar, PairingSign};
use crate::double_vb::CotangentModel;
use crate::error::{Error, Result};
use crate::matched_pair::{build_vacant_double, check_matched_pair, check_vacant_conditions, MatchedPair};
use crate::report::{CheckOptions, CheckReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckTarget {
    Algebroid,
    Rep,
    MatchedPair,
    Bialgebroid,
    Poisson,
    Manin,
    Vacant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DvbVerb {
    Pair,
    Zmaps,
    Vue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildTarget {
    Double,
    Vacant,
    Semidirect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    Check(CheckTarget),
    Dvb(DvbVerb),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRequest {
    pub verb: Verb,
    pub name: String,
    pub opts: CheckOptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn verified(model: &Model, name: &str, opts: &CheckOptions) -> Result<MatchedPair> {
    model.matched_pair(name)?.verify(opts).map_err(|r| {
        let first = r
            .witnesses
            .first()
            .map(|w| format!("{}: {}", w.identity, w.residual))
            .unwrap_or_default();
        Error::UncheckedPair(format!("`{name}` fails the matched-pair check ({first})"))
    })
}

/// Runs one named check. The report is determined by the model and the seed.
pub fn run_check(m: &ModelFile, req: &CheckRequest) -> Result<CheckReport> {
    let model = Model::new(m);
    let (name, opts) = (req.name.as_str(), &req.opts);
    let report = match req.verb {
        Verb::Check(CheckTarget::Algebroid) => model.algebroid(name)?.check_axioms(),
        Verb::Check(CheckTarget::Rep) => model.rep(name)?.check(opts),
        Verb::Check(CheckTarget::MatchedPair) => check_matched_pair(&model.matched_pair(name)?, opts),
        Verb::Check(CheckTarget::Bialgebroid) => check_bialgebroid(&model.bialgebroid(name)?, opts),
        Verb::Check(CheckTarget::Poisson) => model.poisson(name)?.check_jacobi(),
        Verb::Check(CheckTarget::Manin) => {
            let (g, gs) = model.manin(name)?;
            manin_double(&g, &gs)?.check()
        }
        Verb::Check(CheckTarget::Vacant) => match model.matched_pair(name)?.verify(opts) {
            Ok(mp) => check_vacant_conditions(&build_vacant_double(&mp)?),
            Err(r) => r,
        },
        Verb::Dvb(DvbVerb::Pair) => model.dvb(name)?.check_pairing_nondegenerate(),
        Verb::Dvb(DvbVerb::Zmaps) => model.dvb(name)?.check_z_maps(),
        Verb::Dvb(DvbVerb::Vue) => {
            let d = model.dvb(name)?;
            if d.dim_k != d.dim_h {
                return Err(Error::Dimension(format!(
                    "`{name}` is not a tangent double: dimK must equal dimH"
                )));
            }
            CotangentModel::new(d.dim_h, d.dim_v).check_vue()
        }
    };
    Ok(report.with_seed(opts.seed))
}

/// Builds derived structures from a verified matched pair as new declarations.
pub fn build(m: &ModelFile, what: BuildTarget, name: &str, opts: &CheckOptions) -> Result<ModelFile> {
    let model = Model::new(m);
    let mp = verified(&model, name, opts)?;
    let decls = match what {
        BuildTarget::Double => vec![algebroid_decl(&format!("{name}_double"), &mp.double_sum())],
        BuildTarget::Vacant => {
            let v = build_vacant_double(&mp)?;
            vec![
                algebroid_decl(&format!("{name}_vertical"), &v.vertical),
                algebroid_decl(&format!("{name}_horizontal"), &v.horizontal),
            ]
        }
        BuildTarget::Semidirect => {
            let (e, es) = (format!("{name}_E"), format!("{name}_Estar"));
            vec![
                algebroid_decl(&e, &semidirect_e(&mp)),
                algebroid_decl(&es, &semidirect_estar(&mp, PairingSign::Minus)),
                bialgebroid_decl(&format!("{name}_semidirect"), &e, &es),
            ]
        }
    };
    Ok(ModelFile { decls })
}

/// Text: one status line then one indented line per witness. JSON: one line
/// with fields in schema order.
pub fn emit_report(r: &CheckReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let status = if r.passed { "PASS" } else { "FAIL" };
            let mut s = format!("{status} {} ({} witnesses)\n", r.check, r.witnesses.len());
            for w in &r.witnesses {
                writeln!(s, "  {}: {}", w.identity, w.residual).expect("writing to a string");
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse_model;
    use super::*;

    const BROKEN: &str = "algebroid B { rank 3; bracket [1,2] = e3; bracket [1,3] = e1; }";

    fn req(verb: Verb, name: &str) -> CheckRequest {
        CheckRequest {
            verb,
            name: name.into(),
            opts: CheckOptions::default(),
        }
    }

    #[test]
    fn broken_rank_three() {
        let m = parse_model(BROKEN).unwrap();
        let r = run_check(&m, &req(Verb::Check(CheckTarget::Algebroid), "B")).unwrap();
        assert!(!r.passed);
        assert_eq!(r.witnesses[0].identity, "J(1,2,3)[l=3]");
        assert_eq!(r.witnesses[0].residual, "e3");
        let json = emit_report(&r, Format::Json);
        assert!(json.starts_with(
            r#"{"check":"algebroid","passed":false,"witnesses":[{"identity":"J(1,2,3)[l=3]","residual":"e3"}"#
        ));
        assert!(json.ends_with("\"seed\":0,\"elapsed_ms\":0}\n"));
    }

    #[test]
    fn text_pass_line() {
        let m = parse_model("algebroid A { rank 2; bracket [1,2] = e2; }").unwrap();
        let r = run_check(&m, &req(Verb::Check(CheckTarget::Algebroid), "A")).unwrap();
        assert_eq!(emit_report(&r, Format::Text), "PASS algebroid (0 witnesses)\n");
        assert!(emit_report(&r, Format::Json).contains(r#""passed":true,"witnesses":[]"#));
    }

    #[test]
    fn wrong_kind_and_unknown() {
        let m = parse_model(BROKEN).unwrap();
        assert!(matches!(
            run_check(&m, &req(Verb::Check(CheckTarget::Poisson), "B")),
            Err(Error::WrongKind { .. })
        ));
        assert_eq!(
            run_check(&m, &req(Verb::Dvb(DvbVerb::Pair), "Z")).unwrap_err(),
            Error::UnknownTarget("Z".into())
        );
    }
}
