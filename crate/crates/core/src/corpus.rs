//! The bundled model files.

use crate::algebroid::LieAlgebroid;
use crate::frontend::{parse_model, Kind, Model, ModelFile};
use crate::matched_pair::MatchedPairData;
use crate::poisson::PoissonAlgebra;

pub const FILES: [(&str, &str); 5] = [
    ("algebroids.dlm", include_str!("../models/algebroids.dlm")),
    ("matched_pairs.dlm", include_str!("../models/matched_pairs.dlm")),
    ("poisson.dlm", include_str!("../models/poisson.dlm")),
    ("manin.dlm", include_str!("../models/manin.dlm")),
    ("dvb.dlm", include_str!("../models/dvb.dlm")),
];

/// All bundled files merged into one model.
pub fn model() -> ModelFile {
    let mut m = ModelFile::default();
    for (name, text) in FILES {
        let part = parse_model(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        m.extend(part).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    m
}

fn names(m: &ModelFile, kind: Kind) -> Vec<String> {
    m.decls
        .iter()
        .filter(|d| d.kind == kind)
        .map(|d| d.name.clone())
        .collect()
}

pub fn matched_pairs() -> Vec<(String, MatchedPairData)> {
    let m = model();
    let model = Model::new(&m);
    names(&m, Kind::MatchedPair)
        .into_iter()
        .map(|n| {
            let mp = model.matched_pair(&n).expect("bundled pairs resolve");
            (n, mp)
        })
        .collect()
}

/// Every bundled algebroid that satisfies the axioms.
pub fn algebroids() -> Vec<(String, LieAlgebroid)> {
    let m = model();
    let model = Model::new(&m);
    names(&m, Kind::Algebroid)
        .into_iter()
        .map(|n| {
            let a = model.algebroid(&n).expect("bundled algebroids resolve");
            (n, a)
        })
        .filter(|(_, a)| a.check_axioms().passed)
        .collect()
}

pub fn poisson_structures() -> Vec<(String, PoissonAlgebra)> {
    let m = model();
    let model = Model::new(&m);
    names(&m, Kind::Poisson)
        .into_iter()
        .map(|n| {
            let p = model.poisson(&n).expect("bundled structures resolve");
            (n, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matched_pair::check_matched_pair;
    use crate::report::CheckOptions;

    #[test]
    fn bundled_files_load() {
        let m = model();
        assert!(m.decls.len() > 30);
        let pairs = matched_pairs();
        assert_eq!(pairs.len(), 7);
        for (n, mp) in &pairs {
            assert!(check_matched_pair(mp, &CheckOptions::default()).passed, "{n}");
        }
        let broken: Vec<_> = names(&m, Kind::Algebroid)
            .into_iter()
            .filter(|n| !algebroids().iter().any(|(a, _)| a == n))
            .collect();
        assert_eq!(broken, ["Broken", "BadAnchor"]);
    }
}
