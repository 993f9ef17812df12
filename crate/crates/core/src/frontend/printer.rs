use std::fmt::Write;

use super::parser::{Decl, EntryBody, ModelFile};

pub fn print_decl(d: &Decl) -> String {
    let mut s = format!("{} {} {{\n", d.kind, d.name);
    for e in &d.entries {
        match &e.body {
            EntryBody::Words(w) if w.is_empty() => writeln!(s, "  {};", e.key),
            EntryBody::Words(w) => writeln!(s, "  {} {};", e.key, w.join(" ")),
            EntryBody::Assign { index, value } => {
                writeln!(s, "  {} [{}] = {};", e.key, index.join(","), value)
            }
        }
        .expect("writing to a string");
    }
    s.push_str("}\n");
    s
}

/// Canonical text of a model file; reparses to an equal `ModelFile`.
pub fn print_model(m: &ModelFile) -> String {
    m.decls.iter().map(print_decl).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse_model;
    use super::*;

    #[test]
    fn canonical_layout() {
        let m = parse_model("algebroid A{base;rank 2;bracket[1,2]=e2+0*e1;}").unwrap();
        assert_eq!(
            print_model(&m),
            "algebroid A {\n  base;\n  rank 2;\n  bracket [1,2] = e2;\n}\n"
        );
        assert_eq!(parse_model(&print_model(&m)).unwrap(), m);
    }
}
