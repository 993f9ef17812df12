//! Model files, check dispatch and report rendering.

mod lexer;
mod parser;
mod printer;
mod resolve;
mod run;

pub use lexer::Pos;
pub use parser::{parse_expr, parse_model, Decl, Entry, EntryBody, Kind, ModelFile};
pub use printer::{print_decl, print_model};
pub use resolve::{algebroid_decl, bialgebroid_decl, dvb_decl, matched_pair_decl, poisson_decl, rep_decl, Model};
pub use run::{build, emit_report, run_check, BuildTarget, CheckRequest, CheckTarget, DvbVerb, Format, Verb};
