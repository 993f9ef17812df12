use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("antisymmetry violated at ({0},{1},{2})")]
    Antisymmetry(usize, usize, usize),
    #[error("incompatible elements for this addition")]
    IncompatibleAddition,
    #[error("elements not composable over K*")]
    NotComposable,
    #[error("degree exceeds rank")]
    DegreeExceedsRank,
    #[error("action not linear over base")]
    ActionNotLinear,
    #[error("{0} is not closed under the bracket")]
    NotClosed(String),
    #[error("frames not in duality")]
    FramesNotInDuality,
    #[error("matched pair refused: {0}")]
    UncheckedPair(String),
    #[error("Poisson bivector refused: {0}")]
    NotPoisson(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{line}:{col}: {message}{}", expected_suffix(.expected))]
    Parse {
        line: usize,
        col: usize,
        message: String,
        expected: Vec<String>,
    },
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unresolved reference `{0}`")]
    UnresolvedReference(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("`{name}` is declared as {found}, expected {wanted}")]
    WrongKind {
        name: String,
        found: String,
        wanted: String,
    },
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected one of: {})", expected.join(", "))
    }
}
