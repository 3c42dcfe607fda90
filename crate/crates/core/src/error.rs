use alloc::string::String;

/// Failure conditions of the library operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("fields differ: Q(zeta_{0}) vs Q(zeta_{1})")]
    FieldMismatch(u32, u32),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("group of order {order} exceeds the configured cap {cap}")]
    GroupTooLarge { order: usize, cap: usize },
    #[error("action is not by automorphisms or not a homomorphism: {0}")]
    InvalidAction(String),
    #[error("monomial datum rejected: condition `{0}` fails")]
    Datum(&'static str),
    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),
    #[error("bilinear form is not convolution invertible")]
    NotInvertible,
    #[error("basis is not in a coradical-compatible order at `{0}`")]
    NotPointedOrder(String),
    #[error("operation not supported for the `{0}` family")]
    UnsupportedFamily(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("word of length {len} exceeds the cap {cap}")]
    WordTooLong { len: usize, cap: usize },
    #[error("linear map is not a Hopf algebra map: {0}")]
    NotHopfMap(String),
    #[error("cocycles are not compatible with the map")]
    CocycleMismatch,
    #[error("monomial `{0}` is not of degree zero")]
    NotDegreeZero(String),
    #[error("monomial `{0}` has a negative exponent on a non-group-like variable")]
    OutOfLocalization(String),
    #[error("Jacobian determinant vanishes identically")]
    SingularJacobian,
    #[error("no verified niceness witness for generator `{0}`")]
    WitnessFailure(String),
    #[error("lattice index {found} differs from |G_ab| = {expected}")]
    IndexMismatch { found: String, expected: usize },
    #[error("unsupported lattice basis kind: {0}")]
    UnsupportedKind(String),
    #[error("the acting group does not act trivially on the abelianization")]
    TrivialActionViolated,
}

pub type Result<T> = core::result::Result<T, Error>;
