use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the engine.
///
/// Variants fall in three groups: malformed input (tables, files,
/// permutations), violated preconditions of an operation, and
/// [`Error::TheoremViolation`], which means a computed object failed a
/// property the mathematics guarantees. The last one is always an engine bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a group needs at least one element")]
    EmptyGroup,
    #[error("table shape mismatch: {0}")]
    Shape(String),
    #[error("element label {label:?} at position {index} is empty or contains whitespace")]
    InvalidLabel { index: usize, label: String },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("table entry ({row}, {col}) = {value} is not an element index")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("row 0 is not the identity row: entry {col} reads {value}")]
    IdentityRow { col: usize, value: usize },
    #[error("element {element} has no left inverse")]
    MissingInverse { element: usize },
    #[error("not a Latin square: {line} {index} repeats element {value}")]
    NotLatin {
        line: &'static str,
        index: usize,
        value: usize,
    },
    #[error("associativity fails at ({a}, {b}, {c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("order {order} exceeds the size cap {max} (use a force flag to lift it)")]
    OrderTooLarge { order: usize, max: usize },
    #[error("element index {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("subset does not contain the identity")]
    MissingIdentity,
    #[error("subset is not closed: {a} * {b} = {product} is missing")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("subgroup belongs to a different parent group")]
    ForeignSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,

    #[error("map has {found} images but its source has order {expected}")]
    MapLength { expected: usize, found: usize },
    #[error("map image at {element} is not an element of the target")]
    MapImage { element: usize },
    #[error("map is not a homomorphism: fails at ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("permutation sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid transposition arguments ({i}, {j}) for n = {n}")]
    TransposeArgs { i: usize, j: usize, n: usize },
    #[error("sym({n}) exceeds the degree cap {max} (use a force flag to lift it)")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("action domain is empty")]
    EmptyDomain,
    #[error("action domain repeats the value at position {0}")]
    DuplicateDomainValue(usize),
    #[error("action of element {element} sends domain point {point} outside the domain")]
    ActionClosure { element: usize, point: usize },
    #[error("identity does not fix domain point {point}")]
    ActionIdentity { point: usize },
    #[error("element {element} does not act as a permutation of the domain")]
    ActionNotPermutation { element: usize },
    #[error("action is incompatible with the group operation at x = {x}, y = {y}, point {point}")]
    ActionCompatibility { x: usize, y: usize, point: usize },
    #[error("value is not in the action domain: {0}")]
    NotInDomain(String),
    #[error("domain point {target} is not in the orbit of {from}")]
    NotInOrbit { target: usize, from: usize },
    #[error("subgroup is not a conjugate of the given subgroup")]
    NotAConjugate,

    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("no element of order {order}")]
    NoElementOfOrder { order: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("prime order has no proper normal subgroup")]
    PrimeOrder(usize),
    #[error("order {0} is outside the composite range 4..59")]
    OrderOutOfRange(usize),
    #[error("center is nontrivial; class sums do not apply")]
    NontrivialCenter,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),

    #[error("theorem violation (engine bug): {0}")]
    TheoremViolation(String),
}

impl Error {
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
