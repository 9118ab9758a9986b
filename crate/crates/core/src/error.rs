use thiserror::Error;

/// Every failure the library can report.
///
/// [`PlatError::code`] gives a stable, machine-parsable name for each variant;
/// the CLI prints it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlatError {
    #[error("braid words on {left} and {right} strands cannot be composed")]
    StrandMismatch { left: usize, right: usize },
    #[error("strand count must be even and at least 2, got {0}")]
    InvalidStrandCount(usize),
    #[error("generator index {index} is outside 1..={max} for {strands} strands")]
    LetterOutOfRange {
        index: usize,
        max: usize,
        strands: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("width m = {0} is below the minimum of 2")]
    WidthTooSmall(usize),
    #[error("height n = {0} is not odd")]
    EvenHeight(usize),
    #[error("row {row} has {found} entries, expected {expected}")]
    WrongRowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("declared height {declared} but {found} rows were given")]
    RowCount { declared: usize, found: usize },
    #[error("matrix is not {0}-highly twisted")]
    NotHighlyTwisted(u64),
    #[error("width {m} and height {n} are outside the uniqueness range (m >= 4, odd n >= 3)")]
    DimensionsOutOfTheoremRange { m: usize, n: usize },
    #[error("continued fraction has a zero tail where a reciprocal is taken")]
    DivisionByZeroTail,
    #[error("continued fraction expansion must have at least one coefficient")]
    EmptyExpansion,
    #[error("{0} has no expansion with all partial quotients of modulus >= 3")]
    NotRepresentable(String),
    #[error("coefficient sequence must have odd length, got {0}")]
    EvenCoefficientCount(usize),
    #[error("coefficient {value} at position {position} has modulus below 3")]
    CoefficientTooSmall { position: usize, value: i64 },
    #[error("Hilden move index {0} must be odd")]
    IndexParity(usize),
    #[error("Hilden move {kind}@{index} does not fit on {strands} strands")]
    IndexRange {
        kind: u8,
        index: usize,
        strands: usize,
    },
    #[error("diagram has {crossings} crossings, above the state-sum cap of {cap}")]
    TooManyCrossings { crossings: usize, cap: usize },
    #[error("invalid planar diagram: {0}")]
    InvalidDiagram(String),
    #[error("vertical spheres have different heights ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("vertical spheres are not componentwise comparable")]
    IncomparableSpheres,
    #[error("vertical sphere {0} is not valid for this plat")]
    InvalidSphere(String),
    #[error("maximal collections need m >= 4 and odd n >= 3, got m = {m}, n = {n}")]
    SphereRange { m: usize, n: usize },
}

impl PlatError {
    pub fn code(&self) -> &'static str {
        match self {
            PlatError::StrandMismatch { .. } => "StrandMismatch",
            PlatError::InvalidStrandCount(_) => "InvalidStrandCount",
            PlatError::LetterOutOfRange { .. } => "LetterOutOfRange",
            PlatError::Parse { .. } => "Parse",
            PlatError::WidthTooSmall(_) => "WidthTooSmall",
            PlatError::EvenHeight(_) => "EvenHeight",
            PlatError::WrongRowLength { .. } => "WrongRowLength",
            PlatError::RowCount { .. } => "RowCount",
            PlatError::NotHighlyTwisted(_) => "NotHighlyTwisted",
            PlatError::DimensionsOutOfTheoremRange { .. } => "DimensionsOutOfTheoremRange",
            PlatError::DivisionByZeroTail => "DivisionByZeroTail",
            PlatError::EmptyExpansion => "EmptyExpansion",
            PlatError::NotRepresentable(_) => "NotRepresentable",
            PlatError::EvenCoefficientCount(_) => "EvenCoefficientCount",
            PlatError::CoefficientTooSmall { .. } => "CoefficientTooSmall",
            PlatError::IndexParity(_) => "IndexParity",
            PlatError::IndexRange { .. } => "IndexRange",
            PlatError::TooManyCrossings { .. } => "TooManyCrossings",
            PlatError::InvalidDiagram(_) => "InvalidDiagram",
            PlatError::DimensionMismatch(..) => "DimensionMismatch",
            PlatError::IncomparableSpheres => "IncomparableSpheres",
            PlatError::InvalidSphere(_) => "InvalidSphere",
            PlatError::SphereRange { .. } => "SphereRange",
        }
    }
}

pub type Result<T> = std::result::Result<T, PlatError>;
