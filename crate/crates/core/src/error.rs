use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("unknown letter '{letter}' at position {position}")]
    UnknownLetter { letter: char, position: usize },
    #[error("generator index {index} is out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("unbalanced parenthesis at position {position}")]
    UnbalancedParenthesis { position: usize },
    #[error("malformed power after '^' at position {position}")]
    MalformedPower { position: usize },
    #[error("strand counts differ ({left} vs {right})")]
    StrandMismatch { left: usize, right: usize },
    #[error("closure has {components} components, not a knot")]
    NotAKnot { components: usize },
    #[error("cannot destabilize: {0}")]
    Destabilization(String),
    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Braid { line: usize, source: BraidError },
    #[error("step {step} ({text}): {reason}")]
    Step { step: usize, text: String, reason: String },
    #[error("final word {actual} is not equal to the declared end {declared}")]
    EndMismatch { actual: String, declared: String },
    #[error("ledger inconsistency: {0}")]
    Ledger(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("self-linking number of a knot must be odd, got {0}")]
    EvenSelfLinking(i64),
    #[error("self-linking number {0} is below -1")]
    SelfLinkingTooSmall(i64),
    #[error("degree {degree} is below the minimum hat degree for self-linking {slk}")]
    DegreeInfeasible { slk: i64, degree: i64 },
    #[error("degree must be at least 1, got {0}")]
    NonPositiveDegree(i64),
    #[error("self-linking must be at most -1, got {0}")]
    NotNegative(i64),
    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("need 2 <= p < q, got p={p}, q={q}")]
    BadTorusParameters { p: i64, q: i64 },
    #[error("singular genera sum to {needed}, exceeding the degree-{degree} budget {budget}")]
    BudgetExceeded { degree: i64, budget: i64, needed: i64 },
    #[error("negative slice genus {0}")]
    NegativeGenus(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("enumeration would visit {needed} classes, above the cap of {cap}")]
    ResourceLimit { needed: u128, cap: u128 },
    #[error("invalid search parameters: {0}")]
    BadParameters(String),
    #[error("integer overflow while evaluating a class")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("branch degree {degree} is not divisible by the cover order {r}")]
    NotDivisible { r: i64, degree: i64 },
    #[error("cover order must be at least 1, got {0}")]
    BadOrder(i64),
    #[error("no unimodular form has rank {rank} and signature {signature}")]
    NoUnimodularForm { rank: i64, signature: i64 },
}

#[derive(Debug, Error)]
pub enum DbError {
    #[error("record {name}: {reason}")]
    Record { name: String, reason: String },
    #[error("malformed database: {0}")]
    Format(#[from] serde_json::Error),
    #[error("unknown knot {0}")]
    UnknownKnot(String),
    #[error("unknown report {0}")]
    UnknownReport(String),
    #[error("unknown script {0}")]
    UnknownScript(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}
