use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: malformed edge `{text}` (expected `src dst timestamp` with integer fields)")]
    Malformed { line: usize, text: String },
    #[error("edge list contains no edges")]
    EmptyInput,
    #[error("timestamp index {t} out of range 1..={t_max}")]
    TimestampOutOfRange { t: u32, t_max: u32 },
    #[error("node id {node} out of range 1..={n}")]
    NodeOutOfRange { node: u32, n: u32 },
    #[error("temporal node ({node}, {t}) never occurs in the graph")]
    NoSuchTemporalNode { node: u32, t: u32 },
    #[error("binning requires at least one bin, got {0}")]
    BadBinCount(u32),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
