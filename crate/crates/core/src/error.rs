use thiserror::Error;

use crate::algebra::SetOp;
use crate::kernel::ValueClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} = {value} is outside the unit interval")]
    DegreeOutOfRange { name: &'static str, value: f64 },

    #[error("inconsistent penta-valued decomposition: {0}")]
    InconsistentPenta(String),

    #[error("|tau| + |omega| = {0} exceeds 1")]
    TauOmegaOutOfRange(f64),

    #[error("value ({mu}, {nu}) is {found:?}, not {expected:?}")]
    ClassMismatch {
        expected: ValueClass,
        found: ValueClass,
        mu: f64,
        nu: f64,
    },

    #[error("interval [{a}, {b}] is degenerate")]
    DegenerateInterval { a: f64, b: f64 },

    #[error("{value} lies outside the interval [{a}, {b}]")]
    OutsideInterval { value: f64, a: f64, b: f64 },

    #[error("universes differ: only in left {only_left:?}, only in right {only_right:?}")]
    UniverseMismatch {
        only_left: Vec<String>,
        only_right: Vec<String>,
    },

    #[error("{0:?} needs a second operand")]
    MissingOperand(SetOp),

    #[error("the universe is empty")]
    EmptyUniverse,

    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),

    #[error("{measure} is not defined at ({mu}, {nu}): {reason}")]
    Undefined {
        measure: &'static str,
        mu: f64,
        nu: f64,
        reason: &'static str,
    },

    #[error("record {record}: {message}")]
    Parse { record: usize, message: String },

    #[error("record {record} (`{id}`): {field} = {value} is outside [0, 1]")]
    RecordOutOfRange {
        record: usize,
        id: String,
        field: &'static str,
        value: f64,
    },

    #[error("missing column `{0}`")]
    MissingColumn(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
