use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rotation system fails the Euler check (V - E + F = {euler}, expected 2): not a planar embedding")]
    NotPlanar { euler: i64 },

    #[error("graph is not connected (vertex {0} unreachable from 0)")]
    Disconnected(usize),

    #[error("loops or multi-edges are not allowed (offending vertex {0})")]
    MultiEdgeOrLoop(usize),

    #[error("graph is not 2-connected (cut vertex {0})")]
    NotTwoConnected(usize),

    #[error("poles {s} and {t} must both lie on the external face")]
    PolesNotOnExternalFace { s: usize, t: usize },

    #[error("poles must be distinct (got {0} twice)")]
    PolesEqual(usize),

    #[error("vertex {vertex} has too few colors at stage {stage}: required {required}, available {available}")]
    InsufficientColors {
        vertex: usize,
        stage: String,
        required: usize,
        available: usize,
    },

    #[error("resample budget exceeded at stage {stage} after {redraws} redraws (cap {cap}); budget too small")]
    ResampleBudgetExceeded {
        stage: String,
        redraws: u64,
        cap: u64,
    },

    #[error("walk is not facial: occurrences of {u} and {v} interleave")]
    NotFacial { u: usize, v: usize },

    #[error("facial-square class {class} violates planarity ({edges} edges on {vertices} vertices)")]
    NonPlanarClass {
        class: &'static str,
        edges: usize,
        vertices: usize,
    },

    #[error("guaranteed mode infeasible for m={m}: rung {rung} needs {value} colors (> cap {cap}); first oversized tier {tier_name} = {tier}")]
    GuaranteedModeInfeasible {
        m: usize,
        rung: &'static str,
        value: BigUint,
        tier_name: &'static str,
        tier: BigUint,
        cap: u64,
    },

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
