use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("reference degree {reference} is smaller than polynomial degree {degree}")]
    InvalidReferenceDegree { reference: usize, degree: usize },

    #[error(
        "polynomial is not symmetric at reference degree {reference}: \
         coefficient {left} of t^{index} differs from coefficient {right} of t^{co_index}"
    )]
    NotSymmetric {
        reference: usize,
        index: usize,
        co_index: usize,
        left: BigInt,
        right: BigInt,
    },

    #[error("facet list is empty")]
    EmptyFacetList,

    #[error("complex is not pure: facet sizes {smallest} and {largest} both occur")]
    NotPure { smallest: usize, largest: usize },

    #[error("ridge {ridge} lies in {count} facets; boundary extraction needs one or two")]
    NotManifoldLike { ridge: String, count: usize },

    #[error("the complex has no nonempty face, so it has no intervals")]
    NoIntervals,

    #[error("{face} is not a face of the complex")]
    NotAFace { face: String },

    #[error("index {index} is out of range for order {order}")]
    IndexOutOfRange { index: i64, order: usize },

    #[error("{what} = {requested} exceeds the resource guard (limit {limit})")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("structural anomaly in complex construction: {0}")]
    StructuralAnomaly(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
